//! The idempotent semiring of vertex polynomials and its fraction semifield.
//!
//! A vertex polynomial is a finite subset of `N^m` equal to the vertex set of
//! its own Newton polyhedron. Addition is `Vert` of the union, multiplication
//! is `Vert` of the Minkowski sum; the zero is the empty set and the one is
//! the origin. The semiring is multiplicatively cancellative, so it embeds in
//! a semifield of fractions with cross-multiplication equality.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::GeneratorSet;
use crate::multi_index::MultiIndex;
use crate::newton;

/// An element of the vertex-polynomial semiring: a finite subset of `N^m`
/// satisfying `support == Vert(support)`, kept sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexPolynomial {
    dim: usize,
    support: Vec<MultiIndex>,
}

impl VertexPolynomial {
    /// The quotient projection: `Vert` of an arbitrary finite point set.
    pub fn project(dim: usize, points: &[MultiIndex]) -> Self {
        VertexPolynomial {
            dim,
            support: newton::vertices(dim, points),
        }
    }

    /// `Vert` of the set denoted by a generator set.
    pub fn from_generator_set(set: &GeneratorSet) -> Self {
        Self::project(set.dim(), &set.generators())
    }

    /// Construct from a point set that must already be a vertex set.
    pub fn new(dim: usize, support: Vec<MultiIndex>) -> Result<Self> {
        let projected = Self::project(dim, &support);
        let mut sorted = support;
        sorted.sort();
        sorted.dedup();
        if projected.support != sorted {
            return Err(Error::NotVertexSet);
        }
        Ok(projected)
    }

    pub fn zero(dim: usize) -> Self {
        VertexPolynomial {
            dim,
            support: Vec::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        VertexPolynomial {
            dim,
            support: vec![MultiIndex::zero(dim)],
        }
    }

    /// The monomial `T^I`.
    pub fn monomial(idx: MultiIndex) -> Self {
        VertexPolynomial {
            dim: idx.dim(),
            support: vec![idx],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.support.len() == 1 && self.support[0].is_zero()
    }

    pub fn support(&self) -> &[MultiIndex] {
        &self.support
    }

    fn assert_same_dim(&self, other: &Self) {
        assert_eq!(
            self.dim, other.dim,
            "vertex polynomial dimension mismatch: {} vs {}",
            self.dim, other.dim
        );
    }

    /// `Vert(A ∪ B)`.
    pub fn oplus(&self, other: &Self) -> Self {
        self.assert_same_dim(other);
        let mut pts = self.support.clone();
        pts.extend(other.support.iter().cloned());
        Self::project(self.dim, &pts)
    }

    /// `Vert(A + B)` (Minkowski sum of supports).
    pub fn odot(&self, other: &Self) -> Self {
        self.assert_same_dim(other);
        let pts: Vec<MultiIndex> = self
            .support
            .iter()
            .flat_map(|u| other.support.iter().map(move |w| u.add(w)))
            .collect();
        Self::project(self.dim, &pts)
    }

    /// The semiring order `a <= b`, decided as `A ⊆ New(B) ∩ N^m`.
    /// Coincides with `a ⊕ b = b`.
    pub fn leq(&self, other: &Self) -> bool {
        self.assert_same_dim(other);
        self.support
            .iter()
            .all(|i| newton::contains(self.dim, &other.support, i))
    }

    /// The relevancy refinement: `a ≺ b` iff `0 < a <= b` and the supports are
    /// disjoint ("a is irrelevant for b"). Errors when `self` is zero, where
    /// the relation is undefined.
    pub fn prec(&self, other: &Self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroOperand);
        }
        Ok(self.leq(other) && self.support.iter().all(|i| !other.support.contains(i)))
    }

    /// Whether the sum of `summands` tropically vanishes: the total equals
    /// every deleted subsum. A single summand vanishes only if it is zero.
    /// Errors on an empty list.
    pub fn tropically_vanishes(summands: &[VertexPolynomial]) -> Result<bool> {
        let first = summands.first().ok_or(Error::Empty)?;
        if summands.len() == 1 {
            return Ok(first.is_zero());
        }
        let total = summands
            .iter()
            .skip(1)
            .fold(first.clone(), |acc, s| acc.oplus(s));
        for omit in 0..summands.len() {
            let mut rest = VertexPolynomial::zero(first.dim());
            for (i, s) in summands.iter().enumerate() {
                if i != omit {
                    rest = rest.oplus(s);
                }
            }
            if rest != total {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The generator form of `New(A) ∩ N^m`.
    pub fn tilde(&self) -> GeneratorSet {
        let set = GeneratorSet::from_points(self.dim, self.support.clone())
            .expect("support indices share the ambient dimension");
        newton::tilde(&set)
    }
}

impl fmt::Debug for VertexPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V{:?}", self.support)
    }
}

/// An element of the fraction semifield: a pair `num/den` with `den != 0`.
/// Equality is extensional via cross-multiplication, which is well defined
/// because the semiring is cancellative; no reduction to lowest terms is
/// attempted.
#[derive(Clone)]
pub struct VertexFraction {
    num: VertexPolynomial,
    den: VertexPolynomial,
}

impl VertexFraction {
    pub fn new(num: VertexPolynomial, den: VertexPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        assert_eq!(
            num.dim(),
            den.dim(),
            "vertex fraction dimension mismatch: {} vs {}",
            num.dim(),
            den.dim()
        );
        Ok(VertexFraction { num, den })
    }

    pub fn from_polynomial(num: VertexPolynomial) -> Self {
        let den = VertexPolynomial::one(num.dim());
        VertexFraction { num, den }
    }

    pub fn zero(dim: usize) -> Self {
        Self::from_polynomial(VertexPolynomial::zero(dim))
    }

    pub fn one(dim: usize) -> Self {
        Self::from_polynomial(VertexPolynomial::one(dim))
    }

    pub fn num(&self) -> &VertexPolynomial {
        &self.num
    }

    pub fn den(&self) -> &VertexPolynomial {
        &self.den
    }

    pub fn dim(&self) -> usize {
        self.num.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `a/b ⊕ c/d = (a⊙d ⊕ b⊙c)/(b⊙d)`.
    pub fn add(&self, other: &Self) -> Self {
        let num = self
            .num
            .odot(&other.den)
            .oplus(&self.den.odot(&other.num));
        let den = self.den.odot(&other.den);
        VertexFraction { num, den }
    }

    /// `a/b ⊙ c/d = (a⊙c)/(b⊙d)`.
    pub fn mul(&self, other: &Self) -> Self {
        VertexFraction {
            num: self.num.odot(&other.num),
            den: self.den.odot(&other.den),
        }
    }

    /// `a/b <= c/d` iff `a⊙d <= c⊙b`.
    pub fn leq(&self, other: &Self) -> bool {
        self.num.odot(&other.den).leq(&other.num.odot(&self.den))
    }

    /// `a/b ≺ c/d` iff `a⊙d ≺ c⊙b`; errors when the left side is zero.
    pub fn prec(&self, other: &Self) -> Result<bool> {
        self.num.odot(&other.den).prec(&other.num.odot(&self.den))
    }

    /// Membership in the semiring of integers: `p <= 1`.
    pub fn is_integer(&self) -> bool {
        self.leq(&Self::one(self.dim()))
    }
}

impl PartialEq for VertexFraction {
    fn eq(&self, other: &Self) -> bool {
        self.num.odot(&other.den) == other.num.odot(&self.den)
    }
}

impl Eq for VertexFraction {}

impl fmt::Debug for VertexFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}/{:?}", self.num, self.den)
    }
}
