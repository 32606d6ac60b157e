//! Differential polynomials in the indeterminates `x_{i,J}` over boolean,
//! rational, and rational-fraction coefficients: Θ-differentiation,
//! evaluation, tropical solution checking, weighted tropicalization, initial
//! forms, denominator clearing, and weight-vector translation.
//!
//! Terms are stored in realization order (first construction wins), because
//! tropical vanishing depends on the presentation of an evaluation as a sum
//! of monomial contributions, not merely on its value. Equality compares the
//! collected term maps and is presentation-independent.

use std::collections::BTreeMap;
use std::fmt;

use crate::multi_index::MultiIndex;
use crate::scalar::{from_nat, Scalar};
use crate::series::{monomial_text, BoolSeries, Series, SeriesFraction};
use crate::vertex::{VertexFraction, VertexPolynomial};

/// Rendering shape of a coefficient inside a differential polynomial term.
pub enum CoeffText {
    /// The coefficient one: omitted next to a monomial.
    Unit,
    /// A single positive term, safe to splice with `*`.
    Inline(String),
    /// Anything else, emitted parenthesized.
    Wrapped(String),
}

/// A coefficient semiring for differential polynomials.
pub trait Coefficient: Clone + PartialEq + fmt::Debug {
    fn dim(&self) -> usize;
    fn zero(dim: usize) -> Self;
    fn one(dim: usize) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// The Θ-action of a derivative order.
    fn derive(&self, j: &MultiIndex) -> Self;
    /// Multiplication by a natural number (the Leibniz exponent factor).
    fn scale_nat(&self, k: u64) -> Self;
    fn render(&self, pretty: bool) -> CoeffText;
}

impl Coefficient for BoolSeries {
    fn dim(&self) -> usize {
        BoolSeries::dim(self)
    }
    fn zero(dim: usize) -> Self {
        BoolSeries::zero(dim)
    }
    fn one(dim: usize) -> Self {
        BoolSeries::one(dim)
    }
    fn is_zero(&self) -> bool {
        BoolSeries::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        BoolSeries::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        BoolSeries::mul(self, other)
    }
    fn derive(&self, j: &MultiIndex) -> Self {
        BoolSeries::derive(self, j)
    }
    fn scale_nat(&self, k: u64) -> Self {
        if k == 0 {
            BoolSeries::zero(BoolSeries::dim(self))
        } else {
            self.clone()
        }
    }
    fn render(&self, pretty: bool) -> CoeffText {
        let pts = self.carrier().points();
        if self.carrier().cones().is_empty() && pts.len() == 1 {
            if pts[0].is_zero() {
                CoeffText::Unit
            } else {
                CoeffText::Inline(monomial_text(&pts[0], BoolSeries::dim(self), pretty))
            }
        } else {
            CoeffText::Wrapped(format!("({self})"))
        }
    }
}

impl<Q: Scalar> Coefficient for Series<Q> {
    fn dim(&self) -> usize {
        Series::dim(self)
    }
    fn zero(dim: usize) -> Self {
        Series::zero(dim)
    }
    fn one(dim: usize) -> Self {
        Series::one(dim)
    }
    fn is_zero(&self) -> bool {
        Series::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        Series::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Series::mul(self, other)
    }
    fn derive(&self, j: &MultiIndex) -> Self {
        Series::derive(self, j)
    }
    fn scale_nat(&self, k: u64) -> Self {
        self.scale(&from_nat(k as u128))
    }
    fn render(&self, pretty: bool) -> CoeffText {
        if self.len() == 1 {
            let (idx, c) = self.terms().next().unwrap();
            if c > &Q::zero() {
                if c.is_one() && idx.is_zero() {
                    return CoeffText::Unit;
                }
                return CoeffText::Inline(self.to_text(pretty));
            }
        }
        CoeffText::Wrapped(format!("({})", self.to_text(pretty)))
    }
}

impl<Q: Scalar> Coefficient for SeriesFraction<Q> {
    fn dim(&self) -> usize {
        SeriesFraction::dim(self)
    }
    fn zero(dim: usize) -> Self {
        SeriesFraction::zero(dim)
    }
    fn one(dim: usize) -> Self {
        SeriesFraction::one(dim)
    }
    fn is_zero(&self) -> bool {
        SeriesFraction::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        SeriesFraction::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        SeriesFraction::mul(self, other)
    }
    fn derive(&self, j: &MultiIndex) -> Self {
        SeriesFraction::derive(self, j)
    }
    fn scale_nat(&self, k: u64) -> Self {
        SeriesFraction::new(self.num().scale(&from_nat(k as u128)), self.den().clone())
            .expect("denominator unchanged")
    }
    fn render(&self, pretty: bool) -> CoeffText {
        if self.has_unit_den() {
            self.num().render(pretty)
        } else {
            CoeffText::Wrapped(self.to_text(pretty))
        }
    }
}

/// A differential monomial `∏ x_{i,J}^{m_{i,J}}` with positive exponents.
/// The empty product is the monomial one.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiffMonomial {
    exps: BTreeMap<(usize, MultiIndex), u32>,
}

impl DiffMonomial {
    pub fn one() -> Self {
        DiffMonomial {
            exps: BTreeMap::new(),
        }
    }

    /// Build from `((variable, derivative order), exponent)` factors; repeated
    /// keys accumulate and zero exponents are dropped.
    pub fn from_factors(
        factors: impl IntoIterator<Item = ((usize, MultiIndex), u32)>,
    ) -> Self {
        let mut exps: BTreeMap<(usize, MultiIndex), u32> = BTreeMap::new();
        for (key, e) in factors {
            *exps.entry(key).or_insert(0) += e;
        }
        exps.retain(|_, e| *e > 0);
        DiffMonomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn factors(&self) -> impl Iterator<Item = (&(usize, MultiIndex), &u32)> {
        self.exps.iter()
    }

    /// `max ||J||_∞` over the factors.
    pub fn order(&self) -> u32 {
        self.exps
            .keys()
            .map(|(_, j)| j.sup_norm())
            .max()
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_factors(
            self.exps
                .iter()
                .chain(other.exps.iter())
                .map(|(k, e)| (k.clone(), *e)),
        )
    }

    pub fn to_text(&self, num_vars: usize, pretty: bool) -> String {
        if self.exps.is_empty() {
            return "1".to_string();
        }
        let var = |i: usize| {
            if pretty && num_vars <= 2 {
                ["x", "y"][i].to_string()
            } else {
                format!("x{}", i + 1)
            }
        };
        self.exps
            .iter()
            .map(|((i, j), e)| {
                let base = format!("{}[{}]", var(*i), j);
                if *e == 1 {
                    base
                } else {
                    format!("{base}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Debug for DiffMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text(usize::MAX, false))
    }
}

/// Evaluate a differential monomial at a coefficient vector:
/// `E(a) = ∏ (Θ(J) a_i)^{m_{i,J}}`.
pub fn eval_monomial<C: Coefficient>(dim: usize, mono: &DiffMonomial, a: &[C]) -> C {
    let mut acc = C::one(dim);
    for ((i, j), e) in mono.factors() {
        let derived = a[*i].derive(j);
        for _ in 0..*e {
            acc = acc.mul(&derived);
        }
    }
    acc
}

/// A differential polynomial: a finite sum of `coefficient * monomial` terms
/// with distinct monomials and nonzero coefficients, in realization order.
#[derive(Clone)]
pub struct DiffPoly<C: Coefficient> {
    dim: usize,
    num_vars: usize,
    terms: Vec<(DiffMonomial, C)>,
}

impl<C: Coefficient> DiffPoly<C> {
    pub fn new(
        dim: usize,
        num_vars: usize,
        terms: impl IntoIterator<Item = (DiffMonomial, C)>,
    ) -> Self {
        let mut out: Vec<(DiffMonomial, C)> = Vec::new();
        for (mono, c) in terms {
            assert_eq!(c.dim(), dim, "coefficient dimension mismatch");
            for ((i, j), _) in mono.factors() {
                assert!(*i < num_vars, "indeterminate index {i} out of range");
                assert_eq!(j.dim(), dim, "derivative order dimension mismatch");
            }
            match out.iter_mut().find(|(m, _)| m == &mono) {
                Some((_, existing)) => *existing = existing.add(&c),
                None => out.push((mono, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        DiffPoly {
            dim,
            num_vars,
            terms: out,
        }
    }

    pub fn zero(dim: usize, num_vars: usize) -> Self {
        DiffPoly {
            dim,
            num_vars,
            terms: Vec::new(),
        }
    }

    pub fn from_coefficient(num_vars: usize, c: C) -> Self {
        let dim = c.dim();
        Self::new(dim, num_vars, [(DiffMonomial::one(), c)])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(DiffMonomial, C)] {
        &self.terms
    }

    fn assert_compatible(&self, other: &Self) {
        assert_eq!(self.dim, other.dim, "differential polynomial dimension mismatch");
        assert_eq!(
            self.num_vars, other.num_vars,
            "differential polynomial variable count mismatch"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        Self::new(
            self.dim,
            self.num_vars,
            self.terms.iter().chain(other.terms.iter()).cloned(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        Self::new(
            self.dim,
            self.num_vars,
            self.terms.iter().flat_map(|(m1, c1)| {
                other
                    .terms
                    .iter()
                    .map(move |(m2, c2)| (m1.mul(m2), c1.mul(c2)))
            }),
        )
    }

    pub fn mul_coefficient(&self, c: &C) -> Self {
        Self::new(
            self.dim,
            self.num_vars,
            self.terms
                .iter()
                .map(|(m, v)| (m.clone(), v.mul(c))),
        )
    }

    /// The partial derivative `∂/∂t_i` (zero-based `i`): Leibniz over each
    /// term, differentiating the coefficient and shifting one factor
    /// `x_{k,J} -> x_{k,J+e_i}` at a time with multiplicity.
    pub fn derive(&self, i: usize) -> Self {
        assert!(i < self.dim, "derivative index {i} out of range");
        let e_i = MultiIndex::unit(self.dim, i);
        let mut terms: Vec<(DiffMonomial, C)> = Vec::new();
        for (mono, c) in &self.terms {
            terms.push((mono.clone(), c.derive(&e_i)));
            for ((k, j), e) in mono.factors() {
                let mut shifted: Vec<((usize, MultiIndex), u32)> = mono
                    .factors()
                    .filter(|(key, _)| !(key.0 == *k && key.1 == *j))
                    .map(|(key, exp)| (key.clone(), *exp))
                    .collect();
                if *e > 1 {
                    shifted.push(((*k, j.clone()), e - 1));
                }
                shifted.push(((*k, j.add(&e_i)), 1));
                terms.push((
                    DiffMonomial::from_factors(shifted),
                    c.scale_nat(*e as u64),
                ));
            }
        }
        Self::new(self.dim, self.num_vars, terms)
    }

    /// The Θ-action `Θ(J) = ∂^{|J|} / ∂t^J`.
    pub fn theta(&self, j: &MultiIndex) -> Self {
        assert_eq!(j.dim(), self.dim, "derivative order dimension mismatch");
        let mut out = self.clone();
        for k in 0..self.dim {
            for _ in 0..j.get(k) {
                out = out.derive(k);
            }
        }
        out
    }

    /// Evaluate at a coefficient vector, retaining the per-term values: the
    /// solution verdict downstream depends on the realization as a sum, not
    /// on the total.
    pub fn eval(&self, a: &[C]) -> Evaluation<C> {
        assert_eq!(a.len(), self.num_vars, "evaluation vector length mismatch");
        for v in a {
            assert_eq!(v.dim(), self.dim, "evaluation coefficient dimension mismatch");
        }
        let per_term: Vec<(DiffMonomial, C)> = self
            .terms
            .iter()
            .map(|(mono, c)| (mono.clone(), c.mul(&eval_monomial(self.dim, mono, a))))
            .collect();
        let value = per_term
            .iter()
            .fold(C::zero(self.dim), |acc, (_, v)| acc.add(v));
        Evaluation { value, per_term }
    }

    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> DiffPoly<D> {
        DiffPoly::new(
            self.dim,
            self.num_vars,
            self.terms.iter().map(|(m, c)| (m.clone(), f(c))),
        )
    }

    fn term_map(&self) -> BTreeMap<&DiffMonomial, &C> {
        self.terms.iter().map(|(m, c)| (m, c)).collect()
    }

    pub fn to_text(&self, pretty: bool) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(mono, c)| {
                let mono_txt = if mono.is_one() {
                    None
                } else {
                    Some(mono.to_text(self.num_vars, pretty))
                };
                match (c.render(pretty), mono_txt) {
                    (CoeffText::Unit, None) => "1".to_string(),
                    (CoeffText::Unit, Some(m)) => m,
                    (CoeffText::Inline(c), None) | (CoeffText::Wrapped(c), None) => c,
                    (CoeffText::Inline(c), Some(m)) | (CoeffText::Wrapped(c), Some(m)) => {
                        format!("{c}*{m}")
                    }
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl<C: Coefficient> PartialEq for DiffPoly<C> {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.num_vars == other.num_vars
            && self.term_map() == other.term_map()
    }
}

impl<C: Coefficient> fmt::Debug for DiffPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text(false))
    }
}

impl<C: Coefficient> fmt::Display for DiffPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text(false))
    }
}

/// The value of an evaluation together with its per-term realization.
pub struct Evaluation<C> {
    pub value: C,
    pub per_term: Vec<(DiffMonomial, C)>,
}

/// Outcome of checking a candidate against a tropical differential equation.
#[derive(Debug)]
pub struct SolutionCheck {
    pub solution: bool,
    /// `V(P(a))`, the tropical hypersurface value.
    pub vertex_set: VertexPolynomial,
    /// For each vertex monomial, the 1-based indices of the terms whose
    /// per-term vertex polynomial contains it.
    pub witnesses: BTreeMap<MultiIndex, Vec<usize>>,
    /// `V(a_M E_M(a))` per term, in realization order.
    pub term_vertices: Vec<VertexPolynomial>,
}

impl DiffPoly<BoolSeries> {
    /// Decide whether `a` solves the tropical differential equation: every
    /// vertex monomial of `V(P(a))` must appear in the vertex polynomial of
    /// at least two distinct terms.
    pub fn check_solution(&self, a: &[BoolSeries]) -> SolutionCheck {
        let eval = self.eval(a);
        let term_vertices: Vec<VertexPolynomial> = eval
            .per_term
            .iter()
            .map(|(_, v)| v.vertex_poly())
            .collect();
        let total = term_vertices
            .iter()
            .fold(VertexPolynomial::zero(self.dim), |acc, v| acc.oplus(v));
        let mut witnesses = BTreeMap::new();
        let mut solution = true;
        for idx in total.support() {
            let supporting: Vec<usize> = term_vertices
                .iter()
                .enumerate()
                .filter(|(_, v)| v.support().contains(idx))
                .map(|(i, _)| i + 1)
                .collect();
            solution &= supporting.len() >= 2;
            witnesses.insert(idx.clone(), supporting);
        }
        SolutionCheck {
            solution,
            vertex_set: total,
            witnesses,
            term_vertices,
        }
    }
}

impl<Q: Scalar> DiffPoly<Series<Q>> {
    /// Coefficient-wise support map into boolean coefficients.
    pub fn support_poly(&self) -> DiffPoly<BoolSeries> {
        self.map_coefficients(|c| c.support())
    }

    /// The weighted tropicalization `trop_w(P) = ⊕_M trop(a_M) ⊙ V(E_M(w))`.
    pub fn trop_w(&self, w: &[BoolSeries]) -> VertexPolynomial {
        self.term_trop_values(w)
            .into_iter()
            .fold(VertexPolynomial::zero(self.dim), |acc, v| acc.oplus(&v))
    }

    /// `trop(a_M) ⊙ V(E_M(w))` per term, in realization order.
    pub fn term_trop_values(&self, w: &[BoolSeries]) -> Vec<VertexPolynomial> {
        assert_eq!(w.len(), self.num_vars, "weight vector length mismatch");
        for v in w {
            assert_eq!(v.dim(), self.dim, "weight dimension mismatch");
        }
        self.terms
            .iter()
            .map(|(mono, c)| {
                c.trop()
                    .odot(&eval_monomial(self.dim, mono, w).vertex_poly())
            })
            .collect()
    }

    /// The initial form at `w`: keep the terms whose weighted trop value is
    /// nonzero and not irrelevant for `trop_w(P)`, with coefficients replaced
    /// by their initial terms. Zero when `trop_w(P)` is zero.
    pub fn initial_form(&self, w: &[BoolSeries]) -> Self {
        let total = self.trop_w(w);
        if total.is_zero() {
            return Self::zero(self.dim, self.num_vars);
        }
        let values = self.term_trop_values(w);
        Self::new(
            self.dim,
            self.num_vars,
            self.terms
                .iter()
                .zip(values)
                .filter(|(_, v)| {
                    !v.is_zero() && !v.prec(&total).expect("nonzero checked above")
                })
                .map(|((mono, c), _)| (mono.clone(), c.initial_term())),
        )
    }

    pub fn to_fraction_poly(&self) -> DiffPoly<SeriesFraction<Q>> {
        self.map_coefficients(|c| SeriesFraction::from_series(c.clone()))
    }
}

impl<Q: Scalar> DiffPoly<SeriesFraction<Q>> {
    /// Clear denominators: `λ` is the product of the distinct denominators of
    /// the coefficients and `Q = λ P` has plain series coefficients, exactly.
    pub fn clear_denominators(&self) -> (Series<Q>, DiffPoly<Series<Q>>) {
        let mut distinct: Vec<&Series<Q>> = Vec::new();
        for (_, c) in &self.terms {
            if !distinct.iter().any(|d| *d == c.den()) {
                distinct.push(c.den());
            }
        }
        let lambda = distinct
            .iter()
            .fold(Series::one(self.dim), |acc, d| acc.mul(d));
        let cleared = self.map_coefficients(|c| {
            distinct
                .iter()
                .filter(|d| **d != c.den())
                .fold(c.num().clone(), |acc, d| acc.mul(d))
        });
        (lambda, cleared)
    }

    /// `trop_w` over fractions: `trop_w(λ P) / trop(λ)`.
    pub fn trop_w_frac(&self, w: &[BoolSeries]) -> VertexFraction {
        let (lambda, cleared) = self.clear_denominators();
        VertexFraction::new(cleared.trop_w(w), lambda.trop())
            .expect("lambda is a product of nonzero series")
    }

    /// The initial form over fractions: `in_w(λ P) / initial_term(λ)`.
    pub fn initial_form_frac(&self, w: &[BoolSeries]) -> Self {
        let (lambda, cleared) = self.clear_denominators();
        let lead = lambda.initial_term();
        cleared.initial_form(w).map_coefficients(|c| {
            SeriesFraction::new(c.clone(), lead.clone())
                .expect("initial term of a nonzero series is nonzero")
        })
    }

    /// If every coefficient has the literal denominator one, forget the
    /// fraction structure.
    pub fn to_series_poly(&self) -> Option<DiffPoly<Series<Q>>> {
        if self.terms.iter().all(|(_, c)| c.has_unit_den()) {
            Some(self.map_coefficients(|c| c.num().clone()))
        } else {
            None
        }
    }

    /// Translate by a weight vector: substitute `x_{i,J} -> T(w_i,J) x_{i,J}`
    /// and normalize by `T(trop_w(P))^{-1}`, landing in integral coefficients
    /// (asserted). Zero when `trop_w(P)` is zero.
    pub fn translate(&self, w: &[BoolSeries]) -> Self {
        let tw = self.trop_w_frac(w);
        if tw.is_zero() {
            return Self::zero(self.dim, self.num_vars);
        }
        let normalizer = SeriesFraction::new(tw.den().lift(), tw.num().lift())
            .expect("trop_w numerator is nonzero here");
        let out = Self::new(
            self.dim,
            self.num_vars,
            self.terms.iter().map(|(mono, c)| {
                let factor = mono.factors().fold(
                    Series::one(self.dim),
                    |acc, ((i, j), e)| acc.mul(&t_series::<Q>(&w[*i], j).pow(*e)),
                );
                (mono.clone(), c.mul_series(&factor).mul(&normalizer))
            }),
        );
        for (_, c) in &out.terms {
            assert!(
                c.is_integer(),
                "translated coefficient {c:?} escapes the ring of integers"
            );
        }
        out
    }
}

/// `T(w, J)`: the all-ones lift of the vertex polynomial of `Θ(J) w`.
pub fn t_series<Q: Scalar>(w: &BoolSeries, j: &MultiIndex) -> Series<Q> {
    w.derive(j).vertex_poly().lift()
}
