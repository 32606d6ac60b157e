//! Boolean and rational power-series arithmetic with partial derivatives,
//! support and tropicalization maps, initial terms, and the additive and
//! multiplicative supports that track coefficient cancellation.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::GeneratorSet;
use crate::multi_index::MultiIndex;
use crate::scalar::{from_nat, Scalar};
use crate::vertex::{VertexFraction, VertexPolynomial};

/// A boolean power series: the coefficient of `T^I` is 1 exactly on the
/// carrier set, which may be infinite (translated orthants).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BoolSeries {
    carrier: GeneratorSet,
}

impl BoolSeries {
    pub fn from_carrier(carrier: GeneratorSet) -> Self {
        BoolSeries { carrier }
    }

    pub fn from_points(dim: usize, points: Vec<MultiIndex>) -> Result<Self> {
        Ok(BoolSeries {
            carrier: GeneratorSet::from_points(dim, points)?,
        })
    }

    pub fn zero(dim: usize) -> Self {
        BoolSeries {
            carrier: GeneratorSet::empty(dim),
        }
    }

    pub fn one(dim: usize) -> Self {
        BoolSeries {
            carrier: GeneratorSet::from_points(dim, vec![MultiIndex::zero(dim)])
                .expect("origin has the right dimension"),
        }
    }

    /// The series of full support, i.e. the weight vector `ω`.
    pub fn omega(dim: usize) -> Self {
        BoolSeries {
            carrier: GeneratorSet::full(dim),
        }
    }

    pub fn monomial(idx: MultiIndex) -> Self {
        let dim = idx.dim();
        BoolSeries {
            carrier: GeneratorSet::from_points(dim, vec![idx]).expect("index dimension"),
        }
    }

    pub fn carrier(&self) -> &GeneratorSet {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        BoolSeries {
            carrier: self.carrier.union(&other.carrier),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        BoolSeries {
            carrier: self.carrier.minkowski(&other.carrier),
        }
    }

    /// `Θ(J)`: the clamped support shift.
    pub fn derive(&self, j: &MultiIndex) -> Self {
        BoolSeries {
            carrier: self.carrier.shift_clamped(j),
        }
    }

    pub fn contains(&self, idx: &MultiIndex) -> bool {
        self.carrier.contains(idx)
    }

    /// The vertex polynomial `V(a)`.
    pub fn vertex_poly(&self) -> VertexPolynomial {
        VertexPolynomial::from_generator_set(&self.carrier)
    }

    /// The coefficient lift `e_K`: the all-ones series on the carrier.
    /// Errors if the carrier is infinite.
    pub fn lift<Q: Scalar>(&self) -> Result<Series<Q>> {
        if !self.carrier.cones().is_empty() {
            return Err(Error::InfiniteCarrier);
        }
        Ok(Series::indicator(
            self.dim(),
            self.carrier.points().iter().cloned(),
        ))
    }
}

impl fmt::Display for BoolSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for p in self.carrier.points().iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let s = monomial_text(p, self.dim(), false);
            write!(f, "{}", if s.is_empty() { "1".to_string() } else { s })?;
        }
        for g in self.carrier.cones() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "orthant{g}")?;
        }
        Ok(())
    }
}

/// A finitely supported power series with exact coefficients: a desk-scale
/// stand-in for elements of the coefficient ring. No zero coefficients are
/// stored, so equality is term-map equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Series<Q: Scalar> {
    dim: usize,
    terms: BTreeMap<MultiIndex, Q>,
}

impl<Q: Scalar> Series<Q> {
    pub fn new(dim: usize, pairs: impl IntoIterator<Item = (MultiIndex, Q)>) -> Self {
        let mut terms: BTreeMap<MultiIndex, Q> = BTreeMap::new();
        for (idx, c) in pairs {
            assert_eq!(
                idx.dim(),
                dim,
                "series term dimension mismatch: {} vs {}",
                idx.dim(),
                dim
            );
            let entry = terms.entry(idx).or_insert_with(Q::zero);
            *entry = entry.clone() + c;
        }
        terms.retain(|_, c| !c.is_zero());
        Series { dim, terms }
    }

    /// All-ones coefficients on the given index set.
    pub fn indicator(dim: usize, indices: impl IntoIterator<Item = MultiIndex>) -> Self {
        Series::new(dim, indices.into_iter().map(|i| (i, Q::one())))
    }

    pub fn zero(dim: usize) -> Self {
        Series {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Series::constant(dim, Q::one())
    }

    pub fn constant(dim: usize, c: Q) -> Self {
        Series::new(dim, [(MultiIndex::zero(dim), c)])
    }

    pub fn monomial(idx: MultiIndex, c: Q) -> Self {
        let dim = idx.dim();
        Series::new(dim, [(idx, c)])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, idx: &MultiIndex) -> Option<&Q> {
        self.terms.get(idx)
    }

    fn assert_same_dim(&self, other: &Self) {
        assert_eq!(
            self.dim, other.dim,
            "series dimension mismatch: {} vs {}",
            self.dim, other.dim
        );
    }

    /// Termwise sums over the union of supports, including zeros.
    fn merged(&self, other: &Self) -> BTreeMap<MultiIndex, Q> {
        self.assert_same_dim(other);
        let mut out = self.terms.clone();
        for (idx, c) in &other.terms {
            let entry = out.entry(idx.clone()).or_insert_with(Q::zero);
            *entry = entry.clone() + c.clone();
        }
        out
    }

    /// Convolution coefficients over the full Minkowski sum of supports,
    /// including cancelled (zero) entries.
    fn convolution(&self, other: &Self) -> BTreeMap<MultiIndex, Q> {
        self.assert_same_dim(other);
        let mut out: BTreeMap<MultiIndex, Q> = BTreeMap::new();
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                let entry = out.entry(i.add(j)).or_insert_with(Q::zero);
                *entry = entry.clone() + a.clone() * b.clone();
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.merged(other);
        terms.retain(|_, c| !c.is_zero());
        Series {
            dim: self.dim,
            terms,
        }
    }

    pub fn neg(&self) -> Self {
        Series {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(i, c)| (i.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = self.convolution(other);
        terms.retain(|_, c| !c.is_zero());
        Series {
            dim: self.dim,
            terms,
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Series::zero(self.dim);
        }
        Series {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(i, v)| (i.clone(), v.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Series::one(self.dim);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `Θ(J)`: iterated partial derivatives. A term `c T^I` survives iff
    /// `I >= J`, picking up the falling-factorial factor
    /// `∏_k i_k (i_k - 1) ... (i_k - j_k + 1)`, which is never zero in
    /// characteristic zero for surviving terms.
    pub fn derive(&self, j: &MultiIndex) -> Self {
        assert_eq!(
            self.dim,
            j.dim(),
            "series dimension mismatch: {} vs {}",
            self.dim,
            j.dim()
        );
        let mut out = BTreeMap::new();
        for (idx, c) in &self.terms {
            let Some(shifted) = idx.checked_sub(j) else {
                continue;
            };
            let mut factor: u128 = 1;
            for k in 0..self.dim {
                let i_k = idx.get(k) as u128;
                for s in 0..j.get(k) as u128 {
                    factor = factor.checked_mul(i_k - s).expect("derivative overflow");
                }
            }
            out.insert(shifted, c.clone() * from_nat::<Q>(factor));
        }
        Series {
            dim: self.dim,
            terms: out,
        }
    }

    /// The support map `sp`: forget coefficients.
    pub fn support(&self) -> BoolSeries {
        BoolSeries::from_points(self.dim, self.terms.keys().cloned().collect())
            .expect("term indices share the ambient dimension")
    }

    /// The tropicalization `trop = Vert ∘ sp`.
    pub fn trop(&self) -> VertexPolynomial {
        self.support().vertex_poly()
    }

    /// The initial term: the restriction of the term map to the vertex set of
    /// the support.
    pub fn initial_term(&self) -> Self {
        let verts = self.trop();
        Series {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(i, _)| verts.support().contains(i))
                .map(|(i, c)| (i.clone(), c.clone()))
                .collect(),
        }
    }

    /// Indices of `A ∪ B` where the coefficients of the sum cancel.
    pub fn additive_support(&self, other: &Self) -> BoolSeries {
        let cancelled = self
            .merged(other)
            .into_iter()
            .filter(|(_, c)| c.is_zero())
            .map(|(i, _)| i)
            .collect();
        BoolSeries::from_points(self.dim, cancelled).expect("merged indices share dimension")
    }

    /// Indices of the Minkowski sum `A + B` where the convolution
    /// coefficients of the product cancel.
    pub fn multiplicative_support(&self, other: &Self) -> BoolSeries {
        let cancelled = self
            .convolution(other)
            .into_iter()
            .filter(|(_, c)| c.is_zero())
            .map(|(i, _)| i)
            .collect();
        BoolSeries::from_points(self.dim, cancelled).expect("convolution indices share dimension")
    }

    /// Canonical text form; `pretty` opts into the `t,u,v` aliases for
    /// `m <= 3`.
    pub fn to_text(&self, pretty: bool) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        // descending lexicographic exponent order, matching display convention
        for (pos, (idx, c)) in self.terms.iter().rev().enumerate() {
            let negative = c < &Q::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            if pos == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono = monomial_text(idx, self.dim, pretty);
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }
}

impl<Q: Scalar> fmt::Display for Series<Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text(false))
    }
}

impl<Q: Scalar> fmt::Debug for Series<Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text(false))
    }
}

impl VertexPolynomial {
    /// The coefficient lift `e_K` of a vertex polynomial (always finite).
    pub fn lift<Q: Scalar>(&self) -> Series<Q> {
        Series::indicator(self.dim(), self.support().iter().cloned())
    }
}

pub(crate) fn series_var_name(k: usize, dim: usize, pretty: bool) -> String {
    if pretty && dim <= 3 {
        ["t", "u", "v"][k].to_string()
    } else {
        format!("t{}", k + 1)
    }
}

pub(crate) fn monomial_text(idx: &MultiIndex, dim: usize, pretty: bool) -> String {
    let mut parts = Vec::new();
    for k in 0..dim {
        match idx.get(k) {
            0 => {}
            1 => parts.push(series_var_name(k, dim, pretty)),
            e => parts.push(format!("{}^{}", series_var_name(k, dim, pretty), e)),
        }
    }
    parts.join("*")
}

/// A fraction of two finitely supported series with nonzero denominator.
/// Equality is extensional via cross-multiplication (so no `Hash`);
/// fractions are not reduced.
#[derive(Clone, Eq)]
pub struct SeriesFraction<Q: Scalar> {
    num: Series<Q>,
    den: Series<Q>,
}

impl<Q: Scalar> SeriesFraction<Q> {
    pub fn new(num: Series<Q>, den: Series<Q>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        assert_eq!(
            num.dim(),
            den.dim(),
            "fraction dimension mismatch: {} vs {}",
            num.dim(),
            den.dim()
        );
        Ok(SeriesFraction { num, den })
    }

    pub fn from_series(num: Series<Q>) -> Self {
        let den = Series::one(num.dim());
        SeriesFraction { num, den }
    }

    pub fn zero(dim: usize) -> Self {
        Self::from_series(Series::zero(dim))
    }

    pub fn one(dim: usize) -> Self {
        Self::from_series(Series::one(dim))
    }

    pub fn num(&self) -> &Series<Q> {
        &self.num
    }

    pub fn den(&self) -> &Series<Q> {
        &self.den
    }

    pub fn dim(&self) -> usize {
        self.num.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Whether the denominator is literally the constant one, i.e. the value
    /// is a plain series as written.
    pub fn has_unit_den(&self) -> bool {
        self.den == Series::one(self.den.dim())
    }

    pub fn add(&self, other: &Self) -> Self {
        SeriesFraction {
            num: self
                .num
                .mul(&other.den)
                .add(&self.den.mul(&other.num)),
            den: self.den.mul(&other.den),
        }
    }

    pub fn neg(&self) -> Self {
        SeriesFraction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        SeriesFraction {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        }
    }

    pub fn mul_series(&self, s: &Series<Q>) -> Self {
        SeriesFraction {
            num: self.num.mul(s),
            den: self.den.clone(),
        }
    }

    /// Quotient rule.
    pub fn derive(&self, j: &MultiIndex) -> Self {
        let mut out = self.clone();
        for k in 0..j.dim() {
            for _ in 0..j.get(k) {
                let e = MultiIndex::unit(j.dim(), k);
                let num = out
                    .num
                    .derive(&e)
                    .mul(&out.den)
                    .sub(&out.num.mul(&out.den.derive(&e)));
                let den = out.den.mul(&out.den);
                out = SeriesFraction { num, den };
            }
        }
        out
    }

    /// The tropicalization of a fraction: `trop(num)/trop(den)`.
    pub fn trop_frac(&self) -> VertexFraction {
        VertexFraction::new(self.num.trop(), self.den.trop())
            .expect("nonzero denominator tropicalizes to nonzero")
    }

    /// Membership in the ring of integers: `trop <= 1`.
    pub fn is_integer(&self) -> bool {
        self.trop_frac().is_integer()
    }

    pub fn to_text(&self, pretty: bool) -> String {
        format!("({})/({})", self.num.to_text(pretty), self.den.to_text(pretty))
    }
}

impl<Q: Scalar> PartialEq for SeriesFraction<Q> {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl<Q: Scalar> fmt::Display for SeriesFraction<Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text(false))
    }
}

impl<Q: Scalar> fmt::Debug for SeriesFraction<Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text(false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{from_int, ratio};
    use crate::Rat;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v.to_vec())
    }

    fn s(pairs: &[(&[u32], i64)]) -> Series<Rat> {
        let dim = pairs.first().map(|(v, _)| v.len()).unwrap_or(2);
        Series::new(
            dim,
            pairs
                .iter()
                .map(|(v, c)| (mi(v), from_int::<Rat>(*c))),
        )
    }

    #[test]
    fn bool_derive_matches_worked_derivatives() {
        // (1 + u + t^2 u + t^3 u^2) differentiated by t and u gives t + t^2 u
        let a2 = BoolSeries::from_points(
            2,
            vec![mi(&[0, 0]), mi(&[0, 1]), mi(&[2, 1]), mi(&[3, 2])],
        )
        .unwrap();
        let expect = BoolSeries::from_points(2, vec![mi(&[1, 0]), mi(&[2, 1])]).unwrap();
        assert_eq!(a2.derive(&mi(&[1, 1])), expect);

        assert_eq!(BoolSeries::omega(2).derive(&mi(&[4, 1])), BoolSeries::omega(2));

        // no cancellation over the booleans
        let t_plus_u = BoolSeries::from_points(2, vec![mi(&[1, 0]), mi(&[0, 1])]).unwrap();
        let sq = t_plus_u.mul(&t_plus_u);
        let expect =
            BoolSeries::from_points(2, vec![mi(&[2, 0]), mi(&[1, 1]), mi(&[0, 2])]).unwrap();
        assert_eq!(sq, expect);
    }

    #[test]
    fn rational_derivative_power_rule() {
        assert_eq!(s(&[(&[2, 1], 1)]).derive(&mi(&[1, 0])), s(&[(&[1, 1], 2)]));
        assert_eq!(
            s(&[(&[2, 1], 1), (&[0, 3], 1)]).derive(&mi(&[0, 1])),
            s(&[(&[2, 0], 1), (&[0, 2], 3)])
        );
    }

    #[test]
    fn product_cancels_cross_terms() {
        let sum = s(&[(&[1, 0], 1), (&[0, 1], 1)]);
        let diff = s(&[(&[1, 0], 1), (&[0, 1], -1)]);
        assert_eq!(sum.mul(&diff), s(&[(&[2, 0], 1), (&[0, 2], -1)]));
    }

    #[test]
    fn support_and_trop_examples() {
        let a = Series::new(
            2,
            [
                (mi(&[1, 0]), from_int::<Rat>(3)),
                (mi(&[0, 1]), ratio(-1, 2)),
            ],
        );
        let expect = BoolSeries::from_points(2, vec![mi(&[1, 0]), mi(&[0, 1])]).unwrap();
        assert_eq!(a.support(), expect);
        assert!(Series::<Rat>::zero(2).support().is_zero());

        let ex = s(&[(&[2, 0], 1), (&[1, 1], 1), (&[0, 3], 1)]);
        assert_eq!(
            ex.support(),
            BoolSeries::from_points(2, vec![mi(&[2, 0]), mi(&[1, 1]), mi(&[0, 3])]).unwrap()
        );
        assert_eq!(
            ex.trop(),
            VertexPolynomial::new(2, vec![mi(&[2, 0]), mi(&[1, 1]), mi(&[0, 3])]).unwrap()
        );

        // multiplicativity through cancellation
        let sum = s(&[(&[1, 0], 1), (&[0, 1], 1)]);
        let diff = s(&[(&[1, 0], 1), (&[0, 1], -1)]);
        assert_eq!(sum.mul(&diff).trop(), sum.trop().odot(&diff.trop()));

        assert_eq!(
            Series::constant(2, ratio::<Rat>(7, 3)).trop(),
            VertexPolynomial::one(2)
        );
    }

    #[test]
    fn initial_term_examples() {
        let ex = s(&[(&[2, 0], 1), (&[1, 1], 1), (&[0, 3], 1)]);
        assert_eq!(ex.initial_term(), ex);

        let m1 = Series::new(
            1,
            [
                (mi(&[1]), from_int::<Rat>(2)),
                (mi(&[2]), from_int::<Rat>(5)),
            ],
        );
        assert_eq!(m1.initial_term(), Series::new(1, [(mi(&[1]), from_int(2))]));

        let mixed = s(&[(&[1, 0], 1), (&[0, 1], 1), (&[1, 1], 1)]);
        assert_eq!(mixed.initial_term(), s(&[(&[1, 0], 1), (&[0, 1], 1)]));
    }

    #[test]
    fn lift_examples() {
        let fin = BoolSeries::from_points(2, vec![mi(&[1, 0]), mi(&[0, 1])]).unwrap();
        assert_eq!(fin.lift::<Rat>().unwrap(), s(&[(&[1, 0], 1), (&[0, 1], 1)]));
        assert_eq!(
            BoolSeries::zero(2).lift::<Rat>().unwrap(),
            Series::zero(2)
        );
        assert_eq!(
            BoolSeries::omega(2).lift::<Rat>(),
            Err(Error::InfiniteCarrier)
        );
        let vp = VertexPolynomial::new(2, vec![mi(&[2, 7])]).unwrap();
        assert_eq!(vp.lift::<Rat>(), s(&[(&[2, 7], 1)]));
    }

    #[test]
    fn cancellation_supports() {
        let a = s(&[(&[1, 0], 1), (&[0, 1], 1)]);
        let b = s(&[(&[0, 1], -1)]);
        assert_eq!(
            a.additive_support(&b),
            BoolSeries::from_points(2, vec![mi(&[0, 1])]).unwrap()
        );
        let diff = s(&[(&[1, 0], 1), (&[0, 1], -1)]);
        assert_eq!(
            a.multiplicative_support(&diff),
            BoolSeries::from_points(2, vec![mi(&[1, 1])]).unwrap()
        );
        let t = s(&[(&[1, 0], 1)]);
        let u = s(&[(&[0, 1], 1)]);
        assert!(t.additive_support(&u).is_zero());
    }

    #[test]
    fn fraction_basics() {
        let t = Series::<Rat>::monomial(mi(&[1, 0]), from_int(1));
        let u = Series::<Rat>::monomial(mi(&[0, 1]), from_int(1));
        let t_plus_u = t.add(&u);
        let x = SeriesFraction::new(t.clone(), t_plus_u.clone()).unwrap();
        let y = SeriesFraction::new(u.clone(), t_plus_u.clone()).unwrap();
        assert_eq!(x.add(&y), SeriesFraction::one(2));
        assert!(x.is_integer());
        // d/dt (t/(t+u)) = u/(t+u)^2, which is not integral
        let dx = x.derive(&mi(&[1, 0]));
        assert_eq!(
            dx,
            SeriesFraction::new(u.clone(), t_plus_u.mul(&t_plus_u)).unwrap()
        );
        assert!(!dx.is_integer());
        assert!(SeriesFraction::new(t, Series::zero(2)).is_err());
    }

    #[test]
    fn text_round_trip_shape() {
        let a = Series::new(
            2,
            [
                (mi(&[2, 0]), from_int::<Rat>(1)),
                (mi(&[1, 1]), ratio(-3, 2)),
                (mi(&[0, 0]), from_int::<Rat>(4)),
            ],
        );
        assert_eq!(a.to_text(false), "t1^2 - 3/2*t1*t2 + 4");
        assert_eq!(a.to_text(true), "t^2 - 3/2*t*u + 4");
        assert_eq!(Series::<Rat>::zero(2).to_text(false), "0");
    }
}
