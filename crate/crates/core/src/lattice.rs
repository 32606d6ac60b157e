//! Finitely generated subsets of `N^m`: finitely many points together with
//! finitely many translated orthants `g + N^m`.
//!
//! This is the exact machine representation of boolean power series. It is
//! closed under union, Minkowski sum, and the clamped shifts that realize
//! partial derivatives, and it represents the full-support series (the whole
//! of `N^m`) as a single orthant at the origin.

use crate::error::{Error, Result};
use crate::multi_index::{pareto_minimal, MultiIndex};

/// A subset of `N^m` denoted by `points ∪ ⋃_{g ∈ cones} (g + N^m)`.
///
/// Values are kept in canonical form: no point dominates a cone apex's
/// orthant membership (i.e. no point `p >= g`), no cone apex dominates
/// another, no duplicates, everything sorted. Two canonical sets denote the
/// same subset of `N^m` if and only if they are structurally equal, so the
/// derived `PartialEq`/`Hash` agree with set equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GeneratorSet {
    dim: usize,
    points: Vec<MultiIndex>,
    cones: Vec<MultiIndex>,
}

impl GeneratorSet {
    /// Canonicalize raw point and cone-apex lists. Fails if any index has the
    /// wrong length.
    pub fn normalize(
        dim: usize,
        points: Vec<MultiIndex>,
        cones: Vec<MultiIndex>,
    ) -> Result<Self> {
        for idx in points.iter().chain(cones.iter()) {
            if idx.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: idx.dim(),
                });
            }
        }
        Ok(Self::canonicalize(dim, points, cones))
    }

    fn canonicalize(dim: usize, points: Vec<MultiIndex>, cones: Vec<MultiIndex>) -> Self {
        let cones = pareto_minimal(&cones);
        let mut points: Vec<MultiIndex> = points
            .into_iter()
            .filter(|p| !cones.iter().any(|g| p.dominates(g)))
            .collect();
        points.sort();
        points.dedup();
        GeneratorSet { dim, points, cones }
    }

    pub fn empty(dim: usize) -> Self {
        GeneratorSet {
            dim,
            points: Vec::new(),
            cones: Vec::new(),
        }
    }

    /// The whole of `N^m`, i.e. the single orthant at the origin.
    pub fn full(dim: usize) -> Self {
        GeneratorSet {
            dim,
            points: Vec::new(),
            cones: vec![MultiIndex::zero(dim)],
        }
    }

    pub fn from_points(dim: usize, points: Vec<MultiIndex>) -> Result<Self> {
        Self::normalize(dim, points, Vec::new())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty() && self.cones.is_empty()
    }

    pub fn points(&self) -> &[MultiIndex] {
        &self.points
    }

    pub fn cones(&self) -> &[MultiIndex] {
        &self.cones
    }

    /// Points and cone apexes together. These span the same Newton polyhedron
    /// as the denoted set, since an orthant's tail lies in the recession cone.
    pub fn generators(&self) -> Vec<MultiIndex> {
        let mut g = self.points.clone();
        g.extend(self.cones.iter().cloned());
        g.sort();
        g.dedup();
        g
    }

    fn assert_same_dim(&self, other: &Self) {
        assert_eq!(
            self.dim, other.dim,
            "generator set dimension mismatch: {} vs {}",
            self.dim, other.dim
        );
    }

    /// Set union (the sum of boolean power series).
    pub fn union(&self, other: &Self) -> Self {
        self.assert_same_dim(other);
        let mut points = self.points.clone();
        points.extend(other.points.iter().cloned());
        let mut cones = self.cones.clone();
        cones.extend(other.cones.iter().cloned());
        Self::canonicalize(self.dim, points, cones)
    }

    /// Minkowski sum `{I + J : I ∈ A, J ∈ B}` (the product of boolean power
    /// series). Point + point stays a point; any pair involving an orthant
    /// becomes the orthant at the apex sum. An empty operand yields the
    /// empty set.
    pub fn minkowski(&self, other: &Self) -> Self {
        self.assert_same_dim(other);
        let mut points = Vec::new();
        let mut cones = Vec::new();
        for p in &self.points {
            for q in &other.points {
                points.push(p.add(q));
            }
            for g in &other.cones {
                cones.push(p.add(g));
            }
        }
        for g in &self.cones {
            for q in other.points.iter().chain(other.cones.iter()) {
                cones.push(g.add(q));
            }
        }
        Self::canonicalize(self.dim, points, cones)
    }

    /// The clamped shift `(A - J)_{>=0}`: points `p >= J` move to `p - J`,
    /// the rest are dropped; an orthant apex `g` moves to `max(g - J, 0)`.
    pub fn shift_clamped(&self, j: &MultiIndex) -> Self {
        assert_eq!(
            self.dim,
            j.dim(),
            "generator set dimension mismatch: {} vs {}",
            self.dim,
            j.dim()
        );
        let points = self
            .points
            .iter()
            .filter_map(|p| p.checked_sub(j))
            .collect();
        let cones = self.cones.iter().map(|g| g.saturating_sub(j)).collect();
        Self::canonicalize(self.dim, points, cones)
    }

    /// Membership of a single lattice point in the denoted set.
    pub fn contains(&self, idx: &MultiIndex) -> bool {
        assert_eq!(
            self.dim,
            idx.dim(),
            "generator set dimension mismatch: {} vs {}",
            self.dim,
            idx.dim()
        );
        self.points.contains(idx) || self.cones.iter().any(|g| idx.dominates(g))
    }

    /// All members `I <= bound` (componentwise), enumerated exactly and
    /// returned sorted.
    pub fn enumerate_below(&self, bound: &MultiIndex) -> Vec<MultiIndex> {
        assert_eq!(
            self.dim,
            bound.dim(),
            "generator set dimension mismatch: {} vs {}",
            self.dim,
            bound.dim()
        );
        let mut out: Vec<MultiIndex> = self
            .points
            .iter()
            .filter(|p| bound.dominates(p))
            .cloned()
            .collect();
        for g in &self.cones {
            if bound.dominates(g) {
                grid_between(g, bound, &mut out);
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

/// Push every lattice point of the box `[lo, hi]` onto `out`.
fn grid_between(lo: &MultiIndex, hi: &MultiIndex, out: &mut Vec<MultiIndex>) {
    let dim = lo.dim();
    let mut cur: Vec<u32> = lo.entries().to_vec();
    loop {
        out.push(MultiIndex::new(cur.clone()));
        // odometer increment within the box
        let mut k = 0;
        loop {
            if k == dim {
                return;
            }
            if cur[k] < hi.get(k) {
                cur[k] += 1;
                break;
            }
            cur[k] = lo.get(k);
            k += 1;
        }
    }
}

/// All lattice points of the box `[0, hi]`, sorted.
pub fn box_points(hi: &MultiIndex) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    grid_between(&MultiIndex::zero(hi.dim()), hi, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v.to_vec())
    }

    fn gs(points: &[&[u32]], cones: &[&[u32]]) -> GeneratorSet {
        let dim = points
            .first()
            .or_else(|| cones.first())
            .map(|v| v.len())
            .unwrap_or(2);
        GeneratorSet::normalize(
            dim,
            points.iter().map(|v| mi(v)).collect(),
            cones.iter().map(|v| mi(v)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn normalize_keeps_incomparable_points() {
        let s = gs(&[&[1, 1], &[2, 2]], &[]);
        assert_eq!(s.points(), &[mi(&[1, 1]), mi(&[2, 2])]);
        assert!(s.cones().is_empty());
    }

    #[test]
    fn normalize_absorbs_point_into_cone() {
        let s = gs(&[&[1, 1]], &[&[0, 0]]);
        assert!(s.points().is_empty());
        assert_eq!(s.cones(), &[mi(&[0, 0])]);
    }

    #[test]
    fn normalize_drops_dominated_cone() {
        let s = gs(&[], &[&[1, 0], &[2, 1]]);
        assert_eq!(s.cones(), &[mi(&[1, 0])]);
    }

    #[test]
    fn normalize_rejects_mixed_dims() {
        let err = GeneratorSet::normalize(2, vec![mi(&[1])], vec![]).unwrap_err();
        assert_eq!(
            err,
            Error::DimensionMismatch {
                expected: 2,
                found: 1
            }
        );
    }

    #[test]
    fn union_examples() {
        let a = gs(&[&[1, 0]], &[]);
        let b = gs(&[&[0, 1]], &[]);
        assert_eq!(a.union(&b), gs(&[&[1, 0], &[0, 1]], &[]));
        assert_eq!(a.union(&GeneratorSet::empty(2)), a);
        let pts = gs(&[&[3, 3]], &[]);
        let cone = gs(&[], &[&[1, 1]]);
        assert_eq!(pts.union(&cone), cone);
    }

    #[test]
    fn minkowski_examples() {
        let a = gs(&[&[2, 3], &[3, 1], &[5, 0]], &[]);
        let b = gs(&[&[0, 4], &[1, 3], &[4, 2]], &[]);
        let sum = a.minkowski(&b);
        assert_eq!(sum.points().len(), 9);
        for p in [&[2u32, 7u32][..], &[4, 4], &[9, 2]] {
            assert!(sum.contains(&mi(p)));
        }
        let one = gs(&[&[0, 0]], &[]);
        assert_eq!(a.minkowski(&one), a);
        let c1 = gs(&[], &[&[1, 0]]);
        let c2 = gs(&[], &[&[0, 1]]);
        assert_eq!(c1.minkowski(&c2), gs(&[], &[&[1, 1]]));
        assert_eq!(a.minkowski(&GeneratorSet::empty(2)), GeneratorSet::empty(2));
    }

    #[test]
    fn shift_examples() {
        // second partial of 1 + u + t^2 u + t^3 u^2 with respect to t and u
        let a = gs(&[&[0, 0], &[0, 1], &[2, 1], &[3, 2]], &[]);
        assert_eq!(
            a.shift_clamped(&mi(&[1, 1])),
            gs(&[&[1, 0], &[2, 1]], &[])
        );
        let full = GeneratorSet::full(2);
        assert_eq!(full.shift_clamped(&mi(&[3, 5])), full);
        // u-partial of t + t^2 + tu + u^3
        let b = gs(&[&[1, 0], &[2, 0], &[1, 1], &[0, 3]], &[]);
        assert_eq!(
            b.shift_clamped(&mi(&[0, 1])),
            gs(&[&[1, 0], &[0, 2]], &[])
        );
    }

    #[test]
    fn contains_examples() {
        assert!(gs(&[&[1, 0]], &[]).contains(&mi(&[1, 0])));
        assert!(gs(&[], &[&[1, 1]]).contains(&mi(&[2, 3])));
        assert!(!GeneratorSet::empty(2).contains(&mi(&[0, 0])));
    }

    #[test]
    fn enumerate_below_examples() {
        let full = GeneratorSet::full(2);
        assert_eq!(
            full.enumerate_below(&mi(&[1, 1])),
            vec![mi(&[0, 0]), mi(&[0, 1]), mi(&[1, 0]), mi(&[1, 1])]
        );
        assert!(gs(&[&[2, 0]], &[])
            .enumerate_below(&mi(&[1, 1]))
            .is_empty());
        assert_eq!(
            gs(&[&[1, 0], &[0, 1]], &[]).enumerate_below(&mi(&[1, 1])),
            vec![mi(&[0, 1]), mi(&[1, 0])]
        );
    }
}
