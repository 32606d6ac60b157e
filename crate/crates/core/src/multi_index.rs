//! Multi-indices: elements of `N^m` serving as exponent vectors and
//! derivative orders.

use std::fmt;

/// An element of `N^m`. The ambient dimension `m` is fixed per computation
/// context; binary operations panic when it disagrees.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Self {
        MultiIndex(entries)
    }

    pub fn zero(dim: usize) -> Self {
        MultiIndex(vec![0; dim])
    }

    /// The standard basis vector `e_k` (zero-based `k`).
    pub fn unit(dim: usize, k: usize) -> Self {
        assert!(k < dim, "basis index {k} out of range for dimension {dim}");
        let mut v = vec![0; dim];
        v[k] = 1;
        MultiIndex(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, k: usize) -> u32 {
        self.0[k]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `max(i_1, ..., i_m)`.
    pub fn sup_norm(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_dim(other);
        MultiIndex(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    /// Componentwise difference, `None` if any entry would go negative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        self.assert_same_dim(other);
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u32>>>()
            .map(MultiIndex)
    }

    /// Componentwise `max(self - other, 0)`.
    pub fn saturating_sub(&self, other: &Self) -> Self {
        self.assert_same_dim(other);
        MultiIndex(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &Self) -> bool {
        self.assert_same_dim(other);
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    /// Componentwise maximum.
    pub fn join(&self, other: &Self) -> Self {
        self.assert_same_dim(other);
        MultiIndex(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| (*a).max(*b))
                .collect(),
        )
    }

    fn assert_same_dim(&self, other: &Self) {
        assert_eq!(
            self.dim(),
            other.dim(),
            "multi-index dimension mismatch: {} vs {}",
            self.dim(),
            other.dim()
        );
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Componentwise-minimal elements of a finite set, deduplicated and sorted.
pub fn pareto_minimal(items: &[MultiIndex]) -> Vec<MultiIndex> {
    let mut out: Vec<MultiIndex> = Vec::new();
    for cand in items {
        if out.iter().any(|kept| cand.dominates(kept)) {
            continue;
        }
        out.retain(|kept| !kept.dominates(cand));
        out.push(cand.clone());
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v.to_vec())
    }

    #[test]
    fn clamped_subtraction() {
        assert_eq!(mi(&[2, 1]).checked_sub(&mi(&[1, 1])), Some(mi(&[1, 0])));
        assert_eq!(mi(&[0, 3]).checked_sub(&mi(&[1, 1])), None);
        assert_eq!(mi(&[0, 3]).saturating_sub(&mi(&[1, 1])), mi(&[0, 2]));
    }

    #[test]
    fn pareto_filters_dominated() {
        let min = pareto_minimal(&[mi(&[1, 1]), mi(&[2, 2]), mi(&[0, 3]), mi(&[1, 1])]);
        assert_eq!(min, vec![mi(&[0, 3]), mi(&[1, 1])]);
    }

    #[test]
    #[should_panic(expected = "dimension mismatch")]
    fn mixed_dimensions_panic() {
        let _ = mi(&[1, 2]).add(&mi(&[1]));
    }
}
