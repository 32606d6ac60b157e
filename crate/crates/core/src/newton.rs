//! Exact convex geometry of Newton polyhedra.
//!
//! For `A ⊆ N^m`, the Newton polyhedron `New(A)` is the convex hull of
//! `A + N^m`; it equals `Conv(A) + R^m_{>=0}`. This module certifies polyhedron
//! vertices, decides lattice-point membership, computes the generator form of
//! the lattice points of `New(A)`, evaluates support functions, and
//! characterizes the vertices of a Minkowski sum of two Newton polytopes.
//!
//! Decisions for `m <= 2` use integer staircase arithmetic; the general case
//! and the reference path use exact rational LP feasibility. The two paths are
//! cross-checked in the test suite.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lattice::{box_points, GeneratorSet};
use crate::lp::{self, LpOutcome};
use crate::multi_index::{pareto_minimal, MultiIndex};
use crate::scalar::from_nat;
use crate::Rat;

/// Vertex set of `New(A)` for the finite generating set `gens`
/// (points plus cone apexes; orthant tails do not change the polyhedron).
///
/// Dominated generators are discarded first: a point componentwise above
/// another lies on that generator's translated orthant and cannot be a
/// vertex. Each survivor `v` is then certified by deciding whether
/// `v ∈ Conv(rest) + R^m_{>=0}`.
pub fn vertices(dim: usize, gens: &[MultiIndex]) -> Vec<MultiIndex> {
    let minimal = pareto_minimal(gens);
    match dim {
        0 | 1 => minimal, // at most one Pareto minimum
        2 => staircase_2d(&minimal),
        _ => vertices_from_minimal_lp(dim, &minimal),
    }
}

/// Reference implementation of [`vertices`] that certifies every candidate by
/// exact LP regardless of dimension.
pub fn vertices_via_lp(dim: usize, gens: &[MultiIndex]) -> Vec<MultiIndex> {
    vertices_from_minimal_lp(dim, &pareto_minimal(gens))
}

fn vertices_from_minimal_lp(dim: usize, minimal: &[MultiIndex]) -> Vec<MultiIndex> {
    minimal
        .iter()
        .filter(|v| {
            let rest: Vec<MultiIndex> = minimal.iter().filter(|u| u != v).cloned().collect();
            !contains_via_lp(dim, &rest, v)
        })
        .cloned()
        .collect()
}

/// Whether `point ∈ New(gens)`. False for an empty generating set.
pub fn contains(dim: usize, gens: &[MultiIndex], point: &MultiIndex) -> bool {
    if gens.is_empty() {
        return false;
    }
    match dim {
        0 => true,
        1 => {
            let min = gens.iter().map(|g| g.get(0)).min().unwrap();
            point.get(0) >= min
        }
        2 => contains_2d(&staircase_2d(&pareto_minimal(gens)), point),
        _ => contains_via_lp(dim, gens, point),
    }
}

/// Reference membership test: exact LP feasibility of
/// `point = Σ λ_u u + r` with `λ >= 0`, `Σ λ = 1`, `r >= 0`.
pub fn contains_via_lp(dim: usize, gens: &[MultiIndex], point: &MultiIndex) -> bool {
    if gens.is_empty() {
        return false;
    }
    // variables: one λ per generator, then m slack coordinates r
    let cols = gens.len() + dim;
    let mut a: Vec<Vec<Rat>> = Vec::with_capacity(dim + 1);
    let mut b: Vec<Rat> = Vec::with_capacity(dim + 1);
    for k in 0..dim {
        let mut row = vec![Rat::zero(); cols];
        for (j, g) in gens.iter().enumerate() {
            row[j] = from_nat(g.get(k) as u128);
        }
        row[gens.len() + k] = from_nat(1);
        a.push(row);
        b.push(from_nat(point.get(k) as u128));
    }
    let mut convex = vec![Rat::zero(); cols];
    for c in convex.iter_mut().take(gens.len()) {
        *c = from_nat(1);
    }
    a.push(convex);
    b.push(from_nat(1));
    lp::feasible(&a, &b)
}

/// The lattice points of `New(A)` in generator form. The result denotes
/// `Ã = New(A) ∩ N^m` using cone apexes only.
///
/// `Ã` is upward closed (the recession cone of `New(A)` contains the positive
/// orthant), so it is the union of `g + N^m` over its finitely many minimal
/// elements, and every minimal element is componentwise bounded by the vertex
/// maxima: if `g_k` exceeded every vertex coordinate, the slack in coordinate
/// `k` would be at least 1 and `g - e_k` would still lie in `Ã`. Enumerating
/// that box and keeping the Pareto minima therefore yields exactly the
/// canonical generator set.
pub fn tilde(set: &GeneratorSet) -> GeneratorSet {
    if set.is_empty() {
        return GeneratorSet::empty(set.dim());
    }
    let dim = set.dim();
    let verts = vertices(dim, &set.generators());
    let bound = verts
        .iter()
        .fold(MultiIndex::zero(dim), |acc, v| acc.join(v));
    let members: Vec<MultiIndex> = box_points(&bound)
        .into_iter()
        .filter(|p| contains(dim, &verts, p))
        .collect();
    GeneratorSet::normalize(dim, Vec::new(), pareto_minimal(&members))
        .expect("indices share the ambient dimension")
}

/// `max { <u, x> : u ∈ Conv(a) }`, attained at a vertex. Errors on an empty
/// vertex set.
pub fn support_function(a: &[MultiIndex], x: &[i64]) -> Result<i64> {
    a.iter()
        .map(|u| {
            u.entries()
                .iter()
                .zip(x)
                .map(|(&c, &w)| c as i128 * w as i128)
                .sum::<i128>()
        })
        .max()
        .map(|v| i64::try_from(v).expect("support value overflow"))
        .ok_or(Error::Empty)
}

/// Vertices of the Minkowski sum of the polytopes `Conv(a)` and `Conv(b)`:
/// the points of `a + b` whose decomposition `I = I_a + I_b` with
/// `I_a ∈ Conv(a)`, `I_b ∈ Conv(b)` is unique. Uniqueness is decided by
/// optimizing each coordinate of `I_a` over the decomposition polytope.
pub fn minkowski_polytope_vertices(
    dim: usize,
    a: &[MultiIndex],
    b: &[MultiIndex],
) -> Vec<MultiIndex> {
    let mut candidates: Vec<MultiIndex> = a
        .iter()
        .flat_map(|u| b.iter().map(move |w| u.add(w)))
        .collect();
    candidates.sort();
    candidates.dedup();
    candidates
        .into_iter()
        .filter(|i| decomposition_is_unique(dim, a, b, i))
        .collect()
}

fn decomposition_is_unique(dim: usize, a: &[MultiIndex], b: &[MultiIndex], point: &MultiIndex) -> bool {
    // variables: λ over a, then μ over b
    let cols = a.len() + b.len();
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(dim + 2);
    let mut rhs: Vec<Rat> = Vec::with_capacity(dim + 2);
    for k in 0..dim {
        let mut row = vec![Rat::zero(); cols];
        for (j, u) in a.iter().enumerate() {
            row[j] = from_nat(u.get(k) as u128);
        }
        for (j, w) in b.iter().enumerate() {
            row[a.len() + j] = from_nat(w.get(k) as u128);
        }
        rows.push(row);
        rhs.push(from_nat(point.get(k) as u128));
    }
    for vars in [0..a.len(), a.len()..cols] {
        let mut row = vec![Rat::zero(); cols];
        for c in &mut row[vars] {
            *c = from_nat(1);
        }
        rows.push(row);
        rhs.push(from_nat(1));
    }

    for k in 0..dim {
        let mut objective = vec![Rat::zero(); cols];
        for (j, u) in a.iter().enumerate() {
            objective[j] = from_nat(u.get(k) as u128);
        }
        let hi = match lp::maximize(&rows, &rhs, &objective) {
            LpOutcome::Optimal(v) => v,
            outcome => panic!("decomposition LP must be solvable, got {outcome:?}"),
        };
        for o in objective.iter_mut() {
            *o = -o.clone();
        }
        let lo = match lp::maximize(&rows, &rhs, &objective) {
            LpOutcome::Optimal(v) => -v,
            outcome => panic!("decomposition LP must be solvable, got {outcome:?}"),
        };
        if hi != lo {
            return false;
        }
    }
    true
}

/// Lower-left convex chain of the Pareto minima (which arrive sorted with
/// strictly increasing x and strictly decreasing y). A middle point survives
/// only if it lies strictly below the segment joining its neighbors.
fn staircase_2d(minimal: &[MultiIndex]) -> Vec<MultiIndex> {
    let mut hull: Vec<MultiIndex> = Vec::with_capacity(minimal.len());
    for p in minimal {
        while hull.len() >= 2 && cross(&hull[hull.len() - 2], p, &hull[hull.len() - 1]) >= 0 {
            hull.pop();
        }
        hull.push(p.clone());
    }
    hull
}

/// Orientation of `b` against the segment `a -> c`; negative iff `b` lies
/// strictly below it.
fn cross(a: &MultiIndex, c: &MultiIndex, b: &MultiIndex) -> i128 {
    let (ax, ay) = (a.get(0) as i128, a.get(1) as i128);
    let (bx, by) = (b.get(0) as i128, b.get(1) as i128);
    let (cx, cy) = (c.get(0) as i128, c.get(1) as i128);
    (cx - ax) * (by - ay) - (cy - ay) * (bx - ax)
}

/// Halfplane test against the staircase: inside iff not left of the leftmost
/// vertex, not below the bottom vertex, and on or above every edge.
fn contains_2d(verts: &[MultiIndex], p: &MultiIndex) -> bool {
    let Some(first) = verts.first() else {
        return false;
    };
    let last = verts.last().unwrap();
    if p.get(0) < first.get(0) || p.get(1) < last.get(1) {
        return false;
    }
    verts.windows(2).all(|e| cross(&e[0], &e[1], p) >= 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v.to_vec())
    }

    fn mis(vs: &[&[u32]]) -> Vec<MultiIndex> {
        vs.iter().map(|v| mi(v)).collect()
    }

    #[test]
    fn vertices_drop_dominated_and_collinear() {
        assert_eq!(vertices(2, &mis(&[&[1, 1], &[2, 2]])), mis(&[&[1, 1]]));
        assert_eq!(
            vertices(2, &mis(&[&[0, 2], &[1, 1], &[2, 0]])),
            mis(&[&[0, 2], &[2, 0]])
        );
        assert!(vertices(2, &[]).is_empty());
    }

    #[test]
    fn vertices_of_nine_point_minkowski_sum() {
        let a = mis(&[&[2, 3], &[3, 1], &[5, 0]]);
        let b = mis(&[&[0, 4], &[1, 3], &[4, 2]]);
        let mut sum = Vec::new();
        for u in &a {
            for w in &b {
                sum.push(u.add(w));
            }
        }
        let expect = mis(&[&[2, 7], &[3, 5], &[4, 4], &[6, 3], &[9, 2]]);
        assert_eq!(vertices(2, &sum), expect);
        assert_eq!(vertices_via_lp(2, &sum), expect);
    }

    #[test]
    fn membership_examples() {
        assert!(contains(2, &mis(&[&[1, 0], &[0, 1]]), &mi(&[1, 1])));
        assert!(!contains(2, &mis(&[&[1, 0]]), &mi(&[0, 0])));
        assert!(contains(2, &mis(&[&[0, 4], &[1, 3]]), &mi(&[2, 3])));
        assert!(contains_via_lp(2, &mis(&[&[0, 4], &[1, 3]]), &mi(&[2, 3])));
        assert!(!contains(2, &[], &mi(&[0, 0])));
    }

    #[test]
    fn tilde_examples() {
        let a = GeneratorSet::from_points(2, mis(&[&[1, 0], &[0, 1]])).unwrap();
        let expect =
            GeneratorSet::normalize(2, vec![], mis(&[&[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert_eq!(tilde(&a), expect);

        let origin = GeneratorSet::from_points(2, mis(&[&[0, 0]])).unwrap();
        assert_eq!(tilde(&origin), GeneratorSet::full(2));

        let halfline = GeneratorSet::from_points(1, vec![mi(&[2])]).unwrap();
        assert_eq!(
            tilde(&halfline),
            GeneratorSet::normalize(1, vec![], vec![mi(&[2])]).unwrap()
        );

        assert_eq!(tilde(&GeneratorSet::empty(2)), GeneratorSet::empty(2));
    }

    #[test]
    fn support_function_examples() {
        let simplex = mis(&[&[1, 0], &[0, 1]]);
        assert_eq!(support_function(&simplex, &[1, 1]).unwrap(), 1);
        assert_eq!(support_function(&simplex, &[2, 1]).unwrap(), 2);
        assert_eq!(
            support_function(&mis(&[&[2, 3], &[3, 1], &[5, 0]]), &[1, 1]).unwrap(),
            5
        );
        assert_eq!(support_function(&[], &[1, 1]), Err(Error::Empty));
    }

    #[test]
    fn minkowski_polytope_vertex_examples() {
        let a = mis(&[&[2, 3], &[3, 1], &[5, 0]]);
        let b = mis(&[&[0, 4], &[1, 3], &[4, 2]]);
        assert_eq!(
            minkowski_polytope_vertices(2, &a, &b),
            mis(&[&[2, 7], &[3, 5], &[4, 4], &[6, 3], &[6, 5], &[9, 2]])
        );

        let origin = mis(&[&[0, 0]]);
        assert_eq!(minkowski_polytope_vertices(2, &origin, &b), b);

        let seg = mis(&[&[1, 0], &[0, 1]]);
        assert_eq!(
            minkowski_polytope_vertices(2, &seg, &seg),
            mis(&[&[0, 2], &[2, 0]])
        );
    }
}
