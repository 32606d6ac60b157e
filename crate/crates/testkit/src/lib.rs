//! Shared machinery for the randomized test suites: a seeded RNG, random
//! value generators, independent oracles, and the property checks run by both
//! the per-module property tests and the acceptance suite.
//!
//! Everything is deterministic for a fixed seed. The seed defaults to a
//! constant and can be overridden through the `TROPDIFF_SEED` environment
//! variable.

use rand::prelude::*;
pub use rand_chacha::ChaCha8Rng;

use tropdiff::diffpoly::eval_monomial;
use tropdiff::lattice::box_points;
use tropdiff::scalar::ratio;
use tropdiff::{
    newton, BoolDiffPoly, BoolSeries, DiffMonomial, DiffPoly, GeneratorSet, MultiIndex, Rat,
    RatDiffPoly, RatFracDiffPoly, RatFraction, RatSeries, VertexPolynomial,
};

pub const DEFAULT_SEED: u64 = 0x7409_d1ff;

/// The active seed: `TROPDIFF_SEED` if set, the built-in default otherwise.
pub fn seed() -> u64 {
    std::env::var("TROPDIFF_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

pub fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed())
}

/// Derive an independent stream so the properties stay decoupled.
pub fn rng_for(label: &str) -> ChaCha8Rng {
    let mut h: u64 = seed();
    for b in label.bytes() {
        h = h.wrapping_mul(0x100_0000_01b3).wrapping_add(b as u64);
    }
    ChaCha8Rng::seed_from_u64(h)
}

// ---------------------------------------------------------------------------
// generators

pub fn pick_dim(rng: &mut impl Rng) -> usize {
    match rng.gen_range(0..100) {
        0..=24 => 1,
        25..=84 => 2,
        _ => 3,
    }
}

pub fn gen_index(rng: &mut impl Rng, dim: usize, coord_max: u32) -> MultiIndex {
    MultiIndex::new((0..dim).map(|_| rng.gen_range(0..=coord_max)).collect())
}

pub fn gen_points(
    rng: &mut impl Rng,
    dim: usize,
    max_count: usize,
    coord_max: u32,
) -> Vec<MultiIndex> {
    let count = rng.gen_range(0..=max_count);
    (0..count).map(|_| gen_index(rng, dim, coord_max)).collect()
}

pub fn gen_generator_set(rng: &mut impl Rng, dim: usize, coord_max: u32) -> GeneratorSet {
    let points = gen_points(rng, dim, 4, coord_max);
    let cones = if rng.gen_bool(0.3) {
        gen_points(rng, dim, 2, coord_max.min(4))
    } else {
        Vec::new()
    };
    GeneratorSet::normalize(dim, points, cones).unwrap()
}

pub fn gen_vertex_poly(rng: &mut impl Rng, dim: usize, coord_max: u32) -> VertexPolynomial {
    VertexPolynomial::project(dim, &gen_points(rng, dim, 5, coord_max))
}

pub fn gen_vertex_poly_nonzero(
    rng: &mut impl Rng,
    dim: usize,
    coord_max: u32,
) -> VertexPolynomial {
    loop {
        let v = gen_vertex_poly(rng, dim, coord_max);
        if !v.is_zero() {
            return v;
        }
    }
}

pub fn gen_coeff(rng: &mut impl Rng) -> Rat {
    let p = loop {
        let p = rng.gen_range(-4i64..=4);
        if p != 0 {
            break p;
        }
    };
    let q = rng.gen_range(1u64..=3);
    ratio(p, q)
}

pub fn gen_series(rng: &mut impl Rng, dim: usize, max_terms: usize, coord_max: u32) -> RatSeries {
    let count = rng.gen_range(0..=max_terms);
    RatSeries::new(
        dim,
        (0..count).map(|_| (gen_index(rng, dim, coord_max), gen_coeff(rng))),
    )
}

pub fn gen_series_nonzero(
    rng: &mut impl Rng,
    dim: usize,
    max_terms: usize,
    coord_max: u32,
) -> RatSeries {
    loop {
        let s = gen_series(rng, dim, max_terms, coord_max);
        if !s.is_zero() {
            return s;
        }
    }
}

/// A pair engineered to cancel under multiplication: `(g + h, g - h)`.
pub fn gen_cancelling_pair(rng: &mut impl Rng, dim: usize) -> (RatSeries, RatSeries) {
    let g = gen_series_nonzero(rng, dim, 3, 4);
    let h = gen_series_nonzero(rng, dim, 3, 4);
    (g.add(&h), g.sub(&h))
}

pub fn gen_fraction(rng: &mut impl Rng, dim: usize) -> RatFraction {
    RatFraction::new(
        gen_series(rng, dim, 3, 4),
        gen_series_nonzero(rng, dim, 2, 3),
    )
    .unwrap()
}

pub fn gen_bool_series(rng: &mut impl Rng, dim: usize) -> BoolSeries {
    match rng.gen_range(0..10) {
        0..=1 => BoolSeries::omega(dim),
        2 => BoolSeries::from_carrier(gen_generator_set(rng, dim, 4)),
        _ => BoolSeries::from_points(dim, gen_points(rng, dim, 4, 4)).unwrap(),
    }
}

pub fn gen_weights(rng: &mut impl Rng, dim: usize, vars: usize) -> Vec<BoolSeries> {
    (0..vars)
        .map(|_| loop {
            let w = gen_bool_series(rng, dim);
            if !w.is_zero() || rng.gen_bool(0.2) {
                break w;
            }
        })
        .collect()
}

pub fn gen_monomial(rng: &mut impl Rng, dim: usize, vars: usize) -> DiffMonomial {
    let factors = rng.gen_range(0..=2);
    DiffMonomial::from_factors((0..factors).map(|_| {
        (
            (rng.gen_range(0..vars), gen_index(rng, dim, 2)),
            rng.gen_range(1..=2u32),
        )
    }))
}

pub fn gen_rat_diffpoly(rng: &mut impl Rng, dim: usize, vars: usize) -> RatDiffPoly {
    let terms = rng.gen_range(1..=3);
    DiffPoly::new(
        dim,
        vars,
        (0..terms).map(|_| (gen_monomial(rng, dim, vars), gen_series(rng, dim, 3, 4))),
    )
}

pub fn gen_frac_diffpoly(rng: &mut impl Rng, dim: usize, vars: usize) -> RatFracDiffPoly {
    let terms = rng.gen_range(1..=3);
    DiffPoly::new(
        dim,
        vars,
        (0..terms).map(|_| (gen_monomial(rng, dim, vars), gen_fraction(rng, dim))),
    )
}

pub fn gen_bool_diffpoly(rng: &mut impl Rng, dim: usize, vars: usize) -> BoolDiffPoly {
    let terms = rng.gen_range(1..=4);
    DiffPoly::new(
        dim,
        vars,
        (0..terms).map(|_| {
            (
                gen_monomial(rng, dim, vars),
                BoolSeries::from_points(dim, gen_points(rng, dim, 3, 3)).unwrap(),
            )
        }),
    )
}

/// Sample `a ≺ b` for a given nonzero `b`: a vertex set built from lattice
/// points of `New(B)` outside the support of `b`. Returns `None` when no such
/// point exists below the probe bound.
pub fn gen_irrelevant_below(
    rng: &mut impl Rng,
    b: &VertexPolynomial,
) -> Option<VertexPolynomial> {
    let dim = b.dim();
    let bound = MultiIndex::new(vec![6; dim]);
    let candidates: Vec<MultiIndex> = b
        .tilde()
        .enumerate_below(&bound)
        .into_iter()
        .filter(|i| !b.support().contains(i))
        .collect();
    if candidates.is_empty() {
        return None;
    }
    let count = rng.gen_range(1..=candidates.len().min(3));
    let picked: Vec<MultiIndex> = (0..count)
        .map(|_| candidates[rng.gen_range(0..candidates.len())].clone())
        .collect();
    let a = VertexPolynomial::project(dim, &picked);
    debug_assert!(a.prec(b).unwrap());
    Some(a)
}

// ---------------------------------------------------------------------------
// independent oracles

/// Direction-scan vertex oracle for `m <= 2`: `v` is a vertex of `New(A)`
/// exactly when it is the unique minimizer of some strictly positive integer
/// direction. For lattice points with coordinates at most `B` it suffices to
/// scan directions up to `2B + 1`, since adjacent edge normals differ by
/// slopes with numerator and denominator at most `B`.
pub fn oracle_vertices_low_dim(dim: usize, points: &[MultiIndex]) -> Vec<MultiIndex> {
    assert!(dim <= 2, "direction-scan oracle only covers m <= 2");
    let mut dedup = points.to_vec();
    dedup.sort();
    dedup.dedup();
    if dedup.is_empty() {
        return Vec::new();
    }
    if dim <= 1 {
        return vec![dedup.iter().min().unwrap().clone()];
    }
    let bound = dedup.iter().map(|p| p.get(0).max(p.get(1))).max().unwrap() as i64;
    let range = 2 * bound + 1;
    let mut verts = Vec::new();
    for dx in 1..=range {
        for dy in 1..=range {
            let score = |p: &MultiIndex| p.get(0) as i64 * dx + p.get(1) as i64 * dy;
            let best = dedup.iter().map(&score).min().unwrap();
            let mut minimizers = dedup.iter().filter(|p| score(p) == best);
            if let (Some(v), None) = (minimizers.next(), minimizers.next()) {
                if !verts.contains(v) {
                    verts.push(v.clone());
                }
            }
        }
    }
    verts.sort();
    verts
}

/// Initial form by the one-variable minimal-valuation rule: each term's
/// weighted value is a single exponent; keep the terms attaining the global
/// minimum and cut each coefficient to its lowest-order part.
pub fn oracle_initial_form_m1(p: &RatDiffPoly, w: &[BoolSeries]) -> RatDiffPoly {
    assert_eq!(p.dim(), 1);
    let orders: Vec<Option<u32>> = p
        .terms()
        .iter()
        .map(|(mono, c)| {
            let value = c.support().mul(&eval_monomial(1, mono, w));
            let carrier = value.carrier();
            let point_min = carrier.points().iter().map(|p| p.get(0)).min();
            let cone_min = carrier.cones().iter().map(|g| g.get(0)).min();
            match (point_min, cone_min) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            }
        })
        .collect();
    let Some(global) = orders.iter().flatten().min().copied() else {
        return DiffPoly::zero(1, p.num_vars());
    };
    DiffPoly::new(
        1,
        p.num_vars(),
        p.terms()
            .iter()
            .zip(&orders)
            .filter(|(_, ord)| **ord == Some(global))
            .map(|((mono, c), _)| {
                let min_exp = c.terms().map(|(i, _)| i.clone()).min().unwrap();
                let lead = c.coefficient(&min_exp).unwrap().clone();
                (mono.clone(), RatSeries::monomial(min_exp, lead))
            }),
    )
}

// ---------------------------------------------------------------------------
// assertion helpers

fn bool_subset(a: &BoolSeries, b: &BoolSeries) -> bool {
    // finite carriers only (true for every series produced by these checks)
    assert!(a.carrier().cones().is_empty());
    a.carrier().points().iter().all(|p| b.contains(p))
}

fn neg_poly(p: &RatDiffPoly) -> RatDiffPoly {
    p.map_coefficients(|c| c.neg())
}

// ---------------------------------------------------------------------------
// property checks (each runs `cases` independent random instances)

/// Union, Minkowski sum, and clamped shift satisfy the semiring laws at the
/// level of denoted sets, checked by grid enumeration below (6,...,6).
pub fn check_lattice_laws(rng: &mut impl Rng, cases: usize) {
    for _ in 0..cases {
        let dim = pick_dim(rng);
        let bound = MultiIndex::new(vec![6; dim]);
        let a = gen_generator_set(rng, dim, 5);
        let b = gen_generator_set(rng, dim, 5);
        let c = gen_generator_set(rng, dim, 5);

        assert_eq!(a.union(&b), b.union(&a));
        assert_eq!(a.union(&b).union(&c), a.union(&b.union(&c)));
        assert_eq!(a.union(&a), a);
        assert_eq!(a.minkowski(&b), b.minkowski(&a));
        assert_eq!(a.minkowski(&b).minkowski(&c), a.minkowski(&b.minkowski(&c)));

        // distributivity on the denoted sets
        let lhs = a.minkowski(&b.union(&c));
        let rhs = a.minkowski(&b).union(&a.minkowski(&c));
        assert_eq!(lhs.enumerate_below(&bound), rhs.enumerate_below(&bound));

        // enumeration agreement for the Minkowski sum itself
        let mut expect: Vec<MultiIndex> = Vec::new();
        for i in a.enumerate_below(&bound) {
            for j in b.enumerate_below(&bound) {
                let s = i.add(&j);
                if bound.dominates(&s) {
                    expect.push(s);
                }
            }
        }
        expect.sort();
        expect.dedup();
        assert_eq!(a.minkowski(&b).enumerate_below(&bound), expect);
    }
}

/// Clamped shifts compose, and membership matches the definitional set.
pub fn check_shift_composition(rng: &mut impl Rng, cases: usize) {
    for _ in 0..cases {
        let dim = pick_dim(rng);
        let a = gen_generator_set(rng, dim, 5);
        let j = gen_index(rng, dim, 3);
        let k = gen_index(rng, dim, 3);
        let bound = MultiIndex::new(vec![6; dim]);

        let double = a.shift_clamped(&j).shift_clamped(&k);
        let joint = a.shift_clamped(&j.add(&k));
        assert_eq!(double.enumerate_below(&bound), joint.enumerate_below(&bound));

        // single cones compose structurally
        let cone = GeneratorSet::normalize(dim, vec![], vec![gen_index(rng, dim, 4)]).unwrap();
        assert_eq!(
            cone.shift_clamped(&j).shift_clamped(&k),
            cone.shift_clamped(&j.add(&k))
        );

        // definitional membership of the shift
        let shifted = a.shift_clamped(&j);
        let mut expect: Vec<MultiIndex> = a
            .enumerate_below(&bound.add(&j))
            .into_iter()
            .filter_map(|i| i.checked_sub(&j))
            .filter(|i| bound.dominates(i))
            .collect();
        expect.sort();
        expect.dedup();
        assert_eq!(shifted.enumerate_below(&bound), expect);
    }
}

pub fn check_vert_idempotent(rng: &mut impl Rng, cases: usize) {
    for _ in 0..cases {
        let dim = pick_dim(rng);
        let pts = gen_points(rng, dim, 6, 8);
        let once = newton::vertices(dim, &pts);
        let twice = newton::vertices(dim, &once);
        assert_eq!(once, twice, "Vert must be idempotent on {pts:?}");
    }
}

/// Every subset of a vertex set is again a vertex set.
pub fn check_hereditary(rng: &mut impl Rng, cases: usize) {
    for _ in 0..cases {
        let dim = pick_dim(rng);
        let v = gen_vertex_poly(rng, dim, 7);
        let support = v.support();
        let k = support.len();
        for mask in 0..(1u32 << k) {
            let subset: Vec<MultiIndex> = (0..k)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| support[i].clone())
                .collect();
            VertexPolynomial::new(dim, subset.clone()).unwrap_or_else(|_| {
                panic!("subset {subset:?} of vertex set {support:?} must be a vertex set")
            });
        }
    }
}

/// `New(A') = New(A)` iff the subset `A'` contains every vertex of `A`,
/// brute-forced over all subsets, with polyhedron equality decided by mutual
/// vertex membership.
pub fn check_minimal_spanning(rng: &mut impl Rng, cases: usize) {
    for case in 0..cases {
        let dim = if case % 10 == 0 { 3 } else { rng.gen_range(1..=2) };
        let size_max = if dim == 3 { 4 } else { 6 };
        let mut pts = gen_points(rng, dim, size_max, 6);
        pts.sort();
        pts.dedup();
        if pts.is_empty() {
            continue;
        }
        let verts = newton::vertices(dim, &pts);
        for mask in 0..(1u32 << pts.len()) {
            let subset: Vec<MultiIndex> = (0..pts.len())
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| pts[i].clone())
                .collect();
            let sub_verts = newton::vertices(dim, &subset);
            let same_polyhedron = sub_verts.iter().all(|v| newton::contains(dim, &pts, v))
                && verts.iter().all(|v| newton::contains(dim, &subset, v));
            let spans = verts.iter().all(|v| subset.contains(v));
            assert_eq!(
                same_polyhedron, spans,
                "spanning mismatch for subset {subset:?} of {pts:?}"
            );
        }
    }
}

pub fn check_semiring_axioms(rng: &mut impl Rng, cases: usize) {
    for _ in 0..cases {
        let dim = pick_dim(rng);
        let a = gen_vertex_poly(rng, dim, 8);
        let b = gen_vertex_poly(rng, dim, 8);
        let c = gen_vertex_poly(rng, dim, 8);
        let zero = VertexPolynomial::zero(dim);
        let one = VertexPolynomial::one(dim);

        assert_eq!(a.oplus(&b), b.oplus(&a));
        assert_eq!(a.oplus(&b).oplus(&c), a.oplus(&b.oplus(&c)));
        assert_eq!(a.oplus(&a), a);
        assert_eq!(a.oplus(&zero), a);
        assert_eq!(a.odot(&b), b.odot(&a));
        assert_eq!(a.odot(&b).odot(&c), a.odot(&b.odot(&c)));
        assert_eq!(a.odot(&one), a);
        assert!(a.odot(&zero).is_zero());
        assert_eq!(a.odot(&b.oplus(&c)), a.odot(&b).oplus(&a.odot(&c)));
    }
}

pub fn check_cancellativity(rng: &mut impl Rng, cases: usize) {
    for _ in 0..cases {
        let dim = pick_dim(rng);
        let a = gen_vertex_poly(rng, dim, 8);
        let b = gen_vertex_poly(rng, dim, 8);
        let c = gen_vertex_poly_nonzero(rng, dim, 8);
        if a == b {
            continue;
        }
        assert_ne!(
            a.odot(&c),
            b.odot(&c),
            "cancellativity fails for {a:?}, {b:?}, {c:?}"
        );
    }
}

/// The membership route and the `a ⊕ b = b` route define the same order, and
/// on monomials the order is opposite to the product order on exponents.
pub fn check_order_dual(rng: &mut impl Rng, cases: usize) {
    for _ in 0..cases {
        let dim = pick_dim(rng);
        let a = gen_vertex_poly(rng, dim, 8);
        let b = gen_vertex_poly(rng, dim, 8);
        assert_eq!(a.leq(&b), a.oplus(&b) == b, "order mismatch {a:?} vs {b:?}");

        let i = gen_index(rng, dim, 6);
        let j = gen_index(rng, dim, 6);
        let mono_i = VertexPolynomial::monomial(i.clone());
        let mono_j = VertexPolynomial::monomial(j.clone());
        assert_eq!(mono_i.leq(&mono_j), i.dominates(&j));
    }
}

/// The relevancy calculus, items 1 through 5.
pub fn check_relevancy_calculus(rng: &mut impl Rng, cases: usize) {
    let mut done = 0usize;
    let mut attempts = 0usize;
    while done < cases {
        attempts += 1;
        assert!(
            attempts < cases * 40,
            "relevancy generator failed to produce enough instances"
        );
        let dim = 1 + (done % 2); // the relation is richest in low dimension
        let c = gen_vertex_poly_nonzero(rng, dim, 4);
        let Some(b) = gen_irrelevant_below(rng, &c) else {
            continue;
        };
        let Some(a) = gen_irrelevant_below(rng, &b) else {
            continue;
        };
        let Some(a2) = gen_irrelevant_below(rng, &c) else {
            continue;
        };
        let d = gen_vertex_poly_nonzero(rng, dim, 4);

        // 1: transitivity
        assert!(a.prec(&b).unwrap() && b.prec(&c).unwrap());
        assert!(a.prec(&c).unwrap(), "transitivity fails: {a:?} {b:?} {c:?}");
        // 2: a common irrelevant element stays irrelevant for the sum
        if let Some(cc) =
            gen_irrelevant_below(rng, &b).filter(|cc| cc.prec(&a2).unwrap_or(false))
        {
            assert!(cc.prec(&b.oplus(&a2)).unwrap());
        }
        // 3: sums of irrelevant elements stay irrelevant
        assert!(b.oplus(&a2).prec(&c).unwrap(), "{b:?}⊕{a2:?} ⊀ {c:?}");
        // 4: multiplication preserves relevancy
        assert!(b.odot(&d).prec(&c.odot(&d)).unwrap());
        // 5: multiplicative cancellation, as the contrapositive
        let x = gen_vertex_poly_nonzero(rng, dim, 4);
        let y = gen_vertex_poly_nonzero(rng, dim, 4);
        if !x.prec(&y).unwrap() {
            assert!(
                !x.odot(&d).prec(&y.odot(&d)).unwrap(),
                "cancellation fails: {x:?} {y:?} {d:?}"
            );
        }
        done += 1;
    }
}

/// The generator form of the lattice points of the Newton polyhedron agrees
/// with direct membership on the whole probe grid.
pub fn check_tilde_grid(rng: &mut impl Rng, cases: usize) {
    for case in 0..cases {
        let dim = if case % 25 == 0 { 3 } else { rng.gen_range(1..=2) };
        let set = gen_generator_set(rng, dim, 6);
        let tilde = newton::tilde(&set);
        let gens = set.generators();
        let bound = MultiIndex::new(vec![8; dim]);
        for probe in box_points(&bound) {
            assert_eq!(
                tilde.contains(&probe),
                newton::contains(dim, &gens, &probe),
                "tilde mismatch at {probe:?} for {set:?}"
            );
        }
    }
}

/// trop is multiplicative (including engineered cancellation) and
/// subadditive; an irrelevant summand does not change the tropicalization.
pub fn check_trop_valuation(rng: &mut impl Rng, cases: usize) {
    for case in 0..cases {
        let dim = pick_dim(rng);
        let (alpha, beta) = if case % 3 == 0 {
            gen_cancelling_pair(rng, dim)
        } else {
            (gen_series(rng, dim, 4, 6), gen_series(rng, dim, 4, 6))
        };
        assert_eq!(
            alpha.mul(&beta).trop(),
            alpha.trop().odot(&beta.trop()),
            "trop multiplicativity fails for {alpha:?} and {beta:?}"
        );
        assert!(alpha
            .add(&beta)
            .trop()
            .leq(&alpha.trop().oplus(&beta.trop())));

        // an irrelevant summand is invisible
        let b = gen_series_nonzero(rng, dim, 4, 5);
        if let Some(small_supp) = gen_irrelevant_below(rng, &b.trop()) {
            let small = RatSeries::indicator(dim, small_supp.support().iter().cloned());
            assert!(small.trop().prec(&b.trop()).unwrap());
            assert_eq!(small.add(&b).trop(), b.trop());
        }
    }
}

/// The additive and multiplicative supports complement the support of sums
/// and products exactly and disjointly.
pub fn check_appendix_supports(rng: &mut impl Rng, cases: usize) {
    for case in 0..cases {
        let dim = pick_dim(rng);
        let (alpha, beta) = if case % 3 == 0 {
            gen_cancelling_pair(rng, dim)
        } else {
            (gen_series(rng, dim, 4, 5), gen_series(rng, dim, 4, 5))
        };

        let add_supp = alpha.add(&beta).support();
        let add_drop = alpha.additive_support(&beta);
        for p in add_supp.carrier().points() {
            assert!(!add_drop.contains(p), "overlap in additive supports");
        }
        assert_eq!(add_supp.add(&add_drop), alpha.support().add(&beta.support()));

        let mul_supp = alpha.mul(&beta).support();
        let mul_drop = alpha.multiplicative_support(&beta);
        for p in mul_supp.carrier().points() {
            assert!(!mul_drop.contains(p), "overlap in multiplicative supports");
        }
        assert_eq!(mul_supp.add(&mul_drop), alpha.support().mul(&beta.support()));
    }
}

/// The support map commutes with derivatives on series and dominates them on
/// differential polynomials.
pub fn check_sp_theta(rng: &mut impl Rng, cases: usize) {
    for _ in 0..cases {
        let dim = pick_dim(rng);
        let alpha = gen_series(rng, dim, 4, 5);
        let j = gen_index(rng, dim, 2);
        assert_eq!(alpha.derive(&j).support(), alpha.support().derive(&j));

        let vars = rng.gen_range(1..=2);
        let p = gen_rat_diffpoly(rng, dim, vars);
        let q = gen_rat_diffpoly(rng, dim, vars);
        let i = rng.gen_range(0..dim);
        assert_diffpoly_dominated(&p.derive(i).support_poly(), &p.support_poly().derive(i));
        assert_diffpoly_dominated(
            &p.add(&q).support_poly(),
            &p.support_poly().add(&q.support_poly()),
        );
        assert_diffpoly_dominated(
            &p.mul(&q).support_poly(),
            &p.support_poly().mul(&q.support_poly()),
        );
    }
}

fn assert_diffpoly_dominated(small: &BoolDiffPoly, big: &BoolDiffPoly) {
    for (mono, c) in small.terms() {
        let target = big
            .terms()
            .iter()
            .find(|(m, _)| m == mono)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(|| BoolSeries::zero(c.carrier().dim()));
        assert!(
            bool_subset(c, &target),
            "coefficient of {mono:?} not dominated"
        );
    }
}

/// The two-witness rule and tropical vanishing of the per-term vertex list
/// give the same verdict.
pub fn check_solution_equivalence(rng: &mut impl Rng, cases: usize) {
    for _ in 0..cases {
        let dim = pick_dim(rng);
        let vars = rng.gen_range(1..=2);
        let p = gen_bool_diffpoly(rng, dim, vars);
        if p.is_zero() {
            continue; // the vanishing condition quantifies over actual terms
        }
        let a: Vec<BoolSeries> = (0..vars).map(|_| gen_bool_series(rng, dim)).collect();
        let check = p.check_solution(&a);
        let by_vanishing = VertexPolynomial::tropically_vanishes(&check.term_vertices).unwrap();
        assert_eq!(
            check.solution, by_vanishing,
            "solution definitions disagree for {p:?} at {a:?}"
        );
    }
}

/// The weighted tropicalization is a multiplicative seminorm.
pub fn check_trop_w_seminorm(rng: &mut impl Rng, cases: usize) {
    for case in 0..cases {
        let dim = pick_dim(rng);
        let vars = rng.gen_range(1..=2);
        let mut p = gen_rat_diffpoly(rng, dim, vars);
        let mut q = gen_rat_diffpoly(rng, dim, vars);
        if case % 3 == 0 {
            // engineered coefficient cancellation on a shared monomial
            let (f, g) = gen_cancelling_pair(rng, dim);
            let mono = gen_monomial(rng, dim, vars);
            p = p.add(&DiffPoly::new(dim, vars, [(mono.clone(), f)]));
            q = q.add(&DiffPoly::new(dim, vars, [(mono, g)]));
        }
        let w = gen_weights(rng, dim, vars);
        assert_eq!(
            p.mul(&q).trop_w(&w),
            p.trop_w(&w).odot(&q.trop_w(&w)),
            "trop_w multiplicativity fails for {p:?}, {q:?}"
        );
        assert!(p.add(&q).trop_w(&w).leq(&p.trop_w(&w).oplus(&q.trop_w(&w))));
    }
}

/// The initial-form decomposition: `trop_w` of the initial form equals
/// `trop_w(P)`, and the dropped part is irrelevant whenever it is visible.
pub fn check_initial_decomposition(rng: &mut impl Rng, cases: usize) {
    for _ in 0..cases {
        let dim = pick_dim(rng);
        let vars = rng.gen_range(1..=2);
        let p = gen_rat_diffpoly(rng, dim, vars);
        let w = gen_weights(rng, dim, vars);
        let total = p.trop_w(&w);
        let initial = p.initial_form(&w);
        if total.is_zero() {
            assert!(initial.is_zero());
            continue;
        }
        assert_eq!(initial.trop_w(&w), total);
        let rest = p.add(&neg_poly(&initial));
        if !rest.is_zero() {
            let rest_trop = rest.trop_w(&w);
            if !rest_trop.is_zero() {
                assert!(
                    rest_trop.prec(&total).unwrap(),
                    "irrelevant part is relevant: {p:?} at {w:?}"
                );
            }
        }
    }
}

/// Translation lands in integral coefficients.
pub fn check_translation_integrality(rng: &mut impl Rng, cases: usize) {
    for _ in 0..cases {
        let dim = pick_dim(rng).min(2);
        let vars = rng.gen_range(1..=2);
        let p = gen_frac_diffpoly(rng, dim, vars);
        let w = gen_weights(rng, dim, vars);
        let translated = p.translate(&w);
        for (_, c) in translated.terms() {
            assert!(c.is_integer(), "non-integral coefficient {c:?}");
        }
        if p.trop_w_frac(&w).is_zero() {
            assert!(translated.is_zero());
        }
    }
}

/// Constant-coefficient polynomials and their derivatives are fixed by the
/// initial form at the full-support weight.
pub fn check_tropical_basis_omega(rng: &mut impl Rng, cases: usize) {
    for _ in 0..cases {
        let dim = rng.gen_range(1..=2);
        let vars = rng.gen_range(1..=2);
        let terms = rng.gen_range(1..=3);
        let g: RatDiffPoly = DiffPoly::new(
            dim,
            vars,
            (0..terms).map(|_| {
                (
                    gen_monomial(rng, dim, vars),
                    RatSeries::constant(dim, gen_coeff(rng)),
                )
            }),
        );
        let j = gen_index(rng, dim, 2);
        let h = g.theta(&j);
        let omega: Vec<BoolSeries> = (0..vars).map(|_| BoolSeries::omega(dim)).collect();
        assert_eq!(h.initial_form(&omega), h, "initial form moved a derivative of {g:?}");
    }
}

/// One-variable degeneration: vertex sets are minima, relevancy is the strict
/// order, and the initial form matches the minimal-valuation rule.
pub fn check_m1_degeneration(rng: &mut impl Rng, cases: usize) {
    for _ in 0..cases {
        let pts = gen_points(rng, 1, 5, 9);
        if !pts.is_empty() {
            let min = pts.iter().min().unwrap().clone();
            assert_eq!(newton::vertices(1, &pts), vec![min]);
        }

        let a = gen_vertex_poly_nonzero(rng, 1, 8);
        let b = gen_vertex_poly_nonzero(rng, 1, 8);
        let strict = a.leq(&b) && a != b;
        assert_eq!(a.prec(&b).unwrap(), strict);
        assert_eq!(strict, a.support()[0].get(0) > b.support()[0].get(0));

        let vars = rng.gen_range(1..=2);
        let p = gen_rat_diffpoly(rng, 1, vars);
        let w = gen_weights(rng, 1, vars);
        assert_eq!(
            p.initial_form(&w),
            oracle_initial_form_m1(&p, &w),
            "initial form disagrees with the minimal-valuation rule for {p:?} at {w:?}"
        );
    }
}

/// Staircase fast paths agree with the LP reference path, and both agree with
/// the direction-scan oracle in the plane.
pub fn check_staircase_vs_lp(rng: &mut impl Rng, cases: usize) {
    for _ in 0..cases {
        let dim = rng.gen_range(1..=2);
        let pts = gen_points(rng, dim, 6, 7);
        let fast = newton::vertices(dim, &pts);
        let reference = newton::vertices_via_lp(dim, &pts);
        assert_eq!(fast, reference, "paths disagree on {pts:?}");
        assert_eq!(fast, oracle_vertices_low_dim(dim, &pts));
        for _ in 0..4 {
            let probe = gen_index(rng, dim, 9);
            assert_eq!(
                newton::contains(dim, &pts, &probe),
                newton::contains_via_lp(dim, &pts, &probe)
            );
        }
    }
}

/// The product chain `V(ab) ⊆ 𝒱(Δ_a ⊗ Δ_b) ⊆ A + B`.
pub fn check_inclusion_chain(rng: &mut impl Rng, cases: usize) {
    for _ in 0..cases {
        let dim = rng.gen_range(1..=2);
        let a = gen_vertex_poly_nonzero(rng, dim, 6);
        let b = gen_vertex_poly_nonzero(rng, dim, 6);
        let product = a.odot(&b);
        let middle = newton::minkowski_polytope_vertices(dim, a.support(), b.support());
        let mut sums: Vec<MultiIndex> = a
            .support()
            .iter()
            .flat_map(|u| b.support().iter().map(move |w| u.add(w)))
            .collect();
        sums.sort();
        sums.dedup();
        for v in product.support() {
            assert!(middle.contains(v), "V(ab) ⊄ polytope vertices");
        }
        for v in &middle {
            assert!(sums.contains(v), "polytope vertices ⊄ A+B");
        }
    }
}

/// Support functions: positively homogeneous, subadditive on the positive
/// orthant, and attaining extremes at Newton vertices in negative directions.
pub fn check_support_function(rng: &mut impl Rng, cases: usize) {
    for _ in 0..cases {
        let dim = pick_dim(rng);
        let mut pts = gen_points(rng, dim, 6, 7);
        if pts.is_empty() {
            pts.push(gen_index(rng, dim, 7));
        }
        let x: Vec<i64> = (0..dim).map(|_| rng.gen_range(0..=5)).collect();
        let y: Vec<i64> = (0..dim).map(|_| rng.gen_range(0..=5)).collect();
        let xy: Vec<i64> = x.iter().zip(&y).map(|(a, b)| a + b).collect();
        let phi = |d: &[i64]| newton::support_function(&pts, d).unwrap();
        assert!(phi(&xy) <= phi(&x) + phi(&y));
        let scaled: Vec<i64> = x.iter().map(|v| 3 * v).collect();
        assert_eq!(phi(&scaled), 3 * phi(&x));

        // strictly negative directions are extremized at Newton vertices
        let neg: Vec<i64> = (0..dim).map(|_| -rng.gen_range(1..=5i64)).collect();
        let verts = newton::vertices(dim, &pts);
        assert_eq!(
            newton::support_function(&pts, &neg).unwrap(),
            newton::support_function(&verts, &neg).unwrap()
        );
    }
}

/// Differentiation commutes with evaluation over both coefficient semirings.
pub fn check_commutation(rng: &mut impl Rng, cases: usize) {
    for _ in 0..cases {
        let dim = pick_dim(rng);
        let vars = rng.gen_range(1..=2);
        let i = rng.gen_range(0..dim);
        let e_i = MultiIndex::unit(dim, i);

        let p = gen_bool_diffpoly(rng, dim, vars);
        let a: Vec<BoolSeries> = (0..vars).map(|_| gen_bool_series(rng, dim)).collect();
        assert_eq!(p.derive(i).eval(&a).value, p.eval(&a).value.derive(&e_i));

        let q = gen_rat_diffpoly(rng, dim, vars);
        let b: Vec<RatSeries> = (0..vars).map(|_| gen_series(rng, dim, 3, 4)).collect();
        assert_eq!(q.derive(i).eval(&b).value, q.eval(&b).value.derive(&e_i));
    }
}

/// Initial-term decomposition of a single series.
pub fn check_initial_term_decomposition(rng: &mut impl Rng, cases: usize) {
    for _ in 0..cases {
        let dim = pick_dim(rng);
        let alpha = gen_series_nonzero(rng, dim, 5, 6);
        let lead = alpha.initial_term();
        assert_eq!(lead.add(&alpha.sub(&lead)), alpha);
        assert_eq!(lead.trop(), alpha.trop());
        let rest = alpha.sub(&lead);
        if !rest.is_zero() {
            let disjoint = rest
                .trop()
                .support()
                .iter()
                .all(|i| !alpha.trop().support().contains(i));
            if disjoint {
                assert!(rest.trop().prec(&alpha.trop()).unwrap());
            }
        }
    }
}

/// Fraction-semifield laws: idempotent sum, unit, scaling invariance, order
/// coherence, and closure of the integers under both operations.
pub fn check_frac_laws(rng: &mut impl Rng, cases: usize) {
    use tropdiff::VertexFraction;
    for _ in 0..cases {
        let dim = rng.gen_range(1..=2);
        let p = VertexFraction::new(
            gen_vertex_poly(rng, dim, 5),
            gen_vertex_poly_nonzero(rng, dim, 5),
        )
        .unwrap();
        let q = VertexFraction::new(
            gen_vertex_poly(rng, dim, 5),
            gen_vertex_poly_nonzero(rng, dim, 5),
        )
        .unwrap();
        assert_eq!(p.add(&p), p);
        assert_eq!(p.mul(&VertexFraction::one(dim)), p);

        // scaling both components leaves the class unchanged
        let c = gen_vertex_poly_nonzero(rng, dim, 4);
        let scaled = VertexFraction::new(p.num().odot(&c), p.den().odot(&c)).unwrap();
        assert_eq!(scaled, p);
        assert_eq!(p.leq(&q), p.add(&q) == q);

        if p.is_integer() && q.is_integer() {
            assert!(p.add(&q).is_integer());
            assert!(p.mul(&q).is_integer());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_matches_known_vertex_sets() {
        let mi = |v: &[u32]| MultiIndex::new(v.to_vec());
        let pts = vec![
            mi(&[0, 4]),
            mi(&[1, 3]),
            mi(&[3, 1]),
            mi(&[5, 0]),
            mi(&[2, 3]),
        ];
        assert_eq!(
            oracle_vertices_low_dim(2, &pts),
            vec![mi(&[0, 4]), mi(&[3, 1]), mi(&[5, 0])]
        );
        assert_eq!(
            oracle_vertices_low_dim(1, &[mi(&[3]), mi(&[1])]),
            vec![mi(&[1])]
        );
    }

    #[test]
    fn smoke_each_property_once() {
        let mut r = rng();
        check_lattice_laws(&mut r, 3);
        check_vert_idempotent(&mut r, 3);
        check_solution_equivalence(&mut r, 3);
        check_m1_degeneration(&mut r, 3);
    }

    #[test]
    fn irrelevant_generator_is_sound() {
        let mut r = rng_for("irrelevant");
        for _ in 0..50 {
            let b = gen_vertex_poly_nonzero(&mut r, 2, 4);
            if let Some(a) = gen_irrelevant_below(&mut r, &b) {
                assert!(a.prec(&b).unwrap());
            }
        }
    }
}
