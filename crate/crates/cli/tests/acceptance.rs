//! Acceptance suite: one test per criterion, each ending with a printed
//! pass line (run with `-- --nocapture` to see them). Criteria cover the
//! worked examples end to end, the randomized property bundle, the
//! one-variable degeneration, and the CLI surface.

use std::process::Command;
use std::time::Instant;

use tropdiff::parse::{parse_bool_diffpoly, parse_bool_series, parse_diffpoly, parse_series};
use tropdiff::{newton, MultiIndex, Rat, VertexPolynomial};
use tropdiff_testkit as tk;

fn mi(v: &[u32]) -> MultiIndex {
    MultiIndex::new(v.to_vec())
}

fn vp(vs: &[&[u32]]) -> VertexPolynomial {
    let dim = vs.first().map(|v| v.len()).unwrap_or(2);
    VertexPolynomial::new(dim, vs.iter().map(|v| mi(v)).collect()).unwrap()
}

fn fixture(name: &str) -> String {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

fn tropdiff(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_tropdiff"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn example_product_inputs() -> (VertexPolynomial, VertexPolynomial) {
    (
        vp(&[&[2, 3], &[3, 1], &[5, 0]]),
        vp(&[&[0, 4], &[1, 3], &[4, 2]]),
    )
}

#[test]
fn criterion_1_product_of_vertex_polynomials() {
    let start = Instant::now();
    let (a, b) = example_product_inputs();
    assert_eq!(
        a.odot(&b),
        vp(&[&[2, 7], &[3, 5], &[4, 4], &[6, 3], &[9, 2]])
    );
    assert!(start.elapsed().as_secs_f64() < 1.0, "product too slow");
    println!("acceptance criterion 1 (vertex product): PASS");
}

#[test]
fn criterion_2_minkowski_polytope_vertices_and_sum_discrepancy() {
    let (a, b) = example_product_inputs();

    // vertices of the Minkowski sum of the two Newton polytopes: the product
    // value plus the extra polytope vertex (6,5), which is not minimal in the
    // polyhedron sense
    let middle = newton::minkowski_polytope_vertices(2, a.support(), b.support());
    assert_eq!(
        middle,
        vec![
            mi(&[2, 7]),
            mi(&[3, 5]),
            mi(&[4, 4]),
            mi(&[6, 3]),
            mi(&[6, 5]),
            mi(&[9, 2])
        ]
    );

    // inclusion chain: V(ab) ⊆ 𝒱(Δ_a ⊗ Δ_b) ⊆ A + B
    let product = a.odot(&b);
    let mut sums: Vec<MultiIndex> = a
        .support()
        .iter()
        .flat_map(|u| b.support().iter().map(move |w| u.add(w)))
        .collect();
    sums.sort();
    sums.dedup();
    assert!(product.support().iter().all(|v| middle.contains(v)));
    assert!(middle.iter().all(|v| sums.contains(v)));

    // the sum A ⊕ B, certified by the LP oracle and the direction scan.
    // A transposed variant {(0,4),(1,3),(5,0)} circulates for this example;
    // it is wrong: (1,3) lies on the segment from (0,4) to (3,1), so it is
    // not a vertex, while (3,1) lies strictly below the segment from (1,3)
    // to (5,0), so it is one.
    let sum = a.oplus(&b);
    let oracle_value = vp(&[&[0, 4], &[3, 1], &[5, 0]]);
    assert_eq!(sum, oracle_value);
    let mut union: Vec<MultiIndex> = a.support().to_vec();
    union.extend(b.support().iter().cloned());
    assert_eq!(
        newton::vertices_via_lp(2, &union),
        oracle_value.support().to_vec()
    );
    assert_eq!(
        tk::oracle_vertices_low_dim(2, &union),
        oracle_value.support().to_vec()
    );
    let transposed = vp(&[&[0, 4], &[1, 3], &[5, 0]]);
    assert_ne!(sum, transposed);

    println!("acceptance criterion 2 (Minkowski polytope vertices, sum oracle): PASS");
}

#[test]
fn criterion_3_three_term_example_is_a_solution() {
    let (p, _, _) =
        parse_bool_diffpoly(&fixture("ex_solution_poly.txt"), Some(2), Some(1)).unwrap();
    let (a, _) = parse_bool_series(&fixture("ex_solution_candidate.txt"), Some(2)).unwrap();
    let check = p.check_solution(&[a]);
    assert!(check.solution);
    assert_eq!(check.vertex_set, vp(&[&[2, 0], &[1, 1], &[0, 3]]));
    assert_eq!(check.witnesses[&mi(&[2, 0])], vec![1, 3]);
    assert_eq!(check.witnesses[&mi(&[1, 1])], vec![1, 2]);
    assert_eq!(check.witnesses[&mi(&[0, 3])], vec![2, 3]);
    println!("acceptance criterion 3 (three-term example end to end): PASS");
}

#[test]
fn criterion_4_two_variable_worked_example() {
    let start = Instant::now();
    let (p, _, _) =
        parse_bool_diffpoly(&fixture("worked_example_poly.txt"), Some(2), Some(2)).unwrap();
    let (a1, _) = parse_bool_series(&fixture("worked_example_a1.txt"), Some(2)).unwrap();
    let (a2, _) = parse_bool_series(&fixture("worked_example_a2.txt"), Some(2)).unwrap();

    // expected per-term values, assembled from their factored forms
    let b = |text: &str| parse_bool_series(text, Some(2)).unwrap().0;
    let bullet1 = b("t + u")
        .mul(&a1)
        .mul(&b("t + t^2*u").mul(&b("t + t^2*u")).mul(&b("t + t^2*u")));
    let bullet2 = b("1 + t^2*u^2").mul(&b("1 + u + t")).mul(&b("t + u^2"));
    let bullet3 = b("t^3*u^2").mul(&b("1 + t*u + t^2*u^2"));

    let eval = p.eval(&[a1, a2]);
    assert_eq!(eval.per_term.len(), 3);
    assert_eq!(eval.per_term[0].1, bullet1);
    assert_eq!(eval.per_term[1].1, bullet2);
    assert_eq!(eval.per_term[2].1, bullet3);

    let check = p.check_solution(&[
        parse_bool_series(&fixture("worked_example_a1.txt"), Some(2)).unwrap().0,
        parse_bool_series(&fixture("worked_example_a2.txt"), Some(2)).unwrap().0,
    ]);
    assert_eq!(check.vertex_set, vp(&[&[1, 0], &[0, 2]]));
    assert!(!check.solution);
    assert_eq!(check.witnesses[&mi(&[1, 0])], vec![2]);
    assert_eq!(check.witnesses[&mi(&[0, 2])], vec![2]);

    assert!(start.elapsed().as_secs_f64() < 1.0, "worked example too slow");
    println!("acceptance criterion 4 (two-variable worked example): PASS");
}

#[test]
fn criterion_5_solution_not_preserved_by_derivative() {
    let (p, _, _) =
        parse_bool_diffpoly(&fixture("derivative_poly.txt"), Some(2), Some(1)).unwrap();
    let (a, _) = parse_bool_series(&fixture("derivative_candidate.txt"), Some(2)).unwrap();
    let before = p.check_solution(std::slice::from_ref(&a));
    let after = p.derive(0).check_solution(&[a]);
    assert!(before.solution);
    assert!(!after.solution);
    println!("acceptance criterion 5 (derivative breaks the solution): PASS");
}

#[test]
fn criterion_6_property_suite() {
    let cases = 500;
    let start = Instant::now();
    let run = |label: &str, f: fn(&mut tk::ChaCha8Rng, usize)| {
        let mut rng = tk::rng_for(label);
        f(&mut rng, cases);
    };
    run("vert-idempotent", tk::check_vert_idempotent);
    run("hereditary", tk::check_hereditary);
    run("minimal-spanning", tk::check_minimal_spanning);
    run("semiring-axioms", tk::check_semiring_axioms);
    run("cancellativity", tk::check_cancellativity);
    run("order-dual", tk::check_order_dual);
    run("relevancy", tk::check_relevancy_calculus);
    run("tilde-grid", tk::check_tilde_grid);
    run("trop-valuation", tk::check_trop_valuation);
    run("appendix-supports", tk::check_appendix_supports);
    run("sp-theta", tk::check_sp_theta);
    run("solution-equivalence", tk::check_solution_equivalence);
    run("initial-decomposition", tk::check_initial_decomposition);
    run("translation-integrality", tk::check_translation_integrality);
    run("tropical-basis-omega", tk::check_tropical_basis_omega);
    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 60.0, "property suite took {elapsed:.1}s");
    println!(
        "acceptance criterion 6 (property suite, {cases} cases each, seed {}): PASS in {elapsed:.1}s",
        tk::seed()
    );
}

#[test]
fn criterion_7_one_variable_degeneration() {
    let mut rng = tk::rng_for("m1-degeneration");
    tk::check_m1_degeneration(&mut rng, 200);
    println!("acceptance criterion 7 (one-variable degeneration, 200 cases): PASS");
}

#[test]
fn criterion_8_cli_round_trip_determinism_and_plots() {
    // text fixtures round-trip through parse and canonical print
    for name in ["ex_solution_poly.txt", "worked_example_poly.txt", "derivative_poly.txt", "fraction_poly.txt"] {
        let text = fixture(name);
        let (p, m, n) = parse_diffpoly::<Rat>(&text, None, None).unwrap();
        let printed = p.to_text(false);
        let (q, _, _) = parse_diffpoly::<Rat>(&printed, Some(m), Some(n)).unwrap();
        assert_eq!(p, q, "round trip failed for {name}");
        assert_eq!(printed, q.to_text(false));
    }
    for name in [
        "ex_solution_candidate.txt",
        "worked_example_a1.txt",
        "worked_example_a2.txt",
        "derivative_candidate.txt",
        "series_mixed.txt",
    ] {
        let text = fixture(name);
        let (s, m) = parse_series::<Rat>(&text, None).unwrap();
        let printed = s.to_text(false);
        let (back, _) = parse_series::<Rat>(&printed, Some(m)).unwrap();
        assert_eq!(s, back, "round trip failed for {name}");
        assert_eq!(printed, back.to_text(false));
    }

    // byte determinism of full CLI runs over the fixture corpus
    let dir = format!("{}/tests/fixtures", env!("CARGO_MANIFEST_DIR"));
    let invocations: Vec<Vec<String>> = vec![
        vec![
            "check".into(),
            format!("@{dir}/ex_solution_poly.txt"),
            "--candidate".into(),
            format!("@{dir}/ex_solution_candidate.txt"),
        ],
        vec![
            "check".into(),
            format!("@{dir}/worked_example_poly.txt"),
            "--candidate".into(),
            format!("@{dir}/worked_example_a1.txt"),
            "--candidate".into(),
            format!("@{dir}/worked_example_a2.txt"),
        ],
        vec![
            "eval".into(),
            format!("@{dir}/worked_example_poly.txt"),
            "--bool".into(),
            "--at".into(),
            format!("@{dir}/worked_example_a1.txt"),
            "--at".into(),
            format!("@{dir}/worked_example_a2.txt"),
        ],
        vec![
            "vert".into(),
            format!("@{dir}/ex_solution_candidate.txt"),
            format!("@{dir}/series_mixed.txt"),
            "--m".into(),
            "2".into(),
        ],
        vec![
            "mul".into(),
            format!("@{dir}/product_a.json"),
            format!("@{dir}/product_b.json"),
            "--kind".into(),
            "vertex".into(),
        ],
        vec![
            "cmp".into(),
            format!("@{dir}/integer_fraction.txt"),
            format!("@{dir}/nonintegral_fraction.txt"),
            "--kind".into(),
            "frac".into(),
            "--m".into(),
            "2".into(),
        ],
        vec![
            "initial".into(),
            format!("@{dir}/fraction_poly.txt"),
            "--weight".into(),
            "omega".into(),
        ],
        vec![
            "translate".into(),
            format!("@{dir}/fraction_poly.txt"),
            "--weight".into(),
            "omega".into(),
        ],
    ];
    for args in &invocations {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let first = tropdiff(&args);
        let second = tropdiff(&args);
        assert!(
            first.status.success(),
            "{args:?} failed: {}",
            String::from_utf8_lossy(&first.stderr)
        );
        assert_eq!(first.stdout, second.stdout, "nondeterministic: {args:?}");
    }

    // spot-check two outcomes against the worked examples
    let check = tropdiff(&[
        "check",
        &format!("@{dir}/ex_solution_poly.txt"),
        "--candidate",
        &format!("@{dir}/ex_solution_candidate.txt"),
    ]);
    let v: serde_json::Value = serde_json::from_slice(&check.stdout).unwrap();
    assert_eq!(v["solution"], serde_json::json!(true));
    let check = tropdiff(&[
        "check",
        &format!("@{dir}/worked_example_poly.txt"),
        "--candidate",
        &format!("@{dir}/worked_example_a1.txt"),
        "--candidate",
        &format!("@{dir}/worked_example_a2.txt"),
    ]);
    let v: serde_json::Value = serde_json::from_slice(&check.stdout).unwrap();
    assert_eq!(v["solution"], serde_json::json!(false));
    assert_eq!(v["vertex_set"], serde_json::json!([[0, 2], [1, 0]]));

    // plots of both configurations are well-formed SVG
    let eightytwo_value = {
        let (p, _, _) =
            parse_bool_diffpoly(&fixture("worked_example_poly.txt"), Some(2), Some(2)).unwrap();
        let (a1, _) = parse_bool_series(&fixture("worked_example_a1.txt"), Some(2)).unwrap();
        let (a2, _) = parse_bool_series(&fixture("worked_example_a2.txt"), Some(2)).unwrap();
        serde_json::to_string(&p.eval(&[a1, a2]).value.to_json()).unwrap()
    };
    for input in [fixture("ex_solution_candidate.txt"), eightytwo_value] {
        let out = tropdiff(&["plot", &input, "--m", "2"]);
        assert!(out.status.success());
        let svg = String::from_utf8(out.stdout).unwrap();
        assert_valid_svg(&svg);
    }

    println!("acceptance criterion 8 (CLI round trip, determinism, plots): PASS");
}

/// Minimal well-formedness scan: one root element, balanced tags, quoted
/// attributes (every element here is either self-closing or the svg root).
fn assert_valid_svg(svg: &str) {
    assert!(svg.starts_with("<svg "), "missing svg root");
    assert!(svg.contains(r#"xmlns="http://www.w3.org/2000/svg""#));
    let mut stack: Vec<String> = Vec::new();
    let mut rest = svg;
    while let Some(open) = rest.find('<') {
        rest = &rest[open + 1..];
        let end = rest.find('>').expect("unterminated tag");
        let tag = &rest[..end];
        rest = &rest[end + 1..];
        if let Some(name) = tag.strip_prefix('/') {
            assert_eq!(stack.pop().as_deref(), Some(name), "mismatched close");
        } else if !tag.ends_with('/') {
            let name: String = tag.chars().take_while(|c| c.is_ascii_alphanumeric()).collect();
            stack.push(name);
        }
        // attribute quotes must be balanced within the tag
        assert!(tag.matches('"').count().is_multiple_of(2), "unbalanced quotes");
    }
    assert!(stack.is_empty(), "unclosed tags: {stack:?}");
}
