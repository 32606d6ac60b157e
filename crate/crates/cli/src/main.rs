//! Command-line surface for the tropdiff library: parsing the text grammar,
//! dispatching computations, JSON output, and SVG staircase plots.

mod svg;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tropdiff::parse;
use tropdiff::{
    BoolSeries, Error, Rat, RatFracDiffPoly, RatSeries, VertexFraction, VertexPolynomial,
};

#[derive(Parser)]
#[command(
    name = "tropdiff",
    version,
    about = "Exact tropical differential algebra: vertex polynomials, Newton polyhedra, \
             tropical differential equations"
)]
struct Cli {
    /// Number of series variables t1..tm.
    #[arg(long, global = true)]
    m: Option<usize>,
    /// Number of differential indeterminates x1..xn.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Emit JSON where the default is canonical text.
    #[arg(long, global = true)]
    json: bool,
    /// Use the short variable aliases (t,u,v and x,y) in text output.
    #[arg(long, global = true)]
    pretty: bool,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for batched inputs.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, ValueEnum, Default)]
enum Kind {
    #[default]
    Rat,
    Bool,
    Vertex,
}

#[derive(Clone, Copy, PartialEq, ValueEnum, Default)]
enum CmpKind {
    #[default]
    Vertex,
    Frac,
}

#[derive(Subcommand)]
enum Cmd {
    /// Vertex set of the Newton polyhedron of a series.
    Vert {
        #[arg(required = true)]
        inputs: Vec<String>,
        /// Treat inputs as boolean series (generator-set JSON allowed).
        #[arg(long = "bool")]
        boolean: bool,
    },
    /// Sum of two series or vertex polynomials.
    Add {
        a: String,
        b: String,
        #[arg(long, value_enum, default_value_t)]
        kind: Kind,
    },
    /// Product of two series or vertex polynomials.
    Mul {
        a: String,
        b: String,
        #[arg(long, value_enum, default_value_t)]
        kind: Kind,
    },
    /// Apply the partial-derivative action of a derivative order.
    Deriv {
        #[arg(required = true)]
        inputs: Vec<String>,
        /// Derivative order, e.g. (1,0).
        #[arg(long)]
        by: String,
        #[arg(long = "bool")]
        boolean: bool,
    },
    /// Evaluate a differential polynomial at a coefficient vector.
    Eval {
        poly: String,
        /// One series per indeterminate.
        #[arg(long = "at", required = true)]
        at: Vec<String>,
        #[arg(long = "bool")]
        boolean: bool,
    },
    /// Check a candidate support vector against a tropical differential equation.
    Check {
        poly: String,
        /// One boolean series per indeterminate.
        #[arg(long, required = true)]
        candidate: Vec<String>,
    },
    /// Weighted tropicalization of a differential polynomial.
    Tropw {
        poly: String,
        #[arg(long, required = true)]
        weight: Vec<String>,
    },
    /// Initial form of a differential polynomial at a weight vector.
    Initial {
        poly: String,
        #[arg(long, required = true)]
        weight: Vec<String>,
    },
    /// Translate a differential polynomial by a weight vector.
    Translate {
        poly: String,
        #[arg(long, required = true)]
        weight: Vec<String>,
    },
    /// Compare two vertex polynomials or fractions.
    Cmp {
        a: String,
        b: String,
        #[arg(long, value_enum, default_value_t)]
        kind: CmpKind,
    },
    /// Membership of a lattice point in a set or its Newton polyhedron.
    Member {
        #[arg(long)]
        set: String,
        /// Lattice point, e.g. (1,1).
        #[arg(long)]
        point: String,
        /// Test the Newton polyhedron instead of the set itself.
        #[arg(long)]
        newton: bool,
    },
    /// SVG staircase plot of a two-variable support.
    Plot {
        input: String,
        /// Plot window (lattice points 0..=window on both axes).
        #[arg(long)]
        window: Option<u32>,
    },
}

struct Failure {
    msg: String,
    code: i32,
}

type CliResult<T> = Result<T, Failure>;

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Syntax { .. } => 2,
            Error::DimensionMismatch { .. } => 3,
            _ => 1,
        };
        Failure {
            msg: e.to_string(),
            code,
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            msg: e.to_string(),
            code: 1,
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(lines) => {
            let mut text = lines.join("\n");
            if !text.ends_with('\n') {
                text.push('\n');
            }
            match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, text) {
                        eprintln!("error: {e}");
                        std::process::exit(1);
                    }
                }
                None => print!("{text}"),
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.msg);
            std::process::exit(f.code);
        }
    }
}

/// Resolve an argument that may be inline text, `@path`, or a bare path of an
/// existing file.
fn read_arg(arg: &str) -> CliResult<String> {
    if let Some(path) = arg.strip_prefix('@') {
        return Ok(std::fs::read_to_string(path)?);
    }
    if Path::new(arg).is_file() {
        return Ok(std::fs::read_to_string(arg)?);
    }
    Ok(arg.to_string())
}

fn parse_json_value(text: &str) -> CliResult<Value> {
    serde_json::from_str(text).map_err(|e| Failure {
        msg: format!("invalid JSON: {e}"),
        code: 2,
    })
}

fn looks_like_json(text: &str) -> bool {
    matches!(text.trim_start().chars().next(), Some('{') | Some('['))
}

/// Boolean series: generator-set JSON, the `omega` keyword, or series text.
fn bool_input(arg: &str, m: Option<usize>) -> CliResult<(BoolSeries, usize)> {
    let text = read_arg(arg)?;
    if looks_like_json(&text) {
        let v = parse_json_value(&text)?;
        let b = BoolSeries::from_json(&v, m)?;
        let dim = b.dim();
        Ok((b, dim))
    } else {
        Ok(parse::parse_bool_series(&text, m)?)
    }
}

/// Rational series: series JSON or series text.
fn series_input(arg: &str, m: Option<usize>) -> CliResult<(RatSeries, usize)> {
    let text = read_arg(arg)?;
    if looks_like_json(&text) {
        let v = parse_json_value(&text)?;
        Ok(RatSeries::from_json(&v, m)?)
    } else {
        Ok(parse::parse_series(&text, m)?)
    }
}

/// Vertex polynomial: sorted JSON array, or series text tropicalized.
fn vertex_input(arg: &str, m: Option<usize>) -> CliResult<VertexPolynomial> {
    let text = read_arg(arg)?;
    if looks_like_json(&text) {
        let v = parse_json_value(&text)?;
        Ok(VertexPolynomial::from_json(&v, m)?)
    } else {
        Ok(parse::parse_series::<Rat>(&text, m)?.0.trop())
    }
}

/// Vertex fraction: `{"num": [...], "den": [...]}` JSON, or a constant
/// fraction expression like `(t+u)/(t^2)`, tropicalized.
fn fraction_input(arg: &str, m: Option<usize>) -> CliResult<VertexFraction> {
    let text = read_arg(arg)?;
    if looks_like_json(&text) {
        let v = parse_json_value(&text)?;
        let obj = v.as_object().ok_or(Failure {
            msg: "expected a {num, den} object".into(),
            code: 2,
        })?;
        let num =
            VertexPolynomial::from_json(obj.get("num").unwrap_or(&Value::Null), m)?;
        let den = VertexPolynomial::from_json(
            obj.get("den").unwrap_or(&Value::Null),
            Some(num.dim()),
        )?;
        Ok(VertexFraction::new(num, den)?)
    } else {
        let (p, _, _) = parse::parse_diffpoly::<Rat>(&text, m, Some(0))?;
        match p.terms() {
            [(mono, c)] if mono.is_one() => Ok(c.trop_frac()),
            _ => Err(Failure {
                msg: "expected a constant fraction expression".into(),
                code: 2,
            }),
        }
    }
}

fn diffpoly_input(
    arg: &str,
    m: Option<usize>,
    n: Option<usize>,
) -> CliResult<(RatFracDiffPoly, usize, usize)> {
    let text = read_arg(arg)?;
    Ok(parse::parse_diffpoly::<Rat>(&text, m, n)?)
}

fn expect_count(what: &str, expected: usize, found: usize) -> CliResult<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Failure {
            msg: format!("expected {expected} {what}, found {found}"),
            code: 3,
        })
    }
}

fn weights_input(args: &[String], m: usize, n: usize) -> CliResult<Vec<BoolSeries>> {
    expect_count("weights", n, args.len())?;
    args.iter()
        .map(|w| bool_input(w, Some(m)).map(|(b, _)| b))
        .collect()
}

fn to_json_line(v: &Value) -> String {
    serde_json::to_string(v).expect("json serialization")
}

fn eval_report(
    per_term: &[(tropdiff::DiffMonomial, Value)],
    value: Value,
    n: usize,
    pretty: bool,
) -> Value {
    let per: Vec<Value> = per_term
        .iter()
        .map(|(mono, v)| json!({ "monomial": mono.to_text(n, pretty), "value": v }))
        .collect();
    json!({ "value": value, "per_term": per })
}

/// Map inputs to output lines, optionally across worker threads; results stay
/// in input order.
fn run_batch(
    inputs: &[String],
    jobs: usize,
    f: impl Fn(&str) -> CliResult<String> + Sync,
) -> CliResult<Vec<String>> {
    if jobs <= 1 || inputs.len() <= 1 {
        return inputs.iter().map(|i| f(i)).collect();
    }
    let mut results: Vec<Option<CliResult<String>>> = Vec::new();
    results.resize_with(inputs.len(), || None);
    let next = std::sync::atomic::AtomicUsize::new(0);
    let slots = std::sync::Mutex::new(&mut results);
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(inputs.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                if i >= inputs.len() {
                    break;
                }
                let r = f(&inputs[i]);
                slots.lock().unwrap()[i] = Some(r);
            });
        }
    });
    results
        .into_iter()
        .map(|r| r.expect("every input processed"))
        .collect()
}

fn run(cli: &Cli) -> CliResult<Vec<String>> {
    match &cli.cmd {
        Cmd::Vert { inputs, boolean } => run_batch(inputs, cli.jobs, |arg| {
            let vp = if *boolean {
                bool_input(arg, cli.m)?.0.vertex_poly()
            } else {
                series_input(arg, cli.m)?.0.trop()
            };
            Ok(to_json_line(&vp.to_json()))
        }),

        Cmd::Add { a, b, kind } | Cmd::Mul { a, b, kind } => {
            let product = matches!(cli.cmd, Cmd::Mul { .. });
            match kind {
                Kind::Rat => {
                    let (x, m) = series_input(a, cli.m)?;
                    let (y, _) = series_input(b, Some(m))?;
                    let r = if product { x.mul(&y) } else { x.add(&y) };
                    Ok(vec![if cli.json {
                        to_json_line(&r.to_json())
                    } else {
                        r.to_text(cli.pretty)
                    }])
                }
                Kind::Bool => {
                    let (x, m) = bool_input(a, cli.m)?;
                    let (y, _) = bool_input(b, Some(m))?;
                    let r = if product { x.mul(&y) } else { x.add(&y) };
                    Ok(vec![to_json_line(&r.to_json())])
                }
                Kind::Vertex => {
                    let x = vertex_input(a, cli.m)?;
                    let y = vertex_input(b, Some(x.dim()))?;
                    let r = if product { x.odot(&y) } else { x.oplus(&y) };
                    Ok(vec![to_json_line(&r.to_json())])
                }
            }
        }

        Cmd::Deriv {
            inputs,
            by,
            boolean,
        } => run_batch(inputs, cli.jobs, |arg| {
            if *boolean {
                let (s, m) = bool_input(arg, cli.m)?;
                let j = parse::parse_multi_index(by, Some(m))?;
                Ok(to_json_line(&s.derive(&j).to_json()))
            } else {
                let (s, m) = series_input(arg, cli.m)?;
                let j = parse::parse_multi_index(by, Some(m))?;
                let r = s.derive(&j);
                Ok(if cli.json {
                    to_json_line(&r.to_json())
                } else {
                    r.to_text(cli.pretty)
                })
            }
        }),

        Cmd::Eval { poly, at, boolean } => {
            if *boolean {
                let text = read_arg(poly)?;
                let (p, m, n) = parse::parse_bool_diffpoly(&text, cli.m, cli.n)?;
                expect_count("coefficient series", n, at.len())?;
                let a = at
                    .iter()
                    .map(|s| bool_input(s, Some(m)).map(|(b, _)| b))
                    .collect::<CliResult<Vec<_>>>()?;
                let eval = p.eval(&a);
                let per: Vec<(tropdiff::DiffMonomial, Value)> = eval
                    .per_term
                    .iter()
                    .map(|(mono, v)| (mono.clone(), v.to_json()))
                    .collect();
                Ok(vec![to_json_line(&eval_report(
                    &per,
                    eval.value.to_json(),
                    n,
                    cli.pretty,
                ))])
            } else {
                let (p, m, n) = diffpoly_input(poly, cli.m, cli.n)?;
                let p = p.to_series_poly().ok_or(Failure {
                    msg: "evaluation needs series coefficients, not fractions".into(),
                    code: 2,
                })?;
                expect_count("coefficient series", n, at.len())?;
                let a = at
                    .iter()
                    .map(|s| series_input(s, Some(m)).map(|(x, _)| x))
                    .collect::<CliResult<Vec<_>>>()?;
                let eval = p.eval(&a);
                let per: Vec<(tropdiff::DiffMonomial, Value)> = eval
                    .per_term
                    .iter()
                    .map(|(mono, v)| (mono.clone(), v.to_json()))
                    .collect();
                Ok(vec![to_json_line(&eval_report(
                    &per,
                    eval.value.to_json(),
                    n,
                    cli.pretty,
                ))])
            }
        }

        Cmd::Check { poly, candidate } => {
            let text = read_arg(poly)?;
            let (p, m, n) = parse::parse_bool_diffpoly(&text, cli.m, cli.n)?;
            expect_count("candidates", n, candidate.len())?;
            let a = candidate
                .iter()
                .map(|s| bool_input(s, Some(m)).map(|(b, _)| b))
                .collect::<CliResult<Vec<_>>>()?;
            let check = p.check_solution(&a);
            Ok(vec![to_json_line(&check.to_json())])
        }

        Cmd::Tropw { poly, weight } => {
            let (p, m, n) = diffpoly_input(poly, cli.m, cli.n)?;
            let w = weights_input(weight, m, n)?;
            let line = match p.to_series_poly() {
                Some(series_poly) => to_json_line(&series_poly.trop_w(&w).to_json()),
                None => to_json_line(&p.trop_w_frac(&w).to_json()),
            };
            Ok(vec![line])
        }

        Cmd::Initial { poly, weight } => {
            let (p, m, n) = diffpoly_input(poly, cli.m, cli.n)?;
            let w = weights_input(weight, m, n)?;
            let line = match p.to_series_poly() {
                Some(series_poly) => series_poly.initial_form(&w).to_text(cli.pretty),
                None => p.initial_form_frac(&w).to_text(cli.pretty),
            };
            Ok(vec![line])
        }

        Cmd::Translate { poly, weight } => {
            let (p, m, n) = diffpoly_input(poly, cli.m, cli.n)?;
            let w = weights_input(weight, m, n)?;
            Ok(vec![p.translate(&w).to_text(cli.pretty)])
        }

        Cmd::Cmp { a, b, kind } => {
            let result = match kind {
                CmpKind::Vertex => {
                    let x = vertex_input(a, cli.m)?;
                    let y = vertex_input(b, Some(x.dim()))?;
                    json!({
                        "eq": x == y,
                        "leq": x.leq(&y),
                        "geq": y.leq(&x),
                        "prec": x.prec(&y).ok(),
                        "prec_rev": y.prec(&x).ok(),
                    })
                }
                CmpKind::Frac => {
                    let x = fraction_input(a, cli.m)?;
                    let y = fraction_input(b, Some(x.dim()))?;
                    json!({
                        "eq": x == y,
                        "leq": x.leq(&y),
                        "geq": y.leq(&x),
                        "prec": x.prec(&y).ok(),
                        "prec_rev": y.prec(&x).ok(),
                        "integer": [x.is_integer(), y.is_integer()],
                    })
                }
            };
            Ok(vec![to_json_line(&result)])
        }

        Cmd::Member { set, point, newton } => {
            let (s, m) = bool_input(set, cli.m)?;
            let p = parse::parse_multi_index(point, Some(m))?;
            let contains = if *newton {
                tropdiff::newton::contains(m, &s.carrier().generators(), &p)
            } else {
                s.contains(&p)
            };
            Ok(vec![to_json_line(&json!({ "contains": contains }))])
        }

        Cmd::Plot { input, window } => {
            let (s, m) = bool_input(input, cli.m)?;
            if m != 2 {
                return Err(Error::DimensionMismatch {
                    expected: 2,
                    found: m,
                }
                .into());
            }
            Ok(vec![svg::render(s.carrier(), *window)])
        }
    }
}
