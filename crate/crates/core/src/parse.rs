//! Text grammar for series and differential polynomials.
//!
//! Series are sums of terms `c*t1^a1*...*tm^am` with rational coefficients
//! `p/q`; for `m <= 3` the aliases `t,u,v` are accepted. Differential
//! polynomials use indeterminates `x1[(j1,...,jm)]^e` (aliases `x,y` for
//! `n <= 2`) with parenthesized series coefficients and fraction coefficients
//! written `(num)/(den)`. Ambient dimensions are taken from the caller or
//! inferred from the highest variable index and the derivative-order lengths.

use std::collections::BTreeMap;

use crate::diffpoly::{DiffMonomial, DiffPoly};
use crate::error::{Error, Result};
use crate::multi_index::MultiIndex;
use crate::scalar::{from_nat, Scalar};
use crate::series::{BoolSeries, Series, SeriesFraction};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Eof,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn err_at<T>(line: usize, col: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Syntax {
        line,
        col,
        msg: msg.into(),
    })
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tline, tcol) = (line, col);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            chars.next();
            col += 1;
        };
        match c {
            '\n' => {
                chars.next();
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => bump(&mut chars),
            '0'..='9' => {
                let mut value: u64 = 0;
                while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                    value = value
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(d as u64))
                        .ok_or(Error::Syntax {
                            line: tline,
                            col: tcol,
                            msg: "integer literal too large".into(),
                        })?;
                    bump(&mut chars);
                }
                out.push(Token {
                    tok: Tok::Int(value),
                    line: tline,
                    col: tcol,
                });
            }
            c if c.is_ascii_alphabetic() => {
                let mut name = String::new();
                while let Some(&a) = chars.peek() {
                    if a.is_ascii_alphanumeric() || a == '_' {
                        name.push(a);
                        bump(&mut chars);
                    } else {
                        break;
                    }
                }
                out.push(Token {
                    tok: Tok::Ident(name),
                    line: tline,
                    col: tcol,
                });
            }
            _ => {
                let tok = match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '^' => Tok::Caret,
                    '/' => Tok::Slash,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    '[' => Tok::LBracket,
                    ']' => Tok::RBracket,
                    ',' => Tok::Comma,
                    other => {
                        return err_at(tline, tcol, format!("unexpected character '{other}'"))
                    }
                };
                bump(&mut chars);
                out.push(Token {
                    tok,
                    line: tline,
                    col: tcol,
                });
            }
        }
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        col,
    });
    Ok(out)
}

/// One parsed series term: an exact coefficient and a sparse exponent map.
struct RawTerm<Q> {
    coeff: Q,
    exps: BTreeMap<usize, u32>,
}

type RawSeries<Q> = Vec<RawTerm<Q>>;

/// One parsed differential-polynomial term before dimension resolution.
/// Coefficient factors stay unexpanded so boolean and rational builds can
/// multiply in their own arithmetic.
struct RawDiffTerm<Q> {
    num_factors: Vec<RawSeries<Q>>,
    den_factors: Vec<RawSeries<Q>>,
    mono: Vec<((usize, Vec<u32>), u32)>,
}

struct Parser<'a, Q> {
    toks: &'a [Token],
    pos: usize,
    j_len: Option<usize>,
    max_tvar: usize,
    max_xvar: usize,
    series_alias: Option<(usize, usize)>,
    var_alias: Option<(usize, usize)>,
    first_fraction: Option<(usize, usize)>,
    _marker: std::marker::PhantomData<Q>,
}

impl<'a, Q: Scalar> Parser<'a, Q> {
    fn new(toks: &'a [Token]) -> Self {
        Parser {
            toks,
            pos: 0,
            j_len: None,
            max_tvar: 0,
            max_xvar: 0,
            series_alias: None,
            var_alias: None,
            first_fraction: None,
            _marker: std::marker::PhantomData,
        }
    }

    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<Token> {
        let t = self.next();
        if t.tok == tok {
            Ok(t)
        } else {
            err_at(t.line, t.col, format!("expected {what}"))
        }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if &self.peek().tok == tok {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_eof(&self) -> Result<()> {
        let t = self.peek();
        if t.tok == Tok::Eof {
            Ok(())
        } else {
            err_at(t.line, t.col, "unexpected trailing input")
        }
    }

    fn int(&mut self, what: &str) -> Result<(u64, usize, usize)> {
        let t = self.next();
        match t.tok {
            Tok::Int(v) => Ok((v, t.line, t.col)),
            _ => err_at(t.line, t.col, format!("expected {what}")),
        }
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.eat(&Tok::Caret) {
            let (v, line, col) = self.int("exponent")?;
            u32::try_from(v).or_else(|_| err_at(line, col, "exponent too large"))
        } else {
            Ok(1)
        }
    }

    /// Series variable index: `t,u,v` aliases or canonical `t<k>`.
    fn series_var(&mut self, name: &str, line: usize, col: usize) -> Result<usize> {
        let idx = match name {
            "t" | "u" | "v" => {
                self.series_alias.get_or_insert((line, col));
                ["t", "u", "v"].iter().position(|a| *a == name).unwrap()
            }
            _ => {
                let digits = name.strip_prefix('t').unwrap_or("");
                match digits.parse::<usize>() {
                    Ok(k) if k >= 1 && !digits.is_empty() => k - 1,
                    _ => return err_at(line, col, format!("unknown variable '{name}'")),
                }
            }
        };
        self.max_tvar = self.max_tvar.max(idx + 1);
        Ok(idx)
    }

    /// Differential indeterminate index: `x,y` aliases or canonical `x<k>`.
    fn diff_var(&mut self, name: &str, line: usize, col: usize) -> Result<usize> {
        let idx = match name {
            "x" | "y" => {
                self.var_alias.get_or_insert((line, col));
                if name == "x" {
                    0
                } else {
                    1
                }
            }
            _ => {
                let digits = name.strip_prefix('x').unwrap_or("");
                match digits.parse::<usize>() {
                    Ok(k) if k >= 1 && !digits.is_empty() => k - 1,
                    _ => return err_at(line, col, format!("unknown indeterminate '{name}'")),
                }
            }
        };
        self.max_xvar = self.max_xvar.max(idx + 1);
        Ok(idx)
    }

    fn rational(&mut self, first: u64) -> Result<Q> {
        let mut value = from_nat::<Q>(first as u128);
        if self.eat(&Tok::Slash) {
            let (den, line, col) = self.int("denominator")?;
            if den == 0 {
                return err_at(line, col, "zero denominator in rational literal");
            }
            value = value / from_nat::<Q>(den as u128);
        }
        Ok(value)
    }

    /// `sterm := sfactor { '*' sfactor }` with rational and variable factors.
    fn series_term(&mut self) -> Result<RawTerm<Q>> {
        let mut coeff = Q::one();
        let mut exps: BTreeMap<usize, u32> = BTreeMap::new();
        loop {
            let t = self.next();
            match t.tok {
                Tok::Int(v) => coeff = coeff * self.rational(v)?,
                Tok::Ident(name) => {
                    let idx = self.series_var(&name, t.line, t.col)?;
                    let e = self.exponent()?;
                    *exps.entry(idx).or_insert(0) += e;
                }
                _ => return err_at(t.line, t.col, "expected a series factor"),
            }
            if !self.eat(&Tok::Star) {
                break;
            }
        }
        Ok(RawTerm { coeff, exps })
    }

    /// `series := [sign] sterm { (+|-) sterm }`.
    fn series_expr(&mut self) -> Result<RawSeries<Q>> {
        let mut out = Vec::new();
        let mut negate = false;
        if self.eat(&Tok::Minus) {
            negate = true;
        } else {
            self.eat(&Tok::Plus);
        }
        loop {
            let mut term = self.series_term()?;
            if negate {
                term.coeff = -term.coeff;
            }
            out.push(term);
            match &self.peek().tok {
                Tok::Plus => {
                    self.pos += 1;
                    negate = false;
                }
                Tok::Minus => {
                    self.pos += 1;
                    negate = true;
                }
                _ => break,
            }
        }
        Ok(out)
    }

    fn multi_index_literal(&mut self) -> Result<Vec<u32>> {
        let open = self.expect(Tok::LParen, "'('")?;
        let mut entries = Vec::new();
        loop {
            let (v, line, col) = self.int("derivative order entry")?;
            entries.push(u32::try_from(v).or_else(|_| err_at(line, col, "entry too large"))?);
            if !self.eat(&Tok::Comma) {
                break;
            }
        }
        self.expect(Tok::RParen, "')'")?;
        match self.j_len {
            None => self.j_len = Some(entries.len()),
            Some(expected) if expected != entries.len() => {
                return err_at(
                    open.line,
                    open.col,
                    format!(
                        "derivative order has {} entries, earlier ones had {}",
                        entries.len(),
                        expected
                    ),
                )
            }
            _ => {}
        }
        Ok(entries)
    }

    /// `dterm := dfactor { '*' dfactor }`.
    fn diff_term(&mut self) -> Result<RawDiffTerm<Q>> {
        let mut out = RawDiffTerm {
            num_factors: Vec::new(),
            den_factors: Vec::new(),
            mono: Vec::new(),
        };
        loop {
            let t = self.next();
            match t.tok {
                Tok::Int(v) => {
                    let c = self.rational(v)?;
                    out.num_factors.push(vec![RawTerm {
                        coeff: c,
                        exps: BTreeMap::new(),
                    }]);
                }
                Tok::Ident(name) => {
                    if self.peek().tok == Tok::LBracket {
                        let idx = self.diff_var(&name, t.line, t.col)?;
                        self.pos += 1; // '['
                        let j = self.multi_index_literal()?;
                        self.expect(Tok::RBracket, "']'")?;
                        let e = self.exponent()?;
                        out.mono.push(((idx, j), e));
                    } else {
                        let idx = self.series_var(&name, t.line, t.col)?;
                        let e = self.exponent()?;
                        out.num_factors.push(vec![RawTerm {
                            coeff: Q::one(),
                            exps: BTreeMap::from([(idx, e)]),
                        }]);
                    }
                }
                Tok::LParen => {
                    let series = self.series_expr()?;
                    self.expect(Tok::RParen, "')'")?;
                    if self.peek().tok == Tok::Slash
                        && self.toks.get(self.pos + 1).map(|t| &t.tok) == Some(&Tok::LParen)
                    {
                        let slash = self.next();
                        self.first_fraction.get_or_insert((slash.line, slash.col));
                        self.expect(Tok::LParen, "'('")?;
                        let den = self.series_expr()?;
                        self.expect(Tok::RParen, "')'")?;
                        out.num_factors.push(series);
                        out.den_factors.push(den);
                    } else {
                        out.num_factors.push(series);
                    }
                }
                _ => return err_at(t.line, t.col, "expected a term factor"),
            }
            if !self.eat(&Tok::Star) {
                break;
            }
        }
        Ok(out)
    }

    fn diff_expr(&mut self) -> Result<Vec<RawDiffTerm<Q>>> {
        let mut out = Vec::new();
        let mut negate = false;
        if self.eat(&Tok::Minus) {
            negate = true;
        } else {
            self.eat(&Tok::Plus);
        }
        loop {
            let mut term = self.diff_term()?;
            if negate {
                term.num_factors.push(vec![RawTerm {
                    coeff: -Q::one(),
                    exps: BTreeMap::new(),
                }]);
            }
            out.push(term);
            match &self.peek().tok {
                Tok::Plus => {
                    self.pos += 1;
                    negate = false;
                }
                Tok::Minus => {
                    self.pos += 1;
                    negate = true;
                }
                _ => break,
            }
        }
        Ok(out)
    }

    /// Resolve the ambient dimension against declarations and usage.
    fn resolve_dim(&self, declared: Option<usize>) -> Result<usize> {
        let dim = match declared.or(self.j_len).or(if self.max_tvar > 0 {
            Some(self.max_tvar)
        } else {
            None
        }) {
            Some(m) => m,
            None => {
                return err_at(1, 1, "cannot infer the ambient dimension; declare m")
            }
        };
        if let Some(len) = self.j_len {
            if len != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: len,
                });
            }
        }
        if self.max_tvar > dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: self.max_tvar,
            });
        }
        if let Some((line, col)) = self.series_alias {
            if dim > 3 {
                return err_at(line, col, "aliases t,u,v need m <= 3");
            }
        }
        Ok(dim)
    }

    fn resolve_vars(&self, declared: Option<usize>) -> Result<usize> {
        let n = declared.unwrap_or(self.max_xvar);
        if self.max_xvar > n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: self.max_xvar,
            });
        }
        if let Some((line, col)) = self.var_alias {
            if n > 2 {
                return err_at(line, col, "aliases x,y need n <= 2");
            }
        }
        Ok(n)
    }
}

fn dense_index(exps: &BTreeMap<usize, u32>, dim: usize) -> MultiIndex {
    let mut v = vec![0u32; dim];
    for (&k, &e) in exps {
        v[k] = e;
    }
    MultiIndex::new(v)
}

fn build_series<Q: Scalar>(raw: &RawSeries<Q>, dim: usize) -> Series<Q> {
    Series::new(
        dim,
        raw.iter()
            .map(|t| (dense_index(&t.exps, dim), t.coeff.clone())),
    )
}

fn build_bool<Q: Scalar>(raw: &RawSeries<Q>, dim: usize) -> BoolSeries {
    BoolSeries::from_points(
        dim,
        raw.iter()
            .filter(|t| !t.coeff.is_zero())
            .map(|t| dense_index(&t.exps, dim))
            .collect(),
    )
    .expect("dense indices share the ambient dimension")
}

/// Parse a rational series; returns the series and the resolved dimension.
pub fn parse_series<Q: Scalar>(text: &str, dim: Option<usize>) -> Result<(Series<Q>, usize)> {
    let toks = lex(text)?;
    let mut p = Parser::<Q>::new(&toks);
    let raw = p.series_expr()?;
    p.expect_eof()?;
    let m = p.resolve_dim(dim)?;
    Ok((build_series(&raw, m), m))
}

/// Parse a boolean series: the series grammar with coefficients dropped to
/// presence, plus the keyword `omega` for the full-support series.
pub fn parse_bool_series(text: &str, dim: Option<usize>) -> Result<(BoolSeries, usize)> {
    let toks = lex(text)?;
    if let [Token {
        tok: Tok::Ident(name),
        line,
        col,
    }, ..] = &toks[..]
    {
        if name == "omega" && toks[1].tok == Tok::Eof {
            return match dim {
                Some(m) => Ok((BoolSeries::omega(m), m)),
                None => err_at(*line, *col, "omega needs a declared dimension m"),
            };
        }
    }
    let mut p = Parser::<crate::Rat>::new(&toks);
    let raw = p.series_expr()?;
    p.expect_eof()?;
    let m = p.resolve_dim(dim)?;
    Ok((build_bool(&raw, m), m))
}

/// Parse a differential polynomial with fraction coefficients (the most
/// general coefficient domain); returns the polynomial and the resolved
/// `(m, n)`.
pub fn parse_diffpoly<Q: Scalar>(
    text: &str,
    dim: Option<usize>,
    vars: Option<usize>,
) -> Result<(DiffPoly<SeriesFraction<Q>>, usize, usize)> {
    let toks = lex(text)?;
    let mut p = Parser::<Q>::new(&toks);
    let raw = p.diff_expr()?;
    p.expect_eof()?;
    let m = p.resolve_dim(dim)?;
    let n = p.resolve_vars(vars)?;
    let mut terms = Vec::new();
    for t in &raw {
        let num = t
            .num_factors
            .iter()
            .fold(Series::one(m), |acc, f| acc.mul(&build_series(f, m)));
        let den = t
            .den_factors
            .iter()
            .fold(Series::one(m), |acc, f| acc.mul(&build_series(f, m)));
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let mono = DiffMonomial::from_factors(
            t.mono
                .iter()
                .map(|((i, j), e)| ((*i, MultiIndex::new(j.clone())), *e)),
        );
        terms.push((mono, SeriesFraction::new(num, den)?));
    }
    Ok((DiffPoly::new(m, n, terms), m, n))
}

/// Parse a differential polynomial over boolean coefficients: written
/// coefficients are dropped to presence and fractions are rejected.
pub fn parse_bool_diffpoly(
    text: &str,
    dim: Option<usize>,
    vars: Option<usize>,
) -> Result<(DiffPoly<BoolSeries>, usize, usize)> {
    let toks = lex(text)?;
    let mut p = Parser::<crate::Rat>::new(&toks);
    let raw = p.diff_expr()?;
    p.expect_eof()?;
    if let Some((line, col)) = p.first_fraction {
        return err_at(line, col, "fraction coefficients are not boolean");
    }
    let m = p.resolve_dim(dim)?;
    let n = p.resolve_vars(vars)?;
    let mut terms = Vec::new();
    for t in &raw {
        let coeff = t
            .num_factors
            .iter()
            .fold(BoolSeries::one(m), |acc, f| acc.mul(&build_bool(f, m)));
        let mono = DiffMonomial::from_factors(
            t.mono
                .iter()
                .map(|((i, j), e)| ((*i, MultiIndex::new(j.clone())), *e)),
        );
        terms.push((mono, coeff));
    }
    Ok((DiffPoly::new(m, n, terms), m, n))
}

/// Parse a bare multi-index literal like `(1,0)`.
pub fn parse_multi_index(text: &str, dim: Option<usize>) -> Result<MultiIndex> {
    let toks = lex(text)?;
    let mut p = Parser::<crate::Rat>::new(&toks);
    let entries = p.multi_index_literal()?;
    p.expect_eof()?;
    if let Some(m) = dim {
        if entries.len() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: entries.len(),
            });
        }
    }
    Ok(MultiIndex::new(entries))
}

/// Parse a standalone rational number `p`, `-p`, or `p/q`.
pub fn parse_rational<Q: Scalar>(text: &str) -> Result<Q> {
    let toks = lex(text)?;
    let mut p = Parser::<Q>::new(&toks);
    let negate = p.eat(&Tok::Minus);
    let (v, _, _) = p.int("numerator")?;
    let q = p.rational(v)?;
    p.expect_eof()?;
    Ok(if negate { -q } else { q })
}
