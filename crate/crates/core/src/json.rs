//! JSON encodings: generator sets as `{"dim", "points", "cones"}`, vertex
//! polynomials as sorted arrays of integer vectors, series as term lists with
//! string rationals, fractions as `{"num", "den"}`. Output is always
//! canonical; input is accepted loose and normalized on read.

use serde_json::{json, Map, Value};

use crate::diffpoly::SolutionCheck;
use crate::error::{Error, Result};
use crate::lattice::GeneratorSet;
use crate::multi_index::MultiIndex;
use crate::parse::parse_rational;
use crate::scalar::Scalar;
use crate::series::{BoolSeries, Series, SeriesFraction};
use crate::vertex::{VertexFraction, VertexPolynomial};

fn bad(msg: impl Into<String>) -> Error {
    Error::Syntax {
        line: 1,
        col: 1,
        msg: msg.into(),
    }
}

fn index_to_value(idx: &MultiIndex) -> Value {
    Value::Array(idx.entries().iter().map(|&e| json!(e)).collect())
}

fn index_from_value(v: &Value) -> Result<MultiIndex> {
    let arr = v.as_array().ok_or_else(|| bad("expected an index array"))?;
    let entries = arr
        .iter()
        .map(|e| {
            e.as_u64()
                .and_then(|n| u32::try_from(n).ok())
                .ok_or_else(|| bad("index entries must be small naturals"))
        })
        .collect::<Result<Vec<u32>>>()?;
    Ok(MultiIndex::new(entries))
}

fn index_list_from_value(v: &Value) -> Result<Vec<MultiIndex>> {
    v.as_array()
        .ok_or_else(|| bad("expected an array of indices"))?
        .iter()
        .map(index_from_value)
        .collect()
}

impl GeneratorSet {
    pub fn to_json(&self) -> Value {
        json!({
            "dim": self.dim(),
            "points": self.points().iter().map(index_to_value).collect::<Vec<_>>(),
            "cones": self.cones().iter().map(index_to_value).collect::<Vec<_>>(),
        })
    }

    /// Accepts `{"dim": m, "points": [...], "cones": [...]}` with both lists
    /// optional and not necessarily canonical.
    pub fn from_json(v: &Value, dim: Option<usize>) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| bad("expected a generator set object"))?;
        let declared = obj
            .get("dim")
            .map(|d| {
                d.as_u64()
                    .map(|n| n as usize)
                    .ok_or_else(|| bad("dim must be a natural number"))
            })
            .transpose()?;
        let points = obj
            .get("points")
            .map(index_list_from_value)
            .transpose()?
            .unwrap_or_default();
        let cones = obj
            .get("cones")
            .map(index_list_from_value)
            .transpose()?
            .unwrap_or_default();
        let m = dim
            .or(declared)
            .or_else(|| points.first().or(cones.first()).map(|i| i.dim()))
            .ok_or_else(|| bad("cannot determine the generator set dimension"))?;
        if let (Some(want), Some(have)) = (dim, declared) {
            if want != have {
                return Err(Error::DimensionMismatch {
                    expected: want,
                    found: have,
                });
            }
        }
        GeneratorSet::normalize(m, points, cones)
    }
}

impl BoolSeries {
    pub fn to_json(&self) -> Value {
        self.carrier().to_json()
    }

    pub fn from_json(v: &Value, dim: Option<usize>) -> Result<Self> {
        Ok(BoolSeries::from_carrier(GeneratorSet::from_json(v, dim)?))
    }
}

impl VertexPolynomial {
    /// A sorted array of integer vectors (lexicographic order).
    pub fn to_json(&self) -> Value {
        Value::Array(self.support().iter().map(index_to_value).collect())
    }

    pub fn from_json(v: &Value, dim: Option<usize>) -> Result<Self> {
        let pts = index_list_from_value(v)?;
        let m = dim
            .or_else(|| pts.first().map(|i| i.dim()))
            .ok_or_else(|| bad("cannot determine the vertex set dimension"))?;
        for p in &pts {
            if p.dim() != m {
                return Err(Error::DimensionMismatch {
                    expected: m,
                    found: p.dim(),
                });
            }
        }
        VertexPolynomial::new(m, pts)
    }
}

impl VertexFraction {
    pub fn to_json(&self) -> Value {
        json!({ "num": self.num().to_json(), "den": self.den().to_json() })
    }
}

impl<Q: Scalar> Series<Q> {
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|(idx, c)| json!({ "exp": index_to_value(idx), "coeff": c.to_string() }))
            .collect();
        json!({ "terms": terms })
    }

    pub fn from_json(v: &Value, dim: Option<usize>) -> Result<(Self, usize)> {
        let obj = v.as_object().ok_or_else(|| bad("expected a series object"))?;
        let terms = obj
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("series object needs a terms array"))?;
        let mut pairs = Vec::new();
        for t in terms {
            let t = t.as_object().ok_or_else(|| bad("term must be an object"))?;
            let exp = index_from_value(
                t.get("exp").ok_or_else(|| bad("term needs an exp"))?,
            )?;
            let coeff = match t.get("coeff").ok_or_else(|| bad("term needs a coeff"))? {
                Value::String(s) => parse_rational::<Q>(s)?,
                Value::Number(n) => {
                    let as_text = n.to_string();
                    parse_rational::<Q>(&as_text)
                        .map_err(|_| bad("coefficients must be integers or p/q strings"))?
                }
                _ => return Err(bad("coefficients must be integers or p/q strings")),
            };
            pairs.push((exp, coeff));
        }
        let m = dim
            .or_else(|| pairs.first().map(|(i, _)| i.dim()))
            .ok_or_else(|| bad("cannot determine the series dimension"))?;
        for (idx, _) in &pairs {
            if idx.dim() != m {
                return Err(Error::DimensionMismatch {
                    expected: m,
                    found: idx.dim(),
                });
            }
        }
        Ok((Series::new(m, pairs), m))
    }
}

impl<Q: Scalar> SeriesFraction<Q> {
    pub fn to_json(&self) -> Value {
        json!({ "num": self.num().to_json(), "den": self.den().to_json() })
    }

    pub fn from_json(v: &Value, dim: Option<usize>) -> Result<(Self, usize)> {
        let obj = v
            .as_object()
            .ok_or_else(|| bad("expected a fraction object"))?;
        let (num, m) = Series::from_json(
            obj.get("num").ok_or_else(|| bad("fraction needs num"))?,
            dim,
        )?;
        let (den, _) = Series::from_json(
            obj.get("den").ok_or_else(|| bad("fraction needs den"))?,
            Some(m),
        )?;
        Ok((SeriesFraction::new(num, den)?, m))
    }
}

impl SolutionCheck {
    pub fn to_json(&self) -> Value {
        let mut witnesses = Map::new();
        for (idx, terms) in &self.witnesses {
            witnesses.insert(idx.to_string(), json!(terms));
        }
        json!({
            "solution": self.solution,
            "vertex_set": self.vertex_set.to_json(),
            "witnesses": Value::Object(witnesses),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v.to_vec())
    }

    #[test]
    fn generator_set_round_trip_normalizes_loose_input() {
        let loose = json!({
            "dim": 2,
            "points": [[1, 1], [3, 3]],
            "cones": [[2, 2], [1, 1]],
        });
        let set = GeneratorSet::from_json(&loose, None).unwrap();
        let expect = GeneratorSet::normalize(2, vec![], vec![mi(&[1, 1])]).unwrap();
        assert_eq!(set, expect);
        let out = set.to_json();
        assert_eq!(GeneratorSet::from_json(&out, None).unwrap(), set);
        assert_eq!(
            serde_json::to_string(&out).unwrap(),
            r#"{"cones":[[1,1]],"dim":2,"points":[]}"#
        );
    }

    #[test]
    fn vertex_polynomial_serializes_sorted() {
        let vp =
            VertexPolynomial::new(2, vec![mi(&[2, 0]), mi(&[1, 1]), mi(&[0, 3])]).unwrap();
        assert_eq!(
            serde_json::to_string(&vp.to_json()).unwrap(),
            "[[0,3],[1,1],[2,0]]"
        );
        assert_eq!(VertexPolynomial::from_json(&vp.to_json(), None).unwrap(), vp);
        let not_vertex = json!([[1, 1], [2, 2]]);
        assert!(VertexPolynomial::from_json(&not_vertex, None).is_err());
    }

    #[test]
    fn series_round_trip() {
        let s = Series::<Rat>::new(
            2,
            [
                (mi(&[1, 0]), crate::scalar::ratio(-1, 2)),
                (mi(&[0, 2]), crate::scalar::from_int(3)),
            ],
        );
        let v = s.to_json();
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"terms":[{"coeff":"3","exp":[0,2]},{"coeff":"-1/2","exp":[1,0]}]}"#
        );
        let (back, m) = Series::<Rat>::from_json(&v, None).unwrap();
        assert_eq!(m, 2);
        assert_eq!(back, s);
    }
}
