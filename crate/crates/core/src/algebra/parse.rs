//! Line-oriented `.alg` format:
//!
//! ```text
//! # comment
//! field: Q            (or `field: F 5`)
//! vertices: 1 2 3
//! arrow a1: 1 -> 2
//! relation: a1*a2
//! relation: b1*a2 - 2*b2*a1
//! ```

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use super::{Algebra, Arrow, Quiver, Relation, DEFAULT_LENGTH_CAP};
use crate::error::{Error, Result};
use crate::field::{is_prime, Field};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum FieldChoice {
    #[default]
    Rational,
    Prime(u64),
}

impl fmt::Display for FieldChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldChoice::Rational => write!(f, "Q"),
            FieldChoice::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl std::str::FromStr for FieldChoice {
    type Err = String;

    /// Accepts `Q`, `Fp:5`, `F 5` and `F5`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        if s == "Q" {
            return Ok(FieldChoice::Rational);
        }
        let rest = s
            .strip_prefix("Fp:")
            .or_else(|| s.strip_prefix('F'))
            .ok_or_else(|| format!("unknown field `{s}`"))?;
        let p: u64 = rest
            .trim()
            .parse()
            .map_err(|_| format!("bad prime in `{s}`"))?;
        if !is_prime(p) {
            return Err(format!("{p} is not prime"));
        }
        Ok(FieldChoice::Prime(p))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSpec {
    pub line: usize,
    pub terms: Vec<(BigInt, Vec<String>)>,
}

/// A parsed but not yet built algebra; building picks the scalar field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub field: Option<FieldChoice>,
    pub quiver: Quiver,
    pub relations: Vec<RelationSpec>,
}

impl AlgebraSpec {
    pub fn build<F: Field>(&self) -> Result<Arc<Algebra<F>>> {
        self.build_with_cap(DEFAULT_LENGTH_CAP)
    }

    pub fn build_with_cap<F: Field>(&self, cap: usize) -> Result<Arc<Algebra<F>>> {
        let mut rels = Vec::new();
        for r in &self.relations {
            let mut terms = Vec::new();
            for (c, path) in &r.terms {
                let coef = F::from_fraction(c, &BigInt::one()).ok_or_else(|| Error::Parse {
                    line: r.line,
                    message: "coefficient not representable".into(),
                })?;
                let idx = path
                    .iter()
                    .map(|l| self.quiver.arrow_index(l).unwrap())
                    .collect();
                terms.push((coef, idx));
            }
            rels.push(Relation { terms });
        }
        Algebra::with_length_cap(self.quiver.clone(), rels, cap)
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_algebra(text: &str) -> Result<AlgebraSpec> {
    let mut field = None;
    let mut vertices: Option<Vec<String>> = None;
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut raw_relations: Vec<(usize, String)> = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("field:") {
            field = Some(
                rest.parse::<FieldChoice>()
                    .map_err(|e| parse_err(line_no, e))?,
            );
        } else if let Some(rest) = line.strip_prefix("vertices:") {
            if vertices.is_some() {
                return Err(parse_err(line_no, "vertices declared twice"));
            }
            vertices = Some(rest.split_whitespace().map(str::to_string).collect());
        } else if let Some(rest) = line.strip_prefix("arrow ") {
            let vs = vertices
                .as_ref()
                .ok_or_else(|| parse_err(line_no, "arrow before vertices"))?;
            let (label, ends) = rest
                .split_once(':')
                .ok_or_else(|| parse_err(line_no, "expected `arrow NAME: SRC -> DST`"))?;
            let (s, t) = ends
                .split_once("->")
                .ok_or_else(|| parse_err(line_no, "expected `->`"))?;
            let label = label.trim();
            if label.is_empty() || label.contains(['*', '+', '-', ' ']) {
                return Err(parse_err(line_no, format!("bad arrow label `{label}`")));
            }
            let find = |v: &str| {
                vs.iter()
                    .position(|x| x == v.trim())
                    .ok_or_else(|| parse_err(line_no, format!("unknown vertex `{}`", v.trim())))
            };
            arrows.push(Arrow {
                label: label.to_string(),
                source: find(s)?,
                target: find(t)?,
            });
        } else if let Some(rest) = line.strip_prefix("relation:") {
            raw_relations.push((line_no, rest.trim().to_string()));
        } else {
            return Err(parse_err(line_no, format!("unrecognized line `{line}`")));
        }
    }
    let vertices = vertices.ok_or_else(|| parse_err(0, "missing `vertices:` line"))?;
    let quiver = Quiver::new(vertices, arrows).map_err(|e| parse_err(0, e.to_string()))?;
    let mut relations = Vec::new();
    for (line, text) in raw_relations {
        relations.push(parse_relation(&quiver, line, &text)?);
    }
    Ok(AlgebraSpec {
        field,
        quiver,
        relations,
    })
}

fn parse_relation(q: &Quiver, line: usize, text: &str) -> Result<RelationSpec> {
    let spaced = text.replace('+', " + ").replace('-', " - ");
    let mut terms = Vec::new();
    let mut sign = BigInt::one();
    let mut coef: Option<BigInt> = None;
    for tok in spaced.split_whitespace() {
        match tok {
            "+" => {}
            "-" => sign = -sign,
            _ => {
                let mut c = coef.take().unwrap_or_else(BigInt::one);
                let mut path = Vec::new();
                for factor in tok.split('*').filter(|f| !f.is_empty()) {
                    if let Ok(k) = factor.parse::<BigInt>() {
                        if !path.is_empty() {
                            return Err(parse_err(line, "coefficient after an arrow"));
                        }
                        c *= k;
                    } else if q.arrow_index(factor).is_some() {
                        path.push(factor.to_string());
                    } else {
                        return Err(parse_err(line, format!("unknown arrow `{factor}`")));
                    }
                }
                if path.is_empty() {
                    // bare number, coefficient of the next token
                    coef = Some(c);
                    continue;
                }
                let idx: Vec<usize> = path.iter().map(|l| q.arrow_index(l).unwrap()).collect();
                if q.path_endpoints(&idx).is_none() {
                    return Err(parse_err(line, format!("`{tok}` is not a path")));
                }
                terms.push((c * &sign, path));
                sign = BigInt::one();
            }
        }
    }
    if coef.is_some() {
        return Err(parse_err(line, "dangling coefficient"));
    }
    if terms.is_empty() {
        return Err(parse_err(line, "empty relation"));
    }
    Ok(RelationSpec { line, terms })
}
