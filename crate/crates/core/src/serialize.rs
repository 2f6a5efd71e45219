//! Canonical JSON encodings of scalars, algebra elements and extracted
//! representations.
//!
//! A Laurent scalar is a list of `[v_exponent, "num/den"]` pairs by
//! increasing exponent. An element is a list of `[word, scalar]` pairs in
//! monomial order, with words written `zs[1,2]*zs[2,3]` and the unit as `1`.
//! Objects have sorted keys and the output ends with a newline, so equal
//! inputs give byte-identical files.

use std::collections::BTreeMap;
use std::io::Write as _;
use std::path::Path;

use num_rational::BigRational;
use serde_json::{json, Value};
use thiserror::Error;

use crate::action::UGen;
use crate::irreps::Representation;
use crate::matrix::SMat;
use crate::ncalg::{Element, Gen, Kind, Word};
use crate::scalar::Laurent;

#[derive(Debug, Error)]
pub enum SerializeError {
    #[error("malformed document: {0}")]
    Format(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn bad(msg: impl Into<String>) -> SerializeError {
    SerializeError::Format(msg.into())
}

pub fn laurent_to_json(x: &Laurent) -> Value {
    Value::Array(x.terms().map(|(e, c)| json!([e, c.to_string()])).collect())
}

pub fn laurent_from_json(v: &Value) -> Result<Laurent, SerializeError> {
    let arr = v.as_array().ok_or_else(|| bad("scalar must be a list"))?;
    let mut out = Laurent::zero();
    let mut last = None;
    for t in arr {
        let pair = t.as_array().filter(|p| p.len() == 2).ok_or_else(|| bad("scalar term must be a pair"))?;
        let e = pair[0].as_i64().ok_or_else(|| bad("exponent must be an integer"))?;
        let c: BigRational = pair[1]
            .as_str()
            .ok_or_else(|| bad("coefficient must be a string"))?
            .parse()
            .map_err(|_| bad(format!("bad coefficient {}", pair[1])))?;
        // canonical form: strictly increasing exponents, no zero terms
        if last.is_some_and(|l| l >= e) || c == BigRational::from_integer(0.into()) {
            return Err(bad("scalar terms not in canonical form"));
        }
        last = Some(e);
        out.add_term(e, c);
    }
    Ok(out)
}

pub fn parse_gen(s: &str) -> Result<Gen, SerializeError> {
    let (kind, rest) = if let Some(r) = s.strip_prefix("zs[") {
        (Kind::Ahol, r)
    } else if let Some(r) = s.strip_prefix("z[") {
        (Kind::Hol, r)
    } else {
        return Err(bad(format!("bad generator {s:?}")));
    };
    let inner = rest.strip_suffix(']').ok_or_else(|| bad(format!("bad generator {s:?}")))?;
    let (a, b) = inner.split_once(',').ok_or_else(|| bad(format!("bad generator {s:?}")))?;
    let (a, b): (usize, usize) = (
        a.trim().parse().map_err(|_| bad(format!("bad index in {s:?}")))?,
        b.trim().parse().map_err(|_| bad(format!("bad index in {s:?}")))?,
    );
    if a == 0 || a >= b {
        return Err(bad(format!("generator indices must satisfy 1 <= s < t in {s:?}")));
    }
    Ok(Gen::new(kind, a, b))
}

pub fn parse_word(s: &str) -> Result<Word, SerializeError> {
    if s == "1" {
        return Ok(Word::unit());
    }
    s.split('*').map(parse_gen).collect::<Result<Vec<_>, _>>().map(Word)
}

pub fn element_to_json(e: &Element) -> Value {
    Value::Array(e.terms().map(|(w, c)| json!([w.to_string(), laurent_to_json(c)])).collect())
}

pub fn element_from_json(v: &Value) -> Result<Element, SerializeError> {
    let arr = v.as_array().ok_or_else(|| bad("element must be a list"))?;
    let mut out = Element::zero();
    for t in arr {
        let pair = t.as_array().filter(|p| p.len() == 2).ok_or_else(|| bad("element term must be a pair"))?;
        let w = parse_word(pair[0].as_str().ok_or_else(|| bad("word must be a string"))?)?;
        out.add_term(w, laurent_from_json(&pair[1])?);
    }
    Ok(out)
}

fn matrix_to_json(m: &SMat) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array((0..m.cols()).map(|c| laurent_to_json(m.get(r, c))).collect()))
            .collect(),
    )
}

fn matrix_from_json(v: &Value, d: usize) -> Result<SMat, SerializeError> {
    let rows = v.as_array().filter(|r| r.len() == d).ok_or_else(|| bad("matrix has wrong row count"))?;
    let mut m = SMat::zeros(d, d);
    for (r, row) in rows.iter().enumerate() {
        let cells = row.as_array().filter(|c| c.len() == d).ok_or_else(|| bad("matrix has wrong column count"))?;
        for (c, x) in cells.iter().enumerate() {
            m.set(r, c, laurent_from_json(x)?);
        }
    }
    Ok(m)
}

pub fn representation_to_json(rep: &Representation) -> Value {
    let matrices: serde_json::Map<String, Value> =
        rep.matrices.iter().map(|(g, m)| (g.name(), matrix_to_json(m))).collect();
    json!({
        "basis": rep.basis.iter().map(element_to_json).collect::<Vec<_>>(),
        "dimension": rep.dimension(),
        "matrices": matrices,
        "n": rep.n,
        "sigma": rep.sigma,
        "weights": rep.weights,
    })
}

pub fn representation_from_json(v: &Value) -> Result<Representation, SerializeError> {
    let field = |k: &str| v.get(k).ok_or_else(|| bad(format!("missing field {k}")));
    let n = field("n")?.as_u64().ok_or_else(|| bad("n must be an integer"))? as usize;
    let d = field("dimension")?.as_u64().ok_or_else(|| bad("dimension must be an integer"))? as usize;
    let sigma: Vec<i64> = serde_json::from_value(field("sigma")?.clone())?;
    let weights: Vec<Vec<i64>> = serde_json::from_value(field("weights")?.clone())?;
    let basis = field("basis")?
        .as_array()
        .ok_or_else(|| bad("basis must be a list"))?
        .iter()
        .map(element_from_json)
        .collect::<Result<Vec<_>, _>>()?;
    if basis.len() != d || weights.len() != d {
        return Err(bad("basis or weights disagree with dimension"));
    }
    let mut matrices = BTreeMap::new();
    for (name, m) in field("matrices")?.as_object().ok_or_else(|| bad("matrices must be an object"))? {
        let g: UGen = name.parse().map_err(|_| bad(format!("bad generator name {name}")))?;
        matrices.insert(g, matrix_from_json(m, d)?);
    }
    if matrices.len() != 4 * n.saturating_sub(1) {
        return Err(bad("matrices must cover every generator"));
    }
    Ok(Representation {
        n,
        sigma,
        basis,
        matrices,
        weights,
    })
}

/// The canonical text of a document.
pub fn to_canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

/// Writes through a temporary file in the target directory, then renames.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), SerializeError> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

pub fn export_representation(rep: &Representation, path: &Path) -> Result<(), SerializeError> {
    write_atomic(path, &to_canonical_string(&representation_to_json(rep)))
}

pub fn import_representation(path: &Path) -> Result<Representation, SerializeError> {
    let text = std::fs::read_to_string(path)?;
    representation_from_json(&serde_json::from_str(&text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laurent_encoding_is_explicit() {
        let x = &Laurent::q_pow(-1) - &Laurent::from_rational(BigRational::new(3.into(), 4.into())).shift(1);
        assert_eq!(laurent_to_json(&x).to_string(), r#"[[-2,"1"],[1,"-3/4"]]"#);
        assert_eq!(laurent_from_json(&laurent_to_json(&x)).unwrap(), x);
        assert!(laurent_from_json(&json!([[1, "1"], [0, "1"]])).is_err());
        assert!(laurent_from_json(&json!([[0, "0"]])).is_err());
    }

    #[test]
    fn words_parse() {
        let w = parse_word("zs[1,2]*zs[2,3]").unwrap();
        assert_eq!(w.to_string(), "zs[1,2]*zs[2,3]");
        assert_eq!(parse_word("1").unwrap(), Word::unit());
        assert!(parse_word("zs[2,1]").is_err());
        assert!(parse_word("y[1,2]").is_err());
    }
}
