//! Persistent projector cache: a versioned header line followed by one JSON
//! record per size n,
//!
//! ```text
//! tlkit-projector-cache v1
//! {"n":2,"ring":"generic","terms":[["[[1,2],[3,4]]",[[1,"1"]],[[0,"1"],[2,"1"]]],...]}
//! ```
//!
//! each term being (pair list, numerator terms, denominator terms) of the
//! canonical generic coefficient. Encoding a decoded file reproduces it
//! byte for byte.

use std::fs;
use std::path::{Path, PathBuf};

use num_rational::BigRational;
use serde_json::{json, Value};

use crate::coeff::{Generic, LaurentPoly, RingElem};
use crate::diagrams::Planar;
use crate::error::{Error, Result};
use crate::render::laurent_json;
use crate::tangle::Tangle;
use crate::wenzl;

pub const HEADER: &str = "tlkit-projector-cache v1";
pub const FILE_NAME: &str = "projectors.tlc";

pub fn cache_path(dir: &Path) -> PathBuf {
    dir.join(FILE_NAME)
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidInput(format!("cache file: {}", msg.into()))
}

pub fn encode_record(n: usize, t: &Tangle<Generic>) -> String {
    let terms: Vec<Value> =
        t.terms().map(|(p, c)| json!([p.encode(), laurent_json(c.num()), laurent_json(c.den())])).collect();
    json!({ "n": n, "ring": "generic", "terms": terms }).to_string()
}

/// Records sorted by n.
pub fn encode(records: &[(usize, &Tangle<Generic>)]) -> String {
    let mut rs: Vec<_> = records.to_vec();
    rs.sort_by_key(|r| r.0);
    let mut s = String::from(HEADER);
    s.push('\n');
    for (n, t) in rs {
        s.push_str(&encode_record(n, t));
        s.push('\n');
    }
    s
}

fn decode_laurent(v: &Value) -> Result<LaurentPoly> {
    let arr = v.as_array().ok_or_else(|| bad("polynomial must be a list"))?;
    let mut terms = Vec::with_capacity(arr.len());
    for t in arr {
        let e = t.get(0).and_then(Value::as_i64).ok_or_else(|| bad("exponent"))?;
        let c: BigRational = t
            .get(1)
            .and_then(Value::as_str)
            .ok_or_else(|| bad("coefficient"))?
            .parse()
            .map_err(|_| bad("coefficient is not a rational"))?;
        terms.push((e as i32, c));
    }
    Ok(LaurentPoly::from_terms(terms))
}

pub fn decode_record(line: &str) -> Result<(usize, Tangle<Generic>)> {
    let v: Value = serde_json::from_str(line).map_err(|e| bad(e.to_string()))?;
    let n = v["n"].as_u64().ok_or_else(|| bad("missing n"))? as usize;
    if v["ring"] != "generic" {
        return Err(bad("only generic records are supported"));
    }
    let terms = v["terms"].as_array().ok_or_else(|| bad("missing terms"))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let key = t.get(0).and_then(Value::as_str).ok_or_else(|| bad("pair list"))?;
        let pairs: Vec<[usize; 2]> = serde_json::from_str(key).map_err(|e| bad(e.to_string()))?;
        let pairs: Vec<(usize, usize)> = pairs.into_iter().map(|[a, b]| (a, b)).collect();
        let p = Planar::from_pairs(n, n, &pairs)?;
        let num = decode_laurent(&t[1])?;
        let den = decode_laurent(&t[2])?;
        if den.is_zero() {
            return Err(bad("zero denominator"));
        }
        out.push((p, RingElem::new(num, den)));
    }
    Ok((n, Tangle::from_terms(&Generic, n, n, out)))
}

pub fn decode(s: &str) -> Result<Vec<(usize, Tangle<Generic>)>> {
    let mut lines = s.lines();
    match lines.next() {
        Some(h) if h == HEADER => {}
        Some(h) => return Err(bad(format!("unsupported header {h:?}"))),
        None => return Err(bad("empty file")),
    }
    lines.filter(|l| !l.trim().is_empty()).map(decode_record).collect()
}

/// Seed the in-process projector cache from `dir`; returns the sizes loaded.
/// A missing file loads nothing.
pub fn load(dir: &Path) -> Result<Vec<usize>> {
    let path = cache_path(dir);
    if !path.exists() {
        return Ok(vec![]);
    }
    let s = fs::read_to_string(&path).map_err(|e| bad(format!("{}: {e}", path.display())))?;
    let records = decode(&s)?;
    let ns = records.iter().map(|r| r.0).collect();
    for (n, t) in records {
        wenzl::cache_insert(n, t);
    }
    Ok(ns)
}

/// Write every cached expansion to `dir` (atomically, via a temporary file).
pub fn save(dir: &Path) -> Result<()> {
    let snap = wenzl::cache_snapshot();
    let records: Vec<(usize, &Tangle<Generic>)> = snap.iter().map(|(n, t)| (*n, t.as_ref())).collect();
    let text = encode(&records);
    let io = |e: std::io::Error| bad(e.to_string());
    fs::create_dir_all(dir).map_err(io)?;
    let path = cache_path(dir);
    if fs::read_to_string(&path).map(|old| old == text).unwrap_or(false) {
        return Ok(());
    }
    let tmp = dir.join(format!("{FILE_NAME}.tmp{}", std::process::id()));
    fs::write(&tmp, text).map_err(io)?;
    fs::rename(&tmp, &path).map_err(io)
}
