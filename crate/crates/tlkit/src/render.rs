//! Output formats: quantum-integer text, LaTeX, TikZ and JSON.
//!
//! Generic coefficients are pretty-printed as signed rational multiples of
//! products and quotients of quantum integers whenever such a form exists
//! (`1/[2]`, `[2]/[3]`, `-2[2][3]/[5]`), and otherwise as a ratio of Laurent
//! polynomials. JSON always carries the expanded form
//! `{"num": [[exp, "rat"], ...], "den": [...]}`.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Map, Value};

use crate::coeff::{cyclotomic_poly, qint, Cyclo, LaurentPoly, Ring, RingElem};
use crate::diagrams::Planar;
use crate::tangle::Tangle;

/// Something printable in every output format.
pub trait Render {
    fn text(&self) -> String;
    fn latex(&self) -> String;
    fn json(&self) -> Value;
}

/// `c · Π [k]^{e_k}` with integer exponents, when it exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumForm {
    pub constant: BigRational,
    /// (k, exponent), k ≥ 2, ascending k, exponents nonzero
    pub factors: Vec<(u64, i32)>,
}

fn totient(m: u32) -> u32 {
    (1..=m).filter(|&k| num_integer::gcd(k, m) == 1).count() as u32
}

/// Add `sign` × the multiplicity of each Φ_m (m ≤ bound) in `p`; false if
/// `p` is not a monomial times a product of such cyclotomic polynomials.
fn cyclotomic_multiplicities(p: &LaurentPoly, bound: u32, out: &mut BTreeMap<u32, i32>, sign: i32) -> bool {
    let (_, _, mut z) = p.decompose();
    for m in 1..=bound {
        if z.deg() == 0 {
            break;
        }
        if totient(m) as usize > z.deg() {
            continue;
        }
        let phi = cyclotomic_poly(m);
        while let Some(y) = z.div_exact(&phi) {
            z = y;
            *out.entry(m).or_insert(0) += sign;
        }
    }
    z.deg() == 0
}

fn degree_span(p: &LaurentPoly) -> u32 {
    match (p.low(), p.high()) {
        (Some(l), Some(h)) => (h - l) as u32,
        _ => 0,
    }
}

/// Factor an element as c · Π [k]^{e_k}, if possible. Since
/// [k] = q^{1−k} Π_{m | 2k, m ≥ 3} Φ_m(q), the exponents are read off the
/// cyclotomic multiplicities from the largest index down.
pub fn quantum_form(x: &RingElem) -> Option<QuantumForm> {
    if x.is_zero() {
        return Some(QuantumForm { constant: BigRational::zero(), factors: vec![] });
    }
    let bound = 2 * (degree_span(x.num()) + degree_span(x.den())) + 4;
    let mut mult = BTreeMap::new();
    if !cyclotomic_multiplicities(x.num(), bound, &mut mult, 1)
        || !cyclotomic_multiplicities(x.den(), bound, &mut mult, -1)
    {
        return None;
    }
    let mut factors: BTreeMap<u64, i32> = BTreeMap::new();
    while let Some((&m, &e)) = mult.iter().rev().find(|(_, e)| **e != 0) {
        if m <= 2 || m % 2 == 1 {
            return None;
        }
        for d in (3..=m).filter(|d| m % d == 0) {
            *mult.entry(d).or_insert(0) -= e;
        }
        *factors.entry(m as u64 / 2).or_insert(0) += e;
    }
    factors.retain(|_, e| *e != 0);
    let prod = factors.iter().fold(RingElem::one(), |acc, (&k, &e)| {
        let b = qint(k as i64).pow(e.unsigned_abs());
        if e > 0 {
            &acc * &b
        } else {
            &acc / &b
        }
    });
    let c = x / &prod;
    let (constant, e) = monomial(c.num())?;
    if !c.is_poly() || e != 0 {
        return None;
    }
    Some(QuantumForm { constant, factors: factors.into_iter().collect() })
}

fn monomial(p: &LaurentPoly) -> Option<(BigRational, i32)> {
    match p.terms() {
        [(e, c)] => Some((c.clone(), *e)),
        _ => None,
    }
}

fn qpow_text(k: u64, e: i32) -> String {
    if e == 1 {
        format!("[{k}]")
    } else {
        format!("[{k}]^{e}")
    }
}

impl QuantumForm {
    fn split(&self) -> (BigRational, Vec<(u64, i32)>, Vec<(u64, i32)>) {
        let num = self.factors.iter().filter(|f| f.1 > 0).cloned().collect();
        let den = self.factors.iter().filter(|f| f.1 < 0).map(|&(k, e)| (k, -e)).collect();
        (self.constant.clone(), num, den)
    }

    pub fn text(&self) -> String {
        if self.constant.is_zero() {
            return "0".into();
        }
        let (c, num, den) = self.split();
        let sign = if c.is_negative() { "-" } else { "" };
        let c = c.abs();
        let (a, b) = (c.numer().clone(), c.denom().clone());
        let mut top = String::new();
        if !a.is_one() || num.is_empty() {
            top.push_str(&a.to_string());
        }
        for &(k, e) in &num {
            top.push_str(&qpow_text(k, e));
        }
        let mut bottom: Vec<String> = Vec::new();
        if !b.is_one() {
            bottom.push(b.to_string());
        }
        bottom.extend(den.iter().map(|&(k, e)| qpow_text(k, e)));
        match bottom.len() {
            0 => format!("{sign}{top}"),
            1 => format!("{sign}{top}/{}", bottom[0]),
            _ => format!("{sign}{top}/({})", bottom.concat()),
        }
    }

    pub fn latex(&self) -> String {
        if self.constant.is_zero() {
            return "0".into();
        }
        let (c, num, den) = self.split();
        let sign = if c.is_negative() { "-" } else { "" };
        let c = c.abs();
        let (a, b) = (c.numer().clone(), c.denom().clone());
        let part = |k: u64, e: i32| if e == 1 { format!("[{k}]") } else { format!("[{k}]^{{{e}}}") };
        let mut top = String::new();
        if !a.is_one() || num.is_empty() {
            top.push_str(&a.to_string());
        }
        for &(k, e) in &num {
            top.push_str(&part(k, e));
        }
        let mut bottom = String::new();
        if !b.is_one() {
            bottom.push_str(&b.to_string());
        }
        for &(k, e) in &den {
            bottom.push_str(&part(k, e));
        }
        if bottom.is_empty() {
            format!("{sign}{top}")
        } else {
            format!("{sign}\\frac{{{top}}}{{{bottom}}}")
        }
    }
}

fn rat_latex(c: &BigRational) -> String {
    if c.is_integer() {
        c.to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

/// Power-series style LaTeX for Σ c_e x^e, highest power first.
fn series_latex<'a>(terms: impl DoubleEndedIterator<Item = (i32, &'a BigRational)>, var: &str) -> String {
    let mut s = String::new();
    for (e, c) in terms.rev().filter(|t| !t.1.is_zero()) {
        let neg = c.is_negative();
        let a = c.abs();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if !a.is_one() || e == 0 {
            s.push_str(&rat_latex(&a));
        }
        match e {
            0 => {}
            1 => s.push_str(var),
            _ => s.push_str(&format!("{var}^{{{e}}}")),
        }
    }
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}

/// `[[exp, "rat"], ...]`, ascending exponents.
pub fn laurent_json(p: &LaurentPoly) -> Value {
    Value::Array(p.terms().iter().map(|(e, c)| json!([e, c.to_string()])).collect())
}

impl Render for RingElem {
    fn text(&self) -> String {
        match quantum_form(self) {
            Some(f) => f.text(),
            None => self.to_string(),
        }
    }

    fn latex(&self) -> String {
        if let Some(f) = quantum_form(self) {
            return f.latex();
        }
        let num = series_latex(self.num().terms().iter().map(|(e, c)| (*e, c)), "q");
        if self.is_poly() {
            num
        } else {
            let den = series_latex(self.den().terms().iter().map(|(e, c)| (*e, c)), "q");
            format!("\\frac{{{num}}}{{{den}}}")
        }
    }

    fn json(&self) -> Value {
        json!({ "num": laurent_json(self.num()), "den": laurent_json(self.den()) })
    }
}

/// Cyclotomic values are written in the power basis of ζ = e^{iπ/p}.
impl Render for Cyclo {
    fn text(&self) -> String {
        self.to_string()
    }

    fn latex(&self) -> String {
        series_latex(self.coeffs().iter().enumerate().map(|(e, c)| (e as i32, c)), "\\zeta")
    }

    fn json(&self) -> Value {
        let num: Vec<Value> = self
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| json!([e, c.to_string()]))
            .collect();
        json!({ "num": num, "den": [[0, "1"]] })
    }
}

// ---- tangles ----

/// `{"[[1,4],[2,3]]": "1", "[[1,2],[3,4]]": "1/[2]"}` in term order.
pub fn tangle_text<R: Ring>(t: &Tangle<R>) -> String
where
    R::Elem: Render,
{
    let items: Vec<String> = t
        .terms()
        .map(|(p, c)| format!("{}: {}", Value::String(p.encode()), Value::String(c.text())))
        .collect();
    format!("{{{}}}", items.join(", "))
}

/// Object keyed by pair list, each coefficient in the num/den schema.
pub fn tangle_json<R: Ring>(t: &Tangle<R>) -> Value
where
    R::Elem: Render,
{
    let mut m = Map::new();
    for (p, c) in t.terms() {
        m.insert(p.encode(), c.json());
    }
    Value::Object(m)
}

pub fn tangle_latex<R: Ring>(t: &Tangle<R>) -> String
where
    R::Elem: Render,
{
    let parts: Vec<String> =
        t.terms().map(|(p, c)| format!("{}\\,\\mathtt{{{}}}", paren(&c.latex()), p.encode())).collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn paren(s: &str) -> String {
    if s.contains(" + ") || s.contains(" - ") {
        format!("\\left({s}\\right)")
    } else {
        s.to_string()
    }
}

/// Node position under the boundary convention: left nodes top-down on x=0,
/// right nodes (numbered bottom-up) on x=`w`.
fn node_xy(p: &Planar, i: usize, w: f64) -> (f64, f64) {
    if p.is_left(i) {
        (0.0, -(i as f64))
    } else {
        (w, -(p.right_pos(i) as f64))
    }
}

/// TikZ commands for one diagram with its lower-left corner at `x0`.
pub fn diagram_tikz(p: &Planar, x0: f64) -> String {
    let w = 1.5;
    let h = p.left().max(p.right()).max(1) as f64 - 1.0;
    let mut s = format!(
        "  \\draw[gray!50] ({:.2},{:.2}) rectangle ({:.2},{:.2});\n",
        x0,
        0.4,
        x0 + w,
        -h - 0.4
    );
    for (a, b) in p.pairs() {
        let (a, b) = (a - 1, b - 1);
        let (xa, ya) = node_xy(p, a, w);
        let (xb, yb) = node_xy(p, b, w);
        let (ca, cb) = if p.is_left(a) == p.is_left(b) {
            let d = 0.35 * (ya - yb).abs().max(1.0);
            let dir = if p.is_left(a) { 1.0 } else { -1.0 };
            (xa + dir * d, xb + dir * d)
        } else {
            (xa + w / 2.0 * (xb - xa).signum(), xb - w / 2.0 * (xb - xa).signum())
        };
        s.push_str(&format!(
            "  \\draw[thick] ({:.2},{ya:.2}) .. controls ({:.2},{ya:.2}) and ({:.2},{yb:.2}) .. ({:.2},{yb:.2});\n",
            x0 + xa,
            x0 + ca,
            x0 + cb,
            x0 + xb
        ));
    }
    for i in 0..p.size() {
        let (x, y) = node_xy(p, i, w);
        s.push_str(&format!("  \\fill ({:.2},{y:.2}) circle (1.5pt);\n", x0 + x));
    }
    s
}

/// A projector box P_n drawn at `x0`, cable of `n` strands through it.
pub fn projector_box_tikz(n: usize, x0: f64) -> String {
    let w = 1.5;
    let h = n.max(1) as f64 - 1.0;
    let mut s = String::new();
    for i in 0..n {
        s.push_str(&format!("  \\draw[thick] ({:.2},{:.2}) -- ({:.2},{:.2});\n", x0, -(i as f64), x0 + w, -(i as f64)));
    }
    s.push_str(&format!(
        "  \\filldraw[fill=white] ({:.2},{:.2}) rectangle ({:.2},{:.2});\n  \\node at ({:.2},{:.2}) {{$P_{{{n}}}$}};\n",
        x0 + 0.5,
        0.3,
        x0 + 1.0,
        -h - 0.3,
        x0 + 0.75,
        -h / 2.0
    ));
    s
}

/// The expansion drawn as a sum of diagrams, optionally led by a box.
pub fn tangle_tikz<R: Ring>(t: &Tangle<R>, lead_box: Option<usize>) -> String
where
    R::Elem: Render,
{
    let mut s = String::from("\\begin{tikzpicture}[scale=0.6]\n");
    let mut x = 0.0;
    let mid = -((t.left().max(t.right()).max(1) - 1) as f64) / 2.0;
    if let Some(n) = lead_box {
        s.push_str(&projector_box_tikz(n, x));
        x += 1.8;
        s.push_str(&format!("  \\node at ({x:.2},{mid:.2}) {{$=$}};\n"));
        x += 0.6;
    }
    for (k, (p, c)) in t.terms().enumerate() {
        let sep = if k == 0 { "" } else { "+" };
        s.push_str(&format!("  \\node[anchor=east] at ({:.2},{mid:.2}) {{${sep}{}$}};\n", x + 1.2, paren(&c.latex())));
        x += 1.4;
        s.push_str(&diagram_tikz(p, x));
        x += 2.0;
    }
    s.push_str("\\end{tikzpicture}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::qfact;

    #[test]
    fn quantum_text() {
        assert_eq!((RingElem::one() / qint(2)).text(), "1/[2]");
        assert_eq!(qint(3).text(), "[3]");
        assert_eq!((qint(2) / qint(3)).text(), "[2]/[3]");
        assert_eq!((-(RingElem::one() / (qint(2) * qint(3)))).text(), "-1/([2][3])");
        assert_eq!((qint(2) * qint(2)).text(), "[2]^2");
        assert_eq!(RingElem::one().text(), "1");
        assert_eq!(RingElem::zero().text(), "0");
        assert_eq!(RingElem::q().text(), "q");
        assert_eq!((qfact(3).scale_int(2) / qint(5)).text(), "2[2][3]/[5]");
        assert_eq!((qint(2) / qint(3)).latex(), "\\frac{[2]}{[3]}");
    }

    #[test]
    fn quantum_form_is_exact() {
        for x in [qint(4) / qint(2), qfact(5) / qfact(3), RingElem::q() + RingElem::one()] {
            if let Some(f) = quantum_form(&x) {
                let v = f.factors.iter().fold(RingElem::from_rational(f.constant.clone()), |acc, &(k, e)| {
                    let b = qint(k as i64);
                    if e > 0 {
                        &acc * &b.pow(e as u32)
                    } else {
                        &acc / &b.pow((-e) as u32)
                    }
                });
                assert_eq!(v, x);
            }
        }
    }

    #[test]
    fn json_schema() {
        let x = RingElem::one() / qint(2);
        let v = x.json();
        assert_eq!(v["num"], json!([[1, "1"]]));
        assert_eq!(v["den"], json!([[0, "1"], [2, "1"]]));
    }
}
