//! Generators of Jones-Wenzl algebras: the turn-back family U_i, the
//! three-vertex family V_i^(s), span and minimality checks, and the relation
//! suites satisfied by both families.

use std::collections::BTreeMap;

use crate::coeff::{qfact, Ring, RingElem};
use crate::error::{Error, Result};
use crate::jw::{dimension, interface_u, pair_defects, JWTangle, JwIndex, Multiindex};
use crate::linalg::Echelon;
use crate::networks::{cable, cap, merge, split, stack, theta_closed};
use crate::tangle::Tangle;
use crate::wenzl::{obstruction, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    TurnBackU,
    ThreeVertexV,
    Custom,
}

/// One generator with its interface i (1-based) and label (s for V, 1 for U).
#[derive(Clone, Debug)]
pub struct Generator<R: Ring> {
    pub interface: usize,
    pub label: usize,
    pub element: JWTangle<R>,
}

#[derive(Clone, Debug)]
pub struct GeneratorSet<R: Ring> {
    pub kind: GeneratorKind,
    pub multiindex: Multiindex,
    pub members: Vec<Generator<R>>,
}

impl<R: Ring> GeneratorSet<R> {
    pub fn elements(&self) -> Vec<&JWTangle<R>> {
        self.members.iter().map(|g| &g.element).collect()
    }

    pub fn custom(m: &Multiindex, elements: Vec<JWTangle<R>>) -> Self {
        let members = elements.into_iter().map(|element| Generator { interface: 0, label: 0, element }).collect();
        GeneratorSet { kind: GeneratorKind::Custom, multiindex: m.clone(), members }
    }
}

fn check_interface(m: &Multiindex, i: usize) -> Result<(usize, usize, usize)> {
    if i == 0 || i >= m.d() {
        return Err(Error::IndexOutOfRange { index: i, max: m.d().saturating_sub(1) });
    }
    let e = m.entries();
    Ok((e[..i - 1].iter().sum(), e[i - 1], e[i]))
}

/// U_i = P_ς U_{s_1+…+s_i} P_ς.
pub fn build_u<R: Ring>(ring: &R, m: &Multiindex, i: usize) -> Result<JWTangle<R>> {
    interface_u(ring, m, i)
}

/// The bare diagram with k nested turn-backs between boxes i and i+1 on each side.
fn turnback_diagram<R: Ring>(ring: &R, m: &Multiindex, i: usize, k: usize) -> Result<Tangle<R>> {
    let (before, a, b) = check_interface(m, i)?;
    if k > a.min(b) {
        return Err(Error::InvalidInput(format!("k = {k} exceeds min(s_i, s_(i+1)) = {}", a.min(b))));
    }
    let after = m.n() - before - a - b;
    let x = stack(&[&cable(ring, before + a - k), &cap(ring, k), &cable(ring, b - k + after)]);
    x.compose(&x.dagger())
}

/// P_ς · (k nested turn-backs at interface i) · P_ς.
pub fn build_turnback<R: Ring>(ring: &R, m: &Multiindex, i: usize, k: usize) -> Result<JWTangle<R>> {
    let t = turnback_diagram(ring, m, i, k)?;
    JWTangle::sandwiched(ring, m, &t)
}

/// coef_{s,k} = [(a+s−b)/2]! [(b+s−a)/2]! [(a+b+s)/2 − k]! / ([s]! [k − (a+b−s)/2]! [a−k]! [b−k]!).
pub fn upper_tri_coef(a: usize, b: usize, s: usize, k: usize) -> Result<RingElem> {
    if !pair_defects(a, b).contains(&s) {
        return Err(Error::InadmissibleTriple(a, b, s));
    }
    let k0 = (a + b - s) / 2;
    if k < k0 || k > a.min(b) {
        return Err(Error::InvalidInput(format!("k = {k} outside {k0}..={}", a.min(b))));
    }
    let f = |x: usize| qfact(x as u64);
    let num = &(&f((a + s - b) / 2) * &f((b + s - a) / 2)) * &f((a + b + s) / 2 - k);
    let den = &(&(&f(s) * &f(k - k0)) * &f(a - k)) * &f(b - k);
    Ok(&num / &den)
}

/// V_i^(s) = Σ_k coef_{s,k} · turn-back_k, k from (s_i+s_{i+1}−s)/2 to min(s_i, s_{i+1}).
pub fn build_v<R: Ring>(ring: &R, m: &Multiindex, i: usize, s: usize) -> Result<JWTangle<R>> {
    let (_, a, b) = check_interface(m, i)?;
    if !pair_defects(a, b).contains(&s) {
        return Err(Error::InadmissibleTriple(a, b, s));
    }
    obstruction(ring, m.max_entry())?;
    let mut acc = Tangle::zero(ring, m.n(), m.n());
    for k in (a + b - s) / 2..=a.min(b) {
        let c = ring.lift(&upper_tri_coef(a, b, s, k)?)?;
        acc = acc.add(&turnback_diagram(ring, m, i, k)?.scale(&c))?;
    }
    JWTangle::sandwiched(ring, m, &acc)
}

/// V_i^(s) drawn as a three-vertex merging boxes i, i+1 into a cable
/// of size s followed by the mirror vertex; used to cross-check [`build_v`].
pub fn build_v_network<R: Ring>(ring: &R, m: &Multiindex, i: usize, s: usize) -> Result<JWTangle<R>> {
    let (before, a, b) = check_interface(m, i)?;
    let after = m.n() - before - a - b;
    let core = merge(ring, a, b, s)?.compose(&split(ring, s, a, b)?)?;
    let t = stack(&[&cable(ring, before), &core, &cable(ring, after)]);
    JWTangle::sandwiched(ring, m, &t)
}

/// The unit (interface 0) together with U_1, …, U_{d−1}.
pub fn u_generators<R: Ring>(ring: &R, m: &Multiindex) -> Result<GeneratorSet<R>> {
    let mut members = vec![Generator { interface: 0, label: 0, element: JWTangle::unit(ring, m)? }];
    for i in 1..m.d() {
        members.push(Generator { interface: i, label: 1, element: build_u(ring, m, i)? });
    }
    Ok(GeneratorSet { kind: GeneratorKind::TurnBackU, multiindex: m.clone(), members })
}

pub fn v_generators<R: Ring>(ring: &R, m: &Multiindex) -> Result<GeneratorSet<R>> {
    let mut members = Vec::new();
    if m.d() == 1 {
        // a single box: JW_ς is spanned by its unit
        members.push(Generator { interface: 0, label: m.n(), element: JWTangle::unit(ring, m)? });
    }
    for i in 1..m.d() {
        let (_, a, b) = check_interface(m, i)?;
        for s in pair_defects(a, b) {
            members.push(Generator { interface: i, label: s, element: build_v(ring, m, i, s)? });
        }
    }
    Ok(GeneratorSet { kind: GeneratorKind::ThreeVertexV, multiindex: m.clone(), members })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpanReport {
    pub rank: usize,
    pub dim: usize,
    /// longest word length that still added a new direction
    pub saturation_length: usize,
    /// true if closure stopped because no new direction appeared
    pub saturated: bool,
}

/// Exact rank of the span of all nonempty words of length ≤ `max_len` in the
/// given generators (include the unit among them for the unital closure).
/// Words are extended by one generator at a time and only independent ones
/// are kept.
pub fn span_rank<R: Ring>(ring: &R, m: &Multiindex, gens: &[&JWTangle<R>], max_len: usize) -> Result<SpanReport> {
    let index = JwIndex::new(m, m)?;
    let dim = dimension(m) as usize;
    let mut ech = Echelon::new(ring);
    let mut layer = Vec::new();
    let mut saturation_length = 0;
    if max_len > 0 {
        for g in gens {
            if ech.insert(index.coords(&g.expanded)) {
                layer.push((*g).clone());
            }
        }
        if !layer.is_empty() {
            saturation_length = 1;
        }
    }
    let mut len = 1;
    while !layer.is_empty() && len < max_len && ech.rank() < dim {
        len += 1;
        let mut next = Vec::new();
        for w in &layer {
            for g in gens {
                let p = w.multiply(g)?;
                if ech.insert(index.coords(&p.expanded)) {
                    next.push(p);
                }
            }
        }
        if !next.is_empty() {
            saturation_length = len;
        }
        layer = next;
    }
    let saturated = layer.is_empty() || ech.rank() == dim;
    Ok(SpanReport { rank: ech.rank(), dim, saturation_length, saturated })
}

/// True iff the set spans JW_ς and removing any single member drops the rank.
pub fn minimality_check<R: Ring>(ring: &R, set: &GeneratorSet<R>) -> Result<bool> {
    let m = &set.multiindex;
    let dim = dimension(m) as usize;
    let all = set.elements();
    if span_rank(ring, m, &all, dim)?.rank < dim {
        return Ok(false);
    }
    for skip in 0..all.len() {
        let rest: Vec<&JWTangle<R>> = all.iter().enumerate().filter(|(k, _)| *k != skip).map(|(_, g)| *g).collect();
        if span_rank(ring, m, &rest, dim)?.rank == dim {
            return Ok(false);
        }
    }
    Ok(true)
}

fn theta_weight<R: Ring>(ring: &R, a: usize, b: usize, s: usize) -> Result<R::Elem> {
    // Θ(a,b,s) / ((−1)^s [s+1])
    let th = theta_closed(ring, a, b, s)?;
    let d = ring.qint(s as i64 + 1);
    let d = if s % 2 == 1 { ring.neg(&d) } else { d };
    ring.div(&th, &d).ok_or(Error::DenominatorVanishes)
}

fn lincomb<R: Ring>(ring: &R, m: &Multiindex, terms: &[(R::Elem, &JWTangle<R>)]) -> Result<JWTangle<R>> {
    let mut acc = JWTangle { multiindex: m.clone(), expanded: Tangle::zero(ring, m.n(), m.n()) };
    for (c, t) in terms {
        acc = acc.add(&t.scale(c))?;
    }
    Ok(acc)
}

fn product<R: Ring>(ws: &[&JWTangle<R>]) -> Result<JWTangle<R>> {
    let mut acc = ws[0].clone();
    for w in &ws[1..] {
        acc = acc.multiply(w)?;
    }
    Ok(acc)
}

/// Every applicable relation among the U-relations, V-relations, and the
/// two- and three-box presentations, checked as exact equalities.
pub fn relation_suite<R: Ring>(ring: &R, m: &Multiindex) -> Result<Report> {
    obstruction(ring, m.max_entry())?;
    let mut rep = Report::default();
    let e = m.entries();
    let d = m.d();
    let s = |i: usize| e[i - 1];
    let unit = JWTangle::unit(ring, m)?;
    let u: Vec<JWTangle<R>> = (1..d).map(|i| build_u(ring, m, i)).collect::<Result<_>>()?;
    let uu = |i: usize| &u[i - 1];
    let qi = |k: usize| ring.qint(k as i64);

    // U-relations
    for i in 1..d {
        for j in [i.wrapping_sub(1), i + 1] {
            if j >= 1 && j < d && s(i) == 1 && s(i + 1) == 1 {
                rep.push(format!("UUU=U i={i} j={j}"), product(&[uu(i), uu(j), uu(i)])? == *uu(i));
            }
        }
        if i + 2 <= d && i + 1 < d && s(i) == 1 && s(i + 2) == 1 {
            let lhs = product(&[uu(i), uu(i + 1), uu(i)])?.sub(&product(&[uu(i + 1), uu(i), uu(i + 1)])?)?;
            let lam = ring.inv(&ring.pow(&qi(s(i + 1)), 2)).ok_or(Error::DenominatorVanishes)?;
            let rhs = uu(i).sub(uu(i + 1))?.scale(&lam);
            rep.push(format!("braid defect i={i}"), lhs == rhs);
        }
        let (lo, hi) = (s(i).min(s(i + 1)), s(i).max(s(i + 1)));
        if lo == 1 {
            let mu = ring.neg(&ring.div(&qi(hi + 1), &qi(hi)).ok_or(Error::DenominatorVanishes)?);
            rep.push(format!("U² = μU i={i}"), uu(i).multiply(uu(i))? == uu(i).scale(&mu));
        }
        for j in i + 2..d {
            rep.push(format!("U commute i={i} j={j}"), uu(i).multiply(uu(j))? == uu(j).multiply(uu(i))?);
        }
    }

    // V-relations; coefficients need n_ς < p̄
    if ring.pbar().exceeds(m.n()) {
        let v: Vec<BTreeMap<usize, JWTangle<R>>> = (1..d)
            .map(|i| pair_defects(s(i), s(i + 1)).into_iter().map(|t| Ok((t, build_v(ring, m, i, t)?))).collect())
            .collect::<Result<_>>()?;
        let vv = |i: usize, t: usize| &v[i - 1][&t];
        for i in 1..d {
            let mut parts = Vec::new();
            for (&t, vt) in &v[i - 1] {
                let w = theta_weight(ring, s(i), s(i + 1), t)?;
                for (&t2, vt2) in &v[i - 1] {
                    let rhs = if t == t2 { vt.scale(&w) } else { JWTangle { multiindex: m.clone(), expanded: Tangle::zero(ring, m.n(), m.n()) } };
                    rep.push(format!("VV = δΘV i={i} s={t} s'={t2}"), vt.multiply(vt2)? == rhs);
                }
                parts.push((ring.inv(&w).ok_or(Error::DenominatorVanishes)?, vt));
            }
            rep.push(format!("Σ V = 1 i={i}"), lincomb(ring, m, &parts)? == unit);
            for j in i + 2..d {
                for (t, vt) in &v[i - 1] {
                    for (t2, vt2) in &v[j - 1] {
                        rep.push(format!("V commute i={i} s={t} j={j} s''={t2}"), vt.multiply(vt2)? == vt2.multiply(vt)?);
                    }
                }
            }
        }
        // three boxes with exactly two entries equal to one
        if d == 3 && e.iter().filter(|&&x| x == 1).count() == 2 {
            let (s1, s2, s3) = (e[0], e[1], e[2]);
            if s1 == 1 && s2 == 1 {
                rep.push("three-box Rel1", product(&[vv(1, 0), vv(2, s3 - 1), vv(1, 0)])? == *vv(1, 0));
            }
            if s1 == 1 && s3 == 1 {
                let (a, b) = (vv(1, s2 - 1), vv(2, s2 - 1));
                let lhs = product(&[a, b, a])?.sub(&product(&[b, a, b])?)?;
                let lam = ring.inv(&ring.pow(&qi(s2), 2)).ok_or(Error::DenominatorVanishes)?;
                rep.push("three-box Rel2", lhs == a.sub(b)?.scale(&lam));
            }
            if s2 == 1 && s3 == 1 {
                rep.push("three-box Rel3", product(&[vv(2, 0), vv(1, s1 - 1), vv(2, 0)])? == *vv(2, 0));
            }
        }
    }

    // two boxes
    if d == 2 {
        let (s1, s2) = (e[0], e[1]);
        rep.push("P² = P", unit.multiply(&unit)? == unit);
        rep.push("PU = U = UP", unit.multiply(uu(1))? == *uu(1) && uu(1).multiply(&unit)? == *uu(1));
        let lo = s1.min(s2);
        let mut pw = unit.clone();
        for _ in 0..lo {
            pw = pw.multiply(uu(1))?;
        }
        let c = ring.neg(&ring.div(&qi(s1.max(s2) + 1), &ring.mul(&qi(s1), &qi(s2))).ok_or(Error::DenominatorVanishes)?);
        rep.push("U^(min+1) = cU^min", pw.multiply(uu(1))? == pw.scale(&c));
        // U·T_k = a_k T_k + b_k T_{k+1} with a_k = −[k][s1+s2−k+1]/([s1][s2]),
        // b_k = [s1−k][s2−k]/([s1][s2]); hence U·T_min = −([max+1]/[max]) T_min
        // and Π_{k=0}^{min} (U − a_k) = 0
        let a_k = |k: usize| -> Result<R::Elem> {
            let num = ring.mul(&qi(k), &qi(s1 + s2 - k + 1));
            let v = ring.div(&num, &ring.mul(&qi(s1), &qi(s2))).ok_or(Error::DenominatorVanishes)?;
            Ok(ring.neg(&v))
        };
        for k in 0..lo {
            let tk = build_turnback(ring, m, 1, k)?;
            let b = ring.div(&ring.mul(&qi(s1 - k), &qi(s2 - k)), &ring.mul(&qi(s1), &qi(s2))).ok_or(Error::DenominatorVanishes)?;
            let rhs = tk.scale(&a_k(k)?).add(&build_turnback(ring, m, 1, k + 1)?.scale(&b))?;
            rep.push(format!("U·T_k recursion k={k}"), uu(1).multiply(&tk)? == rhs);
        }
        let tmin = build_turnback(ring, m, 1, lo)?;
        rep.push("U·T_min = cT_min", uu(1).multiply(&tmin)? == tmin.scale(&a_k(lo)?));
        let mut poly = unit.clone();
        for k in 0..=lo {
            poly = poly.multiply(&uu(1).sub(&unit.scale(&a_k(k)?))?)?;
        }
        rep.push("Π (U − a_k) = 0", poly.is_zero());
    }
    Ok(rep)
}

/// μ_s = −[s+1]/[s] and λ_s = 1/[s]² for every entry s of ς (and s = 1).
pub fn abstract_parameters<R: Ring>(ring: &R, m: &Multiindex) -> Result<(BTreeMap<usize, R::Elem>, BTreeMap<usize, R::Elem>)> {
    let mut lam = BTreeMap::new();
    let mut mu = BTreeMap::new();
    for &s in m.entries().iter().chain(std::iter::once(&1)) {
        obstruction(ring, s)?;
        let qs = ring.qint(s as i64);
        let inv = ring.inv(&qs).ok_or(Error::DenominatorVanishes)?;
        lam.insert(s, ring.mul(&inv, &inv));
        mu.insert(s, ring.neg(&ring.mul(&ring.qint(s as i64 + 1), &inv)));
    }
    Ok((lam, mu))
}

/// ς = (k_1,1,1,k_2,1,1,…,k_{m+1}).
pub fn is_valenced_shape(m: &Multiindex) -> bool {
    let e = m.entries();
    e.len() % 3 == 1 && e.iter().enumerate().all(|(i, &x)| i % 3 == 0 || x == 1)
}

/// The abstract valenced relations, instantiated with [`abstract_parameters`],
/// checked on the U generators.
pub fn valenced_relations_check<R: Ring>(ring: &R, m: &Multiindex) -> Result<Report> {
    if !is_valenced_shape(m) {
        return Err(Error::InvalidInput(format!("{m} is not of the form (k,1,1,k,…)")));
    }
    let (lam, mu) = abstract_parameters(ring, m)?;
    let mut rep = Report::default();
    let e = m.entries();
    let d = m.d();
    let s = |i: usize| e[i - 1];
    let u: Vec<JWTangle<R>> = (1..d).map(|i| build_u(ring, m, i)).collect::<Result<_>>()?;
    let uu = |i: usize| &u[i - 1];
    for i in 1..d {
        for j in [i.wrapping_sub(1), i + 1] {
            if j >= 1 && j < d && s(i) == 1 && s(i + 1) == 1 {
                rep.push(format!("Val1 i={i} j={j}"), product(&[uu(i), uu(j), uu(i)])? == *uu(i));
            }
        }
        if i + 1 < d && s(i) == 1 && s(i + 2) == 1 {
            let lhs = product(&[uu(i), uu(i + 1), uu(i)])?.sub(&product(&[uu(i + 1), uu(i), uu(i + 1)])?)?;
            rep.push(format!("Val2 i={i}"), lhs == uu(i).sub(uu(i + 1))?.scale(&lam[&s(i + 1)]));
        }
        rep.push(format!("Val3 i={i}"), uu(i).multiply(uu(i))? == uu(i).scale(&mu[&s(i).max(s(i + 1))]));
        for j in i + 2..d {
            rep.push(format!("Val4 i={i} j={j}"), uu(i).multiply(uu(j))? == uu(j).multiply(uu(i))?);
        }
    }
    Ok(rep)
}

/// The unit as Σ_s ((−1)^s[s+1]/Θ) V_i^(s), and the normalized V_i^(s) as
/// mutually orthogonal idempotents, at every interface.
pub fn idempotent_check<R: Ring>(ring: &R, m: &Multiindex) -> Result<Report> {
    obstruction(ring, m.n())?;
    let mut rep = Report::default();
    let unit = JWTangle::unit(ring, m)?;
    let e = m.entries();
    for i in 1..m.d() {
        let (a, b) = (e[i - 1], e[i]);
        let normalized: Vec<JWTangle<R>> = pair_defects(a, b)
            .into_iter()
            .map(|s| {
                let w = theta_weight(ring, a, b, s)?;
                Ok(build_v(ring, m, i, s)?.scale(&ring.inv(&w).ok_or(Error::DenominatorVanishes)?))
            })
            .collect::<Result<_>>()?;
        let mut sum = JWTangle { multiindex: m.clone(), expanded: Tangle::zero(ring, m.n(), m.n()) };
        for x in &normalized {
            sum = sum.add(x)?;
        }
        rep.push(format!("sum to one i={i}"), sum == unit);
        for (x, ex) in normalized.iter().enumerate() {
            for (y, ey) in normalized.iter().enumerate() {
                let p = ex.multiply(ey)?;
                let ok = if x == y { p == *ex } else { p.is_zero() };
                rep.push(format!("orthogonal idempotents i={i} ({x},{y})"), ok);
            }
        }
    }
    Ok(rep)
}

/// The triangular system between {V_i^(s)}_s and {turn-back_k}_k: inverting it
/// recovers each turn-back from the V's, and the V's agree with the
/// three-vertex drawing.
pub fn upper_tri_check<R: Ring>(ring: &R, m: &Multiindex, i: usize) -> Result<bool> {
    let (_, a, b) = check_interface(m, i)?;
    obstruction(ring, m.n())?;
    let lo = a.min(b);
    let ks: Vec<usize> = (0..=lo).collect();
    // V^(s) with s = a+b−2k0 has leading turn-back k0
    let ss: Vec<usize> = ks.iter().map(|k| a + b - 2 * k).collect();
    let n = ks.len();
    let mut c = vec![vec![ring.zero(); n]; n];
    for (r, &s) in ss.iter().enumerate() {
        for (col, &k) in ks.iter().enumerate() {
            if k >= (a + b - s) / 2 {
                c[r][col] = ring.lift(&upper_tri_coef(a, b, s, k)?)?;
            }
        }
    }
    let inv = crate::linalg::inverse(ring, &c)?;
    let vs: Vec<JWTangle<R>> = ss.iter().map(|&s| build_v(ring, m, i, s)).collect::<Result<_>>()?;
    for (col, &k) in ks.iter().enumerate() {
        let terms: Vec<(R::Elem, &JWTangle<R>)> = (0..n).map(|r| (inv[col][r].clone(), &vs[r])).collect();
        if lincomb(ring, m, &terms)? != build_turnback(ring, m, i, k)? {
            return Ok(false);
        }
    }
    for (r, &s) in ss.iter().enumerate() {
        if build_v_network(ring, m, i, s)? != vs[r] {
            return Ok(false);
        }
    }
    Ok(true)
}

fn family_rank<R: Ring>(ring: &R, m: &Multiindex, fam: &[JWTangle<R>]) -> Result<usize> {
    let index = JwIndex::new(m, m)?;
    let mut e = Echelon::new(ring);
    for t in fam {
        e.insert(index.coords(&t.expanded));
    }
    Ok(e.rank())
}

/// The explicit bases listed for two boxes, and for three boxes with exactly
/// two entries equal to one: each family has dim JW_ς elements and full rank.
pub fn basis_claims<R: Ring>(ring: &R, m: &Multiindex) -> Result<Report> {
    obstruction(ring, m.n())?;
    let mut rep = Report::default();
    let dim = dimension(m) as usize;
    let e = m.entries();
    let unit = JWTangle::unit(ring, m)?;
    let mut check = |name: &str, fam: Vec<JWTangle<R>>| -> Result<()> {
        let ok = fam.len() == dim && family_rank(ring, m, &fam)? == dim;
        rep.push(name, ok);
        Ok(())
    };
    if m.d() == 2 {
        let (s1, s2) = (e[0], e[1]);
        let u = build_u(ring, m, 1)?;
        let mut fam = vec![unit.clone()];
        let mut pw = unit.clone();
        for _ in 1..=s1.min(s2) {
            pw = pw.multiply(&u)?;
            fam.push(pw.clone());
        }
        check("two-box basis {1, U^s}", fam)?;
        let vs: Vec<JWTangle<R>> = pair_defects(s1, s2).into_iter().map(|s| build_v(ring, m, 1, s)).collect::<Result<_>>()?;
        check("two-box basis {V^s}", vs.clone())?;
        let mut fam = vec![unit.clone()];
        fam.extend(vs[..vs.len() - 1].iter().cloned());
        check("two-box basis {1, V^s (s < s1+s2)}", fam)?;
    }
    if m.d() == 3 && e.iter().filter(|&&x| x == 1).count() == 2 {
        let (s1, s2, s3) = (e[0], e[1], e[2]);
        let (a, b) = if s1 == 1 && s2 == 1 {
            (build_v(ring, m, 1, 0)?, build_v(ring, m, 2, s3 - 1)?)
        } else if s1 == 1 && s3 == 1 {
            (build_v(ring, m, 1, s2 - 1)?, build_v(ring, m, 2, s2 - 1)?)
        } else {
            (build_v(ring, m, 1, s1 - 1)?, build_v(ring, m, 2, 0)?)
        };
        // the s_2 = s_3 = 1 family is the mirror image of the s_1 = s_2 = 1 one
        let last = if s2 == 1 && s3 == 1 && s1 != 1 { product(&[&a, &b, &a])? } else { product(&[&b, &a, &b])? };
        let fam = vec![unit.clone(), a.clone(), b.clone(), a.multiply(&b)?, b.multiply(&a)?, last];
        check("three-box basis", fam)?;
    }
    Ok(rep)
}

/// Span rank of the U generators (with the unit) and of the V generators.
pub fn generator_ranks<R: Ring>(ring: &R, m: &Multiindex) -> Result<(SpanReport, SpanReport)> {
    let dim = dimension(m) as usize;
    let u = u_generators(ring, m)?;
    let v = v_generators(ring, m)?;
    Ok((span_rank(ring, m, &u.elements(), dim)?, span_rank(ring, m, &v.elements(), dim)?))
}

/// Experiment for roots of unity with max ς < p̄ ≤ n_ς: does the U-family
/// still span? Reported, never asserted.
pub fn generator_experiment<R: Ring>(ring: &R, m: &Multiindex) -> Result<SpanReport> {
    let u = u_generators(ring, m)?;
    span_rank(ring, m, &u.elements(), dimension(m) as usize)
}
