//! Closed networks built from projector boxes and cables, their brute-force
//! evaluation, and closed formulas for Theta, special Tetrahedral and
//! loop-box networks.
//!
//! Tangles are drawn left to right: a tangle `m → n` has `m` nodes on its left
//! side and `n` on its right, and `a.compose(b)` glues `b` to the right of `a`.
//! Stacking places the first factor above the second.

use crate::coeff::{qfact, qint, Ring, RingElem};
use crate::diagrams::Planar;
use crate::error::{Error, Result};
use crate::tangle::Tangle;
use crate::wenzl::{lift_at, obstruction, projector_tangle};

/// A 0 → 0 tangle: every strand is closed.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedNetwork<R: Ring> {
    tangle: Tangle<R>,
}

impl<R: Ring> ClosedNetwork<R> {
    pub fn new(t: Tangle<R>) -> Result<Self> {
        if t.left() != 0 || t.right() != 0 {
            return Err(Error::InvalidInput(format!("network has {} + {} open ends", t.left(), t.right())));
        }
        Ok(ClosedNetwork { tangle: t })
    }

    pub fn tangle(&self) -> &Tangle<R> {
        &self.tangle
    }

    /// Σ coefficient · ν^{#loops}; the loops were weighted while composing.
    pub fn evaluate(&self) -> R::Elem {
        self.tangle.scalar()
    }
}

/// Three cables meeting at a vertex, admissible when the derived strand
/// counts are nonnegative integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThreeVertex {
    pub r: usize,
    pub s: usize,
    pub t: usize,
    /// strands shared by r and s
    pub i: usize,
    /// strands shared by s and t
    pub j: usize,
    /// strands shared by t and r
    pub k: usize,
}

impl ThreeVertex {
    pub fn new(r: usize, s: usize, t: usize) -> Result<Self> {
        let (ri, si, ti) = (r as i64, s as i64, t as i64);
        let (i2, j2, k2) = (ri + si - ti, si + ti - ri, ti + ri - si);
        if i2 < 0 || j2 < 0 || k2 < 0 || i2 % 2 != 0 {
            return Err(Error::InadmissibleTriple(r, s, t));
        }
        Ok(ThreeVertex { r, s, t, i: (i2 / 2) as usize, j: (j2 / 2) as usize, k: (k2 / 2) as usize })
    }
}

pub fn admissible(r: usize, s: usize, t: usize) -> bool {
    ThreeVertex::new(r, s, t).is_ok()
}

// ---- combinators ----

pub fn cable<R: Ring>(ring: &R, n: usize) -> Tangle<R> {
    Tangle::unit(ring, n)
}

/// Projector box P_n on a cable of n strands.
pub fn boxed<R: Ring>(ring: &R, n: usize) -> Result<Tangle<R>> {
    projector_tangle(ring, n)
}

/// `k` nested cups, 0 → 2k.
pub fn cup<R: Ring>(ring: &R, k: usize) -> Tangle<R> {
    Tangle::from_planar(ring, Planar::cup(k), ring.one())
}

/// `k` nested caps, 2k → 0.
pub fn cap<R: Ring>(ring: &R, k: usize) -> Tangle<R> {
    Tangle::from_planar(ring, Planar::cap(k), ring.one())
}

/// Stack tangles top to bottom.
pub fn stack<R: Ring>(parts: &[&Tangle<R>]) -> Tangle<R> {
    let mut it = parts.iter();
    let first = (*it.next().expect("at least one part")).clone();
    it.fold(first, |acc, t| acc.tensor(t))
}

/// Compose tangles left to right.
pub fn chain<R: Ring>(parts: &[&Tangle<R>]) -> Result<Tangle<R>> {
    let mut it = parts.iter();
    let first = (*it.next().expect("at least one part")).clone();
    it.try_fold(first, |acc, t| acc.compose(t))
}

/// Close the bottom `s` strands of a square tangle back onto themselves.
pub fn partial_trace<R: Ring>(t: &Tangle<R>, s: usize) -> Result<Tangle<R>> {
    let n = t.n();
    if s > n {
        return Err(Error::IndexOutOfRange { index: s, max: n });
    }
    let ring = t.ring();
    let r = n - s;
    let open = cable(ring, r).tensor(&cup(ring, s));
    let close = cable(ring, r).tensor(&cap(ring, s));
    chain(&[&open, &t.tensor(&cable(ring, s)), &close])
}

/// Close every strand of a square tangle.
pub fn close<R: Ring>(t: &Tangle<R>) -> Result<ClosedNetwork<R>> {
    ClosedNetwork::new(partial_trace(t, t.n())?)
}

/// Three-vertex joining cables a (above) and b (below) into c:
/// k = (a+b−c)/2 strands of a turn back into b; boxes on all three cables.
pub fn merge<R: Ring>(ring: &R, a: usize, b: usize, c: usize) -> Result<Tangle<R>> {
    let v = ThreeVertex::new(a, b, c)?;
    let k = v.i;
    let middle = stack(&[&cable(ring, a - k), &cap(ring, k), &cable(ring, b - k)]);
    chain(&[&boxed(ring, a)?.tensor(&boxed(ring, b)?), &middle, &boxed(ring, c)?])
}

/// Mirror of [`merge`]: cable c splits into a (above) and b (below).
pub fn split<R: Ring>(ring: &R, c: usize, a: usize, b: usize) -> Result<Tangle<R>> {
    Ok(merge(ring, a, b, c)?.dagger())
}

// ---- network families ----

/// Two three-vertices joined by cables r, s, t.
pub fn build_theta<R: Ring>(ring: &R, r: usize, s: usize, t: usize) -> Result<ClosedNetwork<R>> {
    ThreeVertex::new(r, s, t)?;
    close(&split(ring, r, s, t)?.compose(&merge(ring, s, t, r)?)?)
}

/// Θ(r,s,t) = (−1)^{σ}[σ+1]! [σ−t]! [σ−r]! [σ−s]! / ([r]![s]![t]!), σ = (r+s+t)/2.
pub fn theta_closed_generic(r: usize, s: usize, t: usize) -> Result<RingElem> {
    let v = ThreeVertex::new(r, s, t)?;
    let sigma = v.i + v.j + v.k;
    let f = |x: usize| qfact(x as u64);
    let val = sign(sigma) * f(sigma + 1) * f(v.i) * f(v.j) * f(v.k) / (f(r) * f(s) * f(t));
    Ok(val)
}

pub fn theta_closed<R: Ring>(ring: &R, r: usize, s: usize, t: usize) -> Result<R::Elem> {
    let v = theta_closed_generic(r, s, t)?;
    let m = r.max(s).max(t);
    obstruction(ring, m)?;
    lift_at(ring, &v, m)
}

fn sign(k: usize) -> RingElem {
    RingElem::from_int(if k % 2 == 0 { 1 } else { -1 })
}

/// (−1)^s [r+s+1]/[r+1]: the factor left when s strands of P_{r+s} are closed.
pub fn delta_factor(r: usize, s: usize) -> RingElem {
    sign(s) * qint((r + s + 1) as i64) / qint((r + 1) as i64)
}

/// Closing the bottom s strands of P_{r+s} leaves (−1)^s [r+s+1]/[r+1] · P_r.
pub fn delta_tangle_check<R: Ring>(ring: &R, r: usize, s: usize) -> Result<bool> {
    let lhs = partial_trace(&boxed(ring, r + s)?, s)?;
    let k = lift_at(ring, &delta_factor(r, s), r + s)?;
    Ok(lhs == boxed(ring, r)?.scale(&k))
}

/// Bubble: cable s splits into (r, t) which merge into s′. Equals
/// δ_{s,s′} Θ(r,s,t)/((−1)^s[s+1]) · P_s as a tangle.
pub fn loop_erasure_tangle<R: Ring>(ring: &R, r: usize, s: usize, s2: usize, t: usize) -> Result<Tangle<R>> {
    split(ring, s, r, t)?.compose(&merge(ring, r, t, s2)?)
}

pub fn loop_erasure_check<R: Ring>(ring: &R, r: usize, s: usize, s2: usize, t: usize) -> Result<bool> {
    let lhs = loop_erasure_tangle(ring, r, s, s2, t)?;
    if s != s2 {
        return Ok(lhs.is_zero());
    }
    let m = r.max(s).max(t);
    let k = theta_closed_generic(r, s, t)? / (sign(s) * qint(s as i64 + 1));
    let k = lift_at(ring, &k, m)?;
    Ok(lhs == boxed(ring, s)?.scale(&k) && ring.eq(&lhs.evaluate(), &k))
}

/// Two P_s boxes, the second rotated i positions around its boundary, closed up.
pub fn build_pre_loop_box<R: Ring>(ring: &R, s: usize, i: usize) -> Result<ClosedNetwork<R>> {
    if i > s {
        return Err(Error::IndexOutOfRange { index: i, max: s });
    }
    let p = boxed(ring, s)?;
    close(&p.compose(&p.rotate(i as isize))?)
}

/// (−1)^s [s+1] [i]! [s−i]! / [s]!
pub fn pre_loop_box<R: Ring>(ring: &R, s: usize, i: usize) -> Result<R::Elem> {
    if i > s {
        return Err(Error::IndexOutOfRange { index: i, max: s });
    }
    obstruction(ring, s)?;
    let f = |x: usize| qfact(x as u64);
    let v = sign(s) * qint(s as i64 + 1) * f(i) * f(s - i) / f(s);
    lift_at(ring, &v, s)
}

fn loop_box_params(s: usize, i: usize, j: usize, k: usize) -> Result<usize> {
    let c2 = i as i64 + k as i64 - j as i64;
    if c2 < 0 || c2 % 2 != 0 || c2 / 2 > s as i64 || k > s {
        return Err(Error::InadmissibleTriple(i, j, k));
    }
    Ok((c2 / 2) as usize)
}

/// The pre-loop-box network with an extra P_s box inserted on k strands of the
/// connecting cable, its other s−k strands looping around it.
pub fn build_loop_box<R: Ring>(ring: &R, s: usize, i: usize, j: usize, k: usize) -> Result<ClosedNetwork<R>> {
    let c = loop_box_params(s, i, j, k)?;
    let p = boxed(ring, s)?;
    let threaded = partial_trace(&p, s - k)?.tensor(&cable(ring, s - k));
    close(&chain(&[&p, &threaded, &p.rotate(c as isize)])?)
}

/// (−1)^k [s+1]² / [k+1] · [c]! [s−c]! / [s]!, c = (i−j+k)/2.
pub fn loop_box<R: Ring>(ring: &R, s: usize, i: usize, j: usize, k: usize) -> Result<R::Elem> {
    let c = loop_box_params(s, i, j, k)?;
    obstruction(ring, s)?;
    let f = |x: usize| qfact(x as u64);
    let v = sign(k) * qint(s as i64 + 1).pow(2) / qint(k as i64 + 1) * f(c) * f(s - c) / f(s);
    lift_at(ring, &v, s)
}

/// Tetrahedron with vertices (A,B,F), (A,A,2), (2,B,B+2), (A,B+2,F): cable F
/// splits into A over B, a 2-cable passes from A into B, and the resulting
/// A and B+2 merge back into F.
pub fn build_tet_special<R: Ring>(ring: &R, a: usize, b: usize, f: usize) -> Result<ClosedNetwork<R>> {
    tet_admissible(a, b, f)?;
    let top = split(ring, f, a, b)?;
    let upper = split(ring, a, a, 2)?.tensor(&cable(ring, b));
    let lower = cable(ring, a).tensor(&merge(ring, 2, b, b + 2)?);
    let bottom = merge(ring, a, b + 2, f)?;
    close(&chain(&[&top, &upper, &lower, &bottom])?)
}

fn tet_admissible(a: usize, b: usize, f: usize) -> Result<()> {
    ThreeVertex::new(a, b, f)?;
    ThreeVertex::new(a, a, 2)?;
    ThreeVertex::new(2, b, b + 2)?;
    ThreeVertex::new(a, b + 2, f)?;
    Ok(())
}

/// Tet[A B 2; B+2 A F] = [(A−B+F)/2] Θ(A, F, B+2) / [A]
pub fn tet_special<R: Ring>(ring: &R, a: usize, b: usize, f: usize) -> Result<R::Elem> {
    tet_admissible(a, b, f)?;
    let m = a.max(b + 2).max(f);
    obstruction(ring, m)?;
    let v = qint(((a + f - b) / 2) as i64) * theta_closed_generic(a, f, b + 2)? / qint(a as i64);
    lift_at(ring, &v, m)
}

/// Box sandwich P_s T P_s = (T) · P_s, with (T) the identity coefficient of T.
pub fn extract_check<R: Ring>(t: &Tangle<R>) -> Result<bool> {
    let ring = t.ring();
    let p = boxed(ring, t.n())?;
    let lhs = chain(&[&p, t, &p])?;
    Ok(lhs == p.scale(&t.evaluate()))
}

/// Host-network form of the extraction rule: closing `host · P_s T P_s`
/// equals (T) times closing `host · P_s`.
pub fn extract_in_host_check<R: Ring>(host: &Tangle<R>, t: &Tangle<R>) -> Result<bool> {
    let ring = t.ring();
    let p = boxed(ring, t.n())?;
    let with_t = close(&chain(&[host, &p, t, &p])?)?.evaluate();
    let plain = close(&chain(&[host, &p])?)?.evaluate();
    Ok(ring.eq(&with_t, &ring.mul(&t.evaluate(), &plain)))
}
