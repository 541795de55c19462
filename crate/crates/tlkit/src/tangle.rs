//! Formal linear combinations of planar diagrams: TL_n(ν) tangles, general
//! morphisms between strand counts, and link states.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;

use crate::coeff::{Generic, Ring, RingElem};
use crate::diagrams::{LinkDiagram, LinkPattern, Planar};
use crate::error::{Error, Result};

/// Linear combination of planar matchings `left → right`.
///
/// Square tangles (`left == right == n`) are elements of TL_n(ν); other
/// shapes appear inside networks.
#[derive(Clone)]
pub struct Tangle<R: Ring = Generic> {
    ring: R,
    left: usize,
    right: usize,
    terms: BTreeMap<Planar, R::Elem>,
}

impl<R: Ring> PartialEq for Tangle<R> {
    fn eq(&self, o: &Self) -> bool {
        self.left == o.left && self.right == o.right && self.terms == o.terms
    }
}

/// Σ a_i b_j ν^{loops} grouped by the resulting matching.
fn bulk_product<R: Ring, K: Sync>(
    ring: &R,
    a: &[(&K, &R::Elem)],
    b: &[(&K, &R::Elem)],
    glue: impl Fn(&K, &K) -> Option<(Planar, usize)>,
) -> Vec<(Planar, R::Elem)> {
    let pa = ring.prepare(&a.iter().map(|x| x.1).collect::<Vec<_>>());
    let pb = ring.prepare(&b.iter().map(|x| x.1).collect::<Vec<_>>());
    let mut index: HashMap<Planar, usize> = HashMap::new();
    let mut buckets: Vec<(Planar, Vec<(u32, u32, u8)>)> = Vec::new();
    for (i, (ka, _)) in a.iter().enumerate() {
        for (j, (kb, _)) in b.iter().enumerate() {
            let Some((d, loops)) = glue(ka, kb) else { continue };
            let slot = match index.get(&d) {
                Some(&s) => s,
                None => {
                    index.insert(d.clone(), buckets.len());
                    buckets.push((d, Vec::new()));
                    buckets.len() - 1
                }
            };
            buckets[slot].1.push((i as u32, j as u32, loops as u8));
        }
    }
    buckets
        .into_par_iter()
        .map(|(d, t)| {
            let c = ring.combine(&pa, &pb, &t);
            (d, c)
        })
        .filter(|(_, c)| !ring.is_zero(c))
        .collect()
}

impl<R: Ring> Tangle<R> {
    pub fn zero(ring: &R, left: usize, right: usize) -> Self {
        Tangle { ring: ring.clone(), left, right, terms: BTreeMap::new() }
    }

    pub fn unit(ring: &R, n: usize) -> Self {
        Self::from_planar(ring, Planar::identity(n), ring.one())
    }

    pub fn from_planar(ring: &R, p: Planar, c: R::Elem) -> Self {
        let mut t = Self::zero(ring, p.left(), p.right());
        if !ring.is_zero(&c) {
            t.terms.insert(p, c);
        }
        t
    }

    pub fn from_diagram(ring: &R, d: &LinkDiagram) -> Self {
        Self::from_planar(ring, d.planar().clone(), ring.one())
    }

    pub fn from_terms(ring: &R, left: usize, right: usize, it: impl IntoIterator<Item = (Planar, R::Elem)>) -> Self {
        let mut t = Self::zero(ring, left, right);
        for (p, c) in it {
            assert_eq!((p.left(), p.right()), (left, right), "term shape");
            t.add_term(p, c);
        }
        t
    }

    /// The generator U_i of TL_n.
    pub fn generator_u(ring: &R, n: usize, i: usize) -> Result<Self> {
        Ok(Self::from_diagram(ring, &LinkDiagram::u(n, i)?))
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn left(&self) -> usize {
        self.left
    }

    pub fn right(&self) -> usize {
        self.right
    }

    /// Strand count of a square tangle.
    pub fn n(&self) -> usize {
        assert_eq!(self.left, self.right, "not a square tangle");
        self.left
    }

    pub fn is_square(&self) -> bool {
        self.left == self.right
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Planar, &R::Elem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, p: &Planar) -> R::Elem {
        self.terms.get(p).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn coeff_of(&self, d: &LinkDiagram) -> R::Elem {
        self.coeff(d.planar())
    }

    pub fn add_term(&mut self, p: Planar, c: R::Elem) {
        if self.ring.is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&p) {
            Some(x) => {
                let s = self.ring.add(x, &c);
                if self.ring.is_zero(&s) {
                    self.terms.remove(&p);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(p, c);
            }
        }
    }

    fn same_shape(&self, o: &Self) -> Result<()> {
        if (self.left, self.right) != (o.left, o.right) {
            return Err(Error::SizeMismatch(self.left + self.right, o.left + o.right));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same_shape(o)?;
        let mut r = self.clone();
        for (p, c) in &o.terms {
            r.add_term(p.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|c| self.ring.neg(c))
    }

    pub fn scale(&self, k: &R::Elem) -> Self {
        if self.ring.is_zero(k) {
            return Self::zero(&self.ring, self.left, self.right);
        }
        self.map(|c| self.ring.mul(c, k))
    }

    fn map(&self, f: impl Fn(&R::Elem) -> R::Elem) -> Self {
        let mut r = Self::zero(&self.ring, self.left, self.right);
        for (p, c) in &self.terms {
            let v = f(c);
            if !self.ring.is_zero(&v) {
                r.terms.insert(p.clone(), v);
            }
        }
        r
    }

    /// Product `self · o` (self drawn to the left), loops weighted by ν.
    pub fn compose(&self, o: &Self) -> Result<Self> {
        if self.right != o.left {
            return Err(Error::SizeMismatch(self.right, o.left));
        }
        let a: Vec<_> = self.terms.iter().collect();
        let b: Vec<_> = o.terms.iter().collect();
        let out = bulk_product(&self.ring, &a, &b, |x, y| Some(x.compose_unchecked(y)));
        Ok(Self::from_terms(&self.ring, self.left, o.right, out))
    }

    /// Alias of [`Tangle::compose`] for square tangles.
    pub fn multiply(&self, o: &Self) -> Result<Self> {
        self.compose(o)
    }

    /// `self` above `o`.
    pub fn tensor(&self, o: &Self) -> Self {
        let mut r = Self::zero(&self.ring, self.left + o.left, self.right + o.right);
        for (p, c) in &self.terms {
            for (q, d) in &o.terms {
                r.add_term(p.tensor(q), self.ring.mul(c, d));
            }
        }
        r
    }

    /// Linear extension of the mirror reflection.
    pub fn dagger(&self) -> Self {
        let mut r = Self::zero(&self.ring, self.right, self.left);
        for (p, c) in &self.terms {
            r.terms.insert(p.dagger(), c.clone());
        }
        r
    }

    /// Scalar of a closed (0 → 0) tangle.
    pub fn scalar(&self) -> R::Elem {
        assert!(self.left == 0 && self.right == 0, "not a closed network");
        self.coeff(&Planar::identity(0))
    }

    /// Close all strands of a square tangle: Σ coef ν^{#loops}.
    pub fn trace(&self) -> R::Elem {
        let n = self.n();
        let mut acc = self.ring.zero();
        let nu = self.ring.fugacity();
        let cap = Planar::cap(n);
        for (p, c) in &self.terms {
            // glue the identity alongside and close with nested caps
            let (q, l1) = Planar::cup(n).compose_unchecked(&p.tensor(&Planar::identity(n)));
            let (_, l2) = q.compose_unchecked(&cap);
            acc = self.ring.add(&acc, &self.ring.mul(c, &self.ring.pow(&nu, (l1 + l2) as u32)));
        }
        acc
    }

    /// Network evaluation of a square tangle: through-paths weigh 1, so only
    /// the identity diagram contributes.
    pub fn evaluate(&self) -> R::Elem {
        assert!(self.is_square(), "evaluation of a non-square network");
        self.coeff(&Planar::identity(self.left))
    }

    /// Move into another coefficient ring.
    pub fn lift_to<S: Ring>(&self, ring: &S) -> Result<Tangle<S>>
    where
        R: Ring<Elem = RingElem>,
    {
        let mut r = Tangle::zero(ring, self.left, self.right);
        for (p, c) in &self.terms {
            r.add_term(p.clone(), ring.lift(c)?);
        }
        Ok(r)
    }

    /// Boundary rotation of every term.
    pub fn rotate(&self, k: isize) -> Self {
        let mut r = Self::zero(&self.ring, self.left, self.right);
        for (p, c) in &self.terms {
            r.terms.insert(p.rotate(k), c.clone());
        }
        r
    }
}

impl Tangle<Generic> {
    pub fn generic_unit(n: usize) -> Self {
        Self::unit(&Generic, n)
    }
}

impl<R: Ring> fmt::Debug for Tangle<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tangle[{}→{}]{{", self.left, self.right)?;
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}: {}", p.encode(), c)?;
        }
        write!(f, "}}")
    }
}

/// Linear combination of (n,s)-link patterns.
#[derive(Clone)]
pub struct LinkState<R: Ring = Generic> {
    ring: R,
    n: usize,
    s: usize,
    terms: BTreeMap<LinkPattern, R::Elem>,
}

impl<R: Ring> PartialEq for LinkState<R> {
    fn eq(&self, o: &Self) -> bool {
        self.n == o.n && self.s == o.s && self.terms == o.terms
    }
}

impl<R: Ring> fmt::Debug for LinkState<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinkState[{},{}]{{", self.n, self.s)?;
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}: {}", p.encode(), c)?;
        }
        write!(f, "}}")
    }
}

impl<R: Ring> LinkState<R> {
    pub fn zero(ring: &R, n: usize, s: usize) -> Self {
        LinkState { ring: ring.clone(), n, s, terms: BTreeMap::new() }
    }

    pub fn from_pattern(ring: &R, p: &LinkPattern) -> Self {
        let mut v = Self::zero(ring, p.n(), p.s());
        v.terms.insert(p.clone(), ring.one());
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LinkPattern, &R::Elem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, p: &LinkPattern) -> R::Elem {
        self.terms.get(p).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn add_term(&mut self, p: LinkPattern, c: R::Elem) {
        if self.ring.is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&p) {
            Some(x) => {
                let s = self.ring.add(x, &c);
                if self.ring.is_zero(&s) {
                    self.terms.remove(&p);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(p, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        if (self.n, self.s) != (o.n, o.s) {
            return Err(Error::SizeMismatch(self.n, o.n));
        }
        let mut r = self.clone();
        for (p, c) in &o.terms {
            r.add_term(p.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn scale(&self, k: &R::Elem) -> Self {
        let mut r = Self::zero(&self.ring, self.n, self.s);
        for (p, c) in &self.terms {
            r.add_term(p.clone(), self.ring.mul(c, k));
        }
        r
    }
}

/// The action T·v: concatenate T to the left, kill turn-back paths.
pub fn act<R: Ring>(t: &Tangle<R>, v: &LinkState<R>) -> Result<LinkState<R>> {
    if t.n() != v.n {
        return Err(Error::SizeMismatch(t.n(), v.n));
    }
    let a: Vec<_> = t.terms.iter().collect();
    let b: Vec<(&Planar, &R::Elem)> = v.terms.iter().map(|(p, c)| (p.planar(), c)).collect();
    let out = bulk_product(&t.ring, &a, &b, |x, y| {
        let (d, k) = x.compose_unchecked(y);
        (!d.has_right_turnback()).then_some((d, k))
    });
    let mut r = LinkState::zero(&t.ring, v.n, v.s);
    for (p, c) in out {
        r.terms.insert(LinkPattern::new(p).expect("no turn-backs"), c);
    }
    Ok(r)
}

/// ⟨α|β⟩ for single patterns: ν^{#loops}, or zero on a turn-back path.
pub fn pattern_form<R: Ring>(ring: &R, a: &LinkPattern, b: &LinkPattern) -> Result<R::Elem> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch(a.n(), b.n()));
    }
    if a.s() != b.s() {
        return Ok(ring.zero());
    }
    let (d, k) = a.planar().dagger().compose_unchecked(b.planar());
    if d.has_left_turnback() || d.has_right_turnback() {
        return Ok(ring.zero());
    }
    Ok(ring.pow(&ring.fugacity(), k as u32))
}

/// Bilinear extension of [`pattern_form`].
pub fn bilinear_form<R: Ring>(a: &LinkState<R>, b: &LinkState<R>) -> Result<R::Elem> {
    if a.n != b.n {
        return Err(Error::SizeMismatch(a.n, b.n));
    }
    let ring = &a.ring;
    if a.s != b.s {
        return Ok(ring.zero());
    }
    let x: Vec<(&Planar, &R::Elem)> = a.terms.iter().map(|(p, c)| (p.planar(), c)).collect();
    let y: Vec<(&Planar, &R::Elem)> = b.terms.iter().map(|(p, c)| (p.planar(), c)).collect();
    let daggered: Vec<Planar> = x.iter().map(|(p, _)| p.dagger()).collect();
    let xd: Vec<(&Planar, &R::Elem)> = daggered.iter().zip(x.iter()).map(|(p, (_, c))| (p, *c)).collect();
    let out = bulk_product(ring, &xd, &y, |p, q| {
        let (d, k) = p.compose_unchecked(q);
        (!d.has_left_turnback() && !d.has_right_turnback()).then_some((d, k))
    });
    let mut acc = ring.zero();
    for (_, c) in out {
        acc = ring.add(&acc, &c);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::fugacity;

    #[test]
    fn u_squared() {
        let u = Tangle::generator_u(&Generic, 2, 1).unwrap();
        assert_eq!(u.multiply(&u).unwrap(), u.scale(&fugacity()));
    }
}
