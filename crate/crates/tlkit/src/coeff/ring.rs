use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::cyclo::{Cyclo, CycloField};
use super::laurent::LaurentPoly;
use super::ratfunc::RingElem;
use super::zpoly::ZPoly;
use crate::error::{Error, Result};

/// Which value of q the arithmetic lives at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QParam {
    Generic,
    /// q = e^{iπp′/p}
    RootOfUnity { p: u32, p_prime: u32 },
}

impl QParam {
    pub fn root(p: u32, p_prime: u32) -> Result<Self> {
        if p == 0 || p_prime == 0 || p.gcd(&p_prime) != 1 {
            return Err(Error::InvalidInput(format!("root of unity needs coprime positive p, p′ (got {p}/{p_prime})")));
        }
        Ok(QParam::RootOfUnity { p, p_prime })
    }

    pub fn pbar(&self) -> Pbar {
        match *self {
            QParam::Generic => Pbar::Infinite,
            QParam::RootOfUnity { p: 1, .. } => Pbar::Infinite,
            QParam::RootOfUnity { p, .. } => Pbar::Finite(p as u64),
        }
    }
}

impl fmt::Display for QParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QParam::Generic => write!(f, "generic"),
            QParam::RootOfUnity { p, p_prime } => write!(f, "root {p}/{p_prime}"),
        }
    }
}

/// p̄(q): extended positive integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pbar {
    Finite(u64),
    Infinite,
}

impl Pbar {
    /// `n < p̄`
    pub fn exceeds(&self, n: usize) -> bool {
        match self {
            Pbar::Infinite => true,
            Pbar::Finite(p) => (n as u64) < *p,
        }
    }
}

impl fmt::Display for Pbar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pbar::Infinite => write!(f, "∞"),
            Pbar::Finite(p) => write!(f, "{p}"),
        }
    }
}

/// [k] = q^{k-1} + q^{k-3} + … + q^{1-k}, antisymmetric in k.
pub fn qint(k: i64) -> RingElem {
    if k == 0 {
        return RingElem::zero();
    }
    let a = k.unsigned_abs() as i32;
    let sign = if k < 0 { -1 } else { 1 };
    let terms = (0..a).map(|t| (a - 1 - 2 * t, sign)).collect::<Vec<_>>();
    RingElem::from_poly(LaurentPoly::from_ints(&terms))
}

/// [k]! = [1][2]…[k]
pub fn qfact(k: u64) -> RingElem {
    (1..=k as i64).map(qint).product()
}

/// ν = −[2]
pub fn fugacity() -> RingElem {
    -qint(2)
}

pub fn pbar(param: QParam) -> Pbar {
    param.pbar()
}

/// Exact value of `x` at the root of unity described by `param`.
pub fn specialize(x: &RingElem, param: QParam) -> Result<Cyclo> {
    let QParam::RootOfUnity { p, p_prime } = param else {
        return Err(Error::InvalidInput("specialize needs a root of unity".into()));
    };
    let field = CycloField::new(p, p_prime);
    specialize_in(x, &field)
}

pub fn specialize_in(x: &RingElem, field: &Arc<CycloField>) -> Result<Cyclo> {
    let d = field.eval(x.den());
    let dinv = d.inv().ok_or(Error::DenominatorVanishes)?;
    Ok(field.eval(x.num()).mul(&dinv))
}

/// Coefficient ring abstraction so that diagram algebra runs either over
/// Q(q) or over a cyclotomic specialization.
pub trait Ring: Clone + Send + Sync + fmt::Debug + 'static {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static;
    /// Per-tangle preprocessed coefficients for bulk products.
    type Prep: Send + Sync;

    fn param(&self) -> QParam;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Map a generic value into this ring.
    fn lift(&self, x: &RingElem) -> Result<Self::Elem>;

    fn prepare(&self, xs: &[&Self::Elem]) -> Self::Prep;
    /// Σ a_i b_j ν^k over the given `(i, j, k)` triples.
    fn combine(&self, a: &Self::Prep, b: &Self::Prep, terms: &[(u32, u32, u8)]) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        Some(self.mul(a, &self.inv(b)?))
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        self.lift(&RingElem::from_int(n)).expect("integers always specialize")
    }

    fn pow(&self, a: &Self::Elem, k: u32) -> Self::Elem {
        let mut r = self.one();
        for _ in 0..k {
            r = self.mul(&r, a);
        }
        r
    }

    fn qint(&self, k: i64) -> Self::Elem {
        self.lift(&qint(k)).expect("quantum integers are polynomials")
    }

    fn fugacity(&self) -> Self::Elem {
        self.neg(&self.qint(2))
    }

    fn pbar(&self) -> Pbar {
        self.param().pbar()
    }

    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a == b
    }
}

/// Q(q).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Generic;

/// Q(ζ_{2p}) with q = ζ^{p′}.
#[derive(Clone, Debug)]
pub struct RootOfUnity {
    field: Arc<CycloField>,
}

impl RootOfUnity {
    pub fn new(p: u32, p_prime: u32) -> Result<Self> {
        QParam::root(p, p_prime)?;
        Ok(RootOfUnity { field: CycloField::new(p, p_prime) })
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }
}

/// Dense integer Laurent polynomial with i128 coefficients, used only in
/// the bulk product path; overflow is detected and triggers a slow path.
#[derive(Clone, Debug)]
struct ILaurent {
    low: i32,
    c: Vec<i128>,
}

pub struct GenericPrep {
    /// common denominator as `scalar * den_poly`
    den: ZPoly,
    nums: Vec<Option<ILaurent>>,
    /// exact fallback
    elems: Vec<RingElem>,
    fast: bool,
}

fn to_ilaurent(z: &ZPoly, low: i32) -> Option<ILaurent> {
    let mut c = Vec::with_capacity(z.c.len());
    for x in &z.c {
        c.push(x.to_i128()?);
    }
    Some(ILaurent { low, c })
}

impl Ring for Generic {
    type Elem = RingElem;
    type Prep = GenericPrep;

    fn param(&self) -> QParam {
        QParam::Generic
    }
    fn zero(&self) -> RingElem {
        RingElem::zero()
    }
    fn one(&self) -> RingElem {
        RingElem::one()
    }
    fn is_zero(&self, a: &RingElem) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &RingElem, b: &RingElem) -> RingElem {
        a + b
    }
    fn neg(&self, a: &RingElem) -> RingElem {
        -a
    }
    fn mul(&self, a: &RingElem, b: &RingElem) -> RingElem {
        a * b
    }
    fn inv(&self, a: &RingElem) -> Option<RingElem> {
        a.inv()
    }
    fn lift(&self, x: &RingElem) -> Result<RingElem> {
        Ok(x.clone())
    }

    fn prepare(&self, xs: &[&RingElem]) -> GenericPrep {
        // common denominator over distinct denominators
        let mut seen: HashMap<&LaurentPoly, ()> = HashMap::new();
        let mut den = ZPoly::one();
        let mut scalar = BigInt::one();
        for x in xs {
            for (_, c) in x.num().terms() {
                scalar = scalar.lcm(c.denom());
            }
            if seen.insert(x.den(), ()).is_none() {
                let (_, _, d) = x.den().decompose();
                let g = den.gcd(&d);
                den = den.mul(&d.div_exact(&g).expect("gcd divides"));
            }
        }
        let mut fast = true;
        let mut nums = Vec::with_capacity(xs.len());
        let denom_total = den.scale(&scalar);
        for x in xs {
            let (_, _, d) = x.den().decompose();
            let cof = den.div_exact(&d).expect("lcm is a multiple");
            let (cn, sn, zn) = x.num().decompose();
            // x = cn q^sn zn / d = (cn*scalar) q^sn zn cof / (scalar den)
            let k = cn * BigRational::from_integer(scalar.clone());
            debug_assert!(k.is_integer());
            let z = zn.mul(&cof).scale(&k.to_integer());
            let il = if fast { to_ilaurent(&z, sn) } else { None };
            if il.is_none() {
                fast = false;
            }
            nums.push(il);
        }
        GenericPrep { den: denom_total, nums, elems: xs.iter().map(|x| (*x).clone()).collect(), fast }
    }

    fn combine(&self, a: &GenericPrep, b: &GenericPrep, terms: &[(u32, u32, u8)]) -> RingElem {
        if a.fast && b.fast {
            if let Some(r) = fast_combine(a, b, terms) {
                return r;
            }
        }
        let nu = fugacity();
        let mut acc = RingElem::zero();
        for &(i, j, k) in terms {
            let t = &a.elems[i as usize] * &b.elems[j as usize];
            acc = acc + t * nu.pow(k as u32);
        }
        acc
    }
}

fn fast_combine(a: &GenericPrep, b: &GenericPrep, terms: &[(u32, u32, u8)]) -> Option<RingElem> {
    // one accumulator per loop count
    let mut per_k: Vec<Option<(i32, Vec<i128>)>> = Vec::new();
    for &(i, j, k) in terms {
        let x = a.nums[i as usize].as_ref()?;
        let y = b.nums[j as usize].as_ref()?;
        let k = k as usize;
        if per_k.len() <= k {
            per_k.resize(k + 1, None);
        }
        let low = x.low + y.low;
        let len = x.c.len() + y.c.len() - 1;
        let slot = per_k[k].get_or_insert_with(|| (low, vec![0i128; len]));
        // grow the accumulator window if needed
        if low < slot.0 {
            let pad = (slot.0 - low) as usize;
            let mut v = vec![0i128; pad];
            v.extend_from_slice(&slot.1);
            slot.1 = v;
            slot.0 = low;
        }
        let off = (low - slot.0) as usize;
        if slot.1.len() < off + len {
            slot.1.resize(off + len, 0);
        }
        for (s, xs) in x.c.iter().enumerate() {
            if *xs == 0 {
                continue;
            }
            for (t, ys) in y.c.iter().enumerate() {
                if *ys == 0 {
                    continue;
                }
                let p = xs.checked_mul(*ys)?;
                let cell = &mut slot.1[off + s + t];
                *cell = cell.checked_add(p)?;
            }
        }
    }
    // combine Σ_k ν^k acc_k over integers, exponent-shifted to a common base
    let nu = ZPoly::from_vec(vec![BigInt::from(-1), BigInt::zero(), BigInt::from(-1)]); // q*ν = -(1+q^2)
    let mut total = ZPoly::zero();
    let mut total_low = i32::MAX;
    let mut parts = Vec::new();
    for (k, slot) in per_k.iter().enumerate() {
        if let Some((low, v)) = slot {
            let z = ZPoly::from_vec(v.iter().map(|&x| BigInt::from(x)).collect());
            if z.is_zero() {
                continue;
            }
            // ν^k = q^{-k} (q ν)^k
            let mut zk = z;
            for _ in 0..k {
                zk = zk.mul(&nu);
            }
            let l = low - k as i32;
            total_low = total_low.min(l);
            parts.push((l, zk));
        }
    }
    for (l, z) in parts {
        total = total.add(&z.shift((l - total_low) as usize));
    }
    if total.is_zero() {
        return Some(RingElem::zero());
    }
    let den = a.den.mul(&b.den);
    Some(RingElem::from_zparts(&total, total_low, &den))
}

impl Ring for RootOfUnity {
    type Elem = Cyclo;
    type Prep = Vec<Cyclo>;

    fn param(&self) -> QParam {
        QParam::RootOfUnity { p: self.field.p, p_prime: self.field.p_prime }
    }
    fn zero(&self) -> Cyclo {
        self.field.zero()
    }
    fn one(&self) -> Cyclo {
        self.field.one()
    }
    fn is_zero(&self, a: &Cyclo) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Cyclo, b: &Cyclo) -> Cyclo {
        a.add(b)
    }
    fn neg(&self, a: &Cyclo) -> Cyclo {
        a.neg()
    }
    fn mul(&self, a: &Cyclo, b: &Cyclo) -> Cyclo {
        a.mul(b)
    }
    fn inv(&self, a: &Cyclo) -> Option<Cyclo> {
        a.inv()
    }
    fn lift(&self, x: &RingElem) -> Result<Cyclo> {
        specialize_in(x, &self.field)
    }
    fn prepare(&self, xs: &[&Cyclo]) -> Vec<Cyclo> {
        xs.iter().map(|x| (*x).clone()).collect()
    }
    fn combine(&self, a: &Vec<Cyclo>, b: &Vec<Cyclo>, terms: &[(u32, u32, u8)]) -> Cyclo {
        let nu = self.fugacity();
        let mut acc = self.zero();
        for &(i, j, k) in terms {
            let t = a[i as usize].mul(&b[j as usize]);
            acc = acc.add(&t.mul(&self.pow(&nu, k as u32)));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qint_two_is_minus_fugacity() {
        assert_eq!(qint(2), -fugacity());
        assert_eq!(qint(-3), -qint(3));
    }

    #[test]
    fn fast_combine_matches_naive() {
        let r = Generic;
        let xs = [qint(2).inv().unwrap(), qint(3) / qint(4), RingElem::from_int(7)];
        let ys = [qint(5).inv().unwrap(), fugacity()];
        let pa = r.prepare(&xs.iter().collect::<Vec<_>>());
        let pb = r.prepare(&ys.iter().collect::<Vec<_>>());
        let terms = [(0, 0, 0), (1, 1, 2), (2, 0, 1), (0, 1, 3)];
        let nu = fugacity();
        let naive: RingElem =
            terms.iter().map(|&(i, j, k)| &xs[i as usize] * &ys[j as usize] * nu.pow(k as u32)).sum();
        assert_eq!(r.combine(&pa, &pb, &terms), naive);
    }
}
