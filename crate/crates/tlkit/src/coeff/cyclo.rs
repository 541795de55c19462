//! The cyclotomic field Q(ζ), ζ = e^{iπ/p}, holding specializations at
//! q = e^{iπp′/p} = ζ^{p′}.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPoly;
use super::zpoly::ZPoly;

/// The m-th cyclotomic polynomial.
pub fn cyclotomic_poly(m: u32) -> ZPoly {
    // x^m - 1 divided by Φ_d for every proper divisor d
    let mut c = vec![BigInt::zero(); m as usize + 1];
    c[0] = BigInt::from(-1);
    c[m as usize] = BigInt::one();
    let mut p = ZPoly::from_vec(c);
    for d in 1..m {
        if m % d == 0 {
            p = p.div_exact(&cyclotomic_poly(d)).expect("cyclotomic factor");
        }
    }
    p
}

#[derive(Debug, PartialEq, Eq)]
pub struct CycloField {
    pub p: u32,
    pub p_prime: u32,
    /// Φ_{2p}, monic.
    modulus: Vec<BigRational>,
}

impl CycloField {
    pub fn new(p: u32, p_prime: u32) -> Arc<Self> {
        let phi = cyclotomic_poly(2 * p);
        Arc::new(CycloField {
            p,
            p_prime,
            modulus: phi.c.into_iter().map(BigRational::from_integer).collect(),
        })
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn reduce(&self, mut v: Vec<BigRational>) -> Vec<BigRational> {
        let d = self.degree();
        while v.len() > d {
            let top = v.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let k = v.len() - d;
            for j in 0..d {
                v[k + j] -= &top * &self.modulus[j];
            }
        }
        while v.last().is_some_and(|x| x.is_zero()) {
            v.pop();
        }
        v
    }

    /// ζ^e for any integer e.
    fn zeta_pow(&self, e: i64) -> Vec<BigRational> {
        let m = 2 * self.p as i64;
        let e = e.rem_euclid(m) as usize;
        let mut v = vec![BigRational::zero(); e + 1];
        v[e] = BigRational::one();
        self.reduce(v)
    }

    /// Evaluate a Laurent polynomial at q = ζ^{p′}.
    pub fn eval(self: &Arc<Self>, x: &LaurentPoly) -> Cyclo {
        let mut acc = vec![BigRational::zero(); self.degree().max(1)];
        for (e, c) in x.terms() {
            let z = self.zeta_pow(*e as i64 * self.p_prime as i64);
            for (i, zc) in z.iter().enumerate() {
                acc[i] += c * zc;
            }
        }
        Cyclo { field: self.clone(), c: self.reduce(acc) }
    }

    pub fn zero(self: &Arc<Self>) -> Cyclo {
        Cyclo { field: self.clone(), c: Vec::new() }
    }

    pub fn one(self: &Arc<Self>) -> Cyclo {
        self.from_rational(BigRational::one())
    }

    pub fn from_rational(self: &Arc<Self>, r: BigRational) -> Cyclo {
        Cyclo { field: self.clone(), c: if r.is_zero() { vec![] } else { vec![r] } }
    }
}

/// Element of a cyclotomic field, coefficients in the power basis of ζ.
#[derive(Clone)]
pub struct Cyclo {
    field: Arc<CycloField>,
    c: Vec<BigRational>,
}

impl PartialEq for Cyclo {
    fn eq(&self, o: &Self) -> bool {
        self.c == o.c && (Arc::ptr_eq(&self.field, &o.field) || self.field == o.field)
    }
}
impl Eq for Cyclo {}

impl Cyclo {
    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn add(&self, o: &Cyclo) -> Cyclo {
        let n = self.c.len().max(o.c.len());
        let mut v = vec![BigRational::zero(); n];
        for (i, x) in self.c.iter().enumerate() {
            v[i] += x;
        }
        for (i, x) in o.c.iter().enumerate() {
            v[i] += x;
        }
        Cyclo { field: self.field.clone(), c: self.field.reduce(v) }
    }

    pub fn neg(&self) -> Cyclo {
        Cyclo { field: self.field.clone(), c: self.c.iter().map(|x| -x).collect() }
    }

    pub fn sub(&self, o: &Cyclo) -> Cyclo {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Cyclo) -> Cyclo {
        if self.is_zero() || o.is_zero() {
            return self.field.zero();
        }
        let mut v = vec![BigRational::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Cyclo { field: self.field.clone(), c: self.field.reduce(v) }
    }

    /// Inverse by the extended Euclidean algorithm modulo Φ_{2p}.
    pub fn inv(&self) -> Option<Cyclo> {
        if self.is_zero() {
            return None;
        }
        // r0 = modulus, r1 = self; track s with s*self ≡ r (mod modulus)
        let mut r0: Vec<BigRational> = self.field.modulus.clone();
        let mut r1 = self.c.clone();
        let mut s0: Vec<BigRational> = vec![];
        let mut s1: Vec<BigRational> = vec![BigRational::one()];
        while !(r1.len() == 1) {
            let (q, r) = qdivrem(&r0, &r1);
            let s2 = qsub(&s0, &qmul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            if r1.is_empty() {
                // gcd of non-unit degree: impossible for an irreducible modulus
                return None;
            }
        }
        let k = r1[0].recip();
        let v = s1.iter().map(|x| x * &k).collect();
        Some(Cyclo { field: self.field.clone(), c: self.field.reduce(v) })
    }
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(|x| x.is_zero()) {
        v.pop();
    }
    v
}

fn qmul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut v = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    trim(v)
}

fn qsub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut v = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        v[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        v[i] -= x;
    }
    trim(v)
}

fn qdivrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    let db = b.len();
    if r.len() < db {
        return (vec![], r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db + 1];
    let lb = b.last().unwrap();
    for k in (0..q.len()).rev() {
        let t = &r[k + db - 1] / lb;
        if !t.is_zero() {
            for j in 0..db {
                r[k + j] -= &t * &b[j];
            }
        }
        q[k] = t;
    }
    r.truncate(db - 1);
    (trim(q), trim(r))
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.c.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{a}*z")?,
                (_, true) => write!(f, "z^{i}")?,
                (_, false) => write!(f, "{a}*z^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [z=e^(iπ/{})]", self, self.field.p)
    }
}
