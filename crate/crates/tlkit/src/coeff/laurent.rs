use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::zpoly::ZPoly;

/// Laurent polynomial in `q` with rational coefficients, stored sparsely as
/// `(exponent, coefficient)` pairs in increasing exponent order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(i32, BigRational)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(e: i32, c: BigRational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(e, c)] }
        }
    }

    /// `q^e`
    pub fn q_pow(e: i32) -> Self {
        Self::monomial(e, BigRational::one())
    }

    /// Build from arbitrary terms; merges duplicates and drops zeros.
    pub fn from_terms(mut t: Vec<(i32, BigRational)>) -> Self {
        t.sort_by_key(|x| x.0);
        let mut out: Vec<(i32, BigRational)> = Vec::with_capacity(t.len());
        for (e, c) in t {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|x| !x.1.is_zero());
        LaurentPoly { terms: out }
    }

    pub fn from_ints(t: &[(i32, i64)]) -> Self {
        Self::from_terms(t.iter().map(|&(e, c)| (e, BigRational::from_integer(c.into()))).collect())
    }

    pub fn terms(&self) -> &[(i32, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn low(&self) -> Option<i32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn high(&self) -> Option<i32> {
        self.terms.last().map(|t| t.0)
    }

    pub fn lead(&self) -> Option<&BigRational> {
        self.terms.last().map(|t| &t.1)
    }

    pub fn coeff(&self, e: i32) -> BigRational {
        match self.terms.binary_search_by_key(&e, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigRational::zero(),
        }
    }

    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect() }
    }

    /// The bar involution `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        let mut t: Vec<_> = self.terms.iter().map(|(e, c)| (-e, c.clone())).collect();
        t.reverse();
        LaurentPoly { terms: t }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..k {
            r = &r * self;
        }
        r
    }

    /// Write `self = c * q^s * Z(q)` with `Z` primitive over the integers,
    /// `Z(0) != 0`, positive leading coefficient. Zero maps to `(0, 0, 0)`.
    pub fn decompose(&self) -> (BigRational, i32, ZPoly) {
        let Some(low) = self.low() else {
            return (BigRational::zero(), 0, ZPoly::zero());
        };
        let high = self.high().unwrap();
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            den = den.lcm(c.denom());
        }
        let mut v = vec![BigInt::zero(); (high - low + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - low) as usize] = c.numer() * (&den / c.denom());
        }
        let z = ZPoly::from_vec(v);
        let mut g = z.content();
        if z.lead().is_negative() {
            g = -g;
        }
        let prim = ZPoly { c: z.c.iter().map(|x| x / &g).collect() };
        (BigRational::new(g, den), low, prim)
    }

    pub fn from_zpoly(z: &ZPoly, shift: i32, scale: &BigRational) -> Self {
        let mut t = Vec::new();
        for (i, c) in z.c.iter().enumerate() {
            if !c.is_zero() {
                t.push((i as i32 + shift, scale * BigRational::from_integer(c.clone())));
            }
        }
        LaurentPoly { terms: t }
    }

    /// Integer-coefficient view; `None` if some coefficient is fractional.
    pub fn to_int_terms(&self) -> Option<Vec<(i32, BigInt)>> {
        self.terms
            .iter()
            .map(|(e, c)| if c.is_integer() { Some((*e, c.to_integer())) } else { None })
            .collect()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        let (a, b) = (&self.terms, &o.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = &a[i].1 + &b[j].1;
                    if !s.is_zero() {
                        out.push((a[i].0, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        LaurentPoly { terms: out }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        self + &(-o)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || o.is_zero() {
            return LaurentPoly::zero();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        let lo = self.low().unwrap() + o.low().unwrap();
        let hi = self.high().unwrap() + o.high().unwrap();
        let mut acc = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                acc[(e1 + e2 - lo) as usize] += c1 * c2;
            }
        }
        LaurentPoly {
            terms: acc
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as i32 + lo, c))
                .collect(),
        }
    }
}

macro_rules! owned_ops {
    ($t:ty, $($tr:ident $f:ident),*) => {$(
        impl $tr for $t {
            type Output = $t;
            fn $f(self, o: $t) -> $t { (&self).$f(&o) }
        }
    )*};
}
owned_ops!(LaurentPoly, Add add, Sub sub, Mul mul);

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // highest power first
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let unit = a.is_one();
            if !unit || *e == 0 {
                write!(f, "{a}")?;
            }
            if *e != 0 {
                if !unit {
                    write!(f, "*")?;
                }
                if *e == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
