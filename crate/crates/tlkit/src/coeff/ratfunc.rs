use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use super::zpoly::ZPoly;

/// Exact element of Q(q), kept as a reduced fraction.
///
/// Canonical form: numerator and denominator coprime, the denominator has
/// integer coefficients with content 1, lowest exponent 0 and a positive
/// leading coefficient. Structural equality is therefore field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingElem {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RingElem {
    pub fn zero() -> Self {
        RingElem { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        RingElem { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_rational(c: BigRational) -> Self {
        RingElem { num: LaurentPoly::constant(c), den: LaurentPoly::one() }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RingElem { num: p, den: LaurentPoly::one() }
    }

    pub fn q() -> Self {
        Self::from_poly(LaurentPoly::q_pow(1))
    }

    /// Reduce an arbitrary fraction to canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let (cn, sn, zn) = num.decompose();
        let (cd, sd, zd) = den.decompose();
        let scale = cn / cd;
        if zd.is_one() {
            return RingElem { num: LaurentPoly::from_zpoly(&zn, sn - sd, &scale), den: LaurentPoly::one() };
        }
        let g = zn.gcd(&zd);
        let (zn, zd) = if g.is_one() {
            (zn, zd)
        } else {
            (zn.div_exact(&g).expect("gcd divides"), zd.div_exact(&g).expect("gcd divides"))
        };
        RingElem {
            num: LaurentPoly::from_zpoly(&zn, sn - sd, &scale),
            den: LaurentPoly::from_zpoly(&zd, 0, &BigRational::one()),
        }
    }

    /// Fraction of integer polynomials `q^shift * num / den`.
    pub(crate) fn from_zparts(num: &ZPoly, shift: i32, den: &ZPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        Self::new(
            LaurentPoly::from_zpoly(num, shift, &BigRational::one()),
            LaurentPoly::from_zpoly(den, 0, &BigRational::one()),
        )
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()))
        }
    }

    pub fn checked_div(&self, o: &Self) -> Option<Self> {
        Some(self * &o.inv()?)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..k {
            r = &r * self;
        }
        r
    }

    pub fn powi(&self, k: i32) -> Option<Self> {
        if k >= 0 {
            Some(self.pow(k as u32))
        } else {
            Some(self.inv()?.pow((-k) as u32))
        }
    }

    /// `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        Self::new(self.num.bar(), self.den.bar())
    }

    pub fn scale_int(&self, k: i64) -> Self {
        let k = BigRational::from_integer(BigInt::from(k));
        if k.is_zero() {
            return Self::zero();
        }
        RingElem { num: self.num.scale(&k), den: self.den.clone() }
    }

    /// Evaluate at a rational point (used for sanity checks only).
    pub fn eval_rational(&self, x: &BigRational) -> Option<BigRational> {
        let ev = |p: &LaurentPoly| {
            let mut acc = BigRational::zero();
            for (e, c) in p.terms() {
                let xe = if *e >= 0 { num_traits::pow(x.clone(), *e as usize) } else { num_traits::pow(x.recip(), (-e) as usize) };
                acc += c * xe;
            }
            acc
        };
        let d = ev(&self.den);
        if d.is_zero() {
            None
        } else {
            Some(ev(&self.num) / d)
        }
    }
}

impl Add for &RingElem {
    type Output = RingElem;
    fn add(self, o: &RingElem) -> RingElem {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return RingElem { num: &self.num + &o.num, den: LaurentPoly::one() };
        }
        if self.den == o.den {
            return RingElem::new(&self.num + &o.num, self.den.clone());
        }
        RingElem::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &RingElem {
    type Output = RingElem;
    fn sub(self, o: &RingElem) -> RingElem {
        self + &(-o)
    }
}

impl Mul for &RingElem {
    type Output = RingElem;
    fn mul(self, o: &RingElem) -> RingElem {
        if self.is_zero() || o.is_zero() {
            return RingElem::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RingElem { num: &self.num * &o.num, den: LaurentPoly::one() };
        }
        RingElem::new(&self.num * &o.num, &self.den * &o.den)
    }
}

/// Panics on division by zero; use [`RingElem::checked_div`] otherwise.
impl Div for &RingElem {
    type Output = RingElem;
    fn div(self, o: &RingElem) -> RingElem {
        self.checked_div(o).expect("division by zero in Q(q)")
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for RingElem {
            type Output = RingElem;
            fn $f(self, o: RingElem) -> RingElem { (&self).$f(&o) }
        }
        impl $tr<&RingElem> for RingElem {
            type Output = RingElem;
            fn $f(self, o: &RingElem) -> RingElem { (&self).$f(o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        -&self
    }
}

impl std::iter::Sum for RingElem {
    fn sum<I: Iterator<Item = RingElem>>(it: I) -> RingElem {
        it.fold(RingElem::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for RingElem {
    fn product<I: Iterator<Item = RingElem>>(it: I) -> RingElem {
        it.fold(RingElem::one(), |a, b| a * b)
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
