//! Dense univariate polynomials over the integers, used as the work horse
//! for gcds and exact division behind the rational-function field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense polynomial, `c[d]` is the coefficient of `x^d`. No trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ZPoly {
    pub c: Vec<BigInt>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        ZPoly { c: vec![BigInt::one()] }
    }

    pub fn from_vec(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        ZPoly { c }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn deg(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lead(&self) -> &BigInt {
        self.c.last().expect("zero polynomial has no leading coefficient")
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for x in &self.c {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut g = self.content();
        if self.lead().is_negative() {
            g = -g;
        }
        if g.is_one() {
            return self.clone();
        }
        ZPoly { c: self.c.iter().map(|x| x / &g).collect() }
    }

    pub fn add(&self, o: &ZPoly) -> ZPoly {
        let n = self.c.len().max(o.c.len());
        let mut r = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.c.get(i);
            let b = o.c.get(i);
            r.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        ZPoly::from_vec(r)
    }

    pub fn neg(&self) -> ZPoly {
        ZPoly { c: self.c.iter().map(|x| -x).collect() }
    }

    pub fn sub(&self, o: &ZPoly) -> ZPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &ZPoly) -> ZPoly {
        if self.is_zero() || o.is_zero() {
            return ZPoly::zero();
        }
        let mut r = vec![BigInt::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    r[i + j] += a * b;
                }
            }
        }
        ZPoly::from_vec(r)
    }

    pub fn scale(&self, k: &BigInt) -> ZPoly {
        if k.is_zero() {
            return ZPoly::zero();
        }
        ZPoly { c: self.c.iter().map(|x| x * k).collect() }
    }

    /// Multiply by x^k.
    pub fn shift(&self, k: usize) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.c.iter().cloned());
        ZPoly { c }
    }

    /// Exact division; `None` if `o` does not divide `self` over the integers.
    pub fn div_exact(&self, o: &ZPoly) -> Option<ZPoly> {
        assert!(!o.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        if o.c.len() == 1 {
            let d = &o.c[0];
            let mut q = Vec::with_capacity(self.c.len());
            for x in &self.c {
                let (qq, r) = x.div_rem(d);
                if !r.is_zero() {
                    return None;
                }
                q.push(qq);
            }
            return Some(ZPoly { c: q });
        }
        if self.c.len() < o.c.len() {
            return None;
        }
        let mut rem = self.c.clone();
        let dl = o.c.len();
        let lo = o.lead();
        let mut q = vec![BigInt::zero(); rem.len() - dl + 1];
        for k in (0..q.len()).rev() {
            let top = &rem[k + dl - 1];
            if top.is_zero() {
                continue;
            }
            let (qq, r) = top.div_rem(lo);
            if !r.is_zero() {
                return None;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    rem[k + j] -= &qq * b;
                }
            }
            q[k] = qq;
        }
        if rem.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(ZPoly::from_vec(q))
    }

    /// Pseudo-remainder: lc(o)^(deg self - deg o + 1) * self mod o.
    fn prem(&self, o: &ZPoly) -> ZPoly {
        let mut r = self.c.clone();
        let dl = o.c.len();
        let lo = o.lead().clone();
        while r.len() >= dl {
            let top = r.last().unwrap().clone();
            let k = r.len() - dl;
            for x in r.iter_mut() {
                *x *= &lo;
            }
            for (j, b) in o.c.iter().enumerate() {
                r[k + j] -= &top * b;
            }
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        ZPoly::from_vec(r)
    }

    /// Primitive gcd with positive leading coefficient (primitive PRS).
    pub fn gcd(&self, o: &ZPoly) -> ZPoly {
        if self.is_zero() {
            return o.primitive();
        }
        if o.is_zero() {
            return self.primitive();
        }
        let (mut a, mut b) = if self.deg() >= o.deg() {
            (self.primitive(), o.primitive())
        } else {
            (o.primitive(), self.primitive())
        };
        while !b.is_zero() {
            if b.deg() == 0 {
                return ZPoly::one();
            }
            let r = a.prem(&b);
            a = b;
            b = r.primitive();
        }
        a.primitive()
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        let mut acc = BigInt::zero();
        for c in self.c.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> ZPoly {
        ZPoly::from_vec(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn gcd_of_products() {
        let a = p(&[1, 1]); // 1+x
        let b = p(&[-1, 0, 1]); // x^2-1
        let c = p(&[2, 0, 3]);
        let g = a.mul(&c).gcd(&b.mul(&c));
        assert_eq!(g, a.mul(&c));
    }

    #[test]
    fn exact_division() {
        let a = p(&[1, 2, 1]);
        assert_eq!(a.div_exact(&p(&[1, 1])), Some(p(&[1, 1])));
        assert_eq!(a.div_exact(&p(&[2, 1])), None);
    }
}
