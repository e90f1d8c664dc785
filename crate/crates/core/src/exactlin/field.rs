//! Prime fields GF(p).
//!
//! Elements are stored as plain `u32` residues; the modulus travels in an
//! [`Fp`] context value so several characteristics can be used side by side.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest modulus accepted. Keeps every product of two residues well inside `u64`.
pub const MAX_PRIME: u32 = 65_521;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Fp {
    p: u32,
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Fp {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) || p > MAX_PRIME {
            return Err(Error::NotPrime(p));
        }
        Ok(Fp { p })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(self, a: u32, mut e: u64) -> u32 {
        let mut base = a % self.p;
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(self, a: u32) -> Result<u32> {
        if a % self.p == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, (self.p - 2) as u64))
    }

    pub fn elem(self, v: i64) -> FieldElement {
        FieldElement {
            value: self.reduce(v),
            field: self,
        }
    }

    pub fn random<R: Rng + ?Sized>(self, rng: &mut R) -> u32 {
        rng.gen_range(0..self.p)
    }

    pub fn random_vector<R: Rng + ?Sized>(self, n: usize, rng: &mut R) -> Vec<u32> {
        (0..n).map(|_| self.random(rng)).collect()
    }

    /// `dst += a * src`
    #[inline]
    pub fn axpy(self, dst: &mut [u32], a: u32, src: &[u32]) {
        if a == 0 {
            return;
        }
        for (d, &s) in dst.iter_mut().zip(src) {
            if s != 0 {
                *d = self.add(*d, self.mul(a, s));
            }
        }
    }

    pub fn scale(self, v: &mut [u32], a: u32) {
        for x in v.iter_mut() {
            *x = self.mul(*x, a);
        }
    }

    pub fn dot(self, a: &[u32], b: &[u32]) -> u32 {
        let acc: u64 = a
            .iter()
            .zip(b)
            .map(|(&x, &y)| (x as u64 * y as u64) % self.p as u64)
            .sum();
        (acc % self.p as u64) as u32
    }

    pub fn sub_vec(self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).map(|(&x, &y)| self.sub(x, y)).collect()
    }

    pub fn add_vec(self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).map(|(&x, &y)| self.add(x, y)).collect()
    }

    /// Signed representative in `(-p/2, p/2]`, handy for display.
    pub fn signed(self, a: u32) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

pub fn unit_vector(n: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

pub fn is_zero(v: &[u32]) -> bool {
    v.iter().all(|&x| x == 0)
}

/// A scalar carrying its field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    field: Fp,
}

impl FieldElement {
    pub fn new(field: Fp, value: u32) -> Self {
        FieldElement {
            value: value % field.p,
            field,
        }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn field(self) -> Fp {
        self.field
    }

    pub fn inv(self) -> Result<Self> {
        Ok(FieldElement {
            value: self.field.inv(self.value)?,
            field: self.field,
        })
    }

    fn check(self, other: Self) {
        assert_eq!(
            self.field, other.field,
            "mixing elements of different fields"
        );
    }
}

impl Add for FieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.check(rhs);
        FieldElement::new(self.field, self.field.add(self.value, rhs.value))
    }
}

impl Sub for FieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.check(rhs);
        FieldElement::new(self.field, self.field.sub(self.value, rhs.value))
    }
}

impl Mul for FieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.check(rhs);
        FieldElement::new(self.field, self.field.mul(self.value, rhs.value))
    }
}

impl Neg for FieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        FieldElement::new(self.field, self.field.neg(self.value))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modular_arithmetic() {
        let f5 = Fp::new(5).unwrap();
        assert_eq!((f5.elem(3) + f5.elem(4)).value(), 2);
        assert_eq!(f5.elem(2).inv().unwrap().value(), 3);
        assert_eq!((-f5.elem(2)).value(), 3);
        assert_eq!((f5.elem(3) * f5.elem(4)).value(), 2);
        let f7 = Fp::new(7).unwrap();
        assert_eq!(f7.elem(0).inv(), Err(Error::ZeroInverse));
        assert_eq!(f7.elem(-1).value(), 6);
    }

    #[test]
    fn rejects_composites() {
        assert_eq!(Fp::new(1), Err(Error::NotPrime(1)));
        assert_eq!(Fp::new(9), Err(Error::NotPrime(9)));
        assert!(Fp::new(2).is_ok());
        assert!(Fp::new(101).is_ok());
    }

    #[test]
    fn fermat() {
        for p in [2u32, 3, 5, 7, 11, 101] {
            let f = Fp::new(p).unwrap();
            for a in 1..p {
                assert_eq!(f.pow(a, (p - 1) as u64), 1);
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
        }
    }
}
