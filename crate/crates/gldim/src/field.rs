//! Field descriptors for exact scalar arithmetic.
//!
//! Every linear-algebra routine in this crate is parameterized by a
//! *descriptor* value implementing [`Field`] rather than by a bare element
//! type. Elements are plain data (`BigRational`, `u64`) and all arithmetic
//! goes through the descriptor, so a prime field can carry its modulus at
//! runtime without a type-level constant.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("cannot parse {text:?} as an element of {field}")]
    Parse { field: String, text: String },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds the supported range (must be < 2^31)")]
    ModulusTooLarge(u64),
    #[error("unknown field descriptor {0:?} (expected \"Q\" or \"Fp:<p>\")")]
    UnknownDescriptor(String),
}

/// A field of scalars, presented as a descriptor value.
///
/// Implementations must provide exact arithmetic: `add`, `mul`, etc. are
/// total, and `inv` returns `None` exactly on zero.
pub trait Field: Clone + Eq + fmt::Debug + 'static {
    type Elem: Clone + PartialEq + Eq + fmt::Debug + Hash;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` iff `a` is zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_int(&self, n: i64) -> Self::Elem;
    fn parse(&self, text: &str) -> Result<Self::Elem, FieldError>;
    fn format(&self, a: &Self::Elem) -> String;
    /// 0 for characteristic zero, otherwise the prime p.
    fn characteristic(&self) -> u64;
    /// Human-readable name, e.g. `Q` or `F_7`.
    fn name(&self) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}

/// The rational numbers with arbitrary-precision arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn parse(&self, text: &str) -> Result<BigRational, FieldError> {
        let bad = || FieldError::Parse {
            field: "Q".into(),
            text: text.into(),
        };
        let text = text.trim();
        match text.split_once('/') {
            Some((num, den)) => {
                let num: BigInt = num.trim().parse().map_err(|_| bad())?;
                let den: BigInt = den.trim().parse().map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(bad());
                }
                Ok(BigRational::new(num, den))
            }
            None => {
                let num: BigInt = text.parse().map_err(|_| bad())?;
                Ok(BigRational::from_integer(num))
            }
        }
    }

    fn format(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn name(&self) -> String {
        "Q".into()
    }
}

/// The prime field `F_p`, with `p < 2^31` so products fit in `u64`.
///
/// Elements are canonical representatives in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p >= 1 << 31 {
            return Err(FieldError::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }

    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, self.p - 2))
        }
    }

    fn from_int(&self, n: i64) -> u64 {
        let r = n.rem_euclid(self.p as i64);
        r as u64
    }

    fn parse(&self, text: &str) -> Result<u64, FieldError> {
        let bad = || FieldError::Parse {
            field: self.name(),
            text: text.into(),
        };
        let text = text.trim();
        match text.split_once('/') {
            Some((num, den)) => {
                let num: i64 = num.trim().parse().map_err(|_| bad())?;
                let den: i64 = den.trim().parse().map_err(|_| bad())?;
                let den = self.from_int(den);
                let den_inv = self.inv(&den).ok_or_else(bad)?;
                Ok(self.mul(&self.from_int(num), &den_inv))
            }
            None => {
                let num: i64 = text.parse().map_err(|_| bad())?;
                Ok(self.from_int(num))
            }
        }
    }

    fn format(&self, a: &u64) -> String {
        a.to_string()
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn name(&self) -> String {
        format!("F_{}", self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_parse_and_format_round_trip() {
        let k = Rationals;
        for text in ["0", "1", "-7", "3/4", "-22/7"] {
            let e = k.parse(text).unwrap();
            assert_eq!(k.format(&e), text);
        }
        // Non-canonical input normalizes.
        assert_eq!(k.format(&k.parse("6/8").unwrap()), "3/4");
        assert_eq!(k.format(&k.parse("4/2").unwrap()), "2");
        assert_eq!(k.format(&k.parse("5/-10").unwrap()), "-1/2");
        assert!(k.parse("1/0").is_err());
        assert!(k.parse("abc").is_err());
    }

    #[test]
    fn rationals_arithmetic() {
        let k = Rationals;
        let a = k.parse("3/4").unwrap();
        let b = k.parse("1/6").unwrap();
        assert_eq!(k.format(&k.add(&a, &b)), "11/12");
        assert_eq!(k.format(&k.mul(&a, &b)), "1/8");
        assert_eq!(k.format(&k.inv(&a).unwrap()), "4/3");
        assert!(k.inv(&k.zero()).is_none());
        assert_eq!(k.characteristic(), 0);
    }

    #[test]
    fn prime_field_validates_modulus() {
        assert!(PrimeField::new(7).is_ok());
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(32003).is_ok());
        assert_eq!(PrimeField::new(1), Err(FieldError::NotPrime(1)));
        assert_eq!(PrimeField::new(91), Err(FieldError::NotPrime(91)));
        assert_eq!(
            PrimeField::new(1 << 31),
            Err(FieldError::ModulusTooLarge(1 << 31))
        );
    }

    #[test]
    fn prime_field_arithmetic() {
        let k = PrimeField::new(7).unwrap();
        assert_eq!(k.add(&5, &4), 2);
        assert_eq!(k.sub(&2, &5), 4);
        assert_eq!(k.mul(&3, &5), 1);
        assert_eq!(k.inv(&3), Some(5));
        assert_eq!(k.inv(&0), None);
        assert_eq!(k.from_int(-1), 6);
        assert_eq!(k.parse("1/3").unwrap(), 5);
        assert_eq!(k.characteristic(), 7);
    }

    #[test]
    fn prime_field_large_modulus_products_do_not_overflow() {
        let p = (1u64 << 31) - 1; // Mersenne prime
        let k = PrimeField::new(p).unwrap();
        let a = p - 1;
        assert_eq!(k.mul(&a, &a), 1);
        assert_eq!(k.inv(&a), Some(a));
    }
}
