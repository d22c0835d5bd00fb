//! Exact ground fields.
//!
//! Everything above this module is generic over [`Scalar`]. Two families are
//! provided: arbitrary-precision rationals and the prime fields `Fp<P>`.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Zero};

/// An exact commutative field.
pub trait Scalar:
    Num + Neg<Output = Self> + FromPrimitive + Clone + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// Characteristic of the field (0 for the rationals).
    fn characteristic() -> u64;

    /// Multiplicative inverse; `None` for zero.
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }

    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("every integer embeds in the field")
    }

    /// `(-1)^k`.
    fn sign(k: usize) -> Self {
        if k % 2 == 0 {
            Self::one()
        } else {
            -Self::one()
        }
    }

    /// Parses an integer or a fraction `a/b`.
    fn parse(text: &str) -> Option<Self> {
        let text = text.trim();
        match text.split_once('/') {
            Some((num, den)) => {
                let num = Self::from_int(num.trim().parse().ok()?);
                let den = Self::from_int(den.trim().parse().ok()?);
                let inv = den.inverse()?;
                Some(num * inv)
            }
            None => Some(Self::from_int(text.parse().ok()?)),
        }
    }
}

impl Scalar for BigRational {
    fn characteristic() -> u64 {
        0
    }

    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

/// Residues modulo the prime `P`.
///
/// `P` must be prime; this is checked by [`Fp::new`] in debug builds and by
/// [`is_prime`] wherever a modulus comes from user input.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(value: i128) -> Self {
        debug_assert!(is_prime(P), "modulus {P} is not prime");
        Fp(value.rem_euclid(P as i128) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut exp: u64) -> Self {
        let mut base = self;
        let mut acc = Fp::<P>(1 % P);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 + rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 + P as u128 - rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(rhs.0 != 0, "division by zero in F_{P}");
        self * rhs.pow(P - 2)
    }
}

impl<const P: u64> Rem for Fp<P> {
    type Output = Self;
    // A field has no nontrivial remainders.
    fn rem(self, rhs: Self) -> Self {
        assert!(rhs.0 != 0, "remainder by zero in F_{P}");
        Fp(0)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Num for Fp<P> {
    type FromStrRadixErr = std::num::ParseIntError;

    fn from_str_radix(text: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        i128::from_str_radix(text, radix).map(Fp::new)
    }
}

impl<const P: u64> FromPrimitive for Fp<P> {
    fn from_i64(n: i64) -> Option<Self> {
        Some(Fp::new(n as i128))
    }
    fn from_u64(n: u64) -> Option<Self> {
        Some(Fp::new(n as i128))
    }
}

impl<const P: u64> Scalar for Fp<P> {
    fn characteristic() -> u64 {
        P
    }

    fn inverse(&self) -> Option<Self> {
        (self.0 != 0).then(|| self.pow(P - 2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type F7 = Fp<7>;
    type Q = BigRational;

    #[test]
    fn prime_field_arithmetic() {
        let a = F7::new(3);
        let b = F7::new(5);
        assert_eq!((a + b).value(), 1);
        assert_eq!((a - b).value(), 5);
        assert_eq!((a * b).value(), 1);
        assert_eq!(a * a.inverse().unwrap(), F7::one());
        assert_eq!((-a).value(), 4);
        assert_eq!(F7::new(-1).value(), 6);
        assert!(F7::zero().inverse().is_none());
    }

    #[test]
    fn parse_fractions() {
        assert_eq!(Q::parse("-3/2").unwrap().to_string(), "-3/2");
        assert_eq!(Q::parse("4").unwrap().to_string(), "4");
        assert!(Q::parse("1/0").is_none());
        assert_eq!(F7::parse("1/2").unwrap().value(), 4);
    }

    #[test]
    fn signs() {
        assert_eq!(Q::sign(3), -Q::one());
        assert_eq!(Q::sign(4), Q::one());
        assert_eq!(Fp::<2>::sign(1), Fp::<2>::one());
    }

    #[test]
    fn primality() {
        assert!(is_prime(2) && is_prime(32003) && !is_prime(1) && !is_prime(91));
    }
}
