use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Ring;
use crate::error::{Error, Result};

/// Arbitrary-precision integer.
pub type Integer = BigInt;

/// Reduced fraction with a positive denominator; zero is `0/1`.
///
/// Equality is structural, which coincides with field equality because the
/// representation is canonical.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den`, reducing it. Fails on a zero denominator.
    pub fn new(num: impl Into<Integer>, den: impl Into<Integer>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self(BigRational::new(num.into(), den)))
    }

    /// Small-integer fraction helper; panics on a zero denominator.
    pub fn frac(num: i64, den: i64) -> Self {
        Self::new(num, den).expect("zero denominator")
    }

    pub fn from_integer(n: impl Into<Integer>) -> Self {
        Self(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn numer(&self) -> &Integer {
        self.0.numer()
    }

    pub fn denom(&self) -> &Integer {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Self(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self(self.0.recip()))
    }

    /// Integer power; negative exponents invert first.
    pub fn powi(&self, exp: i64) -> Result<Self> {
        let base = if exp < 0 { self.recip()? } else { self.clone() };
        Ok(Ring::pow(&base, exp.unsigned_abs()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self(&self.0 / &other.0))
    }
}

impl fmt::Display for Rational {
    /// `p/q`, or just `p` for integers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Report(format!("not a rational: `{s}`"));
        match s.trim().split_once('/') {
            Some((p, q)) => {
                let p: Integer = p.trim().parse().map_err(|_| bad())?;
                let q: Integer = q.trim().parse().map_err(|_| bad())?;
                Self::new(p, q)
            }
            None => Ok(Self::from_integer(
                s.trim().parse::<Integer>().map_err(|_| bad())?,
            )),
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<Integer> for Rational {
    fn from(n: Integer) -> Self {
        Self::from_integer(n)
    }
}

impl From<&Integer> for Rational {
    fn from(n: &Integer) -> Self {
        Self::from_integer(n.clone())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $tr for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl $tr<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Panics on a zero divisor, like the integer types; use `checked_div` when
// the divisor is data-dependent.
forward_binop!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, v| acc + v)
    }
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }

    fn one_like(&self) -> Self {
        Rational::one()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn scale(&self, c: &Rational) -> Self {
        self * c
    }

    fn try_inverse(&self) -> Option<Self> {
        self.recip().ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_form() {
        let r = Rational::new(6, -4).unwrap();
        assert_eq!(r.numer(), &Integer::from(-3));
        assert_eq!(r.denom(), &Integer::from(2));
        let zero = Rational::new(0, -7).unwrap();
        assert_eq!(zero, Rational::zero());
        assert_eq!(zero.denom(), &Integer::from(1));
        assert_eq!(Rational::new(1, 0), Err(Error::DivisionByZero));
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(Rational::frac(-691, 2730).to_string(), "-691/2730");
        assert_eq!(Rational::from(5).to_string(), "5");
        assert_eq!("-2/4".parse::<Rational>().unwrap(), Rational::frac(-1, 2));
        assert_eq!("17".parse::<Rational>().unwrap(), Rational::from(17));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn powers() {
        let half = Rational::frac(1, 2);
        assert_eq!(half.powi(3).unwrap(), Rational::frac(1, 8));
        assert_eq!(half.powi(-3).unwrap(), Rational::from(8));
        assert_eq!(half.powi(0).unwrap(), Rational::one());
        assert!(Rational::zero().powi(-1).is_err());
    }

    fn small() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..50).prop_map(|(p, q)| Rational::frac(p, q))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn add_sub_round_trip(a in small(), b in small()) {
            prop_assert_eq!((&a + &b) - &b, a);
        }

        #[test]
        fn field_axioms(a in small(), b in small(), c in small()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.recip().unwrap(), Rational::one());
            }
        }

        #[test]
        fn always_reduced(a in small(), b in small()) {
            let p = &a * &b;
            prop_assert!(p.denom() > &Integer::from(0));
            prop_assert_eq!(num_integer::Integer::gcd(p.numer(), p.denom()), Integer::from(1));
        }
    }
}
