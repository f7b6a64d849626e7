//! Dense univariate polynomials over [`Rational`].
//!
//! Coefficients are stored by ascending degree with trailing zeros stripped,
//! so the zero polynomial is the empty vector and equality is structural.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exact::{QuadExt, Rational, Ring};

/// Quadratic extension with polynomial components, e.g. `Q[x][sqrt(9x^2 - 1)]`.
pub type PolyQuad = QuadExt<Poly>;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    /// Convenience for small integer coefficients, ascending degree.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Rational::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x0: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x0 + c)
    }

    /// Horner evaluation at a point of any ring containing the rationals,
    /// e.g. a quadratic extension of `Q`.
    pub fn eval_in<R: Ring>(&self, pt: &R) -> R {
        self.coeffs.iter().rev().fold(pt.zero_like(), |acc, c| {
            acc.mul(pt).add(&pt.constant_like(c))
        })
    }

    pub fn eval_quadext(&self, pt: &QuadExt<Rational>) -> QuadExt<Rational> {
        self.eval_in(pt)
    }

    /// `p(inner(x))`.
    pub fn compose(&self, inner: &Poly) -> Poly {
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, c| {
            &(&acc * inner) + &Poly::constant(c.clone())
        })
    }

    /// `p(a*x + b)`.
    pub fn compose_linear(&self, a: &Rational, b: &Rational) -> Poly {
        self.compose(&Poly::from_coeffs(vec![b.clone(), a.clone()]))
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|v| v * c).collect())
    }

    /// Exact quotient `self / divisor`; fails if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = divisor.coeffs[dd].recip()?;
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return Ok(Poly::zero());
        };
        if sd < dd {
            return Err(Error::InexactDivision(self.to_string()));
        }
        let mut quot = vec![Rational::zero(); sd - dd + 1];
        for i in (0..=sd - dd).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if !c.is_zero() {
                for (k, dc) in divisor.coeffs.iter().enumerate() {
                    let t = &c * dc;
                    rem[i + k] -= &t;
                }
            }
            quot[i] = c;
        }
        let rem = Poly::from_coeffs(rem);
        if !rem.is_zero() {
            return Err(Error::InexactDivision(rem.to_string()));
        }
        Ok(Poly::from_coeffs(quot))
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = a * b;
                out[i + j] += &t;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! by_value {
    ($tr:ident, $method:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                $tr::$method(&self, &rhs)
            }
        }
    };
}

by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Ring for Poly {
    fn zero_like(&self) -> Self {
        Poly::zero()
    }

    fn one_like(&self) -> Self {
        Poly::one()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
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
        Poly::scale(self, c)
    }

    /// Units are the nonzero constants.
    fn try_inverse(&self) -> Option<Self> {
        match self.coeffs.as_slice() {
            [c] => c.recip().ok().map(Poly::constant),
            _ => None,
        }
    }
}

impl fmt::Display for Poly {
    /// `c0 + c1*x + c2*x^2 + ...`, skipping zero terms; `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let unit = mag == Rational::one();
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
