use std::fmt;

use super::{Rational, Ring};
use crate::error::{Error, Result};

/// `a + b*y` with `y^2 = d`, over a base ring `R`.
///
/// The discriminant travels with each element so that `sqrt(5)`, `i` and
/// `sqrt(9x^2 - 1)` can coexist. Binary operations on elements with different
/// `d` are a usage error: the `checked_*` methods report it, the [`Ring`]
/// methods panic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt<R> {
    a: R,
    b: R,
    d: R,
}

impl<R: Ring> QuadExt<R> {
    pub fn new(a: R, b: R, d: R) -> Self {
        Self { a, b, d }
    }

    /// Embeds a base-ring element (`b = 0`).
    pub fn from_base(a: R, d: R) -> Self {
        let b = a.zero_like();
        Self { a, b, d }
    }

    /// The adjoined root `y` itself.
    pub fn root(d: R) -> Self {
        Self {
            a: d.zero_like(),
            b: d.one_like(),
            d,
        }
    }

    pub fn a(&self) -> &R {
        &self.a
    }

    pub fn b(&self) -> &R {
        &self.b
    }

    pub fn d(&self) -> &R {
        &self.d
    }

    pub fn into_parts(self) -> (R, R) {
        (self.a, self.b)
    }

    fn ensure_same_d(&self, other: &Self) -> Result<()> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(Error::DiscriminantMismatch {
                left: self.d.to_string(),
                right: other.d.to_string(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.ensure_same_d(other)?;
        Ok(Self::new(
            self.a.add(&other.a),
            self.b.add(&other.b),
            self.d.clone(),
        ))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.ensure_same_d(other)?;
        Ok(Self::new(
            self.a.sub(&other.a),
            self.b.sub(&other.b),
            self.d.clone(),
        ))
    }

    /// `(a1 + b1 y)(a2 + b2 y) = (a1 a2 + b1 b2 d) + (a1 b2 + a2 b1) y`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.ensure_same_d(other)?;
        let a = self.a.mul(&other.a).add(&self.b.mul(&other.b).mul(&self.d));
        let b = self.a.mul(&other.b).add(&other.a.mul(&self.b));
        Ok(Self::new(a, b, self.d.clone()))
    }

    pub fn conj(&self) -> Self {
        Self::new(self.a.clone(), self.b.neg(), self.d.clone())
    }

    /// `u * conj(u) = a^2 - b^2 d`, an element of the base ring.
    pub fn norm(&self) -> R {
        self.a.mul(&self.a).sub(&self.b.mul(&self.b).mul(&self.d))
    }

    /// `conj(u) / norm(u)`; requires the norm to be a unit of the base ring.
    pub fn inverse(&self) -> Result<Self> {
        let norm_inv = self
            .norm()
            .try_inverse()
            .ok_or_else(|| Error::NotInvertible(self.to_string()))?;
        let c = self.conj();
        Ok(Self::new(
            c.a.mul(&norm_inv),
            c.b.mul(&norm_inv),
            self.d.clone(),
        ))
    }

    /// Signed power; negative exponents go through [`Self::inverse`].
    pub fn powi(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        Ok(base.pow(n.unsigned_abs()))
    }

    /// Multiplies both components by a base-ring element.
    pub fn scale_base(&self, c: &R) -> Self {
        Self::new(self.a.mul(c), self.b.mul(c), self.d.clone())
    }

    /// Applies `f` to both components, keeping or replacing `d`.
    pub fn map<S: Ring>(&self, d: S, f: impl Fn(&R) -> S) -> QuadExt<S> {
        QuadExt::new(f(&self.a), f(&self.b), d)
    }
}

impl<R: Ring> Ring for QuadExt<R> {
    fn zero_like(&self) -> Self {
        Self::new(self.a.zero_like(), self.a.zero_like(), self.d.clone())
    }

    fn one_like(&self) -> Self {
        Self::new(self.a.one_like(), self.a.zero_like(), self.d.clone())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn add(&self, other: &Self) -> Self {
        self.checked_add(other).expect("quadratic extension")
    }

    fn sub(&self, other: &Self) -> Self {
        self.checked_sub(other).expect("quadratic extension")
    }

    fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("quadratic extension")
    }

    fn neg(&self) -> Self {
        Self::new(self.a.neg(), self.b.neg(), self.d.clone())
    }

    fn scale(&self, c: &Rational) -> Self {
        Self::new(self.a.scale(c), self.b.scale(c), self.d.clone())
    }

    fn try_inverse(&self) -> Option<Self> {
        self.inverse().ok()
    }

    fn same_ring(&self, other: &Self) -> bool {
        self.d == other.d
    }
}

fn needs_parens(s: &str) -> bool {
    s.trim_start_matches('-').contains(' ')
}

impl<R: Ring> fmt::Display for QuadExt<R> {
    /// `a + b*sqrt(d)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |s: String| {
            if needs_parens(&s) {
                format!("({s})")
            } else {
                s
            }
        };
        let a = self.a.to_string();
        let d = self.d.to_string();
        if self.b.is_zero() {
            return write!(f, "{a}");
        }
        let b = wrap(self.b.to_string());
        if self.a.is_zero() {
            write!(f, "{b}*sqrt({d})")
        } else {
            write!(f, "{} + {b}*sqrt({d})", wrap(a))
        }
    }
}

impl<R: Ring> fmt::Debug for QuadExt<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl QuadExt<Rational> {
    /// `sqrt(d)^n` for any integer `n`, exactly: `d^(n/2)` or `d^((n-1)/2) * y`.
    pub fn root_pow(d: &Rational, n: i64) -> Result<Self> {
        let half = n.div_euclid(2);
        let pure = d.powi(half)?;
        if n.rem_euclid(2) == 0 {
            Ok(Self::from_base(pure, d.clone()))
        } else {
            Ok(Self::new(Rational::zero(), pure, d.clone()))
        }
    }
}
