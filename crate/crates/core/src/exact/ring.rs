use std::fmt::{Debug, Display};

use super::Rational;

/// Commutative ring with exact equality.
///
/// Elements carry enough information to build their own zero and one, which
/// is what lets [`super::QuadExt`] keep its discriminant per element.
pub trait Ring: Clone + PartialEq + Debug + Display {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;

    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    /// Multiplication by a rational constant.
    fn scale(&self, c: &Rational) -> Self;

    /// Multiplicative inverse when the element is a unit.
    fn try_inverse(&self) -> Option<Self>;

    /// Whether two elements live in the same ring instance.
    fn same_ring(&self, _other: &Self) -> bool {
        true
    }

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    /// `self^n` by binary powering.
    fn pow(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Embeds a rational constant using `self` as the ring template.
    fn constant_like(&self, c: &Rational) -> Self {
        self.one_like().scale(c)
    }
}
