use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{binomial, Rational, Ring};

/// Truncated exponential generating function `sum_{n<=N} a_n z^n / n!`.
///
/// Only the `a_n` are stored, so products are binomial convolutions and no
/// factorials appear in the coefficients. There is always at least one
/// coefficient; the ring instance is that of `a_0`.
#[derive(Clone, PartialEq, Eq)]
pub struct EgfSeries<R> {
    coeffs: Vec<R>,
}

fn binomial_row(n: usize) -> Vec<Rational> {
    (0..=n)
        .map(|k| Rational::from(binomial(n as i64, k as i64).expect("n >= 0")))
        .collect()
}

impl<R: Ring> EgfSeries<R> {
    /// Series with the given `a_0..a_N`; all must live in one ring.
    pub fn from_coeffs(coeffs: Vec<R>) -> Result<Self> {
        let Some(first) = coeffs.first() else {
            return Err(Error::SeriesMismatch("a series needs at least a_0".into()));
        };
        if let Some(bad) = coeffs.iter().find(|c| !c.same_ring(first)) {
            return Err(Error::SeriesMismatch(format!(
                "coefficient {bad} not in the ring of {first}"
            )));
        }
        Ok(Self { coeffs })
    }

    /// Builds `a_n = f(n)` for `n = 0..=order`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Result<R>) -> Result<Self> {
        Self::from_coeffs((0..=order).map(f).collect::<Result<Vec<_>>>()?)
    }

    /// The constant `c + O(z^{N+1})`.
    pub fn constant(c: R, order: usize) -> Self {
        let zero = c.zero_like();
        let mut coeffs = vec![zero; order + 1];
        coeffs[0] = c;
        Self { coeffs }
    }

    /// `1` in the ring of `template`.
    pub fn one(template: &R, order: usize) -> Self {
        Self::constant(template.one_like(), order)
    }

    /// `exp(c z)`: `a_n = c^n`.
    pub fn exp_linear(c: &R, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut p = c.one_like();
        for _ in 0..=order {
            let next = p.mul(c);
            coeffs.push(p);
            p = next;
        }
        Self { coeffs }
    }

    /// `cosh(c z)`: `c^n` for even `n`, else `0`.
    pub fn cosh_linear(c: &R, order: usize) -> Self {
        Self::exp_linear(c, order).keep_parity(0)
    }

    /// `sinh(c z)`: `c^n` for odd `n`, else `0`.
    pub fn sinh_linear(c: &R, order: usize) -> Self {
        Self::exp_linear(c, order).keep_parity(1)
    }

    fn keep_parity(mut self, parity: usize) -> Self {
        for (n, c) in self.coeffs.iter_mut().enumerate() {
            if n % 2 != parity {
                *c = c.zero_like();
            }
        }
        self
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Replaces `a_n` (used to build perturbed negative controls).
    pub fn with_coeff(mut self, n: usize, value: R) -> Result<Self> {
        if n > self.order() || !value.same_ring(&self.coeffs[0]) {
            return Err(Error::SeriesMismatch(format!("cannot set a_{n}")));
        }
        self.coeffs[n] = value;
        Ok(self)
    }

    fn ensure_compatible(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::SeriesMismatch(format!(
                "orders {} and {} differ",
                self.order(),
                other.order()
            )));
        }
        if !self.coeffs[0].same_ring(&other.coeffs[0]) {
            return Err(Error::SeriesMismatch(format!(
                "rings of {} and {} differ",
                self.coeffs[0], other.coeffs[0]
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.ensure_compatible(other)?;
        Ok(self.zip(other, R::add))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.ensure_compatible(other)?;
        Ok(self.zip(other, R::sub))
    }

    fn zip(&self, other: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(R::neg)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|a| a.scale(c))
    }

    /// Multiplies every coefficient by a ring element.
    pub fn scale_by(&self, c: &R) -> Result<Self> {
        if !c.same_ring(&self.coeffs[0]) {
            return Err(Error::SeriesMismatch(format!(
                "scalar {c} not in series ring"
            )));
        }
        Ok(self.map(|a| a.mul(c)))
    }

    pub fn map(&self, f: impl Fn(&R) -> R) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// `(fg)_n = sum_k C(n, k) f_k g_{n-k}`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.ensure_compatible(other)?;
        let zero = self.coeffs[0].zero_like();
        let coeffs = (0..=self.order())
            .map(|n| {
                let row = binomial_row(n);
                (0..=n).fold(zero.clone(), |acc, k| {
                    let (f, g) = (&self.coeffs[k], &other.coeffs[n - k]);
                    if f.is_zero() || g.is_zero() {
                        acc
                    } else {
                        acc.add(&f.mul(g).scale(&row[k]))
                    }
                })
            })
            .collect();
        Ok(Self { coeffs })
    }

    /// Multiplicative inverse up to order `N`:
    /// `g_n = a_0^{-1} ([n = 0] - sum_{k=1}^{n} C(n, k) a_k g_{n-k})`.
    pub fn recip(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        let inv = a0
            .try_inverse()
            .ok_or_else(|| Error::NotInvertible(a0.to_string()))?;
        let mut g: Vec<R> = Vec::with_capacity(self.coeffs.len());
        g.push(inv.clone());
        for n in 1..=self.order() {
            let row = binomial_row(n);
            let mut acc = a0.zero_like();
            for k in 1..=n {
                let a = &self.coeffs[k];
                if !a.is_zero() {
                    acc = acc.add(&a.mul(&g[n - k]).scale(&row[k]));
                }
            }
            g.push(acc.neg().mul(&inv));
        }
        Ok(Self { coeffs: g })
    }

    /// Index of the first coefficient where the two series differ.
    pub fn first_mismatch(&self, other: &Self) -> Result<Option<usize>> {
        self.ensure_compatible(other)?;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b))
    }
}

impl<R: Ring> fmt::Display for EgfSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "] + O(z^{})", self.order() + 1)
    }
}

impl<R: Ring> fmt::Debug for EgfSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::QuadExt;
    use crate::sequences::SequenceCache;
    use proptest::prelude::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::frac(p, q)
    }

    /// Independent oracle: divide ordinary power series with coefficients
    /// `a_n / n!` by long division.
    fn ordinary_reciprocal(egf: &[Rational]) -> Vec<Rational> {
        let fact = |n: usize| Rational::from(crate::exact::factorial(n as u64));
        let ord: Vec<Rational> = egf.iter().enumerate().map(|(n, a)| a / &fact(n)).collect();
        let mut out: Vec<Rational> = Vec::new();
        for n in 0..ord.len() {
            let mut acc = if n == 0 {
                Rational::one()
            } else {
                Rational::zero()
            };
            for k in 1..=n {
                acc -= &(&ord[k] * &out[n - k]);
            }
            out.push(acc / &ord[0]);
        }
        out.iter().enumerate().map(|(n, c)| c * &fact(n)).collect()
    }

    #[test]
    fn exponent_additivity() {
        let (c1, c2) = (r(3, 2), r(-7, 5));
        let lhs = EgfSeries::exp_linear(&c1, 8)
            .mul(&EgfSeries::exp_linear(&c2, 8))
            .unwrap();
        assert_eq!(lhs, EgfSeries::exp_linear(&(&c1 + &c2), 8));
    }

    #[test]
    fn unit_and_zero_exponent() {
        let f = EgfSeries::from_fn(6, |n| Ok(Rational::from(n as i64 * n as i64 - 3))).unwrap();
        assert_eq!(f.mul(&EgfSeries::one(&Rational::one(), 6)).unwrap(), f);
        let e0 = EgfSeries::exp_linear(&Rational::zero(), 5);
        assert_eq!(e0, EgfSeries::one(&Rational::one(), 5));
    }

    #[test]
    fn hyperbolic_identities() {
        let c = r(5, 3);
        let n = 12;
        let ch = EgfSeries::cosh_linear(&c, n);
        let sh = EgfSeries::sinh_linear(&c, n);
        assert_eq!(ch.add(&sh).unwrap(), EgfSeries::exp_linear(&c, n));
        let diff = ch.mul(&ch).unwrap().sub(&sh.mul(&sh).unwrap()).unwrap();
        assert_eq!(diff, EgfSeries::one(&c, n));
        // cosh * sech = 1
        assert_eq!(ch.mul(&ch.recip().unwrap()).unwrap(), EgfSeries::one(&c, n));
    }

    #[test]
    fn sech_gives_euler_numbers() {
        let mut cache = SequenceCache::new();
        let sech = EgfSeries::cosh_linear(&Rational::one(), 20)
            .recip()
            .unwrap();
        let oracle = ordinary_reciprocal(EgfSeries::cosh_linear(&Rational::one(), 20).coeffs());
        for (n, want) in oracle.iter().enumerate() {
            assert_eq!(sech.coeff(n), &cache.euler_q(n as i64).unwrap());
            assert_eq!(sech.coeff(n), want);
        }
    }

    #[test]
    fn bernoulli_from_reciprocal() {
        // (e^z - 1)/z has EGF coefficients 1/(n+1).
        let f = EgfSeries::from_fn(16, |n| Ok(r(1, n as i64 + 1))).unwrap();
        let g = f.recip().unwrap();
        let mut cache = SequenceCache::new();
        for n in 0..=16 {
            assert_eq!(g.coeff(n), &cache.bernoulli_number(n as i64).unwrap());
        }
    }

    #[test]
    fn recip_of_one_and_non_units() {
        let one = EgfSeries::one(&Rational::one(), 4);
        assert_eq!(one.recip().unwrap(), one);
        let z = EgfSeries::from_coeffs(vec![r(0, 1), r(1, 1), r(0, 1)]).unwrap();
        assert!(matches!(z.recip(), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn mismatches_are_errors() {
        let a = EgfSeries::one(&Rational::one(), 3);
        let b = EgfSeries::one(&Rational::one(), 4);
        assert!(matches!(a.mul(&b), Err(Error::SeriesMismatch(_))));
        let i = EgfSeries::one(&QuadExt::root(Rational::from(-1)), 3);
        let s5 = EgfSeries::one(&QuadExt::root(Rational::from(5)), 3);
        assert!(matches!(i.add(&s5), Err(Error::SeriesMismatch(_))));
        assert!(EgfSeries::<Rational>::from_coeffs(vec![]).is_err());
        let mixed = vec![
            QuadExt::root(Rational::from(-1)),
            QuadExt::root(Rational::from(5)),
        ];
        assert!(EgfSeries::from_coeffs(mixed).is_err());
    }

    fn unit_series() -> impl Strategy<Value = EgfSeries<Rational>> {
        (1i64..6, prop::collection::vec((-9i64..10, 1i64..4), 8)).prop_map(|(a0, rest)| {
            let mut cs = vec![Rational::from(a0)];
            cs.extend(rest.into_iter().map(|(p, q)| r(p, q)));
            EgfSeries::from_coeffs(cs).unwrap()
        })
    }

    proptest! {
        #[test]
        fn double_reciprocal_is_identity(f in unit_series()) {
            prop_assert_eq!(f.recip().unwrap().recip().unwrap(), f.clone());
            let one = EgfSeries::one(&Rational::one(), f.order());
            prop_assert_eq!(f.mul(&f.recip().unwrap()).unwrap(), one);
        }

        #[test]
        fn reciprocal_matches_long_division(f in unit_series()) {
            let oracle = ordinary_reciprocal(f.coeffs());
            let g = f.recip().unwrap();
            prop_assert_eq!(g.coeffs(), &oracle[..]);
        }
    }
}
