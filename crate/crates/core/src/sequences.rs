//! Fibonacci/Lucas numbers, balancing and Lucas-balancing polynomials,
//! Bernoulli and Euler numbers and polynomials.
//!
//! Everything is generated from recurrences and memoized per
//! [`SequenceCache`]. Negative indices are rejected. The free functions at the
//! bottom of the module use a throwaway cache and are meant for one-off calls.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, Integer, QuadExt, Rational, Ring};
use crate::poly::Poly;

/// Choice of `+` or `-` in the `±` identities and in `alpha`/`beta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i64(v: i64) -> Option<Self> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn rational(self) -> Rational {
        Rational::from(self.as_i64())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

fn index(n: i64) -> Result<usize> {
    usize::try_from(n).map_err(|_| Error::NegativeIndex(n))
}

/// `(-1)^n` as a rational.
pub fn minus_one_pow(n: i64) -> Rational {
    if n.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        Rational::from(-1)
    }
}

/// `9x^2 - 1`, the discriminant of the balancing root.
pub fn balancing_discriminant() -> Poly {
    Poly::from_ints(&[-1, 0, 9])
}

/// `lambda(x) = 3x + sqrt(9x^2 - 1)`.
pub fn balancing_root() -> QuadExt<Poly> {
    QuadExt::new(
        Poly::from_ints(&[0, 3]),
        Poly::one(),
        balancing_discriminant(),
    )
}

/// Memo tables for every family, filled on demand.
#[derive(Debug, Default, Clone)]
pub struct SequenceCache {
    fibonacci: Vec<Integer>,
    lucas: Vec<Integer>,
    balancing: Vec<Poly>,
    lucas_balancing: Vec<Poly>,
    bernoulli: Vec<Rational>,
    euler: Vec<Integer>,
    bernoulli_poly: Vec<Option<Poly>>,
    euler_poly: Vec<Option<Poly>>,
}

/// Extends a two-term linear recurrence table up to index `n`.
fn extend_two_term<T: Clone>(
    table: &mut Vec<T>,
    n: usize,
    init: (T, T),
    step: impl Fn(&T, &T) -> T,
) {
    if table.is_empty() {
        table.push(init.0);
        table.push(init.1);
    }
    while table.len() <= n {
        let k = table.len();
        let next = step(&table[k - 1], &table[k - 2]);
        table.push(next);
    }
}

impl SequenceCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `F_n` with `F_0 = 0`, `F_1 = 1`.
    pub fn fibonacci(&mut self, n: i64) -> Result<Integer> {
        let n = index(n)?;
        extend_two_term(
            &mut self.fibonacci,
            n,
            (Integer::zero(), Integer::one()),
            |a, b| a + b,
        );
        Ok(self.fibonacci[n].clone())
    }

    /// `L_n` with `L_0 = 2`, `L_1 = 1`.
    pub fn lucas(&mut self, n: i64) -> Result<Integer> {
        let n = index(n)?;
        extend_two_term(
            &mut self.lucas,
            n,
            (Integer::from(2), Integer::one()),
            |a, b| a + b,
        );
        Ok(self.lucas[n].clone())
    }

    /// `F_n` as a rational, for use inside identity sums.
    pub fn fib_q(&mut self, n: i64) -> Result<Rational> {
        self.fibonacci(n).map(Rational::from)
    }

    /// `L_n` as a rational.
    pub fn lucas_q(&mut self, n: i64) -> Result<Rational> {
        self.lucas(n).map(Rational::from)
    }

    /// `B*_n(x)`: `w_n = 6x w_{n-1} - w_{n-2}`, `B*_0 = 0`, `B*_1 = 1`.
    pub fn balancing_poly(&mut self, n: i64) -> Result<Poly> {
        let n = index(n)?;
        let six_x = Poly::from_ints(&[0, 6]);
        extend_two_term(
            &mut self.balancing,
            n,
            (Poly::zero(), Poly::one()),
            |a, b| &(&six_x * a) - b,
        );
        Ok(self.balancing[n].clone())
    }

    /// `C_n(x)`: same recurrence, `C_0 = 1`, `C_1 = 3x`.
    pub fn lucas_balancing_poly(&mut self, n: i64) -> Result<Poly> {
        let n = index(n)?;
        let six_x = Poly::from_ints(&[0, 6]);
        extend_two_term(
            &mut self.lucas_balancing,
            n,
            (Poly::one(), Poly::from_ints(&[0, 3])),
            |a, b| &(&six_x * a) - b,
        );
        Ok(self.lucas_balancing[n].clone())
    }

    /// `B_n`, from `sum_{k=0}^{n} C(n+1, k) B_k = 0` (so `B_1 = -1/2`).
    pub fn bernoulli_number(&mut self, n: i64) -> Result<Rational> {
        let n = index(n)?;
        if self.bernoulli.is_empty() {
            self.bernoulli.push(Rational::one());
        }
        while self.bernoulli.len() <= n {
            let m = self.bernoulli.len() as i64;
            let mut acc = Rational::zero();
            for (k, b) in self.bernoulli.iter().enumerate() {
                if !b.is_zero() {
                    acc += &(Rational::from(binomial(m + 1, k as i64)?) * b);
                }
            }
            let next = -(acc / Rational::from(m + 1));
            self.bernoulli.push(next);
        }
        Ok(self.bernoulli[n].clone())
    }

    /// `E_n`, the coefficients of `1/cosh z`.
    ///
    /// Odd indices return zero directly; even ones come from
    /// `sum_{k=0}^{m} C(2m, 2k) E_{2k} = 0`.
    pub fn euler_number(&mut self, n: i64) -> Result<Integer> {
        let idx = index(n)?;
        if idx % 2 == 1 {
            return Ok(Integer::zero());
        }
        let m_max = idx / 2;
        if self.euler.is_empty() {
            self.euler.push(Integer::one());
        }
        while self.euler.len() <= m_max {
            let m = self.euler.len() as i64;
            let mut acc = Integer::zero();
            for (k, e) in self.euler.iter().enumerate() {
                acc += binomial(2 * m, 2 * k as i64)? * e;
            }
            self.euler.push(-acc);
        }
        Ok(self.euler[m_max].clone())
    }

    pub fn euler_q(&mut self, n: i64) -> Result<Rational> {
        self.euler_number(n).map(Rational::from)
    }

    /// `B_n(x) = sum_k C(n, k) B_k x^{n-k}`.
    pub fn bernoulli_poly(&mut self, n: i64) -> Result<Poly> {
        let idx = index(n)?;
        if let Some(Some(p)) = self.bernoulli_poly.get(idx) {
            return Ok(p.clone());
        }
        let mut coeffs = vec![Rational::zero(); idx + 1];
        for k in 0..=idx {
            let b = self.bernoulli_number(k as i64)?;
            coeffs[idx - k] = Rational::from(binomial(n, k as i64)?) * b;
        }
        let p = Poly::from_coeffs(coeffs);
        store(&mut self.bernoulli_poly, idx, p.clone());
        Ok(p)
    }

    /// `E_n(x) = sum_k C(n, k) (E_k / 2^k) (x - 1/2)^{n-k}`.
    pub fn euler_poly(&mut self, n: i64) -> Result<Poly> {
        let idx = index(n)?;
        if let Some(Some(p)) = self.euler_poly.get(idx) {
            return Ok(p.clone());
        }
        let shift = Poly::from_coeffs(vec![Rational::frac(-1, 2), Rational::one()]);
        let mut acc = Poly::zero();
        let mut shift_pow = Poly::one();
        // Walk k downwards so that (x - 1/2)^{n-k} grows one factor at a time.
        for k in (0..=idx).rev() {
            let e = self.euler_number(k as i64)?;
            if !e.is_zero() {
                let c = Rational::from(binomial(n, k as i64)? * e)
                    / Rational::from(Integer::one() << k);
                acc = &acc + &shift_pow.scale(&c);
            }
            shift_pow = &shift_pow * &shift;
        }
        store(&mut self.euler_poly, idx, acc.clone());
        Ok(acc)
    }

    /// `E_n(0) = 2 (1 - 2^{n+1}) B_{n+1} / (n + 1)`.
    pub fn euler_at_zero(&mut self, n: i64) -> Result<Rational> {
        let idx = index(n)?;
        let b = self.bernoulli_number(n + 1)?;
        let factor =
            Rational::from(Integer::from(2) * (Integer::one() - (Integer::one() << (idx + 1))));
        Ok(factor * b / Rational::from(n + 1))
    }

    /// `lambda(x)^n` in `Q[x][y]/(y^2 - (9x^2 - 1))`.
    pub fn lambda_power(&mut self, n: i64) -> Result<QuadExt<Poly>> {
        let n = index(n)?;
        Ok(balancing_root().pow(n as u64))
    }

    /// `alpha^n` (sign `+`) or `beta^n` (sign `-`) as `(L_n ± F_n sqrt5) / 2`.
    pub fn golden_power(&mut self, n: i64, sign: Sign) -> Result<QuadExt<Rational>> {
        let half = Rational::frac(1, 2);
        let l = self.lucas_q(n)? * &half;
        let f = self.fib_q(n)? * &half * sign.rational();
        Ok(QuadExt::new(l, f, Rational::from(5)))
    }
}

fn store(table: &mut Vec<Option<Poly>>, idx: usize, p: Poly) {
    if table.len() <= idx {
        table.resize(idx + 1, None);
    }
    table[idx] = Some(p);
}

/// `alpha = (1 + sqrt5)/2` or `beta = (1 - sqrt5)/2`.
pub fn golden(sign: Sign) -> QuadExt<Rational> {
    QuadExt::new(
        Rational::frac(1, 2),
        Rational::frac(sign.as_i64(), 2),
        Rational::from(5),
    )
}

pub fn fibonacci(n: i64) -> Result<Integer> {
    SequenceCache::new().fibonacci(n)
}

pub fn lucas(n: i64) -> Result<Integer> {
    SequenceCache::new().lucas(n)
}

pub fn balancing_poly(n: i64) -> Result<Poly> {
    SequenceCache::new().balancing_poly(n)
}

pub fn lucas_balancing_poly(n: i64) -> Result<Poly> {
    SequenceCache::new().lucas_balancing_poly(n)
}

pub fn lambda_power(n: i64) -> Result<QuadExt<Poly>> {
    SequenceCache::new().lambda_power(n)
}

pub fn bernoulli_number(n: i64) -> Result<Rational> {
    SequenceCache::new().bernoulli_number(n)
}

pub fn euler_number(n: i64) -> Result<Integer> {
    SequenceCache::new().euler_number(n)
}

pub fn bernoulli_poly(n: i64) -> Result<Poly> {
    SequenceCache::new().bernoulli_poly(n)
}

pub fn euler_poly(n: i64) -> Result<Poly> {
    SequenceCache::new().euler_poly(n)
}

pub fn euler_at_zero(n: i64) -> Result<Rational> {
    SequenceCache::new().euler_at_zero(n)
}

pub fn golden_power(n: i64, sign: Sign) -> Result<QuadExt<Rational>> {
    SequenceCache::new().golden_power(n, sign)
}
