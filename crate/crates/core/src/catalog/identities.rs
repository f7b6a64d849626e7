//! Left and right sides of every catalog identity.
//!
//! Sums follow the convention `C(n, k) = 0` outside `0 <= k <= n`; a term
//! whose binomial vanishes is skipped before its other factors are touched,
//! so formally undefined factors such as `E_{-1}(0)` never get evaluated.

use super::{IdentitySpec, ParamDomain, ParamKind, Params, RingKind, Value};
use crate::error::Result;
use crate::exact::{binomial, QuadExt, Rational, Ring};
use crate::poly::{Poly, PolyQuad};
use crate::sequences::{balancing_discriminant, golden, minus_one_pow, SequenceCache, Sign};

type Cache = SequenceCache;

fn binq(n: i64, k: i64) -> Result<Rational> {
    binomial(n, k).map(Rational::from)
}

fn int(v: i64) -> Rational {
    Rational::from(v)
}

fn frac(p: i64, q: i64) -> Rational {
    Rational::frac(p, q)
}

/// `base^e` for any integer `e`.
fn rpow(base: &Rational, e: i64) -> Result<Rational> {
    base.powi(e)
}

fn five() -> Rational {
    int(5)
}

fn q5(r: Rational) -> QuadExt<Rational> {
    QuadExt::from_base(r, five())
}

/// `(sqrt5 * c)^e` in `Q(sqrt5)`.
fn sqrt5_times_pow(c: &Rational, e: i64) -> Result<QuadExt<Rational>> {
    Ok(QuadExt::root_pow(&five(), e)?.scale(&rpow(c, e)?))
}

fn d5() -> Poly {
    Poly::constant(five())
}

fn lift5(u: &QuadExt<Rational>) -> PolyQuad {
    u.map(d5(), |c| Poly::constant(c.clone()))
}

fn pq5(p: Poly) -> PolyQuad {
    QuadExt::from_base(p, d5())
}

fn pq_bal(p: Poly) -> PolyQuad {
    QuadExt::from_base(p, balancing_discriminant())
}

fn sign_of(p: &Params) -> Result<Sign> {
    let v = p.get(ParamKind::Sign)?;
    Ok(Sign::from_i64(v).expect("validated sign"))
}

// ---------------------------------------------------------------------------
// Classical Lucas-Euler and Fibonacci-Bernoulli identities

/// `sum_k C(n,2k) coeff^k L_{n-2k} E_{2k}`, the left side of Byrd's identity
/// for `coeff = 5/4`.
pub fn byrd_sum(c: &mut Cache, n: i64, coeff: &Rational) -> Result<Rational> {
    let mut acc = Rational::zero();
    for k in 0..=n / 2 {
        let e = c.euler_q(2 * k)?;
        acc += &(binq(n, 2 * k)? * rpow(coeff, k)? * c.lucas_q(n - 2 * k)? * e);
    }
    Ok(acc)
}

fn byrd_lhs(c: &mut Cache, p: &Params) -> Result<Value> {
    Ok(Value::Rational(byrd_sum(c, p.n()?, &frac(5, 4))?))
}

fn byrd_rhs(_: &mut Cache, p: &Params) -> Result<Value> {
    Ok(Value::Rational(rpow(&int(2), 1 - p.n()?)?))
}

fn byrd_lhs_four_fifths(c: &mut Cache, p: &Params) -> Result<Value> {
    Ok(Value::Rational(byrd_sum(c, p.n()?, &frac(4, 5))?))
}

fn wang_lhs(c: &mut Cache, p: &Params) -> Result<Value> {
    let (n, j) = (p.n()?, p.j()?);
    let fj = c.fib_q(j)?;
    let mut acc = Rational::zero();
    for k in 0..=n / 2 {
        acc += &(binq(n, 2 * k)?
            * rpow(&frac(5, 4), k)?
            * rpow(&fj, 2 * k)?
            * c.lucas_q(j * (n - 2 * k))?
            * c.euler_q(2 * k)?);
    }
    Ok(Value::Rational(acc))
}

fn wang_rhs(c: &mut Cache, p: &Params) -> Result<Value> {
    let (n, j) = (p.n()?, p.j()?);
    Ok(Value::Rational(
        rpow(&int(2), 1 - n)? * rpow(&c.lucas_q(j)?, n)?,
    ))
}

fn castellanos_lhs(c: &mut Cache, p: &Params) -> Result<Value> {
    let (n, j) = (p.n()?, p.j()?);
    let lj = c.lucas_q(j)?;
    let mut acc = Rational::zero();
    for k in 0..=n {
        acc += &(binq(2 * n, 2 * k)?
            * rpow(&int(2), -2 * k - 1)?
            * c.lucas_q(2 * (n - k) * j)?
            * rpow(&lj, 2 * k)?
            * c.euler_q(2 * k)?);
    }
    Ok(Value::Rational(acc))
}

fn castellanos_rhs(c: &mut Cache, p: &Params) -> Result<Value> {
    let (n, j) = (p.n()?, p.j()?);
    Ok(Value::Rational(
        rpow(&frac(5, 4), n)? * rpow(&c.fib_q(j)?, 2 * n)?,
    ))
}

fn zhangma_beta_lhs(c: &mut Cache, p: &Params) -> Result<Value> {
    let n = p.n()?;
    let mut acc = q5(Rational::zero());
    for k in 0..=n {
        let coef = binq(n, k)? * c.fib_q(k)? * c.bernoulli_number(n - k)?;
        acc = acc.add(&QuadExt::root_pow(&five(), n - k)?.scale(&coef));
    }
    Ok(Value::Quad(acc))
}

fn zhangma_beta_rhs(_: &mut Cache, p: &Params) -> Result<Value> {
    let n = p.n()?;
    Ok(Value::Quad(golden(Sign::Minus).powi(n - 1)?.scale(&int(n))))
}

fn zhangma_lucas_lhs(c: &mut Cache, p: &Params) -> Result<Value> {
    let n = p.n()?;
    let mut acc = Rational::zero();
    for k in 0..=n / 2 {
        acc += &(binq(n, 2 * k)?
            * rpow(&five(), k)?
            * c.fib_q(n - 2 * k)?
            * c.bernoulli_number(2 * k)?);
    }
    Ok(Value::Rational(acc))
}

fn zhangma_lucas_rhs(c: &mut Cache, p: &Params) -> Result<Value> {
    let n = p.n()?;
    Ok(Value::Rational(int(n) * c.lucas_q(n - 1)? / int(2)))
}

fn frogoy1_lhs(c: &mut Cache, p: &Params) -> Result<Value> {
    let (n, j) = (p.n()?, p.j()?);
    let fj = c.fib_q(j)?;
    let mut acc = q5(Rational::zero());
    for k in 0..=n {
        let coef = binq(n, k)? * c.fib_q(j * k)? * c.bernoulli_number(n - k)?;
        acc = acc.add(&sqrt5_times_pow(&fj, n - k)?.scale(&coef));
    }
    Ok(Value::Quad(acc))
}

fn frogoy1_rhs(c: &mut Cache, p: &Params) -> Result<Value> {
    let (n, j) = (p.n()?, p.j()?);
    let beta_pow = c.golden_power(j * (n - 1), Sign::Minus)?;
    Ok(Value::Quad(beta_pow.scale(&(int(n) * c.fib_q(j)?))))
}

fn frogoy2_lhs(c: &mut Cache, p: &Params) -> Result<Value> {
    let (n, j) = (p.n()?, p.j()?);
    let f2j = c.fib_q(2 * j)?;
    let mut acc = Rational::zero();
    for k in 0..=n / 2 {
        let w = rpow(&int(20), k)? - rpow(&int(5), k)?;
        acc += &(binq(n, 2 * k)?
            * w
            * rpow(&f2j, 2 * k)?
            * c.lucas_q(2 * j * (n - 2 * k))?
            * c.bernoulli_number(2 * k)?);
    }
    Ok(Value::Rational(acc))
}

fn frogoy2_rhs(c: &mut Cache, p: &Params) -> Result<Value> {
    let (n, j) = (p.n()?, p.j()?);
    Ok(Value::Rational(
        frac(5 * n, 2) * c.fib_q(2 * j)? * c.fib_q(2 * j * (n - 1))?,
    ))
}

fn kelisky_lhs(c: &mut Cache, p: &Params) -> Result<Value> {
    let (n, j) = (p.n()?, p.j()?);
    let fj = c.fib_q(j)?;
    let mut acc = Rational::zero();
    for k in 0..=n / 2 {
        acc += &(binq(n, 2 * k)?
            * rpow(&five(), k)?
            * rpow(&fj, 2 * k)?
            * c.fib_q(j * (n - 2 * k))?
            * c.bernoulli_number(2 * k)?);
    }
    Ok(Value::Rational(acc))
}

fn kelisky_rhs(c: &mut Cache, p: &Params) -> Result<Value> {
    let (n, j) = (p.n()?, p.j()?);
    Ok(Value::Rational(
        frac(n, 2) * c.fib_q(j)? * c.lucas_q(j * (n - 1))?,
    ))
}

// ---------------------------------------------------------------------------
// Euler and balancing polynomials

/// `144 x^2 (9x^2 - 1)`.
fn thm1_base() -> Poly {
    Poly::from_ints(&[0, 0, -144, 0, 1296])
}

/// `36 x^2 (9x^2 - 1)`.
fn thm2_base() -> Poly {
    Poly::from_ints(&[0, 0, -36, 0, 324])
}

fn thm1_lhs(c: &mut Cache, p: &Params) -> Result<Value> {
    let n = p.n()?;
    let base = thm1_base();
    let mut acc = Poly::zero();
    for k in 1..=n / 2 {
        let b = binq(n - 1, 2 * k - 1)?;
        if b.is_zero() {
            continue;
        }
        let coef = b * c.euler_at_zero(2 * k - 1)?;
        let term = &c.lucas_balancing_poly(2 * (n - 2 * k))? * &base.pow(k as u64);
        acc = &acc + &term.scale(&coef);
    }
    Ok(Value::Poly(acc))
}

fn thm1_rhs(c: &mut Cache, p: &Params) -> Result<Value> {
    let n = p.n()?;
    // 12x(1 - 9x^2)
    let factor = Poly::from_ints(&[0, 12, 0, -108]);
    Ok(Value::Poly(&factor * &c.balancing_poly(2 * n - 2)?))
}

/// `sum_k C(n-1, 2k-1) 5^{k-1} F_{2j}^{2k-1} L_{2j(n-2k)} E_{2k-1}(0)`, from `k = 0`.
fn cor2_sum(c: &mut Cache, n: i64, j: i64) -> Result<Rational> {
    let f2j = c.fib_q(2 * j)?;
    let mut acc = Rational::zero();
    for k in 0..=n / 2 {
        let b = binq(n - 1, 2 * k - 1)?;
        if b.is_zero() {
            continue;
        }
        acc += &(b
            * rpow(&five(), k - 1)?
            * rpow(&f2j, 2 * k - 1)?
            * c.lucas_q(2 * j * (n - 2 * k))?
            * c.euler_at_zero(2 * k - 1)?);
    }
    Ok(acc)
}

fn cor2_lhs(c: &mut Cache, p: &Params) -> Result<Value> {
    Ok(Value::Rational(cor2_sum(c, p.n()?, p.j()?)?))
}

fn cor2_rhs(c: &mut Cache, p: &Params) -> Result<Value> {
    let (n, j) = (p.n()?, p.j()?);
    Ok(Value::Rational(-c.fib_q(2 * j * (n - 1))?))
}

fn cor2_bernoulli_lhs(c: &mut Cache, p: &Params) -> Result<Value> {
    let (n, j) = (p.n()?, p.j()?);
    let f2j = c.fib_q(2 * j)?;
    let mut acc = Rational::zero();
    // The k = 0 term carries the factor 20^0 - 5^0 = 0.
    for k in 1..=n / 2 {
        let b = binq(n - 1, 2 * k - 1)?;
        if b.is_zero() {
            continue;
        }
        let w = (rpow(&int(20), k)? - rpow(&int(5), k)?) / int(k);
        acc += &(b
            * w
            * rpow(&f2j, 2 * k - 1)?
            * c.lucas_q(2 * j * (n - 2 * k))?
            * c.bernoulli_number(2 * k)?);
    }
    Ok(Value::Rational(acc))
}

fn cor2_bernoulli_rhs(c: &mut Cache, p: &Params) -> Result<Value> {
    let (n, j) = (p.n()?, p.j()?);
    Ok(Value::Rational(int(5) * c.fib_q(2 * j * (n - 1))?))
}

/// `sum_k C(n,2k) C_{2(n-2k)}(x) (36x^2(9x^2-1))^k E_{2k}`.
pub fn thm2_lhs(c: &mut Cache, p: &Params) -> Result<Value> {
    let n = p.n()?;
    let base = thm2_base();
    let mut acc = Poly::zero();
    for k in 0..=n / 2 {
        let coef = binq(n, 2 * k)? * c.euler_q(2 * k)?;
        let term = &c.lucas_balancing_poly(2 * (n - 2 * k))? * &base.pow(k as u64);
        acc = &acc + &term.scale(&coef);
    }
    Ok(Value::Poly(acc))
}

/// `(18x^2 + c0)^n`; the identity uses `c0 = -1`.
pub fn thm2_rhs_with(n: i64, c0: i64) -> Poly {
    Poly::from_ints(&[c0, 0, 18]).pow(n as u64)
}

fn thm2_rhs(_: &mut Cache, p: &Params) -> Result<Value> {
    Ok(Value::Poly(thm2_rhs_with(p.n()?, -1)))
}

fn thm2_rhs_sign_flipped(_: &mut Cache, p: &Params) -> Result<Value> {
    Ok(Value::Poly(thm2_rhs_with(p.n()?, 1)))
}

fn cor5_sum(c: &mut Cache, n: i64, j: i64) -> Result<Rational> {
    let f2j = c.fib_q(2 * j)?;
    let mut acc = Rational::zero();
    for k in 0..=n / 2 {
        acc += &(binq(n, 2 * k)?
            * rpow(&frac(5, 4), k)?
            * rpow(&f2j, 2 * k)?
            * c.lucas_q(2 * j * (n - 2 * k))?
            * c.euler_q(2 * k)?);
    }
    Ok(acc)
}

fn cor5_lhs(c: &mut Cache, p: &Params) -> Result<Value> {
    Ok(Value::Rational(cor5_sum(c, p.n()?, p.j()?)?))
}

fn cor5_rhs(c: &mut Cache, p: &Params) -> Result<Value> {
    let (n, j) = (p.n()?, p.j()?);
    Ok(Value::Rational(
        rpow(&int(2), 1 - n)? * rpow(&c.lucas_q(2 * j)?, n)?,
    ))
}

fn lucas_euler_progression(c: &mut Cache, n: i64, coeff: &Rational, step: i64) -> Result<Rational> {
    let mut acc = Rational::zero();
    for k in 0..=n / 2 {
        acc += &(binq(n, 2 * k)?
            * rpow(coeff, k)?
            * c.lucas_q(step * (n - 2 * k))?
            * c.euler_q(2 * k)?);
    }
    Ok(acc)
}

fn cor5_j1_lhs(c: &mut Cache, p: &Params) -> Result<Value> {
    Ok(Value::Rational(lucas_euler_progression(
        c,
        p.n()?,
        &frac(5, 4),
        2,
    )?))
}

fn cor5_j1_rhs(_: &mut Cache, p: &Params) -> Result<Value> {
    Ok(Value::Rational(int(2) * rpow(&frac(3, 2), p.n()?)?))
}

fn cor5_j2_lhs(c: &mut Cache, p: &Params) -> Result<Value> {
    Ok(Value::Rational(lucas_euler_progression(
        c,
        p.n()?,
        &frac(45, 4),
        4,
    )?))
}

fn cor5_j2_rhs(_: &mut Cache, p: &Params) -> Result<Value> {
    Ok(Value::Rational(int(2) * rpow(&frac(7, 2), p.n()?)?))
}

fn thm3_lhs(c: &mut Cache, p: &Params) -> Result<Value> {
    match thm2_lhs(c, p)? {
        Value::Poly(poly) => Ok(Value::PolyQuad(pq_bal(poly))),
        other => Ok(other),
    }
}

fn thm3_rhs(c: &mut Cache, p: &Params) -> Result<Value> {
    let n = p.n()?;
    let d = balancing_discriminant();
    let root = QuadExt::root(d.clone());
    // 6x sqrt(9x^2 - 1)
    let t = QuadExt::new(Poly::zero(), Poly::from_ints(&[0, 6]), d.clone());
    let mut acc = pq_bal(Poly::zero());
    for k in 0..=n {
        let left = pq_bal(c.lucas_balancing_poly(2 * k)?)
            .sub(&root.mul(&pq_bal(c.balancing_poly(2 * k)?)));
        let term = left.mul(&t.pow((n - k) as u64)).scale(&binq(n, k)?);
        acc = acc.add(&term);
    }
    Ok(Value::PolyQuad(acc))
}

fn thm4_lhs(c: &mut Cache, p: &Params) -> Result<Value> {
    let n = p.n()?;
    let d = balancing_discriminant();
    // 12x sqrt(9x^2 - 1)
    let t = QuadExt::new(Poly::zero(), Poly::from_ints(&[0, 12]), d);
    let mut acc = pq_bal(Poly::zero());
    for k in 0..=n {
        let poly = &c.lucas_balancing_poly(2 * (n - k))? * &c.euler_poly(k)?;
        acc = acc.add(&t.pow(k as u64).scale_base(&poly).scale(&binq(n, k)?));
    }
    Ok(Value::PolyQuad(acc))
}

fn thm4_rhs(_: &mut Cache, p: &Params) -> Result<Value> {
    let base = QuadExt::new(
        Poly::from_ints(&[-1, 0, 18]),
        Poly::from_ints(&[0, -6, 12]),
        balancing_discriminant(),
    );
    Ok(Value::PolyQuad(base.pow(p.n()? as u64)))
}

// ---------------------------------------------------------------------------
// Lucas-Euler and Fibonacci-Bernoulli polynomial identities over Q[x][sqrt5]

/// `sum_k C(n,k) seq(jk) (± sqrt5 F_j)^{n-k} P_{n-k}(x)`, where `seq` is
/// Fibonacci or Lucas and `P` Bernoulli or Euler polynomials.
fn progression_poly_sum(
    c: &mut Cache,
    n: i64,
    j: i64,
    sign: Sign,
    lucas: bool,
) -> Result<PolyQuad> {
    let fj = c.fib_q(j)? * sign.rational();
    let mut acc = pq5(Poly::zero());
    for k in 0..=n {
        let (s, poly) = if lucas {
            (c.lucas_q(j * k)?, c.euler_poly(n - k)?)
        } else {
            (c.fib_q(j * k)?, c.bernoulli_poly(n - k)?)
        };
        let weight = lift5(&sqrt5_times_pow(&fj, n - k)?);
        acc = acc.add(&weight.scale_base(&poly).scale(&(binq(n, k)? * s)));
    }
    Ok(acc)
}

/// `(sqrt5 x + beta) F_j + F_{j-1}` (plus) or `(alpha - sqrt5 x) F_j + F_{j-1}` (minus).
fn shifted_golden_linear(c: &mut Cache, j: i64, sign: Sign) -> Result<PolyQuad> {
    let fj = c.fib_q(j)?;
    let a = Poly::constant(&fj * &frac(1, 2) + c.fib_q(j - 1)?);
    let b = match sign {
        Sign::Plus => Poly::from_coeffs(vec![frac(-1, 2), int(1)]),
        Sign::Minus => Poly::from_coeffs(vec![frac(1, 2), int(-1)]),
    };
    Ok(QuadExt::new(a, b.scale(&fj), d5()))
}

fn fbpol_lhs(c: &mut Cache, p: &Params, sign: Sign) -> Result<Value> {
    Ok(Value::PolyQuad(progression_poly_sum(
        c,
        p.n()?,
        p.j()?,
        sign,
        false,
    )?))
}

fn fbpol_rhs(c: &mut Cache, p: &Params, sign: Sign) -> Result<Value> {
    let (n, j) = (p.n()?, p.j()?);
    let base = shifted_golden_linear(c, j, sign)?;
    Ok(Value::PolyQuad(
        base.pow((n - 1) as u64).scale(&(int(n) * c.fib_q(j)?)),
    ))
}

fn fbpol_plus_lhs(c: &mut Cache, p: &Params) -> Result<Value> {
    fbpol_lhs(c, p, Sign::Plus)
}

fn fbpol_plus_rhs(c: &mut Cache, p: &Params) -> Result<Value> {
    fbpol_rhs(c, p, Sign::Plus)
}

fn fbpol_minus_lhs(c: &mut Cache, p: &Params) -> Result<Value> {
    fbpol_lhs(c, p, Sign::Minus)
}

fn fbpol_minus_rhs(c: &mut Cache, p: &Params) -> Result<Value> {
    fbpol_rhs(c, p, Sign::Minus)
}

fn thm5_lhs(c: &mut Cache, p: &Params, sign: Sign) -> Result<Value> {
    Ok(Value::PolyQuad(progression_poly_sum(
        c,
        p.n()?,
        p.j()?,
        sign,
        true,
    )?))
}

fn thm5_rhs(c: &mut Cache, p: &Params, sign: Sign) -> Result<Value> {
    let (n, j) = (p.n()?, p.j()?);
    let base = shifted_golden_linear(c, j, sign)?;
    Ok(Value::PolyQuad(base.pow(n as u64).scale(&int(2))))
}

fn thm5_plus_lhs(c: &mut Cache, p: &Params) -> Result<Value> {
    thm5_lhs(c, p, Sign::Plus)
}

fn thm5_plus_rhs(c: &mut Cache, p: &Params) -> Result<Value> {
    thm5_rhs(c, p, Sign::Plus)
}

fn thm5_minus_lhs(c: &mut Cache, p: &Params) -> Result<Value> {
    thm5_lhs(c, p, Sign::Minus)
}

fn thm5_minus_rhs(c: &mut Cache, p: &Params) -> Result<Value> {
    thm5_rhs(c, p, Sign::Minus)
}

fn main53_lhs(c: &mut Cache, p: &Params) -> Result<Value> {
    thm5_lhs(c, p, sign_of(p)?)
}

fn main53_rhs(c: &mut Cache, p: &Params) -> Result<Value> {
    let (n, j, sign) = (p.n()?, p.j()?, sign_of(p)?);
    // L_j ± sqrt5 F_j (2x - 1)
    let b = Poly::from_ints(&[-1, 2]).scale(&(c.fib_q(j)? * sign.rational()));
    let base = QuadExt::new(Poly::constant(c.lucas_q(j)?), b, d5());
    Ok(Value::PolyQuad(
        base.pow(n as u64).scale(&rpow(&int(2), 1 - n)?),
    ))
}

/// `sum_k C(n,k) (± sqrt5 F_j)^{n-k} L_{jk} w_k`, with the per-term weight
/// `w_k` supplied by the caller.
fn lucas_euler_quad_sum(
    c: &mut Cache,
    n: i64,
    j: i64,
    sign: Sign,
    mut weight: impl FnMut(&mut Cache, i64) -> Result<QuadExt<Rational>>,
) -> Result<QuadExt<Rational>> {
    let fj = c.fib_q(j)? * sign.rational();
    let mut acc = q5(Rational::zero());
    for k in 0..=n {
        let w = weight(c, k)?;
        let s = binq(n, k)? * c.lucas_q(j * k)?;
        acc = acc.add(&sqrt5_times_pow(&fj, n - k)?.mul(&w).scale(&s));
    }
    Ok(acc)
}

fn main53_half_lhs(c: &mut Cache, p: &Params) -> Result<Value> {
    let (n, j, sign) = (p.n()?, p.j()?, sign_of(p)?);
    let sum = lucas_euler_quad_sum(c, n, j, sign, |c, k| {
        Ok(q5(rpow(&int(2), k)? * c.euler_q(n - k)?))
    })?;
    Ok(Value::Quad(sum))
}

fn main53_half_rhs(c: &mut Cache, p: &Params) -> Result<Value> {
    let (n, j) = (p.n()?, p.j()?);
    Ok(Value::Quad(q5(int(2) * rpow(&c.lucas_q(j)?, n)?)))
}

fn curious_lhs(c: &mut Cache, p: &Params, at: Sign) -> Result<Value> {
    let (n, j, sign) = (p.n()?, p.j()?, sign_of(p)?);
    let pt = golden(at);
    let sum = lucas_euler_quad_sum(c, n, j, sign, |c, k| {
        Ok(c.euler_poly(n - k)?.eval_quadext(&pt))
    })?;
    Ok(Value::Quad(sum))
}

/// `2 (±1)^n L_{j±1}^n` at alpha; at beta the signs flip.
fn curious_rhs(c: &mut Cache, p: &Params, at: Sign) -> Result<Value> {
    let (n, j, sign) = (p.n()?, p.j()?, sign_of(p)?);
    let eff = if at == Sign::Plus { sign } else { sign.flip() };
    let l = c.lucas_q(j + eff.as_i64())?;
    let sign_pow = if eff == Sign::Plus {
        Rational::one()
    } else {
        minus_one_pow(n)
    };
    Ok(Value::Quad(q5(int(2) * sign_pow * rpow(&l, n)?)))
}

fn curious_alpha_lhs(c: &mut Cache, p: &Params) -> Result<Value> {
    curious_lhs(c, p, Sign::Plus)
}

fn curious_alpha_rhs(c: &mut Cache, p: &Params) -> Result<Value> {
    curious_rhs(c, p, Sign::Plus)
}

fn curious_beta_lhs(c: &mut Cache, p: &Params) -> Result<Value> {
    curious_lhs(c, p, Sign::Minus)
}

fn curious_beta_rhs(c: &mut Cache, p: &Params) -> Result<Value> {
    curious_rhs(c, p, Sign::Minus)
}

/// `sum_k C(n,k) (sqrt5 F_j)^{n-k} (q^{-(n-k)} - 1) L_{jk} E_{n-k}(0)`.
fn cor7_sum(c: &mut Cache, n: i64, j: i64, q: i64) -> Result<QuadExt<Rational>> {
    lucas_euler_quad_sum(c, n, j, Sign::Plus, |c, k| {
        let w = rpow(&int(q), -(n - k))? - Rational::one();
        Ok(q5(w * c.euler_at_zero(n - k)?))
    })
}

fn cor7_lhs(c: &mut Cache, p: &Params) -> Result<Value> {
    Ok(Value::Quad(cor7_sum(
        c,
        p.n()?,
        p.j()?,
        p.get(ParamKind::Q)?,
    )?))
}

fn cor7_rhs(c: &mut Cache, p: &Params) -> Result<Value> {
    let (n, j, q) = (p.n()?, p.j()?, p.get(ParamKind::Q)?);
    let alpha_j = c.golden_power(j, Sign::Plus)?;
    let beta_j = c.golden_power(j, Sign::Minus)?;
    let mut acc = q5(Rational::zero());
    for r in 1..q {
        let base = alpha_j.scale(&int(r)).add(&beta_j.scale(&int(q - r)));
        acc = acc.add(&base.pow(n as u64).scale(&minus_one_pow(r)));
    }
    Ok(Value::Quad(acc.scale(&(int(2) * rpow(&int(q), -n)?))))
}

fn cor7_q3_lhs(c: &mut Cache, p: &Params) -> Result<Value> {
    Ok(Value::Quad(cor7_sum(c, p.n()?, 1, 3)?))
}

fn cor7_q3_rhs(c: &mut Cache, p: &Params) -> Result<Value> {
    let n = p.n()?;
    let coef = int(2) * rpow(&int(3), -n)? * c.fib_q(2 * n)?;
    Ok(Value::Quad(QuadExt::root(five()).scale(&coef)))
}

fn cor7_q5_lhs(c: &mut Cache, p: &Params) -> Result<Value> {
    Ok(Value::Quad(cor7_sum(c, p.n()?, 1, 5)?))
}

fn cor7_q5_rhs(c: &mut Cache, p: &Params) -> Result<Value> {
    let n = p.n()?;
    let (root_power, diff) = if n % 2 == 0 {
        (1 - n, c.fib_q(2 * n)? - c.fib_q(n)?)
    } else {
        (-n, c.lucas_q(2 * n)? - c.lucas_q(n)?)
    };
    Ok(Value::Quad(
        QuadExt::root_pow(&five(), root_power)?.scale(&(int(2) * diff)),
    ))
}

fn euler_mult_lhs(c: &mut Cache, p: &Params) -> Result<Value> {
    let (n, q) = (p.n()?, p.get(ParamKind::Q)?);
    let e = c.euler_poly(n)?;
    let mut acc = Poly::zero();
    for r in 0..q {
        let shifted = e.compose_linear(&Rational::one(), &frac(r, q));
        acc = &acc + &shifted.scale(&minus_one_pow(r));
    }
    Ok(Value::Poly(acc.scale(&rpow(&int(q), n)?)))
}

fn euler_mult_rhs(c: &mut Cache, p: &Params) -> Result<Value> {
    let (n, q) = (p.n()?, p.get(ParamKind::Q)?);
    Ok(Value::Poly(
        c.euler_poly(n)?.compose_linear(&int(q), &Rational::zero()),
    ))
}

// ---------------------------------------------------------------------------
// Evaluation links of the balancing polynomials

fn link1_lhs(c: &mut Cache, p: &Params) -> Result<Value> {
    let (n, s, fam) = (p.n()?, p.get(ParamKind::S)?, p.get(ParamKind::Family)?);
    let poly = if fam == 0 {
        c.balancing_poly(n)?
    } else {
        c.lucas_balancing_poly(n)?
    };
    let point = c.lucas_q(s)? / int(6);
    if s % 2 == 0 {
        Ok(Value::Rational(poly.eval(&point)))
    } else {
        let pt = QuadExt::new(Rational::zero(), point, int(-1));
        Ok(Value::Quad(poly.eval_quadext(&pt)))
    }
}

fn link1_rhs(c: &mut Cache, p: &Params) -> Result<Value> {
    let (n, s, fam) = (p.n()?, p.get(ParamKind::S)?, p.get(ParamKind::Family)?);
    let (omega_exp, value) = if fam == 0 {
        (n - 1, c.fib_q(s * n)? / c.fib_q(s)?)
    } else {
        (n, c.lucas_q(s * n)? / int(2))
    };
    if s % 2 == 0 {
        Ok(Value::Rational(value))
    } else {
        let i = QuadExt::root(int(-1));
        Ok(Value::Quad(i.powi(omega_exp)?.scale(&value)))
    }
}

// ---------------------------------------------------------------------------
// Registry

const N0: ParamDomain = ParamDomain {
    kind: ParamKind::N,
    min: 0,
};
const N1: ParamDomain = ParamDomain {
    kind: ParamKind::N,
    min: 1,
};
const J1: ParamDomain = ParamDomain {
    kind: ParamKind::J,
    min: 1,
};
const S1: ParamDomain = ParamDomain {
    kind: ParamKind::S,
    min: 1,
};
const Q3: ParamDomain = ParamDomain {
    kind: ParamKind::Q,
    min: 3,
};
const SIGN: ParamDomain = ParamDomain {
    kind: ParamKind::Sign,
    min: -1,
};
const FAMILY: ParamDomain = ParamDomain {
    kind: ParamKind::Family,
    min: 0,
};

const RAT: &[RingKind] = &[RingKind::Rational];
const QUAD5: &[RingKind] = &[RingKind::Quad5];
const POLY: &[RingKind] = &[RingKind::Poly];
const PQ_BAL: &[RingKind] = &[RingKind::PolyQuadBalancing];
const PQ5: &[RingKind] = &[RingKind::PolyQuad5];

macro_rules! spec {
    ($id:literal, $stmt:literal, $rings:expr, [$($p:expr),*], $x:expr, $lhs:expr, $rhs:expr) => {
        IdentitySpec {
            id: $id,
            statement: $stmt,
            rings: $rings,
            params: &[$($p),*],
            symbolic_x: $x,
            lhs: $lhs,
            rhs: $rhs,
        }
    };
}

static CATALOG: &[IdentitySpec] = &[
    spec!("byrd", "sum_k C(n,2k) (5/4)^k L_{n-2k} E_{2k} = 2^{1-n}",
        RAT, [N0], false, byrd_lhs, byrd_rhs),
    spec!("wang", "sum_k C(n,2k) (5/4)^k F_j^{2k} L_{j(n-2k)} E_{2k} = 2^{1-n} L_j^n",
        RAT, [N0, J1], false, wang_lhs, wang_rhs),
    spec!("castellanos", "sum_{k=0}^{n} C(2n,2k) 2^{-2k-1} L_{2(n-k)j} L_j^{2k} E_{2k} = (5/4)^n F_j^{2n}",
        RAT, [N0, J1], false, castellanos_lhs, castellanos_rhs),
    spec!("zhangma_beta", "sum_{k=0}^{n} C(n,k) 5^{(n-k)/2} F_k B_{n-k} = n beta^{n-1}",
        QUAD5, [N1], false, zhangma_beta_lhs, zhangma_beta_rhs),
    spec!("zhangma_lucas", "sum_k C(n,2k) 5^k F_{n-2k} B_{2k} = n L_{n-1} / 2",
        RAT, [N1], false, zhangma_lucas_lhs, zhangma_lucas_rhs),
    spec!("frogoy1", "sum_{k=0}^{n} C(n,k) (sqrt5 F_j)^{n-k} F_{jk} B_{n-k} = n F_j beta^{j(n-1)}",
        QUAD5, [N1, J1], false, frogoy1_lhs, frogoy1_rhs),
    spec!("frogoy2", "sum_k C(n,2k) (20^k - 5^k) F_{2j}^{2k} L_{2j(n-2k)} B_{2k} = (5n/2) F_{2j} F_{2j(n-1)}",
        RAT, [N1, J1], false, frogoy2_lhs, frogoy2_rhs),
    spec!("kelisky", "sum_k C(n,2k) 5^k F_j^{2k} F_{j(n-2k)} B_{2k} = (n/2) F_j L_{j(n-1)}",
        RAT, [N1, J1], false, kelisky_lhs, kelisky_rhs),
    spec!("thm1", "sum_{k=1}^{n/2} C(n-1,2k-1) C_{2(n-2k)}(x) (144x^2(9x^2-1))^k E_{2k-1}(0) = 12x(1-9x^2) B*_{2n-2}(x)",
        POLY, [N1], true, thm1_lhs, thm1_rhs),
    spec!("cor2", "sum_{k=0}^{n/2} C(n-1,2k-1) 5^{k-1} F_{2j}^{2k-1} L_{2j(n-2k)} E_{2k-1}(0) = -F_{2j(n-1)}",
        RAT, [N1, J1], false, cor2_lhs, cor2_rhs),
    spec!("cor2_bernoulli", "sum_{k=1}^{n/2} C(n-1,2k-1) ((20^k - 5^k)/k) F_{2j}^{2k-1} L_{2j(n-2k)} B_{2k} = 5 F_{2j(n-1)}",
        RAT, [N1, J1], false, cor2_bernoulli_lhs, cor2_bernoulli_rhs),
    spec!("thm2", "sum_k C(n,2k) C_{2(n-2k)}(x) (36x^2(9x^2-1))^k E_{2k} = (18x^2-1)^n",
        POLY, [N0], true, thm2_lhs, thm2_rhs),
    spec!("cor5", "sum_k C(n,2k) (5/4)^k F_{2j}^{2k} L_{2j(n-2k)} E_{2k} = 2^{1-n} L_{2j}^n",
        RAT, [N0, J1], false, cor5_lhs, cor5_rhs),
    spec!("cor5_j1", "sum_k C(n,2k) (5/4)^k L_{2(n-2k)} E_{2k} = 2 (3/2)^n",
        RAT, [N0], false, cor5_j1_lhs, cor5_j1_rhs),
    spec!("cor5_j2", "sum_k C(n,2k) (45/4)^k L_{4(n-2k)} E_{2k} = 2 (7/2)^n",
        RAT, [N0], false, cor5_j2_lhs, cor5_j2_rhs),
    spec!("thm3", "sum_k C(n,2k) C_{2(n-2k)}(x) (36x^2(9x^2-1))^k E_{2k} = sum_{k=0}^{n} C(n,k) (C_{2k}(x) - sqrt(9x^2-1) B*_{2k}(x)) (6x sqrt(9x^2-1))^{n-k}",
        PQ_BAL, [N0], true, thm3_lhs, thm3_rhs),
    spec!("thm4", "sum_{k=0}^{n} C(n,k) C_{2(n-k)}(x) (12x sqrt(9x^2-1))^k E_k(x) = (18x^2 - 1 + 6x(2x-1) sqrt(9x^2-1))^n",
        PQ_BAL, [N0], true, thm4_lhs, thm4_rhs),
    spec!("fbpol_plus", "sum_{k=0}^{n} C(n,k) F_{jk} (sqrt5 F_j)^{n-k} B_{n-k}(x) = n F_j ((sqrt5 x + beta) F_j + F_{j-1})^{n-1}",
        PQ5, [N1, J1], true, fbpol_plus_lhs, fbpol_plus_rhs),
    spec!("fbpol_minus", "sum_{k=0}^{n} C(n,k) F_{jk} (-sqrt5 F_j)^{n-k} B_{n-k}(x) = n F_j ((alpha - sqrt5 x) F_j + F_{j-1})^{n-1}",
        PQ5, [N1, J1], true, fbpol_minus_lhs, fbpol_minus_rhs),
    spec!("thm5_plus", "sum_{k=0}^{n} C(n,k) L_{jk} (sqrt5 F_j)^{n-k} E_{n-k}(x) = 2 ((sqrt5 x + beta) F_j + F_{j-1})^n",
        PQ5, [N0, J1], true, thm5_plus_lhs, thm5_plus_rhs),
    spec!("thm5_minus", "sum_{k=0}^{n} C(n,k) L_{jk} (-sqrt5 F_j)^{n-k} E_{n-k}(x) = 2 ((alpha - sqrt5 x) F_j + F_{j-1})^n",
        PQ5, [N0, J1], true, thm5_minus_lhs, thm5_minus_rhs),
    spec!("main53", "sum_{k=0}^{n} C(n,k) L_{jk} (+-sqrt5 F_j)^{n-k} E_{n-k}(x) = 2^{1-n} (L_j +- sqrt5 F_j (2x-1))^n",
        PQ5, [N0, J1, SIGN], true, main53_lhs, main53_rhs),
    spec!("main53_half", "sum_{k=0}^{n} C(n,k) (+-sqrt5 F_j)^{n-k} 2^k L_{jk} E_{n-k} = 2 L_j^n",
        QUAD5, [N0, J1, SIGN], false, main53_half_lhs, main53_half_rhs),
    spec!("curious_alpha", "sum_{k=0}^{n} C(n,k) (+-sqrt5 F_j)^{n-k} L_{jk} E_{n-k}(alpha) = 2 (+-1)^n L_{j+-1}^n",
        QUAD5, [N0, J1, SIGN], false, curious_alpha_lhs, curious_alpha_rhs),
    spec!("curious_beta", "sum_{k=0}^{n} C(n,k) (+-sqrt5 F_j)^{n-k} L_{jk} E_{n-k}(beta) = 2 (-+1)^n L_{j-+1}^n",
        QUAD5, [N0, J1, SIGN], false, curious_beta_lhs, curious_beta_rhs),
    spec!("cor7", "sum_{k=0}^{n} C(n,k) (sqrt5 F_j)^{n-k} (q^{-(n-k)} - 1) L_{jk} E_{n-k}(0) = 2 q^{-n} sum_{r=1}^{q-1} (-1)^r (r alpha^j + (q-r) beta^j)^n",
        QUAD5, [N1, J1, Q3], false, cor7_lhs, cor7_rhs),
    spec!("cor7_q3", "sum_{k=0}^{n} C(n,k) L_k sqrt5^{n-k} (3^{-(n-k)} - 1) E_{n-k}(0) = 2 3^{-n} sqrt5 F_{2n}",
        QUAD5, [N1], false, cor7_q3_lhs, cor7_q3_rhs),
    spec!("cor7_q5", "sum_{k=0}^{n} C(n,k) L_k sqrt5^{n-k} (5^{-(n-k)} - 1) E_{n-k}(0) = 2 5^{(1-n)/2} (F_{2n} - F_n) for even n, 2 5^{-n/2} (L_{2n} - L_n) for odd n",
        QUAD5, [N1], false, cor7_q5_lhs, cor7_q5_rhs),
    spec!("euler_mult", "q^n sum_{r=0}^{q-1} (-1)^r E_n(x + r/q) = E_n(qx) for odd q",
        POLY, [N0, Q3], true, euler_mult_lhs, euler_mult_rhs),
    spec!("link1", "B*_n(w_s L_s/6) = w_s^{n-1} F_{sn}/F_s and C_n(w_s L_s/6) = w_s^n L_{sn}/2, w_s = 1 (s even), i (s odd)",
        &[RingKind::Rational, RingKind::QuadNeg1], [N0, S1, FAMILY], false, link1_lhs, link1_rhs),
];

static NEGATIVE_CONTROLS: &[IdentitySpec] = &[
    spec!(
        "thm2_rhs_sign_flip",
        "sum_k C(n,2k) C_{2(n-2k)}(x) (36x^2(9x^2-1))^k E_{2k} = (18x^2+1)^n  [deliberately wrong]",
        POLY,
        [N0],
        true,
        thm2_lhs,
        thm2_rhs_sign_flipped
    ),
    spec!(
        "byrd_coeff_4_5",
        "sum_k C(n,2k) (4/5)^k L_{n-2k} E_{2k} = 2^{1-n}  [deliberately wrong]",
        RAT,
        [N0],
        false,
        byrd_lhs_four_fifths,
        byrd_rhs
    ),
];

pub fn catalog() -> &'static [IdentitySpec] {
    CATALOG
}

/// Deliberately corrupted identities that a sound checker must reject.
pub fn negative_controls() -> &'static [IdentitySpec] {
    NEGATIVE_CONTROLS
}
