//! Closed-form builders for the generating functions `H`, `I`, `b1`, `b2`,
//! `c1`, `c2` and `L`, together with the same series assembled directly from
//! sequence values.

use std::fmt;
use std::str::FromStr;

use super::EgfSeries;
use crate::error::{Error, Result};
use crate::exact::{QuadExt, Rational, Ring};
use crate::poly::{Poly, PolyQuad};
use crate::sequences::{balancing_discriminant, SequenceCache};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GfName {
    /// `H(x, z) = z e^{xz} / (e^z - 1)`, Bernoulli polynomials.
    H,
    /// `I(x, z) = 2 e^{xz} / (e^z + 1)`, Euler polynomials.
    I,
    /// Odd-indexed balancing polynomials `B*_{2n+1}(x)`.
    B1,
    /// Even-indexed balancing polynomials `B*_{2n}(x)`.
    B2,
    /// Odd-indexed Lucas-balancing polynomials `C_{2n+1}(x)`.
    C1,
    /// Even-indexed Lucas-balancing polynomials `C_{2n}(x)`.
    C2,
    /// Lucas numbers in arithmetic progression, `L_{jn}`.
    L,
}

impl GfName {
    pub const ALL: [GfName; 7] = [
        GfName::H,
        GfName::I,
        GfName::B1,
        GfName::B2,
        GfName::C1,
        GfName::C2,
        GfName::L,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GfName::H => "H",
            GfName::I => "I",
            GfName::B1 => "b1",
            GfName::B2 => "b2",
            GfName::C1 => "c1",
            GfName::C2 => "c2",
            GfName::L => "L",
        }
    }
}

impl fmt::Display for GfName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GfName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GfName::ALL
            .into_iter()
            .find(|g| g.as_str() == s)
            .ok_or_else(|| Error::UnknownGeneratingFunction(s.to_string()))
    }
}

/// Parameters for [`build_gf`].
///
/// `x` is the first argument of `H` and `I` (the indeterminate by default, or
/// a constant polynomial for a sampled rational point). `scale` replaces `z`
/// by `scale * z` in `H` and `I`, and fixes their ring. `j` selects the
/// progression for `L`.
#[derive(Clone, Debug)]
pub struct GfParams {
    pub x: Poly,
    pub scale: PolyQuad,
    pub j: i64,
}

impl Default for GfParams {
    fn default() -> Self {
        Self {
            x: Poly::x(),
            scale: QuadExt::from_base(Poly::one(), balancing_discriminant()),
            j: 1,
        }
    }
}

impl GfParams {
    pub fn at(x: Poly, scale: PolyQuad) -> Self {
        Self { x, scale, j: 1 }
    }

    pub fn with_j(j: i64) -> Self {
        Self {
            j,
            ..Self::default()
        }
    }
}

/// `Q[x][sqrt(d)]` constant helper.
pub fn pq_const(c: Rational, d: &Poly) -> PolyQuad {
    QuadExt::from_base(Poly::constant(c), d.clone())
}

pub fn pq_poly(p: Poly, d: &Poly) -> PolyQuad {
    QuadExt::from_base(p, d.clone())
}

/// `6x sqrt(9x^2 - 1)`, the hyperbolic argument shared by `b1..c2`.
pub fn balancing_hyperbolic_arg() -> PolyQuad {
    QuadExt::new(
        Poly::zero(),
        Poly::from_ints(&[0, 6]),
        balancing_discriminant(),
    )
}

/// `e^{(18x^2 - 1) z}` in the balancing ring.
pub fn balancing_exp(order: usize) -> EgfSeries<PolyQuad> {
    let d = balancing_discriminant();
    EgfSeries::exp_linear(&pq_poly(Poly::from_ints(&[-1, 0, 18]), &d), order)
}

/// `(a + b y) / y = b + (a / d) y`, exact division in `Q[x]`.
fn div_root(u: &PolyQuad) -> Result<PolyQuad> {
    let a_over_d = u.a().div_exact(u.d())?;
    Ok(QuadExt::new(u.b().clone(), a_over_d, u.d().clone()))
}

fn series_div_root(s: &EgfSeries<PolyQuad>) -> Result<EgfSeries<PolyQuad>> {
    EgfSeries::from_coeffs(s.coeffs().iter().map(div_root).collect::<Result<_>>()?)
}

/// Closed-form right-hand side of the named generating function.
pub fn build_gf(name: GfName, params: &GfParams, order: usize) -> Result<EgfSeries<PolyQuad>> {
    let d = balancing_discriminant();
    let t = balancing_hyperbolic_arg();
    match name {
        GfName::H => {
            // (e^{wz} - 1) / (wz) has EGF coefficients w^n / (n + 1).
            let w = &params.scale;
            let den = EgfSeries::exp_linear(w, order)
                .into_coeffs()
                .into_iter()
                .enumerate()
                .map(|(n, c)| c.scale(&Rational::frac(1, n as i64 + 1)))
                .collect();
            let den = EgfSeries::from_coeffs(den)?;
            let xw = w.scale_base(&params.x);
            den.recip()?.mul(&EgfSeries::exp_linear(&xw, order))
        }
        GfName::I => euler_gf(&params.x, &params.scale, order),
        GfName::B2 => {
            let sinh = EgfSeries::sinh_linear(&t, order);
            balancing_exp(order).mul(&series_div_root(&sinh)?)
        }
        GfName::B1 => {
            let three_x = pq_poly(Poly::from_ints(&[0, 3]), &d);
            let sinh_over_root = series_div_root(&EgfSeries::sinh_linear(&t, order))?;
            let inner = sinh_over_root
                .scale_by(&three_x)?
                .add(&EgfSeries::cosh_linear(&t, order))?;
            balancing_exp(order).mul(&inner)
        }
        GfName::C1 => {
            let three_x = pq_poly(Poly::from_ints(&[0, 3]), &d);
            let root = QuadExt::root(d.clone());
            let inner = EgfSeries::cosh_linear(&t, order)
                .scale_by(&three_x)?
                .add(&EgfSeries::sinh_linear(&t, order).scale_by(&root)?)?;
            balancing_exp(order).mul(&inner)
        }
        GfName::C2 => balancing_exp(order).mul(&EgfSeries::cosh_linear(&t, order)),
        GfName::L => lucas_progression_gf(params.j, order, &mut SequenceCache::new()),
    }
}

/// `I(x, w z) = 2 e^{x w z} / (e^{w z} + 1)` in the ring of `w`.
pub fn euler_gf(x: &Poly, w: &PolyQuad, order: usize) -> Result<EgfSeries<PolyQuad>> {
    let two = Rational::from(2);
    let den = EgfSeries::exp_linear(w, order).add(&EgfSeries::one(w, order))?;
    let num = EgfSeries::exp_linear(&w.scale_base(x), order).scale(&two);
    num.mul(&den.recip()?)
}

/// `L(z) = 2 e^{(F_j/2 + F_{j-1}) z} cosh(F_j sqrt5 z / 2)` in `Q[x][sqrt5]`.
pub fn lucas_progression_gf(
    j: i64,
    order: usize,
    cache: &mut SequenceCache,
) -> Result<EgfSeries<PolyQuad>> {
    let d5 = Poly::constant(Rational::from(5));
    let f = cache.fib_q(j)?;
    let f_prev = cache.fib_q(j - 1)?;
    let half = Rational::frac(1, 2);
    let rate = pq_const(&f * &half + f_prev, &d5);
    let hyper = QuadExt::new(Poly::zero(), Poly::constant(&f * &half), d5);
    EgfSeries::exp_linear(&rate, order)
        .mul(&EgfSeries::cosh_linear(&hyper, order))
        .map(|s| s.scale(&Rational::from(2)))
}

/// The same series as [`build_gf`], with coefficients taken from the
/// sequence generators instead of closed forms.
pub fn gf_from_sequences(
    name: GfName,
    params: &GfParams,
    order: usize,
    cache: &mut SequenceCache,
) -> Result<EgfSeries<PolyQuad>> {
    let d = balancing_discriminant();
    let n_iter = 0..=order as i64;
    let coeffs: Vec<PolyQuad> = match name {
        GfName::H | GfName::I => {
            let w = &params.scale;
            let mut out = Vec::with_capacity(order + 1);
            let mut w_pow = w.one_like();
            for n in n_iter {
                let p = match name {
                    GfName::H => cache.bernoulli_poly(n)?,
                    _ => cache.euler_poly(n)?,
                };
                out.push(w_pow.scale_base(&p.compose(&params.x)));
                w_pow = w_pow.mul(w);
            }
            out
        }
        GfName::B1 => n_iter
            .map(|n| Ok(pq_poly(cache.balancing_poly(2 * n + 1)?, &d)))
            .collect::<Result<_>>()?,
        GfName::B2 => n_iter
            .map(|n| Ok(pq_poly(cache.balancing_poly(2 * n)?, &d)))
            .collect::<Result<_>>()?,
        GfName::C1 => n_iter
            .map(|n| Ok(pq_poly(cache.lucas_balancing_poly(2 * n + 1)?, &d)))
            .collect::<Result<_>>()?,
        GfName::C2 => n_iter
            .map(|n| Ok(pq_poly(cache.lucas_balancing_poly(2 * n)?, &d)))
            .collect::<Result<_>>()?,
        GfName::L => {
            let d5 = Poly::constant(Rational::from(5));
            n_iter
                .map(|n| Ok(pq_const(cache.lucas_q(params.j * n)?, &d5)))
                .collect::<Result<_>>()?
        }
    };
    EgfSeries::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::frac(p, q)
    }

    #[test]
    fn names_round_trip() {
        for g in GfName::ALL {
            assert_eq!(g.as_str().parse::<GfName>().unwrap(), g);
        }
        assert_eq!(
            "Q".parse::<GfName>(),
            Err(Error::UnknownGeneratingFunction("Q".into()))
        );
    }

    #[test]
    fn c2_starts_with_c0() {
        let c2 = build_gf(GfName::C2, &GfParams::default(), 8).unwrap();
        assert!(c2.coeff(0).is_one());
    }

    #[test]
    fn b2_coefficients_are_even_balancing_polys() {
        let b2 = build_gf(GfName::B2, &GfParams::default(), 8).unwrap();
        let mut cache = SequenceCache::new();
        for n in 0..=8 {
            let c = b2.coeff(n);
            assert!(c.b().is_zero());
            assert_eq!(c.a(), &cache.balancing_poly(2 * n as i64).unwrap());
        }
    }

    #[test]
    fn euler_numbers_from_i_at_one_half() {
        let d = balancing_discriminant();
        let params = GfParams::at(Poly::constant(r(1, 2)), pq_const(Rational::from(2), &d));
        let s = build_gf(GfName::I, &params, 10).unwrap();
        let mut cache = SequenceCache::new();
        for n in 0..=10 {
            assert_eq!(s.coeff(n), &pq_const(cache.euler_q(n as i64).unwrap(), &d));
        }
    }

    #[test]
    fn definitional_equalities() {
        let mut cache = SequenceCache::new();
        let d = balancing_discriminant();
        let mut cases = vec![GfParams::default(), GfParams::with_j(3)];
        for x in [r(0, 1), r(1, 2), r(-3, 7)] {
            cases.push(GfParams::at(
                Poly::constant(x),
                pq_const(Rational::one(), &d),
            ));
        }
        cases.push(GfParams::at(Poly::x(), balancing_hyperbolic_arg()));
        for params in &cases {
            for name in GfName::ALL {
                let closed = build_gf(name, params, 12).unwrap();
                let direct = gf_from_sequences(name, params, 12, &mut cache).unwrap();
                assert_eq!(closed, direct, "{name} with {params:?}");
            }
        }
    }
}
