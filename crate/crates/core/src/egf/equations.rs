//! Functional equations behind the main theorems, checked coefficientwise
//! with `x` symbolic.
//!
//! Every equation is a list of relations `lhs = rhs` between truncated
//! series. Each side is assembled from the exp/cosh/sinh/recip primitives or
//! from sequence values, never from the other side.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use super::gf::{
    balancing_exp, balancing_hyperbolic_arg, build_gf, euler_gf, gf_from_sequences,
    lucas_progression_gf, pq_const, pq_poly, GfName, GfParams,
};
use super::EgfSeries;
use crate::check::{CheckResult, Counterexample, Status};
use crate::error::{Error, Result};
use crate::exact::{binomial, QuadExt, Rational, Ring};
use crate::poly::{Poly, PolyQuad};
use crate::sequences::{balancing_discriminant, SequenceCache, Sign};

pub const DEFAULT_ORDER: usize = 16;
pub const DEFAULT_J_MAX: i64 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GfEquation {
    /// `I(0, 2tz) = 1 - tanh(tz)` with `t = 6x sqrt(9x^2 - 1)`.
    Thm1Tanh,
    /// `sum_k C(n,k) C_{2(n-k)} (2t)^k E_k(0)` = `c2 I(0, 2tz)`
    /// = `e^{(18x^2-1)z} (cosh tz - sinh tz)` = `c2 - sqrt(9x^2-1) b2`
    /// = `sum (C_{2n} - sqrt(9x^2-1) B*_{2n}) z^n/n!`.
    Thm1Chain,
    /// `c2 I(1/2, 2tz) = e^{(18x^2-1)z}`.
    Thm2,
    /// `I(1/2, 2tz) = e^{tz}(1 - tanh tz)` and
    /// `c2 I(1/2, 2tz) = e^{tz}(c2 - sqrt(9x^2-1) b2)`.
    Thm3,
    /// `cosh(z/2) I(x, z) = e^{(x-1/2)z}` and
    /// `c2 I(x, 2tz) = e^{(18x^2 - 1 + 6x(2x-1) sqrt(9x^2-1)) z}`.
    Thm4,
    /// `L(z) I(x, sqrt5 F_j z) = 2 e^{((sqrt5 x + beta) F_j + F_{j-1}) z}`.
    Thm5Plus,
    /// `L(z) I(x, -sqrt5 F_j z) = 2 e^{((alpha - sqrt5 x) F_j + F_{j-1}) z}`.
    Thm5Minus,
}

impl GfEquation {
    pub const ALL: [GfEquation; 7] = [
        GfEquation::Thm1Tanh,
        GfEquation::Thm1Chain,
        GfEquation::Thm2,
        GfEquation::Thm3,
        GfEquation::Thm4,
        GfEquation::Thm5Plus,
        GfEquation::Thm5Minus,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GfEquation::Thm1Tanh => "thm1_tanh",
            GfEquation::Thm1Chain => "thm1_chain",
            GfEquation::Thm2 => "thm2",
            GfEquation::Thm3 => "thm3",
            GfEquation::Thm4 => "thm4",
            GfEquation::Thm5Plus => "thm5_plus",
            GfEquation::Thm5Minus => "thm5_minus",
        }
    }

    pub fn uses_j(self) -> bool {
        matches!(self, GfEquation::Thm5Plus | GfEquation::Thm5Minus)
    }
}

impl fmt::Display for GfEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GfEquation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GfEquation::ALL
            .into_iter()
            .find(|e| e.as_str() == s)
            .ok_or_else(|| Error::UnknownEquation(s.to_string()))
    }
}

/// Deliberate corruption of an input series, for negative controls.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Perturbation {
    /// Zero out the `z^k` coefficient of `c2(x, z)`.
    DropC2Term(usize),
}

#[derive(Clone, Debug)]
pub struct GfOptions {
    pub j_max: i64,
    pub perturbation: Option<Perturbation>,
}

impl Default for GfOptions {
    fn default() -> Self {
        Self {
            j_max: DEFAULT_J_MAX,
            perturbation: None,
        }
    }
}

/// Where an equation first broke.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GfFailure {
    pub order: usize,
    pub relation: String,
    pub j: Option<i64>,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of [`check_gf_equation`]; orders below `first_failure.order` agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GfCheck {
    pub id: String,
    pub order: usize,
    pub j_max: Option<i64>,
    pub first_failure: Option<GfFailure>,
    pub millis: u64,
}

impl GfCheck {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }

    pub fn first_failing_order(&self) -> Option<usize> {
        self.first_failure.as_ref().map(|f| f.order)
    }

    /// Per-order verdicts `0..=order`.
    pub fn per_order(&self) -> Vec<bool> {
        let cut = self.first_failing_order().unwrap_or(self.order + 1);
        (0..=self.order).map(|n| n < cut).collect()
    }

    pub fn to_check_result(&self) -> CheckResult {
        let mut grid = format!("order <= {}, x symbolic", self.order);
        if let Some(j) = self.j_max {
            grid.push_str(&format!(", j <= {j}"));
        }
        CheckResult {
            id: self.id.clone(),
            grid,
            status: if self.passed() {
                Status::Pass
            } else {
                Status::Fail
            },
            counterexample: self.first_failure.as_ref().map(|f| Counterexample {
                params: match f.j {
                    Some(j) => format!("order={}, j={j}, relation={}", f.order, f.relation),
                    None => format!("order={}, relation={}", f.order, f.relation),
                },
                lhs: f.lhs.clone(),
                rhs: f.rhs.clone(),
            }),
            millis: self.millis,
        }
    }
}

struct Relation {
    label: &'static str,
    lhs: EgfSeries<PolyQuad>,
    rhs: EgfSeries<PolyQuad>,
}

fn relation(label: &'static str, lhs: EgfSeries<PolyQuad>, rhs: EgfSeries<PolyQuad>) -> Relation {
    Relation { label, lhs, rhs }
}

/// Consecutive links of a chain `s0 = s1 = ... = sk`.
fn chain(labels: &[&'static str], sides: Vec<EgfSeries<PolyQuad>>) -> Vec<Relation> {
    sides
        .windows(2)
        .zip(labels)
        .map(|(w, label)| relation(label, w[0].clone(), w[1].clone()))
        .collect()
}

struct Builder {
    order: usize,
    perturbation: Option<Perturbation>,
    cache: SequenceCache,
}

impl Builder {
    fn d(&self) -> Poly {
        balancing_discriminant()
    }

    fn c2(&self) -> Result<EgfSeries<PolyQuad>> {
        let c2 = build_gf(GfName::C2, &GfParams::default(), self.order)?;
        match self.perturbation {
            Some(Perturbation::DropC2Term(k)) if k <= self.order => {
                let zero = c2.coeff(0).zero_like();
                c2.with_coeff(k, zero)
            }
            _ => Ok(c2),
        }
    }

    fn b2(&self) -> Result<EgfSeries<PolyQuad>> {
        build_gf(GfName::B2, &GfParams::default(), self.order)
    }

    /// `sinh(tz) * recip(cosh(tz))`.
    fn tanh(&self, t: &PolyQuad) -> Result<EgfSeries<PolyQuad>> {
        let n = self.order;
        EgfSeries::sinh_linear(t, n).mul(&EgfSeries::cosh_linear(t, n).recip()?)
    }

    fn one(&self) -> EgfSeries<PolyQuad> {
        EgfSeries::one(&pq_const(Rational::one(), &self.d()), self.order)
    }

    /// `c2 - sqrt(9x^2 - 1) b2`.
    fn c2_minus_root_b2(&self) -> Result<EgfSeries<PolyQuad>> {
        let root = QuadExt::root(self.d());
        self.c2()?.sub(&self.b2()?.scale_by(&root)?)
    }

    fn relations(&mut self, eq: GfEquation, j: i64) -> Result<Vec<Relation>> {
        let n = self.order;
        let d = self.d();
        let t = balancing_hyperbolic_arg();
        let two_t = t.scale(&Rational::from(2));
        Ok(match eq {
            GfEquation::Thm1Tanh => {
                let lhs = euler_gf(&Poly::zero(), &two_t, n)?;
                let rhs = self.one().sub(&self.tanh(&t)?)?;
                vec![relation("I(0,2tz) = 1 - tanh(tz)", lhs, rhs)]
            }
            GfEquation::Thm1Chain => {
                let coefficient_form = EgfSeries::from_fn(n, |m| {
                    let m = m as i64;
                    let mut acc = pq_const(Rational::zero(), &d);
                    for k in 0..=m {
                        let e0 = self.cache.euler_at_zero(k)?;
                        if e0.is_zero() {
                            continue;
                        }
                        let c = pq_poly(self.cache.lucas_balancing_poly(2 * (m - k))?, &d);
                        let coef = Rational::from(binomial(m, k)?) * e0;
                        acc = acc.add(&c.mul(&two_t.pow(k as u64)).scale(&coef));
                    }
                    Ok(acc)
                })?;
                let product = self.c2()?.mul(&euler_gf(&Poly::zero(), &two_t, n)?)?;
                let hyperbolic = balancing_exp(n)
                    .mul(&EgfSeries::cosh_linear(&t, n).sub(&EgfSeries::sinh_linear(&t, n))?)?;
                let root = QuadExt::root(d.clone());
                let closed = self.c2_minus_root_b2()?;
                let from_sequences = EgfSeries::from_fn(n, |m| {
                    let c = pq_poly(self.cache.lucas_balancing_poly(2 * m as i64)?, &d);
                    let b = pq_poly(self.cache.balancing_poly(2 * m as i64)?, &d);
                    Ok(c.sub(&root.mul(&b)))
                })?;
                chain(
                    &[
                        "coefficient sum = c2 I(0,2tz)",
                        "c2 I(0,2tz) = e^{(18x^2-1)z}(cosh tz - sinh tz)",
                        "e^{(18x^2-1)z}(cosh tz - sinh tz) = c2 - y b2",
                        "c2 - y b2 = sum (C_2n - y B*_2n)",
                    ],
                    vec![
                        coefficient_form,
                        product,
                        hyperbolic,
                        closed,
                        from_sequences,
                    ],
                )
            }
            GfEquation::Thm2 => {
                let half = Poly::constant(Rational::frac(1, 2));
                let lhs = self.c2()?.mul(&euler_gf(&half, &two_t, n)?)?;
                vec![relation(
                    "c2 I(1/2,2tz) = e^{(18x^2-1)z}",
                    lhs,
                    balancing_exp(n),
                )]
            }
            GfEquation::Thm3 => {
                let half = Poly::constant(Rational::frac(1, 2));
                let i_half = euler_gf(&half, &two_t, n)?;
                let exp_t = EgfSeries::exp_linear(&t, n);
                let tanh_form = exp_t.mul(&self.one().sub(&self.tanh(&t)?)?)?;
                let lhs = self.c2()?.mul(&i_half)?;
                let rhs = exp_t.mul(&self.c2_minus_root_b2()?)?;
                vec![
                    relation("I(1/2,2tz) = e^{tz}(1 - tanh tz)", i_half, tanh_form),
                    relation("c2 I(1/2,2tz) = e^{tz}(c2 - y b2)", lhs, rhs),
                ]
            }
            GfEquation::Thm4 => {
                let one = pq_const(Rational::one(), &d);
                let cosh_half = EgfSeries::cosh_linear(&pq_const(Rational::frac(1, 2), &d), n);
                let lhs1 = cosh_half.mul(&euler_gf(&Poly::x(), &one, n)?)?;
                let rate1 = pq_poly(
                    Poly::from_coeffs(vec![Rational::frac(-1, 2), Rational::one()]),
                    &d,
                );
                let rhs1 = EgfSeries::exp_linear(&rate1, n);
                let lhs2 = self.c2()?.mul(&euler_gf(&Poly::x(), &two_t, n)?)?;
                // 18x^2 - 1 + 6x(2x - 1) y
                let rate2 = QuadExt::new(
                    Poly::from_ints(&[-1, 0, 18]),
                    Poly::from_ints(&[0, -6, 12]),
                    d,
                );
                let rhs2 = EgfSeries::exp_linear(&rate2, n);
                vec![
                    relation("cosh(z/2) I(x,z) = e^{(x-1/2)z}", lhs1, rhs1),
                    relation("c2 I(x,2tz) = e^{(18x^2-1+6x(2x-1)y)z}", lhs2, rhs2),
                ]
            }
            GfEquation::Thm5Plus | GfEquation::Thm5Minus => {
                let sign = if eq == GfEquation::Thm5Plus {
                    Sign::Plus
                } else {
                    Sign::Minus
                };
                let d5 = Poly::constant(Rational::from(5));
                let f = self.cache.fib_q(j)?;
                let f_prev = self.cache.fib_q(j - 1)?;
                let closed_l = lucas_progression_gf(j, n, &mut self.cache)?;
                let direct_l =
                    gf_from_sequences(GfName::L, &GfParams::with_j(j), n, &mut self.cache)?;
                let w = QuadExt::new(
                    Poly::zero(),
                    Poly::constant(&f * &sign.rational()),
                    d5.clone(),
                );
                let lhs = closed_l.mul(&euler_gf(&Poly::x(), &w, n)?)?;
                // plus:  (sqrt5 x + beta) F_j + F_{j-1}
                // minus: (alpha - sqrt5 x) F_j + F_{j-1}
                let half = Rational::frac(1, 2);
                let a = Poly::constant(&f * &half + &f_prev);
                let b = match sign {
                    Sign::Plus => Poly::from_coeffs(vec![-(&half), Rational::one()]).scale(&f),
                    Sign::Minus => {
                        Poly::from_coeffs(vec![half.clone(), Rational::from(-1)]).scale(&f)
                    }
                };
                let rate = QuadExt::new(a, b, d5);
                let rhs = EgfSeries::exp_linear(&rate, n).scale(&Rational::from(2));
                vec![
                    relation("L(z) closed form = sum L_jn z^n/n!", closed_l, direct_l),
                    relation(
                        match sign {
                            Sign::Plus => {
                                "L(z) I(x,sqrt5 F_j z) = 2e^{((sqrt5 x+beta)F_j+F_{j-1})z}"
                            }
                            Sign::Minus => {
                                "L(z) I(x,-sqrt5 F_j z) = 2e^{((alpha-sqrt5 x)F_j+F_{j-1})z}"
                            }
                        },
                        lhs,
                        rhs,
                    ),
                ]
            }
        })
    }
}

fn first_failure(relations: &[Relation], j: Option<i64>) -> Result<Option<GfFailure>> {
    let mut best: Option<GfFailure> = None;
    for rel in relations {
        if let Some(k) = rel.lhs.first_mismatch(&rel.rhs)? {
            if best.as_ref().is_none_or(|b| k < b.order) {
                best = Some(GfFailure {
                    order: k,
                    relation: rel.label.to_string(),
                    j,
                    lhs: rel.lhs.coeff(k).to_string(),
                    rhs: rel.rhs.coeff(k).to_string(),
                });
            }
        }
    }
    Ok(best)
}

/// Checks `eq` coefficientwise up to `order` with default options.
pub fn check_gf_equation(eq: GfEquation, order: usize) -> Result<GfCheck> {
    check_gf_equation_with(eq, order, &GfOptions::default())
}

pub fn check_gf_equation_with(eq: GfEquation, order: usize, opts: &GfOptions) -> Result<GfCheck> {
    let start = Instant::now();
    let mut builder = Builder {
        order,
        perturbation: opts.perturbation,
        cache: SequenceCache::new(),
    };
    let mut failure = None;
    if eq.uses_j() {
        for j in 1..=opts.j_max {
            let rels = builder.relations(eq, j)?;
            if let Some(f) = first_failure(&rels, Some(j))? {
                if failure
                    .as_ref()
                    .is_none_or(|b: &GfFailure| f.order < b.order)
                {
                    failure = Some(f);
                }
            }
        }
    } else {
        failure = first_failure(&builder.relations(eq, 1)?, None)?;
    }
    Ok(GfCheck {
        id: eq.as_str().to_string(),
        order,
        j_max: eq.uses_j().then_some(opts.j_max),
        first_failure: failure,
        millis: start.elapsed().as_millis() as u64,
    })
}

/// Closed form of a named generating function against the series assembled
/// from sequence values. `b1..c2` are symbolic in `x`; `H` and `I` are checked
/// symbolically and at the rational points `0`, `1/2`, `-3/7`; `L` for
/// `j = 1..=j_max`.
pub fn check_definition(name: GfName, order: usize, j_max: i64) -> Result<GfCheck> {
    let start = Instant::now();
    let mut cache = SequenceCache::new();
    let d = balancing_discriminant();
    let one = pq_const(Rational::one(), &d);
    let params: Vec<GfParams> = match name {
        GfName::H | GfName::I => {
            let mut v = vec![GfParams::default()];
            for x in [
                Rational::zero(),
                Rational::frac(1, 2),
                Rational::frac(-3, 7),
            ] {
                v.push(GfParams::at(Poly::constant(x), one.clone()));
            }
            v
        }
        GfName::L => (1..=j_max).map(GfParams::with_j).collect(),
        _ => vec![GfParams::default()],
    };
    let mut failure: Option<GfFailure> = None;
    for p in &params {
        let rel = relation(
            "closed form = sequence series",
            build_gf(name, p, order)?,
            gf_from_sequences(name, p, order, &mut cache)?,
        );
        let j = (name == GfName::L).then_some(p.j);
        if let Some(mut f) = first_failure(std::slice::from_ref(&rel), j)? {
            if name != GfName::L {
                f.relation = format!("{} at x = {}", f.relation, p.x);
            }
            if failure.as_ref().is_none_or(|b| f.order < b.order) {
                failure = Some(f);
            }
        }
    }
    Ok(GfCheck {
        id: format!("def_{name}"),
        order,
        j_max: (name == GfName::L).then_some(j_max),
        first_failure: failure,
        millis: start.elapsed().as_millis() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for eq in GfEquation::ALL {
            assert_eq!(eq.as_str().parse::<GfEquation>().unwrap(), eq);
        }
        assert!(matches!(
            "thm9".parse::<GfEquation>(),
            Err(Error::UnknownEquation(_))
        ));
    }

    #[test]
    fn thm2_and_thm4_pass_at_twelve() {
        for eq in [GfEquation::Thm2, GfEquation::Thm4] {
            let res = check_gf_equation(eq, 12).unwrap();
            assert!(res.passed(), "{eq}: {:?}", res.first_failure);
            assert!(res.per_order().iter().all(|&ok| ok));
        }
    }

    #[test]
    fn dropped_c2_term_fails_at_order_one() {
        let opts = GfOptions {
            perturbation: Some(Perturbation::DropC2Term(1)),
            ..GfOptions::default()
        };
        let res = check_gf_equation_with(GfEquation::Thm2, 4, &opts).unwrap();
        assert_eq!(res.first_failing_order(), Some(1));
        assert_eq!(res.per_order(), vec![true, false, false, false, false]);
        let cr = res.to_check_result();
        assert_eq!(cr.status, Status::Fail);
        assert!(cr.counterexample.unwrap().params.starts_with("order=1"));
    }

    #[test]
    fn definitions_hold_at_small_order() {
        for name in GfName::ALL {
            let res = check_definition(name, 6, 3).unwrap();
            assert!(res.passed(), "{name}: {:?}", res.first_failure);
        }
    }
}
