//! Registry of identities with exactly evaluable sides, and the grid checker.

mod identities;

use std::fmt;
use std::time::Instant;

use crate::check::{CheckResult, Counterexample, Status};
use crate::error::{Error, Result};
use crate::exact::{QuadExt, Rational};
use crate::poly::{Poly, PolyQuad};
use crate::sequences::SequenceCache;

pub use identities::{byrd_sum, catalog, negative_controls, thm2_lhs, thm2_rhs_with};

/// Ring in which both sides of an identity are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    Rational,
    /// `Q(sqrt5)`.
    Quad5,
    /// `Q(i)`.
    QuadNeg1,
    /// `Q[x]`.
    Poly,
    /// `Q[x][sqrt(9x^2 - 1)]`.
    PolyQuadBalancing,
    /// `Q[x][sqrt5]`.
    PolyQuad5,
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RingKind::Rational => "rational",
            RingKind::Quad5 => "quad(5)",
            RingKind::QuadNeg1 => "quad(-1)",
            RingKind::Poly => "poly",
            RingKind::PolyQuadBalancing => "polyquad(9x^2-1)",
            RingKind::PolyQuad5 => "polyquad(5)",
        })
    }
}

/// An exactly computed side of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Rational(Rational),
    Quad(QuadExt<Rational>),
    Poly(Poly),
    PolyQuad(PolyQuad),
}

impl Value {
    pub fn ring(&self) -> RingKind {
        let five = Rational::from(5);
        match self {
            Value::Rational(_) => RingKind::Rational,
            Value::Quad(q) if *q.d() == five => RingKind::Quad5,
            Value::Quad(_) => RingKind::QuadNeg1,
            Value::Poly(_) => RingKind::Poly,
            Value::PolyQuad(q) if q.d().is_constant() => RingKind::PolyQuad5,
            Value::PolyQuad(_) => RingKind::PolyQuadBalancing,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Rational(v) => write!(f, "{v}"),
            Value::Quad(v) => write!(f, "{v}"),
            Value::Poly(v) => write!(f, "{v}"),
            Value::PolyQuad(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParamKind {
    /// Main summation index bound.
    N,
    /// Step of the arithmetic progression.
    J,
    /// Evaluation index of the balancing links.
    S,
    /// Odd multiplier, `q >= 3`.
    Q,
    /// `+1` or `-1`.
    Sign,
    /// Which balancing family a link refers to: 0 for `B*`, 1 for `C`.
    Family,
}

impl ParamKind {
    pub fn name(self) -> &'static str {
        match self {
            ParamKind::N => "n",
            ParamKind::J => "j",
            ParamKind::S => "s",
            ParamKind::Q => "q",
            ParamKind::Sign => "sign",
            ParamKind::Family => "family",
        }
    }

    fn render(self, v: i64) -> String {
        match self {
            ParamKind::Sign => if v > 0 { "+" } else { "-" }.to_string(),
            ParamKind::Family => if v == 0 { "B*" } else { "C" }.to_string(),
            _ => v.to_string(),
        }
    }

    fn admits(self, min: i64, v: i64) -> bool {
        match self {
            ParamKind::Sign => v == 1 || v == -1,
            ParamKind::Family => v == 0 || v == 1,
            ParamKind::Q => v >= min.max(3) && v % 2 == 1,
            _ => v >= min,
        }
    }
}

/// A parameter together with its smallest admissible value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamDomain {
    pub kind: ParamKind,
    pub min: i64,
}

impl fmt::Display for ParamDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ParamKind::Sign => write!(f, "sign in {{+,-}}"),
            ParamKind::Family => write!(f, "family in {{B*,C}}"),
            ParamKind::Q => write!(f, "q odd >= {}", self.min.max(3)),
            k => write!(f, "{} >= {}", k.name(), self.min),
        }
    }
}

/// One parameter tuple, in the identity's declared parameter order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Params(Vec<(ParamKind, i64)>);

impl Params {
    pub fn new(values: Vec<(ParamKind, i64)>) -> Self {
        Self(values)
    }

    pub fn get(&self, kind: ParamKind) -> Result<i64> {
        self.0
            .iter()
            .find(|(k, _)| *k == kind)
            .map(|&(_, v)| v)
            .ok_or(Error::MissingParameter(kind.name()))
    }

    pub fn n(&self) -> Result<i64> {
        self.get(ParamKind::N)
    }

    pub fn j(&self) -> Result<i64> {
        self.get(ParamKind::J)
    }

    pub fn values(&self) -> &[(ParamKind, i64)] {
        &self.0
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}={}", k.name(), k.render(*v))?;
        }
        Ok(())
    }
}

/// Evaluates one side of an identity at a parameter tuple.
pub type SideFn = fn(&mut SequenceCache, &Params) -> Result<Value>;

/// A named identity: two exactly computable sides over a parameter domain.
#[derive(Clone, Copy)]
pub struct IdentitySpec {
    pub id: &'static str,
    /// The statement being checked, in plain ASCII math.
    pub statement: &'static str,
    /// Rings the sides may land in (two for the links: rational for even `s`).
    pub rings: &'static [RingKind],
    pub params: &'static [ParamDomain],
    /// Whether the sides are polynomials in a symbolic `x`.
    pub symbolic_x: bool,
    pub lhs: SideFn,
    pub rhs: SideFn,
}

impl fmt::Debug for IdentitySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentitySpec")
            .field("id", &self.id)
            .field("rings", &self.rings)
            .field("params", &self.params)
            .finish_non_exhaustive()
    }
}

impl IdentitySpec {
    pub fn domain_description(&self) -> String {
        let mut parts: Vec<String> = self.params.iter().map(ToString::to_string).collect();
        if self.symbolic_x {
            parts.push("x symbolic".into());
        }
        parts.join(", ")
    }

    pub fn ring_description(&self) -> String {
        self.rings
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" | ")
    }

    fn validate(&self, params: &Params) -> Result<()> {
        for dom in self.params {
            let v = params.get(dom.kind)?;
            if !dom.kind.admits(dom.min, v) {
                return Err(Error::OutOfDomain {
                    id: self.id.to_string(),
                    name: dom.kind.name(),
                    value: v,
                });
            }
        }
        Ok(())
    }

    /// Computes both sides exactly.
    pub fn evaluate(&self, cache: &mut SequenceCache, params: &Params) -> Result<(Value, Value)> {
        self.validate(params)?;
        let lhs = (self.lhs)(cache, params)?;
        let rhs = (self.rhs)(cache, params)?;
        for side in [&lhs, &rhs] {
            if !self.rings.contains(&side.ring()) {
                return Err(Error::Report(format!(
                    "`{}` produced a {} value, declared {}",
                    self.id,
                    side.ring(),
                    self.ring_description()
                )));
            }
        }
        Ok((lhs, rhs))
    }

    /// All tuples of `grid` inside this identity's domain, in lexicographic
    /// order of the declared parameters.
    pub fn tuples(&self, grid: &Grid) -> Vec<Params> {
        let axes: Vec<Vec<(ParamKind, i64)>> = self
            .params
            .iter()
            .map(|dom| {
                let values: Vec<i64> = match dom.kind {
                    ParamKind::N => (dom.min..=grid.n_max).collect(),
                    ParamKind::J => (dom.min..=grid.j_max).collect(),
                    ParamKind::S => (dom.min..=grid.s_max).collect(),
                    ParamKind::Q => grid.q_set.clone(),
                    ParamKind::Sign => vec![1, -1],
                    ParamKind::Family => vec![0, 1],
                };
                values
                    .into_iter()
                    .filter(|&v| dom.kind.admits(dom.min, v))
                    .map(|v| (dom.kind, v))
                    .collect()
            })
            .collect();
        let mut out = vec![Vec::new()];
        for axis in &axes {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    axis.iter().map(move |&p| {
                        let mut t = prefix.clone();
                        t.push(p);
                        t
                    })
                })
                .collect();
        }
        out.into_iter().map(Params).collect()
    }
}

/// Parameter ranges for a verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    pub n_max: i64,
    pub j_max: i64,
    pub s_max: i64,
    pub q_set: Vec<i64>,
}

impl Default for Grid {
    fn default() -> Self {
        Self {
            n_max: 20,
            j_max: 6,
            s_max: 6,
            q_set: vec![3, 5, 7],
        }
    }
}

impl Grid {
    /// Human-readable ranges restricted to the parameters `spec` uses.
    pub fn describe(&self, spec: &IdentitySpec) -> String {
        let mut parts = Vec::new();
        for dom in spec.params {
            parts.push(match dom.kind {
                ParamKind::N => format!("{} <= n <= {}", dom.min, self.n_max),
                ParamKind::J => format!("{} <= j <= {}", dom.min, self.j_max),
                ParamKind::S => format!("{} <= s <= {}", dom.min, self.s_max),
                ParamKind::Q => format!(
                    "q in {{{}}}",
                    self.q_set
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                ),
                ParamKind::Sign => "sign in {+,-}".into(),
                ParamKind::Family => "family in {B*,C}".into(),
            });
        }
        if spec.symbolic_x {
            parts.push("x symbolic".into());
        }
        parts.join(", ")
    }
}

/// The full registry in stable order.
pub fn list_identities() -> &'static [IdentitySpec] {
    catalog()
}

pub fn find(id: &str) -> Result<&'static IdentitySpec> {
    catalog()
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

pub fn evaluate_identity(id: &str, params: &Params) -> Result<(Value, Value)> {
    find(id)?.evaluate(&mut SequenceCache::new(), params)
}

/// Evaluates every tuple of `grid`; passes iff both sides agree everywhere.
/// The first disagreement (in tuple order) becomes the counterexample.
pub fn check_spec(
    spec: &IdentitySpec,
    grid: &Grid,
    cache: &mut SequenceCache,
) -> Result<CheckResult> {
    let start = Instant::now();
    let mut counterexample = None;
    for params in spec.tuples(grid) {
        let (lhs, rhs) = spec.evaluate(cache, &params)?;
        if lhs != rhs {
            counterexample = Some(Counterexample {
                params: params.to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
            break;
        }
    }
    Ok(CheckResult {
        id: spec.id.to_string(),
        grid: grid.describe(spec),
        status: if counterexample.is_none() {
            Status::Pass
        } else {
            Status::Fail
        },
        counterexample,
        millis: start.elapsed().as_millis() as u64,
    })
}

pub fn check_identity(id: &str, grid: &Grid) -> Result<CheckResult> {
    check_spec(find(id)?, grid, &mut SequenceCache::new())
}
