//! Cross-checks of the integer sequences against OEIS b-files.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use super::bfile::{parse_bfile, BFile};
use crate::check::{CheckResult, Counterexample, Status};
use crate::error::{Error, Result};
use crate::exact::{Integer, Rational};
use crate::sequences::SequenceCache;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Fibonacci,
    Lucas,
    /// `B*_n(1)`.
    Balancing,
    /// `C_n(1)`.
    LucasBalancing,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Fibonacci,
        Family::Lucas,
        Family::Balancing,
        Family::LucasBalancing,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Fibonacci => "fibonacci",
            Family::Lucas => "lucas",
            Family::Balancing => "balancing",
            Family::LucasBalancing => "lucas_balancing",
        }
    }

    pub fn oeis_id(self) -> &'static str {
        match self {
            Family::Fibonacci => "A000045",
            Family::Lucas => "A000032",
            Family::Balancing => "A001109",
            Family::LucasBalancing => "A001541",
        }
    }

    /// The vendored b-file for this family.
    pub fn fixture(self) -> &'static str {
        match self {
            Family::Fibonacci => include_str!("../../fixtures/b000045.txt"),
            Family::Lucas => include_str!("../../fixtures/b000032.txt"),
            Family::Balancing => include_str!("../../fixtures/b001109.txt"),
            Family::LucasBalancing => include_str!("../../fixtures/b001541.txt"),
        }
    }

    pub fn value(self, cache: &mut SequenceCache, n: i64) -> Result<Integer> {
        let one = Rational::one();
        let at_one = |r: Rational| r.numer().clone();
        match self {
            Family::Fibonacci => cache.fibonacci(n),
            Family::Lucas => cache.lucas(n),
            Family::Balancing => Ok(at_one(cache.balancing_poly(n)?.eval(&one))),
            Family::LucasBalancing => Ok(at_one(cache.lucas_balancing_poly(n)?.eval(&one))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

pub fn bundled_bfile(family: Family) -> BFile {
    parse_bfile(family.fixture()).expect("vendored fixtures are well formed")
}

/// First `(b-file index, computed, expected)` disagreement when b-file index
/// `i` is read as sequence index `i + shift`.
fn first_mismatch(
    family: Family,
    bfile: &BFile,
    shift: i64,
    cache: &mut SequenceCache,
) -> Result<Option<(i64, String, Integer)>> {
    for (i, expected) in &bfile.entries {
        let n = i + shift;
        let got = if n < 0 {
            "undefined".to_string()
        } else {
            let v = family.value(cache, n)?;
            if &v == expected {
                continue;
            }
            v.to_string()
        };
        return Ok(Some((*i, got, expected.clone())));
    }
    Ok(None)
}

/// Compares `family` against every entry of `bfile`. The indices are tried
/// as given, then renumbered so the first entry is index 0, then index 1.
/// A failure reports the mismatch under the as-given numbering.
pub fn oeis_check(family: Family, bfile: &BFile) -> Result<CheckResult> {
    let start = Instant::now();
    let mut cache = SequenceCache::new();
    let first = bfile.first_index().unwrap_or(0);
    let mut shifts = vec![0];
    for s in [-first, 1 - first] {
        if !shifts.contains(&s) {
            shifts.push(s);
        }
    }

    let mut as_given = None;
    let mut matched_shift = None;
    for &shift in &shifts {
        match first_mismatch(family, bfile, shift, &mut cache)? {
            None => {
                matched_shift = Some(shift);
                break;
            }
            Some(m) if shift == 0 => as_given = Some(m),
            Some(_) => {}
        }
    }

    let source = bfile.id.as_deref().unwrap_or("b-file");
    let last = bfile.entries.last().map_or(first, |(i, _)| *i);
    let mut grid = format!("{source} indices {first}..={last} ({} terms)", bfile.len());
    if let Some(s) = matched_shift.filter(|&s| s != 0) {
        grid.push_str(&format!(", renumbered by {s:+}"));
    }
    let counterexample = match (matched_shift, as_given) {
        (None, Some((i, got, expected))) => Some(Counterexample {
            params: format!("index={i} (also tried 0-based and 1-based renumbering)"),
            lhs: got,
            rhs: expected.to_string(),
        }),
        _ => None,
    };
    Ok(CheckResult {
        id: format!("oeis_{}", family.as_str()),
        grid,
        status: if matched_shift.is_some() {
            Status::Pass
        } else {
            Status::Fail
        },
        counterexample,
        millis: start.elapsed().as_millis() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_fixtures_pass() {
        for f in Family::ALL {
            let b = bundled_bfile(f);
            assert_eq!(b.id.as_deref(), Some(f.oeis_id()));
            assert!(b.len() >= 30);
            assert!(oeis_check(f, &b).unwrap().passed(), "{f}");
        }
    }

    #[test]
    fn balancing_prefixes() {
        let mut c = SequenceCache::new();
        let b: Vec<_> = (0..5)
            .map(|n| Family::Balancing.value(&mut c, n).unwrap().to_string())
            .collect();
        assert_eq!(b, ["0", "1", "6", "35", "204"]);
        let l: Vec<_> = (0..4)
            .map(|n| Family::LucasBalancing.value(&mut c, n).unwrap().to_string())
            .collect();
        assert_eq!(l, ["1", "3", "17", "99"]);
    }

    #[test]
    fn fibonacci_against_lucas_fails_at_first_index() {
        let res = oeis_check(Family::Fibonacci, &bundled_bfile(Family::Lucas)).unwrap();
        assert!(!res.passed());
        let cx = res.counterexample.unwrap();
        assert!(cx.params.starts_with("index=0"));
        assert_eq!((cx.lhs.as_str(), cx.rhs.as_str()), ("0", "2"));
    }

    #[test]
    fn one_based_file_is_renumbered() {
        // Balancing numbers listed from 1 with B*_0 dropped and indices restarted at 0.
        let b = parse_bfile("0 1\n1 6\n2 35\n3 204\n").unwrap();
        let res = oeis_check(Family::Balancing, &b).unwrap();
        assert!(res.passed(), "{res:?}");
        assert!(res.grid.contains("+1"));
        // Same values with their natural indices pass directly.
        let b = parse_bfile("1 1\n2 6\n3 35\n").unwrap();
        assert!(oeis_check(Family::Balancing, &b).unwrap().passed());
    }

    #[test]
    fn family_names() {
        for f in Family::ALL {
            assert_eq!(f.as_str().parse::<Family>().unwrap(), f);
        }
        assert!("tribonacci".parse::<Family>().is_err());
    }
}
