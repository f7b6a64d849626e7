use num_traits::{One, Zero};

use super::Integer;
use crate::error::{Error, Result};

/// `C(n, k)`, with `C(n, k) = 0` whenever `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> Result<Integer> {
    if n < 0 {
        return Err(Error::NegativeIndex(n));
    }
    if k < 0 || k > n {
        return Ok(Integer::zero());
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        // Each partial product is itself a binomial coefficient, so the
        // division is exact.
        acc = acc * Integer::from(n - i) / Integer::from(i + 1);
    }
    Ok(acc)
}

pub fn factorial(n: u64) -> Integer {
    (1..=n).fold(Integer::one(), |acc, i| acc * Integer::from(i))
}
