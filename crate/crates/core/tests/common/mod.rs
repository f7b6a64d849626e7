//! Reference values computed by methods unrelated to the library's own:
//! 2x2 matrix powers for Fibonacci/Lucas, the Akiyama-Tanigawa transform for
//! Bernoulli numbers, the Seidel boustrophedon for Euler numbers and the
//! Chebyshev closed form for balancing polynomials.

#![allow(dead_code)]

use lucas_euler::{Integer, Poly, Rational};

fn mat_mul(a: &[Integer; 4], b: &[Integer; 4]) -> [Integer; 4] {
    [
        &a[0] * &b[0] + &a[1] * &b[2],
        &a[0] * &b[1] + &a[1] * &b[3],
        &a[2] * &b[0] + &a[3] * &b[2],
        &a[2] * &b[1] + &a[3] * &b[3],
    ]
}

/// `[[1,1],[1,0]]^n = [[F_{n+1}, F_n], [F_n, F_{n-1}]]`.
pub fn fib(n: u32) -> Integer {
    let one = Integer::from(1);
    let zero = Integer::from(0);
    let mut acc = [one.clone(), zero.clone(), zero, one.clone()];
    let mut base = [one.clone(), one.clone(), one, Integer::from(0)];
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            acc = mat_mul(&acc, &base);
        }
        base = mat_mul(&base, &base);
        e >>= 1;
    }
    acc[1].clone()
}

/// `L_n = F_{n-1} + F_{n+1}`, with `L_0 = 2`.
pub fn lucas(n: u32) -> Integer {
    if n == 0 {
        return Integer::from(2);
    }
    fib(n - 1) + fib(n + 1)
}

/// `B_0..=B_n` with `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n + 1);
    let mut a: Vec<Rational> = Vec::new();
    for m in 0..=n {
        a.push(Rational::frac(1, m as i64 + 1));
        for j in (1..=m).rev() {
            a[j - 1] = Rational::from(j as i64) * (&a[j - 1] - &a[j]);
        }
        out.push(a[0].clone());
    }
    if n >= 1 {
        out[1] = -out[1].clone();
    }
    out
}

/// `E_0..=E_n`, signed coefficients of `sech z`.
pub fn euler(n: usize) -> Vec<Integer> {
    // Boustrophedon rows; the zigzag number A_k ends row k.
    let mut zigzag = vec![Integer::from(1)];
    let mut row = vec![Integer::from(1)];
    for k in 1..=n {
        let mut next = vec![Integer::from(0)];
        for i in 0..k {
            let v = &next[i] + &row[k - 1 - i];
            next.push(v);
        }
        zigzag.push(next[k].clone());
        row = next;
    }
    (0..=n)
        .map(|k| match k % 4 {
            0 => zigzag[k].clone(),
            2 => -zigzag[k].clone(),
            _ => Integer::from(0),
        })
        .collect()
}

fn binom(n: i64, k: i64) -> Integer {
    if k < 0 || k > n {
        return Integer::from(0);
    }
    let mut r = Integer::from(1);
    for i in 0..k {
        r = r * Integer::from(n - i) / Integer::from(i + 1);
    }
    r
}

/// `B*_n(x) = sum_k (-1)^k C(n-1-k, k) (6x)^{n-1-2k}`.
pub fn balancing(n: i64) -> Poly {
    if n == 0 {
        return Poly::zero();
    }
    let mut coeffs = vec![Rational::zero(); n as usize];
    for k in 0..=(n - 1) / 2 {
        let deg = n - 1 - 2 * k;
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let c = binom(n - 1 - k, k) * Integer::from(6).pow(deg as u32) * Integer::from(sign);
        coeffs[deg as usize] = Rational::from(c);
    }
    Poly::from_coeffs(coeffs)
}

/// `C_n(x) = (B*_{n+1}(x) - B*_{n-1}(x)) / 2`, with `C_0 = 1`.
pub fn lucas_balancing(n: i64) -> Poly {
    if n == 0 {
        return Poly::one();
    }
    (&balancing(n + 1) - &balancing(n - 1)).scale(&Rational::frac(1, 2))
}
