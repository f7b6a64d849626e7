mod common;

use lucas_euler::sequences::{self, minus_one_pow};
use lucas_euler::{Integer, Poly, QuadExt, Rational, Ring, SequenceCache, Sign};

#[test]
fn fibonacci_and_lucas_match_matrix_powers() {
    let mut c = SequenceCache::new();
    for n in 0..=60 {
        assert_eq!(c.fibonacci(n).unwrap(), common::fib(n as u32), "F_{n}");
        assert_eq!(c.lucas(n).unwrap(), common::lucas(n as u32), "L_{n}");
    }
}

#[test]
fn bernoulli_numbers_match_akiyama_tanigawa() {
    let oracle = common::bernoulli(40);
    let mut c = SequenceCache::new();
    for (n, b) in oracle.iter().enumerate() {
        assert_eq!(&c.bernoulli_number(n as i64).unwrap(), b, "B_{n}");
    }
    assert_eq!(oracle[1], Rational::frac(-1, 2));
    for n in (3..=40).step_by(2) {
        assert!(c.bernoulli_number(n).unwrap().is_zero());
    }
}

#[test]
fn euler_numbers_match_boustrophedon() {
    let oracle = common::euler(40);
    let mut c = SequenceCache::new();
    for (n, e) in oracle.iter().enumerate() {
        assert_eq!(&c.euler_number(n as i64).unwrap(), e, "E_{n}");
    }
    assert_eq!(oracle[10], Integer::from(-50521));
}

#[test]
fn balancing_polynomials_match_chebyshev_form() {
    let mut c = SequenceCache::new();
    for n in 0..=40 {
        assert_eq!(c.balancing_poly(n).unwrap(), common::balancing(n), "B*_{n}");
        assert_eq!(
            c.lucas_balancing_poly(n).unwrap(),
            common::lucas_balancing(n),
            "C_{n}"
        );
    }
}

#[test]
fn bernoulli_and_euler_polynomials_satisfy_their_difference_equations() {
    let mut c = SequenceCache::new();
    let one = Rational::one();
    for n in 0..=24 {
        let b = c.bernoulli_poly(n).unwrap();
        let e = c.euler_poly(n).unwrap();
        let xn = Poly::monomial(one.clone(), n as usize);
        // B_n(x + 1) - B_n(x) = n x^{n-1}
        let db = &b.compose_linear(&one, &one) - &b;
        let want = if n == 0 {
            Poly::zero()
        } else {
            Poly::monomial(Rational::from(n), n as usize - 1)
        };
        assert_eq!(db, want, "B_{n}");
        // E_n(x + 1) + E_n(x) = 2 x^n
        assert_eq!(
            &e.compose_linear(&one, &one) + &e,
            xn.scale(&Rational::from(2)),
            "E_{n}"
        );
        assert_eq!(e.degree(), Some(n as usize));
    }
}

#[test]
fn euler_number_is_scaled_value_at_one_half() {
    let mut c = SequenceCache::new();
    let half = Rational::frac(1, 2);
    for n in 0..=30 {
        let scaled = Rational::from(2).powi(n).unwrap() * c.euler_poly(n).unwrap().eval(&half);
        assert_eq!(scaled, c.euler_q(n).unwrap(), "n={n}");
    }
}

#[test]
fn euler_at_zero_closed_form_matches_evaluation() {
    let mut c = SequenceCache::new();
    let b = common::bernoulli(31);
    for n in 0..=30i64 {
        let closed = Rational::from(2)
            * (Rational::one() - Rational::from(2).powi(n + 1).unwrap())
            * &b[n as usize + 1]
            / Rational::from(n + 1);
        assert_eq!(c.euler_at_zero(n).unwrap(), closed, "n={n}");
        assert_eq!(
            c.euler_poly(n).unwrap().eval(&Rational::zero()),
            closed,
            "n={n}"
        );
    }
}

#[test]
fn lambda_powers_decompose_into_balancing_polynomials() {
    let mut c = SequenceCache::new();
    for n in 0..=40 {
        let lam = c.lambda_power(n).unwrap();
        assert_eq!(lam.a(), &common::lucas_balancing(n), "n={n}");
        assert_eq!(lam.b(), &common::balancing(n), "n={n}");
        assert!(lam.norm().is_one(), "lambda^n has norm 1");
    }
}

#[test]
fn binet_forms() {
    let mut c = SequenceCache::new();
    for n in 0..=30 {
        let a = c.golden_power(n, Sign::Plus).unwrap();
        let b = c.golden_power(n, Sign::Minus).unwrap();
        assert_eq!(
            a.mul(&b),
            QuadExt::from_base(minus_one_pow(n), Rational::from(5))
        );
        assert_eq!(a, sequences::golden(Sign::Plus).pow(n as u64));
        assert_eq!(b, sequences::golden(Sign::Minus).pow(n as u64));
    }
}

#[test]
fn fibonacci_lucas_relations() {
    for n in 0..=30u32 {
        let (f, l) = (common::fib(n), common::lucas(n));
        let sign = if n % 2 == 0 {
            Integer::from(1)
        } else {
            Integer::from(-1)
        };
        assert_eq!(
            &l * &l - Integer::from(5) * &f * &f,
            Integer::from(4) * &sign
        );
        assert_eq!(&l * &l - common::lucas(2 * n), Integer::from(2) * &sign);
        assert_eq!(common::fib(2 * n), &f * &l);
        if n >= 1 {
            assert_eq!(
                Integer::from(5) * &f,
                common::lucas(n + 1) + common::lucas(n - 1)
            );
        }
    }
}

#[test]
fn negative_indices_are_rejected() {
    let mut c = SequenceCache::new();
    assert!(c.fibonacci(-1).is_err());
    assert!(c.balancing_poly(-3).is_err());
    assert!(c.euler_number(-2).is_err());
    assert!(sequences::bernoulli_poly(-1).is_err());
}

#[test]
fn results_do_not_depend_on_cache_sharing() {
    let fresh: Vec<Poly> = (0..=20)
        .map(|n| sequences::euler_poly(n).unwrap())
        .collect();
    let shared: Vec<Poly> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..4)
            .map(|t| {
                s.spawn(move || {
                    let mut c = SequenceCache::new();
                    // Warm in a different order on each thread.
                    for n in (0..=20).rev().skip(t) {
                        c.euler_poly(n).unwrap();
                    }
                    (0..=20)
                        .map(|n| c.euler_poly(n).unwrap())
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        let all: Vec<Vec<Poly>> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for v in &all[1..] {
            assert_eq!(v, &all[0]);
        }
        all.into_iter().next().unwrap()
    });
    assert_eq!(fresh, shared);
}
