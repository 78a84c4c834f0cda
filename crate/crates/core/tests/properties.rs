use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;

use reciprocity_core::{
    companion_matrix, det_bareiss, expand_trace, format_poly, gchain_resultant, gn, is_prime,
    legendre_bruteforce, legendre_euler, matrix_poly_eval, odd_primes_up_to, parse_poly,
    power_of_linear, reciprocant, resultant, trace_poly, IntPoly, Modulus, OddPrime,
    ResultantMethod, Sign,
};

fn poly(max_degree: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-50i64..=50, 0..=max_degree + 1).prop_map(|c| IntPoly::from_i64s(&c))
}

fn monic(max_degree: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-9i64..=9, 0..=max_degree).prop_map(|mut c| {
        c.push(1);
        IntPoly::from_i64s(&c)
    })
}

fn nonzero(max_degree: usize) -> impl Strategy<Value = IntPoly> {
    poly(max_degree).prop_filter("nonzero", |p| !p.is_zero())
}

fn odd_prime_below(max: u64) -> impl Strategy<Value = OddPrime> {
    let primes = odd_primes_up_to(max);
    prop::sample::select(primes)
}

proptest! {
    #[test]
    fn degree_is_additive(f in nonzero(8), g in nonzero(8)) {
        let fg = &f * &g;
        prop_assert_eq!(fg.degree(), Some(f.degree().unwrap() + g.degree().unwrap()));
    }

    #[test]
    fn division_identity(a in poly(12), b in monic(6).prop_filter("positive degree", |b| b.degree() != Some(0))) {
        let (q, r) = a.divrem_monic(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()));
    }

    #[test]
    fn reduction_commutes_with_products(f in poly(8), g in poly(8), n in 2u64..200) {
        let n = Modulus::new(n).unwrap();
        let lhs = (&f * &g).reduce_mod(n);
        let rhs = (&f.reduce_mod(n) * &g.reduce_mod(n)).reduce_mod(n);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn format_parse_roundtrip(f in poly(10)) {
        let text = format_poly(&f);
        let back = parse_poly(&text).unwrap();
        prop_assert_eq!(format_poly(&back), text);
        prop_assert_eq!(back, f);
    }

    #[test]
    fn companion_matrix_facts(f in monic(7)) {
        let m = f.degree().unwrap();
        let c = companion_matrix(&f).unwrap();
        let sign = Sign::parity(m as u64).to_bigint();
        prop_assert_eq!(det_bareiss(&c), sign * f.coeff(0));
        prop_assert!(matrix_poly_eval(&f, &c).is_zero());
    }

    #[test]
    fn barnett_matches_sylvester(f in monic(6), g in monic(6)) {
        prop_assert_eq!(
            resultant(&f, &g, ResultantMethod::Barnett).unwrap(),
            resultant(&f, &g, ResultantMethod::Sylvester).unwrap()
        );
    }

    #[test]
    fn resultant_is_multiplicative(f in monic(4), g in monic(4), h in monic(4)) {
        let lhs = resultant(&f, &(&g * &h), ResultantMethod::Barnett).unwrap();
        let rhs = resultant(&f, &g, ResultantMethod::Barnett).unwrap()
            * resultant(&f, &h, ResultantMethod::Barnett).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reciprocant_squares_to_resultant(hf in monic(4), hg in monic(4)) {
        let f = expand_trace(&hf, hf.degree().unwrap()).unwrap();
        let g = expand_trace(&hg, hg.degree().unwrap()).unwrap();
        prop_assert_eq!(trace_poly(&f).unwrap(), hf);
        let rec = reciprocant(&f, &g).unwrap();
        prop_assert_eq!(resultant(&f, &g, ResultantMethod::Barnett).unwrap(), &rec * &rec);
    }

    #[test]
    fn legendre_is_multiplicative(a in -500i64..500, b in -500i64..500, p in odd_prime_below(200)) {
        let n = p.get() as i64;
        prop_assume!(a % n != 0 && b % n != 0);
        let ab = legendre_euler(a * b, p).unwrap();
        prop_assert_eq!(ab, legendre_euler(a, p).unwrap() * legendre_euler(b, p).unwrap());
    }

    #[test]
    fn g_chain_is_short(m in 1u64..200, n in 1u64..200) {
        prop_assume!(m.gcd(&n) == 1);
        let (value, chain) = gchain_resultant(m, n).unwrap();
        prop_assert!(value.is_one());
        let fib_bound = (1..).take_while(|&k| fib(k) <= m.max(n)).count();
        prop_assert!(chain.len() <= fib_bound, "{} steps for ({m},{n})", chain.len());
    }
}

fn fib(k: u32) -> u64 {
    let (mut a, mut b) = (1u64, 1u64);
    for _ in 1..k {
        (a, b) = (b, a + b);
    }
    a
}

#[test]
fn gn_basic_facts() {
    let x_minus_1 = IntPoly::from_i64s(&[-1, 1]);
    for n in 1..=1000u64 {
        let g = gn(n).unwrap();
        assert_eq!(g.eval(&BigInt::one()), BigInt::from(n));
        let lhs = &g * &x_minus_1;
        let rhs = &IntPoly::monomial(BigInt::one(), n as usize) - &IntPoly::one();
        assert_eq!(lhs, rhs, "n = {n}");
    }
}

#[test]
fn gp_is_a_binomial_power_mod_p() {
    for p in odd_primes_up_to(97) {
        let m = p.modulus();
        let lhs = gn(p.get()).unwrap().reduce_mod(m);
        let rhs = power_of_linear(&BigInt::one(), p.get() as usize - 1).reduce_mod(m);
        assert_eq!(lhs, rhs, "p = {p}");
    }
}

#[test]
fn first_supplement() {
    for p in odd_primes_up_to(10_000) {
        assert_eq!(
            legendre_euler(-1, p).unwrap(),
            Sign::parity(p.half()),
            "p = {p}"
        );
    }
}

#[test]
fn euler_matches_bruteforce() {
    for p in odd_primes_up_to(200) {
        for a in -(p.get() as i64)..=2 * p.get() as i64 {
            if a.rem_euclid(p.get() as i64) == 0 {
                continue;
            }
            assert_eq!(
                legendre_euler(a, p).unwrap(),
                legendre_bruteforce(a, p).unwrap()
            );
        }
    }
}

#[test]
fn g_grid() {
    for n in 1..=40u64 {
        for m in 1..n {
            let r = resultant(&gn(m).unwrap(), &gn(n).unwrap(), ResultantMethod::Barnett).unwrap();
            let expected = if m.gcd(&n) == 1 {
                BigInt::one()
            } else {
                BigInt::zero()
            };
            assert_eq!(r, expected, "m = {m}, n = {n}");
        }
    }
}

#[test]
fn primes_by_trial_division() {
    for n in 0..5000u64 {
        let trial = n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
        assert_eq!(is_prime(n), trial, "{n}");
    }
}
