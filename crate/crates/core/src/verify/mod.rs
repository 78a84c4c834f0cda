//! Replays the reciprocity argument over ranges of primes.
//!
//! Every report stores both sides of each identity as computed values; a check
//! only passes when the two independently computed sides agree.

mod suite;

pub use suite::{
    replay_witness, run_identity, run_suite, Fault, Identity, IdentityTally, SuiteConfig,
    SuiteReport, Witness,
};

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::numtheory::{
    euler_residue_sign, legendre_euler, mod_pow, mod_pow_big, odd_primes_up_to, OddPrime, Sign,
};
use crate::poly::{gn, phi4, power_of_linear, IntPoly};
use crate::reciprocal::{reciprocant_with, trace_poly};
use crate::resultant::{barnett_tampered, resultant, ResultantMethod};

/// Integers small enough for `i64` are written as JSON numbers, anything
/// larger as a decimal string.
pub(crate) fn serialize_int<S: Serializer>(
    v: &BigInt,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match i64::try_from(v) {
        Ok(small) => s.serialize_i64(small),
        Err(_) => s.serialize_str(&v.to_string()),
    }
}

/// Resultant evaluator shared by the reports; optionally corrupts `g(C_f)`.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Engine {
    pub fault: Fault,
}

impl Engine {
    pub fn res(&self, f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
        match self.fault {
            Fault::None => resultant(f, g, ResultantMethod::Barnett),
            Fault::CorruptBarnett => barnett_tampered(f, g, corrupt),
        }
    }

    pub fn rec(&self, f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
        reciprocant_with(f, g, |a, b| self.res(a, b))
    }
}

fn corrupt(m: &mut IntMatrix) {
    if m.dim() > 0 {
        m[(0, 0)] += 1;
    }
}

/// Outcome of checking quadratic reciprocity for one pair of primes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub p: OddPrime,
    pub q: OddPrime,
    /// `Rec(g_p, g_q)`.
    #[serde(serialize_with = "serialize_int")]
    pub rec_pq: BigInt,
    /// `Rec(g_q, g_p)`.
    #[serde(serialize_with = "serialize_int")]
    pub rec_qp: BigInt,
    /// `(q/p)`.
    pub legendre_qp: Sign,
    /// `(p/q)`.
    pub legendre_pq: Sign,
    /// `Res(g_p, g_q)`.
    #[serde(rename = "res", serialize_with = "serialize_int")]
    pub res_value: BigInt,
    pub product_law_ok: bool,
    pub congruence_ok: bool,
}

impl PairReport {
    /// `(-1)^{((p-1)/2)((q-1)/2)}`.
    pub fn expected_product(&self) -> Sign {
        Sign::parity(self.p.half() * self.q.half())
    }

    pub fn rec_matches_legendre(&self) -> bool {
        self.rec_pq == self.legendre_qp.to_bigint() && self.rec_qp == self.legendre_pq.to_bigint()
    }

    pub fn res_is_one(&self) -> bool {
        self.res_value.is_one()
    }

    pub fn res_is_rec_square(&self) -> bool {
        self.res_value == &self.rec_pq * &self.rec_pq
            && self.res_value == &self.rec_qp * &self.rec_qp
    }

    pub fn passed(&self) -> bool {
        self.rec_matches_legendre()
            && self.res_is_one()
            && self.res_is_rec_square()
            && self.product_law_ok
            && self.congruence_ok
    }
}

/// Checks `Rec(g_p, g_q) = (q/p)`, `Rec(g_q, g_p) = (p/q)`, `Res(g_p, g_q) = 1`,
/// `Res = Rec^2`, the product law, and the mod-p congruence chain in both
/// directions.
pub fn verify_qr_pair(p: OddPrime, q: OddPrime) -> Result<PairReport> {
    verify_qr_pair_with(&Engine::default(), p, q)
}

pub(crate) fn verify_qr_pair_with(engine: &Engine, p: OddPrime, q: OddPrime) -> Result<PairReport> {
    if p == q {
        return Err(Error::SamePrime(p.get()));
    }
    let gp = gn(p.get())?;
    let gq = gn(q.get())?;
    let rec_pq = engine.rec(&gp, &gq)?;
    let rec_qp = engine.rec(&gq, &gp)?;
    let res_value = engine.res(&gp, &gq)?;
    let legendre_qp = legendre_euler(q.get() as i64, p)?;
    let legendre_pq = legendre_euler(p.get() as i64, q)?;

    let expected = Sign::parity(p.half() * q.half());
    let rec_product = &rec_pq * &rec_qp;
    let product_law_ok =
        legendre_pq * legendre_qp == expected && rec_product == expected.to_bigint();

    let congruence_ok = congruence_chain(engine, p, q, &rec_pq, legendre_qp)?
        && congruence_chain(engine, q, p, &rec_qp, legendre_pq)?;

    Ok(PairReport {
        p,
        q,
        rec_pq,
        rec_qp,
        legendre_qp,
        legendre_pq,
        res_value,
        product_law_ok,
        congruence_ok,
    })
}

/// Steps of
/// `Rec(g_p, g_q) = Rec((x-1)^{p-1}, g_q) = Res((x-2)^{(p-1)/2}, g_q^#)
/// = q^{(p-1)/2} = (q/p)`, each taken modulo `p` where the argument does.
fn congruence_chain(
    engine: &Engine,
    p: OddPrime,
    q: OddPrime,
    rec_pq: &BigInt,
    legendre_qp: Sign,
) -> Result<bool> {
    let modp = p.modulus();
    let one = BigInt::one();
    let gp = gn(p.get())?;
    let gq = gn(q.get())?;
    let linear_power = power_of_linear(&one, (p.get() - 1) as usize);
    let half = p.half();

    let gp_congruent = gp.reduce_mod(modp) == linear_power.reduce_mod(modp);
    let sharp_ok = trace_poly(&linear_power)? == power_of_linear(&BigInt::from(2), half as usize);
    let rec_linear = engine.rec(&linear_power, &gq)?;
    let rec_congruent = modp.reduce(rec_pq) == modp.reduce(&rec_linear);
    let power = BigInt::from(q.get()).pow(half as u32);
    let res1_ok = rec_linear == power;
    let euler = mod_pow(q.get() as i64, half, modp);
    let euler_ok = mod_pow_big(&power, 1, modp) == euler
        && euler_residue_sign(euler, p).ok() == Some(legendre_qp);

    Ok(gp_congruent && sharp_ok && rec_congruent && res1_ok && euler_ok)
}

/// All distinct pairs `p < q` of odd primes up to `max`, checked on `jobs`
/// threads. The result is sorted by `(p, q)` whatever the thread count.
pub fn verify_qr_range(max: u64, jobs: usize) -> Result<Vec<PairReport>> {
    verify_qr_range_with(&Engine::default(), max, jobs)
}

pub(crate) fn qr_pairs(max: u64) -> Vec<(OddPrime, OddPrime)> {
    let primes = odd_primes_up_to(max);
    let mut pairs = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            pairs.push((p, q));
        }
    }
    pairs
}

pub(crate) fn verify_qr_range_with(
    engine: &Engine,
    max: u64,
    jobs: usize,
) -> Result<Vec<PairReport>> {
    let pairs = qr_pairs(max);
    with_jobs(jobs, || {
        pairs
            .par_iter()
            .map(|&(p, q)| verify_qr_pair_with(engine, p, q))
            .collect()
    })
}

/// Outcome of checking the supplementary law for one prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SupplementReport {
    pub p: OddPrime,
    /// `Rec(Phi_4, g_p)`.
    #[serde(serialize_with = "serialize_int")]
    pub rec_phi4: BigInt,
    pub legendre_minus2: Sign,
    pub legendre_2: Sign,
    pub mod8_class: u8,
    /// `Rec(Phi_4, g_p) = (-2/p)` and both follow the mod-8 pattern.
    pub pattern_ok: bool,
    /// `(2/p) = (-1)^{(p^2-1)/8}`, directly and via `(-1/p)(-2/p)`.
    pub thm_b_ok: bool,
    /// `Rec(Phi_4, g_p) = Rec(Phi_4, (x-1)^{p-1}) = (-2)^{(p-1)/2} = (-2/p)`
    /// modulo `p`.
    pub congruence_ok: bool,
}

impl SupplementReport {
    pub fn passed(&self) -> bool {
        self.pattern_ok && self.thm_b_ok && self.congruence_ok
    }
}

/// `+1` for `n = 1, 3 (mod 8)`, `-1` for `n = 5, 7 (mod 8)`.
pub fn mod8_pattern(n: u64) -> Sign {
    match n % 8 {
        1 | 3 => Sign::Plus,
        _ => Sign::Minus,
    }
}

/// `(-1)^{(p^2 - 1)/8}`.
pub fn second_supplement_sign(p: OddPrime) -> Sign {
    let p = p.get() as u128;
    Sign::parity(((p * p - 1) / 8 % 2) as u64)
}

pub fn verify_supplement(p: OddPrime) -> Result<SupplementReport> {
    verify_supplement_with(&Engine::default(), p)
}

pub(crate) fn verify_supplement_with(engine: &Engine, p: OddPrime) -> Result<SupplementReport> {
    let gp = gn(p.get())?;
    let rec_phi4 = engine.rec(&phi4(), &gp)?;
    let legendre_minus2 = legendre_euler(-2, p)?;
    let legendre_2 = legendre_euler(2, p)?;
    let legendre_minus1 = legendre_euler(-1, p)?;
    let pattern = mod8_pattern(p.get());

    let pattern_ok = rec_phi4 == legendre_minus2.to_bigint() && legendre_minus2 == pattern;
    let thm_b_ok =
        legendre_2 == second_supplement_sign(p) && legendre_2 == legendre_minus1 * legendre_minus2;

    let modp = p.modulus();
    let half = p.half();
    let linear_power = power_of_linear(&BigInt::one(), (p.get() - 1) as usize);
    let rec_linear = engine.rec(&phi4(), &linear_power)?;
    let power = BigInt::from(-2).pow(half as u32);
    let euler = mod_pow(-2, half, modp);
    let congruence_ok = modp.reduce(&rec_phi4) == modp.reduce(&rec_linear)
        && rec_linear == power
        && euler_residue_sign(euler, p).ok() == Some(legendre_minus2);

    Ok(SupplementReport {
        p,
        rec_phi4,
        legendre_minus2,
        legendre_2,
        mod8_class: (p.get() % 8) as u8,
        pattern_ok,
        thm_b_ok,
        congruence_ok,
    })
}

pub fn verify_supplement_range(max: u64, jobs: usize) -> Result<Vec<SupplementReport>> {
    verify_supplement_range_with(&Engine::default(), max, jobs)
}

pub(crate) fn verify_supplement_range_with(
    engine: &Engine,
    max: u64,
    jobs: usize,
) -> Result<Vec<SupplementReport>> {
    let primes = odd_primes_up_to(max);
    with_jobs(jobs, || {
        primes
            .par_iter()
            .map(|&p| verify_supplement_with(engine, p))
            .collect()
    })
}

/// Primes `p <= max` for which `(2/p)` from Euler's criterion differs from
/// `(-1)^{(p^2-1)/8}`.
pub fn second_supplement_failures(max: u64) -> Result<Vec<OddPrime>> {
    let mut bad = Vec::new();
    for p in odd_primes_up_to(max) {
        if legendre_euler(2, p)? != second_supplement_sign(p) {
            bad.push(p);
        }
    }
    Ok(bad)
}

/// Runs `f` on a dedicated pool of `jobs` threads (at least one).
pub(crate) fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool")
        .install(f)
}
