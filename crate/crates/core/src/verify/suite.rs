use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{
    mod8_pattern, qr_pairs, verify_qr_pair_with, verify_supplement_with, with_jobs, Engine,
};
use super::{PairReport, SupplementReport};
use crate::error::{Error, Result};
use crate::linalg::det_bareiss;
use crate::numtheory::{legendre_bruteforce, legendre_euler, odd_primes_up_to, OddPrime, Sign};
use crate::poly::{gn, power_of_linear, IntPoly, Modulus};
use crate::reciprocal::{
    expand_trace, gn_sharp, hn_poly, is_reciprocal, lucas_h, trace_poly, GnSharpSeq,
};
use crate::resultant::{barnett_matrix, gchain_resultant, resultant, ResultantMethod};

/// Deliberate corruption of the resultant computation, for checking that the
/// suite notices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fault {
    #[default]
    None,
    /// Adds one to the top-left entry of `g(C_f)` before taking determinants.
    CorruptBarnett,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub trials: usize,
    pub degree_cap: usize,
    pub coeff_cap: i64,
    pub prime_cap: u64,
    pub fault: Fault,
    /// Worker threads; never affects the report.
    #[serde(skip)]
    pub jobs: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 42,
            trials: 200,
            degree_cap: 8,
            coeff_cap: 9,
            prime_cap: 97,
            fault: Fault::None,
            jobs: 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    /// `Res(f, g) = prod g(alpha_i)` for `f` split over the integers.
    Res1,
    /// `Res(g, f) = (-1)^{deg f deg g} Res(f, g)`.
    Res2,
    /// Reduction modulo `n` commutes with the resultant.
    Res3,
    /// `Res(f, f q + r) = Res(f, r)`.
    Res4,
    BarnettSylvester,
    ResRecSquare,
    TraceRoundtrip,
    /// Trace of `prod (x - a)(x - 1/a)` for `a = +-1`.
    ProductFormula,
    /// The same over `Z/p` with random units.
    ProductFormulaModP,
    HnIdentity,
    GnSharpSum,
    LucasRelation,
    GnSharpTrace,
    GnSharpValues,
    RecModN,
    RecModConcrete,
    GGrid,
    GChain,
    EulerCriterion,
    QrPairs,
    Supplement,
}

impl Identity {
    pub const ALL: [Identity; 21] = [
        Identity::Res1,
        Identity::Res2,
        Identity::Res3,
        Identity::Res4,
        Identity::BarnettSylvester,
        Identity::ResRecSquare,
        Identity::TraceRoundtrip,
        Identity::ProductFormula,
        Identity::ProductFormulaModP,
        Identity::HnIdentity,
        Identity::GnSharpSum,
        Identity::LucasRelation,
        Identity::GnSharpTrace,
        Identity::GnSharpValues,
        Identity::RecModN,
        Identity::RecModConcrete,
        Identity::GGrid,
        Identity::GChain,
        Identity::EulerCriterion,
        Identity::QrPairs,
        Identity::Supplement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Res1 => "res1",
            Identity::Res2 => "res2",
            Identity::Res3 => "res3",
            Identity::Res4 => "res4",
            Identity::BarnettSylvester => "barnett_sylvester",
            Identity::ResRecSquare => "res_rec_square",
            Identity::TraceRoundtrip => "trace_roundtrip",
            Identity::ProductFormula => "product_formula",
            Identity::ProductFormulaModP => "product_formula_mod_p",
            Identity::HnIdentity => "hn_identity",
            Identity::GnSharpSum => "gn_sharp_sum",
            Identity::LucasRelation => "lucas_relation",
            Identity::GnSharpTrace => "gn_sharp_trace",
            Identity::GnSharpValues => "gn_sharp_values",
            Identity::RecModN => "rec_mod_n",
            Identity::RecModConcrete => "rec_mod_concrete",
            Identity::GGrid => "g_grid",
            Identity::GChain => "g_chain",
            Identity::EulerCriterion => "euler_criterion",
            Identity::QrPairs => "qr_pairs",
            Identity::Supplement => "supplement",
        }
    }

    fn is_randomized(self) -> bool {
        matches!(
            self,
            Identity::Res1
                | Identity::Res2
                | Identity::Res3
                | Identity::Res4
                | Identity::BarnettSylvester
                | Identity::ResRecSquare
                | Identity::TraceRoundtrip
                | Identity::ProductFormula
                | Identity::ProductFormulaModP
                | Identity::RecModN
        )
    }
}

pub const HN_MAX: usize = 20;
pub const LUCAS_MAX: usize = 41;
pub const GN_TRACE_MAX: u64 = 99;
pub const GN_VALUES_MAX: u64 = 999;
pub const G_GRID_MAX: u64 = 40;
pub const EULER_PRIME_MAX: u64 = 200;
pub const RES3_MODULI: [u64; 5] = [2, 3, 7, 12, 97];
const REC_MOD_N_MAX: u64 = 50;
const PRODUCT_PRIMES: [u64; 6] = [3, 5, 7, 11, 13, 97];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub identity: Identity,
    pub index: usize,
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityTally {
    pub identity: Identity,
    pub checked: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub identities: Vec<IdentityTally>,
    pub witnesses: Vec<Witness>,
    pub pairs: Vec<PairReport>,
    pub supplement: Vec<SupplementReport>,
    pub all_passed: bool,
}

impl SuiteReport {
    pub fn tally(&self, identity: Identity) -> Option<&IdentityTally> {
        self.identities.iter().find(|t| t.identity == identity)
    }
}

struct Outcome {
    pass: bool,
    inputs: String,
    lhs: String,
    rhs: String,
    detail: Detail,
}

enum Detail {
    None,
    Pair(PairReport),
    Supplement(SupplementReport),
}

impl Outcome {
    fn compare(inputs: String, lhs: impl ToString, rhs: impl ToString) -> Outcome {
        let (lhs, rhs) = (lhs.to_string(), rhs.to_string());
        Outcome {
            pass: lhs == rhs,
            inputs,
            lhs,
            rhs,
            detail: Detail::None,
        }
    }

    fn error(inputs: String, e: Error) -> Outcome {
        Outcome {
            pass: false,
            inputs,
            lhs: format!("error: {e}"),
            rhs: String::new(),
            detail: Detail::None,
        }
    }
}

struct Ctx {
    config: SuiteConfig,
    engine: Engine,
    gn_sharp: OnceLock<Vec<IntPoly>>,
    g_grid: Vec<(u64, u64)>,
    coprime: Vec<(u64, u64)>,
    pairs: Vec<(OddPrime, OddPrime)>,
    primes: Vec<OddPrime>,
    euler_primes: Vec<OddPrime>,
}

impl Ctx {
    fn new(config: &SuiteConfig) -> Self {
        let g_grid: Vec<(u64, u64)> = (1..=G_GRID_MAX)
            .flat_map(|n| (1..n).map(move |m| (m, n)))
            .collect();
        let coprime = g_grid
            .iter()
            .copied()
            .filter(|&(m, n)| m.gcd(&n) == 1)
            .collect();
        Ctx {
            config: config.clone(),
            engine: Engine {
                fault: config.fault,
            },
            gn_sharp: OnceLock::new(),
            g_grid,
            coprime,
            pairs: qr_pairs(config.prime_cap),
            primes: odd_primes_up_to(config.prime_cap),
            euler_primes: odd_primes_up_to(EULER_PRIME_MAX),
        }
    }

    fn count(&self, id: Identity) -> usize {
        match id {
            _ if id.is_randomized() => self.config.trials,
            Identity::HnIdentity | Identity::GnSharpSum => HN_MAX + 1,
            Identity::LucasRelation => LUCAS_MAX.div_ceil(2),
            Identity::GnSharpTrace => GN_TRACE_MAX.div_ceil(2) as usize,
            Identity::GnSharpValues => GN_VALUES_MAX.div_ceil(2) as usize,
            Identity::RecModConcrete => 1,
            Identity::GGrid => self.g_grid.len(),
            Identity::GChain => self.coprime.len(),
            Identity::EulerCriterion => self.euler_primes.len(),
            Identity::QrPairs => self.pairs.len(),
            Identity::Supplement => self.primes.len(),
            _ => unreachable!("randomized identities handled above"),
        }
    }

    fn gn_sharp_table(&self) -> &[IntPoly] {
        self.gn_sharp.get_or_init(|| {
            GnSharpSeq::new()
                .take(GN_VALUES_MAX.div_ceil(2) as usize)
                .collect()
        })
    }

    fn rng(&self, id: Identity, index: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.config.seed);
        rng.set_stream(((id as u64) << 40) | index as u64);
        rng
    }

    fn check(&self, id: Identity, index: usize) -> Outcome {
        let mut rng = self.rng(id, index);
        let gen = Gen {
            rng: &mut rng,
            degree_cap: self.config.degree_cap,
            coeff_cap: self.config.coeff_cap,
        };
        let mut inputs = String::new();
        match self.check_inner(id, index, gen, &mut inputs) {
            Ok(o) => o,
            Err(e) => Outcome::error(inputs, e),
        }
    }

    fn check_inner(
        &self,
        id: Identity,
        index: usize,
        mut gen: Gen<'_>,
        inputs: &mut String,
    ) -> Result<Outcome> {
        let e = &self.engine;
        let out = match id {
            Identity::Res1 => {
                let k = gen.degree(0);
                let roots: Vec<BigInt> = (0..k).map(|_| gen.coeff()).collect();
                let f = roots
                    .iter()
                    .fold(IntPoly::one(), |acc, a| &acc * &power_of_linear(a, 1));
                let g = gen.any_monic(0);
                *inputs = format!("roots={roots:?} g={g}");
                let rhs: BigInt = roots.iter().map(|a| g.eval(a)).product();
                Outcome::compare(inputs.clone(), e.res(&f, &g)?, rhs)
            }
            Identity::Res2 => {
                let f = gen.any_monic(0);
                let g = gen.any_monic(0);
                *inputs = format!("f={f} g={g}");
                let sign = Sign::parity((f.degree_checked()? * g.degree_checked()?) as u64);
                let rhs = sign.to_bigint() * e.res(&f, &g)?;
                Outcome::compare(inputs.clone(), e.res(&g, &f)?, rhs)
            }
            Identity::Res3 => {
                let f = gen.any_monic(0);
                let g = gen.any_monic(0);
                *inputs = format!("f={f} g={g}");
                let res = e.res(&f, &g)?;
                let mut lhs = Vec::new();
                let mut rhs = Vec::new();
                for n in RES3_MODULI {
                    let n = Modulus::new(n)?;
                    lhs.push(n.reduce(&res));
                    let reduced = barnett_matrix(&f.reduce_mod(n), &g.reduce_mod(n))?.reduce_mod(n);
                    rhs.push(n.reduce(&det_bareiss(&reduced)));
                }
                Outcome::compare(inputs.clone(), format!("{lhs:?}"), format!("{rhs:?}"))
            }
            Identity::Res4 => {
                let f = gen.any_monic(1);
                let q = gen.any_monic(0);
                let df = f.degree_checked()?;
                let dr = gen.rng.random_range(0..df);
                let r = gen.monic(dr);
                let g = &(&f * &q) + &r;
                *inputs = format!("f={f} q={q} r={r}");
                Outcome::compare(inputs.clone(), e.res(&f, &g)?, e.res(&f, &r)?)
            }
            Identity::BarnettSylvester => {
                let f = gen.any_monic(0);
                let g = gen.any_monic(0);
                *inputs = format!("f={f} g={g}");
                let rhs = resultant(&f, &g, ResultantMethod::Sylvester)?;
                Outcome::compare(inputs.clone(), e.res(&f, &g)?, rhs)
            }
            Identity::ResRecSquare => {
                let hf = gen.any_monic(0);
                let hg = gen.any_monic(0);
                let f = expand_trace(&hf, hf.degree_checked()?)?;
                let g = expand_trace(&hg, hg.degree_checked()?)?;
                *inputs = format!("f={f} g={g}");
                let rec = e.rec(&f, &g)?;
                Outcome::compare(inputs.clone(), e.res(&f, &g)?, &rec * &rec)
            }
            Identity::TraceRoundtrip => {
                let h = gen.any_monic(0);
                let m = h.degree_checked()?;
                let g = expand_trace(&h, m)?;
                *inputs = format!("h={h}");
                let back = trace_poly(&g)?;
                let again = expand_trace(&back, m)?;
                Outcome::compare(
                    inputs.clone(),
                    format!("{back}; {again}"),
                    format!("{h}; {g}"),
                )
            }
            Identity::ProductFormula => {
                let m = gen.degree(0);
                let alphas: Vec<i64> = (0..m)
                    .map(|_| if gen.rng.random_bool(0.5) { 1 } else { -1 })
                    .collect();
                *inputs = format!("alphas={alphas:?}");
                let mut g = IntPoly::one();
                let mut expected = IntPoly::one();
                for &a in &alphas {
                    let a = BigInt::from(a);
                    // a = 1/a for a unit of order two
                    g = &g * &(&power_of_linear(&a, 1) * &power_of_linear(&a, 1));
                    expected = &expected * &power_of_linear(&(&a + &a), 1);
                }
                if !is_reciprocal(&g)? {
                    return Err(Error::NotReciprocal(g.to_string()));
                }
                Outcome::compare(inputs.clone(), trace_poly(&g)?, expected)
            }
            Identity::ProductFormulaModP => {
                let p = PRODUCT_PRIMES[gen.rng.random_range(0..PRODUCT_PRIMES.len())];
                let modulus = Modulus::new(p)?;
                let m = gen.rng.random_range(1..=gen.degree_cap.max(1));
                let alphas: Vec<u64> = (0..m).map(|_| gen.rng.random_range(1..p)).collect();
                *inputs = format!("p={p} alphas={alphas:?}");
                let mut g = IntPoly::one();
                let mut expected = IntPoly::one();
                for &a in &alphas {
                    let inv = BigInt::from(a).modpow(&BigInt::from(p - 2), &BigInt::from(p));
                    let a = BigInt::from(a);
                    g = &g * &(&power_of_linear(&a, 1) * &power_of_linear(&inv, 1));
                    expected = &expected * &power_of_linear(&(&a + &inv), 1);
                }
                let g = g.reduce_mod(modulus);
                let lhs = trace_poly(&g)?.reduce_mod(modulus);
                Outcome::compare(inputs.clone(), lhs, expected.reduce_mod(modulus))
            }
            Identity::HnIdentity => {
                let n = index;
                *inputs = format!("n={n}");
                let lhs = expand_trace(&hn_poly(n), n)?;
                let rhs = &IntPoly::monomial(BigInt::one(), 2 * n) + &IntPoly::one();
                Outcome::compare(inputs.clone(), lhs, rhs)
            }
            Identity::GnSharpSum => {
                let n = index;
                *inputs = format!("n={n}");
                let rhs = (1..=n).fold(IntPoly::one(), |acc, k| &acc + &hn_poly(k));
                Outcome::compare(inputs.clone(), gn_sharp(2 * n as u64 + 1)?, rhs)
            }
            Identity::LucasRelation => {
                let n = 2 * index + 1;
                *inputs = format!("n={n}");
                let shifted = lucas_h(n)?.compose(&IntPoly::from_i64s(&[-2, 1]));
                Outcome::compare(inputs.clone(), shifted, gn_sharp(n as u64)?)
            }
            Identity::GnSharpTrace => {
                let n = 2 * index as u64 + 1;
                *inputs = format!("n={n}");
                Outcome::compare(inputs.clone(), gn_sharp(n)?, trace_poly(&gn(n)?)?)
            }
            Identity::GnSharpValues => {
                let n = 2 * index as u64 + 1;
                *inputs = format!("n={n}");
                let sharp = &self.gn_sharp_table()[index];
                let lhs = format!(
                    "{}, {}",
                    sharp.eval(&BigInt::from(2)),
                    sharp.eval(&BigInt::zero())
                );
                let rhs = format!("{}, {}", n, mod8_pattern(n));
                Outcome::compare(inputs.clone(), lhs, rhs)
            }
            Identity::RecModN => {
                let n = gen.rng.random_range(2..=REC_MOD_N_MAX);
                let modulus = Modulus::new(n)?;
                let m = gen.degree(1);
                let h1 = gen.monic(m);
                let g1 = expand_trace(&h1, m)?;
                let dp = gen.rng.random_range(0..m);
                let perturb_sharp = gen.poly(dp);
                let perturb = expand_trace(&perturb_sharp, m)?;
                let g2 = &g1 + &perturb.scale(&BigInt::from(n));
                let hh = gen.any_monic(0);
                let h = expand_trace(&hh, hh.degree_checked()?)?;
                *inputs = format!("n={n} g1={g1} g2={g2} h={h}");
                let lhs = [e.rec(&g1, &h)?, e.rec(&h, &g1)?].map(|v| modulus.reduce(&v));
                let rhs = [e.rec(&g2, &h)?, e.rec(&h, &g2)?].map(|v| modulus.reduce(&v));
                Outcome::compare(inputs.clone(), format!("{lhs:?}"), format!("{rhs:?}"))
            }
            Identity::RecModConcrete => {
                let seven = Modulus::new(7)?;
                *inputs = "Rec(g_7, g_5) vs Rec((x-1)^6, g_5) mod 7".into();
                let lhs = e.rec(&gn(7)?, &gn(5)?)?;
                let rhs = e.rec(&power_of_linear(&BigInt::one(), 6), &gn(5)?)?;
                Outcome::compare(inputs.clone(), seven.reduce(&lhs), seven.reduce(&rhs))
            }
            Identity::GGrid => {
                let (m, n) = self.g_grid[index];
                *inputs = format!("m={m} n={n}");
                let expected = if m.gcd(&n) == 1 { 1 } else { 0 };
                Outcome::compare(inputs.clone(), e.res(&gn(m)?, &gn(n)?)?, expected)
            }
            Identity::GChain => {
                let (m, n) = self.coprime[index];
                *inputs = format!("m={m} n={n}");
                let (value, chain) = gchain_resultant(m, n)?;
                let within = chain.len() <= euclid_steps(m, n);
                let lhs = format!("{value} {}", if within { "bounded" } else { "too long" });
                Outcome::compare(
                    inputs.clone(),
                    lhs,
                    format!("{} bounded", e.res(&gn(m)?, &gn(n)?)?),
                )
            }
            Identity::EulerCriterion => {
                let p = self.euler_primes[index];
                *inputs = format!("p={p}");
                let mut lhs = Vec::new();
                let mut rhs = Vec::new();
                for a in 1..p.get() as i64 {
                    lhs.push(legendre_euler(a, p)?.value());
                    rhs.push(legendre_bruteforce(a, p)?.value());
                }
                Outcome::compare(inputs.clone(), format!("{lhs:?}"), format!("{rhs:?}"))
            }
            Identity::QrPairs => {
                let (p, q) = self.pairs[index];
                *inputs = format!("p={p} q={q}");
                let r = verify_qr_pair_with(e, p, q)?;
                Outcome {
                    pass: r.passed(),
                    inputs: inputs.clone(),
                    lhs: format!(
                        "rec_pq={} rec_qp={} res={} product_law_ok={} congruence_ok={}",
                        r.rec_pq, r.rec_qp, r.res_value, r.product_law_ok, r.congruence_ok
                    ),
                    rhs: format!(
                        "legendre_qp={} legendre_pq={} res=1 expected_product={}",
                        r.legendre_qp,
                        r.legendre_pq,
                        r.expected_product()
                    ),
                    detail: Detail::Pair(r),
                }
            }
            Identity::Supplement => {
                let p = self.primes[index];
                *inputs = format!("p={p}");
                let r = verify_supplement_with(e, p)?;
                Outcome {
                    pass: r.passed(),
                    inputs: inputs.clone(),
                    lhs: format!(
                        "rec_phi4={} legendre_2={} pattern_ok={} thm_b_ok={} congruence_ok={}",
                        r.rec_phi4, r.legendre_2, r.pattern_ok, r.thm_b_ok, r.congruence_ok
                    ),
                    rhs: format!(
                        "legendre_minus2={} mod8={}",
                        r.legendre_minus2, r.mod8_class
                    ),
                    detail: Detail::Supplement(r),
                }
            }
        };
        Ok(out)
    }
}

struct Gen<'a> {
    rng: &'a mut ChaCha8Rng,
    degree_cap: usize,
    coeff_cap: i64,
}

impl Gen<'_> {
    fn degree(&mut self, min: usize) -> usize {
        self.rng.random_range(min..=self.degree_cap.max(min))
    }

    fn coeff(&mut self) -> BigInt {
        BigInt::from(self.rng.random_range(-self.coeff_cap..=self.coeff_cap))
    }

    fn monic(&mut self, degree: usize) -> IntPoly {
        let mut coeffs: Vec<BigInt> = (0..degree).map(|_| self.coeff()).collect();
        coeffs.push(BigInt::one());
        IntPoly::new(coeffs)
    }

    fn any_monic(&mut self, min_degree: usize) -> IntPoly {
        let d = self.degree(min_degree);
        self.monic(d)
    }

    /// Not necessarily monic, degree at most `degree`.
    fn poly(&mut self, degree: usize) -> IntPoly {
        IntPoly::new((0..=degree).map(|_| self.coeff()).collect())
    }
}

fn euclid_steps(mut m: u64, mut n: u64) -> usize {
    let mut steps = 0;
    while m != 0 {
        (m, n) = (n % m, m);
        steps += 1;
    }
    steps
}

fn witness(id: Identity, index: usize, o: &Outcome) -> Witness {
    Witness {
        identity: id,
        index,
        inputs: o.inputs.clone(),
        lhs: o.lhs.clone(),
        rhs: o.rhs.clone(),
    }
}

fn run_on(ctx: &Ctx, id: Identity, count: usize) -> Vec<Outcome> {
    (0..count)
        .into_par_iter()
        .map(|i| ctx.check(id, i))
        .collect()
}

fn tally(id: Identity, outcomes: &[Outcome]) -> (IdentityTally, Vec<Witness>) {
    let witnesses: Vec<Witness> = outcomes
        .iter()
        .enumerate()
        .filter(|(_, o)| !o.pass)
        .map(|(i, o)| witness(id, i, o))
        .collect();
    let t = IdentityTally {
        identity: id,
        checked: outcomes.len(),
        passed: outcomes.len() - witnesses.len(),
        failed: witnesses.len(),
    };
    (t, witnesses)
}

fn validate(config: &SuiteConfig) -> Result<()> {
    if config.trials == 0 {
        return Err(Error::Precondition("trials must be at least 1".into()));
    }
    if config.coeff_cap < 0 {
        return Err(Error::Precondition("coeff_cap must be nonnegative".into()));
    }
    Ok(())
}

/// Runs every identity check with the configured seed and caps.
///
/// Trial `i` of identity `id` draws from its own ChaCha stream, so the report
/// does not depend on the number of worker threads.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    validate(config)?;
    let ctx = Ctx::new(config);
    let per_identity: Vec<(Identity, Vec<Outcome>)> = with_jobs(config.jobs, || {
        Identity::ALL
            .iter()
            .map(|&id| (id, run_on(&ctx, id, ctx.count(id))))
            .collect()
    });

    let mut identities = Vec::new();
    let mut witnesses = Vec::new();
    let mut pairs = Vec::new();
    let mut supplement = Vec::new();
    for (id, outcomes) in per_identity {
        let (t, w) = tally(id, &outcomes);
        identities.push(t);
        witnesses.extend(w);
        for o in outcomes {
            match o.detail {
                Detail::Pair(r) => pairs.push(r),
                Detail::Supplement(r) => supplement.push(r),
                Detail::None => {}
            }
        }
    }
    Ok(SuiteReport {
        config: config.clone(),
        all_passed: witnesses.is_empty(),
        identities,
        witnesses,
        pairs,
        supplement,
    })
}

/// Runs `count` instances of one identity (trial indices `0..count`).
pub fn run_identity(
    config: &SuiteConfig,
    id: Identity,
    count: usize,
) -> Result<(IdentityTally, Vec<Witness>)> {
    validate(config)?;
    let ctx = Ctx::new(config);
    let outcomes = with_jobs(config.jobs, || run_on(&ctx, id, count));
    Ok(tally(id, &outcomes))
}

/// Re-runs the check that produced `w`; returns the fresh witness if it still
/// fails.
pub fn replay_witness(config: &SuiteConfig, w: &Witness) -> Option<Witness> {
    let ctx = Ctx::new(config);
    let o = ctx.check(w.identity, w.index);
    (!o.pass).then(|| witness(w.identity, w.index, &o))
}
