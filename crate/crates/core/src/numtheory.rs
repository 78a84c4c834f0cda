//! Primality, modular powers and the Legendre symbol.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::Modulus;

/// `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// `(-1)^e`.
    pub fn parity(e: u64) -> Sign {
        if e.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn to_bigint(self) -> BigInt {
        BigInt::from(self.value())
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl TryFrom<&BigInt> for Sign {
    type Error = Error;

    fn try_from(v: &BigInt) -> Result<Sign> {
        if v.is_one() {
            Ok(Sign::Plus)
        } else if (-v).is_one() {
            Ok(Sign::Minus)
        } else {
            Err(Error::NotASign(v.to_string()))
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i64(self.value())
    }
}

/// A prime `p >= 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct OddPrime(u64);

impl OddPrime {
    pub fn new(p: u64) -> Result<Self> {
        if p.is_multiple_of(2) || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        Ok(OddPrime(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// `(p - 1) / 2`.
    pub fn half(self) -> u64 {
        (self.0 - 1) / 2
    }

    pub fn modulus(self) -> Modulus {
        Modulus::new(self.0).expect("odd prime is at least 3")
    }
}

impl fmt::Display for OddPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut e: u64, n: u64) -> u64 {
    let mut acc = 1 % n;
    base %= n;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        e >>= 1;
    }
    acc
}

/// `a^e mod n` in `[0, n)`, square-and-multiply.
pub fn mod_pow(a: i64, e: u64, n: Modulus) -> u64 {
    let n = n.get();
    let base = (a as i128).rem_euclid(n as i128) as u64;
    pow_mod_u64(base, e, n)
}

/// Same as [`mod_pow`] for an arbitrary-precision base.
pub fn mod_pow_big(a: &BigInt, e: u64, n: Modulus) -> u64 {
    let r = n.reduce(a);
    let base = u64::try_from(&r).expect("residue below a u64 modulus");
    pow_mod_u64(base, e, n.get())
}

const SMALL_PRIMES_BOUND: u64 = 1000;

// Strong-pseudoprime witnesses; the first twelve primes are a deterministic
// set for every n < 3.3 * 10^24.
const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic primality for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for d in 2..SMALL_PRIMES_BOUND.min(n) {
        if d * d > n {
            return true;
        }
        if n.is_multiple_of(d) {
            return false;
        }
    }
    if n < SMALL_PRIMES_BOUND {
        return true;
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Odd primes `3 <= p <= max`, ascending.
pub fn odd_primes_up_to(max: u64) -> Vec<OddPrime> {
    (3..=max)
        .step_by(2)
        .filter(|&p| is_prime(p))
        .map(OddPrime)
        .collect()
}

fn require_unit(a: i64, p: OddPrime) -> Result<()> {
    if (a as i128).rem_euclid(p.get() as i128) == 0 {
        return Err(Error::DivisibleByPrime { a, p: p.get() });
    }
    Ok(())
}

/// Legendre symbol by Euler's criterion: `a^((p-1)/2) mod p`.
pub fn legendre_euler(a: i64, p: OddPrime) -> Result<Sign> {
    require_unit(a, p)?;
    euler_residue_sign(mod_pow(a, p.half(), p.modulus()), p)
}

/// Interprets `a^((p-1)/2) mod p` as a sign.
pub fn euler_residue_sign(residue: u64, p: OddPrime) -> Result<Sign> {
    match residue {
        1 => Ok(Sign::Plus),
        r if r == p.get() - 1 => Ok(Sign::Minus),
        r => Err(Error::EulerResidue {
            residue: r,
            p: p.get(),
        }),
    }
}

/// Legendre symbol straight from the definition: search for a square root.
pub fn legendre_bruteforce(a: i64, p: OddPrime) -> Result<Sign> {
    require_unit(a, p)?;
    let n = p.get();
    let target = (a as i128).rem_euclid(n as i128) as u64;
    if (1..n).any(|x| mul_mod(x, x, n) == target) {
        Ok(Sign::Plus)
    } else {
        Ok(Sign::Minus)
    }
}

/// Sign of `r` when `r` is `+1` or `-1`.
pub fn sign_of(r: &BigInt) -> Option<Sign> {
    if r.abs().is_one() {
        Sign::try_from(r).ok()
    } else {
        None
    }
}
