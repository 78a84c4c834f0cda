//! Reciprocal polynomials and their trace polynomials.
//!
//! A reciprocal `g` of degree `2m` has a unique trace polynomial `g^#` of
//! degree `m` with `g(x) = x^m g^#(x + 1/x)`. The reciprocant of two monic
//! reciprocal polynomials of even degree is `Rec(f, g) = Res(f^#, g^#)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::resultant::{resultant, ResultantMethod};

/// A reciprocal polynomial together with its trace polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TracePair {
    pub g: IntPoly,
    pub sharp: IntPoly,
}

impl TracePair {
    pub fn from_reciprocal(g: IntPoly) -> Result<Self> {
        let sharp = trace_poly(&g)?;
        Ok(TracePair { g, sharp })
    }

    pub fn from_trace(sharp: IntPoly) -> Result<Self> {
        let m = sharp.degree_checked()?;
        let g = expand_trace(&sharp, m)?;
        Ok(TracePair { g, sharp })
    }
}

/// Palindromic coefficients: `a_k = a_{n-k}`.
pub fn is_reciprocal(g: &IntPoly) -> Result<bool> {
    g.degree_checked()?;
    Ok(g.is_palindromic())
}

/// Binomial row `C(k, 0), ..., C(k, k)`.
fn binomial_row(k: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(k + 1);
    let mut c = BigInt::one();
    for i in 0..=k {
        row.push(c.clone());
        c = c * BigInt::from(k - i) / BigInt::from(i + 1);
    }
    row
}

/// The trace polynomial `g^#`.
///
/// Peels the outer layer at each step: with `a_0` the current constant term,
/// `(g - a_0 (1 + x^2)^k) / x` is palindromic of length `2k - 1`, and `a_0`
/// becomes the `x^k` coefficient of the result.
pub fn trace_poly(g: &IntPoly) -> Result<IntPoly> {
    let deg = g.degree_checked()?;
    if deg % 2 == 1 {
        return Err(Error::OddDegree(g.to_string()));
    }
    if !g.is_palindromic() {
        return Err(Error::NotReciprocal(g.to_string()));
    }
    let m = deg / 2;
    let mut cur: Vec<BigInt> = g.coeffs().to_vec();
    let mut sharp = vec![BigInt::zero(); m + 1];
    for k in (0..=m).rev() {
        debug_assert_eq!(cur.len(), 2 * k + 1);
        let a0 = cur[0].clone();
        if k == 0 {
            sharp[0] = a0;
            break;
        }
        if !a0.is_zero() {
            for (i, c) in binomial_row(k).iter().enumerate() {
                cur[2 * i] -= &a0 * c;
            }
        }
        debug_assert!(cur[0].is_zero() && cur[2 * k].is_zero());
        cur.pop();
        cur.remove(0);
        sharp[k] = a0;
    }
    Ok(IntPoly::new(sharp))
}

/// `x^m h(x + 1/x)` as a polynomial: `sum_k b_k x^{m-k} (x^2 + 1)^k`.
pub fn expand_trace(h: &IntPoly, m: usize) -> Result<IntPoly> {
    if let Some(d) = h.degree() {
        if d > m {
            return Err(Error::DegreeTooLarge {
                degree: d,
                bound: m,
            });
        }
    }
    let mut out = vec![BigInt::zero(); 2 * m + 1];
    for (k, b) in h.coeffs().iter().enumerate() {
        if b.is_zero() {
            continue;
        }
        for (i, c) in binomial_row(k).iter().enumerate() {
            out[m - k + 2 * i] += b * c;
        }
    }
    Ok(IntPoly::new(out))
}

/// `h_n` with `x^n + x^{-n} = h_n(x + 1/x)`: `h_0 = 2`, `h_1 = x`,
/// `h_n = x h_{n-1} - h_{n-2}`.
pub fn hn_poly(n: usize) -> IntPoly {
    second_order(n, IntPoly::from_i64s(&[2]), IntPoly::x(), false)
}

/// Lucas polynomials: `L_0 = 2`, `L_1 = x`, `L_n = x L_{n-1} + L_{n-2}`.
pub fn lucas_poly(n: usize) -> IntPoly {
    second_order(n, IntPoly::from_i64s(&[2]), IntPoly::x(), true)
}

fn second_order(n: usize, p0: IntPoly, p1: IntPoly, plus: bool) -> IntPoly {
    if n == 0 {
        return p0;
    }
    let (mut prev, mut cur) = (p0, p1);
    for _ in 1..n {
        let shifted = cur.shift(1);
        let next = if plus {
            &shifted + &prev
        } else {
            &shifted - &prev
        };
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Iterator over `g_1^#, g_3^#, g_5^#, ...` via
/// `g_n^# = x g_{n-2}^# - g_{n-4}^#`, seeded with `1` and `x + 1`.
#[derive(Debug, Clone)]
pub struct GnSharpSeq {
    prev: Option<IntPoly>,
    cur: IntPoly,
}

impl Default for GnSharpSeq {
    fn default() -> Self {
        Self::new()
    }
}

impl GnSharpSeq {
    pub fn new() -> Self {
        GnSharpSeq {
            prev: None,
            cur: IntPoly::one(),
        }
    }
}

impl Iterator for GnSharpSeq {
    type Item = IntPoly;

    fn next(&mut self) -> Option<IntPoly> {
        let next = match &self.prev {
            None => IntPoly::from_i64s(&[1, 1]),
            Some(p) => &self.cur.shift(1) - p,
        };
        let out = std::mem::replace(&mut self.cur, next);
        self.prev = Some(out.clone());
        Some(out)
    }
}

/// `g_n^#` for odd `n`, by the three-term recursion.
pub fn gn_sharp(n: u64) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::ZeroIndex);
    }
    if n.is_multiple_of(2) {
        return Err(Error::EvenIndex(n));
    }
    Ok(GnSharpSeq::new()
        .nth((n / 2) as usize)
        .expect("sequence is infinite"))
}

/// `H_n` for odd `n`, defined by `L_n(x) = x H_n(x^2)`.
pub fn lucas_h(n: usize) -> Result<IntPoly> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenIndex(n as u64));
    }
    let l = lucas_poly(n);
    let (odd, even): (Vec<_>, Vec<_>) =
        l.coeffs().iter().enumerate().partition(|(k, _)| k % 2 == 1);
    if even.iter().any(|(_, c)| !c.is_zero()) {
        return Err(Error::Precondition(format!(
            "L_{n} = {l} has even-degree terms"
        )));
    }
    Ok(IntPoly::new(
        odd.into_iter().map(|(_, c)| c.clone()).collect(),
    ))
}

/// `Rec(f, g) = Res(f^#, g^#)`.
pub fn reciprocant(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    reciprocant_with(f, g, |a, b| resultant(a, b, ResultantMethod::Barnett))
}

pub(crate) fn reciprocant_with(
    f: &IntPoly,
    g: &IntPoly,
    res: impl FnOnce(&IntPoly, &IntPoly) -> Result<BigInt>,
) -> Result<BigInt> {
    f.require_monic()?;
    g.require_monic()?;
    res(&trace_poly(f)?, &trace_poly(g)?)
}
