//! Resultants of monic integer polynomials.
//!
//! The primary definition is `Res(f, g) = det(g(C_f))` with `C_f` the
//! companion matrix of `f`. The Sylvester determinant is kept alongside as an
//! independent second route to the same number.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{companion_matrix, det_bareiss, matrix_poly_eval, IntMatrix};
use crate::poly::{gn, IntPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ResultantMethod {
    /// `det(g(C_f))`.
    #[default]
    Barnett,
    /// Determinant of the Sylvester matrix.
    Sylvester,
}

impl fmt::Display for ResultantMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ResultantMethod::Barnett => "barnett",
            ResultantMethod::Sylvester => "sylvester",
        })
    }
}

impl FromStr for ResultantMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "barnett" => Ok(ResultantMethod::Barnett),
            "sylvester" => Ok(ResultantMethod::Sylvester),
            other => Err(Error::Precondition(format!(
                "unknown resultant method `{other}` (expected barnett or sylvester)"
            ))),
        }
    }
}

/// `g(C_f)`, the matrix whose determinant is the resultant.
pub fn barnett_matrix(f: &IntPoly, g: &IntPoly) -> Result<IntMatrix> {
    g.require_monic()?;
    let c = companion_matrix(f)?;
    Ok(matrix_poly_eval(g, &c))
}

/// Sylvester matrix of monic `f` (degree m) and `g` (degree n): `m` rows of
/// shifted `g` coefficients followed by `n` rows of shifted `f` coefficients,
/// leading coefficient first.
pub fn sylvester_matrix(f: &IntPoly, g: &IntPoly) -> Result<IntMatrix> {
    let m = f.require_monic()?;
    let n = g.require_monic()?;
    let size = m + n;
    let mut s = IntMatrix::zeros(size);
    for i in 0..m {
        for (k, c) in g.coeffs().iter().enumerate() {
            s[(i, i + n - k)] = c.clone();
        }
    }
    for i in 0..n {
        for (k, c) in f.coeffs().iter().enumerate() {
            s[(m + i, i + m - k)] = c.clone();
        }
    }
    Ok(s)
}

pub fn resultant(f: &IntPoly, g: &IntPoly, method: ResultantMethod) -> Result<BigInt> {
    match method {
        ResultantMethod::Barnett => Ok(det_bareiss(&barnett_matrix(f, g)?)),
        ResultantMethod::Sylvester => {
            let d = det_bareiss(&sylvester_matrix(f, g)?);
            // g-rows first gives Res(g, f); undo the swap so the value is
            // the product of g over the roots of f.
            let m = f.degree_checked()?;
            let n = g.degree_checked()?;
            Ok(if (m * n) % 2 == 1 { -d } else { d })
        }
    }
}

/// Barnett resultant with a tampering hook applied to `g(C_f)` before the
/// determinant. Used for fault injection by the verification suite.
pub(crate) fn barnett_tampered(
    f: &IntPoly,
    g: &IntPoly,
    tamper: impl FnOnce(&mut IntMatrix),
) -> Result<BigInt> {
    let mut m = barnett_matrix(f, g)?;
    tamper(&mut m);
    Ok(det_bareiss(&m))
}

/// One step `(m, n) -> (r, m)` of the Euclidean reduction on `g` indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChainStep {
    pub m: u64,
    pub n: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EuclidChain {
    pub pairs: Vec<ChainStep>,
}

impl EuclidChain {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn as_tuples(&self) -> Vec<(u64, u64)> {
        self.pairs.iter().map(|s| (s.m, s.n)).collect()
    }
}

/// Replays the Euclidean argument showing `Res(g_m, g_n) = 1` for coprime
/// `m, n`.
///
/// Each step divides `g_n` by `g_m` and checks that the remainder is `g_r`
/// with `n = m q + r`; then `Res(g_m, g_n) = Res(g_m, g_r)` and the pair is
/// swapped, picking up the sign `(-1)^{(m-1)(r-1)}`. The chain stops at index
/// 1, where the resultant is the determinant of an empty matrix.
pub fn gchain_resultant(m: u64, n: u64) -> Result<(BigInt, EuclidChain)> {
    if m == 0 || n == 0 {
        return Err(Error::ZeroIndex);
    }
    if m.gcd(&n) != 1 {
        return Err(Error::NotCoprime { m, n });
    }
    let mut sign = BigInt::one();
    let (mut a, mut b) = (m, n);
    if a > b {
        std::mem::swap(&mut a, &mut b);
        if (a - 1) * (b - 1) % 2 == 1 {
            sign = -sign;
        }
    }
    let mut pairs = vec![ChainStep { m: a, n: b }];
    while a > 1 {
        let r = b % a;
        let (_, rem) = gn(b)?.divrem_monic(&gn(a)?)?;
        let expected = if r == 0 { IntPoly::zero() } else { gn(r)? };
        if rem != expected {
            return Err(Error::ChainMismatch {
                m: a,
                n: b,
                r,
                actual: rem.to_string(),
            });
        }
        // Res(g_a, g_r) = (-1)^{deg g_a * deg g_r} Res(g_r, g_a)
        if (a - 1) * (r.saturating_sub(1)) % 2 == 1 {
            sign = -sign;
        }
        b = a;
        a = r;
        pairs.push(ChainStep { m: a, n: b });
    }
    let tail = resultant(&gn(a)?, &gn(b)?, ResultantMethod::Barnett)?;
    Ok((sign * tail, EuclidChain { pairs }))
}

/// Builds `g = f q + r` and reports whether `Res(f, g) = Res(f, r)`.
pub fn check_res4(f: &IntPoly, q: &IntPoly, r: &IntPoly) -> Result<bool> {
    let df = f.require_monic()?;
    q.require_monic()?;
    let dr = r.require_monic()?;
    if dr >= df {
        return Err(Error::Precondition(format!(
            "remainder degree {dr} must be below divisor degree {df}"
        )));
    }
    let g = &(f * q) + r;
    let lhs = resultant(f, &g, ResultantMethod::Barnett)?;
    let rhs = resultant(f, r, ResultantMethod::Barnett)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn both(f: &IntPoly, g: &IntPoly) -> BigInt {
        let b = resultant(f, g, ResultantMethod::Barnett).unwrap();
        let s = resultant(f, g, ResultantMethod::Sylvester).unwrap();
        assert_eq!(b, s, "methods disagree on Res({f}, {g})");
        b
    }

    #[test]
    fn named_resultants() {
        assert_eq!(both(&gn(3).unwrap(), &gn(5).unwrap()), BigInt::one());
        assert_eq!(both(&p(&[-2, 1]), &p(&[1, 0, 1])), BigInt::from(5));
        assert_eq!(both(&gn(2).unwrap(), &gn(4).unwrap()), BigInt::zero());
        assert_eq!(both(&p(&[3, -1, 4, 1]), &IntPoly::one()), BigInt::one());
        assert_eq!(both(&IntPoly::one(), &p(&[3, 1])), BigInt::one());
        assert_eq!(both(&IntPoly::one(), &IntPoly::one()), BigInt::one());
    }

    #[test]
    fn sign_law_on_small_case() {
        // Res(x^2+1, x-2) = (-1)^2 Res(x-2, x^2+1)
        assert_eq!(both(&p(&[1, 0, 1]), &p(&[-2, 1])), BigInt::from(5));
        // odd * odd degrees flip the sign: Res(x, x-1) = -1, Res(x-1, x) = 1
        assert_eq!(both(&p(&[0, 1]), &p(&[-1, 1])), BigInt::from(-1));
        assert_eq!(both(&p(&[-1, 1]), &p(&[0, 1])), BigInt::one());
    }

    #[test]
    fn rejects_non_monic() {
        for method in [ResultantMethod::Barnett, ResultantMethod::Sylvester] {
            assert!(matches!(
                resultant(&p(&[1, 2]), &p(&[1, 1]), method),
                Err(Error::NotMonic(_))
            ));
            assert!(matches!(
                resultant(&p(&[1, 1]), &IntPoly::zero(), method),
                Err(Error::ZeroPolynomial)
            ));
        }
    }

    #[test]
    fn method_names() {
        assert_eq!(
            "sylvester".parse::<ResultantMethod>().unwrap(),
            ResultantMethod::Sylvester
        );
        assert!("pfaffian".parse::<ResultantMethod>().is_err());
        assert_eq!(ResultantMethod::default().to_string(), "barnett");
    }

    #[test]
    fn chains() {
        let (v, c) = gchain_resultant(3, 5).unwrap();
        assert_eq!(v, BigInt::one());
        assert_eq!(c.as_tuples(), vec![(3, 5), (2, 3), (1, 2)]);

        let (v, c) = gchain_resultant(1, 11).unwrap();
        assert_eq!(v, BigInt::one());
        assert_eq!(c.as_tuples(), vec![(1, 11)]);

        let (v, c) = gchain_resultant(4, 9).unwrap();
        assert_eq!(v, BigInt::one());
        assert_eq!(c.as_tuples(), vec![(4, 9), (1, 4)]);

        let (v, c) = gchain_resultant(9, 4).unwrap();
        assert_eq!(v, BigInt::one());
        assert_eq!(c.as_tuples(), vec![(4, 9), (1, 4)]);

        assert_eq!(
            gchain_resultant(6, 9),
            Err(Error::NotCoprime { m: 6, n: 9 })
        );
        assert_eq!(gchain_resultant(0, 9), Err(Error::ZeroIndex));
    }

    #[test]
    fn res4_examples() {
        assert!(check_res4(&p(&[1, 0, 1]), &p(&[0, 1]), &p(&[1, 1])).unwrap());
        assert!(check_res4(&p(&[-1, 1]), &IntPoly::one(), &IntPoly::one()).unwrap());
        let f = p(&[1, 0, 1]);
        assert!(check_res4(&f, &p(&[0, 1]), &f).is_err());
    }
}
