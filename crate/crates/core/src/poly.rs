//! Dense univariate polynomials with arbitrary-precision integer coefficients.
//!
//! Coefficients are stored in ascending order of exponent and are always
//! normalized: the last stored coefficient is nonzero, and the zero polynomial
//! has no coefficients at all. Everything needing a leading coefficient or a
//! degree rejects the zero polynomial instead of inventing a degree for it.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An integer modulus `n >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidModulus(n));
        }
        Ok(Modulus(n))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// Canonical representative of `a` in `[0, n)`.
    pub fn reduce(self, a: &BigInt) -> BigInt {
        a.mod_floor(&BigInt::from(self.0))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from ascending coefficients, stripping leading zeros.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn degree_checked(&self) -> Result<usize> {
        self.degree().ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub(crate) fn require_monic(&self) -> Result<usize> {
        let d = self.degree_checked()?;
        if !self.is_monic() {
            return Err(Error::NotMonic(self.to_string()));
        }
        Ok(d)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Division with remainder by a monic polynomial of positive degree.
    ///
    /// Exact over the integers: no coefficient is ever divided.
    pub fn divrem_monic(&self, divisor: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let m = divisor.require_monic()?;
        if m == 0 {
            return Err(Error::Precondition(
                "divisor must have positive degree".into(),
            ));
        }
        let n = match self.degree() {
            Some(n) if n >= m => n,
            _ => return Ok((IntPoly::zero(), self.clone())),
        };
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - m + 1];
        for k in (0..=n - m).rev() {
            let c = std::mem::take(&mut rem[k + m]);
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs[..m].iter().enumerate() {
                if !d.is_zero() {
                    rem[k + j] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(m);
        Ok((IntPoly::new(quot), IntPoly::new(rem)))
    }

    /// Horner evaluation at an integer.
    pub fn eval(&self, a: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * a + c)
    }

    /// Reduces every coefficient to its canonical residue in `[0, n)`.
    pub fn reduce_mod(&self, n: Modulus) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| n.reduce(c)).collect())
    }

    /// `self(inner(x))`, by Horner.
    pub fn compose(&self, inner: &IntPoly) -> IntPoly {
        self.coeffs.iter().rev().fold(IntPoly::zero(), |acc, c| {
            &(&acc * inner) + &IntPoly::constant(c.clone())
        })
    }

    /// True iff the coefficient sequence is a palindrome.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Largest absolute coefficient; zero for the zero polynomial.
    pub fn height(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_default()
    }
}

impl From<BigInt> for IntPoly {
    fn from(c: BigInt) -> Self {
        IntPoly::constant(c)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parse::format_poly(self))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        IntPoly::new(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        -&self
    }
}

/// `g_n = x^(n-1) + ... + x + 1`, so that `(x - 1) g_n = x^n - 1`.
pub fn gn(n: u64) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::ZeroIndex);
    }
    Ok(IntPoly {
        coeffs: vec![BigInt::one(); n as usize],
    })
}

/// The fourth cyclotomic polynomial `x^2 + 1`.
pub fn phi4() -> IntPoly {
    IntPoly::from_i64s(&[1, 0, 1])
}

/// Expanded `(x - a)^k`, built from binomial coefficients.
pub fn power_of_linear(a: &BigInt, k: usize) -> IntPoly {
    // coefficient of x^j is C(k, j) * (-a)^(k - j)
    let neg_a = -a;
    let mut coeffs = vec![BigInt::zero(); k + 1];
    let mut binom = BigInt::one();
    let mut power = BigInt::one();
    for j in (0..=k).rev() {
        coeffs[j] = &binom * &power;
        // step from C(k, j) to C(k, j - 1)
        if j > 0 {
            binom = binom * BigInt::from(j) / BigInt::from(k - j + 1);
            power *= &neg_a;
        }
    }
    IntPoly::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn addition() {
        assert_eq!(&p(&[1, 1]) + &p(&[-1, 1]), p(&[0, 2]));
        assert_eq!(&p(&[3, 0, 5]) + &IntPoly::zero(), p(&[3, 0, 5]));
        assert_eq!(&p(&[1, 1, 1]) + &p(&[-1, 0, 1]), p(&[0, 1, 2]));
        assert!((&p(&[1, 2]) - &p(&[1, 2])).is_zero());
    }

    #[test]
    fn multiplication() {
        assert_eq!(&p(&[-1, 1]) * &p(&[1, 1]), p(&[-1, 0, 1]));
        assert_eq!(&p(&[4, 0, 7]) * &IntPoly::one(), p(&[4, 0, 7]));
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1, 1]), p(&[1, 2, 2, 1]));
        assert!((&p(&[1, 1]) * &IntPoly::zero()).is_zero());
    }

    #[test]
    fn divrem_replays_euclid_step() {
        // x^5 - 1 = (x^3 - 1) x^2 + (x^2 - 1)
        let (q, r) = p(&[-1, 0, 0, 0, 0, 1])
            .divrem_monic(&p(&[-1, 0, 0, 1]))
            .unwrap();
        assert_eq!(q, p(&[0, 0, 1]));
        assert_eq!(r, p(&[-1, 0, 1]));
    }

    #[test]
    fn divrem_edge_cases() {
        let f = p(&[2, -3, 1]);
        assert_eq!(
            f.divrem_monic(&f).unwrap(),
            (IntPoly::one(), IntPoly::zero())
        );
        let (q, r) = p(&[1, 1]).divrem_monic(&p(&[1, 0, 1])).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, p(&[1, 1]));
        assert!(matches!(
            p(&[1, 1]).divrem_monic(&p(&[1, 2])),
            Err(Error::NotMonic(_))
        ));
        assert_eq!(
            p(&[1, 1]).divrem_monic(&IntPoly::zero()),
            Err(Error::ZeroPolynomial)
        );
        assert!(p(&[1, 1]).divrem_monic(&IntPoly::one()).is_err());
    }

    #[test]
    fn evaluation() {
        assert_eq!(gn(5).unwrap().eval(&BigInt::from(1)), BigInt::from(5));
        assert_eq!(p(&[-7, 3, 9]).eval(&BigInt::zero()), BigInt::from(-7));
        assert_eq!(p(&[-1, 1, 1]).eval(&BigInt::from(2)), BigInt::from(5));
        assert_eq!(IntPoly::zero().eval(&BigInt::from(3)), BigInt::zero());
    }

    #[test]
    fn reduction() {
        let seven = Modulus::new(7).unwrap();
        assert_eq!(gn(7).unwrap().reduce_mod(seven), gn(7).unwrap());
        let expanded = power_of_linear(&BigInt::one(), 6);
        assert_eq!(expanded.reduce_mod(seven), gn(7).unwrap());
        assert!(p(&[14, 0, 7]).reduce_mod(seven).is_zero());
        assert_eq!(p(&[-1, -8]).reduce_mod(seven), p(&[6, 6]));
        assert_eq!(Modulus::new(1), Err(Error::InvalidModulus(1)));
    }

    #[test]
    fn g_family() {
        assert_eq!(gn(1).unwrap(), IntPoly::one());
        assert_eq!(gn(2).unwrap(), p(&[1, 1]));
        assert_eq!(gn(5).unwrap(), p(&[1, 1, 1, 1, 1]));
        assert_eq!(gn(0), Err(Error::ZeroIndex));
        assert!(phi4().is_monic());
    }

    #[test]
    fn linear_powers() {
        assert_eq!(power_of_linear(&BigInt::one(), 2), p(&[1, -2, 1]));
        assert_eq!(power_of_linear(&BigInt::from(5), 0), IntPoly::one());
        assert_eq!(power_of_linear(&BigInt::from(2), 3), p(&[-8, 12, -6, 1]));
        assert_eq!(power_of_linear(&BigInt::zero(), 3), p(&[0, 0, 0, 1]));
        assert_eq!(power_of_linear(&BigInt::from(-3), 4), p(&[3, 1]).pow(4));
    }

    #[test]
    fn composition() {
        // (x^2 + 1) o (x - 2) = x^2 - 4x + 5
        assert_eq!(phi4().compose(&p(&[-2, 1])), p(&[5, -4, 1]));
        assert_eq!(IntPoly::zero().compose(&p(&[1, 1])), IntPoly::zero());
    }

    #[test]
    fn degree_and_monic() {
        assert_eq!(IntPoly::zero().degree(), None);
        assert_eq!(
            IntPoly::new(vec![BigInt::from(3), BigInt::zero()]).degree(),
            Some(0)
        );
        assert!(!IntPoly::zero().is_monic());
        assert!(p(&[5, 1]).is_monic());
        assert!(!p(&[5, -1]).is_monic());
    }
}
