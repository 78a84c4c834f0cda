//! Square integer matrices: companion matrices, evaluation of a polynomial at a
//! matrix, and Bareiss fraction-free determinants.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::poly::{IntPoly, Modulus};

/// A `dim x dim` integer matrix stored row-major. `dim == 0` is allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        IntMatrix {
            dim,
            entries: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows; panics if the rows are not square.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            assert_eq!(row.len(), dim, "matrix rows must form a square");
            entries.extend(row);
        }
        IntMatrix { dim, entries }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        (0..self.dim).map(move |i| self.row(i))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Entry-wise canonical residues in `[0, n)`.
    pub fn reduce_mod(&self, n: Modulus) -> IntMatrix {
        IntMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| n.reduce(e)).collect(),
        }
    }

    /// Matrix product. Zero entries of `rhs` are skipped, which makes
    /// products with sparse matrices such as companion matrices cheap.
    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let sparse_rows: Vec<Vec<(usize, &BigInt)>> = (0..n)
            .map(|k| {
                rhs.row(k)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for &(j, b) in &sparse_rows[k] {
                    out.entries[i * n + j] += a * b;
                }
            }
        }
        out
    }

    fn add_scalar_identity(&mut self, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.dim {
            self[(i, i)] += c;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.dim && j < self.dim, "index out of bounds");
        &self.entries[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.dim && j < self.dim, "index out of bounds");
        &mut self.entries[i * self.dim + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Companion matrix of a monic `f = a_0 + a_1 x + ... + x^m`: ones on the
/// subdiagonal and `-a_0, ..., -a_{m-1}` down the last column.
pub fn companion_matrix(f: &IntPoly) -> Result<IntMatrix> {
    let m = f.require_monic()?;
    let mut c = IntMatrix::zeros(m);
    for i in 0..m {
        if i + 1 < m {
            c[(i + 1, i)] = BigInt::one();
        }
        c[(i, m - 1)] = -f.coeff(i);
    }
    Ok(c)
}

/// `g(M) = b_0 I + b_1 M + ... + b_n M^n`, evaluated by Horner's rule.
pub fn matrix_poly_eval(g: &IntPoly, m: &IntMatrix) -> IntMatrix {
    let dim = m.dim();
    let mut acc = IntMatrix::zeros(dim);
    for (k, b) in g.coeffs().iter().enumerate().rev() {
        if k + 1 < g.coeffs().len() {
            acc = acc.mul(m);
        }
        acc.add_scalar_identity(b);
    }
    acc
}

/// Exact determinant by Bareiss elimination. The first nonzero entry of each
/// column is the pivot; every division is exact.
pub fn det_bareiss(m: &IntMatrix) -> BigInt {
    let n = m.dim();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.rows().map(<[BigInt]>::to_vec).collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in bottom.iter_mut() {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let v = &row[j] * pivot - &lead * &pivot_row[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = pivot.clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cofactor_det(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, &v)| v)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * cofactor_det(&minor)
            })
            .sum()
    }

    #[test]
    fn companion_layout() {
        let f = IntPoly::from_i64s(&[2, -3, 1]);
        assert_eq!(
            companion_matrix(&f).unwrap(),
            IntMatrix::from_i64_rows(&[&[0, -2], &[1, 3]])
        );
        assert_eq!(companion_matrix(&IntPoly::one()).unwrap().dim(), 0);
        assert_eq!(
            companion_matrix(&IntPoly::from_i64s(&[-7, 1])).unwrap(),
            IntMatrix::from_i64_rows(&[&[7]])
        );
        assert!(companion_matrix(&IntPoly::from_i64s(&[1, 2])).is_err());
        assert!(companion_matrix(&IntPoly::zero()).is_err());
    }

    #[test]
    fn poly_at_matrix() {
        let m = IntMatrix::from_i64_rows(&[&[0, -1], &[1, 0]]);
        assert_eq!(matrix_poly_eval(&IntPoly::x(), &m), m);
        assert_eq!(
            matrix_poly_eval(&IntPoly::one(), &m),
            IntMatrix::identity(2)
        );
        assert!(matrix_poly_eval(&IntPoly::from_i64s(&[1, 0, 1]), &m).is_zero());
        assert!(matrix_poly_eval(&IntPoly::zero(), &m).is_zero());
        assert_eq!(
            matrix_poly_eval(&IntPoly::from_i64s(&[3, 1]), &IntMatrix::zeros(0)),
            IntMatrix::zeros(0)
        );
    }

    #[test]
    fn determinants() {
        assert_eq!(det_bareiss(&IntMatrix::zeros(0)), BigInt::one());
        assert_eq!(
            det_bareiss(&IntMatrix::from_i64_rows(&[&[1, 2], &[3, 4]])),
            BigInt::from(-2)
        );
        let c = companion_matrix(&IntPoly::from_i64s(&[2, -3, 1])).unwrap();
        assert_eq!(det_bareiss(&c), BigInt::from(2));
        assert_eq!(cofactor_det(&[vec![0, -2], vec![1, 3]]), 2);
        // needs a row swap at the first pivot
        let m = IntMatrix::from_i64_rows(&[&[0, 1, 2], &[3, 4, 5], &[6, 7, 9]]);
        assert_eq!(
            det_bareiss(&m),
            BigInt::from(cofactor_det(&[vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 9]]))
        );
        // zero pivot column
        let z = IntMatrix::from_i64_rows(&[&[0, 1, 2], &[0, 4, 5], &[0, 7, 9]]);
        assert_eq!(det_bareiss(&z), BigInt::zero());
        // singular with a late zero pivot
        let s = IntMatrix::from_i64_rows(&[&[1, 2, 3], &[2, 4, 6], &[1, 1, 1]]);
        assert_eq!(det_bareiss(&s), BigInt::zero());
    }

    #[test]
    fn bareiss_matches_cofactor_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let n = rng.random_range(0..=5);
            let rows: Vec<Vec<i64>> = (0..n)
                .map(|_| (0..n).map(|_| rng.random_range(-9..=9)).collect())
                .collect();
            let m = IntMatrix::from_rows(
                rows.iter()
                    .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                    .collect(),
            );
            let expected = BigInt::from(cofactor_det(&rows));
            assert_eq!(det_bareiss(&m), expected, "{m}");
            assert_eq!(det_bareiss(&m.transpose()), expected);
        }
    }

    #[test]
    fn sparse_product_matches_dense() {
        let a = IntMatrix::from_i64_rows(&[&[1, 2, 0], &[0, -1, 3], &[4, 0, 5]]);
        let b = IntMatrix::from_i64_rows(&[&[0, 1, 0], &[2, 0, 0], &[0, 0, -3]]);
        let mut dense = IntMatrix::zeros(3);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    dense[(i, j)] += &a[(i, k)] * &b[(k, j)];
                }
            }
        }
        assert_eq!(a.mul(&b), dense);
    }
}
