//! Square matrices over an entry field, the desk-scale stand-in for an
//! abstract coefficient algebra.
//!
//! Unit detection is by determinant: exact over rational entries, LU with
//! pivot tolerance 1e-12 over floats.

use std::fmt;

use crate::error::{Error, Result};

use super::{Rational, Ring, Sign};

const FLOAT_PIVOT_TOLERANCE: f64 = 1e-12;

/// A dense `n x n` matrix with entries in some coefficient ring.
/// Elements carry their dimension so malformed input is caught at
/// construction; arithmetic itself lives on [`MatrixRing`].
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<E> {
    dim: usize,
    entries: Vec<E>, // row-major, len == dim * dim
}

impl<E: Clone> Matrix<E> {
    /// Build from row-major nested rows; every row must have length `n`
    /// for an `n`-row matrix.
    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::Structure("matrix must have positive dimension".into()));
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != dim {
                return Err(Error::Structure(format!(
                    "row {i} has {} entries, expected {dim} (square matrix)",
                    row.len()
                )));
            }
            entries.extend(row);
        }
        Ok(Matrix { dim, entries })
    }

    pub fn from_flat(dim: usize, entries: Vec<E>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Structure("matrix must have positive dimension".into()));
        }
        if entries.len() != dim * dim {
            return Err(Error::Structure(format!(
                "{} entries do not fill a {dim}x{dim} matrix",
                entries.len()
            )));
        }
        Ok(Matrix { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> &E {
        &self.entries[row * self.dim + col]
    }

    pub fn rows(&self) -> Vec<Vec<E>> {
        self.entries.chunks(self.dim).map(|r| r.to_vec()).collect()
    }
}

impl<E: fmt::Display> fmt::Display for Matrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.dim {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for c in 0..self.dim {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entries[r * self.dim + c])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// The algebra of `dim x dim` matrices over `entry` coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixRing<R: Ring> {
    dim: usize,
    entry: R,
}

impl<R: Ring> MatrixRing<R> {
    pub fn new(dim: usize, entry: R) -> Self {
        assert!(dim > 0, "matrix ring needs positive dimension");
        MatrixRing { dim, entry }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry_ring(&self) -> &R {
        &self.entry
    }

    pub fn identity(&self) -> Matrix<R::Elem> {
        self.one()
    }

    fn check(&self, a: &Matrix<R::Elem>) {
        assert_eq!(
            a.dim, self.dim,
            "matrix of dimension {} used in a {}x{} ring",
            a.dim, self.dim, self.dim
        );
    }

    /// Determinant by Gaussian elimination over the entry field.
    pub fn determinant(&self, a: &Matrix<R::Elem>) -> R::Elem {
        self.check(a);
        let n = self.dim;
        let r = &self.entry;
        let mut m = a.entries.clone();
        let mut det = r.one();
        for col in 0..n {
            let Some(pivot_row) = self.pick_pivot(&m, col) else {
                return r.zero();
            };
            if pivot_row != col {
                for c in 0..n {
                    m.swap(pivot_row * n + c, col * n + c);
                }
                det = r.neg(&det);
            }
            let pivot = m[col * n + col].clone();
            det = r.mul(&det, &pivot);
            let pivot_inv = r.try_invert(&pivot).expect("pivot nonzero by selection");
            for row in (col + 1)..n {
                let factor = r.mul(&m[row * n + col], &pivot_inv);
                if r.is_zero(&factor) {
                    continue;
                }
                for c in col..n {
                    let delta = r.mul(&factor, &m[col * n + c]);
                    m[row * n + c] = r.sub(&m[row * n + c], &delta);
                }
            }
        }
        det
    }

    /// Pivot choice: largest magnitude when the entry ring is inexact,
    /// first usable nonzero otherwise.
    fn pick_pivot(&self, m: &[R::Elem], col: usize) -> Option<usize> {
        let n = self.dim;
        let r = &self.entry;
        if r.is_exact() {
            (col..n).find(|&row| !r.is_zero(&m[row * n + col]))
        } else {
            let (best, mag) = (col..n)
                .map(|row| (row, r.magnitude_hint(&m[row * n + col]).unwrap_or(0.0)))
                .max_by(|a, b| a.1.total_cmp(&b.1))?;
            (mag > FLOAT_PIVOT_TOLERANCE).then_some(best)
        }
    }
}

impl<R: Ring> Ring for MatrixRing<R> {
    type Elem = Matrix<R::Elem>;

    fn zero(&self) -> Matrix<R::Elem> {
        Matrix {
            dim: self.dim,
            entries: vec![self.entry.zero(); self.dim * self.dim],
        }
    }

    fn one(&self) -> Matrix<R::Elem> {
        let mut m = self.zero();
        for i in 0..self.dim {
            m.entries[i * self.dim + i] = self.entry.one();
        }
        m
    }

    fn is_zero(&self, a: &Matrix<R::Elem>) -> bool {
        self.check(a);
        a.entries.iter().all(|e| self.entry.is_zero(e))
    }

    fn eq(&self, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> bool {
        self.check(a);
        self.check(b);
        a.entries.iter().zip(&b.entries).all(|(x, y)| self.entry.eq(x, y))
    }

    fn add(&self, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
        self.check(a);
        self.check(b);
        Matrix {
            dim: self.dim,
            entries: a.entries.iter().zip(&b.entries).map(|(x, y)| self.entry.add(x, y)).collect(),
        }
    }

    fn neg(&self, a: &Matrix<R::Elem>) -> Matrix<R::Elem> {
        self.check(a);
        Matrix {
            dim: self.dim,
            entries: a.entries.iter().map(|x| self.entry.neg(x)).collect(),
        }
    }

    fn mul(&self, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
        self.check(a);
        self.check(b);
        let n = self.dim;
        let r = &self.entry;
        let mut out = self.zero();
        for i in 0..n {
            for k in 0..n {
                let aik = &a.entries[i * n + k];
                if r.is_zero(aik) {
                    continue;
                }
                for j in 0..n {
                    let prod = r.mul(aik, &b.entries[k * n + j]);
                    out.entries[i * n + j] = r.add(&out.entries[i * n + j], &prod);
                }
            }
        }
        out
    }

    /// Gauss-Jordan on `[A | I]`; `NotAUnit` when a pivot column dies.
    fn try_invert(&self, a: &Matrix<R::Elem>) -> Result<Matrix<R::Elem>> {
        self.check(a);
        let n = self.dim;
        let r = &self.entry;
        let mut m = a.entries.clone();
        let mut inv = self.one().entries;
        for col in 0..n {
            let pivot_row = self.pick_pivot(&m, col).ok_or_else(|| {
                Error::NotAUnit(format!("{n}x{n} matrix is singular (no pivot in column {col})"))
            })?;
            if pivot_row != col {
                for c in 0..n {
                    m.swap(pivot_row * n + c, col * n + c);
                    inv.swap(pivot_row * n + c, col * n + c);
                }
            }
            let pivot_inv = r.try_invert(&m[col * n + col]).expect("pivot nonzero by selection");
            for c in 0..n {
                m[col * n + c] = r.mul(&m[col * n + c], &pivot_inv);
                inv[col * n + c] = r.mul(&inv[col * n + c], &pivot_inv);
            }
            for row in 0..n {
                if row == col {
                    continue;
                }
                let factor = m[row * n + col].clone();
                if r.is_zero(&factor) {
                    continue;
                }
                for c in 0..n {
                    let dm = r.mul(&factor, &m[col * n + c]);
                    m[row * n + c] = r.sub(&m[row * n + c], &dm);
                    let di = r.mul(&factor, &inv[col * n + c]);
                    inv[row * n + c] = r.sub(&inv[row * n + c], &di);
                }
            }
        }
        Ok(Matrix { dim: n, entries: inv })
    }

    fn from_integer(&self, n: i64) -> Matrix<R::Elem> {
        self.from_rational(&Rational::from_integer(n))
    }

    fn from_rational(&self, q: &Rational) -> Matrix<R::Elem> {
        let mut m = self.zero();
        let scalar = self.entry.from_rational(q);
        for i in 0..self.dim {
            m.entries[i * self.dim + i] = scalar.clone();
        }
        m
    }

    fn is_exact(&self) -> bool {
        self.entry.is_exact()
    }

    fn exp_scalar(&self, a: &Matrix<R::Elem>) -> Result<Matrix<R::Elem>> {
        if self.is_zero(a) {
            Ok(self.one())
        } else {
            Err(Error::InexactScalar(
                "matrix exponential of a nonzero constant term is not supported; \
                 keep the order-0 part zero"
                    .into(),
            ))
        }
    }

    fn log_scalar(&self, a: &Matrix<R::Elem>) -> Result<Matrix<R::Elem>> {
        if self.eq(a, &self.one()) {
            Ok(self.zero())
        } else {
            Err(Error::InexactScalar(
                "matrix logarithm of a non-identity constant term is not supported; \
                 keep the order-0 part equal to the identity"
                    .into(),
            ))
        }
    }

    fn sign(&self, _a: &Matrix<R::Elem>) -> Option<Sign> {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{RationalField, Real64Field};
    use crate::sample::{rng_from_env, sample_matrix};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn shear_inverse_multiplies_back_to_identity() {
        let ring = MatrixRing::new(2, RationalField);
        let m = Matrix::from_rows(vec![
            vec![q(1, 1), q(1, 1)],
            vec![q(0, 1), q(1, 1)],
        ])
        .unwrap();
        let inv = ring.try_invert(&m).unwrap();
        let expected = Matrix::from_rows(vec![
            vec![q(1, 1), q(-1, 1)],
            vec![q(0, 1), q(1, 1)],
        ])
        .unwrap();
        assert_eq!(inv, expected);
        assert_eq!(ring.mul(&m, &inv), ring.one());
        assert_eq!(ring.mul(&inv, &m), ring.one());
    }

    #[test]
    fn singular_matrix_is_not_a_unit() {
        let ring = MatrixRing::new(2, RationalField);
        let m = Matrix::from_rows(vec![
            vec![q(1, 1), q(2, 1)],
            vec![q(2, 1), q(4, 1)],
        ])
        .unwrap();
        assert!(ring.determinant(&m).is_zero());
        assert!(matches!(ring.try_invert(&m), Err(Error::NotAUnit(_))));
    }

    #[test]
    fn identity_absorbs_random_matrices() {
        let ring = MatrixRing::new(2, RationalField);
        let mut rng = rng_from_env();
        for _ in 0..50 {
            let m = sample_matrix(&mut rng, &ring, 9);
            assert_eq!(ring.mul(&ring.one(), &m), m);
            assert_eq!(ring.mul(&m, &ring.one()), m);
        }
    }

    #[test]
    fn determinant_matches_cofactor_expansion_2x2() {
        let ring = MatrixRing::new(2, RationalField);
        let mut rng = rng_from_env();
        for _ in 0..100 {
            let m = sample_matrix(&mut rng, &ring, 9);
            let ad = &(m.entry(0, 0) * m.entry(1, 1));
            let bc = &(m.entry(0, 1) * m.entry(1, 0));
            assert_eq!(ring.determinant(&m), ad - bc);
        }
    }

    #[test]
    fn ragged_rows_are_a_structural_error() {
        let rows = vec![vec![q(1, 1), q(2, 1)], vec![q(3, 1)]];
        assert!(matches!(Matrix::from_rows(rows), Err(Error::Structure(_))));
        assert!(matches!(
            Matrix::from_flat(2, vec![q(1, 1); 3]),
            Err(Error::Structure(_))
        ));
    }

    #[test]
    #[should_panic(expected = "used in a")]
    fn dimension_mismatch_panics_in_ring_ops() {
        let r2 = MatrixRing::new(2, RationalField);
        let r3 = MatrixRing::new(3, RationalField);
        let a = r2.one();
        let b = r3.one();
        let _ = r2.add(&a, &b);
    }

    #[test]
    fn float_matrices_invert_within_tolerance() {
        let ring = MatrixRing::new(3, Real64Field::new());
        let m = Matrix::from_rows(vec![
            vec![2.0, 1.0, 0.0],
            vec![1.0, 3.0, 1.0],
            vec![0.0, 1.0, 2.0],
        ])
        .unwrap();
        let inv = ring.try_invert(&m).unwrap();
        assert!(ring.eq(&ring.mul(&m, &inv), &ring.one()));
        let singular = Matrix::from_rows(vec![
            vec![1.0, 2.0, 3.0],
            vec![2.0, 4.0, 6.0],
            vec![0.0, 0.0, 1.0],
        ])
        .unwrap();
        assert!(ring.try_invert(&singular).is_err());
    }
}
