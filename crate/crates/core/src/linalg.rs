//! Minimal dense linear algebra: matrix products, covariance, Cholesky,
//! symmetric eigendecomposition (cyclic Jacobi), and thin SVD via the Gram
//! matrix of the smaller side.
//!
//! Everything is `f64`, row-major, and deterministic. Sizes here are at most
//! a few hundred, so clarity wins over BLAS-level tuning.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::math;

/// Errors from the dense kernels.
#[derive(Debug, Clone, PartialEq)]
pub enum LinalgError {
    /// Covariance needs at least two samples.
    InsufficientSamples { got: usize, min: usize },
    /// Symmetry defect `max|m - m^T|` exceeded the contract bound.
    NotSymmetric { defect: f64 },
    /// A Cholesky pivot was non-positive; carries the failing column.
    NotPositiveDefinite { pivot: usize },
    /// An input entry was NaN or infinite.
    NonFinite,
    /// Operand shapes are incompatible.
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::InsufficientSamples { got, min } => {
                write!(f, "insufficient samples: got {got}, need at least {min}")
            }
            LinalgError::NotSymmetric { defect } => {
                write!(f, "matrix is not symmetric (defect {defect:e})")
            }
            LinalgError::NotPositiveDefinite { pivot } => {
                write!(f, "matrix is not positive definite (pivot {pivot})")
            }
            LinalgError::NonFinite => write!(f, "non-finite entry in input"),
            LinalgError::ShapeMismatch { left, right } => {
                write!(
                    f,
                    "shape mismatch: {}x{} vs {}x{}",
                    left.0, left.1, right.0, right.1
                )
            }
        }
    }
}

impl core::error::Error for LinalgError {}

/// Dense row-major `f64` matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    /// Takes ownership of a row-major buffer. Panics if the length is wrong.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Self {
        assert_eq!(
            data.len(),
            rows * cols,
            "buffer length {} does not match {}x{}",
            data.len(),
            rows,
            cols
        );
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[&[f64]]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [f64] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    /// Elementwise max-abs norm.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn frobenius_norm(&self) -> f64 {
        math::sqrt(self.data.iter().map(|v| v * v).sum())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    /// `self * other`. Panics on shape mismatch.
    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, other.rows,
            "matmul shape mismatch: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let a_row = self.row(i);
            let out_row = out.row_mut(i);
            for (k, &a) in a_row.iter().enumerate() {
                if a == 0.0 {
                    continue;
                }
                let b_row = other.row(k);
                for (o, &b) in out_row.iter_mut().zip(b_row) {
                    *o += a * b;
                }
            }
        }
        out
    }

    /// `self^T * other` without materializing the transpose.
    pub fn transpose_matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            self.rows, other.rows,
            "transpose_matmul shape mismatch: {}x{} vs {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Matrix::zeros(self.cols, other.cols);
        for k in 0..self.rows {
            let a_row = self.row(k);
            let b_row = other.row(k);
            for (i, &a) in a_row.iter().enumerate() {
                if a == 0.0 {
                    continue;
                }
                let out_row = out.row_mut(i);
                for (o, &b) in out_row.iter_mut().zip(b_row) {
                    *o += a * b;
                }
            }
        }
        out
    }

    pub fn scale(&mut self, s: f64) {
        for v in &mut self.data {
            *v *= s;
        }
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    /// Per-column means.
    pub fn col_means(&self) -> Vec<f64> {
        let mut means = vec![0.0; self.cols];
        for i in 0..self.rows {
            for (m, &v) in means.iter_mut().zip(self.row(i)) {
                *m += v;
            }
        }
        let inv = 1.0 / self.rows as f64;
        for m in &mut means {
            *m *= inv;
        }
        means
    }

    /// Subtracts `means` from every row, returning the centered copy.
    pub fn center_columns(&self, means: &[f64]) -> Matrix {
        assert_eq!(means.len(), self.cols);
        let mut out = self.clone();
        for i in 0..out.rows {
            for (v, &m) in out.row_mut(i).iter_mut().zip(means) {
                *v -= m;
            }
        }
        out
    }

    fn symmetry_defect(&self) -> f64 {
        let mut defect: f64 = 0.0;
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                defect = defect.max((self[(i, j)] - self[(j, i)]).abs());
            }
        }
        defect
    }
}

impl core::ops::Index<(usize, usize)> for Matrix {
    type Output = f64;

    #[inline(always)]
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for Matrix {
    #[inline(always)]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Sample covariance `(1/(n-1)) Xc^T Xc` of an `n x p` sample matrix.
///
/// Columns are mean-centered first when `centered` is set. The result is
/// mirrored from its upper triangle so it is exactly symmetric as stored.
pub fn covariance(samples: &Matrix, centered: bool) -> Result<Matrix, LinalgError> {
    let n = samples.rows();
    if n < 2 {
        return Err(LinalgError::InsufficientSamples { got: n, min: 2 });
    }
    if !samples.is_finite() {
        return Err(LinalgError::NonFinite);
    }
    let x = if centered {
        samples.center_columns(&samples.col_means())
    } else {
        samples.clone()
    };
    let mut c = x.transpose_matmul(&x);
    c.scale(1.0 / (n as f64 - 1.0));
    for i in 0..c.rows() {
        for j in (i + 1)..c.cols() {
            let v = c[(i, j)];
            c[(j, i)] = v;
        }
    }
    Ok(c)
}

/// Cross-covariance `(1/(n-1)) Xc^T Yc` of two aligned sample matrices.
pub fn cross_covariance(x: &Matrix, y: &Matrix, centered: bool) -> Result<Matrix, LinalgError> {
    if x.rows() != y.rows() {
        return Err(LinalgError::ShapeMismatch {
            left: (x.rows(), x.cols()),
            right: (y.rows(), y.cols()),
        });
    }
    let n = x.rows();
    if n < 2 {
        return Err(LinalgError::InsufficientSamples { got: n, min: 2 });
    }
    if !x.is_finite() || !y.is_finite() {
        return Err(LinalgError::NonFinite);
    }
    let (xc, yc) = if centered {
        (
            x.center_columns(&x.col_means()),
            y.center_columns(&y.col_means()),
        )
    } else {
        (x.clone(), y.clone())
    };
    let mut c = xc.transpose_matmul(&yc);
    c.scale(1.0 / (n as f64 - 1.0));
    Ok(c)
}

/// Eigendecomposition of a symmetric matrix.
#[derive(Debug, Clone)]
pub struct SymEig {
    /// Eigenvalues, descending.
    pub values: Vec<f64>,
    /// Eigenvectors as columns, aligned with `values`.
    pub vectors: Matrix,
}

const SYMMETRY_TOL: f64 = 1e-8;
const JACOBI_MAX_SWEEPS: usize = 100;

/// Symmetric eigendecomposition by cyclic Jacobi rotations.
///
/// Converges when the off-diagonal Frobenius norm drops below
/// `1e-12 * ||m||_F`; capped at 100 sweeps. Eigenvalues come back sorted
/// descending with matching eigenvector columns; each column is sign-fixed
/// so its largest-magnitude entry is positive.
pub fn sym_eig(m: &Matrix) -> Result<SymEig, LinalgError> {
    if m.rows() != m.cols() {
        return Err(LinalgError::ShapeMismatch {
            left: (m.rows(), m.cols()),
            right: (m.cols(), m.rows()),
        });
    }
    if !m.is_finite() {
        return Err(LinalgError::NonFinite);
    }
    let defect = m.symmetry_defect();
    if defect > SYMMETRY_TOL {
        return Err(LinalgError::NotSymmetric { defect });
    }

    let n = m.rows();
    // Work on the exactly symmetrized copy.
    let mut a = m.clone();
    for i in 0..n {
        for j in (i + 1)..n {
            let v = 0.5 * (a[(i, j)] + a[(j, i)]);
            a[(i, j)] = v;
            a[(j, i)] = v;
        }
    }
    let mut v = Matrix::identity(n);
    let frob = a.frobenius_norm();
    let target = 1e-12 * frob;

    for _sweep in 0..JACOBI_MAX_SWEEPS {
        let mut off = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                off += 2.0 * a[(i, j)] * a[(i, j)];
            }
        }
        if math::sqrt(off) <= target {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let app = a[(p, p)];
                let aqq = a[(q, q)];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + math::sqrt(1.0 + theta * theta))
                } else {
                    -1.0 / (-theta + math::sqrt(1.0 + theta * theta))
                };
                let c = 1.0 / math::sqrt(1.0 + t * t);
                let s = t * c;

                for k in 0..n {
                    if k != p && k != q {
                        let akp = a[(k, p)];
                        let akq = a[(k, q)];
                        let new_kp = c * akp - s * akq;
                        let new_kq = s * akp + c * akq;
                        a[(k, p)] = new_kp;
                        a[(p, k)] = new_kp;
                        a[(k, q)] = new_kq;
                        a[(q, k)] = new_kq;
                    }
                }
                a[(p, p)] = app - t * apq;
                a[(q, q)] = aqq + t * apq;
                a[(p, q)] = 0.0;
                a[(q, p)] = 0.0;

                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }

    // Sort descending by eigenvalue; stable so equal values keep Jacobi order.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[(j, j)]
            .partial_cmp(&a[(i, i)])
            .unwrap_or(core::cmp::Ordering::Equal)
    });

    let values: Vec<f64> = order.iter().map(|&i| a[(i, i)]).collect();
    let mut vectors = Matrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        // Sign convention: largest-magnitude entry positive.
        let mut best = 0;
        let mut best_abs = 0.0;
        for k in 0..n {
            let abs = v[(k, src)].abs();
            if abs > best_abs {
                best_abs = abs;
                best = k;
            }
        }
        let sign = if v[(best, src)] < 0.0 { -1.0 } else { 1.0 };
        for k in 0..n {
            vectors[(k, dst)] = sign * v[(k, src)];
        }
    }

    Ok(SymEig { values, vectors })
}

/// Lower-triangular Cholesky factor of `m + ridge * I`.
pub fn cholesky(m: &Matrix, ridge: f64) -> Result<Matrix, LinalgError> {
    if m.rows() != m.cols() {
        return Err(LinalgError::ShapeMismatch {
            left: (m.rows(), m.cols()),
            right: (m.cols(), m.rows()),
        });
    }
    if !m.is_finite() || !ridge.is_finite() {
        return Err(LinalgError::NonFinite);
    }
    let defect = m.symmetry_defect();
    if defect > SYMMETRY_TOL {
        return Err(LinalgError::NotSymmetric { defect });
    }
    let n = m.rows();
    let mut l = Matrix::zeros(n, n);
    for j in 0..n {
        let mut diag = m[(j, j)] + ridge;
        for k in 0..j {
            diag -= l[(j, k)] * l[(j, k)];
        }
        if diag <= 0.0 {
            return Err(LinalgError::NotPositiveDefinite { pivot: j });
        }
        let ljj = math::sqrt(diag);
        l[(j, j)] = ljj;
        for i in (j + 1)..n {
            let mut sum = m[(i, j)];
            for k in 0..j {
                sum -= l[(i, k)] * l[(j, k)];
            }
            l[(i, j)] = sum / ljj;
        }
    }
    Ok(l)
}

/// Solves `L X = B` for X with L lower-triangular (forward substitution).
pub fn solve_lower(l: &Matrix, b: &Matrix) -> Matrix {
    assert_eq!(l.rows(), l.cols());
    assert_eq!(l.rows(), b.rows());
    let n = l.rows();
    let m = b.cols();
    let mut x = b.clone();
    for i in 0..n {
        for k in 0..i {
            let lik = l[(i, k)];
            if lik == 0.0 {
                continue;
            }
            for j in 0..m {
                let v = x[(k, j)];
                x[(i, j)] -= lik * v;
            }
        }
        let inv = 1.0 / l[(i, i)];
        for j in 0..m {
            x[(i, j)] *= inv;
        }
    }
    x
}

/// Solves `L^T X = B` for X with L lower-triangular (back substitution).
pub fn solve_lower_transpose(l: &Matrix, b: &Matrix) -> Matrix {
    assert_eq!(l.rows(), l.cols());
    assert_eq!(l.rows(), b.rows());
    let n = l.rows();
    let m = b.cols();
    let mut x = b.clone();
    for i in (0..n).rev() {
        for k in (i + 1)..n {
            let lki = l[(k, i)];
            if lki == 0.0 {
                continue;
            }
            for j in 0..m {
                let v = x[(k, j)];
                x[(i, j)] -= lki * v;
            }
        }
        let inv = 1.0 / l[(i, i)];
        for j in 0..m {
            x[(i, j)] *= inv;
        }
    }
    x
}

/// Thin singular value decomposition `m = U diag(S) V^T`.
#[derive(Debug, Clone)]
pub struct ThinSvd {
    /// `p x r` with orthonormal columns.
    pub u: Matrix,
    /// Singular values, non-negative descending, length `r = min(p, q)`.
    pub s: Vec<f64>,
    /// `q x r` with orthonormal columns.
    pub v: Matrix,
}

/// Thin SVD computed from the symmetric eigendecomposition of the smaller
/// Gram matrix (`m^T m` or `m m^T`).
pub fn thin_svd(m: &Matrix) -> Result<ThinSvd, LinalgError> {
    if !m.is_finite() {
        return Err(LinalgError::NonFinite);
    }
    let (p, q) = (m.rows(), m.cols());
    let r = p.min(q);

    if p >= q {
        let gram = exact_gram(&m.transpose_matmul(m));
        let eig = sym_eig(&gram)?;
        let s: Vec<f64> = eig.values.iter().map(|&l| math::sqrt(l.max(0.0))).collect();
        let v = eig.vectors;
        let mut u = Matrix::zeros(p, r);
        let s_max = s.first().copied().unwrap_or(0.0);
        let tol = s_max * (p.max(q) as f64) * f64::EPSILON;
        for j in 0..r {
            if s[j] > tol && s[j] > 0.0 {
                let inv = 1.0 / s[j];
                for i in 0..p {
                    let mut acc = 0.0;
                    for k in 0..q {
                        acc += m[(i, k)] * v[(k, j)];
                    }
                    u[(i, j)] = acc * inv;
                }
            }
        }
        fill_null_columns(&mut u, &s, tol);
        Ok(ThinSvd { u, s, v })
    } else {
        let gram = exact_gram(&matmul_transpose_right(m));
        let eig = sym_eig(&gram)?;
        let s: Vec<f64> = eig.values.iter().map(|&l| math::sqrt(l.max(0.0))).collect();
        let u = eig.vectors;
        let mut v = Matrix::zeros(q, r);
        let s_max = s.first().copied().unwrap_or(0.0);
        let tol = s_max * (p.max(q) as f64) * f64::EPSILON;
        for j in 0..r {
            if s[j] > tol && s[j] > 0.0 {
                let inv = 1.0 / s[j];
                for i in 0..q {
                    let mut acc = 0.0;
                    for k in 0..p {
                        acc += m[(k, i)] * u[(k, j)];
                    }
                    v[(i, j)] = acc * inv;
                }
            }
        }
        fill_null_columns(&mut v, &s, tol);
        Ok(ThinSvd { u, s, v })
    }
}

/// `m * m^T`.
fn matmul_transpose_right(m: &Matrix) -> Matrix {
    let p = m.rows();
    let mut out = Matrix::zeros(p, p);
    for i in 0..p {
        for j in 0..p {
            let mut acc = 0.0;
            for (&a, &b) in m.row(i).iter().zip(m.row(j)) {
                acc += a * b;
            }
            out[(i, j)] = acc;
        }
    }
    out
}

/// Mirrors the upper triangle so round-off never breaks symmetry.
fn exact_gram(g: &Matrix) -> Matrix {
    let mut out = g.clone();
    for i in 0..out.rows() {
        for j in (i + 1)..out.cols() {
            let v = 0.5 * (out[(i, j)] + out[(j, i)]);
            out[(i, j)] = v;
            out[(j, i)] = v;
        }
    }
    out
}

/// Replaces columns whose singular value is numerically zero with an
/// orthonormal completion (Gram-Schmidt against the kept columns), so the
/// factor stays orthonormal even for rank-deficient input.
fn fill_null_columns(f: &mut Matrix, s: &[f64], tol: f64) {
    let rows = f.rows();
    let cols = f.cols();
    let mut candidate = 0usize;
    for j in 0..cols {
        if s[j] > tol && s[j] > 0.0 {
            continue;
        }
        // Try basis vectors until one survives projection.
        while candidate < rows {
            let mut col = vec![0.0; rows];
            col[candidate] = 1.0;
            for other in 0..cols {
                if other == j {
                    continue;
                }
                let skip = !(s[other] > tol && s[other] > 0.0) && other > j;
                if skip {
                    continue;
                }
                let mut dot = 0.0;
                for i in 0..rows {
                    dot += f[(i, other)] * col[i];
                }
                for i in 0..rows {
                    col[i] -= dot * f[(i, other)];
                }
            }
            let norm = math::sqrt(col.iter().map(|v| v * v).sum());
            candidate += 1;
            if norm > 0.5 {
                let inv = 1.0 / norm;
                for i in 0..rows {
                    f[(i, j)] = col[i] * inv;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
        let data: Vec<f64> = (0..rows * cols).map(|_| rng.gen_range(-1.0..1.0)).collect();
        Matrix::from_vec(rows, cols, data)
    }

    /// Element-wise definition oracle: brute-force double-loop covariance.
    fn covariance_oracle(samples: &Matrix, centered: bool) -> Matrix {
        let (n, p) = (samples.rows(), samples.cols());
        let means = if centered {
            samples.col_means()
        } else {
            vec![0.0; p]
        };
        let mut c = Matrix::zeros(p, p);
        for a in 0..p {
            for b in 0..p {
                let mut acc = 0.0;
                for i in 0..n {
                    acc += (samples[(i, a)] - means[a]) * (samples[(i, b)] - means[b]);
                }
                c[(a, b)] = acc / (n as f64 - 1.0);
            }
        }
        c
    }

    #[test]
    fn covariance_identical_rows_is_zero() {
        let samples = Matrix::from_rows(&[&[3.0, -1.0, 2.0], &[3.0, -1.0, 2.0]]);
        let c = covariance(&samples, true).unwrap();
        assert_eq!(c.max_abs(), 0.0);
    }

    #[test]
    fn covariance_hand_example() {
        let samples = Matrix::from_rows(&[&[1.0, 0.0], &[-1.0, 0.0]]);
        let c = covariance(&samples, true).unwrap();
        let expected = Matrix::from_rows(&[&[2.0, 0.0], &[0.0, 0.0]]);
        for i in 0..2 {
            for j in 0..2 {
                assert!((c[(i, j)] - expected[(i, j)]).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn covariance_matches_double_loop_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let samples = random_matrix(&mut rng, 5, 3);
        for centered in [true, false] {
            let c = covariance(&samples, centered).unwrap();
            let oracle = covariance_oracle(&samples, centered);
            for i in 0..3 {
                for j in 0..3 {
                    assert!(
                        (c[(i, j)] - oracle[(i, j)]).abs() < 1e-12,
                        "mismatch at ({i},{j})"
                    );
                }
            }
        }
    }

    #[test]
    fn covariance_is_exactly_symmetric_and_psd() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let samples = random_matrix(&mut rng, 8, 4);
            let c = covariance(&samples, true).unwrap();
            for i in 0..4 {
                for j in 0..4 {
                    assert_eq!(c[(i, j)], c[(j, i)], "stored symmetry must be exact");
                }
            }
            let eig = sym_eig(&c).unwrap();
            for l in eig.values {
                assert!(l > -1e-10, "covariance eigenvalue {l} below PSD tolerance");
            }
        }
    }

    #[test]
    fn covariance_rejects_single_sample() {
        let samples = Matrix::from_rows(&[&[1.0, 2.0]]);
        assert_eq!(
            covariance(&samples, true),
            Err(LinalgError::InsufficientSamples { got: 1, min: 2 })
        );
    }

    #[test]
    fn sym_eig_identity() {
        let eig = sym_eig(&Matrix::identity(3)).unwrap();
        for l in &eig.values {
            assert!((l - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn sym_eig_diagonal_sorted_descending() {
        let m = Matrix::from_rows(&[&[5.0, 0.0, 0.0], &[0.0, 2.0, 0.0], &[0.0, 0.0, -1.0]]);
        let eig = sym_eig(&m).unwrap();
        assert!((eig.values[0] - 5.0).abs() < 1e-14);
        assert!((eig.values[1] - 2.0).abs() < 1e-14);
        assert!((eig.values[2] + 1.0).abs() < 1e-14);
    }

    #[test]
    fn sym_eig_reconstruction_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let raw = random_matrix(&mut rng, 4, 4);
            let mut m = raw.clone();
            for i in 0..4 {
                for j in 0..4 {
                    let v = 0.5 * (raw[(i, j)] + raw[(j, i)]);
                    m[(i, j)] = v;
                }
            }
            let eig = sym_eig(&m).unwrap();
            let scale = m.max_abs();

            // m v_i = lambda_i v_i
            for j in 0..4 {
                for i in 0..4 {
                    let mut mv = 0.0;
                    for k in 0..4 {
                        mv += m[(i, k)] * eig.vectors[(k, j)];
                    }
                    let resid = (mv - eig.values[j] * eig.vectors[(i, j)]).abs();
                    assert!(resid <= 1e-8 * scale, "residual {resid}");
                }
            }

            // V Lambda V^T == m
            for i in 0..4 {
                for j in 0..4 {
                    let mut acc = 0.0;
                    for k in 0..4 {
                        acc += eig.vectors[(i, k)] * eig.values[k] * eig.vectors[(j, k)];
                    }
                    assert!((acc - m[(i, j)]).abs() <= 1e-8 * scale.max(1.0));
                }
            }

            // Orthonormal eigenvectors.
            for a in 0..4 {
                for b in 0..4 {
                    let mut dot = 0.0;
                    for k in 0..4 {
                        dot += eig.vectors[(k, a)] * eig.vectors[(k, b)];
                    }
                    let expected = if a == b { 1.0 } else { 0.0 };
                    assert!((dot - expected).abs() < 1e-8);
                }
            }

            // Trace identity.
            let trace: f64 = (0..4).map(|i| m[(i, i)]).sum();
            let sum: f64 = eig.values.iter().sum();
            assert!((trace - sum).abs() <= 1e-8 * 4.0 * scale.max(1.0));
        }
    }

    #[test]
    fn sym_eig_rejects_asymmetric() {
        let m = Matrix::from_rows(&[&[1.0, 2.0], &[0.0, 1.0]]);
        match sym_eig(&m) {
            Err(LinalgError::NotSymmetric { defect }) => assert!((defect - 2.0).abs() < 1e-12),
            other => panic!("expected NotSymmetric, got {other:?}"),
        }
    }

    #[test]
    fn cholesky_identity() {
        let l = cholesky(&Matrix::identity(3), 0.0).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((l[(i, j)] - expected).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn cholesky_hand_factorization() {
        let m = Matrix::from_rows(&[&[4.0, 2.0], &[2.0, 3.0]]);
        let l = cholesky(&m, 0.0).unwrap();
        assert!((l[(0, 0)] - 2.0).abs() < 1e-15);
        assert!((l[(0, 1)]).abs() < 1e-15);
        assert!((l[(1, 0)] - 1.0).abs() < 1e-15);
        assert!((l[(1, 1)] - 2.0_f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn cholesky_ridge_rescues_singular() {
        let m = Matrix::from_rows(&[&[1.0, 1.0], &[1.0, 1.0]]);
        let ridge = 1e-4;
        let l = cholesky(&m, ridge).unwrap();
        // L L^T == m + ridge I
        let tol = 1e-10 * m.max_abs();
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = 0.0;
                for k in 0..2 {
                    acc += l[(i, k)] * l[(j, k)];
                }
                let target = m[(i, j)] + if i == j { ridge } else { 0.0 };
                assert!((acc - target).abs() <= tol);
            }
        }
    }

    #[test]
    fn cholesky_reports_failing_pivot() {
        let m = Matrix::from_rows(&[&[1.0, 0.0], &[0.0, -1.0]]);
        assert_eq!(
            cholesky(&m, 0.0),
            Err(LinalgError::NotPositiveDefinite { pivot: 1 })
        );
    }

    #[test]
    fn triangular_solves_invert_cholesky() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let x = random_matrix(&mut rng, 6, 3);
        let spd = covariance(&x, true).unwrap();
        let l = cholesky(&spd, 1e-9).unwrap();
        let b = random_matrix(&mut rng, 3, 2);
        let y = solve_lower(&l, &b);
        let check = l.matmul(&y);
        for i in 0..3 {
            for j in 0..2 {
                assert!((check[(i, j)] - b[(i, j)]).abs() < 1e-10);
            }
        }
        let z = solve_lower_transpose(&l, &b);
        let check_t = l.transpose().matmul(&z);
        for i in 0..3 {
            for j in 0..2 {
                assert!((check_t[(i, j)] - b[(i, j)]).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn thin_svd_zero_matrix() {
        let m = Matrix::zeros(3, 2);
        let svd = thin_svd(&m).unwrap();
        assert_eq!(svd.s, vec![0.0, 0.0]);
        // Orthonormal factors even at rank zero.
        for a in 0..2 {
            for b in 0..2 {
                let mut udot = 0.0;
                for k in 0..3 {
                    udot += svd.u[(k, a)] * svd.u[(k, b)];
                }
                let expected = if a == b { 1.0 } else { 0.0 };
                assert!((udot - expected).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn thin_svd_diagonal() {
        let m = Matrix::from_rows(&[&[3.0, 0.0], &[0.0, 1.0]]);
        let svd = thin_svd(&m).unwrap();
        assert!((svd.s[0] - 3.0).abs() < 1e-12);
        assert!((svd.s[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn thin_svd_reconstruction_and_orthonormality() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let m = random_matrix(&mut rng, 5, 3);
            let svd = thin_svd(&m).unwrap();
            let scale = m.max_abs();
            assert!(svd.s.windows(2).all(|w| w[0] >= w[1]), "descending order");
            assert!(svd.s.iter().all(|&s| s >= 0.0));
            for i in 0..5 {
                for j in 0..3 {
                    let mut acc = 0.0;
                    for k in 0..3 {
                        acc += svd.u[(i, k)] * svd.s[k] * svd.v[(j, k)];
                    }
                    assert!((acc - m[(i, j)]).abs() <= 1e-8 * scale);
                }
            }
            for a in 0..3 {
                for b in 0..3 {
                    let mut udot = 0.0;
                    for k in 0..5 {
                        udot += svd.u[(k, a)] * svd.u[(k, b)];
                    }
                    let mut vdot = 0.0;
                    for k in 0..3 {
                        vdot += svd.v[(k, a)] * svd.v[(k, b)];
                    }
                    let expected = if a == b { 1.0 } else { 0.0 };
                    assert!((udot - expected).abs() < 1e-8);
                    assert!((vdot - expected).abs() < 1e-8);
                }
            }
        }
    }

    #[test]
    fn thin_svd_transpose_same_singulars() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..5 {
            let m = random_matrix(&mut rng, 4, 6);
            let a = thin_svd(&m).unwrap();
            let b = thin_svd(&m.transpose()).unwrap();
            for (x, y) in a.s.iter().zip(&b.s) {
                assert!((x - y).abs() < 1e-10);
            }
        }
    }
}
