//! Dense exact linear algebra over a [`Field`].
//!
//! Matrices act on column vectors. A linear map `f` on a space with basis
//! `e_0..e_{n-1}` is stored with `f(e_c) = Σ_r M[r][c] e_r`.

use std::fmt;

use thiserror::Error;

use crate::scalar::{Field, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix is singular")]
    Singular,
    #[error("linear system has no solution")]
    Inconsistent,
    #[error("linear system is underdetermined ({0}-dimensional solution space)")]
    NonUnique(usize),
    #[error("shape mismatch: {0}")]
    Shape(String),
}

/// A column vector of scalars.
pub type Vector = Vec<Scalar>;

pub fn zero_vector(field: &Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn basis_vector(field: &Field, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

pub fn scale_vector(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

pub fn add_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Σ aᵢ bᵢ
pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = a[0].field().zero();
    for (x, y) in a.iter().zip(b) {
        acc.add_mul(x, y);
    }
    acc
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field.spec())?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Scalar>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            field: field.clone(),
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(field: &Field, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            field,
            rows.iter()
                .map(|row| row.iter().map(|&v| field.from_int(v)).collect())
                .collect(),
        )
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: &Field, rows: usize, columns: &[Vector]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Matrix::zeros(&self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.data[r * other.cols + c].add_mul(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        let mut out = zero_vector(&self.field, self.rows);
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                o.add_mul(self.get(r, c), x);
            }
        }
        out
    }

    /// Row vector times matrix: `(v M)_c = Σ_r v_r M[r][c]`.
    pub fn apply_left(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.rows, v.len(), "vector-matrix shape");
        let mut out = zero_vector(&self.field, self.cols);
        for (r, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                o.add_mul(x, self.get(r, c));
            }
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| s * x).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let v = self.get(r, c);
                    if r == c {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    /// Kronecker product; realizes `f ⊗ g` on the tensor basis `e_i ⊗ e_j ↦ i·n + j`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Matrix::zeros(&self.field, rows, cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        let b = other.get(r2, c2);
                        if !b.is_zero() {
                            out.set(r1 * other.rows + r2, c1 * other.cols + c2, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Integer power of a square matrix; negative powers invert.
    pub fn pow(&self, e: i64) -> Result<Matrix, LinalgError> {
        let base = if e < 0 { self.invert()? } else { self.clone() };
        let mut acc = Matrix::identity(&self.field, self.rows);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Smallest k ≥ 1 with M^k = I, searching up to `limit`.
    pub fn multiplicative_order(&self, limit: usize) -> Option<usize> {
        let mut acc = self.clone();
        for k in 1..=limit {
            if acc.is_identity() {
                return Some(k);
            }
            acc = acc.mul(self);
        }
        None
    }

    /// Reduced row echelon form with pivot columns.
    ///
    /// Pivoting is deterministic: columns are scanned left to right and the
    /// first row at or below the current one with a nonzero entry is taken.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                m.swap_rows(p, row);
            }
            let inv = m.get(row, col).inv().expect("nonzero pivot");
            for c in col..m.cols {
                let v = m.get(row, c);
                if !v.is_zero() {
                    let scaled = &inv * v;
                    m.set(row, c, scaled);
                }
            }
            let pivot_row: Vec<(usize, Scalar)> = (col..m.cols)
                .filter_map(|c| {
                    let v = m.get(row, c);
                    (!v.is_zero()).then(|| (c, v.clone()))
                })
                .collect();
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for (c, pv) in &pivot_row {
                    let prod = &factor * pv;
                    let cur = m.get_mut(r, *c);
                    *cur = &*cur - &prod;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the kernel, one vector per free column in increasing order.
    pub fn nullspace(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = zero_vector(&self.field, self.cols);
                v[free] = self.field.one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(i, free);
                }
                v
            })
            .collect()
    }

    /// The unique solution of `M x = b`.
    pub fn solve(&self, b: &[Scalar]) -> Result<Vector, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::Shape(format!(
                "right-hand side has length {}, expected {}",
                b.len(),
                self.rows
            )));
        }
        let mut aug = Matrix::zeros(&self.field, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(LinalgError::Inconsistent);
        }
        if pivots.len() < self.cols {
            return Err(LinalgError::NonUnique(self.cols - pivots.len()));
        }
        Ok((0..self.cols).map(|i| red.get(i, self.cols).clone()).collect())
    }

    pub fn invert(&self) -> Result<Matrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::Shape(format!(
                "cannot invert a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(&self.field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, self.field.one());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(LinalgError::Singular);
        }
        let mut inv = Matrix::zeros(&self.field, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.get(r, n + c).clone());
            }
        }
        Ok(inv)
    }

    pub fn commutes_with(&self, other: &Matrix) -> bool {
        self.mul(other) == other.mul(self)
    }
}

/// Dense cubic array of scalars, indexed `[i][j][k]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor3 {
    dim: usize,
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(field: &Field, dim: usize) -> Tensor3 {
        Tensor3 {
            dim,
            data: vec![field.zero(); dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let n = self.dim;
        self.data[(i * n + j) * n + k] = v;
    }

    /// The nonzero entries in index order.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        let n = self.dim;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(idx, v)| (idx / (n * n), (idx / n) % n, idx % n, v))
    }
}
