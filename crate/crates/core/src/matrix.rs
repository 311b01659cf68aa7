//! Dense matrices and vectors over a single [`Field`].
//!
//! Storage is row-major. Rows and columns are indexed from 0. Every
//! constructor checks that entries share the matrix's field, so the inner
//! loops can use the panicking operators safely.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::field::{Field, FieldElement, FieldError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("inconsistent linear system")]
    Inconsistent,
    #[error("matrix is singular")]
    Singular,
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vector {
    field: Field,
    data: Vec<FieldElement>,
}

impl Vector {
    pub fn new(field: Field, data: Vec<FieldElement>) -> Result<Vector, MatrixError> {
        for x in &data {
            if x.field() != field {
                return Err(MatrixError::FieldMismatch(field, x.field()));
            }
        }
        Ok(Vector { field, data })
    }

    pub fn zeros(field: Field, n: usize) -> Vector {
        Vector {
            field,
            data: vec![field.zero(); n],
        }
    }

    /// The standard basis vector `e_k` of length `n`.
    pub fn unit(field: Field, n: usize, k: usize) -> Vector {
        let mut v = Vector::zeros(field, n);
        v.data[k] = field.one();
        v
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.data
    }

    pub fn get(&self, i: usize) -> &FieldElement {
        &self.data[i]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldElement::is_zero)
    }

    pub fn scale(&self, c: &FieldElement) -> Vector {
        Vector {
            field: self.field,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn dot(&self, other: &Vector) -> Result<FieldElement, MatrixError> {
        if self.len() != other.len() {
            return Err(MatrixError::Dimension(format!("dot of lengths {} and {}", self.len(), other.len())));
        }
        if self.field != other.field {
            return Err(MatrixError::FieldMismatch(self.field, other.field));
        }
        let mut acc = self.field.zero();
        for (a, b) in self.data.iter().zip(&other.data) {
            acc.add_mul_assign(a, b);
        }
        Ok(acc)
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Debug, Clone)]
pub struct RowEchelon {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

/// Solution set of `M x = b`: one particular solution plus a null-space basis.
#[derive(Debug, Clone)]
pub struct Solution {
    pub particular: Vector,
    pub null_space: Vec<Vector>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> FieldElement) -> Result<Matrix, MatrixError> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let x = f(i, j);
                if x.field() != field {
                    return Err(MatrixError::FieldMismatch(field, x.field()));
                }
                data.push(x);
            }
        }
        Ok(Matrix { field, rows, cols, data })
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<FieldElement>>) -> Result<Matrix, MatrixError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(MatrixError::Dimension("ragged rows".into()));
        }
        Matrix::from_fn(field, r, c, |i, j| rows[i][j].clone())
    }

    /// Convenience for tests and examples: integer entries.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Result<Matrix, MatrixError> {
        let rows = rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect();
        Matrix::from_rows(field, rows)
    }

    pub fn from_columns(field: Field, columns: &[Vector]) -> Result<Matrix, MatrixError> {
        let n = columns.first().map_or(0, Vector::len);
        if columns.iter().any(|c| c.len() != n) {
            return Err(MatrixError::Dimension("columns of unequal length".into()));
        }
        Matrix::from_fn(field, n, columns.len(), |i, j| columns[j].data[i].clone())
    }

    pub fn diagonal(field: Field, diag: &[FieldElement]) -> Result<Matrix, MatrixError> {
        let n = diag.len();
        Matrix::from_fn(field, n, n, |i, j| if i == j { diag[i].clone() } else { field.zero() })
    }

    pub fn field(&self) -> Field {
        self.field
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

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: FieldElement) -> Result<(), MatrixError> {
        if x.field() != self.field {
            return Err(MatrixError::FieldMismatch(self.field, x.field()));
        }
        self.data[i * self.cols + j] = x;
        Ok(())
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector {
            field: self.field,
            data: (0..self.rows).map(|i| self.get(i, j).clone()).collect(),
        }
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldElement::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.field, self.rows)
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix {
            field: self.field,
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    fn check_same(&self, other: &Matrix, what: &str) -> Result<(), MatrixError> {
        if self.field != other.field {
            return Err(MatrixError::FieldMismatch(self.field, other.field));
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(MatrixError::Dimension(format!(
                "{what} of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.check_same(other, "sum")?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn checked_sub(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.check_same(other, "difference")?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(&FieldElement, &FieldElement) -> FieldElement) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn checked_mul(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        if self.field != other.field {
            return Err(MatrixError::FieldMismatch(self.field, other.field));
        }
        if self.cols != other.rows {
            return Err(MatrixError::Dimension(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j].add_mul_assign(a, other.get(k, j));
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &FieldElement) -> Result<Matrix, MatrixError> {
        if c.field() != self.field {
            return Err(MatrixError::FieldMismatch(self.field, c.field()));
        }
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        })
    }

    pub fn mul_vec(&self, v: &Vector) -> Result<Vector, MatrixError> {
        if self.field != v.field {
            return Err(MatrixError::FieldMismatch(self.field, v.field));
        }
        if self.cols != v.len() {
            return Err(MatrixError::Dimension(format!("{}x{} times vector of length {}", self.rows, self.cols, v.len())));
        }
        let data = (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(&v.data) {
                    acc.add_mul_assign(a, b);
                }
                acc
            })
            .collect();
        Ok(Vector { field: self.field, data })
    }

    fn require_square(&self) -> Result<usize, MatrixError> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn trace(&self) -> Result<FieldElement, MatrixError> {
        let n = self.require_square()?;
        Ok((0..n).fold(self.field.zero(), |acc, i| &acc + self.get(i, i)))
    }

    /// `tr(self * other)` without forming the product.
    pub fn trace_of_product(&self, other: &Matrix) -> Result<FieldElement, MatrixError> {
        if self.rows != other.cols || self.cols != other.rows {
            return Err(MatrixError::Dimension("trace of product".into()));
        }
        if self.field != other.field {
            return Err(MatrixError::FieldMismatch(self.field, other.field));
        }
        let mut acc = self.field.zero();
        for i in 0..self.rows {
            for k in 0..self.cols {
                acc.add_mul_assign(self.get(i, k), other.get(k, i));
            }
        }
        Ok(acc)
    }

    /// `(X - r_0 I)(X - r_1 I)...(X - r_{k-1} I)`; the identity for no roots.
    pub fn poly_eval_roots(&self, roots: &[FieldElement]) -> Result<Matrix, MatrixError> {
        let n = self.require_square()?;
        let mut acc = Matrix::identity(self.field, n);
        for r in roots {
            if r.field() != self.field {
                return Err(MatrixError::FieldMismatch(self.field, r.field()));
            }
            let mut shifted = self.clone();
            for i in 0..n {
                shifted.data[i * n + i] = &shifted.data[i * n + i] - r;
            }
            acc = acc.checked_mul(&shifted)?;
        }
        Ok(acc)
    }

    /// `Σ c_k X^k` by Horner's rule; coefficients lowest degree first.
    pub fn poly_eval_coeffs(&self, coeffs: &[FieldElement]) -> Result<Matrix, MatrixError> {
        let n = self.require_square()?;
        let mut acc = Matrix::zeros(self.field, n, n);
        for c in coeffs.iter().rev() {
            acc = acc.checked_mul(self)?;
            let shift = Matrix::identity(self.field, n).scale(c)?;
            acc = acc.checked_add(&shift)?;
        }
        Ok(acc)
    }

    /// Gauss-Jordan elimination; the pivot is the first nonzero entry of
    /// the column, so null-space bases are deterministic.
    pub fn rref(&self) -> RowEchelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let x = m.get(r, j) * &inv;
                m.data[r * m.cols + j] = x;
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let x = m.get(i, j) - &(&factor * m.get(r, j));
                    m.data[i * m.cols + j] = x;
                }
            }
            pivots.push(c);
            r += 1;
        }
        RowEchelon { reduced: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of `{x : M x = 0}`, one vector per free column.
    pub fn null_space(&self) -> Vec<Vector> {
        let RowEchelon { reduced, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = Vector::zeros(self.field, self.cols);
                v.data[f] = self.field.one();
                for (row, &p) in pivots.iter().enumerate() {
                    v.data[p] = -reduced.get(row, f);
                }
                v
            })
            .collect()
    }

    pub fn solve(&self, b: &Vector) -> Result<Solution, MatrixError> {
        if b.len() != self.rows {
            return Err(MatrixError::Dimension(format!("right side of length {} for {} rows", b.len(), self.rows)));
        }
        if b.field != self.field {
            return Err(MatrixError::FieldMismatch(self.field, b.field));
        }
        let aug = Matrix::from_fn(self.field, self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b.data[i].clone()
            }
        })?;
        let RowEchelon { reduced, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(MatrixError::Inconsistent);
        }
        let mut particular = Vector::zeros(self.field, self.cols);
        for (row, &p) in pivots.iter().enumerate() {
            particular.data[p] = reduced.get(row, self.cols).clone();
        }
        Ok(Solution {
            particular,
            null_space: self.null_space(),
        })
    }

    /// The unique `X` with `self * X = rhs`; `self` must be invertible.
    pub fn solve_matrix(&self, rhs: &Matrix) -> Result<Matrix, MatrixError> {
        let n = self.require_square()?;
        if rhs.rows != n {
            return Err(MatrixError::Dimension("right side row count".into()));
        }
        if rhs.field != self.field {
            return Err(MatrixError::FieldMismatch(self.field, rhs.field));
        }
        let aug = Matrix::from_fn(self.field, n, n + rhs.cols, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else {
                rhs.get(i, j - n).clone()
            }
        })?;
        let RowEchelon { reduced, pivots } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(MatrixError::Singular);
        }
        Matrix::from_fn(self.field, n, rhs.cols, |i, j| reduced.get(i, n + j).clone())
    }

    pub fn inverse(&self) -> Result<Matrix, MatrixError> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(self.clone());
        }
        self.solve_matrix(&Matrix::identity(self.field, n))
    }

    /// Bareiss fraction-free determinant. Independent of [`Matrix::rref`],
    /// which makes it useful as a cross-check.
    pub fn determinant(&self) -> Result<FieldElement, MatrixError> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(self.field.one());
        }
        let mut m = self.clone();
        let mut sign = self.field.one();
        let mut prev = self.field.one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m.get(i, k).is_zero()) else {
                    return Ok(self.field.zero());
                };
                m.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(m.get(i, j) * m.get(k, k)) - &(m.get(i, k) * m.get(k, j));
                    m.data[i * n + j] = num.checked_div(&prev)?;
                }
            }
            prev = m.get(k, k).clone();
        }
        Ok(&sign * m.get(n - 1, n - 1))
    }
}

/// True iff the vectors are a basis of the space they live in.
pub fn is_basis(vectors: &[Vector]) -> Result<bool, MatrixError> {
    let Some(first) = vectors.first() else {
        return Ok(true);
    };
    let n = first.len();
    if vectors.iter().any(|v| v.len() != n) {
        return Err(MatrixError::Dimension("vectors of unequal length".into()));
    }
    if vectors.len() != n {
        return Ok(false);
    }
    Ok(Matrix::from_columns(first.field, vectors)?.rank() == n)
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(0);
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format!("{:>width$}", cells[i * self.cols + j])).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul<&FieldElement> for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &FieldElement) -> Matrix {
        self.scale(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul<&Vector> for &Matrix {
    type Output = Vector;
    fn mul(self, rhs: &Vector) -> Vector {
        self.mul_vec(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn arb_field() -> impl Strategy<Value = Field> {
        prop_oneof![Just(Field::rational()), Just(Field::prime(101).unwrap()), Just(Field::prime(5).unwrap())]
    }

    pub(crate) fn arb_matrix(field: Field, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec((-6i64..=6, 1i64..=3), rows * cols).prop_map(move |v| {
            let mut it = v.into_iter();
            Matrix::from_fn(field, rows, cols, |_, _| {
                let (n, d) = it.next().unwrap();
                if field.is_rational() {
                    field.ratio(n, d).unwrap()
                } else {
                    field.from_i64(n)
                }
            })
            .unwrap()
        })
    }

    fn naive_mul(x: &Matrix, y: &Matrix) -> Matrix {
        let f = x.field();
        Matrix::from_fn(f, x.rows(), y.cols(), |i, j| {
            (0..x.cols()).fold(f.zero(), |acc, k| &acc + &(x.get(i, k) * y.get(k, j)))
        })
        .unwrap()
    }

    fn q() -> Field {
        Field::rational()
    }

    #[test]
    fn identity_is_neutral() {
        let x = Matrix::from_i64(q(), &[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(&Matrix::identity(q(), 2) * &x, x);
    }

    #[test]
    fn x_minus_x_is_zero() {
        let x = Matrix::from_i64(q(), &[&[1, -2], &[3, 7]]).unwrap();
        assert!((&x + &(&x * &q().from_i64(-1))).is_zero());
    }

    #[test]
    fn trace_examples() {
        assert_eq!(Matrix::identity(q(), 3).trace().unwrap(), q().from_i64(3));
        let n = Matrix::from_i64(q(), &[&[0, 5, 1], &[0, 0, 2], &[0, 0, 0]]).unwrap();
        assert!(n.trace().unwrap().is_zero());
        assert!(Matrix::zeros(q(), 2, 3).trace().is_err());
    }

    #[test]
    fn mismatched_shapes_and_fields_are_errors() {
        let a = Matrix::identity(q(), 2);
        let b = Matrix::identity(q(), 3);
        assert!(a.checked_add(&b).is_err());
        assert!(a.checked_mul(&b).is_err());
        let c = Matrix::identity(Field::prime(7).unwrap(), 2);
        assert!(matches!(a.checked_add(&c), Err(MatrixError::FieldMismatch(..))));
    }

    #[test]
    fn solve_identity_returns_rhs() {
        let b = Vector::new(q(), vec![q().from_i64(3), q().ratio(1, 2).unwrap()]).unwrap();
        let s = Matrix::identity(q(), 2).solve(&b).unwrap();
        assert_eq!(s.particular, b);
        assert!(s.null_space.is_empty());
    }

    #[test]
    fn singular_consistent_system_has_parametric_solution() {
        let m = Matrix::from_i64(q(), &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]).unwrap();
        let b = Vector::new(q(), vec![q().from_i64(6), q().from_i64(12), q().from_i64(2)]).unwrap();
        let s = m.solve(&b).unwrap();
        assert_eq!(&m * &s.particular, b);
        assert_eq!(s.null_space.len(), 3 - m.rank());
        assert_eq!(s.null_space.len(), 1);
        assert!((&m * &s.null_space[0]).is_zero());
    }

    #[test]
    fn inconsistent_system_is_an_error() {
        let m = Matrix::from_i64(q(), &[&[1, 1], &[1, 1]]).unwrap();
        let b = Vector::new(q(), vec![q().from_i64(0), q().from_i64(1)]).unwrap();
        assert_eq!(m.solve(&b).unwrap_err(), MatrixError::Inconsistent);
    }

    #[test]
    fn poly_eval_small_cases() {
        let x = Matrix::from_i64(q(), &[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(x.poly_eval_roots(&[]).unwrap(), Matrix::identity(q(), 2));
        assert_eq!(x.poly_eval_roots(&[q().zero()]).unwrap(), x);
        let (r0, r1) = (q().from_i64(2), q().from_i64(-1));
        let shift = |r: &FieldElement| &x - &(&Matrix::identity(q(), 2) * r);
        assert_eq!(x.poly_eval_roots(&[r0.clone(), r1.clone()]).unwrap(), &shift(&r0) * &shift(&r1));
    }

    #[test]
    fn basis_examples() {
        let f = q();
        let std: Vec<Vector> = (0..3).map(|k| Vector::unit(f, 3, k)).collect();
        assert!(is_basis(&std).unwrap());
        let rep = vec![std[0].clone(), std[0].clone(), std[2].clone()];
        assert!(!is_basis(&rep).unwrap());
        assert!(is_basis(&[std[0].clone(), Vector::unit(f, 2, 0)]).is_err());
    }

    #[test]
    fn determinant_examples() {
        let m = Matrix::from_i64(q(), &[&[0, 2, 1], &[1, 1, 1], &[2, 0, 3]]).unwrap();
        // 0*(3-0) - 2*(3-2) + 1*(0-2) = -4
        assert_eq!(m.determinant().unwrap(), q().from_i64(-4));
        assert!(Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]).unwrap().determinant().unwrap().is_zero());
    }

    fn arb_square() -> impl Strategy<Value = Matrix> {
        (arb_field(), 1usize..5).prop_flat_map(|(f, n)| arb_matrix(f, n, n))
    }

    fn arb_pair() -> impl Strategy<Value = (Matrix, Matrix)> {
        (arb_field(), 1usize..5).prop_flat_map(|(f, n)| (arb_matrix(f, n, n), arb_matrix(f, n, n)))
    }

    proptest! {
        #[test]
        fn product_matches_naive_definition((x, y) in arb_pair()) {
            prop_assert_eq!(&x * &y, naive_mul(&x, &y));
        }

        #[test]
        fn trace_is_cyclic((x, y) in arb_pair()) {
            prop_assert_eq!((&x * &y).trace().unwrap(), (&y * &x).trace().unwrap());
            prop_assert_eq!(x.trace_of_product(&y).unwrap(), (&x * &y).trace().unwrap());
        }

        #[test]
        fn rank_nullity(m in (arb_field(), 1usize..5, 1usize..6).prop_flat_map(|(f, r, c)| arb_matrix(f, r, c))) {
            let ns = m.null_space();
            prop_assert_eq!(m.rank() + ns.len(), m.cols());
            for v in &ns {
                prop_assert!((&m * v).is_zero());
            }
        }

        #[test]
        fn solve_reproduces_rhs((m, x) in (arb_field(), 1usize..5, 1usize..5)
            .prop_flat_map(|(f, r, c)| (arb_matrix(f, r, c), arb_matrix(f, c, 1))))
        {
            // b is in the column space by construction.
            let b = &m * &x.column(0);
            let s = m.solve(&b).unwrap();
            prop_assert_eq!(&m * &s.particular, b);
        }

        #[test]
        fn roots_and_coefficients_agree(m in arb_square(), roots in proptest::collection::vec(-4i64..4, 0..4)) {
            let f = m.field();
            let roots: Vec<FieldElement> = roots.into_iter().map(|r| f.from_i64(r)).collect();
            // expand Π (x - r) into coefficients, lowest degree first
            let mut coeffs = vec![f.one()];
            for r in &roots {
                let mut next = vec![f.zero(); coeffs.len() + 1];
                for (k, c) in coeffs.iter().enumerate() {
                    next[k + 1] = &next[k + 1] + c;
                    next[k] = &next[k] - &(c * r);
                }
                coeffs = next;
            }
            prop_assert_eq!(m.poly_eval_roots(&roots).unwrap(), m.poly_eval_coeffs(&coeffs).unwrap());
        }

        #[test]
        fn invertibility_matches_determinant(m in arb_square()) {
            let det = m.determinant().unwrap();
            match m.inverse() {
                Ok(inv) => {
                    prop_assert!(!det.is_zero());
                    prop_assert!((&m * &inv).is_identity());
                }
                Err(MatrixError::Singular) => prop_assert!(det.is_zero()),
                Err(e) => prop_assert!(false, "unexpected error {e}"),
            }
            prop_assert_eq!(det.is_zero(), m.rank() < m.rows());
        }

        #[test]
        fn determinant_is_multiplicative((x, y) in arb_pair()) {
            prop_assert_eq!((&x * &y).determinant().unwrap(), &x.determinant().unwrap() * &y.determinant().unwrap());
        }
    }
}
