//! Dense matrices over any [`Scalar`] field.

use std::fmt;
use std::ops::Mul;

use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::scalar::{Scalar, Sign};

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Column vector.
pub type Vector<T> = Vec<T>;

impl<T: Scalar> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has wrong length");
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_vec(r, c, rows.into_iter().flatten().collect())
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, cols: &[Vector<T>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| T::from_i64(x)).collect()).collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_vec(rows, cols, vec![T::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Permutation matrix sending basis vector `j` to basis vector `perm[j]`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Self::zeros(n, n);
        for (j, &i) in perm.iter().enumerate() {
            m[(i, j)] = T::one();
        }
        m
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

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix::from_vec(self.rows, self.cols, self.data.iter().map(f).collect())
    }

    pub fn scaled(&self, c: &T) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Self::from_vec(self.rows, self.cols, data)
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b.clone()).collect();
        Self::from_vec(self.rows, self.cols, data)
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let prod = a.clone() * b.clone();
                        let cur = std::mem::replace(&mut out[(i, j)], T::zero());
                        out[(i, j)] = cur + prod;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vector<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn pow(&self, mut k: u32) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.matmul(&base);
            }
            base = base.matmul(&base);
            k >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| if i == j { self[(i, j)].is_one() } else { self[(i, j)].is_zero() })
            })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Every column has exactly one nonzero entry, equal to ±1, and the
    /// nonzero positions form a permutation.
    pub fn is_signed_permutation(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let mut seen = vec![false; self.rows];
        let minus_one = -T::one();
        for j in 0..self.cols {
            let mut hit = None;
            for i in 0..self.rows {
                let x = &self[(i, j)];
                if x.is_zero() {
                    continue;
                }
                if hit.is_some() || !(x.is_one() || *x == minus_one) {
                    return false;
                }
                hit = Some(i);
            }
            match hit {
                Some(i) if !seen[i] => seen[i] = true,
                _ => return false,
            }
        }
        true
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = T::one() / m[(r, c)].clone();
            for j in c..m.cols {
                let x = std::mem::replace(&mut m[(r, j)], T::zero());
                m[(r, j)] = x * inv.clone();
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let delta = f.clone() * m[(r, j)].clone();
                    let x = std::mem::replace(&mut m[(i, j)], T::zero());
                    m[(i, j)] = x - delta;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{x : A x = 0}`.
    pub fn kernel(&self) -> Vec<Vector<T>> {
        let (r, pivots) = self.rref();
        let free = (0..self.cols).filter(|c| !pivots.contains(c));
        free.map(|f| {
            let mut v = vec![T::zero(); self.cols];
            v[f] = T::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[(i, f)].clone();
            }
            v
        })
        .collect()
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = T::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    /// Solve `A x = b` for a matrix with independent columns; `None` when
    /// `b` is outside the column space.
    pub fn solve(&self, b: &[T]) -> Option<Vector<T>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) || pivots.len() < self.cols {
            return None;
        }
        Some((0..self.cols).map(|i| r[(i, self.cols)].clone()).collect())
    }

    /// Determinant by fraction-free (Bareiss) elimination with row swaps.
    pub fn determinant(&self) -> T {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut m = self.clone();
        let mut prev = T::one();
        let mut negate = false;
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(p) => {
                        m.swap_rows(k, p);
                        negate = !negate;
                    }
                    None => return T::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m[(k, k)].clone() * m[(i, j)].clone() - m[(i, k)].clone() * m[(k, j)].clone())
                        / prev.clone();
                    m[(i, j)] = v;
                }
            }
            prev = m[(k, k)].clone();
        }
        let d = m[(n - 1, n - 1)].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// Leading principal minors `D_1, …, D_n`, by Bareiss elimination without
    /// pivoting. Stops early (with the zero minor last) if some `D_k` is 0.
    pub fn leading_principal_minors(&self) -> Vec<T> {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut prev = T::one();
        let mut minors = Vec::with_capacity(n);
        for k in 0..n {
            let pivot = m[(k, k)].clone();
            minors.push(pivot.clone());
            if pivot.is_zero() {
                break;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (pivot.clone() * m[(i, j)].clone() - m[(i, k)].clone() * m[(k, j)].clone())
                        / prev.clone();
                    m[(i, j)] = v;
                }
            }
            prev = pivot;
        }
        minors
    }

    /// Sylvester's criterion on a symmetric matrix.
    pub fn is_positive_definite(&self) -> bool {
        let minors = self.leading_principal_minors();
        minors.len() == self.rows && minors.iter().all(|d| d.sign() == Sign::Positive)
    }

    /// `xᵀ A y`.
    pub fn bilinear(&self, x: &[T], y: &[T]) -> T {
        let ay = self.mul_vec(y);
        x.iter()
            .zip(&ay)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    /// `Mᵀ G M = G`.
    pub fn preserves_form(&self, gram: &Self) -> bool {
        self.transpose().matmul(gram).matmul(self) == *gram
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

/// Greedily keep the vectors that increase the rank of the span.
pub fn independent_subset<T: Scalar>(dim: usize, vectors: &[Vector<T>]) -> Vec<Vector<T>> {
    let mut kept: Vec<Vector<T>> = Vec::new();
    for v in vectors {
        let mut trial = kept.clone();
        trial.push(v.clone());
        if Matrix::from_columns(dim, &trial).rank() == trial.len() {
            kept = trial;
        }
    }
    kept
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span<T: Scalar>(basis: &[Vector<T>], v: &[T]) -> bool {
    if basis.is_empty() {
        return v.iter().all(T::is_zero);
    }
    Matrix::from_columns(v.len(), basis).solve(v).is_some()
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, rhs: Self) -> Matrix<T> {
        self.matmul(rhs)
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for (i, row) in cells.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (j, cell) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{cell:>width$}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// Array of rows, each entry as its exact string form.
impl<T: Scalar> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};

    type Q = Matrix<Rational>;

    #[test]
    fn determinant_and_minors() {
        let m = Q::from_i64_rows(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        assert_eq!(m.determinant(), rat(4, 1));
        assert_eq!(m.leading_principal_minors(), vec![rat(2, 1), rat(3, 1), rat(4, 1)]);
        assert!(m.is_positive_definite());
        let swap = Q::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(swap.determinant(), rat(-1, 1));
        let singular = Q::from_i64_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(singular.determinant(), rat(0, 1));
        assert!(!singular.is_positive_definite());
    }

    #[test]
    fn kernel_and_rank() {
        let m = Q::from_i64_rows(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(|x| x == &rat(0, 1)));
        }
    }

    #[test]
    fn inverse_and_solve() {
        let m = Q::from_i64_rows(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.matmul(&inv).is_identity());
        assert!(Q::from_i64_rows(&[&[1, 2], &[2, 4]]).inverse().is_none());
        let x = m.solve(&[rat(3, 1), rat(2, 1)]).unwrap();
        assert_eq!(x, vec![rat(1, 1), rat(1, 1)]);
        let tall = Q::from_i64_rows(&[&[1], &[1]]);
        assert!(tall.solve(&[rat(1, 1), rat(2, 1)]).is_none());
    }

    #[test]
    fn float_instantiation() {
        let m = Matrix::<f64>::from_i64_rows(&[&[2, -1], &[-1, 2]]);
        assert!((m.determinant() - 3.0).abs() < 1e-12);
        assert!(m.is_positive_definite());
    }

    #[test]
    fn signed_permutations() {
        assert!(Q::from_i64_rows(&[&[0, -1], &[1, 0]]).is_signed_permutation());
        assert!(!Q::from_i64_rows(&[&[1, 0], &[4, -1]]).is_signed_permutation());
        assert!(!Q::from_i64_rows(&[&[1, 1], &[0, 0]]).is_signed_permutation());
    }

    #[test]
    fn permutation_matrix_sends_basis() {
        let p = Q::permutation(&[2, 0, 1]);
        let e0 = vec![rat(1, 1), rat(0, 1), rat(0, 1)];
        assert_eq!(p.mul_vec(&e0), vec![rat(0, 1), rat(0, 1), rat(1, 1)]);
    }
}
