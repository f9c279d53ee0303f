//! Dense matrices over arbitrary-precision integers and their Smith normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::AlgebraError;

/// Row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self, AlgebraError> {
        if entries.len() != rows * cols {
            return Err(AlgebraError::Shape(format!(
                "{} entries supplied for a {}x{} matrix",
                entries.len(),
                rows,
                cols
            )));
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    /// Convenience constructor from small integers.
    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let entries = rows.iter().flatten().map(|&x| BigInt::from(x)).collect();
        IntMatrix { rows: r, cols: c, entries }
    }

    /// Builds a matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, AlgebraError> {
        if self.cols != other.rows {
            return Err(AlgebraError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hconcat(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows, "row count mismatch in hconcat");
        let mut cols = self.columns();
        cols.extend(other.columns());
        Self::from_columns(self.rows, &cols)
    }

    /// Vertical concatenation.
    pub fn vconcat(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols, "column count mismatch in vconcat");
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        IntMatrix { rows: self.rows + other.rows, cols: self.cols, entries }
    }

    /// Block diagonal sum.
    pub fn block_diag(&self, other: &IntMatrix) -> IntMatrix {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    /// Rows `start..end` as a new matrix.
    pub fn row_slice(&self, start: usize, end: usize) -> IntMatrix {
        let entries = self.entries[start * self.cols..end * self.cols].to_vec();
        IntMatrix { rows: end - start, cols: self.cols, entries }
    }

    pub fn select_columns(&self, idx: &[usize]) -> IntMatrix {
        let cols: Vec<_> = idx.iter().map(|&j| self.column(j)).collect();
        Self::from_columns(self.rows, &cols)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::Shape("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(p) => {
                        a.swap_rows(k, p);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = v / &prev;
                }
            }
            prev = a[(k, k)].clone();
        }
        Ok(sign * a[(n - 1, n - 1)].clone())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let v = &self[(src, j)] * k;
            self[(dst, j)] += v;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for i in 0..self.rows {
            let v = &self[(i, src)] * k;
            self[(i, dst)] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -&self[(r, j)];
            self[(r, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Result of a Smith normal form computation: `u * m * v == s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    /// Diagonal entries `d_1 | d_2 | ...` (length `min(rows, cols)`).
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows.min(self.s.cols)).map(|i| self.s[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

/// Smith normal form with unimodular transforms.
pub fn snf(m: &IntMatrix) -> Snf {
    let (rows, cols) = (m.rows, m.cols);
    let mut s = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry in the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = &s[(i, j)];
                    if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < s[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(s, u, v);
            };
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut dirty = false;
            for i in t + 1..rows {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let q = s[(i, t)].div_floor(&s[(t, t)]);
                let nq = -q;
                s.add_row(i, t, &nq);
                u.add_row(i, t, &nq);
                dirty |= !s[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let q = s[(t, j)].div_floor(&s[(t, t)]);
                let nq = -q;
                s.add_col(j, t, &nq);
                v.add_col(j, t, &nq);
                dirty |= !s[(t, j)].is_zero();
            }
            if dirty {
                continue;
            }
            // enforce divisibility of the trailing block by the pivot
            let pivot = s[(t, t)].clone();
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !s[(i, j)].is_multiple_of(&pivot));
            match offender {
                Some((i, _)) => {
                    let one = BigInt::one();
                    s.add_row(t, i, &one);
                    u.add_row(t, i, &one);
                }
                None => break,
            }
        }
    }
    finish(s, u, v)
}

fn finish(mut s: IntMatrix, mut u: IntMatrix, v: IntMatrix) -> Snf {
    for i in 0..s.rows.min(s.cols) {
        if s[(i, i)].is_negative() {
            s.negate_row(i);
            u.negate_row(i);
        }
    }
    Snf { s, u, v }
}

/// Integer kernel basis of `m` (as columns), i.e. a basis of `{x : m x = 0}`.
pub fn integer_kernel(m: &IntMatrix) -> IntMatrix {
    let d = snf(m);
    let r = d.rank();
    let idx: Vec<usize> = (r..m.cols).collect();
    d.v.select_columns(&idx)
}

/// A basis of the column space of `m` together with the coordinates that
/// express each original column in that basis.
pub(crate) fn column_basis(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let d = snf(m);
    let r = d.rank();
    // m v = u^{-1} s; the nonzero columns of m v form a basis of the column space
    let mv = m.mul(&d.v).expect("shape");
    let basis = mv.select_columns(&(0..r).collect::<Vec<_>>());
    // coordinates: column j of m equals basis * (s v^{-1})[..r, j] / d, computed via u m = s v^{-1}
    let um = d.u.mul(m).expect("shape");
    let mut coords = IntMatrix::zeros(r, m.cols);
    for i in 0..r {
        let di = &d.s[(i, i)];
        for j in 0..m.cols {
            let (q, rem) = um[(i, j)].div_rem(di);
            debug_assert!(rem.is_zero());
            coords[(i, j)] = q;
        }
    }
    (basis, coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMatrix) -> Snf {
        let d = snf(m);
        let prod = d.u.mul(m).unwrap().mul(&d.v).unwrap();
        assert_eq!(prod, d.s);
        assert_eq!(d.u.determinant().unwrap().abs(), BigInt::one());
        assert_eq!(d.v.determinant().unwrap().abs(), BigInt::one());
        d
    }

    #[test]
    fn identity_is_fixed() {
        let m = IntMatrix::identity(3);
        let d = check(&m);
        assert_eq!(d.s, m);
        assert_eq!(d.u, m);
        assert_eq!(d.v, m);
    }

    #[test]
    fn two_by_two_example() {
        let m = IntMatrix::from_rows_i64(&[vec![2, 4], vec![6, 8]]);
        let d = check(&m);
        assert_eq!(d.diagonal(), vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn zero_matrix() {
        let m = IntMatrix::zeros(2, 3);
        let d = check(&m);
        assert!(d.s.is_zero());
        assert_eq!(d.u, IntMatrix::identity(2));
        assert_eq!(d.v, IntMatrix::identity(3));
    }

    #[test]
    fn determinant_small() {
        let m = IntMatrix::from_rows_i64(&[vec![0, 2, 1], vec![1, 1, 0], vec![3, 0, 4]]);
        assert_eq!(m.determinant().unwrap(), BigInt::from(-11));
    }

    #[test]
    fn kernel_and_basis() {
        let m = IntMatrix::from_rows_i64(&[vec![1, 2, 3], vec![2, 4, 6]]);
        let k = integer_kernel(&m);
        assert_eq!(k.cols(), 2);
        assert!(m.mul(&k).unwrap().is_zero());
        let (b, c) = column_basis(&m);
        assert_eq!(b.cols(), 1);
        assert_eq!(b.mul(&c).unwrap(), m);
    }

    #[test]
    fn shape_errors() {
        assert!(IntMatrix::from_entries(2, 2, vec![BigInt::one()]).is_err());
        let a = IntMatrix::zeros(2, 3);
        assert!(a.mul(&a).is_err());
    }
}
