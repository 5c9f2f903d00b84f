//! Dense matrices over an exact field, Gauss-Jordan elimination and an
//! incrementally maintained reduced echelon basis.

use std::fmt;

use crate::arith::{ArithError, QPoly, Rational, RationalFunction};
use crate::field::Scalar;

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    /// Panics when the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
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

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.plus(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.minus(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.times(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Matrix::<F>::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).plus(&a.times(b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(F::zero(), |acc, (a, b)| acc.plus(&a.times(b)))
            })
            .collect()
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(blocks: &[&Matrix<F>]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn try_map<G: Scalar, E>(&self, f: impl FnMut(&F) -> Result<G, E>) -> Result<Matrix<G>, E> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut ech = Echelon::new(self.cols);
        for i in 0..self.rows {
            ech.insert(self.row(i).to_vec());
        }
        let pivots = ech.pivots();
        let mut out = Matrix::zeros(ech.rank(), self.cols);
        for (i, row) in ech.rows().iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                out.set(i, j, v.clone());
            }
        }
        (out, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{x : self * x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let mut ech = Echelon::new(self.cols);
        for i in 0..self.rows {
            ech.insert(self.row(i).to_vec());
        }
        ech.kernel()
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                F::one()
            } else {
                F::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }
}

impl Matrix<RationalFunction> {
    /// Substitutes `r = r0` into every entry.
    pub fn specialize(&self, r0: &Rational) -> Result<Matrix<Rational>, ArithError> {
        self.try_map(|f| f.eval(r0))
    }
}

impl Matrix<Rational> {
    /// `det(x I - self)` by the Faddeev-LeVerrier recursion.
    pub fn charpoly(&self) -> QPoly {
        assert!(
            self.is_square(),
            "characteristic polynomial of a non-square matrix"
        );
        let n = self.rows;
        let mut coeffs = vec![<Rational as Scalar>::zero(); n + 1];
        coeffs[n] = <Rational as Scalar>::one();
        let mut m = Matrix::<Rational>::zeros(n, n);
        for k in 1..=n {
            let mut next = self.mul(&m);
            let c = coeffs[n - k + 1].clone();
            for i in 0..n {
                let v = next.get(i, i).plus(&c);
                next.set(i, i, v);
            }
            m = next;
            let am = self.mul(&m);
            let trace = (0..n).fold(<Rational as Scalar>::zero(), |acc, i| acc + am.get(i, i));
            coeffs[n - k] = -trace / Rational::from_integer((k as i64).into());
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl<F: Scalar> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Rows kept in reduced echelon form: every row has leading entry one, and
/// each pivot column is zero in every other row. Rows are sorted by pivot.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    width: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Scalar> Echelon<F> {
    pub fn new(width: usize) -> Self {
        Echelon {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.pivots.clone()
    }

    pub fn into_rows(self) -> Vec<Vec<F>> {
        self.rows
    }

    /// `v` minus its projection onto the span along pivot coordinates.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (x, a) in v.iter_mut().zip(row) {
                if !a.is_zero() {
                    *x = x.minus(&c.times(a));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(F::is_zero)
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        let v = self.reduce(&v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inverse().expect("nonzero pivot");
        let v: Vec<F> = v.iter().map(|x| x.times(&inv)).collect();
        for row in &mut self.rows {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (x, a) in row.iter_mut().zip(&v) {
                if !a.is_zero() {
                    *x = x.minus(&c.times(a));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    /// Basis of `{x : row . x = 0 for every row}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let free: Vec<usize> = (0..self.width)
            .filter(|c| !self.pivots.contains(c))
            .collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![F::zero(); self.width];
                x[f] = F::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    x[p] = row[f].negated();
                }
                x
            })
            .collect()
    }

    /// Intersection of the two spans, as a new echelon basis.
    pub fn intersect(&self, other: &Self) -> Self {
        assert_eq!(self.width, other.width, "width mismatch");
        // Solve a.A = b.B by the kernel of the stacked matrix [A; -B]^T.
        let k = self.rank();
        let stacked = Matrix::from_fn(self.width, k + other.rank(), |i, j| {
            if j < k {
                self.rows[j][i].clone()
            } else {
                other.rows[j - k][i].negated()
            }
        });
        let mut out = Echelon::new(self.width);
        for coeffs in stacked.nullspace() {
            let mut v = vec![F::zero(); self.width];
            for (c, row) in coeffs.iter().zip(&self.rows) {
                if c.is_zero() {
                    continue;
                }
                for (x, a) in v.iter_mut().zip(row) {
                    *x = x.plus(&c.times(a));
                }
            }
            out.insert(v);
        }
        out
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for row in &other.rows {
            out.insert(row.clone());
        }
        out
    }
}

impl<F: Scalar> PartialEq for Echelon<F> {
    fn eq(&self, other: &Self) -> bool {
        self.width == other.width && self.rows == other.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_and_nullspace() {
        let a = qm(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let (r, piv) = a.rref();
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(r, qm(&[&[1, 0, 1], &[0, 1, 1]]));
        let ker = a.nullspace();
        assert_eq!(ker.len(), 1);
        assert!(a.mul_vec(&ker[0]).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn inverse_roundtrip() {
        let a = qm(&[&[2, 1], &[7, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert!(qm(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn charpoly_of_companion() {
        // companion matrix of x^3 - 2x^2 - 5x + 6
        let a = qm(&[&[0, 0, -6], &[1, 0, 5], &[0, 1, 2]]);
        assert_eq!(a.charpoly(), QPoly::from_ints(&[6, -5, -2, 1]));
    }

    #[test]
    fn echelon_intersection() {
        let mut a = Echelon::new(3);
        a.insert(vec![int(1), int(0), int(0)]);
        a.insert(vec![int(0), int(1), int(0)]);
        let mut b = Echelon::new(3);
        b.insert(vec![int(1), int(1), int(1)]);
        b.insert(vec![int(0), int(1), int(0)]);
        let c = a.intersect(&b);
        assert_eq!(c.rows(), &[vec![int(0), int(1), int(0)]]);
        assert_eq!(a.sum(&b).rank(), 3);
    }
}
