//! Exact linear algebra over arbitrary-precision integers and rationals.
//!
//! Everything is computed without rounding: determinants by fraction-free
//! Bareiss elimination, inverses by rational Gauss–Jordan, lattice sums and
//! intersections through the Hermite normal form, and LLL reduction with
//! exact rational Gram–Schmidt data.

mod hnf;
mod lll;
mod rowlat;

pub use hnf::hnf;
pub use lll::lll_reduce;
pub use rowlat::RowLattice;

use crate::{Error, Int, Rat, Result};
use num_traits::{One, Signed, Zero};

/// Dense row-major matrix with big-integer entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

/// Dense row-major matrix with exact rational entries.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![Int::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Int::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        IntMat::from_rows(rows.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect())
    }

    pub fn diagonal(entries: &[Int]) -> Self {
        let mut m = IntMat::zero(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Int> {
        self.row(i).to_vec()
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> IntMat {
        let mut t = IntMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = IntMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let term = a * &other[(k, j)];
                    out[(i, j)] += term;
                }
            }
        }
        out
    }

    /// v * self for a row vector v.
    pub fn row_mul(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![Int::zero(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                out[j] += vi * &self[(i, j)];
            }
        }
        out
    }

    /// self * v for a column vector v.
    pub fn col_mul(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![Int::zero(); self.rows];
        for i in 0..self.rows {
            let mut acc = Int::zero();
            for j in 0..self.cols {
                acc += &self[(i, j)] * &v[j];
            }
            out[i] = acc;
        }
        out
    }

    pub fn scale(&self, c: &Int) -> IntMat {
        let mut out = self.clone();
        for x in &mut out.data {
            *x *= c;
        }
        out
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> Int {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Int::one();
        }
        let mut a = self.clone();
        let mut sign = 1i32;
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return Int::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[(k, k)] * &a[(i, j)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = num / &prev;
                }
                a[(i, k)] = Int::zero();
            }
            prev = a[(k, k)].clone();
        }
        let d = a[(n - 1, n - 1)].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    /// True iff the matrix is unimodular (square with determinant +-1).
    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.det().abs().is_one()
    }

    pub fn to_rat(&self) -> RatMat {
        RatMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| Rat::from_integer(x.clone())).collect(),
        }
    }

    /// Basis of the left kernel { x : x * self = 0 }, saturated (full preimage).
    pub fn left_kernel(&self) -> IntMat {
        let (h, u) = hnf(self);
        let mut rows = Vec::new();
        for i in 0..h.rows() {
            if h.row(i).iter().all(|x| x.is_zero()) {
                rows.push(u.row_vec(i));
            }
        }
        if rows.is_empty() {
            IntMat::zero(0, self.rows)
        } else {
            IntMat::from_rows(rows)
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = Int;
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        &mut self.data[i * self.cols + j]
    }
}

impl std::fmt::Debug for IntMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntMat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i).iter().map(|x| x.to_string()).collect::<Vec<_>>())?;
        }
        write!(f, "]")
    }
}

impl RatMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn transpose(&self) -> RatMat {
        let mut t = RatMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMat) -> RatMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = RatMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let term = a * &other[(k, j)];
                    out[(i, j)] += term;
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> RatMat {
        let mut out = self.clone();
        for x in &mut out.data {
            *x *= c;
        }
        out
    }

    /// Exact inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<RatMat> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RatMat::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&i| !a[(i, col)].is_zero())
                .ok_or_else(|| Error::RankDeficient("singular matrix in inverse".into()))?;
            if pivot != col {
                for j in 0..n {
                    let tmp = a[(pivot, j)].clone();
                    a[(pivot, j)] = a[(col, j)].clone();
                    a[(col, j)] = tmp;
                    let tmp = inv[(pivot, j)].clone();
                    inv[(pivot, j)] = inv[(col, j)].clone();
                    inv[(col, j)] = tmp;
                }
            }
            let p = a[(col, col)].clone();
            for j in 0..n {
                a[(col, j)] /= &p;
                inv[(col, j)] /= &p;
            }
            for i in 0..n {
                if i == col || a[(i, col)].is_zero() {
                    continue;
                }
                let f = a[(i, col)].clone();
                for j in 0..n {
                    let t = &f * &a[(col, j)];
                    a[(i, j)] -= t;
                    let t = &f * &inv[(col, j)];
                    inv[(i, j)] -= t;
                }
            }
        }
        Ok(inv)
    }

    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let pivot = match (col..n).find(|&i| !a[(i, col)].is_zero()) {
                Some(p) => p,
                None => return Rat::zero(),
            };
            if pivot != col {
                for j in 0..n {
                    let tmp = a[(pivot, j)].clone();
                    a[(pivot, j)] = a[(col, j)].clone();
                    a[(col, j)] = tmp;
                }
                det = -det;
            }
            let p = a[(col, col)].clone();
            det *= &p;
            for i in col + 1..n {
                if a[(i, col)].is_zero() {
                    continue;
                }
                let f = &a[(i, col)] / &p;
                for j in col..n {
                    let t = &f * &a[(col, j)];
                    a[(i, j)] -= t;
                }
            }
        }
        det
    }

    /// All entries integral?
    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    /// Convert to an integer matrix; panics unless `is_integral`.
    pub fn to_int(&self) -> IntMat {
        IntMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.to_integer()).collect(),
        }
    }

    /// Clear denominators: returns (d, M) with self = M / d and d > 0 minimal.
    pub fn clear_denominators(&self) -> (Int, IntMat) {
        let mut den = Int::one();
        for x in &self.data {
            den = num_integer::lcm(den, x.denom().clone());
        }
        let m = IntMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| (x * Rat::from_integer(den.clone())).to_integer()).collect(),
        };
        (den, m)
    }
}

impl std::ops::Index<(usize, usize)> for RatMat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl std::fmt::Debug for RatMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "RatMat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i).iter().map(|x| x.to_string()).collect::<Vec<_>>())?;
        }
        write!(f, "]")
    }
}

/// Inner product x^T G y.
pub fn gram_pairing(g: &IntMat, x: &[Int], y: &[Int]) -> Int {
    let gy = g.col_mul(y);
    x.iter().zip(gy.iter()).map(|(a, b)| a * b).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMat {
        IntMat::from_i64_rows(rows)
    }

    #[test]
    fn det_small() {
        assert_eq!(m(&[vec![1, 2], vec![3, 4]]).det(), Int::from(-2));
        assert_eq!(m(&[vec![2, 1], vec![1, 2]]).det(), Int::from(3));
        assert_eq!(m(&[vec![0, 0], vec![0, 0]]).det(), Int::from(0));
        // 3x3 with a zero pivot forcing a swap
        assert_eq!(m(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 5]]).det(), Int::from(-5));
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(&[vec![2, 1], vec![1, 3]]).to_rat();
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), RatMat::identity(2));
    }

    #[test]
    fn left_kernel_of_rank_deficient() {
        let a = m(&[vec![1, 2], vec![2, 4], vec![0, 0]]);
        let k = a.left_kernel();
        assert_eq!(k.rows(), 2);
        for i in 0..k.rows() {
            let prod = a.row_mul(k.row(i));
            assert!(prod.iter().all(|x| x.is_zero()));
        }
    }
}
