//! Row lattices: finitely generated subgroups of Q^n represented by an
//! integer generator matrix over a cleared common denominator. The basis is
//! kept in Hermite normal form, so equality of row lattices is equality of
//! the normalized pair (denominator, basis).

use super::{hnf, IntMat, RatMat};
use crate::{Error, Int, Rat, Result};
use num_traits::{One, Signed, Zero};

/// A full-rank lattice of rank = ambient dimension, stored as
/// `rows(basis) / den`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RowLattice {
    den: Int,
    basis: IntMat,
}

impl RowLattice {
    /// Standard lattice Z^n.
    pub fn standard(n: usize) -> Self {
        RowLattice { den: Int::one(), basis: IntMat::identity(n) }
    }

    /// Build from rational generator rows; requires full rank n.
    pub fn from_rat_rows(gens: &RatMat) -> Result<Self> {
        let (den, mat) = gens.clear_denominators();
        RowLattice::from_scaled(den, mat)
    }

    /// Build from integer generator rows over a denominator.
    pub fn from_scaled(den: Int, gens: IntMat) -> Result<Self> {
        assert!(den.is_positive());
        let n = gens.cols();
        let (h, _) = hnf(&gens);
        let mut rows: Vec<Vec<Int>> =
            (0..h.rows()).map(|i| h.row_vec(i)).filter(|r| r.iter().any(|x| !x.is_zero())).collect();
        if rows.len() < n {
            return Err(Error::RankDeficient(format!(
                "row lattice has rank {} in dimension {}",
                rows.len(),
                n
            )));
        }
        rows.truncate(n);
        let basis = IntMat::from_rows(rows);
        Ok(RowLattice { den, basis }.normalized())
    }

    fn normalized(mut self) -> Self {
        let mut g = self.den.clone();
        for i in 0..self.basis.rows() {
            for x in self.basis.row(i) {
                g = num_integer::gcd(g, x.clone());
                if g.is_one() {
                    return self;
                }
            }
        }
        if !g.is_one() && !g.is_zero() {
            self.den /= &g;
            self.basis = IntMat::from_rows(
                (0..self.basis.rows())
                    .map(|i| self.basis.row(i).iter().map(|x| x / &g).collect())
                    .collect(),
            );
        }
        self
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn den(&self) -> &Int {
        &self.den
    }

    pub fn basis(&self) -> &IntMat {
        &self.basis
    }

    /// Rational basis matrix (rows are generators).
    pub fn rat_basis(&self) -> RatMat {
        self.basis.to_rat().scale(&Rat::new(Int::one(), self.den.clone()))
    }

    /// Lattice sum A + B.
    pub fn sum(&self, other: &RowLattice) -> Result<RowLattice> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch("lattice sum".into()));
        }
        let den = num_integer::lcm(self.den.clone(), other.den.clone());
        let fa = &den / &self.den;
        let fb = &den / &other.den;
        let mut rows = Vec::with_capacity(self.basis.rows() + other.basis.rows());
        for i in 0..self.basis.rows() {
            rows.push(self.basis.row(i).iter().map(|x| x * &fa).collect());
        }
        for i in 0..other.basis.rows() {
            rows.push(other.basis.row(i).iter().map(|x| x * &fb).collect());
        }
        RowLattice::from_scaled(den, IntMat::from_rows(rows))
    }

    /// Dual with respect to the standard inner product: (basis/den)^{-T}.
    pub fn std_dual(&self) -> Result<RowLattice> {
        let inv = self.rat_basis().inverse()?;
        RowLattice::from_rat_rows(&inv.transpose())
    }

    /// Lattice intersection A cap B, computed by duality:
    /// (A cap B) = (A' + B')' with ' the standard dual.
    pub fn intersect(&self, other: &RowLattice) -> Result<RowLattice> {
        self.std_dual()?.sum(&other.std_dual()?)?.std_dual()
    }

    /// Membership test for a rational vector.
    pub fn contains(&self, v: &[Rat]) -> bool {
        // solve x * (basis/den) = v over the integers
        let b = self.rat_basis();
        let inv = match b.inverse() {
            Ok(m) => m,
            Err(_) => return false,
        };
        let mut coords = vec![Rat::zero(); self.dim()];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for j in 0..self.dim() {
                let t = vi * &inv[(i, j)];
                coords[j] += t;
            }
        }
        coords.iter().all(|c| c.is_integer())
    }

    /// True iff other is a sublattice of self.
    pub fn contains_lattice(&self, other: &RowLattice) -> bool {
        let b = other.rat_basis();
        (0..b.rows()).all(|i| self.contains(b.row(i)))
    }

    /// Covolume relative to Z^n: |det(basis)| / den^n.
    pub fn covolume(&self) -> Rat {
        let d = self.basis.det().abs();
        let denpow = num_traits::pow::pow(self.den.clone(), self.dim());
        Rat::new(d, denpow)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scaled(den: i64, rows: &[Vec<i64>]) -> RowLattice {
        RowLattice::from_scaled(Int::from(den), IntMat::from_i64_rows(rows)).unwrap()
    }

    #[test]
    fn sum_of_coprime_scalings_is_standard() {
        let a = scaled(1, &[vec![2, 0], vec![0, 2]]);
        let b = scaled(1, &[vec![3, 0], vec![0, 3]]);
        assert_eq!(a.sum(&b).unwrap(), RowLattice::standard(2));
    }

    #[test]
    fn intersect_of_scalings_is_lcm() {
        let a = scaled(1, &[vec![2, 0], vec![0, 2]]);
        let b = scaled(1, &[vec![3, 0], vec![0, 3]]);
        let c = a.intersect(&b).unwrap();
        assert_eq!(c, scaled(1, &[vec![6, 0], vec![0, 6]]));
    }

    #[test]
    fn intersect_with_half_integer_lattice() {
        // lattice generated by (1/2,1/2) and (0,1) intersected with Z^2 is Z^2
        let a = RowLattice::standard(2);
        let b = scaled(2, &[vec![1, 1], vec![0, 2]]);
        let c = a.intersect(&b).unwrap();
        // oracle: brute-force membership over a fundamental box
        for x in -4i64..=4 {
            for y in -4i64..=4 {
                let v = [Rat::from_integer(Int::from(x)), Rat::from_integer(Int::from(y))];
                let both = a.contains(&v) && b.contains(&v);
                assert_eq!(c.contains(&v), both, "({x},{y})");
            }
        }
        assert_eq!(c, RowLattice::standard(2));
    }

    #[test]
    fn sum_contains_both_and_intersection_contained() {
        let a = scaled(2, &[vec![1, 1], vec![0, 4]]);
        let b = scaled(3, &[vec![2, 1], vec![1, 2]]);
        let s = a.sum(&b).unwrap();
        let i = a.intersect(&b).unwrap();
        assert!(s.contains_lattice(&a) && s.contains_lattice(&b));
        assert!(a.contains_lattice(&i) && b.contains_lattice(&i));
    }

    #[test]
    fn rank_deficient_rejected() {
        let r = RowLattice::from_scaled(Int::one(), IntMat::from_i64_rows(&[vec![1, 2], vec![2, 4]]));
        assert!(matches!(r, Err(Error::RankDeficient(_))));
    }
}
