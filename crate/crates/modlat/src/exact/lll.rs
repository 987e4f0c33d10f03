//! LLL reduction of a positive definite Gram matrix in exact rational
//! arithmetic, delta = 3/4. Works on the Gram matrix alone; the basis change
//! is returned as a unimodular matrix U with G' = U^T G U.

use super::IntMat;
use crate::{Error, Int, Rat, Result};
use num_traits::{One, Signed, Zero};

struct GramSchmidt {
    mu: Vec<Vec<Rat>>,
    b: Vec<Rat>,
}

/// Exact Gram–Schmidt data from a Gram matrix. Fails if a pivot is not
/// positive (matrix not positive definite).
fn gram_schmidt(g: &IntMat) -> Result<GramSchmidt> {
    let n = g.rows();
    let mut mu = vec![vec![Rat::zero(); n]; n];
    let mut b = vec![Rat::zero(); n];
    for i in 0..n {
        for j in 0..i {
            let mut num = Rat::from_integer(g[(i, j)].clone());
            for l in 0..j {
                let t = &mu[j][l] * &mu[i][l] * &b[l];
                num -= t;
            }
            mu[i][j] = num / &b[j];
        }
        let mut bi = Rat::from_integer(g[(i, i)].clone());
        for l in 0..i {
            let t = &mu[i][l] * &mu[i][l] * &b[l];
            bi -= t;
        }
        if !bi.is_positive() {
            return Err(Error::NotPositiveDefinite);
        }
        b[i] = bi;
    }
    Ok(GramSchmidt { mu, b })
}

/// Apply b_k <- b_k - q b_j on a Gram matrix: G <- E^T G E.
fn gram_translate(g: &mut IntMat, k: usize, j: usize, q: &Int) {
    let n = g.rows();
    for c in 0..n {
        let t = q * &g[(j, c)];
        g[(k, c)] -= t;
    }
    for r in 0..n {
        let t = q * &g[(r, j)];
        g[(r, k)] -= t;
    }
}

fn gram_swap(g: &mut IntMat, k: usize) {
    let n = g.rows();
    for c in 0..n {
        let t = g[(k - 1, c)].clone();
        g[(k - 1, c)] = g[(k, c)].clone();
        g[(k, c)] = t;
    }
    for r in 0..n {
        let t = g[(r, k - 1)].clone();
        g[(r, k - 1)] = g[(r, k)].clone();
        g[(r, k)] = t;
    }
}

fn col_translate(u: &mut IntMat, k: usize, j: usize, q: &Int) {
    for r in 0..u.rows() {
        let t = q * &u[(r, j)];
        u[(r, k)] -= t;
    }
}

fn col_swap(u: &mut IntMat, k: usize) {
    for r in 0..u.rows() {
        let t = u[(r, k - 1)].clone();
        u[(r, k - 1)] = u[(r, k)].clone();
        u[(r, k)] = t;
    }
}

fn round(x: &Rat) -> Int {
    let two = Int::from(2);
    num_integer::Integer::div_floor(&(x.numer() * &two + x.denom()), &(x.denom() * &two))
}

/// LLL-reduce a symmetric positive definite integer Gram matrix.
/// Returns (G', U) with U unimodular, G' = U^T G U, delta = 3/4.
pub fn lll_reduce(g: &IntMat) -> Result<(IntMat, IntMat)> {
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = g.rows();
    let mut gg = g.clone();
    let mut u = IntMat::identity(n);
    if n <= 1 {
        gram_schmidt(&gg)?;
        return Ok((gg, u));
    }
    let mut gs = gram_schmidt(&gg)?;
    let half = Rat::new(Int::one(), Int::from(2));
    let delta = Rat::new(Int::from(3), Int::from(4));
    let mut k = 1usize;
    while k < n {
        // size-reduce row k
        let mut touched = false;
        for j in (0..k).rev() {
            if gs.mu[k][j].abs() > half {
                let q = round(&gs.mu[k][j]);
                gram_translate(&mut gg, k, j, &q);
                col_translate(&mut u, k, j, &q);
                touched = true;
            }
        }
        if touched {
            gs = gram_schmidt(&gg)?;
        }
        let lhs = gs.b[k].clone();
        let rhs = (&delta - &gs.mu[k][k - 1] * &gs.mu[k][k - 1]) * &gs.b[k - 1];
        if lhs >= rhs {
            k += 1;
        } else {
            gram_swap(&mut gg, k);
            col_swap(&mut u, k);
            gs = gram_schmidt(&gg)?;
            k = k.max(2) - 1;
        }
    }
    Ok((gg, u))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMat {
        IntMat::from_i64_rows(rows)
    }

    #[test]
    fn identity_fixed() {
        let g = IntMat::identity(3);
        let (gr, u) = lll_reduce(&g).unwrap();
        assert_eq!(gr, g);
        assert_eq!(u, IntMat::identity(3));
    }

    #[test]
    fn two_dim_reduction() {
        let g = m(&[vec![5, 4], vec![4, 5]]);
        let (gr, u) = lll_reduce(&g).unwrap();
        assert_eq!(gr.det(), Int::from(9));
        assert_eq!(u.transpose().mul(&g).mul(&u), gr);
        assert!(u.is_unimodular());
        // Gauss-reduced form of this lattice: exhaustive search over small
        // transforms finds diagonal entries (1, 9) is impossible (min is 1?);
        // minimum of 5x^2+8xy+5y^2 is 2 at (1,-1), second min 5.
        assert!(gr[(0, 0)] <= Int::from(5) && gr[(1, 1)] <= Int::from(5));
        assert_eq!(gr[(0, 0)], Int::from(2));
    }

    #[test]
    fn rejects_indefinite() {
        let g = m(&[vec![1, 0], vec![0, -1]]);
        assert!(matches!(lll_reduce(&g), Err(Error::NotPositiveDefinite)));
        let g = m(&[vec![0, 1], vec![1, 0]]);
        assert!(matches!(lll_reduce(&g), Err(Error::NotPositiveDefinite)));
    }
}
