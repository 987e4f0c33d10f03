//! Row-style Hermite normal form.
//!
//! The convention fixed for the whole crate is the lower-triangular
//! staircase: the pivot of each row is its *last* nonzero entry, pivot
//! columns strictly increase from row to row, pivots are positive, and the
//! entries below a pivot are reduced into `[0, pivot)`. Rows that reduce to
//! zero are kept (at the top), so `H` always has the shape of the input.

use super::IntMat;
use crate::Int;
use num_traits::{Signed, Zero};

/// Hermite normal form: returns (H, U) with U unimodular and U * A = H.
pub fn hnf(a: &IntMat) -> (IntMat, IntMat) {
    // Lower-triangular HNF of A = row-flip of the leftmost-pivot echelon
    // form of A with its columns reversed.
    let flipped = flip_cols(a);
    let (h_up, u_up) = hnf_upper(&flipped);
    (flip_rows(&flip_cols(&h_up)), flip_rows(&u_up))
}

/// Leftmost-pivot row echelon HNF: pivots strictly increase, are positive,
/// entries above a pivot lie in [0, pivot), zero rows are last.
fn hnf_upper(a: &IntMat) -> (IntMat, IntMat) {
    let (rows, cols) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut u = IntMat::identity(rows);
    let mut r = 0usize;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // Euclidean elimination within column c, rows r..
        loop {
            let mut best: Option<usize> = None;
            for i in r..rows {
                if h[(i, c)].is_zero() {
                    continue;
                }
                best = match best {
                    None => Some(i),
                    Some(b) if h[(i, c)].abs() < h[(b, c)].abs() => Some(i),
                    keep => keep,
                };
            }
            let Some(p) = best else { break };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..rows {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = div_round(&h[(i, c)], &h[(r, c)]);
                row_sub(&mut h, i, r, &q);
                row_sub(&mut u, i, r, &q);
                if !h[(i, c)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            row_neg(&mut h, r);
            row_neg(&mut u, r);
        }
        // reduce the entries above the pivot into [0, pivot)
        for i in 0..r {
            let q = num_integer::Integer::div_floor(&h[(i, c)], &h[(r, c)]);
            if !q.is_zero() {
                row_sub(&mut h, i, r, &q);
                row_sub(&mut u, i, r, &q);
            }
        }
        r += 1;
    }
    (h, u)
}

fn div_round(a: &Int, b: &Int) -> Int {
    // quotient minimizing |a - q b|
    let q = num_integer::Integer::div_floor(a, b);
    let r = a - &q * b;
    if r.abs() * 2 > b.abs() {
        q + 1
    } else {
        q
    }
}

fn row_sub(m: &mut IntMat, i: usize, j: usize, q: &Int) {
    for c in 0..m.cols() {
        let t = q * &m[(j, c)];
        m[(i, c)] -= t;
    }
}

fn row_neg(m: &mut IntMat, i: usize) {
    for c in 0..m.cols() {
        let v = -m[(i, c)].clone();
        m[(i, c)] = v;
    }
}

fn flip_cols(a: &IntMat) -> IntMat {
    let mut out = IntMat::zero(a.rows(), a.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            out[(i, a.cols() - 1 - j)] = a[(i, j)].clone();
        }
    }
    out
}

fn flip_rows(a: &IntMat) -> IntMat {
    let mut out = IntMat::zero(a.rows(), a.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            out[(a.rows() - 1 - i, j)] = a[(i, j)].clone();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn m(rows: &[Vec<i64>]) -> IntMat {
        IntMat::from_i64_rows(rows)
    }

    fn check_hnf_shape(h: &IntMat) {
        // pivots (last nonzero per row) strictly increase; positive; entries
        // below a pivot reduced
        let mut last_pivot: Option<usize> = None;
        for i in 0..h.rows() {
            let piv = (0..h.cols()).rev().find(|&j| !h[(i, j)].is_zero());
            if let Some(p) = piv {
                assert!(h[(i, p)].is_positive(), "pivot not positive");
                if let Some(lp) = last_pivot {
                    assert!(p > lp, "pivot columns not increasing");
                }
                for k in i + 1..h.rows() {
                    assert!(
                        !h[(k, p)].is_negative() && h[(k, p)] < h[(i, p)],
                        "entry below pivot not reduced"
                    );
                }
                last_pivot = Some(p);
            }
        }
    }

    #[test]
    fn already_in_form() {
        let a = m(&[vec![2, 0], vec![0, 2]]);
        let (h, u) = hnf(&a);
        assert_eq!(h, a);
        assert_eq!(u, IntMat::identity(2));
    }

    #[test]
    fn det_preserved_up_to_sign() {
        let a = m(&[vec![1, 2], vec![3, 4]]);
        let (h, u) = hnf(&a);
        assert!(u.det().abs().is_one());
        assert_eq!(h.det().abs(), Int::from(2));
        assert_eq!(u.mul(&a), h);
        check_hnf_shape(&h);
    }

    #[test]
    fn zero_row() {
        let a = m(&[vec![0, 0]]);
        let (h, u) = hnf(&a);
        assert_eq!(h, a);
        assert!(u.det().abs().is_one());
    }

    #[test]
    fn random_span_preserved() {
        // mutual membership via HNF solve is exercised at the lattice level;
        // here check U*A = H and unimodularity on a few fixed cases
        let cases = [
            vec![vec![4i64, 6, 2], vec![6, 4, 8], vec![2, 8, 9]],
            vec![vec![0i64, 5], vec![5, 0], vec![10, 10]],
            vec![vec![1i64, 1, 1], vec![0, 2, 2], vec![0, 0, 3]],
        ];
        for rows in &cases {
            let a = m(rows);
            let (h, u) = hnf(&a);
            assert!(u.det().abs().is_one());
            assert_eq!(u.mul(&a), h);
            check_hnf_shape(&h);
        }
    }
}
