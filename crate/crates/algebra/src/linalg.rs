//! Exact rank over the rationals of sparse integer matrices.
//!
//! Rows are eliminated fraction-free in `i128` with content removal after each
//! step; on overflow the matrix is re-ranked densely with Bareiss' algorithm
//! over `BigInt`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// A sparse row: `(column, value)` pairs with strictly increasing columns and nonzero values.
pub type SparseRow = Vec<(u32, i64)>;

pub fn rank(rows: &[SparseRow]) -> usize {
    sparse_rank(rows).unwrap_or_else(|| bareiss_rank(rows))
}

fn sparse_rank(rows: &[SparseRow]) -> Option<usize> {
    let mut pivots: HashMap<u32, Vec<(u32, i128)>> = HashMap::new();
    for row in rows {
        let mut r: Vec<(u32, i128)> = row.iter().map(|&(c, v)| (c, v as i128)).collect();
        while let Some(&(c, a)) = r.first() {
            match pivots.get(&c) {
                Some(p) => {
                    let b = p[0].1;
                    r = combine(b, &r, a, p)?;
                    normalize(&mut r);
                }
                None => {
                    pivots.insert(c, r);
                    break;
                }
            }
        }
    }
    Some(pivots.len())
}

/// `b * r - a * p`, dropping zeros; `None` on overflow.
fn combine(b: i128, r: &[(u32, i128)], a: i128, p: &[(u32, i128)]) -> Option<Vec<(u32, i128)>> {
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let (c, v) = match (r.get(i), p.get(j)) {
            (Some(&(cr, vr)), Some(&(cp, vp))) if cr == cp => {
                i += 1;
                j += 1;
                (cr, b.checked_mul(vr)?.checked_sub(a.checked_mul(vp)?)?)
            }
            (Some(&(cr, vr)), Some(&(cp, _))) if cr < cp => {
                i += 1;
                (cr, b.checked_mul(vr)?)
            }
            (Some(&(cr, vr)), None) => {
                i += 1;
                (cr, b.checked_mul(vr)?)
            }
            (_, Some(&(cp, vp))) => {
                j += 1;
                (cp, a.checked_mul(vp)?.checked_neg()?)
            }
            (None, None) => unreachable!(),
        };
        if v != 0 {
            out.push((c, v));
        }
    }
    Some(out)
}

fn normalize(r: &mut [(u32, i128)]) {
    let g = r.iter().fold(0i128, |g, &(_, v)| g.gcd(&v));
    if g > 1 {
        for e in r.iter_mut() {
            e.1 /= g;
        }
    }
}

/// Dense fraction-free elimination; every intermediate entry is a minor of the input.
pub fn bareiss_rank(rows: &[SparseRow]) -> usize {
    let ncols = rows
        .iter()
        .flat_map(|r| r.iter().map(|&(c, _)| c as usize + 1))
        .max()
        .unwrap_or(0);
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let mut dense = vec![BigInt::zero(); ncols];
            for &(c, v) in r {
                dense[c as usize] = BigInt::from(v);
            }
            dense
        })
        .collect();
    let nrows = a.len();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let num = &a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c];
                debug_assert!((&num % &prev).is_zero(), "inexact Bareiss step");
                a[r][c] = num / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].abs();
        rank += 1;
    }
    rank
}
