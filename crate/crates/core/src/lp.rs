//! Exact feasibility test for convex-combination membership.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Whether `target` is a convex combination of `points`.
///
/// Solves `Σ λ_i p_i = target, Σ λ_i = 1, λ ≥ 0` with a phase-one simplex
/// over exact rationals, using Bland's rule so it always terminates.
pub fn in_convex_hull(target: &[i64], points: &[&[i64]]) -> bool {
    if points.is_empty() {
        return false;
    }
    let d = target.len();
    let rows = d + 1;
    let cols = points.len();
    let q = |x: i64| BigRational::from_integer(BigInt::from(x));

    // tableau: [A | I_artificial | b], one row per constraint, rhs made nonnegative
    let width = cols + rows + 1;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(rows + 1);
    for r in 0..rows {
        let (mut row, mut rhs): (Vec<BigRational>, BigRational) = if r < d {
            (points.iter().map(|p| q(p[r])).collect(), q(target[r]))
        } else {
            (vec![BigRational::one(); cols], BigRational::one())
        };
        if rhs.is_negative() {
            row.iter_mut().for_each(|x| *x = -x.clone());
            rhs = -rhs;
        }
        row.extend((0..rows).map(|k| {
            if k == r {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        }));
        row.push(rhs);
        t.push(row);
    }
    // objective: minimize the sum of artificials, stored as reduced costs
    let mut obj = vec![BigRational::zero(); width];
    for row in &t {
        for j in 0..cols {
            obj[j] -= &row[j];
        }
        obj[width - 1] -= &row[width - 1];
    }
    t.push(obj);
    let mut basic: Vec<usize> = (cols..cols + rows).collect();

    while let Some(enter) = (0..cols + rows).find(|&j| t[rows][j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for r in 0..rows {
            if t[r][enter].is_positive() {
                let ratio = &t[r][width - 1] / &t[r][enter];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && basic[r] < basic[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let Some((pr, _)) = leave else {
            // unbounded cannot happen: the objective is bounded below by zero
            unreachable!("phase-one objective is bounded");
        };
        let pivot = t[pr][enter].clone();
        for x in t[pr].iter_mut() {
            *x /= &pivot;
        }
        let pivot_row = t[pr].clone();
        for (r, row) in t.iter_mut().enumerate() {
            if r == pr || row[enter].is_zero() {
                continue;
            }
            let f = row[enter].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
        basic[pr] = enter;
    }
    t[rows][width - 1].is_zero()
}
