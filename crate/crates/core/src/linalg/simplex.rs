//! Exact phase-one simplex.

use log::trace;
use num_traits::{One, Signed, Zero};

use crate::poly::Rational;

/// Finds `x >= 0` with `a x = b`, or `None` when no such `x` exists.
///
/// `a` is given row-major with `n` columns. Pivoting follows Bland's rule,
/// so the method terminates on degenerate inputs.
pub fn feasible(a: &[Vec<Rational>], b: &[Rational], n: usize) -> Option<Vec<Rational>> {
    let m = a.len();
    if m == 0 {
        return Some(vec![Rational::zero(); n]);
    }
    // Columns: 0..n originals, n..n+m artificials, last column is the rhs.
    let w = n + m + 1;
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m + 1);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row = Vec::with_capacity(w);
        for j in 0..n {
            row.push(if flip { -a[i][j].clone() } else { a[i][j].clone() });
        }
        for k in 0..m {
            row.push(if k == i { Rational::one() } else { Rational::zero() });
        }
        row.push(if flip { -b[i].clone() } else { b[i].clone() });
        t.push(row);
    }
    // Objective row: minimize the sum of artificials, expressed in reduced form.
    let mut obj = vec![Rational::zero(); w];
    for row in &t {
        for j in 0..n {
            obj[j] -= &row[j];
        }
        obj[w - 1] -= &row[w - 1];
    }
    t.push(obj);
    let mut basis: Vec<usize> = (n..n + m).collect();

    let mut pivots = 0usize;
    loop {
        let z = &t[m];
        let Some(col) = (0..n + m).find(|&j| z[j].is_negative()) else {
            break;
        };
        let mut best: Option<(usize, Rational)> = None;
        for i in 0..m {
            if t[i][col].is_positive() {
                let r = &t[i][w - 1] / &t[i][col];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => r < *br || (r == *br && basis[i] < basis[*bi]),
                };
                if better {
                    best = Some((i, r));
                }
            }
        }
        // Phase one is bounded below by zero, so a pivot row always exists.
        let (row, _) = best.expect("phase one is bounded");
        pivot(&mut t, row, col);
        basis[row] = col;
        pivots += 1;
    }
    trace!("simplex: {m}x{n}, {pivots} pivots");
    if !t[m][w - 1].is_zero() {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[i][w - 1].clone();
        }
    }
    Some(x)
}

fn pivot(t: &mut [Vec<Rational>], row: usize, col: usize) {
    let p = t[row][col].clone();
    if !p.is_one() {
        for v in t[row].iter_mut() {
            *v /= &p;
        }
    }
    let prow = t[row].clone();
    for (i, r) in t.iter_mut().enumerate() {
        if i == row || r[col].is_zero() {
            continue;
        }
        let f = r[col].clone();
        for (v, pv) in r.iter_mut().zip(&prow) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect()
    }

    #[test]
    fn small_systems() {
        // x + y = 2, x - y = 0
        let a = m(&[&[1, 1], &[1, -1]]);
        let x = feasible(&a, &[rat(2), rat(0)], 2).unwrap();
        assert_eq!(x, vec![rat(1), rat(1)]);
        // x = -1 has no nonnegative solution
        assert!(feasible(&m(&[&[1]]), &[rat(-1)], 1).is_none());
        // degenerate: x - y = 0, x - y = 0, x + y = 0
        let a = m(&[&[1, -1], &[1, -1], &[1, 1]]);
        assert_eq!(feasible(&a, &[rat(0), rat(0), rat(0)], 2).unwrap(), vec![rat(0), rat(0)]);
    }
}
