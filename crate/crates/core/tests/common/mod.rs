#![allow(dead_code)]

use tl_seminormal::arith::Rational;

/// Solves `A x = b` over `Q` by Gauss-Jordan elimination; `None` unless the
/// solution exists and is unique.
pub fn solve_unique(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>, unknowns: usize) -> Option<Vec<Rational>> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..unknowns {
        let Some(piv) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, piv);
        b.swap(r, piv);
        let inv = a[r][c].inv().unwrap();
        for x in a[r].iter_mut().take(unknowns) {
            *x = &*x * &inv;
        }
        b[r] = &b[r] * &inv;
        let pivot_row = a[r].clone();
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row).take(unknowns) {
                    *x -= y * &f;
                }
                let v = &b[r] * &f;
                b[i] -= v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    if pivots.len() < unknowns || b[r..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    Some(b[..unknowns].to_vec())
}

pub fn q(a: i64, b: i64) -> Rational {
    Rational::new(a, b)
}
