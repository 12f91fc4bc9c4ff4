//! Exact Gaussian elimination over a tower.

use crate::fields::{FieldElem, FieldTower};

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<FieldElem>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x = &*x - &(&f * y);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Basis of `{x : M x = 0}` read off the echelon form, one vector per free
/// column in increasing order.
pub fn nullspace(t: &FieldTower, m: &[Vec<FieldElem>], cols: usize) -> Vec<Vec<FieldElem>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![t.zero(); cols];
        v[free] = t.one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -&a[r][free];
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_of_small_system() {
        let t = FieldTower::rationals();
        let r = |v: &[i64]| v.iter().map(|&x| t.int(x)).collect::<Vec<_>>();
        let m = vec![r(&[1, 2, 3]), r(&[2, 4, 6])];
        let ns = nullspace(&t, &m, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let s = m[0].iter().zip(v).fold(t.zero(), |a, (x, y)| &a + &(x * y));
            assert!(s.is_zero());
        }
        assert!(nullspace(&t, &[r(&[1, 0]), r(&[0, 1])], 2).is_empty());
    }
}
