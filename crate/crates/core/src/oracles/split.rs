//! Witt index by repeatedly splitting off the hyperbolic plane through an
//! isotropic vector and rebuilding the orthogonal complement as a new form.

use super::{is_isotropic, Decision, SearchBudget, WittReport};
use crate::error::{Error, Result};
use crate::fields::FieldElem;
use crate::forms::{GramSpace, QForm};

fn axpy(a: &FieldElem, x: &[FieldElem], y: &[FieldElem]) -> Vec<FieldElem> {
    y.iter().zip(x).map(|(yi, xi)| if a.is_zero() || xi.is_zero() { yi.clone() } else { yi + &(a * xi) }).collect()
}

fn unit(f: &QForm, i: usize) -> Vec<FieldElem> {
    let t = f.tower();
    (0..f.dim()).map(|k| if k == i { t.one() } else { t.zero() }).collect()
}

/// Basis of the orthogonal complement of the hyperbolic plane through the
/// isotropic vector `v`.
fn complement_basis(f: &QForm, g: &GramSpace, v: &[FieldElem]) -> Result<Vec<Vec<FieldElem>>> {
    let n = f.dim();
    let (j, bvj) = (0..n)
        .map(|j| (j, g.polar_eval(v, &unit(f, j))))
        .find(|(_, b)| !b.is_zero())
        .ok_or_else(|| Error::Degenerate("isotropic vector in the radical".into()))?;
    let l = (0..n).find(|&l| l != j && !v[l].is_zero()).expect("support beyond the partner index");
    let inv = bvj.inv()?;
    let w: Vec<FieldElem> = unit(f, j).iter().map(|x| x * &inv).collect();
    let qw = g.eval(&w);
    let w = axpy(&-&qw, v, &w);
    let mut out = Vec::with_capacity(n - 2);
    for i in (0..n).filter(|&i| i != j && i != l) {
        let e = unit(f, i);
        let a = -&g.polar_eval(&e, &w);
        let b = -&g.polar_eval(&e, v);
        out.push(axpy(&b, &w, &axpy(&a, v, &e)));
    }
    Ok(out)
}

fn diagonalize(f: &QForm, g: &GramSpace, mut us: Vec<Vec<FieldElem>>) -> Result<QForm> {
    let t = f.tower();
    let two = t.int(2);
    let mut entries = Vec::with_capacity(us.len());
    while !us.is_empty() {
        let idx = match us.iter().position(|u| !g.eval(u).is_zero()) {
            Some(i) => i,
            None => {
                let (i, k) = (0..us.len())
                    .flat_map(|i| (i + 1..us.len()).map(move |k| (i, k)))
                    .find(|&(i, k)| !g.polar_eval(&us[i], &us[k]).is_zero())
                    .ok_or_else(|| Error::Degenerate("complement is totally isotropic".into()))?;
                us[i] = axpy(&t.one(), &us[k].clone(), &us[i]);
                i
            }
        };
        let w = us.remove(idx);
        let q = g.eval(&w);
        let denom = (&two * &q).inv()?;
        for u in us.iter_mut() {
            let c = -&(&g.polar_eval(u, &w) * &denom);
            *u = axpy(&c, &w, u);
        }
        entries.push(q);
    }
    QForm::diag(t.clone(), entries)
}

fn symplectic(f: &QForm, g: &GramSpace, mut us: Vec<Vec<FieldElem>>) -> Result<QForm> {
    let t = f.tower();
    let mut pairs = Vec::with_capacity(us.len() / 2);
    while !us.is_empty() {
        let e = us.remove(0);
        let k = (0..us.len())
            .find(|&k| !g.polar_eval(&e, &us[k]).is_zero())
            .ok_or_else(|| Error::Degenerate("complement has a radical".into()))?;
        let b = g.polar_eval(&e, &us[k]).inv()?;
        let h: Vec<FieldElem> = us.remove(k).iter().map(|x| x * &b).collect();
        let (qe, qh) = (g.eval(&e), g.eval(&h));
        // Q(xe + yh) = Q(e)x² + xy + Q(h)y² ≅ c[1, c·Q(h)] with c = Q(e)
        pairs.push(if !qe.is_zero() {
            let a = &qe * &qh;
            (qe, a)
        } else if !qh.is_zero() {
            (qh, t.zero())
        } else {
            (t.one(), t.zero())
        });
        for u in us.iter_mut() {
            let a = g.polar_eval(u, &h);
            let c = g.polar_eval(u, &e);
            *u = axpy(&c, &h, &axpy(&a, &e, u));
        }
    }
    QForm::char2(t.clone(), pairs, Vec::new())
}

/// The form on the orthogonal complement of a hyperbolic plane containing
/// the isotropic vector `v`.
pub fn split_off_plane(f: &QForm, v: &[FieldElem]) -> Result<QForm> {
    let g = f.gram();
    let basis = complement_basis(f, &g, v)?;
    if f.is_char2() {
        symplectic(f, &g, basis)
    } else {
        diagonalize(f, &g, basis)
    }
}

/// Witt index computed only from isotropic vectors: find one, split off its
/// hyperbolic plane, repeat on the complement.
pub fn witt_index_by_splitting(f: &QForm, budget: &SearchBudget) -> Result<WittReport> {
    if !f.is_nonsingular() {
        return Err(Error::SingularInput);
    }
    let mut cur = f.clone();
    let mut w = 0;
    let mut exact = true;
    while cur.dim() >= 2 {
        match is_isotropic(&cur, budget)? {
            Decision::Yes { certificate } => {
                cur = split_off_plane(&cur, &certificate.expect("isotropy certificate"))?;
                w += 1;
            }
            Decision::No { .. } => break,
            Decision::Unknown { .. } => {
                exact = false;
                break;
            }
        }
    }
    Ok(WittReport { witt_index: w, anisotropic_dim: f.dim() - 2 * w, exact })
}

pub(super) fn char2_witt(f: &QForm, budget: &SearchBudget) -> Result<WittReport> {
    witt_index_by_splitting(f, budget)
}
