use std::sync::Arc;

use super::QForm;
use crate::error::{Error, Result};
use crate::fields::{FieldElem, FieldTower};

/// A quadratic space on `F^n` in the standard basis: the values `ψ(eᵢ)` and
/// the polar matrix `B(eᵢ,eⱼ) = ψ(eᵢ+eⱼ) − ψ(eᵢ) − ψ(eⱼ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramSpace {
    tower: Arc<FieldTower>,
    values: Vec<FieldElem>,
    polar: Vec<Vec<FieldElem>>,
    degenerate: bool,
}

impl GramSpace {
    pub(super) fn from_form(f: &QForm) -> GramSpace {
        let t = f.tower().clone();
        let n = f.dim();
        let mut values = Vec::with_capacity(n);
        let mut polar = vec![vec![t.zero(); n]; n];
        let two = t.int(2);
        for d in f.diagonal() {
            let i = values.len();
            polar[i][i] = &two * d;
            values.push(d.clone());
        }
        for (c, a) in f.pairs() {
            let i = values.len();
            polar[i][i + 1] = c.clone();
            polar[i + 1][i] = c.clone();
            values.push(c.clone());
            values.push(c * a);
        }
        for d in f.quasilinear() {
            values.push(d.clone());
        }
        let degenerate = polar.iter().any(|row| row.iter().all(FieldElem::is_zero));
        GramSpace { tower: t, values, polar, degenerate }
    }

    /// Space with arbitrary values and polar matrix; the matrix must be
    /// symmetric with diagonal `2·values`.
    pub fn new(tower: Arc<FieldTower>, values: Vec<FieldElem>, polar: Vec<Vec<FieldElem>>) -> Result<GramSpace> {
        let n = values.len();
        if polar.len() != n || polar.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("polar matrix shape".into()));
        }
        let two = tower.int(2);
        for i in 0..n {
            if polar[i][i] != &two * &values[i] {
                return Err(Error::DimensionMismatch(format!("polar diagonal at {i} is not twice the value")));
            }
            for j in 0..i {
                if polar[i][j] != polar[j][i] {
                    return Err(Error::DimensionMismatch("polar matrix is not symmetric".into()));
                }
            }
        }
        let degenerate = polar.iter().any(|row| row.iter().all(FieldElem::is_zero));
        Ok(GramSpace { tower, values, polar, degenerate })
    }

    pub fn tower(&self) -> &Arc<FieldTower> {
        &self.tower
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[FieldElem] {
        &self.values
    }

    pub fn polar_matrix(&self) -> &[Vec<FieldElem>] {
        &self.polar
    }

    /// Set when some basis vector is orthogonal to everything.
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    pub fn eval(&self, v: &[FieldElem]) -> FieldElem {
        let mut acc = self.tower.zero();
        for i in 0..v.len() {
            if v[i].is_zero() {
                continue;
            }
            acc = &acc + &(&self.values[i] * &(&v[i] * &v[i]));
            for j in i + 1..v.len() {
                if !v[j].is_zero() && !self.polar[i][j].is_zero() {
                    acc = &acc + &(&self.polar[i][j] * &(&v[i] * &v[j]));
                }
            }
        }
        acc
    }

    pub fn polar_eval(&self, v: &[FieldElem], w: &[FieldElem]) -> FieldElem {
        let mut acc = self.tower.zero();
        for i in 0..v.len() {
            if v[i].is_zero() {
                continue;
            }
            for j in 0..w.len() {
                if !w[j].is_zero() && !self.polar[i][j].is_zero() {
                    acc = &acc + &(&self.polar[i][j] * &(&v[i] * &w[j]));
                }
            }
        }
        acc
    }
}
