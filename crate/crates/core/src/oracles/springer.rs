//! Laurent levels: `⟨u₁,…⟩ ⊥ x⟨w₁,…⟩` over `K((x))` is isotropic iff one of
//! the residue forms `⟨ū⟩`, `⟨w̄⟩` is isotropic over `K`, and Witt indices add.

use std::sync::Arc;

use super::{isotropic_vector, witt_exact};
use crate::error::{Error, Result};
use crate::fields::{FieldElem, FieldTower};
use crate::forms::QForm;

struct Split {
    lower: FieldTower,
    even: Vec<(usize, FieldElem)>,
    odd: Vec<(usize, FieldElem)>,
}

fn split(t: &FieldTower, entries: &[FieldElem]) -> Result<Split> {
    if t.is_char2() {
        return Err(Error::ResidueChar2);
    }
    let lower = t
        .residue_tower()
        .ok_or_else(|| Error::Unsupported("residue forms need a Laurent level".into()))?;
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for (i, e) in entries.iter().enumerate() {
        let (v, r) = t.valuation_split(e)?;
        if v.rem_euclid(2) == 0 {
            even.push((i, r));
        } else {
            odd.push((i, r));
        }
    }
    Ok(Split { lower, even, odd })
}

fn residues(part: &[(usize, FieldElem)]) -> Vec<FieldElem> {
    part.iter().map(|(_, r)| r.clone()).collect()
}

/// The first and second residue forms over the next tower down.
pub fn springer_split(f: &QForm) -> Result<(QForm, QForm)> {
    let s = split(f.tower(), f.diagonal())?;
    let lower = Arc::new(s.lower);
    Ok((QForm::diag(lower.clone(), residues(&s.even))?, QForm::diag(lower, residues(&s.odd))?))
}

// Entries are square-class representatives `x^{0|1}·r` with `r` one level
// down, so a zero of a residue form is a zero of the matching entries.
pub(super) fn vector(t: &FieldTower, entries: &[FieldElem]) -> Result<Option<Vec<FieldElem>>> {
    let s = split(t, entries)?;
    for part in [&s.even, &s.odd] {
        let rs = residues(part);
        if let Some(w) = isotropic_vector(&s.lower, &rs)? {
            let mut v = vec![t.zero(); entries.len()];
            for ((i, _), x) in part.iter().zip(w) {
                v[*i] = x;
            }
            return Ok(Some(v));
        }
    }
    Ok(None)
}

pub(super) fn witt(t: &FieldTower, entries: &[FieldElem]) -> Result<usize> {
    let s = split(t, entries)?;
    let norm = |part: &[(usize, FieldElem)]| -> Result<Vec<FieldElem>> {
        part.iter().map(|(_, r)| s.lower.square_class_rep(r)).collect()
    };
    Ok(witt_exact(&s.lower, &norm(&s.even)?)? + witt_exact(&s.lower, &norm(&s.odd)?)?)
}
