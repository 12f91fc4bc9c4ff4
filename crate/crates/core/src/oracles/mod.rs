//! Isotropy, Witt index, hyperbolicity and isometry.
//!
//! Characteristic ≠ 2 decisions are complete: signatures over the ordered
//! reals, classification over prime fields, local invariants over the
//! rationals, and the residue-form recursion over Laurent levels. In
//! characteristic 2 only certificates are produced; a failed search is
//! `Unknown`, except for forms of dimension at most 2, which are decided.

mod char2;
mod local;
mod rationals;
mod split;
mod springer;

use std::fmt;

use crate::error::{Error, Result};
use crate::fields::{BaseField, FieldElem, FieldTower};
use crate::forms::{PfisterPres, QForm};

pub use split::witt_index_by_splitting;
pub use springer::springer_split;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Yes { certificate: Option<Vec<FieldElem>> },
    No { reason: String },
    Unknown { bound: String },
}

impl Decision {
    pub fn yes(v: Vec<FieldElem>) -> Self {
        Decision::Yes { certificate: Some(v) }
    }

    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes { .. })
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Decision::No { .. })
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Decision::Unknown { .. })
    }

    pub fn certificate(&self) -> Option<&[FieldElem]> {
        match self {
            Decision::Yes { certificate: Some(c) } => Some(c),
            _ => None,
        }
    }

    pub fn verdict(&self) -> &'static str {
        match self {
            Decision::Yes { .. } => "yes",
            Decision::No { .. } => "no",
            Decision::Unknown { .. } => "unknown",
        }
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Decision::Yes { .. } => write!(f, "yes"),
            Decision::No { reason } => write!(f, "no ({reason})"),
            Decision::Unknown { bound } => write!(f, "unknown ({bound})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WittReport {
    pub witt_index: usize,
    pub anisotropic_dim: usize,
    /// False when some characteristic-2 search was inconclusive; the index
    /// is then a lower bound.
    pub exact: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_total_degree: u32,
    pub max_coeff_height: u32,
    pub max_candidates: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_total_degree: 4, max_coeff_height: 10, max_candidates: 1_000_000 }
    }
}

impl SearchBudget {
    pub fn validate(&self) -> Result<()> {
        if self.max_total_degree == 0 || self.max_coeff_height == 0 || self.max_candidates == 0 {
            return Err(Error::InvalidBudget);
        }
        Ok(())
    }
}

fn check_cert(f: &QForm, d: &Decision) {
    if let Some(v) = d.certificate() {
        debug_assert!(v.iter().any(|x| !x.is_zero()), "zero certificate");
        debug_assert!(f.eval(v).map(|e| e.is_zero()).unwrap_or(false), "certificate does not vanish");
    }
}

fn diag_route(t: &FieldTower) -> Result<()> {
    if t.is_char2() && !t.laurent_vars().is_empty() {
        return Err(Error::ResidueChar2);
    }
    Ok(())
}

pub fn is_isotropic(f: &QForm, budget: &SearchBudget) -> Result<Decision> {
    if f.dim() == 0 {
        return Err(Error::EmptyForm);
    }
    let t = f.tower();
    diag_route(t)?;
    let d = if t.is_char2() {
        char2::search(f, budget)?
    } else {
        match isotropic_vector(t, f.diagonal())? {
            Some(v) => Decision::yes(v),
            None => Decision::No { reason: "anisotropic".into() },
        }
    };
    check_cert(f, &d);
    Ok(d)
}

/// Exact isotropy of a diagonal form in characteristic ≠ 2 over any
/// supported tower, with a certificate.
pub(crate) fn isotropic_vector(t: &FieldTower, entries: &[FieldElem]) -> Result<Option<Vec<FieldElem>>> {
    if t.laurent_vars().is_empty() {
        match t.base() {
            BaseField::RealsOrdered => Ok(local::reals_vector(t, entries)),
            BaseField::PrimeField(p) => Ok(local::prime_vector(*p, entries)),
            BaseField::Rationals => rationals::vector(t, entries),
            BaseField::Char2Rational => unreachable!("characteristic 2 is searched"),
        }
    } else {
        springer::vector(t, entries)
    }
}

pub(crate) fn witt_exact(t: &FieldTower, entries: &[FieldElem]) -> Result<usize> {
    if t.laurent_vars().is_empty() {
        match t.base() {
            BaseField::RealsOrdered => Ok(local::reals_witt(entries)),
            BaseField::PrimeField(p) => Ok(local::prime_witt(*p, entries)),
            BaseField::Rationals => rationals::witt(t, entries),
            BaseField::Char2Rational => unreachable!("characteristic 2 is split"),
        }
    } else {
        springer::witt(t, entries)
    }
}

pub fn witt_index(f: &QForm, budget: &SearchBudget) -> Result<WittReport> {
    if !f.is_nonsingular() {
        return Err(Error::SingularInput);
    }
    let t = f.tower();
    diag_route(t)?;
    if t.is_char2() {
        return split::char2_witt(f, budget);
    }
    let w = witt_exact(t, f.diagonal())?;
    Ok(WittReport { witt_index: w, anisotropic_dim: f.dim() - 2 * w, exact: true })
}

pub fn is_hyperbolic(f: &QForm, budget: &SearchBudget) -> Result<Decision> {
    if !f.is_nonsingular() {
        return Err(Error::SingularInput);
    }
    if f.dim() % 2 == 1 {
        return Err(Error::OddDimension(f.dim()));
    }
    let r = witt_index(f, budget)?;
    Ok(if 2 * r.witt_index == f.dim() {
        Decision::Yes { certificate: None }
    } else if r.exact {
        Decision::No { reason: format!("Witt index {} of dimension {}", r.witt_index, f.dim()) }
    } else {
        Decision::Unknown { bound: format!("Witt index at least {} of {}", r.witt_index, f.dim() / 2) }
    })
}

/// Hyperbolicity of a Pfister form: an isotropic Pfister form is hyperbolic,
/// so one isotropic vector decides it.
pub fn is_hyperbolic_pfister(p: &PfisterPres, budget: &SearchBudget) -> Result<Decision> {
    let f = p.expand()?;
    Ok(match is_isotropic(&f, budget)? {
        Decision::No { .. } => Decision::No { reason: "anisotropic Pfister form".into() },
        d => d,
    })
}

pub fn isometric(f: &QForm, g: &QForm, budget: &SearchBudget) -> Result<Decision> {
    if f.tower() != g.tower() && **f.tower() != **g.tower() {
        return Err(Error::TowerMismatch);
    }
    if !f.is_nonsingular() || !g.is_nonsingular() {
        return Err(Error::SingularInput);
    }
    if f.dim() != g.dim() {
        return Ok(Decision::No { reason: format!("dimensions {} and {}", f.dim(), g.dim()) });
    }
    if f.dim() == 0 {
        return Ok(Decision::Yes { certificate: None });
    }
    is_hyperbolic(&f.orth_sum(&g.negate()?)?, budget)
}
