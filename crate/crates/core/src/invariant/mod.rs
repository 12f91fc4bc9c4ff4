//! The linkage invariant of tuples of Pfister forms sharing a common
//! factor, and harnesses that check its predicted behaviour.

mod generate;

use std::fmt;

use crate::error::{Error, Result};
use crate::forms::PfisterPres;
use crate::linkage::{apply_tuple_move, check_shared, inseparably_k_linked, TupleMove};
use crate::oracles::{is_hyperbolic, is_hyperbolic_pfister, isometric, Decision, SearchBudget};

pub use generate::{generate_linked_pair, random_script, Profile};

/// Presentations over one tower whose last `k` slots agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkedTuple {
    presentations: Vec<PfisterPres>,
    k: usize,
}

impl LinkedTuple {
    pub fn new(presentations: Vec<PfisterPres>, k: usize) -> Result<Self> {
        if presentations.len() < 2 {
            return Err(Error::Degenerate("a linked tuple needs at least two presentations".into()));
        }
        for p in &presentations[1..] {
            check_shared(&presentations[0], p, k)?;
        }
        let presentations = presentations.into_iter().map(|p| p.with_shared_k(k)).collect::<Result<_>>()?;
        Ok(LinkedTuple { presentations, k })
    }

    pub fn presentations(&self) -> &[PfisterPres] {
        &self.presentations
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn apply(&self, script: &[TupleMove]) -> Result<LinkedTuple> {
        let mut ps = self.presentations.clone();
        for m in script {
            ps = apply_tuple_move(&ps, self.k, m)?;
        }
        LinkedTuple::new(ps, self.k)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantResult {
    pub presentation: PfisterPres,
    pub fold: usize,
}

/// Free slots of `p1`, then free slots of `p2`, then the shared slots.
pub fn invariant_pair(p1: &PfisterPres, p2: &PfisterPres, k: usize) -> Result<InvariantResult> {
    check_shared(p1, p2, k)?;
    let (p1, p2) = (p1.with_shared_k(k)?, p2.with_shared_k(k)?);
    let pi = p1.pi();
    let bilinear = p1
        .free_slots()
        .iter()
        .chain(p2.free_slots())
        .chain(pi.bilinear_slots())
        .cloned()
        .collect();
    let presentation = PfisterPres::new(p1.tower().clone(), bilinear, pi.as_slot().cloned(), k)?;
    Ok(InvariantResult { fold: presentation.fold(), presentation })
}

pub fn invariant_tuple(t: &LinkedTuple) -> Result<InvariantResult> {
    let ps = t.presentations();
    let mut acc = invariant_pair(&ps[0], &ps[1], t.k)?;
    for p in &ps[2..] {
        acc = invariant_pair(&acc.presentation, p, t.k)?;
    }
    Ok(acc)
}

#[derive(Clone, Debug)]
pub struct InvarianceReport {
    pub before: InvariantResult,
    pub after: InvariantResult,
    pub verdict: Decision,
}

/// Rewrite the tuple by two move scripts and compare the invariants.
pub fn verify_invariance(
    t: &LinkedTuple,
    script_a: &[TupleMove],
    script_b: &[TupleMove],
    budget: &SearchBudget,
) -> Result<InvarianceReport> {
    let before = invariant_tuple(&t.apply(script_a)?)?;
    let after = invariant_tuple(&t.apply(script_b)?)?;
    let verdict = isometric(&before.presentation.expand()?, &after.presentation.expand()?, budget)?;
    Ok(InvarianceReport { before, after, verdict })
}

#[derive(Clone, Debug)]
pub struct InstanceReport {
    pub invariant: InvariantResult,
    pub hyperbolic: Decision,
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub instances: Vec<InstanceReport>,
}

impl SuiteReport {
    fn count(&self, f: impl Fn(&Decision) -> bool) -> usize {
        self.instances.iter().filter(|r| f(&r.hyperbolic)).count()
    }

    pub fn yes(&self) -> usize {
        self.count(Decision::is_yes)
    }

    pub fn no(&self) -> usize {
        self.count(Decision::is_no)
    }

    pub fn unknown(&self) -> usize {
        self.count(Decision::is_unknown)
    }

    pub fn all_yes(&self) -> bool {
        self.yes() == self.instances.len()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} instances: {} yes, {} no, {} unknown", self.instances.len(), self.yes(), self.no(), self.unknown())
    }
}

/// Characteristic 2: the invariant of tuples that share both the quadratic
/// factor and a bilinear factor should be hyperbolic, shown by an isotropic
/// vector.
pub fn verify_inseparable_trivial(instances: &[LinkedTuple], budget: &SearchBudget) -> Result<SuiteReport> {
    let mut out = SuiteReport::default();
    for t in instances {
        let tower = t.presentations()[0].tower();
        if !tower.is_char2() {
            return Err(Error::WrongCharacteristic(format!("expected characteristic 2, got {}", tower.characteristic())));
        }
        let invariant = invariant_tuple(t)?;
        let hyperbolic = is_hyperbolic_pfister(&invariant.presentation, budget)?;
        out.instances.push(InstanceReport { invariant, hyperbolic });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConverseStatus {
    /// The invariant is hyperbolic and `ω` has an isotropic vector.
    Certified,
    /// The invariant is hyperbolic but the search for an isotropic vector
    /// of `ω` ran out of budget.
    ConsistentUncertified,
    /// Hyperbolicity of the invariant itself was not established.
    HypothesisUnverified,
    /// `ω` was shown anisotropic although the invariant is hyperbolic.
    Contradiction,
    /// Neither member has exactly one free slot.
    NotApplicable,
}

#[derive(Clone, Debug)]
pub struct ConverseReport {
    pub invariant: Decision,
    pub omega: Option<Decision>,
    pub status: ConverseStatus,
}

/// Characteristic 2 pairs where one member has a single free slot: when
/// the invariant is hyperbolic, look for an isotropic vector of the
/// inseparable-linkage witness form.
pub fn verify_inseparable_converse(instances: &[LinkedTuple], budget: &SearchBudget) -> Result<Vec<ConverseReport>> {
    instances
        .iter()
        .map(|t| {
            let ps = t.presentations();
            if !ps[0].tower().is_char2() {
                return Err(Error::WrongCharacteristic(format!(
                    "expected characteristic 2, got {}",
                    ps[0].tower().characteristic()
                )));
            }
            let invariant = is_hyperbolic_pfister(&invariant_tuple(t)?.presentation, budget)?;
            if ps.len() != 2 || !ps.iter().any(|p| p.fold() == t.k + 1) {
                return Ok(ConverseReport { invariant, omega: None, status: ConverseStatus::NotApplicable });
            }
            if !invariant.is_yes() {
                return Ok(ConverseReport { invariant, omega: None, status: ConverseStatus::HypothesisUnverified });
            }
            let omega = inseparably_k_linked(&ps[0], &ps[1], t.k, budget)?.linked;
            let status = match &omega {
                Decision::Yes { .. } => ConverseStatus::Certified,
                Decision::Unknown { .. } => ConverseStatus::ConsistentUncertified,
                Decision::No { .. } => ConverseStatus::Contradiction,
            };
            Ok(ConverseReport { invariant, omega: Some(omega), status })
        })
        .collect()
}

/// Over a tower where −1 is a square, the invariant of tuples sharing one
/// slot beyond the common factor should be hyperbolic.
pub fn verify_sqrt_minus_one_trivial(instances: &[LinkedTuple], budget: &SearchBudget) -> Result<SuiteReport> {
    let mut out = SuiteReport::default();
    for t in instances {
        let tower = t.presentations()[0].tower();
        if !tower.minus_one_square() {
            return Err(Error::TowerLacksSqrtMinusOne);
        }
        let invariant = invariant_tuple(t)?;
        let hyperbolic = if tower.is_char2() {
            is_hyperbolic_pfister(&invariant.presentation, budget)?
        } else {
            is_hyperbolic(&invariant.presentation.expand()?, budget)?
        };
        out.instances.push(InstanceReport { invariant, hyperbolic });
    }
    Ok(out)
}
