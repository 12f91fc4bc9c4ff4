//! Seeded generation of linked tuples and move scripts.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use super::LinkedTuple;
use crate::error::{Error, Result};
use crate::fields::{FieldElem, FieldTower};
use crate::forms::PfisterPres;
use crate::linkage::{apply_tuple_move, Move, MoveTarget, TupleMove};
use crate::sample;

#[derive(Clone, Debug)]
pub struct Profile {
    pub tower: Arc<FieldTower>,
    /// Fold of each member, shared slots included.
    pub folds: Vec<usize>,
    pub k: usize,
    /// Height of the integer part of random slots.
    pub height: i64,
    /// Number of bilinear slots common to the free part of every member.
    pub shared_bilinear: usize,
    /// Give every member one more common slot directly before the shared
    /// block.
    pub extra_shared: bool,
}

impl Profile {
    pub fn new(tower: Arc<FieldTower>, folds: Vec<usize>, k: usize) -> Self {
        Profile { tower, folds, k, height: 5, shared_bilinear: 0, extra_shared: false }
    }
}

fn bilinear_slot<R: Rng>(t: &FieldTower, rng: &mut R, height: i64) -> FieldElem {
    loop {
        let s = sample::slot(t, rng, height);
        if !s.is_zero() {
            return s;
        }
    }
}

/// Deterministic pseudo-random tuple: each member is
/// `common bilinear slots ++ random slots ++ extra common slot ++ shared block`.
pub fn generate_linked_pair(seed: u64, profile: &Profile) -> Result<LinkedTuple> {
    let t = &profile.tower;
    let k = profile.k;
    let common = profile.shared_bilinear + usize::from(profile.extra_shared);
    if profile.folds.len() < 2 {
        return Err(Error::Degenerate("a linked tuple needs at least two members".into()));
    }
    if k == 0 {
        return Err(Error::NoSharedFactor);
    }
    if let Some(f) = profile.folds.iter().find(|&&f| f < k + common) {
        return Err(Error::Degenerate(format!("fold {f} cannot hold {k} shared and {common} common slots")));
    }
    let mut rng = sample::rng(seed);
    let h = profile.height;
    let mut shared: Vec<FieldElem> = (0..k - usize::from(t.is_char2())).map(|_| bilinear_slot(t, &mut rng, h)).collect();
    let as_slot = t.is_char2().then(|| sample::slot(t, &mut rng, h));
    let lead: Vec<FieldElem> = (0..profile.shared_bilinear).map(|_| bilinear_slot(t, &mut rng, h)).collect();
    if profile.extra_shared {
        shared.insert(0, bilinear_slot(t, &mut rng, h));
    }
    let members = profile
        .folds
        .iter()
        .map(|&f| {
            let own = f - k - common;
            let mut b = lead.clone();
            b.extend((0..own).map(|_| bilinear_slot(t, &mut rng, h)));
            b.extend(shared.iter().cloned());
            PfisterPres::new(t.clone(), b, as_slot.clone(), k)
        })
        .collect::<Result<Vec<_>>>()?;
    LinkedTuple::new(members, k)
}

fn candidates<R: Rng>(t: &LinkedTuple, rng: &mut R, height: i64) -> Vec<TupleMove> {
    let ps = t.presentations();
    let tower = ps[0].tower();
    let k = t.k();
    let nz = |rng: &mut R| sample::nonzero_elem(tower, rng, 1, height);
    let mut out = Vec::new();
    let char2 = tower.is_char2();
    let mut push = |target: MoveTarget, slots: usize, rng: &mut R| {
        if slots >= 1 {
            let i = rng.gen_range(0..slots);
            out.push(TupleMove { target, mv: Move::SlotSquareScale(i, nz(rng)) });
            if char2 {
                out.push(TupleMove { target, mv: Move::Char2NormScale(i, nz(rng), sample::elem(tower, rng, 1, height)) });
            }
        }
        if slots >= 2 {
            let i = rng.gen_range(0..slots - 1);
            out.push(TupleMove { target, mv: Move::SlotSwap(i) });
            out.push(TupleMove { target, mv: Move::PairTwist(i) });
            let (s, u) = (sample::elem(tower, rng, 1, height), nz(rng));
            out.push(TupleMove { target, mv: Move::NormScale(i, s, u) });
        }
    };
    for (j, p) in ps.iter().enumerate() {
        push(MoveTarget::Member(j), p.fold() - k, rng);
    }
    push(MoveTarget::Shared, k - usize::from(char2), rng);
    if char2 {
        out.push(TupleMove { target: MoveTarget::Shared, mv: Move::ArtinSchreierShift(sample::elem(tower, rng, 1, height)) });
    }
    out
}

/// A valid script of `len` random moves for `t`, with parameters of height
/// at most `height`.
pub fn random_script<R: Rng>(t: &LinkedTuple, rng: &mut R, len: usize, height: i64) -> Vec<TupleMove> {
    let mut script = Vec::with_capacity(len);
    let mut ps = t.presentations().to_vec();
    let cur = |ps: &[PfisterPres]| LinkedTuple::new(ps.to_vec(), t.k()).expect("moves keep the tuple linked");
    let mut attempts = 0;
    while script.len() < len && attempts < 50 * len {
        attempts += 1;
        let opts = candidates(&cur(&ps), rng, height);
        let Some(m) = opts.choose(rng) else { break };
        if let Ok(next) = apply_tuple_move(&ps, t.k(), m) {
            ps = next;
            script.push(m.clone());
        }
    }
    script
}
