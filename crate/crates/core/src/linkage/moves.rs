//! Rewrites between presentations of the same Pfister form.

use crate::error::{Error, Result};
use crate::fields::FieldElem;
use crate::forms::PfisterPres;

/// Slot indices are 0-based positions in [`PfisterPres::slots`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move {
    /// `a_i → a_i·s²`.
    SlotSquareScale(usize, FieldElem),
    /// Exchange slots `i` and `i+1`.
    SlotSwap(usize),
    /// `(a_i, a_{i+1}) → (a_i, −a_i·a_{i+1})`.
    PairTwist(usize),
    /// `(a_i, a_{i+1}) → (a_i, a_{i+1}·(s² − a_i·t²))`.
    NormScale(usize, FieldElem, FieldElem),
    /// Characteristic 2: `a → a + f² + f` on the Artin–Schreier slot.
    ArtinSchreierShift(FieldElem),
    /// Characteristic 2: `b_i → b_i·(g² + g·h + a·h²)`.
    Char2NormScale(usize, FieldElem, FieldElem),
}

/// Which slots a move writes and which it only reads.
pub(crate) struct Footprint {
    pub writes: Vec<usize>,
    pub reads: Vec<usize>,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidMoveParameter(msg.into())
}

impl Move {
    pub(crate) fn footprint(&self, p: &PfisterPres) -> Result<Footprint> {
        let nb = p.bilinear_slots().len();
        let bilinear = |i: usize| -> Result<()> {
            if i < nb {
                Ok(())
            } else {
                Err(bad(format!("slot {i} is not a bilinear slot of a {}-fold presentation", p.fold())))
            }
        };
        let char2 = |name: &str| -> Result<()> {
            if p.tower().is_char2() {
                Ok(())
            } else {
                Err(bad(format!("{name} needs characteristic 2")))
            }
        };
        Ok(match self {
            Move::SlotSquareScale(i, _) => {
                bilinear(*i)?;
                Footprint { writes: vec![*i], reads: vec![] }
            }
            Move::SlotSwap(i) => {
                bilinear(*i)?;
                bilinear(i + 1)?;
                Footprint { writes: vec![*i, i + 1], reads: vec![] }
            }
            Move::PairTwist(i) | Move::NormScale(i, ..) => {
                bilinear(*i)?;
                bilinear(i + 1)?;
                Footprint { writes: vec![i + 1], reads: vec![*i] }
            }
            Move::ArtinSchreierShift(_) => {
                char2("an Artin-Schreier shift")?;
                Footprint { writes: vec![nb], reads: vec![] }
            }
            Move::Char2NormScale(i, ..) => {
                char2("a characteristic-2 norm scale")?;
                bilinear(*i)?;
                Footprint { writes: vec![*i], reads: vec![nb] }
            }
        })
    }

    /// Shift every slot index by `d`.
    pub(crate) fn offset(&self, d: usize) -> Move {
        match self.clone() {
            Move::SlotSquareScale(i, s) => Move::SlotSquareScale(i + d, s),
            Move::SlotSwap(i) => Move::SlotSwap(i + d),
            Move::PairTwist(i) => Move::PairTwist(i + d),
            Move::NormScale(i, s, t) => Move::NormScale(i + d, s, t),
            m @ Move::ArtinSchreierShift(_) => m,
            Move::Char2NormScale(i, g, h) => Move::Char2NormScale(i + d, g, h),
        }
    }

    /// Whether the move's slot references are relative to the shared block
    /// (everything except the Artin–Schreier shift, which names its slot).
    pub(crate) fn is_indexed(&self) -> bool {
        !matches!(self, Move::ArtinSchreierShift(_))
    }
}

pub fn apply_move(p: &PfisterPres, m: &Move) -> Result<PfisterPres> {
    m.footprint(p)?;
    let t = p.tower().clone();
    for e in params(m) {
        t.check(e)?;
    }
    let mut b = p.bilinear_slots().to_vec();
    let mut a = p.as_slot().cloned();
    match m {
        Move::SlotSquareScale(i, s) => {
            if s.is_zero() {
                return Err(bad("square scale by zero"));
            }
            b[*i] = &b[*i] * &(s * s);
        }
        Move::SlotSwap(i) => b.swap(*i, i + 1),
        Move::PairTwist(i) => b[i + 1] = -&(&b[*i] * &b[i + 1]),
        Move::NormScale(i, s, u) => {
            let n = &(s * s) - &(&b[*i] * &(u * u));
            if n.is_zero() {
                return Err(bad("norm factor s^2 - a t^2 vanishes"));
            }
            b[i + 1] = &b[i + 1] * &n;
        }
        Move::ArtinSchreierShift(f) => {
            let old = a.take().expect("characteristic 2 presentation");
            a = Some(&(&old + &(f * f)) + f);
        }
        Move::Char2NormScale(i, g, h) => {
            let alpha = a.as_ref().expect("characteristic 2 presentation");
            let n = &(&(g * g) + &(g * h)) + &(alpha * &(h * h));
            if n.is_zero() {
                return Err(bad("norm factor g^2 + gh + a h^2 vanishes"));
            }
            b[*i] = &b[*i] * &n;
        }
    }
    PfisterPres::new(t, b, a, p.shared_k())
}

fn params(m: &Move) -> Vec<&FieldElem> {
    match m {
        Move::SlotSquareScale(_, s) => vec![s],
        Move::NormScale(_, s, t) | Move::Char2NormScale(_, s, t) => vec![s, t],
        Move::ArtinSchreierShift(f) => vec![f],
        Move::SlotSwap(_) | Move::PairTwist(_) => vec![],
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MoveTarget {
    /// Rewrite the free slots of one member; indices are into its slot list.
    Member(usize),
    /// Rewrite the shared block of every member; indices are relative to it.
    Shared,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleMove {
    pub target: MoveTarget,
    pub mv: Move,
}

/// Apply a move to a tuple of presentations sharing their last `k` slots.
/// Member moves may only touch free slots; shared moves are applied to
/// every member at once.
pub fn apply_tuple_move(ps: &[PfisterPres], k: usize, tm: &TupleMove) -> Result<Vec<PfisterPres>> {
    match tm.target {
        MoveTarget::Member(j) => {
            let p = ps.get(j).ok_or_else(|| bad(format!("no member {j} in a tuple of {}", ps.len())))?;
            let free = p.fold() - k;
            let fp = tm.mv.footprint(p)?;
            if let Some(i) = fp.writes.iter().chain(&fp.reads).find(|&&i| i >= free && !p.is_as_index(i)) {
                return Err(bad(format!("member move touches shared slot {i}; use a shared move")));
            }
            if let Some(i) = fp.writes.iter().find(|&&i| i >= free) {
                return Err(bad(format!("member move writes shared slot {i}; use a shared move")));
            }
            let mut out = ps.to_vec();
            out[j] = apply_move(p, &tm.mv)?;
            Ok(out)
        }
        MoveTarget::Shared => ps
            .iter()
            .map(|p| {
                let free = p.fold() - k;
                let mv = if tm.mv.is_indexed() { tm.mv.offset(free) } else { tm.mv.clone() };
                let fp = mv.footprint(p)?;
                if let Some(i) = fp.writes.iter().chain(&fp.reads).find(|&&i| i < free) {
                    return Err(bad(format!("shared move reaches free slot {i}")));
                }
                apply_move(p, &mv)
            })
            .collect(),
    }
}
