//! Quadratic forms and Pfister presentations in both characteristic classes.

mod display;
mod gram;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fields::{FieldElem, FieldTower};

pub use gram::GramSpace;

/// A symbol presentation `⟨⟨a₁,…,a_n⟩⟩` (characteristic ≠ 2) or
/// `⟨⟨b₁,…,b_{n−1}, a]]` (characteristic 2). The last `shared_k` slots,
/// counting the Artin–Schreier slot as innermost, form the shared factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PfisterPres {
    tower: Arc<FieldTower>,
    bilinear: Vec<FieldElem>,
    as_slot: Option<FieldElem>,
    shared_k: usize,
}

impl PfisterPres {
    pub fn new(
        tower: Arc<FieldTower>,
        bilinear: Vec<FieldElem>,
        as_slot: Option<FieldElem>,
        shared_k: usize,
    ) -> Result<Self> {
        for (i, s) in bilinear.iter().chain(as_slot.iter()).enumerate() {
            tower.check(s)?;
            if s.is_zero() && (i < bilinear.len()) {
                return Err(Error::InvalidSlot(format!("slot {i} is zero")));
            }
        }
        if tower.is_char2() != as_slot.is_some() {
            return Err(Error::InvalidSlot(if tower.is_char2() {
                "a characteristic-2 presentation needs an Artin-Schreier slot".into()
            } else {
                "Artin-Schreier slot outside characteristic 2".into()
            }));
        }
        let p = PfisterPres { tower, bilinear, as_slot, shared_k };
        if shared_k > p.fold() {
            return Err(Error::InvalidSlot(format!("shared factor of {shared_k} slots in a {}-fold form", p.fold())));
        }
        Ok(p)
    }

    /// Characteristic ≠ 2 presentation from its slots.
    pub fn diagonal(tower: &Arc<FieldTower>, slots: Vec<FieldElem>, shared_k: usize) -> Result<Self> {
        Self::new(tower.clone(), slots, None, shared_k)
    }

    /// Characteristic-2 presentation `⟨⟨b…, a]]`.
    pub fn quadratic(tower: &Arc<FieldTower>, bilinear: Vec<FieldElem>, a: FieldElem, shared_k: usize) -> Result<Self> {
        Self::new(tower.clone(), bilinear, Some(a), shared_k)
    }

    pub fn tower(&self) -> &Arc<FieldTower> {
        &self.tower
    }

    pub fn bilinear_slots(&self) -> &[FieldElem] {
        &self.bilinear
    }

    pub fn as_slot(&self) -> Option<&FieldElem> {
        self.as_slot.as_ref()
    }

    pub fn shared_k(&self) -> usize {
        self.shared_k
    }

    pub fn with_shared_k(&self, k: usize) -> Result<Self> {
        Self::new(self.tower.clone(), self.bilinear.clone(), self.as_slot.clone(), k)
    }

    pub fn fold(&self) -> usize {
        self.bilinear.len() + usize::from(self.as_slot.is_some())
    }

    pub fn dim(&self) -> usize {
        1 << self.fold()
    }

    /// All slots in order, the Artin–Schreier slot last.
    pub fn slots(&self) -> Vec<FieldElem> {
        self.bilinear.iter().chain(self.as_slot.iter()).cloned().collect()
    }

    /// Whether slot `i` of [`slots`](Self::slots) is the Artin–Schreier slot.
    pub fn is_as_index(&self, i: usize) -> bool {
        self.as_slot.is_some() && i == self.bilinear.len()
    }

    pub fn free_slots(&self) -> &[FieldElem] {
        &self.bilinear[..self.fold() - self.shared_k]
    }

    pub fn shared_slots(&self) -> Vec<FieldElem> {
        self.slots()[self.fold() - self.shared_k..].to_vec()
    }

    /// The shared factor as a presentation of its own.
    pub fn pi(&self) -> PfisterPres {
        let free = self.fold() - self.shared_k;
        PfisterPres {
            tower: self.tower.clone(),
            bilinear: self.bilinear[free..].to_vec(),
            as_slot: self.as_slot.clone(),
            shared_k: self.shared_k,
        }
    }

    pub fn expand(&self) -> Result<QForm> {
        let base = match &self.as_slot {
            Some(a) => QForm::char2(self.tower.clone(), vec![(self.tower.one(), a.clone())], vec![])?,
            None => QForm::diag(self.tower.clone(), vec![self.tower.one()])?,
        };
        tensor_bilinear(&bilinear_pfister(&self.tower, &self.bilinear, false), &base)
    }

    /// `θ` with `expand(self) ≅ expand(π) ⊥ θ`.
    pub fn theta_complement(&self) -> Result<QForm> {
        if self.shared_k == 0 {
            return Err(Error::NoSharedFactor);
        }
        let pure = bilinear_pfister(&self.tower, self.free_slots(), true);
        tensor_bilinear(&pure, &self.pi().expand()?)
    }
}

/// Diagonal entries of the bilinear Pfister form on `slots`, in c-vector
/// order with the first slot as the lowest bit; `pure` drops the leading 1.
pub fn bilinear_pfister(tower: &FieldTower, slots: &[FieldElem], pure: bool) -> Vec<FieldElem> {
    let minus = tower.int(-1);
    let mut out = vec![tower.one()];
    for s in slots {
        let t = &minus * s;
        let ext: Vec<FieldElem> = out.iter().map(|e| e * &t).collect();
        out.extend(ext);
    }
    if pure {
        out.remove(0);
    }
    out
}

/// An expanded quadratic form: a diagonal `⟨d₁,…⟩` in characteristic ≠ 2, or
/// `⊥ cᵢ[1,αᵢ] ⊥ ⟨e₁,…⟩` with a quasilinear tail in characteristic 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QForm {
    tower: Arc<FieldTower>,
    diag: Vec<FieldElem>,
    pairs: Vec<(FieldElem, FieldElem)>,
    quasi: Vec<FieldElem>,
}

impl QForm {
    /// Diagonal form; entries are replaced by their square-class representatives.
    pub fn diag(tower: Arc<FieldTower>, entries: Vec<FieldElem>) -> Result<Self> {
        if tower.is_char2() {
            return Err(Error::WrongCharacteristic("diagonal forms need characteristic other than 2".into()));
        }
        let mut diag = Vec::with_capacity(entries.len());
        for e in &entries {
            tower.check(e)?;
            if e.is_zero() {
                return Err(Error::Degenerate("zero diagonal entry".into()));
            }
            diag.push(tower.square_class_rep(e)?);
        }
        Ok(QForm { tower, diag, pairs: Vec::new(), quasi: Vec::new() })
    }

    /// Characteristic-2 form `⊥ c[1,α] ⊥ ⟨quasi⟩`.
    pub fn char2(tower: Arc<FieldTower>, pairs: Vec<(FieldElem, FieldElem)>, quasi: Vec<FieldElem>) -> Result<Self> {
        if !tower.is_char2() {
            return Err(Error::WrongCharacteristic("scaled binary pairs need characteristic 2".into()));
        }
        for (c, a) in &pairs {
            tower.check(c)?;
            tower.check(a)?;
            if c.is_zero() {
                return Err(Error::ZeroElement);
            }
        }
        for d in &quasi {
            tower.check(d)?;
            if d.is_zero() {
                return Err(Error::ZeroElement);
            }
        }
        Ok(QForm { tower, diag: Vec::new(), pairs, quasi })
    }

    pub fn empty(tower: Arc<FieldTower>) -> Self {
        QForm { tower, diag: Vec::new(), pairs: Vec::new(), quasi: Vec::new() }
    }

    pub fn tower(&self) -> &Arc<FieldTower> {
        &self.tower
    }

    pub fn is_char2(&self) -> bool {
        self.tower.is_char2()
    }

    pub fn diagonal(&self) -> &[FieldElem] {
        &self.diag
    }

    pub fn pairs(&self) -> &[(FieldElem, FieldElem)] {
        &self.pairs
    }

    pub fn quasilinear(&self) -> &[FieldElem] {
        &self.quasi
    }

    pub fn dim(&self) -> usize {
        self.diag.len() + 2 * self.pairs.len() + self.quasi.len()
    }

    pub fn is_nonsingular(&self) -> bool {
        self.quasi.is_empty()
    }

    fn same_tower(&self, o: &QForm) -> Result<()> {
        if self.tower == o.tower || *self.tower == *o.tower {
            Ok(())
        } else {
            Err(Error::TowerMismatch)
        }
    }

    pub fn orth_sum(&self, o: &QForm) -> Result<QForm> {
        self.same_tower(o)?;
        let cat = |a: &[FieldElem], b: &[FieldElem]| a.iter().chain(b).cloned().collect::<Vec<_>>();
        Ok(QForm {
            tower: self.tower.clone(),
            diag: cat(&self.diag, &o.diag),
            pairs: self.pairs.iter().chain(&o.pairs).cloned().collect(),
            quasi: cat(&self.quasi, &o.quasi),
        })
    }

    pub fn scale(&self, c: &FieldElem) -> Result<QForm> {
        if c.is_zero() {
            return Err(Error::ZeroElement);
        }
        tensor_bilinear(std::slice::from_ref(c), self)
    }

    pub fn negate(&self) -> Result<QForm> {
        if self.is_char2() {
            return Ok(self.clone());
        }
        self.scale(&self.tower.int(-1))
    }

    /// Coordinates: one per diagonal entry, two `(x, y)` per pair, then one
    /// per quasilinear entry.
    pub fn eval(&self, v: &[FieldElem]) -> Result<FieldElem> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!("vector of length {} for a form of dimension {}", v.len(), self.dim())));
        }
        let mut acc = self.tower.zero();
        let mut i = 0;
        for d in &self.diag {
            acc = &acc + &(d * &(&v[i] * &v[i]));
            i += 1;
        }
        for (c, a) in &self.pairs {
            let (x, y) = (&v[i], &v[i + 1]);
            let inner = &(&(x * x) + &(x * y)) + &(a * &(y * y));
            acc = &acc + &(c * &inner);
            i += 2;
        }
        for d in &self.quasi {
            acc = &acc + &(d * &(&v[i] * &v[i]));
            i += 1;
        }
        Ok(acc)
    }

    pub fn gram(&self) -> GramSpace {
        GramSpace::from_form(self)
    }
}

/// `⟨c₁,…⟩ ⊗ q` with the coefficient as the outer loop.
pub fn tensor_bilinear(coeffs: &[FieldElem], q: &QForm) -> Result<QForm> {
    let t = &q.tower;
    for c in coeffs {
        t.check(c)?;
        if c.is_zero() {
            return Err(Error::InvalidSlot("zero bilinear coefficient".into()));
        }
    }
    if t.is_char2() {
        let mut pairs = Vec::with_capacity(coeffs.len() * q.pairs.len());
        let mut quasi = Vec::with_capacity(coeffs.len() * q.quasi.len());
        for c in coeffs {
            pairs.extend(q.pairs.iter().map(|(s, a)| (c * s, a.clone())));
            quasi.extend(q.quasi.iter().map(|d| c * d));
        }
        Ok(QForm { tower: t.clone(), diag: Vec::new(), pairs, quasi })
    } else {
        let mut diag = Vec::with_capacity(coeffs.len() * q.diag.len());
        for c in coeffs {
            for d in &q.diag {
                diag.push(t.square_class_rep(&(c * d))?);
            }
        }
        Ok(QForm { tower: t.clone(), diag, pairs: Vec::new(), quasi: Vec::new() })
    }
}

#[cfg(test)]
mod tests;
