use std::fmt;

use super::{PfisterPres, QForm};

fn list(f: &mut fmt::Formatter<'_>, items: impl Iterator<Item = String>) -> fmt::Result {
    write!(f, "{}", items.collect::<Vec<_>>().join(", "))
}

/// `pf[a1, a2 | k]`, or `pf[b1 ; a | k]` in characteristic 2.
impl fmt::Display for PfisterPres {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.tower();
        write!(f, "pf[")?;
        list(f, self.bilinear_slots().iter().map(|e| t.fmt_elem(e)))?;
        if let Some(a) = self.as_slot() {
            if self.bilinear_slots().is_empty() {
                write!(f, "; {}", t.fmt_elem(a))?;
            } else {
                write!(f, " ; {}", t.fmt_elem(a))?;
            }
        }
        if self.shared_k() > 0 {
            write!(f, " | {}", self.shared_k())?;
        }
        write!(f, "]")
    }
}

/// `diag(d1, ...)`, `pairs((c1, a1), ...)`, with a quasilinear tail as
/// `+ quasi(e1, ...)`.
impl fmt::Display for QForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.tower();
        if !self.is_char2() {
            write!(f, "diag(")?;
            list(f, self.diagonal().iter().map(|e| t.fmt_elem(e)))?;
            return write!(f, ")");
        }
        if !self.pairs().is_empty() || self.quasilinear().is_empty() {
            write!(f, "pairs(")?;
            list(f, self.pairs().iter().map(|(c, a)| format!("({}, {})", t.fmt_elem(c), t.fmt_elem(a))))?;
            write!(f, ")")?;
            if !self.quasilinear().is_empty() {
                write!(f, " + ")?;
            }
        }
        if !self.quasilinear().is_empty() {
            write!(f, "quasi(")?;
            list(f, self.quasilinear().iter().map(|e| t.fmt_elem(e)))?;
            write!(f, ")")?;
        }
        Ok(())
    }
}
