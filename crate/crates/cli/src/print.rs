//! Canonical script text; `parse(print(s)) == s` for every parsed script.

use std::fmt::{self, Display, Formatter};

use crate::ast::*;

fn join<T: Display>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

impl Display for Elem {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

impl Display for Obj {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            Obj::Ref(n, _) => f.write_str(n),
            Obj::Pf { bilinear, as_slot, k } => {
                write!(f, "pf[{}", join(bilinear))?;
                if let Some(a) = as_slot {
                    write!(f, "{}; {a}", if bilinear.is_empty() { "" } else { " " })?;
                }
                if let Some(k) = k {
                    write!(f, " | {k}")?;
                }
                f.write_str("]")
            }
            Obj::Diag(v) => write!(f, "diag({})", join(v)),
            Obj::Quasi(v) => write!(f, "quasi({})", join(v)),
            Obj::Pairs { pairs, quasi } => {
                let ps: Vec<String> = pairs.iter().map(|(a, b)| format!("({a}, {b})")).collect();
                write!(f, "pairs({})", ps.join(", "))?;
                if !quasi.is_empty() {
                    write!(f, " + quasi({})", join(quasi))?;
                }
                Ok(())
            }
            Obj::Elem(e) => write!(f, "elem {e}"),
        }
    }
}

impl Display for VecSyn {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            VecSyn::Basis(n) => write!(f, "e{n}"),
            VecSyn::Explicit(v) => write!(f, "[{}]", join(v)),
        }
    }
}

impl Display for MoveSyn {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            MoveSyn::SquareScale(i, s) => write!(f, "square-scale({i}, {s})"),
            MoveSyn::Swap(i) => write!(f, "swap({i})"),
            MoveSyn::Twist(i) => write!(f, "twist({i})"),
            MoveSyn::NormScale(i, s, t) => write!(f, "norm-scale({i}, {s}, {t})"),
            MoveSyn::AsShift(a) => write!(f, "as-shift({a})"),
            MoveSyn::Char2NormScale(i, g, h) => write!(f, "char2-norm-scale({i}, {g}, {h})"),
        }
    }
}

fn linkage(l: Linkage) -> &'static str {
    match l {
        Linkage::Separable => "sep",
        Linkage::Inseparable => "insep",
    }
}

impl Display for Expr {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Obj(o) => write!(f, "{o}"),
            Expr::Isotropic(o) => write!(f, "isotropic {o}"),
            Expr::Witt(o) => write!(f, "witt {o}"),
            Expr::Hyperbolic(o) => write!(f, "hyperbolic {o}"),
            Expr::Expand(o) => write!(f, "expand {o}"),
            Expr::Isometric(a, b) => write!(f, "isometric {a}, {b}"),
            Expr::Linked(l, k, a, b) => write!(f, "linked-{} {k} {a}, {b}", linkage(*l)),
            Expr::Omega(l, k, a, b) => write!(f, "omega-{} {k} {a}, {b}", linkage(*l)),
            Expr::Invariant(k, v) => write!(f, "invariant {k} {}", join(v)),
            Expr::ChainStep { psi, v1, v2, factor } => {
                write!(f, "chain-step {psi} span({}) span({})", join(v1), join(v2))?;
                if let Some(p) = factor {
                    write!(f, " factor {p}")?;
                }
                Ok(())
            }
            Expr::Move(o, m) => write!(f, "move {o} {m}"),
            Expr::Verify { suite, params } => {
                write!(f, "verify {suite}")?;
                for (k, v) in params {
                    write!(f, " {k}={}", v.iter().map(u64::to_string).collect::<Vec<_>>().join(","))?;
                }
                Ok(())
            }
        }
    }
}

impl Display for Expect {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            Expect::Yes => f.write_str("yes"),
            Expect::No => f.write_str("no"),
            Expect::Unknown => f.write_str("unknown"),
            Expect::Hyperbolic => f.write_str("hyperbolic"),
            Expect::Error => f.write_str("error"),
            Expect::Value(v) => write!(f, "value={v}"),
        }
    }
}

impl Display for Cmp {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Cmp::Lt => "<",
            Cmp::Le => "<=",
            Cmp::Eq => "==",
            Cmp::Ne => "!=",
            Cmp::Ge => ">=",
            Cmp::Gt => ">",
        })
    }
}

impl Display for IntExpr {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            IntExpr::Lit(n) => write!(f, "{n}"),
            IntExpr::Dim(n) => write!(f, "dim({n})"),
            IntExpr::Fold(n) => write!(f, "fold({n})"),
            IntExpr::Witt(n) => write!(f, "witt({n})"),
            IntExpr::Bin(a, op, b) => write!(f, "({a} {op} {b})"),
        }
    }
}

impl Display for StmtKind {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            StmtKind::Field { name, tower } => write!(f, "field {name} = {tower}"),
            StmtKind::Let { name, expr, over } => {
                write!(f, "let {name} = {expr}")?;
                if let Some(o) = over {
                    write!(f, " over {o}")?;
                }
                Ok(())
            }
            StmtKind::Command { expr, over, expects } => {
                write!(f, "{expr}")?;
                if let Some(o) = over {
                    write!(f, " over {o}")?;
                }
                for e in expects {
                    write!(f, " expect {e}")?;
                }
                Ok(())
            }
            StmtKind::Assert { lhs, op, rhs } => write!(f, "assert {lhs} {op} {rhs}"),
        }
    }
}

impl Display for Script {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        for s in &self.stmts {
            writeln!(f, "{}", s.kind)?;
        }
        Ok(())
    }
}
