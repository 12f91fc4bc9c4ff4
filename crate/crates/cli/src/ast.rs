//! Syntax tree of scenario scripts.

/// Source position, 1-based. Positions do not take part in tree equality,
/// so a printed and reparsed script compares equal to the original.
#[derive(Clone, Copy, Debug, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl PartialEq for Pos {
    fn eq(&self, _: &Pos) -> bool {
        true
    }
}

impl Eq for Pos {}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Script {
    pub stmts: Vec<Stmt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stmt {
    pub pos: Pos,
    pub kind: StmtKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StmtKind {
    Field { name: String, tower: String },
    Let { name: String, expr: Expr, over: Option<String> },
    Command { expr: Expr, over: Option<String>, expects: Vec<Expect> },
    Assert { lhs: IntExpr, op: Cmp, rhs: IntExpr },
}

/// An element written in the tower's own syntax, kept as source text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Elem {
    pub text: String,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obj {
    Ref(String, Pos),
    Pf { bilinear: Vec<Elem>, as_slot: Option<Elem>, k: Option<usize> },
    Diag(Vec<Elem>),
    Pairs { pairs: Vec<(Elem, Elem)>, quasi: Vec<Elem> },
    Quasi(Vec<Elem>),
    Elem(Elem),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VecSyn {
    /// `eN`, the N-th standard basis vector (1-based).
    Basis(usize),
    Explicit(Vec<Elem>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MoveSyn {
    SquareScale(usize, Elem),
    Swap(usize),
    Twist(usize),
    NormScale(usize, Elem, Elem),
    AsShift(Elem),
    Char2NormScale(usize, Elem, Elem),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Linkage {
    Separable,
    Inseparable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Obj(Obj),
    Isotropic(Obj),
    Witt(Obj),
    Hyperbolic(Obj),
    Isometric(Obj, Obj),
    Expand(Obj),
    Linked(Linkage, usize, Obj, Obj),
    Omega(Linkage, usize, Obj, Obj),
    Invariant(usize, Vec<Obj>),
    ChainStep { psi: Obj, v1: Vec<VecSyn>, v2: Vec<VecSyn>, factor: Option<Obj> },
    Move(Obj, MoveSyn),
    Verify { suite: String, params: Vec<(String, Vec<u64>)> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expect {
    Yes,
    No,
    Unknown,
    Hyperbolic,
    Error,
    Value(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cmp {
    Lt,
    Le,
    Eq,
    Ne,
    Ge,
    Gt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntExpr {
    Lit(i64),
    Dim(String),
    Fold(String),
    Witt(String),
    Bin(Box<IntExpr>, char, Box<IntExpr>),
}
