//! Statement execution and JSON reports.

use std::collections::HashMap;
use std::sync::Arc;
use std::time::Instant;

use pfister::fields::{FieldElem, FieldTower};
use pfister::forms::{PfisterPres, QForm};
use pfister::invariant::{
    generate_linked_pair, invariant_tuple, random_script, verify_inseparable_converse, verify_inseparable_trivial,
    verify_invariance, verify_sqrt_minus_one_trivial, ConverseStatus, LinkedTuple, Profile,
};
use pfister::linkage::{
    apply_move, chain_step, extend_factor, inseparably_k_linked, k_plus_one_linked, omega_inseparable,
    omega_separable, Move,
};
use pfister::oracles::{
    is_hyperbolic, is_hyperbolic_pfister, is_isotropic, isometric, witt_index, Decision, SearchBudget,
};
use pfister::sample;
use rand::Rng;
use serde_json::{json, Map, Value};

use crate::ast::*;
use crate::parse::{Parser, SyntaxError};

#[derive(Clone, Debug)]
pub struct Options {
    pub budget: SearchBudget,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options { budget: SearchBudget::default(), seed: 0 }
    }
}

#[derive(Clone, Debug)]
pub enum Val {
    Elem(Arc<FieldTower>, FieldElem),
    Pres(PfisterPres),
    Form(QForm),
}

impl Val {
    fn show(&self) -> String {
        match self {
            Val::Elem(t, e) => t.fmt_elem(e),
            Val::Pres(p) => p.to_string(),
            Val::Form(f) => f.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct StmtReport {
    pub line: usize,
    pub text: String,
    pub verdict: Option<String>,
    pub value: Option<String>,
    pub certificate: Option<Vec<String>>,
    pub witness: Option<String>,
    pub details: Map<String, Value>,
    pub expects: Vec<(String, bool)>,
    pub error: Option<String>,
    pub ok: bool,
    pub time_ms: f64,
}

impl StmtReport {
    fn new(stmt: &Stmt) -> Self {
        StmtReport {
            line: stmt.pos.line,
            text: stmt.kind.to_string(),
            verdict: None,
            value: None,
            certificate: None,
            witness: None,
            details: Map::new(),
            expects: vec![],
            error: None,
            ok: true,
            time_ms: 0.0,
        }
    }

    fn decision(&mut self, t: &FieldTower, d: &Decision) {
        self.verdict = Some(d.verdict().into());
        if let Some(c) = d.certificate() {
            self.certificate = Some(c.iter().map(|e| t.fmt_elem(e)).collect());
        }
        match d {
            Decision::No { reason } => {
                self.details.insert("reason".into(), json!(reason));
            }
            Decision::Unknown { bound } => {
                self.details.insert("bound".into(), json!(bound));
            }
            Decision::Yes { .. } => {}
        }
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("line".into(), json!(self.line));
        m.insert("statement".into(), json!(self.text));
        for (k, v) in [("verdict", &self.verdict), ("value", &self.value), ("witness", &self.witness), ("error", &self.error)] {
            if let Some(v) = v {
                m.insert(k.into(), json!(v));
            }
        }
        if let Some(c) = &self.certificate {
            m.insert("certificate".into(), json!(c));
        }
        if !self.details.is_empty() {
            m.insert("details".into(), Value::Object(self.details.clone()));
        }
        if !self.expects.is_empty() {
            let e: Vec<Value> = self.expects.iter().map(|(e, ok)| json!({"expect": e, "met": ok})).collect();
            m.insert("expectations".into(), Value::Array(e));
        }
        m.insert("ok".into(), json!(self.ok));
        m.insert("time_ms".into(), json!((self.time_ms * 1000.0).round() / 1000.0));
        Value::Object(m)
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub statements: Vec<StmtReport>,
    pub budget: SearchBudget,
    pub seed: u64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.statements.iter().all(|s| s.ok)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> Value {
        let expectations: usize = self.statements.iter().map(|s| s.expects.len()).sum();
        let met: usize = self.statements.iter().map(|s| s.expects.iter().filter(|e| e.1).count()).sum();
        json!({
            "schema": 1,
            "seed": self.seed,
            "budget": {
                "max_total_degree": self.budget.max_total_degree,
                "max_coeff_height": self.budget.max_coeff_height,
                "max_candidates": self.budget.max_candidates,
            },
            "statements": self.statements.iter().map(StmtReport::to_json).collect::<Vec<_>>(),
            "summary": {
                "statements": self.statements.len(),
                "expectations": expectations,
                "met": met,
                "failed_statements": self.statements.iter().filter(|s| !s.ok).count(),
                "errors": self.statements.iter().filter(|s| s.error.is_some()).count(),
                "passed": self.passed(),
            },
        })
    }
}

/// Interpreter state: declared fields and bound values.
pub struct Session {
    parser: Parser,
    fields: HashMap<String, Arc<FieldTower>>,
    values: HashMap<String, (String, Val)>,
    opts: Options,
}

type RResult<T> = Result<T, String>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

impl Session {
    pub fn new(opts: Options) -> Self {
        Session { parser: Parser::new(), fields: HashMap::new(), values: HashMap::new(), opts }
    }

    /// Parse and execute one line (for interactive use).
    pub fn line(&mut self, line_no: usize, text: &str) -> Result<Option<StmtReport>, SyntaxError> {
        Ok(self.parser.parse_line(line_no, text)?.map(|s| self.exec(&s)))
    }

    pub fn exec(&mut self, stmt: &Stmt) -> StmtReport {
        let mut r = StmtReport::new(stmt);
        let start = Instant::now();
        let res = self.exec_inner(stmt, &mut r);
        r.time_ms = start.elapsed().as_secs_f64() * 1000.0;
        let expects: &[Expect] = match &stmt.kind {
            StmtKind::Command { expects, .. } => expects,
            _ => &[],
        };
        if let Err(e) = res {
            r.error = Some(e);
        }
        let errored = r.error.is_some();
        for e in expects {
            let met = match e {
                Expect::Error => errored,
                _ if errored => false,
                Expect::Yes | Expect::Hyperbolic => r.verdict.as_deref() == Some("yes"),
                Expect::No => r.verdict.as_deref() == Some("no"),
                Expect::Unknown => r.verdict.as_deref() == Some("unknown"),
                Expect::Value(v) => r.value.as_deref().is_some_and(|x| squash(x) == squash(v)),
            };
            r.expects.push((e.to_string(), met));
        }
        let error_expected = expects.contains(&Expect::Error);
        r.ok = r.expects.iter().all(|e| e.1) && (!errored || error_expected);
        r
    }

    fn field_of(&self, expr: &Expr, over: Option<&str>) -> RResult<(String, Arc<FieldTower>)> {
        let name = match over {
            Some(o) => o.to_string(),
            None => first_ref(expr)
                .and_then(|n| self.values.get(n))
                .map(|(f, _)| f.clone())
                .ok_or("no field for statement")?,
        };
        let t = self.fields.get(&name).ok_or_else(|| format!("unknown field {name}"))?.clone();
        Ok((name, t))
    }

    fn exec_inner(&mut self, stmt: &Stmt, r: &mut StmtReport) -> RResult<()> {
        match &stmt.kind {
            StmtKind::Field { name, tower } => {
                let t = Arc::new(FieldTower::parse(tower).map_err(err)?);
                r.value = Some(t.to_string());
                self.fields.insert(name.clone(), t);
                Ok(())
            }
            StmtKind::Let { name, expr, over } => {
                let (fname, t) = self.field_of(expr, over.as_deref())?;
                let v = self.eval(expr, &t, r)?.ok_or("statement has no value to bind")?;
                r.value = Some(v.show());
                self.values.insert(name.clone(), (fname, v));
                Ok(())
            }
            StmtKind::Command { expr, over, .. } => {
                let (_, t) = self.field_of(expr, over.as_deref())?;
                if let Some(v) = self.eval(expr, &t, r)? {
                    r.value.get_or_insert(v.show());
                }
                Ok(())
            }
            StmtKind::Assert { lhs, op, rhs } => {
                let (a, b) = (self.int(lhs)?, self.int(rhs)?);
                let holds = match op {
                    Cmp::Lt => a < b,
                    Cmp::Le => a <= b,
                    Cmp::Eq => a == b,
                    Cmp::Ne => a != b,
                    Cmp::Ge => a >= b,
                    Cmp::Gt => a > b,
                };
                r.value = Some(format!("{a} {op} {b}"));
                r.verdict = Some(if holds { "yes" } else { "no" }.into());
                r.expects.push(("holds".into(), holds));
                Ok(())
            }
        }
    }

    fn int(&self, e: &IntExpr) -> RResult<i64> {
        let get = |n: &str| self.values.get(n).map(|v| &v.1).ok_or_else(|| format!("unbound name {n}"));
        Ok(match e {
            IntExpr::Lit(n) => *n,
            IntExpr::Dim(n) => match get(n)? {
                Val::Pres(p) => p.dim() as i64,
                Val::Form(f) => f.dim() as i64,
                Val::Elem(..) => return Err(format!("{n} is an element")),
            },
            IntExpr::Fold(n) => match get(n)? {
                Val::Pres(p) => p.fold() as i64,
                _ => return Err(format!("{n} is not a presentation")),
            },
            IntExpr::Witt(n) => {
                let f = as_form(get(n)?)?;
                let w = witt_index(&f, &self.opts.budget).map_err(err)?;
                if !w.exact {
                    return Err(format!("Witt index of {n} is only bounded below by {}", w.witt_index));
                }
                w.witt_index as i64
            }
            IntExpr::Bin(a, op, b) => {
                let (a, b) = (self.int(a)?, self.int(b)?);
                let v = match op {
                    '+' => a.checked_add(b),
                    '-' => a.checked_sub(b),
                    '*' => a.checked_mul(b),
                    _ => u32::try_from(b).ok().and_then(|b| a.checked_pow(b)),
                };
                v.ok_or("integer overflow")?
            }
        })
    }

    fn elem(&self, t: &FieldTower, e: &Elem) -> RResult<FieldElem> {
        t.parse_elem(&e.text).map_err(err)
    }

    fn elems(&self, t: &FieldTower, v: &[Elem]) -> RResult<Vec<FieldElem>> {
        v.iter().map(|e| self.elem(t, e)).collect()
    }

    fn obj(&self, o: &Obj, t: &Arc<FieldTower>) -> RResult<Val> {
        Ok(match o {
            Obj::Ref(n, _) => self.values.get(n).ok_or_else(|| format!("unbound name {n}"))?.1.clone(),
            Obj::Pf { bilinear, as_slot, k } => {
                let b = self.elems(t, bilinear)?;
                let a = as_slot.as_ref().map(|a| self.elem(t, a)).transpose()?;
                Val::Pres(PfisterPres::new(t.clone(), b, a, k.unwrap_or(0)).map_err(err)?)
            }
            Obj::Diag(v) => Val::Form(QForm::diag(t.clone(), self.elems(t, v)?).map_err(err)?),
            Obj::Quasi(v) => Val::Form(QForm::char2(t.clone(), vec![], self.elems(t, v)?).map_err(err)?),
            Obj::Pairs { pairs, quasi } => {
                let ps = pairs
                    .iter()
                    .map(|(a, b)| Ok((self.elem(t, a)?, self.elem(t, b)?)))
                    .collect::<RResult<Vec<_>>>()?;
                Val::Form(QForm::char2(t.clone(), ps, self.elems(t, quasi)?).map_err(err)?)
            }
            Obj::Elem(e) => Val::Elem(t.clone(), self.elem(t, e)?),
        })
    }

    fn form(&self, o: &Obj, t: &Arc<FieldTower>) -> RResult<QForm> {
        as_form(&self.obj(o, t)?)
    }

    fn pres(&self, o: &Obj, t: &Arc<FieldTower>) -> RResult<PfisterPres> {
        match self.obj(o, t)? {
            Val::Pres(p) => Ok(p),
            v => Err(format!("expected a presentation, got {}", v.show())),
        }
    }

    fn eval(&self, expr: &Expr, t: &Arc<FieldTower>, r: &mut StmtReport) -> RResult<Option<Val>> {
        let b = &self.opts.budget;
        Ok(match expr {
            Expr::Obj(o) => Some(self.obj(o, t)?),
            Expr::Isotropic(o) => {
                let f = self.form(o, t)?;
                r.decision(t, &is_isotropic(&f, b).map_err(err)?);
                r.witness = Some(f.to_string());
                None
            }
            Expr::Witt(o) => {
                let w = witt_index(&self.form(o, t)?, b).map_err(err)?;
                r.value = Some(w.witt_index.to_string());
                r.verdict = Some(if w.exact { "yes" } else { "unknown" }.into());
                r.details.insert("anisotropic_dim".into(), json!(w.anisotropic_dim));
                r.details.insert("exact".into(), json!(w.exact));
                None
            }
            Expr::Hyperbolic(o) => {
                let d = match self.obj(o, t)? {
                    Val::Pres(p) => is_hyperbolic_pfister(&p, b),
                    v => is_hyperbolic(&as_form(&v)?, b),
                }
                .map_err(err)?;
                r.decision(t, &d);
                None
            }
            Expr::Isometric(x, y) => {
                let d = isometric(&self.form(x, t)?, &self.form(y, t)?, b).map_err(err)?;
                r.decision(t, &d);
                None
            }
            Expr::Expand(o) => Some(Val::Form(self.form(o, t)?)),
            Expr::Linked(l, k, x, y) => {
                let (p1, p2) = (self.pres(x, t)?, self.pres(y, t)?);
                let v = match l {
                    Linkage::Separable => k_plus_one_linked(&p1, &p2, *k, b),
                    Linkage::Inseparable => inseparably_k_linked(&p1, &p2, *k, b),
                }
                .map_err(err)?;
                r.decision(t, &v.linked);
                r.witness = Some(v.omega.to_string());
                r.details.insert("omega_dim".into(), json!(v.omega.dim()));
                None
            }
            Expr::Omega(l, k, x, y) => {
                let (p1, p2) = (self.pres(x, t)?, self.pres(y, t)?);
                let w = match l {
                    Linkage::Separable => omega_separable(&p1, &p2, *k),
                    Linkage::Inseparable => omega_inseparable(&p1, &p2, *k),
                }
                .map_err(err)?;
                r.details.insert("dim".into(), json!(w.dim()));
                Some(Val::Form(w))
            }
            Expr::Invariant(k, objs) => {
                let ps = objs.iter().map(|o| self.pres(o, t)).collect::<RResult<Vec<_>>>()?;
                let inv = invariant_tuple(&LinkedTuple::new(ps, *k).map_err(err)?).map_err(err)?;
                let d = is_hyperbolic_pfister(&inv.presentation, b).map_err(err)?;
                r.decision(t, &d);
                r.details.insert("fold".into(), json!(inv.fold));
                r.details.insert("hyperbolic".into(), json!(d.verdict()));
                Some(Val::Pres(inv.presentation))
            }
            Expr::ChainStep { psi, v1, v2, factor } => {
                let f = self.form(psi, t)?;
                let n = f.dim();
                let vecs = |vs: &[VecSyn]| -> RResult<Vec<Vec<FieldElem>>> {
                    vs.iter()
                        .map(|v| match v {
                            VecSyn::Basis(i) if *i <= n => Ok((1..=n).map(|j| t.int(i64::from(j == *i))).collect()),
                            VecSyn::Basis(i) => Err(format!("e{i} in dimension {n}")),
                            VecSyn::Explicit(es) => self.elems(t, es),
                        })
                        .collect()
                };
                let s = chain_step(&f.gram(), &vecs(v1)?, &vecs(v2)?, b).map_err(err)?;
                r.details.insert("v".into(), json!(s.v.iter().map(|e| t.fmt_elem(e)).collect::<Vec<_>>()));
                if let Some(fac) = factor {
                    let enlarged = extend_factor(&self.pres(fac, t)?, &s.gamma).map_err(err)?;
                    let d = isometric(&enlarged.expand().map_err(err)?, &f, b).map_err(err)?;
                    r.decision(t, &d);
                    r.witness = Some(enlarged.to_string());
                } else {
                    r.verdict = Some("yes".into());
                }
                Some(Val::Elem(t.clone(), s.gamma))
            }
            Expr::Move(o, m) => {
                let p = self.pres(o, t)?;
                let mv = match m {
                    MoveSyn::SquareScale(i, s) => Move::SlotSquareScale(*i, self.elem(t, s)?),
                    MoveSyn::Swap(i) => Move::SlotSwap(*i),
                    MoveSyn::Twist(i) => Move::PairTwist(*i),
                    MoveSyn::NormScale(i, s, u) => Move::NormScale(*i, self.elem(t, s)?, self.elem(t, u)?),
                    MoveSyn::AsShift(f) => Move::ArtinSchreierShift(self.elem(t, f)?),
                    MoveSyn::Char2NormScale(i, g, h) => Move::Char2NormScale(*i, self.elem(t, g)?, self.elem(t, h)?),
                };
                Some(Val::Pres(apply_move(&p, &mv).map_err(err)?))
            }
            Expr::Verify { suite, params } => {
                self.verify(suite, params, t, r)?;
                None
            }
        })
    }

    fn verify(&self, suite: &str, params: &[(String, Vec<u64>)], t: &Arc<FieldTower>, r: &mut StmtReport) -> RResult<()> {
        let get = |k: &str, d: Vec<u64>| params.iter().find(|p| p.0 == k).map_or(d, |p| p.1.clone());
        for (k, v) in params {
            if !["count", "k", "free", "members", "degree", "length"].contains(&k.as_str()) || v.is_empty() {
                return Err(format!("unknown or empty parameter {k}"));
            }
        }
        let count = get("count", vec![10])[0];
        let ks = get("k", vec![1]);
        let free = get("free", vec![0, 1]);
        let (lo, hi) = (free[0] as usize, *free.last().unwrap() as usize);
        if lo > hi {
            return Err("free range is empty".into());
        }
        let members = get("members", vec![2])[0].max(2) as usize;
        let mut budget = self.opts.budget.clone();
        if let Some(d) = params.iter().find(|p| p.0 == "degree") {
            budget.max_total_degree = d.1[0] as u32;
        }
        let len = get("length", vec![3])[0] as usize;
        let profile = |i: u64| {
            let k = ks[i as usize % ks.len()] as usize;
            let mut rng = sample::rng(self.opts.seed.wrapping_add(i).wrapping_mul(0x9e37_79b9));
            let folds = (0..members).map(|_| k + rng.gen_range(lo..=hi)).collect::<Vec<_>>();
            (Profile::new(t.clone(), folds, k), rng)
        };
        let seed = |i: u64| self.opts.seed.wrapping_add(i);
        let mut counts: HashMap<&str, usize> = HashMap::new();
        let mut tally = |d: &Decision| *counts.entry(d.verdict()).or_default() += 1;
        match suite {
            "inseparable-trivial" | "sqrt-minus-one-trivial" | "inseparable-converse" => {
                let mut insts = Vec::new();
                for i in 0..count {
                    let (mut p, _) = profile(i);
                    if suite == "sqrt-minus-one-trivial" {
                        p.extra_shared = true;
                        p.folds.iter_mut().for_each(|f| *f += 1);
                    } else {
                        p.shared_bilinear = p.k;
                        p.height = 1;
                        p.folds.iter_mut().for_each(|f| *f += p.k);
                        if suite == "inseparable-converse" {
                            p.shared_bilinear = 1;
                            p.folds = vec![p.k + 1, p.folds[1].max(p.k + 1)];
                        }
                    }
                    insts.push(generate_linked_pair(seed(i), &p).map_err(err)?);
                }
                if suite == "inseparable-converse" {
                    let reps = verify_inseparable_converse(&insts, &budget).map_err(err)?;
                    let mut by: HashMap<String, usize> = HashMap::new();
                    for rep in &reps {
                        *by.entry(format!("{:?}", rep.status)).or_default() += 1;
                    }
                    let verdict = if by.contains_key("Contradiction") {
                        "no"
                    } else if reps.iter().all(|x| x.status == ConverseStatus::Certified) {
                        "yes"
                    } else {
                        "unknown"
                    };
                    r.verdict = Some(verdict.into());
                    let mut keys: Vec<_> = by.into_iter().collect();
                    keys.sort();
                    r.value = Some(keys.iter().map(|(k, v)| format!("{k}: {v}")).collect::<Vec<_>>().join(", "));
                    return Ok(());
                }
                let rep = if suite == "sqrt-minus-one-trivial" {
                    verify_sqrt_minus_one_trivial(&insts, &budget)
                } else {
                    verify_inseparable_trivial(&insts, &budget)
                }
                .map_err(err)?;
                rep.instances.iter().for_each(|x| tally(&x.hyperbolic));
            }
            "invariance" => {
                for i in 0..count {
                    let (p, mut rng) = profile(i);
                    let tuple = generate_linked_pair(seed(i), &p).map_err(err)?;
                    let sa = random_script(&tuple, &mut rng, len, 2);
                    let sb = random_script(&tuple, &mut rng, len, 2);
                    tally(&verify_invariance(&tuple, &sa, &sb, &budget).map_err(err)?.verdict);
                }
            }
            "separable-witness" => {
                for i in 0..count {
                    let (mut p, _) = profile(i);
                    p.folds.iter_mut().for_each(|f| *f += 1);
                    let tuple = generate_linked_pair(seed(i), &p).map_err(err)?;
                    let ps = tuple.presentations();
                    let k = tuple.k();
                    let d = is_isotropic(&omega_separable(&ps[0], &ps[1], k).map_err(err)?, &budget).map_err(err)?;
                    let sum = ps[0]
                        .expand()
                        .and_then(|a| a.orth_sum(&ps[1].expand()?.negate()?))
                        .map_err(err)?;
                    let w = witt_index(&sum, &budget).map_err(err)?;
                    let agree = if d.is_unknown() || !w.exact {
                        Decision::Unknown { bound: "inconclusive".into() }
                    } else if d.is_yes() == (w.witt_index >= 1 << (k + 1)) {
                        Decision::Yes { certificate: None }
                    } else {
                        Decision::No { reason: "disagreement".into() }
                    };
                    tally(&agree);
                }
            }
            "inseparable-dims" => {
                for i in 0..count {
                    let (p, _) = profile(i);
                    let k = p.k;
                    let (m, n) = (p.folds[0] - k, p.folds[1] - k);
                    let tuple = generate_linked_pair(seed(i), &p).map_err(err)?;
                    let ps = tuple.presentations();
                    let w = omega_inseparable(&ps[0], &ps[1], k).map_err(err)?;
                    let expect = (1 << (m + k)) + (1 << (n + k)) - (1 << (k + 1)) + 1;
                    tally(&if w.dim() == expect {
                        Decision::Yes { certificate: None }
                    } else {
                        Decision::No { reason: format!("dimension {} instead of {expect}", w.dim()) }
                    });
                }
            }
            _ => return Err(format!("unknown suite {suite}")),
        }
        let (y, n, u) = (counts.get("yes").copied().unwrap_or(0), counts.get("no").copied().unwrap_or(0), counts.get("unknown").copied().unwrap_or(0));
        r.verdict = Some(if n > 0 { "no" } else if u > 0 { "unknown" } else { "yes" }.into());
        r.value = Some(format!("{count} instances: {y} yes, {n} no, {u} unknown"));
        Ok(())
    }
}

fn as_form(v: &Val) -> RResult<QForm> {
    match v {
        Val::Pres(p) => p.expand().map_err(err),
        Val::Form(f) => Ok(f.clone()),
        Val::Elem(..) => Err(format!("expected a form, got the element {}", v.show())),
    }
}

fn first_ref(e: &Expr) -> Option<&str> {
    let o = match e {
        Expr::Obj(o) | Expr::Isotropic(o) | Expr::Witt(o) | Expr::Hyperbolic(o) | Expr::Expand(o) | Expr::Move(o, _) => o,
        Expr::Isometric(a, _) | Expr::Linked(_, _, a, _) | Expr::Omega(_, _, a, _) => a,
        Expr::Invariant(_, v) => v.first()?,
        Expr::ChainStep { psi, .. } => psi,
        Expr::Verify { .. } => return None,
    };
    match o {
        Obj::Ref(n, _) => Some(n),
        _ => match e {
            Expr::Isometric(_, b) | Expr::Linked(_, _, _, b) | Expr::Omega(_, _, _, b) => match b {
                Obj::Ref(n, _) => Some(n),
                _ => None,
            },
            Expr::Invariant(_, v) => v.iter().find_map(|o| match o {
                Obj::Ref(n, _) => Some(n.as_str()),
                _ => None,
            }),
            _ => None,
        },
    }
}

fn squash(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

/// Execute a parsed script.
pub fn run(script: &Script, opts: &Options) -> Report {
    let mut s = Session::new(opts.clone());
    let statements = script.stmts.iter().map(|st| s.exec(st)).collect();
    Report { statements, budget: opts.budget.clone(), seed: opts.seed }
}
