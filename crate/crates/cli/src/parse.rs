//! Line-oriented recursive descent parser. Names and fields are resolved
//! while parsing, so undeclared identifiers and malformed elements are
//! reported with their line and column.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use pfister::fields::FieldTower;

use crate::ast::*;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    pub line: usize,
    pub col: usize,
    pub expected: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.expected)
    }
}

impl std::error::Error for SyntaxError {}

type PResult<T> = Result<T, SyntaxError>;

/// What a name is bound to, for resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Binding {
    pub field: String,
}

/// Parser state that persists across lines: declared fields and names.
#[derive(Clone, Debug, Default)]
pub struct Parser {
    fields: HashMap<String, Arc<FieldTower>>,
    names: HashMap<String, Binding>,
}

pub fn parse(text: &str) -> PResult<Script> {
    let mut p = Parser::default();
    let mut stmts = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if let Some(s) = p.parse_line(i + 1, line)? {
            stmts.push(s);
        }
    }
    Ok(Script { stmts })
}

const COMMANDS: [&str; 13] = [
    "isotropic",
    "witt",
    "hyperbolic",
    "isometric",
    "expand",
    "linked-sep",
    "linked-insep",
    "omega-sep",
    "omega-insep",
    "invariant",
    "chain-step",
    "move",
    "verify",
];

struct Cursor<'a> {
    s: Vec<char>,
    i: usize,
    line: usize,
    _src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str, line: usize) -> Self {
        let body = src.split('#').next().unwrap_or("");
        Cursor { s: body.chars().collect(), i: 0, line, _src: src }
    }

    fn pos(&self) -> Pos {
        Pos { line: self.line, col: self.i + 1 }
    }

    fn err<T>(&self, expected: impl Into<String>) -> PResult<T> {
        Err(SyntaxError { line: self.line, col: self.i + 1, expected: expected.into() })
    }

    fn ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_whitespace() {
            self.i += 1;
        }
    }

    fn at_end(&mut self) -> bool {
        self.ws();
        self.i >= self.s.len()
    }

    fn peek(&mut self) -> Option<char> {
        self.ws();
        self.s.get(self.i).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    /// A keyword or identifier: letters, digits, `_` and inner `-`.
    fn peek_word(&mut self) -> Option<String> {
        self.ws();
        let mut j = self.i;
        if !self.s.get(j).is_some_and(|c| c.is_ascii_alphabetic() || *c == '_') {
            return None;
        }
        while j < self.s.len() && (self.s[j].is_ascii_alphanumeric() || self.s[j] == '_' || self.s[j] == '-') {
            j += 1;
        }
        while self.s[j - 1] == '-' {
            j -= 1;
        }
        Some(self.s[self.i..j].iter().collect())
    }

    fn word(&mut self) -> PResult<String> {
        match self.peek_word() {
            Some(w) => {
                self.i += w.chars().count();
                Ok(w)
            }
            None => self.err("expected a name"),
        }
    }

    fn keyword(&mut self, k: &str) -> bool {
        if self.peek_word().as_deref() == Some(k) {
            self.i += k.len();
            true
        } else {
            false
        }
    }

    fn expect_keyword(&mut self, k: &str) -> PResult<()> {
        if self.keyword(k) {
            Ok(())
        } else {
            self.err(format!("expected `{k}`"))
        }
    }

    fn uint(&mut self) -> PResult<u64> {
        self.ws();
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        if start == self.i {
            return self.err("expected a nonnegative integer");
        }
        let t: String = self.s[start..self.i].iter().collect();
        t.parse().or_else(|_| {
            self.i = start;
            self.err("integer too large")
        })
    }

    /// Element text up to a delimiter at bracket depth 0.
    fn elem(&mut self, stops: &[char]) -> PResult<Elem> {
        self.ws();
        let pos = self.pos();
        let start = self.i;
        let mut depth = 0i32;
        while self.i < self.s.len() {
            let c = self.s[self.i];
            if depth == 0 && stops.contains(&c) {
                break;
            }
            match c {
                '(' | '[' => depth += 1,
                ')' | ']' => depth -= 1,
                _ => {}
            }
            if depth < 0 {
                break;
            }
            self.i += 1;
        }
        let text: String = self.s[start..self.i].iter().collect::<String>().trim().to_string();
        if text.is_empty() {
            self.i = start;
            return self.err("expected an element");
        }
        Ok(Elem { text, pos })
    }

    /// Rest of the statement up to ` over ` or ` expect ` at depth 0.
    fn rest_until(&mut self, words: &[&str]) -> PResult<Elem> {
        self.ws();
        let pos = self.pos();
        let start = self.i;
        let mut depth = 0i32;
        while self.i < self.s.len() {
            let c = self.s[self.i];
            match c {
                '(' | '[' => depth += 1,
                ')' | ']' => depth -= 1,
                _ => {}
            }
            if depth == 0 && self.i > start && self.s[self.i - 1].is_whitespace() {
                let save = self.i;
                if let Some(w) = self.peek_word() {
                    if words.contains(&w.as_str()) {
                        break;
                    }
                }
                self.i = save;
            }
            self.i += 1;
        }
        let text: String = self.s[start..self.i].iter().collect::<String>().trim().to_string();
        if text.is_empty() {
            self.i = start;
            return self.err("expected a value");
        }
        Ok(Elem { text, pos })
    }

    fn elem_list(&mut self, close: char) -> PResult<Vec<Elem>> {
        let mut out = Vec::new();
        if self.peek() == Some(close) {
            return Ok(out);
        }
        loop {
            out.push(self.elem(&[',', close])?);
            if !self.eat(',') {
                return Ok(out);
            }
        }
    }
}

impl Parser {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn tower(&self, name: &str) -> Option<&Arc<FieldTower>> {
        self.fields.get(name)
    }

    pub fn binding(&self, name: &str) -> Option<&Binding> {
        self.names.get(name)
    }

    /// Parse one line; blank and comment-only lines yield `None`.
    pub fn parse_line(&mut self, line: usize, text: &str) -> PResult<Option<Stmt>> {
        let mut c = Cursor::new(text, line);
        if c.at_end() {
            return Ok(None);
        }
        let pos = c.pos();
        let head = match c.peek_word() {
            Some(w) => w,
            None => return c.err("expected `field`, `let`, `assert` or a command"),
        };
        let kind = match head.as_str() {
            "field" => {
                c.word()?;
                let name = c.word()?;
                c.expect('=')?;
                c.ws();
                let tpos = c.pos();
                let tower: String = c.s[c.i..].iter().collect::<String>().trim().to_string();
                let t = FieldTower::parse(&tower).map_err(|e| SyntaxError {
                    line,
                    col: tpos.col,
                    expected: format!("a field description ({e})"),
                })?;
                c.i = c.s.len();
                self.fields.insert(name.clone(), Arc::new(t));
                StmtKind::Field { name, tower }
            }
            "let" => {
                c.word()?;
                let name = c.word()?;
                c.expect('=')?;
                let epos = c.pos();
                let expr = self.expr(&mut c)?;
                if !binds(&expr) {
                    return Err(SyntaxError { line, col: epos.col, expected: "a form, presentation or element".into() });
                }
                let over = self.over(&mut c)?;
                let field = self.resolve(&expr, over.as_deref(), pos)?;
                self.names.insert(name.clone(), Binding { field });
                StmtKind::Let { name, expr, over }
            }
            "assert" => {
                c.word()?;
                let lhs = self.int_expr(&mut c)?;
                let op = cmp(&mut c)?;
                let rhs = self.int_expr(&mut c)?;
                StmtKind::Assert { lhs, op, rhs }
            }
            w if COMMANDS.contains(&w) => {
                let expr = self.expr(&mut c)?;
                let over = self.over(&mut c)?;
                self.resolve(&expr, over.as_deref(), pos)?;
                let mut expects = Vec::new();
                while c.keyword("expect") {
                    expects.push(expectation(&mut c)?);
                }
                StmtKind::Command { expr, over, expects }
            }
            _ => return c.err(format!("expected `field`, `let`, `assert` or a command, found `{head}`")),
        };
        if !c.at_end() {
            return c.err("expected end of line");
        }
        Ok(Some(Stmt { pos, kind }))
    }

    fn over(&self, c: &mut Cursor) -> PResult<Option<String>> {
        if !c.keyword("over") {
            return Ok(None);
        }
        c.ws();
        let p = c.pos();
        let name = c.word()?;
        if !self.fields.contains_key(&name) {
            return Err(SyntaxError { line: p.line, col: p.col, expected: format!("a declared field, found `{name}`") });
        }
        Ok(Some(name))
    }

    fn obj(&self, c: &mut Cursor) -> PResult<Obj> {
        c.ws();
        let p = c.pos();
        let w = match c.peek_word() {
            Some(w) => w,
            None => return c.err("expected a form, presentation or name"),
        };
        match w.as_str() {
            "pf" => {
                c.word()?;
                c.expect('[')?;
                let mut bilinear = Vec::new();
                if !matches!(c.peek(), Some(';') | Some('|') | Some(']')) {
                    loop {
                        bilinear.push(c.elem(&[',', ';', '|', ']'])?);
                        if !c.eat(',') {
                            break;
                        }
                    }
                }
                let as_slot = if c.eat(';') { Some(c.elem(&['|', ']'])?) } else { None };
                let k = if c.eat('|') { Some(c.uint()? as usize) } else { None };
                c.expect(']')?;
                Ok(Obj::Pf { bilinear, as_slot, k })
            }
            "diag" => {
                c.word()?;
                c.expect('(')?;
                let v = c.elem_list(')')?;
                c.expect(')')?;
                Ok(Obj::Diag(v))
            }
            "quasi" => {
                c.word()?;
                c.expect('(')?;
                let v = c.elem_list(')')?;
                c.expect(')')?;
                Ok(Obj::Quasi(v))
            }
            "pairs" => {
                c.word()?;
                c.expect('(')?;
                let mut pairs = Vec::new();
                if c.peek() != Some(')') {
                    loop {
                        c.expect('(')?;
                        let a = c.elem(&[','])?;
                        c.expect(',')?;
                        let b = c.elem(&[')'])?;
                        c.expect(')')?;
                        pairs.push((a, b));
                        if !c.eat(',') {
                            break;
                        }
                    }
                }
                c.expect(')')?;
                let quasi = if c.eat('+') {
                    c.expect_keyword("quasi")?;
                    c.expect('(')?;
                    let v = c.elem_list(')')?;
                    c.expect(')')?;
                    v
                } else {
                    vec![]
                };
                Ok(Obj::Pairs { pairs, quasi })
            }
            "elem" => {
                c.word()?;
                Ok(Obj::Elem(c.rest_until(&["over", "expect"])?))
            }
            _ => {
                c.word()?;
                if !self.names.contains_key(&w) {
                    return Err(SyntaxError { line: p.line, col: p.col, expected: format!("a bound name, found `{w}`") });
                }
                Ok(Obj::Ref(w, p))
            }
        }
    }

    fn two(&self, c: &mut Cursor) -> PResult<(Obj, Obj)> {
        let a = self.obj(c)?;
        c.expect(',')?;
        Ok((a, self.obj(c)?))
    }

    fn expr(&self, c: &mut Cursor) -> PResult<Expr> {
        let w = c.peek_word().unwrap_or_default();
        if !COMMANDS.contains(&w.as_str()) {
            return Ok(Expr::Obj(self.obj(c)?));
        }
        c.word()?;
        Ok(match w.as_str() {
            "isotropic" => Expr::Isotropic(self.obj(c)?),
            "witt" => Expr::Witt(self.obj(c)?),
            "hyperbolic" => Expr::Hyperbolic(self.obj(c)?),
            "expand" => Expr::Expand(self.obj(c)?),
            "isometric" => {
                let (a, b) = self.two(c)?;
                Expr::Isometric(a, b)
            }
            "linked-sep" | "linked-insep" | "omega-sep" | "omega-insep" => {
                let kind = if w.ends_with("insep") { Linkage::Inseparable } else { Linkage::Separable };
                let k = c.uint()? as usize;
                let (a, b) = self.two(c)?;
                if w.starts_with("linked") {
                    Expr::Linked(kind, k, a, b)
                } else {
                    Expr::Omega(kind, k, a, b)
                }
            }
            "invariant" => {
                let k = c.uint()? as usize;
                let mut args = vec![self.obj(c)?];
                while c.eat(',') {
                    args.push(self.obj(c)?);
                }
                Expr::Invariant(k, args)
            }
            "chain-step" => {
                let psi = self.obj(c)?;
                let v1 = span(c)?;
                let v2 = span(c)?;
                let factor = if c.keyword("factor") { Some(self.obj(c)?) } else { None };
                Expr::ChainStep { psi, v1, v2, factor }
            }
            "move" => {
                let p = self.obj(c)?;
                Expr::Move(p, move_syn(c)?)
            }
            "verify" => {
                let suite = c.word()?;
                let mut params = Vec::new();
                while let Some(key) = c.peek_word() {
                    if key == "over" || key == "expect" {
                        break;
                    }
                    c.word()?;
                    c.expect('=')?;
                    let mut vals = vec![c.uint()?];
                    while c.eat(',') {
                        vals.push(c.uint()?);
                    }
                    params.push((key, vals));
                }
                Expr::Verify { suite, params }
            }
            _ => unreachable!("command list"),
        })
    }

    fn int_expr(&self, c: &mut Cursor) -> PResult<IntExpr> {
        let mut lhs = self.int_term(c)?;
        while let Some(op) = c.peek().filter(|ch| *ch == '+' || *ch == '-') {
            c.i += 1;
            let rhs = self.int_term(c)?;
            lhs = IntExpr::Bin(Box::new(lhs), op, Box::new(rhs));
        }
        Ok(lhs)
    }

    fn int_term(&self, c: &mut Cursor) -> PResult<IntExpr> {
        let mut lhs = self.int_pow(c)?;
        while c.eat('*') {
            let rhs = self.int_pow(c)?;
            lhs = IntExpr::Bin(Box::new(lhs), '*', Box::new(rhs));
        }
        Ok(lhs)
    }

    fn int_pow(&self, c: &mut Cursor) -> PResult<IntExpr> {
        let base = self.int_atom(c)?;
        if c.eat('^') {
            let e = self.int_pow(c)?;
            return Ok(IntExpr::Bin(Box::new(base), '^', Box::new(e)));
        }
        Ok(base)
    }

    fn int_atom(&self, c: &mut Cursor) -> PResult<IntExpr> {
        if c.eat('(') {
            let e = self.int_expr(c)?;
            c.expect(')')?;
            return Ok(e);
        }
        if c.peek().is_some_and(|ch| ch.is_ascii_digit()) {
            return Ok(IntExpr::Lit(c.uint()? as i64));
        }
        let f = c.word()?;
        c.expect('(')?;
        c.ws();
        let p = c.pos();
        let name = c.word()?;
        if !self.names.contains_key(&name) {
            return Err(SyntaxError { line: p.line, col: p.col, expected: format!("a bound name, found `{name}`") });
        }
        c.expect(')')?;
        match f.as_str() {
            "dim" => Ok(IntExpr::Dim(name)),
            "fold" => Ok(IntExpr::Fold(name)),
            "witt" => Ok(IntExpr::Witt(name)),
            _ => Err(SyntaxError { line: p.line, col: p.col, expected: "`dim`, `fold` or `witt`".into() }),
        }
    }

    /// Field of a statement: the explicit `over`, else that of the first
    /// referenced name. All element literals are checked against it.
    fn resolve(&self, e: &Expr, over: Option<&str>, pos: Pos) -> PResult<String> {
        let mut objs: Vec<&Obj> = Vec::new();
        let mut elems: Vec<&Elem> = Vec::new();
        collect(e, &mut objs, &mut elems);
        let field = over
            .map(str::to_string)
            .or_else(|| {
                objs.iter().find_map(|o| match o {
                    Obj::Ref(n, _) => self.names.get(n).map(|b| b.field.clone()),
                    _ => None,
                })
            })
            .ok_or_else(|| SyntaxError { line: pos.line, col: pos.col, expected: "`over <field>`".into() })?;
        let t = &self.fields[&field];
        for o in &objs {
            if let Obj::Ref(n, p) = o {
                if self.names[n].field != field {
                    return Err(SyntaxError {
                        line: p.line,
                        col: p.col,
                        expected: format!("a name over `{field}`, `{n}` is over `{}`", self.names[n].field),
                    });
                }
            }
        }
        for el in elems {
            t.parse_elem(&el.text).map_err(|err| SyntaxError {
                line: el.pos.line,
                col: el.pos.col,
                expected: format!("an element of {t} ({err})"),
            })?;
        }
        Ok(field)
    }
}

fn binds(e: &Expr) -> bool {
    matches!(
        e,
        Expr::Obj(_) | Expr::Expand(_) | Expr::Omega(..) | Expr::Invariant(..) | Expr::Move(..) | Expr::ChainStep { .. }
    )
}

fn obj_parts<'a>(o: &'a Obj, objs: &mut Vec<&'a Obj>, elems: &mut Vec<&'a Elem>) {
    objs.push(o);
    match o {
        Obj::Ref(..) => {}
        Obj::Pf { bilinear, as_slot, .. } => {
            elems.extend(bilinear);
            elems.extend(as_slot);
        }
        Obj::Diag(v) | Obj::Quasi(v) => elems.extend(v),
        Obj::Pairs { pairs, quasi } => {
            for (a, b) in pairs {
                elems.push(a);
                elems.push(b);
            }
            elems.extend(quasi);
        }
        Obj::Elem(e) => elems.push(e),
    }
}

fn collect<'a>(e: &'a Expr, objs: &mut Vec<&'a Obj>, elems: &mut Vec<&'a Elem>) {
    match e {
        Expr::Obj(o) | Expr::Isotropic(o) | Expr::Witt(o) | Expr::Hyperbolic(o) | Expr::Expand(o) => {
            obj_parts(o, objs, elems)
        }
        Expr::Isometric(a, b) | Expr::Linked(_, _, a, b) | Expr::Omega(_, _, a, b) => {
            obj_parts(a, objs, elems);
            obj_parts(b, objs, elems);
        }
        Expr::Invariant(_, v) => v.iter().for_each(|o| obj_parts(o, objs, elems)),
        Expr::ChainStep { psi, v1, v2, factor } => {
            obj_parts(psi, objs, elems);
            for v in v1.iter().chain(v2) {
                if let VecSyn::Explicit(es) = v {
                    elems.extend(es);
                }
            }
            if let Some(f) = factor {
                obj_parts(f, objs, elems);
            }
        }
        Expr::Move(o, m) => {
            obj_parts(o, objs, elems);
            match m {
                MoveSyn::SquareScale(_, a) | MoveSyn::AsShift(a) => elems.push(a),
                MoveSyn::NormScale(_, a, b) | MoveSyn::Char2NormScale(_, a, b) => {
                    elems.push(a);
                    elems.push(b);
                }
                MoveSyn::Swap(_) | MoveSyn::Twist(_) => {}
            }
        }
        Expr::Verify { .. } => {}
    }
}

fn span(c: &mut Cursor) -> PResult<Vec<VecSyn>> {
    c.expect_keyword("span")?;
    c.expect('(')?;
    let mut out = Vec::new();
    loop {
        if c.eat('[') {
            let v = c.elem_list(']')?;
            c.expect(']')?;
            out.push(VecSyn::Explicit(v));
        } else {
            let p = c.pos();
            let w = c.word()?;
            match w.strip_prefix('e').and_then(|n| n.parse::<usize>().ok()) {
                Some(n) if n >= 1 => out.push(VecSyn::Basis(n)),
                _ => return Err(SyntaxError { line: p.line, col: p.col, expected: "`eN` or `[...]`".into() }),
            }
        }
        if !c.eat(',') {
            break;
        }
    }
    c.expect(')')?;
    Ok(out)
}

fn move_syn(c: &mut Cursor) -> PResult<MoveSyn> {
    let name = c.word()?;
    c.expect('(')?;
    let idx = |c: &mut Cursor| -> PResult<usize> { Ok(c.uint()? as usize) };
    let m = match name.as_str() {
        "square-scale" => {
            let i = idx(c)?;
            c.expect(',')?;
            MoveSyn::SquareScale(i, c.elem(&[')'])?)
        }
        "swap" => MoveSyn::Swap(idx(c)?),
        "twist" => MoveSyn::Twist(idx(c)?),
        "norm-scale" | "char2-norm-scale" => {
            let i = idx(c)?;
            c.expect(',')?;
            let a = c.elem(&[','])?;
            c.expect(',')?;
            let b = c.elem(&[')'])?;
            if name == "norm-scale" {
                MoveSyn::NormScale(i, a, b)
            } else {
                MoveSyn::Char2NormScale(i, a, b)
            }
        }
        "as-shift" => MoveSyn::AsShift(c.elem(&[')'])?),
        _ => return c.err("a move: square-scale, swap, twist, norm-scale, as-shift or char2-norm-scale"),
    };
    c.expect(')')?;
    Ok(m)
}

fn cmp(c: &mut Cursor) -> PResult<Cmp> {
    c.ws();
    let two: String = c.s[c.i..(c.i + 2).min(c.s.len())].iter().collect();
    let (op, n) = match two.as_str() {
        "<=" => (Cmp::Le, 2),
        ">=" => (Cmp::Ge, 2),
        "==" => (Cmp::Eq, 2),
        "!=" => (Cmp::Ne, 2),
        _ => match two.chars().next() {
            Some('<') => (Cmp::Lt, 1),
            Some('>') => (Cmp::Gt, 1),
            _ => return c.err("a comparison"),
        },
    };
    c.i += n;
    Ok(op)
}

fn expectation(c: &mut Cursor) -> PResult<Expect> {
    let w = c.word()?;
    Ok(match w.as_str() {
        "yes" => Expect::Yes,
        "no" => Expect::No,
        "unknown" => Expect::Unknown,
        "hyperbolic" => Expect::Hyperbolic,
        "error" => Expect::Error,
        "value" => {
            c.expect('=')?;
            Expect::Value(c.rest_until(&["expect"])?.text)
        }
        _ => return c.err("`yes`, `no`, `unknown`, `hyperbolic`, `error` or `value=`"),
    })
}
