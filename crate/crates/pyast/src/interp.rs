//! A small tree-walking interpreter for the supported subset.
//!
//! It exists to compare the observable behavior of two programs (printed
//! output plus the values returned by probe calls), so it favors clear
//! failure over breadth: anything outside the subset raises a runtime error.

use std::cell::RefCell;
use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::rc::Rc;

use crate::ast::*;
use crate::render::{float_repr, string_repr};
use crate::visit::target_names;

const DEFAULT_STEP_LIMIT: u64 = 2_000_000;
const MAX_SEQUENCE_LEN: usize = 1_000_000;

#[derive(Clone)]
pub enum Value {
    None,
    Ellipsis,
    Bool(bool),
    Int(i64),
    Float(f64),
    Str(Rc<str>),
    List(Rc<RefCell<Vec<Value>>>),
    Tuple(Rc<Vec<Value>>),
    Dict(Rc<RefCell<Vec<(Value, Value)>>>),
    Function(Rc<Function>),
    Builtin(&'static str),
    Method(Box<Value>, Rc<str>),
}

pub struct Function {
    name: String,
    params: Vec<(String, Option<Value>)>,
    body: Vec<Stmt>,
    locals: HashSet<String>,
    closure: Rc<Scope>,
}

impl std::fmt::Debug for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.repr())
    }
}

/// A Python exception surfaced by the interpreter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuntimeError {
    pub kind: String,
    pub message: String,
}

impl std::fmt::Display for RuntimeError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.kind, self.message)
    }
}

impl std::error::Error for RuntimeError {}

fn rt(kind: &str, message: impl Into<String>) -> RuntimeError {
    RuntimeError {
        kind: kind.to_string(),
        message: message.into(),
    }
}

type Res<T> = Result<T, RuntimeError>;

impl Value {
    fn str(s: impl Into<Rc<str>>) -> Value {
        Value::Str(s.into())
    }

    fn list(v: Vec<Value>) -> Value {
        Value::List(Rc::new(RefCell::new(v)))
    }

    pub fn type_name(&self) -> &'static str {
        match self {
            Value::None => "NoneType",
            Value::Ellipsis => "ellipsis",
            Value::Bool(_) => "bool",
            Value::Int(_) => "int",
            Value::Float(_) => "float",
            Value::Str(_) => "str",
            Value::List(_) => "list",
            Value::Tuple(_) => "tuple",
            Value::Dict(_) => "dict",
            Value::Function(_) => "function",
            Value::Builtin(_) | Value::Method(..) => "builtin_function_or_method",
        }
    }

    pub fn truthy(&self) -> bool {
        match self {
            Value::None => false,
            Value::Bool(b) => *b,
            Value::Int(i) => *i != 0,
            Value::Float(f) => *f != 0.0,
            Value::Str(s) => !s.is_empty(),
            Value::List(l) => !l.borrow().is_empty(),
            Value::Tuple(t) => !t.is_empty(),
            Value::Dict(d) => !d.borrow().is_empty(),
            _ => true,
        }
    }

    /// Python `repr`.
    pub fn repr(&self) -> String {
        match self {
            Value::None => "None".into(),
            Value::Ellipsis => "Ellipsis".into(),
            Value::Bool(true) => "True".into(),
            Value::Bool(false) => "False".into(),
            Value::Int(i) => i.to_string(),
            Value::Float(f) => py_float_str(*f),
            Value::Str(s) => string_repr(s),
            Value::List(l) => format!(
                "[{}]",
                l.borrow().iter().map(Value::repr).collect::<Vec<_>>().join(", ")
            ),
            Value::Tuple(t) => {
                if t.len() == 1 {
                    format!("({},)", t[0].repr())
                } else {
                    format!("({})", t.iter().map(Value::repr).collect::<Vec<_>>().join(", "))
                }
            }
            Value::Dict(d) => format!(
                "{{{}}}",
                d.borrow()
                    .iter()
                    .map(|(k, v)| format!("{}: {}", k.repr(), v.repr()))
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
            Value::Function(f) => format!("<function {}>", f.name),
            Value::Builtin(n) => format!("<built-in function {n}>"),
            Value::Method(_, n) => format!("<built-in method {n}>"),
        }
    }

    /// Python `str`.
    pub fn display(&self) -> String {
        match self {
            Value::Str(s) => s.to_string(),
            other => other.repr(),
        }
    }

    fn as_f64(&self) -> Option<f64> {
        match self {
            Value::Bool(b) => Some(*b as i64 as f64),
            Value::Int(i) => Some(*i as f64),
            Value::Float(f) => Some(*f),
            _ => None,
        }
    }

    fn as_int(&self) -> Option<i64> {
        match self {
            Value::Bool(b) => Some(*b as i64),
            Value::Int(i) => Some(*i),
            _ => None,
        }
    }
}

fn py_float_str(f: f64) -> String {
    if f.is_nan() {
        "nan".into()
    } else if f.is_infinite() {
        if f > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        float_repr(f)
    }
}

/// Python `==`.
pub fn py_eq(a: &Value, b: &Value) -> bool {
    match (a, b) {
        (Value::None, Value::None) | (Value::Ellipsis, Value::Ellipsis) => true,
        (Value::Str(x), Value::Str(y)) => x == y,
        (Value::List(x), Value::List(y)) => {
            Rc::ptr_eq(x, y) || seq_eq(&x.borrow(), &y.borrow())
        }
        (Value::Tuple(x), Value::Tuple(y)) => seq_eq(x, y),
        (Value::Dict(x), Value::Dict(y)) => {
            let (x, y) = (x.borrow(), y.borrow());
            x.len() == y.len()
                && x.iter().all(|(k, v)| y.iter().any(|(k2, v2)| py_eq(k, k2) && py_eq(v, v2)))
        }
        (Value::Function(x), Value::Function(y)) => Rc::ptr_eq(x, y),
        (Value::Builtin(x), Value::Builtin(y)) => x == y,
        _ => match (a.as_int(), b.as_int()) {
            (Some(x), Some(y)) => x == y,
            _ => match (a.as_f64(), b.as_f64()) {
                (Some(x), Some(y)) => x == y,
                _ => false,
            },
        },
    }
}

fn seq_eq(a: &[Value], b: &[Value]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| py_eq(x, y))
}

struct Scope {
    vars: RefCell<HashMap<String, Value>>,
    parent: Option<Rc<Scope>>,
    /// Names local to a function body; `None` for the module scope.
    locals: Option<HashSet<String>>,
}

impl Scope {
    fn module() -> Rc<Scope> {
        Rc::new(Scope {
            vars: RefCell::new(HashMap::new()),
            parent: None,
            locals: None,
        })
    }

    fn child(parent: &Rc<Scope>, locals: HashSet<String>) -> Rc<Scope> {
        Rc::new(Scope {
            vars: RefCell::new(HashMap::new()),
            parent: Some(parent.clone()),
            locals: Some(locals),
        })
    }

    fn lookup(&self, name: &str) -> Res<Value> {
        if let Some(v) = self.vars.borrow().get(name) {
            return Ok(v.clone());
        }
        if let Some(locals) = &self.locals {
            if locals.contains(name) {
                return Err(rt(
                    "UnboundLocalError",
                    format!("local variable '{name}' referenced before assignment"),
                ));
            }
        }
        match &self.parent {
            Some(p) => p.lookup(name),
            None => match builtin(name) {
                Some(b) => Ok(Value::Builtin(b)),
                None => Err(rt("NameError", format!("name '{name}' is not defined"))),
            },
        }
    }

    fn set(&self, name: &str, v: Value) {
        self.vars.borrow_mut().insert(name.to_string(), v);
    }
}

const BUILTINS: &[&str] = &[
    "print", "len", "range", "abs", "min", "max", "sum", "sorted", "reversed", "enumerate", "zip",
    "list", "tuple", "str", "int", "float", "bool", "any", "all", "round", "pow", "dict",
];

fn builtin(name: &str) -> Option<&'static str> {
    BUILTINS.iter().copied().find(|b| *b == name)
}

enum Flow {
    Normal,
    Return(Value),
    Break,
    Continue,
}

/// Outcome of evaluating one probe expression.
#[derive(Debug, Clone)]
pub struct ProbeOutcome {
    pub probe: String,
    pub stdout: Vec<String>,
    pub result: Result<Value, RuntimeError>,
}

impl PartialEq for ProbeOutcome {
    fn eq(&self, other: &Self) -> bool {
        self.stdout == other.stdout
            && match (&self.result, &other.result) {
                (Ok(a), Ok(b)) => py_eq(a, b),
                (Err(a), Err(b)) => a.kind == b.kind,
                _ => false,
            }
    }
}

/// Observable behavior of a module: output of its top level plus one outcome
/// per probe.
#[derive(Debug, Clone, PartialEq)]
pub struct Observation {
    pub module_stdout: Vec<String>,
    pub module_error: Option<String>,
    pub probes: Vec<ProbeOutcome>,
}

pub struct Interpreter {
    globals: Rc<Scope>,
    stdout: Vec<String>,
    steps: u64,
    step_limit: u64,
    depth: usize,
}

impl Default for Interpreter {
    fn default() -> Self {
        Self::new()
    }
}

impl Interpreter {
    pub fn new() -> Self {
        Interpreter {
            globals: Scope::module(),
            stdout: Vec::new(),
            steps: 0,
            step_limit: DEFAULT_STEP_LIMIT,
            depth: 0,
        }
    }

    pub fn with_step_limit(mut self, limit: u64) -> Self {
        self.step_limit = limit;
        self
    }

    /// Runs a module's top level, then evaluates each probe expression in the
    /// resulting global namespace.
    pub fn observe(module: &PyModuleAst, probes: &[Expr]) -> Observation {
        let mut it = Interpreter::new();
        let module_error = it.exec_module(module).err().map(|e| e.kind);
        let module_stdout = std::mem::take(&mut it.stdout);
        let probes = probes
            .iter()
            .map(|p| {
                it.steps = 0;
                let result = it.eval_in(p, &it.globals.clone());
                ProbeOutcome {
                    probe: crate::render::render_expr(p),
                    stdout: std::mem::take(&mut it.stdout),
                    result,
                }
            })
            .collect();
        Observation {
            module_stdout,
            module_error,
            probes,
        }
    }

    pub fn exec_module(&mut self, module: &PyModuleAst) -> Res<()> {
        let scope = self.globals.clone();
        match self.exec_block(&module.body, &scope)? {
            Flow::Normal => Ok(()),
            Flow::Return(_) => Err(rt("SyntaxError", "'return' outside function")),
            Flow::Break | Flow::Continue => Err(rt("SyntaxError", "loop control outside loop")),
        }
    }

    pub fn eval_global(&mut self, e: &Expr) -> Res<Value> {
        let scope = self.globals.clone();
        self.eval_in(e, &scope)
    }

    pub fn take_stdout(&mut self) -> Vec<String> {
        std::mem::take(&mut self.stdout)
    }

    fn eval_in(&mut self, e: &Expr, scope: &Rc<Scope>) -> Res<Value> {
        self.eval(e, scope)
    }

    fn tick(&mut self) -> Res<()> {
        self.steps += 1;
        if self.steps > self.step_limit {
            return Err(rt("StepLimitExceeded", "execution step budget exhausted"));
        }
        Ok(())
    }

    fn exec_block(&mut self, stmts: &[Stmt], scope: &Rc<Scope>) -> Res<Flow> {
        for s in stmts {
            match self.exec(s, scope)? {
                Flow::Normal => {}
                other => return Ok(other),
            }
        }
        Ok(Flow::Normal)
    }

    fn exec(&mut self, s: &Stmt, scope: &Rc<Scope>) -> Res<Flow> {
        self.tick()?;
        match s {
            Stmt::FunctionDef { name, params, body } => {
                let mut ps = Vec::new();
                for p in params {
                    let d = match &p.default {
                        Some(d) => Some(self.eval(d, scope)?),
                        None => None,
                    };
                    ps.push((p.name.clone(), d));
                }
                let f = Function {
                    name: name.clone(),
                    params: ps,
                    body: body.clone(),
                    locals: function_locals(params, body),
                    closure: scope.clone(),
                };
                scope.set(name, Value::Function(Rc::new(f)));
            }
            Stmt::Return(v) => {
                let v = match v {
                    Some(e) => self.eval(e, scope)?,
                    None => Value::None,
                };
                return Ok(Flow::Return(v));
            }
            Stmt::Assign { targets, value } => {
                let v = self.eval(value, scope)?;
                for t in targets {
                    self.assign(t, v.clone(), scope)?;
                }
            }
            Stmt::AugAssign { target, op, value } => {
                let cur = self.eval(target, scope)?;
                let rhs = self.eval(value, scope)?;
                let new = match (&cur, op) {
                    // in-place list extension keeps aliasing semantics
                    (Value::List(l), BinOp::Add) => {
                        let items = self.iterate(&rhs)?;
                        l.borrow_mut().extend(items);
                        cur.clone()
                    }
                    _ => binop(*op, &cur, &rhs)?,
                };
                self.assign(target, new, scope)?;
            }
            Stmt::Expr(e) => {
                self.eval(e, scope)?;
            }
            Stmt::If { test, body, orelse } => {
                let branch = if self.eval(test, scope)?.truthy() { body } else { orelse };
                return self.exec_block(branch, scope);
            }
            Stmt::For { target, iter, body } => {
                let it = self.eval(iter, scope)?;
                for item in self.iterate(&it)? {
                    self.assign(target, item, scope)?;
                    match self.exec_block(body, scope)? {
                        Flow::Break => break,
                        Flow::Return(v) => return Ok(Flow::Return(v)),
                        Flow::Normal | Flow::Continue => {}
                    }
                }
            }
            Stmt::While { test, body } => {
                while self.eval(test, scope)?.truthy() {
                    self.tick()?;
                    match self.exec_block(body, scope)? {
                        Flow::Break => break,
                        Flow::Return(v) => return Ok(Flow::Return(v)),
                        Flow::Normal | Flow::Continue => {}
                    }
                }
            }
            Stmt::Break => return Ok(Flow::Break),
            Stmt::Continue => return Ok(Flow::Continue),
            Stmt::Pass => {}
            Stmt::Import(names) => {
                return Err(rt(
                    "ModuleNotFoundError",
                    format!("imports are not available to the interpreter: {}", names[0].name),
                ))
            }
            Stmt::ImportFrom { module, .. } => {
                return Err(rt(
                    "ModuleNotFoundError",
                    format!("imports are not available to the interpreter: {module}"),
                ))
            }
        }
        Ok(Flow::Normal)
    }

    fn assign(&mut self, target: &Expr, v: Value, scope: &Rc<Scope>) -> Res<()> {
        match target {
            Expr::Name(n) => {
                scope.set(n, v);
                Ok(())
            }
            Expr::Tuple(items) | Expr::List(items) => {
                let vals = self.iterate(&v)?;
                if vals.len() != items.len() {
                    return Err(rt(
                        "ValueError",
                        format!("expected {} values to unpack, got {}", items.len(), vals.len()),
                    ));
                }
                for (t, x) in items.iter().zip(vals) {
                    self.assign(t, x, scope)?;
                }
                Ok(())
            }
            Expr::Subscript { value, index } => {
                let container = self.eval(value, scope)?;
                let key = self.eval(index, scope)?;
                match &container {
                    Value::List(l) => {
                        let mut l = l.borrow_mut();
                        let i = seq_index(&key, l.len())?;
                        l[i] = v;
                        Ok(())
                    }
                    Value::Dict(d) => {
                        let mut d = d.borrow_mut();
                        match d.iter_mut().find(|(k, _)| py_eq(k, &key)) {
                            Some(slot) => slot.1 = v,
                            None => d.push((key, v)),
                        }
                        Ok(())
                    }
                    other => Err(rt(
                        "TypeError",
                        format!("'{}' object does not support item assignment", other.type_name()),
                    )),
                }
            }
            Expr::Attribute { attr, .. } => Err(rt(
                "AttributeError",
                format!("attribute assignment is not supported: {attr}"),
            )),
            _ => Err(rt("SyntaxError", "cannot assign to expression")),
        }
    }

    fn iterate(&mut self, v: &Value) -> Res<Vec<Value>> {
        Ok(match v {
            Value::List(l) => l.borrow().clone(),
            Value::Tuple(t) => t.as_ref().clone(),
            Value::Str(s) => s.chars().map(|c| Value::str(c.to_string())).collect(),
            Value::Dict(d) => d.borrow().iter().map(|(k, _)| k.clone()).collect(),
            other => {
                return Err(rt(
                    "TypeError",
                    format!("'{}' object is not iterable", other.type_name()),
                ))
            }
        })
    }

    fn eval(&mut self, e: &Expr, scope: &Rc<Scope>) -> Res<Value> {
        self.tick()?;
        match e {
            Expr::Constant(c) => Ok(match c {
                Constant::None => Value::None,
                Constant::Bool(b) => Value::Bool(*b),
                Constant::Int(i) => Value::Int(*i),
                Constant::Float(f) => Value::Float(*f),
                Constant::Str(s) => Value::str(s.as_str()),
                Constant::Ellipsis => Value::Ellipsis,
            }),
            Expr::Name(n) => scope.lookup(n),
            Expr::BoolOp { op, values } => {
                let mut last = Value::None;
                for v in values {
                    last = self.eval(v, scope)?;
                    let stop = match op {
                        BoolOp::And => !last.truthy(),
                        BoolOp::Or => last.truthy(),
                    };
                    if stop {
                        break;
                    }
                }
                Ok(last)
            }
            Expr::BinOp { left, op, right } => {
                let l = self.eval(left, scope)?;
                let r = self.eval(right, scope)?;
                binop(*op, &l, &r)
            }
            Expr::UnaryOp { op, operand } => {
                let v = self.eval(operand, scope)?;
                match op {
                    UnaryOp::Not => Ok(Value::Bool(!v.truthy())),
                    UnaryOp::USub => match v {
                        Value::Float(f) => Ok(Value::Float(-f)),
                        other => match other.as_int() {
                            Some(i) => i.checked_neg().map(Value::Int).ok_or_else(overflow),
                            None => Err(bad_operand("unary -", &other)),
                        },
                    },
                    UnaryOp::UAdd => match v {
                        Value::Float(_) | Value::Int(_) => Ok(v),
                        Value::Bool(b) => Ok(Value::Int(b as i64)),
                        other => Err(bad_operand("unary +", &other)),
                    },
                    UnaryOp::Invert => match v.as_int() {
                        Some(i) => Ok(Value::Int(!i)),
                        None => Err(bad_operand("unary ~", &v)),
                    },
                }
            }
            Expr::Compare {
                left,
                ops,
                comparators,
            } => {
                let mut l = self.eval(left, scope)?;
                for (op, c) in ops.iter().zip(comparators) {
                    let r = self.eval(c, scope)?;
                    if !compare(*op, &l, &r)? {
                        return Ok(Value::Bool(false));
                    }
                    l = r;
                }
                Ok(Value::Bool(true))
            }
            Expr::IfExp { test, body, orelse } => {
                if self.eval(test, scope)?.truthy() {
                    self.eval(body, scope)
                } else {
                    self.eval(orelse, scope)
                }
            }
            Expr::Call {
                func,
                args,
                keywords,
            } => {
                let f = self.eval(func, scope)?;
                let mut argv = Vec::with_capacity(args.len());
                for a in args {
                    argv.push(self.eval(a, scope)?);
                }
                let mut kw = Vec::new();
                for k in keywords {
                    kw.push((k.arg.clone(), self.eval(&k.value, scope)?));
                }
                self.call(&f, argv, kw)
            }
            Expr::Attribute { value, attr } => {
                let v = self.eval(value, scope)?;
                if method_exists(&v, attr) {
                    Ok(Value::Method(Box::new(v), attr.as_str().into()))
                } else {
                    Err(rt(
                        "AttributeError",
                        format!("'{}' object has no attribute '{attr}'", v.type_name()),
                    ))
                }
            }
            Expr::Subscript { value, index } => {
                let v = self.eval(value, scope)?;
                if let Expr::Slice { lower, upper, step } = index.as_ref() {
                    let mut bound = |b: &Option<Box<Expr>>| -> Res<Option<i64>> {
                        match b {
                            None => Ok(None),
                            Some(e) => match self.eval(e, scope)? {
                                Value::None => Ok(None),
                                x => x.as_int().map(Some).ok_or_else(|| {
                                    rt("TypeError", "slice indices must be integers")
                                }),
                            },
                        }
                    };
                    let (lo, hi, st) = (bound(lower)?, bound(upper)?, bound(step)?);
                    return slice(&v, lo, hi, st);
                }
                let key = self.eval(index, scope)?;
                subscript(&v, &key)
            }
            Expr::Slice { .. } => Err(rt("SyntaxError", "slice outside subscript")),
            Expr::List(items) => {
                let mut out = Vec::with_capacity(items.len());
                for i in items {
                    out.push(self.eval(i, scope)?);
                }
                Ok(Value::list(out))
            }
            Expr::Tuple(items) => {
                let mut out = Vec::with_capacity(items.len());
                for i in items {
                    out.push(self.eval(i, scope)?);
                }
                Ok(Value::Tuple(Rc::new(out)))
            }
            Expr::Dict { keys, values } => {
                let mut out: Vec<(Value, Value)> = Vec::new();
                for (k, v) in keys.iter().zip(values) {
                    let k = self.eval(k, scope)?;
                    let v = self.eval(v, scope)?;
                    match out.iter_mut().find(|(x, _)| py_eq(x, &k)) {
                        Some(slot) => slot.1 = v,
                        None => out.push((k, v)),
                    }
                }
                Ok(Value::Dict(Rc::new(RefCell::new(out))))
            }
            Expr::ListComp { elt, generators } => {
                let mut names = HashSet::new();
                for g in generators {
                    let mut set = std::collections::BTreeSet::new();
                    target_names(&g.target, &mut set);
                    names.extend(set);
                }
                let inner = Scope::child(scope, names);
                let mut out = Vec::new();
                self.comprehend(elt, generators, 0, &inner, scope, &mut out)?;
                Ok(Value::list(out))
            }
        }
    }

    fn comprehend(
        &mut self,
        elt: &Expr,
        gens: &[Comprehension],
        i: usize,
        inner: &Rc<Scope>,
        outer: &Rc<Scope>,
        out: &mut Vec<Value>,
    ) -> Res<()> {
        if i == gens.len() {
            out.push(self.eval(elt, inner)?);
            return Ok(());
        }
        let g = &gens[i];
        // the first iterable is evaluated in the enclosing scope
        let iterable = if i == 0 {
            self.eval(&g.iter, outer)?
        } else {
            self.eval(&g.iter, inner)?
        };
        'items: for item in self.iterate(&iterable)? {
            self.assign(&g.target, item, inner)?;
            for cond in &g.ifs {
                if !self.eval(cond, inner)?.truthy() {
                    continue 'items;
                }
            }
            self.comprehend(elt, gens, i + 1, inner, outer, out)?;
        }
        Ok(())
    }

    fn call(&mut self, f: &Value, args: Vec<Value>, kw: Vec<(String, Value)>) -> Res<Value> {
        match f {
            Value::Function(func) => {
                if self.depth >= 200 {
                    return Err(rt("RecursionError", "maximum recursion depth exceeded"));
                }
                if args.len() > func.params.len() {
                    return Err(rt(
                        "TypeError",
                        format!(
                            "{}() takes {} positional arguments but {} were given",
                            func.name,
                            func.params.len(),
                            args.len()
                        ),
                    ));
                }
                let frame = Scope::child(&func.closure, func.locals.clone());
                let mut args = args.into_iter();
                for (name, default) in &func.params {
                    let v = match args.next() {
                        Some(v) => v,
                        None => match kw.iter().find(|(k, _)| k == name) {
                            Some((_, v)) => v.clone(),
                            None => default.clone().ok_or_else(|| {
                                rt(
                                    "TypeError",
                                    format!("{}() missing required argument: '{name}'", func.name),
                                )
                            })?,
                        },
                    };
                    frame.set(name, v);
                }
                if let Some((k, _)) = kw.iter().find(|(k, _)| !func.params.iter().any(|(p, _)| p == k)) {
                    return Err(rt(
                        "TypeError",
                        format!("{}() got an unexpected keyword argument '{k}'", func.name),
                    ));
                }
                self.depth += 1;
                let r = self.exec_block(&func.body, &frame);
                self.depth -= 1;
                match r? {
                    Flow::Return(v) => Ok(v),
                    _ => Ok(Value::None),
                }
            }
            Value::Builtin(name) => self.call_builtin(name, args, kw),
            Value::Method(recv, name) => self.call_method(recv, name, args),
            other => Err(rt(
                "TypeError",
                format!("'{}' object is not callable", other.type_name()),
            )),
        }
    }

    fn call_builtin(&mut self, name: &str, args: Vec<Value>, kw: Vec<(String, Value)>) -> Res<Value> {
        let kwarg = |k: &str| kw.iter().find(|(n, _)| n == k).map(|(_, v)| v.clone());
        let arity = |n: usize| -> Res<()> {
            if args.len() == n {
                Ok(())
            } else {
                Err(rt(
                    "TypeError",
                    format!("{name}() takes {n} arguments ({} given)", args.len()),
                ))
            }
        };
        match name {
            "print" => {
                let sep = kwarg("sep").map(|v| v.display()).unwrap_or_else(|| " ".into());
                let line = args.iter().map(Value::display).collect::<Vec<_>>().join(&sep);
                self.stdout.push(line);
                Ok(Value::None)
            }
            "len" => {
                arity(1)?;
                let n = match &args[0] {
                    Value::Str(s) => s.chars().count(),
                    Value::List(l) => l.borrow().len(),
                    Value::Tuple(t) => t.len(),
                    Value::Dict(d) => d.borrow().len(),
                    other => {
                        return Err(rt(
                            "TypeError",
                            format!("object of type '{}' has no len()", other.type_name()),
                        ))
                    }
                };
                Ok(Value::Int(n as i64))
            }
            "range" => {
                let ints: Vec<i64> = args
                    .iter()
                    .map(|a| a.as_int().ok_or_else(|| rt("TypeError", "range() arguments must be integers")))
                    .collect::<Res<_>>()?;
                let (start, stop, step) = match ints.as_slice() {
                    [stop] => (0, *stop, 1),
                    [start, stop] => (*start, *stop, 1),
                    [start, stop, step] => (*start, *stop, *step),
                    _ => return Err(rt("TypeError", "range expected 1 to 3 arguments")),
                };
                if step == 0 {
                    return Err(rt("ValueError", "range() arg 3 must not be zero"));
                }
                let mut out = Vec::new();
                let mut i = start;
                while (step > 0 && i < stop) || (step < 0 && i > stop) {
                    if out.len() >= MAX_SEQUENCE_LEN {
                        return Err(rt("MemoryError", "range too large for the interpreter"));
                    }
                    out.push(Value::Int(i));
                    i += step;
                }
                Ok(Value::list(out))
            }
            "abs" => {
                arity(1)?;
                match &args[0] {
                    Value::Float(f) => Ok(Value::Float(f.abs())),
                    v => v
                        .as_int()
                        .and_then(|i| i.checked_abs())
                        .map(Value::Int)
                        .ok_or_else(|| bad_operand("abs()", v)),
                }
            }
            "min" | "max" => {
                let items = if args.len() == 1 { self.iterate(&args[0])? } else { args };
                let mut it = items.into_iter();
                let mut best = it
                    .next()
                    .ok_or_else(|| rt("ValueError", format!("{name}() arg is an empty sequence")))?;
                for v in it {
                    let better = if name == "min" {
                        compare(CmpOp::Lt, &v, &best)?
                    } else {
                        compare(CmpOp::Gt, &v, &best)?
                    };
                    if better {
                        best = v;
                    }
                }
                Ok(best)
            }
            "sum" => {
                let mut acc = if args.len() > 1 { args[1].clone() } else { Value::Int(0) };
                for v in self.iterate(&args[0])? {
                    acc = binop(BinOp::Add, &acc, &v)?;
                }
                Ok(acc)
            }
            "sorted" => {
                let mut items = self.iterate(args.first().ok_or_else(|| rt("TypeError", "sorted expected 1 argument"))?)?;
                sort_values(&mut items)?;
                if kwarg("reverse").is_some_and(|v| v.truthy()) {
                    items.reverse();
                }
                Ok(Value::list(items))
            }
            "reversed" => {
                arity(1)?;
                let mut items = self.iterate(&args[0])?;
                items.reverse();
                Ok(Value::list(items))
            }
            "enumerate" => {
                let start = args.get(1).and_then(Value::as_int).unwrap_or(0);
                let items = self.iterate(args.first().ok_or_else(|| rt("TypeError", "enumerate expected an iterable"))?)?;
                Ok(Value::list(
                    items
                        .into_iter()
                        .enumerate()
                        .map(|(i, v)| Value::Tuple(Rc::new(vec![Value::Int(start + i as i64), v])))
                        .collect(),
                ))
            }
            "zip" => {
                let seqs: Vec<Vec<Value>> = args.iter().map(|a| self.iterate(a)).collect::<Res<_>>()?;
                let n = seqs.iter().map(Vec::len).min().unwrap_or(0);
                Ok(Value::list(
                    (0..n)
                        .map(|i| Value::Tuple(Rc::new(seqs.iter().map(|s| s[i].clone()).collect())))
                        .collect(),
                ))
            }
            "list" => Ok(Value::list(match args.first() {
                Some(v) => self.iterate(v)?,
                None => Vec::new(),
            })),
            "tuple" => Ok(Value::Tuple(Rc::new(match args.first() {
                Some(v) => self.iterate(v)?,
                None => Vec::new(),
            }))),
            "dict" => Ok(Value::Dict(Rc::new(RefCell::new(Vec::new())))),
            "str" => Ok(Value::str(args.first().map(Value::display).unwrap_or_default())),
            "int" => match args.first() {
                None => Ok(Value::Int(0)),
                Some(Value::Float(f)) => {
                    if f.is_finite() && f.abs() < 9.2e18 {
                        Ok(Value::Int(f.trunc() as i64))
                    } else {
                        Err(overflow())
                    }
                }
                Some(Value::Str(s)) => s
                    .trim()
                    .parse::<i64>()
                    .map(Value::Int)
                    .map_err(|_| rt("ValueError", format!("invalid literal for int(): {}", string_repr(s)))),
                Some(v) => v.as_int().map(Value::Int).ok_or_else(|| bad_operand("int()", v)),
            },
            "float" => match args.first() {
                None => Ok(Value::Float(0.0)),
                Some(Value::Str(s)) => s
                    .trim()
                    .parse::<f64>()
                    .map(Value::Float)
                    .map_err(|_| rt("ValueError", "could not convert string to float")),
                Some(v) => v.as_f64().map(Value::Float).ok_or_else(|| bad_operand("float()", v)),
            },
            "bool" => Ok(Value::Bool(args.first().is_some_and(Value::truthy))),
            "any" => Ok(Value::Bool(self.iterate(&args[0])?.iter().any(Value::truthy))),
            "all" => Ok(Value::Bool(self.iterate(&args[0])?.iter().all(Value::truthy))),
            "round" => {
                let x = args.first().and_then(Value::as_f64).ok_or_else(|| rt("TypeError", "round() needs a number"))?;
                match args.get(1).and_then(Value::as_int) {
                    None => {
                        // banker's rounding, as Python does
                        let r = x.round();
                        let r = if (x - x.trunc()).abs() == 0.5 && r % 2.0 != 0.0 { r - x.signum() } else { r };
                        Ok(Value::Int(r as i64))
                    }
                    Some(nd) => {
                        let m = 10f64.powi(nd as i32);
                        Ok(Value::Float((x * m).round() / m))
                    }
                }
            }
            "pow" => {
                arity(2)?;
                binop(BinOp::Pow, &args[0], &args[1])
            }
            other => Err(rt("NameError", format!("builtin {other} is unavailable"))),
        }
    }

    fn call_method(&mut self, recv: &Value, name: &str, args: Vec<Value>) -> Res<Value> {
        let arg = |i: usize| -> Res<Value> {
            args.get(i)
                .cloned()
                .ok_or_else(|| rt("TypeError", format!("{name}() missing argument")))
        };
        match recv {
            Value::List(l) => match name {
                "append" => {
                    l.borrow_mut().push(arg(0)?);
                    Ok(Value::None)
                }
                "extend" => {
                    let items = self.iterate(&arg(0)?)?;
                    l.borrow_mut().extend(items);
                    Ok(Value::None)
                }
                "insert" => {
                    let mut v = l.borrow_mut();
                    let idx = arg(0)?.as_int().ok_or_else(|| rt("TypeError", "index must be int"))?;
                    let n = v.len() as i64;
                    let at = if idx < 0 { (n + idx).max(0) } else { idx.min(n) };
                    v.insert(at as usize, arg(1)?);
                    Ok(Value::None)
                }
                "pop" => {
                    let mut v = l.borrow_mut();
                    if v.is_empty() {
                        return Err(rt("IndexError", "pop from empty list"));
                    }
                    let i = match args.first() {
                        Some(k) => seq_index(k, v.len())?,
                        None => v.len() - 1,
                    };
                    Ok(v.remove(i))
                }
                "index" => {
                    let x = arg(0)?;
                    l.borrow()
                        .iter()
                        .position(|v| py_eq(v, &x))
                        .map(|i| Value::Int(i as i64))
                        .ok_or_else(|| rt("ValueError", "value is not in list"))
                }
                "count" => {
                    let x = arg(0)?;
                    Ok(Value::Int(l.borrow().iter().filter(|v| py_eq(v, &x)).count() as i64))
                }
                "copy" => Ok(Value::list(l.borrow().clone())),
                "reverse" => {
                    l.borrow_mut().reverse();
                    Ok(Value::None)
                }
                "sort" => {
                    let mut v = l.borrow().clone();
                    sort_values(&mut v)?;
                    *l.borrow_mut() = v;
                    Ok(Value::None)
                }
                _ => Err(no_attr(recv, name)),
            },
            Value::Str(s) => {
                let s = s.as_ref();
                let str_arg = |i: usize| -> Res<String> {
                    match arg(i)? {
                        Value::Str(x) => Ok(x.to_string()),
                        other => Err(rt("TypeError", format!("expected str, got {}", other.type_name()))),
                    }
                };
                match name {
                    "upper" => Ok(Value::str(s.to_uppercase())),
                    "lower" => Ok(Value::str(s.to_lowercase())),
                    "strip" => Ok(Value::str(s.trim())),
                    "title" => Ok(Value::str(title_case(s))),
                    "isdigit" => Ok(Value::Bool(!s.is_empty() && s.chars().all(|c| c.is_ascii_digit()))),
                    "isalpha" => Ok(Value::Bool(!s.is_empty() && s.chars().all(char::is_alphabetic))),
                    "isspace" => Ok(Value::Bool(!s.is_empty() && s.chars().all(char::is_whitespace))),
                    "isupper" => Ok(Value::Bool(
                        s.chars().any(char::is_alphabetic) && !s.chars().any(char::is_lowercase),
                    )),
                    "islower" => Ok(Value::Bool(
                        s.chars().any(char::is_alphabetic) && !s.chars().any(char::is_uppercase),
                    )),
                    "startswith" => Ok(Value::Bool(s.starts_with(str_arg(0)?.as_str()))),
                    "endswith" => Ok(Value::Bool(s.ends_with(str_arg(0)?.as_str()))),
                    "replace" => Ok(Value::str(s.replace(str_arg(0)?.as_str(), &str_arg(1)?))),
                    "find" => Ok(Value::Int(
                        s.find(str_arg(0)?.as_str())
                            .map(|b| s[..b].chars().count() as i64)
                            .unwrap_or(-1),
                    )),
                    "count" => Ok(Value::Int(s.matches(str_arg(0)?.as_str()).count() as i64)),
                    "split" => {
                        let parts: Vec<Value> = if args.is_empty() {
                            s.split_whitespace().map(Value::str).collect()
                        } else {
                            s.split(str_arg(0)?.as_str()).map(Value::str).collect()
                        };
                        Ok(Value::list(parts))
                    }
                    "join" => {
                        let items = self.iterate(&arg(0)?)?;
                        let mut out = String::new();
                        for (i, it) in items.iter().enumerate() {
                            if i > 0 {
                                out.push_str(s);
                            }
                            match it {
                                Value::Str(x) => out.push_str(x),
                                other => {
                                    return Err(rt(
                                        "TypeError",
                                        format!("sequence item {i}: expected str, {} found", other.type_name()),
                                    ))
                                }
                            }
                        }
                        Ok(Value::str(out))
                    }
                    _ => Err(no_attr(recv, name)),
                }
            }
            Value::Dict(d) => match name {
                "get" => {
                    let k = arg(0)?;
                    Ok(d.borrow()
                        .iter()
                        .find(|(x, _)| py_eq(x, &k))
                        .map(|(_, v)| v.clone())
                        .unwrap_or_else(|| args.get(1).cloned().unwrap_or(Value::None)))
                }
                "keys" => Ok(Value::list(d.borrow().iter().map(|(k, _)| k.clone()).collect())),
                "values" => Ok(Value::list(d.borrow().iter().map(|(_, v)| v.clone()).collect())),
                "items" => Ok(Value::list(
                    d.borrow()
                        .iter()
                        .map(|(k, v)| Value::Tuple(Rc::new(vec![k.clone(), v.clone()])))
                        .collect(),
                )),
                _ => Err(no_attr(recv, name)),
            },
            _ => Err(no_attr(recv, name)),
        }
    }
}

fn title_case(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    let mut prev_alpha = false;
    for c in s.chars() {
        if c.is_alphabetic() {
            if prev_alpha {
                out.extend(c.to_lowercase());
            } else {
                out.extend(c.to_uppercase());
            }
            prev_alpha = true;
        } else {
            out.push(c);
            prev_alpha = false;
        }
    }
    out
}

fn method_exists(v: &Value, name: &str) -> bool {
    let names: &[&str] = match v {
        Value::List(_) => &["append", "extend", "insert", "pop", "index", "count", "copy", "reverse", "sort"],
        Value::Str(_) => &[
            "upper", "lower", "strip", "title", "isdigit", "isalpha", "isspace", "isupper", "islower", "startswith", "endswith",
            "replace", "find", "count", "split", "join",
        ],
        Value::Dict(_) => &["get", "keys", "values", "items"],
        _ => &[],
    };
    names.contains(&name)
}

fn no_attr(v: &Value, name: &str) -> RuntimeError {
    rt(
        "AttributeError",
        format!("'{}' object has no attribute '{name}'", v.type_name()),
    )
}

fn overflow() -> RuntimeError {
    rt("OverflowError", "integer result exceeds 64 bits")
}

fn bad_operand(op: &str, v: &Value) -> RuntimeError {
    rt("TypeError", format!("bad operand type for {op}: '{}'", v.type_name()))
}

fn bad_operands(op: BinOp, a: &Value, b: &Value) -> RuntimeError {
    rt(
        "TypeError",
        format!(
            "unsupported operand type(s) for {}: '{}' and '{}'",
            op.symbol(),
            a.type_name(),
            b.type_name()
        ),
    )
}

/// Python floor division on integers.
pub fn floor_div(a: i64, b: i64) -> Option<i64> {
    if b == 0 {
        return None;
    }
    let q = a.checked_div(b)?;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q.checked_sub(1)
    } else {
        Some(q)
    }
}

/// Python modulo on integers (result takes the sign of the divisor).
pub fn py_mod(a: i64, b: i64) -> Option<i64> {
    if b == 0 {
        return None;
    }
    let r = a.checked_rem(b)?;
    if r != 0 && ((r < 0) != (b < 0)) {
        Some(r + b)
    } else {
        Some(r)
    }
}

fn repeat(items: &[Value], n: i64) -> Res<Vec<Value>> {
    let n = n.max(0) as usize;
    if items.len().saturating_mul(n) > MAX_SEQUENCE_LEN {
        return Err(rt("MemoryError", "sequence too large for the interpreter"));
    }
    Ok(items.iter().cloned().cycle().take(items.len() * n).collect())
}

pub fn binop(op: BinOp, a: &Value, b: &Value) -> Res<Value> {
    // int (and bool) arithmetic
    if let (Some(x), Some(y), false, false) = (
        a.as_int(),
        b.as_int(),
        matches!(a, Value::Float(_)),
        matches!(b, Value::Float(_)),
    ) {
        let r = match op {
            BinOp::Add => x.checked_add(y),
            BinOp::Sub => x.checked_sub(y),
            BinOp::Mult => x.checked_mul(y),
            BinOp::Div => {
                if y == 0 {
                    return Err(rt("ZeroDivisionError", "division by zero"));
                }
                return Ok(Value::Float(x as f64 / y as f64));
            }
            BinOp::FloorDiv => {
                if y == 0 {
                    return Err(rt("ZeroDivisionError", "integer division or modulo by zero"));
                }
                floor_div(x, y)
            }
            BinOp::Mod => {
                if y == 0 {
                    return Err(rt("ZeroDivisionError", "integer division or modulo by zero"));
                }
                py_mod(x, y)
            }
            BinOp::Pow => {
                if y < 0 {
                    return Ok(Value::Float((x as f64).powf(y as f64)));
                }
                u32::try_from(y).ok().and_then(|e| x.checked_pow(e))
            }
            BinOp::LShift => {
                if y < 0 {
                    return Err(rt("ValueError", "negative shift count"));
                }
                if y >= 63 { None } else { x.checked_mul(1i64 << y) }
            }
            BinOp::RShift => {
                if y < 0 {
                    return Err(rt("ValueError", "negative shift count"));
                }
                Some(x >> y.min(63))
            }
            BinOp::BitAnd => Some(x & y),
            BinOp::BitOr => Some(x | y),
            BinOp::BitXor => Some(x ^ y),
            BinOp::MatMult => return Err(bad_operands(op, a, b)),
        };
        return r.map(Value::Int).ok_or_else(overflow);
    }
    if let (Some(x), Some(y)) = (a.as_f64(), b.as_f64()) {
        let r = match op {
            BinOp::Add => x + y,
            BinOp::Sub => x - y,
            BinOp::Mult => x * y,
            BinOp::Div => {
                if y == 0.0 {
                    return Err(rt("ZeroDivisionError", "float division by zero"));
                }
                x / y
            }
            BinOp::FloorDiv => {
                if y == 0.0 {
                    return Err(rt("ZeroDivisionError", "float floor division by zero"));
                }
                (x / y).floor()
            }
            BinOp::Mod => {
                if y == 0.0 {
                    return Err(rt("ZeroDivisionError", "float modulo"));
                }
                let r = x % y;
                if r != 0.0 && (r < 0.0) != (y < 0.0) { r + y } else { r }
            }
            BinOp::Pow => x.powf(y),
            _ => return Err(bad_operands(op, a, b)),
        };
        return Ok(Value::Float(r));
    }
    match (op, a, b) {
        (BinOp::Add, Value::Str(x), Value::Str(y)) => Ok(Value::str(format!("{x}{y}"))),
        (BinOp::Add, Value::List(x), Value::List(y)) => {
            let mut v = x.borrow().clone();
            v.extend(y.borrow().iter().cloned());
            Ok(Value::list(v))
        }
        (BinOp::Add, Value::Tuple(x), Value::Tuple(y)) => {
            let mut v = x.as_ref().clone();
            v.extend(y.iter().cloned());
            Ok(Value::Tuple(Rc::new(v)))
        }
        (BinOp::Mult, Value::List(x), n) | (BinOp::Mult, n, Value::List(x)) if n.as_int().is_some() => {
            Ok(Value::list(repeat(&x.borrow(), n.as_int().unwrap())?))
        }
        (BinOp::Mult, Value::Str(s), n) | (BinOp::Mult, n, Value::Str(s)) if n.as_int().is_some() => {
            let k = n.as_int().unwrap().max(0) as usize;
            if s.len().saturating_mul(k) > MAX_SEQUENCE_LEN {
                return Err(rt("MemoryError", "string too large for the interpreter"));
            }
            Ok(Value::str(s.repeat(k)))
        }
        (BinOp::Mod, Value::Str(_), _) => Err(rt("NotImplementedError", "%-formatting is not supported")),
        _ => Err(bad_operands(op, a, b)),
    }
}

fn compare(op: CmpOp, a: &Value, b: &Value) -> Res<bool> {
    Ok(match op {
        CmpOp::Eq => py_eq(a, b),
        CmpOp::NotEq => !py_eq(a, b),
        CmpOp::Is => identical(a, b),
        CmpOp::IsNot => !identical(a, b),
        CmpOp::In => contains(b, a)?,
        CmpOp::NotIn => !contains(b, a)?,
        CmpOp::Lt => order(a, b)? == std::cmp::Ordering::Less,
        CmpOp::LtE => order(a, b)? != std::cmp::Ordering::Greater,
        CmpOp::Gt => order(a, b)? == std::cmp::Ordering::Greater,
        CmpOp::GtE => order(a, b)? != std::cmp::Ordering::Less,
    })
}

fn identical(a: &Value, b: &Value) -> bool {
    match (a, b) {
        (Value::None, Value::None) => true,
        (Value::Bool(x), Value::Bool(y)) => x == y,
        (Value::List(x), Value::List(y)) => Rc::ptr_eq(x, y),
        (Value::Dict(x), Value::Dict(y)) => Rc::ptr_eq(x, y),
        (Value::Tuple(x), Value::Tuple(y)) => Rc::ptr_eq(x, y),
        (Value::Function(x), Value::Function(y)) => Rc::ptr_eq(x, y),
        (Value::Int(x), Value::Int(y)) => x == y,
        (Value::Str(x), Value::Str(y)) => Rc::ptr_eq(x, y) || x == y,
        _ => false,
    }
}

fn contains(container: &Value, item: &Value) -> Res<bool> {
    Ok(match container {
        Value::List(l) => l.borrow().iter().any(|v| py_eq(v, item)),
        Value::Tuple(t) => t.iter().any(|v| py_eq(v, item)),
        Value::Dict(d) => d.borrow().iter().any(|(k, _)| py_eq(k, item)),
        Value::Str(s) => match item {
            Value::Str(x) => s.contains(x.as_ref()),
            other => {
                return Err(rt(
                    "TypeError",
                    format!("'in <string>' requires string as left operand, not {}", other.type_name()),
                ))
            }
        },
        other => {
            return Err(rt(
                "TypeError",
                format!("argument of type '{}' is not iterable", other.type_name()),
            ))
        }
    })
}

fn order(a: &Value, b: &Value) -> Res<std::cmp::Ordering> {
    use std::cmp::Ordering;
    match (a, b) {
        (Value::Str(x), Value::Str(y)) => Ok(x.cmp(y)),
        (Value::List(x), Value::List(y)) => seq_order(&x.borrow(), &y.borrow()),
        (Value::Tuple(x), Value::Tuple(y)) => seq_order(x, y),
        _ => match (a.as_int(), b.as_int(), matches!(a, Value::Float(_)) || matches!(b, Value::Float(_))) {
            (Some(x), Some(y), false) => Ok(x.cmp(&y)),
            _ => match (a.as_f64(), b.as_f64()) {
                (Some(x), Some(y)) => Ok(x.partial_cmp(&y).unwrap_or(Ordering::Equal)),
                _ => Err(rt(
                    "TypeError",
                    format!(
                        "'<' not supported between instances of '{}' and '{}'",
                        a.type_name(),
                        b.type_name()
                    ),
                )),
            },
        },
    }
}

fn seq_order(a: &[Value], b: &[Value]) -> Res<std::cmp::Ordering> {
    for (x, y) in a.iter().zip(b) {
        if !py_eq(x, y) {
            return order(x, y);
        }
    }
    Ok(a.len().cmp(&b.len()))
}

fn sort_values(items: &mut [Value]) -> Res<()> {
    let mut err = None;
    items.sort_by(|a, b| match order(a, b) {
        Ok(o) => o,
        Err(e) => {
            err.get_or_insert(e);
            std::cmp::Ordering::Equal
        }
    });
    err.map_or(Ok(()), Err)
}

fn seq_index(key: &Value, len: usize) -> Res<usize> {
    let i = key
        .as_int()
        .ok_or_else(|| rt("TypeError", format!("indices must be integers, not {}", key.type_name())))?;
    let idx = if i < 0 { i + len as i64 } else { i };
    if idx < 0 || idx >= len as i64 {
        return Err(rt("IndexError", "index out of range"));
    }
    Ok(idx as usize)
}

fn subscript(v: &Value, key: &Value) -> Res<Value> {
    match v {
        Value::List(l) => {
            let l = l.borrow();
            Ok(l[seq_index(key, l.len())?].clone())
        }
        Value::Tuple(t) => Ok(t[seq_index(key, t.len())?].clone()),
        Value::Str(s) => {
            let chars: Vec<char> = s.chars().collect();
            Ok(Value::str(chars[seq_index(key, chars.len())?].to_string()))
        }
        Value::Dict(d) => d
            .borrow()
            .iter()
            .find(|(k, _)| py_eq(k, key))
            .map(|(_, v)| v.clone())
            .ok_or_else(|| rt("KeyError", key.repr())),
        other => Err(rt(
            "TypeError",
            format!("'{}' object is not subscriptable", other.type_name()),
        )),
    }
}

fn slice_indices(len: usize, lo: Option<i64>, hi: Option<i64>, step: Option<i64>) -> Res<Vec<usize>> {
    let n = len as i64;
    let step = step.unwrap_or(1);
    if step == 0 {
        return Err(rt("ValueError", "slice step cannot be zero"));
    }
    let clamp = |v: i64, lo_b: i64, hi_b: i64| -> i64 {
        let v = if v < 0 { v + n } else { v };
        v.clamp(lo_b, hi_b)
    };
    let mut out = Vec::new();
    if step > 0 {
        let start = lo.map(|v| clamp(v, 0, n)).unwrap_or(0);
        let stop = hi.map(|v| clamp(v, 0, n)).unwrap_or(n);
        let mut i = start;
        while i < stop {
            out.push(i as usize);
            i += step;
        }
    } else {
        let start = lo.map(|v| clamp(v, -1, n - 1)).unwrap_or(n - 1);
        let stop = hi.map(|v| clamp(v, -1, n - 1)).unwrap_or(-1);
        let mut i = start;
        while i > stop {
            out.push(i as usize);
            i += step;
        }
    }
    Ok(out)
}

fn slice(v: &Value, lo: Option<i64>, hi: Option<i64>, step: Option<i64>) -> Res<Value> {
    match v {
        Value::List(l) => {
            let l = l.borrow();
            let idx = slice_indices(l.len(), lo, hi, step)?;
            Ok(Value::list(idx.into_iter().map(|i| l[i].clone()).collect()))
        }
        Value::Tuple(t) => {
            let idx = slice_indices(t.len(), lo, hi, step)?;
            Ok(Value::Tuple(Rc::new(idx.into_iter().map(|i| t[i].clone()).collect())))
        }
        Value::Str(s) => {
            let chars: Vec<char> = s.chars().collect();
            let idx = slice_indices(chars.len(), lo, hi, step)?;
            Ok(Value::str(idx.into_iter().map(|i| chars[i]).collect::<String>()))
        }
        other => Err(rt(
            "TypeError",
            format!("'{}' object is not subscriptable", other.type_name()),
        )),
    }
}

/// Names a function body binds locally (Python's static scoping rule).
fn function_locals(params: &[Param], body: &[Stmt]) -> HashSet<String> {
    let mut set = std::collections::BTreeSet::new();
    for p in params {
        set.insert(p.name.clone());
    }
    direct_bindings(body, &mut set);
    set.into_iter().collect()
}

fn direct_bindings(body: &[Stmt], set: &mut std::collections::BTreeSet<String>) {
    for s in body {
        match s {
            Stmt::FunctionDef { name, .. } => {
                set.insert(name.clone());
                continue;
            }
            Stmt::Assign { targets, .. } => targets.iter().for_each(|t| target_names(t, set)),
            Stmt::AugAssign { target, .. } | Stmt::For { target, .. } => target_names(target, set),
            _ => {}
        }
        for b in s.blocks() {
            direct_bindings(b, set);
        }
    }
}

/// Executes `source` and returns printed lines; convenience for tests.
pub fn run_source(source: &str) -> Result<Vec<String>, String> {
    let m = crate::parser::parse(source).map_err(|e| e.to_string())?;
    let mut it = Interpreter::new();
    it.exec_module(&m).map_err(|e| e.to_string())?;
    Ok(it.take_stdout())
}

/// Renders an observation compactly, for failure messages.
pub fn describe_observation(o: &Observation) -> String {
    let mut s = String::new();
    if !o.module_stdout.is_empty() {
        let _ = writeln!(s, "module stdout: {:?}", o.module_stdout);
    }
    if let Some(e) = &o.module_error {
        let _ = writeln!(s, "module error: {e}");
    }
    for p in &o.probes {
        let r = match &p.result {
            Ok(v) => v.repr(),
            Err(e) => format!("raised {e}"),
        };
        let _ = writeln!(s, "{} -> {r} stdout={:?}", p.probe, p.stdout);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::{parse, parse_expr};

    fn out(src: &str) -> Vec<String> {
        run_source(src).unwrap()
    }

    #[test]
    fn arithmetic_follows_python_semantics() {
        assert_eq!(
            out("print(7 // 2, -7 // 2, 7 % -3, -7 % 3, 2 ** 10, 7 / 2, 2 ** -1)"),
            vec!["3 -4 -2 2 1024 3.5 0.5"]
        );
    }

    #[test]
    fn functions_loops_and_lists() {
        let src = "def evens(xs):\n    out = []\n    for x in xs:\n        if x % 2 == 0:\n            out.append(x)\n    return out\nprint(evens(range(7)))\n";
        assert_eq!(out(src), vec!["[0, 2, 4, 6]"]);
    }

    #[test]
    fn comprehension_and_builtins() {
        let src = "xs = [i * i for i in range(5) if i != 2]\nprint(sum(xs), max(xs), sorted(xs, reverse=True), len('héllo'))\n";
        assert_eq!(out(src), vec!["26 16 [16, 9, 1, 0] 5"]);
    }

    #[test]
    fn while_break_continue() {
        let src = "i = 0\nt = 0\nwhile True:\n    i += 1\n    if i > 10:\n        break\n    if i % 2:\n        continue\n    t += i\nprint(t)\n";
        assert_eq!(out(src), vec!["30"]);
    }

    #[test]
    fn closures_read_enclosing_scope() {
        let src = "def outer(n):\n    def inner(k):\n        return n + k\n    return inner(2)\nprint(outer(40))\n";
        assert_eq!(out(src), vec!["42"]);
    }

    #[test]
    fn unbound_local_is_detected() {
        let err = run_source("x = 1\ndef f():\n    y = x\n    x = 2\n    return y\nf()\n").unwrap_err();
        assert!(err.contains("UnboundLocalError"), "{err}");
    }

    #[test]
    fn infinite_loop_hits_step_limit() {
        let m = parse("while True:\n    pass\n").unwrap();
        let mut it = Interpreter::new().with_step_limit(10_000);
        assert_eq!(it.exec_module(&m).unwrap_err().kind, "StepLimitExceeded");
    }

    #[test]
    fn observation_compares_with_python_equality() {
        let a = parse("def f(x):\n    return x / 1\n").unwrap();
        let b = parse("def f(x):\n    return x\n").unwrap();
        let probes = vec![parse_expr("f(4)").unwrap()];
        assert_eq!(Interpreter::observe(&a, &probes), Interpreter::observe(&b, &probes));
        let c = parse("def f(x):\n    return x + 1\n").unwrap();
        assert_ne!(Interpreter::observe(&a, &probes), Interpreter::observe(&c, &probes));
    }

    #[test]
    fn slices_and_negative_indices() {
        assert_eq!(
            out("a = [1, 2, 3, 4, 5]\nprint(a[-1], a[1:3], a[::-2], 'abcdef'[1::2])"),
            vec!["5 [2, 3] [5, 3, 1] bdf"]
        );
    }

    #[test]
    fn floor_div_and_mod_match_python() {
        for (a, b) in [(7, 2), (-7, 2), (7, -2), (-7, -2), (6, 3), (-6, 3)] {
            let q = floor_div(a, b).unwrap();
            let r = py_mod(a, b).unwrap();
            assert_eq!(q * b + r, a);
            assert!(r == 0 || (r < 0) == (b < 0));
        }
    }
}
