//! Expression trees over the real variables `x0` and `r` with complex
//! constants.
//!
//! There is no general simplifier. The smart constructors only flatten
//! nested sums and products, fold constants, collect like terms and merge
//! powers of a common base, which keeps repeated differentiation from
//! blowing up. Equality of mathematically equal expressions is established by
//! evaluation, not by normal forms.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// The two real variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X0,
    R,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X0 => write!(f, "x0"),
            Var::R => write!(f, "r"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Node {
    Const(Complex64),
    Var(Var),
    Sum(Vec<Expression>),
    Product(Vec<Expression>),
    /// Base raised to a real exponent (principal branch).
    Pow(Expression, f64),
    Exp(Expression),
    Cos(Expression),
    Sin(Expression),
    Neg(Expression),
}

#[derive(Debug)]
struct Inner {
    node: Node,
    hash: u64,
}

/// Immutable, cheaply clonable expression tree.
#[derive(Debug, Clone)]
pub struct Expression(Arc<Inner>);

impl PartialEq for Expression {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.hash == other.0.hash && self.0.node == other.0.node)
    }
}

impl Eq for Expression {}

impl Hash for Expression {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_u64(self.0.hash);
    }
}

fn hash_f64(v: f64, h: &mut DefaultHasher) {
    // -0.0 and 0.0 compare equal, so they must hash equally
    let v = if v == 0.0 { 0.0 } else { v };
    v.to_bits().hash(h);
}

fn node_hash(node: &Node) -> u64 {
    let mut h = DefaultHasher::new();
    match node {
        Node::Const(c) => {
            0u8.hash(&mut h);
            hash_f64(c.re, &mut h);
            hash_f64(c.im, &mut h);
        }
        Node::Var(v) => {
            1u8.hash(&mut h);
            v.hash(&mut h);
        }
        Node::Sum(ts) => {
            2u8.hash(&mut h);
            for t in ts {
                t.0.hash.hash(&mut h);
            }
        }
        Node::Product(fs) => {
            3u8.hash(&mut h);
            for f in fs {
                f.0.hash.hash(&mut h);
            }
        }
        Node::Pow(b, p) => {
            4u8.hash(&mut h);
            b.0.hash.hash(&mut h);
            hash_f64(*p, &mut h);
        }
        Node::Exp(a) => {
            5u8.hash(&mut h);
            a.0.hash.hash(&mut h);
        }
        Node::Cos(a) => {
            6u8.hash(&mut h);
            a.0.hash.hash(&mut h);
        }
        Node::Sin(a) => {
            7u8.hash(&mut h);
            a.0.hash.hash(&mut h);
        }
        Node::Neg(a) => {
            8u8.hash(&mut h);
            a.0.hash.hash(&mut h);
        }
    }
    h.finish()
}

fn is_int(p: f64) -> bool {
    p.fract() == 0.0 && p.abs() < 1e9
}

impl Expression {
    fn from_node(node: Node) -> Self {
        let hash = node_hash(&node);
        Expression(Arc::new(Inner { node, hash }))
    }

    pub fn node(&self) -> &Node {
        &self.0.node
    }

    pub fn constant(c: Complex64) -> Self {
        let c = Complex64::new(if c.re == 0.0 { 0.0 } else { c.re }, if c.im == 0.0 { 0.0 } else { c.im });
        Self::from_node(Node::Const(c))
    }

    pub fn real(v: f64) -> Self {
        Self::constant(Complex64::new(v, 0.0))
    }

    pub fn zero() -> Self {
        Self::real(0.0)
    }

    pub fn one() -> Self {
        Self::real(1.0)
    }

    pub fn i() -> Self {
        Self::constant(Complex64::new(0.0, 1.0))
    }

    pub fn var(v: Var) -> Self {
        Self::from_node(Node::Var(v))
    }

    pub fn x0() -> Self {
        Self::var(Var::X0)
    }

    pub fn r() -> Self {
        Self::var(Var::R)
    }

    /// `z = x0 + i r`.
    pub fn z() -> Self {
        Self::x0() + Self::i() * Self::r()
    }

    /// `conj(z) = x0 - i r`.
    pub fn z_bar() -> Self {
        Self::x0() - Self::i() * Self::r()
    }

    pub fn as_const(&self) -> Option<Complex64> {
        match self.node() {
            Node::Const(c) => Some(*c),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.as_const() == Some(Complex64::new(0.0, 0.0))
    }

    pub fn is_one(&self) -> bool {
        self.as_const() == Some(Complex64::new(1.0, 0.0))
    }

    /// Sum with flattening, constant folding and collection of like terms.
    pub fn sum(terms: impl IntoIterator<Item = Expression>) -> Self {
        let mut constant = Complex64::new(0.0, 0.0);
        let mut order: Vec<Expression> = Vec::new();
        let mut coeffs: HashMap<Expression, Complex64> = HashMap::new();
        let mut push = |e: Expression, constant: &mut Complex64| {
            if let Some(c) = e.as_const() {
                *constant += c;
                return;
            }
            let (c, rest) = e.split_coefficient();
            match coeffs.get_mut(&rest) {
                Some(slot) => *slot += c,
                None => {
                    coeffs.insert(rest.clone(), c);
                    order.push(rest);
                }
            }
        };
        for t in terms {
            match t.node() {
                Node::Sum(inner) => {
                    for u in inner {
                        push(u.clone(), &mut constant);
                    }
                }
                _ => push(t, &mut constant),
            }
        }
        let mut out: Vec<Expression> = order
            .into_iter()
            .filter_map(|rest| {
                let c = coeffs[&rest];
                if c == Complex64::new(0.0, 0.0) {
                    None
                } else if c == Complex64::new(1.0, 0.0) {
                    Some(rest)
                } else {
                    Some(Expression::product([Expression::constant(c), rest]))
                }
            })
            .collect();
        if constant != Complex64::new(0.0, 0.0) {
            out.push(Expression::constant(constant));
        }
        match out.len() {
            0 => Expression::zero(),
            1 => out.pop().expect("one term"),
            _ => {
                out.sort_by_key(|e| e.0.hash);
                Self::from_node(Node::Sum(out))
            }
        }
    }

    /// Splits off a constant factor: `c * rest`.
    fn split_coefficient(&self) -> (Complex64, Expression) {
        match self.node() {
            Node::Product(fs) => match fs.first().and_then(|f| f.as_const()) {
                Some(c) => {
                    let rest: Vec<Expression> = fs[1..].to_vec();
                    let rest = if rest.len() == 1 { rest[0].clone() } else { Self::from_node(Node::Product(rest)) };
                    (c, rest)
                }
                None => (Complex64::new(1.0, 0.0), self.clone()),
            },
            Node::Neg(a) => {
                let (c, rest) = a.split_coefficient();
                (-c, rest)
            }
            _ => (Complex64::new(1.0, 0.0), self.clone()),
        }
    }

    /// Product with flattening, constant folding and merging of powers of a
    /// common base (`b^p b^q = b^(p+q)` holds on the principal branch).
    pub fn product(factors: impl IntoIterator<Item = Expression>) -> Self {
        let mut constant = Complex64::new(1.0, 0.0);
        let mut order: Vec<Expression> = Vec::new();
        let mut exps: HashMap<Expression, f64> = HashMap::new();
        let mut push = |e: &Expression, constant: &mut Complex64| {
            if let Some(c) = e.as_const() {
                *constant *= c;
                return;
            }
            let (base, p) = match e.node() {
                Node::Pow(b, p) => (b.clone(), *p),
                Node::Neg(a) => {
                    *constant = -*constant;
                    (a.clone(), 1.0)
                }
                _ => (e.clone(), 1.0),
            };
            match exps.get_mut(&base) {
                Some(slot) => *slot += p,
                None => {
                    exps.insert(base.clone(), p);
                    order.push(base);
                }
            }
        };
        for f in factors {
            match f.node() {
                Node::Product(inner) => {
                    for g in inner {
                        push(g, &mut constant);
                    }
                }
                _ => push(&f, &mut constant),
            }
        }
        if constant == Complex64::new(0.0, 0.0) {
            return Expression::zero();
        }
        let mut out: Vec<Expression> =
            order.into_iter().filter_map(|b| {
                let p = exps[&b];
                if p == 0.0 {
                    None
                } else {
                    Some(Expression::pow(b, p))
                }
            })
            .collect();
        // pow() may fold into a constant
        let mut folded = Complex64::new(1.0, 0.0);
        out.retain(|e| match e.as_const() {
            Some(c) => {
                folded *= c;
                false
            }
            None => true,
        });
        constant *= folded;
        if out.is_empty() {
            return Expression::constant(constant);
        }
        out.sort_by_key(|e| e.0.hash);
        if constant != Complex64::new(1.0, 0.0) {
            out.insert(0, Expression::constant(constant));
        }
        if out.len() == 1 {
            return out.pop().expect("one factor");
        }
        Self::from_node(Node::Product(out))
    }

    /// `base^p` with a real exponent.
    pub fn pow(base: Expression, p: f64) -> Self {
        if p == 0.0 {
            return Expression::one();
        }
        if p == 1.0 {
            return base;
        }
        if let Some(c) = base.as_const() {
            if is_int(p) {
                if c != Complex64::new(0.0, 0.0) || p > 0.0 {
                    return Expression::constant(c.powi(p as i32));
                }
            } else if c.im != 0.0 || c.re > 0.0 {
                return Expression::constant(c.powf(p));
            }
        }
        if is_int(p) {
            match base.node() {
                // (b^q)^n = b^(qn) for integer n
                Node::Pow(b, q) => return Expression::pow(b.clone(), q * p),
                // (a b)^n = a^n b^n for integer n
                Node::Product(fs) => return Expression::product(fs.iter().map(|f| Expression::pow(f.clone(), p))),
                _ => {}
            }
        }
        Self::from_node(Node::Pow(base, p))
    }

    pub fn exp(arg: Expression) -> Self {
        match arg.as_const() {
            Some(c) => Expression::constant(c.exp()),
            None => Self::from_node(Node::Exp(arg)),
        }
    }

    pub fn cos(arg: Expression) -> Self {
        match arg.as_const() {
            Some(c) => Expression::constant(c.cos()),
            None => Self::from_node(Node::Cos(arg)),
        }
    }

    pub fn sin(arg: Expression) -> Self {
        match arg.as_const() {
            Some(c) => Expression::constant(c.sin()),
            None => Self::from_node(Node::Sin(arg)),
        }
    }

    /// Raw negation node, as produced by the parser for unary minus.
    pub fn neg_node(arg: Expression) -> Self {
        Self::from_node(Node::Neg(arg))
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Expression::product([Expression::constant(c), self.clone()])
    }

    pub fn powf(&self, p: f64) -> Self {
        Expression::pow(self.clone(), p)
    }

    /// Number of nodes in the tree (shared subtrees counted each time).
    pub fn size(&self) -> usize {
        1 + match self.node() {
            Node::Const(_) | Node::Var(_) => 0,
            Node::Sum(xs) | Node::Product(xs) => xs.iter().map(Expression::size).sum(),
            Node::Pow(b, _) => b.size(),
            Node::Exp(a) | Node::Cos(a) | Node::Sin(a) | Node::Neg(a) => a.size(),
        }
    }

    pub fn depends_on(&self, v: Var) -> bool {
        match self.node() {
            Node::Const(_) => false,
            Node::Var(w) => *w == v,
            Node::Sum(xs) | Node::Product(xs) => xs.iter().any(|x| x.depends_on(v)),
            Node::Pow(b, _) => b.depends_on(v),
            Node::Exp(a) | Node::Cos(a) | Node::Sin(a) | Node::Neg(a) => a.depends_on(v),
        }
    }

    /// Symbolic partial derivative.
    pub fn diff(&self, v: Var) -> Expression {
        let mut memo = HashMap::new();
        self.diff_memo(v, &mut memo)
    }

    /// `j`-th partial derivative.
    pub fn diff_n(&self, v: Var, j: usize) -> Expression {
        (0..j).fold(self.clone(), |e, _| e.diff(v))
    }

    fn diff_memo(&self, v: Var, memo: &mut HashMap<Expression, Expression>) -> Expression {
        if let Some(d) = memo.get(self) {
            return d.clone();
        }
        let d = match self.node() {
            Node::Const(_) => Expression::zero(),
            Node::Var(w) => {
                if *w == v {
                    Expression::one()
                } else {
                    Expression::zero()
                }
            }
            Node::Sum(ts) => Expression::sum(ts.iter().map(|t| t.diff_memo(v, memo))),
            Node::Product(fs) => {
                let mut terms = Vec::new();
                for i in 0..fs.len() {
                    let di = fs[i].diff_memo(v, memo);
                    if di.is_zero() {
                        continue;
                    }
                    let mut factors = fs.clone();
                    factors[i] = di;
                    terms.push(Expression::product(factors));
                }
                Expression::sum(terms)
            }
            Node::Pow(b, p) => {
                let db = b.diff_memo(v, memo);
                if db.is_zero() {
                    Expression::zero()
                } else {
                    Expression::product([Expression::real(*p), Expression::pow(b.clone(), p - 1.0), db])
                }
            }
            Node::Exp(a) => Expression::product([self.clone(), a.diff_memo(v, memo)]),
            Node::Cos(a) => {
                Expression::product([Expression::real(-1.0), Expression::sin(a.clone()), a.diff_memo(v, memo)])
            }
            Node::Sin(a) => Expression::product([Expression::cos(a.clone()), a.diff_memo(v, memo)]),
            Node::Neg(a) => Expression::product([Expression::real(-1.0), a.diff_memo(v, memo)]),
        };
        memo.insert(self.clone(), d.clone());
        d
    }

    /// Evaluates at real `(x0, r)`.
    ///
    /// Integer powers are exact repeated products; other real powers use the
    /// principal branch and fail on the negative real axis rather than pick
    /// a side of the cut.
    pub fn eval(&self, x0: f64, r: f64) -> Result<Complex64> {
        let mut memo = HashMap::new();
        self.eval_memo(x0, r, &mut memo)
    }

    fn eval_memo(&self, x0: f64, r: f64, memo: &mut HashMap<*const Inner, Complex64>) -> Result<Complex64> {
        let key = Arc::as_ptr(&self.0);
        if let Some(v) = memo.get(&key) {
            return Ok(*v);
        }
        let v = match self.node() {
            Node::Const(c) => *c,
            Node::Var(Var::X0) => Complex64::new(x0, 0.0),
            Node::Var(Var::R) => Complex64::new(r, 0.0),
            Node::Sum(ts) => {
                let mut acc = Complex64::new(0.0, 0.0);
                for t in ts {
                    acc += t.eval_memo(x0, r, memo)?;
                }
                acc
            }
            Node::Product(fs) => {
                let mut acc = Complex64::new(1.0, 0.0);
                for f in fs {
                    acc *= f.eval_memo(x0, r, memo)?;
                }
                acc
            }
            Node::Pow(b, p) => {
                let base = b.eval_memo(x0, r, memo)?;
                complex_pow(base, *p).map_err(|e| match e {
                    Error::Pole(_) => Error::Pole(format!("{b} = 0 raised to {p} at (x0, r) = ({x0}, {r})")),
                    Error::BranchCut(_) => {
                        Error::BranchCut(format!("{b} = {base} raised to {p} at (x0, r) = ({x0}, {r})"))
                    }
                    other => other,
                })?
            }
            Node::Exp(a) => a.eval_memo(x0, r, memo)?.exp(),
            Node::Cos(a) => a.eval_memo(x0, r, memo)?.cos(),
            Node::Sin(a) => a.eval_memo(x0, r, memo)?.sin(),
            Node::Neg(a) => -a.eval_memo(x0, r, memo)?,
        };
        memo.insert(key, v);
        Ok(v)
    }
}

/// Principal-branch power with explicit pole and branch-cut reporting.
pub fn complex_pow(base: Complex64, p: f64) -> Result<Complex64> {
    if base == Complex64::new(0.0, 0.0) {
        if p < 0.0 {
            return Err(Error::Pole(format!("0^{p}")));
        }
        return Ok(Complex64::new(0.0, 0.0));
    }
    if is_int(p) {
        return Ok(base.powi(p as i32));
    }
    if base.re < 0.0 && base.im.abs() <= 1e-15 * base.re.abs() {
        return Err(Error::BranchCut(format!("{base}^{p}")));
    }
    Ok(base.powf(p))
}

impl std::ops::Add for Expression {
    type Output = Expression;
    fn add(self, rhs: Expression) -> Expression {
        Expression::sum([self, rhs])
    }
}

impl std::ops::Sub for Expression {
    type Output = Expression;
    fn sub(self, rhs: Expression) -> Expression {
        Expression::sum([self, rhs.scale(Complex64::new(-1.0, 0.0))])
    }
}

impl std::ops::Mul for Expression {
    type Output = Expression;
    fn mul(self, rhs: Expression) -> Expression {
        Expression::product([self, rhs])
    }
}

impl std::ops::Neg for Expression {
    type Output = Expression;
    fn neg(self) -> Expression {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

fn fmt_real(v: f64) -> String {
    if v < 0.0 {
        format!("(-{:?})", -v)
    } else {
        format!("{v:?}")
    }
}

fn fmt_const(c: Complex64) -> String {
    match (c.re == 0.0, c.im == 0.0) {
        (_, true) => fmt_real(c.re),
        (true, false) => {
            if c.im == 1.0 {
                "i".to_string()
            } else {
                format!("({}*i)", fmt_real(c.im))
            }
        }
        (false, false) => format!("({} + {}*i)", fmt_real(c.re), fmt_real(c.im)),
    }
}

fn is_atomic(e: &Expression) -> bool {
    match e.node() {
        Node::Const(c) => c.im == 0.0 && c.re >= 0.0 || c.re == 0.0 && c.im == 1.0,
        Node::Var(_) | Node::Exp(_) | Node::Cos(_) | Node::Sin(_) => true,
        _ => false,
    }
}

/// Prints in the input DSL, so `parse(&e.to_string())` reproduces `e` up to
/// normalization of the constructors.
impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.node() {
            Node::Const(c) => write!(f, "{}", fmt_const(*c)),
            Node::Var(v) => write!(f, "{v}"),
            Node::Sum(ts) => {
                write!(f, "(")?;
                for (i, t) in ts.iter().enumerate() {
                    if i > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "{t}")?;
                }
                write!(f, ")")
            }
            Node::Product(fs) => {
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, "*")?;
                    }
                    match x.node() {
                        Node::Sum(_) => write!(f, "{x}")?,
                        _ if is_atomic(x) || matches!(x.node(), Node::Pow(..) | Node::Const(_)) => write!(f, "{x}")?,
                        _ => write!(f, "({x})")?,
                    }
                }
                Ok(())
            }
            Node::Pow(b, p) => {
                if is_atomic(b) || matches!(b.node(), Node::Sum(_)) {
                    write!(f, "{b}")?;
                } else {
                    write!(f, "({b})")?;
                }
                if is_int(*p) && *p >= 0.0 {
                    write!(f, "^{}", *p as i64)
                } else {
                    write!(f, "^({p:?})")
                }
            }
            Node::Exp(a) => write!(f, "exp({a})"),
            Node::Cos(a) => write!(f, "cos({a})"),
            Node::Sin(a) => write!(f, "sin({a})"),
            Node::Neg(a) => write!(f, "(-({a}))"),
        }
    }
}
