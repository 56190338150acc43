//! Five-sorted LJP proof terms.
//!
//! Only the two co-term binders `z^a+. e` and `x^N. e` bind variables.

use alloc::sync::Arc;
use core::fmt;

use crate::formula::{Formula, Name, Neg, Pos};
use crate::sequent::Sort;

/// Injection / projection index, `1` or `2`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Index {
    One,
    Two,
}

impl Index {
    pub const BOTH: [Index; 2] = [Index::One, Index::Two];

    pub fn pick<T>(self, first: T, second: T) -> T {
        match self {
            Index::One => first,
            Index::Two => second,
        }
    }

    pub fn number(self) -> u8 {
        self.pick(1, 2)
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Value {
    Var(Name),
    Thunk(Arc<Term>),
    /// `inj_i^Q v`; `Q` is the type of the other disjunct.
    Inj(Index, Pos, Arc<Value>),
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Term {
    Ea(Arc<Expr>),
    Ep(Arc<Expr>),
    Lam(Arc<CoTerm>),
    Pair(Arc<Term>, Arc<Term>),
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Spine {
    Nil,
    CoThunk(Arc<CoTerm>),
    App(Arc<Value>, Arc<Spine>),
    Proj(Index, Arc<Spine>),
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CoTerm {
    /// `z^a+. e`; the second name is the atom.
    BindPos(Name, Name, Arc<Expr>),
    /// `x^N. e`
    BindNeg(Name, Neg, Arc<Expr>),
    Abort(Formula),
    Copair(Arc<CoTerm>, Arc<CoTerm>),
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Expr {
    Dlv(Arc<Term>),
    Ret(Arc<Value>),
    CoRet(Name, Arc<Spine>),
}

/// A proof term of any sort.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum LjpTerm {
    Value(Value),
    Term(Term),
    Spine(Spine),
    CoTerm(CoTerm),
    Expr(Expr),
}

impl LjpTerm {
    pub fn sort(&self) -> Sort {
        match self {
            LjpTerm::Value(_) => Sort::V,
            LjpTerm::Term(_) => Sort::T,
            LjpTerm::Spine(_) => Sort::S,
            LjpTerm::CoTerm(_) => Sort::P,
            LjpTerm::Expr(_) => Sort::E,
        }
    }

    /// Number of constructors; variables and `nil` count one.
    pub fn size(&self) -> usize {
        match self {
            LjpTerm::Value(v) => v.size(),
            LjpTerm::Term(t) => t.size(),
            LjpTerm::Spine(s) => s.size(),
            LjpTerm::CoTerm(p) => p.size(),
            LjpTerm::Expr(e) => e.size(),
        }
    }
}

impl Value {
    pub fn size(&self) -> usize {
        match self {
            Value::Var(_) => 1,
            Value::Thunk(t) => 1 + t.size(),
            Value::Inj(_, _, v) => 1 + v.size(),
        }
    }
}

impl Term {
    pub fn size(&self) -> usize {
        match self {
            Term::Ea(e) | Term::Ep(e) => 1 + e.size(),
            Term::Lam(p) => 1 + p.size(),
            Term::Pair(a, b) => 1 + a.size() + b.size(),
        }
    }
}

impl Spine {
    pub fn size(&self) -> usize {
        match self {
            Spine::Nil => 1,
            Spine::CoThunk(p) => 1 + p.size(),
            Spine::App(v, s) => 1 + v.size() + s.size(),
            Spine::Proj(_, s) => 1 + s.size(),
        }
    }
}

impl CoTerm {
    pub fn size(&self) -> usize {
        match self {
            CoTerm::BindPos(_, _, e) | CoTerm::BindNeg(_, _, e) => 1 + e.size(),
            CoTerm::Abort(_) => 1,
            CoTerm::Copair(p, q) => 1 + p.size() + q.size(),
        }
    }
}

impl Expr {
    pub fn size(&self) -> usize {
        match self {
            Expr::Dlv(t) => 1 + t.size(),
            Expr::Ret(v) => 1 + v.size(),
            Expr::CoRet(_, s) => 1 + s.size(),
        }
    }
}

macro_rules! into_ljp {
    ($($ty:ident),*) => {$(
        impl From<$ty> for LjpTerm {
            fn from(x: $ty) -> LjpTerm {
                LjpTerm::$ty(x)
            }
        }
    )*};
}
into_ljp!(Value, Term, Spine, CoTerm, Expr);

// Convenience constructors, mostly for tests and the translation.

pub fn var(name: &str) -> Value {
    Value::Var(name.into())
}

pub fn thunk(t: Term) -> Value {
    Value::Thunk(Arc::new(t))
}

pub fn inj(i: Index, other: Pos, v: Value) -> Value {
    Value::Inj(i, other, Arc::new(v))
}

pub fn ea(e: Expr) -> Term {
    Term::Ea(Arc::new(e))
}

pub fn ep(e: Expr) -> Term {
    Term::Ep(Arc::new(e))
}

pub fn lam(p: CoTerm) -> Term {
    Term::Lam(Arc::new(p))
}

pub fn pair(a: Term, b: Term) -> Term {
    Term::Pair(Arc::new(a), Arc::new(b))
}

pub fn cothunk(p: CoTerm) -> Spine {
    Spine::CoThunk(Arc::new(p))
}

pub fn app(v: Value, s: Spine) -> Spine {
    Spine::App(Arc::new(v), Arc::new(s))
}

pub fn proj(i: Index, s: Spine) -> Spine {
    Spine::Proj(i, Arc::new(s))
}

pub fn bind_pos(z: &str, atom: &str, e: Expr) -> CoTerm {
    CoTerm::BindPos(z.into(), atom.into(), Arc::new(e))
}

pub fn bind_neg(x: &str, ty: Neg, e: Expr) -> CoTerm {
    CoTerm::BindNeg(x.into(), ty, Arc::new(e))
}

pub fn copair(p: CoTerm, q: CoTerm) -> CoTerm {
    CoTerm::Copair(Arc::new(p), Arc::new(q))
}

pub fn dlv(t: Term) -> Expr {
    Expr::Dlv(Arc::new(t))
}

pub fn ret(v: Value) -> Expr {
    Expr::Ret(Arc::new(v))
}

pub fn coret(x: &str, s: Spine) -> Expr {
    Expr::CoRet(x.into(), Arc::new(s))
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Var(z) => f.write_str(z),
            Value::Thunk(t) => write!(f, "thunk({t})"),
            Value::Inj(i, q, v) => write!(f, "inj{i}[{q}]({v})"),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Ea(e) => write!(f, "ea({e})"),
            Term::Ep(e) => write!(f, "ep({e})"),
            Term::Lam(p) => write!(f, "lam({p})"),
            Term::Pair(a, b) => write!(f, "pair({a}, {b})"),
        }
    }
}

impl fmt::Display for Spine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Spine::Nil => f.write_str("nil"),
            Spine::CoThunk(p) => write!(f, "cothunk({p})"),
            Spine::App(v, s) => write!(f, "{v} :: {s}"),
            Spine::Proj(i, s) => write!(f, "{i} :: {s}"),
        }
    }
}

impl fmt::Display for CoTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoTerm::BindPos(z, a, e) => write!(f, "{z}^{a}+. {e}"),
            CoTerm::BindNeg(x, n, e) => write!(f, "{x}^{n}. {e}"),
            CoTerm::Abort(a) => write!(f, "abort[{a}]"),
            CoTerm::Copair(p, q) => write!(f, "copair({p}, {q})"),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Dlv(t) => write!(f, "dlv({t})"),
            Expr::Ret(v) => write!(f, "ret({v})"),
            Expr::CoRet(x, s) => write!(f, "coret {x} ({s})"),
        }
    }
}

impl fmt::Display for LjpTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LjpTerm::Value(v) => v.fmt(f),
            LjpTerm::Term(t) => t.fmt(f),
            LjpTerm::Spine(s) => s.fmt(f),
            LjpTerm::CoTerm(p) => p.fmt(f),
            LjpTerm::Expr(e) => e.fmt(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn sizes_count_constructors() {
        let id = lam(bind_neg("x", Neg::atom("a"), coret("x", Spine::Nil)));
        assert_eq!(id.size(), 4);
        assert_eq!(coret("x", Spine::Nil).size(), 2);
        let s = app(thunk(ea(coret("y", Spine::Nil))), Spine::Nil);
        assert_eq!(s.size(), 6);
    }

    #[test]
    fn printing() {
        let id = lam(bind_neg("x", Neg::atom("a"), coret("x", Spine::Nil)));
        assert_eq!(id.to_string(), "lam(x^a-. coret x (nil))");
        let s = proj(Index::Two, app(var("z"), Spine::Nil));
        assert_eq!(s.to_string(), "2 :: z :: nil");
        let p = copair(bind_pos("z", "b", ret(var("z"))), CoTerm::Abort(Neg::atom("c").into()));
        assert_eq!(p.to_string(), "copair(z^b+. ret(z), abort[c-])");
    }
}
