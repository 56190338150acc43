//! LJT: a focused sequent calculus for full intuitionistic propositional
//! logic, embedded in LJP by the negative translation.

mod decide;
mod oracle;
mod translate;
mod typing;

use alloc::sync::Arc;
use core::fmt;

use crate::context::Context;
use crate::formula::{IFormula, Name};
use crate::term::Index;

pub use decide::{decide_ljt, members_ljt, Answer, DecideError, DecideKind};
pub use oracle::oracle_search_ljt;
pub use translate::{
    circ, classify_spine, erase, erase_sequent, forget, is_legal, star_formula, star_sequent, star_term, ForgetError, IllegalTerm,
    SpineClass,
};
pub use typing::{check_ljt, check_ljt_verbose, infer_ljt, LjtTypeError};

pub type LjtCtx = Context<IFormula>;

/// Terms `t ::= lam x^A. t | pair(t, t) | e`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum LTerm {
    Lam(Name, IFormula, Arc<LTerm>),
    Pair(Arc<LTerm>, Arc<LTerm>),
    Expr(Arc<LExpr>),
}

/// Expressions `e ::= x s | inj_i^B t`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum LExpr {
    App(Name, Arc<LSpine>),
    /// `inj_i^B t`; `B` is the other disjunct.
    Inj(Index, IFormula, Arc<LTerm>),
}

/// Spines `s ::= nil | t :: s | i :: s | abort^R | [x1^A1. e1, x2^A2. e2]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum LSpine {
    Nil,
    Cons(Arc<LTerm>, Arc<LSpine>),
    Proj(Index, Arc<LSpine>),
    Abort(IFormula),
    Case(Arm, Arm),
}

/// One arm `x^A. e` of a case spine.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Arm {
    pub var: Name,
    pub ty: IFormula,
    pub body: Arc<LExpr>,
}

/// An LJT proof term of any of the three sorts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum LjtTerm {
    Term(LTerm),
    Expr(LExpr),
    Spine(LSpine),
}

impl LTerm {
    pub fn lam(x: &str, ty: IFormula, body: LTerm) -> LTerm {
        LTerm::Lam(x.into(), ty, Arc::new(body))
    }

    pub fn pair(a: LTerm, b: LTerm) -> LTerm {
        LTerm::Pair(Arc::new(a), Arc::new(b))
    }

    pub fn size(&self) -> usize {
        match self {
            LTerm::Lam(_, _, t) => 1 + t.size(),
            LTerm::Pair(a, b) => 1 + a.size() + b.size(),
            LTerm::Expr(e) => e.size(),
        }
    }
}

impl From<LExpr> for LTerm {
    fn from(e: LExpr) -> LTerm {
        LTerm::Expr(Arc::new(e))
    }
}

impl LExpr {
    pub fn app(x: &str, s: LSpine) -> LExpr {
        LExpr::App(x.into(), Arc::new(s))
    }

    pub fn inj(i: Index, other: IFormula, t: LTerm) -> LExpr {
        LExpr::Inj(i, other, Arc::new(t))
    }

    pub fn size(&self) -> usize {
        match self {
            LExpr::App(_, s) => 1 + s.size(),
            LExpr::Inj(_, _, t) => 1 + t.size(),
        }
    }
}

impl LSpine {
    pub fn cons(t: LTerm, s: LSpine) -> LSpine {
        LSpine::Cons(Arc::new(t), Arc::new(s))
    }

    pub fn proj(i: Index, s: LSpine) -> LSpine {
        LSpine::Proj(i, Arc::new(s))
    }

    pub fn case(x1: &str, a1: IFormula, e1: LExpr, x2: &str, a2: IFormula, e2: LExpr) -> LSpine {
        LSpine::Case(
            Arm { var: x1.into(), ty: a1, body: Arc::new(e1) },
            Arm { var: x2.into(), ty: a2, body: Arc::new(e2) },
        )
    }

    pub fn size(&self) -> usize {
        match self {
            LSpine::Nil | LSpine::Abort(_) => 1,
            LSpine::Cons(t, s) => 1 + t.size() + s.size(),
            LSpine::Proj(_, s) => 1 + s.size(),
            LSpine::Case(a, b) => 1 + a.body.size() + b.body.size(),
        }
    }
}

impl LjtTerm {
    /// Constructor count; `x s` counts one plus the spine.
    pub fn size(&self) -> usize {
        match self {
            LjtTerm::Term(t) => t.size(),
            LjtTerm::Expr(e) => e.size(),
            LjtTerm::Spine(s) => s.size(),
        }
    }
}

impl From<LTerm> for LjtTerm {
    fn from(t: LTerm) -> LjtTerm {
        LjtTerm::Term(t)
    }
}

impl From<LExpr> for LjtTerm {
    fn from(e: LExpr) -> LjtTerm {
        LjtTerm::Expr(e)
    }
}

impl From<LSpine> for LjtTerm {
    fn from(s: LSpine) -> LjtTerm {
        LjtTerm::Spine(s)
    }
}

/// The three forms of LJT logical sequents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum LjtSequent {
    /// `G => A`
    Invert { ctx: LjtCtx, goal: IFormula },
    /// `G |- R`
    Stable { ctx: LjtCtx, right: IFormula },
    /// `G [A] |- R`
    Focus { ctx: LjtCtx, focus: IFormula, right: IFormula },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NotRightFormula(pub IFormula);

impl fmt::Display for NotRightFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{}` is not a right formula (atom, bot or disjunction)", self.0)
    }
}

impl LjtSequent {
    pub fn ctx(&self) -> &LjtCtx {
        match self {
            LjtSequent::Invert { ctx, .. } | LjtSequent::Stable { ctx, .. } | LjtSequent::Focus { ctx, .. } => ctx,
        }
    }

    pub fn validate(&self) -> Result<(), NotRightFormula> {
        match self {
            LjtSequent::Stable { right, .. } | LjtSequent::Focus { right, .. } if !right.is_right() => {
                Err(NotRightFormula(right.clone()))
            }
            _ => Ok(()),
        }
    }
}

struct CtxPrefix<'a>(&'a LjtCtx);

impl fmt::Display for CtxPrefix<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            Ok(())
        } else {
            write!(f, "{} ", self.0)
        }
    }
}

impl fmt::Display for LjtSequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LjtSequent::Invert { ctx, goal } => write!(f, "{}=> {goal}", CtxPrefix(ctx)),
            LjtSequent::Stable { ctx, right } => write!(f, "{}|- {right}", CtxPrefix(ctx)),
            LjtSequent::Focus { ctx, focus, right } => write!(f, "{}[{focus}] |- {right}", CtxPrefix(ctx)),
        }
    }
}

impl fmt::Display for LTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LTerm::Lam(x, a, t) => write!(f, "lam({x}^{a}. {t})"),
            LTerm::Pair(a, b) => write!(f, "pair({a}, {b})"),
            LTerm::Expr(e) => e.fmt(f),
        }
    }
}

impl fmt::Display for LExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LExpr::App(x, s) => write!(f, "{x} ({s})"),
            LExpr::Inj(i, b, t) => write!(f, "inj{i}[{b}]({t})"),
        }
    }
}

impl fmt::Display for LSpine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LSpine::Nil => f.write_str("nil"),
            LSpine::Cons(t, s) => write!(f, "{t} :: {s}"),
            LSpine::Proj(i, s) => write!(f, "{i} :: {s}"),
            LSpine::Abort(r) => write!(f, "abort[{r}]"),
            LSpine::Case(a, b) => write!(f, "case({}^{}. {}, {}^{}. {})", a.var, a.ty, a.body, b.var, b.ty, b.body),
        }
    }
}

impl fmt::Display for LjtTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LjtTerm::Term(t) => t.fmt(f),
            LjtTerm::Expr(e) => e.fmt(f),
            LjtTerm::Spine(s) => s.fmt(f),
        }
    }
}
