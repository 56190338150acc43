//! Legality, the negative translation into LJP and the forgetful map back.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use core::fmt;

use super::{Arm, LExpr, LSpine, LTerm, LjtSequent, LjtTerm, NotRightFormula};
use crate::formula::{Formula, IFormula, Neg, Pos};
use crate::sequent::{Ctx, Sequent};
use crate::term::{self, CoTerm, Expr, LjpTerm, Spine, Term, Value};

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum SpineClass {
    Atomic,
    Positive,
    Neither,
}

pub fn classify_spine(s: &LSpine) -> SpineClass {
    match s {
        LSpine::Nil => SpineClass::Atomic,
        LSpine::Abort(IFormula::Atom(_)) => SpineClass::Atomic,
        LSpine::Abort(r) if r.is_positive() => SpineClass::Positive,
        LSpine::Abort(_) => SpineClass::Neither,
        LSpine::Cons(_, s) | LSpine::Proj(_, s) => classify_spine(s),
        LSpine::Case(a1, a2) => {
            let arms = [&*a1.body, &*a2.body];
            let spine_is = |e: &LExpr, c: SpineClass| matches!(e, LExpr::App(_, s) if classify_spine(s) == c);
            if arms.iter().all(|e| spine_is(e, SpineClass::Atomic)) {
                SpineClass::Atomic
            } else if arms.iter().all(|e| spine_is(e, SpineClass::Positive) || matches!(e, LExpr::Inj(..))) {
                SpineClass::Positive
            } else {
                SpineClass::Neither
            }
        }
    }
}

fn classify_expr(e: &LExpr) -> SpineClass {
    match e {
        LExpr::App(_, s) => classify_spine(s),
        LExpr::Inj(..) => SpineClass::Positive,
    }
}

/// Every expression occurring in the term is atomic or positive.
pub fn is_legal(t: &LjtTerm) -> bool {
    match t {
        LjtTerm::Term(t) => legal_term(t),
        LjtTerm::Expr(e) => legal_expr(e),
        LjtTerm::Spine(s) => legal_spine(s),
    }
}

fn legal_term(t: &LTerm) -> bool {
    match t {
        LTerm::Lam(_, _, t) => legal_term(t),
        LTerm::Pair(a, b) => legal_term(a) && legal_term(b),
        LTerm::Expr(e) => legal_expr(e),
    }
}

fn legal_expr(e: &LExpr) -> bool {
    classify_expr(e) != SpineClass::Neither
        && match e {
            LExpr::App(_, s) => legal_spine(s),
            LExpr::Inj(_, _, t) => legal_term(t),
        }
}

fn legal_spine(s: &LSpine) -> bool {
    match s {
        LSpine::Nil | LSpine::Abort(_) => true,
        LSpine::Cons(t, s) => legal_term(t) && legal_spine(s),
        LSpine::Proj(_, s) => legal_spine(s),
        LSpine::Case(a, b) => legal_expr(&a.body) && legal_expr(&b.body),
    }
}

/// `A*`: every intuitionistic formula becomes a negative formula.
pub fn star_formula(a: &IFormula) -> Neg {
    match a {
        IFormula::Atom(x) => Neg::Atom(x.clone()),
        IFormula::Imp(a, b) => Neg::imp(Pos::down(star_formula(a)), star_formula(b)),
        IFormula::And(a, b) => Neg::and(star_formula(a), star_formula(b)),
        IFormula::Bot | IFormula::Or(..) => Neg::up(circ_positive(a)),
    }
}

fn circ_positive(p: &IFormula) -> Pos {
    match p {
        IFormula::Bot => Pos::Bot,
        IFormula::Or(a, b) => Pos::or(Pos::down(star_formula(a)), Pos::down(star_formula(b))),
        _ => unreachable!("positive formulas are bot or disjunctions"),
    }
}

/// `R°` for a right formula; `None` for implications and conjunctions.
pub fn circ(r: &IFormula) -> Option<Formula> {
    match r {
        IFormula::Atom(x) => Some(Neg::Atom(x.clone()).into()),
        IFormula::Bot | IFormula::Or(..) => Some(circ_positive(r).into()),
        _ => None,
    }
}

fn circ_right(r: &IFormula) -> Result<Formula, IllegalTerm> {
    circ(r).ok_or_else(|| IllegalTerm::NotRight(r.clone()))
}

pub fn star_sequent(s: &LjtSequent) -> Result<Sequent, NotRightFormula> {
    let circ_right = |r: &IFormula| circ(r).ok_or_else(|| NotRightFormula(r.clone()));
    let ctx = |g: &super::LjtCtx| -> Ctx { g.map(|a| Formula::Neg(star_formula(a))) };
    Ok(match s {
        LjtSequent::Invert { ctx: g, goal } => Sequent::invert_right(ctx(g), star_formula(goal)),
        LjtSequent::Stable { ctx: g, right } => Sequent::stable(ctx(g), circ_right(right)?),
        LjtSequent::Focus { ctx: g, focus, right } => {
            Sequent::focus_left(ctx(g), star_formula(focus), circ_right(right)?)
        }
    })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum IllegalTerm {
    /// An expression that is neither atomic nor positive.
    Expr(String),
    NotRight(IFormula),
}

impl fmt::Display for IllegalTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IllegalTerm::Expr(e) => write!(f, "expression `{e}` is neither atomic nor positive"),
            IllegalTerm::NotRight(r) => write!(f, "`{r}` is not a right formula"),
        }
    }
}

/// `T*`, defined on legal terms only.
pub fn star_term(t: &LjtTerm) -> Result<LjpTerm, IllegalTerm> {
    Ok(match t {
        LjtTerm::Term(t) => star_t(t)?.into(),
        LjtTerm::Expr(e) => star_e(e)?.into(),
        LjtTerm::Spine(s) => star_s(s)?.into(),
    })
}

fn delay(t: Term) -> Expr {
    match t {
        Term::Ea(e) => (*e).clone(),
        t => term::dlv(t),
    }
}

fn star_t(t: &LTerm) -> Result<Term, IllegalTerm> {
    Ok(match t {
        LTerm::Lam(x, a, body) => {
            Term::Lam(Arc::new(CoTerm::BindNeg(x.clone(), star_formula(a), Arc::new(delay(star_t(body)?)))))
        }
        LTerm::Pair(a, b) => term::pair(star_t(a)?, star_t(b)?),
        LTerm::Expr(e) => match classify_expr(e) {
            SpineClass::Atomic => term::ea(star_e(e)?),
            SpineClass::Positive => term::ep(star_e(e)?),
            SpineClass::Neither => return Err(IllegalTerm::Expr(e.to_string())),
        },
    })
}

fn star_e(e: &LExpr) -> Result<Expr, IllegalTerm> {
    if classify_expr(e) == SpineClass::Neither {
        return Err(IllegalTerm::Expr(e.to_string()));
    }
    Ok(match e {
        LExpr::App(x, s) => Expr::CoRet(x.clone(), Arc::new(star_s(s)?)),
        LExpr::Inj(i, other, t) => {
            term::ret(term::inj(*i, Pos::down(star_formula(other)), term::thunk(star_t(t)?)))
        }
    })
}

fn star_arm(arm: &Arm) -> Result<CoTerm, IllegalTerm> {
    Ok(CoTerm::BindNeg(arm.var.clone(), star_formula(&arm.ty), Arc::new(star_e(&arm.body)?)))
}

fn star_s(s: &LSpine) -> Result<Spine, IllegalTerm> {
    Ok(match s {
        LSpine::Nil => Spine::Nil,
        LSpine::Cons(t, s) => term::app(term::thunk(star_t(t)?), star_s(s)?),
        LSpine::Proj(i, s) => term::proj(*i, star_s(s)?),
        LSpine::Abort(r) => term::cothunk(CoTerm::Abort(circ_right(r)?)),
        LSpine::Case(a, b) => term::cothunk(term::copair(star_arm(a)?, star_arm(b)?)),
    })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ForgetError(pub String);

impl fmt::Display for ForgetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{}` is outside the image of the translation", self.0)
    }
}

fn outside(t: &impl ToString) -> ForgetError {
    ForgetError(t.to_string())
}

/// Inverse of the formula translation: drops shifts and polarity marks.
/// Defined on the image of [`star_formula`] and [`circ`] only.
pub fn erase(f: &Formula) -> Result<IFormula, ForgetError> {
    match f {
        Formula::Neg(n) => erase_neg(n),
        Formula::Pos(p) => erase_pos(p),
    }
}

fn erase_neg(n: &Neg) -> Result<IFormula, ForgetError> {
    match n {
        Neg::Atom(x) => Ok(IFormula::Atom(x.clone())),
        Neg::Up(p) => erase_pos(p),
        Neg::Imp(p, m) => match &**p {
            Pos::Down(a) => Ok(IFormula::imp(erase_neg(a)?, erase_neg(m)?)),
            _ => Err(outside(n)),
        },
        Neg::And(a, b) => Ok(IFormula::and(erase_neg(a)?, erase_neg(b)?)),
    }
}

fn erase_pos(p: &Pos) -> Result<IFormula, ForgetError> {
    match p {
        Pos::Bot => Ok(IFormula::Bot),
        Pos::Or(a, b) => Ok(IFormula::or(erase_down(a)?, erase_down(b)?)),
        _ => Err(outside(p)),
    }
}

fn erase_down(p: &Pos) -> Result<IFormula, ForgetError> {
    match p {
        Pos::Down(n) => erase_neg(n),
        _ => Err(outside(p)),
    }
}

/// Inverse of [`star_sequent`] on its image.
pub fn erase_sequent(s: &Sequent) -> Result<LjtSequent, ForgetError> {
    let mut ctx = super::LjtCtx::new();
    for b in s.ctx().iter() {
        let ty = match &b.ty {
            Formula::Neg(n) => erase_neg(n)?,
            Formula::Pos(p) => return Err(outside(p)),
        };
        ctx.push(b.name.clone(), ty).map_err(|_| outside(&b.name))?;
    }
    let right = |r: &Formula| -> Result<IFormula, ForgetError> {
        let e = erase(r)?;
        if circ(&e).as_ref() == Some(r) {
            Ok(e)
        } else {
            Err(outside(r))
        }
    };
    Ok(match s {
        Sequent::InvertR { goal, .. } => LjtSequent::Invert { ctx, goal: erase_neg(goal)? },
        Sequent::Stable(st) => LjtSequent::Stable { ctx, right: right(&st.right)? },
        Sequent::FocusL { focus, right: r, .. } => LjtSequent::Focus { ctx, focus: erase_neg(focus)?, right: right(r)? },
        other => return Err(outside(other)),
    })
}

/// The forgetful map from the legal image of the translation back to LJT.
pub fn forget(t: &LjpTerm) -> Result<LjtTerm, ForgetError> {
    match t {
        LjpTerm::Term(t) => Ok(forget_t(t)?.into()),
        LjpTerm::Expr(e) => Ok(forget_e(e)?.into()),
        LjpTerm::Spine(s) => Ok(forget_s(s)?.into()),
        LjpTerm::Value(_) | LjpTerm::CoTerm(_) => Err(outside(t)),
    }
}

fn forget_t(t: &Term) -> Result<LTerm, ForgetError> {
    match t {
        Term::Lam(p) => match &**p {
            CoTerm::BindNeg(x, n, body) => {
                let body = match &**body {
                    Expr::Dlv(t) => forget_t(t)?,
                    e => forget_e(e)?.into(),
                };
                Ok(LTerm::Lam(x.clone(), erase_neg(n)?, Arc::new(body)))
            }
            _ => Err(outside(t)),
        },
        Term::Pair(a, b) => Ok(LTerm::pair(forget_t(a)?, forget_t(b)?)),
        Term::Ea(e) | Term::Ep(e) => Ok(forget_e(e)?.into()),
    }
}

fn forget_e(e: &Expr) -> Result<LExpr, ForgetError> {
    match e {
        Expr::CoRet(x, s) => Ok(LExpr::App(x.clone(), Arc::new(forget_s(s)?))),
        Expr::Ret(v) => match &**v {
            Value::Inj(i, other, inner) => match &**inner {
                Value::Thunk(t) => Ok(LExpr::inj(*i, erase_down(other)?, forget_t(t)?)),
                _ => Err(outside(e)),
            },
            _ => Err(outside(e)),
        },
        Expr::Dlv(_) => Err(outside(e)),
    }
}

fn forget_arm(p: &CoTerm) -> Result<Arm, ForgetError> {
    match p {
        CoTerm::BindNeg(x, n, e) => Ok(Arm { var: x.clone(), ty: erase_neg(n)?, body: Arc::new(forget_e(e)?) }),
        _ => Err(outside(p)),
    }
}

fn forget_s(s: &Spine) -> Result<LSpine, ForgetError> {
    match s {
        Spine::Nil => Ok(LSpine::Nil),
        Spine::CoThunk(p) => match &**p {
            CoTerm::Abort(r) => Ok(LSpine::Abort(erase(r)?)),
            CoTerm::Copair(a, b) => Ok(LSpine::Case(forget_arm(a)?, forget_arm(b)?)),
            _ => Err(outside(s)),
        },
        Spine::App(v, rest) => match &**v {
            Value::Thunk(t) => Ok(LSpine::cons(forget_t(t)?, forget_s(rest)?)),
            _ => Err(outside(s)),
        },
        Spine::Proj(i, rest) => Ok(LSpine::proj(*i, forget_s(rest)?)),
    }
}
