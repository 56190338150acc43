//! Type inference and checking for LJP proof terms.
//!
//! Annotations on injections, `abort` and co-term binders make typing unique:
//! given the context (and the focused formula, for spines) every term has at
//! most one completing sequent. [`infer`] computes it; [`check`] compares it
//! with a given sequent.

use alloc::vec::Vec;
use core::fmt;

use crate::formula::{Formula, Name, Neg, Pos};
use crate::sequent::{Ctx, Sequent, Sort, Stable};
use crate::term::{CoTerm, Expr, Index, LjpTerm, Spine, Term, Value};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TypeError {
    Unbound(Name),
    /// `ret z` needs a positive variable, `coret x s` a negative one.
    WrongVariableKind { name: Name, ty: Formula },
    /// A spine was given without its focused formula.
    MissingFocus,
    SpineMismatch { spine: &'static str, focus: Neg },
    Mismatch { expected: Formula, found: Formula },
    BranchMismatch(Formula, Formula),
    NotRight(Formula),
    NotComposite(Neg),
    NotNegativeAtom(Formula),
    NotPositive(Formula),
    NotNegative(Formula),
    SortMismatch { expected: Sort, found: Sort },
}

impl fmt::Display for TypeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeError::Unbound(x) => write!(f, "unbound variable {x}"),
            TypeError::WrongVariableKind { name, ty } => {
                write!(f, "variable {name} has type {ty}, which is not allowed here")
            }
            TypeError::MissingFocus => f.write_str("spine typed without a focused formula"),
            TypeError::SpineMismatch { spine, focus } => {
                write!(f, "{spine} spine cannot consume focused formula {focus}")
            }
            TypeError::Mismatch { expected, found } => {
                write!(f, "expected {expected}, found {found}")
            }
            TypeError::BranchMismatch(a, b) => {
                write!(f, "co-pair branches conclude {a} and {b}")
            }
            TypeError::NotRight(a) => write!(f, "{a} is not an R-formula"),
            TypeError::NotComposite(n) => write!(f, "dlv of non-composite formula {n}"),
            TypeError::NotNegativeAtom(a) => write!(f, "ea expects a negative atom, found {a}"),
            TypeError::NotPositive(a) => write!(f, "expected a positive formula, found {a}"),
            TypeError::NotNegative(a) => write!(f, "expected a negative formula, found {a}"),
            TypeError::SortMismatch { expected, found } => {
                write!(f, "sequent expects a term of sort {expected}, got sort {found}")
            }
        }
    }
}

/// Bindings visible while typing: the context plus binders crossed so far.
/// Inner binders shadow outer ones.
struct Scope {
    items: Vec<(Name, Formula)>,
}

impl Scope {
    fn new(ctx: &Ctx) -> Scope {
        Scope { items: ctx.iter().map(|b| (b.name.clone(), b.ty.clone())).collect() }
    }

    fn lookup(&self, x: &Name) -> Result<&Formula, TypeError> {
        self.items
            .iter()
            .rev()
            .find(|(n, _)| n == x)
            .map(|(_, ty)| ty)
            .ok_or_else(|| TypeError::Unbound(x.clone()))
    }

    fn under<R>(&mut self, x: &Name, ty: Formula, k: impl FnOnce(&mut Scope) -> R) -> R {
        self.items.push((x.clone(), ty));
        let r = k(self);
        self.items.pop();
        r
    }

    fn value(&mut self, v: &Value) -> Result<Pos, TypeError> {
        match v {
            Value::Var(z) => match self.lookup(z)? {
                Formula::Pos(p @ Pos::Atom(_)) => Ok(p.clone()),
                other => Err(TypeError::WrongVariableKind { name: z.clone(), ty: other.clone() }),
            },
            Value::Thunk(t) => Ok(Pos::down(self.term(t)?)),
            Value::Inj(i, other, v) => {
                let p = self.value(v)?;
                Ok(match i {
                    Index::One => Pos::or(p, other.clone()),
                    Index::Two => Pos::or(other.clone(), p),
                })
            }
        }
    }

    fn term(&mut self, t: &Term) -> Result<Neg, TypeError> {
        match t {
            Term::Ea(e) => match self.expr(e)? {
                Formula::Neg(n @ Neg::Atom(_)) => Ok(n),
                other => Err(TypeError::NotNegativeAtom(other)),
            },
            Term::Ep(e) => match self.expr(e)? {
                Formula::Pos(p) => Ok(Neg::up(p)),
                other => Err(TypeError::NotPositive(other)),
            },
            Term::Lam(p) => {
                let (hyp, right) = self.coterm(p)?;
                match right {
                    Formula::Neg(n) => Ok(Neg::imp(hyp, n)),
                    other => Err(TypeError::NotNegative(other)),
                }
            }
            Term::Pair(a, b) => Ok(Neg::and(self.term(a)?, self.term(b)?)),
        }
    }

    fn spine(&mut self, focus: &Neg, s: &Spine) -> Result<Formula, TypeError> {
        let mismatch = |spine| TypeError::SpineMismatch { spine, focus: focus.clone() };
        match (s, focus) {
            (Spine::Nil, Neg::Atom(_)) => Ok(Formula::Neg(focus.clone())),
            (Spine::Nil, _) => Err(mismatch("nil")),
            (Spine::CoThunk(p), Neg::Up(expected)) => {
                let (hyp, right) = self.coterm(p)?;
                if hyp != **expected {
                    return Err(TypeError::Mismatch {
                        expected: (**expected).clone().into(),
                        found: hyp.into(),
                    });
                }
                if !right.is_right() {
                    return Err(TypeError::NotRight(right));
                }
                Ok(right)
            }
            (Spine::CoThunk(_), _) => Err(mismatch("cothunk")),
            (Spine::App(v, rest), Neg::Imp(arg, res)) => {
                let found = self.value(v)?;
                if found != **arg {
                    return Err(TypeError::Mismatch {
                        expected: (**arg).clone().into(),
                        found: found.into(),
                    });
                }
                self.spine(res, rest)
            }
            (Spine::App(..), _) => Err(mismatch("application")),
            (Spine::Proj(i, rest), Neg::And(n1, n2)) => self.spine(i.pick(n1, n2), rest),
            (Spine::Proj(..), _) => Err(mismatch("projection")),
        }
    }

    fn coterm(&mut self, p: &CoTerm) -> Result<(Pos, Formula), TypeError> {
        match p {
            CoTerm::BindPos(z, a, e) => {
                let atom = Pos::Atom(a.clone());
                let right = self.under(z, atom.clone().into(), |sc| sc.expr(e))?;
                Ok((atom, right))
            }
            CoTerm::BindNeg(x, n, e) => {
                let right = self.under(x, n.clone().into(), |sc| sc.expr(e))?;
                Ok((Pos::down(n.clone()), right))
            }
            CoTerm::Abort(a) => Ok((Pos::Bot, a.clone())),
            CoTerm::Copair(p1, p2) => {
                let (h1, a1) = self.coterm(p1)?;
                let (h2, a2) = self.coterm(p2)?;
                if a1 != a2 {
                    return Err(TypeError::BranchMismatch(a1, a2));
                }
                Ok((Pos::or(h1, h2), a1))
            }
        }
    }

    fn expr(&mut self, e: &Expr) -> Result<Formula, TypeError> {
        match e {
            Expr::Dlv(t) => {
                let n = self.term(t)?;
                if !n.is_composite() {
                    return Err(TypeError::NotComposite(n));
                }
                Ok(n.into())
            }
            Expr::Ret(v) => Ok(self.value(v)?.into()),
            Expr::CoRet(x, s) => {
                let n = match self.lookup(x)? {
                    Formula::Neg(n) => n.clone(),
                    other => {
                        return Err(TypeError::WrongVariableKind {
                            name: x.clone(),
                            ty: other.clone(),
                        })
                    }
                };
                self.spine(&n, s)
            }
        }
    }
}

/// The unique logical sequent `ctx` and `term` complete to. `focus` is the
/// formula under focus when `term` is a spine and is ignored otherwise.
pub fn infer(ctx: &Ctx, term: &LjpTerm, focus: Option<&Neg>) -> Result<Sequent, TypeError> {
    let mut scope = Scope::new(ctx);
    let ctx = ctx.clone();
    Ok(match term {
        LjpTerm::Value(v) => Sequent::FocusR { ctx, goal: scope.value(v)? },
        LjpTerm::Term(t) => Sequent::InvertR { ctx, goal: scope.term(t)? },
        LjpTerm::Spine(s) => {
            let focus = focus.ok_or(TypeError::MissingFocus)?;
            let right = scope.spine(focus, s)?;
            Sequent::FocusL { ctx, focus: focus.clone(), right }
        }
        LjpTerm::CoTerm(p) => {
            let (hyp, right) = scope.coterm(p)?;
            Sequent::InvertL { ctx, hyp, right }
        }
        LjpTerm::Expr(e) => Sequent::Stable(Stable { ctx, right: scope.expr(e)? }),
    })
}

/// Like [`check`], reporting why the term fails to have the sequent.
pub fn check_verbose(seq: &Sequent, term: &LjpTerm) -> Result<(), TypeError> {
    if seq.sort() != term.sort() {
        return Err(TypeError::SortMismatch { expected: seq.sort(), found: term.sort() });
    }
    let focus = match seq {
        Sequent::FocusL { focus, .. } => Some(focus),
        _ => None,
    };
    let found = infer(seq.ctx(), term, focus)?;
    let conclusion = |s: &Sequent| -> (Formula, Option<Formula>) {
        match s {
            Sequent::FocusL { right, .. } => (right.clone(), None),
            Sequent::FocusR { goal, .. } => (goal.clone().into(), None),
            Sequent::InvertL { hyp, right, .. } => (right.clone(), Some(hyp.clone().into())),
            Sequent::InvertR { goal, .. } => (goal.clone().into(), None),
            Sequent::Stable(s) => (s.right.clone(), None),
        }
    };
    let (want_a, want_b) = conclusion(seq);
    let (got_a, got_b) = conclusion(&found);
    if want_b != got_b {
        return Err(TypeError::Mismatch { expected: want_b.unwrap(), found: got_b.unwrap() });
    }
    if want_a != got_a {
        return Err(TypeError::Mismatch { expected: want_a, found: got_a });
    }
    Ok(())
}

/// Whether `term` is a proof of `seq`.
pub fn check(seq: &Sequent, term: &LjpTerm) -> bool {
    check_verbose(seq, term).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::*;

    fn am() -> Neg {
        Neg::atom("a")
    }

    fn ctx_x() -> Ctx {
        Ctx::from_bindings([("x", Formula::from(am()))]).unwrap()
    }

    #[test]
    fn infer_examples() {
        let e: LjpTerm = coret("x", Spine::Nil).into();
        assert_eq!(infer(&ctx_x(), &e, None), Ok(Sequent::stable(ctx_x(), am())));

        let id: LjpTerm = lam(bind_neg("x", am(), coret("x", Spine::Nil))).into();
        assert_eq!(
            infer(&Ctx::new(), &id, None),
            Ok(Sequent::invert_right(Ctx::new(), Neg::imp(Pos::down(am()), am())))
        );

        let bad: LjpTerm = ret(var("z")).into();
        assert_eq!(infer(&Ctx::new(), &bad, None), Err(TypeError::Unbound("z".into())));
    }

    #[test]
    fn check_examples() {
        let e: LjpTerm = coret("x", Spine::Nil).into();
        assert!(check(&Sequent::stable(ctx_x(), am()), &e));
        assert!(!check(&Sequent::stable(ctx_x(), Neg::up(Pos::Bot)), &e));
        let id: LjpTerm = lam(bind_neg("x", am(), coret("x", Spine::Nil))).into();
        assert!(check(&Sequent::invert_right(Ctx::new(), Neg::imp(Pos::down(am()), am())), &id));
    }

    #[test]
    fn coret_on_positive_variable_is_rejected() {
        let ctx = Ctx::from_bindings([("z", Formula::from(Pos::atom("a")))]).unwrap();
        let e: LjpTerm = coret("z", Spine::Nil).into();
        assert!(matches!(infer(&ctx, &e, None), Err(TypeError::WrongVariableKind { .. })));
    }

    #[test]
    fn copair_branches_must_agree() {
        let p: LjpTerm = copair(CoTerm::Abort(am().into()), CoTerm::Abort(Pos::Bot.into())).into();
        assert!(matches!(infer(&Ctx::new(), &p, None), Err(TypeError::BranchMismatch(..))));
        let q: LjpTerm = copair(CoTerm::Abort(am().into()), CoTerm::Abort(am().into())).into();
        assert_eq!(
            infer(&Ctx::new(), &q, None),
            Ok(Sequent::invert_left(Ctx::new(), Pos::or(Pos::Bot, Pos::Bot), am()))
        );
    }

    #[test]
    fn dlv_needs_composite() {
        let e: LjpTerm = dlv(ea(coret("x", Spine::Nil))).into();
        assert_eq!(infer(&ctx_x(), &e, None), Err(TypeError::NotComposite(am())));
    }

    #[test]
    fn spine_result_must_be_right() {
        // cothunk(abort[up bot]) : [up bot] |- up bot is not allowed
        let ctx = Ctx::new();
        let s: LjpTerm = cothunk(CoTerm::Abort(Neg::up(Pos::Bot).into())).into();
        let focus = Neg::up(Pos::Bot);
        assert!(matches!(infer(&ctx, &s, Some(&focus)), Err(TypeError::NotRight(_))));
        assert_eq!(infer(&ctx, &s, None), Err(TypeError::MissingFocus));
    }

    #[test]
    fn injection_annotation_is_other_disjunct() {
        let ctx = Ctx::from_bindings([("z", Formula::from(Pos::atom("a")))]).unwrap();
        let v: LjpTerm = inj(Index::Two, Pos::Bot, var("z")).into();
        assert_eq!(
            infer(&ctx, &v, None),
            Ok(Sequent::focus_right(ctx.clone(), Pos::or(Pos::Bot, Pos::atom("a"))))
        );
    }

    #[test]
    fn binders_shadow() {
        let ctx = Ctx::from_bindings([("x", Formula::from(Pos::atom("b")))]).unwrap();
        let t: LjpTerm = lam(bind_neg("x", am(), coret("x", Spine::Nil))).into();
        assert!(infer(&ctx, &t, None).is_ok());
    }
}
