use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::{Arm, LExpr, LSpine, LTerm, LjtCtx, LjtSequent, LjtTerm};
use crate::formula::{IFormula, Name};
use crate::term::Index;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LjtTypeError {
    Unbound(Name),
    /// A spine was given without the formula in focus.
    MissingFocus,
    /// `nil` in focus on a non-atomic formula, or against a different atom.
    Nil(IFormula),
    SpineMismatch { spine: String, focus: IFormula },
    NotRight(IFormula),
    Mismatch { expected: IFormula, found: IFormula },
    /// The two arms of a case spine end in different formulas.
    Arms(IFormula, IFormula),
    NotDisjunction(IFormula),
    SortMismatch,
}

impl fmt::Display for LjtTypeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LjtTypeError::Unbound(x) => write!(f, "unbound variable {x}"),
            LjtTypeError::MissingFocus => f.write_str("a spine needs the formula in focus"),
            LjtTypeError::Nil(a) => write!(f, "nil cannot close focus on `{a}`"),
            LjtTypeError::SpineMismatch { spine, focus } => write!(f, "spine `{spine}` does not fit focus `{focus}`"),
            LjtTypeError::NotRight(a) => write!(f, "`{a}` is not a right formula"),
            LjtTypeError::Mismatch { expected, found } => write!(f, "expected `{expected}`, found `{found}`"),
            LjtTypeError::Arms(a, b) => write!(f, "case arms end in `{a}` and `{b}`"),
            LjtTypeError::NotDisjunction(a) => write!(f, "injection into `{a}`"),
            LjtTypeError::SortMismatch => f.write_str("term of the wrong sort for this sequent"),
        }
    }
}

struct Scope {
    vars: Vec<(Name, IFormula)>,
}

impl Scope {
    fn lookup(&self, x: &Name) -> Result<&IFormula, LjtTypeError> {
        self.vars
            .iter()
            .rev()
            .find(|(y, _)| y == x)
            .map(|(_, a)| a)
            .ok_or_else(|| LjtTypeError::Unbound(x.clone()))
    }

    fn under<T>(&mut self, x: &Name, a: &IFormula, f: impl FnOnce(&mut Scope) -> T) -> T {
        self.vars.push((x.clone(), a.clone()));
        let out = f(self);
        self.vars.pop();
        out
    }

    fn term(&mut self, t: &LTerm) -> Result<IFormula, LjtTypeError> {
        match t {
            LTerm::Lam(x, a, body) => {
                let b = self.under(x, a, |s| s.term(body))?;
                Ok(IFormula::imp(a.clone(), b))
            }
            LTerm::Pair(t1, t2) => Ok(IFormula::and(self.term(t1)?, self.term(t2)?)),
            LTerm::Expr(e) => self.expr(e),
        }
    }

    fn expr(&mut self, e: &LExpr) -> Result<IFormula, LjtTypeError> {
        match e {
            LExpr::App(x, s) => {
                let a = self.lookup(x)?.clone();
                self.spine(s, &a)
            }
            LExpr::Inj(i, other, t) => {
                let a = self.term(t)?;
                Ok(match i {
                    Index::One => IFormula::or(a, other.clone()),
                    Index::Two => IFormula::or(other.clone(), a),
                })
            }
        }
    }

    fn spine(&mut self, s: &LSpine, focus: &IFormula) -> Result<IFormula, LjtTypeError> {
        let mismatch = || LjtTypeError::SpineMismatch { spine: s.to_string(), focus: focus.clone() };
        match (s, focus) {
            (LSpine::Nil, IFormula::Atom(_)) => Ok(focus.clone()),
            (LSpine::Nil, _) => Err(LjtTypeError::Nil(focus.clone())),
            (LSpine::Abort(r), IFormula::Bot) => {
                if r.is_right() {
                    Ok(r.clone())
                } else {
                    Err(LjtTypeError::NotRight(r.clone()))
                }
            }
            (LSpine::Cons(t, rest), IFormula::Imp(a, b)) => {
                let found = self.term(t)?;
                if found != **a {
                    return Err(LjtTypeError::Mismatch { expected: (**a).clone(), found });
                }
                self.spine(rest, b)
            }
            (LSpine::Proj(i, rest), IFormula::And(a1, a2)) => self.spine(rest, i.pick(a1, a2)),
            (LSpine::Case(arm1, arm2), IFormula::Or(a1, a2)) => {
                let r1 = self.arm(arm1, a1)?;
                let r2 = self.arm(arm2, a2)?;
                if r1 != r2 {
                    return Err(LjtTypeError::Arms(r1, r2));
                }
                Ok(r1)
            }
            _ => Err(mismatch()),
        }
    }

    fn arm(&mut self, arm: &Arm, expected: &IFormula) -> Result<IFormula, LjtTypeError> {
        if arm.ty != *expected {
            return Err(LjtTypeError::Mismatch { expected: expected.clone(), found: arm.ty.clone() });
        }
        self.under(&arm.var, &arm.ty, |s| s.expr(&arm.body))
    }
}

/// The formula a term proves under `ctx`: `A` for a term, the right formula
/// for an expression, and for a spine the right formula reached from the
/// formula in focus `given`.
pub fn infer_ljt(ctx: &LjtCtx, term: &LjtTerm, given: Option<&IFormula>) -> Result<IFormula, LjtTypeError> {
    let mut scope = Scope { vars: ctx.iter().map(|b| (b.name.clone(), b.ty.clone())).collect() };
    match term {
        LjtTerm::Term(t) => scope.term(t),
        LjtTerm::Expr(e) => scope.expr(e),
        LjtTerm::Spine(s) => scope.spine(s, given.ok_or(LjtTypeError::MissingFocus)?),
    }
}

pub fn check_ljt_verbose(seq: &LjtSequent, term: &LjtTerm) -> Result<(), LjtTypeError> {
    let (found, expected) = match (seq, term) {
        (LjtSequent::Invert { ctx, goal }, LjtTerm::Term(_) | LjtTerm::Expr(_)) => {
            (infer_ljt(ctx, term, None)?, goal)
        }
        (LjtSequent::Stable { ctx, right }, LjtTerm::Expr(_)) => (infer_ljt(ctx, term, None)?, right),
        (LjtSequent::Stable { ctx, right }, LjtTerm::Term(LTerm::Expr(e))) => {
            (infer_ljt(ctx, &LjtTerm::Expr((**e).clone()), None)?, right)
        }
        (LjtSequent::Focus { ctx, focus, right }, LjtTerm::Spine(_)) => (infer_ljt(ctx, term, Some(focus))?, right),
        _ => return Err(LjtTypeError::SortMismatch),
    };
    if !expected.is_right() && !matches!(seq, LjtSequent::Invert { .. }) {
        return Err(LjtTypeError::NotRight(expected.clone()));
    }
    if found == *expected {
        Ok(())
    } else {
        Err(LjtTypeError::Mismatch { expected: expected.clone(), found })
    }
}

pub fn check_ljt(seq: &LjtSequent, term: &LjtTerm) -> bool {
    check_ljt_verbose(seq, term).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> IFormula {
        IFormula::atom("a")
    }

    fn ctx(items: &[(&str, IFormula)]) -> LjtCtx {
        LjtCtx::from_bindings(items.iter().map(|(n, f)| (*n, f.clone()))).unwrap()
    }

    #[test]
    fn infer_examples() {
        let xnil = LExpr::app("x", LSpine::Nil);
        assert_eq!(infer_ljt(&ctx(&[("x", a())]), &xnil.clone().into(), None), Ok(a()));
        let id = LTerm::lam("x", a(), xnil.into());
        assert_eq!(infer_ljt(&LjtCtx::new(), &id.into(), None), Ok(IFormula::imp(a(), a())));
        let p = LExpr::app("p", LSpine::proj(Index::One, LSpine::Nil));
        assert_eq!(infer_ljt(&ctx(&[("p", IFormula::and(a(), a()))]), &p.into(), None), Ok(a()));
    }

    #[test]
    fn type_errors() {
        let g = ctx(&[("x", IFormula::imp(a(), a()))]);
        let bad = LExpr::app("x", LSpine::Nil);
        assert!(matches!(infer_ljt(&g, &bad.into(), None), Err(LjtTypeError::Nil(_))));
        let unbound = LExpr::app("y", LSpine::Nil);
        assert!(matches!(infer_ljt(&g, &unbound.into(), None), Err(LjtTypeError::Unbound(_))));
        let arms = LSpine::case(
            "u",
            a(),
            LExpr::app("u", LSpine::Nil),
            "v",
            IFormula::atom("b"),
            LExpr::app("v", LSpine::Nil),
        );
        assert!(matches!(
            infer_ljt(&LjtCtx::new(), &arms.into(), Some(&IFormula::or(a(), IFormula::atom("b")))),
            Err(LjtTypeError::Arms(..))
        ));
        let abort = LSpine::Abort(IFormula::imp(a(), a()));
        assert!(matches!(
            infer_ljt(&LjtCtx::new(), &abort.into(), Some(&IFormula::Bot)),
            Err(LjtTypeError::NotRight(_))
        ));
    }

    #[test]
    fn check_against_sequents() {
        let g = ctx(&[("x", a())]);
        let e = LExpr::app("x", LSpine::Nil);
        assert!(check_ljt(&LjtSequent::Stable { ctx: g.clone(), right: a() }, &e.clone().into()));
        assert!(check_ljt(&LjtSequent::Invert { ctx: g.clone(), goal: a() }, &e.clone().into()));
        let inj = LExpr::inj(Index::One, IFormula::atom("b"), e.into());
        let goal = IFormula::or(a(), IFormula::atom("b"));
        assert!(check_ljt(&LjtSequent::Stable { ctx: g.clone(), right: goal.clone() }, &inj.clone().into()));
        assert!(!check_ljt(&LjtSequent::Stable { ctx: g, right: IFormula::or(IFormula::atom("b"), a()) }, &inj.into()));
    }
}
