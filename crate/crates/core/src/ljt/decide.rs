use alloc::collections::BTreeSet;
use core::fmt;

use super::{forget, star_sequent, LjtSequent, LjtTerm, NotRightFormula};
use crate::decide::CountError;
use crate::search::Engine;

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum DecideKind {
    Inhabited,
    Finite,
    Count,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Answer {
    Bool(bool),
    Count(u128),
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Answer::Bool(b) => b.fmt(f),
            Answer::Count(n) => n.fmt(f),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DecideError {
    Sequent(NotRightFormula),
    Count(CountError),
}

impl fmt::Display for DecideError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecideError::Sequent(e) => e.fmt(f),
            DecideError::Count(e) => e.fmt(f),
        }
    }
}

/// Decides an LJT question by asking it of the translated LJP sequent; the
/// translation is a bijection between the two sets of proof terms.
pub fn decide_ljt(engine: &Engine, kind: DecideKind, seq: &LjtSequent) -> Result<Answer, DecideError> {
    let target = star_sequent(seq).map_err(DecideError::Sequent)?;
    Ok(match kind {
        DecideKind::Inhabited => Answer::Bool(engine.inhabited(&target)),
        DecideKind::Finite => Answer::Bool(engine.finite(&target)),
        DecideKind::Count => Answer::Count(engine.count(&target).map_err(DecideError::Count)?),
    })
}

/// LJT proof terms whose translation has at most `k` constructors.
pub fn members_ljt(engine: &Engine, seq: &LjtSequent, k: usize) -> Result<BTreeSet<LjtTerm>, NotRightFormula> {
    let target = star_sequent(seq)?;
    Ok(engine
        .members(&target, k)
        .iter()
        .map(|t| forget(t).expect("members of a translated sequent lie in the translation's image"))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::IFormula;
    use crate::ljt::{LExpr, LSpine, LTerm, LjtCtx};
    use crate::term::Index;

    fn a() -> IFormula {
        IFormula::atom("a")
    }

    fn b() -> IFormula {
        IFormula::atom("b")
    }

    #[test]
    fn decisions() {
        let e = Engine::new();
        let peirce = IFormula::imp(IFormula::imp(IFormula::imp(a(), b()), a()), a());
        let s = LjtSequent::Invert { ctx: LjtCtx::new(), goal: peirce };
        assert_eq!(decide_ljt(&e, DecideKind::Inhabited, &s), Ok(Answer::Bool(false)));

        let church = LjtSequent::Stable {
            ctx: LjtCtx::from_bindings([("f", IFormula::imp(a(), a())), ("x", a())]).unwrap(),
            right: a(),
        };
        assert_eq!(decide_ljt(&e, DecideKind::Finite, &church), Ok(Answer::Bool(false)));
        assert_eq!(decide_ljt(&e, DecideKind::Count, &church), Err(DecideError::Count(CountError::Infinite)));

        let p = LjtSequent::Stable { ctx: LjtCtx::from_bindings([("p", IFormula::and(a(), a()))]).unwrap(), right: a() };
        assert_eq!(decide_ljt(&e, DecideKind::Count, &p), Ok(Answer::Count(2)));

        let bad = LjtSequent::Stable { ctx: LjtCtx::new(), right: IFormula::imp(a(), a()) };
        assert!(matches!(decide_ljt(&e, DecideKind::Inhabited, &bad), Err(DecideError::Sequent(_))));
    }

    #[test]
    fn members_through_translation() {
        let e = Engine::new();
        let g = LjtCtx::from_bindings([("x", a())]).unwrap();
        let got = members_ljt(&e, &LjtSequent::Stable { ctx: g.clone(), right: a() }, 5).unwrap();
        assert_eq!(got, [LExpr::app("x", LSpine::Nil).into()].into());

        let none = LjtSequent::Stable { ctx: LjtCtx::new(), right: IFormula::or(a(), b()) };
        assert!(members_ljt(&e, &none, 20).unwrap().is_empty());

        let s = LjtSequent::Invert { ctx: g, goal: IFormula::or(a(), b()) };
        let want = LTerm::from(LExpr::inj(Index::One, b(), LExpr::app("x", LSpine::Nil).into()));
        assert_eq!(members_ljt(&e, &s, 12).unwrap(), [want.into()].into());
    }
}
