//! LJP logical sequents and their weight.

use alloc::collections::BTreeSet;
use core::fmt;

use crate::context::{Context, ContextError};
use crate::formula::{Formula, Neg, Pos};

pub type Ctx = Context<Formula>;

/// Syntactic categories of proof terms.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sort {
    /// values
    V,
    /// terms
    T,
    /// spines
    S,
    /// co-terms
    P,
    /// stable expressions
    E,
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sort::V => "v",
            Sort::T => "t",
            Sort::S => "s",
            Sort::P => "p",
            Sort::E => "e",
        })
    }
}

/// A stable sequent `G |- A`. When `right` is an R-formula this is an
/// R-stable sequent, the only kind that annotates fixed-point variables.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Stable {
    pub ctx: Ctx,
    pub right: Formula,
}

impl Stable {
    pub fn new(ctx: Ctx, right: impl Into<Formula>) -> Stable {
        Stable { ctx, right: right.into() }
    }

    pub fn is_r_stable(&self) -> bool {
        self.right.is_right()
    }

    /// `rho <= rho'`: same right formula and an inessentially extended context.
    pub fn leq(&self, other: &Stable) -> bool {
        self.right == other.right && self.ctx.leq(&other.ctx)
    }
}

/// The five forms of LJP logical sequents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sequent {
    /// `G [N] |- R`
    FocusL { ctx: Ctx, focus: Neg, right: Formula },
    /// `G |- [P]`
    FocusR { ctx: Ctx, goal: Pos },
    /// `G | P => A`
    InvertL { ctx: Ctx, hyp: Pos, right: Formula },
    /// `G => N`
    InvertR { ctx: Ctx, goal: Neg },
    /// `G |- A`
    Stable(Stable),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SequentError {
    Context(ContextError),
    /// Focus-left sequents carry an R-formula on the right.
    NotRightFormula(Formula),
}

impl From<ContextError> for SequentError {
    fn from(e: ContextError) -> Self {
        SequentError::Context(e)
    }
}

impl fmt::Display for SequentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequentError::Context(e) => e.fmt(f),
            SequentError::NotRightFormula(a) => {
                write!(f, "`{a}` is not an R-formula (positive formula or negative atom)")
            }
        }
    }
}

impl Sequent {
    pub fn stable(ctx: Ctx, right: impl Into<Formula>) -> Sequent {
        Sequent::Stable(Stable::new(ctx, right))
    }

    pub fn invert_right(ctx: Ctx, goal: Neg) -> Sequent {
        Sequent::InvertR { ctx, goal }
    }

    pub fn focus_right(ctx: Ctx, goal: Pos) -> Sequent {
        Sequent::FocusR { ctx, goal }
    }

    pub fn focus_left(ctx: Ctx, focus: Neg, right: impl Into<Formula>) -> Sequent {
        Sequent::FocusL { ctx, focus, right: right.into() }
    }

    pub fn invert_left(ctx: Ctx, hyp: Pos, right: impl Into<Formula>) -> Sequent {
        Sequent::InvertL { ctx, hyp, right: right.into() }
    }

    pub fn ctx(&self) -> &Ctx {
        match self {
            Sequent::FocusL { ctx, .. }
            | Sequent::FocusR { ctx, .. }
            | Sequent::InvertL { ctx, .. }
            | Sequent::InvertR { ctx, .. } => ctx,
            Sequent::Stable(s) => &s.ctx,
        }
    }

    /// The sequent without the bindings whose formula already occurs
    /// earlier in the context. The original inessentially extends it, so
    /// both are inhabited or neither is.
    pub fn contracted(&self) -> Sequent {
        let mut seen = BTreeSet::new();
        let mut ctx = Ctx::new();
        for b in self.ctx().iter() {
            if seen.insert(&b.ty) {
                ctx.push(b.name.clone(), b.ty.clone()).expect("names of a context are distinct");
            }
        }
        match self.clone() {
            Sequent::FocusL { focus, right, .. } => Sequent::FocusL { ctx, focus, right },
            Sequent::FocusR { goal, .. } => Sequent::FocusR { ctx, goal },
            Sequent::InvertL { hyp, right, .. } => Sequent::InvertL { ctx, hyp, right },
            Sequent::InvertR { goal, .. } => Sequent::InvertR { ctx, goal },
            Sequent::Stable(st) => Sequent::Stable(Stable { ctx, right: st.right }),
        }
    }

    /// Sort of the proof terms inhabiting this sequent.
    pub fn sort(&self) -> Sort {
        match self {
            Sequent::FocusL { .. } => Sort::S,
            Sequent::FocusR { .. } => Sort::V,
            Sequent::InvertL { .. } => Sort::P,
            Sequent::InvertR { .. } => Sort::T,
            Sequent::Stable(_) => Sort::E,
        }
    }

    pub fn as_r_stable(&self) -> Option<&Stable> {
        match self {
            Sequent::Stable(s) if s.is_r_stable() => Some(s),
            _ => None,
        }
    }

    /// Checks the context polarity discipline and the R-formula restriction
    /// on focus-left sequents.
    pub fn validate(&self) -> Result<(), SequentError> {
        self.ctx().validate_ljp()?;
        if let Sequent::FocusL { right, .. } = self {
            if !right.is_right() {
                return Err(SequentError::NotRightFormula(right.clone()));
            }
        }
        Ok(())
    }

    /// Key identifying the sequent up to renaming of its context variables.
    pub fn alpha_key(&self) -> AlphaKey {
        let (tag, a, b) = match self {
            Sequent::FocusL { focus, right, .. } => (0, Formula::Neg(focus.clone()), Some(right.clone())),
            Sequent::FocusR { goal, .. } => (1, Formula::Pos(goal.clone()), None),
            Sequent::InvertL { hyp, right, .. } => (2, Formula::Pos(hyp.clone()), Some(right.clone())),
            Sequent::InvertR { goal, .. } => (3, Formula::Neg(goal.clone()), None),
            Sequent::Stable(s) => (4, s.right.clone(), None),
        };
        AlphaKey { ctx: self.ctx().alpha_key(), tag, a, b }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AlphaKey {
    ctx: alloc::vec::Vec<Formula>,
    tag: u8,
    a: Formula,
    b: Option<Formula>,
}

impl From<Stable> for Sequent {
    fn from(s: Stable) -> Sequent {
        Sequent::Stable(s)
    }
}

struct CtxPrefix<'a>(&'a Ctx);

impl fmt::Display for CtxPrefix<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            Ok(())
        } else {
            write!(f, "{} ", self.0)
        }
    }
}

impl fmt::Display for Stable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|- {}", CtxPrefix(&self.ctx), self.right)
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sequent::FocusL { ctx, focus, right } => {
                write!(f, "{}[{focus}] |- {right}", CtxPrefix(ctx))
            }
            Sequent::FocusR { ctx, goal } => write!(f, "{}|- [{goal}]", CtxPrefix(ctx)),
            Sequent::InvertL { ctx, hyp, right } => {
                write!(f, "{}| {hyp} => {right}", CtxPrefix(ctx))
            }
            Sequent::InvertR { ctx, goal } => write!(f, "{}=> {goal}", CtxPrefix(ctx)),
            Sequent::Stable(s) => s.fmt(f),
        }
    }
}

/// Weight measure. Every recursive call of the finitary representation that
/// neither starts from nor lands on an R-stable sequent strictly lowers it.
pub trait Weight {
    fn weight(&self) -> u64;
}

impl Weight for Neg {
    fn weight(&self) -> u64 {
        match self {
            Neg::Atom(_) => 1,
            Neg::Up(p) => p.weight() + 2,
            Neg::Imp(p, n) => p.weight() + n.weight() + 3,
            Neg::And(n, m) => n.weight() + m.weight(),
        }
    }
}

impl Weight for Pos {
    fn weight(&self) -> u64 {
        match self {
            Pos::Atom(_) | Pos::Bot => 0,
            Pos::Down(n) => n.weight(),
            Pos::Or(p, q) => p.weight() + q.weight() + 1,
        }
    }
}

impl Weight for Formula {
    fn weight(&self) -> u64 {
        match self {
            Formula::Neg(n) => n.weight(),
            Formula::Pos(p) => p.weight(),
        }
    }
}

impl Weight for Ctx {
    fn weight(&self) -> u64 {
        self.iter().map(|b| b.ty.weight()).sum()
    }
}

impl Weight for Stable {
    fn weight(&self) -> u64 {
        self.ctx.weight() + self.right.weight()
    }
}

impl Weight for Sequent {
    fn weight(&self) -> u64 {
        match self {
            Sequent::Stable(s) => s.weight(),
            // w(N) >= 1, so this never underflows
            Sequent::InvertR { ctx, goal } => ctx.weight() + goal.weight() - 1,
            Sequent::FocusR { ctx, goal } => ctx.weight() + goal.weight(),
            Sequent::InvertL { ctx, hyp, right } => ctx.weight() + hyp.weight() + right.weight() + 1,
            Sequent::FocusL { ctx, focus, right } => ctx.weight() + focus.weight() + right.weight(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn am() -> Neg {
        Neg::atom("a")
    }

    #[test]
    fn weight_examples() {
        assert_eq!(Pos::Bot.weight(), 0);
        assert_eq!(Pos::atom("a").weight(), 0);
        assert_eq!(am().weight(), 1);
        assert_eq!(Neg::imp(Pos::down(am()), am()).weight(), 5);
        let s = Sequent::invert_left(Ctx::new(), Pos::Bot, am());
        assert_eq!(s.weight(), 2);
        assert_eq!(Sequent::invert_right(Ctx::new(), am()).weight(), 0);
    }

    #[test]
    fn rendering() {
        let ctx = Ctx::from_bindings([("x", Formula::from(am()))]).unwrap();
        assert_eq!(Sequent::stable(ctx.clone(), am()).to_string(), "x: a- |- a-");
        assert_eq!(Sequent::focus_right(Ctx::new(), Pos::Bot).to_string(), "|- [bot]");
        assert_eq!(
            Sequent::focus_left(ctx.clone(), am(), am()).to_string(),
            "x: a- [a-] |- a-"
        );
        assert_eq!(
            Sequent::invert_left(ctx, Pos::Bot, am()).to_string(),
            "x: a- | bot => a-"
        );
    }

    #[test]
    fn focus_left_needs_right_formula() {
        let s = Sequent::focus_left(Ctx::new(), am(), Neg::up(Pos::Bot));
        assert!(matches!(s.validate(), Err(SequentError::NotRightFormula(_))));
    }

    #[test]
    fn alpha_key_ignores_names() {
        let g1 = Ctx::from_bindings([("x", Formula::from(am())), ("y", Pos::atom("b").into())]).unwrap();
        let g2 = Ctx::from_bindings([("u", Formula::from(Pos::atom("b"))), ("v", am().into())]).unwrap();
        assert_eq!(
            Sequent::stable(g1, am()).alpha_key(),
            Sequent::stable(g2, am()).alpha_key()
        );
    }
}
