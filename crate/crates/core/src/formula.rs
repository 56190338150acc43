//! Polarized (LJP) and intuitionistic (LJT) formulas.
//!
//! Polarity is carried by the type: [`Neg`] and [`Pos`] are separate enums,
//! so an ill-polarized formula such as `up (a-)` cannot be built at all.
//! [`Formula`] is the tagged union used wherever either polarity may occur
//! (right-hand sides, context entries).

use alloc::sync::Arc;
use core::fmt;

/// Atom and variable names.
pub type Name = Arc<str>;

/// Negative formulas `N ::= a- | up P | P -> N | N /\ N`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Neg {
    Atom(Name),
    Up(Arc<Pos>),
    Imp(Arc<Pos>, Arc<Neg>),
    And(Arc<Neg>, Arc<Neg>),
}

/// Positive formulas `P ::= a+ | down N | bot | P \/ P`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Pos {
    Atom(Name),
    Down(Arc<Neg>),
    Bot,
    Or(Arc<Pos>, Arc<Pos>),
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Formula {
    Neg(Neg),
    Pos(Pos),
}

impl Neg {
    pub fn atom(name: &str) -> Neg {
        Neg::Atom(name.into())
    }

    pub fn up(p: Pos) -> Neg {
        Neg::Up(Arc::new(p))
    }

    pub fn imp(p: Pos, n: Neg) -> Neg {
        Neg::Imp(Arc::new(p), Arc::new(n))
    }

    pub fn and(n: Neg, m: Neg) -> Neg {
        Neg::And(Arc::new(n), Arc::new(m))
    }

    /// `up`, `->` and `/\` formulas; everything negative except atoms.
    pub fn is_composite(&self) -> bool {
        !matches!(self, Neg::Atom(_))
    }

    pub fn into_formula(self) -> Formula {
        Formula::Neg(self)
    }
}

impl Pos {
    pub fn atom(name: &str) -> Pos {
        Pos::Atom(name.into())
    }

    pub fn down(n: Neg) -> Pos {
        Pos::Down(Arc::new(n))
    }

    pub fn or(p: Pos, q: Pos) -> Pos {
        Pos::Or(Arc::new(p), Arc::new(q))
    }

    pub fn into_formula(self) -> Formula {
        Formula::Pos(self)
    }
}

impl From<Neg> for Formula {
    fn from(n: Neg) -> Formula {
        Formula::Neg(n)
    }
}

impl From<Pos> for Formula {
    fn from(p: Pos) -> Formula {
        Formula::Pos(p)
    }
}

impl Formula {
    pub fn is_negative(&self) -> bool {
        matches!(self, Formula::Neg(_))
    }

    pub fn is_positive(&self) -> bool {
        matches!(self, Formula::Pos(_))
    }

    /// R-formulas: positive formulas and negative atoms.
    pub fn is_right(&self) -> bool {
        matches!(self, Formula::Pos(_) | Formula::Neg(Neg::Atom(_)))
    }

    pub fn is_composite_negative(&self) -> bool {
        matches!(self, Formula::Neg(n) if n.is_composite())
    }

    /// L-formulas: negative formulas and positive atoms. These are the only
    /// formulas an LJP context may bind.
    pub fn is_left(&self) -> bool {
        matches!(self, Formula::Neg(_) | Formula::Pos(Pos::Atom(_)))
    }

    pub fn as_neg(&self) -> Option<&Neg> {
        match self {
            Formula::Neg(n) => Some(n),
            Formula::Pos(_) => None,
        }
    }

    pub fn as_pos(&self) -> Option<&Pos> {
        match self {
            Formula::Pos(p) => Some(p),
            Formula::Neg(_) => None,
        }
    }
}

/// Intuitionistic formulas `A ::= A -> B | A /\ B | a | bot | A \/ B`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum IFormula {
    Atom(Name),
    Bot,
    Imp(Arc<IFormula>, Arc<IFormula>),
    And(Arc<IFormula>, Arc<IFormula>),
    Or(Arc<IFormula>, Arc<IFormula>),
}

impl IFormula {
    pub fn atom(name: &str) -> IFormula {
        IFormula::Atom(name.into())
    }

    pub fn imp(a: IFormula, b: IFormula) -> IFormula {
        IFormula::Imp(Arc::new(a), Arc::new(b))
    }

    pub fn and(a: IFormula, b: IFormula) -> IFormula {
        IFormula::And(Arc::new(a), Arc::new(b))
    }

    pub fn or(a: IFormula, b: IFormula) -> IFormula {
        IFormula::Or(Arc::new(a), Arc::new(b))
    }

    /// Right intuitionistic formulas: atoms, `bot` and disjunctions.
    pub fn is_right(&self) -> bool {
        matches!(self, IFormula::Atom(_) | IFormula::Bot | IFormula::Or(..))
    }

    /// Non-atomic right formulas.
    pub fn is_positive(&self) -> bool {
        matches!(self, IFormula::Bot | IFormula::Or(..))
    }

    /// Number of connectives and atoms.
    pub fn size(&self) -> usize {
        match self {
            IFormula::Atom(_) | IFormula::Bot => 1,
            IFormula::Imp(a, b) | IFormula::And(a, b) | IFormula::Or(a, b) => {
                1 + a.size() + b.size()
            }
        }
    }
}

// Printing. Binary connectives associate to the right; prefix shifts bind
// tightest, then `/\`, then `\/`, then `->`.

const PREC_IMP: u8 = 0;
const PREC_OR: u8 = 1;
const PREC_AND: u8 = 2;
const PREC_ATOM: u8 = 3;

fn neg_prec(n: &Neg) -> u8 {
    match n {
        Neg::Atom(_) | Neg::Up(_) => PREC_ATOM,
        Neg::Imp(..) => PREC_IMP,
        Neg::And(..) => PREC_AND,
    }
}

fn pos_prec(p: &Pos) -> u8 {
    match p {
        Pos::Atom(_) | Pos::Down(_) | Pos::Bot => PREC_ATOM,
        Pos::Or(..) => PREC_OR,
    }
}

struct Paren<'a, T>(&'a T, bool);

impl<T: fmt::Display> fmt::Display for Paren<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl fmt::Display for Neg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Neg::Atom(a) => write!(f, "{a}-"),
            Neg::Up(p) => write!(f, "up {}", Paren(&**p, pos_prec(p) < PREC_ATOM)),
            Neg::Imp(p, n) => write!(f, "{p} -> {n}"),
            Neg::And(n, m) => write!(
                f,
                "{} /\\ {}",
                Paren(&**n, neg_prec(n) <= PREC_AND),
                Paren(&**m, neg_prec(m) < PREC_AND)
            ),
        }
    }
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pos::Atom(a) => write!(f, "{a}+"),
            Pos::Down(n) => write!(f, "down {}", Paren(&**n, neg_prec(n) < PREC_ATOM)),
            Pos::Bot => f.write_str("bot"),
            Pos::Or(p, q) => write!(
                f,
                "{} \\/ {}",
                Paren(&**p, pos_prec(p) <= PREC_OR),
                Paren(&**q, pos_prec(q) < PREC_OR)
            ),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Neg(n) => n.fmt(f),
            Formula::Pos(p) => p.fmt(f),
        }
    }
}

fn iprec(a: &IFormula) -> u8 {
    match a {
        IFormula::Atom(_) | IFormula::Bot => PREC_ATOM,
        IFormula::Imp(..) => PREC_IMP,
        IFormula::Or(..) => PREC_OR,
        IFormula::And(..) => PREC_AND,
    }
}

impl fmt::Display for IFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, op, prec) = match self {
            IFormula::Atom(a) => return f.write_str(a),
            IFormula::Bot => return f.write_str("bot"),
            IFormula::Imp(a, b) => (a, b, "->", PREC_IMP),
            IFormula::Or(a, b) => (a, b, "\\/", PREC_OR),
            IFormula::And(a, b) => (a, b, "/\\", PREC_AND),
        };
        write!(
            f,
            "{} {op} {}",
            Paren(&**a, iprec(a) <= prec),
            Paren(&**b, iprec(b) < prec)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn classifiers_partition() {
        let samples: [Formula; 8] = [
            Neg::atom("a").into(),
            Neg::up(Pos::Bot).into(),
            Neg::imp(Pos::atom("b"), Neg::atom("a")).into(),
            Neg::and(Neg::atom("a"), Neg::atom("a")).into(),
            Pos::atom("a").into(),
            Pos::down(Neg::atom("a")).into(),
            Pos::Bot.into(),
            Pos::or(Pos::Bot, Pos::Bot).into(),
        ];
        for f in &samples {
            assert!(f.is_negative() ^ f.is_positive());
            assert!(f.is_composite_negative() ^ f.is_right());
        }
        assert!(samples[0].is_right());
        assert!(!samples[1].is_right());
    }

    #[test]
    fn printing_uses_minimal_parentheses() {
        let f = Neg::imp(Pos::down(Neg::atom("a")), Neg::atom("a"));
        assert_eq!(f.to_string(), "down a- -> a-");
        let g = Neg::imp(
            Pos::down(Neg::imp(Pos::atom("b"), Neg::atom("c"))),
            Neg::imp(Pos::Bot, Neg::atom("c")),
        );
        assert_eq!(g.to_string(), "down (b+ -> c-) -> bot -> c-");
        let h = Pos::or(Pos::or(Pos::Bot, Pos::Bot), Pos::Bot);
        assert_eq!(h.to_string(), "(bot \\/ bot) \\/ bot");
        let i = IFormula::imp(IFormula::imp(IFormula::atom("a"), IFormula::atom("b")), IFormula::atom("a"));
        assert_eq!(i.to_string(), "(a -> b) -> a");
    }

    #[test]
    fn intuitionistic_classes() {
        assert!(IFormula::atom("a").is_right());
        assert!(!IFormula::atom("a").is_positive());
        assert!(IFormula::Bot.is_positive());
        assert!(!IFormula::imp(IFormula::Bot, IFormula::Bot).is_right());
    }
}
