//! Recursive predicates over finitary forests: emptiness (`nbinf` / `binf`),
//! finiteness (`FF` / `NFF`), plus counting and bounded enumeration.
//!
//! Each predicate is parameterized by a property `P` of R-stable sequents
//! that decides the fixed-point variable case. `binf` and `NFF` are written
//! out rule by rule rather than as negations, so the complementarity of the
//! pairs is something the tests can observe.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::forest::{Forest, Node, Sym};
use crate::search::Engine;
use crate::sequent::{Sequent, Stable};
use crate::term::{CoTerm, Expr, LjpTerm, Spine, Term, Value};

/// Property of R-stable sequents consulted at fixed-point variables.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum SeqPredicate {
    /// Holds of nothing.
    Empty,
    /// Holds of exactly the inhabited sequents.
    Sharp,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CountError {
    /// The solution space is infinite.
    Infinite,
    /// More members than fit in a `u128`.
    Overflow,
    /// A fixed-point variable was reached; cannot happen on finite spaces.
    FreeVariable(Stable),
}

impl fmt::Display for CountError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountError::Infinite => f.write_str("the solution space is infinite"),
            CountError::Overflow => f.write_str("count exceeds 2^128 - 1"),
            CountError::FreeVariable(s) => write!(f, "fixed-point variable at `{s}` reached while counting"),
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum Pred {
    Nbinf,
    Binf,
    Ff,
    Nff,
}

/// Predicate results per forest node, valid for one traversal of one
/// forest: nodes are keyed by address, which the live root keeps stable.
#[derive(Default)]
struct Memo(BTreeMap<(usize, Pred, SeqPredicate), bool>);

impl Engine {
    fn holds(&self, p: SeqPredicate, rho: &Stable) -> bool {
        match p {
            SeqPredicate::Empty => false,
            SeqPredicate::Sharp => self.sharp(rho),
        }
    }

    fn sharp(&self, rho: &Stable) -> bool {
        self.inhabited(&rho.clone().into())
    }

    /// `nbinf_P(t)`: "not bad inference", i.e. `t` has a member when every
    /// fixed-point variable whose sequent satisfies `P` is read as nonempty.
    pub fn nbinf(&self, p: SeqPredicate, t: &Forest) -> bool {
        self.pred(Pred::Nbinf, p, t, &mut Memo::default())
    }

    /// `binf_P(t)`.
    pub fn binf(&self, p: SeqPredicate, t: &Forest) -> bool {
        self.pred(Pred::Binf, p, t, &mut Memo::default())
    }

    /// `FF_P(t)`: `t` denotes a finite set.
    pub fn ff(&self, p: SeqPredicate, t: &Forest) -> bool {
        self.pred(Pred::Ff, p, t, &mut Memo::default())
    }

    /// `NFF_P(t)`.
    pub fn nff(&self, p: SeqPredicate, t: &Forest) -> bool {
        self.pred(Pred::Nff, p, t, &mut Memo::default())
    }

    fn pred(&self, which: Pred, p: SeqPredicate, t: &Forest, m: &mut Memo) -> bool {
        let key = (t.id(), which, p);
        if let Some(&b) = m.0.get(&key) {
            return b;
        }
        let b = match which {
            Pred::Nbinf => self.nbinf_rule(p, t, m),
            Pred::Binf => self.binf_rule(p, t, m),
            Pred::Ff => self.ff_rule(p, t, m),
            Pred::Nff => self.nff_rule(p, t, m),
        };
        m.0.insert(key, b);
        b
    }

    fn nbinf_rule(&self, p: SeqPredicate, t: &Forest, m: &mut Memo) -> bool {
        match t.node() {
            Node::Var(_, rho) => self.holds(p, rho),
            Node::Sym(_, cs) => cs.iter().all(|c| self.pred(Pred::Nbinf, p, c, m)),
            Node::Gfp(_, _, body) => self.pred(Pred::Nbinf, p, body, m),
            Node::Sum(_, cs) => cs.iter().any(|c| self.pred(Pred::Nbinf, p, c, m)),
        }
    }

    fn binf_rule(&self, p: SeqPredicate, t: &Forest, m: &mut Memo) -> bool {
        match t.node() {
            Node::Var(_, rho) => !self.holds(p, rho),
            Node::Sym(_, cs) => cs.iter().any(|c| self.pred(Pred::Binf, p, c, m)),
            Node::Gfp(_, _, body) => self.pred(Pred::Binf, p, body, m),
            Node::Sum(_, cs) => cs.iter().all(|c| self.pred(Pred::Binf, p, c, m)),
        }
    }

    fn ff_rule(&self, p: SeqPredicate, t: &Forest, m: &mut Memo) -> bool {
        let sharp = SeqPredicate::Sharp;
        match t.node() {
            Node::Var(_, rho) => self.holds(p, rho),
            Node::Sym(_, cs) => {
                cs.iter().all(|c| self.pred(Pred::Ff, p, c, m)) || cs.iter().any(|c| self.pred(Pred::Binf, sharp, c, m))
            }
            Node::Gfp(_, _, body) => self.pred(Pred::Ff, p, body, m) || self.pred(Pred::Binf, sharp, body, m),
            Node::Sum(_, cs) => cs.iter().all(|c| self.pred(Pred::Ff, p, c, m)),
        }
    }

    fn nff_rule(&self, p: SeqPredicate, t: &Forest, m: &mut Memo) -> bool {
        let sharp = SeqPredicate::Sharp;
        match t.node() {
            Node::Var(_, rho) => !self.holds(p, rho),
            Node::Sym(_, cs) => {
                cs.iter().any(|c| self.pred(Pred::Nff, p, c, m))
                    && cs.iter().all(|c| self.pred(Pred::Nbinf, sharp, c, m))
            }
            Node::Gfp(_, _, body) => self.pred(Pred::Nff, p, body, m) && self.pred(Pred::Nbinf, sharp, body, m),
            Node::Sum(_, cs) => cs.iter().any(|c| self.pred(Pred::Nff, p, c, m)),
        }
    }

    /// Whether the sequent has a proof term. Decided on the contracted
    /// sequent and memoized up to renaming of its context.
    pub fn inhabited(&self, seq: &Sequent) -> bool {
        let seq = seq.contracted();
        let key = seq.alpha_key();
        if let Some(b) = self.inhabited.read().get(&key) {
            return *b;
        }
        let b = self.nbinf(SeqPredicate::Empty, &self.finrep_closed(&seq));
        self.inhabited.write().insert(key, b);
        b
    }

    /// Whether the sequent has finitely many proof terms.
    pub fn finite(&self, seq: &Sequent) -> bool {
        self.ff(SeqPredicate::Empty, &self.finrep_closed(seq))
    }

    /// Number of proof terms of a sequent with a finite solution space.
    pub fn count(&self, seq: &Sequent) -> Result<u128, CountError> {
        if !self.finite(seq) {
            return Err(CountError::Infinite);
        }
        self.count_forest(&self.finrep_closed(seq))
    }

    /// Number of members of a forest satisfying `FF_Empty`.
    pub fn count_forest(&self, t: &Forest) -> Result<u128, CountError> {
        self.count_in(t, &mut Memo::default())
    }

    fn count_in(&self, t: &Forest, m: &mut Memo) -> Result<u128, CountError> {
        match t.node() {
            Node::Var(_, rho) => Err(CountError::FreeVariable(rho.clone())),
            Node::Sum(_, cs) => cs.iter().try_fold(0u128, |acc, c| {
                acc.checked_add(self.count_in(c, m)?).ok_or(CountError::Overflow)
            }),
            Node::Sym(..) | Node::Gfp(..) => {
                let cs = t.children();
                if cs.iter().any(|c| self.pred(Pred::Binf, SeqPredicate::Sharp, c, m)) {
                    return Ok(0);
                }
                cs.iter().try_fold(1u128, |acc, c| acc.checked_mul(self.count_in(c, m)?).ok_or(CountError::Overflow))
            }
        }
    }

    /// All proof terms of the sequent with at most `k` constructors.
    pub fn members(&self, seq: &Sequent, k: usize) -> BTreeSet<LjpTerm> {
        self.members_forest(&self.finrep_closed(seq), k)
    }

    /// Members of `[[t]]` with at most `k` constructors.
    pub fn members_forest(&self, t: &Forest, k: usize) -> BTreeSet<LjpTerm> {
        self.enumerate(t, k).into_iter().map(|(_, m)| m).collect()
    }

    fn enumerate(&self, t: &Forest, budget: usize) -> Vec<(usize, LjpTerm)> {
        if budget == 0 {
            return Vec::new();
        }
        match t.node() {
            Node::Var(_, rho) => (*self.enumerate_var(t, rho, budget)).clone(),
            Node::Gfp(_, _, body) => self.enumerate(body, budget),
            Node::Sum(_, cs) => {
                let set: BTreeSet<(usize, LjpTerm)> =
                    cs.iter().flat_map(|c| self.enumerate(c, budget)).collect();
                set.into_iter().collect()
            }
            Node::Sym(f, cs) => match cs.as_slice() {
                [] => alloc::vec![(1, build(f, &[]))],
                [c] => self
                    .enumerate(c, budget - 1)
                    .into_iter()
                    .map(|(n, m)| (n + 1, build(f, &[m])))
                    .collect(),
                [c1, c2] => {
                    if budget < 3 {
                        return Vec::new();
                    }
                    let left = self.enumerate(c1, budget - 2);
                    if left.is_empty() {
                        return Vec::new();
                    }
                    let right = self.enumerate(c2, budget - 2);
                    let mut out = Vec::new();
                    for (n1, m1) in &left {
                        for (n2, m2) in &right {
                            if 1 + n1 + n2 <= budget {
                                out.push((1 + n1 + n2, build(f, &[m1.clone(), m2.clone()])));
                            }
                        }
                    }
                    out
                }
                _ => unreachable!("symbols have arity at most two"),
            },
        }
    }

    /// A variable `X@rho` denotes the whole solution space of `rho`; it is
    /// resolved by unfolding, and results are shared across queries.
    fn enumerate_var(&self, t: &Forest, rho: &Stable, budget: usize) -> Arc<Vec<(usize, LjpTerm)>> {
        let key = (rho.clone(), budget);
        if let Some(v) = self.members.read().get(&key) {
            return v.clone();
        }
        let v = Arc::new(self.enumerate(&self.unfold_gfp(t), budget));
        self.members.write().entry(key).or_insert(v).clone()
    }
}

pub(crate) fn build(f: &Sym, kids: &[LjpTerm]) -> LjpTerm {
    fn v(t: &LjpTerm) -> Arc<Value> {
        match t {
            LjpTerm::Value(x) => Arc::new(x.clone()),
            _ => unreachable!("sort discipline"),
        }
    }
    fn tm(t: &LjpTerm) -> Arc<Term> {
        match t {
            LjpTerm::Term(x) => Arc::new(x.clone()),
            _ => unreachable!("sort discipline"),
        }
    }
    fn s(t: &LjpTerm) -> Arc<Spine> {
        match t {
            LjpTerm::Spine(x) => Arc::new(x.clone()),
            _ => unreachable!("sort discipline"),
        }
    }
    fn p(t: &LjpTerm) -> Arc<CoTerm> {
        match t {
            LjpTerm::CoTerm(x) => Arc::new(x.clone()),
            _ => unreachable!("sort discipline"),
        }
    }
    fn e(t: &LjpTerm) -> Arc<Expr> {
        match t {
            LjpTerm::Expr(x) => Arc::new(x.clone()),
            _ => unreachable!("sort discipline"),
        }
    }
    match f {
        Sym::Var(z) => Value::Var(z.clone()).into(),
        Sym::Thunk => Value::Thunk(tm(&kids[0])).into(),
        Sym::Inj(i, q) => Value::Inj(*i, q.clone(), v(&kids[0])).into(),
        Sym::Ea => Term::Ea(e(&kids[0])).into(),
        Sym::Ep => Term::Ep(e(&kids[0])).into(),
        Sym::Lam => Term::Lam(p(&kids[0])).into(),
        Sym::Pair => Term::Pair(tm(&kids[0]), tm(&kids[1])).into(),
        Sym::Nil => Spine::Nil.into(),
        Sym::CoThunk => Spine::CoThunk(p(&kids[0])).into(),
        Sym::App => Spine::App(v(&kids[0]), s(&kids[1])).into(),
        Sym::Proj(i) => Spine::Proj(*i, s(&kids[0])).into(),
        Sym::BindPos(z, a) => CoTerm::BindPos(z.clone(), a.clone(), e(&kids[0])).into(),
        Sym::BindNeg(x, n) => CoTerm::BindNeg(x.clone(), n.clone(), e(&kids[0])).into(),
        Sym::Abort(a) => CoTerm::Abort(a.clone()).into(),
        Sym::Copair => CoTerm::Copair(p(&kids[0]), p(&kids[1])).into(),
        Sym::Dlv => Expr::Dlv(tm(&kids[0])).into(),
        Sym::Ret => Expr::Ret(v(&kids[0])).into(),
        Sym::CoRet(x) => Expr::CoRet(x.clone(), s(&kids[0])).into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{Formula, Neg, Pos};
    use crate::sequent::Ctx;
    use crate::term::*;

    fn am() -> Neg {
        Neg::atom("a")
    }

    fn ctx(items: &[(&str, Formula)]) -> Ctx {
        Ctx::from_bindings(items.iter().map(|(n, f)| (*n, f.clone()))).unwrap()
    }

    #[test]
    fn inhabitation_examples() {
        let e = Engine::new();
        assert!(!e.inhabited(&Sequent::stable(Ctx::new(), am())));
        assert!(e.inhabited(&Sequent::stable(ctx(&[("x", am().into())]), am())));
        let f = Neg::imp(Pos::down(am()), am());
        assert!(!e.inhabited(&Sequent::stable(ctx(&[("x", f.clone().into())]), am())));
        assert!(e.inhabited(&Sequent::stable(ctx(&[("x", f.into()), ("y", am().into())]), am())));
        assert!(e.inhabited(&Sequent::invert_left(Ctx::new(), Pos::Bot, am())));
    }

    #[test]
    fn finiteness_and_counts() {
        let e = Engine::new();
        let two = Sequent::stable(ctx(&[("x", am().into()), ("y", am().into())]), am());
        assert!(e.finite(&two));
        assert_eq!(e.count(&two), Ok(2));

        let empty = Sequent::stable(Ctx::new(), am());
        assert!(e.finite(&empty));
        assert_eq!(e.count(&empty), Ok(0));

        let f = Neg::imp(Pos::down(am()), am());
        let inf = Sequent::stable(ctx(&[("x", f.clone().into()), ("y", am().into())]), am());
        assert!(!e.finite(&inf));
        assert_eq!(e.count(&inf), Err(CountError::Infinite));

        // empty, hence finite, though the forest has a cycle
        let lone = Sequent::stable(ctx(&[("x", f.into())]), am());
        assert!(e.finite(&lone));
        assert_eq!(e.count(&lone), Ok(0));

        let id = Sequent::invert_right(Ctx::new(), Neg::imp(Pos::down(am()), am()));
        assert_eq!(e.count(&id), Ok(1));
    }

    #[test]
    fn members_examples() {
        let e = Engine::new();
        let g = ctx(&[("x", am().into())]);
        let got = e.members(&Sequent::stable(g, am()), 5);
        assert_eq!(got.into_iter().collect::<Vec<_>>(), [LjpTerm::from(coret("x", Spine::Nil))]);

        let id = Sequent::invert_right(Ctx::new(), Neg::imp(Pos::down(am()), am()));
        assert!(e.members(&id, 3).is_empty());
        let got = e.members(&id, 4);
        let want = lam(bind_neg("x0", am(), coret("x0", Spine::Nil)));
        assert_eq!(got.into_iter().collect::<Vec<_>>(), [LjpTerm::from(want)]);
    }

    #[test]
    fn members_grow_on_infinite_space() {
        let e = Engine::new();
        let f = Neg::imp(Pos::down(am()), am());
        let s = Sequent::stable(ctx(&[("x", f.into()), ("y", am().into())]), am());
        // members have sizes 2, 7, 12, 17, ...
        let sizes: Vec<usize> = [2, 7, 12, 17].iter().map(|&k| e.members(&s, k).len()).collect();
        assert_eq!(sizes, [1, 2, 3, 4]);
        assert_eq!(e.members(&s, 16).len(), 3);
        for m in e.members(&s, 17) {
            assert!(crate::typing::check(&s, &m), "{m}");
        }
    }
}
