//! The finitary representation `F(sigma, Xi)` of solution spaces and the
//! shared [`Engine`] that memoizes it.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use spin::RwLock;

use crate::forest::{canon_sum, Forest, Node, Sym};
use crate::formula::{Formula, Name, Neg, Pos};
use crate::sequent::{AlphaKey, Ctx, Sequent, Sort, Stable};
use crate::term::{Index, LjpTerm};

/// Declarations `X1 : rho1, ..., Xm : rhom` of fixed-point variables, names
/// pairwise distinct.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FixEnv {
    decls: Vec<(Name, Stable)>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FixEnvError {
    Duplicate(Name),
    NotRStable(Stable),
}

impl fmt::Display for FixEnvError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixEnvError::Duplicate(x) => write!(f, "fixed-point variable {x} declared twice"),
            FixEnvError::NotRStable(s) => write!(f, "`{s}` is not R-stable"),
        }
    }
}

impl FixEnv {
    pub fn new() -> FixEnv {
        FixEnv::default()
    }

    pub fn push(&mut self, name: Name, rho: Stable) -> Result<(), FixEnvError> {
        if self.decls.iter().any(|(x, _)| *x == name) {
            return Err(FixEnvError::Duplicate(name));
        }
        if !rho.is_r_stable() {
            return Err(FixEnvError::NotRStable(rho));
        }
        self.decls.push((name, rho));
        Ok(())
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = &(Name, Stable)> {
        self.decls.iter()
    }

    pub fn len(&self) -> usize {
        self.decls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.decls.is_empty()
    }

    /// First of `Y`, `Y1`, `Y2`, ... not declared here.
    fn fresh(&self) -> Name {
        (0usize..)
            .map(|i| if i == 0 { "Y".into() } else { format!("Y{i}") })
            .find(|n| self.decls.iter().all(|(x, _)| &**x != n.as_str()))
            .unwrap()
            .into()
    }

    fn extended(&self, name: Name, rho: Stable) -> FixEnv {
        let mut out = self.clone();
        out.decls.push((name, rho));
        out
    }
}

/// Memo-table sizes, for diagnostics.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Default)]
pub struct MemoStats {
    pub forests: usize,
    pub inhabited: usize,
    pub members: usize,
}

/// Members of a space up to some bound, each with its size.
pub(crate) type SizedMembers = Arc<Vec<(usize, LjpTerm)>>;

/// Proof-search engine. Holds the memo tables shared by all queries; every
/// query is a pure function of its arguments. Tables allow concurrent
/// readers and serialize insertion.
#[derive(Default)]
pub struct Engine {
    forests: RwLock<BTreeMap<Sequent, Forest>>,
    pub(crate) inhabited: RwLock<BTreeMap<AlphaKey, bool>>,
    pub(crate) members: RwLock<BTreeMap<(Stable, usize), SizedMembers>>,
}

impl Engine {
    pub fn new() -> Engine {
        Engine::default()
    }

    pub fn memo_stats(&self) -> MemoStats {
        MemoStats {
            forests: self.forests.read().len(),
            inhabited: self.inhabited.read().len(),
            members: self.members.read().len(),
        }
    }

    /// Every memoized `(sigma, F(sigma))` pair computed so far.
    pub fn closed_forests(&self) -> Vec<(Sequent, Forest)> {
        self.forests.read().iter().map(|(s, f)| (s.clone(), f.clone())).collect()
    }

    /// `F(sigma)`: the finitary representation with no fixed-point
    /// declarations. Memoized.
    pub fn finrep_closed(&self, seq: &Sequent) -> Forest {
        if let Some(f) = self.forests.read().get(seq) {
            return f.clone();
        }
        let f = self.finrep(seq, &FixEnv::new());
        self.forests.write().entry(seq.clone()).or_insert(f).clone()
    }

    /// `F(sigma, Xi)`.
    ///
    /// An R-stable sequent inessentially extending some declared `rho_i`
    /// becomes the variable `X_i` (largest such `i`), annotated with the
    /// sequent itself. Otherwise the sequent is decomposed one rule at a
    /// time; `gfp` binders are introduced exactly at R-stable sequents.
    /// Fresh object variables are `z0, z1, ...` and `x0, x1, ...`, the first
    /// not bound in the context.
    pub fn finrep(&self, seq: &Sequent, env: &FixEnv) -> Forest {
        if let Some(s) = seq.as_r_stable() {
            if let Some((x, _)) = env.iter().rev().find(|(_, rho)| rho.leq(s)) {
                return Forest::var(x.clone(), s.clone()).expect("R-stable by construction");
            }
        }
        match seq {
            Sequent::FocusR { ctx, goal } => self.focus_right(ctx, goal, env),
            Sequent::InvertR { ctx, goal } => self.invert_right(ctx, goal, env),
            Sequent::FocusL { ctx, focus, right } => self.focus_left(ctx, focus, right, env),
            Sequent::InvertL { ctx, hyp, right } => self.invert_left(ctx, hyp, right, env),
            Sequent::Stable(s) => self.stable(s, env),
        }
    }

    fn focus_right(&self, ctx: &Ctx, goal: &Pos, env: &FixEnv) -> Forest {
        match goal {
            Pos::Atom(a) => sum(Sort::V, ctx.positive_vars(a).map(|z| Forest::leaf(Sym::Var(z.clone())))),
            Pos::Down(n) => Forest::unary(Sym::Thunk, self.invert_right(ctx, n, env)),
            Pos::Bot => Forest::zero(Sort::V),
            Pos::Or(p1, p2) => sum(
                Sort::V,
                Index::BOTH.into_iter().map(|i| {
                    let (this, other) = i.pick((p1, p2), (p2, p1));
                    Forest::unary(Sym::Inj(i, (**other).clone()), self.focus_right(ctx, this, env))
                }),
            ),
        }
    }

    fn invert_right(&self, ctx: &Ctx, goal: &Neg, env: &FixEnv) -> Forest {
        match goal {
            Neg::Atom(_) => {
                let s = Stable::new(ctx.clone(), goal.clone());
                Forest::unary(Sym::Ea, self.finrep(&s.into(), env))
            }
            Neg::Up(p) => {
                let s = Stable::new(ctx.clone(), (**p).clone());
                Forest::unary(Sym::Ep, self.finrep(&s.into(), env))
            }
            Neg::Imp(p, n) => {
                let inner = self.invert_left(ctx, p, &Formula::Neg((**n).clone()), env);
                Forest::unary(Sym::Lam, inner)
            }
            Neg::And(n1, n2) => Forest::binary(
                Sym::Pair,
                self.invert_right(ctx, n1, env),
                self.invert_right(ctx, n2, env),
            ),
        }
    }

    fn focus_left(&self, ctx: &Ctx, focus: &Neg, right: &Formula, env: &FixEnv) -> Forest {
        match focus {
            Neg::Atom(_) => {
                if matches!(right, Formula::Neg(r) if r == focus) {
                    Forest::leaf(Sym::Nil)
                } else {
                    Forest::zero(Sort::S)
                }
            }
            Neg::Up(p) => Forest::unary(Sym::CoThunk, self.invert_left(ctx, p, right, env)),
            Neg::Imp(p, n) => Forest::binary(
                Sym::App,
                self.focus_right(ctx, p, env),
                self.focus_left(ctx, n, right, env),
            ),
            Neg::And(n1, n2) => sum(
                Sort::S,
                Index::BOTH
                    .into_iter()
                    .map(|i| Forest::unary(Sym::Proj(i), self.focus_left(ctx, i.pick(n1, n2), right, env))),
            ),
        }
    }

    fn invert_left(&self, ctx: &Ctx, hyp: &Pos, right: &Formula, env: &FixEnv) -> Forest {
        match hyp {
            Pos::Atom(a) => {
                let z = ctx.fresh("z");
                let ctx2 = ctx.with(z.clone(), hyp.clone().into()).expect("fresh name");
                let body = self.finrep(&Sequent::stable(ctx2, right.clone()), env);
                Forest::unary(Sym::BindPos(z, a.clone()), body)
            }
            Pos::Down(n) => {
                let x = ctx.fresh("x");
                let ctx2 = ctx.with(x.clone(), (**n).clone().into()).expect("fresh name");
                let body = self.finrep(&Sequent::stable(ctx2, right.clone()), env);
                Forest::unary(Sym::BindNeg(x, (**n).clone()), body)
            }
            Pos::Bot => Forest::leaf(Sym::Abort(right.clone())),
            Pos::Or(p1, p2) => Forest::binary(
                Sym::Copair,
                self.invert_left(ctx, p1, right, env),
                self.invert_left(ctx, p2, right, env),
            ),
        }
    }

    fn stable(&self, s: &Stable, env: &FixEnv) -> Forest {
        let ctx = &s.ctx;
        let right = match &s.right {
            Formula::Neg(n) if n.is_composite() => {
                return Forest::unary(Sym::Dlv, self.invert_right(ctx, n, env));
            }
            r => r,
        };
        let y = env.fresh();
        let env2 = env.extended(y.clone(), s.clone());
        let mut parts: Vec<Forest> = Vec::new();
        if let Formula::Pos(p) = right {
            parts.push(Forest::unary(Sym::Ret, self.focus_right(ctx, p, &env2)));
        }
        for (x, n) in ctx.negatives() {
            let spine = self.focus_left(ctx, n, right, &env2);
            parts.push(Forest::unary(Sym::CoRet(x.clone()), spine));
        }
        let body = sum(Sort::E, parts);
        debug_assert!(crate::forest::sums_head_disjoint(&body));
        Forest::gfp(y, s.clone(), body).expect("R-stable by construction")
    }

    /// One approximation step of the interpretation: `gfp` binders are
    /// dropped and every fixed-point variable `X@rho` is replaced by
    /// `F(rho)`. The result is closed and denotes the same forest.
    pub fn unfold_gfp(&self, t: &Forest) -> Forest {
        match t.node() {
            Node::Gfp(_, _, body) => self.unfold_gfp(body),
            Node::Var(_, rho) => self.finrep_closed(&rho.clone().into()),
            Node::Sym(f, cs) => {
                Forest::sym_unchecked(f.clone(), cs.iter().map(|c| self.unfold_gfp(c)).collect())
            }
            Node::Sum(sort, cs) => sum(*sort, cs.iter().map(|c| self.unfold_gfp(c))),
        }
    }
}

fn sum(sort: Sort, parts: impl IntoIterator<Item = Forest>) -> Forest {
    canon_sum(sort, parts).expect("summands share the sum's sort")
}
