//! Bounded exhaustive search in LJT itself, independent of the translation
//! and of the forest machinery.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{LExpr, LSpine, LTerm, LjtCtx, LjtSequent, LjtTerm};
use crate::formula::IFormula;
use crate::term::Index;

/// All proof terms of `seq` with at most `k` LJT constructors. Bound
/// variables get the first `x<n>` unused in the context; both arms of a case
/// share that name.
pub fn oracle_search_ljt(seq: &LjtSequent, k: usize) -> BTreeSet<LjtTerm> {
    let mut s = Search::default();
    match seq {
        LjtSequent::Invert { ctx, goal } => s.invert(ctx, goal, k).iter().map(|(_, t)| t.clone().into()).collect(),
        LjtSequent::Stable { ctx, right } => s.stable(ctx, right, k).iter().map(|(_, e)| e.clone().into()).collect(),
        LjtSequent::Focus { ctx, focus, right } => {
            s.focus(ctx, focus, right, k).iter().map(|(_, sp)| sp.clone().into()).collect()
        }
    }
}

type Sized<T> = Arc<Vec<(usize, T)>>;

#[derive(Default)]
struct Search {
    terms: BTreeMap<(LjtCtx, IFormula, usize), Sized<LTerm>>,
    exprs: BTreeMap<(LjtCtx, IFormula, usize), Sized<LExpr>>,
    spines: BTreeMap<(LjtCtx, IFormula, IFormula, usize), Sized<LSpine>>,
}

fn fresh(ctx: &LjtCtx) -> alloc::string::String {
    (0usize..).map(|i| alloc::format!("x{i}")).find(|n| ctx.lookup(n).is_none()).unwrap()
}

fn extend(ctx: &LjtCtx, x: &str, a: &IFormula) -> LjtCtx {
    let mut out = ctx.clone();
    out.push(x.into(), a.clone()).expect("fresh");
    out
}

fn pairs<A, B, C>(xs: &[(usize, A)], ys: &[(usize, B)], k: usize, f: impl Fn(&A, &B) -> C) -> Vec<(usize, C)> {
    let mut out = Vec::new();
    for (n, x) in xs {
        for (m, y) in ys {
            if 1 + n + m <= k {
                out.push((1 + n + m, f(x, y)));
            }
        }
    }
    out
}

impl Search {
    /// `G => A`
    fn invert(&mut self, ctx: &LjtCtx, goal: &IFormula, k: usize) -> Sized<LTerm> {
        if k == 0 {
            return Arc::default();
        }
        let key = (ctx.clone(), goal.clone(), k);
        if let Some(v) = self.terms.get(&key) {
            return v.clone();
        }
        let out: Vec<(usize, LTerm)> = match goal {
            IFormula::Imp(a, b) => {
                let x = fresh(ctx);
                let inner = self.invert(&extend(ctx, &x, a), b, k - 1);
                inner.iter().map(|(n, t)| (n + 1, LTerm::lam(&x, (**a).clone(), t.clone()))).collect()
            }
            IFormula::And(a, b) if k >= 3 => {
                let l = self.invert(ctx, a, k - 2);
                let r = self.invert(ctx, b, k - 2);
                pairs(&l, &r, k, |x, y| LTerm::pair(x.clone(), y.clone()))
            }
            IFormula::And(..) => Vec::new(),
            r => self.stable(ctx, r, k).iter().map(|(n, e)| (*n, e.clone().into())).collect(),
        };
        let out = Arc::new(out);
        self.terms.insert(key, out.clone());
        out
    }

    /// `G |- R`
    fn stable(&mut self, ctx: &LjtCtx, right: &IFormula, k: usize) -> Sized<LExpr> {
        if k == 0 {
            return Arc::default();
        }
        let key = (ctx.clone(), right.clone(), k);
        if let Some(v) = self.exprs.get(&key) {
            return v.clone();
        }
        let mut out = Vec::new();
        let hyps: Vec<_> = ctx.iter().map(|b| (b.name.clone(), b.ty.clone())).collect();
        for (x, a) in hyps {
            for (n, s) in self.focus(ctx, &a, right, k - 1).iter() {
                out.push((n + 1, LExpr::App(x.clone(), Arc::new(s.clone()))));
            }
        }
        if let IFormula::Or(a1, a2) = right {
            for i in Index::BOTH {
                let (this, other) = i.pick((a1, a2), (a2, a1));
                for (n, t) in self.invert(ctx, this, k - 1).iter() {
                    out.push((n + 1, LExpr::inj(i, (**other).clone(), t.clone())));
                }
            }
        }
        let out = Arc::new(out);
        self.exprs.insert(key, out.clone());
        out
    }

    /// `G [A] |- R`
    fn focus(&mut self, ctx: &LjtCtx, focus: &IFormula, right: &IFormula, k: usize) -> Sized<LSpine> {
        if k == 0 {
            return Arc::default();
        }
        let key = (ctx.clone(), focus.clone(), right.clone(), k);
        if let Some(v) = self.spines.get(&key) {
            return v.clone();
        }
        let out: Vec<(usize, LSpine)> = match focus {
            IFormula::Atom(_) if focus == right => alloc::vec![(1, LSpine::Nil)],
            IFormula::Atom(_) => Vec::new(),
            IFormula::Bot => alloc::vec![(1, LSpine::Abort(right.clone()))],
            IFormula::Imp(a, b) if k >= 3 => {
                let ts = self.invert(ctx, a, k - 2);
                let ss = self.focus(ctx, b, right, k - 2);
                pairs(&ts, &ss, k, |t, s| LSpine::cons(t.clone(), s.clone()))
            }
            IFormula::Imp(..) => Vec::new(),
            IFormula::And(a1, a2) => {
                let mut out = Vec::new();
                for i in Index::BOTH {
                    for (n, s) in self.focus(ctx, i.pick(a1, a2), right, k - 1).iter() {
                        out.push((n + 1, LSpine::proj(i, s.clone())));
                    }
                }
                out
            }
            IFormula::Or(a1, a2) if k >= 3 => {
                let x = fresh(ctx);
                let l = self.stable(&extend(ctx, &x, a1), right, k - 2);
                let r = self.stable(&extend(ctx, &x, a2), right, k - 2);
                pairs(&l, &r, k, |e1, e2| {
                    LSpine::case(&x, (**a1).clone(), e1.clone(), &x, (**a2).clone(), e2.clone())
                })
            }
            IFormula::Or(..) => Vec::new(),
        };
        let out = Arc::new(out);
        self.spines.insert(key, out.clone());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ljt::check_ljt;

    fn a() -> IFormula {
        IFormula::atom("a")
    }

    #[test]
    fn small_searches() {
        let g = LjtCtx::from_bindings([("x", a())]).unwrap();
        let got: Vec<_> = oracle_search_ljt(&LjtSequent::Stable { ctx: g.clone(), right: a() }, 5).into_iter().collect();
        assert_eq!(got, [LExpr::app("x", LSpine::Nil).into()]);

        let peirce_premise = LjtSequent::Stable { ctx: LjtCtx::new(), right: IFormula::or(a(), IFormula::atom("b")) };
        assert!(oracle_search_ljt(&peirce_premise, 12).is_empty());

        let church = LjtSequent::Stable {
            ctx: LjtCtx::from_bindings([("f", IFormula::imp(a(), a())), ("x", a())]).unwrap(),
            right: a(),
        };
        let found = oracle_search_ljt(&church, 11);
        assert_eq!(found.len(), 4);
        for t in &found {
            assert!(check_ljt(&church, t), "{t}");
        }
    }
}
