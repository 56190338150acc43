//! Decontraction of finite members: transporting a proof term of `G |- A`
//! to the inessential extension `G' |- A`.

use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::formula::Name;
use crate::sequent::Ctx;
use crate::term::{CoTerm, Expr, LjpTerm, Spine, Term, Value};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NotAnExtension;

impl fmt::Display for NotAnExtension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("the second context is not an inessential extension of the first")
    }
}

/// All terms obtained from `t` by replacing, independently at each free
/// occurrence, a variable `w` of `g` by `w` itself or by any variable that
/// `g2` adds with the same formula.
///
/// A binder of `t` whose name is taken in `g2` is renamed to the first
/// `x<n>` / `z<n>` that is free, the same choice the search makes under the
/// larger context.
pub fn decontract_members(g: &Ctx, g2: &Ctx, t: &LjpTerm) -> Result<BTreeSet<LjpTerm>, NotAnExtension> {
    if !g.leq(g2) {
        return Err(NotAnExtension);
    }
    let mut d = Decontract { g, g2, scope: Vec::new() };
    Ok(match t {
        LjpTerm::Value(v) => d.value(v).into_iter().map(LjpTerm::from).collect(),
        LjpTerm::Term(x) => d.term(x).into_iter().map(LjpTerm::from).collect(),
        LjpTerm::Spine(s) => d.spine(s).into_iter().map(LjpTerm::from).collect(),
        LjpTerm::CoTerm(p) => d.coterm(p).into_iter().map(LjpTerm::from).collect(),
        LjpTerm::Expr(e) => d.expr(e).into_iter().map(LjpTerm::from).collect(),
    })
}

struct Decontract<'a> {
    g: &'a Ctx,
    g2: &'a Ctx,
    /// bound variables in scope: original name, name in the output
    scope: Vec<(Name, Name)>,
}

impl Decontract<'_> {
    fn occurrence(&self, w: &Name) -> Vec<Name> {
        if let Some((_, new)) = self.scope.iter().rev().find(|(old, _)| old == w) {
            return alloc::vec![new.clone()];
        }
        match self.g.lookup(w) {
            Some(ty) => {
                let mut out = alloc::vec![w.clone()];
                out.extend(self.g.difference(self.g2).filter(|b| &b.ty == ty).map(|b| b.name.clone()));
                out
            }
            None => alloc::vec![w.clone()],
        }
    }

    fn taken(&self, name: &str) -> bool {
        self.g2.contains(name) || self.scope.iter().any(|(_, new)| &**new == name)
    }

    fn bind(&mut self, name: &Name, prefix: &str) -> Name {
        let new: Name = if self.taken(name) {
            (0usize..)
                .map(|i| alloc::format!("{prefix}{i}"))
                .find(|n| !self.taken(n))
                .unwrap()
                .into()
        } else {
            name.clone()
        };
        self.scope.push((name.clone(), new.clone()));
        new
    }

    fn value(&mut self, v: &Value) -> Vec<Value> {
        match v {
            Value::Var(z) => self.occurrence(z).into_iter().map(Value::Var).collect(),
            Value::Thunk(t) => self.term(t).into_iter().map(|t| Value::Thunk(Arc::new(t))).collect(),
            Value::Inj(i, q, v) => self.value(v).into_iter().map(|v| Value::Inj(*i, q.clone(), Arc::new(v))).collect(),
        }
    }

    fn term(&mut self, t: &Term) -> Vec<Term> {
        match t {
            Term::Ea(e) => self.expr(e).into_iter().map(|e| Term::Ea(Arc::new(e))).collect(),
            Term::Ep(e) => self.expr(e).into_iter().map(|e| Term::Ep(Arc::new(e))).collect(),
            Term::Lam(p) => self.coterm(p).into_iter().map(|p| Term::Lam(Arc::new(p))).collect(),
            Term::Pair(a, b) => {
                let (xs, ys) = (self.term(a), self.term(b));
                product(&xs, &ys, |a, b| Term::Pair(Arc::new(a.clone()), Arc::new(b.clone())))
            }
        }
    }

    fn spine(&mut self, s: &Spine) -> Vec<Spine> {
        match s {
            Spine::Nil => alloc::vec![Spine::Nil],
            Spine::CoThunk(p) => self.coterm(p).into_iter().map(|p| Spine::CoThunk(Arc::new(p))).collect(),
            Spine::App(v, s) => {
                let (vs, ss) = (self.value(v), self.spine(s));
                product(&vs, &ss, |v, s| Spine::App(Arc::new(v.clone()), Arc::new(s.clone())))
            }
            Spine::Proj(i, s) => self.spine(s).into_iter().map(|s| Spine::Proj(*i, Arc::new(s))).collect(),
        }
    }

    fn coterm(&mut self, p: &CoTerm) -> Vec<CoTerm> {
        match p {
            CoTerm::BindPos(z, a, e) => {
                let z2 = self.bind(z, "z");
                let out = self.expr(e).into_iter().map(|e| CoTerm::BindPos(z2.clone(), a.clone(), Arc::new(e))).collect();
                self.scope.pop();
                out
            }
            CoTerm::BindNeg(x, n, e) => {
                let x2 = self.bind(x, "x");
                let out = self.expr(e).into_iter().map(|e| CoTerm::BindNeg(x2.clone(), n.clone(), Arc::new(e))).collect();
                self.scope.pop();
                out
            }
            CoTerm::Abort(a) => alloc::vec![CoTerm::Abort(a.clone())],
            CoTerm::Copair(p, q) => {
                let (ps, qs) = (self.coterm(p), self.coterm(q));
                product(&ps, &qs, |p, q| CoTerm::Copair(Arc::new(p.clone()), Arc::new(q.clone())))
            }
        }
    }

    fn expr(&mut self, e: &Expr) -> Vec<Expr> {
        match e {
            Expr::Dlv(t) => self.term(t).into_iter().map(|t| Expr::Dlv(Arc::new(t))).collect(),
            Expr::Ret(v) => self.value(v).into_iter().map(|v| Expr::Ret(Arc::new(v))).collect(),
            Expr::CoRet(x, s) => {
                let heads = self.occurrence(x);
                let spines = self.spine(s);
                product(&heads, &spines, |x, s| Expr::CoRet(x.clone(), Arc::new(s.clone())))
            }
        }
    }
}

fn product<A, B, C>(xs: &[A], ys: &[B], f: impl Fn(&A, &B) -> C) -> Vec<C> {
    xs.iter().flat_map(|x| ys.iter().map(|y| f(x, y)).collect::<Vec<_>>()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{Formula, Neg};
    use crate::term::*;

    fn am() -> Neg {
        Neg::atom("a")
    }

    fn ctx(names: &[&str]) -> Ctx {
        Ctx::from_bindings(names.iter().map(|n| (*n, Formula::from(am())))).unwrap()
    }

    #[test]
    fn duplicates_occurrences() {
        let t: LjpTerm = coret("x", Spine::Nil).into();
        let got = decontract_members(&ctx(&["x"]), &ctx(&["x", "x'"]), &t).unwrap();
        let want: BTreeSet<LjpTerm> = [coret("x", Spine::Nil).into(), coret("x'", Spine::Nil).into()].into();
        assert_eq!(got, want);

        let t: LjpTerm = coret("x", app(thunk(ea(coret("x", Spine::Nil))), Spine::Nil)).into();
        assert_eq!(decontract_members(&ctx(&["x"]), &ctx(&["x", "x'"]), &t).unwrap().len(), 4);
    }

    #[test]
    fn identity_on_equal_contexts() {
        let g = ctx(&["x", "y"]);
        let t: LjpTerm = coret("y", Spine::Nil).into();
        assert_eq!(decontract_members(&g, &g, &t).unwrap(), [t].into());
    }

    #[test]
    fn rejects_non_extensions() {
        let t: LjpTerm = coret("x", Spine::Nil).into();
        assert_eq!(decontract_members(&ctx(&["x", "y"]), &ctx(&["x"]), &t), Err(NotAnExtension));
        let g2 = Ctx::from_bindings([("x", Formula::from(am())), ("b", Neg::atom("b").into())]).unwrap();
        assert_eq!(decontract_members(&ctx(&["x"]), &g2, &t), Err(NotAnExtension));
    }

    #[test]
    fn binders_avoid_capture() {
        let t: LjpTerm = lam(bind_neg("x0", am(), coret("x", Spine::Nil))).into();
        let got = decontract_members(&ctx(&["x"]), &ctx(&["x", "x0"]), &t).unwrap();
        let want: BTreeSet<LjpTerm> = [
            lam(bind_neg("x1", am(), coret("x", Spine::Nil))).into(),
            lam(bind_neg("x1", am(), coret("x0", Spine::Nil))).into(),
        ]
        .into();
        assert_eq!(got, want);
    }
}
