//! Exhaustive bounded proof search straight from the typing rules. Shares no
//! code with the forest machinery and serves as its reference.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::formula::{Formula, Neg, Pos};
use crate::sequent::{Ctx, Sequent};
use crate::term::{CoTerm, Expr, Index, LjpTerm, Spine, Term, Value};

/// Every proof term of `seq` with at most `k` constructors. Bound variables
/// are named like the forest builder names them (`z0`/`x0`, the first index
/// unused by the context).
pub fn oracle_search(seq: &Sequent, k: usize) -> BTreeSet<LjpTerm> {
    let mut search = Search::default();
    search.solve(seq, k).iter().map(|(_, t)| t.clone()).collect()
}

type Found = Arc<Vec<(usize, LjpTerm)>>;

#[derive(Default)]
struct Search {
    memo: BTreeMap<(Sequent, usize), Found>,
}

impl Search {
    fn solve(&mut self, seq: &Sequent, k: usize) -> Found {
        if k == 0 {
            return Arc::new(Vec::new());
        }
        let key = (seq.clone(), k);
        if let Some(found) = self.memo.get(&key) {
            return found.clone();
        }
        let found = Arc::new(self.rules(seq, k));
        self.memo.insert(key, found.clone());
        found
    }

    fn unary(&mut self, seq: Sequent, k: usize, wrap: impl Fn(&LjpTerm) -> LjpTerm) -> Vec<(usize, LjpTerm)> {
        self.solve(&seq, k - 1).iter().map(|(n, t)| (n + 1, wrap(t))).collect()
    }

    fn binary(
        &mut self,
        first: Sequent,
        second: Sequent,
        k: usize,
        wrap: impl Fn(&LjpTerm, &LjpTerm) -> LjpTerm,
    ) -> Vec<(usize, LjpTerm)> {
        if k < 3 {
            return Vec::new();
        }
        let a = self.solve(&first, k - 2);
        let b = self.solve(&second, k - 2);
        let mut out = Vec::new();
        for (n, s) in a.iter() {
            for (m, t) in b.iter() {
                if 1 + n + m <= k {
                    out.push((1 + n + m, wrap(s, t)));
                }
            }
        }
        out
    }

    fn rules(&mut self, seq: &Sequent, k: usize) -> Vec<(usize, LjpTerm)> {
        match seq {
            Sequent::FocusR { ctx, goal } => match goal {
                Pos::Atom(a) => ctx
                    .iter()
                    .filter(|b| matches!(&b.ty, Formula::Pos(Pos::Atom(c)) if c == a))
                    .map(|b| (1, Value::Var(b.name.clone()).into()))
                    .collect(),
                Pos::Down(n) => self.unary(Sequent::invert_right(ctx.clone(), (**n).clone()), k, |t| {
                    Value::Thunk(Arc::new(as_term(t))).into()
                }),
                Pos::Bot => Vec::new(),
                Pos::Or(p1, p2) => {
                    let mut out = self.unary(Sequent::focus_right(ctx.clone(), (**p1).clone()), k, |v| {
                        Value::Inj(Index::One, (**p2).clone(), Arc::new(as_value(v))).into()
                    });
                    out.extend(self.unary(Sequent::focus_right(ctx.clone(), (**p2).clone()), k, |v| {
                        Value::Inj(Index::Two, (**p1).clone(), Arc::new(as_value(v))).into()
                    }));
                    out
                }
            },
            Sequent::InvertR { ctx, goal } => match goal {
                Neg::Atom(_) => self.unary(Sequent::stable(ctx.clone(), goal.clone()), k, |e| {
                    Term::Ea(Arc::new(as_expr(e))).into()
                }),
                Neg::Up(p) => self.unary(Sequent::stable(ctx.clone(), (**p).clone()), k, |e| {
                    Term::Ep(Arc::new(as_expr(e))).into()
                }),
                Neg::Imp(p, n) => self.unary(
                    Sequent::invert_left(ctx.clone(), (**p).clone(), (**n).clone()),
                    k,
                    |q| Term::Lam(Arc::new(as_coterm(q))).into(),
                ),
                Neg::And(n1, n2) => self.binary(
                    Sequent::invert_right(ctx.clone(), (**n1).clone()),
                    Sequent::invert_right(ctx.clone(), (**n2).clone()),
                    k,
                    |a, b| Term::Pair(Arc::new(as_term(a)), Arc::new(as_term(b))).into(),
                ),
            },
            Sequent::FocusL { ctx, focus, right } => match focus {
                Neg::Atom(_) => {
                    if *right == Formula::Neg(focus.clone()) {
                        alloc::vec![(1, Spine::Nil.into())]
                    } else {
                        Vec::new()
                    }
                }
                Neg::Up(p) => self.unary(Sequent::invert_left(ctx.clone(), (**p).clone(), right.clone()), k, |q| {
                    Spine::CoThunk(Arc::new(as_coterm(q))).into()
                }),
                Neg::Imp(p, n) => self.binary(
                    Sequent::focus_right(ctx.clone(), (**p).clone()),
                    Sequent::focus_left(ctx.clone(), (**n).clone(), right.clone()),
                    k,
                    |v, s| Spine::App(Arc::new(as_value(v)), Arc::new(as_spine(s))).into(),
                ),
                Neg::And(n1, n2) => {
                    let mut out = Vec::new();
                    for (i, n) in [(Index::One, n1), (Index::Two, n2)] {
                        out.extend(self.unary(
                            Sequent::focus_left(ctx.clone(), (**n).clone(), right.clone()),
                            k,
                            |s| Spine::Proj(i, Arc::new(as_spine(s))).into(),
                        ));
                    }
                    out
                }
            },
            Sequent::InvertL { ctx, hyp, right } => match hyp {
                Pos::Atom(a) => {
                    let z = first_unused(ctx, "z");
                    let ctx2 = extend(ctx, &z, hyp.clone().into());
                    self.unary(Sequent::stable(ctx2, right.clone()), k, |e| {
                        CoTerm::BindPos(z.as_str().into(), a.clone(), Arc::new(as_expr(e))).into()
                    })
                }
                Pos::Down(n) => {
                    let x = first_unused(ctx, "x");
                    let ctx2 = extend(ctx, &x, (**n).clone().into());
                    self.unary(Sequent::stable(ctx2, right.clone()), k, |e| {
                        CoTerm::BindNeg(x.as_str().into(), (**n).clone(), Arc::new(as_expr(e))).into()
                    })
                }
                Pos::Bot => alloc::vec![(1, CoTerm::Abort(right.clone()).into())],
                Pos::Or(p1, p2) => self.binary(
                    Sequent::invert_left(ctx.clone(), (**p1).clone(), right.clone()),
                    Sequent::invert_left(ctx.clone(), (**p2).clone(), right.clone()),
                    k,
                    |a, b| CoTerm::Copair(Arc::new(as_coterm(a)), Arc::new(as_coterm(b))).into(),
                ),
            },
            Sequent::Stable(s) => {
                let ctx = &s.ctx;
                if let Formula::Neg(n) = &s.right {
                    if n.is_composite() {
                        return self.unary(Sequent::invert_right(ctx.clone(), n.clone()), k, |t| {
                            Expr::Dlv(Arc::new(as_term(t))).into()
                        });
                    }
                }
                let mut out = Vec::new();
                if let Formula::Pos(p) = &s.right {
                    out.extend(self.unary(Sequent::focus_right(ctx.clone(), p.clone()), k, |v| {
                        Expr::Ret(Arc::new(as_value(v))).into()
                    }));
                }
                let hyps: Vec<_> = ctx
                    .iter()
                    .filter_map(|b| match &b.ty {
                        Formula::Neg(n) => Some((b.name.clone(), n.clone())),
                        Formula::Pos(_) => None,
                    })
                    .collect();
                for (x, n) in hyps {
                    out.extend(self.unary(Sequent::focus_left(ctx.clone(), n, s.right.clone()), k, |sp| {
                        Expr::CoRet(x.clone(), Arc::new(as_spine(sp))).into()
                    }));
                }
                out
            }
        }
    }
}

fn first_unused(ctx: &Ctx, prefix: &str) -> alloc::string::String {
    let mut i = 0usize;
    loop {
        let name = alloc::format!("{prefix}{i}");
        if ctx.lookup(&name).is_none() {
            return name;
        }
        i += 1;
    }
}

fn extend(ctx: &Ctx, name: &str, ty: Formula) -> Ctx {
    let mut out = ctx.clone();
    out.push(name.into(), ty).expect("unused name");
    out
}

fn as_value(t: &LjpTerm) -> Value {
    match t {
        LjpTerm::Value(v) => v.clone(),
        _ => unreachable!(),
    }
}

fn as_term(t: &LjpTerm) -> Term {
    match t {
        LjpTerm::Term(v) => v.clone(),
        _ => unreachable!(),
    }
}

fn as_spine(t: &LjpTerm) -> Spine {
    match t {
        LjpTerm::Spine(v) => v.clone(),
        _ => unreachable!(),
    }
}

fn as_coterm(t: &LjpTerm) -> CoTerm {
    match t {
        LjpTerm::CoTerm(v) => v.clone(),
        _ => unreachable!(),
    }
}

fn as_expr(t: &LjpTerm) -> Expr {
    match t {
        LjpTerm::Expr(v) => v.clone(),
        _ => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::*;

    fn am() -> Neg {
        Neg::atom("a")
    }

    #[test]
    fn oracle_examples() {
        let g = Ctx::from_bindings([("x", Formula::from(am()))]).unwrap();
        let got: Vec<_> = oracle_search(&Sequent::stable(g, am()), 5).into_iter().collect();
        assert_eq!(got, [LjpTerm::from(coret("x", Spine::Nil))]);
        assert!(oracle_search(&Sequent::stable(Ctx::new(), am()), 10).is_empty());
        let id = Sequent::invert_right(Ctx::new(), Neg::imp(Pos::down(am()), am()));
        let got: Vec<_> = oracle_search(&id, 6).into_iter().collect();
        assert_eq!(got, [LjpTerm::from(lam(bind_neg("x0", am(), coret("x0", Spine::Nil))))]);
    }

    #[test]
    fn oracle_output_typechecks() {
        let f = Neg::imp(Pos::down(am()), am());
        let g = Ctx::from_bindings([("x", Formula::from(f)), ("y", am().into())]).unwrap();
        let s = Sequent::stable(g, am());
        let found = oracle_search(&s, 17);
        assert_eq!(found.len(), 4);
        for t in &found {
            assert!(crate::typing::check(&s, t), "{t}");
        }
        assert_eq!(oracle_search(&s, 16).len(), 3);
    }
}
