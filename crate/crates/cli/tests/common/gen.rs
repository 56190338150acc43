//! Seeded random formulas, sequents and forests.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

use copsearch_core::{
    Ctx, Forest, Formula, IFormula, Index, Neg, Node, Pos, Sequent, Sort, Stable, Sym, Weight,
};
use copsearch_core::ljt::{LjtCtx, LjtSequent};

const ATOMS: &[&str] = &["a", "b"];
const NAMES: &[&str] = &["x", "y", "u", "x0", "v", "w"];

fn atom(rng: &mut StdRng) -> &'static str {
    ATOMS.choose(rng).unwrap()
}

pub fn neg(rng: &mut StdRng, depth: u32) -> Neg {
    if depth == 0 || rng.gen_bool(0.35) {
        return Neg::atom(atom(rng));
    }
    match rng.gen_range(0..3) {
        0 => Neg::up(pos(rng, depth - 1)),
        1 => Neg::imp(pos(rng, depth - 1), neg(rng, depth - 1)),
        _ => Neg::and(neg(rng, depth - 1), neg(rng, depth - 1)),
    }
}

pub fn pos(rng: &mut StdRng, depth: u32) -> Pos {
    if depth == 0 || rng.gen_bool(0.3) {
        return if rng.gen_bool(0.2) { Pos::Bot } else { Pos::atom(atom(rng)) };
    }
    match rng.gen_range(0..3) {
        0 | 1 => Pos::down(neg(rng, depth - 1)),
        _ => Pos::or(pos(rng, depth - 1), pos(rng, depth - 1)),
    }
}

/// A negative formula or a positive atom.
pub fn left(rng: &mut StdRng, depth: u32) -> Formula {
    if rng.gen_bool(0.2) {
        Pos::atom(atom(rng)).into()
    } else {
        neg(rng, depth).into()
    }
}

/// A positive formula or a negative atom.
pub fn right(rng: &mut StdRng, depth: u32) -> Formula {
    if rng.gen_bool(0.4) {
        Neg::atom(atom(rng)).into()
    } else {
        pos(rng, depth).into()
    }
}

pub fn ctx(rng: &mut StdRng, max_len: usize, depth: u32) -> Ctx {
    let len = rng.gen_range(0..=max_len);
    let mut names = NAMES.to_vec();
    names.shuffle(rng);
    let mut g = Ctx::new();
    for name in names.into_iter().take(len) {
        g.push(name.into(), left(rng, depth)).unwrap();
    }
    g
}

pub fn stable(rng: &mut StdRng, max_len: usize, depth: u32) -> Stable {
    Stable::new(ctx(rng, max_len, depth), right(rng, depth))
}

/// Any of the five sequent forms.
pub fn sequent(rng: &mut StdRng, max_len: usize, depth: u32) -> Sequent {
    let g = ctx(rng, max_len, depth);
    match rng.gen_range(0..5) {
        0 => Sequent::stable(g, if rng.gen_bool(0.3) { Formula::from(neg(rng, depth)) } else { right(rng, depth) }),
        1 => Sequent::invert_right(g, neg(rng, depth)),
        2 => Sequent::focus_right(g, pos(rng, depth)),
        3 => Sequent::focus_left(g, neg(rng, depth), right(rng, depth)),
        _ => Sequent::invert_left(g, pos(rng, depth), if rng.gen_bool(0.5) { neg(rng, depth).into() } else { right(rng, depth) }),
    }
}

/// A sequent of weight at most `max_weight`.
pub fn light_sequent(rng: &mut StdRng, max_weight: u64) -> Sequent {
    loop {
        let s = sequent(rng, 3, 3);
        if s.weight() <= max_weight {
            return s;
        }
    }
}

pub fn iformula(rng: &mut StdRng, size: usize) -> IFormula {
    if size <= 1 {
        return if rng.gen_bool(0.15) { IFormula::Bot } else { IFormula::atom(["a", "b", "c"].choose(rng).unwrap()) };
    }
    let left = rng.gen_range(1..size);
    let (l, r) = (iformula(rng, left), iformula(rng, size - left));
    match rng.gen_range(0..4) {
        0 | 1 => IFormula::imp(l, r),
        2 => IFormula::and(l, r),
        _ => IFormula::or(l, r),
    }
}

/// A formula with at most `max` symbols, atoms and `bot` counting one,
/// each connective one.
pub fn iformula_upto(rng: &mut StdRng, max: usize) -> IFormula {
    let leaves = rng.gen_range(1..=max.div_ceil(2));
    iformula(rng, leaves)
}

pub fn ljt_sequent(rng: &mut StdRng, max_len: usize, leaves: usize) -> LjtSequent {
    let mut g = LjtCtx::new();
    for name in ["f", "g", "h"].iter().take(rng.gen_range(0..=max_len)) {
        let n = rng.gen_range(1..=leaves);
        g.push((*name).into(), iformula(rng, n)).unwrap();
    }
    let n = rng.gen_range(1..=leaves);
    if rng.gen_bool(0.5) {
        LjtSequent::Invert { ctx: g, goal: iformula(rng, n) }
    } else {
        let right = loop {
            let r = iformula(rng, n);
            if r.is_right() {
                break r;
            }
        };
        LjtSequent::Stable { ctx: g, right }
    }
}

/// A random forest of the given sort, built bottom-up by [`Forest::sym`], with
/// sums, empty sums, free fixed-point variables and `gfp` binders whose
/// bound occurrences carry the binder's own sequent. Bound occurrences are
/// only placed under a constructor, so the result is guarded and
/// well-bound.
pub fn forest(rng: &mut StdRng, sort: Sort, depth: u32) -> Forest {
    let mut binders = Vec::new();
    forest_in(rng, sort, depth, &mut binders, false)
}

fn forest_in(rng: &mut StdRng, sort: Sort, depth: u32, binders: &mut Vec<(String, Stable)>, guarded: bool) -> Forest {
    if sort == Sort::E && depth > 0 && rng.gen_bool(0.15) {
        let rho = stable_r(rng);
        let name = format!("Y{}", binders.len());
        binders.push((name.clone(), rho.clone()));
        let body = forest_in(rng, Sort::E, depth - 1, binders, false);
        binders.pop();
        return Forest::gfp(name.as_str().into(), rho, body).unwrap();
    }
    if sort == Sort::E && rng.gen_bool(0.15) {
        let usable: Vec<_> = if guarded { binders.clone() } else { Vec::new() };
        if let Some((name, rho)) = usable.choose(rng) {
            return Forest::var(name.as_str().into(), rho.clone()).unwrap();
        }
        let rho = stable_r(rng);
        return Forest::var("F".into(), rho).unwrap();
    }
    if matches!(sort, Sort::V | Sort::S | Sort::E) && depth > 0 && rng.gen_bool(0.2) {
        let n = rng.gen_range(0..=3);
        let parts: Vec<Forest> = (0..n).map(|_| forest_in(rng, sort, depth - 1, binders, guarded)).collect();
        return copsearch_core::canon_sum(sort, parts).unwrap();
    }
    let syms = symbols(rng, sort, depth == 0);
    let f = syms.choose(rng).unwrap().clone();
    let (args, _) = f.signature();
    let kids: Vec<Forest> =
        args.iter().map(|s| forest_in(rng, *s, depth.saturating_sub(1), binders, true)).collect();
    Forest::sym(f, kids).unwrap()
}

fn stable_r(rng: &mut StdRng) -> Stable {
    Stable::new(ctx(rng, 2, 1), right(rng, 1))
}

fn symbols(rng: &mut StdRng, sort: Sort, leaf: bool) -> Vec<Sym> {
    let x = *NAMES.choose(rng).unwrap();
    match (sort, leaf) {
        (Sort::V, true) => vec![Sym::Var(x.into())],
        (Sort::V, false) => vec![Sym::Var(x.into()), Sym::Thunk, Sym::Inj(Index::One, pos(rng, 1))],
        (Sort::T, _) => vec![Sym::Ea, Sym::Ep, Sym::Lam, Sym::Pair],
        (Sort::S, true) => vec![Sym::Nil],
        (Sort::S, false) => vec![Sym::Nil, Sym::CoThunk, Sym::App, Sym::Proj(Index::Two)],
        (Sort::P, true) => vec![Sym::Abort(right(rng, 1))],
        (Sort::P, false) => vec![
            Sym::Abort(right(rng, 1)),
            Sym::BindNeg(x.into(), neg(rng, 1)),
            Sym::BindPos(x.into(), atom(rng).into()),
            Sym::Copair,
        ],
        (Sort::E, true) => vec![Sym::CoRet(x.into())],
        (Sort::E, false) => vec![Sym::CoRet(x.into()), Sym::Ret, Sym::Dlv],
    }
}

/// Whether `t` contains a `gfp` binder.
pub fn has_gfp(t: &Forest) -> bool {
    t.subforests().iter().any(|s| matches!(s.node(), Node::Gfp(..)))
}
