//! Finitary forests: LJP proof-term constructors plus finite sums, fixed-point
//! variables annotated with R-stable sequents, and `gfp` binders.
//!
//! Sums are kept in a normal form (flat, sorted, duplicate-free), which makes
//! structural equality coincide with equality up to associativity,
//! commutativity and idempotency of `+`.

use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::formula::{Formula, Name, Neg, Pos};
use crate::sequent::{Sort, Stable};
use crate::term::{Index, LjpTerm};

/// Function symbols of the LJP term signature. Variable binders and
/// variables are symbols too: `z^a+. _` is one unary symbol per `(z, a)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sym {
    /// positive variable `z : v`
    Var(Name),
    Thunk,
    Inj(Index, Pos),
    Ea,
    Ep,
    Lam,
    Pair,
    Nil,
    CoThunk,
    App,
    Proj(Index),
    BindPos(Name, Name),
    BindNeg(Name, Neg),
    Abort(Formula),
    Copair,
    Dlv,
    Ret,
    CoRet(Name),
}

impl Sym {
    /// Argument sorts and result sort.
    pub fn signature(&self) -> (&'static [Sort], Sort) {
        use Sort::*;
        match self {
            Sym::Var(_) => (&[], V),
            Sym::Thunk => (&[T], V),
            Sym::Inj(..) => (&[V], V),
            Sym::Ea | Sym::Ep => (&[E], T),
            Sym::Lam => (&[P], T),
            Sym::Pair => (&[T, T], T),
            Sym::Nil => (&[], S),
            Sym::CoThunk => (&[P], S),
            Sym::App => (&[V, S], S),
            Sym::Proj(_) => (&[S], S),
            Sym::BindPos(..) | Sym::BindNeg(..) => (&[E], P),
            Sym::Abort(_) => (&[], P),
            Sym::Copair => (&[P, P], P),
            Sym::Dlv => (&[T], E),
            Sym::Ret => (&[V], E),
            Sym::CoRet(_) => (&[S], E),
        }
    }

    pub fn sort(&self) -> Sort {
        self.signature().1
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Node {
    Sym(Sym, Vec<Forest>),
    Sum(Sort, Vec<Forest>),
    Var(Name, Stable),
    Gfp(Name, Stable, Forest),
}

/// A finitary forest. Cheap to clone; subtrees are shared.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Forest(Arc<Node>);

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ForestError {
    Arity { sym: Sym, expected: usize, found: usize },
    SortMismatch { expected: Sort, found: Sort },
    /// Sums exist only at sorts `v`, `s` and `e`.
    NoSumAt(Sort),
    NotRStable(Stable),
}

impl fmt::Display for ForestError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ForestError::Arity { sym, expected, found } => {
                write!(f, "{sym:?} takes {expected} arguments, got {found}")
            }
            ForestError::SortMismatch { expected, found } => {
                write!(f, "expected a forest of sort {expected}, found sort {found}")
            }
            ForestError::NoSumAt(s) => write!(f, "sums are not allowed at sort {s}"),
            ForestError::NotRStable(s) => write!(f, "`{s}` is not an R-stable sequent"),
        }
    }
}

impl fmt::Debug for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Forest {
    /// Address of the shared node; stable while any clone is alive.
    pub(crate) fn id(&self) -> usize {
        Arc::as_ptr(&self.0) as usize
    }

    pub fn node(&self) -> &Node {
        &self.0
    }

    pub fn sort(&self) -> Sort {
        match &*self.0 {
            Node::Sym(f, _) => f.sort(),
            Node::Sum(s, _) => *s,
            Node::Var(..) | Node::Gfp(..) => Sort::E,
        }
    }

    /// `f(T1, ..., Tk)`, checking arity and argument sorts.
    pub fn sym(f: Sym, children: Vec<Forest>) -> Result<Forest, ForestError> {
        let (args, _) = f.signature();
        if args.len() != children.len() {
            return Err(ForestError::Arity { sym: f, expected: args.len(), found: children.len() });
        }
        for (want, child) in args.iter().zip(&children) {
            if child.sort() != *want {
                return Err(ForestError::SortMismatch { expected: *want, found: child.sort() });
            }
        }
        Ok(Forest(Arc::new(Node::Sym(f, children))))
    }

    /// Constructor for callers that build sort-correct forests by design.
    pub(crate) fn sym_unchecked(f: Sym, children: Vec<Forest>) -> Forest {
        debug_assert!(
            f.signature().0.len() == children.len()
                && f.signature().0.iter().zip(&children).all(|(s, c)| *s == c.sort()),
            "ill-sorted forest node {f:?}"
        );
        Forest(Arc::new(Node::Sym(f, children)))
    }

    pub fn leaf(f: Sym) -> Forest {
        Forest::sym_unchecked(f, vec![])
    }

    pub fn unary(f: Sym, child: Forest) -> Forest {
        Forest::sym_unchecked(f, vec![child])
    }

    pub fn binary(f: Sym, a: Forest, b: Forest) -> Forest {
        Forest::sym_unchecked(f, vec![a, b])
    }

    /// The empty sum at `sort`.
    pub fn zero(sort: Sort) -> Forest {
        Forest(Arc::new(Node::Sum(sort, Vec::new())))
    }

    pub fn var(name: Name, rho: Stable) -> Result<Forest, ForestError> {
        if !rho.is_r_stable() {
            return Err(ForestError::NotRStable(rho));
        }
        Ok(Forest(Arc::new(Node::Var(name, rho))))
    }

    pub fn gfp(name: Name, rho: Stable, body: Forest) -> Result<Forest, ForestError> {
        if !rho.is_r_stable() {
            return Err(ForestError::NotRStable(rho));
        }
        if body.sort() != Sort::E {
            return Err(ForestError::SortMismatch { expected: Sort::E, found: body.sort() });
        }
        Ok(Forest(Arc::new(Node::Gfp(name, rho, body))))
    }

    pub fn is_zero(&self) -> bool {
        matches!(&*self.0, Node::Sum(_, xs) if xs.is_empty())
    }

    /// Immediate subforests, with a `gfp` body counting as the only child.
    pub fn children(&self) -> &[Forest] {
        match &*self.0 {
            Node::Sym(_, cs) | Node::Sum(_, cs) => cs,
            Node::Var(..) => &[],
            Node::Gfp(_, _, body) => core::slice::from_ref(body),
        }
    }

    /// Total number of nodes.
    pub fn size(&self) -> usize {
        1 + self.children().iter().map(Forest::size).sum::<usize>()
    }

    /// All subforests, root first.
    pub fn subforests(&self) -> Vec<Forest> {
        let mut out = Vec::new();
        let mut stack = vec![self.clone()];
        while let Some(t) = stack.pop() {
            stack.extend(t.children().iter().rev().cloned());
            out.push(t);
        }
        out
    }

    /// The term a forest stands for when it has no sums, variables or
    /// binders.
    pub fn to_term(&self) -> Option<LjpTerm> {
        match self.node() {
            Node::Sym(f, cs) => {
                let kids = cs.iter().map(Forest::to_term).collect::<Option<Vec<_>>>()?;
                Some(crate::decide::build(f, &kids))
            }
            _ => None,
        }
    }

    /// A term as a forest with exactly one member.
    pub fn from_term(t: &LjpTerm) -> Forest {
        use crate::term::{CoTerm, Expr, Spine, Term, Value};
        fn v(x: &Value) -> Forest {
            match x {
                Value::Var(z) => Forest::leaf(Sym::Var(z.clone())),
                Value::Thunk(t) => Forest::unary(Sym::Thunk, tm(t)),
                Value::Inj(i, q, w) => Forest::unary(Sym::Inj(*i, q.clone()), v(w)),
            }
        }
        fn tm(x: &Term) -> Forest {
            match x {
                Term::Ea(e) => Forest::unary(Sym::Ea, ex(e)),
                Term::Ep(e) => Forest::unary(Sym::Ep, ex(e)),
                Term::Lam(p) => Forest::unary(Sym::Lam, co(p)),
                Term::Pair(a, b) => Forest::binary(Sym::Pair, tm(a), tm(b)),
            }
        }
        fn sp(x: &Spine) -> Forest {
            match x {
                Spine::Nil => Forest::leaf(Sym::Nil),
                Spine::CoThunk(p) => Forest::unary(Sym::CoThunk, co(p)),
                Spine::App(w, s) => Forest::binary(Sym::App, v(w), sp(s)),
                Spine::Proj(i, s) => Forest::unary(Sym::Proj(*i), sp(s)),
            }
        }
        fn co(x: &CoTerm) -> Forest {
            match x {
                CoTerm::BindPos(z, a, e) => Forest::unary(Sym::BindPos(z.clone(), a.clone()), ex(e)),
                CoTerm::BindNeg(y, n, e) => Forest::unary(Sym::BindNeg(y.clone(), n.clone()), ex(e)),
                CoTerm::Abort(a) => Forest::leaf(Sym::Abort(a.clone())),
                CoTerm::Copair(p, q) => Forest::binary(Sym::Copair, co(p), co(q)),
            }
        }
        fn ex(x: &Expr) -> Forest {
            match x {
                Expr::Dlv(t) => Forest::unary(Sym::Dlv, tm(t)),
                Expr::Ret(w) => Forest::unary(Sym::Ret, v(w)),
                Expr::CoRet(y, s) => Forest::unary(Sym::CoRet(y.clone()), sp(s)),
            }
        }
        match t {
            LjpTerm::Value(x) => v(x),
            LjpTerm::Term(x) => tm(x),
            LjpTerm::Spine(x) => sp(x),
            LjpTerm::CoTerm(x) => co(x),
            LjpTerm::Expr(x) => ex(x),
        }
    }
}

/// Sum in normal form: nested sums of the same sort are flattened, summands
/// sorted and deduplicated, a singleton collapses to its element and an
/// empty list gives the empty sum of `sort`.
pub fn canon_sum(sort: Sort, parts: impl IntoIterator<Item = Forest>) -> Result<Forest, ForestError> {
    if !matches!(sort, Sort::V | Sort::S | Sort::E) {
        return Err(ForestError::NoSumAt(sort));
    }
    let mut set = BTreeSet::new();
    for part in parts {
        if part.sort() != sort {
            return Err(ForestError::SortMismatch { expected: sort, found: part.sort() });
        }
        match part.node() {
            Node::Sum(_, inner) => set.extend(inner.iter().cloned()),
            _ => {
                set.insert(part);
            }
        }
    }
    let mut items: Vec<Forest> = set.into_iter().collect();
    if items.len() == 1 {
        return Ok(items.pop().unwrap());
    }
    Ok(Forest(Arc::new(Node::Sum(sort, items))))
}

/// Free fixed-point variables. A binder `gfp X@rho` captures every `X@rho'`
/// with `rho <= rho'`.
pub fn fpv(t: &Forest) -> BTreeSet<(Name, Stable)> {
    match t.node() {
        Node::Var(x, rho) => [(x.clone(), rho.clone())].into_iter().collect(),
        Node::Gfp(x, rho, body) => {
            let mut set = fpv(body);
            set.retain(|(y, rho2)| !(y == x && rho.leq(rho2)));
            set
        }
        Node::Sym(_, cs) | Node::Sum(_, cs) => cs.iter().flat_map(fpv).collect(),
    }
}

/// A free fixed-point variable occurrence, with the number of function
/// symbols above it and the child indices leading to it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Occurrence {
    pub name: Name,
    pub rho: Stable,
    pub depth: usize,
    pub path: Vec<usize>,
}

/// Free fixed-point variable occurrences of `t`.
pub fn occurrences(t: &Forest) -> Vec<Occurrence> {
    fn go(t: &Forest, depth: usize, path: &mut Vec<usize>, binders: &mut Vec<(Name, Stable)>, out: &mut Vec<Occurrence>) {
        match t.node() {
            Node::Var(x, rho) => {
                let bound = binders.iter().any(|(y, r)| y == x && r.leq(rho));
                if !bound {
                    out.push(Occurrence { name: x.clone(), rho: rho.clone(), depth, path: path.clone() });
                }
            }
            Node::Gfp(x, rho, body) => {
                binders.push((x.clone(), rho.clone()));
                path.push(0);
                go(body, depth, path, binders, out);
                path.pop();
                binders.pop();
            }
            Node::Sum(_, cs) => {
                for (i, c) in cs.iter().enumerate() {
                    path.push(i);
                    go(c, depth, path, binders, out);
                    path.pop();
                }
            }
            Node::Sym(_, cs) => {
                for (i, c) in cs.iter().enumerate() {
                    path.push(i);
                    go(c, depth + 1, path, binders, out);
                    path.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    go(t, 0, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

/// Every `gfp X@rho. T` binds only occurrences `X@rho'` with `rho <= rho'`.
pub fn is_well_bound(t: &Forest) -> bool {
    t.subforests().iter().all(|s| match s.node() {
        Node::Gfp(x, rho, body) => fpv(body).iter().all(|(y, rho2)| y != x || rho.leq(rho2)),
        _ => true,
    })
}

/// Every occurrence bound by a `gfp` sits under at least one function symbol
/// inside the binder's body. Sums and binders add no depth.
pub fn is_guarded(t: &Forest) -> bool {
    t.subforests().iter().all(|s| match s.node() {
        Node::Gfp(x, rho, body) => occurrences(body)
            .iter()
            .filter(|o| o.name == *x && rho.leq(&o.rho))
            .all(|o| o.depth >= 1),
        _ => true,
    })
}

/// Summands of every sum have pairwise distinct head symbols. Sums of
/// anything but symbol-headed forests fail the check.
pub fn sums_head_disjoint(t: &Forest) -> bool {
    t.subforests().iter().all(|s| match s.node() {
        Node::Sum(_, cs) => {
            let mut heads = BTreeSet::new();
            cs.iter().all(|c| match c.node() {
                Node::Sym(f, _) => heads.insert(f.clone()),
                _ => false,
            })
        }
        _ => true,
    })
}

/// Sequents annotating `gfp` binders, in pre-order.
pub fn gfp_annotations(t: &Forest) -> Vec<Stable> {
    t.subforests()
        .iter()
        .filter_map(|s| match s.node() {
            Node::Gfp(_, rho, _) => Some(rho.clone()),
            _ => None,
        })
        .collect()
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.node() {
            Node::Var(x, rho) => write!(f, "{x}@({rho})"),
            Node::Gfp(x, rho, body) => write!(f, "gfp {x}@({rho}). {body}"),
            Node::Sum(sort, cs) if cs.is_empty() => write!(f, "zero[{sort}]"),
            Node::Sum(_, cs) => {
                f.write_str("sum{")?;
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str("}")
            }
            Node::Sym(sym, cs) => match (sym, cs.as_slice()) {
                (Sym::Var(z), []) => f.write_str(z),
                (Sym::Thunk, [t]) => write!(f, "thunk({t})"),
                (Sym::Inj(i, q), [v]) => write!(f, "inj{i}[{q}]({v})"),
                (Sym::Ea, [e]) => write!(f, "ea({e})"),
                (Sym::Ep, [e]) => write!(f, "ep({e})"),
                (Sym::Lam, [p]) => write!(f, "lam({p})"),
                (Sym::Pair, [a, b]) => write!(f, "pair({a}, {b})"),
                (Sym::Nil, []) => f.write_str("nil"),
                (Sym::CoThunk, [p]) => write!(f, "cothunk({p})"),
                (Sym::App, [v, s]) => write!(f, "{v} :: {s}"),
                (Sym::Proj(i), [s]) => write!(f, "{i} :: {s}"),
                (Sym::BindPos(z, a), [e]) => write!(f, "{z}^{a}+. {e}"),
                (Sym::BindNeg(x, n), [e]) => write!(f, "{x}^{n}. {e}"),
                (Sym::Abort(a), []) => write!(f, "abort[{a}]"),
                (Sym::Copair, [p, q]) => write!(f, "copair({p}, {q})"),
                (Sym::Dlv, [t]) => write!(f, "dlv({t})"),
                (Sym::Ret, [v]) => write!(f, "ret({v})"),
                (Sym::CoRet(x), [s]) => write!(f, "coret {x} ({s})"),
                _ => write!(f, "<malformed {sym:?}>"),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequent::Ctx;
    use alloc::string::ToString;

    fn am() -> Formula {
        Neg::atom("a").into()
    }

    fn rho(names: &[&str]) -> Stable {
        Stable::new(Ctx::from_bindings(names.iter().map(|n| (*n, am()))).unwrap(), am())
    }

    fn coret_nil(x: &str) -> Forest {
        Forest::unary(Sym::CoRet(x.into()), Forest::leaf(Sym::Nil))
    }

    fn x_var(r: Stable) -> Forest {
        Forest::var("X".into(), r).unwrap()
    }

    #[test]
    fn canon_sum_examples() {
        let a = coret_nil("x");
        let b = coret_nil("y");
        assert_eq!(canon_sum(Sort::E, [a.clone(), a.clone()]).unwrap(), a);
        assert_eq!(canon_sum(Sort::V, []).unwrap(), Forest::zero(Sort::V));
        assert_eq!(
            canon_sum(Sort::E, [b.clone(), a.clone()]).unwrap(),
            canon_sum(Sort::E, [a.clone(), b.clone()]).unwrap()
        );
        let nested = canon_sum(Sort::E, [canon_sum(Sort::E, [a.clone(), b.clone()]).unwrap(), a.clone()]).unwrap();
        assert_eq!(nested, canon_sum(Sort::E, [a, b]).unwrap());
    }

    #[test]
    fn canon_sum_rejects_bad_sorts() {
        assert_eq!(canon_sum(Sort::T, []), Err(ForestError::NoSumAt(Sort::T)));
        let r = canon_sum(Sort::V, [coret_nil("x")]);
        assert_eq!(r, Err(ForestError::SortMismatch { expected: Sort::V, found: Sort::E }));
    }

    #[test]
    fn sym_checks_sorts() {
        assert!(Forest::sym(Sym::Ret, vec![Forest::leaf(Sym::Nil)]).is_err());
        assert!(Forest::sym(Sym::Pair, vec![]).is_err());
        assert!(Forest::sym(Sym::Ret, vec![Forest::leaf(Sym::Var("z".into()))]).is_ok());
    }

    #[test]
    fn fpv_examples() {
        let r = rho(&["x"]);
        let r2 = rho(&["x", "y"]);
        assert_eq!(fpv(&x_var(r.clone())), [("X".into(), r.clone())].into_iter().collect());
        let g = Forest::gfp("X".into(), r.clone(), x_var(r2.clone())).unwrap();
        assert!(fpv(&g).is_empty());
        let g = Forest::gfp("X".into(), r.clone(), Forest::var("Y".into(), r2.clone()).unwrap()).unwrap();
        assert_eq!(fpv(&g), [("Y".into(), r2)].into_iter().collect());
    }

    #[test]
    fn well_bound_examples() {
        let r = rho(&["x"]);
        let g = Forest::gfp("X".into(), r.clone(), x_var(rho(&["x", "y"]))).unwrap();
        assert!(is_well_bound(&g));
        let g = Forest::gfp("X".into(), r, x_var(rho(&["y"]))).unwrap();
        assert!(!is_well_bound(&g));
    }

    #[test]
    fn guarded_examples() {
        let r = rho(&["x"]);
        let bare = Forest::gfp("X".into(), r.clone(), x_var(r.clone())).unwrap();
        assert!(!is_guarded(&bare));

        let under = Forest::unary(
            Sym::CoRet("x".into()),
            Forest::binary(
                Sym::App,
                Forest::unary(Sym::Thunk, Forest::unary(Sym::Ea, x_var(r.clone()))),
                Forest::leaf(Sym::Nil),
            ),
        );
        assert!(is_guarded(&Forest::gfp("X".into(), r.clone(), under).unwrap()));

        let summed = canon_sum(Sort::E, [x_var(r.clone()), coret_nil("x")]).unwrap();
        assert!(!is_guarded(&Forest::gfp("X".into(), r, summed).unwrap()));
    }

    #[test]
    fn occurrence_paths_match_depth() {
        let r = rho(&["x"]);
        let t = canon_sum(
            Sort::E,
            [
                x_var(r.clone()),
                Forest::unary(
                    Sym::CoRet("x".into()),
                    Forest::binary(Sym::App, Forest::unary(Sym::Thunk, Forest::unary(Sym::Ea, x_var(r.clone()))), Forest::leaf(Sym::Nil)),
                ),
            ],
        )
        .unwrap();
        let mut depths: Vec<usize> = occurrences(&t).iter().map(|o| o.depth).collect();
        depths.sort();
        assert_eq!(depths, vec![0, 4]);
    }

    #[test]
    fn rendering() {
        let g = Forest::gfp("Y".into(), rho(&["x"]), coret_nil("x")).unwrap();
        assert_eq!(g.to_string(), "gfp Y@(x: a- |- a-). coret x (nil)");
        assert_eq!(Forest::zero(Sort::S).to_string(), "zero[s]");
    }
}
