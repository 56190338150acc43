//! Typing contexts and the inessential-extension order.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::formula::{Formula, Name, Pos};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Binding<F> {
    pub name: Name,
    pub ty: F,
}

/// An ordered list of variable bindings with pairwise distinct names.
///
/// Iteration follows insertion order; inclusion and `<=` treat the context
/// as a set of bindings.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Context<F> {
    bindings: Vec<Binding<F>>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ContextError {
    DuplicateName(Name),
    /// LJP contexts bind only negative formulas and positive atoms.
    NotLeftFormula(Name, Formula),
}

impl fmt::Display for ContextError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContextError::DuplicateName(n) => write!(f, "variable `{n}` bound twice"),
            ContextError::NotLeftFormula(n, ty) => write!(
                f,
                "variable `{n}` bound to `{ty}`: only negative formulas and positive atoms may be assumed"
            ),
        }
    }
}

impl<F> Default for Context<F> {
    fn default() -> Self {
        Context { bindings: Vec::new() }
    }
}

impl<F: Clone + Ord> Context<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_bindings<I, S>(items: I) -> Result<Self, ContextError>
    where
        I: IntoIterator<Item = (S, F)>,
        S: Into<Name>,
    {
        let mut ctx = Context::new();
        for (name, ty) in items {
            ctx.push(name.into(), ty)?;
        }
        Ok(ctx)
    }

    pub fn push(&mut self, name: Name, ty: F) -> Result<(), ContextError> {
        if self.contains(&name) {
            return Err(ContextError::DuplicateName(name));
        }
        self.bindings.push(Binding { name, ty });
        Ok(())
    }

    /// Copy of `self` extended by one binding.
    pub fn with(&self, name: Name, ty: F) -> Result<Self, ContextError> {
        let mut out = self.clone();
        out.push(name, ty)?;
        Ok(out)
    }

    pub fn lookup(&self, name: &str) -> Option<&F> {
        self.bindings.iter().find(|b| &*b.name == name).map(|b| &b.ty)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.bindings.iter().any(|b| &*b.name == name)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Binding<F>> {
        self.bindings.iter()
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }

    /// `|G|`: the set of formulas assumed in the context.
    pub fn formulas(&self) -> BTreeSet<&F> {
        self.bindings.iter().map(|b| &b.ty).collect()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bindings.iter().all(|b| other.lookup(&b.name) == Some(&b.ty))
    }

    /// Inessential extension: `other` only adds bindings whose formulas
    /// already occur in `self`.
    pub fn leq(&self, other: &Self) -> bool {
        self.is_subset(other) && self.formulas() == other.formulas()
    }

    /// Bindings of `other` missing from `self`.
    pub fn difference<'a>(&self, other: &'a Self) -> impl Iterator<Item = &'a Binding<F>> + 'a
    where
        F: 'a,
    {
        let mine: BTreeSet<(Name, F)> = self
            .bindings
            .iter()
            .map(|b| (b.name.clone(), b.ty.clone()))
            .collect();
        other
            .bindings
            .iter()
            .filter(move |b| !mine.contains(&(b.name.clone(), b.ty.clone())))
    }

    /// Multiset of assumed formulas, sorted. Two contexts that differ only
    /// by a renaming of their variables have the same key.
    pub fn alpha_key(&self) -> Vec<F> {
        let mut v: Vec<F> = self.bindings.iter().map(|b| b.ty.clone()).collect();
        v.sort();
        v
    }

    pub fn map<G: Clone + Ord>(&self, mut f: impl FnMut(&F) -> G) -> Context<G> {
        Context {
            bindings: self
                .bindings
                .iter()
                .map(|b| Binding { name: b.name.clone(), ty: f(&b.ty) })
                .collect(),
        }
    }

    /// First name `prefix0`, `prefix1`, ... not bound here.
    pub fn fresh(&self, prefix: &str) -> Name {
        (0usize..)
            .map(|i| format!("{prefix}{i}"))
            .find(|n| !self.contains(n))
            .expect("unbounded name supply")
            .into()
    }
}

impl Context<Formula> {
    /// Checks the LJP polarity discipline on every binding.
    pub fn validate_ljp(&self) -> Result<(), ContextError> {
        for b in &self.bindings {
            if !b.ty.is_left() {
                return Err(ContextError::NotLeftFormula(b.name.clone(), b.ty.clone()));
            }
        }
        Ok(())
    }

    /// Negative hypotheses `x : N`, in context order.
    pub fn negatives(&self) -> impl Iterator<Item = (&Name, &crate::formula::Neg)> {
        self.bindings.iter().filter_map(|b| b.ty.as_neg().map(|n| (&b.name, n)))
    }

    /// Variables bound to the positive atom `atom`, in context order.
    pub fn positive_vars<'a>(&'a self, atom: &'a str) -> impl Iterator<Item = &'a Name> + 'a {
        self.bindings.iter().filter_map(move |b| match &b.ty {
            Formula::Pos(Pos::Atom(a)) if &**a == atom => Some(&b.name),
            _ => None,
        })
    }
}

impl<F: fmt::Display> fmt::Display for Context<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.bindings.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}: {}", b.name, b.ty)?;
        }
        Ok(())
    }
}
