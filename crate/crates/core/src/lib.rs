//! Coinductive-style proof search for the polarized focused sequent calculus
//! LJP, and through the negative translation for LJT (full intuitionistic
//! propositional logic).
//!
//! The pipeline for a logical sequent is: build the finitary representation
//! of its solution space ([`Engine::finrep_closed`]), then run a recursive
//! predicate over it ([`Engine::inhabited`], [`Engine::finite`]) or enumerate
//! and count its members.
//!
//! The crate is `no_std` and needs only `alloc`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod context;
pub mod decide;
pub mod decontract;
pub mod forest;
pub mod formula;
pub mod ljt;
pub mod oracle;
pub mod search;
pub mod sequent;
pub mod term;
pub mod typing;

pub use context::{Binding, Context, ContextError};
pub use decide::{CountError, SeqPredicate};
pub use decontract::{decontract_members, NotAnExtension};
pub use forest::{canon_sum, fpv, is_guarded, is_well_bound, Forest, ForestError, Node, Sym};
pub use formula::{Formula, IFormula, Name, Neg, Pos};
pub use oracle::oracle_search;
pub use search::{Engine, FixEnv, FixEnvError, MemoStats};
pub use sequent::{Ctx, Sequent, SequentError, Sort, Stable, Weight};
pub use term::{CoTerm, Expr, Index, LjpTerm, Spine, Term, Value};
pub use typing::{check, check_verbose, infer, TypeError};
