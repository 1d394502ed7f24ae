//! Exact engine for short partizan game forms.
//!
//! Forms are hash-consed into an [`arena::Arena`] and addressed by
//! [`arena::FormId`]. On top of the arena sit:
//!
//! - [`algebra`]: disjunctive sum, conjugate, adjoint;
//! - [`outcome`]: normal- and misère-play outcome solving;
//! - [`family`]: the named form families (move chains, `hat`, `ostar`,
//!   hooks);
//! - [`notation`]: a parser and renderer for brace/family notation;
//! - [`closure`]: day-by-day closure enumeration under sums,
//!   conjugates, and option assembly;
//! - [`universe`]: form classification, universe descriptions, and
//!   bounded membership tests;
//! - [`order`]: the budgeted universal-order comparator with
//!   replayable refutation witnesses, plus outcome-based
//!   distinguishing;
//! - [`sampling`]: seeded random form generation;
//! - [`replication`]: named end-to-end verification checks with
//!   JSON-serializable reports.
//!
//! All recursions run over explicit work lists or memo tables sized by
//! the arena, so deep forms do not overflow the stack, and every
//! fallible operation reports [`error::EngineError`] rather than
//! panicking.

pub mod algebra;
pub mod arena;
pub mod closure;
pub mod error;
pub mod family;
pub mod notation;
pub mod order;
pub mod outcome;
pub mod replication;
pub mod sampling;
pub mod universe;

pub use algebra::{adjoint, conjugate, sum, sum_all};
pub use arena::{Arena, FormId};
pub use closure::{closure_enumerate, ClosureResult, DEFAULT_WIDTH};
pub use error::EngineError;
pub use family::{construct_family, hat, moves, ostar, zeta, FamilyKind};
pub use notation::{parse, render, render_with, ParseError, ParseErrorKind, RenderOptions};
pub use order::{
    describe_verdict, distinguish, equal_bounded, geq_absolute, replay_witness, Distinguisher,
    MaintenanceClause, RefutationWitness, Verdict, WitnessKind,
};
pub use outcome::{
    geq_np, outcome, outcome_partial, Convention, OutcomeClass, PartialOutcome, Side,
};
pub use replication::{run_check, CheckConfig, CheckReport, CheckStatus, DetailRow, CHECK_IDS};
pub use sampling::FormSampler;
pub use universe::{
    classify_form, enumerate_forms, AtomicStream, Budget, FormFlags, Membership, MembershipMode,
    UniverseName, UniverseSpec,
};
