//! A small engine for computing with finite categories: comma categories and
//! the comonad they induce on squares, colax coalgebras for that comonad with
//! every coherence equation run as an executable check, Kleisli and
//! Eilenberg–Moore constructions, liftings and distributive laws between the
//! induced comonads, and adjunction checks for the normal case.
//!
//! Everything is materialized: categories are finite tables of objects,
//! morphisms and composites, functors are finite maps, and every law is
//! verified pointwise with a witness reported at the first failing site.
//! All collections iterate in a deterministic order so constructions are
//! reproducible byte for byte.

pub mod catalog;
pub mod category;
pub mod coalgebra;
pub mod comma;
pub mod comonad;
pub mod doc;
pub mod dot;
pub mod liftings;
pub mod normal;
pub mod report;

pub use category::{ColaxCell, FinCategory, Functor, NatTrans, SquareTwoCell};
pub use report::{CheckItem, CheckReport};

/// Default cap on the number of morphisms any single materialized category
/// may hold. Iterated comma constructions square quickly; the cap turns a
/// runaway construction into a clean error instead of an OOM.
pub const DEFAULT_MORPHISM_BUDGET: usize = 20_000;

/// Errors shared by all constructions in this crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("unknown object `{0}` in category `{1}`")]
    UnknownObject(String, String),
    #[error("unknown morphism `{0}` in category `{1}`")]
    UnknownMorphism(String, String),
    #[error("duplicate identifier `{0}` in category `{1}`")]
    DuplicateId(String, String),
    #[error("boundary mismatch: {0}")]
    Boundary(String),
    #[error("size budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("validation failed: {0}")]
    Invalid(String),
    #[error("sampling exhausted after {0} attempts: {1}")]
    SamplingExhausted(usize, String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
