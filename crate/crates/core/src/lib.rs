//! Combinatorial calculus for Legendrian fronts in plat position.
//!
//! A front is stored as a word of events (left cusps, right cusps,
//! crossings) read left to right. Everything else — Reidemeister moves,
//! surgeries, Kirby diagrams, cobordisms, the Chekanov-Eliashberg DGA —
//! operates on that word.

pub mod poly;
pub mod front;
pub mod jones;
pub mod moves;
pub mod dga;
pub mod kirby;
pub mod cobordism;
pub mod random;
pub mod verify;

pub use front::diagram::{Event, FrontDiagram};
pub use front::trace::Trace;
pub use poly::LaurentPoly;

/// Errors produced anywhere in the crate. Parse errors carry the 1-based
/// event index (or line/column for DSL text) so the CLI can point at the
/// offending token.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error at line {line}, col {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("invalid front at event {index}: {msg}")]
    Semantic { index: usize, msg: String },
    #[error("move not applicable at event {index}: {msg}")]
    MoveFailed { index: usize, msg: String },
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
