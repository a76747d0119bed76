//! Chord sets on a cycle `C_n` such that every cycle length `l` in
//! `max(k,3)..=n` is realized by a cycle through exactly `k` chords.
//!
//! [`construct`] builds the chord set from base-`b` digit blocks and small
//! tail gadgets; [`oracle`] checks it independently by exhaustive search;
//! [`bounds`] tabulates lower and upper bounds on the minimum chord count.

pub mod arith;
pub mod bounds;
pub mod construct;
pub mod error;
pub mod export;
pub mod graph;
pub mod oracle;

pub use construct::{construct, ConstructionPlan, FullConstruction, Provenance, Witness};
pub use error::{Error, Result};
pub use graph::{validate_witness, Chord, ChordedCycle, EdgeKind, ValidationReport, WitnessCycle};
