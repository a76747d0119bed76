//! Independent checks: exact cycle search, full-property verification and
//! exhaustive minimum-chord search on small cycles.

mod cycle;
mod search;
mod symmetry;
mod verify;

pub use cycle::{exists_cycle, find_cycle, CycleFinder, CycleSearch};
pub use search::{brute_force_c, SearchConfig, MAX_SEARCH_N, SearchOutcome, SearchStatus};
pub use symmetry::{canonical_chords, dihedral_maps, relabel};
pub use verify::{no_witnesses, required_lengths, verify_property, LengthEntry, LengthStatus, PropertyReport, Verdict, VerifyConfig};
