//! The explicit chord construction: fan-shaped blocks chained at the
//! vertices `q(x) = b^x + 2x`, truncated to `n` vertices, plus small tail
//! gadgets for the longest lengths.

mod block;
mod digits;
mod full;
mod plan;
mod tail;

pub use block::{block_path, build_h, digit_path, q_value, Block, BlockChain};
pub use digits::DigitVector;
pub use full::{construct, FullConstruction, Witness};
pub use plan::{compute_alpha, ConstructionPlan, Provenance};
pub use tail::{plan_tail, Gadget, TailAssignment};
