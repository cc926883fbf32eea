//! Avoidance of partially ordered patterns (POPs) in permutations and in
//! transversals of Ferrers boards.
//!
//! The crate is organised bottom-up:
//!
//! * [`poset`]: labeled posets, their symmetries, sums and linear extensions;
//! * [`permutation`]: permutations, occurrence search, avoider enumeration and ranks;
//! * [`ferrers`]: Ferrers boards, transversals and shape-Wilf sweeps;
//! * [`bijections`]: explicit bijections between avoider classes, each with its inverse;
//! * [`classify`]: families of chain-component POPs of size 3 to 5 and their Wilf classes;
//! * [`cli`]: the batch front end used by the `popwilf` binary.
//!
//! The runnable programs under `examples/` walk through each of these in turn.

pub mod bijections;
pub mod classify;
pub mod cli;
pub mod error;
pub mod ferrers;
pub mod permutation;
pub mod poset;

pub use error::{Error, Result};
pub use ferrers::{FerrersBoard, Transversal};
pub use permutation::{CountSequence, Permutation};
pub use poset::{LabelSet, LabeledPoset};
