//! Constructive bijections between avoider sets, each with its inverse.

pub mod coloring;
pub mod encoding;
pub mod pairing;
pub mod theorem13;
pub mod verify;
pub mod west;

pub use coloring::{Theorem12Pair, Theorem14Triple};
pub use encoding::{
    decode, encode, suitable_positions, theorem16_inverse, theorem16_map, EncodingWord, InsertionState, Variant,
};
pub use pairing::{rank_bijection, PairingCache, RankPairing};
pub use theorem13::Theorem13Pair;
pub use verify::{
    verify_theorem12, verify_theorem13, verify_theorem14, verify_theorem16, verify_west, BijectionReport, InstanceRecord,
    SizeSummary,
};
pub use west::WestPair;
