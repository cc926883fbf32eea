//! Reference sequences for identifying computed counts.

use serde::Serialize;

use crate::classify::tables::ALL_TABLES;
use crate::permutation::CountSequence;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KnownSequence {
    pub id: &'static str,
    pub values: [u64; 8],
}

/// Every identified row of the bundled tables, deduplicated by id.
pub fn known_sequences() -> Vec<KnownSequence> {
    let mut out: Vec<KnownSequence> = Vec::new();
    for row in ALL_TABLES.iter().flat_map(|t| t.rows) {
        if let Some(id) = row.oeis {
            if !out.iter().any(|k| k.id == id) {
                out.push(KnownSequence { id, values: row.counts });
            }
        }
    }
    out
}

/// The first reference sequence agreeing with every computed term. A
/// sequence longer than the reference data never matches.
pub fn match_sequence(seq: &CountSequence) -> Option<KnownSequence> {
    if seq.counts.is_empty() {
        return None;
    }
    known_sequences()
        .into_iter()
        .find(|k| seq.counts.len() <= k.values.len() && k.values[..seq.counts.len()] == seq.counts[..])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(counts: &[u64]) -> CountSequence {
        CountSequence { pattern: String::new(), counts: counts.to_vec() }
    }

    #[test]
    fn bundled_ids() {
        let ids: Vec<_> = known_sequences().iter().map(|k| k.id).collect();
        assert_eq!(ids, ["A000108", "A000027", "A000045", "A000984", "A049124"]);
    }

    #[test]
    fn matching() {
        assert_eq!(match_sequence(&seq(&[1, 2, 5, 14, 42, 132, 429, 1430])).unwrap().id, "A000108");
        assert_eq!(match_sequence(&seq(&[1, 2, 6, 20, 71, 264, 1015, 4002])).unwrap().id, "A049124");
        assert!(match_sequence(&seq(&[0, 0, 0])).is_none());
        assert!(match_sequence(&seq(&[1, 2, 6, 20, 71, 264, 1015, 4003])).is_none());
        assert!(match_sequence(&seq(&[])).is_none());
    }
}
