//! Default inner bijection: match avoiders of two POPs by lexicographic rank.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::ferrers::{board_avoiders, FerrersBoard, Transversal};
use crate::poset::LabeledPoset;

/// The `i`-th avoider of `left` paired with the `i`-th avoider of `right`.
#[derive(Clone, Debug)]
pub struct RankPairing {
    board: FerrersBoard,
    forward: HashMap<Vec<usize>, Vec<usize>>,
    backward: HashMap<Vec<usize>, Vec<usize>>,
}

impl RankPairing {
    pub fn board(&self) -> &FerrersBoard {
        &self.board
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    /// Image of an avoider of `left`, given as a row assignment.
    pub fn forward_rows(&self, rows: &[usize]) -> Option<&[usize]> {
        self.forward.get(rows).map(Vec::as_slice)
    }

    pub fn backward_rows(&self, rows: &[usize]) -> Option<&[usize]> {
        self.backward.get(rows).map(Vec::as_slice)
    }

    pub fn forward(&self, t: &Transversal) -> Result<Transversal> {
        let rows = self.forward_rows(t.rows()).ok_or_else(|| Error::NotAnAvoider(t.to_string()))?;
        Transversal::new(self.board.clone(), rows.to_vec())
    }

    pub fn backward(&self, t: &Transversal) -> Result<Transversal> {
        let rows = self.backward_rows(t.rows()).ok_or_else(|| Error::NotAnAvoider(t.to_string()))?;
        Transversal::new(self.board.clone(), rows.to_vec())
    }
}

/// Pairs the avoiders of `left` and `right` on `board` in lexicographic order.
pub fn rank_bijection(board: &FerrersBoard, left: &LabeledPoset, right: &LabeledPoset) -> Result<RankPairing> {
    let a = board_avoiders(board, left);
    let b = board_avoiders(board, right);
    if a.len() != b.len() {
        return Err(Error::NotShapeWilf { board: board.to_string(), left: a.len(), right: b.len() });
    }
    let mut forward = HashMap::with_capacity(a.len());
    let mut backward = HashMap::with_capacity(a.len());
    for (x, y) in a.into_iter().zip(b) {
        forward.insert(x.rows().to_vec(), y.rows().to_vec());
        backward.insert(y.rows().to_vec(), x.rows().to_vec());
    }
    Ok(RankPairing { board: board.clone(), forward, backward })
}

/// Thread-safe memo of rank pairings keyed by board and POP pair.
#[derive(Default, Debug)]
pub struct PairingCache {
    entries: Mutex<HashMap<(FerrersBoard, LabeledPoset, LabeledPoset), Arc<RankPairing>>>,
}

impl PairingCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, board: &FerrersBoard, left: &LabeledPoset, right: &LabeledPoset) -> Result<Arc<RankPairing>> {
        let key = (board.clone(), left.clone(), right.clone());
        if let Some(hit) = self.entries.lock().expect("cache lock").get(&key) {
            return Ok(Arc::clone(hit));
        }
        let pairing = Arc::new(rank_bijection(board, left, right)?);
        self.entries.lock().expect("cache lock").insert(key, Arc::clone(&pairing));
        Ok(pairing)
    }
}
