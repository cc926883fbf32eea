//! Encoding of transversals by words over `{0, 1, 2}`.
//!
//! 1s are inserted row by row from the top. At each stage the candidate
//! cells of the top white row are computed locally; the letter records
//! which candidate the transversal uses (0 when only one was available).
//! Decoding with the other variant gives a bijection between the avoiders
//! of the two size-3 POPs on every Ferrers board.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ferrers::{contains_pop_in_board, FerrersBoard, Transversal};
use crate::poset::LabeledPoset;

/// The two size-3 POPs with one isolated vertex labeled 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// `pop 3: c[3>2], i[1]`, i.e. avoiding 123, 213 and 312.
    /// Candidates: first and second white cell.
    Ascending,
    /// `pop 3: c[2>3], i[1]`, i.e. avoiding 132, 231 and 321.
    /// Candidates: first and last white cell.
    Descending,
}

impl Variant {
    pub fn pop(self) -> LabeledPoset {
        let top_first: &[usize] = match self {
            Variant::Ascending => &[3, 2],
            Variant::Descending => &[2, 3],
        };
        LabeledPoset::from_chains(3, &[top_first]).expect("fixed size-3 POP")
    }

    pub fn other(self) -> Variant {
        match self {
            Variant::Ascending => Variant::Descending,
            Variant::Descending => Variant::Ascending,
        }
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ascending" | "asc" => Ok(Variant::Ascending),
            "descending" | "desc" => Ok(Variant::Descending),
            _ => Err(Error::Unknown { kind: "variant", value: s.into() }),
        }
    }
}

/// Letters 0 (forced), 1 (first candidate), 2 (second candidate), one per row
/// from the top.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EncodingWord(pub Vec<u8>);

impl EncodingWord {
    pub fn letters(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for EncodingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for EncodingWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters: Option<Vec<u8>> = s
            .split(',')
            .map(|t| t.trim().parse::<u8>().ok().filter(|&l| l <= 2))
            .collect();
        letters
            .map(EncodingWord)
            .ok_or_else(|| Error::MalformedWord { stage: 0, message: format!("cannot read `{s}`") })
    }
}

/// A partial transversal filled from the top down.
#[derive(Clone, Debug)]
pub struct InsertionState<'a> {
    board: &'a FerrersBoard,
    /// `(column, row)` of each placed 1, in insertion order
    placed: Vec<(usize, usize)>,
    used_columns: u64,
}

impl<'a> InsertionState<'a> {
    pub fn new(board: &'a FerrersBoard) -> Self {
        InsertionState { board, placed: Vec::new(), used_columns: 0 }
    }

    pub fn board(&self) -> &FerrersBoard {
        self.board
    }

    /// Number of 1s placed so far.
    pub fn stage(&self) -> usize {
        self.placed.len()
    }

    pub fn placed(&self) -> &[(usize, usize)] {
        &self.placed
    }

    pub fn is_complete(&self) -> bool {
        self.placed.len() == self.board.num_rows()
    }

    /// The topmost row that still has no 1.
    pub fn top_row(&self) -> Option<usize> {
        self.board.num_rows().checked_sub(self.placed.len()).filter(|&r| r > 0)
    }

    pub fn column_used(&self, c: usize) -> bool {
        self.used_columns & (1 << c) != 0
    }

    /// White cells of the top white row, left to right.
    pub fn white_columns(&self) -> Vec<usize> {
        match self.top_row() {
            Some(r) => (1..=self.board.row_length(r)).filter(|&c| !self.column_used(c)).collect(),
            None => Vec::new(),
        }
    }

    pub fn place(&mut self, column: usize) -> Result<()> {
        let row = self.top_row().ok_or_else(|| Error::Invariant("board already filled".into()))?;
        if column == 0 || column > self.board.row_length(row) || self.column_used(column) {
            return Err(Error::Invariant(format!("cell ({row},{column}) is not white")));
        }
        self.placed.push((column, row));
        self.used_columns |= 1 << column;
        Ok(())
    }

    /// Columns 1..=stage are exactly the used ones.
    pub fn gray_prefix_holds(&self) -> bool {
        (1..=self.placed.len()).all(|c| self.column_used(c))
    }

    pub fn into_transversal(self) -> Result<Transversal> {
        let mut rows = vec![0; self.board.num_rows()];
        for &(c, r) in &self.placed {
            rows[c - 1] = r;
        }
        Transversal::new(self.board.clone(), rows)
    }
}

/// Candidate columns for the next 1, in left-to-right order.
///
/// Two candidates in general: the first two white cells (ascending) or the
/// first and last (descending). A single candidate when the top white row has
/// one cell, or when a placed 1 lies left of the first white column within
/// rows `1..=ℓ(c₂)`, where `c₂` is the second white column and `ℓ` is column
/// height.
pub fn suitable_positions(state: &InsertionState<'_>, variant: Variant) -> Result<Vec<usize>> {
    let cols = state.white_columns();
    let (&first, &last) = match (cols.first(), cols.last()) {
        (Some(f), Some(l)) => (f, l),
        _ => return Err(Error::Invariant("no white cell left in the top row".into())),
    };
    if cols.len() == 1 {
        return Ok(cols);
    }
    let height = state.board.column_height(cols[1]);
    let blocked = state.placed.iter().any(|&(c, r)| c < first && r <= height);
    Ok(match (variant, blocked) {
        (Variant::Ascending, true) => vec![first],
        (Variant::Ascending, false) => vec![first, cols[1]],
        (Variant::Descending, true) => vec![last],
        (Variant::Descending, false) => vec![first, last],
    })
}

/// The encoding word of a transversal avoiding the variant's POP.
pub fn encode(t: &Transversal, variant: Variant) -> Result<EncodingWord> {
    if contains_pop_in_board(t, &variant.pop()) {
        return Err(Error::NotAnAvoider(format!("{t} on {} contains {}", t.board(), variant.pop())));
    }
    let board = t.board();
    let mut state = InsertionState::new(board);
    let mut word = Vec::with_capacity(board.num_rows());
    while let Some(row) = state.top_row() {
        let column = t.column_of_row(row);
        let candidates = suitable_positions(&state, variant)?;
        let single_white = state.white_columns().len() == 1;
        let letter = match candidates.iter().position(|&c| c == column) {
            Some(_) if candidates.len() == 1 => 0,
            Some(i) => i as u8 + 1,
            None => {
                return Err(Error::Invariant(format!(
                    "stage {}: column {column} is not among the candidates {candidates:?}",
                    state.stage() + 1
                )))
            }
        };
        word.push(letter);
        state.place(column)?;
        if single_white && !state.gray_prefix_holds() {
            return Err(Error::Invariant(format!("gray prefix broken after stage {}", state.stage())));
        }
    }
    Ok(EncodingWord(word))
}

/// The transversal avoiding the variant's POP with the given encoding word.
pub fn decode(word: &EncodingWord, board: &FerrersBoard, variant: Variant) -> Result<Transversal> {
    if word.0.len() != board.num_rows() {
        return Err(Error::MalformedWord {
            stage: 0,
            message: format!("word has {} letters, board has {} rows", word.0.len(), board.num_rows()),
        });
    }
    if !board.supports_transversal() && board.num_rows() > 0 {
        return Err(Error::InvalidBoard(format!("{board} has no transversal")));
    }
    let mut state = InsertionState::new(board);
    for (i, &letter) in word.0.iter().enumerate() {
        let candidates = suitable_positions(&state, variant)?;
        let column = match (candidates.len(), letter) {
            (1, 0) => candidates[0],
            (2, 1) | (2, 2) => candidates[letter as usize - 1],
            (1, _) => {
                return Err(Error::MalformedWord { stage: i + 1, message: format!("letter {letter} at a forced stage") })
            }
            (_, 0) => return Err(Error::MalformedWord { stage: i + 1, message: "letter 0 at a free stage".into() }),
            _ => return Err(Error::MalformedWord { stage: i + 1, message: format!("letter {letter} out of range") }),
        };
        state.place(column)?;
    }
    state.into_transversal()
}

/// Re-encodes a transversal avoiding `from`'s POP as one avoiding the other.
pub fn transfer(t: &Transversal, from: Variant) -> Result<Transversal> {
    decode(&encode(t, from)?, t.board(), from.other())
}

/// Ascending avoiders to descending avoiders.
pub fn theorem16_map(t: &Transversal) -> Result<Transversal> {
    transfer(t, Variant::Ascending)
}

/// Inverse of [`theorem16_map`].
pub fn theorem16_inverse(t: &Transversal) -> Result<Transversal> {
    transfer(t, Variant::Descending)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn board(s: &str) -> FerrersBoard {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example() {
        let b = board("(5,5,4,4,3)");
        let t = Transversal::new(b.clone(), vec![4, 5, 3, 1, 2]).unwrap();
        let word = encode(&t, Variant::Ascending).unwrap();
        assert_eq!(word.to_string(), "2,1,0,2,0");
        let image = decode(&word, &b, Variant::Descending).unwrap();
        assert_eq!(image.to_string(), "41532");
        assert_eq!(theorem16_inverse(&image).unwrap(), t);
    }

    #[test]
    fn fresh_and_forced_states() {
        let b = FerrersBoard::square(3);
        let s = InsertionState::new(&b);
        assert_eq!(suitable_positions(&s, Variant::Ascending).unwrap(), vec![1, 2]);
        assert_eq!(suitable_positions(&s, Variant::Descending).unwrap(), vec![1, 3]);
        let b = board("(2,1)");
        let s = InsertionState::new(&b);
        assert_eq!(suitable_positions(&s, Variant::Ascending).unwrap(), vec![1]);
        let one = FerrersBoard::square(1);
        let t = Transversal::new(one.clone(), vec![1]).unwrap();
        assert_eq!(encode(&t, Variant::Ascending).unwrap().to_string(), "0");
    }

    #[test]
    fn third_stage_of_example_is_forced() {
        let b = board("(5,5,4,4,3)");
        let mut s = InsertionState::new(&b);
        s.place(2).unwrap();
        s.place(1).unwrap();
        assert_eq!(suitable_positions(&s, Variant::Ascending).unwrap().len(), 1);
    }

    #[test]
    fn malformed_words() {
        let b = board("(2,1)");
        let bad = EncodingWord(vec![1, 0]);
        assert!(matches!(decode(&bad, &b, Variant::Ascending), Err(Error::MalformedWord { stage: 1, .. })));
        let b = FerrersBoard::square(2);
        let bad = EncodingWord(vec![0, 0]);
        assert!(matches!(decode(&bad, &b, Variant::Ascending), Err(Error::MalformedWord { stage: 1, .. })));
        assert!("1,3".parse::<EncodingWord>().is_err());
    }

    #[test]
    fn encoding_requires_an_avoider() {
        let t = Transversal::from_permutation(&"123".parse().unwrap());
        assert!(matches!(encode(&t, Variant::Ascending), Err(Error::NotAnAvoider(_))));
    }
}
