//! Ferrers boards in French notation and pattern avoidance by transversals.
//!
//! Rows are numbered from the bottom (row 1, the longest) and columns from
//! the left. A transversal is written as the row of its 1 in each column.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::permutation::{Matcher, Permutation};
use crate::poset::LabeledPoset;

/// Default cap on board size for exhaustive sweeps.
pub const DEFAULT_MAX_BOARD: usize = 6;

/// Weakly decreasing positive row lengths, bottom row first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FerrersBoard {
    rows: Vec<usize>,
}

impl FerrersBoard {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.contains(&0) {
            return Err(Error::InvalidBoard(format!("{rows:?} has an empty row")));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidBoard(format!("{rows:?} is not weakly decreasing")));
        }
        Ok(FerrersBoard { rows })
    }

    pub fn square(n: usize) -> Self {
        FerrersBoard { rows: vec![n; n] }
    }

    pub fn row_lengths(&self) -> &[usize] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_columns(&self) -> usize {
        self.rows.first().copied().unwrap_or(0)
    }

    /// Length of row `r` (1-based); 0 outside the board.
    pub fn row_length(&self, r: usize) -> usize {
        if r == 0 { 0 } else { self.rows.get(r - 1).copied().unwrap_or(0) }
    }

    /// Number of cells in column `c` (1-based).
    pub fn column_height(&self, c: usize) -> usize {
        self.rows.iter().take_while(|&&l| l >= c).count()
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        col >= 1 && col <= self.row_length(row)
    }

    pub fn is_square(&self) -> bool {
        self.rows.iter().all(|&l| l == self.rows.len())
    }

    /// True iff the board has as many columns as rows and `λ_i ≥ n + 1 - i`.
    pub fn supports_transversal(&self) -> bool {
        let n = self.rows.len();
        self.num_columns() == n && self.rows.iter().enumerate().all(|(i, &l)| l + i >= n)
    }
}

impl fmt::Display for FerrersBoard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(|l| l.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for FerrersBoard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FerrersBoard{self}")
    }
}

impl FromStr for FerrersBoard {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().strip_prefix('(').and_then(|t| t.strip_suffix(')'));
        let inner = inner.ok_or_else(|| Error::InvalidBoard(format!("`{s}` is not of the form (a,b,...)")))?;
        if inner.trim().is_empty() {
            return Ok(FerrersBoard { rows: Vec::new() });
        }
        let rows: std::result::Result<Vec<usize>, _> = inner.split(',').map(|t| t.trim().parse()).collect();
        FerrersBoard::new(rows.map_err(|_| Error::InvalidBoard(format!("cannot read `{s}`")))?)
    }
}

impl Serialize for FerrersBoard {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FerrersBoard {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?.parse().map_err(serde::de::Error::custom)
    }
}

/// A filling with one 1 in every row and column; `rows[c - 1]` is the row of
/// the 1 in column `c`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Transversal {
    board: FerrersBoard,
    rows: Vec<usize>,
}

impl Transversal {
    pub fn new(board: FerrersBoard, rows: Vec<usize>) -> Result<Self> {
        let n = board.num_rows();
        if rows.len() != board.num_columns() || rows.len() != n {
            return Err(Error::InvalidBoard(format!("{} columns given for board {board}", rows.len())));
        }
        let mut seen = vec![false; n + 1];
        for (c, &r) in rows.iter().enumerate() {
            if r == 0 || r > n || seen[r] {
                return Err(Error::InvalidBoard(format!("rows {rows:?} are not a bijection onto 1..={n}")));
            }
            if !board.contains_cell(r, c + 1) {
                return Err(Error::InvalidBoard(format!("cell ({r},{}) lies outside {board}", c + 1)));
            }
            seen[r] = true;
        }
        Ok(Transversal { board, rows })
    }

    /// The transversal of the square board given by a permutation.
    pub fn from_permutation(pi: &Permutation) -> Self {
        Transversal { board: FerrersBoard::square(pi.len()), rows: pi.values().to_vec() }
    }

    pub fn board(&self) -> &FerrersBoard {
        &self.board
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Column holding the 1 of row `r`.
    pub fn column_of_row(&self, r: usize) -> usize {
        self.rows.iter().position(|&x| x == r).expect("row present") + 1
    }

    pub fn to_permutation(&self) -> Permutation {
        Permutation::new(self.rows.clone()).expect("transversal rows form a permutation")
    }
}

impl fmt::Display for Transversal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_permutation())
    }
}

/// All boards with `n` rows and `n` columns that admit a transversal, in
/// lexicographic order of their row lengths.
pub fn boards(n: usize) -> Vec<FerrersBoard> {
    fn rec(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<FerrersBoard>) {
        let i = prefix.len() + 1;
        if i > n {
            out.push(FerrersBoard { rows: prefix.clone() });
            return;
        }
        let hi = prefix.last().copied().unwrap_or(n);
        let lo = if i == 1 { n } else { n + 1 - i };
        for v in lo..=hi {
            prefix.push(v);
            rec(n, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Every transversal of `board`, lexicographic by row assignment.
pub fn transversals(board: &FerrersBoard) -> impl Iterator<Item = Transversal> + '_ {
    let mut all = Vec::new();
    if board.supports_transversal() || board.num_rows() == 0 {
        let mut rows = Vec::with_capacity(board.num_rows());
        fill_columns(board, &mut rows, 0, &mut |rows| {
            all.push(Transversal { board: board.clone(), rows: rows.to_vec() });
            true
        });
    }
    all.into_iter()
}

/// Depth-first over columns; `keep` may prune a partial filling.
fn fill_columns(board: &FerrersBoard, rows: &mut Vec<usize>, used: u32, visit: &mut dyn FnMut(&[usize]) -> bool) {
    let n = board.num_rows();
    if rows.len() == n {
        visit(rows);
        return;
    }
    let c = rows.len() + 1;
    for r in 1..=board.column_height(c) {
        if used & (1 << r) == 0 {
            rows.push(r);
            fill_columns(board, rows, used | (1 << r), visit);
            rows.pop();
        }
    }
}

/// Occurrence of `p` in the rows `rows[..=end]` ending at column `end + 1`
/// whose bounding rectangle lies in `board`.
fn occurs_in_board_ending_at(m: &Matcher, board: &FerrersBoard, rows: &[usize], end: usize) -> bool {
    let h = board.column_height(end + 1);
    let mut seq = [0usize; 32];
    let mut len = 0;
    for &r in &rows[..end] {
        if r <= h {
            seq[len] = r;
            len += 1;
        }
    }
    seq[len] = rows[end];
    m.occurs_ending_at(&seq[..=len], len, m.size())
}

fn matcher_in_board(m: &Matcher, t: &Transversal) -> bool {
    (0..t.len()).any(|end| occurs_in_board_ending_at(m, &t.board, &t.rows, end))
}

/// Containment of a classical pattern with the whole rectangle inside the board.
pub fn contains_classical_in_board(t: &Transversal, sigma: &Permutation) -> bool {
    matcher_in_board(&Matcher::new(&LabeledPoset::from_classical(sigma)), t)
}

/// Containment of some member of `pattern_set(p)` inside the board.
pub fn contains_pop_in_board(t: &Transversal, p: &LabeledPoset) -> bool {
    if p.size() == 0 {
        return true;
    }
    matcher_in_board(&Matcher::new(p), t)
}

/// Witness returned by [`essential_occurrence`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EssentialOccurrence {
    /// rows of the 1s in the non-isolated columns, ascending
    pub rows: Vec<usize>,
    /// one column per label, ascending
    pub columns: Vec<usize>,
}

/// Searches for an occurrence of `st(p \ I)` in the columns reserved for the
/// non-isolated labels, with enough spare columns around them to host the
/// isolated labels. Only square boards are accepted.
pub fn essential_occurrence(t: &Transversal, p: &LabeledPoset) -> Result<Option<EssentialOccurrence>> {
    if !t.board.is_square() {
        return Err(Error::NonSquareBoard(t.board.to_string()));
    }
    let r = p.size();
    let n = t.len();
    let isolated = p.isolated_vertices();
    let core_labels: Vec<usize> = (1..=r).filter(|&l| !isolated.contains(l)).collect();
    let q = p.restrict(p.labels().difference(isolated))?;
    // gaps[j]: isolated labels strictly before core label j (j = len: after the last)
    let mut gaps = vec![0usize; core_labels.len() + 1];
    let mut j = 0;
    for l in 1..=r {
        if isolated.contains(l) {
            gaps[j] += 1;
        } else {
            j += 1;
        }
    }
    if r > n {
        return Ok(None);
    }
    let m = Matcher::new(&q);
    let mut cols = Vec::with_capacity(core_labels.len());
    if !place_core(&m, &t.rows, &gaps, 0, 0, &mut cols) {
        return Ok(None);
    }
    // interleave isolated columns as early as possible
    let mut columns = Vec::with_capacity(r);
    let mut next = 0usize;
    for (idx, gap) in gaps.iter().enumerate() {
        for _ in 0..*gap {
            columns.push(next + 1);
            next += 1;
        }
        if let Some(&c) = cols.get(idx) {
            columns.push(c + 1);
            next = c + 1;
        }
    }
    let mut rows: Vec<usize> = cols.iter().map(|&c| t.rows[c]).collect();
    rows.sort_unstable();
    Ok(Some(EssentialOccurrence { rows, columns }))
}

fn place_core(m: &Matcher, rows: &[usize], gaps: &[usize], label: usize, start: usize, cols: &mut Vec<usize>) -> bool {
    let k = m.size();
    let n = rows.len();
    if label == k {
        // room for the isolated labels after the last core column
        let last = cols.last().map_or(0, |&c| c + 1);
        return n - last >= gaps[k];
    }
    let first = start + gaps[label];
    for c in first..n {
        cols.push(c);
        let vals: Vec<usize> = cols.iter().map(|&x| rows[x]).collect();
        if m.consistent_prefix(&vals) && place_core(m, rows, gaps, label + 1, c + 1, cols) {
            return true;
        }
        cols.pop();
    }
    false
}

/// `|S_λ(p)|`, by depth-first filling with pruning.
pub fn count_board_avoiders(board: &FerrersBoard, p: &LabeledPoset) -> u64 {
    let m = Matcher::new(p);
    let mut count = 0u64;
    if board.num_rows() == 0 {
        return if p.size() == 0 { 0 } else { 1 };
    }
    if !board.supports_transversal() {
        return 0;
    }
    let mut rows = Vec::with_capacity(board.num_rows());
    count_fill(board, &m, &mut rows, 0, &mut count);
    count
}

fn count_fill(board: &FerrersBoard, m: &Matcher, rows: &mut Vec<usize>, used: u32, count: &mut u64) {
    let n = board.num_rows();
    if let Some(end) = rows.len().checked_sub(1) {
        if occurs_in_board_ending_at(m, board, rows, end) {
            return;
        }
    }
    if rows.len() == n {
        *count += 1;
        return;
    }
    let c = rows.len() + 1;
    for r in 1..=board.column_height(c) {
        if used & (1 << r) == 0 {
            rows.push(r);
            count_fill(board, m, rows, used | (1 << r), count);
            rows.pop();
        }
    }
}

/// The avoiders of `p` on `board`, lexicographic by row assignment.
pub fn board_avoiders(board: &FerrersBoard, p: &LabeledPoset) -> Vec<Transversal> {
    transversals(board).filter(|t| !contains_pop_in_board(t, p)).collect()
}

/// One board of a shape-Wilf sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoardComparison {
    pub board: FerrersBoard,
    pub left: u64,
    pub right: u64,
    pub equal: bool,
}

/// Per-board avoider counts for two POPs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeWilfReport {
    pub left: LabeledPoset,
    pub right: LabeledPoset,
    pub n_max: usize,
    pub boards: Vec<BoardComparison>,
    pub verdict: bool,
    pub counterexample: Option<FerrersBoard>,
}

impl ShapeWilfReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Compares `|S_λ(p)|` and `|S_λ(p′)|` on every board of size `1..=n_max`.
pub fn shape_wilf_check(p: &LabeledPoset, q: &LabeledPoset, n_max: usize) -> Result<ShapeWilfReport> {
    shape_wilf_check_with_budget(p, q, n_max, DEFAULT_MAX_BOARD)
}

pub fn shape_wilf_check_with_budget(
    p: &LabeledPoset,
    q: &LabeledPoset,
    n_max: usize,
    limit: usize,
) -> Result<ShapeWilfReport> {
    if n_max > limit || n_max > 10 {
        return Err(Error::BudgetExceeded { what: "board size", requested: n_max, limit: limit.min(10) });
    }
    let all: Vec<FerrersBoard> = (1..=n_max).flat_map(boards).collect();
    let rows: Vec<BoardComparison> = all
        .into_par_iter()
        .map(|board| {
            let left = count_board_avoiders(&board, p);
            let right = count_board_avoiders(&board, q);
            BoardComparison { board, left, right, equal: left == right }
        })
        .collect();
    let counterexample = rows.iter().find(|r| !r.equal).map(|r| r.board.clone());
    Ok(ShapeWilfReport {
        left: p.clone(),
        right: q.clone(),
        n_max,
        verdict: counterexample.is_none(),
        counterexample,
        boards: rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn board(s: &str) -> FerrersBoard {
        s.parse().unwrap()
    }

    fn pop(s: &str) -> LabeledPoset {
        s.parse().unwrap()
    }

    #[test]
    fn board_lists() {
        assert_eq!(boards(1), vec![board("(1)")]);
        assert_eq!(boards(2), vec![board("(2,1)"), board("(2,2)")]);
        assert!(boards(5).contains(&board("(5,5,4,3,3)")));
        let catalan = [1, 2, 5, 14, 42, 132];
        for (n, c) in (1..=6).zip(catalan) {
            assert_eq!(boards(n).len(), c);
        }
    }

    #[test]
    fn board_geometry() {
        let b = board("(5,5,4,3,3)");
        assert_eq!(b.column_height(1), 5);
        assert_eq!(b.column_height(4), 3);
        assert_eq!(b.column_height(5), 2);
        assert!(b.supports_transversal());
        assert!(!board("(3,1)").supports_transversal());
        assert!("(2,3)".parse::<FerrersBoard>().is_err());
        assert_eq!(b.to_string(), "(5,5,4,3,3)");
    }

    #[test]
    fn transversal_examples() {
        assert_eq!(transversals(&FerrersBoard::square(3)).count(), 6);
        let forced: Vec<_> = transversals(&board("(2,1)")).collect();
        assert_eq!(forced.len(), 1);
        assert_eq!(forced[0].rows(), &[2, 1]);
        let t = Transversal::new(board("(5,5,4,3,3)"), vec![4, 5, 2, 3, 1]).unwrap();
        assert_eq!(t.to_string(), "45231");
        assert!(Transversal::new(board("(5,5,4,3,3)"), vec![5, 4, 3, 2, 1]).is_ok());
        assert!(Transversal::new(board("(5,5,4,3,3)"), vec![1, 2, 3, 4, 5]).is_err());
    }

    #[test]
    fn transversal_totals_match_product_formula() {
        for n in 1..=6 {
            for b in boards(n) {
                let product: usize = (1..=n).map(|i| b.row_length(i) - (n - i)).product();
                assert_eq!(transversals(&b).count(), product, "{b}");
            }
            let square: usize = (1..=n).product();
            assert_eq!(transversals(&FerrersBoard::square(n)).count(), square);
        }
    }

    #[test]
    fn board_containment_examples() {
        let t = Transversal::new(board("(5,5,4,3,3)"), vec![4, 5, 2, 3, 1]).unwrap();
        // columns 1,2 hold rows 4,5; cell (5,2) is inside since row 5 has length 3
        assert!(contains_classical_in_board(&t, &"12".parse().unwrap()));
        let too_big: Permutation = "123456".parse().unwrap();
        assert!(!contains_classical_in_board(&t, &too_big));
        let t = Transversal::new(board("(5,5,4,4,3)"), vec![4, 5, 3, 1, 2]).unwrap();
        let asc = pop("pop 3: c[3>2], i[1]");
        let desc = pop("pop 3: c[2>3], i[1]");
        assert!(!contains_pop_in_board(&t, &asc));
        assert!(contains_pop_in_board(&t, &desc));
    }

    #[test]
    fn essential_occurrence_examples() {
        let single = LabeledPoset::antichain(1);
        let t = Transversal::from_permutation(&"1".parse().unwrap());
        let occ = essential_occurrence(&t, &single).unwrap().unwrap();
        assert_eq!(occ.columns, vec![1]);
        assert!(occ.rows.is_empty());
        let t = Transversal::new(board("(2,1)"), vec![2, 1]).unwrap();
        assert!(matches!(essential_occurrence(&t, &single), Err(Error::NonSquareBoard(_))));
        let p = pop("pop 3: c[2>3], i[1]");
        let t = Transversal::from_permutation(&"4132".parse().unwrap());
        let occ = essential_occurrence(&t, &p).unwrap().unwrap();
        assert_eq!(occ.columns, vec![1, 3, 4]);
        assert_eq!(occ.rows, vec![2, 3]);
    }

    #[test]
    fn shape_wilf_examples() {
        let p = pop("pop 3: c[3>2], i[1]");
        let q = pop("pop 3: c[2>3], i[1]");
        let report = shape_wilf_check(&p, &q, 4).unwrap();
        assert!(report.verdict);
        let same = shape_wilf_check(&p, &p, 3).unwrap();
        assert!(same.verdict);
        // Wilf-equivalent by reversal, but not shape-Wilf-equivalent
        let a = pop("pop 3: c[1>3], i[2]");
        let b = pop("pop 3: c[3>1], i[2]");
        assert!(shape_wilf_check(&a, &b, 4).unwrap().verdict);
        let report = shape_wilf_check(&a, &b, 5).unwrap();
        assert!(!report.verdict);
        assert_eq!(report.counterexample.unwrap().to_string(), "(5,5,5,4,3)");
        assert!(shape_wilf_check(&p, &q, 7).is_err());
    }
}
