//! Permutations, POP occurrence search, avoider counting and ranks.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poset::LabeledPoset;

/// Default cap on the length of permutations enumerated exhaustively.
pub const DEFAULT_MAX_N: usize = 9;

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{values:?} is not a permutation of 1..={n}")));
            }
            seen[v] = true;
        }
        Ok(Permutation(values))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// The permutation order-isomorphic to a sequence of distinct numbers.
    pub fn standardize<T: Ord>(seq: &[T]) -> Self {
        let mut order: Vec<usize> = (0..seq.len()).collect();
        order.sort_by(|&a, &b| seq[a].cmp(&seq[b]));
        let mut values = vec![0; seq.len()];
        for (rank, &i) in order.iter().enumerate() {
            values[i] = rank + 1;
        }
        Permutation(values)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn into_values(self) -> Vec<usize> {
        self.0
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    pub fn reverse(&self) -> Self {
        Permutation(self.0.iter().rev().copied().collect())
    }

    pub fn complement(&self) -> Self {
        let n = self.len();
        Permutation(self.0.iter().map(|&v| n + 1 - v).collect())
    }

    /// All permutations of length `n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        let mut next = Some((1..=n).collect::<Vec<_>>());
        std::iter::from_fn(move || {
            let current = next.take()?;
            let mut v = current.clone();
            if let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) {
                let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
                v.swap(i - 1, j);
                v[i..].reverse();
                next = Some(v);
            }
            Some(Permutation(current))
        })
    }

    /// Classical containment of `pattern`.
    pub fn contains_classical(&self, pattern: &Permutation) -> bool {
        let matcher = Matcher::new(&LabeledPoset::from_classical(pattern));
        (0..self.len()).any(|end| matcher.occurs_ending_at(&self.0, end, matcher.size()))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.len() <= 9 { "" } else { "," };
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(sep))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `4132` (single digits) or `4,1,3,2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Option<Vec<usize>> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        let values = values.ok_or_else(|| Error::InvalidPermutation(format!("cannot read `{s}`")))?;
        Permutation::new(values)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Backtracking occurrence search for a fixed POP.
///
/// Labels are 0-based internally. A label is checked against the labels
/// already assigned, so any assignment order works.
#[derive(Clone, Debug)]
pub(crate) struct Matcher {
    k: usize,
    above: Vec<u32>,
    below: Vec<u32>,
}

impl Matcher {
    pub(crate) fn new(p: &LabeledPoset) -> Self {
        let above = p.above_masks().to_vec();
        let k = above.len();
        let mut below = vec![0u32; k];
        for (a, &mask) in above.iter().enumerate() {
            for (b, slot) in below.iter_mut().enumerate() {
                if mask & (1 << b) != 0 {
                    *slot |= 1 << a;
                }
            }
        }
        Matcher { k, above, below }
    }

    pub(crate) fn size(&self) -> usize {
        self.k
    }

    #[inline]
    pub(crate) fn fits<T: Ord + Copy>(&self, label: usize, value: T, assigned: u32, vals: &[T]) -> bool {
        let mut m = self.above[label] & assigned;
        while m != 0 {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            if value >= vals[b] {
                return false;
            }
        }
        let mut m = self.below[label] & assigned;
        while m != 0 {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            if value <= vals[b] {
                return false;
            }
        }
        true
    }

    /// Whether `vals[j]` (the value given to label `j`) respects every
    /// relation between the last label and the earlier ones.
    pub(crate) fn consistent_prefix(&self, vals: &[usize]) -> bool {
        let Some(last) = vals.len().checked_sub(1) else {
            return true;
        };
        let assigned = (1u32 << last) - 1;
        self.fits(last, vals[last], assigned, vals)
    }

    /// Whether the prefix `p_r` (labels `1..=r`) occurs in `seq` with label
    /// `r` at position `end`.
    pub(crate) fn occurs_ending_at<T: Ord + Copy + Default>(&self, seq: &[T], end: usize, r: usize) -> bool {
        if r == 0 {
            return true;
        }
        if end + 1 < r {
            return false;
        }
        let mut vals = [T::default(); 32];
        vals[r - 1] = seq[end];
        self.back(seq, r - 1, end, 1u32 << (r - 1), &mut vals)
    }

    fn back<T: Ord + Copy>(&self, seq: &[T], label: usize, limit: usize, assigned: u32, vals: &mut [T; 32]) -> bool {
        if label == 0 {
            return true;
        }
        let j = label - 1;
        // label j needs j earlier positions for the remaining labels
        for pos in (j..limit).rev() {
            let v = seq[pos];
            if self.fits(j, v, assigned, vals) {
                vals[j] = v;
                if self.back(seq, j, pos, assigned | (1 << j), vals) {
                    return true;
                }
            }
        }
        false
    }

    /// The lexicographically least occurrence as 1-based positions.
    pub(crate) fn least_witness(&self, seq: &[usize]) -> Option<Vec<usize>> {
        if self.k == 0 {
            return Some(Vec::new());
        }
        let mut positions = Vec::with_capacity(self.k);
        let mut vals = [0usize; 32];
        if self.forward(seq, 0, 0, 0, &mut positions, &mut vals) {
            Some(positions.into_iter().map(|p| p + 1).collect())
        } else {
            None
        }
    }

    fn forward(
        &self,
        seq: &[usize],
        label: usize,
        start: usize,
        assigned: u32,
        positions: &mut Vec<usize>,
        vals: &mut [usize; 32],
    ) -> bool {
        if label == self.k {
            return true;
        }
        let remaining = self.k - label;
        for pos in start..=seq.len().saturating_sub(remaining) {
            if pos >= seq.len() {
                break;
            }
            let v = seq[pos];
            if self.fits(label, v, assigned, vals) {
                vals[label] = v;
                positions.push(pos);
                if self.forward(seq, label + 1, pos + 1, assigned | (1 << label), positions, vals) {
                    return true;
                }
                positions.pop();
            }
        }
        false
    }
}

/// Whether `w` contains `p`; on success returns the lexicographically least
/// occurrence as 1-based positions `i_1 < ... < i_k`.
pub fn contains_pop(w: &Permutation, p: &LabeledPoset) -> Option<Vec<usize>> {
    Matcher::new(p).least_witness(w.values())
}

/// Containment decided through the classical pattern set of `p`. Slower
/// than [`contains_pop`]; kept as an independent cross-check.
pub fn contains_pop_via_patterns(w: &Permutation, p: &LabeledPoset) -> bool {
    p.pattern_set().iter().any(|sigma| w.contains_classical(sigma))
}

/// Number of permutations of length `n` avoiding `p`.
pub fn count_avoiders_of_length(p: &LabeledPoset, n: usize) -> u64 {
    let matcher = Matcher::new(p);
    if n == 0 {
        return if p.size() == 0 { 0 } else { 1 };
    }
    (1..=n as u8)
        .into_par_iter()
        .map(|first| {
            let mut prefix = Vec::with_capacity(n);
            prefix.push(first);
            count_dfs(&matcher, n, &mut prefix, 1u32 << (first - 1))
        })
        .sum()
}

fn count_dfs(m: &Matcher, n: usize, prefix: &mut Vec<u8>, used: u32) -> u64 {
    let end = prefix.len() - 1;
    if prefix.len() >= m.k && m.occurs_ending_at(prefix, end, m.k) {
        return 0;
    }
    if prefix.len() == n {
        return 1;
    }
    let mut total = 0;
    for v in 1..=n as u8 {
        let bit = 1u32 << (v - 1);
        if used & bit == 0 {
            prefix.push(v);
            total += count_dfs(m, n, prefix, used | bit);
            prefix.pop();
        }
    }
    total
}

/// `|S_n(p)|` for `n = 1..=max_n`, refusing `max_n` above [`DEFAULT_MAX_N`].
pub fn count_avoiders(p: &LabeledPoset, max_n: usize) -> Result<CountSequence> {
    count_avoiders_with_budget(p, max_n, DEFAULT_MAX_N)
}

/// As [`count_avoiders`] with an explicit budget.
pub fn count_avoiders_with_budget(p: &LabeledPoset, max_n: usize, limit: usize) -> Result<CountSequence> {
    if max_n > limit || max_n > 12 {
        return Err(Error::BudgetExceeded { what: "permutation length", requested: max_n, limit: limit.min(12) });
    }
    let counts = (1..=max_n).map(|n| count_avoiders_of_length(p, n)).collect();
    Ok(CountSequence { pattern: p.to_string(), counts })
}

/// Lazy lexicographic enumeration of `S_n(p)`.
pub struct Avoiders {
    matcher: Matcher,
    n: usize,
    prefix: Vec<u8>,
    used: u32,
    /// smallest candidate value still to try at each depth
    next: Vec<u8>,
    finished: bool,
}

/// The avoiders of `p` of length `n`, in lexicographic order.
pub fn avoiders(p: &LabeledPoset, n: usize) -> Avoiders {
    Avoiders {
        matcher: Matcher::new(p),
        n,
        prefix: Vec::with_capacity(n),
        used: 0,
        next: vec![1],
        finished: n == 0 && p.size() == 0,
    }
}

impl Iterator for Avoiders {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.finished {
            return None;
        }
        if self.n == 0 {
            self.finished = true;
            return Some(Permutation(Vec::new()));
        }
        loop {
            let depth = self.prefix.len();
            if depth == self.n {
                let out = Permutation(self.prefix.iter().map(|&v| v as usize).collect());
                self.pop();
                return Some(out);
            }
            let start = self.next[depth];
            let candidate = (start..=self.n as u8).find(|&v| self.used & (1 << (v - 1)) == 0);
            match candidate {
                None => {
                    if depth == 0 {
                        self.finished = true;
                        return None;
                    }
                    self.pop();
                }
                Some(v) => {
                    self.next[depth] = v + 1;
                    self.prefix.push(v);
                    self.used |= 1 << (v - 1);
                    let len = self.prefix.len();
                    if len >= self.matcher.k && self.matcher.occurs_ending_at(&self.prefix, len - 1, self.matcher.k) {
                        self.pop();
                    } else {
                        self.next.truncate(len);
                        self.next.push(1);
                    }
                }
            }
        }
    }
}

impl Avoiders {
    fn pop(&mut self) {
        if let Some(v) = self.prefix.pop() {
            self.used &= !(1 << (v - 1));
            self.next.truncate(self.prefix.len() + 1);
        }
    }
}

/// Entry ranks: `ranks[i]` is the largest `r` such that `p_r` occurs in `w`
/// with label `r` at position `i` (0 when no label fits there).
pub fn ranks(w: &Permutation, p: &LabeledPoset) -> Vec<usize> {
    let m = Matcher::new(p);
    let seq = w.values();
    (0..seq.len()).map(|i| (1..=m.k).rev().find(|&r| m.occurs_ending_at(seq, i, r)).unwrap_or(0)).collect()
}

/// The largest entry rank of `w`, failing when `p` itself occurs.
pub fn p_rank(w: &Permutation, p: &LabeledPoset) -> Result<usize> {
    let r = ranks(w, p).into_iter().max().unwrap_or(0);
    if p.size() > 0 && r >= p.size() {
        return Err(Error::RankOverflow(format!("{w} contains {p}")));
    }
    Ok(r)
}

/// How an adjacent transposition `s_m` acts on a permutation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// swap the entries in positions `m` and `m + 1`
    #[default]
    Positions,
    /// swap the values `m` and `m + 1`
    Values,
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "positions" | "position" => Ok(Convention::Positions),
            "values" | "value" => Ok(Convention::Values),
            _ => Err(Error::Unknown { kind: "convention", value: s.into() }),
        }
    }
}

/// Applies `s_{m_1}`, then `s_{m_2}`, and so on.
pub fn apply_transpositions(w: &Permutation, indices: &[usize], convention: Convention) -> Result<Permutation> {
    let n = w.len();
    let mut v = w.0.clone();
    for &m in indices {
        if m == 0 || m >= n {
            return Err(Error::TranspositionOutOfRange { index: m, len: n });
        }
        match convention {
            Convention::Positions => v.swap(m - 1, m),
            Convention::Values => {
                for x in v.iter_mut() {
                    if *x == m {
                        *x = m + 1;
                    } else if *x == m + 1 {
                        *x = m;
                    }
                }
            }
        }
    }
    Ok(Permutation(v))
}

/// `s_{i_1 - 1} ... s_{i_k - 1} w` for 1-based positions `i_j >= 2`.
pub fn left_multiply_adjacent(w: &Permutation, positions: &[usize], convention: Convention) -> Result<Permutation> {
    let mut indices = Vec::with_capacity(positions.len());
    for &i in positions {
        if i < 2 {
            return Err(Error::TranspositionOutOfRange { index: i, len: w.len() });
        }
        indices.push(i - 1);
    }
    apply_transpositions(w, &indices, convention)
}

/// Avoider counts `|S_n(p)|` for `n = 1..=counts.len()`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountSequence {
    pub pattern: String,
    pub counts: Vec<u64>,
}

impl CountSequence {
    pub fn horizon(&self) -> usize {
        self.counts.len()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,count\n");
        for (i, c) in self.counts.iter().enumerate() {
            out.push_str(&format!("{},{}\n", i + 1, c));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("count sequences serialize")
    }

    /// Comma-separated counts, as in the printed tables.
    pub fn joined(&self) -> String {
        self.counts.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    }
}
