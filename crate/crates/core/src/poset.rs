//! Labeled posets used as partially ordered patterns.
//!
//! A [`LabeledPoset`] of size `k` is a strict partial order on the labels
//! `1..=k`. The relation is kept transitively closed; covering (Hasse) edges
//! are derived when needed.
//!
//! Text form: `pop <k>: <component>, <component>, ...` where a component is
//! `c[a>b>...]` (a chain, largest element first), `i[l]` (an isolated label) or
//! `r[a<b, c<d, ...]` (any other connected component, given by its covering
//! relations).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// Largest supported poset size.
pub const MAX_LABELS: usize = 32;

/// A set of labels, stored as a bitmask (bit `l - 1` for label `l`).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelSet(u32);

impl LabelSet {
    pub const EMPTY: LabelSet = LabelSet(0);

    pub fn from_mask(mask: u32) -> Self {
        LabelSet(mask)
    }

    /// The labels `lo..=hi`; empty when `lo > hi`.
    pub fn range(lo: usize, hi: usize) -> Self {
        (lo..=hi).collect()
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn contains(self, label: usize) -> bool {
        (1..=MAX_LABELS).contains(&label) && self.0 & (1 << (label - 1)) != 0
    }

    pub fn insert(&mut self, label: usize) {
        assert!((1..=MAX_LABELS).contains(&label), "label {label} out of range");
        self.0 |= 1 << (label - 1);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: LabelSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: LabelSet) -> LabelSet {
        LabelSet(self.0 | other.0)
    }

    pub fn difference(self, other: LabelSet) -> LabelSet {
        LabelSet(self.0 & !other.0)
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 32 - self.0.leading_zeros() as usize)
    }

    /// Labels in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut mask = self.0;
        std::iter::from_fn(move || {
            if mask == 0 {
                return None;
            }
            let bit = mask.trailing_zeros();
            mask &= mask - 1;
            Some(bit as usize + 1)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for LabelSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = LabelSet::EMPTY;
        for label in iter {
            set.insert(label);
        }
        set
    }
}

impl fmt::Debug for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A partially ordered pattern: a strict partial order on `1..=k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledPoset {
    size: usize,
    /// `above[a]` has bit `b` set iff label `a + 1` is below label `b + 1`.
    above: Vec<u32>,
}

impl LabeledPoset {
    /// Builds a poset from pairs `(a, b)` meaning `a < b`; the relation is
    /// closed transitively. Cycles and reflexive pairs are rejected.
    pub fn new(size: usize, relations: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if size > MAX_LABELS {
            return Err(Error::InvalidPoset(format!(
                "size {size} exceeds the maximum of {MAX_LABELS}"
            )));
        }
        let mut above = vec![0u32; size];
        for (a, b) in relations {
            if a == 0 || b == 0 || a > size || b > size {
                return Err(Error::InvalidPoset(format!(
                    "relation {a}<{b} uses a label outside 1..={size}"
                )));
            }
            if a == b {
                return Err(Error::InvalidPoset(format!("reflexive pair {a}<{a}")));
            }
            above[a - 1] |= 1 << (b - 1);
        }
        close_transitively(&mut above);
        for (a, &mask) in above.iter().enumerate() {
            if mask & (1 << a) != 0 {
                return Err(Error::InvalidPoset(format!(
                    "relation contains a cycle through label {}",
                    a + 1
                )));
            }
        }
        Ok(LabeledPoset { size, above })
    }

    pub fn antichain(size: usize) -> Self {
        LabeledPoset { size, above: vec![0; size] }
    }

    pub fn empty() -> Self {
        Self::antichain(0)
    }

    /// A single chain, given largest element first: `chain(&[3, 2, 1])` is
    /// `1 < 2 < 3`.
    pub fn chain(top_first: &[usize]) -> Result<Self> {
        Self::from_chains(top_first.len(), &[top_first])
    }

    /// A disjoint union of chains, each listed largest element first. Labels
    /// not mentioned are isolated.
    pub fn from_chains(size: usize, chains: &[&[usize]]) -> Result<Self> {
        let mut seen = LabelSet::EMPTY;
        let mut relations = Vec::new();
        for chain in chains {
            for &label in chain.iter() {
                if label == 0 || label > size || seen.contains(label) {
                    return Err(Error::InvalidPoset(format!(
                        "label {label} repeated or outside 1..={size}"
                    )));
                }
                seen.insert(label);
            }
            relations.extend(chain.windows(2).map(|w| (w[1], w[0])));
        }
        Self::new(size, relations)
    }

    /// The chain poset of a classical pattern: `j < m` iff `sigma_j < sigma_m`.
    pub fn from_classical(sigma: &Permutation) -> Self {
        let values = sigma.values();
        let k = values.len();
        let mut above = vec![0u32; k];
        for j in 0..k {
            for m in 0..k {
                if values[j] < values[m] {
                    above[j] |= 1 << m;
                }
            }
        }
        LabeledPoset { size: k, above }
    }

    /// Relabels distinct positive labels to `1..=r`, preserving their order.
    pub fn standardise(labels: &[usize], relation: &[(usize, usize)]) -> Result<Self> {
        let mut sorted = labels.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPoset("duplicate labels".into()));
        }
        if sorted.first() == Some(&0) {
            return Err(Error::InvalidPoset("labels must be positive".into()));
        }
        let rank = |x: usize| -> Result<usize> {
            sorted
                .binary_search(&x)
                .map(|i| i + 1)
                .map_err(|_| Error::InvalidPoset(format!("relation uses unknown label {x}")))
        };
        let mut pairs = Vec::with_capacity(relation.len());
        for &(a, b) in relation {
            pairs.push((rank(a)?, rank(b)?));
        }
        Self::new(sorted.len(), pairs)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `a <_P b`, labels 1-based.
    pub fn less(&self, a: usize, b: usize) -> bool {
        a >= 1 && b >= 1 && a <= self.size && b <= self.size && self.above[a - 1] & (1 << (b - 1)) != 0
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.less(a, b) || self.less(b, a)
    }

    /// Labels strictly above `label`.
    pub fn above(&self, label: usize) -> LabelSet {
        LabelSet(self.above[label - 1])
    }

    /// Labels strictly below `label`.
    pub fn below(&self, label: usize) -> LabelSet {
        let bit = 1u32 << (label - 1);
        LabelSet::from_iter((1..=self.size).filter(|&a| self.above[a - 1] & bit != 0))
    }

    pub fn labels(&self) -> LabelSet {
        LabelSet::range(1, self.size)
    }

    /// All pairs `(a, b)` with `a < b` in the poset, in lexicographic order.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 1..=self.size {
            for b in self.above(a).iter() {
                out.push((a, b));
            }
        }
        out
    }

    /// Covering pairs `(a, b)`: `a < b` with nothing strictly between.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        self.relations()
            .into_iter()
            .filter(|&(a, b)| !self.above(a).iter().any(|c| self.less(c, b)))
            .collect()
    }

    pub fn is_antichain(&self) -> bool {
        self.above.iter().all(|&m| m == 0)
    }

    pub fn isolated_vertices(&self) -> LabelSet {
        LabelSet::from_iter((1..=self.size).filter(|&l| self.above(l).is_empty() && self.below(l).is_empty()))
    }

    /// Connected components of the comparability graph, ordered by smallest label.
    pub fn connected_components(&self) -> Vec<LabelSet> {
        let mut remaining = self.labels();
        let mut out = Vec::new();
        while let Some(start) = remaining.min() {
            let mut component = LabelSet::from_iter([start]);
            let mut frontier = vec![start];
            while let Some(x) = frontier.pop() {
                for y in self.above(x).union(self.below(x)).iter() {
                    if !component.contains(y) {
                        component.insert(y);
                        frontier.push(y);
                    }
                }
            }
            remaining = remaining.difference(component);
            out.push(component);
        }
        out
    }

    fn is_chain_on(&self, set: LabelSet) -> bool {
        let labels = set.to_vec();
        labels.iter().enumerate().all(|(i, &a)| labels[i + 1..].iter().all(|&b| self.comparable(a, b)))
    }

    /// True iff every connected component is totally ordered.
    pub fn all_chains(&self) -> bool {
        self.connected_components().into_iter().all(|c| self.is_chain_on(c))
    }

    /// Restriction of the relation to `set`, labels unchanged.
    pub fn induced_subposet(&self, set: LabelSet) -> Result<SubPoset> {
        if !set.is_subset(self.labels()) {
            return Err(Error::NotASubset(set.to_vec()));
        }
        let relation = self
            .relations()
            .into_iter()
            .filter(|&(a, b)| set.contains(a) && set.contains(b))
            .collect();
        Ok(SubPoset { labels: set, relation })
    }

    /// `st(P restricted to set)`: the induced subposet relabeled to `1..=|set|`.
    pub fn restrict(&self, set: LabelSet) -> Result<LabeledPoset> {
        self.induced_subposet(set)?.standardise()
    }

    /// The subposet on the labels `1..=r` (the prefix `p_r`).
    pub fn prefix(&self, r: usize) -> LabeledPoset {
        let r = r.min(self.size);
        let mask = if r == 32 { u32::MAX } else { (1u32 << r) - 1 };
        LabeledPoset { size: r, above: self.above[..r].iter().map(|m| m & mask).collect() }
    }

    /// Removes one label and standardises the rest.
    pub fn without(&self, label: usize) -> Result<LabeledPoset> {
        let mut set = self.labels();
        if !set.contains(label) {
            return Err(Error::NotASubset(vec![label]));
        }
        set = set.difference(LabelSet::from_iter([label]));
        self.restrict(set)
    }

    /// `p ⊕ q`: `q`'s labels shifted by `|p|`, every element of `p` below every element of `q`.
    pub fn ordinal_sum(&self, other: &LabeledPoset) -> Result<LabeledPoset> {
        self.sum(other, true)
    }

    /// `p + q`: `q`'s labels shifted by `|p|`, no relations between the two parts.
    pub fn disjoint_sum(&self, other: &LabeledPoset) -> Result<LabeledPoset> {
        self.sum(other, false)
    }

    fn sum(&self, other: &LabeledPoset, stacked: bool) -> Result<LabeledPoset> {
        let k = self.size;
        let total = k + other.size;
        if total > MAX_LABELS {
            return Err(Error::InvalidPoset(format!("sum of size {total} is too large")));
        }
        let upper: u32 = ((1u64 << total) - (1u64 << k)) as u32;
        let mut above = Vec::with_capacity(total);
        for &m in &self.above {
            above.push(if stacked { m | upper } else { m });
        }
        for &m in &other.above {
            above.push(m << k);
        }
        Ok(LabeledPoset { size: total, above })
    }

    /// Renames every label `i` to `n + 1 - i`, keeping the order relation.
    pub fn reverse(&self) -> LabeledPoset {
        let n = self.size;
        self.relabel(|i| n + 1 - i)
    }

    /// The order dual with labels fixed.
    pub fn complement(&self) -> LabeledPoset {
        let pairs = self.relations().into_iter().map(|(a, b)| (b, a));
        LabeledPoset::new(self.size, pairs).expect("dual of a poset is a poset")
    }

    /// Complements the labels of `block` inside their contiguous range
    /// `lo..=hi` (`i -> lo + hi - i`), leaving every other label and the
    /// underlying order untouched. `block` must be a union of connected
    /// components occupying a contiguous label range.
    pub fn block_reversal(&self, block: LabelSet) -> Result<LabeledPoset> {
        if !block.is_subset(self.labels()) {
            return Err(Error::NotASubset(block.to_vec()));
        }
        let (Some(lo), Some(hi)) = (block.min(), block.max()) else {
            return Ok(self.clone());
        };
        if block.len() != hi - lo + 1 {
            return Err(Error::InvalidBlock(block.to_vec()));
        }
        for c in self.connected_components() {
            let inside = c.iter().filter(|&l| block.contains(l)).count();
            if inside != 0 && inside != c.len() {
                return Err(Error::InvalidBlock(block.to_vec()));
            }
        }
        Ok(self.relabel(|i| if block.contains(i) { lo + hi - i } else { i }))
    }

    /// Applies a bijective relabeling `1..=k -> 1..=k`.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> LabeledPoset {
        let pairs = self.relations().into_iter().map(|(a, b)| (f(a), f(b)));
        LabeledPoset::new(self.size, pairs).expect("relabeling preserves poset structure")
    }

    /// All linear extensions as label sequences (smallest first), in
    /// lexicographic order.
    pub fn linear_extensions(&self) -> Vec<Vec<usize>> {
        let below: Vec<u32> = (1..=self.size).map(|l| self.below(l).mask()).collect();
        let mut out = Vec::new();
        let mut seq = Vec::with_capacity(self.size);
        extend_linear(&below, self.size, 0, &mut seq, &mut out);
        out
    }

    /// The classical patterns `e^{-1}` for every linear extension `e`; a
    /// permutation avoids the poset iff it avoids all of them.
    pub fn pattern_set(&self) -> BTreeSet<Permutation> {
        self.linear_extensions()
            .into_iter()
            .map(|e| {
                let mut inverse = vec![0; e.len()];
                for (i, &label) in e.iter().enumerate() {
                    inverse[label - 1] = i + 1;
                }
                Permutation::new(inverse).expect("inverse of a linear extension is a permutation")
            })
            .collect()
    }

    /// Raw masks for the occurrence matcher.
    pub(crate) fn above_masks(&self) -> &[u32] {
        &self.above
    }
}

fn close_transitively(above: &mut [u32]) {
    let n = above.len();
    loop {
        let mut changed = false;
        for a in 0..n {
            let mut mask = above[a];
            let mut bits = above[a];
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                mask |= above[b];
            }
            if mask != above[a] {
                above[a] = mask;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
}

fn extend_linear(below: &[u32], k: usize, placed: u32, seq: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if seq.len() == k {
        out.push(seq.clone());
        return;
    }
    for label in 1..=k {
        let bit = 1u32 << (label - 1);
        if placed & bit == 0 && below[label - 1] & !placed == 0 {
            seq.push(label);
            extend_linear(below, k, placed | bit, seq, out);
            seq.pop();
        }
    }
}

/// A labeled subposet whose labels have not been standardised.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubPoset {
    pub labels: LabelSet,
    pub relation: Vec<(usize, usize)>,
}

impl SubPoset {
    pub fn standardise(&self) -> Result<LabeledPoset> {
        LabeledPoset::standardise(&self.labels.to_vec(), &self.relation)
    }
}

impl fmt::Display for LabeledPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pop {}:", self.size)?;
        let components = self.connected_components();
        let (singles, multi): (Vec<_>, Vec<_>) = components.into_iter().partition(|c| c.len() == 1);
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| -> fmt::Result {
            let s = if first { " " } else { ", " };
            first = false;
            f.write_str(s)
        };
        for c in multi {
            sep(f)?;
            if self.is_chain_on(c) {
                let mut labels = c.to_vec();
                // largest first: more elements below means higher up
                labels.sort_by_key(|&l| std::cmp::Reverse(self.below(l).len()));
                let body: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
                write!(f, "c[{}]", body.join(">"))?;
            } else {
                let edges: Vec<String> = self
                    .hasse_edges()
                    .into_iter()
                    .filter(|&(a, _)| c.contains(a))
                    .map(|(a, b)| format!("{a}<{b}"))
                    .collect();
                write!(f, "r[{}]", edges.join(", "))?;
            }
        }
        for c in singles {
            sep(f)?;
            write!(f, "i[{}]", c.min().unwrap())?;
        }
        Ok(())
    }
}

impl fmt::Debug for LabeledPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for LabeledPoset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Parser { src: s, pos: 0 }.poset()
    }
}

impl Serialize for LabeledPoset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LabeledPoset {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { position: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token) {
            self.pos += token.len();
            Ok(())
        } else {
            self.err(format!("expected `{token}`"))
        }
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let digits = self.src[self.pos..].chars().take_while(|c| c.is_ascii_digit()).count();
        if digits == 0 {
            return self.err("expected a number");
        }
        let value = self.src[self.pos..self.pos + digits].parse().or_else(|_| self.err("number too large"))?;
        self.pos += digits;
        Ok(value)
    }

    fn poset(&mut self) -> Result<LabeledPoset> {
        self.expect("pop")?;
        let size = self.number()?;
        if size > MAX_LABELS {
            return self.err(format!("size exceeds {MAX_LABELS}"));
        }
        self.expect(":")?;
        let mut seen = LabelSet::EMPTY;
        let mut relations = Vec::new();
        let claim = |p: &Parser<'_>, label: usize, seen: &mut LabelSet| -> Result<()> {
            if label == 0 || label > size {
                return p.err(format!("label {label} outside 1..={size}"));
            }
            if seen.contains(label) {
                return p.err(format!("label {label} used twice"));
            }
            seen.insert(label);
            Ok(())
        };
        if self.peek().is_some() {
            loop {
                let kind = self.peek();
                match kind {
                    Some('c') => {
                        self.expect("c[")?;
                        let mut chain = vec![self.number()?];
                        claim(self, chain[0], &mut seen)?;
                        while self.peek() == Some('>') {
                            self.expect(">")?;
                            let l = self.number()?;
                            claim(self, l, &mut seen)?;
                            chain.push(l);
                        }
                        self.expect("]")?;
                        relations.extend(chain.windows(2).map(|w| (w[1], w[0])));
                    }
                    Some('i') => {
                        self.expect("i[")?;
                        let l = self.number()?;
                        claim(self, l, &mut seen)?;
                        self.expect("]")?;
                    }
                    Some('r') => {
                        self.expect("r[")?;
                        let mut local = LabelSet::EMPTY;
                        loop {
                            let a = self.number()?;
                            self.expect("<")?;
                            let b = self.number()?;
                            for l in [a, b] {
                                if !local.contains(l) {
                                    claim(self, l, &mut seen)?;
                                    local.insert(l);
                                }
                            }
                            relations.push((a, b));
                            if self.peek() == Some(',') {
                                self.expect(",")?;
                            } else {
                                break;
                            }
                        }
                        self.expect("]")?;
                    }
                    _ => return self.err("expected a component `c[..]`, `i[..]` or `r[..]`"),
                }
                if self.peek() == Some(',') {
                    self.expect(",")?;
                } else {
                    break;
                }
            }
        }
        if self.peek().is_some() {
            return self.err("unexpected trailing input");
        }
        if seen.len() != size {
            let missing: Vec<String> =
                LabelSet::range(1, size).difference(seen).iter().map(|l| l.to_string()).collect();
            return self.err(format!("labels {} not assigned to any component", missing.join(",")));
        }
        LabeledPoset::new(size, relations).map_err(|e| Error::Parse { position: self.pos, message: e.to_string() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pop(s: &str) -> LabeledPoset {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn classical_chain_posets() {
        let p = LabeledPoset::from_classical(&perm("213"));
        assert!(p.less(2, 1) && p.less(2, 3) && p.less(1, 3));
        assert_eq!(p.relations().len(), 3);
        let single = LabeledPoset::from_classical(&perm("1"));
        assert_eq!(single.size(), 1);
        assert!(single.relations().is_empty());
        assert_eq!(LabeledPoset::from_classical(&perm("321")), pop("pop 3: c[1>2>3]"));
    }

    #[test]
    fn linear_extension_examples() {
        assert_eq!(LabeledPoset::antichain(3).linear_extensions().len(), 6);
        assert_eq!(pop("pop 3: c[1>2>3]").linear_extensions(), vec![vec![3, 2, 1]]);
        // brute force over all orderings of {1,2,3}, keeping those with 3 before 2
        let p = pop("pop 3: c[2>3], i[1]");
        let mut expected = Vec::new();
        for a in 1..=3 {
            for b in 1..=3 {
                for c in 1..=3 {
                    let e = vec![a, b, c];
                    let distinct = a != b && b != c && a != c;
                    let pos = |l| e.iter().position(|&x| x == l).unwrap();
                    if distinct && pos(3) < pos(2) {
                        expected.push(e);
                    }
                }
            }
        }
        assert_eq!(p.linear_extensions(), expected);
        assert_eq!(expected, vec![vec![1, 3, 2], vec![3, 1, 2], vec![3, 2, 1]]);
    }

    #[test]
    fn pattern_sets() {
        let set = |s: &str| -> Vec<String> { pop(s).pattern_set().iter().map(|p| p.to_string()).collect() };
        assert_eq!(set("pop 3: c[2>3], i[1]"), ["132", "231", "321"]);
        assert_eq!(set("pop 3: c[3>2], i[1]"), ["123", "213", "312"]);
        assert_eq!(set("pop 3: c[1>2>3]"), ["321"]);
    }

    #[test]
    fn standardisation() {
        let p = LabeledPoset::standardise(&[4, 7], &[(7, 4)]).unwrap();
        assert_eq!(p, pop("pop 2: c[1>2]"));
        assert_eq!(LabeledPoset::standardise(&[9], &[]).unwrap(), LabeledPoset::antichain(1));
        assert!(LabeledPoset::standardise(&[3, 3], &[]).is_err());
        // labels {4,5} of `c[3>5>1>2], i[4]`: 4 isolated, 5 alone
        let p = pop("pop 5: c[3>5>1>2], i[4]");
        let q = p.restrict(LabelSet::from_iter([4, 5])).unwrap();
        assert_eq!(q, LabeledPoset::antichain(2));
    }

    #[test]
    fn induced_subposets() {
        let p = pop("pop 3: c[1>2>3]");
        let sub = p.induced_subposet(LabelSet::from_iter([1, 3])).unwrap();
        assert_eq!(sub.relation, vec![(3, 1)]);
        assert!(p.induced_subposet(LabelSet::EMPTY).unwrap().relation.is_empty());
        assert!(p.induced_subposet(LabelSet::from_iter([4])).is_err());
        let t12 = pop("pop 5: c[5>1>2>3], i[4]");
        let ip = t12.restrict(LabelSet::range(1, 3)).unwrap();
        assert_eq!(ip, pop("pop 3: c[1>2>3]"));
        assert_eq!(t12.isolated_vertices(), LabelSet::from_iter([4]));
    }

    #[test]
    fn ordinal_and_disjoint_sums() {
        let p = pop("pop 2: c[1>2]");
        let q = pop("pop 3: r[2<1, 3<1]");
        let s = p.ordinal_sum(&q).unwrap();
        for (a, b) in [(2, 1), (1, 4), (1, 5), (4, 3), (5, 3), (2, 3)] {
            assert!(s.less(a, b), "{a}<{b}");
        }
        assert!(!s.comparable(4, 5));
        let d = p.disjoint_sum(&q).unwrap();
        assert_eq!(d.relations(), vec![(2, 1), (4, 3), (5, 3)]);
        assert_eq!(p.ordinal_sum(&LabeledPoset::empty()).unwrap(), p);
        assert_eq!(p.disjoint_sum(&LabeledPoset::empty()).unwrap(), p);
        let chain = pop("pop 2: c[2>1]");
        assert_eq!(chain.ordinal_sum(&chain).unwrap(), pop("pop 4: c[4>3>2>1]"));
        let a = LabeledPoset::antichain(2);
        assert_eq!(a.disjoint_sum(&a).unwrap(), LabeledPoset::antichain(4));
    }

    #[test]
    fn symmetries_on_tuples() {
        // chain 1>2>3 with 4 isolated, and its reverse 4>3>2 with 1 isolated
        let p = pop("pop 4: c[1>2>3], i[4]");
        assert_eq!(p.reverse(), pop("pop 4: c[4>3>2], i[1]"));
        assert_eq!(p.complement(), pop("pop 4: c[3>2>1], i[4]"));
        assert_eq!(p.reverse().reverse(), p);
        assert_eq!(p.complement().complement(), p);
        let a = LabeledPoset::antichain(3);
        assert_eq!(a.reverse(), a);
        assert_eq!(a.complement(), a);
    }

    #[test]
    fn block_reversal_matches_worked_example() {
        let p = pop("pop 3: r[2<1, 3<1]");
        let q = pop("pop 2: c[1>2]");
        let sum = p.disjoint_sum(&q).unwrap();
        let rp = sum.block_reversal(LabelSet::range(1, 3)).unwrap();
        assert_eq!(rp, pop("pop 5: r[1<3, 2<3], c[4>5]"));
        let r = rp.reverse();
        assert_eq!(r, pop("pop 5: r[4<3, 5<3], c[2>1]"));
        let rq = r.block_reversal(LabelSet::range(1, 2)).unwrap();
        assert_eq!(rq, q.disjoint_sum(&p).unwrap());
        assert_eq!(sum.block_reversal(LabelSet::EMPTY).unwrap(), sum);
        assert!(sum.block_reversal(LabelSet::from_iter([1, 2])).is_err());
        assert!(sum.block_reversal(LabelSet::from_iter([1, 2, 3, 5])).is_err());
    }

    #[test]
    fn components_and_isolation() {
        assert_eq!(LabeledPoset::antichain(3).isolated_vertices().len(), 3);
        let vee = pop("pop 3: r[2<1, 3<1]");
        assert_eq!(vee.connected_components().len(), 1);
        assert!(!vee.all_chains());
        assert!(pop("pop 5: c[3>5>1>2], i[4]").all_chains());
    }

    #[test]
    fn grammar_round_trip_and_errors() {
        for s in ["pop 5: c[3>5>1>2], i[4]", "pop 3: c[2>3], i[1]", "pop 5: r[4<3, 5<3], c[2>1]", "pop 0:"] {
            let p = pop(s);
            assert_eq!(p.to_string().parse::<LabeledPoset>().unwrap(), p);
        }
        assert_eq!(pop("pop 3: i[1], c[2>3]").to_string(), "pop 3: c[2>3], i[1]");
        match "pop 3: c[1>2], i[2]".parse::<LabeledPoset>() {
            Err(Error::Parse { position, .. }) => assert!(position > 10),
            other => panic!("expected a parse error, got {other:?}"),
        }
        assert!("pop 3: c[1>2]".parse::<LabeledPoset>().is_err());
        assert!("pop 2: c[1>2], x[3]".parse::<LabeledPoset>().is_err());
        assert!("pop 2: r[1<2, 2<1]".parse::<LabeledPoset>().is_err());
    }

    #[test]
    fn closure_is_idempotent() {
        let p = pop("pop 4: c[4>3>2>1]");
        let again = LabeledPoset::new(4, p.relations()).unwrap();
        assert_eq!(again, p);
        assert_eq!(p.relations().len(), 6);
        assert_eq!(p.hasse_edges(), vec![(1, 2), (2, 3), (3, 4)]);
    }
}
