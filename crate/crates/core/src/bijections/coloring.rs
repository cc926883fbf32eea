//! Bijections that recolour a square board, rewrite the white part with an
//! inner bijection and put the gray part back unchanged.

use std::sync::Arc;

use crate::bijections::pairing::PairingCache;
use crate::bijections::west::require_avoider;
use crate::error::{Error, Result};
use crate::ferrers::FerrersBoard;
use crate::permutation::{Matcher, Permutation};
use crate::poset::{LabelSet, LabeledPoset};

/// POPs `p`, `p′` sharing isolated labels `I` (smallest `i₁`) and the
/// subposet on `[i₁, k] \ I`, whose lower parts on `[i₁ - 1]` are
/// shape-Wilf-equivalent.
#[derive(Clone, Debug)]
pub struct Theorem12Pair {
    p: LabeledPoset,
    p_prime: LabeledPoset,
    lower: LabeledPoset,
    lower_prime: LabeledPoset,
    upper: Matcher,
    /// labels of the upper part (standardised) that are isolated in `p`
    upper_isolated: LabelSet,
    mp: Matcher,
    cache: Arc<PairingCache>,
}

impl Theorem12Pair {
    pub fn new(p: LabeledPoset, p_prime: LabeledPoset) -> Result<Self> {
        Self::with_cache(p, p_prime, Arc::new(PairingCache::new()))
    }

    pub fn with_cache(p: LabeledPoset, p_prime: LabeledPoset, cache: Arc<PairingCache>) -> Result<Self> {
        let fail = |msg: String| Err(Error::Hypothesis(msg));
        let k = p.size();
        if p_prime.size() != k {
            return fail("sizes differ".into());
        }
        let isolated = p.isolated_vertices();
        if isolated != p_prime.isolated_vertices() {
            return fail("isolated labels differ".into());
        }
        let Some(i1) = isolated.min() else {
            return fail(format!("{p} has no isolated label"));
        };
        let lower_set = LabelSet::range(1, i1 - 1);
        let upper_core = LabelSet::range(i1, k).difference(isolated);
        for x in upper_core.iter() {
            for y in lower_set.iter() {
                if !p.less(y, x) || !p_prime.less(y, x) {
                    return fail(format!("label {x} must lie above label {y} in both POPs"));
                }
            }
        }
        if p.induced_subposet(upper_core)?.relation != p_prime.induced_subposet(upper_core)?.relation {
            return fail("the upper parts differ".into());
        }
        let upper = p.restrict(LabelSet::range(i1, k))?;
        let upper_isolated: LabelSet = isolated.iter().map(|l| l - i1 + 1).collect();
        Ok(Theorem12Pair {
            lower: p.restrict(lower_set)?,
            lower_prime: p_prime.restrict(lower_set)?,
            upper: Matcher::new(&upper),
            upper_isolated,
            mp: Matcher::new(&p),
            p,
            p_prime,
            cache,
        })
    }

    pub fn p(&self) -> &LabeledPoset {
        &self.p
    }

    pub fn p_prime(&self) -> &LabeledPoset {
        &self.p_prime
    }

    /// The same construction with the roles of `p` and `p′` exchanged.
    pub fn reversed(&self) -> Result<Theorem12Pair> {
        Self::with_cache(self.p_prime.clone(), self.p.clone(), Arc::clone(&self.cache))
    }

    /// Whether some columns right of `col` host the upper part, with every
    /// non-isolated one holding its 1 above `row`.
    pub fn is_white(&self, w: &Permutation, row: usize, col: usize) -> bool {
        let seq = w.values();
        let mut vals = [0usize; 32];
        self.upper_from(seq, row, 0, col, 0, &mut vals)
    }

    fn upper_from(&self, seq: &[usize], row: usize, label: usize, start: usize, assigned: u32, vals: &mut [usize; 32]) -> bool {
        let k = self.upper.size();
        if label == k {
            return true;
        }
        let free = self.upper_isolated.contains(label + 1);
        for pos in start..seq.len() {
            if seq.len() - pos < k - label {
                break;
            }
            let v = seq[pos];
            if free || (v > row && self.upper.fits(label, v, assigned, vals)) {
                vals[label] = v;
                if self.upper_from(seq, row, label + 1, pos + 1, assigned | (1 << label), vals) {
                    return true;
                }
            }
        }
        false
    }

    /// The image of an avoider of `p`.
    pub fn forward(&self, w: &Permutation) -> Result<Permutation> {
        require_avoider(w, &self.p, &self.mp)?;
        let n = w.len();
        let seq = w.values();
        let white: Vec<Vec<bool>> =
            (1..=n).map(|r| (1..=n).map(|c| self.is_white(w, r, c)).collect()).collect();
        let gray_cols: Vec<bool> = (1..=n).map(|c| !white[seq[c - 1] - 1][c - 1]).collect();
        let mut gray_rows = vec![false; n + 1];
        for c in 1..=n {
            if gray_cols[c - 1] {
                gray_rows[seq[c - 1]] = true;
            }
        }
        let rows: Vec<usize> = (1..=n).filter(|&r| !gray_rows[r]).collect();
        let cols: Vec<usize> = (1..=n).filter(|&c| !gray_cols[c - 1]).collect();
        let mut lengths = Vec::with_capacity(rows.len());
        for &r in &rows {
            let pattern: Vec<bool> = cols.iter().map(|&c| white[r - 1][c - 1]).collect();
            let len = pattern.iter().take_while(|&&b| b).count();
            if pattern[len..].iter().any(|&b| b) {
                return Err(Error::Invariant(format!("white cells of row {r} are not left-justified for {w}")));
            }
            lengths.push(len);
        }
        let board = FerrersBoard::new(lengths)
            .map_err(|e| Error::Invariant(format!("white region of {w} is not a Ferrers board: {e}")))?;
        let inner: Vec<usize> = cols
            .iter()
            .map(|&c| rows.iter().position(|&r| r == seq[c - 1]).expect("white row") + 1)
            .collect();
        let pairing = self.cache.get(&board, &self.lower, &self.lower_prime)?;
        let image = pairing
            .forward_rows(&inner)
            .ok_or_else(|| Error::Invariant(format!("inner filling of {w} avoids the wrong pattern")))?;
        let mut out = seq.to_vec();
        for (j, &c) in cols.iter().enumerate() {
            out[c - 1] = rows[image[j] - 1];
        }
        Permutation::new(out)
    }

    /// The inverse image of an avoider of `p′`.
    pub fn inverse(&self, w: &Permutation) -> Result<Permutation> {
        self.reversed()?.forward(w)
    }
}

/// Maps avoiders of `p + q` to avoiders of `p + q′`, given that `q` and `q′`
/// are Wilf-equivalent.
#[derive(Clone, Debug)]
pub struct Theorem14Triple {
    p: LabeledPoset,
    q: LabeledPoset,
    q_prime: LabeledPoset,
    mp: Matcher,
    source: LabeledPoset,
    ms: Matcher,
    cache: Arc<PairingCache>,
}

impl Theorem14Triple {
    pub fn new(p: LabeledPoset, q: LabeledPoset, q_prime: LabeledPoset) -> Result<Self> {
        Self::with_cache(p, q, q_prime, Arc::new(PairingCache::new()))
    }

    pub fn with_cache(p: LabeledPoset, q: LabeledPoset, q_prime: LabeledPoset, cache: Arc<PairingCache>) -> Result<Self> {
        if q.size() != q_prime.size() {
            return Err(Error::Hypothesis(format!("{q} and {q_prime} differ in size")));
        }
        let source = p.disjoint_sum(&q)?;
        Ok(Theorem14Triple { mp: Matcher::new(&p), ms: Matcher::new(&source), source, p, q, q_prime, cache })
    }

    pub fn source(&self) -> &LabeledPoset {
        &self.source
    }

    pub fn target(&self) -> LabeledPoset {
        self.p.disjoint_sum(&self.q_prime).expect("sizes already checked")
    }

    pub fn reversed(&self) -> Result<Theorem14Triple> {
        Self::with_cache(self.p.clone(), self.q_prime.clone(), self.q.clone(), Arc::clone(&self.cache))
    }

    /// Number of leading columns in the shortest prefix containing `p`.
    pub fn prefix_length(&self, w: &Permutation) -> Option<usize> {
        let k = self.mp.size();
        (0..w.len()).find(|&i| self.mp.occurs_ending_at(w.values(), i, k)).map(|i| i + 1)
    }

    pub fn forward(&self, w: &Permutation) -> Result<Permutation> {
        require_avoider(w, &self.source, &self.ms)?;
        let Some(m) = self.prefix_length(w) else {
            return Ok(w.clone());
        };
        let seq = w.values();
        let tail = &seq[m..];
        let inner = Permutation::standardize(tail);
        let board = FerrersBoard::square(tail.len());
        let pairing = self.cache.get(&board, &self.q, &self.q_prime)?;
        let image = pairing
            .forward_rows(inner.values())
            .ok_or_else(|| Error::Invariant(format!("the part of {w} right of column {m} contains {}", self.q)))?;
        let mut values: Vec<usize> = tail.to_vec();
        values.sort_unstable();
        let mut out = seq[..m].to_vec();
        out.extend(image.iter().map(|&r| values[r - 1]));
        Permutation::new(out)
    }

    pub fn inverse(&self, w: &Permutation) -> Result<Permutation> {
        self.reversed()?.forward(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutation::avoiders;

    fn pop(s: &str) -> LabeledPoset {
        s.parse().unwrap()
    }

    #[test]
    fn theorem12_example_hypotheses() {
        let t = Theorem12Pair::new(pop("pop 5: c[5>1>2>3], i[4]"), pop("pop 5: c[5>3>2>1], i[4]")).unwrap();
        assert_eq!(t.lower.to_string(), "pop 3: c[1>2>3]");
        assert_eq!(t.upper_isolated, LabelSet::from_iter([1]));
        assert!(Theorem12Pair::new(pop("pop 3: c[1>2>3]"), pop("pop 3: c[3>2>1]")).is_err());
    }

    #[test]
    fn theorem12_identity_without_upper_occurrences() {
        let t = Theorem12Pair::new(pop("pop 5: c[5>1>2>3], i[4]"), pop("pop 5: c[5>3>2>1], i[4]")).unwrap();
        // with fewer than two columns nothing is white
        let w: Permutation = "1".parse().unwrap();
        assert_eq!(t.forward(&w).unwrap(), w);
    }

    #[test]
    fn theorem14_fixes_avoiders_of_p() {
        let t = Theorem14Triple::new(pop("pop 2: c[1>2]"), pop("pop 2: c[2>1]"), pop("pop 2: c[1>2]")).unwrap();
        for w in avoiders(&pop("pop 2: c[1>2]"), 4) {
            assert_eq!(t.forward(&w).unwrap(), w);
        }
    }
}
