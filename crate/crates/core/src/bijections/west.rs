//! Rank-preserving exchange between two POPs that differ only in the order
//! of their two largest labels.
//!
//! `p` has `k` below `k - 1` and `p′` has `k - 1` below `k`; both agree on
//! the labels `[k - 2] \ I`, which lie below `k - 1` and `k`. Entries of rank
//! at most `k - 2` stay fixed. The entries of rank `k - 1` are redistributed
//! over their own positions from left to right, each time taking the largest
//! (forward) or smallest (inverse) remaining value that keeps the rank at
//! `k - 1`.

use crate::error::{Error, Result};
use crate::permutation::{Matcher, Permutation};
use crate::poset::{LabelSet, LabeledPoset};

/// A pair of POPs satisfying the exchange hypotheses.
#[derive(Clone, Debug)]
pub struct WestPair {
    p: LabeledPoset,
    p_prime: LabeledPoset,
    mp: Matcher,
    mq: Matcher,
}

impl WestPair {
    pub fn new(p: LabeledPoset, p_prime: LabeledPoset) -> Result<Self> {
        check_top_swap(&p, &p_prime, 1)?;
        let mp = Matcher::new(&p);
        let mq = Matcher::new(&p_prime);
        Ok(WestPair { p, p_prime, mp, mq })
    }

    pub fn p(&self) -> &LabeledPoset {
        &self.p
    }

    pub fn p_prime(&self) -> &LabeledPoset {
        &self.p_prime
    }

    /// `S_n(p) -> S_n(p′)`.
    pub fn forward(&self, w: &Permutation) -> Result<Permutation> {
        require_avoider(w, &self.p, &self.mp)?;
        redistribute(&self.mp, w.values(), Fit::Largest).map(permutation)
    }

    /// `S_n(p′) -> S_n(p)`.
    pub fn inverse(&self, w: &Permutation) -> Result<Permutation> {
        require_avoider(w, &self.p_prime, &self.mq)?;
        redistribute(&self.mq, w.values(), Fit::Smallest).map(permutation)
    }
}

fn permutation(values: Vec<usize>) -> Permutation {
    Permutation::new(values).expect("redistribution permutes values")
}

pub(crate) fn require_avoider(w: &Permutation, p: &LabeledPoset, m: &Matcher) -> Result<()> {
    let k = m.size();
    if (0..w.len()).any(|i| m.occurs_ending_at(w.values(), i, k)) {
        return Err(Error::NotAnAvoider(format!("{w} contains {p}")));
    }
    Ok(())
}

/// Checks the exchange hypotheses for the labels `top - gap` and `top`
/// (`gap = 1` for the plain exchange, `gap = 2` when label `top - 1` is an
/// isolated vertex sitting between them).
pub(crate) fn check_top_swap(p: &LabeledPoset, q: &LabeledPoset, gap: usize) -> Result<()> {
    let k = p.size();
    let fail = |msg: String| Err(Error::Hypothesis(msg));
    if q.size() != k {
        return fail(format!("sizes differ: {} and {}", k, q.size()));
    }
    if k < gap + 1 {
        return fail(format!("size {k} is too small"));
    }
    let isolated = p.isolated_vertices();
    if isolated != q.isolated_vertices() {
        return fail(format!("isolated labels differ: {:?} and {:?}", isolated, q.isolated_vertices()));
    }
    let low = k - gap;
    if isolated.contains(k) || isolated.contains(low) {
        return fail(format!("labels {low} and {k} must not be isolated"));
    }
    if gap == 2 && !isolated.contains(k - 1) {
        return fail(format!("label {} must be isolated", k - 1));
    }
    if low >= 2 && isolated.contains(low - 1) {
        return fail(format!("label {} must not be isolated", low - 1));
    }
    let base: LabelSet = LabelSet::range(1, low.saturating_sub(1)).difference(isolated);
    for x in base.iter() {
        for poset in [p, q] {
            if !poset.less(x, low) || !poset.less(x, k) {
                return fail(format!("label {x} must lie below {low} and {k} in {poset}"));
            }
        }
    }
    if p.induced_subposet(base)?.relation != q.induced_subposet(base)?.relation {
        return fail("the posets differ on the lower labels".into());
    }
    if !p.less(k, low) {
        return fail(format!("{p} must have {k} below {low}"));
    }
    if !q.less(low, k) {
        return fail(format!("{q} must have {low} below {k}"));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Fit {
    Largest,
    Smallest,
}

/// Rank at least `k - 1` at position `i`.
fn high_rank(m: &Matcher, seq: &[usize], i: usize) -> bool {
    let k = m.size();
    m.occurs_ending_at(seq, i, k - 1) || m.occurs_ending_at(seq, i, k)
}

pub(crate) fn redistribute(m: &Matcher, w: &[usize], fit: Fit) -> Result<Vec<usize>> {
    let k = m.size();
    let slots: Vec<usize> = (0..w.len())
        .filter(|&i| m.occurs_ending_at(w, i, k - 1) && !m.occurs_ending_at(w, i, k))
        .collect();
    let mut pool: Vec<usize> = slots.iter().map(|&i| w[i]).collect();
    pool.sort_unstable();
    let mut out = w.to_vec();
    for &i in &slots {
        let mut chosen = None;
        for (idx, &x) in pool.iter().enumerate() {
            out[i] = x;
            if high_rank(m, &out, i) {
                chosen = Some(idx);
                if fit == Fit::Smallest {
                    break;
                }
            }
        }
        let idx = chosen.ok_or_else(|| Error::Invariant(format!("no value fits position {} of {w:?}", i + 1)))?;
        out[i] = pool.remove(idx);
    }
    Ok(out)
}
