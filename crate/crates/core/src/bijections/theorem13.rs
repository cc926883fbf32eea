//! Exchange of labels `k - 2` and `k` across an isolated label `k - 1`.
//!
//! With `q = st(p \ {k - 1})`, the map swaps each entry completing an
//! occurrence of `q` with its left neighbour, applies the rank exchange for
//! `(q, q′)`, and undoes the swaps at the same positions.

use crate::bijections::west::{check_top_swap, redistribute, require_avoider, Fit, WestPair};
use crate::error::{Error, Result};
use crate::permutation::{left_multiply_adjacent, Convention, Matcher, Permutation};
use crate::poset::LabeledPoset;

#[derive(Clone, Debug)]
pub struct Theorem13Pair {
    p: LabeledPoset,
    p_prime: LabeledPoset,
    west: WestPair,
    mp: Matcher,
    mp_prime: Matcher,
    mq: Matcher,
    mq_prime: Matcher,
    convention: Convention,
}

impl Theorem13Pair {
    pub fn new(p: LabeledPoset, p_prime: LabeledPoset) -> Result<Self> {
        check_top_swap(&p, &p_prime, 2)?;
        let k = p.size();
        let q = p.without(k - 1)?;
        let q_prime = p_prime.without(k - 1)?;
        let west = WestPair::new(q.clone(), q_prime.clone())
            .map_err(|e| Error::Hypothesis(format!("reduced pair fails the exchange hypotheses: {e}")))?;
        Ok(Theorem13Pair {
            mp: Matcher::new(&p),
            mp_prime: Matcher::new(&p_prime),
            mq: Matcher::new(&q),
            mq_prime: Matcher::new(&q_prime),
            p,
            p_prime,
            west,
            convention: Convention::Positions,
        })
    }

    /// Uses another action of the adjacent transpositions (for experiments;
    /// only [`Convention::Positions`] gives a bijection).
    pub fn with_convention(mut self, convention: Convention) -> Self {
        self.convention = convention;
        self
    }

    pub fn p(&self) -> &LabeledPoset {
        &self.p
    }

    pub fn p_prime(&self) -> &LabeledPoset {
        &self.p_prime
    }

    pub fn reduced(&self) -> &WestPair {
        &self.west
    }

    /// `F : S_n(p) -> S_n(p′)`.
    pub fn forward(&self, w: &Permutation) -> Result<Permutation> {
        require_avoider(w, &self.p, &self.mp)?;
        self.conjugate(w, &self.mq, Fit::Largest)
    }

    /// `G : S_n(p′) -> S_n(p)`.
    pub fn inverse(&self, w: &Permutation) -> Result<Permutation> {
        require_avoider(w, &self.p_prime, &self.mp_prime)?;
        self.conjugate(w, &self.mq_prime, Fit::Smallest)
    }

    fn conjugate(&self, w: &Permutation, m: &Matcher, fit: Fit) -> Result<Permutation> {
        let full = m.size();
        // 1-based positions of entries that complete an occurrence of q
        let positions: Vec<usize> =
            (0..w.len()).filter(|&i| m.occurs_ending_at(w.values(), i, full)).map(|i| i + 1).collect();
        let swapped = left_multiply_adjacent(w, &positions, self.convention)?;
        let moved = redistribute(m, swapped.values(), fit)?;
        let moved = Permutation::new(moved).expect("redistribution permutes values");
        left_multiply_adjacent(&moved, &positions, self.convention)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutation::avoiders;

    fn example() -> Theorem13Pair {
        let p = "pop 5: c[3>5>1>2], i[4]".parse().unwrap();
        let q = "pop 5: c[5>3>1>2], i[4]".parse().unwrap();
        Theorem13Pair::new(p, q).unwrap()
    }

    #[test]
    fn reduced_pair() {
        let t = example();
        assert_eq!(t.reduced().p().to_string(), "pop 4: c[3>4>1>2]");
        assert_eq!(t.reduced().p_prime().to_string(), "pop 4: c[4>3>1>2]");
    }

    #[test]
    fn short_permutations_are_fixed() {
        let t = example();
        // full occurrences of the reduced pattern appear from n = 4 on
        for n in 0..4 {
            for w in avoiders(t.p(), n) {
                assert_eq!(t.forward(&w).unwrap(), w);
            }
        }
    }

    #[test]
    fn rejects_bad_pairs() {
        let p: LabeledPoset = "pop 5: c[3>5>1>2], i[4]".parse().unwrap();
        assert!(Theorem13Pair::new(p.clone(), p.clone()).is_err());
        let q: LabeledPoset = "pop 5: c[5>3>1>2>4]".parse().unwrap();
        assert!(Theorem13Pair::new(p, q).is_err());
    }
}
