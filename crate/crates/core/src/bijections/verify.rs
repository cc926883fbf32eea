//! Exhaustive checks that a map and its inverse are mutually inverse
//! bijections between two avoider sets.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::bijections::coloring::{Theorem12Pair, Theorem14Triple};
use crate::bijections::encoding::{decode, encode, Variant};
use crate::bijections::theorem13::Theorem13Pair;
use crate::bijections::west::WestPair;
use crate::error::Result;
use crate::ferrers::{board_avoiders, boards, FerrersBoard, Transversal};
use crate::permutation::{avoiders, Permutation};
use crate::poset::LabeledPoset;

/// One input of a sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub board: Option<String>,
    pub input: String,
    pub output: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub word: Option<String>,
    pub roundtrip_ok: bool,
    pub image_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl InstanceRecord {
    pub fn ok(&self) -> bool {
        self.roundtrip_ok && self.image_ok && self.error.is_none()
    }
}

/// Per-size (or per-board) cardinalities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SizeSummary {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub board: Option<String>,
    pub domain: usize,
    pub codomain: usize,
    pub image: usize,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BijectionReport {
    pub map: String,
    pub source: String,
    pub target: String,
    pub n_max: usize,
    pub sizes: Vec<SizeSummary>,
    pub instances: Vec<InstanceRecord>,
    pub failures: usize,
    pub verdict: bool,
    pub counterexample: Option<InstanceRecord>,
}

impl BijectionReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// One line per size plus the verdict, for terminals.
    pub fn summary(&self) -> String {
        let mut out = format!("{}: {} -> {}\n", self.map, self.source, self.target);
        for s in &self.sizes {
            let at = s.board.clone().unwrap_or_else(|| format!("n={}", s.n));
            out.push_str(&format!(
                "  {at}: domain {} codomain {} image {} {}\n",
                s.domain,
                s.codomain,
                s.image,
                if s.ok { "ok" } else { "FAIL" }
            ));
        }
        out.push_str(&format!("  failures: {}, verdict: {}\n", self.failures, if self.verdict { "pass" } else { "fail" }));
        out
    }

    fn finish(map: &str, source: String, target: String, n_max: usize, sizes: Vec<SizeSummary>, instances: Vec<InstanceRecord>) -> Self {
        let failures = instances.iter().filter(|r| !r.ok()).count() + sizes.iter().filter(|s| !s.ok).count();
        let counterexample = instances.iter().find(|r| !r.ok()).cloned();
        BijectionReport {
            map: map.to_string(),
            source,
            target,
            n_max,
            verdict: failures == 0,
            failures,
            counterexample,
            sizes,
            instances,
        }
    }
}

fn sweep_permutations<F, G>(
    map: &str,
    source: &LabeledPoset,
    target: &LabeledPoset,
    n_max: usize,
    forward: F,
    inverse: G,
) -> BijectionReport
where
    F: Fn(&Permutation) -> Result<Permutation> + Sync,
    G: Fn(&Permutation) -> Result<Permutation> + Sync,
{
    let mut sizes = Vec::new();
    let mut instances = Vec::new();
    for n in 0..=n_max {
        let domain: Vec<Permutation> = avoiders(source, n).collect();
        let codomain: HashSet<Permutation> = avoiders(target, n).collect();
        let records: Vec<(InstanceRecord, Option<Permutation>)> = domain
            .par_iter()
            .map(|w| {
                let (output, error) = match forward(w) {
                    Ok(v) => (Some(v), None),
                    Err(e) => (None, Some(e.to_string())),
                };
                let image_ok = output.as_ref().is_some_and(|v| codomain.contains(v));
                let roundtrip_ok = output.as_ref().is_some_and(|v| inverse(v).ok().as_ref() == Some(w));
                let record = InstanceRecord {
                    board: None,
                    input: w.to_string(),
                    output: output.as_ref().map(|v| v.to_string()),
                    word: None,
                    roundtrip_ok,
                    image_ok,
                    error,
                };
                (record, output)
            })
            .collect();
        let image: HashSet<&Permutation> = records.iter().filter_map(|(_, o)| o.as_ref()).collect();
        let ok = domain.len() == codomain.len() && image.len() == domain.len();
        sizes.push(SizeSummary { n, board: None, domain: domain.len(), codomain: codomain.len(), image: image.len(), ok });
        instances.extend(records.into_iter().map(|(r, _)| r));
    }
    BijectionReport::finish(map, source.to_string(), target.to_string(), n_max, sizes, instances)
}

/// Rank exchange between `p` and `p′` on `S_n`, `n ≤ n_max`.
pub fn verify_west(pair: &WestPair, n_max: usize) -> BijectionReport {
    sweep_permutations("west", pair.p(), pair.p_prime(), n_max, |w| pair.forward(w), |w| pair.inverse(w))
}

/// The three-step map `F` and its inverse `G`.
pub fn verify_theorem13(pair: &Theorem13Pair, n_max: usize) -> BijectionReport {
    sweep_permutations("f13", pair.p(), pair.p_prime(), n_max, |w| pair.forward(w), |w| pair.inverse(w))
}

/// The gray/white recolouring map on square boards.
pub fn verify_theorem12(pair: &Theorem12Pair, n_max: usize) -> Result<BijectionReport> {
    let back = pair.reversed()?;
    Ok(sweep_permutations("t12", pair.p(), pair.p_prime(), n_max, |w| pair.forward(w), |w| back.forward(w)))
}

/// The disjoint-sum map `S_n(p + q) -> S_n(p + q′)`.
pub fn verify_theorem14(triple: &Theorem14Triple, n_max: usize) -> Result<BijectionReport> {
    let back = triple.reversed()?;
    let target = triple.target();
    Ok(sweep_permutations("t14", triple.source(), &target, n_max, |w| triple.forward(w), |w| back.forward(w)))
}

/// The encoding bijection on every board with at most `n_max` rows.
pub fn verify_theorem16(n_max: usize) -> BijectionReport {
    let from = Variant::Ascending;
    let to = Variant::Descending;
    let all: Vec<FerrersBoard> = (1..=n_max).flat_map(boards).collect();
    let per_board: Vec<(SizeSummary, Vec<InstanceRecord>)> = all
        .par_iter()
        .map(|board| {
            let domain = board_avoiders(board, &from.pop());
            let codomain: HashSet<Transversal> = board_avoiders(board, &to.pop()).into_iter().collect();
            let mut image = HashSet::new();
            let mut records = Vec::with_capacity(domain.len());
            for t in &domain {
                let word = encode(t, from);
                let output = word.as_ref().ok().and_then(|w| decode(w, board, to).ok());
                let image_ok = output.as_ref().is_some_and(|u| codomain.contains(u));
                let roundtrip_ok = match (&word, &output) {
                    (Ok(w), Some(u)) => {
                        encode(u, to).ok().as_ref() == Some(w) && decode(w, board, from).ok().as_ref() == Some(t)
                    }
                    _ => false,
                };
                if let Some(u) = &output {
                    image.insert(u.clone());
                }
                records.push(InstanceRecord {
                    board: Some(board.to_string()),
                    input: t.to_string(),
                    output: output.as_ref().map(|u| u.to_string()),
                    word: word.as_ref().ok().map(|w| w.to_string()),
                    roundtrip_ok,
                    image_ok,
                    error: word.err().map(|e| e.to_string()),
                });
            }
            let ok = domain.len() == codomain.len() && image.len() == domain.len();
            let summary = SizeSummary {
                n: board.num_rows(),
                board: Some(board.to_string()),
                domain: domain.len(),
                codomain: codomain.len(),
                image: image.len(),
                ok,
            };
            (summary, records)
        })
        .collect();
    let mut sizes = Vec::new();
    let mut instances = Vec::new();
    for (s, r) in per_board {
        sizes.push(s);
        instances.extend(r);
    }
    BijectionReport::finish("t16", from.pop().to_string(), to.pop().to_string(), n_max, sizes, instances)
}
