//! Finite checks behind `popwilf check`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bijections::{
    verify_theorem12, verify_theorem13, verify_theorem14, verify_theorem16, Theorem12Pair, Theorem13Pair,
    Theorem14Triple, Variant,
};
use crate::classify::checks::{gk_samples, GK_HORIZON};
use crate::classify::{chain_component_pops, gk_reduction_check};
use crate::error::{Error, Result};
use crate::ferrers::{essential_occurrence, shape_wilf_check_with_budget, Transversal};
use crate::permutation::{contains_pop, count_avoiders_with_budget, Permutation};
use crate::poset::{LabelSet, LabeledPoset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremId {
    OrdinalSum,
    Coloring,
    TopSwap,
    DisjointSum,
    Commutation,
    Encoding,
    EssentialOccurrence,
    BlockReversal,
    ProductFormula,
}

impl TheoremId {
    pub const ALL: [TheoremId; 9] = [
        TheoremId::OrdinalSum,
        TheoremId::Coloring,
        TheoremId::TopSwap,
        TheoremId::DisjointSum,
        TheoremId::Commutation,
        TheoremId::Encoding,
        TheoremId::EssentialOccurrence,
        TheoremId::BlockReversal,
        TheoremId::ProductFormula,
    ];

    pub fn id(self) -> &'static str {
        match self {
            TheoremId::OrdinalSum => "1.1",
            TheoremId::Coloring => "1.2",
            TheoremId::TopSwap => "1.3",
            TheoremId::DisjointSum => "1.4",
            TheoremId::Commutation => "1.5",
            TheoremId::Encoding => "1.6",
            TheoremId::EssentialOccurrence => "lemma-2.1",
            TheoremId::BlockReversal => "lemma-3.1",
            TheoremId::ProductFormula => "gk-5.1",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::OrdinalSum => "shape-Wilf-equivalence survives adding a single vertex on top",
            TheoremId::Coloring => "the recolouring map is a bijection S_n(p) -> S_n(p')",
            TheoremId::TopSwap => "the three-step map F and its inverse G are mutually inverse bijections",
            TheoremId::DisjointSum => "the prefix-rewriting map is a bijection S_n(p+q) -> S_n(p+q')",
            TheoremId::Commutation => "|S_n(p+q)| = |S_n(q+p)| for chain-component p, q",
            TheoremId::Encoding => "the encoding bijection transfers avoiders between the two size-3 POPs on every board",
            TheoremId::EssentialOccurrence => "POP containment agrees with essential-occurrence existence",
            TheoremId::BlockReversal => "r_Q(r(r_P(p+q))) = q+p",
            TheoremId::ProductFormula => "|S_n(p)| = n!/(n-s)! |S_(n-s)(q)| when the isolated labels sit at the ends",
        }
    }

    /// Default size bound: permutation length or board size.
    pub fn default_nmax(self) -> usize {
        match self {
            TheoremId::OrdinalSum | TheoremId::Encoding | TheoremId::EssentialOccurrence => 5,
            TheoremId::Coloring | TheoremId::TopSwap | TheoremId::DisjointSum => 6,
            TheoremId::Commutation | TheoremId::ProductFormula => 7,
            TheoremId::BlockReversal => 5,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let bare = lower.trim_start_matches("theorem").trim_start_matches("thm").trim_start_matches(['-', ' ']);
        let found = match bare {
            "1.1" => TheoremId::OrdinalSum,
            "1.2" => TheoremId::Coloring,
            "1.3" => TheoremId::TopSwap,
            "1.4" => TheoremId::DisjointSum,
            "1.5" => TheoremId::Commutation,
            "1.6" => TheoremId::Encoding,
            "lemma-2.1" | "lemma2.1" | "2.1" => TheoremId::EssentialOccurrence,
            "lemma-3.1" | "lemma3.1" | "3.1" => TheoremId::BlockReversal,
            "gk-5.1" | "gk5.1" | "5.1" | "gk" => TheoremId::ProductFormula,
            _ => return Err(Error::Unknown { kind: "theorem", value: s.into() }),
        };
        Ok(found)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub theorem: String,
    pub statement: String,
    pub n_max: usize,
    pub cases: usize,
    pub verdict: bool,
    pub counterexample: Option<String>,
    pub details: Value,
}

impl CheckReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn summary(&self) -> String {
        let mut out = format!(
            "{} ({}): {} cases up to n={}, {}\n",
            self.theorem,
            self.statement,
            self.cases,
            self.n_max,
            if self.verdict { "pass" } else { "FAIL" }
        );
        if let Some(c) = &self.counterexample {
            out.push_str(&format!("  counterexample: {c}\n"));
        }
        out
    }
}

fn pop(s: &str) -> LabeledPoset {
    s.parse().expect("built-in POP strings parse")
}

/// The pair of the encoding bijection and the classical pair `12`, `21`.
pub fn shape_wilf_pairs() -> Vec<(LabeledPoset, LabeledPoset)> {
    vec![
        (Variant::Ascending.pop(), Variant::Descending.pop()),
        (pop("pop 2: c[2>1]"), pop("pop 2: c[1>2]")),
    ]
}

pub fn coloring_example() -> (LabeledPoset, LabeledPoset) {
    (pop("pop 5: c[5>1>2>3], i[4]"), pop("pop 5: c[5>3>2>1], i[4]"))
}

pub fn top_swap_example() -> (LabeledPoset, LabeledPoset) {
    (pop("pop 5: c[3>5>1>2], i[4]"), pop("pop 5: c[5>3>1>2], i[4]"))
}

/// `p` = 21, `q` = 12, `q′` = 21.
pub fn disjoint_sum_example() -> (LabeledPoset, LabeledPoset, LabeledPoset) {
    (pop("pop 2: c[1>2]"), pop("pop 2: c[2>1]"), pop("pop 2: c[1>2]"))
}

/// Pairs of nonempty chain-component POPs with total size at most `total`.
pub fn chain_pairs(total: usize) -> Vec<(LabeledPoset, LabeledPoset)> {
    let by_size: Vec<Vec<LabeledPoset>> = (0..total).map(chain_component_pops).collect();
    let mut out = Vec::new();
    for a in 1..total {
        for b in 1..=total - a {
            for p in &by_size[a] {
                for q in &by_size[b] {
                    out.push((p.clone(), q.clone()));
                }
            }
        }
    }
    out
}

/// Size caps for checks and sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// longest permutations enumerated
    pub length: usize,
    /// largest boards enumerated
    pub board: usize,
}

impl Budget {
    pub const DEFAULT: Budget = Budget { length: crate::permutation::DEFAULT_MAX_N, board: crate::ferrers::DEFAULT_MAX_BOARD };
    pub const UNSAFE: Budget = Budget { length: 12, board: 10 };
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}

/// Runs one check, with `n_max` bounding permutation lengths or board sizes.
pub fn run_check(id: TheoremId, n_max: Option<usize>, budget: Budget) -> Result<CheckReport> {
    let n = n_max.unwrap_or_else(|| id.default_nmax());
    let uses_boards = matches!(id, TheoremId::OrdinalSum | TheoremId::Encoding);
    let limit = if uses_boards { budget.board } else { budget.length };
    if n > limit {
        return Err(Error::BudgetExceeded { what: "check size", requested: n, limit });
    }
    let report = |cases: usize, counterexample: Option<String>, details: Value| CheckReport {
        theorem: id.id().to_string(),
        statement: id.statement().to_string(),
        n_max: n,
        cases,
        verdict: counterexample.is_none(),
        counterexample,
        details,
    };
    match id {
        TheoremId::OrdinalSum => {
            let one = LabeledPoset::antichain(1);
            let mut details = Vec::new();
            let mut counterexample = None;
            for (p, q) in shape_wilf_pairs() {
                let base = shape_wilf_check_with_budget(&p, &q, n.saturating_sub(1), limit)?;
                let (ps, qs) = (p.ordinal_sum(&one)?, q.ordinal_sum(&one)?);
                let sum = shape_wilf_check_with_budget(&ps, &qs, n, limit)?;
                if counterexample.is_none() && base.verdict && !sum.verdict {
                    counterexample = sum.counterexample.as_ref().map(|b| format!("{ps} vs {qs} on {b}"));
                }
                details.push(json!({
                    "p": p.to_string(), "p_prime": q.to_string(),
                    "base_verdict": base.verdict, "sum_verdict": sum.verdict,
                    "boards": sum.boards.len(),
                }));
            }
            Ok(report(details.len(), counterexample, Value::Array(details)))
        }
        TheoremId::Coloring => {
            let (p, q) = coloring_example();
            let r = verify_theorem12(&Theorem12Pair::new(p, q)?, n)?;
            Ok(report(r.instances.len(), counterexample_of(&r), json!(r.sizes)))
        }
        TheoremId::TopSwap => {
            let (p, q) = top_swap_example();
            let r = verify_theorem13(&Theorem13Pair::new(p, q)?, n);
            Ok(report(r.instances.len(), counterexample_of(&r), json!(r.sizes)))
        }
        TheoremId::DisjointSum => {
            let (p, q, q2) = disjoint_sum_example();
            let r = verify_theorem14(&Theorem14Triple::new(p, q, q2)?, n)?;
            Ok(report(r.instances.len(), counterexample_of(&r), json!(r.sizes)))
        }
        TheoremId::Commutation => {
            let pairs = chain_pairs(5);
            let results: Vec<(String, String, bool)> = pairs
                .par_iter()
                .map(|(p, q)| {
                    let pq = p.disjoint_sum(q)?;
                    let qp = q.disjoint_sum(p)?;
                    let a = count_avoiders_with_budget(&pq, n, limit)?;
                    let b = count_avoiders_with_budget(&qp, n, limit)?;
                    Ok((pq.to_string(), qp.to_string(), a.counts == b.counts))
                })
                .collect::<Result<_>>()?;
            let counterexample = results.iter().find(|r| !r.2).map(|r| format!("{} vs {}", r.0, r.1));
            Ok(report(results.len(), counterexample, json!({ "pairs": results.len() })))
        }
        TheoremId::Encoding => {
            let (p, q) = (Variant::Ascending.pop(), Variant::Descending.pop());
            let counts = shape_wilf_check_with_budget(&p, &q, n, limit)?;
            let r = verify_theorem16(n);
            let counterexample = counts
                .counterexample
                .as_ref()
                .map(|b| format!("unequal counts on {b}"))
                .or_else(|| counterexample_of(&r));
            Ok(report(
                r.instances.len(),
                counterexample,
                json!({ "boards": counts.boards.len(), "instances": r.instances.len() }),
            ))
        }
        TheoremId::EssentialOccurrence => {
            let pops: Vec<LabeledPoset> = (1..=4).flat_map(chain_component_pops).collect();
            let perms: Vec<Permutation> = (1..=n).flat_map(Permutation::all).collect();
            let disagreements: Vec<String> = pops
                .par_iter()
                .flat_map_iter(|p| {
                    perms.iter().filter_map(move |w| {
                        let t = Transversal::from_permutation(w);
                        let direct = contains_pop(w, p).is_some();
                        match essential_occurrence(&t, p) {
                            Ok(e) if e.is_some() == direct => None,
                            Ok(_) => Some(format!("{w} with {p}")),
                            Err(e) => Some(format!("{w} with {p}: {e}")),
                        }
                    })
                })
                .collect();
            Ok(report(
                pops.len() * perms.len(),
                disagreements.first().cloned(),
                json!({ "pops": pops.len(), "disagreements": disagreements.len() }),
            ))
        }
        TheoremId::BlockReversal => {
            let pairs = chain_pairs(n);
            let mut counterexample = None;
            for (p, q) in &pairs {
                let (a, b) = (p.size(), q.size());
                let image = p
                    .disjoint_sum(q)?
                    .block_reversal(LabelSet::range(1, a))?
                    .reverse()
                    .block_reversal(LabelSet::range(1, b))?;
                if image != q.disjoint_sum(p)? {
                    counterexample = Some(format!("p = {p}, q = {q}"));
                    break;
                }
            }
            Ok(report(pairs.len(), counterexample, json!({ "pairs": pairs.len() })))
        }
        TheoremId::ProductFormula => {
            let horizon = n_max.unwrap_or(GK_HORIZON);
            let reports: Vec<_> = gk_samples().iter().map(|p| gk_reduction_check(p, horizon)).collect::<Result<_>>()?;
            let counterexample = reports.iter().find(|r| !r.verdict).map(|r| r.pop.clone());
            let split_inconsistent = reports.iter().any(|r| !r.printed_split_consistent);
            Ok(report(
                reports.len(),
                counterexample,
                json!({ "literal_case_split_contradicted": split_inconsistent, "probes": reports }),
            ))
        }
    }
}

fn counterexample_of(r: &crate::bijections::BijectionReport) -> Option<String> {
    if r.verdict {
        return None;
    }
    r.counterexample
        .as_ref()
        .map(|c| format!("{} -> {}", c.input, c.output.as_deref().unwrap_or("error")))
        .or_else(|| r.sizes.iter().find(|s| !s.ok).map(|s| format!("cardinality mismatch at n={}", s.n)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(id.id().parse::<TheoremId>().unwrap(), id);
        }
        assert_eq!("theorem-1.6".parse::<TheoremId>().unwrap(), TheoremId::Encoding);
        assert!("1.7".parse::<TheoremId>().is_err());
    }

    #[test]
    fn chain_pair_counts() {
        // sizes 1,3,13 chain-component POPs: (1,1) (1,2) (2,1)
        assert_eq!(chain_pairs(3).len(), 1 + 3 + 3);
        assert_eq!(chain_pairs(5).len(), 266);
    }

    #[test]
    fn small_checks_pass() {
        for id in [TheoremId::BlockReversal, TheoremId::EssentialOccurrence] {
            let r = run_check(id, Some(4), Budget::DEFAULT).unwrap();
            assert!(r.verdict, "{}", r.summary());
        }
    }
}
