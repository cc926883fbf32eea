//! Families of POPs whose components are chains, their symmetry orbits and
//! their Wilf classes up to a finite horizon.
//!
//! Family members are written in tuple notation: groups separated by `;`,
//! each group a chain listed largest element first, a one-element group an
//! isolated label. `(4,1,2;3)` is the chain `2 < 1 < 4` plus the isolated
//! label 3.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::permutation::{count_avoiders_with_budget, CountSequence};
use crate::poset::LabeledPoset;

pub mod checks;
pub mod emit;
pub mod sequences;
pub mod tables;

pub use checks::{dimitrov_check, dimitrov_check_with_budget, distant_to_pop, gk_reduction_check, DimitrovReport, GkReport};
pub use emit::{emit_tables, Format};
pub use sequences::{known_sequences, match_sequence, KnownSequence};
pub use tables::{printed_table, PrintedRow, PrintedTable, ALL_TABLES};

/// Default horizon for classification runs.
pub const DEFAULT_HORIZON: usize = 8;

/// The chain-component families of sizes 3 to 5.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    /// a single chain on three labels, `(a,b,c)`
    Size3Connected,
    /// a two-element chain and an isolated label, `(a,b;c)`
    Size3TwoChain,
    /// both size-3 families together
    Size3,
    /// `(a,b,c;d)`
    T4II,
    /// `(a,b;c,d)`
    T4III,
    /// `(a,b,c,d;e)`
    T5I,
    /// `(a,b,c;d;e)`
    T5II,
    /// `(a,b,c;d,e)`
    T5III,
    /// `(a,b;c,d;e)`
    T5IV,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 9] = [
        FamilyTag::Size3Connected,
        FamilyTag::Size3TwoChain,
        FamilyTag::Size3,
        FamilyTag::T4II,
        FamilyTag::T4III,
        FamilyTag::T5I,
        FamilyTag::T5II,
        FamilyTag::T5III,
        FamilyTag::T5IV,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::Size3Connected => "size3-connected",
            FamilyTag::Size3TwoChain => "size3-2chain",
            FamilyTag::Size3 => "size3",
            FamilyTag::T4II => "t4-ii",
            FamilyTag::T4III => "t4-iii",
            FamilyTag::T5I => "t5-i",
            FamilyTag::T5II => "t5-ii",
            FamilyTag::T5III => "t5-iii",
            FamilyTag::T5IV => "t5-iv",
        }
    }

    /// Group sizes of the tuple notation, in order.
    pub fn shape(self) -> &'static [usize] {
        match self {
            FamilyTag::Size3Connected => &[3],
            FamilyTag::Size3TwoChain => &[2, 1],
            FamilyTag::Size3 => &[],
            FamilyTag::T4II => &[3, 1],
            FamilyTag::T4III => &[2, 2],
            FamilyTag::T5I => &[4, 1],
            FamilyTag::T5II => &[3, 1, 1],
            FamilyTag::T5III => &[3, 2],
            FamilyTag::T5IV => &[2, 2, 1],
        }
    }

    /// Number of labelings in the tuple notation. Two isolated labels are
    /// unordered; two chains of equal length are not, so `(a,b;c,d)` and
    /// `(c,d;a,b)` both count although they name the same poset.
    pub fn stated_total(self) -> usize {
        match self {
            FamilyTag::Size3Connected | FamilyTag::Size3TwoChain => 6,
            FamilyTag::Size3 => 12,
            FamilyTag::T4II | FamilyTag::T4III => 24,
            FamilyTag::T5II => 60,
            FamilyTag::T5I | FamilyTag::T5III | FamilyTag::T5IV => 120,
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.name() == lower)
            .ok_or_else(|| Error::Unknown { kind: "family", value: s.into() })
    }
}

impl Serialize for FamilyTag {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// Parses tuple notation such as `(1,4,2;3;5)`.
pub fn parse_tuple(s: &str) -> Result<LabeledPoset> {
    let inner = s
        .trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::Parse { position: 0, message: format!("`{s}` is not a parenthesised tuple") })?;
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut offset = 1;
    for group in inner.split(';') {
        let mut labels = Vec::new();
        for token in group.split(',') {
            let label = token.trim().parse::<usize>().map_err(|_| Error::Parse {
                position: offset,
                message: format!("`{}` is not a label", token.trim()),
            })?;
            labels.push(label);
            offset += token.len() + 1;
        }
        groups.push(labels);
    }
    let size = groups.iter().map(Vec::len).sum();
    let chains: Vec<&[usize]> = groups.iter().map(Vec::as_slice).collect();
    let mut seen = BTreeSet::new();
    for &l in groups.iter().flatten() {
        if l == 0 || l > size || !seen.insert(l) {
            return Err(Error::Parse { position: 0, message: format!("labels of `{s}` must be 1..={size}, each once") });
        }
    }
    LabeledPoset::from_chains(size, &chains)
}

/// Tuple notation for a chain-component POP: chains by decreasing length
/// (ties by smallest label), isolated labels last in increasing order.
pub fn to_tuple(p: &LabeledPoset) -> Option<String> {
    if !p.all_chains() {
        return None;
    }
    let mut comps: Vec<Vec<usize>> = p
        .connected_components()
        .into_iter()
        .map(|c| {
            let mut labels = c.to_vec();
            labels.sort_by_key(|&l| std::cmp::Reverse(p.below(l).len()));
            labels
        })
        .collect();
    comps.sort_by_key(|c| (std::cmp::Reverse(c.len()), *c.iter().min().unwrap()));
    let groups: Vec<String> =
        comps.iter().map(|c| c.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",")).collect();
    Some(format!("({})", groups.join(";")))
}

/// All labelings of a family and the distinct posets they name.
#[derive(Clone, Debug, Serialize)]
pub struct PopFamily {
    pub tag: FamilyTag,
    pub tuples: Vec<String>,
    pub members: Vec<LabeledPoset>,
}

impl PopFamily {
    pub fn size(&self) -> usize {
        self.members.first().map_or(0, LabeledPoset::size)
    }
}

fn permutations_of(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations_of(&rest) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

/// Every labeling of the family's shape, plus the distinct POPs (in order of
/// first appearance).
pub fn generate_family(tag: FamilyTag) -> PopFamily {
    if tag == FamilyTag::Size3 {
        let a = generate_family(FamilyTag::Size3Connected);
        let b = generate_family(FamilyTag::Size3TwoChain);
        return PopFamily {
            tag,
            tuples: a.tuples.into_iter().chain(b.tuples).collect(),
            members: a.members.into_iter().chain(b.members).collect(),
        };
    }
    let shape = tag.shape();
    let k: usize = shape.iter().sum();
    let labels: Vec<usize> = (1..=k).collect();
    let mut tuples = Vec::new();
    let mut members = Vec::new();
    let mut seen = BTreeSet::new();
    for order in permutations_of(&labels) {
        let mut groups = Vec::with_capacity(shape.len());
        let mut at = 0;
        for &len in shape {
            groups.push(&order[at..at + len]);
            at += len;
        }
        // isolated labels form an unordered set
        let singles: Vec<usize> = groups.iter().filter(|g| g.len() == 1).map(|g| g[0]).collect();
        if singles.windows(2).any(|w| w[0] > w[1]) {
            continue;
        }
        let text: Vec<String> =
            groups.iter().map(|g| g.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",")).collect();
        tuples.push(format!("({})", text.join(";")));
        let p = LabeledPoset::from_chains(k, &groups).expect("tuple labelings are valid");
        if seen.insert(p.clone()) {
            members.push(p);
        }
    }
    PopFamily { tag, tuples, members }
}

/// Every POP of size `k` whose components are chains, sorted by serialization.
pub fn chain_component_pops(k: usize) -> Vec<LabeledPoset> {
    let labels: Vec<usize> = (1..=k).collect();
    let mut out = BTreeSet::new();
    for order in permutations_of(&labels) {
        // each bit of `cuts` ends a chain after that position
        for cuts in 0u32..(1 << k.saturating_sub(1)) {
            let mut groups: Vec<&[usize]> = Vec::new();
            let mut start = 0;
            for i in 0..k {
                if i + 1 == k || cuts & (1 << i) != 0 {
                    groups.push(&order[start..=i]);
                    start = i + 1;
                }
            }
            out.insert(LabeledPoset::from_chains(k, &groups).expect("segments are chains"));
        }
    }
    let mut v: Vec<LabeledPoset> = out.into_iter().collect();
    v.sort_by_key(|p| p.to_string());
    v
}

/// The images of `p` under reversal and complementation.
pub fn symmetry_images(p: &LabeledPoset) -> [LabeledPoset; 4] {
    let r = p.reverse();
    let c = p.complement();
    let rc = r.complement();
    [p.clone(), r, c, rc]
}

/// One orbit of the symmetry group inside a family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Orbit {
    pub representative: LabeledPoset,
    pub members: Vec<LabeledPoset>,
}

/// Orbits under reversal and complementation; each representative is the
/// member with the least serialization, and orbits are sorted by it.
pub fn symmetry_reduce(family: &PopFamily) -> Vec<Orbit> {
    let mut assigned: BTreeSet<LabeledPoset> = BTreeSet::new();
    let mut orbits = Vec::new();
    for p in &family.members {
        if assigned.contains(p) {
            continue;
        }
        let mut members: Vec<LabeledPoset> = symmetry_images(p).into_iter().collect();
        members.sort_by_key(|m| m.to_string());
        members.dedup();
        for m in &members {
            assigned.insert(m.clone());
        }
        orbits.push(Orbit { representative: members[0].clone(), members });
    }
    orbits.sort_by_key(|o| o.representative.to_string());
    orbits
}

/// POPs sharing a count sequence through the horizon.
#[derive(Clone, Debug, Serialize)]
pub struct WilfClass {
    pub representative: LabeledPoset,
    pub members: Vec<LabeledPoset>,
    pub sequence: CountSequence,
    pub known_id: Option<&'static str>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WilfClassReport {
    pub family: FamilyTag,
    pub horizon: usize,
    /// Equal counts through the horizon are necessary for Wilf-equivalence,
    /// not a proof of it.
    pub basis: String,
    pub classes: Vec<WilfClass>,
}

impl WilfClassReport {
    /// Whether the distinct computed sequences are exactly the distinct
    /// printed sequences truncated to the horizon; `None` without a printed
    /// table or beyond its range.
    pub fn agrees_with_printed(&self) -> Option<bool> {
        let table = printed_table(self.family)?;
        if self.horizon > 8 {
            return None;
        }
        let printed: BTreeSet<&[u64]> = table.rows.iter().map(|r| &r.counts[..self.horizon]).collect();
        let computed: BTreeSet<&[u64]> = self.classes.iter().map(|c| c.sequence.counts.as_slice()).collect();
        Some(printed == computed)
    }

    /// The class holding `p`, if any.
    pub fn class_of(&self, p: &LabeledPoset) -> Option<usize> {
        self.classes.iter().position(|c| c.members.contains(p))
    }
}

/// Partitions a family by exact avoider counts for `n = 1..=horizon`.
pub fn wilf_classes(family: &PopFamily, horizon: usize) -> Result<WilfClassReport> {
    wilf_classes_with_budget(family, horizon, DEFAULT_HORIZON)
}

pub fn wilf_classes_with_budget(family: &PopFamily, horizon: usize, limit: usize) -> Result<WilfClassReport> {
    if horizon > limit {
        return Err(Error::BudgetExceeded { what: "classification horizon", requested: horizon, limit });
    }
    let counted: Vec<(LabeledPoset, CountSequence)> = family
        .members
        .par_iter()
        .map(|p| count_avoiders_with_budget(p, horizon, limit).map(|s| (p.clone(), s)))
        .collect::<Result<_>>()?;
    let mut groups: BTreeMap<Vec<u64>, Vec<LabeledPoset>> = BTreeMap::new();
    for (p, seq) in counted {
        groups.entry(seq.counts).or_default().push(p);
    }
    let mut classes: Vec<WilfClass> = groups
        .into_iter()
        .map(|(counts, mut members)| {
            members.sort_by_key(|m| m.to_string());
            let representative = members[0].clone();
            let sequence = CountSequence { pattern: representative.to_string(), counts };
            let known_id = match_sequence(&sequence).map(|k| k.id);
            WilfClass { representative, members, sequence, known_id }
        })
        .collect();
    classes.sort_by_key(|c| c.representative.to_string());
    Ok(WilfClassReport {
        family: family.tag,
        horizon,
        basis: format!("equal avoider counts for n = 1..={horizon}"),
        classes,
    })
}
