//! Rendering classification reports as Markdown, CSV or JSON tables.
//!
//! Classes are grouped by the isolated labels of their displayed members:
//! each class shows the members whose isolated-label set is the largest one
//! in the class, and groups appear in decreasing order of that set.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::classify::tables::printed_table;
use crate::classify::{to_tuple, WilfClass, WilfClassReport};
use crate::error::{Error, Result};
use crate::poset::LabeledPoset;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Md,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "md" | "markdown" => Ok(Format::Md),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::Unknown { kind: "format", value: s.into() }),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Md => "md",
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

/// One rendered row.
#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub isolated: Vec<usize>,
    pub printed_row: Option<usize>,
    pub shown: Vec<String>,
    pub class_size: usize,
    pub counts: Vec<u64>,
    pub known_id: Option<&'static str>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Table {
    pub family: String,
    pub horizon: usize,
    pub basis: String,
    pub groups: Vec<Vec<TableRow>>,
}

fn display_name(p: &LabeledPoset) -> String {
    to_tuple(p).unwrap_or_else(|| p.to_string())
}

fn table_row(report: &WilfClassReport, class: &WilfClass) -> TableRow {
    let key = |m: &LabeledPoset| {
        let mut v = m.isolated_vertices().to_vec();
        v.reverse();
        v
    };
    let isolated = class.members.iter().map(key).max().unwrap_or_default();
    let mut shown: Vec<String> =
        class.members.iter().filter(|m| key(m) == isolated).map(display_name).collect();
    shown.sort();
    let counts = &class.sequence.counts;
    let printed_row = printed_table(report.family).and_then(|t| {
        t.rows
            .iter()
            .find(|r| counts.len() <= r.counts.len() && r.counts[..counts.len()] == counts[..])
            .map(|r| r.number)
    });
    let mut isolated = isolated;
    isolated.reverse();
    TableRow {
        isolated,
        printed_row,
        shown,
        class_size: class.members.len(),
        counts: counts.clone(),
        known_id: class.known_id,
    }
}

/// Groups a report's classes by isolated labels, largest group key first.
pub fn build_table(report: &WilfClassReport) -> Table {
    let mut rows: Vec<TableRow> = report.classes.iter().map(|c| table_row(report, c)).collect();
    let group_key = |r: &TableRow| r.isolated.iter().rev().copied().collect::<Vec<_>>();
    rows.sort_by(|a, b| {
        group_key(b)
            .cmp(&group_key(a))
            .then_with(|| a.printed_row.unwrap_or(usize::MAX).cmp(&b.printed_row.unwrap_or(usize::MAX)))
            .then_with(|| a.shown.cmp(&b.shown))
    });
    let mut groups: Vec<Vec<TableRow>> = Vec::new();
    for row in rows {
        match groups.last_mut() {
            Some(g) if g[0].isolated == row.isolated => g.push(row),
            _ => groups.push(vec![row]),
        }
    }
    Table { family: report.family.to_string(), horizon: report.horizon, basis: report.basis.clone(), groups }
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn markdown(t: &Table) -> String {
    let mut out = format!("## {} (horizon {}; {})\n\n", t.family, t.horizon, t.basis);
    out.push_str("| isolated | row | POPs | class size | counts | id |\n");
    out.push_str("|---|---|---|---|---|---|\n");
    for (i, group) in t.groups.iter().enumerate() {
        if i > 0 {
            out.push_str("| === | | | | | |\n");
        }
        for r in group {
            out.push_str(&format!(
                "| {{{}}} | {} | {} | {} | {} | {} |\n",
                join(&r.isolated, ","),
                r.printed_row.map_or("-".into(), |n| n.to_string()),
                r.shown.join(" "),
                r.class_size,
                join(&r.counts, ","),
                r.known_id.unwrap_or("-"),
            ));
        }
    }
    out
}

fn csv(t: &Table) -> String {
    let mut out = String::new();
    for (g, group) in t.groups.iter().enumerate() {
        for r in group {
            out.push_str(&format!(
                "{},{},\"{}\",{},\"{}\",{},\"{}\",{}\n",
                t.family,
                g + 1,
                join(&r.isolated, " "),
                r.printed_row.map_or(String::new(), |n| n.to_string()),
                r.shown.join(" "),
                r.class_size,
                join(&r.counts, ","),
                r.known_id.unwrap_or(""),
            ));
        }
    }
    out
}

/// Renders every report in the given format as one document.
pub fn emit_tables(reports: &[WilfClassReport], format: Format) -> String {
    let tables: Vec<Table> = reports.iter().map(build_table).collect();
    match format {
        Format::Json => serde_json::to_string_pretty(&tables).expect("tables serialize") + "\n",
        Format::Md => tables.iter().map(markdown).collect::<Vec<_>>().join("\n"),
        Format::Csv => {
            let mut out = String::from("family,group,isolated,row,pops,class_size,counts,id\n");
            for t in &tables {
                out.push_str(&csv(t));
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{generate_family, wilf_classes, FamilyTag, PopFamily};

    #[test]
    fn t4_ii_groups() {
        let report = wilf_classes(&generate_family(FamilyTag::T4II), 6).unwrap();
        let table = build_table(&report);
        assert_eq!(table.groups.len(), 2);
        assert_eq!(table.groups[0][0].isolated, [4]);
        assert_eq!(table.groups[0][0].printed_row, Some(1));
        assert_eq!(table.groups[1][0].isolated, [3]);
        for printed in ["(2,4,1;3)", "(4,1,2;3)", "(4,2,1;3)"] {
            assert!(table.groups[1][0].shown.iter().any(|s| s == printed));
        }
        let md = emit_tables(std::slice::from_ref(&report), Format::Md);
        assert_eq!(md.lines().filter(|l| l.starts_with("| {")).count(), 2);
        let csv = emit_tables(&[report], Format::Csv);
        assert_eq!(csv.lines().count(), 3);
    }

    #[test]
    fn empty_family() {
        let family = PopFamily { tag: FamilyTag::T4II, tuples: vec![], members: vec![] };
        let report = wilf_classes(&family, 4).unwrap();
        assert!(build_table(&report).groups.is_empty());
        assert_eq!(emit_tables(&[report], Format::Csv).lines().count(), 1);
    }
}
