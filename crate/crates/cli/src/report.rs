//! The JSON/text report printed by the analysis commands.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use hyperconn::{ClassReport, ClassWitness, Verdict};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    Vertices,
    Edges,
    None,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BudgetStatus {
    pub subsets: u64,
    pub paths: u64,
    pub trees: u64,
    /// `"ok"` or `"exhausted"`.
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exhausted: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassEntry {
    /// `"yes"`, `"no"` or `"unknown"`.
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub witness: serde_json::Value,
}

/// Everything a command reports. Vertex and edge ids are 1-based, as in the
/// input file.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    /// SHA-256 of the input bytes, lowercase hex.
    pub input_digest: String,
    pub value: Option<usize>,
    pub witness: Vec<usize>,
    pub witness_kind: WitnessKind,
    pub attained: bool,
    pub method: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<BTreeMap<&'static str, ClassEntry>>,
    pub verified: bool,
    pub elapsed_ms: f64,
    pub budget: BudgetStatus,
}

fn one_based(ids: &[usize]) -> Vec<usize> {
    ids.iter().map(|i| i + 1).collect()
}

fn class_witness(w: &ClassWitness) -> serde_json::Value {
    use serde_json::json;
    match w {
        ClassWitness::None => serde_json::Value::Null,
        ClassWitness::Tree(t) => {
            let edges: Vec<[usize; 2]> = t.edges().iter().map(|&(a, b)| [a + 1, b + 1]).collect();
            json!({ "tree_edges": edges })
        }
        ClassWitness::Colouring(c) => {
            let side: Vec<usize> = (0..c.len()).filter(|&v| c[v]).map(|v| v + 1).collect();
            json!({ "colour_class": side })
        }
        ClassWitness::Triple(t) => json!({ "triple": one_based(t) }),
        ClassWitness::Cycle { vertices, edges } => {
            json!({ "cycle_vertices": one_based(vertices), "cycle_edges": one_based(edges) })
        }
        ClassWitness::Ordering(o) => json!({ "ordering": one_based(o) }),
        ClassWitness::MatchingAndTransversal {
            matching,
            transversal,
        } => json!({ "matching": one_based(matching), "transversal": one_based(transversal) }),
    }
}

pub fn class_entries(report: &ClassReport) -> BTreeMap<&'static str, ClassEntry> {
    report
        .entries()
        .iter()
        .map(|(name, c)| {
            let (verdict, reason) = match &c.verdict {
                Verdict::Yes => ("yes", None),
                Verdict::No => ("no", None),
                Verdict::Unknown(why) => ("unknown", Some(why.clone())),
            };
            let entry = ClassEntry {
                verdict,
                reason,
                witness: class_witness(&c.witness),
            };
            (*name, entry)
        })
        .collect()
}

fn join(ids: &[usize]) -> String {
    if ids.is_empty() {
        return "-".into();
    }
    ids.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        if let Some([u, v]) = self.pair {
            let _ = writeln!(out, "pair: {u} {v}");
        }
        match self.value {
            Some(v) => {
                let _ = writeln!(out, "value: {v}");
            }
            None => out.push_str("value: -\n"),
        }
        if self.witness_kind != WitnessKind::None {
            let kind = match self.witness_kind {
                WitnessKind::Vertices => "vertices",
                _ => "edges",
            };
            let _ = writeln!(out, "witness ({kind}): {}", join(&self.witness));
        }
        let _ = writeln!(out, "attained: {}", self.attained);
        if let Some(m) = self.method {
            let _ = writeln!(out, "method: {m}");
        }
        if let Some(groups) = &self.components {
            for (i, g) in groups.iter().enumerate() {
                let _ = writeln!(out, "component {}: {}", i + 1, join(g));
            }
        }
        if let Some(classes) = &self.classes {
            for (name, c) in classes {
                let _ = write!(out, "{name}: {}", c.verdict);
                if let Some(r) = &c.reason {
                    let _ = write!(out, " ({r})");
                }
                out.push('\n');
            }
        }
        let _ = writeln!(out, "budget: {}", self.budget.status);
        if let Some(what) = &self.budget.exhausted {
            let _ = writeln!(out, "exhausted: {what}");
        }
        let _ = writeln!(out, "elapsed_ms: {:.3}", self.elapsed_ms);
        out
    }
}
