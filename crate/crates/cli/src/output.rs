//! Text and structured renderings of vectors and tables.
//!
//! Structured output is one JSON record with fixed field names:
//! `{kind, n, parameters, values | entries, provenance}` where provenance is
//! `{tool-version, seed, backend}`. Values are decimal strings so records
//! stay bit-stable at any magnitude.

use std::collections::BTreeMap;

use serde::Serialize;

use betti_core::hochster::BettiTable;
use betti_core::BettiVector;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize)]
pub struct Provenance {
    #[serde(rename = "tool-version")]
    pub tool_version: String,
    pub seed: String,
    pub backend: String,
}

impl Provenance {
    pub fn new(seed: Option<u64>, backend: &str) -> Self {
        Provenance {
            tool_version: TOOL_VERSION.to_string(),
            seed: seed.map_or_else(|| "none".to_string(), |s| s.to_string()),
            backend: backend.to_string(),
        }
    }
}

#[derive(Serialize)]
struct VectorRecord<'a> {
    kind: &'static str,
    n: usize,
    parameters: &'a BTreeMap<String, String>,
    values: Vec<String>,
    provenance: &'a Provenance,
}

#[derive(Serialize)]
struct TableEntry {
    i: usize,
    j: usize,
    value: String,
}

#[derive(Serialize)]
struct TableRecord<'a> {
    kind: &'static str,
    n: usize,
    parameters: &'a BTreeMap<String, String>,
    entries: Vec<TableEntry>,
    provenance: &'a Provenance,
}

/// `k<TAB>b_k` rows up to `max_k`.
pub fn vector_text(vector: &BettiVector, max_k: usize) -> String {
    let mut out = format!("k\t{}_k\n", vector.kind().name());
    for k in 0..=max_k {
        out.push_str(&format!("{k}\t{}\n", vector.get(k)));
    }
    out
}

pub fn vector_json(
    vector: &BettiVector,
    max_k: usize,
    parameters: &BTreeMap<String, String>,
    provenance: &Provenance,
) -> String {
    let record = VectorRecord {
        kind: "betti-vector",
        n: vector.n(),
        parameters,
        values: (0..=max_k).map(|k| vector.get(k).to_string()).collect(),
        provenance,
    };
    serde_json::to_string_pretty(&record).expect("serializable record")
}

/// Aligned table: columns are homological positions i, row r holds the
/// entries with `j - i = r`, zeros printed as dots.
pub fn table_text(table: &BettiTable) -> String {
    let cols = table.max_i() + 1;
    let shifts = table.max_shift() + 1;
    let mut cells: Vec<Vec<String>> = Vec::new();

    let header: Vec<String> = std::iter::once(String::new())
        .chain((0..cols).map(|i| i.to_string()))
        .collect();
    cells.push(header);
    let totals: Vec<u64> = (0..cols)
        .map(|i| (0..shifts).map(|r| table.get(i, i + r)).sum())
        .collect();
    cells.push(
        std::iter::once("total:".to_string())
            .chain(totals.iter().map(|t| t.to_string()))
            .collect(),
    );
    for r in 0..shifts {
        let mut row = vec![format!("{r}:")];
        for i in 0..cols {
            let v = table.get(i, i + r);
            row.push(if v == 0 { ".".to_string() } else { v.to_string() });
        }
        cells.push(row);
    }

    let mut widths = vec![0usize; cols + 1];
    for row in &cells {
        for (c, cell) in row.iter().enumerate() {
            widths[c] = widths[c].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in &cells {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            line.push_str(&" ".repeat(widths[c] - cell.len()));
            line.push_str(cell);
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn table_json(
    table: &BettiTable,
    parameters: &BTreeMap<String, String>,
    provenance: &Provenance,
) -> String {
    let record = TableRecord {
        kind: "betti-table",
        n: table.n(),
        parameters,
        entries: table
            .nonzero()
            .map(|(i, j, v)| TableEntry {
                i,
                j,
                value: v.to_string(),
            })
            .collect(),
        provenance,
    };
    serde_json::to_string_pretty(&record).expect("serializable record")
}
