//! Text file formats for complexes and graphs.
//!
//! Lines starting with `#` are comments; a comment of the form `# key: value`
//! is treated as metadata and returned to the caller. Every other non-blank
//! line is a whitespace-separated list of non-negative integers: one facet
//! per line for complexes, one edge (two integers) or isolated vertex (one
//! integer) per line for graphs.

use std::collections::BTreeMap;
use std::io::{BufRead, BufReader, Read, Write};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Metadata recovered from `# key: value` comment lines, in file order.
pub type Metadata = BTreeMap<String, String>;

/// Data lines as (line number, parsed labels) pairs.
type NumberedRows = Vec<(usize, Vec<u32>)>;

fn parse_lines(reader: impl Read) -> Result<(NumberedRows, Metadata)> {
    let mut rows = Vec::new();
    let mut metadata = Metadata::new();
    for (idx, line) in BufReader::new(reader).lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            if let Some((key, value)) = comment.split_once(':') {
                let key = key.trim();
                if !key.is_empty() && !key.contains(char::is_whitespace) {
                    metadata.insert(key.to_string(), value.trim().to_string());
                }
            }
            continue;
        }
        let mut labels = Vec::new();
        for token in trimmed.split_whitespace() {
            let v: u32 = token.parse().map_err(|_| Error::ParseFile {
                line: lineno,
                msg: format!("expected a non-negative integer, found {token:?}"),
            })?;
            labels.push(v);
        }
        rows.push((lineno, labels));
    }
    Ok((rows, metadata))
}

/// Reads a complex: each data line is one facet.
pub fn read_complex(reader: impl Read) -> Result<(SimplicialComplex, Metadata)> {
    let (rows, metadata) = parse_lines(reader)?;
    if rows.is_empty() {
        return Err(Error::EmptyInput);
    }
    let facets: Vec<VertexSet> = rows
        .into_iter()
        .map(|(_, labels)| VertexSet::from_labels(labels))
        .collect();
    Ok((SimplicialComplex::from_facets(facets)?, metadata))
}

/// Reads a graph: each data line is an edge (two integers) or an isolated
/// vertex (one integer).
pub fn read_graph(reader: impl Read) -> Result<(Graph, Metadata)> {
    let (rows, metadata) = parse_lines(reader)?;
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for (lineno, labels) in rows {
        match labels.as_slice() {
            [v] => vertices.push(*v),
            [a, b] => {
                if a == b {
                    return Err(Error::ParseFile {
                        line: lineno,
                        msg: format!("self-loop at vertex {a}"),
                    });
                }
                vertices.push(*a);
                vertices.push(*b);
                edges.push((*a, *b));
            }
            other => {
                return Err(Error::ParseFile {
                    line: lineno,
                    msg: format!(
                        "graph lines take 1 or 2 integers, found {}",
                        other.len()
                    ),
                })
            }
        }
    }
    let g = Graph::new(VertexSet::from_labels(vertices), &edges)?;
    Ok((g, metadata))
}

/// Writes a complex, preceded by metadata comments.
pub fn write_complex(
    writer: &mut impl Write,
    complex: &SimplicialComplex,
    metadata: &Metadata,
) -> Result<()> {
    write_metadata(writer, metadata)?;
    for facet in complex.facets() {
        writeln!(writer, "{}", join_labels(facet))?;
    }
    Ok(())
}

/// Writes a graph: edges first, then vertices not covered by any edge.
pub fn write_graph(writer: &mut impl Write, graph: &Graph, metadata: &Metadata) -> Result<()> {
    write_metadata(writer, metadata)?;
    let mut covered = VertexSet::new();
    for (a, b) in graph.edges() {
        writeln!(writer, "{a} {b}")?;
        covered = covered.insert(a).insert(b);
    }
    for v in graph.vertex_set().difference(&covered).iter() {
        writeln!(writer, "{v}")?;
    }
    Ok(())
}

fn write_metadata(writer: &mut impl Write, metadata: &Metadata) -> Result<()> {
    for (key, value) in metadata {
        writeln!(writer, "# {key}: {value}")?;
    }
    Ok(())
}

fn join_labels(set: &VertexSet) -> String {
    set.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
