//! Infix expression language for connected sums.
//!
//! Grammar (whitespace-insensitive, `#` left-associative):
//!
//! ```text
//! expr     := primary ( '#' INT glue? primary )*
//! primary  := atom | '(' expr ')'
//! glue     := '[' vertices ';' vertices ']'
//! vertices := INT ( ',' INT )*
//! atom     := 'K' INT | 'C' INT | 'simplex' '(' INT ')'
//!           | 'path' '(' INT ')' | 'star' '(' INT ')' | 'file:' PATH
//! ```
//!
//! `K`, `C`, `path`, `star` atoms evaluate to graphs, `simplex` to a complex;
//! `file:` atoms follow the file's `# kind:` metadata and default to complex.
//! A sum node `a #t b` glues `b` onto `a` along faces of size `t`. Without a
//! glue annotation, the lexicographically smallest valid clique (or facet) on
//! each side and the sorted-order identification are used; an annotation
//! `#t[f1;f2]` names the faces explicitly and identifies them positionally.

use std::fmt;
use std::path::Path;

use itertools::Itertools;

use betti_core::connected_sum::{
    canonical_relabeling, connected_sum_complex, connected_sum_graph,
};
use betti_core::io::Metadata;
use betti_core::{Graph, Relabeling, SimplicialComplex, VertexSet};

use crate::errors::{CliError, CliResult};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    Complete(usize),
    Cycle(usize),
    Simplex(usize),
    Path(usize),
    Star(usize),
    File(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SumExpr {
    Atom(Atom),
    Sum {
        t: usize,
        /// Explicit glue lists (left face, right face) in written order;
        /// positions define the identification.
        glue: Option<(Vec<u32>, Vec<u32>)>,
        left: Box<SumExpr>,
        right: Box<SumExpr>,
    },
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Complete(n) => write!(f, "K{n}"),
            Atom::Cycle(n) => write!(f, "C{n}"),
            Atom::Simplex(d) => write!(f, "simplex({d})"),
            Atom::Path(n) => write!(f, "path({n})"),
            Atom::Star(n) => write!(f, "star({n})"),
            Atom::File(p) => write!(f, "file:{p}"),
        }
    }
}

impl fmt::Display for SumExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SumExpr::Atom(a) => write!(f, "{a}"),
            SumExpr::Sum {
                t,
                glue,
                left,
                right,
            } => {
                write!(f, "{left} #{t}")?;
                if let Some((f1, f2)) = glue {
                    write!(f, "[{};{}]", f1.iter().join(","), f2.iter().join(","))?;
                }
                // left-associative: only a right child needs parentheses
                match right.as_ref() {
                    SumExpr::Sum { .. } => write!(f, " ({right})"),
                    SumExpr::Atom(_) => write!(f, " {right}"),
                }
            }
        }
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, msg: impl Into<String>) -> CliError {
        CliError::Syntax {
            offset: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, expected: u8) -> CliResult<()> {
        if self.peek() == Some(expected) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!(
                "expected {:?}",
                char::from(expected)
            )))
        }
    }

    fn parse_usize(&mut self) -> CliResult<usize> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.error("integer out of range"))
    }

    fn parse_vertex_list(&mut self) -> CliResult<Vec<u32>> {
        let mut out = vec![self.parse_usize()? as u32];
        loop {
            self.skip_ws();
            if self.peek() == Some(b',') {
                self.pos += 1;
                self.skip_ws();
                out.push(self.parse_usize()? as u32);
            } else {
                return Ok(out);
            }
        }
    }

    fn parse_atom(&mut self) -> CliResult<SumExpr> {
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|b| b.is_ascii_alphabetic())
        {
            self.pos += 1;
        }
        let word = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        let atom = match word {
            "K" => Atom::Complete(self.parse_usize()?),
            "C" => Atom::Cycle(self.parse_usize()?),
            "simplex" | "path" | "star" => {
                self.skip_ws();
                self.eat(b'(')?;
                self.skip_ws();
                let n = self.parse_usize()?;
                self.skip_ws();
                self.eat(b')')?;
                match word {
                    "simplex" => Atom::Simplex(n),
                    "path" => Atom::Path(n),
                    _ => Atom::Star(n),
                }
            }
            "file" => {
                self.eat(b':')?;
                let path_start = self.pos;
                while self.peek().is_some_and(|b| {
                    !b.is_ascii_whitespace() && !matches!(b, b'(' | b')' | b'#' | b'[' | b']')
                }) {
                    self.pos += 1;
                }
                if self.pos == path_start {
                    return Err(self.error("expected a file path"));
                }
                Atom::File(
                    std::str::from_utf8(&self.bytes[path_start..self.pos])
                        .unwrap()
                        .to_string(),
                )
            }
            "" => {
                return Err(self.error(match self.peek() {
                    Some(b) => format!("unexpected character {:?}", char::from(b)),
                    None => "unexpected end of input".to_string(),
                }))
            }
            other => return Err(self.error(format!("unknown atom {other:?}"))),
        };
        Ok(SumExpr::Atom(atom))
    }

    fn parse_primary(&mut self) -> CliResult<SumExpr> {
        self.skip_ws();
        if self.peek() == Some(b'(') {
            self.pos += 1;
            let inner = self.parse_expr()?;
            self.skip_ws();
            self.eat(b')')?;
            Ok(inner)
        } else {
            self.parse_atom()
        }
    }

    fn parse_expr(&mut self) -> CliResult<SumExpr> {
        let mut node = self.parse_primary()?;
        loop {
            self.skip_ws();
            if self.peek() != Some(b'#') {
                return Ok(node);
            }
            self.pos += 1;
            self.skip_ws();
            let op_offset = self.pos;
            let t = self.parse_usize()?;
            self.skip_ws();
            let glue = if self.peek() == Some(b'[') {
                self.pos += 1;
                self.skip_ws();
                let f1 = self.parse_vertex_list()?;
                self.skip_ws();
                self.eat(b';')?;
                self.skip_ws();
                let f2 = self.parse_vertex_list()?;
                self.skip_ws();
                self.eat(b']')?;
                if f1.len() != t || f2.len() != t {
                    return Err(CliError::Arity {
                        offset: op_offset,
                        msg: format!(
                            "glue lists of sizes {} and {} do not match #{t}",
                            f1.len(),
                            f2.len()
                        ),
                    });
                }
                if !f1.iter().all_unique() || !f2.iter().all_unique() {
                    return Err(CliError::Arity {
                        offset: op_offset,
                        msg: "glue lists contain repeated vertices".to_string(),
                    });
                }
                Some((f1, f2))
            } else {
                None
            };
            let right = self.parse_primary()?;
            node = SumExpr::Sum {
                t,
                glue,
                left: Box::new(node),
                right: Box::new(right),
            };
        }
    }
}

pub fn parse_sum_expression(text: &str) -> CliResult<SumExpr> {
    let mut parser = Parser::new(text);
    let expr = parser.parse_expr()?;
    parser.skip_ws();
    if parser.pos != parser.bytes.len() {
        return Err(parser.error("trailing input"));
    }
    Ok(expr)
}

/// What an expression evaluates to.
#[derive(Clone, Debug)]
pub enum Value {
    Graph(Graph),
    Complex(SimplicialComplex),
}

impl Value {
    pub fn vertex_count(&self) -> usize {
        match self {
            Value::Graph(g) => g.vertex_count(),
            Value::Complex(c) => c.vertex_count(),
        }
    }

    fn vertex_set(&self) -> VertexSet {
        match self {
            Value::Graph(g) => g.vertex_set(),
            Value::Complex(c) => c.vertices().clone(),
        }
    }
}

/// Reads a file as a graph or complex, honoring a `# kind:` metadata comment
/// and defaulting to complex.
pub fn load_value(path: &str) -> CliResult<(Value, Metadata)> {
    let text = std::fs::read_to_string(Path::new(path))
        .map_err(|e| CliError::Input(format!("cannot read {path}: {e}")))?;
    let kind = text.lines().find_map(|line| {
        let rest = line.trim().strip_prefix('#')?;
        let (key, value) = rest.split_once(':')?;
        (key.trim() == "kind").then(|| value.trim().to_string())
    });
    match kind.as_deref() {
        Some("graph") => {
            let (g, meta) = betti_core::io::read_graph(text.as_bytes())?;
            Ok((Value::Graph(g), meta))
        }
        Some("complex") | None => {
            let (c, meta) = betti_core::io::read_complex(text.as_bytes())?;
            Ok((Value::Complex(c), meta))
        }
        Some(other) => Err(CliError::Input(format!(
            "{path}: unknown kind {other:?} (expected graph or complex)"
        ))),
    }
}

fn eval_atom(atom: &Atom) -> CliResult<Value> {
    use betti_core::generators::{
        complete_graph, cycle_graph, simplex_boundary, tree, TreeShape,
    };
    Ok(match atom {
        Atom::Complete(n) => Value::Graph(complete_graph(*n)?),
        Atom::Cycle(n) => Value::Graph(cycle_graph(*n)?),
        Atom::Path(n) => Value::Graph(tree(*n, &TreeShape::Path)?),
        Atom::Star(n) => Value::Graph(tree(*n, &TreeShape::Star)?),
        Atom::Simplex(d) => Value::Complex(simplex_boundary(*d)?),
        Atom::File(path) => load_value(path)?.0,
    })
}

/// Lexicographically smallest t-clique of a graph.
fn lex_clique(g: &Graph, t: usize) -> Option<VertexSet> {
    g.labels()
        .iter()
        .copied()
        .combinations(t)
        .map(VertexSet::from_labels)
        .find(|w| g.is_clique(w))
}

/// Lexicographically smallest facet with exactly t vertices.
fn lex_facet(c: &SimplicialComplex, t: usize) -> Option<VertexSet> {
    c.facets().iter().find(|f| f.len() == t).cloned()
}

/// Positional identification: `f2[i]` maps to `f1[i]`, all other source
/// vertices map to fresh labels above the left side's vertex set.
fn explicit_relabeling(
    left_vertices: &VertexSet,
    f1: &[u32],
    right_vertices: &VertexSet,
    f2: &[u32],
) -> CliResult<Relabeling> {
    let mut pairs: Vec<(u32, u32)> = f2.iter().copied().zip(f1.iter().copied()).collect();
    let f2_set = VertexSet::from_labels(f2.iter().copied());
    let first_fresh = left_vertices
        .max_label()
        .map_or(0, |m| m + 1)
        .max(f1.iter().copied().max().map_or(0, |m| m + 1));
    for (fresh, v) in (first_fresh..).zip(right_vertices.difference(&f2_set).iter()) {
        pairs.push((v, fresh));
    }
    Ok(Relabeling::new(pairs)?)
}

fn glue_values(
    left: Value,
    right: Value,
    t: usize,
    glue: &Option<(Vec<u32>, Vec<u32>)>,
) -> CliResult<Value> {
    match (&left, &right) {
        (Value::Graph(g1), Value::Graph(g2)) => {
            let (f1, f2, sigma) = resolve_glue(&left, &right, t, glue, |v, t| match v {
                Value::Graph(g) => lex_clique(g, t),
                _ => unreachable!(),
            })?;
            Ok(Value::Graph(connected_sum_graph(g1, &f1, g2, &f2, &sigma)?))
        }
        (Value::Complex(c1), Value::Complex(c2)) => {
            let (f1, f2, sigma) = resolve_glue(&left, &right, t, glue, |v, t| match v {
                Value::Complex(c) => lex_facet(c, t),
                _ => unreachable!(),
            })?;
            Ok(Value::Complex(connected_sum_complex(
                c1, &f1, c2, &f2, &sigma,
            )?))
        }
        _ => Err(CliError::MixedKinds),
    }
}

fn resolve_glue(
    left: &Value,
    right: &Value,
    t: usize,
    glue: &Option<(Vec<u32>, Vec<u32>)>,
    pick: impl Fn(&Value, usize) -> Option<VertexSet>,
) -> CliResult<(VertexSet, VertexSet, Relabeling)> {
    match glue {
        Some((f1_list, f2_list)) => {
            let f1 = VertexSet::from_labels(f1_list.iter().copied());
            let f2 = VertexSet::from_labels(f2_list.iter().copied());
            let sigma =
                explicit_relabeling(&left.vertex_set(), f1_list, &right.vertex_set(), f2_list)?;
            Ok((f1, f2, sigma))
        }
        None => {
            let f1 = pick(left, t).ok_or_else(|| {
                CliError::Input(format!("left operand has no glueable face of size {t}"))
            })?;
            let f2 = pick(right, t).ok_or_else(|| {
                CliError::Input(format!("right operand has no glueable face of size {t}"))
            })?;
            let sigma =
                canonical_relabeling(&left.vertex_set(), &f1, &right.vertex_set(), &f2)?;
            Ok((f1, f2, sigma))
        }
    }
}

/// Evaluates the expression tree; graph atoms force graph evaluation and
/// complex atoms force complex evaluation.
pub fn evaluate(expr: &SumExpr) -> CliResult<Value> {
    match expr {
        SumExpr::Atom(atom) => eval_atom(atom),
        SumExpr::Sum {
            t,
            glue,
            left,
            right,
        } => {
            let l = evaluate(left)?;
            let r = evaluate(right)?;
            glue_values(l, r, *t, glue)
        }
    }
}
