//! Constructors for the structured families: simplex boundaries, stacked
//! polytope boundaries, complete graphs, trees, cycles, and the seeded random
//! instances used by the verification suites.
//!
//! Everything randomized takes an explicit 64-bit seed and draws from
//! [`SplitMix64`], so generated objects are reproducible bit-exactly.

use itertools::Itertools;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::SplitMix64;
use crate::vertex_set::VertexSet;

/// Boundary of the d-simplex on vertices `0..=d`: all d-subsets as facets.
/// The result is (d-1)-dimensional with d+1 facets.
pub fn simplex_boundary(d: usize) -> Result<SimplicialComplex> {
    if d < 1 {
        return Err(Error::BadDimension { dim: d, min: 1 });
    }
    let facets: Vec<VertexSet> = (0..=d as u32)
        .combinations(d)
        .map(VertexSet::from_labels)
        .collect();
    SimplicialComplex::from_facets(facets)
}

/// How the facet for each stacking step is chosen.
#[derive(Clone, Debug)]
pub enum Stacking {
    /// Uniform choice among the current facets, from this seed.
    Seed(u64),
    /// Explicit facet to split at each step.
    Explicit(Vec<VertexSet>),
}

/// Boundary complex of a stacked d-polytope with n vertices.
///
/// Starts from the d-simplex boundary and performs `n - d - 1` stacking
/// moves: remove a facet F, add a new vertex v, and add the d facets
/// `(F ∖ {x}) ∪ {v}`. New vertices are labeled `d+1, d+2, ...` in stacking
/// order. The result is pure of dimension d-1 with
/// `(d+1) + (n-d-1)(d-1)` facets.
pub fn stacked_boundary(d: usize, n: usize, stacking: &Stacking) -> Result<SimplicialComplex> {
    if d < 2 {
        return Err(Error::BadDimension { dim: d, min: 2 });
    }
    if n < d + 1 {
        return Err(Error::BadSize { n, min: d + 1 });
    }
    let mut complex = simplex_boundary(d)?;
    let mut rng = match stacking {
        Stacking::Seed(s) => Some(SplitMix64::new(*s)),
        Stacking::Explicit(_) => None,
    };
    for step in 0..(n - d - 1) {
        let chosen: VertexSet = match stacking {
            Stacking::Seed(_) => {
                let rng = rng.as_mut().unwrap();
                let facets = complex.facets();
                facets[rng.next_below(facets.len())].clone()
            }
            Stacking::Explicit(choices) => choices
                .get(step)
                .cloned()
                .ok_or_else(|| Error::BadFacetChoice {
                    face: VertexSet::new(),
                })?,
        };
        if !complex.is_facet(&chosen) {
            return Err(Error::BadFacetChoice { face: chosen });
        }
        let new_vertex = (d + 1 + step) as u32;
        let mut facets: Vec<VertexSet> = complex
            .facets()
            .iter()
            .filter(|f| *f != &chosen)
            .cloned()
            .collect();
        for x in chosen.iter() {
            facets.push(chosen.remove(x).insert(new_vertex));
        }
        complex = SimplicialComplex::from_facets(facets)?;
    }
    Ok(complex)
}

/// Complete graph on vertices `0..n`.
pub fn complete_graph(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::BadSize { n, min: 1 });
    }
    let vs = VertexSet::from_labels(0..n as u32);
    let mut edges = Vec::new();
    for a in 0..n as u32 {
        for b in a + 1..n as u32 {
            edges.push((a, b));
        }
    }
    Graph::new(vs, &edges)
}

/// Cycle `0 - 1 - … - (n-1) - 0` for n >= 3.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadSize { n, min: 3 });
    }
    let edges: Vec<(u32, u32)> = (0..n as u32).map(|i| (i, (i + 1) % n as u32)).collect();
    Graph::from_edges(&edges)
}

/// Tree shape selector for [`tree`].
#[derive(Clone, Debug)]
pub enum TreeShape {
    /// Path `0 - 1 - … - (n-1)`.
    Path,
    /// Star with center 0.
    Star,
    /// Uniformly random labeled tree from a seeded Prüfer sequence.
    Random(u64),
    /// Explicit Prüfer sequence (length n-2, entries in `0..n`).
    Pruefer(Vec<u32>),
}

/// A tree on `n >= 1` vertices labeled `0..n`.
pub fn tree(n: usize, shape: &TreeShape) -> Result<Graph> {
    if n < 1 {
        return Err(Error::BadSize { n, min: 1 });
    }
    let vs = VertexSet::from_labels(0..n as u32);
    match shape {
        TreeShape::Path => {
            let edges: Vec<(u32, u32)> = (1..n as u32).map(|i| (i - 1, i)).collect();
            Graph::new(vs, &edges)
        }
        TreeShape::Star => {
            let edges: Vec<(u32, u32)> = (1..n as u32).map(|i| (0, i)).collect();
            Graph::new(vs, &edges)
        }
        TreeShape::Random(seed) => {
            if n <= 2 {
                return tree(n, &TreeShape::Path);
            }
            let mut rng = SplitMix64::new(*seed);
            let code: Vec<u32> = (0..n - 2)
                .map(|_| rng.next_below(n) as u32)
                .collect();
            tree(n, &TreeShape::Pruefer(code))
        }
        TreeShape::Pruefer(code) => {
            if code.len() + 2 != n {
                return Err(Error::BadPruferCode(format!(
                    "length {} does not match {} vertices (need {})",
                    code.len(),
                    n,
                    n.saturating_sub(2)
                )));
            }
            if let Some(&bad) = code.iter().find(|&&x| x as usize >= n) {
                return Err(Error::BadPruferCode(format!(
                    "entry {bad} out of range 0..{n}"
                )));
            }
            Graph::new(vs, &decode_pruefer(n, code))
        }
    }
}

/// Standard Prüfer decoding: repeatedly join the smallest remaining leaf to
/// the next code entry. Returns the n-1 edges of the tree.
fn decode_pruefer(n: usize, code: &[u32]) -> Vec<(u32, u32)> {
    if n == 2 {
        return vec![(0, 1)];
    }
    let mut degree = vec![1u32; n];
    for &c in code {
        degree[c as usize] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // `ptr` scans for leaves in increasing order; `leaf` tracks the current
    // smallest leaf, which may have been created below `ptr` by a decrement
    let mut ptr = 0usize;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &c in code {
        let c = c as usize;
        edges.push((leaf as u32, c as u32));
        degree[c] -= 1;
        if degree[c] == 1 && c < ptr {
            leaf = c;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf as u32, (n - 1) as u32));
    edges
}

/// Erdős–Rényi graph on `0..n` with edge probability `p`.
pub fn random_graph(n: usize, p: f64, rng: &mut SplitMix64) -> Result<Graph> {
    let vs = VertexSet::from_labels(0..n as u32);
    let mut edges = Vec::new();
    for a in 0..n as u32 {
        for b in a + 1..n as u32 {
            if rng.next_f64() < p {
                edges.push((a, b));
            }
        }
    }
    Graph::new(vs, &edges)
}

/// Random graph conditioned on containing a t-clique: rejection sampling
/// with a planted clique as last resort.
pub fn random_graph_with_clique(
    n: usize,
    p: f64,
    t: usize,
    rng: &mut SplitMix64,
) -> Result<Graph> {
    assert!(t <= n, "clique size exceeds vertex count");
    for _ in 0..64 {
        let g = random_graph(n, p, rng)?;
        if !cliques_of_size(&g, t).is_empty() {
            return Ok(g);
        }
    }
    let g = random_graph(n, p, rng)?;
    let mut members: Vec<u32> = (0..n as u32).collect();
    rng.shuffle(&mut members);
    members.truncate(t);
    let mut edges = g.edges();
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            edges.push((members[i].min(members[j]), members[i].max(members[j])));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::new(g.vertex_set(), &edges)
}

/// All t-cliques of the graph, in lexicographic vertex order.
pub fn cliques_of_size(g: &Graph, t: usize) -> Vec<VertexSet> {
    g.labels()
        .iter()
        .copied()
        .combinations(t)
        .map(VertexSet::from_labels)
        .filter(|w| g.is_clique(w))
        .collect()
}

/// A uniformly random t-clique, if any exists.
pub fn random_clique(g: &Graph, t: usize, rng: &mut SplitMix64) -> Option<VertexSet> {
    let all = cliques_of_size(g, t);
    if all.is_empty() {
        None
    } else {
        Some(all[rng.next_below(all.len())].clone())
    }
}

/// Random complex on up to `n` vertices generated from random facets.
pub fn random_complex(n: usize, max_facets: usize, rng: &mut SplitMix64) -> Result<SimplicialComplex> {
    assert!(n >= 1);
    let count = 1 + rng.next_below(max_facets.max(1));
    let mut facets = Vec::with_capacity(count);
    for _ in 0..count {
        let size = 1 + rng.next_below(n);
        let mut labels: Vec<u32> = (0..n as u32).collect();
        rng.shuffle(&mut labels);
        labels.truncate(size);
        facets.push(VertexSet::from_labels(labels));
    }
    SimplicialComplex::from_facets(facets)
}

/// Random pure complex: `count` facets of size `t` drawn on up to `n` vertices.
pub fn random_pure_complex(
    n: usize,
    t: usize,
    count: usize,
    rng: &mut SplitMix64,
) -> Result<SimplicialComplex> {
    assert!(t >= 1 && t <= n && count >= 1);
    let mut facets = Vec::with_capacity(count);
    for _ in 0..count {
        let mut labels: Vec<u32> = (0..n as u32).collect();
        rng.shuffle(&mut labels);
        labels.truncate(t);
        facets.push(VertexSet::from_labels(labels));
    }
    SimplicialComplex::from_facets(facets)
}
