//! Shared test oracles, kept independent of the library's enumeration path:
//! subsets come from `itertools::combinations` over label slices and
//! components from an explicit breadth-first search.
#![allow(dead_code)] // each test binary uses a different slice of this module

use std::collections::VecDeque;

use itertools::Itertools;
use num_bigint::BigInt;
use betti_core::{Graph, VertexSet};

/// Component count of the induced subgraph on `w`, by BFS over adjacency queries.
pub fn bfs_component_count(g: &Graph, w: &[u32]) -> usize {
    let mut seen = vec![false; w.len()];
    let mut components = 0;
    for start in 0..w.len() {
        if seen[start] {
            continue;
        }
        components += 1;
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(i) = queue.pop_front() {
            for (j, other) in w.iter().enumerate() {
                if !seen[j] && g.has_edge(w[i], *other) {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
    }
    components
}

/// `Σ over k-subsets of (components - 1)`, straight from the definition.
pub fn naive_b(g: &Graph, k: usize) -> i64 {
    if k == 0 {
        return -1;
    }
    let labels: Vec<u32> = g.labels().to_vec();
    labels
        .iter()
        .copied()
        .combinations(k)
        .map(|w| bfs_component_count(g, &w) as i64 - 1)
        .sum()
}

/// `Σ over k-subsets of components`.
pub fn naive_c(g: &Graph, k: usize) -> i64 {
    if k == 0 {
        return 0;
    }
    let labels: Vec<u32> = g.labels().to_vec();
    labels
        .iter()
        .copied()
        .combinations(k)
        .map(|w| bfs_component_count(g, &w) as i64)
        .sum()
}

pub fn naive_b_values(g: &Graph) -> Vec<i64> {
    (0..=g.vertex_count()).map(|k| naive_b(g, k)).collect()
}

/// Binomial coefficients by Pascal's rule only: addition, no division.
pub fn pascal_binomial(a: usize, b: usize) -> BigInt {
    if b > a {
        return BigInt::ZERO;
    }
    let mut row: Vec<BigInt> = vec![BigInt::from(1)];
    for _ in 0..a {
        let mut next = vec![BigInt::from(1)];
        for i in 1..row.len() {
            next.push(&row[i - 1] + &row[i]);
        }
        next.push(BigInt::from(1));
        row = next;
    }
    row[b].clone()
}

/// Convenience constructor used across the integration tests.
pub fn vset(labels: &[u32]) -> VertexSet {
    VertexSet::from_labels(labels.iter().copied())
}
