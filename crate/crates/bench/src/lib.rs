//! Shared fixtures for the benchmark targets.

use betti_core::generators::{random_graph, stacked_boundary, Stacking};
use betti_core::rng::SplitMix64;
use betti_core::{Graph, SimplicialComplex};

pub fn dense_graph(n: usize, seed: u64) -> Graph {
    random_graph(n, 0.5, &mut SplitMix64::new(seed)).unwrap()
}

pub fn sparse_graph(n: usize, seed: u64) -> Graph {
    random_graph(n, 0.15, &mut SplitMix64::new(seed)).unwrap()
}

pub fn stacked(d: usize, n: usize, seed: u64) -> SimplicialComplex {
    stacked_boundary(d, n, &Stacking::Seed(seed)).unwrap()
}
