use std::fmt;

use crate::error::{Error, Result};
use crate::relabel::Relabeling;
use crate::union_find::UnionFind;
use crate::vertex_set::VertexSet;

/// A row of a dense adjacency matrix, one bit per compact vertex index.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    fn zeros(n: usize) -> Self {
        BitRow {
            words: vec![0; n.div_ceil(64)],
        }
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    pub fn test(&self, i: usize) -> bool {
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    /// First word of the row; the whole row when the graph has at most 64 vertices.
    fn word0(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }
}

/// A simple undirected graph.
///
/// Vertices carry arbitrary integer labels; internally they are compacted to
/// indices `0..n` in label order and adjacency is stored as one bitset row per
/// vertex. No self-loops, no parallel edges.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<u32>,
    adj: Vec<BitRow>,
}

impl Graph {
    /// Graph with the given vertices and no edges.
    pub fn empty(vertices: VertexSet) -> Self {
        let labels: Vec<u32> = vertices.iter().collect();
        let n = labels.len();
        Graph {
            labels,
            adj: vec![BitRow::zeros(n.max(1)); n],
        }
    }

    /// Builds a graph from a vertex set and an edge list.
    ///
    /// Endpoints must belong to the vertex set; self-loops are rejected.
    pub fn new(vertices: VertexSet, edges: &[(u32, u32)]) -> Result<Self> {
        let mut g = Graph::empty(vertices);
        for &(a, b) in edges {
            g.insert_edge(a, b)?;
        }
        Ok(g)
    }

    /// Builds a graph whose vertex set is exactly the union of the edge endpoints.
    pub fn from_edges(edges: &[(u32, u32)]) -> Result<Self> {
        let vs = VertexSet::from_labels(edges.iter().flat_map(|&(a, b)| [a, b]));
        Graph::new(vs, edges)
    }

    fn insert_edge(&mut self, a: u32, b: u32) -> Result<()> {
        if a == b {
            return Err(Error::BadRelabeling(format!("self-loop at vertex {a}")));
        }
        let ia = self
            .index_of(a)
            .ok_or(Error::IncompleteRelabeling { vertex: a })?;
        let ib = self
            .index_of(b)
            .ok_or(Error::IncompleteRelabeling { vertex: b })?;
        self.adj[ia].set(ib);
        self.adj[ib].set(ia);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones()).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::from_labels(self.labels.iter().copied())
    }

    pub fn index_of(&self, label: u32) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    pub fn label_of(&self, index: usize) -> u32 {
        self.labels[index]
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(ia), Some(ib)) => ia != ib && self.adj[ia].test(ib),
            _ => false,
        }
    }

    pub fn neighbors(&self, label: u32) -> VertexSet {
        match self.index_of(label) {
            Some(i) => self.adj[i].iter_ones().map(|j| self.labels[j]).collect(),
            None => VertexSet::new(),
        }
    }

    /// Edges as sorted label pairs (a < b), in lexicographic order.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (i, row) in self.adj.iter().enumerate() {
            for j in row.iter_ones() {
                if j > i {
                    out.push((self.labels[i], self.labels[j]));
                }
            }
        }
        out
    }

    /// Subgraph induced on `W ∩ V`: the vertices of `W` present in the graph
    /// and every edge with both ends among them.
    pub fn induced(&self, w: &VertexSet) -> Graph {
        let keep = self.vertex_set().intersection(w);
        let mut g = Graph::empty(keep.clone());
        for a in keep.iter() {
            let ia = self.index_of(a).unwrap();
            for j in self.adj[ia].iter_ones() {
                let b = self.labels[j];
                if b > a && keep.contains(b) {
                    g.insert_edge(a, b).unwrap();
                }
            }
        }
        g
    }

    /// Maximal connected vertex sets, ordered by smallest member.
    /// The empty graph has no components.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.vertex_count();
        let mut uf = UnionFind::new(n);
        for (i, row) in self.adj.iter().enumerate() {
            for j in row.iter_ones() {
                if j > i {
                    uf.union(i, j);
                }
            }
        }
        let mut buckets: Vec<Vec<u32>> = vec![Vec::new(); n];
        for i in 0..n {
            let r = uf.find(i);
            buckets[r].push(self.labels[i]);
        }
        let mut out: Vec<VertexSet> = buckets
            .into_iter()
            .filter(|b| !b.is_empty())
            .map(VertexSet::from_labels)
            .collect();
        out.sort();
        out
    }

    pub fn component_count(&self) -> usize {
        let n = self.vertex_count();
        let mut uf = UnionFind::new(n);
        for (i, row) in self.adj.iter().enumerate() {
            for j in row.iter_ones() {
                if j > i {
                    uf.union(i, j);
                }
            }
        }
        uf.set_count()
    }

    /// True if every pair of vertices in `w` is adjacent. Vertices of `w`
    /// missing from the graph make the check fail; the empty set and
    /// singletons are complete.
    pub fn is_clique(&self, w: &VertexSet) -> bool {
        let idx: Vec<Option<usize>> = w.iter().map(|v| self.index_of(v)).collect();
        if idx.iter().any(|i| i.is_none()) {
            return false;
        }
        for (p, &a) in idx.iter().enumerate() {
            for &b in idx.iter().skip(p + 1) {
                if !self.adj[a.unwrap()].test(b.unwrap()) {
                    return false;
                }
            }
        }
        true
    }

    /// Structure-preserving image under a relabeling covering all vertices.
    pub fn relabel(&self, sigma: &Relabeling) -> Result<Graph> {
        let new_vs = sigma.apply_set(&self.vertex_set())?;
        if new_vs.len() != self.vertex_count() {
            return Err(Error::BadRelabeling(
                "relabeling collapses vertices".to_string(),
            ));
        }
        let mut g = Graph::empty(new_vs);
        for (a, b) in self.edges() {
            g.insert_edge(sigma.apply(a).unwrap(), sigma.apply(b).unwrap())?;
        }
        Ok(g)
    }

    /// Adjacency rows as single machine words over compact indices.
    /// Requires at most 64 vertices.
    pub fn adjacency_words(&self) -> Vec<u64> {
        assert!(
            self.vertex_count() <= 64,
            "single-word adjacency requires <= 64 vertices"
        );
        self.adj.iter().map(|r| r.word0()).collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(V={}, E=[", self.vertex_set())?;
        for (i, (a, b)) in self.edges().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}-{b}")?;
        }
        write!(f, "])")
    }
}
