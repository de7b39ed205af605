use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::relabel::Relabeling;
use crate::vertex_set::VertexSet;

/// An abstract simplicial complex stored by its maximal faces.
///
/// Faces are all subsets of facets; they are never materialized except on
/// demand. The facet list is kept canonical: sorted, duplicate-free, and an
/// antichain under inclusion. The vertex set is exactly the union of the
/// facets, so every vertex lies in at least one facet.
///
/// The complex `{∅}` with no vertices is represented by an empty facet list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: VertexSet,
    facets: Vec<VertexSet>,
}

/// Drops sets contained in another set of the list, dedups, sorts.
fn prune_to_maximal(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    sets.dedup();
    let mut out: Vec<VertexSet> = Vec::new();
    for s in sets {
        if s.is_empty() {
            continue;
        }
        if !out.iter().any(|t| s.is_subset(t)) {
            out.push(s);
        }
    }
    out.sort();
    out
}

impl SimplicialComplex {
    /// The complex `{∅}`: no vertices, no nonempty faces.
    pub fn empty() -> Self {
        SimplicialComplex {
            vertices: VertexSet::new(),
            facets: Vec::new(),
        }
    }

    /// Builds a complex generated by the given faces.
    ///
    /// The input is a generating set: faces contained in other input faces are
    /// absorbed. An input consisting solely of empty sets yields `{∅}`.
    pub fn from_facets(facets: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        let raw: Vec<VertexSet> = facets.into_iter().collect();
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        let facets = prune_to_maximal(raw);
        let vertices = facets
            .iter()
            .fold(VertexSet::new(), |acc, f| acc.union(f));
        Ok(SimplicialComplex { vertices, facets })
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// Dimension `max |F| - 1`; the complex `{∅}` has dimension -1.
    pub fn dim(&self) -> i64 {
        self.facets
            .iter()
            .map(|f| f.len() as i64 - 1)
            .max()
            .unwrap_or(-1)
    }

    /// Every facet has the same number of vertices.
    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(f) => self.facets.iter().all(|g| g.len() == f.len()),
        }
    }

    /// Face test: the empty set is a face of every complex; a nonempty set is
    /// a face iff it is contained in some facet.
    pub fn is_face(&self, s: &VertexSet) -> bool {
        s.is_empty() || self.facets.iter().any(|f| s.is_subset(f))
    }

    pub fn is_facet(&self, s: &VertexSet) -> bool {
        self.facets.binary_search(s).is_ok()
    }

    /// The induced subcomplex on `W`: faces are `{F ∩ W : F face}`. `W` need
    /// not be contained in the vertex set; extra labels are ignored.
    pub fn induced(&self, w: &VertexSet) -> SimplicialComplex {
        let cut: Vec<VertexSet> = self.facets.iter().map(|f| f.intersection(w)).collect();
        let facets = prune_to_maximal(cut);
        let vertices = facets
            .iter()
            .fold(VertexSet::new(), |acc, f| acc.union(f));
        SimplicialComplex { vertices, facets }
    }

    /// The graph on the same vertices whose edges are the 2-element faces.
    pub fn one_skeleton(&self) -> Graph {
        let mut edges: Vec<(u32, u32)> = Vec::new();
        for f in &self.facets {
            let v: Vec<u32> = f.iter().collect();
            for i in 0..v.len() {
                for j in i + 1..v.len() {
                    edges.push((v[i], v[j]));
                }
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Graph::new(self.vertices.clone(), &edges).expect("facet pairs are valid edges")
    }

    /// Maximal connected vertex sets; `{∅}` has none.
    pub fn components(&self) -> Vec<VertexSet> {
        self.one_skeleton().components()
    }

    /// Structure-preserving image under a relabeling covering all vertices.
    pub fn relabel(&self, sigma: &Relabeling) -> Result<SimplicialComplex> {
        let vertices = sigma.apply_set(&self.vertices)?;
        if vertices.len() != self.vertices.len() {
            return Err(Error::BadRelabeling(
                "relabeling collapses vertices".to_string(),
            ));
        }
        let mut facets = Vec::with_capacity(self.facets.len());
        for f in &self.facets {
            facets.push(sigma.apply_set(f)?);
        }
        facets.sort();
        Ok(SimplicialComplex { vertices, facets })
    }

    /// All faces grouped by dimension: `faces[d]` holds the d-dimensional
    /// faces (d+1 vertices), for d in `0..=dim`. The empty face is implicit.
    ///
    /// Fails with `FaceExplosion` when more than `limit` faces would be
    /// materialized.
    pub fn faces_by_dim(&self, limit: usize) -> Result<Vec<Vec<VertexSet>>> {
        let dim = self.dim();
        if dim < 0 {
            return Ok(Vec::new());
        }
        let mut per_dim: Vec<Vec<VertexSet>> = vec![Vec::new(); (dim + 1) as usize];
        let mut total = 0usize;
        for f in &self.facets {
            let labels: Vec<u32> = f.iter().collect();
            let m = labels.len();
            // all nonempty subsets of this facet
            for mask in 1u64..(1u64 << m) {
                let card = mask.count_ones() as usize;
                let face: VertexSet = (0..m)
                    .filter(|i| (mask >> i) & 1 == 1)
                    .map(|i| labels[i])
                    .collect();
                per_dim[card - 1].push(face);
                total += 1;
                if total > limit.saturating_mul(4) {
                    // raw generation bound before dedup
                    return Err(Error::FaceExplosion {
                        faces: total,
                        limit,
                    });
                }
            }
        }
        let mut unique_total = 0usize;
        for faces in &mut per_dim {
            faces.sort();
            faces.dedup();
            unique_total += faces.len();
        }
        if unique_total > limit {
            return Err(Error::FaceExplosion {
                faces: unique_total,
                limit,
            });
        }
        Ok(per_dim)
    }

    /// Number of faces in each dimension (the f-vector, without the empty face).
    pub fn f_vector(&self, limit: usize) -> Result<Vec<usize>> {
        Ok(self.faces_by_dim(limit)?.iter().map(|v| v.len()).collect())
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex[")?;
        for (i, fa) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{fa}")?;
        }
        write!(f, "]")
    }
}
