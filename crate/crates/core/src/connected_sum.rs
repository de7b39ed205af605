//! t-clique connected sums of simplicial complexes and graphs.
//!
//! Both operations glue a second structure onto a first along faces of equal
//! size `t`, identified by a relabeling. The complex version removes the glued
//! facet from the result; the graph version keeps every edge. Preconditions
//! are validated in full before any construction happens.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::relabel::Relabeling;
use crate::rng::SplitMix64;
use crate::vertex_set::VertexSet;

/// Builds the canonical gluing relabeling: `f2` maps onto `f1` in sorted
/// order and the remaining vertices of `v2` map to fresh labels above
/// everything in `v1`.
pub fn canonical_relabeling(
    v1: &VertexSet,
    f1: &VertexSet,
    v2: &VertexSet,
    f2: &VertexSet,
) -> Result<Relabeling> {
    if f1.len() != f2.len() {
        return Err(Error::SizeMismatch {
            left: f1.len(),
            right: f2.len(),
        });
    }
    if !f2.is_subset(v2) {
        return Err(Error::BadRelabeling(format!(
            "glued face {f2} is not contained in the source vertex set {v2}"
        )));
    }
    let mut pairs: Vec<(u32, u32)> = f2.iter().zip(f1.iter()).collect();
    let first_fresh = v1
        .max_label()
        .map_or(0, |m| m + 1)
        .max(f1.max_label().map_or(0, |m| m + 1));
    for (fresh, v) in (first_fresh..).zip(v2.difference(f2).iter()) {
        pairs.push((v, fresh));
    }
    Relabeling::new(pairs)
}

/// Like [`canonical_relabeling`] but with a uniformly random matching of `f2`
/// onto `f1`. Fresh labels stay canonical; only the identification varies.
pub fn random_relabeling(
    v1: &VertexSet,
    f1: &VertexSet,
    v2: &VertexSet,
    f2: &VertexSet,
    rng: &mut SplitMix64,
) -> Result<Relabeling> {
    if f1.len() != f2.len() {
        return Err(Error::SizeMismatch {
            left: f1.len(),
            right: f2.len(),
        });
    }
    if !f2.is_subset(v2) {
        return Err(Error::BadRelabeling(format!(
            "glued face {f2} is not contained in the source vertex set {v2}"
        )));
    }
    let mut targets: Vec<u32> = f1.iter().collect();
    rng.shuffle(&mut targets);
    let mut pairs: Vec<(u32, u32)> = f2.iter().zip(targets).collect();
    let first_fresh = v1
        .max_label()
        .map_or(0, |m| m + 1)
        .max(f1.max_label().map_or(0, |m| m + 1));
    for (fresh, v) in (first_fresh..).zip(v2.difference(f2).iter()) {
        pairs.push((v, fresh));
    }
    Relabeling::new(pairs)
}

/// Checks the shared relabeling side conditions and returns the relabeled
/// vertex set `V2' = σ(V2)`: σ must cover `v2`, map `f2` onto `f1`, and
/// satisfy `V1 ∩ V2' = F1`.
fn validate_relabeling(
    v1: &VertexSet,
    f1: &VertexSet,
    v2: &VertexSet,
    f2: &VertexSet,
    sigma: &Relabeling,
) -> Result<VertexSet> {
    let v2_image = sigma.apply_set(v2)?;
    if v2_image.len() != v2.len() {
        return Err(Error::BadRelabeling(
            "relabeling collapses vertices".to_string(),
        ));
    }
    let f2_image = sigma.apply_set(f2)?;
    if &f2_image != f1 {
        return Err(Error::BadRelabeling(format!(
            "glued face maps to {f2_image}, expected {f1}"
        )));
    }
    let overlap = v1.intersection(&v2_image);
    if &overlap != f1 {
        return Err(Error::BadRelabeling(format!(
            "vertex sets overlap in {overlap}, expected exactly {f1}"
        )));
    }
    Ok(v2_image)
}

fn check_t_positive(t: usize) -> Result<()> {
    if t == 0 {
        return Err(Error::BadSize { n: 0, min: 1 });
    }
    Ok(())
}

/// Connected sum of two complexes along facets `f1`, `f2` identified by
/// `sigma`: the union of the face sets minus the single face `f1`.
///
/// `f1` and `f2` must be facets (maximal faces) of equal positive size, and
/// `sigma` must satisfy the overlap conditions of [`validate_relabeling`].
/// Facets of the result are recomputed, never assumed: the boundary of the
/// removed face stays present, but only its maximal members become facets.
pub fn connected_sum_complex(
    d1: &SimplicialComplex,
    f1: &VertexSet,
    d2: &SimplicialComplex,
    f2: &VertexSet,
    sigma: &Relabeling,
) -> Result<SimplicialComplex> {
    if f1.len() != f2.len() {
        return Err(Error::SizeMismatch {
            left: f1.len(),
            right: f2.len(),
        });
    }
    check_t_positive(f1.len())?;
    if !d1.is_facet(f1) {
        return Err(Error::NotMaximalFace { face: f1.clone() });
    }
    if !d2.is_facet(f2) {
        return Err(Error::NotMaximalFace { face: f2.clone() });
    }
    validate_relabeling(d1.vertices(), f1, d2.vertices(), f2, sigma)?;
    let relabeled = d2.relabel(sigma)?;

    let mut candidates: Vec<VertexSet> = Vec::new();
    for f in d1.facets().iter().chain(relabeled.facets()) {
        if f != f1 {
            candidates.push(f.clone());
        }
    }
    // the removed face's proper subsets remain faces of the union
    for x in f1.iter() {
        candidates.push(f1.remove(x));
    }
    SimplicialComplex::from_facets(candidates).or_else(|e| match e {
        // both parts were the bare glued vertex: the sum is {∅}
        Error::EmptyInput => Ok(SimplicialComplex::empty()),
        other => Err(other),
    })
}

/// Connected sum of two graphs along cliques `f1`, `f2` identified by
/// `sigma`: vertex set `V1 ∪ σ(V2)`, edge set `E1 ∪ σ(E2)`.
///
/// Unlike the complex version the glued cliques need not be maximal and no
/// edge is removed.
pub fn connected_sum_graph(
    g1: &Graph,
    f1: &VertexSet,
    g2: &Graph,
    f2: &VertexSet,
    sigma: &Relabeling,
) -> Result<Graph> {
    if f1.len() != f2.len() {
        return Err(Error::SizeMismatch {
            left: f1.len(),
            right: f2.len(),
        });
    }
    check_t_positive(f1.len())?;
    if !g1.is_clique(f1) {
        return Err(Error::NotComplete { face: f1.clone() });
    }
    if !g2.is_clique(f2) {
        return Err(Error::NotComplete { face: f2.clone() });
    }
    let v2_image = validate_relabeling(&g1.vertex_set(), f1, &g2.vertex_set(), f2, sigma)?;

    let vertices = g1.vertex_set().union(&v2_image);
    let mut edges = g1.edges();
    for (a, b) in g2.edges() {
        edges.push((sigma.apply(a).unwrap(), sigma.apply(b).unwrap()));
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::new(vertices, &edges)
}

/// One gluing step of an iterated sum.
#[derive(Clone, Debug)]
pub struct Gluing {
    /// Facet / clique in the running sum.
    pub left_face: VertexSet,
    /// Facet / clique in the next part.
    pub right_face: VertexSet,
    /// Identification; when absent the canonical relabeling is used.
    pub relabeling: Option<Relabeling>,
}

/// Structures that support binary connected sums; used by [`iterated_sum`].
pub trait ConnectedSummable: Sized + Clone {
    fn vertex_set(&self) -> VertexSet;
    fn connected_sum(
        &self,
        f1: &VertexSet,
        other: &Self,
        f2: &VertexSet,
        sigma: &Relabeling,
    ) -> Result<Self>;
}

impl ConnectedSummable for Graph {
    fn vertex_set(&self) -> VertexSet {
        Graph::vertex_set(self)
    }

    fn connected_sum(
        &self,
        f1: &VertexSet,
        other: &Self,
        f2: &VertexSet,
        sigma: &Relabeling,
    ) -> Result<Self> {
        connected_sum_graph(self, f1, other, f2, sigma)
    }
}

impl ConnectedSummable for SimplicialComplex {
    fn vertex_set(&self) -> VertexSet {
        self.vertices().clone()
    }

    fn connected_sum(
        &self,
        f1: &VertexSet,
        other: &Self,
        f2: &VertexSet,
        sigma: &Relabeling,
    ) -> Result<Self> {
        connected_sum_complex(self, f1, other, f2, sigma)
    }
}

/// Left fold of the binary connected sum over a part list.
///
/// `gluings[i]` glues `parts[i+1]` onto the running sum; errors are annotated
/// with the failing step index (1-based, matching the part being glued).
pub fn iterated_sum<T: ConnectedSummable>(parts: &[T], gluings: &[Gluing]) -> Result<T> {
    if parts.is_empty() {
        return Err(Error::EmptyInput);
    }
    if gluings.len() + 1 != parts.len() {
        return Err(Error::GluingArity {
            parts: parts.len(),
            gluings: gluings.len(),
        });
    }
    let mut acc = parts[0].clone();
    for (step, (part, glue)) in parts[1..].iter().zip(gluings).enumerate() {
        let wrap = |e: Error| Error::StepFailed {
            step: step + 1,
            source: Box::new(e),
        };
        let sigma = match &glue.relabeling {
            Some(s) => s.clone(),
            None => canonical_relabeling(
                &acc.vertex_set(),
                &glue.left_face,
                &part.vertex_set(),
                &glue.right_face,
            )
            .map_err(wrap)?,
        };
        acc = acc
            .connected_sum(&glue.left_face, part, &glue.right_face, &sigma)
            .map_err(wrap)?;
    }
    Ok(acc)
}

/// True iff the 1-skeleton of the complex sum equals the graph sum of the
/// 1-skeletons for the same gluing data. Holds whenever `|f1| >= 3`; fails in
/// general for smaller gluings because the complex sum removes the glued face.
pub fn skeleton_commutes(
    d1: &SimplicialComplex,
    f1: &VertexSet,
    d2: &SimplicialComplex,
    f2: &VertexSet,
    sigma: &Relabeling,
) -> Result<bool> {
    let complex_side = connected_sum_complex(d1, f1, d2, f2, sigma)?.one_skeleton();
    let graph_side = connected_sum_graph(
        &d1.one_skeleton(),
        f1,
        &d2.one_skeleton(),
        f2,
        sigma,
    )?;
    Ok(complex_side == graph_side)
}
