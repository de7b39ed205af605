//! Graded Betti tables from reduced simplicial homology of induced
//! subcomplexes.
//!
//! The entry `β_{i,j}` is the sum over all j-element vertex subsets W of the
//! GF(2) dimension of the reduced homology of the induced subcomplex in
//! degree `j - i - 1`. An augmented chain complex is built for every W, so the
//! empty subset contributes exactly `β_{0,0} = 1` and the `i = j - 1` row
//! reproduces the component-counting sums of [`crate::betti`].
//!
//! A rational-arithmetic backend (signed boundary maps, fraction-free
//! elimination) is provided for cross-checking the GF(2) dimensions on small
//! instances.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::betti::{b_stacked, DEFAULT_VERTEX_CAP, MAX_VERTEX_CAP};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::subsets::RevolvingDoor;
use crate::vertex_set::VertexSet;

/// Default limit on the number of faces materialized per subcomplex.
pub const DEFAULT_MAX_FACES: usize = 1 << 20;

#[derive(Clone, Debug)]
pub struct HochsterOptions {
    pub vertex_cap: usize,
    pub max_faces: usize,
    pub threads: usize,
}

impl Default for HochsterOptions {
    fn default() -> Self {
        HochsterOptions {
            vertex_cap: DEFAULT_VERTEX_CAP,
            max_faces: DEFAULT_MAX_FACES,
            threads: 0,
        }
    }
}

/// Reduced homology dimensions indexed by degree `-1..=dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyDims {
    dims: Vec<u64>,
}

impl HomologyDims {
    /// Dimension in homological degree `d` (zero outside the stored range).
    pub fn at(&self, d: i64) -> u64 {
        if d < -1 {
            return 0;
        }
        self.dims.get((d + 1) as usize).copied().unwrap_or(0)
    }

    /// Dimensions as a slice starting at degree -1.
    pub fn from_degree_minus_one(&self) -> &[u64] {
        &self.dims
    }

    pub fn max_degree(&self) -> i64 {
        self.dims.len() as i64 - 2
    }
}

/// One boundary map of the augmented chain complex: rows are the
/// (d-1)-dimensional faces, columns the d-dimensional ones, bits the
/// incidence over GF(2). For d = 0 the single row is the empty face.
#[derive(Clone, Debug)]
pub struct BoundaryMatrix {
    pub row_faces: Vec<VertexSet>,
    pub col_faces: Vec<VertexSet>,
    pub bits: Gf2Matrix,
}

impl BoundaryMatrix {
    /// `∂ ∘ ∂ = 0`: composing with the next-higher boundary map gives zero.
    pub fn composes_to_zero(&self, next: &BoundaryMatrix) -> bool {
        self.bits.multiply(&next.bits).is_zero()
    }
}

/// Augmented boundary matrices `∂_0, ∂_1, …, ∂_dim` of a complex.
///
/// `faces[d]` lists the d-dimensional faces in sorted order; matrix `d` maps
/// d-chains to (d-1)-chains, with the empty face as the codomain of `∂_0`.
pub fn boundary_matrices(
    complex: &SimplicialComplex,
    max_faces: usize,
) -> Result<Vec<BoundaryMatrix>> {
    let faces = complex.faces_by_dim(max_faces)?;
    let mut out = Vec::with_capacity(faces.len());
    for d in 0..faces.len() {
        let row_faces: Vec<VertexSet> = if d == 0 {
            vec![VertexSet::new()]
        } else {
            faces[d - 1].clone()
        };
        let col_faces = faces[d].clone();
        let mut bits = Gf2Matrix::zeros(row_faces.len(), col_faces.len());
        for (c, face) in col_faces.iter().enumerate() {
            if d == 0 {
                bits.set(0, c);
            } else {
                for x in face.iter() {
                    let sub = face.remove(x);
                    let r = row_faces
                        .binary_search(&sub)
                        .expect("facet-closed face lists contain all subfaces");
                    bits.set(r, c);
                }
            }
        }
        out.push(BoundaryMatrix {
            row_faces,
            col_faces,
            bits,
        });
    }
    Ok(out)
}

/// Reduced homology dimensions over GF(2), degrees `-1..=dim`.
///
/// `dim H̃_p = nullity(∂_p) - rank(∂_{p+1})` with the augmentation included:
/// the complex `{∅}` has `H̃_{-1} = 1`, any complex with a vertex has
/// `H̃_{-1} = 0`.
pub fn reduced_homology_dims(complex: &SimplicialComplex) -> Result<HomologyDims> {
    reduced_homology_dims_with(complex, DEFAULT_MAX_FACES)
}

pub fn reduced_homology_dims_with(
    complex: &SimplicialComplex,
    max_faces: usize,
) -> Result<HomologyDims> {
    let matrices = boundary_matrices(complex, max_faces)?;
    Ok(homology_from_ranks(
        &chain_dims(&matrices),
        &matrices.iter().map(|m| m.bits.rank()).collect::<Vec<_>>(),
    ))
}

/// Chain group dimensions `[C_{-1}, C_0, …, C_dim]`.
fn chain_dims(matrices: &[BoundaryMatrix]) -> Vec<usize> {
    let mut dims = vec![1usize];
    for m in matrices {
        dims.push(m.col_faces.len());
    }
    dims
}

/// Assembles homology dimensions from chain dimensions and boundary ranks.
/// `ranks[m]` is the rank of `∂_m : C_m → C_{m-1}`; `chain[p]` is the
/// dimension of the chain group in degree `p - 1`.
fn homology_from_ranks(chain: &[usize], ranks: &[usize]) -> HomologyDims {
    let mut dims = Vec::with_capacity(chain.len());
    for p in 0..chain.len() {
        // degree d = p - 1: h = dim C_d - rank ∂_d - rank ∂_{d+1}
        let c_d = chain[p] as i64;
        let rank_down = if p == 0 { 0 } else { ranks[p - 1] as i64 };
        let rank_up = ranks.get(p).copied().unwrap_or(0) as i64;
        let h = c_d - rank_down - rank_up;
        debug_assert!(h >= 0, "negative homology dimension");
        dims.push(h as u64);
    }
    HomologyDims { dims }
}

/// Rational (characteristic-zero) reduced homology dimensions, computed from
/// signed boundary matrices with fraction-free integer elimination.
pub fn reduced_homology_dims_rational(complex: &SimplicialComplex) -> Result<HomologyDims> {
    let faces = complex.faces_by_dim(DEFAULT_MAX_FACES)?;
    let mut chain = vec![1usize];
    for f in &faces {
        chain.push(f.len());
    }
    let mut ranks = Vec::with_capacity(faces.len());
    for d in 0..faces.len() {
        let rows: Vec<VertexSet> = if d == 0 {
            vec![VertexSet::new()]
        } else {
            faces[d - 1].clone()
        };
        let cols = &faces[d];
        let mut m = vec![vec![BigInt::ZERO; cols.len()]; rows.len()];
        for (c, face) in cols.iter().enumerate() {
            if d == 0 {
                m[0][c] = BigInt::from(1);
            } else {
                for (pos, x) in face.iter().enumerate() {
                    let sub = face.remove(x);
                    let r = rows.binary_search(&sub).expect("closed face lists");
                    m[r][c] = if pos % 2 == 0 {
                        BigInt::from(1)
                    } else {
                        BigInt::from(-1)
                    };
                }
            }
        }
        ranks.push(rank_integer(m));
    }
    Ok(homology_from_ranks(&chain, &ranks))
}

/// Rank of an integer matrix by one-step fraction-free elimination.
fn rank_integer(mut m: Vec<Vec<BigInt>>) -> usize {
    use num_traits::{One, Zero};
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut pivot_row = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        let Some(found) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, found);
        for r in pivot_row + 1..rows {
            for c in col + 1..cols {
                let num = &m[pivot_row][col] * &m[r][c] - &m[r][col] * &m[pivot_row][c];
                m[r][c] = num / &prev; // exact by the fraction-free identity
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[pivot_row][col].clone();
        pivot_row += 1;
        rank += 1;
        if pivot_row == rows {
            break;
        }
    }
    rank
}

/// Checks `∂∘∂ = 0` for every consecutive boundary pair and the alternating
/// face/homology count identity on the given complex.
pub fn verify_chain_invariants(complex: &SimplicialComplex) -> Result<()> {
    let matrices = boundary_matrices(complex, DEFAULT_MAX_FACES)?;
    for pair in matrices.windows(2) {
        if !pair[0].composes_to_zero(&pair[1]) {
            return Err(Error::InvariantViolated(
                "boundary maps do not compose to zero".into(),
            ));
        }
    }
    let homology = reduced_homology_dims(complex)?;
    let f_alternating: i64 = matrices
        .iter()
        .enumerate()
        .map(|(d, m)| {
            let sign = if d % 2 == 0 { 1i64 } else { -1 };
            sign * m.col_faces.len() as i64
        })
        .sum();
    let h_alternating: i64 = homology
        .from_degree_minus_one()
        .iter()
        .enumerate()
        .map(|(idx, &h)| {
            // idx 0 is degree -1
            let sign = if idx % 2 == 0 { -1i64 } else { 1 };
            sign * h as i64
        })
        .sum();
    if f_alternating - 1 != h_alternating {
        return Err(Error::InvariantViolated(format!(
            "alternating sums disagree: faces give {}, homology gives {}",
            f_alternating - 1,
            h_alternating
        )));
    }
    Ok(())
}

/// Table of graded Betti numbers over GF(2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    entries: BTreeMap<(usize, usize), u64>,
}

/// Field the homology dimensions were computed over.
pub const FIELD_TAG: &str = "GF(2)";

impl BettiTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field_tag(&self) -> &'static str {
        FIELD_TAG
    }

    /// Entry `β_{i,j}`; zero when absent or out of range.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    fn get_signed(&self, i: i64, j: i64) -> u64 {
        if i < 0 || j < 0 {
            0
        } else {
            self.get(i as usize, j as usize)
        }
    }

    /// Nonzero entries in (i, j) order.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    pub fn max_i(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Largest `j - i` over nonzero entries (the printed row range).
    pub fn max_shift(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }
}

fn check_cap(complex: &SimplicialComplex, opts: &HochsterOptions) -> Result<()> {
    let n = complex.vertex_count();
    let cap = opts.vertex_cap.min(MAX_VERTEX_CAP);
    if n > cap {
        return Err(Error::VertexCapExceeded { vertices: n, cap });
    }
    Ok(())
}

/// Single graded Betti number `β_{i,j}`: the Hochster sum over all j-subsets.
pub fn graded_betti(complex: &SimplicialComplex, i: usize, j: usize) -> Result<u64> {
    graded_betti_with(complex, i, j, &HochsterOptions::default())
}

pub fn graded_betti_with(
    complex: &SimplicialComplex,
    i: usize,
    j: usize,
    opts: &HochsterOptions,
) -> Result<u64> {
    check_cap(complex, opts)?;
    let n = complex.vertex_count();
    if i > j || j > n {
        return Ok(0);
    }
    let labels: Vec<u32> = complex.vertices().iter().collect();
    let degree = j as i64 - i as i64 - 1;
    let mut total = 0u64;
    for mask in RevolvingDoor::new(n, j) {
        let w: VertexSet = (0..n)
            .filter(|b| (mask >> b) & 1 == 1)
            .map(|b| labels[b])
            .collect();
        let sub = complex.induced(&w);
        total += reduced_homology_dims_with(&sub, opts.max_faces)?.at(degree);
    }
    Ok(total)
}

/// Full Betti table in one pass: each subset's homology is computed once and
/// scattered into every entry with `j = |W|`.
pub fn betti_table(complex: &SimplicialComplex) -> Result<BettiTable> {
    betti_table_with(complex, &HochsterOptions::default())
}

pub fn betti_table_with(
    complex: &SimplicialComplex,
    opts: &HochsterOptions,
) -> Result<BettiTable> {
    check_cap(complex, opts)?;
    let n = complex.vertex_count();
    let labels: Vec<u32> = complex.vertices().iter().collect();
    let width = n + 1;

    let run = || -> Result<Vec<u64>> {
        (0u64..(1u64 << n))
            .into_par_iter()
            .try_fold(
                || vec![0u64; width * width],
                |mut acc, mask| -> Result<Vec<u64>> {
                    let w: VertexSet = (0..n)
                        .filter(|b| (mask >> b) & 1 == 1)
                        .map(|b| labels[b])
                        .collect();
                    let j = w.len();
                    let sub = complex.induced(&w);
                    let homology = reduced_homology_dims_with(&sub, opts.max_faces)?;
                    for (idx, &h) in homology.from_degree_minus_one().iter().enumerate() {
                        if h == 0 {
                            continue;
                        }
                        let degree = idx as i64 - 1;
                        let i = j as i64 - degree - 1;
                        debug_assert!((0..=j as i64).contains(&i));
                        acc[i as usize * width + j] += h;
                    }
                    Ok(acc)
                },
            )
            .try_reduce(
                || vec![0u64; width * width],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(b) {
                        *x += y;
                    }
                    Ok(a)
                },
            )
    };

    let flat = if opts.threads == 0 {
        run()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| Error::ThreadPool(e.to_string()))?;
        pool.install(run)?
    };

    let mut entries = BTreeMap::new();
    for i in 0..width {
        for j in 0..width {
            let v = flat[i * width + j];
            if v != 0 {
                entries.insert((i, j), v);
            }
        }
    }
    Ok(BettiTable { n, entries })
}

/// Structural report for the boundary complex of a claimed stacked
/// d-polytope: nonzero entries must sit on the two diagonals `i = j-1` and
/// `i = j-d+1`, the table must satisfy the duality
/// `β_{i-1,i} = β_{n-i-d+1,n-i}`, and the linear-strand row must match the
/// closed form `(k-1)·C(n-d,k)`.
///
/// Two corner entries are exempt from the diagonal test: `β_{0,0} = 1` (the
/// free module generating the resolution) and its dual socle entry
/// `β_{n-d,n} = 1`, which a sphere's self-dual resolution always carries. A
/// socle entry with any other value is still reported.
#[derive(Clone, Debug, Default)]
pub struct TeraiHibiReport {
    /// (i, j, value) entries off both diagonals, excluding `β_{0,0}`.
    pub off_diagonal: Vec<(usize, usize, u64)>,
    /// (i, left, right) with `β_{i-1,i} != β_{n-i-d+1,n-i}`.
    pub duality_violations: Vec<(usize, u64, u64)>,
    /// (k, table value, closed form) mismatches on the `i = j-1` row.
    pub row_mismatches: Vec<(usize, u64, BigInt)>,
}

impl TeraiHibiReport {
    pub fn is_pass(&self) -> bool {
        self.off_diagonal.is_empty()
            && self.duality_violations.is_empty()
            && self.row_mismatches.is_empty()
    }
}

impl std::fmt::Display for TeraiHibiReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_pass() {
            return writeln!(f, "pass");
        }
        for (i, j, v) in &self.off_diagonal {
            writeln!(f, "off-diagonal entry beta_{{{i},{j}}} = {v}")?;
        }
        for (i, l, r) in &self.duality_violations {
            writeln!(f, "duality broken at i={i}: {l} vs {r}")?;
        }
        for (k, got, want) in &self.row_mismatches {
            writeln!(f, "linear strand k={k}: table {got}, closed form {want}")?;
        }
        Ok(())
    }
}

pub fn check_terai_hibi(complex: &SimplicialComplex, d: usize) -> Result<TeraiHibiReport> {
    check_terai_hibi_with(complex, d, &HochsterOptions::default())
}

pub fn check_terai_hibi_with(
    complex: &SimplicialComplex,
    d: usize,
    opts: &HochsterOptions,
) -> Result<TeraiHibiReport> {
    if d < 3 {
        return Err(Error::BadDimension { dim: d, min: 3 });
    }
    let table = betti_table_with(complex, opts)?;
    let n = complex.vertex_count();
    let mut report = TeraiHibiReport::default();

    for (i, j, v) in table.nonzero() {
        if (i, j) == (0, 0) {
            continue;
        }
        if n >= d && (i, j) == (n - d, n) && v == 1 {
            // Gorenstein socle entry, dual to β_{0,0}
            continue;
        }
        let on_linear = i + 1 == j;
        let on_dual_strand = i as i64 == j as i64 - d as i64 + 1;
        if !on_linear && !on_dual_strand {
            report.off_diagonal.push((i, j, v));
        }
    }
    for i in 1..=n {
        let left = table.get(i - 1, i);
        let right = table.get_signed(
            n as i64 - i as i64 - d as i64 + 1,
            n as i64 - i as i64,
        );
        if left != right {
            report.duality_violations.push((i, left, right));
        }
    }
    for k in 1..=n {
        let got = table.get(k - 1, k);
        let want = b_stacked(n, d, k)?;
        if BigInt::from(got) != want {
            report.row_mismatches.push((k, got, want));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::b_bruteforce;
    use crate::generators::{simplex_boundary, stacked_boundary, Stacking};

    fn vs<const N: usize>(v: [u32; N]) -> VertexSet {
        VertexSet::from(v)
    }

    fn square() -> SimplicialComplex {
        SimplicialComplex::from_facets([vs([1, 2]), vs([2, 3]), vs([3, 4]), vs([1, 4])]).unwrap()
    }

    #[test]
    fn homology_of_two_points() {
        let c = SimplicialComplex::from_facets([vs([1]), vs([2])]).unwrap();
        let h = reduced_homology_dims(&c).unwrap();
        assert_eq!(h.at(-1), 0);
        assert_eq!(h.at(0), 1);
    }

    #[test]
    fn homology_of_hollow_square() {
        let h = reduced_homology_dims(&square()).unwrap();
        assert_eq!(h.at(0), 0);
        assert_eq!(h.at(1), 1);
    }

    #[test]
    fn homology_of_sphere() {
        let h = reduced_homology_dims(&simplex_boundary(3).unwrap()).unwrap();
        assert_eq!(h.at(0), 0);
        assert_eq!(h.at(1), 0);
        assert_eq!(h.at(2), 1);
    }

    #[test]
    fn homology_of_empty_complex() {
        let h = reduced_homology_dims(&SimplicialComplex::empty()).unwrap();
        assert_eq!(h.at(-1), 1);
        assert_eq!(h.max_degree(), -1);
    }

    #[test]
    fn homology_of_solid_simplex_vanishes() {
        let c = SimplicialComplex::from_facets([vs([1, 2, 3, 4])]).unwrap();
        let h = reduced_homology_dims(&c).unwrap();
        assert!(h.from_degree_minus_one().iter().all(|&x| x == 0));
    }

    #[test]
    fn rational_backend_agrees_on_small_complexes() {
        for c in [
            square(),
            simplex_boundary(3).unwrap(),
            SimplicialComplex::from_facets([vs([1]), vs([2])]).unwrap(),
            SimplicialComplex::from_facets([vs([1, 2, 3])]).unwrap(),
            SimplicialComplex::empty(),
        ] {
            assert_eq!(
                reduced_homology_dims(&c).unwrap(),
                reduced_homology_dims_rational(&c).unwrap(),
                "{c:?}"
            );
        }
    }

    #[test]
    fn boundary_maps_compose_to_zero() {
        let matrices = boundary_matrices(&simplex_boundary(3).unwrap(), 1 << 20).unwrap();
        for pair in matrices.windows(2) {
            assert!(pair[0].composes_to_zero(&pair[1]));
        }
        verify_chain_invariants(&simplex_boundary(4).unwrap()).unwrap();
        verify_chain_invariants(&square()).unwrap();
    }

    #[test]
    fn graded_betti_of_square() {
        let c = square();
        assert_eq!(graded_betti(&c, 1, 2).unwrap(), 2); // two diagonals
        assert_eq!(graded_betti(&c, 2, 4).unwrap(), 1); // circle on all four
        assert_eq!(graded_betti(&c, 0, 0).unwrap(), 1);
    }

    #[test]
    fn graded_betti_linear_strand_matches_oracle() {
        let c = square();
        let g = c.one_skeleton();
        for k in 1..=4usize {
            assert_eq!(
                graded_betti(&c, k - 1, k).unwrap() as i64,
                b_bruteforce(&g, k).unwrap(),
                "k={k}"
            );
        }
    }

    #[test]
    fn table_of_simplex_boundary() {
        let t = betti_table(&simplex_boundary(3).unwrap()).unwrap();
        let nz: Vec<_> = t.nonzero().collect();
        assert_eq!(nz, vec![(0, 0, 1), (1, 4, 1)]);
    }

    #[test]
    fn table_of_path_complex() {
        let c = SimplicialComplex::from_facets([vs([1, 2]), vs([2, 3])]).unwrap();
        let t = betti_table(&c).unwrap();
        let nz: Vec<_> = t.nonzero().collect();
        assert_eq!(nz, vec![(0, 0, 1), (1, 2, 1)]);
    }

    #[test]
    fn stacked_table_two_strands_and_socle() {
        // two tetrahedra glued on a triangle: the two monomial generators have
        // degrees 2 and 3, so the full table is the Koszul complex on them
        let c = stacked_boundary(3, 5, &Stacking::Seed(3)).unwrap();
        let t = betti_table(&c).unwrap();
        let nz: Vec<_> = t.nonzero().collect();
        assert_eq!(nz, vec![(0, 0, 1), (1, 2, 1), (1, 3, 1), (2, 5, 1)]);
    }

    #[test]
    fn terai_hibi_pass_and_fail() {
        let good = stacked_boundary(3, 6, &Stacking::Seed(1)).unwrap();
        assert!(check_terai_hibi(&good, 3).unwrap().is_pass());

        let bad = square();
        let report = check_terai_hibi(&bad, 3).unwrap();
        assert!(!report.is_pass());
    }

    #[test]
    fn cap_is_enforced() {
        let c = SimplicialComplex::from_facets([VertexSet::from_labels(0..30)]).unwrap();
        assert!(matches!(
            betti_table(&c),
            Err(Error::VertexCapExceeded { .. })
        ));
    }
}
