//! Exact component-counting sums over vertex subsets and the closed forms
//! they satisfy on structured families.
//!
//! The brute-force entry points enumerate induced subgraphs of every
//! cardinality and count connected components exactly; the formula layer
//! evaluates the connected-sum recurrences and the tree / n-gon /
//! stacked-family closed forms in arbitrary-precision arithmetic. Both sides
//! are kept independent so they can be checked against each other.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::subsets::{component_count, RevolvingDoor};

/// Default limit on vertex counts accepted by brute-force entry points.
pub const DEFAULT_VERTEX_CAP: usize = 24;

/// Hard ceiling: subset masks are single machine words.
pub const MAX_VERTEX_CAP: usize = 63;

/// Which quantity a vector holds: `B` sums components-minus-one per subset,
/// `C` sums plain component counts. They differ by a binomial column.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VectorKind {
    B,
    C,
}

impl VectorKind {
    pub fn name(self) -> &'static str {
        match self {
            VectorKind::B => "b",
            VectorKind::C => "c",
        }
    }
}

/// Exact integer sequence indexed by subset cardinality `0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiVector {
    kind: VectorKind,
    n: usize,
    values: Vec<BigInt>,
}

impl BettiVector {
    /// Wraps raw values; `values.len()` must be `n + 1`.
    pub fn new(kind: VectorKind, n: usize, values: Vec<BigInt>) -> Self {
        assert_eq!(values.len(), n + 1);
        if kind == VectorKind::B {
            debug_assert_eq!(values[0], BigInt::from(-1));
            debug_assert!(values[1..].iter().all(|v| !v.is_negative()));
        }
        BettiVector { kind, n, values }
    }

    pub fn kind(&self) -> VectorKind {
        self.kind
    }

    /// Vertex count of the underlying graph or complex.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Value at cardinality `k`; zero beyond `n` (empty sums).
    pub fn get(&self, k: usize) -> BigInt {
        self.values.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// Converts between the two kinds by adding or subtracting `C(n,k)`.
    pub fn convert(&self, kind: VectorKind) -> BettiVector {
        if kind == self.kind {
            return self.clone();
        }
        let n = self.n;
        let values = (0..=n)
            .map(|k| {
                let delta = binomial(n as i64, k as i64);
                match kind {
                    VectorKind::C => &self.values[k] + delta,
                    VectorKind::B => &self.values[k] - delta,
                }
            })
            .collect();
        BettiVector::new(kind, n, values)
    }
}

/// Binomial coefficient with the empty-sum conventions: zero when `b < 0`,
/// `b > a`, or `a < 0`. Exact for any magnitude.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut result = BigInt::one();
    for i in 0..b {
        result = result * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    result
}

/// Tuning knobs for the brute-force oracle.
#[derive(Clone, Debug)]
pub struct OracleOptions {
    /// Refuse graphs with more vertices than this.
    pub vertex_cap: usize,
    /// Worker threads; 0 picks the default pool size.
    pub threads: usize,
    /// Subset enumeration backend.
    pub backend: Backend,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    /// Single pass over all `2^n` masks in numeric order.
    Sweep,
    /// One revolving-door pass per cardinality.
    PerK,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            vertex_cap: DEFAULT_VERTEX_CAP,
            threads: 0,
            backend: Backend::Sweep,
        }
    }
}

impl OracleOptions {
    fn check(&self, g: &Graph) -> Result<()> {
        let n = g.vertex_count();
        let cap = self.vertex_cap.min(MAX_VERTEX_CAP);
        if n > cap {
            return Err(Error::VertexCapExceeded {
                vertices: n,
                cap,
            });
        }
        Ok(())
    }
}

/// Runs `f` on a pool with the requested thread count (0 = shared default).
fn with_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    if threads == 0 {
        Ok(f())
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::ThreadPool(e.to_string()))?;
        Ok(pool.install(f))
    }
}

/// Sums `nc(G|_W) - offset` over all subsets, bucketed by cardinality.
/// `offset` is 1 for b-vectors and 0 for c-vectors.
fn subset_sums(g: &Graph, offset: i64, opts: &OracleOptions) -> Result<Vec<i64>> {
    opts.check(g)?;
    let n = g.vertex_count();
    let adj = g.adjacency_words();
    let buckets = with_pool(opts.threads, || match opts.backend {
        Backend::Sweep => sweep_sums(&adj, n, offset),
        Backend::PerK => per_k_sums(&adj, n, offset),
    })?;
    Ok(buckets)
}

fn sweep_sums(adj: &[u64], n: usize, offset: i64) -> Vec<i64> {
    let total: u64 = 1u64 << n;
    // contiguous ranges, one private accumulator each; exact integer addition
    // makes the merge order irrelevant
    let chunk = (total >> 8).max(1 << 12);
    let starts: Vec<u64> = (0..total).step_by(chunk as usize).collect();
    starts
        .into_par_iter()
        .map(|start| {
            let end = (start + chunk).min(total);
            let mut acc = vec![0i64; n + 1];
            for mask in start..end {
                let nc = component_count(adj, mask) as i64;
                acc[mask.count_ones() as usize] += nc - offset;
            }
            acc
        })
        .reduce(
            || vec![0i64; n + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        )
}

fn per_k_sums(adj: &[u64], n: usize, offset: i64) -> Vec<i64> {
    (0..=n)
        .into_par_iter()
        .map(|k| {
            RevolvingDoor::new(n, k)
                .map(|mask| component_count(adj, mask) as i64 - offset)
                .sum::<i64>()
        })
        .collect()
}

/// Sum of `nc(G|_W) - 1` over all k-subsets W. Zero for `k > n`; the empty
/// subset contributes `-1`.
pub fn b_bruteforce(g: &Graph, k: usize) -> Result<i64> {
    b_bruteforce_with(g, k, &OracleOptions::default())
}

pub fn b_bruteforce_with(g: &Graph, k: usize, opts: &OracleOptions) -> Result<i64> {
    opts.check(g)?;
    let n = g.vertex_count();
    if k > n {
        return Ok(0);
    }
    let adj = g.adjacency_words();
    Ok(RevolvingDoor::new(n, k)
        .map(|mask| component_count(&adj, mask) as i64 - 1)
        .sum())
}

/// Sum of `nc(G|_W)` over all k-subsets W.
pub fn c_bruteforce(g: &Graph, k: usize) -> Result<i64> {
    let n = g.vertex_count();
    OracleOptions::default().check(g)?;
    if k > n {
        return Ok(0);
    }
    let adj = g.adjacency_words();
    Ok(RevolvingDoor::new(n, k)
        .map(|mask| component_count(&adj, mask) as i64)
        .sum())
}

/// Full b-vector in one enumeration pass.
pub fn b_vector_bruteforce(g: &Graph) -> Result<BettiVector> {
    b_vector_with(g, &OracleOptions::default())
}

pub fn b_vector_with(g: &Graph, opts: &OracleOptions) -> Result<BettiVector> {
    let sums = subset_sums(g, 1, opts)?;
    Ok(BettiVector::new(
        VectorKind::B,
        g.vertex_count(),
        sums.into_iter().map(BigInt::from).collect(),
    ))
}

/// Full c-vector in one enumeration pass.
pub fn c_vector_bruteforce(g: &Graph) -> Result<BettiVector> {
    c_vector_with(g, &OracleOptions::default())
}

pub fn c_vector_with(g: &Graph, opts: &OracleOptions) -> Result<BettiVector> {
    let sums = subset_sums(g, 0, opts)?;
    Ok(BettiVector::new(
        VectorKind::C,
        g.vertex_count(),
        sums.into_iter().map(BigInt::from).collect(),
    ))
}

/// b-vector of a complex, via its 1-skeleton.
pub fn b_vector_of_complex(c: &SimplicialComplex) -> Result<BettiVector> {
    b_vector_bruteforce(&c.one_skeleton())
}

pub fn b_vector_of_complex_with(
    c: &SimplicialComplex,
    opts: &OracleOptions,
) -> Result<BettiVector> {
    b_vector_with(&c.one_skeleton(), opts)
}

fn expect_kind(v: &BettiVector, kind: VectorKind) -> Result<()> {
    if v.kind() != kind {
        return Err(Error::KindMismatch {
            expected: kind.name(),
            found: v.kind().name(),
        });
    }
    Ok(())
}

/// Component-count sum of a t-clique sum of two graphs, from the parts'
/// c-vectors:
///
/// ```text
/// c_k = Σ_i [ c_i(G1)·C(n2-t, k-i) + c_i(G2)·C(n1-t, k-i) ]
///       - C(n1+n2-t, k) + C(n1+n2-2t, k)
/// ```
pub fn c_sum_formula(
    c1: &BettiVector,
    c2: &BettiVector,
    t: usize,
    k: usize,
) -> Result<BigInt> {
    expect_kind(c1, VectorKind::C)?;
    expect_kind(c2, VectorKind::C)?;
    let (n1, n2, t, k) = (c1.n() as i64, c2.n() as i64, t as i64, k as i64);
    let mut total = BigInt::zero();
    for i in 0..=k {
        total += c1.get(i as usize) * binomial(n2 - t, k - i);
        total += c2.get(i as usize) * binomial(n1 - t, k - i);
    }
    total -= binomial(n1 + n2 - t, k);
    total += binomial(n1 + n2 - 2 * t, k);
    Ok(total)
}

/// Same recurrence in b-form:
///
/// ```text
/// b_k = Σ_i [ b_i(G1)·C(n2-t, k-i) + b_i(G2)·C(n1-t, k-i) ] + C(n1+n2-2t, k)
/// ```
pub fn b_sum_formula(
    b1: &BettiVector,
    b2: &BettiVector,
    t: usize,
    k: usize,
) -> Result<BigInt> {
    expect_kind(b1, VectorKind::B)?;
    expect_kind(b2, VectorKind::B)?;
    let (n1, n2, t, k) = (b1.n() as i64, b2.n() as i64, t as i64, k as i64);
    let mut total = BigInt::zero();
    for i in 0..=k {
        total += b1.get(i as usize) * binomial(n2 - t, k - i);
        total += b2.get(i as usize) * binomial(n1 - t, k - i);
    }
    total += binomial(n1 + n2 - 2 * t, k);
    Ok(total)
}

/// Closed form for a t-clique sum of `n` complete graphs on t+1 vertices:
/// `(k-1)·C(n,k)`. The value does not depend on `t`.
pub fn b_complete_sum(n: usize, t: usize, k: usize) -> BigInt {
    debug_assert!(n >= 1 && t >= 1);
    let _ = t;
    (BigInt::from(k as i64) - 1) * binomial(n as i64, k as i64)
}

/// Closed form for any tree with `n_edges` edges: `(k-1)·C(n_edges, k)`.
pub fn b_tree(n_edges: usize, k: usize) -> BigInt {
    (BigInt::from(k as i64) - 1) * binomial(n_edges as i64, k as i64)
}

/// Closed form for the cycle on `n >= 3` vertices:
/// `n(k-1)/(n-k) · C(n-2, k)` for `k < n`, and `0` at `k = n`.
///
/// The product is computed first and divided last; the quotient is provably
/// integral, and `NonIntegral` guards the division.
pub fn b_ngon(n: usize, k: usize) -> Result<BigInt> {
    if n < 3 {
        return Err(Error::BadSize { n, min: 3 });
    }
    if k == n {
        return Ok(BigInt::zero());
    }
    if k > n {
        return Ok(BigInt::zero());
    }
    let numerator =
        BigInt::from(n as i64) * (BigInt::from(k as i64) - 1) * binomial(n as i64 - 2, k as i64);
    let denominator = BigInt::from((n - k) as i64);
    if (&numerator % &denominator) != BigInt::zero() {
        return Err(Error::NonIntegral);
    }
    Ok(numerator / denominator)
}

/// Closed form for the boundary of a stacked d-polytope with n vertices:
/// `(k-1)·C(n-d, k)` when `d >= 3`, the n-gon form when `d = 2`.
pub fn b_stacked(n: usize, d: usize, k: usize) -> Result<BigInt> {
    if d < 2 {
        return Err(Error::BadDimension { dim: d, min: 2 });
    }
    if n < d + 1 {
        return Err(Error::BadSize { n, min: d + 1 });
    }
    if d == 2 {
        b_ngon(n, k)
    } else {
        Ok((BigInt::from(k as i64) - 1) * binomial((n - d) as i64, k as i64))
    }
}
