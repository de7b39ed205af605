//! Verification suites: each pits a closed form (the expected side) against
//! the brute-force enumeration oracle (the actual side), printing one line
//! per trial.

use num_bigint::BigInt;

use betti_core::betti::{
    b_ngon, b_sum_formula, b_tree, b_vector_bruteforce, b_vector_of_complex, binomial,
    c_sum_formula, c_vector_bruteforce,
};
use betti_core::connected_sum::{
    connected_sum_complex, connected_sum_graph, random_relabeling, skeleton_commutes,
};
use betti_core::generators::{
    cycle_graph, random_clique, random_complex, random_graph_with_clique, random_pure_complex,
    stacked_boundary, tree, Stacking, TreeShape,
};
use betti_core::hochster::{check_terai_hibi, graded_betti};
use betti_core::rng::SplitMix64;
use betti_core::{Graph, Relabeling, SimplicialComplex, VertexSet};

use crate::errors::CliResult;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    /// Component-count recurrence for t-clique sums.
    Lemma,
    /// b-vector recurrence for t-clique sums.
    Theorem,
    /// Gluing order does not change the b-vector.
    Invariance,
    /// Trees of one size share the closed form.
    Tree,
    /// Cycles match their closed form.
    Ngon,
    /// Stacked boundary skeletons match the closed form.
    Stacked,
    /// Skeletons commute with sums for gluings of size three or more.
    Skeleton,
    /// Betti tables of stacked boundaries have the two-strand structure.
    Hibi,
}

pub struct VerifyConfig {
    pub trials: Option<usize>,
    pub seed: u64,
    pub max_vertices: Option<usize>,
}

impl VerifyConfig {
    fn trials_or(&self, default: usize) -> usize {
        self.trials.unwrap_or(default)
    }

    fn max_or(&self, default: usize) -> usize {
        self.max_vertices.unwrap_or(default)
    }
}

struct Tally {
    passed: usize,
    total: usize,
}

impl Tally {
    fn new() -> Self {
        Tally { passed: 0, total: 0 }
    }

    fn record(&mut self, label: &str, outcome: Result<(), String>) {
        self.total += 1;
        match outcome {
            Ok(()) => {
                self.passed += 1;
                println!("{label}: pass");
            }
            Err(msg) => println!("{label}: FAIL ({msg})"),
        }
    }

    fn finish(self, suite: &str) -> bool {
        println!("suite {suite}: {}/{} passed", self.passed, self.total);
        self.passed == self.total
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> CliResult<bool> {
    Ok(match suite {
        Suite::Lemma => run_sum_recurrence(cfg, false)?,
        Suite::Theorem => run_sum_recurrence(cfg, true)?,
        Suite::Invariance => run_invariance(cfg)?,
        Suite::Tree => run_tree(cfg)?,
        Suite::Ngon => run_ngon(cfg)?,
        Suite::Stacked => run_stacked(cfg)?,
        Suite::Skeleton => run_skeleton(cfg)?,
        Suite::Hibi => run_hibi(cfg)?,
    })
}

struct GluedPair {
    g1: Graph,
    g2: Graph,
    t: usize,
    sum: Graph,
}

fn random_glued_pair(rng: &mut SplitMix64, max_vertices: usize) -> GluedPair {
    let t = 1 + rng.next_below(4);
    let n1 = t.max(1 + rng.next_below(max_vertices));
    let n2 = t.max(1 + rng.next_below(max_vertices));
    let g1 = random_graph_with_clique(n1, rng.next_f64(), t, rng).unwrap();
    let g2 = random_graph_with_clique(n2, rng.next_f64(), t, rng).unwrap();
    let f1 = random_clique(&g1, t, rng).unwrap();
    let f2 = random_clique(&g2, t, rng).unwrap();
    let sigma = random_relabeling(&g1.vertex_set(), &f1, &g2.vertex_set(), &f2, rng).unwrap();
    let sum = connected_sum_graph(&g1, &f1, &g2, &f2, &sigma).unwrap();
    GluedPair { g1, g2, t, sum }
}

fn run_sum_recurrence(cfg: &VerifyConfig, b_side: bool) -> CliResult<bool> {
    let trials = cfg.trials_or(200);
    let max_vertices = cfg.max_or(10);
    let mut rng = SplitMix64::new(cfg.seed);
    let mut tally = Tally::new();
    for trial in 1..=trials {
        let pair = random_glued_pair(&mut rng, max_vertices);
        let outcome = (|| -> CliResult<Result<(), String>> {
            for k in 0..=pair.sum.vertex_count() {
                let (actual, expected) = if b_side {
                    let v1 = b_vector_bruteforce(&pair.g1)?;
                    let v2 = b_vector_bruteforce(&pair.g2)?;
                    (
                        b_vector_bruteforce(&pair.sum)?.get(k),
                        b_sum_formula(&v1, &v2, pair.t, k)?,
                    )
                } else {
                    let v1 = c_vector_bruteforce(&pair.g1)?;
                    let v2 = c_vector_bruteforce(&pair.g2)?;
                    (
                        c_vector_bruteforce(&pair.sum)?.get(k),
                        c_sum_formula(&v1, &v2, pair.t, k)?,
                    )
                };
                if actual != expected {
                    return Ok(Err(format!(
                        "t={} k={k}: oracle {actual}, formula {expected}",
                        pair.t
                    )));
                }
            }
            Ok(Ok(()))
        })()?;
        tally.record(&format!("trial {trial:03}/{trials}"), outcome);
    }
    Ok(tally.finish(if b_side { "theorem" } else { "lemma" }))
}

fn random_fold(parts: &[Graph], t: usize, rng: &mut SplitMix64) -> Graph {
    let mut acc = parts[0].clone();
    for part in &parts[1..] {
        let f1 = random_clique(&acc, t, rng).expect("running sum keeps its cliques");
        let f2 = random_clique(part, t, rng).expect("parts contain a t-clique");
        let sigma =
            random_relabeling(&acc.vertex_set(), &f1, &part.vertex_set(), &f2, rng).unwrap();
        acc = connected_sum_graph(&acc, &f1, part, &f2, &sigma).unwrap();
    }
    acc
}

fn run_invariance(cfg: &VerifyConfig) -> CliResult<bool> {
    let trials = cfg.trials_or(50);
    let max_vertices = cfg.max_or(7);
    let mut rng = SplitMix64::new(cfg.seed);
    let mut tally = Tally::new();
    for trial in 1..=trials {
        let t = 1 + rng.next_below(3);
        let count = 3 + rng.next_below(3);
        let parts: Vec<Graph> = (0..count)
            .map(|_| {
                let n = t.max(2 + rng.next_below(max_vertices.saturating_sub(1).max(1)));
                random_graph_with_clique(n, rng.next_f64(), t, &mut rng).unwrap()
            })
            .collect();
        let first = b_vector_bruteforce(&random_fold(&parts, t, &mut rng))?;
        let second = b_vector_bruteforce(&random_fold(&parts, t, &mut rng))?;
        let outcome = if first == second {
            Ok(())
        } else {
            Err("two gluing sequences gave different vectors".to_string())
        };
        tally.record(&format!("trial {trial:03}/{trials}"), outcome);
    }
    Ok(tally.finish("invariance"))
}

fn run_tree(cfg: &VerifyConfig) -> CliResult<bool> {
    let random_per_size = cfg.trials_or(10);
    let max_vertices = cfg.max_or(12);
    let mut rng = SplitMix64::new(cfg.seed);
    let mut tally = Tally::new();
    for vertices in 2..=max_vertices {
        let mut shapes = vec![
            ("path".to_string(), tree(vertices, &TreeShape::Path)?),
            ("star".to_string(), tree(vertices, &TreeShape::Star)?),
        ];
        for _ in 0..random_per_size {
            let seed = rng.next_u64();
            shapes.push((
                format!("random[{seed:#x}]"),
                tree(vertices, &TreeShape::Random(seed))?,
            ));
        }
        for (label, g) in shapes {
            let v = b_vector_bruteforce(&g)?;
            let mismatch = (0..=vertices)
                .find(|&k| v.get(k) != b_tree(vertices - 1, k))
                .map(|k| format!("k={k}: {} vs {}", v.get(k), b_tree(vertices - 1, k)));
            tally.record(
                &format!("vertices {vertices:2} {label}"),
                mismatch.map_or(Ok(()), Err),
            );
        }
    }
    Ok(tally.finish("tree"))
}

fn run_ngon(cfg: &VerifyConfig) -> CliResult<bool> {
    let max_vertices = cfg.max_or(14);
    let mut tally = Tally::new();
    for n in 3..=max_vertices {
        let v = b_vector_bruteforce(&cycle_graph(n)?)?;
        let outcome = (|| -> CliResult<Result<(), String>> {
            for k in 0..=n {
                let want = b_ngon(n, k)?;
                if v.get(k) != want {
                    return Ok(Err(format!("k={k}: oracle {}, formula {want}", v.get(k))));
                }
            }
            Ok(Ok(()))
        })()?;
        tally.record(&format!("n={n:2}"), outcome);
    }
    Ok(tally.finish("ngon"))
}

fn run_stacked(cfg: &VerifyConfig) -> CliResult<bool> {
    let seeds = cfg.trials_or(5);
    let max_vertices = cfg.max_or(14);
    let mut rng = SplitMix64::new(cfg.seed);
    let mut tally = Tally::new();
    for d in [3usize, 4, 5] {
        for n in (d + 1)..=(d + 9).min(max_vertices) {
            for _ in 0..seeds {
                let seed = rng.next_u64();
                let complex = stacked_boundary(d, n, &Stacking::Seed(seed))?;
                let v = b_vector_of_complex(&complex)?;
                let mismatch = (0..=n)
                    .find(|&k| {
                        v.get(k) != (BigInt::from(k as i64) - 1) * binomial((n - d) as i64, k as i64)
                    })
                    .map(|k| format!("k={k}"));
                tally.record(
                    &format!("d={d} n={n:2} seed={seed:#018x}"),
                    mismatch.map_or(Ok(()), Err),
                );
            }
        }
    }
    Ok(tally.finish("stacked"))
}

fn run_skeleton(cfg: &VerifyConfig) -> CliResult<bool> {
    let trials = cfg.trials_or(50);
    let mut rng = SplitMix64::new(cfg.seed);
    let mut tally = Tally::new();
    for trial in 1..=trials {
        let t = 3 + rng.next_below(2);
        let n = t + 1 + rng.next_below(3);
        let d1 = random_pure_complex(n, t, 4, &mut rng)?;
        let d2 = random_pure_complex(n, t, 4, &mut rng)?;
        let f1 = d1.facets()[rng.next_below(d1.facet_count())].clone();
        let f2 = d2.facets()[rng.next_below(d2.facet_count())].clone();
        let sigma = random_relabeling(d1.vertices(), &f1, d2.vertices(), &f2, &mut rng)?;
        let outcome = if skeleton_commutes(&d1, &f1, &d2, &f2, &sigma)? {
            Ok(())
        } else {
            Err(format!("t={t} gluing failed to commute"))
        };
        tally.record(&format!("trial {trial:03}/{trials} t={t}"), outcome);
    }

    // the fixed 2-element counterexample must not commute
    let d1 = SimplicialComplex::from_facets([
        VertexSet::from([1, 2]),
        VertexSet::from([2, 3]),
        VertexSet::from([1, 3]),
    ])?;
    let d2 = SimplicialComplex::from_facets([
        VertexSet::from([1, 3]),
        VertexSet::from([3, 4]),
        VertexSet::from([1, 4]),
    ])?;
    let f = VertexSet::from([1, 3]);
    let sigma = Relabeling::identity(d2.vertices());
    let complex_edges = connected_sum_complex(&d1, &f, &d2, &f, &sigma)?
        .one_skeleton()
        .edges();
    let graph_edges =
        connected_sum_graph(&d1.one_skeleton(), &f, &d2.one_skeleton(), &f, &sigma)?.edges();
    let outcome = if !skeleton_commutes(&d1, &f, &d2, &f, &sigma)?
        && complex_edges == vec![(1, 2), (1, 4), (2, 3), (3, 4)]
        && graph_edges == vec![(1, 2), (1, 3), (1, 4), (2, 3), (3, 4)]
    {
        Ok(())
    } else {
        Err(format!(
            "complex side {complex_edges:?}, graph side {graph_edges:?}"
        ))
    };
    tally.record("2-element counterexample", outcome);
    Ok(tally.finish("skeleton"))
}

fn run_hibi(cfg: &VerifyConfig) -> CliResult<bool> {
    let max_vertices = cfg.max_or(9);
    let mut rng = SplitMix64::new(cfg.seed);
    let mut tally = Tally::new();

    for (d, lo) in [(3usize, 5usize), (4, 6)] {
        for n in lo..=max_vertices.max(lo) {
            let seed = rng.next_u64();
            let complex = stacked_boundary(d, n, &Stacking::Seed(seed))?;
            let report = check_terai_hibi(&complex, d)?;
            let outcome = if report.is_pass() {
                Ok(())
            } else {
                Err(format!("{report}").trim_end().to_string())
            };
            tally.record(&format!("structure d={d} n={n}"), outcome);
        }
    }

    // linear strand of the table equals the enumeration oracle
    let complexes = cfg.trials_or(10);
    for trial in 1..=complexes {
        let n = 3 + rng.next_below(5);
        let complex = random_complex(n, 6, &mut rng)?;
        let b = b_vector_of_complex(&complex)?;
        let outcome = (|| -> CliResult<Result<(), String>> {
            for k in 1..=complex.vertex_count() {
                let entry = graded_betti(&complex, k - 1, k)?;
                if BigInt::from(entry) != b.get(k) {
                    return Ok(Err(format!("k={k}: table {entry}, oracle {}", b.get(k))));
                }
            }
            Ok(Ok(()))
        })()?;
        tally.record(&format!("linear strand trial {trial:02}/{complexes}"), outcome);
    }
    Ok(tally.finish("hibi"))
}
