//! Cross-checks of the enumeration kernel against definition-level oracles
//! and of the closed forms against the kernel.

mod common;

use common::{naive_b, naive_b_values, naive_c, pascal_binomial, vset};
use num_bigint::BigInt;

use betti_core::betti::{
    b_bruteforce, b_ngon, b_sum_formula, b_tree, b_vector_bruteforce, b_vector_of_complex,
    binomial, c_bruteforce, c_sum_formula, c_vector_bruteforce,
};
use betti_core::connected_sum::{
    canonical_relabeling, connected_sum_complex, connected_sum_graph, skeleton_commutes,
};
use betti_core::generators::{
    complete_graph, cycle_graph, random_graph, simplex_boundary, stacked_boundary, tree,
    Stacking, TreeShape,
};
use betti_core::rng::SplitMix64;
use betti_core::{Relabeling, SimplicialComplex};

#[test]
fn kernel_matches_bfs_oracle_on_random_graphs() {
    let mut rng = SplitMix64::new(0xABCDEF);
    for trial in 0..40 {
        let n = 1 + rng.next_below(8);
        let p = rng.next_f64();
        let g = random_graph(n, p, &mut rng).unwrap();
        let vector = b_vector_bruteforce(&g).unwrap();
        let expected = naive_b_values(&g);
        for (k, want) in expected.iter().enumerate() {
            assert_eq!(vector.get(k), BigInt::from(*want), "trial {trial}, k={k}");
        }
    }
}

#[test]
fn kernel_matches_bfs_oracle_on_structured_graphs() {
    let graphs = vec![
        complete_graph(6).unwrap(),
        cycle_graph(7).unwrap(),
        tree(8, &TreeShape::Star).unwrap(),
        tree(8, &TreeShape::Path).unwrap(),
        stacked_boundary(3, 7, &Stacking::Seed(5)).unwrap().one_skeleton(),
    ];
    for g in graphs {
        for k in 0..=g.vertex_count() {
            assert_eq!(b_bruteforce(&g, k).unwrap(), naive_b(&g, k));
            assert_eq!(c_bruteforce(&g, k).unwrap(), naive_c(&g, k));
        }
    }
}

#[test]
fn frozen_small_values() {
    // path on 3 vertices: only {1,3} among pairs is disconnected
    let path = tree(3, &TreeShape::Path).unwrap();
    assert_eq!(naive_b(&path, 2), 1);
    assert_eq!(b_bruteforce(&path, 2).unwrap(), 1);

    // 5-cycle triples: exactly 5 of the 10 induce two components
    let c5 = cycle_graph(5).unwrap();
    assert_eq!(naive_b(&c5, 3), 5);
    assert_eq!(b_bruteforce(&c5, 3).unwrap(), 5);

    // 4-cycle pairs: the two diagonals
    let c4 = cycle_graph(4).unwrap();
    assert_eq!(b_bruteforce(&c4, 2).unwrap(), 2);

    // path c-values: 1 + 1 + 2
    assert_eq!(c_bruteforce(&path, 2).unwrap(), 4);
}

#[test]
fn binomial_matches_pascal_construction() {
    for a in 0..=60usize {
        for b in 0..=a {
            assert_eq!(
                binomial(a as i64, b as i64),
                pascal_binomial(a, b),
                "C({a},{b})"
            );
        }
    }
    // spot checks high in the triangle
    assert_eq!(binomial(200, 3), pascal_binomial(200, 3));
    assert_eq!(binomial(200, 100), pascal_binomial(200, 100));
}

#[test]
fn sum_formulas_match_kernel_on_glued_graphs() {
    let mut rng = SplitMix64::new(7);
    for trial in 0..30 {
        let t = 1 + rng.next_below(3);
        let n1 = t.max(1 + rng.next_below(7));
        let n2 = t.max(1 + rng.next_below(7));
        let g1 = betti_core::generators::random_graph_with_clique(n1, rng.next_f64(), t, &mut rng)
            .unwrap();
        let g2 = betti_core::generators::random_graph_with_clique(n2, rng.next_f64(), t, &mut rng)
            .unwrap();
        let f1 = betti_core::generators::random_clique(&g1, t, &mut rng).unwrap();
        let f2 = betti_core::generators::random_clique(&g2, t, &mut rng).unwrap();
        let sigma = betti_core::connected_sum::random_relabeling(
            &g1.vertex_set(),
            &f1,
            &g2.vertex_set(),
            &f2,
            &mut rng,
        )
        .unwrap();
        let sum = connected_sum_graph(&g1, &f1, &g2, &f2, &sigma).unwrap();

        let b1 = b_vector_bruteforce(&g1).unwrap();
        let b2 = b_vector_bruteforce(&g2).unwrap();
        let c1 = c_vector_bruteforce(&g1).unwrap();
        let c2 = c_vector_bruteforce(&g2).unwrap();
        for k in 0..=sum.vertex_count() {
            assert_eq!(
                BigInt::from(naive_b(&sum, k)),
                b_sum_formula(&b1, &b2, t, k).unwrap(),
                "trial {trial} b k={k}"
            );
            assert_eq!(
                BigInt::from(naive_c(&sum, k)),
                c_sum_formula(&c1, &c2, t, k).unwrap(),
                "trial {trial} c k={k}"
            );
        }
    }
}

#[test]
fn tree_closed_form_matches_oracle_for_both_shapes() {
    // paths and stars with 4 vertices share the same values
    let path = tree(4, &TreeShape::Path).unwrap();
    let star = tree(4, &TreeShape::Star).unwrap();
    for k in 0..=4usize {
        let want = b_tree(3, k);
        assert_eq!(BigInt::from(naive_b(&path, k)), want);
        assert_eq!(BigInt::from(naive_b(&star, k)), want);
    }
}

#[test]
fn ngon_closed_form_matches_oracle() {
    for n in 3..=9usize {
        let g = cycle_graph(n).unwrap();
        for k in 0..=n {
            assert_eq!(
                BigInt::from(naive_b(&g, k)),
                b_ngon(n, k).unwrap(),
                "n={n} k={k}"
            );
        }
    }
}

#[test]
fn complex_vector_equals_skeleton_vector() {
    let c = stacked_boundary(3, 6, &Stacking::Seed(42)).unwrap();
    let via_complex = b_vector_of_complex(&c).unwrap();
    let via_graph = b_vector_bruteforce(&c.one_skeleton()).unwrap();
    assert_eq!(via_complex, via_graph);
    // frozen: (k-1)·C(3,k)
    let expected: Vec<i64> = vec![-1, 0, 3, 2, 0, 0, 0];
    for (k, want) in expected.iter().enumerate() {
        assert_eq!(via_complex.get(k), BigInt::from(*want), "k={k}");
    }
}

#[test]
fn glued_triangles_skeleton_is_square() {
    // the 2-element gluing where skeletons of sum and sum of skeletons differ
    let d1 = SimplicialComplex::from_facets([vset(&[1, 2]), vset(&[2, 3]), vset(&[1, 3])]).unwrap();
    let d2 = SimplicialComplex::from_facets([vset(&[1, 3]), vset(&[3, 4]), vset(&[1, 4])]).unwrap();
    let f = vset(&[1, 3]);
    let sigma = Relabeling::identity(d2.vertices());

    let complex_sum = connected_sum_complex(&d1, &f, &d2, &f, &sigma).unwrap();
    assert_eq!(
        complex_sum.one_skeleton().edges(),
        vec![(1, 2), (1, 4), (2, 3), (3, 4)]
    );
    let v = b_vector_of_complex(&complex_sum).unwrap();
    assert_eq!(v.get(2), BigInt::from(2));

    let graph_sum = connected_sum_graph(
        &d1.one_skeleton(),
        &f,
        &d2.one_skeleton(),
        &f,
        &sigma,
    )
    .unwrap();
    assert_eq!(
        graph_sum.edges(),
        vec![(1, 2), (1, 3), (1, 4), (2, 3), (3, 4)]
    );
    assert!(!skeleton_commutes(&d1, &f, &d2, &f, &sigma).unwrap());
}

#[test]
fn complete_skeleton_has_trivial_vector() {
    let v = b_vector_of_complex(&simplex_boundary(3).unwrap()).unwrap();
    for k in 1..=4usize {
        assert_eq!(v.get(k), BigInt::ZERO);
    }
    assert_eq!(v.get(0), BigInt::from(-1));
}

#[test]
fn stacked_skeleton_is_iterated_clique_sum() {
    // the skeleton of a stacked boundary and an iterated 3-sum of complete
    // graphs on 4 vertices have the same vector
    use betti_core::connected_sum::{iterated_sum, Gluing};
    use betti_core::generators::complete_graph;

    for n in 5..=8usize {
        let skeleton = stacked_boundary(3, n, &Stacking::Seed(n as u64))
            .unwrap()
            .one_skeleton();
        let parts: Vec<_> = (0..n - 3).map(|_| complete_graph(4).unwrap()).collect();
        let gluings: Vec<Gluing> = (1..n - 3)
            .map(|_| Gluing {
                left_face: vset(&[0, 1, 2]),
                right_face: vset(&[0, 1, 2]),
                relabeling: None,
            })
            .collect();
        let fold = iterated_sum(&parts, &gluings).unwrap();
        assert_eq!(
            b_vector_bruteforce(&skeleton).unwrap().values(),
            b_vector_bruteforce(&fold).unwrap().values(),
            "n={n}"
        );
    }
}

#[test]
fn iterated_simplex_gluing_reproduces_stacked_generator() {
    // gluing a fresh simplex boundary onto the stacked-over facet must agree
    // with the direct stacking move
    let base = simplex_boundary(3).unwrap();
    let facet = vset(&[0, 1, 2]);
    let part = simplex_boundary(3).unwrap();
    let part_facet = vset(&[0, 1, 2]);
    let sigma = canonical_relabeling(base.vertices(), &facet, part.vertices(), &part_facet).unwrap();
    let glued = connected_sum_complex(&base, &facet, &part, &part_facet, &sigma).unwrap();

    let stacked = stacked_boundary(3, 5, &Stacking::Explicit(vec![facet.clone()])).unwrap();
    assert_eq!(glued, stacked);
}

#[test]
fn complex_fold_reproduces_multi_step_stacking() {
    // folding simplex boundaries over an explicit facet sequence equals the
    // generator run with the same choices, facet for facet
    use betti_core::connected_sum::{iterated_sum, Gluing};

    let choices = vec![vset(&[0, 1, 2]), vset(&[0, 1, 3]), vset(&[0, 2, 3])];
    let parts: Vec<SimplicialComplex> =
        (0..4).map(|_| simplex_boundary(3).unwrap()).collect();
    let gluings: Vec<Gluing> = choices
        .iter()
        .map(|f| Gluing {
            left_face: f.clone(),
            right_face: vset(&[0, 1, 2]),
            relabeling: None,
        })
        .collect();
    let fold = iterated_sum(&parts, &gluings).unwrap();
    let generated = stacked_boundary(3, 7, &Stacking::Explicit(choices)).unwrap();
    assert_eq!(fold, generated);
    assert_eq!(fold.vertex_count(), 7);
    assert_eq!(fold.facet_count(), 4 + 3 * 2);
}

#[test]
fn vertex_sized_complex_gluings_degenerate() {
    use betti_core::connected_sum::connected_sum_complex;

    // both sides a bare vertex: the sum is the complex with no faces
    let point = SimplicialComplex::from_facets([vset(&[5])]).unwrap();
    let sigma = Relabeling::identity(point.vertices());
    let sum = connected_sum_complex(&point, &vset(&[5]), &point, &vset(&[5]), &sigma).unwrap();
    assert_eq!(sum, SimplicialComplex::empty());

    // an isolated vertex glued away disappears from the result
    let with_edge = SimplicialComplex::from_facets([vset(&[1, 2]), vset(&[3])]).unwrap();
    let other = SimplicialComplex::from_facets([vset(&[5])]).unwrap();
    let sigma = Relabeling::new([(5, 3)]).unwrap();
    let sum =
        connected_sum_complex(&with_edge, &vset(&[3]), &other, &vset(&[5]), &sigma).unwrap();
    assert_eq!(sum.facets(), &[vset(&[1, 2])]);
    assert!(!sum.vertices().contains(3));
}

#[test]
fn graded_betti_out_of_range_is_zero() {
    use betti_core::hochster::graded_betti;
    let c = simplex_boundary(3).unwrap();
    assert_eq!(graded_betti(&c, 3, 2).unwrap(), 0); // i > j
    assert_eq!(graded_betti(&c, 1, 9).unwrap(), 0); // j > n
}
