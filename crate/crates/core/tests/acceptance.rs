//! End-to-end checks of the documented behavior on the two study graphs:
//! state counts, separation, partition representations, certificates and
//! coverings, classical and quantum bounds, the analytic constructions, and
//! rainbow colorings. Each test exercises one claim at its stated tolerance.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pseudoctx_core::fixtures::{
    combo_for_alpha_pi2, combo_for_alpha_pi3, combo_graph, combo_partition, small_for_heuristic,
    small_graph, small_partition, COMBO_PSEUDO_PAIR, SMALL_PSEUDO_PAIR,
};
use pseudoctx_core::geometry::{
    alpha_max, beta_of_alpha, construct_combo_for, construct_small_for, dot, eigen_sym3,
    find_degenerate_alpha, gram_equivalent, infer_hypergraph_from_labels, pairwise_overlaps,
    projector_sum, quantum_bounds, verify_for, ConstructError, Degeneracy, SymMatrix3,
    VectorLabeling, ORTH_EPS_DEFAULT,
};
use pseudoctx_core::hypergraph::Hypergraph;
use pseudoctx_core::pseudo::{
    certificate_from_coverings, classical_bounds, find_coverings, verify_pseudocontext_pair,
};
use pseudoctx_core::states::{
    edges_from_partition, enumerate_two_valued_states, find_rainbow_coloring,
    find_rainbow_coloring_with, is_separating, partition_representation, state_from_coloring,
    PartitionRepresentation, Separation, StateSet,
};
use pseudoctx_core::VertexId;

#[test]
fn state_counts_are_exact_and_fast() {
    let t = Instant::now();
    let s = enumerate_two_valued_states(small_graph());
    assert_eq!(s.len(), 24);
    assert!(t.elapsed() < Duration::from_secs(1));

    let t = Instant::now();
    let c = enumerate_two_valued_states(combo_graph());
    assert_eq!(c.len(), 225);
    assert!(t.elapsed() < Duration::from_secs(1));
}

#[test]
fn both_state_sets_are_separating() {
    for h in [small_graph(), combo_graph()] {
        let s = enumerate_two_valued_states(h);
        assert_eq!(is_separating(&s, h), Separation::Separating);
    }
}

/// The set of vertices a state index charges, useful for comparing partition
/// representations up to a relabeling of state indices.
fn state_profiles(p: &PartitionRepresentation) -> Vec<Vec<VertexId>> {
    let mut profiles: Vec<Vec<VertexId>> = (0..p.n_states()).map(|_| Vec::new()).collect();
    for v in 1..=p.n_vertices() {
        for &i in p.set(v) {
            profiles[(i - 1) as usize].push(v);
        }
    }
    profiles.sort();
    profiles
}

#[test]
fn partition_representations_match_published_index_sets() {
    let s = enumerate_two_valued_states(small_graph());
    let computed = partition_representation(&s).unwrap();
    // Equal as multisets of vertex profiles: some permutation of the 24 state
    // indices relabels one onto the other...
    assert_eq!(state_profiles(&computed), state_profiles(small_partition()));
    // ...and the canonical enumeration order makes that permutation the
    // identity.
    assert_eq!(&computed, small_partition());
    for e in small_graph().edges() {
        assert!(computed.edge_partition_holds(e));
    }

    let c = enumerate_two_valued_states(combo_graph());
    let combo_computed = partition_representation(&c).unwrap();
    assert_eq!(combo_computed.n_states(), 225);
    assert_eq!(&combo_computed, combo_partition());
    for e in combo_graph().edges() {
        assert!(combo_computed.edge_partition_holds(e));
    }
}

#[test]
fn partition_and_vector_oracles_agree_on_the_edges() {
    let from_sets = edges_from_partition(small_partition());
    let from_vectors =
        infer_hypergraph_from_labels(small_for_heuristic(), ORTH_EPS_DEFAULT).unwrap();
    assert_eq!(from_vectors.n(), 15);
    assert_eq!(from_sets.len(), 8);
    assert_eq!(from_sets.as_slice(), from_vectors.edges());

    let from_sets = edges_from_partition(combo_partition());
    assert_eq!(from_sets.len(), 22);
    for labeling in [combo_for_alpha_pi3(), combo_for_alpha_pi2()] {
        let from_vectors = infer_hypergraph_from_labels(labeling, ORTH_EPS_DEFAULT).unwrap();
        assert_eq!(from_vectors.n(), 36);
        assert_eq!(from_sets.as_slice(), from_vectors.edges());
    }
}

#[test]
fn pseudocontext_pairs_certify_with_coverings_and_statewise_equality() {
    type Case = (&'static Hypergraph, ([VertexId; 3], [VertexId; 3]), usize, usize);
    let cases: [Case; 2] = [
        (small_graph(), SMALL_PSEUDO_PAIR, 4, 24),
        (combo_graph(), COMBO_PSEUDO_PAIR, 11, 225),
    ];
    for (h, (a, b), cover_size, n_states) in cases {
        let cert = verify_pseudocontext_pair(h, &a, &b)
            .unwrap()
            .expect("the embedded pair must carry a certificate");
        assert!(cert.verify(h));

        let cov_a = find_coverings(h, &a).unwrap();
        let cov_b = find_coverings(h, &b).unwrap();
        assert!(!cov_a.is_empty() && !cov_b.is_empty());
        for c in cov_a.iter().chain(cov_b.iter()) {
            assert_eq!(c.edges().len(), cover_size);
        }
        // The covering difference is itself a certificate for the same pair.
        let alt = certificate_from_coverings(h, &cov_a[0], &cov_b[0]).unwrap();
        assert!(alt.verify(h));
        assert_eq!(alt.a(), cert.a());
        assert_eq!(alt.b(), cert.b());

        let s = enumerate_two_valued_states(h);
        assert_eq!(s.len(), n_states);
        for st in s.states() {
            assert_eq!(st.sum_over(&a), st.sum_over(&b));
        }
    }
}

#[test]
fn classical_bounds_over_the_state_polytopes() {
    let s = enumerate_two_valued_states(small_graph());
    let (a, b) = SMALL_PSEUDO_PAIR;
    for set in [a, b] {
        let cb = classical_bounds(&s, &set).unwrap();
        assert_eq!((cb.lo, cb.hi), (0, 2));
    }

    let s = enumerate_two_valued_states(combo_graph());
    let (a, b) = COMBO_PSEUDO_PAIR;
    for set in [a, b] {
        let cb = classical_bounds(&s, &set).unwrap();
        assert_eq!((cb.lo, cb.hi), (0, 3));
    }
}

#[test]
fn heuristic_labeling_is_faithful_with_the_documented_spectrum() {
    let l = small_for_heuristic();
    assert!(verify_for(small_graph(), l, ORTH_EPS_DEFAULT).unwrap().is_clean());

    let (a, b) = SMALL_PSEUDO_PAIR;
    let ma = projector_sum(l, &a).unwrap();
    let mb = projector_sum(l, &b).unwrap();
    assert!(ma.sub(&mb).max_abs() <= 1e-9);

    let d = eigen_sym3(&ma);
    let s21 = 21.0_f64.sqrt();
    let expected = [(7.0 - s21) / 14.0, (7.0 + s21) / 14.0, 2.0];
    for (got, want) in d.eigenvalues.iter().zip(expected) {
        assert!((got - want).abs() <= 1e-9, "eigenvalue {got} vs {want}");
    }

    let u = d.eigenvectors[2];
    let t = [0.0, -2.0 / 5.0_f64.sqrt(), 1.0 / 5.0_f64.sqrt()];
    let sign = if dot(&u, &t) < 0.0 { -1.0 } else { 1.0 };
    for i in 0..3 {
        assert!((u[i] - sign * t[i]).abs() <= 1e-8, "top eigenvector component {i}");
    }
}

#[test]
fn rotation_angle_matches_the_published_anchor_values() {
    let cases = [
        (0.0, PI / 2.0),
        (PI / 3.0, PI - (1.0 / 14.0_f64).acos()),
        (2.0 * PI / 3.0, 2.0 * PI / 3.0),
        (alpha_max(), PI),
    ];
    for (alpha, want) in cases {
        let beta = beta_of_alpha(alpha).unwrap();
        assert!((beta - want).abs() <= 1e-12, "beta({alpha}) = {beta}, want {want}");
    }
}

#[test]
fn the_degenerate_angle_is_located_and_rejected_by_both_constructions() {
    let a0 = find_degenerate_alpha();
    assert!((a0 - 0.886257).abs() <= 1e-5);
    for result in [construct_small_for(a0), construct_combo_for(a0)] {
        match result {
            Err(ConstructError::Degenerate(Degeneracy::ExtraOrthogonality(u, v))) => {
                assert_eq!((u, v), (5, 11));
            }
            other => panic!("expected an extra-orthogonality rejection, got {other:?}"),
        }
    }
    let message = construct_small_for(a0).unwrap_err().to_string();
    assert!(message.contains("between vertices 5 and 11"), "{message}");
}

#[test]
fn combo_construction_reproduces_the_published_lists() {
    // alpha = pi/3: same Gram matrix as the published list, whose
    // pseudocontext geometry is fully symmetric about the z axis.
    let constructed = construct_combo_for(PI / 3.0).unwrap();
    let published = combo_for_alpha_pi3();
    assert!(gram_equivalent(&constructed, published, 1e-8).unwrap());
    assert!(verify_for(combo_graph(), published, ORTH_EPS_DEFAULT).unwrap().is_clean());

    let (a, b) = COMBO_PSEUDO_PAIR;
    for set in [a, b] {
        for o in pairwise_overlaps(published, &set).unwrap() {
            assert!((o - 0.8).abs() <= 1e-9, "overlap {o}");
        }
        let m = projector_sum(published, &set).unwrap();
        let want = SymMatrix3 { xx: 0.2, xy: 0.0, xz: 0.0, yy: 0.2, yz: 0.0, zz: 2.6 };
        assert!(m.sub(&want).max_abs() <= 1e-9);
    }

    let (lo, hi) = quantum_bounds(published, &a).unwrap();
    assert!((lo - 0.2).abs() <= 1e-9 && (hi - 2.6).abs() <= 1e-9);
    // Strict containment in the classical interval (0, 3).
    let s = enumerate_two_valued_states(combo_graph());
    let cb = classical_bounds(&s, &a).unwrap();
    assert!(f64::from(cb.lo) < lo && hi < f64::from(cb.hi));

    // alpha = pi/2: Gram-equivalent to the published list and faithful.
    let constructed = construct_combo_for(PI / 2.0).unwrap();
    let published = combo_for_alpha_pi2();
    assert!(gram_equivalent(&constructed, published, 1e-8).unwrap());
    assert!(verify_for(combo_graph(), published, ORTH_EPS_DEFAULT).unwrap().is_clean());
}

fn fifty_valid_alphas(hi: f64, excluded: &[f64]) -> Vec<f64> {
    let mut out = Vec::new();
    let mut k = 1;
    while out.len() < 50 {
        assert!(k <= 64, "candidate grid exhausted");
        let a = hi * k as f64 / 64.0;
        k += 1;
        if excluded.iter().all(|&x| (a - x).abs() > 0.02) {
            out.push(a);
        }
    }
    out
}

fn random_unit(rng: &mut impl Rng) -> [f64; 3] {
    loop {
        let v = [
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        ];
        let n = pseudoctx_core::geometry::norm(&v);
        if n > 0.1 && n <= 1.0 {
            return [v[0] / n, v[1] / n, v[2] / n];
        }
    }
}

fn sweep_variant<F>(
    construct: F,
    hi: f64,
    h: &Hypergraph,
    pair: ([VertexId; 3], [VertexId; 3]),
    stitched: bool,
    rng: &mut ChaCha8Rng,
) where
    F: Fn(f64) -> Result<VectorLabeling, ConstructError>,
{
    let excluded = [0.0, find_degenerate_alpha(), 2.0 * PI / 3.0];
    let (a, b) = pair;
    for alpha in fifty_valid_alphas(hi, &excluded) {
        let l = construct(alpha).unwrap_or_else(|e| panic!("alpha = {alpha}: {e}"));
        assert!(
            verify_for(h, &l, ORTH_EPS_DEFAULT).unwrap().is_clean(),
            "not faithful at alpha = {alpha}"
        );
        if stitched {
            let seam = dot(l.vector(3), l.vector(5)).abs();
            assert!(seam <= 1e-10, "seam overlap {seam} at alpha = {alpha}");
        }
        for _ in 0..2 {
            let psi = random_unit(rng);
            let p = pseudoctx_core::geometry::born_probabilities(&l, &psi).unwrap();
            for e in h.edges() {
                let sum: f64 = e.members().iter().map(|&v| p[(v - 1) as usize]).sum();
                assert!((sum - 1.0).abs() <= 1e-10, "edge sum {sum} at alpha = {alpha}");
            }
            let sa: f64 = a.iter().map(|&v| p[(v - 1) as usize]).sum();
            let sb: f64 = b.iter().map(|&v| p[(v - 1) as usize]).sum();
            assert!((sa - sb).abs() <= 1e-10, "pseudocontext sums differ at alpha = {alpha}");
        }
    }
}

#[test]
fn construction_sweep_stays_faithful_with_consistent_probabilities() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0c0ffee);
    sweep_variant(construct_small_for, PI, small_graph(), SMALL_PSEUDO_PAIR, false, &mut rng);
    sweep_variant(
        construct_combo_for,
        alpha_max(),
        combo_graph(),
        COMBO_PSEUDO_PAIR,
        true,
        &mut rng,
    );
}

#[test]
fn combo_coloring_yields_an_enumerated_state_and_respects_the_pseudocontexts() {
    let h = combo_graph();
    let s: StateSet = enumerate_two_valued_states(h);

    let c = find_rainbow_coloring(h).expect("a rainbow coloring exists");
    assert!(c.is_rainbow(h));
    for color in 1..=3 {
        let st = state_from_coloring(&c, color, h).unwrap();
        assert!(s.position_of(&st).is_some(), "color {color} state not enumerated");
    }

    let (a, b) = COMBO_PSEUDO_PAIR;
    let c = find_rainbow_coloring_with(h, &[a, b])
        .expect("a coloring rainbow on both pseudocontexts exists");
    assert!(c.is_rainbow(h));
    assert!(c.is_rainbow_on(&a) && c.is_rainbow_on(&b));
}
