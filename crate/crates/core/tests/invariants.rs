//! Randomized invariants: properties that must hold on every valid graph,
//! every enumerated state set, every certificate, and every symmetric matrix,
//! not just the two study graphs.

use proptest::prelude::*;

use pseudoctx_core::geometry::{dot, eigen_sym3, SymMatrix3};
use pseudoctx_core::hypergraph::{parse_hypergraph, parse_hypergraph_json, Hyperedge, Hypergraph};
use pseudoctx_core::numfmt::fmt17;
use pseudoctx_core::pseudo::{find_coverings, find_pseudocontext_pairs, verify_pseudocontext_pair};
use pseudoctx_core::states::{
    edges_from_partition, enumerate_two_valued_states, partition_representation,
};
use pseudoctx_core::VertexId;

/// Random valid graphs: each edge brings at least two fresh vertices, so all
/// pairs of edges share at most one vertex and no vertex is isolated.
fn arb_graph() -> impl Strategy<Value = Hypergraph> {
    prop::collection::vec(prop::option::of(any::<prop::sample::Index>()), 1..6).prop_map(
        |choices| {
            let mut edges = Vec::new();
            let mut n: VertexId = 0;
            for choice in choices {
                let edge = match choice {
                    Some(ix) if n > 0 => {
                        let reuse = ix.index(n as usize) as VertexId + 1;
                        let e = Hyperedge::new(reuse, n + 1, n + 2);
                        n += 2;
                        e
                    }
                    _ => {
                        let e = Hyperedge::new(n + 1, n + 2, n + 3);
                        n += 3;
                        e
                    }
                };
                edges.push(edge.expect("members are distinct"));
            }
            Hypergraph::validated(n, edges).expect("generated graphs are valid")
        },
    )
}

fn arb_sym3() -> impl Strategy<Value = SymMatrix3> {
    let c = -3.0..3.0f64;
    (c.clone(), c.clone(), c.clone(), c.clone(), c.clone(), c).prop_map(
        |(xx, xy, xz, yy, yz, zz)| SymMatrix3 { xx, xy, xz, yy, yz, zz },
    )
}

proptest! {
    #[test]
    fn graph_text_and_json_round_trip(h in arb_graph()) {
        let text = parse_hypergraph(&h.to_text()).unwrap();
        prop_assert_eq!(&text, &h);
        let json = parse_hypergraph_json(&h.to_json_string()).unwrap();
        prop_assert_eq!(&json, &h);
    }

    #[test]
    fn eigen_decomposition_solves_random_symmetric_matrices(m in arb_sym3()) {
        let d = eigen_sym3(&m);
        let scale = 1.0 + m.max_abs();
        prop_assert!(d.eigenvalues[0] <= d.eigenvalues[1]);
        prop_assert!(d.eigenvalues[1] <= d.eigenvalues[2]);
        let trace: f64 = d.eigenvalues.iter().sum();
        prop_assert!((trace - m.trace()).abs() <= 1e-9 * scale);
        for i in 0..3 {
            let u = d.eigenvectors[i];
            let mu = m.apply(&u);
            for k in 0..3 {
                prop_assert!((mu[k] - d.eigenvalues[i] * u[k]).abs() <= 1e-9 * scale);
            }
            prop_assert!((dot(&u, &u) - 1.0).abs() <= 1e-9);
            for j in 0..i {
                prop_assert!(dot(&u, &d.eigenvectors[j]).abs() <= 1e-9);
            }
        }
    }

    #[test]
    fn fmt17_round_trips_every_finite_double(x in any::<f64>()) {
        prop_assume!(x.is_finite());
        let parsed: f64 = fmt17(x).parse().unwrap();
        prop_assert_eq!(parsed.to_bits(), x.to_bits());
    }
}

/// Exhaustive reference count: assignments with exactly one charged vertex
/// per edge.
fn brute_force_state_count(h: &Hypergraph) -> usize {
    let n = h.n() as usize;
    let masks: Vec<u32> = h
        .edges()
        .iter()
        .map(|e| e.members().iter().map(|&v| 1u32 << (v - 1)).sum())
        .collect();
    (0u32..1 << n).filter(|bits| masks.iter().all(|m| (bits & m).count_ones() == 1)).count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn enumeration_is_exact_ordered_and_satisfying(h in arb_graph()) {
        let s = enumerate_two_valued_states(&h);
        prop_assert_eq!(s.len(), brute_force_state_count(&h));
        for st in s.states() {
            prop_assert!(st.satisfies(&h));
        }
        for w in s.states().windows(2) {
            prop_assert!(w[0] > w[1], "canonical order is descending");
        }
    }

    #[test]
    fn partition_sets_recover_every_edge(h in arb_graph()) {
        let s = enumerate_two_valued_states(&h);
        prop_assume!(!s.is_empty());
        let p = partition_representation(&s).unwrap();
        for e in h.edges() {
            prop_assert!(p.edge_partition_holds(e));
        }
        // Inversion can only add triples that happen to partition the index
        // set; it never loses an edge.
        let recovered = edges_from_partition(&p);
        for e in h.edges() {
            prop_assert!(recovered.contains(e));
        }
    }

    #[test]
    fn certified_pairs_verify_and_equalize_state_sums(h in arb_graph()) {
        let s = enumerate_two_valued_states(&h);
        for (a, b) in find_pseudocontext_pairs(&h, 2) {
            let cert = verify_pseudocontext_pair(&h, &a, &b).unwrap();
            let cert = cert.expect("reported pairs carry a certificate");
            prop_assert!(cert.verify(&h));
            let lambda_sum: pseudoctx_core::pseudo::Rational =
                cert.lambda().iter().map(|(_, l)| l.clone()).sum();
            prop_assert_eq!(lambda_sum, pseudoctx_core::pseudo::Rational::default());
            for st in s.states() {
                prop_assert_eq!(st.sum_over(&a), st.sum_over(&b));
            }
        }
    }

    #[test]
    fn coverings_cover_exactly_once(h in arb_graph(), pick in any::<prop::sample::Index>()) {
        // Excluding one edge's members, or nothing.
        let excluded: Vec<VertexId> = if h.edges().len() > 1 {
            h.edges()[pick.index(h.edges().len())].members().to_vec()
        } else {
            Vec::new()
        };
        for covering in find_coverings(&h, &excluded).unwrap() {
            let mut hit = vec![0u32; h.n() as usize];
            for e in covering.edges() {
                for &v in &e.members() {
                    hit[(v - 1) as usize] += 1;
                }
            }
            for v in 1..=h.n() {
                let want = u32::from(!excluded.contains(&v));
                prop_assert_eq!(hit[(v - 1) as usize], want, "vertex {}", v);
            }
        }
    }
}
