//! Embedded reference objects: the two study graphs (8 edges on 15 vertices,
//! 22 edges on 36 vertices), their partition-logic representations, the
//! published vector labelings, and the certified pseudocontext pairs.
//!
//! The same graph is stored three independent ways — canonical edge list,
//! partition index sets, unit vectors — and [`cross_check`] requires the
//! three reconstructions to agree before any fixture-driven command runs.

use crate::fixture_data;
use crate::geometry::{
    self, infer_hypergraph_from_labels, VectorLabeling, ORTH_EPS_DEFAULT,
};
use crate::hypergraph::{Hypergraph, VertexId};
use crate::states::{edges_from_partition, PartitionError, PartitionRepresentation};
use std::sync::OnceLock;

/// The statewise-equal triple pair of the small graph.
pub const SMALL_PSEUDO_PAIR: ([VertexId; 3], [VertexId; 3]) = ([1, 6, 11], [5, 10, 15]);

/// The statewise-equal triple pair of the combo graph.
pub const COMBO_PSEUDO_PAIR: ([VertexId; 3], [VertexId; 3]) = ([4, 16, 28], [10, 22, 34]);

fn build_partition(
    n_states: usize,
    sets: &[&[u16]],
) -> Result<PartitionRepresentation, PartitionError> {
    let sets = sets
        .iter()
        .map(|s| s.iter().map(|&i| i as u32).collect())
        .collect();
    PartitionRepresentation::new(n_states, sets)
}

pub fn small_partition() -> &'static PartitionRepresentation {
    static P: OnceLock<PartitionRepresentation> = OnceLock::new();
    P.get_or_init(|| {
        build_partition(24, &fixture_data::SMALL_PARTITION_SETS).expect("embedded data is valid")
    })
}

pub fn combo_partition() -> &'static PartitionRepresentation {
    static P: OnceLock<PartitionRepresentation> = OnceLock::new();
    P.get_or_init(|| {
        build_partition(225, &fixture_data::COMBO_PARTITION_SETS).expect("embedded data is valid")
    })
}

pub fn small_graph() -> &'static Hypergraph {
    static G: OnceLock<Hypergraph> = OnceLock::new();
    G.get_or_init(|| geometry::graph_from_triples(15, &geometry::SMALL_EDGES))
}

pub fn combo_graph() -> &'static Hypergraph {
    static G: OnceLock<Hypergraph> = OnceLock::new();
    G.get_or_init(|| geometry::graph_from_triples(36, &geometry::COMBO_EDGES))
}

/// The published 15-vector representation of the small graph (found by a
/// search heuristic, not by the cone construction).
pub fn small_for_heuristic() -> &'static VectorLabeling {
    static L: OnceLock<VectorLabeling> = OnceLock::new();
    L.get_or_init(|| {
        VectorLabeling::new(fixture_data::heuristic_small_vectors())
            .expect("embedded vectors are unit")
    })
}

/// The published 36-vector combo representation at cone angle π/3.
pub fn combo_for_alpha_pi3() -> &'static VectorLabeling {
    static L: OnceLock<VectorLabeling> = OnceLock::new();
    L.get_or_init(|| {
        VectorLabeling::new(fixture_data::combo_vectors_alpha_pi3())
            .expect("embedded vectors are unit")
    })
}

/// The published 36-vector combo representation at cone angle π/2.
pub fn combo_for_alpha_pi2() -> &'static VectorLabeling {
    static L: OnceLock<VectorLabeling> = OnceLock::new();
    L.get_or_init(|| {
        VectorLabeling::new(fixture_data::combo_vectors_alpha_pi2())
            .expect("embedded vectors are unit")
    })
}

/// Integrity check across the three encodings of each fixture graph. Every
/// mismatch is reported as text instead of panicking, so callers can refuse
/// to run on corrupted data.
pub fn cross_check() -> Result<(), String> {
    let sp = build_partition(24, &fixture_data::SMALL_PARTITION_SETS)
        .map_err(|e| format!("small partition: {e}"))?;
    if edges_from_partition(&sp) != small_graph().edges() {
        return Err("small partition does not invert to the small edge list".to_string());
    }
    let cp = build_partition(225, &fixture_data::COMBO_PARTITION_SETS)
        .map_err(|e| format!("combo partition: {e}"))?;
    if edges_from_partition(&cp) != combo_graph().edges() {
        return Err("combo partition does not invert to the combo edge list".to_string());
    }

    type LabelingCheck = (&'static str, fn() -> Vec<[f64; 3]>, &'static Hypergraph);
    let labelings: [LabelingCheck; 3] = [
        ("heuristic small labeling", fixture_data::heuristic_small_vectors, small_graph()),
        ("combo labeling (pi/3)", fixture_data::combo_vectors_alpha_pi3, combo_graph()),
        ("combo labeling (pi/2)", fixture_data::combo_vectors_alpha_pi2, combo_graph()),
    ];
    for (name, vectors, graph) in labelings {
        let l = VectorLabeling::new(vectors()).map_err(|e| format!("{name}: {e}"))?;
        let inferred =
            infer_hypergraph_from_labels(&l, ORTH_EPS_DEFAULT).map_err(|e| format!("{name}: {e}"))?;
        if inferred.edges() != graph.edges() {
            return Err(format!("{name} represents a different graph"));
        }
    }
    Ok(())
}
