//! Two-valued states, separation, partition-logic representations, and
//! edge-rainbow colorings.
//!
//! A two-valued state assigns 0/1 to every vertex with exactly one 1 per
//! edge. The canonical ordering of a state set is lexicographic on the bit
//! string with vertex 1 most significant and `1 > 0`, so a single edge
//! enumerates as 100, 010, 001 at positions 1, 2, 3.

use crate::hypergraph::{Hyperedge, Hypergraph, VertexId};
use std::fmt;
use thiserror::Error;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoValuedState {
    bits: Vec<bool>, // index v-1
}

impl TwoValuedState {
    pub fn from_bits(bits: Vec<bool>) -> Self {
        TwoValuedState { bits }
    }

    pub fn n(&self) -> VertexId {
        self.bits.len() as VertexId
    }

    pub fn value(&self, v: VertexId) -> bool {
        self.bits[(v - 1) as usize]
    }

    /// Number of 1s on the given vertex set.
    pub fn sum_over(&self, set: &[VertexId]) -> u32 {
        set.iter().filter(|&&v| self.value(v)).count() as u32
    }

    /// True iff every edge of `h` carries exactly one 1.
    pub fn satisfies(&self, h: &Hypergraph) -> bool {
        h.edges().iter().all(|e| {
            let [a, b, c] = e.members();
            (self.value(a) as u32 + self.value(b) as u32 + self.value(c) as u32) == 1
        })
    }
}

impl fmt::Display for TwoValuedState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

// Debug defers to Display so assertion output stays a readable bit string.
impl fmt::Debug for TwoValuedState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All two-valued states of a hypergraph in canonical (descending
/// lexicographic) order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StateSet {
    n: VertexId,
    states: Vec<TwoValuedState>,
}

impl StateSet {
    pub fn n(&self) -> VertexId {
        self.n
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn states(&self) -> &[TwoValuedState] {
        &self.states
    }

    /// 1-based canonical position, if present.
    pub fn position_of(&self, s: &TwoValuedState) -> Option<usize> {
        self.states
            .binary_search_by(|probe| s.cmp(probe)) // descending order
            .ok()
            .map(|i| i + 1)
    }

    /// One n-character 0/1 string per line, canonical order.
    pub fn to_lines(&self) -> String {
        let mut out = String::with_capacity((self.n as usize + 1) * self.states.len());
        for s in &self.states {
            out.push_str(&s.to_string());
            out.push('\n');
        }
        out
    }
}

/// Exhaustive depth-first enumeration over vertices 1..=n, trying value 1
/// before 0, with per-edge counters pruning as soon as an edge holds two 1s
/// or completes with none. Trying 1 first emits canonical order directly.
pub fn enumerate_two_valued_states(h: &Hypergraph) -> StateSet {
    let n = h.n() as usize;
    let edges = h.edges();
    // edges_at[v-1] = indices of edges containing v
    let mut edges_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, e) in edges.iter().enumerate() {
        for &v in &e.members() {
            edges_at[(v - 1) as usize].push(i);
        }
    }

    struct Dfs<'a> {
        edges_at: &'a [Vec<usize>],
        ones: Vec<u8>,
        assigned: Vec<u8>,
        bits: Vec<bool>,
        out: Vec<TwoValuedState>,
    }

    impl Dfs<'_> {
        fn go(&mut self, v: usize) {
            if v == self.bits.len() {
                self.out.push(TwoValuedState::from_bits(self.bits.clone()));
                return;
            }
            'branch: for value in [true, false] {
                for &ei in &self.edges_at[v] {
                    let ones = self.ones[ei] + value as u8;
                    if ones > 1 || (self.assigned[ei] == 2 && ones == 0) {
                        continue 'branch;
                    }
                }
                for &ei in &self.edges_at[v] {
                    self.ones[ei] += value as u8;
                    self.assigned[ei] += 1;
                }
                self.bits[v] = value;
                self.go(v + 1);
                for &ei in &self.edges_at[v] {
                    self.ones[ei] -= value as u8;
                    self.assigned[ei] -= 1;
                }
            }
        }
    }

    let mut dfs = Dfs {
        edges_at: &edges_at,
        ones: vec![0; edges.len()],
        assigned: vec![0; edges.len()],
        bits: vec![false; n],
        out: Vec::new(),
    };
    dfs.go(0);

    debug_assert!(dfs.out.windows(2).all(|w| w[0] > w[1]), "canonical order is descending");
    StateSet { n: h.n(), states: dfs.out }
}

/// Verdict of the Kochen–Specker separation test.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Separation {
    Separating,
    /// No state assigns these two vertices different values.
    Unseparated(VertexId, VertexId),
}

impl Separation {
    pub fn is_separating(&self) -> bool {
        matches!(self, Separation::Separating)
    }
}

/// True iff every pair of distinct vertices is told apart by some state.
pub fn is_separating(s: &StateSet, h: &Hypergraph) -> Separation {
    debug_assert_eq!(s.n(), h.n());
    let n = s.n() as usize;
    // Column of each vertex across all states, packed into words.
    let words = s.len().div_ceil(64);
    let mut cols = vec![vec![0u64; words]; n];
    for (i, st) in s.states().iter().enumerate() {
        for (col, &bit) in cols.iter_mut().zip(&st.bits) {
            if bit {
                col[i / 64] |= 1 << (i % 64);
            }
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            if cols[u] == cols[v] {
                return Separation::Unseparated((u + 1) as VertexId, (v + 1) as VertexId);
            }
        }
    }
    Separation::Separating
}

/// Per-vertex sets of 1-based state positions where the vertex takes value 1.
/// For every edge of the underlying graph the three member sets partition the
/// full index range.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartitionRepresentation {
    n_states: usize,
    sets: Vec<Vec<u32>>, // sets[v-1], ascending positions
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("state set is empty; the representation is undefined")]
    EmptyStateSet,
    #[error("vertex {vertex}: state index {index} outside 1..={n_states}")]
    IndexOutOfRange { vertex: VertexId, index: u32, n_states: usize },
    #[error("vertex {vertex}: state indices must be strictly ascending")]
    NotAscending { vertex: VertexId },
}

impl PartitionRepresentation {
    pub fn new(n_states: usize, sets: Vec<Vec<u32>>) -> Result<Self, PartitionError> {
        if n_states == 0 {
            return Err(PartitionError::EmptyStateSet);
        }
        for (i, set) in sets.iter().enumerate() {
            let vertex = (i + 1) as VertexId;
            for w in set.windows(2) {
                if w[0] >= w[1] {
                    return Err(PartitionError::NotAscending { vertex });
                }
            }
            for &idx in set {
                if idx == 0 || idx as usize > n_states {
                    return Err(PartitionError::IndexOutOfRange { vertex, index: idx, n_states });
                }
            }
        }
        Ok(PartitionRepresentation { n_states, sets })
    }

    pub fn n_vertices(&self) -> VertexId {
        self.sets.len() as VertexId
    }

    pub fn n_states(&self) -> usize {
        self.n_states
    }

    pub fn set(&self, v: VertexId) -> &[u32] {
        &self.sets[(v - 1) as usize]
    }

    /// True iff the three member sets are pairwise disjoint and cover the
    /// whole index range.
    pub fn edge_partition_holds(&self, e: &Hyperedge) -> bool {
        let [a, b, c] = e.members();
        if [a, b, c].iter().any(|&v| v == 0 || v > self.n_vertices()) {
            return false;
        }
        let (ma, mb, mc) = (self.mask(a), self.mask(b), self.mask(c));
        let words = self.n_states.div_ceil(64);
        let mut union_ok = true;
        let mut disjoint = true;
        for w in 0..words {
            let full = if (w + 1) * 64 <= self.n_states {
                u64::MAX
            } else {
                (1u64 << (self.n_states % 64)) - 1
            };
            disjoint &= ma[w] & mb[w] == 0 && ma[w] & mc[w] == 0 && mb[w] & mc[w] == 0;
            union_ok &= ma[w] | mb[w] | mc[w] == full;
        }
        disjoint && union_ok
    }

    fn mask(&self, v: VertexId) -> Vec<u64> {
        let mut m = vec![0u64; self.n_states.div_ceil(64)];
        for &idx in self.set(v) {
            let i = (idx - 1) as usize;
            m[i / 64] |= 1 << (i % 64);
        }
        m
    }
}

/// Reverse indexing of a state set: b_v = canonical positions of the states
/// assigning 1 to vertex v.
pub fn partition_representation(s: &StateSet) -> Result<PartitionRepresentation, PartitionError> {
    if s.is_empty() {
        return Err(PartitionError::EmptyStateSet);
    }
    let mut sets = vec![Vec::new(); s.n() as usize];
    for (i, st) in s.states().iter().enumerate() {
        for (set, &bit) in sets.iter_mut().zip(&st.bits) {
            if bit {
                set.push((i + 1) as u32);
            }
        }
    }
    PartitionRepresentation::new(s.len(), sets)
}

/// Invert the representation: every vertex triple whose index sets partition
/// the full range is an edge. This is the edge-reconstruction oracle for
/// partition-format fixture data.
pub fn edges_from_partition(p: &PartitionRepresentation) -> Vec<Hyperedge> {
    let n = p.n_vertices();
    let words = p.n_states().div_ceil(64);
    let masks: Vec<Vec<u64>> = (1..=n).map(|v| p.mask(v)).collect();
    let full: Vec<u64> = (0..words)
        .map(|w| {
            if (w + 1) * 64 <= p.n_states() {
                u64::MAX
            } else {
                (1u64 << (p.n_states() % 64)) - 1
            }
        })
        .collect();
    let popcount = |m: &[u64]| -> usize { m.iter().map(|w| w.count_ones() as usize).sum() };
    let sizes: Vec<usize> = masks.iter().map(|m| popcount(m)).collect();

    let mut edges = Vec::new();
    for a in 0..n as usize {
        for b in a + 1..n as usize {
            if sizes[a] + sizes[b] > p.n_states()
                || (0..words).any(|w| masks[a][w] & masks[b][w] != 0)
            {
                continue;
            }
            for c in b + 1..n as usize {
                if sizes[a] + sizes[b] + sizes[c] != p.n_states() {
                    continue;
                }
                let disjoint_and_full = (0..words).all(|w| {
                    masks[a][w] & masks[c][w] == 0
                        && masks[b][w] & masks[c][w] == 0
                        && masks[a][w] | masks[b][w] | masks[c][w] == full[w]
                });
                if disjoint_and_full {
                    edges.push(
                        Hyperedge::new((a + 1) as VertexId, (b + 1) as VertexId, (c + 1) as VertexId)
                            .expect("distinct by construction"),
                    );
                }
            }
        }
    }
    edges
}

/// Vertex colors in {1,2,3}; rainbow means every edge carries all three.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coloring {
    colors: Vec<u8>, // index v-1
}

impl Coloring {
    pub fn color(&self, v: VertexId) -> u8 {
        self.colors[(v - 1) as usize]
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn is_rainbow_on(&self, triple: &[VertexId; 3]) -> bool {
        let cs = [self.color(triple[0]), self.color(triple[1]), self.color(triple[2])];
        cs[0] != cs[1] && cs[0] != cs[2] && cs[1] != cs[2]
    }

    pub fn is_rainbow(&self, h: &Hypergraph) -> bool {
        h.edges().iter().all(|e| self.is_rainbow_on(&e.members()))
    }
}

/// First rainbow coloring in deterministic order: vertices are colored in
/// ascending id, colors tried in ascending order.
pub fn find_rainbow_coloring(h: &Hypergraph) -> Option<Coloring> {
    find_rainbow_coloring_with(h, &[])
}

/// Like [`find_rainbow_coloring`] but requiring the rainbow condition on the
/// extra vertex triples as well (e.g. pseudocontexts, which are not edges).
pub fn find_rainbow_coloring_with(
    h: &Hypergraph,
    extra_triples: &[[VertexId; 3]],
) -> Option<Coloring> {
    let n = h.n() as usize;
    let mut triples: Vec<[VertexId; 3]> = h.edges().iter().map(|e| e.members()).collect();
    triples.extend_from_slice(extra_triples);
    let mut at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, t) in triples.iter().enumerate() {
        for &v in t {
            debug_assert!(v >= 1 && v as usize <= n);
            at[(v - 1) as usize].push(i);
        }
    }

    fn go(
        v: usize,
        colors: &mut Vec<u8>,
        at: &[Vec<usize>],
        triples: &[[VertexId; 3]],
    ) -> bool {
        if v == colors.len() {
            return true;
        }
        'next: for c in 1..=3u8 {
            for &ti in &at[v] {
                for &m in &triples[ti] {
                    let m = (m - 1) as usize;
                    if m != v && colors[m] == c {
                        continue 'next;
                    }
                }
            }
            colors[v] = c;
            if go(v + 1, colors, at, triples) {
                return true;
            }
            colors[v] = 0;
        }
        false
    }

    let mut colors = vec![0u8; n];
    if go(0, &mut colors, &at, &triples) {
        Some(Coloring { colors })
    } else {
        None
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("coloring is not rainbow on edge {0}")]
    NotRainbow(Hyperedge),
    #[error("chosen color must be 1, 2, or 3, got {0}")]
    BadColor(u8),
    #[error("coloring covers {got} vertices, the graph has {expected}")]
    WrongLength { expected: VertexId, got: usize },
}

/// Read a two-valued state off a rainbow coloring: value 1 where the vertex
/// carries `chosen_color`. Rainbow guarantees one 1 per edge.
pub fn state_from_coloring(
    c: &Coloring,
    chosen_color: u8,
    h: &Hypergraph,
) -> Result<TwoValuedState, ColoringError> {
    if !(1..=3).contains(&chosen_color) {
        return Err(ColoringError::BadColor(chosen_color));
    }
    if c.colors.len() != h.n() as usize {
        return Err(ColoringError::WrongLength { expected: h.n(), got: c.colors.len() });
    }
    for e in h.edges() {
        if !c.is_rainbow_on(&e.members()) {
            return Err(ColoringError::NotRainbow(*e));
        }
    }
    let bits = c.colors.iter().map(|&col| col == chosen_color).collect();
    let state = TwoValuedState::from_bits(bits);
    debug_assert!(state.satisfies(h));
    Ok(state)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::parse_hypergraph;

    fn single_edge() -> Hypergraph {
        parse_hypergraph("1 2 3\n").unwrap()
    }

    #[test]
    fn single_edge_states_in_canonical_order() {
        let s = enumerate_two_valued_states(&single_edge());
        let strings: Vec<String> = s.states().iter().map(|st| st.to_string()).collect();
        assert_eq!(strings, vec!["100", "010", "001"]);
        assert_eq!(s.position_of(&s.states()[2].clone()), Some(3));
    }

    #[test]
    fn chain_states_satisfy_every_edge() {
        let h = parse_hypergraph("1 2 3\n3 4 5\n").unwrap();
        let s = enumerate_two_valued_states(&h);
        assert!(!s.is_empty());
        assert!(s.states().iter().all(|st| st.satisfies(&h)));
        // 3 choices on the first edge; when vertex 3 is the 1, the second
        // edge is already satisfied and 4,5 are forced 0.
        assert_eq!(s.len(), 2 * 2 + 1);
    }

    #[test]
    fn single_edge_is_separating() {
        let h = single_edge();
        let s = enumerate_two_valued_states(&h);
        assert!(is_separating(&s, &h).is_separating());
    }

    #[test]
    fn unseparated_pair_is_witnessed() {
        // In a one-edge graph with a dangling second edge sharing no vertex,
        // two vertices of the same edge are separated, but two vertices that
        // never co-occur and always take equal values are not. Build the
        // 5-vertex chain and check a known-separating case instead, then a
        // truncated state set that merges two columns.
        let h = parse_hypergraph("1 2 3\n3 4 5\n").unwrap();
        let s = enumerate_two_valued_states(&h);
        assert!(is_separating(&s, &h).is_separating());
        let truncated = StateSet { n: s.n(), states: s.states()[..1].to_vec() };
        // With one state only, some pair of equal-valued vertices exists.
        assert!(!is_separating(&truncated, &h).is_separating());
    }

    #[test]
    fn partition_of_single_edge() {
        let s = enumerate_two_valued_states(&single_edge());
        let p = partition_representation(&s).unwrap();
        assert_eq!(p.set(1), &[1]);
        assert_eq!(p.set(2), &[2]);
        assert_eq!(p.set(3), &[3]);
        assert!(p.edge_partition_holds(&Hyperedge::new(1, 2, 3).unwrap()));
    }

    #[test]
    fn edges_from_partition_inverts_single_edge() {
        let p = PartitionRepresentation::new(3, vec![vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!(edges_from_partition(&p), vec![Hyperedge::new(1, 2, 3).unwrap()]);
    }

    #[test]
    fn partition_rejects_bad_indices() {
        assert!(matches!(
            PartitionRepresentation::new(3, vec![vec![4]]),
            Err(PartitionError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            PartitionRepresentation::new(3, vec![vec![2, 2]]),
            Err(PartitionError::NotAscending { .. })
        ));
    }

    #[test]
    fn rainbow_coloring_of_single_edge_takes_first_assignment() {
        let h = single_edge();
        let c = find_rainbow_coloring(&h).unwrap();
        assert_eq!(c.colors(), &[1, 2, 3]);
    }

    #[test]
    fn coloring_respects_extra_triples() {
        // Chain 1-2-3 / 3-4-5: the plain canonical coloring gives vertex 4
        // color 1; the extra triple {1,3,4} additionally forces 4 away from
        // vertex 1's color.
        let h = parse_hypergraph("1 2 3\n3 4 5\n").unwrap();
        let plain = find_rainbow_coloring(&h).unwrap();
        assert_eq!(plain.color(4), 1);
        let c = find_rainbow_coloring_with(&h, &[[1, 3, 4]]).unwrap();
        assert!(c.is_rainbow(&h));
        assert!(c.is_rainbow_on(&[1, 3, 4]));
        assert_eq!(c.color(4), 2);
    }

    #[test]
    fn contradictory_extra_triples_yield_none() {
        // {1,2,4} forces vertex 4 to share vertex 3's color, which the edge
        // {3,4,5} forbids.
        let h = parse_hypergraph("1 2 3\n3 4 5\n").unwrap();
        assert_eq!(find_rainbow_coloring_with(&h, &[[1, 2, 4]]), None);
    }

    #[test]
    fn state_from_coloring_single_edge() {
        let h = single_edge();
        let c = find_rainbow_coloring(&h).unwrap();
        let s = state_from_coloring(&c, 1, &h).unwrap();
        assert_eq!(s.to_string(), "100");
        let s3 = state_from_coloring(&c, 3, &h).unwrap();
        assert_eq!(s3.to_string(), "001");
        assert!(state_from_coloring(&c, 4, &h).is_err());
    }

    #[test]
    fn three_chosen_colors_give_three_distinct_states() {
        let h = parse_hypergraph("1 2 3\n3 4 5\n").unwrap();
        let c = find_rainbow_coloring(&h).unwrap();
        let all = enumerate_two_valued_states(&h);
        let mut derived: Vec<TwoValuedState> = (1..=3)
            .map(|col| state_from_coloring(&c, col, &h).unwrap())
            .collect();
        derived.dedup();
        assert_eq!(derived.len(), 3);
        for st in &derived {
            assert!(all.position_of(st).is_some());
        }
    }
}
