//! Pseudocontext detection and certification, edge coverings, classical
//! bounds, and gadget classification. All linear algebra in this module is
//! exact rational arithmetic: a certificate is a proof, not an approximation.
//!
//! A pair of disjoint vertex sets (A, B), neither contained in an edge, is a
//! certified pseudocontext pair when the difference of indicator vectors
//! lies in the zero-offset edge span: chi_A - chi_B = sum lambda_e * chi_e
//! with sum lambda_e = 0. Every probability assignment with unit sum on each
//! edge then gives A and B equal total probability.

use crate::hypergraph::{Hyperedge, Hypergraph, VertexId};
use crate::states::StateSet;
use num::{BigInt, BigRational, One, ToPrimitive, Zero};
use serde_json::json;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

pub type Rational = BigRational;

/// Which of the two candidate sets a precondition violation concerns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetLabel {
    A,
    B,
}

impl fmt::Display for SetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SetLabel::A => "A",
            SetLabel::B => "B",
        })
    }
}

/// Precondition violations, deliberately distinct from the negative verdict
/// "no certificate exists".
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PairError {
    #[error("sets are not disjoint: both contain {0}")]
    NotDisjoint(VertexId),
    #[error("set {label} is contained in edge {edge}; a pseudocontext must not lie in any edge")]
    InsideEdge { label: SetLabel, edge: Hyperedge },
    #[error("set {label} is empty")]
    EmptySet { label: SetLabel },
    #[error("set {label} repeats vertex {vertex}")]
    RepeatedVertex { label: SetLabel, vertex: VertexId },
    #[error("set {label} references vertex {vertex} outside 1..={n}")]
    OutOfRange { label: SetLabel, vertex: VertexId, n: VertexId },
}

/// Exact witness that A and B carry equal probability under every assignment
/// with unit sum per edge. Holds one coefficient per edge of the graph, in
/// canonical edge order (zeros included).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudocontextCertificate {
    a: Vec<VertexId>,
    b: Vec<VertexId>,
    lambda: Vec<(Hyperedge, Rational)>,
}

impl PseudocontextCertificate {
    pub fn a(&self) -> &[VertexId] {
        &self.a
    }

    pub fn b(&self) -> &[VertexId] {
        &self.b
    }

    /// Coefficients in canonical edge order, zeros included.
    pub fn lambda(&self) -> &[(Hyperedge, Rational)] {
        &self.lambda
    }

    /// Exact recomputation of the defining identity.
    pub fn verify(&self, h: &Hypergraph) -> bool {
        let n = h.n() as usize;
        let mut acc = vec![Rational::zero(); n + 1];
        for (e, l) in &self.lambda {
            if !h.has_edge(e) {
                return false;
            }
            for &v in &e.members() {
                acc[(v - 1) as usize] = &acc[(v - 1) as usize] + l;
            }
            acc[n] = &acc[n] + l; // coefficient-sum column
        }
        let target = pair_vector(n, &self.a, &self.b);
        acc == target
    }

    /// `{"A":[...],"B":[...],"lambda":[{"edge":[u,v,w],"num":...,"den":...}]}`
    pub fn to_json_string(&self) -> String {
        let lambda: Vec<serde_json::Value> = self
            .lambda
            .iter()
            .map(|(e, l)| {
                json!({
                    "edge": e.members(),
                    "num": bigint_json(l.numer()),
                    "den": bigint_json(l.denom()),
                })
            })
            .collect();
        json!({ "A": self.a, "B": self.b, "lambda": lambda }).to_string()
    }
}

fn bigint_json(v: &BigInt) -> serde_json::Value {
    match v.to_i64() {
        Some(i) => json!(i),
        None => json!(v.to_string()),
    }
}

// ---------------------------------------------------------------------------
// Exact linear algebra over the edge-incidence matrix.
//
// Vectors have n+1 coordinates: one per vertex plus a trailing coefficient-sum
// coordinate. An edge contributes (chi_e | 1); a vertex subset enters as
// (chi_S | 0), so membership of (chi_A - chi_B | 0) in the row span encodes
// both the indicator identity and sum lambda_e = 0 at once.
// ---------------------------------------------------------------------------

struct RowBasis {
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

fn row_reduce(mut rows: Vec<Vec<Rational>>) -> RowBasis {
    let mut pivots = Vec::new();
    if rows.is_empty() {
        return RowBasis { rows, pivots };
    }
    let ncols = rows[0].len();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c].clone().recip();
        for x in &mut rows[r] {
            *x = &*x * &inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row[c..].iter_mut().zip(&pivot[c..]) {
                    let t = p * &f;
                    *x = &*x - &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    RowBasis { rows, pivots }
}

fn residue(basis: &RowBasis, mut x: Vec<Rational>) -> Vec<Rational> {
    for (row, &p) in basis.rows.iter().zip(&basis.pivots) {
        if !x[p].is_zero() {
            let f = x[p].clone();
            for j in p..x.len() {
                if !row[j].is_zero() {
                    let t = &row[j] * &f;
                    x[j] = &x[j] - &t;
                }
            }
        }
    }
    x
}

fn edge_rows(h: &Hypergraph) -> Vec<Vec<Rational>> {
    let n = h.n() as usize;
    h.edges()
        .iter()
        .map(|e| {
            let mut row = vec![Rational::zero(); n + 1];
            for &v in &e.members() {
                row[(v - 1) as usize] = Rational::one();
            }
            row[n] = Rational::one();
            row
        })
        .collect()
}

fn pair_vector(n: usize, a: &[VertexId], b: &[VertexId]) -> Vec<Rational> {
    let mut x = vec![Rational::zero(); n + 1];
    for &v in a {
        x[(v - 1) as usize] = Rational::one();
    }
    for &v in b {
        x[(v - 1) as usize] = &x[(v - 1) as usize] - &Rational::one();
    }
    x
}

fn check_set(h: &Hypergraph, label: SetLabel, set: &[VertexId]) -> Result<Vec<VertexId>, PairError> {
    if set.is_empty() {
        return Err(PairError::EmptySet { label });
    }
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(PairError::RepeatedVertex { label, vertex: w[0] });
        }
    }
    for &v in &sorted {
        if v == 0 || v > h.n() {
            return Err(PairError::OutOfRange { label, vertex: v, n: h.n() });
        }
    }
    if let Some(e) = h.edges().iter().find(|e| sorted.iter().all(|v| e.contains(*v))) {
        return Err(PairError::InsideEdge { label, edge: *e });
    }
    Ok(sorted)
}

/// Solve chi_A - chi_B = sum lambda_e chi_e with sum lambda_e = 0 by exact
/// Gaussian elimination. `Ok(None)` means the system is infeasible — the pair
/// is not a pseudocontext pair; precondition violations are errors instead.
pub fn verify_pseudocontext_pair(
    h: &Hypergraph,
    a: &[VertexId],
    b: &[VertexId],
) -> Result<Option<PseudocontextCertificate>, PairError> {
    let a = check_set(h, SetLabel::A, a)?;
    let b = check_set(h, SetLabel::B, b)?;
    if let Some(v) = a.iter().find(|v| b.binary_search(v).is_ok()) {
        return Err(PairError::NotDisjoint(*v));
    }

    let n = h.n() as usize;
    let m = h.edges().len();
    let target = pair_vector(n, &a, &b);

    // Transposed system: unknowns are the lambda_e, one equation per
    // coordinate, augmented with the right-hand side in the last column.
    let mut rows: Vec<Vec<Rational>> = (0..n + 1)
        .map(|i| {
            let mut row = vec![Rational::zero(); m + 1];
            for (j, e) in h.edges().iter().enumerate() {
                let hit = if i < n { e.contains((i + 1) as VertexId) } else { true };
                if hit {
                    row[j] = Rational::one();
                }
            }
            row[m] = target[i].clone();
            row
        })
        .collect();

    let basis = row_reduce(std::mem::take(&mut rows));
    if basis.pivots.contains(&m) {
        return Ok(None); // pivot in the RHS column: inconsistent
    }
    // Free variables at zero, so each pivot variable reads off the RHS.
    let mut lambda_by_col = vec![Rational::zero(); m];
    for (row, &p) in basis.rows.iter().zip(&basis.pivots) {
        lambda_by_col[p] = row[m].clone();
    }
    let lambda: Vec<(Hyperedge, Rational)> =
        h.edges().iter().copied().zip(lambda_by_col).collect();

    let cert = PseudocontextCertificate { a, b, lambda };
    assert!(cert.verify(h), "solver produced an invalid certificate");
    Ok(Some(cert))
}

/// All unordered pairs of disjoint k-subsets, neither inside an edge, whose
/// indicator difference lies in the zero-offset edge span. Each vertex
/// indicator is reduced once against the row-reduced edge matrix; a subset's
/// residue is the sum of its members' residues, so certified pairs are
/// exactly the equal-residue pairs.
pub fn find_pseudocontext_pairs(
    h: &Hypergraph,
    k: usize,
) -> Vec<(Vec<VertexId>, Vec<VertexId>)> {
    assert!(k >= 2, "pseudocontext size is at least 2");
    let n = h.n() as usize;
    if n == 0 || k > n {
        return Vec::new();
    }
    let basis = row_reduce(edge_rows(h));

    let vertex_residues: Vec<Vec<Rational>> = (0..n)
        .map(|v| {
            let mut x = vec![Rational::zero(); n + 1];
            x[v] = Rational::one();
            residue(&basis, x)
        })
        .collect();

    // Group k-subsets by residue signature.
    let mut groups: BTreeMap<Vec<Rational>, Vec<Vec<VertexId>>> = BTreeMap::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let subset: Vec<VertexId> = idx.iter().map(|&i| (i + 1) as VertexId).collect();
        let inside_edge = h.edges().iter().any(|e| subset.iter().all(|v| e.contains(*v)));
        if !inside_edge {
            let mut sig = vec![Rational::zero(); n + 1];
            for &i in &idx {
                for (j, r) in vertex_residues[i].iter().enumerate() {
                    if !r.is_zero() {
                        sig[j] = &sig[j] + r;
                    }
                }
            }
            groups.entry(sig).or_default().push(subset);
        }
        // next k-combination in lexicographic order
        let mut pos = k;
        while pos > 0 && idx[pos - 1] == n - k + pos - 1 {
            pos -= 1;
        }
        if pos == 0 {
            break;
        }
        idx[pos - 1] += 1;
        for i in pos..k {
            idx[i] = idx[i - 1] + 1;
        }
    }

    let mut pairs = Vec::new();
    for members in groups.values() {
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                let disjoint = members[i].iter().all(|v| !members[j].contains(v));
                if disjoint {
                    pairs.push((members[i].clone(), members[j].clone()));
                }
            }
        }
    }
    pairs.sort();
    pairs
}

/// A set of edges covering every vertex outside `excluded` exactly once and
/// touching no vertex of `excluded`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Covering {
    edges: Vec<Hyperedge>,
    excluded: Vec<VertexId>,
}

impl Covering {
    pub fn edges(&self) -> &[Hyperedge] {
        &self.edges
    }

    pub fn excluded(&self) -> &[VertexId] {
        &self.excluded
    }

    /// JSON list of edges: `[[u,v,w], ...]`.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.edges).expect("edges serialize")
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubsetError {
    #[error("vertex {vertex} outside 1..={n}")]
    OutOfRange { vertex: VertexId, n: VertexId },
    #[error("vertex {0} repeated")]
    Repeated(VertexId),
}

pub(crate) fn check_subset(n: VertexId, set: &[VertexId]) -> Result<Vec<VertexId>, SubsetError> {
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(SubsetError::Repeated(w[0]));
        }
    }
    for &v in &sorted {
        if v == 0 || v > n {
            return Err(SubsetError::OutOfRange { vertex: v, n });
        }
    }
    Ok(sorted)
}

/// All exact covers of the vertices outside `excluded` by edges avoiding
/// `excluded`, via backtracking that always branches on the uncovered vertex
/// with the fewest remaining candidate edges.
pub fn find_coverings(h: &Hypergraph, excluded: &[VertexId]) -> Result<Vec<Covering>, SubsetError> {
    let excluded = check_subset(h.n(), excluded)?;
    let n = h.n() as usize;
    let is_excluded = |v: VertexId| excluded.binary_search(&v).is_ok();
    let candidates: Vec<Hyperedge> = h
        .edges()
        .iter()
        .copied()
        .filter(|e| e.members().iter().all(|&v| !is_excluded(v)))
        .collect();

    // to_cover[v-1]: true if v must be covered exactly once
    let to_cover: Vec<bool> = (1..=h.n()).map(|v| !is_excluded(v)).collect();

    fn recurse(
        n: usize,
        candidates: &[Hyperedge],
        active: &mut Vec<bool>,
        covered: &mut Vec<bool>,
        to_cover: &[bool],
        chosen: &mut Vec<Hyperedge>,
        out: &mut Vec<Vec<Hyperedge>>,
    ) {
        // Branch vertex: uncovered, fewest active candidates.
        let mut best: Option<(usize, usize)> = None; // (count, vertex index)
        for v in 0..n {
            if !to_cover[v] || covered[v] {
                continue;
            }
            let count = candidates
                .iter()
                .enumerate()
                .filter(|(i, e)| active[*i] && e.contains((v + 1) as VertexId))
                .count();
            if best.is_none_or(|(c, _)| count < c) {
                best = Some((count, v));
                if count == 0 {
                    return; // dead branch
                }
            }
        }
        let Some((_, v)) = best else {
            out.push(chosen.clone()); // everything covered
            return;
        };

        let branch_edges: Vec<usize> = candidates
            .iter()
            .enumerate()
            .filter(|(i, e)| active[*i] && e.contains((v + 1) as VertexId))
            .map(|(i, _)| i)
            .collect();
        for ei in branch_edges {
            let members = candidates[ei].members();
            // Deactivate all edges touching the newly covered vertices.
            let deactivated: Vec<usize> = candidates
                .iter()
                .enumerate()
                .filter(|(i, e)| active[*i] && members.iter().any(|&v| e.contains(v)))
                .map(|(i, _)| i)
                .collect();
            for &i in &deactivated {
                active[i] = false;
            }
            for &m in &members {
                covered[(m - 1) as usize] = true;
            }
            chosen.push(candidates[ei]);

            recurse(n, candidates, active, covered, to_cover, chosen, out);

            chosen.pop();
            for &m in &members {
                covered[(m - 1) as usize] = false;
            }
            for &i in &deactivated {
                active[i] = true;
            }
        }
    }

    let mut out = Vec::new();
    let mut active = vec![true; candidates.len()];
    let mut covered = vec![false; n];
    recurse(
        n,
        &candidates,
        &mut active,
        &mut covered,
        &to_cover,
        &mut Vec::new(),
        &mut out,
    );

    let mut coverings: Vec<Covering> = out
        .into_iter()
        .map(|mut edges| {
            edges.sort_unstable();
            Covering { edges, excluded: excluded.clone() }
        })
        .collect();
    coverings.sort_by(|x, y| x.edges.cmp(&y.edges));
    Ok(coverings)
}

/// Certificate built from two coverings instead of a linear solve: with C_B
/// excluding B and C_A excluding A, chi_A - chi_B = sum_{C_B} chi_e -
/// sum_{C_A} chi_e, so lambda is +1 / -1 / 0. Returns `None` when the two
/// coverings differ in size (the coefficient sum would not vanish).
pub fn certificate_from_coverings(
    h: &Hypergraph,
    cov_excluding_a: &Covering,
    cov_excluding_b: &Covering,
) -> Option<PseudocontextCertificate> {
    if cov_excluding_a.edges.len() != cov_excluding_b.edges.len() {
        return None;
    }
    let lambda: Vec<(Hyperedge, Rational)> = h
        .edges()
        .iter()
        .map(|e| {
            let plus = cov_excluding_b.edges.binary_search(e).is_ok() as i64;
            let minus = cov_excluding_a.edges.binary_search(e).is_ok() as i64;
            (*e, Rational::from_integer(BigInt::from(plus - minus)))
        })
        .collect();
    let cert = PseudocontextCertificate {
        a: cov_excluding_a.excluded.clone(),
        b: cov_excluding_b.excluded.clone(),
        lambda,
    };
    cert.verify(h).then_some(cert)
}

/// Minimum and maximum of sum_{v in A} s(v) over the two-valued states:
/// bounds for the classical polytope, which is their convex hull.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassicalBounds {
    pub lo: u32,
    pub hi: u32,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("state set is empty; bounds are undefined")]
    EmptyStateSet,
    #[error(transparent)]
    BadSubset(#[from] SubsetError),
}

pub fn classical_bounds(s: &StateSet, a: &[VertexId]) -> Result<ClassicalBounds, BoundsError> {
    if s.is_empty() {
        return Err(BoundsError::EmptyStateSet);
    }
    let a = check_subset(s.n(), a)?;
    let mut lo = u32::MAX;
    let mut hi = 0;
    for st in s.states() {
        let sum = st.sum_over(&a);
        lo = lo.min(sum);
        hi = hi.max(sum);
    }
    Ok(ClassicalBounds { lo, hi })
}

/// Gadget behavior of a certified pair over all two-valued states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetReport {
    /// Every state with sum_A = 0 has sum_B = 0.
    pub fif: bool,
    /// Levels m >= 1 that are achieved and force sum_B = m ("true implies
    /// true at level m").
    pub tit_levels: Vec<u32>,
    /// Joint distribution unchanged under swapping A and B.
    pub symmetric: bool,
    /// Largest m with a state achieving sum_A = m and sum_B = m.
    pub max_level: u32,
    /// Number of states per (sum_A, sum_B) value.
    pub joint: BTreeMap<(u32, u32), usize>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GadgetError {
    #[error("state set is empty")]
    EmptyStateSet,
    #[error("sets are not disjoint: both contain {0}")]
    NotDisjoint(VertexId),
    #[error(transparent)]
    BadSubset(#[from] SubsetError),
}

pub fn classify_gadget(
    s: &StateSet,
    a: &[VertexId],
    b: &[VertexId],
) -> Result<GadgetReport, GadgetError> {
    if s.is_empty() {
        return Err(GadgetError::EmptyStateSet);
    }
    let a = check_subset(s.n(), a)?;
    let b = check_subset(s.n(), b)?;
    if let Some(v) = a.iter().find(|v| b.binary_search(v).is_ok()) {
        return Err(GadgetError::NotDisjoint(*v));
    }

    let mut joint: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    for st in s.states() {
        *joint.entry((st.sum_over(&a), st.sum_over(&b))).or_insert(0) += 1;
    }

    let fif = joint.keys().all(|&(sa, sb)| sa != 0 || sb == 0);
    let max_a = joint.keys().map(|&(sa, _)| sa).max().unwrap_or(0);
    let tit_levels: Vec<u32> = (1..=max_a)
        .filter(|&m| {
            let achieved = joint.keys().any(|&(sa, _)| sa == m);
            let forced = joint.keys().all(|&(sa, sb)| sa != m || sb == m);
            achieved && forced
        })
        .collect();
    let symmetric = joint
        .iter()
        .all(|(&(sa, sb), &count)| joint.get(&(sb, sa)) == Some(&count));
    let max_level = joint
        .keys()
        .filter(|&&(sa, sb)| sa == sb)
        .map(|&(sa, _)| sa)
        .max()
        .unwrap_or(0);

    Ok(GadgetReport { fif, tit_levels, symmetric, max_level, joint })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::parse_hypergraph;
    use crate::states::enumerate_two_valued_states;

    fn q(i: i64) -> Rational {
        Rational::from_integer(BigInt::from(i))
    }

    #[test]
    fn row_reduce_identifies_span_membership() {
        // Rows (1,1,0|1) and (0,1,1|1); (1,0,-1|0) is their difference.
        let rows = vec![
            vec![q(1), q(1), q(0), q(1)],
            vec![q(0), q(1), q(1), q(1)],
        ];
        let basis = row_reduce(rows);
        assert_eq!(basis.pivots, vec![0, 1]);
        let inside = residue(&basis, vec![q(1), q(0), q(-1), q(0)]);
        assert!(inside.iter().all(|x| x.is_zero()));
        let outside = residue(&basis, vec![q(1), q(0), q(0), q(0)]);
        assert!(outside.iter().any(|x| !x.is_zero()));
    }

    #[test]
    fn single_edge_has_no_k2_pairs() {
        let h = parse_hypergraph("1 2 3\n").unwrap();
        assert!(find_pseudocontext_pairs(&h, 2).is_empty());
    }

    #[test]
    fn pair_preconditions_are_not_verdicts() {
        let h = parse_hypergraph("1 2 3\n3 4 5\n").unwrap();
        assert_eq!(
            verify_pseudocontext_pair(&h, &[1, 4], &[2, 4]),
            Err(PairError::NotDisjoint(4))
        );
        assert!(matches!(
            verify_pseudocontext_pair(&h, &[1, 2], &[4, 5]),
            Err(PairError::InsideEdge { label: SetLabel::A, .. })
        ));
        assert!(matches!(
            verify_pseudocontext_pair(&h, &[1, 4], &[]),
            Err(PairError::EmptySet { label: SetLabel::B })
        ));
        assert!(matches!(
            verify_pseudocontext_pair(&h, &[1, 4], &[2, 9]),
            Err(PairError::OutOfRange { label: SetLabel::B, vertex: 9, .. })
        ));
    }

    /// Four edges closed into a loop: alternating edge signs telescope to
    /// chi_{2,6} - chi_{4,8}, the smallest honest pseudocontext pair here.
    fn square_loop() -> Hypergraph {
        parse_hypergraph("1 2 3\n3 4 5\n5 6 7\n7 8 1\n").unwrap()
    }

    #[test]
    fn chain_pair_yields_no_certificate() {
        let h = parse_hypergraph("1 2 3\n3 4 5\n").unwrap();
        // Any edge combination weights vertices 1 and 2 equally, so the
        // system for chi_{1,4} - chi_{2,5} is infeasible.
        let none = verify_pseudocontext_pair(&h, &[1, 4], &[2, 5]).unwrap();
        assert!(none.is_none());
    }

    #[test]
    fn loop_certificate_is_exact() {
        let h = square_loop();
        let cert = verify_pseudocontext_pair(&h, &[2, 6], &[4, 8]).unwrap().unwrap();
        assert!(cert.verify(&h));
        // Canonical edge order is [1,2,3], [1,7,8], [3,4,5], [5,6,7];
        // e1 - e2 + e3 - e4 telescopes, so the signs land as +,-,-,+.
        let signs: Vec<i64> = cert
            .lambda()
            .iter()
            .map(|(_, l)| l.to_integer().to_i64().unwrap())
            .collect();
        assert_eq!(signs, vec![1, -1, -1, 1]);
    }

    #[test]
    fn loop_pairs_found_by_signature_search() {
        let h = square_loop();
        let pairs = find_pseudocontext_pairs(&h, 2);
        assert!(pairs.contains(&(vec![2, 6], vec![4, 8])));
        let mirrored = verify_pseudocontext_pair(&h, &[1, 5], &[3, 7]).unwrap();
        assert!(mirrored.is_none(), "odd-position pair must not certify");
        assert!(!pairs.contains(&(vec![1, 5], vec![3, 7])));
        for (a, b) in &pairs {
            let cert = verify_pseudocontext_pair(&h, a, b).unwrap();
            assert!(cert.is_some(), "signature pair ({a:?}, {b:?}) must certify");
        }
    }

    #[test]
    fn coverings_of_single_edge() {
        let h = parse_hypergraph("1 2 3\n").unwrap();
        let all = find_coverings(&h, &[]).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].edges(), h.edges());
        // Excluding one vertex leaves 2 vertices uncoverable.
        assert!(find_coverings(&h, &[1]).unwrap().is_empty());
        // Excluding the whole edge leaves nothing to cover.
        let empty_cover = find_coverings(&h, &[1, 2, 3]).unwrap();
        assert_eq!(empty_cover.len(), 1);
        assert!(empty_cover[0].edges().is_empty());
    }

    #[test]
    fn covering_difference_builds_unit_certificate() {
        let h = square_loop();
        let ca = find_coverings(&h, &[2, 6]).unwrap();
        let cb = find_coverings(&h, &[4, 8]).unwrap();
        assert_eq!(ca.len(), 1);
        assert_eq!(cb.len(), 1);
        let cert = certificate_from_coverings(&h, &ca[0], &cb[0]).unwrap();
        assert_eq!(cert.a(), &[2, 6]);
        assert_eq!(cert.b(), &[4, 8]);
        let direct = verify_pseudocontext_pair(&h, &[2, 6], &[4, 8]).unwrap().unwrap();
        assert_eq!(cert, direct);
    }

    #[test]
    fn classical_bounds_on_single_edge() {
        let h = parse_hypergraph("1 2 3\n").unwrap();
        let s = enumerate_two_valued_states(&h);
        assert_eq!(classical_bounds(&s, &[1]).unwrap(), ClassicalBounds { lo: 0, hi: 1 });
        assert_eq!(classical_bounds(&s, &[1, 2, 3]).unwrap(), ClassicalBounds { lo: 1, hi: 1 });
    }

    #[test]
    fn gadget_rejects_overlapping_sets() {
        let h = parse_hypergraph("1 2 3\n").unwrap();
        let s = enumerate_two_valued_states(&h);
        assert_eq!(classify_gadget(&s, &[1], &[1]), Err(GadgetError::NotDisjoint(1)));
    }

    #[test]
    fn gadget_on_statewise_equal_pair() {
        let h = parse_hypergraph("1 2 3\n4 5 6\n7 8 9\n").unwrap();
        let s = enumerate_two_valued_states(&h);
        let r = classify_gadget(&s, &[1, 2, 3], &[4, 5, 6]).unwrap();
        assert!(r.fif);
        assert_eq!(r.tit_levels, vec![1]);
        assert!(r.symmetric);
        assert_eq!(r.max_level, 1);
        assert_eq!(r.joint.get(&(1, 1)), Some(&27));
    }

    #[test]
    fn certificate_json_shape() {
        let h = square_loop();
        let cert = verify_pseudocontext_pair(&h, &[2, 6], &[4, 8]).unwrap().unwrap();
        assert_eq!(
            cert.to_json_string(),
            r#"{"A":[2,6],"B":[4,8],"lambda":[{"den":1,"edge":[1,2,3],"num":1},{"den":1,"edge":[1,7,8],"num":-1},{"den":1,"edge":[3,4,5],"num":-1},{"den":1,"edge":[5,6,7],"num":1}]}"#
        );
    }
}
