//! 3-uniform hypergraphs of measurement contexts.
//!
//! Vertices are 1-based ids forming a contiguous range `1..=n`; every edge is
//! a set of exactly three distinct vertices. A well-formed graph has no
//! duplicate edges, no two edges sharing two vertices (the square-free
//! condition for 3-element contexts), and no isolated vertices.

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

pub type VertexId = u32;

/// An unordered triple of distinct vertices, stored sorted ascending.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "[VertexId; 3]", into = "[VertexId; 3]")]
pub struct Hyperedge([VertexId; 3]);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EdgeError {
    #[error("edge [{0}, {1}, {2}] repeats a vertex; contexts have three distinct members")]
    RepeatedVertex(VertexId, VertexId, VertexId),
    #[error("vertex ids are 1-based; 0 is not a vertex")]
    ZeroId,
}

impl Hyperedge {
    pub fn new(a: VertexId, b: VertexId, c: VertexId) -> Result<Self, EdgeError> {
        if a == 0 || b == 0 || c == 0 {
            return Err(EdgeError::ZeroId);
        }
        if a == b || a == c || b == c {
            return Err(EdgeError::RepeatedVertex(a, b, c));
        }
        let mut m = [a, b, c];
        m.sort_unstable();
        Ok(Hyperedge(m))
    }

    pub fn members(&self) -> [VertexId; 3] {
        self.0
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    /// The two vertices shared with `other`, if they share that many.
    pub fn shared_pair(&self, other: &Hyperedge) -> Option<(VertexId, VertexId)> {
        let common: Vec<VertexId> = self.0.iter().copied().filter(|v| other.contains(*v)).collect();
        match common.as_slice() {
            [u, v, ..] => Some((*u, *v)),
            _ => None,
        }
    }
}

impl TryFrom<[VertexId; 3]> for Hyperedge {
    type Error = EdgeError;
    fn try_from(m: [VertexId; 3]) -> Result<Self, EdgeError> {
        Hyperedge::new(m[0], m[1], m[2])
    }
}

impl From<Hyperedge> for [VertexId; 3] {
    fn from(e: Hyperedge) -> [VertexId; 3] {
        e.0
    }
}

impl fmt::Debug for Hyperedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}, {}}}", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Display for Hyperedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}, {}}}", self.0[0], self.0[1], self.0[2])
    }
}

/// A 3-uniform hypergraph. Construction canonicalizes edge order but does not
/// enforce well-formedness; run [`Hypergraph::validate`] (or build through
/// [`Hypergraph::validated`] / the parsers, which reject invalid graphs).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Hypergraph {
    n: VertexId,
    edges: Vec<Hyperedge>,
}

/// A structural defect found by [`Hypergraph::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Diagnostic {
    DuplicateEdge(Hyperedge),
    /// Two distinct edges both contain this vertex pair.
    SharedPair(VertexId, VertexId),
    IsolatedVertex(VertexId),
    /// Edge member outside `1..=n`.
    VertexOutOfRange(Hyperedge, VertexId),
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::DuplicateEdge(e) => write!(f, "duplicate edge {e}"),
            Diagnostic::SharedPair(u, v) => write!(f, "edges share two vertices ({u}, {v})"),
            Diagnostic::IsolatedVertex(v) => write!(f, "vertex {v} appears in no edge"),
            Diagnostic::VertexOutOfRange(e, v) => {
                write!(f, "edge {e} references vertex {v} outside 1..=n")
            }
        }
    }
}

impl Hypergraph {
    /// Wrap raw parts, sorting edges into canonical order. Duplicates and
    /// other defects are preserved so that `validate` can report them.
    pub fn new(n: VertexId, mut edges: Vec<Hyperedge>) -> Self {
        edges.sort_unstable();
        Hypergraph { n, edges }
    }

    /// Construct and reject on any diagnostic.
    pub fn validated(n: VertexId, edges: Vec<Hyperedge>) -> Result<Self, Vec<Diagnostic>> {
        let h = Hypergraph::new(n, edges);
        let diags = h.validate();
        if diags.is_empty() {
            Ok(h)
        } else {
            Err(diags)
        }
    }

    pub fn n(&self) -> VertexId {
        self.n
    }

    /// Edges in canonical ascending order.
    pub fn edges(&self) -> &[Hyperedge] {
        &self.edges
    }

    pub fn has_edge(&self, e: &Hyperedge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    /// One diagnostic per violation; empty iff the graph is well-formed.
    pub fn validate(&self) -> Vec<Diagnostic> {
        let mut diags = Vec::new();

        for w in self.edges.windows(2) {
            if w[0] == w[1] {
                match diags.last() {
                    Some(Diagnostic::DuplicateEdge(e)) if *e == w[0] => {}
                    _ => diags.push(Diagnostic::DuplicateEdge(w[0])),
                }
            }
        }

        for e in &self.edges {
            for &v in &e.members() {
                if v > self.n {
                    diags.push(Diagnostic::VertexOutOfRange(*e, v));
                }
            }
        }

        // Shared pairs among *distinct* edge values (duplicates already reported).
        let distinct: BTreeSet<&Hyperedge> = self.edges.iter().collect();
        let mut pair_seen: BTreeMap<(VertexId, VertexId), u32> = BTreeMap::new();
        for e in &distinct {
            let [a, b, c] = e.members();
            for p in [(a, b), (a, c), (b, c)] {
                *pair_seen.entry(p).or_insert(0) += 1;
            }
        }
        for ((u, v), count) in pair_seen {
            if count > 1 {
                diags.push(Diagnostic::SharedPair(u, v));
            }
        }

        let degrees = self.vertex_degrees();
        for v in 1..=self.n {
            if degrees[(v - 1) as usize] == 0 {
                diags.push(Diagnostic::IsolatedVertex(v));
            }
        }

        diags
    }

    /// Edge count per vertex, indexed by `v - 1`. Sum equals `3 * |edges|`
    /// when all members are in range.
    pub fn vertex_degrees(&self) -> Vec<u32> {
        let mut deg = vec![0u32; self.n as usize];
        for e in &self.edges {
            for &v in &e.members() {
                if v >= 1 && v <= self.n {
                    deg[(v - 1) as usize] += 1;
                }
            }
        }
        deg
    }

    /// Line-oriented text form: one edge per line, members space-separated.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.edges {
            let [a, b, c] = e.members();
            out.push_str(&format!("{a} {b} {c}\n"));
        }
        out
    }

    /// JSON mirror `{"n": int, "edges": [[a,b,c], ...]}`.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("hypergraph serializes")
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}, column {col}: expected a positive integer, got {token:?}")]
    BadToken { line: usize, col: usize, token: String },
    #[error("line {line}: an edge needs exactly 3 vertices, got {count}")]
    NotThreeMembers { line: usize, count: usize },
    #[error("line {line}: {source}")]
    BadEdge { line: usize, source: EdgeError },
    #[error("not a well-formed hypergraph: {}", format_diagnostics(.0))]
    Invalid(Vec<Diagnostic>),
    #[error("JSON hypergraph: {0}")]
    BadJson(String),
}

fn format_diagnostics(diags: &[Diagnostic]) -> String {
    diags.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("; ")
}

/// Parse the text format: one edge per line as whitespace-separated positive
/// integers; `#` starts a comment; blank lines are skipped. The vertex count
/// is the maximum id seen, and the result is rejected unless well-formed.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, ParseError> {
    let mut edges = Vec::new();
    let mut n: VertexId = 0;
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        };
        if line.trim().is_empty() {
            continue;
        }
        let mut members = Vec::new();
        let mut rest = line;
        let mut consumed = 0;
        loop {
            let trimmed = rest.trim_start();
            if trimmed.is_empty() {
                break;
            }
            consumed += rest.len() - trimmed.len();
            let tok_len = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
            let token = &trimmed[..tok_len];
            let col = consumed + 1;
            let v: VertexId = token.parse().map_err(|_| ParseError::BadToken {
                line: line_no,
                col,
                token: token.to_string(),
            })?;
            if v == 0 {
                return Err(ParseError::BadEdge { line: line_no, source: EdgeError::ZeroId });
            }
            members.push(v);
            consumed += tok_len;
            rest = &trimmed[tok_len..];
        }
        if members.len() != 3 {
            return Err(ParseError::NotThreeMembers { line: line_no, count: members.len() });
        }
        let e = Hyperedge::new(members[0], members[1], members[2])
            .map_err(|source| ParseError::BadEdge { line: line_no, source })?;
        n = n.max(members[0]).max(members[1]).max(members[2]);
        edges.push(e);
    }
    Hypergraph::validated(n, edges).map_err(ParseError::Invalid)
}

/// Parse the JSON mirror `{"n": int, "edges": [[a,b,c], ...]}`.
pub fn parse_hypergraph_json(text: &str) -> Result<Hypergraph, ParseError> {
    let raw: Hypergraph =
        serde_json::from_str(text).map_err(|e| ParseError::BadJson(e.to_string()))?;
    Hypergraph::validated(raw.n, raw.edges).map_err(ParseError::Invalid)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: u32, b: u32, c: u32) -> Hyperedge {
        Hyperedge::new(a, b, c).unwrap()
    }

    #[test]
    fn edge_order_is_canonical() {
        assert_eq!(e(3, 1, 2), e(1, 2, 3));
        assert_eq!(e(3, 1, 2).members(), [1, 2, 3]);
        assert!(e(2, 9, 4).contains(9));
        assert!(!e(2, 9, 4).contains(3));
    }

    #[test]
    fn edge_rejects_repeats_and_zero() {
        assert_eq!(Hyperedge::new(1, 1, 2), Err(EdgeError::RepeatedVertex(1, 1, 2)));
        assert_eq!(Hyperedge::new(0, 1, 2), Err(EdgeError::ZeroId));
    }

    #[test]
    fn parse_two_edge_chain() {
        let h = parse_hypergraph("1 2 3\n3 4 5\n").unwrap();
        assert_eq!(h.n(), 5);
        assert_eq!(h.edges(), &[e(1, 2, 3), e(3, 4, 5)]);
    }

    #[test]
    fn parse_handles_comments_and_blank_lines() {
        let h = parse_hypergraph("# contexts\n\n1 2 3   # first\n  3 4 5\n").unwrap();
        assert_eq!(h.edges().len(), 2);
    }

    #[test]
    fn parse_rejects_shared_pair() {
        match parse_hypergraph("1 2 3\n1 2 4\n") {
            Err(ParseError::Invalid(diags)) => {
                assert!(diags.contains(&Diagnostic::SharedPair(1, 2)), "{diags:?}");
            }
            other => panic!("expected Invalid, got {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_gap_in_numbering() {
        // Vertex 4 is skipped, so it is isolated under n = max id.
        match parse_hypergraph("1 2 3\n3 5 6\n") {
            Err(ParseError::Invalid(diags)) => {
                assert_eq!(diags, vec![Diagnostic::IsolatedVertex(4)]);
            }
            other => panic!("expected Invalid, got {other:?}"),
        }
    }

    #[test]
    fn parse_reports_position_of_bad_token() {
        match parse_hypergraph("1 2 3\n3 x 5\n") {
            Err(ParseError::BadToken { line, col, token }) => {
                assert_eq!((line, col, token.as_str()), (2, 3, "x"));
            }
            other => panic!("expected BadToken, got {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_wrong_arity() {
        assert!(matches!(
            parse_hypergraph("1 2 3 4\n"),
            Err(ParseError::NotThreeMembers { line: 1, count: 4 })
        ));
        assert!(matches!(
            parse_hypergraph("1 2\n"),
            Err(ParseError::NotThreeMembers { line: 1, count: 2 })
        ));
    }

    #[test]
    fn validate_reports_duplicates_once_per_value() {
        let h = Hypergraph::new(3, vec![e(1, 2, 3), e(3, 2, 1), e(1, 2, 3)]);
        let dups: Vec<_> = h
            .validate()
            .into_iter()
            .filter(|d| matches!(d, Diagnostic::DuplicateEdge(_)))
            .collect();
        assert_eq!(dups, vec![Diagnostic::DuplicateEdge(e(1, 2, 3))]);
    }

    #[test]
    fn validate_reports_out_of_range() {
        let h = Hypergraph::new(3, vec![e(1, 2, 3), e(3, 4, 5)]);
        assert!(h
            .validate()
            .iter()
            .any(|d| matches!(d, Diagnostic::VertexOutOfRange(_, 4))));
    }

    #[test]
    fn degrees_sum_to_three_per_edge() {
        let h = parse_hypergraph("1 2 3\n3 4 5\n5 6 1\n").unwrap();
        let deg = h.vertex_degrees();
        assert_eq!(deg.iter().sum::<u32>(), 9);
        assert_eq!(deg[0], 2); // vertex 1 in two edges
    }

    #[test]
    fn text_round_trip() {
        let h = parse_hypergraph("2 1 3\n3 4 5\n").unwrap();
        assert_eq!(parse_hypergraph(&h.to_text()).unwrap(), h);
    }

    #[test]
    fn json_round_trip() {
        let h = parse_hypergraph("1 2 3\n3 4 5\n").unwrap();
        let j = h.to_json_string();
        assert_eq!(parse_hypergraph_json(&j).unwrap(), h);
        assert_eq!(j, r#"{"n":5,"edges":[[1,2,3],[3,4,5]]}"#);
    }

    #[test]
    fn json_rejects_malformed_edge() {
        assert!(matches!(
            parse_hypergraph_json(r#"{"n":3,"edges":[[1,1,2]]}"#),
            Err(ParseError::BadJson(_))
        ));
    }
}
