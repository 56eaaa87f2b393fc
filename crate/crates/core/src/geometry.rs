//! Faithful orthogonal representations in R^3: verification against a graph,
//! inference of the orthogonality graph from vectors, the analytic cone
//! constructions with their degenerate parameters, and the spectral machinery
//! (projector sums, eigendecompositions, probability bounds).
//!
//! A labeling is faithful and conformal for a graph when same-edge pairs are
//! exactly the orthogonal pairs and no two labels coincide up to sign.

use crate::hypergraph::{Diagnostic, Hyperedge, Hypergraph, VertexId};
use crate::numfmt::fmt17;
use crate::pseudo::{check_subset, SubsetError};
use std::f64::consts::PI;
use std::fmt;
use std::sync::OnceLock;
use thiserror::Error;

pub type Vector3 = [f64; 3];

/// Default orthogonality tolerance for verification and inference.
pub const ORTH_EPS_DEFAULT: f64 = 1e-10;

/// Half-width of the rejection interval around each degenerate parameter.
const EXCLUSION_EPS: f64 = 1e-9;

/// Slack for closed domain endpoints, to absorb rounding in expressions
/// like `2.0 * PI / 3.0`.
const DOMAIN_SLACK: f64 = 1e-12;

pub fn dot(a: &Vector3, b: &Vector3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn cross(a: &Vector3, b: &Vector3) -> Vector3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub fn norm(a: &Vector3) -> f64 {
    dot(a, a).sqrt()
}

/// Normalized cross product. Degenerate inputs (parallel vectors) yield NaN
/// components; construction entry points exclude those parameters up front.
fn ucross(a: &Vector3, b: &Vector3) -> Vector3 {
    let c = cross(a, b);
    let n = norm(&c);
    [c[0] / n, c[1] / n, c[2] / n]
}

fn rot_z(theta: f64, v: &Vector3) -> Vector3 {
    let (s, c) = theta.sin_cos();
    [c * v[0] - s * v[1], s * v[0] + c * v[1], v[2]]
}

// ---------------------------------------------------------------------------
// Vector labelings
// ---------------------------------------------------------------------------

/// Unit vectors labeling vertices 1..=n.
#[derive(Clone, Debug, PartialEq)]
pub struct VectorLabeling {
    vecs: Vec<Vector3>,
}

#[derive(Debug, Error, Clone, Copy, PartialEq)]
pub enum LabelingError {
    #[error("labeling is empty")]
    Empty,
    #[error("vector {vertex} has norm {norm}, too far from 1")]
    NotUnit { vertex: VertexId, norm: f64 },
}

impl VectorLabeling {
    /// Accepts vectors within 1e-6 of unit length. Vectors with measurable
    /// drift are renormalized; vectors already unit to machine precision are
    /// stored bit-for-bit, keeping text round trips exact.
    pub fn new(vecs: Vec<Vector3>) -> Result<Self, LabelingError> {
        if vecs.is_empty() {
            return Err(LabelingError::Empty);
        }
        let mut out = Vec::with_capacity(vecs.len());
        for (i, v) in vecs.iter().enumerate() {
            let n = norm(v);
            if !n.is_finite() || (n - 1.0).abs() > 1e-6 {
                return Err(LabelingError::NotUnit { vertex: (i + 1) as VertexId, norm: n });
            }
            if (n - 1.0).abs() > 1e-12 {
                out.push([v[0] / n, v[1] / n, v[2] / n]);
            } else {
                out.push(*v);
            }
        }
        Ok(VectorLabeling { vecs: out })
    }

    pub fn n(&self) -> VertexId {
        self.vecs.len() as VertexId
    }

    pub fn vector(&self, v: VertexId) -> &Vector3 {
        &self.vecs[(v - 1) as usize]
    }

    pub fn vectors(&self) -> &[Vector3] {
        &self.vecs
    }

    /// One `x y z` line per vertex, 17 significant digits per component.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in &self.vecs {
            out.push_str(&fmt17(v[0]));
            out.push(' ');
            out.push_str(&fmt17(v[1]));
            out.push(' ');
            out.push_str(&fmt17(v[2]));
            out.push('\n');
        }
        out
    }

    /// `{"n": 3, "vectors": [[x,y,z], ...]}` with 17-significant-digit
    /// components.
    pub fn to_json_string(&self) -> String {
        let mut out = format!("{{\"n\":{},\"vectors\":[", self.n());
        for (i, v) in self.vecs.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&format!("[{},{},{}]", fmt17(v[0]), fmt17(v[1]), fmt17(v[2])));
        }
        out.push_str("]}");
        out
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum VectorParseError {
    #[error("line {line}: expected a number, got {token:?}")]
    BadNumber { line: usize, token: String },
    #[error("line {line}: a vector has 3 components, found {count}")]
    NotThreeComponents { line: usize, count: usize },
    #[error("not a vector object: {0}")]
    BadJson(String),
    #[error("\"n\" is {n} but {found} vectors are listed")]
    CountMismatch { n: usize, found: usize },
    #[error(transparent)]
    BadLabeling(#[from] LabelingError),
}

/// One vector per non-comment line, three whitespace-separated components;
/// `#` starts a comment.
pub fn parse_vectors(text: &str) -> Result<VectorLabeling, VectorParseError> {
    let mut vecs = Vec::new();
    for (li, raw) in text.lines().enumerate() {
        let line = li + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        if tokens.len() != 3 {
            return Err(VectorParseError::NotThreeComponents { line, count: tokens.len() });
        }
        let mut v = [0.0; 3];
        for (i, t) in tokens.iter().enumerate() {
            v[i] = t
                .parse()
                .map_err(|_| VectorParseError::BadNumber { line, token: t.to_string() })?;
        }
        vecs.push(v);
    }
    Ok(VectorLabeling::new(vecs)?)
}

/// `{"n": int, "vectors": [[x,y,z], ...]}`.
pub fn parse_vectors_json(text: &str) -> Result<VectorLabeling, VectorParseError> {
    #[derive(serde::Deserialize)]
    struct VectorFile {
        n: usize,
        vectors: Vec<[f64; 3]>,
    }
    let file: VectorFile =
        serde_json::from_str(text).map_err(|e| VectorParseError::BadJson(e.to_string()))?;
    if file.n != file.vectors.len() {
        return Err(VectorParseError::CountMismatch { n: file.n, found: file.vectors.len() });
    }
    Ok(VectorLabeling::new(file.vectors)?)
}

// ---------------------------------------------------------------------------
// Verification and inference
// ---------------------------------------------------------------------------

/// Faithfulness report: which pair constraints the labeling violates.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ForReport {
    /// Same-edge pairs that are not orthogonal.
    pub missing: Vec<(VertexId, VertexId)>,
    /// Orthogonal pairs that share no edge.
    pub extra: Vec<(VertexId, VertexId)>,
    /// Pairs of labels equal up to sign.
    pub duplicates: Vec<(VertexId, VertexId)>,
}

impl ForReport {
    pub fn is_clean(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty() && self.duplicates.is_empty()
    }
}

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum VerifyError {
    #[error("labeling covers {got} vertices, the graph has {expected}")]
    WrongLength { expected: VertexId, got: VertexId },
}

pub fn verify_for(h: &Hypergraph, l: &VectorLabeling, eps: f64) -> Result<ForReport, VerifyError> {
    let n = h.n();
    if l.n() != n {
        return Err(VerifyError::WrongLength { expected: n, got: l.n() });
    }
    let nu = n as usize;
    let mut adjacent = vec![false; nu * nu];
    for e in h.edges() {
        let [a, b, c] = e.members();
        for (u, v) in [(a, b), (a, c), (b, c)] {
            adjacent[(u as usize - 1) * nu + (v as usize - 1)] = true;
        }
    }

    let mut report = ForReport::default();
    for u in 1..=n {
        for v in u + 1..=n {
            let d = dot(l.vector(u), l.vector(v)).abs();
            if d >= 1.0 - eps {
                report.duplicates.push((u, v));
            }
            let same_edge = adjacent[(u as usize - 1) * nu + (v as usize - 1)];
            if same_edge && d > eps {
                report.missing.push((u, v));
            } else if !same_edge && d <= eps {
                report.extra.push((u, v));
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InferError {
    #[error("labels {0} and {1} coincide up to sign")]
    DuplicateLabels(VertexId, VertexId),
    #[error("vertices {0} and {1} are orthogonal but complete no triple")]
    CliqueOfSize2(VertexId, VertexId),
    #[error("vertices {0:?} are mutually orthogonal; cliques must have size 3")]
    CliqueTooLarge(Vec<VertexId>),
    #[error("inferred edges do not form a valid hypergraph: {0:?}")]
    InvalidGraph(Vec<Diagnostic>),
}

/// Build the orthogonality graph of the labeling and return its triangles as
/// edges. Errors unless every maximal orthogonality clique has size exactly 3.
pub fn infer_hypergraph_from_labels(
    l: &VectorLabeling,
    eps: f64,
) -> Result<Hypergraph, InferError> {
    let n = l.n();
    for u in 1..=n {
        for v in u + 1..=n {
            if dot(l.vector(u), l.vector(v)).abs() >= 1.0 - eps {
                return Err(InferError::DuplicateLabels(u, v));
            }
        }
    }
    let orth = |u: VertexId, v: VertexId| dot(l.vector(u), l.vector(v)).abs() <= eps;

    let nu = n as usize;
    let mut in_triangle = vec![false; nu * nu];
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if !orth(u, v) {
                continue;
            }
            for w in v + 1..=n {
                if !(orth(u, w) && orth(v, w)) {
                    continue;
                }
                if let Some(x) = (1..=n)
                    .find(|&x| x != u && x != v && x != w && orth(x, u) && orth(x, v) && orth(x, w))
                {
                    let mut clique = vec![u, v, w, x];
                    clique.sort_unstable();
                    return Err(InferError::CliqueTooLarge(clique));
                }
                edges.push(Hyperedge::new(u, v, w).expect("u < v < w"));
                for (a, b) in [(u, v), (u, w), (v, w)] {
                    in_triangle[(a as usize - 1) * nu + (b as usize - 1)] = true;
                }
            }
        }
    }
    for u in 1..=n {
        for v in u + 1..=n {
            if orth(u, v) && !in_triangle[(u as usize - 1) * nu + (v as usize - 1)] {
                return Err(InferError::CliqueOfSize2(u, v));
            }
        }
    }
    Hypergraph::validated(n, edges).map_err(InferError::InvalidGraph)
}

// ---------------------------------------------------------------------------
// The cone constructions
// ---------------------------------------------------------------------------

/// Edges of the 15-vertex graph the small construction represents.
pub const SMALL_EDGES: [[VertexId; 3]; 8] = [
    [1, 2, 3],
    [2, 7, 12],
    [3, 4, 5],
    [4, 9, 14],
    [6, 7, 8],
    [8, 9, 10],
    [11, 12, 13],
    [13, 14, 15],
];

/// Edges of the 36-vertex graph the combo construction represents.
pub const COMBO_EDGES: [[VertexId; 3]; 22] = [
    [1, 2, 3],
    [1, 11, 12],
    [2, 14, 26],
    [3, 4, 5],
    [5, 6, 7],
    [6, 18, 30],
    [7, 8, 9],
    [8, 20, 32],
    [9, 10, 11],
    [12, 24, 36],
    [13, 14, 15],
    [13, 23, 24],
    [15, 16, 17],
    [17, 18, 19],
    [19, 20, 21],
    [21, 22, 23],
    [25, 26, 27],
    [25, 35, 36],
    [27, 28, 29],
    [29, 30, 31],
    [31, 32, 33],
    [33, 34, 35],
];

pub(crate) fn graph_from_triples(n: VertexId, triples: &[[VertexId; 3]]) -> Hypergraph {
    let edges = triples
        .iter()
        .map(|&[a, b, c]| Hyperedge::new(a, b, c).expect("distinct members"))
        .collect();
    Hypergraph::validated(n, edges).expect("edge list is a valid graph")
}

/// Largest admissible cone angle for the combo family:
/// 2·arctan 3 = π − arccos(4/5).
pub fn alpha_max() -> f64 {
    2.0 * 3.0_f64.atan()
}

#[derive(Debug, Error, Clone, Copy, PartialEq)]
#[error("alpha = {alpha} outside [0, {hi}]")]
pub struct DomainError {
    pub alpha: f64,
    pub hi: f64,
}

fn check_beta_domain(alpha: f64) -> Result<(), DomainError> {
    let hi = alpha_max();
    if !alpha.is_finite() || alpha < -DOMAIN_SLACK || alpha > hi + DOMAIN_SLACK {
        return Err(DomainError { alpha, hi });
    }
    Ok(())
}

/// Rotation angle stitching the two halves of the combo construction:
/// arccos((−1 + cos α)/(5 + 4 cos α)), defined on [0, 2·arctan 3].
pub fn beta_of_alpha(alpha: f64) -> Result<f64, DomainError> {
    check_beta_domain(alpha)?;
    let c = alpha.cos();
    // At alpha_max the quotient is −1 up to rounding; clamp keeps acos real.
    let arg = (-1.0 + c) / (5.0 + 4.0 * c);
    Ok(arg.clamp(-1.0, 1.0).acos())
}

/// Half-opening angle of the cone holding the six pseudocontext vectors:
/// arccos sqrt((4 + 5 cos α)/(3 (2 + cos α))), same domain as beta.
pub fn aperture_of_alpha(alpha: f64) -> Result<f64, DomainError> {
    check_beta_domain(alpha)?;
    let c = alpha.cos();
    let arg = (4.0 + 5.0 * c) / (3.0 * (2.0 + c));
    Ok(arg.clamp(0.0, 1.0).sqrt().acos())
}

/// Why a construction parameter is rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Degeneracy {
    /// alpha = 0: the rotated cone triple collapses onto the base triple.
    DuplicateHalves,
    /// alpha = 2π/3: the two cone triples merge into one.
    DuplicateTriple,
    /// An orthogonal pair appears that the graph does not demand.
    ExtraOrthogonality(VertexId, VertexId),
    /// Two labels coincide up to sign (near-degenerate parameter).
    DuplicateLabels(VertexId, VertexId),
    /// A same-edge pair lost orthogonality (numerical failure).
    MissingOrthogonality(VertexId, VertexId),
}

impl fmt::Display for Degeneracy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degeneracy::DuplicateHalves => write!(f, "duplicate halves"),
            Degeneracy::DuplicateTriple => write!(f, "duplicate triple"),
            Degeneracy::ExtraOrthogonality(u, v) => {
                write!(f, "extra orthogonality between vertices {u} and {v}")
            }
            Degeneracy::DuplicateLabels(u, v) => write!(f, "labels {u} and {v} coincide"),
            Degeneracy::MissingOrthogonality(u, v) => {
                write!(f, "missing orthogonality between vertices {u} and {v}")
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConstructError {
    #[error("alpha = {alpha} outside (0, {hi}]")]
    OutOfDomain { alpha: f64, hi: f64 },
    #[error("degenerate: {0}")]
    Degenerate(Degeneracy),
}

/// Unchecked 15-vector assembly. Base triple {4,9,14} sits on the cone of
/// half-angle arccos(1/√3) about z at azimuths 0, 2π/3, 4π/3; the triple
/// {2,7,12} is the same fan rotated by `delta * alpha`; everything else is a
/// normalized cross product of already-placed neighbors, one orthogonality
/// ring per cone vertex.
fn small_raw(alpha: f64, delta: f64) -> Vec<Vector3> {
    let third = 2.0 * PI / 3.0;
    let r = (2.0_f64 / 3.0).sqrt();
    let z = 1.0 / 3.0_f64.sqrt();
    let cone = |phi: f64| -> Vector3 { [r * phi.cos(), r * phi.sin(), z] };

    let mut v = vec![[0.0; 3]; 16]; // slot 0 unused; v[i] labels vertex i
    for (i, base) in [4usize, 9, 14].into_iter().enumerate() {
        v[base] = cone(third * i as f64);
        v[base - 2] = cone(delta * alpha + third * i as f64);
    }
    for k in [0usize, 5, 10] {
        // ring around the two cone vertices 2+k and 4+k
        v[3 + k] = ucross(&v[2 + k], &v[4 + k]);
        v[1 + k] = ucross(&v[2 + k], &v[3 + k]);
        v[5 + k] = ucross(&v[4 + k], &v[3 + k]);
    }
    v.remove(0);
    v
}

/// The unique cone angle in (0, π) at which the small construction picks up
/// the unwanted (5, 11) orthogonality: bracketing scan for a sign change of
/// ⟨v₅(α)|v₁₁(α)⟩ followed by bisection to 1e−12. Cached after first use.
pub fn find_degenerate_alpha() -> f64 {
    static ALPHA0: OnceLock<f64> = OnceLock::new();
    *ALPHA0.get_or_init(|| {
        let f = |a: f64| {
            let v = small_raw(a, 1.0);
            dot(&v[4], &v[10]) // labels 5 and 11
        };
        let (lo0, hi0) = (1e-3, PI - 1e-3);
        let steps = 256;
        let mut bracket = None;
        let mut prev = (lo0, f(lo0));
        for i in 1..=steps {
            let a = lo0 + (hi0 - lo0) * i as f64 / steps as f64;
            let fa = f(a);
            if prev.1.is_finite() && fa.is_finite() && prev.1 * fa <= 0.0 {
                bracket = Some((prev.0, a));
                break;
            }
            prev = (a, fa);
        }
        let (mut lo, mut hi) = bracket.expect("the (5,11) overlap changes sign on (0, pi)");
        let mut flo = f(lo);
        while hi - lo > 1e-12 {
            let mid = 0.5 * (lo + hi);
            let fm = f(mid);
            if flo * fm <= 0.0 {
                hi = mid;
            } else {
                lo = mid;
                flo = fm;
            }
        }
        0.5 * (lo + hi)
    })
}

/// Rejects the excluded parameters with their specific diagnoses; `hi` is the
/// variant's upper domain end (π for small, 2·arctan 3 for combo).
fn check_construction_alpha(alpha: f64, hi: f64) -> Result<(), ConstructError> {
    if alpha.abs() <= EXCLUSION_EPS {
        return Err(ConstructError::Degenerate(Degeneracy::DuplicateHalves));
    }
    if !alpha.is_finite() || alpha < 0.0 || alpha > hi + DOMAIN_SLACK {
        return Err(ConstructError::OutOfDomain { alpha, hi });
    }
    if (alpha - 2.0 * PI / 3.0).abs() <= EXCLUSION_EPS {
        return Err(ConstructError::Degenerate(Degeneracy::DuplicateTriple));
    }
    if (alpha - find_degenerate_alpha()).abs() <= EXCLUSION_EPS {
        // The defining failure of the small half; quoted in 15-vertex labels.
        return Err(ConstructError::Degenerate(Degeneracy::ExtraOrthogonality(5, 11)));
    }
    Ok(())
}

/// Backstop behind the parameter exclusions: a constructed labeling that
/// still fails verification (thin rings around the excluded values) is
/// reported with the offending pair rather than returned.
fn faithfulness_guard(l: &VectorLabeling, h: &Hypergraph) -> Result<(), ConstructError> {
    let report = verify_for(h, l, ORTH_EPS_DEFAULT).expect("construction matches graph size");
    if let Some(&(u, v)) = report.duplicates.first() {
        return Err(ConstructError::Degenerate(Degeneracy::DuplicateLabels(u, v)));
    }
    if let Some(&(u, v)) = report.extra.first() {
        return Err(ConstructError::Degenerate(Degeneracy::ExtraOrthogonality(u, v)));
    }
    if let Some(&(u, v)) = report.missing.first() {
        return Err(ConstructError::Degenerate(Degeneracy::MissingOrthogonality(u, v)));
    }
    Ok(())
}

/// Analytic 15-vector representation of the small graph, parameterized by the
/// cone angle alpha ∈ (0, π] ∖ {2π/3, α₀}.
pub fn construct_small_for(alpha: f64) -> Result<VectorLabeling, ConstructError> {
    check_construction_alpha(alpha, PI)?;
    let l = VectorLabeling::new(small_raw(alpha, 1.0)).expect("components are unit vectors");
    faithfulness_guard(&l, &graph_from_triples(15, &SMALL_EDGES))?;
    Ok(l)
}

/// Small-to-combo label embedding: (small label, combo label) for the first
/// half; the second half is generated by rotation and cross products.
const COMBO_EMBED: [(usize, usize); 15] = [
    (1, 11),
    (2, 12),
    (3, 1),
    (4, 2),
    (5, 3),
    (6, 23),
    (7, 24),
    (8, 13),
    (9, 14),
    (10, 15),
    (11, 35),
    (12, 36),
    (13, 25),
    (14, 26),
    (15, 27),
];

/// (source, image) label pairs related by the stitching rotation, repeated at
/// offsets 0, 12, 24.
const COMBO_PAIRING: [(usize, usize); 5] = [(1, 7), (2, 6), (3, 5), (11, 9), (12, 8)];

/// Analytic 36-vector representation of the combo graph: one small half with
/// the rotated triple at azimuth −alpha, the mirror half produced by rotating
/// designated labels about z by β(alpha), and the remaining six vectors closed
/// off by cross products. β is exactly the angle making the stitched pair
/// (3, 5) orthogonal. alpha ∈ (0, 2·arctan 3] ∖ {2π/3, α₀}.
pub fn construct_combo_for(alpha: f64) -> Result<VectorLabeling, ConstructError> {
    check_construction_alpha(alpha, alpha_max())?;
    let beta = beta_of_alpha(alpha).expect("domain checked above");
    // Either rotation sense yields the same graph up to relabeling; the
    // published coordinates fix the convention, which flips at alpha = π/2.
    let bsign = if (alpha - PI / 2.0).abs() <= EXCLUSION_EPS { -1.0 } else { 1.0 };

    let s = small_raw(alpha, -1.0);
    let mut v = vec![[0.0f64; 3]; 37];
    for (l, r) in COMBO_EMBED {
        v[r] = s[l - 1];
    }
    for k in [0usize, 12, 24] {
        for (l, r) in COMBO_PAIRING {
            v[r + k] = rot_z(bsign * beta, &v[l + k]);
        }
        v[4 + k] = ucross(&v[3 + k], &v[5 + k]);
        v[10 + k] = ucross(&v[9 + k], &v[11 + k]);
    }
    v.remove(0);
    let l = VectorLabeling::new(v).expect("rotations and cross products stay unit");
    faithfulness_guard(&l, &graph_from_triples(36, &COMBO_EDGES))?;
    Ok(l)
}

// ---------------------------------------------------------------------------
// Spectral machinery
// ---------------------------------------------------------------------------

/// Symmetric 3×3 matrix, upper triangle stored.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct SymMatrix3 {
    pub xx: f64,
    pub xy: f64,
    pub xz: f64,
    pub yy: f64,
    pub yz: f64,
    pub zz: f64,
}

impl SymMatrix3 {
    pub fn identity() -> Self {
        SymMatrix3 { xx: 1.0, yy: 1.0, zz: 1.0, ..Default::default() }
    }

    pub fn apply(&self, v: &Vector3) -> Vector3 {
        [
            self.xx * v[0] + self.xy * v[1] + self.xz * v[2],
            self.xy * v[0] + self.yy * v[1] + self.yz * v[2],
            self.xz * v[0] + self.yz * v[1] + self.zz * v[2],
        ]
    }

    pub fn trace(&self) -> f64 {
        self.xx + self.yy + self.zz
    }

    pub fn sub(&self, o: &SymMatrix3) -> SymMatrix3 {
        SymMatrix3 {
            xx: self.xx - o.xx,
            xy: self.xy - o.xy,
            xz: self.xz - o.xz,
            yy: self.yy - o.yy,
            yz: self.yz - o.yz,
            zz: self.zz - o.zz,
        }
    }

    /// Largest entry magnitude; a cheap norm for "equal within tol" checks.
    pub fn max_abs(&self) -> f64 {
        [self.xx, self.xy, self.xz, self.yy, self.yz, self.zz]
            .into_iter()
            .fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn to_rows(&self) -> [[f64; 3]; 3] {
        [
            [self.xx, self.xy, self.xz],
            [self.xy, self.yy, self.yz],
            [self.xz, self.yz, self.zz],
        ]
    }
}

/// Σ_{v∈A} |v⟩⟨v| over the labels of A.
pub fn projector_sum(l: &VectorLabeling, a: &[VertexId]) -> Result<SymMatrix3, SubsetError> {
    let a = check_subset(l.n(), a)?;
    let mut m = SymMatrix3::default();
    for &vid in &a {
        let v = l.vector(vid);
        m.xx += v[0] * v[0];
        m.xy += v[0] * v[1];
        m.xz += v[0] * v[2];
        m.yy += v[1] * v[1];
        m.yz += v[1] * v[2];
        m.zz += v[2] * v[2];
    }
    Ok(m)
}

#[derive(Clone, Copy, Debug)]
pub struct EigenDecomposition3 {
    /// Ascending.
    pub eigenvalues: [f64; 3],
    /// Unit, mutually orthogonal; eigenvectors[i] belongs to eigenvalues[i].
    pub eigenvectors: [Vector3; 3],
}

/// Eigendecomposition of a symmetric 3×3 matrix: trigonometric closed form
/// for the characteristic cubic, eigenvectors from row cross products, and a
/// Jacobi-rotation fallback whenever the fast path leaves a residual above
/// 1e-10 (repeated eigenvalues, near-diagonal input).
pub fn eigen_sym3(m: &SymMatrix3) -> EigenDecomposition3 {
    if let Some(d) = trig_eigen(m) {
        let scale = 1.0_f64.max(m.max_abs());
        let ok = d.eigenvalues.iter().zip(&d.eigenvectors).all(|(&l, u)| {
            let r = m.apply(u);
            let res = [r[0] - l * u[0], r[1] - l * u[1], r[2] - l * u[2]];
            norm(&res) <= 1e-10 * scale
        });
        if ok {
            return d;
        }
    }
    jacobi_eigen(m)
}

fn trig_eigen(m: &SymMatrix3) -> Option<EigenDecomposition3> {
    let p1 = m.xy * m.xy + m.xz * m.xz + m.yz * m.yz;
    let q = m.trace() / 3.0;
    let p2 = (m.xx - q).powi(2) + (m.yy - q).powi(2) + (m.zz - q).powi(2) + 2.0 * p1;
    if p2 <= f64::EPSILON * f64::EPSILON {
        return None; // scalar multiple of the identity; any basis works
    }
    let p = (p2 / 6.0).sqrt();
    let b = SymMatrix3 {
        xx: (m.xx - q) / p,
        xy: m.xy / p,
        xz: m.xz / p,
        yy: (m.yy - q) / p,
        yz: m.yz / p,
        zz: (m.zz - q) / p,
    };
    let det_b = b.xx * (b.yy * b.zz - b.yz * b.yz) - b.xy * (b.xy * b.zz - b.yz * b.xz)
        + b.xz * (b.xy * b.yz - b.yy * b.xz);
    let phi = (det_b / 2.0).clamp(-1.0, 1.0).acos() / 3.0;
    let hi = q + 2.0 * p * phi.cos();
    let lo = q + 2.0 * p * (phi + 2.0 * PI / 3.0).cos();
    let mid = 3.0 * q - hi - lo;
    let eigenvalues = [lo, mid, hi];

    let u_lo = row_cross_eigenvector(m, lo)?;
    let u_hi = row_cross_eigenvector(m, hi)?;
    let u_mid = {
        let c = cross(&u_hi, &u_lo);
        let n = norm(&c);
        if n < 1e-8 {
            return None;
        }
        [c[0] / n, c[1] / n, c[2] / n]
    };
    Some(EigenDecomposition3 { eigenvalues, eigenvectors: [u_lo, u_mid, u_hi] })
}

/// Any two independent rows of (M − λI) have the eigenvector as their cross
/// product; take the largest of the three candidates.
fn row_cross_eigenvector(m: &SymMatrix3, lambda: f64) -> Option<Vector3> {
    let r = SymMatrix3 { xx: m.xx - lambda, yy: m.yy - lambda, zz: m.zz - lambda, ..*m }.to_rows();
    let candidates = [cross(&r[0], &r[1]), cross(&r[0], &r[2]), cross(&r[1], &r[2])];
    let best = candidates
        .into_iter()
        .max_by(|a, b| norm(a).total_cmp(&norm(b)))
        .expect("three candidates");
    let n = norm(&best);
    let scale = 1.0_f64.max(m.max_abs() * m.max_abs());
    if n < 1e-10 * scale {
        return None; // repeated eigenvalue: the nullspace is a plane
    }
    Some([best[0] / n, best[1] / n, best[2] / n])
}

fn jacobi_eigen(m: &SymMatrix3) -> EigenDecomposition3 {
    let mut a = m.to_rows();
    let mut v = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
    for _ in 0..64 {
        // largest off-diagonal element
        let (mut p, mut q, mut big) = (0usize, 1usize, a[0][1].abs());
        for (i, j) in [(0usize, 2usize), (1, 2)] {
            if a[i][j].abs() > big {
                (p, q, big) = (i, j, a[i][j].abs());
            }
        }
        if big <= 1e-15 * (1.0 + m.max_abs()) {
            break;
        }
        let theta = 0.5 * (2.0 * a[p][q]).atan2(a[q][q] - a[p][p]);
        let (s, c) = theta.sin_cos();
        for row in &mut a {
            let (akp, akq) = (row[p], row[q]);
            row[p] = c * akp - s * akq;
            row[q] = s * akp + c * akq;
        }
        let (top, rest) = a.split_at_mut(q);
        let (rp, rq) = (&mut top[p], &mut rest[0]);
        for (x, y) in rp.iter_mut().zip(rq.iter_mut()) {
            let (apk, aqk) = (*x, *y);
            *x = c * apk - s * aqk;
            *y = s * apk + c * aqk;
        }
        for row in &mut v {
            let (vkp, vkq) = (row[p], row[q]);
            row[p] = c * vkp - s * vkq;
            row[q] = s * vkp + c * vkq;
        }
    }
    let mut order = [0usize, 1, 2];
    order.sort_by(|&i, &j| a[i][i].total_cmp(&a[j][j]));
    let eigenvalues = [a[order[0]][order[0]], a[order[1]][order[1]], a[order[2]][order[2]]];
    let col = |j: usize| -> Vector3 {
        let u = [v[0][j], v[1][j], v[2][j]];
        let n = norm(&u);
        [u[0] / n, u[1] / n, u[2] / n]
    };
    EigenDecomposition3 {
        eigenvalues,
        eigenvectors: [col(order[0]), col(order[1]), col(order[2])],
    }
}

/// (λ_min, λ_max) of the projector sum: tight bounds on Σ_{v∈A} ⟨v|ψ⟩² over
/// unit ψ.
pub fn quantum_bounds(l: &VectorLabeling, a: &[VertexId]) -> Result<(f64, f64), SubsetError> {
    let m = projector_sum(l, a)?;
    let d = eigen_sym3(&m);
    Ok((d.eigenvalues[0], d.eigenvalues[2]))
}

#[derive(Debug, Error, Clone, Copy, PartialEq)]
pub enum BornError {
    #[error("psi has norm {0}, too far from 1")]
    NotUnit(f64),
}

/// p(v) = ⟨v|ψ⟩² per vertex, indexed v−1. Sums to 1 over every edge of any
/// graph the labeling faithfully represents.
pub fn born_probabilities(l: &VectorLabeling, psi: &Vector3) -> Result<Vec<f64>, BornError> {
    let n = norm(psi);
    if !n.is_finite() || (n - 1.0).abs() > 1e-6 {
        return Err(BornError::NotUnit(n));
    }
    let u = [psi[0] / n, psi[1] / n, psi[2] / n];
    Ok(l.vectors().iter().map(|v| dot(v, &u).powi(2)).collect())
}

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum GramError {
    #[error("labelings cover {0} and {1} vertices; comparison needs equal sets")]
    SizeMismatch(VertexId, VertexId),
}

/// True iff |⟨vᵢ|vⱼ⟩| agree entrywise within tol: same labeling up to a
/// global orthogonal transformation and per-vector sign flips.
pub fn gram_equivalent(
    l1: &VectorLabeling,
    l2: &VectorLabeling,
    tol: f64,
) -> Result<bool, GramError> {
    if l1.n() != l2.n() {
        return Err(GramError::SizeMismatch(l1.n(), l2.n()));
    }
    let n = l1.n();
    for u in 1..=n {
        for v in u..=n {
            let g1 = dot(l1.vector(u), l1.vector(v)).abs();
            let g2 = dot(l2.vector(u), l2.vector(v)).abs();
            if (g1 - g2).abs() > tol {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// |⟨vᵢ|vⱼ⟩| for all unordered pairs of A, pairs in lexicographic order of
/// the sorted subset.
pub fn pairwise_overlaps(l: &VectorLabeling, a: &[VertexId]) -> Result<Vec<f64>, SubsetError> {
    let a = check_subset(l.n(), a)?;
    let mut out = Vec::with_capacity(a.len() * (a.len().saturating_sub(1)) / 2);
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            out.push(dot(l.vector(a[i]), l.vector(a[j])).abs());
        }
    }
    Ok(out)
}
