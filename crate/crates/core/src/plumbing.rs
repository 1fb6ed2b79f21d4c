//! Plumbing and resolution graphs.
//!
//! A vertex is a closed surface with a genus and a self-intersection
//! (weight); an edge is one transverse intersection point. The classifier
//! decides planarity of the canonical contact structure on the link of a
//! normal surface singularity from a good resolution graph: after blowing
//! down (-1)-spheres, the link is planar exactly when the graph is a tree of
//! spheres without bad vertices.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::lattice::{self, Matrix};
use crate::obstruct::{detect_bad_configuration, BadConfiguration, VerdictKind, WeightedIntersectionGraph};
use crate::{Error, Int, IntMatrix, IntScalar, ParseError, Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Vertex {
    #[serde(default)]
    pub genus: u32,
    pub weight: i64,
}

impl Vertex {
    pub fn sphere(weight: i64) -> Self {
        Vertex { genus: 0, weight }
    }
}

/// Weighted simple graph of surfaces. Edges are stored with the smaller
/// endpoint first and kept in insertion order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlumbingGraph {
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
}

impl PlumbingGraph {
    pub fn new(vertices: Vec<Vertex>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut normalized = Vec::with_capacity(edges.len());
        for (i, &(a, b)) in edges.iter().enumerate() {
            edge_problem(vertices.len(), a, b, &seen)
                .map_or(Ok(()), |msg| Err(Error::InvalidGraph(format!("edge {i}: {msg}"))))?;
            let e = (a.min(b), a.max(b));
            seen.insert(e);
            normalized.push(e);
        }
        Ok(PlumbingGraph {
            vertices,
            edges: normalized,
        })
    }

    /// Graph of spheres with the given weights.
    pub fn spheres(weights: &[i64], edges: &[(usize, usize)]) -> Result<Self> {
        Self::new(weights.iter().map(|&w| Vertex::sphere(w)).collect(), edges.to_vec())
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| match (a == v, b == v) {
                (true, _) => Some(b),
                (_, true) => Some(a),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Intersection form of the plumbing: weights on the diagonal, one per edge.
    pub fn gram(&self) -> IntMatrix {
        let n = self.len();
        let mut q = Matrix::from_fn(n, n, |r, c| {
            if r == c {
                Int::from(self.vertices[r].weight)
            } else {
                Int::zero()
            }
        });
        for &(a, b) in &self.edges {
            q.set(a, b, Int::one());
            q.set(b, a, Int::one());
        }
        q
    }

    pub fn is_negative_definite(&self) -> bool {
        lattice::is_negative_definite(&self.gram()).expect("plumbing forms are symmetric")
    }

    pub fn is_connected(&self) -> bool {
        if self.is_empty() {
            return false;
        }
        let mut seen = vec![false; self.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// The graph read as an intersection pattern. Requires negative weights.
    pub fn intersection_graph(&self) -> Result<WeightedIntersectionGraph> {
        let edges: Vec<_> = self.edges.iter().map(|&(a, b)| (a, b, 1)).collect();
        WeightedIntersectionGraph::new(self.vertices.iter().map(|v| v.weight).collect(), &edges)
    }

    /// Parse `{"vertices": [{"genus": g, "weight": w}, ...], "edges": [[u, v], ...]}`.
    pub fn from_json(text: &str) -> Result<Self, ParseError> {
        let raw: RawGraph = serde_json::from_str(text)?;
        let mut seen = BTreeSet::new();
        for (i, &[a, b]) in raw.edges.iter().enumerate() {
            if let Some(msg) = edge_problem(raw.vertices.len(), a, b, &seen) {
                return Err(ParseError::at_path(format!("edges[{i}]"), msg));
            }
            seen.insert((a.min(b), a.max(b)));
        }
        let edges = raw.edges.iter().map(|&[a, b]| (a, b)).collect();
        Ok(PlumbingGraph::new(raw.vertices, edges).expect("validated above"))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(RawGraph {
            vertices: self.vertices.clone(),
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
        })
        .expect("plain data serializes")
    }

    fn remove_vertex(&mut self, v: usize) {
        self.vertices.remove(v);
        self.edges.retain(|&(a, b)| a != v && b != v);
        for e in &mut self.edges {
            if e.0 > v {
                e.0 -= 1;
            }
            if e.1 > v {
                e.1 -= 1;
            }
        }
    }
}

impl Serialize for PlumbingGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

fn edge_problem(n: usize, a: usize, b: usize, seen: &BTreeSet<(usize, usize)>) -> Option<String> {
    if a >= n || b >= n {
        Some(format!("endpoint out of range for {n} vertices"))
    } else if a == b {
        Some(format!("self-loop at vertex {a}"))
    } else if seen.contains(&(a.min(b), a.max(b))) {
        Some(format!("duplicate edge between {a} and {b}"))
    } else {
        None
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGraph {
    vertices: Vec<Vertex>,
    edges: Vec<[usize; 2]>,
}

/// Vertices `v` with `0 < -weight(v) < degree(v)`.
pub fn bad_vertices(g: &PlumbingGraph) -> Result<Vec<usize>> {
    if let Some((v, x)) = g.vertices.iter().enumerate().find(|(_, x)| x.weight > -1) {
        return Err(Error::NonNegativeWeight {
            vertex: v,
            weight: x.weight,
        });
    }
    Ok((0..g.len())
        .filter(|&v| g.vertices[v].weight.unsigned_abs() < g.degree(v) as u64)
        .collect())
}

/// Connected, acyclic, all genera zero.
pub fn is_tree_of_spheres(g: &PlumbingGraph) -> bool {
    g.is_connected() && g.edges.len() + 1 == g.len() && g.vertices.iter().all(|v| v.genus == 0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlowdownMove {
    /// Original index of the (-1)-sphere removed.
    pub vertex: usize,
    /// Original indices of its neighbors, whose weights went up by one.
    pub neighbors: Vec<usize>,
    /// Whether the two neighbors were joined by a new edge.
    pub joined: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum BlowdownOutcome {
    Minimal {
        graph: PlumbingGraph,
        /// Original index of each surviving vertex.
        labels: Vec<usize>,
        trace: Vec<BlowdownMove>,
    },
    /// Blowing down `vertex` would produce a triple point or a tangency.
    NonGood {
        graph: PlumbingGraph,
        labels: Vec<usize>,
        trace: Vec<BlowdownMove>,
        vertex: usize,
        degree: usize,
    },
}

/// Blow down genus-0 weight-(-1) vertices, lowest index first, until none is
/// left. Degree 0 and 1 are always fine; degree 2 joins the two neighbors
/// unless they already meet. Anything else stops with `NonGood`.
pub fn blowdown_normalize(g: &PlumbingGraph) -> BlowdownOutcome {
    let mut graph = g.clone();
    let mut labels: Vec<usize> = (0..g.len()).collect();
    let mut trace = Vec::new();
    loop {
        let Some(v) = (0..graph.len()).find(|&v| graph.vertices[v] == Vertex::sphere(-1)) else {
            return BlowdownOutcome::Minimal { graph, labels, trace };
        };
        let nbrs = graph.neighbors(v);
        let joinable = match nbrs.as_slice() {
            [] | [_] => false,
            [a, b] if !graph.adjacent(*a, *b) => true,
            _ => {
                return BlowdownOutcome::NonGood {
                    vertex: labels[v],
                    degree: nbrs.len(),
                    graph,
                    labels,
                    trace,
                }
            }
        };
        for &u in &nbrs {
            graph.vertices[u].weight += 1;
        }
        if joinable {
            graph.edges.push((nbrs[0], nbrs[1]));
        }
        trace.push(BlowdownMove {
            vertex: labels[v],
            neighbors: nbrs.iter().map(|&u| labels[u]).collect(),
            joined: joinable,
        });
        graph.remove_vertex(v);
        labels.remove(v);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "vertex", rename_all = "snake_case")]
pub enum SingReason {
    NotNegativeDefinite,
    NonGoodBlowdown(usize),
    PositiveGenusVertex(usize),
    CycleInGraph,
    BadVertex(usize),
}

impl fmt::Display for SingReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingReason::NotNegativeDefinite => write!(f, "plumbing form is not negative definite"),
            SingReason::NonGoodBlowdown(v) => write!(
                f,
                "blowing down vertex {v} leaves a non-transverse intersection; smoothing it yields a \
                 positive genus surface"
            ),
            SingReason::PositiveGenusVertex(v) => write!(f, "vertex {v} has positive genus"),
            SingReason::CycleInGraph => write!(f, "graph contains a cycle; smoothing it yields a torus"),
            SingReason::BadVertex(v) => write!(f, "vertex {v} is bad"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Planarity {
    Planar,
    NonPlanar,
}

impl From<Planarity> for VerdictKind {
    fn from(p: Planarity) -> Self {
        match p {
            Planarity::Planar => VerdictKind::Planar,
            Planarity::NonPlanar => VerdictKind::NonPlanar,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingClassification {
    pub verdict: Planarity,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<SingReason>,
    pub normalized: PlumbingGraph,
    /// Original index of each vertex of `normalized`.
    pub labels: Vec<usize>,
    pub trace: Vec<BlowdownMove>,
    pub caveats: Vec<String>,
}

pub const MINIMAL_RESOLUTION_CAVEAT: &str =
    "checked on the blow-down normal form of the given resolution; other good resolutions are not searched";

/// Planarity of the canonical contact structure on the link of a normal
/// surface singularity with the given good resolution graph.
pub fn classify_singularity_link(g: &PlumbingGraph) -> Result<SingClassification> {
    if !g.is_connected() {
        return Err(Error::InvalidGraph(
            "a resolution graph must be nonempty and connected".into(),
        ));
    }
    let non_planar = |reason, normalized: PlumbingGraph, labels, trace| SingClassification {
        verdict: Planarity::NonPlanar,
        reason: Some(reason),
        normalized,
        labels,
        trace,
        caveats: Vec::new(),
    };
    if !g.is_negative_definite() {
        let labels = (0..g.len()).collect();
        return Ok(non_planar(SingReason::NotNegativeDefinite, g.clone(), labels, Vec::new()));
    }
    let (graph, labels, trace) = match blowdown_normalize(g) {
        BlowdownOutcome::Minimal { graph, labels, trace } => (graph, labels, trace),
        BlowdownOutcome::NonGood {
            graph,
            labels,
            trace,
            vertex,
            ..
        } => return Ok(non_planar(SingReason::NonGoodBlowdown(vertex), graph, labels, trace)),
    };
    if let Some(v) = graph.vertices.iter().position(|v| v.genus > 0) {
        return Ok(non_planar(SingReason::PositiveGenusVertex(labels[v]), graph, labels, trace));
    }
    if !is_tree_of_spheres(&graph) {
        return Ok(non_planar(SingReason::CycleInGraph, graph, labels, trace));
    }
    let bad = bad_vertices(&graph).expect("negative definite forms have negative diagonal");
    if let Some(&v) = bad.first() {
        return Ok(non_planar(SingReason::BadVertex(labels[v]), graph, labels, trace));
    }
    Ok(SingClassification {
        verdict: Planarity::Planar,
        reason: None,
        normalized: graph,
        labels,
        trace,
        caveats: vec![MINIMAL_RESOLUTION_CAVEAT.into()],
    })
}

/// Simple (ADE) surface singularities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AdeType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl AdeType {
    pub fn validate(self) -> Result<Self> {
        match self {
            AdeType::A(n) if n < 1 => Err(Error::InvalidAdeType(self.to_string())),
            AdeType::D(n) if n < 4 => Err(Error::InvalidAdeType(self.to_string())),
            _ => Ok(self),
        }
    }
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdeType::A(n) => write!(f, "A{n}"),
            AdeType::D(n) => write!(f, "D{n}"),
            AdeType::E6 => write!(f, "E6"),
            AdeType::E7 => write!(f, "E7"),
            AdeType::E8 => write!(f, "E8"),
        }
    }
}

impl FromStr for AdeType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidAdeType(s.to_string());
        let mut chars = s.chars();
        let family = chars.next().ok_or_else(bad)?;
        let index: usize = chars.as_str().parse().map_err(|_| bad())?;
        let t = match (family.to_ascii_uppercase(), index) {
            ('A', n) => AdeType::A(n),
            ('D', n) => AdeType::D(n),
            ('E', 6) => AdeType::E6,
            ('E', 7) => AdeType::E7,
            ('E', 8) => AdeType::E8,
            _ => return Err(bad()),
        };
        t.validate().map_err(|_| bad())
    }
}

/// Dual resolution graph of the simple singularity: spheres of weight -2.
///
/// - `A_n`: a chain of `n` vertices;
/// - `D_n`: vertex 0 carries two leaves (1, 2) and a chain 3, ..., n-1;
/// - `E_n`: a chain 0, ..., n-2 with vertex n-1 attached to vertex 2.
pub fn ade_graph(t: AdeType) -> Result<PlumbingGraph> {
    let t = t.validate()?;
    let chain = |range: std::ops::Range<usize>| -> Vec<(usize, usize)> {
        range.clone().zip(range.skip(1)).collect()
    };
    let (n, edges) = match t {
        AdeType::A(n) => (n, chain(0..n)),
        AdeType::D(n) => {
            let mut e = vec![(0, 1), (0, 2)];
            if n > 3 {
                e.push((0, 3));
            }
            e.extend(chain(3..n));
            (n, e)
        }
        AdeType::E6 | AdeType::E7 | AdeType::E8 => {
            let n = match t {
                AdeType::E6 => 6,
                AdeType::E7 => 7,
                _ => 8,
            };
            let mut e = chain(0..n - 1);
            e.push((2, n - 1));
            (n, e)
        }
    };
    PlumbingGraph::spheres(&vec![-2; n], &edges)
}

/// Links of isolated hypersurface singularities in C^3 are planar exactly
/// for the `A_n` family.
pub fn classify_hypersurface(t: AdeType) -> Result<Planarity> {
    Ok(match t.validate()? {
        AdeType::A(_) => Planarity::Planar,
        _ => Planarity::NonPlanar,
    })
}

/// Expansion `-1/r = a_0 - 1/(a_1 - 1/(...))` with every `a_i <= -2`, for
/// rational `r` in `(0, 1)`.
pub fn negative_continued_fraction<T: IntScalar>(r: &Ratio<T>) -> Result<Vec<T>> {
    continued_fraction_capped(r, usize::MAX)
}

fn continued_fraction_capped<T: IntScalar>(r: &Ratio<T>, cap: usize) -> Result<Vec<T>> {
    if !r.numer().is_positive() || r >= &Ratio::one() {
        return Err(Error::RationalOutOfRange(format!("{}/{}", r.numer(), r.denom())));
    }
    // x = 1/r > 1; x = c - 1/x' with c = ceil(x) and x' > 1
    let mut x = r.recip();
    let mut out = Vec::new();
    loop {
        if out.len() >= cap {
            return Err(Error::Invalid(format!("continued fraction longer than {cap} terms")));
        }
        if x.is_integer() {
            out.push(-x.to_integer());
            return Ok(out);
        }
        let c = x.numer().div_ceil(x.denom());
        out.push(-c.clone());
        x = (Ratio::from_integer(c) - x).recip();
    }
}

pub const MAX_SEIFERT_VERTICES: usize = 4096;

/// Star-shaped plumbing for `M(e0; r_1, ..., r_k)`: a central sphere of
/// weight `e0` (vertex 0) and one chain per `r_i`, listed outward from the
/// center, with weights from the negative continued fraction of `-1/r_i`.
///
/// Arms are expanded over `BigInt`, so extreme invariants cannot overflow;
/// graphs with more than [`MAX_SEIFERT_VERTICES`] vertices are refused.
pub fn seifert_graph(e0: i64, rs: &[Rational]) -> Result<PlumbingGraph> {
    let mut weights = vec![e0];
    let mut edges = Vec::new();
    for r in rs {
        let wide = Ratio::new(Int::from(*r.numer()), Int::from(*r.denom()));
        let room = MAX_SEIFERT_VERTICES.saturating_sub(weights.len());
        let arm = continued_fraction_capped(&wide, room)?;
        let mut prev = 0;
        for a in arm {
            let a = a.to_i64().ok_or_else(|| Error::Invalid(format!("arm weight {a} exceeds i64")))?;
            let v = weights.len();
            weights.push(a);
            edges.push((prev, v));
            prev = v;
        }
    }
    PlumbingGraph::spheres(&weights, &edges)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeifertCheck {
    pub graph: PlumbingGraph,
    pub verdict: VerdictKind,
    pub reason: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub configuration: Option<BadConfiguration>,
    pub caveats: Vec<String>,
}

pub const LSPACE_CAVEAT: &str = "L-space hypothesis not asserted";

/// Graph-side check for small Seifert fibered spaces `M(e0; r1, r2, r3)`.
///
/// Every tight structure on an L-space `M(-2; r1, r2, r3)` is filled by a
/// Legendrian realization of the star plumbing, so a bad configuration there
/// rules out planarity for all of them. The L-space property is taken on
/// trust from the caller.
pub fn seifert_planarity_check(e0: i64, rs: &[Rational], is_lspace: bool) -> Result<SeifertCheck> {
    if rs.len() != 3 {
        return Err(Error::Invalid(format!(
            "small Seifert fibered spaces take three invariants, got {}",
            rs.len()
        )));
    }
    let graph = seifert_graph(e0, rs)?;
    let mut caveats = vec![
        "tight contact structures are assumed to come from Legendrian realizations of this plumbing"
            .to_string(),
    ];
    let configuration = if e0 <= -2 {
        detect_bad_configuration(&graph.intersection_graph()?)
    } else {
        caveats.push(format!(
            "central weight {e0} has no Legendrian realization as a Stein plumbing; detector not applied"
        ));
        None
    };
    let (verdict, reason) = match &configuration {
        Some(c) if is_lspace && e0 == -2 => (
            VerdictKind::NonPlanar,
            format!(
                "no tight contact structure is planar: star configuration with k = {} around a center of square {}",
                c.k(),
                c.center_square
            ),
        ),
        Some(c) => {
            if !is_lspace {
                caveats.push(LSPACE_CAVEAT.into());
            }
            if e0 != -2 {
                caveats.push("star criterion covers e0 = -2 only".into());
            }
            (
                VerdictKind::Obstructed,
                format!(
                    "the Stein plumbing filling contains a star configuration with k = {} around a center of square {}",
                    c.k(),
                    c.center_square
                ),
            )
        }
        None => (
            VerdictKind::Inconclusive,
            "no star configuration in the plumbing graph".to_string(),
        ),
    };
    Ok(SeifertCheck {
        graph,
        verdict,
        reason,
        configuration,
        caveats,
    })
}

/// Parse `p/q` (or an integer) into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Invalid(format!("not a rational number: {s:?}"));
    let (p, q) = match s.trim().split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p: i64 = p.parse().map_err(|_| bad())?;
    let q: i64 = q.parse().map_err(|_| bad())?;
    // i64::MIN has no negation, which normalizing the sign may need
    if q.is_zero() || p == i64::MIN || q == i64::MIN {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

/// Gram determinant as an integer, for traced blow-down runs.
pub fn gram_determinant(g: &PlumbingGraph) -> Int {
    g.gram().determinant()
}
