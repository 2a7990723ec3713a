//! 1-critical-vertex patterns and the two reduction algorithms.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::engine::{max_genus_exhaustive, EngineError, SearchConfig};
use crate::families::{generate, labelled_edges, neckband_partner, FamilyGraph, FamilySpec};
use crate::graph::{EdgeId, GraphError, Multigraph, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CriticalError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("family labels: {0}")]
    Labels(String),
    #[error("algorithm II needs a spiral or extended spiral, got {0}")]
    NotSpiral(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CriticalKind {
    Alpha,
    Beta,
    Gamma,
    Delta,
    Eta,
}

impl fmt::Display for CriticalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CriticalKind::Alpha => "alpha",
            CriticalKind::Beta => "beta",
            CriticalKind::Gamma => "gamma",
            CriticalKind::Delta => "delta",
            CriticalKind::Eta => "eta",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// The loop at the vertex and its one other edge.
    Alpha { loop_edge: EdgeId, edge: EdgeId },
    /// The doubled neighbour and the parallel pair.
    Beta { neighbor: VertexId, pair: [EdgeId; 2] },
    /// Diamond partner `u` and common neighbours `x`, `y`.
    Gamma { u: VertexId, x: VertexId, y: VertexId },
    /// `v_1 … v_{2n}` of the ladder or neckband.
    Delta(Vec<VertexId>),
    Eta(Vec<VertexId>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalFinding {
    pub kind: CriticalKind,
    pub vertex: VertexId,
    pub certificate: Certificate,
}

impl CriticalFinding {
    /// Re-derives the certificate from `g`.
    pub fn validate(&self, g: &Multigraph) -> bool {
        let again = match self.kind {
            CriticalKind::Alpha => detect_alpha(g),
            CriticalKind::Beta => detect_beta(g),
            CriticalKind::Gamma => detect_gamma(g),
            CriticalKind::Delta => detect_delta(g),
            CriticalKind::Eta => detect_eta(g),
        };
        again.iter().any(|f| f.vertex == self.vertex)
            && match &self.certificate {
                Certificate::Delta(l) => is_mobius_ladder(g).is_some() && l.len() == g.vertex_count(),
                Certificate::Eta(l) => is_neckband(g).is_some() && l.len() == g.vertex_count(),
                _ => again.contains(self),
            }
    }
}

fn connected_without(g: &Multigraph, v: VertexId) -> bool {
    g.delete_vertex(v).is_ok_and(|h| h.is_connected())
}

/// Vertices carrying one loop and exactly one other edge.
pub fn detect_alpha(g: &Multigraph) -> Vec<CriticalFinding> {
    g.vertices()
        .filter(|&v| g.degree(v) == 3 && g.loop_count(v) == 1)
        .map(|v| {
            let ends = g.incident_ends(v);
            let loop_edge = ends.iter().find(|e| g.is_loop(e.edge)).expect("loop").edge;
            let edge = ends.iter().find(|e| !g.is_loop(e.edge)).expect("edge").edge;
            CriticalFinding {
                kind: CriticalKind::Alpha,
                vertex: v,
                certificate: Certificate::Alpha { loop_edge, edge },
            }
        })
        .collect()
}

/// Degree-3 vertices with a double edge to a degree-3 neighbour.
pub fn detect_beta(g: &Multigraph) -> Vec<CriticalFinding> {
    let mut out = Vec::new();
    for v in g.vertices() {
        if g.degree(v) != 3 || g.loop_count(v) != 0 {
            continue;
        }
        let Some((&u, _)) = g.neighbor_multiset(v).iter().find(|(_, &c)| c == 2) else {
            continue;
        };
        if g.degree(u) != 3 || !connected_without(g, v) {
            continue;
        }
        let pair = g.edges_between(v, u);
        out.push(CriticalFinding {
            kind: CriticalKind::Beta,
            vertex: v,
            certificate: Certificate::Beta {
                neighbor: u,
                pair: [pair[0], pair[1]],
            },
        });
    }
    out
}

fn simple_neighbors(g: &Multigraph, v: VertexId) -> Option<BTreeSet<VertexId>> {
    if g.degree(v) != 3 || g.loop_count(v) != 0 {
        return None;
    }
    let nb = g.neighbor_multiset(v);
    (nb.len() == 3).then(|| nb.into_keys().collect())
}

/// Degree-3 vertices `v` with a degree-3 neighbour `u` such that
/// `N(u) = {v} ∪ N(v) \ {u}`, all edges simple.
pub fn detect_gamma(g: &Multigraph) -> Vec<CriticalFinding> {
    let mut out = Vec::new();
    for v in g.vertices() {
        let Some(nv) = simple_neighbors(g, v) else { continue };
        let partner = nv.iter().copied().find(|&u| {
            simple_neighbors(g, u).is_some_and(|nu| {
                let mut want = nv.clone();
                want.remove(&u);
                want.insert(v);
                nu == want
            })
        });
        let Some(u) = partner else { continue };
        if !connected_without(g, v) {
            continue;
        }
        let rest: Vec<VertexId> = nv.iter().copied().filter(|&w| w != u).collect();
        out.push(CriticalFinding {
            kind: CriticalKind::Gamma,
            vertex: v,
            certificate: Certificate::Gamma {
                u,
                x: rest[0],
                y: rest[1],
            },
        });
    }
    out
}

fn whole_graph(kind: CriticalKind, labeling: Option<Vec<VertexId>>, g: &Multigraph) -> Vec<CriticalFinding> {
    let Some(labeling) = labeling else { return Vec::new() };
    let v = g.vertices().next().expect("nonempty");
    if !connected_without(g, v) {
        return Vec::new();
    }
    let certificate = match kind {
        CriticalKind::Delta => Certificate::Delta(labeling),
        _ => Certificate::Eta(labeling),
    };
    vec![CriticalFinding {
        kind,
        vertex: v,
        certificate,
    }]
}

/// The lowest vertex when the whole graph is a Möbius ladder.
pub fn detect_delta(g: &Multigraph) -> Vec<CriticalFinding> {
    whole_graph(CriticalKind::Delta, is_mobius_ladder(g), g)
}

/// The lowest vertex when the whole graph is a neckband.
pub fn detect_eta(g: &Multigraph) -> Vec<CriticalFinding> {
    whole_graph(CriticalKind::Eta, is_neckband(g), g)
}

/// `n` when `g` is loopless cubic on `2n >= 4` vertices.
fn cubic_half_order(g: &Multigraph) -> Option<usize> {
    let order = g.vertex_count();
    let cubic = g.vertices().all(|v| g.degree(v) == 3 && g.loop_count(v) == 0);
    (cubic && order >= 4 && order.is_multiple_of(2) && 2 * g.edge_count() == 3 * order).then_some(order / 2)
}

fn pair(a: VertexId, b: VertexId) -> (VertexId, VertexId) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Calls `visit(cycle_vertices, chord_pairs)` for each Hamiltonian cycle
/// through the lowest vertex until it returns a labeling.
fn search_hamiltonian<T>(
    g: &Multigraph,
    mut visit: impl FnMut(&[VertexId], &[(VertexId, VertexId)]) -> Option<T>,
) -> Option<T> {
    struct Walk<'a> {
        g: &'a Multigraph,
        path: Vec<VertexId>,
        edges: Vec<EdgeId>,
        on_path: BTreeSet<VertexId>,
    }
    fn chords(w: &Walk<'_>, closing: EdgeId) -> Vec<(VertexId, VertexId)> {
        let used: BTreeSet<EdgeId> = w.edges.iter().copied().chain([closing]).collect();
        let mut out: Vec<_> = w
            .g
            .edges()
            .filter(|(e, _)| !used.contains(e))
            .map(|(_, [a, b])| pair(a, b))
            .collect();
        out.sort();
        out
    }
    fn go<T>(
        w: &mut Walk<'_>,
        visit: &mut dyn FnMut(&[VertexId], &[(VertexId, VertexId)]) -> Option<T>,
    ) -> Option<T> {
        let last = *w.path.last().expect("nonempty");
        let start = w.path[0];
        if w.path.len() == w.g.vertex_count() {
            for e in w.g.edges_between(last, start) {
                if !w.edges.contains(&e) {
                    let c = chords(w, e);
                    if let Some(t) = visit(&w.path, &c) {
                        return Some(t);
                    }
                }
            }
            return None;
        }
        for end in w.g.incident_ends(last) {
            let next = w.g.end_vertex(end.opposite()).expect("edge present");
            if w.on_path.contains(&next) {
                continue;
            }
            w.path.push(next);
            w.edges.push(end.edge);
            w.on_path.insert(next);
            let found = go(w, visit);
            w.on_path.remove(&next);
            w.edges.pop();
            w.path.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
    let start = g.vertices().next()?;
    let mut walk = Walk {
        g,
        path: vec![start],
        edges: Vec::new(),
        on_path: BTreeSet::from([start]),
    };
    go(&mut walk, &mut visit)
}

/// Labeling `v_1 … v_{2n}` with rungs `(v_i, v_{i+n})`, if `g` is `M_{2n}`.
pub fn is_mobius_ladder(g: &Multigraph) -> Option<Vec<VertexId>> {
    let n = cubic_half_order(g)?;
    search_hamiltonian(g, |cycle, chords| {
        let mut want: Vec<_> = (0..n).map(|i| pair(cycle[i], cycle[i + n])).collect();
        want.sort();
        (want == chords).then(|| cycle.to_vec())
    })
}

/// Labeling `v_1 … v_{2n}` with chords `(v_{2i-1}, v_{2i+2 mod 2n})`, if
/// `g` is `N_{2n}`.
pub fn is_neckband(g: &Multigraph) -> Option<Vec<VertexId>> {
    let n = cubic_half_order(g)?;
    let len = 2 * n;
    search_hamiltonian(g, |cycle, chords| {
        for offset in 0..len {
            for forward in [true, false] {
                let label = |k: usize| {
                    let step = k - 1;
                    let idx = if forward {
                        (offset + step) % len
                    } else {
                        (offset + len - step % len) % len
                    };
                    cycle[idx]
                };
                let mut want: Vec<_> = (1..=n)
                    .map(|i| pair(label(2 * i - 1), label(neckband_partner(n, i))))
                    .collect();
                want.sort();
                if want == chords {
                    return Some((1..=len).map(label).collect());
                }
            }
        }
        None
    })
}

/// First 1-critical vertex by kind priority beta, gamma, delta, eta, then
/// lowest id.
pub fn find_1_critical(g: &Multigraph) -> Option<CriticalFinding> {
    detect_beta(g)
        .into_iter()
        .next()
        .or_else(|| detect_gamma(g).into_iter().next())
        .or_else(|| detect_delta(g).into_iter().next())
        .or_else(|| detect_eta(g).into_iter().next())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    Alpha,
    Beta,
    Gamma,
    Delta,
    Eta,
    /// Deletion of `v_{m+2n-2}` from a labelled spiral.
    SpiralTail,
}

impl From<CriticalKind> for StepKind {
    fn from(k: CriticalKind) -> Self {
        match k {
            CriticalKind::Alpha => StepKind::Alpha,
            CriticalKind::Beta => StepKind::Beta,
            CriticalKind::Gamma => StepKind::Gamma,
            CriticalKind::Delta => StepKind::Delta,
            CriticalKind::Eta => StepKind::Eta,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphSize {
    pub v: usize,
    pub e: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub kind: StepKind,
    #[serde(serialize_with = "vertex_number")]
    pub vertex: VertexId,
    /// Whether the step adds one to the total.
    pub counted: bool,
    pub graph_after: GraphSize,
}

fn vertex_number<S: Serializer>(v: &VertexId, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u32(v.0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub steps: Vec<TraceStep>,
    #[serde(skip)]
    pub base_graph: Multigraph,
    pub base_genus: usize,
    pub total: usize,
}

impl ReductionTrace {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace serializes")
    }

    pub fn counted(&self) -> usize {
        self.steps.iter().filter(|s| s.counted).count()
    }
}

fn size(g: &Multigraph) -> GraphSize {
    GraphSize {
        v: g.vertex_count(),
        e: g.edge_count(),
    }
}

/// Deletes 1-critical vertices until none is left, then searches the rest.
///
/// Alpha vertices are deleted as they appear without counting.
pub fn algorithm_one(g: &Multigraph, config: &SearchConfig) -> Result<ReductionTrace, CriticalError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    let mut g = g.cleanup();
    let mut steps = Vec::new();
    loop {
        let (finding, counted) = match detect_alpha(&g).into_iter().next() {
            Some(f) => (f, false),
            None => match find_1_critical(&g) {
                Some(f) => (f, true),
                None => break,
            },
        };
        g = g.delete_vertex(finding.vertex)?.cleanup();
        steps.push(TraceStep {
            kind: finding.kind.into(),
            vertex: finding.vertex,
            counted,
            graph_after: size(&g),
        });
    }
    let base_genus = max_genus_exhaustive(&g, config)?.max_genus;
    let total = base_genus + steps.iter().filter(|s| s.counted).count();
    Ok(ReductionTrace {
        steps,
        base_graph: g,
        base_genus,
        total,
    })
}

fn is_plain_spiral(g: &Multigraph, m: usize, n: usize) -> Result<bool, CriticalError> {
    let plain = generate(&FamilySpec::Spiral { m, n }).map_err(|e| CriticalError::Labels(e.to_string()))?;
    Ok(labelled_edges(g) == labelled_edges(&plain.graph.cleanup()))
}

/// Collapses gadgets by gamma deletions, then peels the spiral from its
/// last ear until a cactus remains; the total is `i + j + 1`.
pub fn algorithm_two(family: &FamilyGraph) -> Result<ReductionTrace, CriticalError> {
    let (m, mut n) = match family.spec {
        FamilySpec::Spiral { m, n } | FamilySpec::ExtendedSpiral { m, n, .. } => (m, n),
        ref other => return Err(CriticalError::NotSpiral(other.to_string())),
    };
    if family.graph.vertices().any(|v| family.graph.vertex_label(v).is_none()) {
        return Err(CriticalError::Labels("unlabelled vertex".into()));
    }
    let in_gadget = |g: &Multigraph, v: VertexId| g.vertex_label(v).is_some_and(|l| l.starts_with('g'));
    let mut g = family.graph.cleanup();
    let mut steps = Vec::new();
    while let Some(f) = detect_gamma(&g).into_iter().find(|f| in_gadget(&g, f.vertex)) {
        g = g.delete_vertex(f.vertex)?.cleanup();
        steps.push(TraceStep {
            kind: StepKind::Gamma,
            vertex: f.vertex,
            counted: true,
            graph_after: size(&g),
        });
    }
    loop {
        if !is_plain_spiral(&g, m, n)? {
            return Err(CriticalError::Labels(format!("remainder is not the labelled spiral S_{m}^{n}")));
        }
        let label = format!("v{}", m + 2 * n - 2);
        let v = g
            .vertex_by_label(&label)
            .ok_or_else(|| CriticalError::Labels(format!("{label} missing")))?;
        g = g.delete_vertex(v)?.cleanup();
        let done = g.is_cactus();
        steps.push(TraceStep {
            kind: StepKind::SpiralTail,
            vertex: v,
            counted: !done,
            graph_after: size(&g),
        });
        if done {
            break;
        }
        n -= 2;
    }
    let total = steps.iter().filter(|s| s.counted).count() + 1;
    Ok(ReductionTrace {
        steps,
        base_graph: g,
        base_genus: 0,
        total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::max_genus;
    use crate::families::v;

    fn k4() -> Multigraph {
        Multigraph::from_edges(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    fn family(s: &str) -> FamilyGraph {
        generate(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn alpha_detection() {
        // Loop at 3, edge 3-0, triangle 0 1 2.
        let g = Multigraph::from_edges(&[(0, 1), (1, 2), (2, 0), (0, 3), (3, 3)]);
        let found: Vec<VertexId> = detect_alpha(&g).iter().map(|f| f.vertex).collect();
        assert_eq!(found, vec![VertexId(3)]);
        assert!(detect_alpha(&k4()).is_empty());
        let two = Multigraph::from_edges(&[(0, 1), (1, 2), (2, 0), (0, 3), (3, 3), (1, 4), (4, 4)]);
        let found: Vec<VertexId> = detect_alpha(&two).iter().map(|f| f.vertex).collect();
        assert_eq!(found, vec![VertexId(3), VertexId(4)]);
    }

    #[test]
    fn beta_detection() {
        // K4 with edge 0-1 replaced by 0-4=5-1.
        let g = Multigraph::from_edges(&[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 5), (4, 5), (5, 1)]);
        let found: Vec<VertexId> = detect_beta(&g).iter().map(|f| f.vertex).collect();
        assert_eq!(found, vec![VertexId(4), VertexId(5)]);
        assert!(detect_beta(&k4()).is_empty());
        // Digon 4=5 on a bridge path 0-4=5-6, loop at 6.
        let cut = Multigraph::from_edges(&[(0, 1), (1, 2), (2, 0), (0, 4), (4, 5), (4, 5), (5, 6), (6, 6)]);
        assert!(detect_beta(&cut).is_empty());
    }

    #[test]
    fn gamma_detection() {
        let found: Vec<VertexId> = detect_gamma(&k4()).iter().map(|f| f.vertex).collect();
        assert_eq!(found.len(), 4);
        let f = family("extspiral:5,6:13-14");
        let gadget = &f.gadgets[0];
        let found: Vec<VertexId> = detect_gamma(&f.graph).iter().map(|f| f.vertex).collect();
        assert!(found.contains(&gadget.vertices[3]) && found.contains(&gadget.vertices[4]));
    }

    #[test]
    fn ladder_recognition() {
        let m6 = family("mobius:3").graph;
        assert!(is_mobius_ladder(&m6).is_some());
        let n8 = family("neckband:4").graph;
        let labels = is_neckband(&n8).unwrap();
        assert_eq!(labels.len(), 8);
        assert!(is_mobius_ladder(&n8).is_none());
        assert!(is_mobius_ladder(&k4()).is_some());
        assert!(is_neckband(&k4()).is_none());
        assert!(is_neckband(&family("neckband:2").graph).is_some());
        assert!(is_mobius_ladder(&family("cycle:5").graph).is_none());
    }

    #[test]
    fn find_1_critical_examples() {
        let m6 = family("mobius:3").graph;
        let f = find_1_critical(&m6).unwrap();
        assert_eq!((f.kind, f.vertex), (CriticalKind::Delta, v(1)));
        assert!(f.validate(&m6));
        assert!(find_1_critical(&family("cycle:5").graph).is_none());
        let f = find_1_critical(&family("extspiral:5,6:13-14").graph).unwrap();
        assert_eq!(f.kind, CriticalKind::Gamma);
    }

    #[test]
    fn algorithm_one_small() {
        let config = SearchConfig::default();
        for (g, want) in [
            (family("mobius:3").graph, 2),
            (family("neckband:4").graph, 2),
            (k4(), 1),
        ] {
            let t = algorithm_one(&g, &config).unwrap();
            assert_eq!(t.total, want);
            assert_eq!(max_genus(&g).unwrap(), want);
        }
        let t = algorithm_one(&k4(), &config).unwrap();
        assert_eq!(t.steps[0].kind, StepKind::Gamma);
        assert_eq!(t.base_genus, 0);
    }

    #[test]
    fn algorithm_two_examples() {
        let t = algorithm_two(&family("spiral:5,6")).unwrap();
        assert_eq!(t.total, 3);
        let tails: Vec<u32> = t.steps.iter().map(|s| s.vertex.0).collect();
        assert_eq!(tails, vec![15, 11, 7]);
        let t = algorithm_two(&family("extspiral:5,6:13-14")).unwrap();
        let gammas = t.steps.iter().filter(|s| s.kind == StepKind::Gamma).count();
        assert_eq!((gammas, t.total), (2, 5));
        assert!(algorithm_two(&family("mobius:3")).is_err());
    }

    #[test]
    fn trace_json_shape() {
        let t = algorithm_two(&family("spiral:5,6")).unwrap();
        let v: serde_json::Value = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(v["total"], 3);
        assert_eq!(v["base_genus"], 0);
        assert_eq!(v["steps"][0]["kind"], "spiral_tail");
        assert_eq!(v["steps"][0]["vertex"], 15);
        assert!(v["steps"][0]["graph_after"]["v"].is_number());
    }
}
