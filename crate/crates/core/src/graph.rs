//! Multigraphs with loops and parallel edges, plus the surgeries used by the
//! reduction algorithms: vertex deletion, degree-1 pruning, degree-2
//! smoothing, edge contraction and vertex splitting.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::surface::Dsu;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} is not present")]
    MissingVertex(VertexId),
    #[error("edge {0} is not present")]
    MissingEdge(EdgeId),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("invalid split: {0}")]
    InvalidSplit(String),
    #[error("not a spanning tree: {0}")]
    NotSpanningTree(String),
    #[error("cannot contract loop {0}")]
    ContractLoop(EdgeId),
    #[error("edge list line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One end of an edge. Side 0 sits at the edge's first endpoint, side 1 at
/// the second; a loop owns both sides at one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeEnd {
    pub edge: EdgeId,
    pub side: u8,
}

impl EdgeEnd {
    pub fn new(edge: EdgeId, side: u8) -> Self {
        debug_assert!(side < 2);
        EdgeEnd { edge, side }
    }

    pub fn opposite(self) -> Self {
        EdgeEnd::new(self.edge, 1 - self.side)
    }
}

impl fmt::Display for EdgeEnd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.edge.0, self.side)
    }
}

/// Undirected multigraph addressed by stable identifiers.
///
/// Surgeries return new values; edge ids survive them, and edges minted by
/// smoothing record the pair of ids they absorbed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Multigraph {
    vertices: BTreeSet<VertexId>,
    edges: BTreeMap<EdgeId, [VertexId; 2]>,
    vertex_labels: BTreeMap<VertexId, String>,
    edge_labels: BTreeMap<EdgeId, String>,
    provenance: BTreeMap<EdgeId, (EdgeId, EdgeId)>,
    next_edge: u32,
}

impl Multigraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from an edge list; edge ids follow list order from 0.
    pub fn from_edges(edges: &[(u32, u32)]) -> Self {
        let mut g = Multigraph::new();
        for &(u, v) in edges {
            g.add_vertex(VertexId(u));
            g.add_vertex(VertexId(v));
            g.add_edge(VertexId(u), VertexId(v));
        }
        g
    }

    pub fn add_vertex(&mut self, v: VertexId) {
        self.vertices.insert(v);
    }

    /// Adds an edge, inserting missing endpoints.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> EdgeId {
        self.vertices.insert(u);
        self.vertices.insert(v);
        let id = EdgeId(self.next_edge);
        self.next_edge += 1;
        self.edges.insert(id, [u, v]);
        id
    }

    pub fn set_vertex_label(&mut self, v: VertexId, label: impl Into<String>) {
        self.vertex_labels.insert(v, label.into());
    }

    pub fn set_edge_label(&mut self, e: EdgeId, label: impl Into<String>) {
        self.edge_labels.insert(e, label.into());
    }

    pub fn vertex_label(&self, v: VertexId) -> Option<&str> {
        self.vertex_labels.get(&v).map(String::as_str)
    }

    pub fn edge_label(&self, e: EdgeId) -> Option<&str> {
        self.edge_labels.get(&e).map(String::as_str)
    }

    pub fn vertex_labels(&self) -> &BTreeMap<VertexId, String> {
        &self.vertex_labels
    }

    /// Vertex carrying the given label.
    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.vertex_labels
            .iter()
            .find(|(_, l)| l.as_str() == label)
            .map(|(&v, _)| v)
    }

    /// Display name of an edge: its label or `e<id>`.
    pub fn edge_name(&self, e: EdgeId) -> String {
        self.edge_label(e)
            .map(str::to_string)
            .unwrap_or_else(|| format!("e{}", e.0))
    }

    /// The pair of edges a smoothed edge replaced.
    pub fn provenance(&self, e: EdgeId) -> Option<(EdgeId, EdgeId)> {
        self.provenance.get(&e).copied()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, [VertexId; 2])> + '_ {
        self.edges.iter().map(|(&e, &ends)| (e, ends))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.keys().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn endpoints(&self, e: EdgeId) -> Option<[VertexId; 2]> {
        self.edges.get(&e).copied()
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        self.edges.get(&e).is_some_and(|[u, v]| u == v)
    }

    /// Vertex at a given edge end.
    pub fn end_vertex(&self, end: EdgeEnd) -> Option<VertexId> {
        self.edges.get(&end.edge).map(|ends| ends[end.side as usize])
    }

    /// Edge-ends at `v`, sorted by (edge id, side). Loops contribute two.
    pub fn incident_ends(&self, v: VertexId) -> Vec<EdgeEnd> {
        let mut out = Vec::new();
        for (&e, &[a, b]) in &self.edges {
            if a == v {
                out.push(EdgeEnd::new(e, 0));
            }
            if b == v {
                out.push(EdgeEnd::new(e, 1));
            }
        }
        out
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: VertexId) -> usize {
        self.edges
            .values()
            .map(|&[a, b]| usize::from(a == v) + usize::from(b == v))
            .sum()
    }

    pub fn degrees(&self) -> BTreeMap<VertexId, usize> {
        let mut deg: BTreeMap<VertexId, usize> = self.vertices.iter().map(|&v| (v, 0)).collect();
        for &[a, b] in self.edges.values() {
            *deg.entry(a).or_default() += 1;
            *deg.entry(b).or_default() += 1;
        }
        deg
    }

    /// Neighbours of `v` over non-loop edges, with multiplicity.
    pub fn neighbor_multiset(&self, v: VertexId) -> BTreeMap<VertexId, usize> {
        let mut out: BTreeMap<VertexId, usize> = BTreeMap::new();
        for &[a, b] in self.edges.values() {
            if a == b {
                continue;
            }
            if a == v {
                *out.entry(b).or_default() += 1;
            } else if b == v {
                *out.entry(a).or_default() += 1;
            }
        }
        out
    }

    pub fn loop_count(&self, v: VertexId) -> usize {
        self.edges.values().filter(|&&[a, b]| a == v && b == v).count()
    }

    /// Edges joining `u` and `v` (for `u == v`, the loops at `u`).
    pub fn edges_between(&self, u: VertexId, v: VertexId) -> Vec<EdgeId> {
        self.edges
            .iter()
            .filter(|(_, &[a, b])| (a == u && b == v) || (a == v && b == u))
            .map(|(&e, _)| e)
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_without(&BTreeSet::new())
    }

    fn is_connected_without(&self, skip: &BTreeSet<EdgeId>) -> bool {
        let Some(&start) = self.vertices.iter().next() else {
            return true;
        };
        let mut adj: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        for (e, &[a, b]) in &self.edges {
            if !skip.contains(e) {
                adj.entry(a).or_default().push(b);
                adj.entry(b).or_default().push(a);
            }
        }
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in adj.get(&u).map(Vec::as_slice).unwrap_or_default() {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen.len() == self.vertices.len()
    }

    /// Cycle rank `|E| - |V| + 1`.
    pub fn betti(&self) -> Result<usize, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok((self.edges.len() + 1).saturating_sub(self.vertices.len().max(1)))
    }

    /// Removes `v` and every incident edge.
    pub fn delete_vertex(&self, v: VertexId) -> Result<Multigraph, GraphError> {
        if !self.has_vertex(v) {
            return Err(GraphError::MissingVertex(v));
        }
        let mut g = self.clone();
        g.vertices.remove(&v);
        g.vertex_labels.remove(&v);
        let gone: Vec<EdgeId> = g
            .edges
            .iter()
            .filter(|(_, &[a, b])| a == v || b == v)
            .map(|(&e, _)| e)
            .collect();
        for e in gone {
            g.remove_edge(e);
        }
        Ok(g)
    }

    pub(crate) fn remove_edge(&mut self, e: EdgeId) {
        self.edges.remove(&e);
        self.edge_labels.remove(&e);
        self.provenance.remove(&e);
    }

    /// Prunes degree-1 vertices and smooths degree-2 vertices to fixpoint.
    ///
    /// Each round prunes every degree-1 vertex (lowest id first) before
    /// smoothing the lowest-id smoothable degree-2 vertex. A degree-2 vertex
    /// whose only edge is a loop is left alone, and the last vertex is never
    /// removed.
    pub fn cleanup(&self) -> Multigraph {
        let mut g = self.clone();
        loop {
            let deg = g.degrees();
            if g.vertices.len() > 1 {
                if let Some((&v, _)) = deg.iter().find(|(_, &d)| d <= 1) {
                    g = g.delete_vertex(v).expect("vertex present");
                    continue;
                }
            }
            let smoothable = deg
                .iter()
                .filter(|(_, &d)| d == 2)
                .map(|(&v, _)| v)
                .find(|&v| g.loop_count(v) == 0);
            match smoothable {
                Some(v) => g.smooth(v),
                None => return g,
            }
        }
    }

    /// Replaces the two edges at degree-2 vertex `v` by one edge.
    fn smooth(&mut self, v: VertexId) {
        let ends = self.incident_ends(v);
        debug_assert_eq!(ends.len(), 2);
        let (e1, e2) = (ends[0].edge, ends[1].edge);
        let far = |g: &Multigraph, end: EdgeEnd| g.end_vertex(end.opposite()).expect("edge present");
        let (a, b) = (far(self, ends[0]), far(self, ends[1]));
        self.remove_edge(e1);
        self.remove_edge(e2);
        self.vertices.remove(&v);
        self.vertex_labels.remove(&v);
        let e = self.add_edge(a, b);
        self.provenance.insert(e, (e1, e2));
    }

    /// Merges the endpoints of non-loop edge `e` into its first endpoint.
    pub fn contract_edge(&self, e: EdgeId) -> Result<Multigraph, GraphError> {
        let [u, v] = self.endpoints(e).ok_or(GraphError::MissingEdge(e))?;
        if u == v {
            return Err(GraphError::ContractLoop(e));
        }
        let mut g = self.clone();
        g.remove_edge(e);
        for ends in g.edges.values_mut() {
            for x in ends.iter_mut() {
                if *x == v {
                    *x = u;
                }
            }
        }
        g.vertices.remove(&v);
        g.vertex_labels.remove(&v);
        Ok(g)
    }

    fn next_vertex_id(&self) -> VertexId {
        VertexId(self.vertices.iter().next_back().map_or(0, |v| v.0 + 1))
    }

    /// Splits `v`: ends in `block` stay on `v`, the rest move to a new
    /// vertex, and a new edge joins the two. Returns the new vertex id.
    pub fn split_vertex(
        &self,
        v: VertexId,
        block: &BTreeSet<EdgeEnd>,
    ) -> Result<(Multigraph, VertexId, EdgeId), GraphError> {
        if !self.has_vertex(v) {
            return Err(GraphError::MissingVertex(v));
        }
        let ends = self.incident_ends(v);
        if let Some(bad) = block.iter().find(|end| !ends.contains(end)) {
            return Err(GraphError::InvalidSplit(format!("{bad} is not incident to {v}")));
        }
        if block.is_empty() || block.len() == ends.len() {
            return Err(GraphError::InvalidSplit("both blocks must be nonempty".into()));
        }
        let mut g = self.clone();
        let w = g.next_vertex_id();
        g.vertices.insert(w);
        for end in ends.iter().filter(|end| !block.contains(end)) {
            g.edges.get_mut(&end.edge).expect("edge present")[end.side as usize] = w;
        }
        let link = g.add_edge(v, w);
        Ok((g, w, link))
    }

    /// Spanning tree by breadth-first search from the lowest vertex, or
    /// validation of an explicit edge set.
    pub fn spanning_tree(&self, strategy: &TreeStrategy) -> Result<SpanningTree, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let tree_edges: BTreeSet<EdgeId> = match strategy {
            TreeStrategy::Search => {
                let mut tree = BTreeSet::new();
                let Some(&start) = self.vertices.iter().next() else {
                    return Ok(SpanningTree::default());
                };
                let mut seen = BTreeSet::from([start]);
                let mut queue = VecDeque::from([start]);
                while let Some(u) = queue.pop_front() {
                    for end in self.incident_ends(u) {
                        let w = self.end_vertex(end.opposite()).expect("edge present");
                        if seen.insert(w) {
                            tree.insert(end.edge);
                            queue.push_back(w);
                        }
                    }
                }
                tree
            }
            TreeStrategy::Explicit(set) => {
                self.validate_tree(set)?;
                set.clone()
            }
        };
        let cotree_edges = self
            .edges
            .keys()
            .copied()
            .filter(|e| !tree_edges.contains(e))
            .collect();
        Ok(SpanningTree {
            tree_edges,
            cotree_edges,
        })
    }

    fn validate_tree(&self, set: &BTreeSet<EdgeId>) -> Result<(), GraphError> {
        if let Some(e) = set.iter().find(|e| !self.edges.contains_key(e)) {
            return Err(GraphError::NotSpanningTree(format!("edge {e} not in graph")));
        }
        if set.len() + 1 != self.vertices.len() {
            return Err(GraphError::NotSpanningTree(format!(
                "{} edges for {} vertices",
                set.len(),
                self.vertices.len()
            )));
        }
        let index: BTreeMap<VertexId, usize> =
            self.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut dsu = Dsu::new(index.len());
        for e in set {
            let [a, b] = self.edges[e];
            if !dsu.union(index[&a], index[&b]) {
                return Err(GraphError::NotSpanningTree(format!("edge {e} closes a cycle")));
            }
        }
        Ok(())
    }

    /// Edges whose removal disconnects the graph.
    pub fn bridges(&self) -> BTreeSet<EdgeId> {
        self.edges
            .iter()
            .filter(|(_, [a, b])| a != b)
            .map(|(&e, _)| e)
            .filter(|&e| !self.is_connected_without(&BTreeSet::from([e])))
            .collect()
    }

    /// True iff all circuits are pairwise vertex-disjoint.
    ///
    /// Loops count as circuits. With bridges removed, every remaining
    /// component must be a single circuit, i.e. every vertex has degree 0
    /// or 2.
    pub fn is_cactus(&self) -> bool {
        let bridges = self.bridges();
        let mut deg: BTreeMap<VertexId, usize> = BTreeMap::new();
        for (e, &[a, b]) in &self.edges {
            if !bridges.contains(e) {
                *deg.entry(a).or_default() += 1;
                *deg.entry(b).or_default() += 1;
            }
        }
        deg.values().all(|&d| d == 0 || d == 2)
    }

    /// Renumbers edges densely from 0 in id order, keeping labels.
    pub fn compacted_edges(&self) -> Multigraph {
        let mut g = Multigraph::new();
        for &v in &self.vertices {
            g.add_vertex(v);
        }
        g.vertex_labels = self.vertex_labels.clone();
        for (&e, &[a, b]) in &self.edges {
            let id = g.add_edge(a, b);
            if let Some(l) = self.edge_labels.get(&e) {
                g.edge_labels.insert(id, l.clone());
            }
        }
        g
    }

    /// Parses the edge-list text format: one `u v` per line, `#` comments.
    pub fn parse_edge_list(text: &str) -> Result<Multigraph, GraphError> {
        let mut g = Multigraph::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or_default().trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| GraphError::Parse { line: i + 1, message };
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [u, v] = fields.as_slice() else {
                return Err(err(format!("expected `u v`, got `{line}`")));
            };
            let parse = |s: &str| s.parse::<u32>().map_err(|_| err(format!("bad vertex `{s}`")));
            g.add_edge(VertexId(parse(u)?), VertexId(parse(v)?));
        }
        Ok(g)
    }

    /// Serializes to the edge-list format, edges in id order.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("# {} vertices, {} edges\n", self.vertex_count(), self.edge_count());
        for &[a, b] in self.edges.values() {
            out.push_str(&format!("{a} {b}\n"));
        }
        out
    }
}

/// How to choose a spanning tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeStrategy {
    Search,
    Explicit(BTreeSet<EdgeId>),
}

/// A spanning tree and its co-tree, the latter ordered by edge id.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SpanningTree {
    pub tree_edges: BTreeSet<EdgeId>,
    pub cotree_edges: Vec<EdgeId>,
}

impl SpanningTree {
    pub fn is_tree_edge(&self, e: EdgeId) -> bool {
        self.tree_edges.contains(&e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn k4() -> Multigraph {
        Multigraph::from_edges(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    fn cycle(n: u32) -> Multigraph {
        let edges: Vec<(u32, u32)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Multigraph::from_edges(&edges)
    }

    fn mobius6() -> Multigraph {
        let mut edges: Vec<(u32, u32)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend([(0, 3), (1, 4), (2, 5)]);
        Multigraph::from_edges(&edges)
    }

    #[test]
    fn betti_examples() {
        assert_eq!(cycle(3).betti(), Ok(1));
        assert_eq!(k4().betti(), Ok(3));
        let mut two = Multigraph::new();
        two.add_vertex(VertexId(0));
        two.add_vertex(VertexId(1));
        assert_eq!(two.betti(), Err(GraphError::Disconnected));
    }

    #[test]
    fn delete_vertex_examples() {
        let tri = k4().delete_vertex(VertexId(3)).unwrap();
        assert_eq!((tri.vertex_count(), tri.edge_count()), (3, 3));
        let edge = cycle(3).delete_vertex(VertexId(0)).unwrap();
        assert_eq!((edge.vertex_count(), edge.edge_count()), (2, 1));
        let m = mobius6().delete_vertex(VertexId(0)).unwrap();
        assert_eq!((m.vertex_count(), m.edge_count()), (5, 6));
        assert_eq!(k4().delete_vertex(VertexId(9)), Err(GraphError::MissingVertex(VertexId(9))));
    }

    #[test]
    fn delete_vertex_removes_loops() {
        let g = Multigraph::from_edges(&[(0, 0), (0, 1), (1, 2), (2, 1)]);
        let h = g.delete_vertex(VertexId(0)).unwrap();
        assert_eq!(h.edge_count(), 2);
    }

    #[test]
    fn cleanup_path_with_pendant() {
        // u=0 – v=1 – w=2 with pendant x=3 on v; u and w sit in a K4 missing u–w.
        let g = Multigraph::from_edges(&[
            (0, 1),
            (1, 2),
            (1, 3),
            (0, 10),
            (0, 11),
            (2, 10),
            (2, 11),
            (10, 11),
        ]);
        let h = g.cleanup();
        assert!(!h.has_vertex(VertexId(1)) && !h.has_vertex(VertexId(3)));
        let uw = h.edges_between(VertexId(0), VertexId(2));
        assert_eq!(uw.len(), 1);
        assert_eq!(h.provenance(uw[0]), Some((EdgeId(0), EdgeId(1))));
        assert_eq!((h.vertex_count(), h.edge_count()), (4, 6));
    }

    #[test]
    fn cleanup_tree_collapses_to_one_vertex() {
        let h = Multigraph::from_edges(&[(0, 1), (1, 2), (1, 3)]).cleanup();
        assert_eq!((h.vertex_count(), h.edge_count()), (1, 0));
    }

    #[test]
    fn cleanup_smooths_into_edge() {
        // Theta-like: 0 and 3 have degree 3, path 0-1-2-3 smooths to 0-3.
        let g = Multigraph::from_edges(&[(0, 1), (1, 2), (2, 3), (0, 3), (0, 3)]);
        let h = g.cleanup();
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edge_count(), 3);
        assert_eq!(h.edges_between(VertexId(0), VertexId(3)).len(), 3);
        let minted = h.edge_ids().max().unwrap();
        assert!(h.provenance(minted).is_some());
    }

    #[test]
    fn cleanup_triangle_to_loop() {
        let h = cycle(3).cleanup();
        assert_eq!(h.vertex_count(), 1);
        assert_eq!(h.edge_count(), 1);
        assert!(h.is_loop(h.edge_ids().next().unwrap()));
        // A lone loop vertex is a fixpoint.
        assert_eq!(h.cleanup(), h);
    }

    #[test]
    fn cleanup_keeps_cubic_graphs() {
        assert_eq!(k4().cleanup(), k4());
    }

    #[test]
    fn split_vertex_degrees_and_betti() {
        let g = Multigraph::from_edges(&[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4), (2, 3)]);
        assert_eq!(g.degree(VertexId(0)), 4);
        let ends = g.incident_ends(VertexId(0));
        let block: BTreeSet<EdgeEnd> = ends[..2].iter().copied().collect();
        let (h, w, _) = g.split_vertex(VertexId(0), &block).unwrap();
        assert_eq!(h.degree(VertexId(0)), 3);
        assert_eq!(h.degree(w), 3);
        assert_eq!(h.betti(), g.betti());
    }

    #[test]
    fn split_vertex_k5_preserves_betti() {
        let mut edges = Vec::new();
        for a in 0..5 {
            for b in a + 1..5 {
                edges.push((a, b));
            }
        }
        let k5 = Multigraph::from_edges(&edges);
        for v in k5.vertices() {
            let ends = k5.incident_ends(v);
            for mask in 1u32..(1 << ends.len()) - 1 {
                let block = ends
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &e)| e)
                    .collect();
                let (h, _, _) = k5.split_vertex(v, &block).unwrap();
                assert_eq!(h.betti(), k5.betti());
                assert_eq!(h.vertex_count(), 6);
                assert_eq!(h.edge_count(), 11);
            }
        }
    }

    #[test]
    fn split_vertex_errors() {
        let g = k4();
        let v = VertexId(0);
        assert!(matches!(g.split_vertex(v, &BTreeSet::new()), Err(GraphError::InvalidSplit(_))));
        let all: BTreeSet<EdgeEnd> = g.incident_ends(v).into_iter().collect();
        assert!(matches!(g.split_vertex(v, &all), Err(GraphError::InvalidSplit(_))));
        assert!(matches!(
            g.split_vertex(VertexId(7), &all),
            Err(GraphError::MissingVertex(_))
        ));
    }

    #[test]
    fn contract_then_split_roundtrip_betti() {
        let g = k4();
        let h = g.contract_edge(EdgeId(0)).unwrap();
        assert_eq!(h.degree(VertexId(0)), 4);
        assert_eq!(h.betti(), g.betti());
        let loopy = Multigraph::from_edges(&[(0, 0), (0, 1)]);
        assert_eq!(loopy.contract_edge(EdgeId(0)), Err(GraphError::ContractLoop(EdgeId(0))));
    }

    #[test]
    fn spanning_tree_search_and_explicit() {
        let g = k4();
        let t = g.spanning_tree(&TreeStrategy::Search).unwrap();
        assert_eq!(t.tree_edges.len(), 3);
        assert_eq!(t.cotree_edges.len(), 3);
        let star: BTreeSet<EdgeId> = [0, 1, 2].into_iter().map(EdgeId).collect();
        let t = g.spanning_tree(&TreeStrategy::Explicit(star)).unwrap();
        assert_eq!(t.cotree_edges, vec![EdgeId(3), EdgeId(4), EdgeId(5)]);

        let tri: BTreeSet<EdgeId> = [0, 1, 3].into_iter().map(EdgeId).collect();
        assert!(matches!(
            g.spanning_tree(&TreeStrategy::Explicit(tri)),
            Err(GraphError::NotSpanningTree(_))
        ));
        let short: BTreeSet<EdgeId> = [0, 1].into_iter().map(EdgeId).collect();
        assert!(matches!(
            g.spanning_tree(&TreeStrategy::Explicit(short)),
            Err(GraphError::NotSpanningTree(_))
        ));
        let c3 = cycle(3).spanning_tree(&TreeStrategy::Search).unwrap();
        assert_eq!(c3.cotree_edges.len(), 1);
    }

    #[test]
    fn cactus_examples() {
        assert!(cycle(5).is_cactus());
        assert!(!k4().is_cactus());
        // Two triangles sharing a vertex: strict reading rejects it.
        let bowtie = Multigraph::from_edges(&[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]);
        assert!(!bowtie.is_cactus());
        // Two triangles joined by a bridge.
        let dumbbell =
            Multigraph::from_edges(&[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]);
        assert!(dumbbell.is_cactus());
        let loops = Multigraph::from_edges(&[(0, 0), (0, 1), (1, 1)]);
        assert!(loops.is_cactus());
        let digon = Multigraph::from_edges(&[(0, 1), (0, 1)]);
        assert!(digon.is_cactus());
        let theta = Multigraph::from_edges(&[(0, 1), (0, 1), (0, 1)]);
        assert!(!theta.is_cactus());
    }

    #[test]
    fn connectivity_examples() {
        let mut single = Multigraph::new();
        single.add_vertex(VertexId(4));
        assert!(single.is_connected());
        let mut two = single.clone();
        two.add_vertex(VertexId(5));
        assert!(!two.is_connected());
        assert!(k4().delete_vertex(VertexId(1)).unwrap().is_connected());
    }

    #[test]
    fn edge_list_roundtrip() {
        let text = "# sample\n0 1\n1 2 # trailing\n\n2 0\n2 2\n0 1\n";
        let g = Multigraph::parse_edge_list(text).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 5));
        assert!(g.is_loop(EdgeId(3)));
        let again = Multigraph::parse_edge_list(&g.to_edge_list()).unwrap();
        assert_eq!(again, g);
        assert!(matches!(
            Multigraph::parse_edge_list("0 1\n0 x\n"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Multigraph::parse_edge_list("0 1 2\n"),
            Err(GraphError::Parse { line: 1, .. })
        ));
    }
}
