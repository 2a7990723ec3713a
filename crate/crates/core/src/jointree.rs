//! Rotation systems, joint-trees and their associated surfaces.
//!
//! A joint-tree is a spanning tree whose co-tree edges are cut into two
//! lettered semi-edges. Planting it in the plane with the rotation at each
//! vertex and reading the semi-edge letters around its boundary gives a
//! polygon word on `2β` letters. Face tracing on the full embedding gives an
//! independent genus count for the same rotation system.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::graph::{EdgeEnd, EdgeId, GraphError, Multigraph, SpanningTree, VertexId};
use crate::surface::{Exponent, Letter, SurfaceWord, Symbol, WordError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JointTreeError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("rotation system does not match the graph: {0}")]
    Rotation(String),
    #[error("tree does not match the graph: {0}")]
    Tree(String),
    #[error("rotation line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("face count gives non-integer genus (V={vertices}, E={edges}, F={faces})")]
    NonIntegerGenus {
        vertices: usize,
        edges: usize,
        faces: usize,
    },
}

/// Per-vertex cyclic order of incident edge-ends. The stored sequence start
/// is slot 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RotationSystem {
    rotations: BTreeMap<VertexId, Vec<EdgeEnd>>,
}

impl RotationSystem {
    pub fn new(rotations: BTreeMap<VertexId, Vec<EdgeEnd>>) -> Self {
        RotationSystem { rotations }
    }

    /// Rotation listing each vertex's ends in (edge id, side) order.
    pub fn identity(g: &Multigraph) -> Self {
        RotationSystem {
            rotations: g.vertices().map(|v| (v, g.incident_ends(v))).collect(),
        }
    }

    pub fn at(&self, v: VertexId) -> Option<&[EdgeEnd]> {
        self.rotations.get(&v).map(Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, &[EdgeEnd])> {
        self.rotations.iter().map(|(&v, r)| (v, r.as_slice()))
    }

    /// Checks that every vertex lists exactly its incident ends.
    pub fn validate(&self, g: &Multigraph) -> Result<(), JointTreeError> {
        if self.rotations.len() != g.vertex_count() {
            return Err(JointTreeError::Rotation(format!(
                "{} rotations for {} vertices",
                self.rotations.len(),
                g.vertex_count()
            )));
        }
        for v in g.vertices() {
            let Some(rot) = self.rotations.get(&v) else {
                return Err(JointTreeError::Rotation(format!("no rotation at {v}")));
            };
            let mut have = rot.clone();
            have.sort();
            if have != g.incident_ends(v) {
                return Err(JointTreeError::Rotation(format!("rotation at {v} lists wrong ends")));
            }
        }
        Ok(())
    }

    /// Mirror embedding: every cyclic order reversed, slot 0 kept.
    pub fn reversed(&self) -> Self {
        let rotations = self
            .rotations
            .iter()
            .map(|(&v, r)| {
                let mut out = r.clone();
                if out.len() > 1 {
                    out[1..].reverse();
                }
                (v, out)
            })
            .collect();
        RotationSystem { rotations }
    }

    /// One line per vertex: `v: e.s e.s …`.
    pub fn to_lines(&self) -> Vec<String> {
        self.rotations
            .iter()
            .map(|(v, ends)| {
                let ends: Vec<String> = ends.iter().map(EdgeEnd::to_string).collect();
                if ends.is_empty() {
                    format!("{v}:")
                } else {
                    format!("{v}: {}", ends.join(" "))
                }
            })
            .collect()
    }

    /// Parses the line format emitted by [`RotationSystem::to_lines`].
    pub fn parse(text: &str) -> Result<Self, JointTreeError> {
        let mut rotations = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or_default().trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| JointTreeError::Parse { line: i + 1, message };
            let (head, tail) = line
                .split_once(':')
                .ok_or_else(|| err("expected `v: end end …`".into()))?;
            let v: u32 = head.trim().parse().map_err(|_| err(format!("bad vertex `{head}`")))?;
            let mut ends = Vec::new();
            for tok in tail.split_whitespace() {
                let (e, s) = tok
                    .split_once('.')
                    .ok_or_else(|| err(format!("bad end `{tok}`")))?;
                let e: u32 = e.parse().map_err(|_| err(format!("bad edge in `{tok}`")))?;
                let s: u8 = match s {
                    "0" => 0,
                    "1" => 1,
                    _ => return Err(err(format!("bad side in `{tok}`"))),
                };
                ends.push(EdgeEnd::new(EdgeId(e), s));
            }
            if rotations.insert(VertexId(v), ends).is_some() {
                return Err(err(format!("vertex {v} listed twice")));
            }
        }
        Ok(RotationSystem { rotations })
    }
}

impl fmt::Display for RotationSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.to_lines() {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// `k!` as u128, saturating.
pub(crate) fn factorial(k: usize) -> u128 {
    (1..=k as u128).fold(1u128, |acc, x| acc.saturating_mul(x))
}

/// Writes the `index`-th permutation (lexicographic) of `items` into `out`.
pub(crate) fn nth_permutation<T: Copy>(items: &[T], mut index: u128, out: &mut Vec<T>) {
    let mut pool: Vec<T> = items.to_vec();
    out.clear();
    for remaining in (1..=pool.len()).rev() {
        let block = factorial(remaining - 1);
        let pick = (index / block) as usize;
        index %= block;
        out.push(pool.remove(pick));
    }
}

/// Deterministic enumeration of all rotation systems with the first
/// incident end of every vertex fixed as anchor.
///
/// Systems are indexed in mixed radix, lowest vertex most significant, each
/// digit a lexicographic permutation rank; index order is therefore the
/// lexicographic order of the per-vertex sequences.
#[derive(Debug, Clone)]
pub struct RotationEnumerator {
    vertices: Vec<VertexId>,
    ends: Vec<Vec<EdgeEnd>>,
    radices: Vec<u128>,
    total: u128,
}

impl RotationEnumerator {
    pub fn new(g: &Multigraph) -> Self {
        let vertices: Vec<VertexId> = g.vertices().collect();
        let ends: Vec<Vec<EdgeEnd>> = vertices.iter().map(|&v| g.incident_ends(v)).collect();
        let radices: Vec<u128> = ends.iter().map(|e| factorial(e.len().saturating_sub(1))).collect();
        let total = radices.iter().fold(1u128, |acc, &r| acc.saturating_mul(r));
        RotationEnumerator {
            vertices,
            ends,
            radices,
            total,
        }
    }

    /// Number of systems, `∏ (deg(v) - 1)!`.
    pub fn count(&self) -> u128 {
        self.total
    }

    pub fn radices(&self) -> &[u128] {
        &self.radices
    }

    /// Mixed-radix digits of `index`, most significant first.
    pub fn digits(&self, mut index: u128) -> Vec<u128> {
        let mut digits = vec![0; self.radices.len()];
        for (slot, &r) in self.radices.iter().enumerate().rev() {
            digits[slot] = index % r;
            index /= r;
        }
        digits
    }

    pub fn from_digits(&self, digits: &[u128]) -> RotationSystem {
        let mut rotations = BTreeMap::new();
        let mut buf = Vec::new();
        for ((&v, ends), &d) in self.vertices.iter().zip(&self.ends).zip(digits) {
            let mut order = Vec::with_capacity(ends.len());
            if let Some((&anchor, rest)) = ends.split_first() {
                order.push(anchor);
                nth_permutation(rest, d, &mut buf);
                order.extend_from_slice(&buf);
            }
            rotations.insert(v, order);
        }
        RotationSystem { rotations }
    }

    pub fn nth(&self, index: u128) -> Option<RotationSystem> {
        (index < self.total).then(|| self.from_digits(&self.digits(index)))
    }

    /// Systems with index in `range`, in order.
    pub fn range(&self, range: std::ops::Range<u128>) -> impl Iterator<Item = RotationSystem> + '_ {
        let hi = range.end.min(self.total);
        (range.start..hi).map(move |i| self.from_digits(&self.digits(i)))
    }

    pub fn iter(&self) -> impl Iterator<Item = RotationSystem> + '_ {
        self.range(0..self.total)
    }
}

/// Enumerates every rotation system of `g` in index order.
pub fn enumerate_rotations(g: &Multigraph) -> RotationEnumerator {
    RotationEnumerator::new(g)
}

/// Associated surface of a joint-tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociatedSurface {
    /// Word over the co-tree edges, symbol `i` = `tree.cotree_edges[i]`.
    pub word: SurfaceWord,
    pub tree: SpanningTree,
    pub rotation: RotationSystem,
}

/// Reads the lettered semi-edges of the joint-tree around its boundary.
///
/// The walk starts at the lowest vertex, slot 0, and follows rotation
/// successors: a tree edge is crossed to its far end, a co-tree semi-edge is
/// read and stepped past. The semi-edge at side 0 of an edge carries
/// exponent +1, the one at side 1 carries −1.
pub fn associated_surface(
    g: &Multigraph,
    tree: &SpanningTree,
    rotation: &RotationSystem,
) -> Result<AssociatedSurface, JointTreeError> {
    rotation.validate(g)?;
    let tree_set = g.spanning_tree(&crate::graph::TreeStrategy::Explicit(tree.tree_edges.clone()))?;
    if tree_set.cotree_edges != tree.cotree_edges {
        return Err(JointTreeError::Tree("co-tree list does not complement the tree".into()));
    }
    if tree.cotree_edges.is_empty() {
        return Err(JointTreeError::Word(WordError::Empty));
    }
    let symbol_of: BTreeMap<EdgeId, Symbol> = tree
        .cotree_edges
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, Symbol(i as u32)))
        .collect();
    let names: Vec<String> = tree.cotree_edges.iter().map(|&e| g.edge_name(e)).collect();

    let slot_of: BTreeMap<EdgeEnd, (VertexId, usize)> = rotation
        .iter()
        .flat_map(|(v, ends)| ends.iter().enumerate().map(move |(i, &end)| (end, (v, i))))
        .collect();

    let start_vertex = g.vertices().next().expect("graph has a co-tree edge");
    let start = (start_vertex, 0usize);
    let mut cur = start;
    let mut letters = Vec::with_capacity(2 * tree.cotree_edges.len());
    let limit = 4 * g.edge_count() + 4;
    for _ in 0..limit {
        let (v, slot) = cur;
        let ends = rotation.at(v).expect("validated");
        let end = ends[slot];
        if let Some(&sym) = symbol_of.get(&end.edge) {
            let exponent = if end.side == 0 { Exponent::Pos } else { Exponent::Neg };
            letters.push(Letter::new(sym, exponent));
            cur = (v, (slot + 1) % ends.len());
        } else {
            let (w, wslot) = slot_of[&end.opposite()];
            let wends = rotation.at(w).expect("validated");
            cur = (w, (wslot + 1) % wends.len());
        }
        if cur == start {
            break;
        }
    }
    if cur != start {
        return Err(JointTreeError::Rotation("boundary walk did not close".into()));
    }
    let word = SurfaceWord::new(letters, Arc::new(names))?;
    Ok(AssociatedSurface {
        word,
        tree: tree.clone(),
        rotation: rotation.clone(),
    })
}

/// Dense dart arrays for fast face counting.
///
/// Dart `2i + s` is side `s` of the `i`-th edge in id order; `d ^ 1` is its
/// reverse.
#[derive(Debug, Clone)]
pub(crate) struct DartIndex {
    pub(crate) edge_index: BTreeMap<EdgeId, usize>,
    pub(crate) vertex_count: usize,
    pub(crate) edge_count: usize,
}

impl DartIndex {
    pub(crate) fn new(g: &Multigraph) -> Self {
        DartIndex {
            edge_index: g.edge_ids().enumerate().map(|(i, e)| (e, i)).collect(),
            vertex_count: g.vertex_count(),
            edge_count: g.edge_count(),
        }
    }

    pub(crate) fn dart(&self, end: EdgeEnd) -> usize {
        2 * self.edge_index[&end.edge] + end.side as usize
    }

    pub(crate) fn dart_count(&self) -> usize {
        2 * self.edge_count
    }

    /// Fills `succ[d]` with the rotation successor of dart `d` at its tail.
    pub(crate) fn successor_table(&self, rotation: &RotationSystem) -> Vec<u32> {
        let mut succ = vec![0u32; self.dart_count()];
        for (_, ends) in rotation.iter() {
            for (i, &end) in ends.iter().enumerate() {
                succ[self.dart(end)] = self.dart(ends[(i + 1) % ends.len()]) as u32;
            }
        }
        succ
    }

    /// Number of orbits of `d -> succ[d ^ 1]`.
    pub(crate) fn faces(&self, succ: &[u32], seen: &mut [bool]) -> usize {
        let n = succ.len();
        if n == 0 {
            return 1;
        }
        seen.iter_mut().for_each(|s| *s = false);
        let mut faces = 0;
        for d in 0..n {
            if seen[d] {
                continue;
            }
            faces += 1;
            let mut x = d;
            while !seen[x] {
                seen[x] = true;
                x = succ[x ^ 1] as usize;
            }
        }
        faces
    }

    /// Euler genus `(2 - V + E - F) / 2`.
    pub(crate) fn genus(&self, faces: usize) -> Result<usize, JointTreeError> {
        let twice = 2 - self.vertex_count as i64 + self.edge_count as i64 - faces as i64;
        if twice < 0 || twice % 2 != 0 {
            return Err(JointTreeError::NonIntegerGenus {
                vertices: self.vertex_count,
                edges: self.edge_count,
                faces,
            });
        }
        Ok((twice / 2) as usize)
    }
}

/// Number of faces of the embedding given by `rotation`.
pub fn face_count(g: &Multigraph, rotation: &RotationSystem) -> Result<usize, JointTreeError> {
    rotation.validate(g)?;
    let index = DartIndex::new(g);
    let succ = index.successor_table(rotation);
    let mut seen = vec![false; succ.len()];
    Ok(index.faces(&succ, &mut seen))
}

/// Genus of the embedding given by `rotation`, via Euler's formula.
pub fn face_trace_genus(g: &Multigraph, rotation: &RotationSystem) -> Result<usize, JointTreeError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    let faces = face_count(g, rotation)?;
    DartIndex::new(g).genus(faces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::TreeStrategy;
    use crate::surface::{genus_by_corner_orbits, reduce_to_standard};

    fn k4() -> Multigraph {
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
    fn enumeration_counts() {
        assert_eq!(enumerate_rotations(&cycle(3)).count(), 1);
        assert_eq!(enumerate_rotations(&k4()).count(), 16);
        assert_eq!(enumerate_rotations(&mobius6()).count(), 64);
        let k5 = Multigraph::from_edges(&[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
            (3, 4),
        ]);
        assert_eq!(enumerate_rotations(&k5).count(), 6u128.pow(5));
    }

    #[test]
    fn enumeration_is_distinct_sorted_and_valid() {
        let g = k4();
        let all: Vec<RotationSystem> = enumerate_rotations(&g).iter().collect();
        assert_eq!(all.len(), 16);
        for pair in all.windows(2) {
            assert!(pair[0] < pair[1], "lexicographic order");
        }
        for r in &all {
            r.validate(&g).unwrap();
        }
    }

    #[test]
    fn nth_permutation_lexicographic() {
        let mut out = Vec::new();
        let perms: Vec<Vec<u8>> = (0..6)
            .map(|i| {
                nth_permutation(&[1u8, 2, 3], i, &mut out);
                out.clone()
            })
            .collect();
        assert_eq!(
            perms,
            vec![
                vec![1, 2, 3],
                vec![1, 3, 2],
                vec![2, 1, 3],
                vec![2, 3, 1],
                vec![3, 1, 2],
                vec![3, 2, 1]
            ]
        );
    }

    #[test]
    fn face_trace_examples() {
        let c3 = cycle(3);
        let r = enumerate_rotations(&c3).nth(0).unwrap();
        assert_eq!(face_count(&c3, &r).unwrap(), 2);
        assert_eq!(face_trace_genus(&c3, &r).unwrap(), 0);

        let g = k4();
        let max = enumerate_rotations(&g)
            .iter()
            .map(|r| face_trace_genus(&g, &r).unwrap())
            .max();
        assert_eq!(max, Some(1));
        assert!(enumerate_rotations(&g)
            .iter()
            .any(|r| face_count(&g, &r).unwrap() == 4));
    }

    #[test]
    fn loop_vertex_embeds_in_sphere() {
        let g = Multigraph::from_edges(&[(0, 0)]);
        let r = RotationSystem::identity(&g);
        assert_eq!(face_count(&g, &r).unwrap(), 2);
        assert_eq!(face_trace_genus(&g, &r).unwrap(), 0);
        let bouquet = Multigraph::from_edges(&[(0, 0), (0, 0)]);
        let genera: Vec<usize> = enumerate_rotations(&bouquet)
            .iter()
            .map(|r| face_trace_genus(&bouquet, &r).unwrap())
            .collect();
        assert_eq!(genera.iter().max(), Some(&1));
    }

    #[test]
    fn associated_surface_c3() {
        let g = cycle(3);
        let t = g.spanning_tree(&TreeStrategy::Search).unwrap();
        let r = enumerate_rotations(&g).nth(0).unwrap();
        let s = associated_surface(&g, &t, &r).unwrap();
        assert_eq!(s.word.len(), 2);
        assert_eq!(reduce_to_standard(&s.word).unwrap().genus, 0);
    }

    #[test]
    fn associated_surface_matches_face_trace_k4_m6() {
        for g in [k4(), mobius6()] {
            let t = g.spanning_tree(&TreeStrategy::Search).unwrap();
            for r in enumerate_rotations(&g).iter() {
                let s = associated_surface(&g, &t, &r).unwrap();
                assert_eq!(s.word.len(), 2 * g.betti().unwrap());
                let reduced = reduce_to_standard(&s.word).unwrap().genus;
                assert_eq!(reduced, face_trace_genus(&g, &r).unwrap());
                assert_eq!(reduced, genus_by_corner_orbits(&s.word).unwrap());
            }
        }
    }

    #[test]
    fn cotree_loops_are_read_at_one_vertex() {
        // Theta with a loop at 0.
        let g = Multigraph::from_edges(&[(0, 1), (0, 1), (0, 1), (0, 0)]);
        let t = g.spanning_tree(&TreeStrategy::Search).unwrap();
        for r in enumerate_rotations(&g).iter() {
            let s = associated_surface(&g, &t, &r).unwrap();
            assert_eq!(
                reduce_to_standard(&s.word).unwrap().genus,
                face_trace_genus(&g, &r).unwrap()
            );
        }
    }

    #[test]
    fn mirror_preserves_genus() {
        let g = mobius6();
        for r in enumerate_rotations(&g).iter() {
            assert_eq!(
                face_trace_genus(&g, &r).unwrap(),
                face_trace_genus(&g, &r.reversed()).unwrap()
            );
        }
    }

    #[test]
    fn rotation_text_roundtrip_and_validation() {
        let g = k4();
        let r = enumerate_rotations(&g).nth(5).unwrap();
        let text = r.to_string();
        assert_eq!(RotationSystem::parse(&text).unwrap(), r);
        let mut bad = r.to_lines();
        bad[0] = "0: 0.0 1.0".into();
        let bad = RotationSystem::parse(&bad.join("\n")).unwrap();
        assert!(matches!(bad.validate(&g), Err(JointTreeError::Rotation(_))));
        assert!(matches!(
            RotationSystem::parse("0: 1.2"),
            Err(JointTreeError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn associated_surface_rejects_bad_tree() {
        let g = k4();
        let mut t = g.spanning_tree(&TreeStrategy::Search).unwrap();
        t.cotree_edges.pop();
        let r = RotationSystem::identity(&g);
        assert!(matches!(associated_surface(&g, &t, &r), Err(JointTreeError::Tree(_))));
    }
}
