//! Labelled generators: cycles, Möbius ladders, neckbands, spirals and
//! extended spirals, plus the joint-tree fixtures built on them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{EdgeEnd, EdgeId, GraphError, Multigraph, SpanningTree, TreeStrategy, VertexId};
use crate::jointree::{associated_surface, enumerate_rotations, JointTreeError, RotationSystem};
use crate::surface::{parse_word, SurfaceWord};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid family: {0}")]
    Invalid(String),
    #[error("cannot parse family `{0}`")]
    Parse(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    JointTree(#[from] JointTreeError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Cycle(usize),
    Mobius(usize),
    Neckband(usize),
    Spiral { m: usize, n: usize },
    /// Spiral with each listed edge `(v_x, v_y)` replaced by a gadget, in order.
    ExtendedSpiral { m: usize, n: usize, gadgets: Vec<(usize, usize)> },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), FamilyError> {
        let bad = |msg: String| Err(FamilyError::Invalid(msg));
        match *self {
            FamilySpec::Cycle(m) if m < 3 => bad(format!("cycle needs m >= 3, got {m}")),
            FamilySpec::Mobius(n) | FamilySpec::Neckband(n) if n < 2 => bad(format!("ladder needs n >= 2, got {n}")),
            FamilySpec::Spiral { m, n } | FamilySpec::ExtendedSpiral { m, n, .. } if m < 3 || n < 1 => {
                bad(format!("spiral needs m >= 3 and n >= 1, got {m},{n}"))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cycle(m) => write!(f, "cycle:{m}"),
            FamilySpec::Mobius(n) => write!(f, "mobius:{n}"),
            FamilySpec::Neckband(n) => write!(f, "neckband:{n}"),
            FamilySpec::Spiral { m, n } => write!(f, "spiral:{m},{n}"),
            FamilySpec::ExtendedSpiral { m, n, gadgets } => {
                let g: Vec<String> = gadgets.iter().map(|(x, y)| format!("{x}-{y}")).collect();
                write!(f, "extspiral:{m},{n}:{}", g.join(","))
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    /// Grammar: `kind:params[:gadget-edges]`, e.g. `mobius:3`,
    /// `spiral:5,6`, `extspiral:5,6:13-14,9-10`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || FamilyError::Parse(s.to_string());
        let mut parts = s.trim().split(':');
        let kind = parts.next().ok_or_else(err)?;
        let params: Vec<usize> = parts
            .next()
            .ok_or_else(err)?
            .split(',')
            .map(|p| p.trim().parse().map_err(|_| err()))
            .collect::<Result<_, _>>()?;
        let extra = parts.next();
        if parts.next().is_some() {
            return Err(err());
        }
        let spec = match (kind, params.as_slice(), extra) {
            ("cycle", &[m], None) => FamilySpec::Cycle(m),
            ("mobius", &[n], None) => FamilySpec::Mobius(n),
            ("neckband", &[n], None) => FamilySpec::Neckband(n),
            ("spiral", &[m, n], None) => FamilySpec::Spiral { m, n },
            ("extspiral", &[m, n], extra) => {
                let gadgets = match extra {
                    None | Some("") => Vec::new(),
                    Some(list) => list
                        .split(',')
                        .map(|pair| {
                            let (x, y) = pair.split_once('-').ok_or_else(err)?;
                            Ok((x.trim().parse().map_err(|_| err())?, y.trim().parse().map_err(|_| err())?))
                        })
                        .collect::<Result<_, FamilyError>>()?,
                };
                FamilySpec::ExtendedSpiral { m, n, gadgets }
            }
            _ => return Err(err()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Gadget roles in insertion order: path `A B C`, diamond `P Q`, path
/// `D E F`.
pub const GADGET_ROLES: [&str; 8] = ["A", "B", "C", "P", "Q", "D", "E", "F"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Gadget {
    /// Host endpoints `(x, y)`; `x` joins `A`, `y` joins `F`.
    pub host: [VertexId; 2],
    pub vertices: [VertexId; 8],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyGraph {
    pub spec: FamilySpec,
    pub graph: Multigraph,
    /// Ear vertex sequences; the first entry is the base cycle.
    pub ears: Vec<Vec<VertexId>>,
    pub gadgets: Vec<Gadget>,
}

#[derive(Serialize)]
struct Sidecar<'a> {
    vertex_labels: BTreeMap<String, &'a str>,
    ears: Vec<Vec<&'a str>>,
    gadgets: Vec<SidecarGadget<'a>>,
}

#[derive(Serialize)]
struct SidecarGadget<'a> {
    host: [&'a str; 2],
    vertices: BTreeMap<&'static str, &'a str>,
}

impl FamilyGraph {
    fn label(&self, v: VertexId) -> &str {
        self.graph.vertex_label(v).unwrap_or("?")
    }

    /// JSON sidecar `{vertex_labels, ears, gadgets}`.
    pub fn labels_json(&self) -> String {
        let sidecar = Sidecar {
            vertex_labels: self
                .graph
                .vertex_labels()
                .iter()
                .map(|(v, l)| (v.to_string(), l.as_str()))
                .collect(),
            ears: self
                .ears
                .iter()
                .map(|ear| ear.iter().map(|&v| self.label(v)).collect())
                .collect(),
            gadgets: self
                .gadgets
                .iter()
                .map(|g| SidecarGadget {
                    host: [self.label(g.host[0]), self.label(g.host[1])],
                    vertices: GADGET_ROLES
                        .iter()
                        .zip(g.vertices)
                        .map(|(&r, v)| (r, self.label(v)))
                        .collect(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&sidecar).expect("sidecar serializes")
    }
}

/// Vertex `v_i` of a generated family.
pub fn v(i: usize) -> VertexId {
    VertexId(i as u32)
}

fn labelled(count: usize) -> Multigraph {
    let mut g = Multigraph::new();
    for i in 1..=count {
        g.add_vertex(v(i));
        g.set_vertex_label(v(i), format!("v{i}"));
    }
    g
}

fn add_cycle(g: &mut Multigraph, count: usize) -> Vec<VertexId> {
    for i in 1..=count {
        g.add_edge(v(i), v(i % count + 1));
    }
    (1..=count).map(v).collect()
}

/// Vertex indices of the spiral ear `p_i`, `i >= 1`.
pub fn spiral_ear(m: usize, i: usize) -> [usize; 4] {
    let end = if i < m { i } else { 2 * i + 1 - m };
    [m + 2 * i - 2, m + 2 * i - 1, m + 2 * i, end]
}

fn spiral(m: usize, n: usize) -> (Multigraph, Vec<Vec<VertexId>>) {
    let mut g = labelled(m + 2 * n);
    let mut ears = vec![add_cycle(&mut g, m)];
    for i in 1..=n {
        let ear = spiral_ear(m, i);
        for w in ear.windows(2) {
            g.add_edge(v(w[0]), v(w[1]));
        }
        ears.push(ear.iter().map(|&k| v(k)).collect());
    }
    (g, ears)
}

/// Replaces edge `e = (x, y)` by the gadget; `k` numbers the gadget.
fn insert_gadget(g: &mut Multigraph, e: EdgeId, k: usize) -> Gadget {
    let [x, y] = g.endpoints(e).expect("host edge present");
    g.remove_edge(e);
    let base = g.vertices().last().map_or(0, |w| w.0 + 1);
    let ids: [VertexId; 8] = std::array::from_fn(|i| VertexId(base + i as u32));
    for (role, &w) in GADGET_ROLES.iter().zip(&ids) {
        g.add_vertex(w);
        g.set_vertex_label(w, format!("g{k}.{role}"));
    }
    let [a, b, c, p, q, d, e_, f] = ids;
    for (s, t) in [
        (x, a),
        (a, b),
        (b, c),
        (c, p),
        (c, q),
        (p, q),
        (p, d),
        (q, d),
        (d, e_),
        (e_, f),
        (f, y),
        (a, e_),
        (b, f),
    ] {
        g.add_edge(s, t);
    }
    Gadget { host: [x, y], vertices: ids }
}

pub fn generate(spec: &FamilySpec) -> Result<FamilyGraph, FamilyError> {
    spec.validate()?;
    let mut gadgets = Vec::new();
    let (graph, ears) = match *spec {
        FamilySpec::Cycle(m) => {
            let mut g = labelled(m);
            let ear = add_cycle(&mut g, m);
            (g, vec![ear])
        }
        FamilySpec::Mobius(n) => {
            let mut g = labelled(2 * n);
            add_cycle(&mut g, 2 * n);
            for i in 1..=n {
                g.add_edge(v(i), v(i + n));
            }
            (g, Vec::new())
        }
        FamilySpec::Neckband(n) => {
            let mut g = labelled(2 * n);
            add_cycle(&mut g, 2 * n);
            for i in 1..=n {
                g.add_edge(v(2 * i - 1), v(neckband_partner(n, i)));
            }
            (g, Vec::new())
        }
        FamilySpec::Spiral { m, n } => spiral(m, n),
        FamilySpec::ExtendedSpiral { m, n, gadgets: ref hosts } => {
            let (mut g, ears) = spiral(m, n);
            for (k, &(x, y)) in hosts.iter().enumerate() {
                let e = *g
                    .edges_between(v(x), v(y))
                    .first()
                    .ok_or_else(|| FamilyError::Invalid(format!("no edge v{x}-v{y} in spiral:{m},{n}")))?;
                gadgets.push(insert_gadget(&mut g, e, k + 1));
            }
            (g, ears)
        }
    };
    Ok(FamilyGraph {
        spec: spec.clone(),
        graph,
        ears,
        gadgets,
    })
}

/// Second endpoint index of neckband chord `a_i`, wrapped into `1..=2n`.
pub fn neckband_partner(n: usize, i: usize) -> usize {
    (2 * i + 1) % (2 * n) + 1
}

/// Vertex-label pairs of every edge, each pair and the list sorted.
pub fn labelled_edges(g: &Multigraph) -> Option<Vec<(String, String)>> {
    let mut out = Vec::with_capacity(g.edge_count());
    for (_, [a, b]) in g.edges() {
        let (la, lb) = (g.vertex_label(a)?.to_string(), g.vertex_label(b)?.to_string());
        out.push(if la <= lb { (la, lb) } else { (lb, la) });
    }
    out.sort();
    Some(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub vertices: usize,
    pub edges: usize,
    pub betti: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub regular: bool,
    pub loops: usize,
    /// Labels of degree-2 vertices.
    pub degree_two: Vec<String>,
}

pub fn validate_family(g: &Multigraph) -> Result<FamilyReport, FamilyError> {
    let degrees = g.degrees();
    let min_degree = degrees.values().copied().min().unwrap_or(0);
    let max_degree = degrees.values().copied().max().unwrap_or(0);
    Ok(FamilyReport {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        betti: g.betti()?,
        min_degree,
        max_degree,
        regular: min_degree == max_degree,
        loops: g.vertices().map(|w| g.loop_count(w)).sum(),
        degree_two: degrees
            .iter()
            .filter(|(_, &d)| d == 2)
            .map(|(&w, _)| g.vertex_label(w).map_or_else(|| w.to_string(), str::to_string))
            .collect(),
    })
}

/// Connected cubic multigraph on `order` vertices from the pairing model,
/// retrying until connected. Loops and parallel edges are kept.
pub fn random_cubic(order: usize, rng: &mut impl rand::Rng) -> Result<Multigraph, FamilyError> {
    use rand::seq::SliceRandom;
    if order < 2 || !order.is_multiple_of(2) {
        return Err(FamilyError::Invalid(format!("cubic order must be even and >= 2, got {order}")));
    }
    loop {
        let mut points: Vec<u32> = (0..order as u32).flat_map(|w| [w, w, w]).collect();
        points.shuffle(rng);
        let edges: Vec<(u32, u32)> = points.chunks(2).map(|p| (p[0].min(p[1]), p[0].max(p[1]))).collect();
        let g = Multigraph::from_edges(&edges);
        if g.vertex_count() == order && g.is_connected() {
            return Ok(g);
        }
    }
}

/// `S_5^n` with a named spanning tree and co-tree labels `e1 … e_{n+1}`.
#[derive(Debug, Clone)]
pub struct SpiralTreeFixture {
    pub family: FamilyGraph,
    pub tree: SpanningTree,
    /// `(label, edge)` in label order.
    pub cotree_labels: Vec<(String, EdgeId)>,
    /// True when the path-shaped tree of the `n ≡ 0 (mod 5)` case was used.
    pub path_tree: bool,
}

fn edge_at(g: &Multigraph, a: usize, b: usize) -> Result<EdgeId, FamilyError> {
    g.edges_between(v(a), v(b))
        .first()
        .copied()
        .ok_or_else(|| FamilyError::Invalid(format!("S_5 has no edge v{a}-v{b}")))
}

/// Vertex path `T1` of the `n = 5j` tree.
fn path_tree_vertices(n: usize) -> Vec<usize> {
    let j = n / 5;
    let mut path = vec![2, 1, 5, 4, 3];
    for i in 1..j {
        let t = 10 * i;
        path.extend([t + 1, t, t - 1, t - 2, t - 3, t - 4, t + 5, t + 4, t + 3, t + 2]);
    }
    let t = 2 * n;
    path.extend([t + 1, t, t - 1, t - 2, t - 3, t - 4, t + 5, t + 4, t + 3]);
    path
}

/// Co-tree edges `e1 … e_{n+1}` of the `n = 5j` tree, by vertex index.
fn path_tree_cotree(n: usize) -> Vec<(usize, usize)> {
    let j = n / 5;
    let mut out = vec![(2, 3), (2, 9), (1, 7)];
    for i in 1..j {
        let t = 10 * i;
        out.extend([(t - 5, t - 4), (t - 6, t + 3), (t + 1, t + 2), (t, t + 9), (t - 2, t + 7)]);
    }
    let t = 2 * n;
    out.extend([(t - 5, t - 4), (t - 6, t + 3), (t + 2, t + 3)]);
    out
}

pub fn spiral_tree_fixture(n: usize) -> Result<SpiralTreeFixture, FamilyError> {
    if n < 5 {
        return Err(FamilyError::Invalid(format!("fixture needs n >= 5, got {n}")));
    }
    let mut family = generate(&FamilySpec::Spiral { m: 5, n })?;
    let g = &mut family.graph;
    let (tree, labelled): (SpanningTree, Vec<EdgeId>) = if n.is_multiple_of(5) {
        let mut edges = BTreeSet::new();
        for w in path_tree_vertices(n).windows(2) {
            edges.insert(edge_at(g, w[0], w[1])?);
        }
        edges.insert(edge_at(g, 2 * n + 1, 2 * n + 2)?);
        let tree = g.spanning_tree(&TreeStrategy::Explicit(edges))?;
        let cotree = path_tree_cotree(n)
            .into_iter()
            .map(|(a, b)| edge_at(g, a, b))
            .collect::<Result<Vec<_>, _>>()?;
        (tree, cotree)
    } else {
        let tree = g.spanning_tree(&TreeStrategy::Search)?;
        let cotree = tree.cotree_edges.clone();
        (tree, cotree)
    };
    let cotree_labels: Vec<(String, EdgeId)> = labelled
        .iter()
        .enumerate()
        .map(|(i, &e)| (format!("e{}", i + 1), e))
        .collect();
    for (label, e) in &cotree_labels {
        g.set_edge_label(*e, label.clone());
    }
    Ok(SpiralTreeFixture {
        family,
        tree,
        cotree_labels,
        path_tree: n.is_multiple_of(5),
    })
}

/// A graph, spanning tree and rotation with the associated surface read off.
#[derive(Debug, Clone)]
pub struct JointTreeFixture {
    pub graph: Multigraph,
    pub tree: SpanningTree,
    pub rotation: RotationSystem,
    pub word: SurfaceWord,
}

/// `K_4` on `A = 0, B = 1, C = 2` around centre `D = 3`: outer edges
/// `e1 = AC`, `e2 = CB`, `e3 = BA`, star tree at `D`, every rotation
/// clockwise.
pub fn fig1_fixture() -> Result<JointTreeFixture, FamilyError> {
    let mut g = Multigraph::from_edges(&[(0, 2), (2, 1), (1, 0), (0, 3), (1, 3), (2, 3)]);
    for (label, name) in [(0, "A"), (1, "B"), (2, "C"), (3, "D")] {
        g.set_vertex_label(VertexId(label), name);
    }
    for (e, name) in [(0, "e1"), (1, "e2"), (2, "e3")] {
        g.set_edge_label(EdgeId(e), name);
    }
    let end = |e: u32, s: u8| EdgeEnd::new(EdgeId(e), s);
    let rotation = RotationSystem::new(BTreeMap::from([
        (VertexId(0), vec![end(0, 0), end(3, 0), end(2, 1)]),
        (VertexId(1), vec![end(2, 0), end(4, 0), end(1, 1)]),
        (VertexId(2), vec![end(1, 0), end(5, 0), end(0, 1)]),
        (VertexId(3), vec![end(4, 1), end(3, 1), end(5, 1)]),
    ]));
    let tree = g.spanning_tree(&TreeStrategy::Explicit([EdgeId(3), EdgeId(4), EdgeId(5)].into()))?;
    let word = associated_surface(&g, &tree, &rotation)?.word;
    Ok(JointTreeFixture {
        graph: g,
        tree,
        rotation,
        word,
    })
}

/// Target word of the `M_6` joint-tree fixture.
pub const FIG3_WORD: &str = "m n m^-1 n^-1 a2 a3 a2^-1 a3^-1";

/// `M_6` on `v1 … v6` with rungs `a_i = (v_i, v_{i+3})`, tree = path
/// `v2 … v6` plus `a1`, co-tree `m = v6v1`, `n = v1v2`, `a2`, `a3`. Returns
/// the least-index rotation whose associated surface is a rotation of
/// [`FIG3_WORD`].
pub fn fig3_fixture() -> Result<JointTreeFixture, FamilyError> {
    let mut g = Multigraph::new();
    for i in 1..=6 {
        g.add_vertex(v(i));
        g.set_vertex_label(v(i), format!("v{i}"));
    }
    let named = [
        ("n", 1, 2),
        ("", 2, 3),
        ("", 3, 4),
        ("", 4, 5),
        ("", 5, 6),
        ("m", 6, 1),
        ("a1", 1, 4),
        ("a2", 2, 5),
        ("a3", 3, 6),
    ];
    let mut tree_edges = BTreeSet::new();
    for (name, a, b) in named {
        let e = g.add_edge(v(a), v(b));
        if !name.is_empty() {
            g.set_edge_label(e, name);
        }
        if !matches!(name, "m" | "n" | "a2" | "a3") {
            tree_edges.insert(e);
        }
    }
    let tree = g.spanning_tree(&TreeStrategy::Explicit(tree_edges))?;
    let target = parse_word(FIG3_WORD).expect("fixture word parses");
    for rotation in enumerate_rotations(&g).iter() {
        let word = associated_surface(&g, &tree, &rotation)?.word;
        if (0..word.len()).any(|k| *word.rotated(k) == *target) {
            return Ok(JointTreeFixture {
                graph: g,
                tree,
                rotation,
                word,
            });
        }
    }
    Err(FamilyError::Invalid("no rotation of M_6 yields the fixture word".into()))
}
