//! Named property suites over words, joint-trees and graph families.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::critical::{algorithm_one, algorithm_two, detect_alpha, detect_beta, detect_delta, detect_eta, detect_gamma, CriticalError, CriticalKind};
use crate::engine::{max_genus_exhaustive, EngineError, SearchConfig};
use crate::families::{generate, random_cubic, v, FamilyError, FamilySpec};
use crate::graph::{EdgeEnd, EdgeId, GraphError, Multigraph, TreeStrategy, VertexId};
use crate::jointree::{associated_surface, enumerate_rotations, face_trace_genus, factorial, nth_permutation, JointTreeError};
use crate::surface::{genus_by_corner_orbits, reduce_to_standard, Letter, SurfaceWord, Symbol, WordError};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("bad range `{range}` for suite {suite}")]
    BadRange { suite: String, range: String },
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    JointTree(#[from] JointTreeError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Critical(#[from] CriticalError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

pub const SUITES: [&str; 10] = [
    "words",
    "lemma1.1",
    "lemma1.2",
    "lemma1.3",
    "thm2.1",
    "thm3.1",
    "thm3.2",
    "correspondence",
    "alg1",
    "alg2",
];

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SuiteOutcome {
    pub suite: String,
    pub checked: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteOutcome {
    fn new(suite: &str) -> Self {
        SuiteOutcome {
            suite: suite.to_string(),
            ..Self::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

pub fn run_suite(name: &str, range: Option<&str>, seed: u64, config: &SearchConfig) -> Result<SuiteOutcome, VerifyError> {
    let bad = || VerifyError::BadRange {
        suite: name.to_string(),
        range: range.unwrap_or_default().to_string(),
    };
    match name {
        "words" => {
            let (census, random) = match range {
                None => (3, 1000),
                Some(r) => {
                    let (a, b) = r.split_once(':').ok_or_else(bad)?;
                    (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?)
                }
            };
            word_oracles(census, random, 8, seed)
        }
        "lemma1.1" => insertion_suite(range.map_or(Ok(1000), |r| r.parse().map_err(|_| bad()))?, 6, seed),
        "lemma1.2" => maximal_word_suite(parse_range(range.unwrap_or("3..4")).ok_or_else(bad)?),
        "lemma1.3" => splitting_suite(range.unwrap_or("k4,gadget"), config).map_err(|e| e.unwrap_or_else(bad)),
        "thm2.1" => critical_deletion(range.unwrap_or("all"), config).map_err(|e| e.unwrap_or_else(bad)),
        "thm3.1" | "thm3.2" => {
            let default = if name == "thm3.1" { "3..5:1..7" } else { "3..5:3..7" };
            let (m, n) = range.unwrap_or(default).split_once(':').ok_or_else(bad)?;
            let (m, n) = (parse_range(m).ok_or_else(bad)?, parse_range(n).ok_or_else(bad)?);
            if name == "thm3.1" {
                spiral_genus(m, n, config)
            } else {
                spiral_tail(m, n, config)
            }
        }
        "correspondence" => correspondence(range.unwrap_or("k4,m6,n8")).map_err(|e| e.unwrap_or_else(bad)),
        "alg1" => algorithm_one_suite(range.map_or(Ok(50), |r| r.parse().map_err(|_| bad()))?, 12, seed, config),
        "alg2" => {
            let (ms, ns) = range.unwrap_or("3,5:1..6").split_once(':').ok_or_else(bad)?;
            let ms: Vec<usize> = ms.split(',').map(|x| x.parse()).collect::<Result<_, _>>().map_err(|_| bad())?;
            algorithm_two_suite(&ms, parse_range(ns).ok_or_else(bad)?, config)
        }
        other => Err(VerifyError::UnknownSuite(other.to_string())),
    }
}

/// `a..b` (inclusive) or a single number.
pub fn parse_range(text: &str) -> Option<RangeInclusive<usize>> {
    match text.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (a.trim().parse().ok()?, b.trim().parse().ok()?);
            (a <= b).then_some(a..=b)
        }
        None => {
            let a = text.trim().parse().ok()?;
            Some(a..=a)
        }
    }
}

fn letters(k: usize) -> (Vec<Letter>, Arc<Vec<String>>) {
    let names = Arc::new((1..=k).map(|i| format!("a{i}")).collect());
    let letters = (0..k as u32)
        .flat_map(|s| [Letter::pos(Symbol(s)), Letter::neg(Symbol(s))])
        .collect();
    (letters, names)
}

/// Every orientable word on `k` symbols, as the `(2k)!` orders of its letters.
pub fn all_words(k: usize) -> impl Iterator<Item = SurfaceWord> {
    let (pool, names) = letters(k);
    let total = factorial(2 * k);
    let mut buf = Vec::new();
    (0..total).map(move |i| {
        nth_permutation(&pool, i, &mut buf);
        SurfaceWord::new(buf.clone(), names.clone()).expect("permutation of a closed alphabet")
    })
}

pub fn random_word(k: usize, rng: &mut impl Rng) -> SurfaceWord {
    let (mut pool, names) = letters(k);
    pool.shuffle(rng);
    SurfaceWord::new(pool, names).expect("shuffle of a closed alphabet")
}

/// `a1 … an a1^-1 … an^-1`.
pub fn maximal_word(n: usize) -> SurfaceWord {
    let (_, names) = letters(n);
    let letters = (0..n as u32)
        .map(|s| Letter::pos(Symbol(s)))
        .chain((0..n as u32).map(|s| Letter::neg(Symbol(s))))
        .collect();
    SurfaceWord::new(letters, names).expect("closed word")
}

fn word_oracles(census: usize, random: usize, max_symbols: usize, seed: u64) -> Result<SuiteOutcome, VerifyError> {
    let mut out = SuiteOutcome::new("words");
    let check = |out: &mut SuiteOutcome, w: &SurfaceWord| -> Result<(), VerifyError> {
        let (a, b) = (reduce_to_standard(w)?.genus, genus_by_corner_orbits(w)?);
        out.expect(a == b, || format!("{w}: reduction {a}, corners {b}"));
        Ok(())
    };
    for k in 1..=census {
        for w in all_words(k) {
            check(&mut out, &w)?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random {
        let w = random_word(rng.gen_range(1..=max_symbols), &mut rng);
        check(&mut out, &w)?;
    }
    out.notes.push(format!("{} words, census up to {census} symbols", out.checked));
    Ok(out)
}

fn insertion_suite(count: usize, max_symbols: usize, seed: u64) -> Result<SuiteOutcome, VerifyError> {
    let mut out = SuiteOutcome::new("lemma1.1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut raised = 0;
    for _ in 0..count {
        let k = rng.gen_range(1..=max_symbols);
        let ab = random_word(k, &mut rng);
        let len = ab.len();
        let p = rng.gen_range(0..=len);
        let q = rng.gen_range(p..=len);
        let x = Symbol(k as u32);
        let mut names = ab.names().as_ref().clone();
        names.push("x".into());
        let mut seq = ab.letters().to_vec();
        seq.insert(q, Letter::neg(x));
        seq.insert(p, Letter::pos(x));
        let axbx = SurfaceWord::new(seq, Arc::new(names))?;
        let before = reduce_to_standard(&ab)?.genus;
        let after = reduce_to_standard(&axbx)?.genus;
        raised += usize::from(after == before + 1);
        out.expect(after == before || after == before + 1, || {
            format!("{ab} -> {axbx}: genus {before} -> {after}")
        });
    }
    out.notes.push(format!("{raised} of {count} insertions added a handle"));
    Ok(out)
}

fn maximal_word_suite(range: RangeInclusive<usize>) -> Result<SuiteOutcome, VerifyError> {
    let mut out = SuiteOutcome::new("lemma1.2");
    for n in range {
        let mut best = 0;
        for w in all_words(n) {
            best = best.max(reduce_to_standard(&w)?.genus);
        }
        let special = reduce_to_standard(&maximal_word(n))?.genus;
        out.expect(best == n / 2, || format!("n={n}: census maximum {best}, expected {}", n / 2));
        out.expect(special == best, || format!("n={n}: a1..an a1^-1..an^-1 has genus {special}, maximum {best}"));
        out.notes.push(format!("n={n}: max genus {best} over {} words", factorial(2 * n)));
    }
    Ok(out)
}

/// Partitions of `v`'s ends into two blocks of size at least two, each
/// listed once (the block holding the first end stays on `v`).
pub fn legal_splits(g: &Multigraph, v: VertexId) -> Vec<BTreeSet<EdgeEnd>> {
    let ends = g.incident_ends(v);
    let d = ends.len();
    if d < 4 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << (d - 1)) {
        let block: BTreeSet<EdgeEnd> = std::iter::once(ends[0])
            .chain((1..d).filter(|i| mask & (1 << (i - 1)) != 0).map(|i| ends[i]))
            .collect();
        if block.len() >= 2 && d - block.len() >= 2 {
            out.push(block);
        }
    }
    out
}

fn k4() -> Multigraph {
    Multigraph::from_edges(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

/// `K_4` with edge `0-1` replaced by the gadget.
pub fn gadget_in_k4() -> Multigraph {
    let mut g = Multigraph::from_edges(&[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    let [a, b, c, p, q, d, e, f] = [4, 5, 6, 7, 8, 9, 10, 11].map(VertexId);
    for (s, t) in [
        (VertexId(0), a),
        (a, b),
        (b, c),
        (c, p),
        (c, q),
        (p, q),
        (p, d),
        (q, d),
        (d, e),
        (e, f),
        (f, VertexId(1)),
        (a, e),
        (b, f),
    ] {
        g.add_edge(s, t);
    }
    g
}

fn splitting_suite(range: &str, config: &SearchConfig) -> Result<SuiteOutcome, Option<VerifyError>> {
    let mut out = SuiteOutcome::new("lemma1.3");
    let mut fixtures: Vec<(String, Multigraph)> = Vec::new();
    for part in range.split(',') {
        match part.trim() {
            "k4" => {
                let base = k4();
                for e in base.edge_ids() {
                    fixtures.push((format!("K4/e{e}"), base.contract_edge(e).map_err(|e| Some(e.into()))?));
                }
                let once = base.contract_edge(EdgeId(0)).map_err(|e| Some(e.into()))?;
                fixtures.push(("K4/e0/e1".into(), once.contract_edge(EdgeId(1)).map_err(|e| Some(e.into()))?));
            }
            "gadget" => {
                let base = gadget_in_k4();
                for e in base.edge_ids() {
                    fixtures.push((format!("gadget/e{e}"), base.contract_edge(e).map_err(|e| Some(e.into()))?));
                }
            }
            _ => return Err(None),
        }
    }
    let genus = |g: &Multigraph| max_genus_exhaustive(g, config).map(|r| (r.max_genus, r.upper_embeddable));
    let mut splits = 0;
    for (name, g) in &fixtures {
        let (gm, ue) = genus(g).map_err(|e| Some(e.into()))?;
        for v in g.vertices() {
            for block in legal_splits(g, v) {
                let (h, _, _) = g.split_vertex(v, &block).map_err(|e| Some(e.into()))?;
                let (hm, hue) = genus(&h).map_err(|e| Some(e.into()))?;
                splits += 1;
                let (bg, bh) = (g.betti().map_err(|e| Some(e.into()))?, h.betti().map_err(|e| Some(e.into()))?);
                out.expect(bg == bh, || format!("{name} split at {v}: betti {bg} -> {bh}"));
                out.expect(hm <= gm, || format!("{name} split at {v}: genus {gm} -> {hm}"));
                out.expect(!hue || ue, || format!("{name} split at {v}: split upper embeddable, original not"));
            }
        }
    }
    out.notes.push(format!("{} fixtures, {splits} splits", fixtures.len()));
    Ok(out)
}

/// A named critical-vertex fixture: graph, vertex, its pattern, and the
/// expected change in maximum genus.
pub struct CriticalFixture {
    pub name: String,
    pub graph: Multigraph,
    pub vertex: VertexId,
    pub kind: CriticalKind,
    pub drop: usize,
}

/// `K_4` with edge `0-1` replaced by the path `0-4=5-1`.
pub fn beta_fixture() -> Multigraph {
    Multigraph::from_edges(&[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 5), (4, 5), (5, 1)])
}

/// Diamond `0 1 | 2 3` whose tips feed a triangle `4 5 6`.
pub fn gamma_fixture() -> Multigraph {
    Multigraph::from_edges(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 5), (4, 5), (4, 6), (5, 6), (6, 6)])
}

/// `K_4` plus vertex 4 carrying a loop, joined to vertex 0.
pub fn alpha_fixture() -> Multigraph {
    let mut g = k4();
    g.add_edge(VertexId(0), VertexId(4));
    g.add_edge(VertexId(4), VertexId(4));
    g
}

pub fn critical_fixtures(range: &str) -> Option<Vec<CriticalFixture>> {
    let mut out = Vec::new();
    let range = if range == "all" {
        "beta,gamma,gadget,alpha,mobius:2..3,neckband:2..4"
    } else {
        range
    };
    let mut push = |name: String, graph: Multigraph, vertex: VertexId, kind: CriticalKind| {
        let drop = usize::from(kind != CriticalKind::Alpha);
        out.push(CriticalFixture {
            name,
            graph,
            vertex,
            kind,
            drop,
        });
    };
    for part in range.split(',') {
        let part = part.trim();
        match part.split_once(':') {
            None => match part {
                "beta" => push("beta".into(), beta_fixture(), VertexId(4), CriticalKind::Beta),
                "gamma" => push("gamma".into(), gamma_fixture(), VertexId(0), CriticalKind::Gamma),
                "gadget" => push("gadget".into(), gadget_in_k4(), VertexId(7), CriticalKind::Gamma),
                "alpha" => push("alpha".into(), alpha_fixture(), VertexId(4), CriticalKind::Alpha),
                _ => return None,
            },
            Some((kind, r)) => {
                for n in parse_range(r)? {
                    let (spec, k) = match kind {
                        "mobius" => (FamilySpec::Mobius(n), CriticalKind::Delta),
                        "neckband" => (FamilySpec::Neckband(n), CriticalKind::Eta),
                        _ => return None,
                    };
                    push(spec.to_string(), generate(&spec).ok()?.graph, v(1), k);
                }
            }
        }
    }
    Some(out)
}

fn critical_deletion(range: &str, config: &SearchConfig) -> Result<SuiteOutcome, Option<VerifyError>> {
    let mut out = SuiteOutcome::new("thm2.1");
    let fixtures = critical_fixtures(range).ok_or(None)?;
    for fx in fixtures {
        let g = &fx.graph;
        let found = match fx.kind {
            CriticalKind::Alpha => detect_alpha(g),
            CriticalKind::Beta => detect_beta(g),
            CriticalKind::Gamma => detect_gamma(g),
            CriticalKind::Delta => detect_delta(g),
            CriticalKind::Eta => detect_eta(g),
        };
        out.expect(found.iter().any(|f| f.vertex == fx.vertex), || {
            format!("{}: {} not detected as {}", fx.name, fx.vertex, fx.kind)
        });
        let h = g.delete_vertex(fx.vertex).map_err(|e| Some(e.into()))?;
        let before = max_genus_exhaustive(g, config).map_err(|e| Some(e.into()))?.max_genus;
        let after = max_genus_exhaustive(&h, config).map_err(|e| Some(e.into()))?.max_genus;
        out.expect(before == after + fx.drop, || {
            format!("{}: genus {before} -> {after} after deleting {}", fx.name, fx.vertex)
        });
        out.notes.push(format!("{} ({}): {before} -> {after}", fx.name, fx.kind));
    }
    Ok(out)
}

fn spiral(m: usize, n: usize) -> Result<Multigraph, VerifyError> {
    Ok(generate(&FamilySpec::Spiral { m, n })?.graph)
}

fn spiral_genus(ms: RangeInclusive<usize>, ns: RangeInclusive<usize>, config: &SearchConfig) -> Result<SuiteOutcome, VerifyError> {
    let mut out = SuiteOutcome::new("thm3.1");
    for m in ms {
        for n in ns.clone() {
            let r = max_genus_exhaustive(&spiral(m, n)?, config)?;
            let want = n.div_ceil(2);
            out.expect(r.max_genus == want && r.upper_embeddable, || {
                format!("S_{m}^{n}: max genus {}, expected {want}", r.max_genus)
            });
        }
    }
    Ok(out)
}

fn spiral_tail(ms: RangeInclusive<usize>, ns: RangeInclusive<usize>, config: &SearchConfig) -> Result<SuiteOutcome, VerifyError> {
    let mut out = SuiteOutcome::new("thm3.2");
    for m in ms {
        for n in ns.clone() {
            let g = spiral(m, n)?;
            let h = g.delete_vertex(v(m + 2 * n - 2))?;
            let before = max_genus_exhaustive(&g, config)?.max_genus;
            let after = max_genus_exhaustive(&h, config)?.max_genus;
            out.expect(h.is_connected() && before == after + 1, || {
                format!("S_{m}^{n} - v{}: genus {before} -> {after}", m + 2 * n - 2)
            });
        }
    }
    Ok(out)
}

/// `C_5` with chords `0-2` and `1-3`.
pub fn c5_with_chords() -> Multigraph {
    Multigraph::from_edges(&[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 3)])
}

/// Checks associated-surface genus against face-trace genus on every
/// rotation of `g`; returns `(agreeing, total)`.
pub fn correspondence_count(g: &Multigraph, strategy: &TreeStrategy) -> Result<(usize, usize), VerifyError> {
    let tree = g.spanning_tree(strategy)?;
    let mut agree = 0;
    let mut total = 0;
    for r in enumerate_rotations(g).iter() {
        let word = associated_surface(g, &tree, &r)?.word;
        total += 1;
        agree += usize::from(reduce_to_standard(&word)?.genus == face_trace_genus(g, &r)?);
    }
    Ok((agree, total))
}

fn correspondence(range: &str) -> Result<SuiteOutcome, Option<VerifyError>> {
    let mut out = SuiteOutcome::new("correspondence");
    for part in range.split(',') {
        let (name, g) = match part.trim() {
            "k4" => ("K4", k4()),
            "m6" => ("M6", generate(&FamilySpec::Mobius(3)).map_err(|e| Some(e.into()))?.graph),
            "n8" => ("N8", generate(&FamilySpec::Neckband(4)).map_err(|e| Some(e.into()))?.graph),
            "c5chords" => ("C5+chords", c5_with_chords()),
            _ => return Err(None),
        };
        let (agree, total) = correspondence_count(&g, &TreeStrategy::Search).map_err(Some)?;
        out.checked += total;
        if agree != total {
            out.failures.push(format!("{name}: {agree}/{total} rotations agree"));
        }
        out.notes.push(format!("{name}: {agree}/{total} rotations agree"));
    }
    Ok(out)
}

/// The graphs of the critical-vertex fixtures plus `K_4`.
pub fn section2_graphs() -> Vec<(String, Multigraph)> {
    let mut out: Vec<(String, Multigraph)> = critical_fixtures("all")
        .expect("built-in range")
        .into_iter()
        .map(|f| (f.name, f.graph))
        .collect();
    out.push(("K4".into(), k4()));
    out
}

fn algorithm_one_suite(count: usize, max_order: usize, seed: u64, config: &SearchConfig) -> Result<SuiteOutcome, VerifyError> {
    let mut out = SuiteOutcome::new("alg1");
    let mut graphs = section2_graphs();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let orders: Vec<usize> = (4..=max_order).step_by(2).collect();
    for k in 0..count {
        let order = *orders.choose(&mut rng).expect("nonempty");
        graphs.push((format!("cubic#{k}({order})"), random_cubic(order, &mut rng)?));
    }
    for (name, g) in &graphs {
        let trace = algorithm_one(g, config)?;
        let oracle = max_genus_exhaustive(g, config)?.max_genus;
        out.expect(trace.total == oracle, || format!("{name}: algorithm I {} vs oracle {oracle}", trace.total));
    }
    out.notes.push(format!("{} graphs", graphs.len()));
    Ok(out)
}

/// Gadget placements used by the extended-spiral suite.
pub fn gadget_sets(m: usize, n: usize) -> Vec<Vec<(usize, usize)>> {
    let tail = (m + 2 * n - 2, m + 2 * n - 1);
    vec![Vec::new(), vec![tail], vec![tail, (1, 2)]]
}

fn algorithm_two_suite(ms: &[usize], ns: RangeInclusive<usize>, config: &SearchConfig) -> Result<SuiteOutcome, VerifyError> {
    let mut out = SuiteOutcome::new("alg2");
    let mut specs = Vec::new();
    for &m in ms {
        for n in ns.clone() {
            for gadgets in gadget_sets(m, n) {
                specs.push(FamilySpec::ExtendedSpiral { m, n, gadgets });
            }
        }
    }
    specs.push("extspiral:5,6:13-14".parse()?);
    for spec in &specs {
        let family = generate(spec)?;
        let trace = algorithm_two(&family)?;
        let oracle = max_genus_exhaustive(&family.graph, config)?;
        out.expect(trace.total == oracle.max_genus, || {
            format!("{spec}: algorithm II {} vs oracle {}", trace.total, oracle.max_genus)
        });
        out.expect(oracle.upper_embeddable, || format!("{spec}: not upper embeddable"));
    }
    out.notes.push(format!("{} extended spirals", specs.len()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..4"), Some(3..=4));
        assert_eq!(parse_range("7"), Some(7..=7));
        assert_eq!(parse_range("4..3"), None);
        assert_eq!(parse_range("x"), None);
    }

    #[test]
    fn word_census_sizes() {
        assert_eq!(all_words(1).count(), 2);
        assert_eq!(all_words(2).count(), 24);
        assert_eq!(maximal_word(3).to_string(), "a1 a2 a3 a1^-1 a2^-1 a3^-1");
    }

    #[test]
    fn legal_split_counts() {
        let g = k4().contract_edge(EdgeId(0)).unwrap();
        assert_eq!(legal_splits(&g, VertexId(0)).len(), 3);
        assert!(legal_splits(&g, VertexId(2)).is_empty());
    }

    #[test]
    fn small_suites_pass() {
        let config = SearchConfig::default();
        for (suite, range) in [
            ("words", Some("2:50")),
            ("lemma1.1", Some("100")),
            ("lemma1.2", Some("3")),
            ("correspondence", Some("k4")),
            ("thm2.1", Some("beta,alpha,mobius:2")),
            ("thm3.1", Some("3:1..3")),
        ] {
            let out = run_suite(suite, range, 7, &config).unwrap();
            assert!(out.passed(), "{suite}: {:?}", out.failures);
        }
        assert!(matches!(run_suite("nope", None, 0, &config), Err(VerifyError::UnknownSuite(_))));
        assert!(matches!(
            run_suite("thm2.1", Some("zeta"), 0, &config),
            Err(VerifyError::BadRange { .. })
        ));
    }
}
