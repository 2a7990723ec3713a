//! Exhaustive maximum-genus search over rotation systems.

use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{GraphError, Multigraph, SpanningTree, TreeStrategy};
use crate::jointree::{associated_surface, nth_permutation, DartIndex, JointTreeError, RotationEnumerator, RotationSystem};
use crate::surface::reduce_to_standard;

/// Default refusal threshold for exhaustive enumeration.
pub const DEFAULT_BUDGET: u128 = 1 << 30;

const CHUNK: u128 = 1 << 14;
const PERM_TABLE_LIMIT: u128 = 40_320;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    JointTree(#[from] JointTreeError),
    #[error("{systems} rotation systems exceed the budget of {budget}")]
    Budget { systems: u128, budget: u128 },
    #[error("oracle mismatch at system {index}: faces give {faces}, associated surface gives {word}")]
    CrossCheck { index: u128, faces: usize, word: usize },
    #[error("genus {genus} exceeds the Euler bound {bound}")]
    EulerBound { genus: usize, bound: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    /// Stop as soon as a system reaches `⌊β/2⌋`.
    pub early_exit: bool,
    /// Worker threads; 0 uses the rayon default.
    pub jobs: usize,
    pub budget: u128,
    /// Enumerate even above the budget.
    pub force: bool,
    /// Run a seeded local search for a bound-reaching witness before
    /// enumerating more than `probe_threshold` systems. Only used with
    /// `early_exit`.
    pub probe: bool,
    pub probe_threshold: u128,
    pub probe_evaluations: u64,
    pub seed: u64,
    /// Compare face-trace genus against the associated-surface genus on
    /// every k-th system; 0 disables.
    pub cross_check_every: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            early_exit: true,
            jobs: 0,
            budget: DEFAULT_BUDGET,
            force: false,
            probe: true,
            probe_threshold: 1 << 22,
            probe_evaluations: 4_000_000,
            seed: 0x5eed,
            cross_check_every: 0,
        }
    }
}

impl SearchConfig {
    pub fn census() -> Self {
        SearchConfig {
            early_exit: false,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenusReport {
    pub vertices: usize,
    pub edges: usize,
    pub betti: usize,
    pub euler_bound: usize,
    pub max_genus: usize,
    pub upper_embeddable: bool,
    pub systems_enumerated: u64,
    pub early_exit: bool,
    #[serde(serialize_with = "witness_lines")]
    pub witness: RotationSystem,
    pub elapsed_ms: u64,
}

fn witness_lines<S: Serializer>(r: &RotationSystem, s: S) -> Result<S::Ok, S::Error> {
    r.to_lines().serialize(s)
}

impl GenusReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Rotation search state over dense darts.
///
/// Only vertices with more than one cyclic order take part in the index;
/// the others are fixed once.
struct Layout {
    index: DartIndex,
    enumerator: RotationEnumerator,
    /// Per active vertex: anchor dart, remaining darts, and the permutation
    /// table if small enough.
    active: Vec<ActiveVertex>,
    base_succ: Vec<u32>,
    total: u128,
}

struct ActiveVertex {
    anchor: u32,
    rest: Vec<u32>,
    radix: u128,
    table: Option<Vec<Vec<u32>>>,
}

impl ActiveVertex {
    fn write(&self, digit: u128, succ: &mut [u32], buf: &mut Vec<u32>) {
        let perm: &[u32] = match &self.table {
            Some(t) => &t[digit as usize],
            None => {
                nth_permutation(&self.rest, digit, buf);
                buf
            }
        };
        let mut prev = self.anchor;
        for &d in perm {
            succ[prev as usize] = d;
            prev = d;
        }
        succ[prev as usize] = self.anchor;
    }
}

impl Layout {
    fn new(g: &Multigraph) -> Self {
        let index = DartIndex::new(g);
        let enumerator = RotationEnumerator::new(g);
        let identity = RotationSystem::identity(g);
        let base_succ = index.successor_table(&identity);
        let mut active = Vec::new();
        for (v, &radix) in g.vertices().zip(enumerator.radices()) {
            if radix <= 1 {
                continue;
            }
            let darts: Vec<u32> = g.incident_ends(v).into_iter().map(|e| index.dart(e) as u32).collect();
            let rest = darts[1..].to_vec();
            let table = (radix <= PERM_TABLE_LIMIT).then(|| {
                let mut buf = Vec::new();
                (0..radix)
                    .map(|i| {
                        nth_permutation(&rest, i, &mut buf);
                        buf.clone()
                    })
                    .collect()
            });
            active.push(ActiveVertex {
                anchor: darts[0],
                rest,
                radix,
                table,
            });
        }
        let total = enumerator.count();
        Layout {
            index,
            enumerator,
            active,
            base_succ,
            total,
        }
    }

    fn digits(&self, mut index: u128) -> Vec<u128> {
        let mut digits = vec![0; self.active.len()];
        for (slot, a) in self.active.iter().enumerate().rev() {
            digits[slot] = index % a.radix;
            index /= a.radix;
        }
        digits
    }

    fn load(&self, digits: &[u128], succ: &mut Vec<u32>, buf: &mut Vec<u32>) {
        succ.clone_from(&self.base_succ);
        for (a, &d) in self.active.iter().zip(digits) {
            a.write(d, succ, buf);
        }
    }

    /// Advances `digits` by one; rewrites changed vertices. Returns false on
    /// wrap-around.
    fn step(&self, digits: &mut [u128], succ: &mut [u32], buf: &mut Vec<u32>) -> bool {
        for slot in (0..self.active.len()).rev() {
            let a = &self.active[slot];
            digits[slot] += 1;
            if digits[slot] < a.radix {
                a.write(digits[slot], succ, buf);
                return true;
            }
            digits[slot] = 0;
            a.write(0, succ, buf);
        }
        false
    }

    fn rotation(&self, digits: &[u128]) -> RotationSystem {
        let mut full = Vec::with_capacity(self.enumerator.radices().len());
        let mut it = digits.iter();
        for &r in self.enumerator.radices() {
            full.push(if r > 1 { *it.next().expect("active digit") } else { 0 });
        }
        self.enumerator.from_digits(&full)
    }

    fn genus(&self, succ: &[u32], seen: &mut [bool]) -> usize {
        let faces = self.index.faces(succ, seen);
        self.index.genus(faces).expect("connected graph gives integral genus")
    }
}

#[derive(Debug, Clone, Copy)]
struct ChunkResult {
    best: usize,
    best_index: u128,
    hit: Option<u128>,
}

struct CrossCheck<'a> {
    g: &'a Multigraph,
    tree: Option<SpanningTree>,
    every: u64,
}

impl CrossCheck<'_> {
    fn check(&self, layout: &Layout, index: u128, digits: &[u128], genus: usize) -> Result<(), EngineError> {
        let Some(tree) = &self.tree else { return Ok(()) };
        if self.every == 0 || !index.is_multiple_of(self.every as u128) {
            return Ok(());
        }
        let rotation = layout.rotation(digits);
        let word = associated_surface(self.g, tree, &rotation)?.word;
        let reduced = reduce_to_standard(&word).map_err(JointTreeError::from)?.genus;
        if reduced != genus {
            return Err(EngineError::CrossCheck {
                index,
                faces: genus,
                word: reduced,
            });
        }
        Ok(())
    }
}

fn scan_chunk(
    layout: &Layout,
    range: std::ops::Range<u128>,
    bound: usize,
    early_exit: bool,
    best_hit: &AtomicU64,
    check: &CrossCheck<'_>,
) -> Result<ChunkResult, EngineError> {
    let mut digits = layout.digits(range.start);
    let mut succ = Vec::new();
    let mut buf = Vec::new();
    let mut seen = vec![false; layout.index.dart_count()];
    layout.load(&digits, &mut succ, &mut buf);
    let mut out = ChunkResult {
        best: 0,
        best_index: range.start,
        hit: None,
    };
    let mut first = true;
    let mut i = range.start;
    while i < range.end {
        if early_exit && (i as u64) > best_hit.load(Ordering::Relaxed) {
            break;
        }
        let genus = layout.genus(&succ, &mut seen);
        check.check(layout, i, &digits, genus)?;
        if first || genus > out.best {
            out.best = genus;
            out.best_index = i;
            first = false;
        }
        if early_exit && genus == bound {
            out.hit = Some(i);
            best_hit.fetch_min(i as u64, Ordering::Relaxed);
            break;
        }
        i += 1;
        if i < range.end {
            layout.step(&mut digits, &mut succ, &mut buf);
        }
    }
    Ok(out)
}

/// Seeded local search for a system of genus `bound`.
fn probe(layout: &Layout, bound: usize, config: &SearchConfig) -> Option<(Vec<u128>, u64)> {
    if layout.active.is_empty() {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut buf = Vec::new();
    let mut seen = vec![false; layout.index.dart_count()];
    let mut succ = Vec::new();
    let n = layout.active.len();
    let patience = 40 * n as u64 + 200;
    let mut evaluations = 0u64;
    while evaluations < config.probe_evaluations {
        let mut digits: Vec<u128> = layout.active.iter().map(|a| rng.gen_range(0..a.radix)).collect();
        layout.load(&digits, &mut succ, &mut buf);
        let mut genus = layout.genus(&succ, &mut seen);
        evaluations += 1;
        let mut stale = 0u64;
        while genus < bound && stale < patience && evaluations < config.probe_evaluations {
            let slot = rng.gen_range(0..n);
            let a = &layout.active[slot];
            let old = digits[slot];
            let new = (old + rng.gen_range(1..a.radix)) % a.radix;
            a.write(new, &mut succ, &mut buf);
            let g2 = layout.genus(&succ, &mut seen);
            evaluations += 1;
            if g2 >= genus {
                stale = if g2 > genus { 0 } else { stale + 1 };
                genus = g2;
                digits[slot] = new;
            } else {
                a.write(old, &mut succ, &mut buf);
                stale += 1;
            }
        }
        if genus == bound {
            return Some((digits, evaluations));
        }
    }
    None
}

/// Maximum genus over all rotation systems of `g`.
///
/// The witness is the least-index maximizing system among those inspected,
/// so the report does not depend on `jobs`. When the probe finds a system
/// of genus `⌊β/2⌋` first, that system is the witness and
/// `systems_enumerated` counts probe evaluations.
pub fn max_genus_exhaustive(g: &Multigraph, config: &SearchConfig) -> Result<GenusReport, EngineError> {
    let started = Instant::now();
    let betti = g.betti()?;
    let bound = betti / 2;
    let layout = Layout::new(g);
    let total = layout.total;

    let report = |max_genus: usize, witness: RotationSystem, systems: u128, early: bool| GenusReport {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        betti,
        euler_bound: bound,
        max_genus,
        upper_embeddable: max_genus == bound,
        systems_enumerated: systems.min(u64::MAX as u128) as u64,
        early_exit: early,
        witness,
        elapsed_ms: started.elapsed().as_millis() as u64,
    };

    if config.early_exit && config.probe && bound > 0 && total > config.probe_threshold {
        if let Some((digits, evaluations)) = probe(&layout, bound, config) {
            return Ok(report(bound, layout.rotation(&digits), evaluations as u128, true));
        }
    }
    if total > config.budget && !config.force {
        return Err(EngineError::Budget {
            systems: total,
            budget: config.budget,
        });
    }

    let check = CrossCheck {
        g,
        tree: (config.cross_check_every > 0 && betti > 0)
            .then(|| g.spanning_tree(&TreeStrategy::Search))
            .transpose()?,
        every: config.cross_check_every,
    };
    let best_hit = AtomicU64::new(u64::MAX);
    let chunks = total.div_ceil(CHUNK);
    let run = |c: u128| {
        let start = c * CHUNK;
        let end = (start + CHUNK).min(total);
        if config.early_exit && start as u64 > best_hit.load(Ordering::Relaxed) {
            return Ok(None);
        }
        scan_chunk(&layout, start..end, bound, config.early_exit, &best_hit, &check).map(Some)
    };
    let results: Vec<Option<ChunkResult>> = if config.jobs == 1 {
        (0..chunks).map(run).collect::<Result<_, _>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .expect("thread pool");
        pool.install(|| {
            (0..chunks as u64)
                .into_par_iter()
                .map(|c| run(c as u128))
                .collect::<Result<_, _>>()
        })?
    };

    let hit = results.iter().flatten().filter_map(|r| r.hit).min();
    let (genus, index, systems, early) = match hit {
        Some(h) => (bound, h, h + 1, true),
        None => {
            let best = results
                .iter()
                .flatten()
                .fold(None::<(usize, u128)>, |acc, r| match acc {
                    Some((g0, i0)) if g0 > r.best || (g0 == r.best && i0 <= r.best_index) => acc,
                    _ => Some((r.best, r.best_index)),
                })
                .unwrap_or((0, 0));
            (best.0, best.1, total, false)
        }
    };
    if genus > bound {
        return Err(EngineError::EulerBound { genus, bound });
    }
    let witness = layout.rotation(&layout.digits(index));
    Ok(report(genus, witness, systems, early))
}

/// `γ_M(g)` with the default configuration.
pub fn max_genus(g: &Multigraph) -> Result<usize, EngineError> {
    Ok(max_genus_exhaustive(g, &SearchConfig::default())?.max_genus)
}

pub fn is_upper_embeddable(g: &Multigraph) -> Result<bool, EngineError> {
    Ok(max_genus_exhaustive(g, &SearchConfig::default())?.upper_embeddable)
}
