use std::collections::BTreeSet;

use maxgenus_core::critical::detect_gamma;
use maxgenus_core::engine::{is_upper_embeddable, max_genus, max_genus_exhaustive, SearchConfig};
use maxgenus_core::families::{generate, random_cubic, v, FamilySpec};
use maxgenus_core::graph::{EdgeEnd, EdgeId, Multigraph, TreeStrategy};
use maxgenus_core::jointree::{associated_surface, enumerate_rotations, face_trace_genus, RotationSystem};
use maxgenus_core::surface::reduce_to_standard;
use maxgenus_core::verify::gadget_in_k4;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn k4() -> Multigraph {
    Multigraph::from_edges(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

fn word_genus(g: &Multigraph, tree: &TreeStrategy, rotation: &RotationSystem) -> usize {
    let tree = g.spanning_tree(tree).unwrap();
    let surface = associated_surface(g, &tree, rotation).unwrap();
    reduce_to_standard(&surface.word).unwrap().genus
}

/// Reverses the orientation of every edge whose bit is set in `mask`.
fn flip(g: &Multigraph, rotation: &RotationSystem, mask: u64) -> (Multigraph, RotationSystem) {
    let flipped = |e: EdgeId| mask >> (e.0 % 64) & 1 == 1;
    let mut h = Multigraph::new();
    for (e, [a, b]) in g.edges() {
        let id = if flipped(e) { h.add_edge(b, a) } else { h.add_edge(a, b) };
        assert_eq!(id, e);
    }
    let swap = |end: EdgeEnd| if flipped(end.edge) { end.opposite() } else { end };
    let r = RotationSystem::new(rotation.iter().map(|(v, ends)| (v, ends.iter().copied().map(swap).collect())).collect());
    (h, r)
}

#[test]
fn k4_genus_agrees_under_two_trees() {
    let g = k4();
    let star = TreeStrategy::Explicit([EdgeId(0), EdgeId(1), EdgeId(2)].into());
    let path = TreeStrategy::Explicit([EdgeId(0), EdgeId(3), EdgeId(5)].into());
    for r in enumerate_rotations(&g).iter() {
        let f = face_trace_genus(&g, &r).unwrap();
        assert_eq!(word_genus(&g, &star, &r), f);
        assert_eq!(word_genus(&g, &path, &r), f);
    }
}

#[test]
fn mirror_rotation_keeps_genus() {
    let g = generate(&FamilySpec::Mobius(3)).unwrap().graph;
    for r in enumerate_rotations(&g).iter() {
        assert_eq!(face_trace_genus(&g, &r).unwrap(), face_trace_genus(&g, &r.reversed()).unwrap());
    }
}

#[test]
fn splits_of_small_spiral_stay_upper_embeddable() {
    let s = generate(&FamilySpec::Spiral { m: 3, n: 3 }).unwrap().graph;
    assert!(is_upper_embeddable(&s).unwrap());
    let mut checked = 0;
    for u in s.vertices() {
        let ends = s.incident_ends(u);
        for mask in 1u32..(1 << ends.len()) - 1 {
            let block: BTreeSet<EdgeEnd> = (0..ends.len()).filter(|i| mask >> i & 1 == 1).map(|i| ends[i]).collect();
            let (h, _, link) = s.split_vertex(u, &block).unwrap();
            assert_eq!(h.betti().unwrap(), s.betti().unwrap());
            assert!(is_upper_embeddable(&h).unwrap(), "split at {u} with {block:?}");
            assert_eq!(h.contract_edge(link).unwrap().betti().unwrap(), s.betti().unwrap());
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn extended_spirals_are_upper_embeddable() {
    for (m, n) in [(3, 2), (3, 4), (5, 3), (5, 5)] {
        let top = 2 * n + m;
        for gadgets in [vec![], vec![(top - 1, top)], vec![(1, 2)]] {
            let spec = FamilySpec::ExtendedSpiral { m, n, gadgets };
            let g = generate(&spec).unwrap().graph;
            assert!(is_upper_embeddable(&g).unwrap(), "{spec}");
        }
    }
}

#[test]
fn gadget_collapse_restores_the_host_edge() {
    let g = gadget_in_k4();
    let before = max_genus(&g).unwrap();
    let mut h = g.cleanup();
    for _ in 0..2 {
        let hit = detect_gamma(&h)
            .into_iter()
            .find(|f| f.vertex.0 >= 4)
            .expect("gadget vertex is a gamma vertex");
        h = h.delete_vertex(hit.vertex).unwrap().cleanup();
    }
    let ends: BTreeSet<(u32, u32)> = h
        .edges()
        .map(|(_, [a, b])| (a.0.min(b.0), a.0.max(b.0)))
        .collect();
    assert_eq!(h.edge_count(), 6);
    assert_eq!(ends, k4().edges().map(|(_, [a, b])| (a.0, b.0)).collect());
    assert_eq!(max_genus(&h).unwrap() + 2, before);
}

#[test]
fn deleting_top_spiral_vertex_drops_one() {
    let g = generate(&FamilySpec::Spiral { m: 4, n: 4 }).unwrap().graph;
    let h = g.delete_vertex(v(4 + 2 * 4 - 2)).unwrap();
    assert_eq!(max_genus(&h).unwrap() + 1, max_genus(&g).unwrap());
}

#[test]
fn census_and_early_exit_agree_on_cubics() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for order in [4, 6, 8] {
        let g = random_cubic(order, &mut rng).unwrap();
        let fast = max_genus_exhaustive(&g, &SearchConfig::default()).unwrap();
        let full = max_genus_exhaustive(&g, &SearchConfig::census()).unwrap();
        assert_eq!(fast.max_genus, full.max_genus);
        assert!(full.max_genus <= full.betti / 2);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exponent_convention_does_not_change_genus(index in 0u128..64, mask: u64) {
        let g = generate(&FamilySpec::Mobius(3)).unwrap().graph;
        let r = enumerate_rotations(&g).nth(index).unwrap();
        let (h, s) = flip(&g, &r, mask);
        let tree = TreeStrategy::Search;
        prop_assert_eq!(word_genus(&g, &tree, &r), word_genus(&h, &tree, &s));
        prop_assert_eq!(face_trace_genus(&g, &r).unwrap(), face_trace_genus(&h, &s).unwrap());
    }

    #[test]
    fn word_genus_matches_faces_on_random_cubics(seed: u64, index: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_cubic(8, &mut rng).unwrap();
        let rotations = enumerate_rotations(&g);
        let r = rotations.nth(index as u128 % rotations.count()).unwrap();
        prop_assert_eq!(word_genus(&g, &TreeStrategy::Search, &r), face_trace_genus(&g, &r).unwrap());
    }

    #[test]
    fn vertex_order_does_not_change_max_genus(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_cubic(6, &mut rng).unwrap();
        let relabelled = Multigraph::from_edges(
            &g.edges().map(|(_, [a, b])| (5 - a.0, 5 - b.0)).collect::<Vec<_>>(),
        );
        prop_assert_eq!(max_genus(&g).unwrap(), max_genus(&relabelled).unwrap());
    }
}
