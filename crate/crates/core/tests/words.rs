use maxgenus_core::surface::{
    genus_by_corner_orbits, parse_word, reduce_to_standard, transform1_step, transform2_step, SurfaceWord,
};
use maxgenus_core::verify::random_word;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn word(k: usize, seed: u64) -> SurfaceWord {
    random_word(k, &mut ChaCha8Rng::seed_from_u64(seed))
}

#[test]
fn standard_forms_reduce_to_their_genus() {
    for p in 0..=8 {
        let w = SurfaceWord::standard(p);
        let form = reduce_to_standard(&w).unwrap();
        assert_eq!(form.genus, p);
        assert_eq!(genus_by_corner_orbits(&w).unwrap(), p);
    }
}

#[test]
fn trace_replays_to_the_final_word() {
    let w = parse_word("a b c a^-1 d b^-1 c^-1 d^-1").unwrap();
    let form = reduce_to_standard(&w).unwrap();
    let last = form.trace.last().map(|s| s.result.clone()).unwrap();
    assert_eq!(&last, form.word.polygon());
    assert_eq!(form.trace_log().lines().count(), form.trace.len());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn reduction_matches_corner_orbits(k in 1usize..=8, seed: u64) {
        let w = word(k, seed);
        prop_assert_eq!(reduce_to_standard(&w).unwrap().genus, genus_by_corner_orbits(&w).unwrap());
    }

    #[test]
    fn every_trace_step_keeps_the_genus(k in 1usize..=7, seed: u64) {
        let w = word(k, seed);
        let g = genus_by_corner_orbits(&w).unwrap();
        for step in reduce_to_standard(&w).unwrap().trace {
            prop_assert_eq!(genus_by_corner_orbits(&step.result).unwrap(), g, "{:?}", step.kind);
        }
    }

    #[test]
    fn single_transforms_keep_the_genus(k in 2usize..=7, seed: u64) {
        let w = word(k, seed);
        let g = genus_by_corner_orbits(&w).unwrap();
        if let Some(step) = transform1_step(&w) {
            prop_assert_eq!(genus_by_corner_orbits(&step.result).unwrap(), g);
        }
        if let Some(step) = transform2_step(&w) {
            prop_assert_eq!(genus_by_corner_orbits(&step.result).unwrap(), g);
        }
    }

    #[test]
    fn genus_ignores_rotation_and_mirror(k in 1usize..=8, seed: u64, shift: usize) {
        let w = word(k, seed);
        let g = reduce_to_standard(&w).unwrap().genus;
        prop_assert_eq!(reduce_to_standard(&w.rotated(shift % w.len())).unwrap().genus, g);
        prop_assert_eq!(reduce_to_standard(&w.mirrored()).unwrap().genus, g);
    }

    #[test]
    fn reduction_result_is_canonical(k in 1usize..=6, seed: u64, shift: usize) {
        let w = word(k, seed);
        let a = reduce_to_standard(&w).unwrap();
        let b = reduce_to_standard(&w.rotated(shift % w.len())).unwrap();
        prop_assert_eq!(a.word, b.word);
    }

    #[test]
    fn genus_bounded_by_half_the_symbols(k in 1usize..=8, seed: u64) {
        let w = word(k, seed);
        prop_assert!(reduce_to_standard(&w).unwrap().genus <= k / 2);
    }
}
