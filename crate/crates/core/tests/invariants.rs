//! Exhaustive cross-module invariants at desk scale: everything the lift,
//! elevator, and symmetry constructions promise, checked over complete
//! search spaces rather than samples.

use std::collections::{BTreeMap, HashSet};

use qt_elevator_core::{
    basement_action_orbits, elevator, elevator_inverse, elevator_trace, enumerate_fillings,
    lift_range, macdonald_poly, orbit_of, symmetry_inverse, symmetry_map,
    verify_bijective_q1_symmetry, verify_q1_symmetry, words_of_length, BijectiveSymmetryCheck,
    Filling, Partition, PolySymmetryCheck, Word,
};

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn all_shapes_up_to(weight: u32) -> Vec<Partition> {
    (0..=weight).flat_map(Partition::all_of_weight).collect()
}

fn sorted_letters(word: &Word) -> Vec<u32> {
    let mut v = word.letters().to_vec();
    v.sort_unstable();
    v
}

#[test]
fn elevator_is_bijective_at_full_scale() {
    // every basement a and word w of the same length up to 6, alphabet 3
    for n in 0..=6 {
        for basement in words_of_length(n, 3) {
            let mut images = HashSet::new();
            for word in words_of_length(n, 3) {
                let image = elevator(&basement, &word).unwrap();
                assert_eq!(sorted_letters(&image), sorted_letters(&word));
                assert_eq!(elevator_inverse(&basement, &image).unwrap(), word);
                assert!(images.insert(image), "collision under a={basement}");
            }
            assert_eq!(images.len(), 3usize.pow(n as u32));
        }
    }
}

#[test]
fn elevator_theorem_row_inversions_become_triples() {
    // sum of plain inv over the rows = inv of the elevated filling
    for shape in all_shapes_up_to(7) {
        for f in enumerate_fillings(&shape, 3) {
            let row_inv: u64 = f.rows().iter().map(Word::inv).sum();
            assert_eq!(row_inv, f.elevate().inv(), "shape {shape}, f = {f:?}");
        }
    }
}

/// Replays the two-row argument behind the elevator theorem: build the
/// stage fillings whose bottom row is a partially-consumed basement and
/// whose top row is the corresponding trace stage, and count second-row
/// triples at every stage.
fn stage_triple_counts(basement: &Word, word: &Word) -> Vec<u64> {
    let trace = elevator_trace(basement, word).unwrap();
    let mut counts = vec![word.inv()]; // stage 0: all-zero basement
    for i in 1..=word.len() {
        let mut bottom = basement.letters()[..i].to_vec();
        bottom.resize(basement.len(), basement.letters()[i - 1]);
        let stage = Filling::from_rows(vec![
            Word::new(bottom),
            trace.steps()[i].clone(),
        ])
        .unwrap();
        counts.push(stage.triples_in_row(2).unwrap().len() as u64);
    }
    counts
}

#[test]
fn stage_invariance_of_second_row_triples() {
    // the worked instance
    assert_eq!(
        stage_triple_counts(&w("1432"), &w("4314")),
        vec![3, 3, 3, 3, 3]
    );
    // exhaustively on basements up to length 4 and words of matching or
    // shorter length, alphabet 3
    for nb in 1..=4 {
        for basement in words_of_length(nb, 3) {
            for nw in 0..=nb {
                for word in words_of_length(nw, 3) {
                    let counts = stage_triple_counts(&basement, &word);
                    assert!(
                        counts.windows(2).all(|p| p[0] == p[1]),
                        "a={basement} w={word} counts={counts:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn bottom_row_triples_and_higher_triples_partition_inv() {
    for shape in all_shapes_up_to(7) {
        for f in enumerate_fillings(&shape, 3) {
            let pairs = f.rows().first().map_or(0, Word::inv);
            let higher: u64 = (2..=f.rows().len())
                .map(|r| f.triples_in_row(r).unwrap().len() as u64)
                .sum();
            assert_eq!(f.inv(), pairs + higher);
        }
    }
}

#[test]
fn symmetry_map_is_a_statistic_exchanging_bijection() {
    for shape in all_shapes_up_to(6) {
        let conjugate = shape.conjugate();
        let mut images = HashSet::new();
        for f in enumerate_fillings(&shape, 3) {
            let witness = symmetry_map(&f);
            assert_eq!(witness.maj_in, f.maj());
            assert_eq!(witness.inv_out, witness.output.inv());
            assert_eq!(witness.inv_out, witness.maj_in, "f = {f:?}");
            assert_eq!(witness.output.shape(), &conjugate);
            assert_eq!(witness.output.content(3), f.content(3));
            assert_eq!(symmetry_inverse(&witness.output), f);
            assert!(images.insert(witness.output), "collision at {f:?}");
        }
        assert_eq!(images.len(), 3usize.pow(shape.size() as u32));
    }
}

#[test]
fn elevate_is_bijective_per_shape_and_content() {
    for shape in all_shapes_up_to(6) {
        let mut images = HashSet::new();
        for f in enumerate_fillings(&shape, 3) {
            let image = f.elevate();
            assert_eq!(image.shape(), f.shape());
            assert_eq!(image.content(3), f.content(3));
            assert_eq!(image.elevate_inverse(), f);
            assert!(images.insert(image));
        }
    }
}

#[test]
fn generating_function_and_bijective_verdicts_agree() {
    for shape in all_shapes_up_to(5) {
        for m in [2, 3] {
            let poly_equal = verify_q1_symmetry(&shape, m) == PolySymmetryCheck::Equal;
            let bijective_ok = matches!(
                verify_bijective_q1_symmetry(&shape, m),
                BijectiveSymmetryCheck::Ok { .. }
            );
            assert!(poly_equal && bijective_ok, "shape {shape}, m {m}");
        }
    }
}

#[test]
fn coefficient_mass_counts_fillings() {
    for shape in all_shapes_up_to(6) {
        for m in [2u32, 3] {
            assert_eq!(
                macdonald_poly(&shape, m).mass(),
                (m as u64).pow(shape.size() as u32)
            );
        }
    }
}

#[test]
fn row_inv_distribution_matches_image_inv_distribution() {
    for shape in all_shapes_up_to(6) {
        let mut by_rows: BTreeMap<(u64, Vec<u32>), u64> = BTreeMap::new();
        let mut by_images: BTreeMap<(u64, Vec<u32>), u64> = BTreeMap::new();
        for f in enumerate_fillings(&shape, 3) {
            let row_inv: u64 = f.rows().iter().map(Word::inv).sum();
            *by_rows.entry((row_inv, f.content(3))).or_insert(0) += 1;
            let image = f.elevate();
            *by_images.entry((image.inv(), image.content(3))).or_insert(0) += 1;
        }
        assert_eq!(by_rows, by_images, "shape {shape}");
    }
}

#[test]
fn orbits_partition_the_group_and_preserve_inv() {
    let mut expected_factorial = 1u64;
    for n in 1..=6 {
        expected_factorial *= n as u64;
        let report = basement_action_orbits(n, 8).unwrap();
        assert_eq!(report.total(), expected_factorial);
        assert_eq!(
            report.fixed_points,
            report.cycle_lengths.get(&1).copied().unwrap_or(0)
        );
        assert_eq!(
            report.num_orbits,
            report.cycle_lengths.values().sum::<usize>()
        );
    }
    // inv constant and content preserved along sampled orbits
    for start in ["51324", "123456", "654321", "35142"] {
        let start = w(start);
        for word in orbit_of(&start).unwrap() {
            assert_eq!(word.inv(), start.inv());
            assert_eq!(sorted_letters(&word), sorted_letters(&start));
        }
    }
}
