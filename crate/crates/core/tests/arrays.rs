mod common;

use itertools::Itertools;
use oakit::algebra::{hadamard01_auto, AbelianGroup};
use oakit::array::distance::{distance_spectrum, guaranteed_deletion_budget, is_irredundant, min_distance};
use oakit::array::format::{parse_moa, serialize_moa, MoaDocument};
use oakit::array::strength::{verify_strength, WitnessKind};
use oakit::catalog::seeds::{d3_18_5_3, d_3_3_3, moa_12_3x2_4};
use oakit::constructions::{lemma1_juxtapose, scheme_juxtapose, trivial_moa};
use oakit::algebra::ds_linear;
use oakit::MixedArray;

use common::{naive_irredundant, naive_min_distance, naive_strength};

#[test]
fn printed_ternary_scheme_has_index_two() {
    let a = d3_18_5_3().unwrap().expand();
    assert_eq!((a.runs(), a.cols()), (54, 5));
    let r = verify_strength(&a, 3).unwrap();
    assert!(r.holds && naive_strength(&a, 3));
    assert_eq!(r.index, Some(2));
}

#[test]
fn full_factorial_seven_four_two() {
    let a = trivial_moa(&[7, 4, 2]).unwrap();
    assert_eq!(a.runs(), 56);
    let r = verify_strength(&a, 3).unwrap();
    assert!(r.holds);
    assert_eq!(r.index, Some(1));
}

#[test]
fn one_cell_edit_is_caught_with_witness() {
    let mut a = d3_18_5_3().unwrap().expand();
    a.set(0, 0, (a.cell(0, 0) + 1) % 3).unwrap();
    assert!(!naive_strength(&a, 3));
    let r = verify_strength(&a, 3).unwrap();
    assert!(!r.holds);
    let w = r.witness.expect("a failing subset is reported");
    assert!(w.columns.contains(&0));
    match w.kind {
        WitnessKind::Imbalanced { count, expected, .. } => assert_ne!(count, expected),
        other => panic!("unexpected witness {other:?}"),
    }
}

#[test]
fn hadamard_twelve_expansion_distances() {
    let a = hadamard01_auto(12).unwrap().scheme(2).unwrap().expand();
    let s = distance_spectrum(&a);
    assert_eq!(s.min_distance, 6);
    assert_eq!(naive_min_distance(&a), 6);
    // Each row and its complement differ everywhere; every other pair agrees on half.
    assert_eq!(s.counts.into_iter().collect_vec(), vec![(6, 264), (12, 12)]);
    assert!(is_irredundant(&a, 2).unwrap().holds);
    assert!(!is_irredundant(&a, 6).unwrap().holds);
    assert!(!naive_irredundant(&a, 6));
}

#[test]
fn strength_three_hadamard_36() {
    let a = hadamard01_auto(36).unwrap().scheme(3).unwrap().expand();
    assert_eq!((a.runs(), a.cols()), (72, 36));
    assert!(verify_strength(&a, 3).unwrap().holds);
    assert_eq!(min_distance(&a), 18);
    assert_eq!(guaranteed_deletion_budget(&a, 3), 14);
}

#[test]
fn square_ternary_scheme_has_two_distances() {
    let a = d_3_3_3().unwrap().expand();
    assert_eq!(distance_spectrum(&a).distances(), vec![2, 3]);
}

#[test]
fn one_row_array_convention() {
    let a = MixedArray::from_rows(vec![2, 3], &[[1, 2]]).unwrap();
    assert_eq!(min_distance(&a), 3);
}

#[test]
fn deletions_within_budget_keep_irredundancy() {
    let c = lemma1_juxtapose(moa_12_3x2_4().unwrap(), &hadamard01_auto(12).unwrap().scheme(2).unwrap())
        .unwrap()
        .verify()
        .unwrap();
    let a = c.array;
    assert_eq!(a.profile().id(), "3^1x2^16");
    let budget = guaranteed_deletion_budget(&a, 2);
    assert_eq!(budget, min_distance(&a) - 3);
    let binary: Vec<usize> = (0..a.cols()).filter(|&c| a.level(c) == 2).collect();
    for j in 0..=budget {
        for cols in binary.iter().copied().combinations(j) {
            let b = a.delete_columns(&cols).unwrap();
            assert!(is_irredundant(&b, 2).unwrap().holds, "deleting {cols:?}");
            assert!(verify_strength(&b, 2).unwrap().holds);
        }
    }
}

#[test]
fn juxtaposition_is_plain_concatenation() {
    let seed = trivial_moa(&[3, 3]).unwrap();
    let scheme = ds_linear(3, 2).unwrap();
    let via_lemma = lemma1_juxtapose(&seed, &scheme).unwrap().array;
    assert_eq!(scheme_juxtapose(&seed, &scheme).unwrap(), via_lemma);

    let g = AbelianGroup::Cyclic(3);
    let b = scheme.array();
    let mut rows = Vec::new();
    for i in 0..seed.runs() {
        for s in 0..3 {
            let mut r: Vec<u16> = seed.row(i).to_vec();
            r.extend((0..b.cols()).map(|c| g.add(b.cell(i, c) as u32, s) as u16));
            rows.push(r);
        }
    }
    let mut levels = seed.levels().to_vec();
    levels.extend(b.levels());
    assert_eq!(MixedArray::from_rows(levels, &rows).unwrap(), via_lemma);
}

#[test]
fn format_round_trip_and_errors() {
    let mut doc = MoaDocument::plain(moa_12_3x2_4().unwrap().clone());
    doc.strength = Some(2);
    let text = serialize_moa(&doc);
    assert_eq!(parse_moa(&text).unwrap(), doc);
    assert_eq!(serialize_moa(&parse_moa(&text).unwrap()), text);

    let header_comment = text.replacen("runs", "# a comment\nruns", 1);
    assert_eq!(parse_moa(&header_comment).unwrap(), doc);

    for bad in [
        "",
        "moa v2\nruns 1\nlevels 2\nrows:\n0\n",
        "moa v1\nruns 2\nlevels 2\nrows:\n0\n",
        "moa v1\nruns 1\nlevels 2\nrows:\n2\n",
        "moa v1\nruns 1\nlevels 2 2\nrows:\n0\n",
        "moa v1\nruns 1\nlevels 2\nrows:\nx\n",
    ] {
        assert!(parse_moa(bad).is_err(), "accepted {bad:?}");
    }
}
