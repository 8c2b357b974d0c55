mod common;

use std::time::{Duration, Instant};

use oakit::array::distance::min_distance;
use oakit::catalog::seeds::d_3_3_3;
use oakit::search::{exhaustive_nonexistence, search_moa, search_partition, NonexistenceVerdict, SearchOutcome, SearchSpec};

use common::naive_strength;

fn found(spec: &SearchSpec) -> oakit::MixedArray {
    match search_moa(spec).unwrap() {
        SearchOutcome::Found { array, .. } => array,
        other => panic!("{spec:?}: {other:?}"),
    }
}

#[test]
fn finds_ternary_binary_seed() {
    let a = found(&SearchSpec::new(12, vec![3, 2, 2, 2, 2], 2));
    assert_eq!(a.levels(), &[3, 2, 2, 2, 2]);
    assert!(naive_strength(&a, 2));
    assert!(a.row(0).iter().all(|&v| v == 0));
    assert!(a.sorted_rows() == (0..a.runs()).map(|i| a.row(i).to_vec()).collect::<Vec<_>>());
}

#[test]
fn finds_three_party_seed_with_distance_floor() {
    let a = found(&SearchSpec::new(6, vec![6, 3, 2], 1).with_min_distance(2));
    assert!(naive_strength(&a, 1));
    assert!(min_distance(&a) >= 2);
}

#[test]
fn search_is_deterministic() {
    let spec = SearchSpec::new(16, vec![4, 2, 2, 2, 2, 2], 2);
    assert_eq!(search_moa(&spec).unwrap(), search_moa(&spec).unwrap());
}

#[test]
fn tiny_space_is_exhausted() {
    // Four runs over two binary columns cannot keep rows two apart.
    let spec = SearchSpec::new(4, vec![2, 2], 2).with_min_distance(2);
    assert!(matches!(search_moa(&spec).unwrap(), SearchOutcome::ProvedNonexistent { .. }));
}

#[test]
fn budget_is_respected() {
    let spec = SearchSpec::new(24, vec![3, 2, 2, 2, 2, 2, 2, 2, 2, 2], 2).with_min_distance(4).with_budget(1000);
    match search_moa(&spec).unwrap() {
        SearchOutcome::NotFoundWithinBudget { nodes } => assert!(nodes <= 1001),
        SearchOutcome::Found { array, .. } => assert!(min_distance(&array) >= 4),
        other => panic!("{other:?}"),
    }
}

#[test]
fn ruled_out_patterns_are_fast() {
    for levels in [vec![3, 2, 2, 2, 2], vec![2, 2, 3, 3, 3], vec![5, 5, 5, 2, 3]] {
        let t = Instant::now();
        let spec = SearchSpec::new(levels.iter().map(|&l| l as usize).product(), levels.clone(), 2);
        let v = exhaustive_nonexistence(&spec).unwrap();
        assert!(matches!(v, NonexistenceVerdict::ProvedNonexistent { .. }), "{levels:?}: {v:?}");
        assert!(t.elapsed() < Duration::from_secs(1));
    }
}

#[test]
fn open_pattern_is_never_asserted() {
    let spec = SearchSpec::new(18, vec![2, 3, 3, 3, 3], 2).with_budget(2_000_000);
    match exhaustive_nonexistence(&spec).unwrap() {
        NonexistenceVerdict::ProvedNonexistent { .. } | NonexistenceVerdict::Inconclusive { .. } => {}
        NonexistenceVerdict::FoundCounterexample { array } => {
            assert!(naive_strength(&array, 2));
            assert!(min_distance(&array) >= 3);
        }
    }
}

#[test]
fn partition_of_small_oa() {
    let a = d_3_3_3().unwrap().expand();
    let p = search_partition(&a, 3, 100_000).unwrap().expect("a partition exists");
    assert_eq!(p.len(), 3);
    for b in p.block_arrays(&a).unwrap() {
        assert!(naive_strength(&b, 1));
    }
    assert!(search_partition(&a, 2, 1000).is_err());
}

#[test]
fn infeasible_specs() {
    assert!(matches!(search_moa(&SearchSpec::new(10, vec![2, 2], 2)).unwrap(), SearchOutcome::Infeasible { .. }));
    assert!(search_moa(&SearchSpec::new(4, vec![2, 2], 3)).is_err());
}

/// Largest minimal distance over every multiset of rows with strength `k`,
/// or `None` when no such multiset exists.
fn brute_force_best_distance(runs: usize, levels: &[u32], k: usize) -> Option<usize> {
    use itertools::Itertools;
    let all_rows: Vec<Vec<u16>> = levels.iter().map(|&l| 0..l as u16).multi_cartesian_product().collect();
    all_rows
        .iter()
        .combinations_with_replacement(runs)
        .filter_map(|rows| {
            let a = oakit::MixedArray::from_rows(levels.to_vec(), &rows).unwrap();
            naive_strength(&a, k).then(|| common::naive_min_distance(&a))
        })
        .max()
}

#[test]
fn search_agrees_with_brute_force_on_tiny_specs() {
    let specs: &[(usize, &[u32], usize)] = &[
        (4, &[2, 2, 2], 2),
        (4, &[2, 2, 2, 2], 1),
        (6, &[3, 2, 2], 1),
        (6, &[3, 2, 2, 2], 1),
        (8, &[2, 2, 2, 2], 2),
        (8, &[4, 2, 2], 2),
        (6, &[2, 3, 3], 1),
        (3, &[3, 3, 3], 1),
        (12, &[3, 2, 2], 2),
    ];
    for &(runs, levels, k) in specs {
        let best = brute_force_best_distance(runs, levels, k);
        for w in 1..=levels.len() {
            let spec = SearchSpec::new(runs, levels.to_vec(), k).with_min_distance(w);
            let expected = best.is_some_and(|b| b >= w);
            let got = match search_moa(&spec).unwrap() {
                SearchOutcome::Found { array, .. } => {
                    assert!(naive_strength(&array, k) && common::naive_min_distance(&array) >= w);
                    true
                }
                SearchOutcome::ProvedNonexistent { .. } | SearchOutcome::Infeasible { .. } => false,
                SearchOutcome::NotFoundWithinBudget { .. } => panic!("budget exhausted on a tiny spec"),
            };
            assert_eq!(got, expected, "{runs} runs {levels:?} k = {k} w = {w}");
        }
    }
}
