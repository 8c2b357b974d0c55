mod common;

use std::sync::OnceLock;

use oakit::array::distance::{guaranteed_deletion_budget, is_irredundant, is_irredundant_direct, min_distance};
use oakit::array::format::{parse_moa, serialize_moa, MoaDocument};
use oakit::array::strength::verify_strength;
use oakit::quantum::verify_k_uniform;
use oakit::MixedArray;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{corrupt, naive_irredundant, naive_min_distance, naive_strength, scramble};

fn pool() -> &'static [MixedArray] {
    static POOL: OnceLock<Vec<MixedArray>> = OnceLock::new();
    POOL.get_or_init(common::pool)
}

/// A scrambled pool member, corrupted about a third of the time.
fn sample(index: usize, seed: u64) -> MixedArray {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = scramble(&pool()[index % pool().len()], &mut rng);
    if rng.gen_bool(0.35) {
        corrupt(&a, &mut rng)
    } else {
        a
    }
}

fn arb() -> impl Strategy<Value = MixedArray> {
    (0..1000usize, any::<u64>()).prop_map(|(i, s)| sample(i, s))
}

/// Same array up to column order, symbol names and row order.
fn relabeled(a: &MixedArray, seed: u64) -> MixedArray {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cols: Vec<usize> = (0..a.cols()).collect();
    cols.shuffle(&mut rng);
    let b = a.select_columns(&cols).unwrap();
    let perms: Vec<Vec<u16>> = b
        .levels()
        .iter()
        .map(|&l| {
            let mut p: Vec<u16> = (0..l as u16).collect();
            p.shuffle(&mut rng);
            p
        })
        .collect();
    let b = b.relabel(&perms).unwrap();
    let mut rows: Vec<usize> = (0..b.runs()).collect();
    rows.shuffle(&mut rng);
    b.select_rows(&rows).unwrap()
}

/// A relabeled pool member with a positive deletion budget at `k`.
fn with_budget() -> impl Strategy<Value = (MixedArray, usize)> {
    static ROOMY: OnceLock<Vec<MixedArray>> = OnceLock::new();
    let roomy = ROOMY.get_or_init(|| pool().iter().filter(|a| min_distance(a) >= 3).cloned().collect());
    (0..roomy.len(), any::<u64>()).prop_flat_map(move |(i, s)| {
        let a = relabeled(&roomy[i], s);
        let top = min_distance(&a) - 2;
        (Just(a), 1..=top)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn strength_matches_brute_force(a in arb(), k in 1usize..=3) {
        prop_assume!(k <= a.cols());
        prop_assert_eq!(verify_strength(&a, k).unwrap().holds, naive_strength(&a, k));
    }

    #[test]
    fn distance_matches_brute_force(a in arb()) {
        prop_assert_eq!(min_distance(&a), naive_min_distance(&a));
    }

    #[test]
    fn irredundancy_criteria_agree(a in arb(), k in 1usize..=4) {
        prop_assume!(k < a.cols());
        let fast = is_irredundant(&a, k).unwrap().holds;
        prop_assert_eq!(fast, is_irredundant_direct(&a, k).unwrap().holds);
        prop_assert_eq!(fast, naive_irredundant(&a, k));
    }

    #[test]
    fn uniformity_is_strength_plus_distance(a in arb(), k in 1usize..=3) {
        prop_assume!(k < a.cols());
        let expected = verify_strength(&a, k).unwrap().holds && min_distance(&a) > k;
        prop_assert_eq!(verify_k_uniform(&a, k).unwrap().holds, expected);
    }

    #[test]
    fn verdicts_survive_relabeling(a in arb(), seed in any::<u64>(), k in 1usize..=3) {
        prop_assume!(k < a.cols());
        let b = relabeled(&a, seed);
        prop_assert_eq!(verify_strength(&a, k).unwrap().holds, verify_strength(&b, k).unwrap().holds);
        prop_assert_eq!(min_distance(&a), min_distance(&b));
        prop_assert_eq!(verify_k_uniform(&a, k).unwrap().holds, verify_k_uniform(&b, k).unwrap().holds);
    }

    #[test]
    fn strength_is_monotone(a in arb(), k in 2usize..=3) {
        prop_assume!(k <= a.cols());
        if verify_strength(&a, k).unwrap().holds {
            prop_assert!(verify_strength(&a, k - 1).unwrap().holds);
        }
    }

    #[test]
    fn column_deletion_effects(a in arb(), pick in any::<prop::sample::Index>(), k in 1usize..=2) {
        prop_assume!(a.cols() > k + 1);
        let c = pick.index(a.cols());
        let b = a.delete_columns(&[c]).unwrap();
        if verify_strength(&a, k).unwrap().holds {
            prop_assert!(verify_strength(&b, k).unwrap().holds);
        }
        let (ma, mb) = (min_distance(&a), min_distance(&b));
        prop_assert!(mb <= ma && mb + 1 >= ma.min(a.cols()));
    }

    #[test]
    fn deletions_within_budget_stay_irredundant((a, k) in with_budget(), seed in any::<u64>()) {
        let budget = guaranteed_deletion_budget(&a, k);
        prop_assert!(budget > 0 && is_irredundant(&a, k).unwrap().holds);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut cols: Vec<usize> = (0..a.cols()).collect();
        cols.shuffle(&mut rng);
        cols.truncate(rng.gen_range(1..=budget));
        let b = a.delete_columns(&cols).unwrap();
        prop_assert!(b.cols() > k);
        prop_assert!(is_irredundant(&b, k).unwrap().holds);
    }

    #[test]
    fn format_round_trips(a in arb(), strength in proptest::option::of(0usize..4)) {
        let doc = MoaDocument { array: a, kind: None, strength };
        let text = serialize_moa(&doc);
        prop_assert_eq!(parse_moa(&text).unwrap(), doc);
    }
}
