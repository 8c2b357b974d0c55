//! The acceptance suite: one line per criterion, non-zero exit on failure.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use itertools::Itertools;
use oakit::algebra::kron::product_construction;
use oakit::algebra::{ds_linear, hadamard01_auto, DifferenceScheme};
use oakit::array::distance::{is_irredundant, is_irredundant_direct, min_distance};
use oakit::array::strength::verify_strength;
use oakit::catalog::fixture;
use oakit::catalog::seeds::d_3_3_3;
use oakit::constructions::families::{generated_scheme, thm3_family, thm7_family, thm8_family};
use oakit::constructions::{bush_oa_truncated, feasibility_5col, lemma1_juxtapose, Feasibility};
use oakit::quantum::{is_ame, reduced_density, verify_k_uniform};
use oakit::search::{search_moa, SearchOutcome, SearchSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn golden_two_uniform() -> Check {
    let a = fixture("3^1x2^9").map_err(e)?.array().map_err(e)?;
    ensure((a.runs(), a.cols()) == (24, 10), format!("shape {}x{}", a.runs(), a.cols()))?;
    ensure(verify_strength(&a, 2).map_err(e)?.holds, "strength 2 fails")?;
    let md = min_distance(&a);
    ensure(md >= 3, format!("MD {md}"))?;
    let u = verify_k_uniform(&a, 2).map_err(e)?;
    ensure(u.holds && u.subsets_checked == 45, format!("{}/{} subsets", u.subsets_passed, u.subsets_checked))?;
    Ok(format!("24x10, MD {md}, 45/45 pairs maximally mixed"))
}

fn golden_three_uniform() -> Check {
    let a = fixture("4^5x2^2").map_err(e)?.array().map_err(e)?;
    ensure((a.runs(), a.cols()) == (64, 7), "shape")?;
    let u = verify_k_uniform(&a, 3).map_err(e)?;
    ensure(u.holds && u.subsets_checked == 35, format!("{}/{} subsets", u.subsets_passed, u.subsets_checked))?;
    for s in (0..7).combinations(3) {
        let rho = reduced_density(&a, &s).map_err(e)?;
        ensure(rho.is_maximally_mixed(), format!("{s:?} is not I/D"))?;
    }
    Ok("64 kets, 35/35 triples equal I/D".into())
}

fn juxtaposition_contract() -> Check {
    let mut squares: Vec<DifferenceScheme> =
        [2, 4, 8, 12, 16, 20, 24, 36].iter().map(|&n| hadamard01_auto(n)?.scheme(2)).try_collect().map_err(e)?;
    squares.push(d_3_3_3().map_err(e)?);
    for s in &squares {
        let r = s.rows();
        let md = min_distance(&s.expand());
        ensure(md == r - r / s.order() as usize, format!("D({r},{r},{}) has MD {md}", s.order()))?;
    }
    let mut pairs = 0;
    for seed in common::pool().into_iter().filter(|a| a.cols() >= 2) {
        if !verify_strength(&seed, 2).map_err(e)?.holds {
            continue;
        }
        let r = seed.runs();
        let mut schemes: Vec<DifferenceScheme> = squares.iter().filter(|s| s.rows() == r).cloned().collect();
        for (d, n) in [(3, 2), (4, 2), (5, 2), (3, 3)] {
            if (d as usize).pow(n) == r {
                schemes.push(ds_linear(d, n).map_err(e)?);
            }
        }
        for s in schemes {
            let c = lemma1_juxtapose(&seed, &s).map_err(e)?;
            let want = r.min(min_distance(&seed) + r - r / s.order() as usize);
            let got = min_distance(&c.array);
            let predicted = c.certificate.predicted_md.as_ref().map(|p| p.value);
            ensure(got == want && predicted == Some(want), format!("{} with order {r}: {got} vs {want}", seed.profile()))?;
            pairs += 1;
        }
    }
    ensure(pairs >= 10, format!("only {pairs} seed/scheme pairs"))?;
    Ok(format!("{} square schemes, {pairs} seed/scheme pairs exact", squares.len()))
}

fn strength_three_family() -> Check {
    let c = thm3_family(5, 36).map_err(e)?;
    let a = &c.array;
    ensure((a.runs(), a.cols()) == (216, 41), format!("shape {}x{}", a.runs(), a.cols()))?;
    ensure(a.profile().id() == "3^5x2^36", a.profile().id())?;
    let s = verify_strength(a, 3).map_err(e)?;
    ensure(s.holds && s.subsets_checked == 10660, format!("{} triples", s.subsets_checked))?;
    let md = min_distance(a);
    ensure(md >= 4, format!("MD {md}"))?;
    ensure(verify_k_uniform(a, 3).map_err(e)?.holds, "not 3-uniform")?;
    Ok(format!("216x41 over 3^5 2^36, 10660 triples, MD {md}, 3-uniform"))
}

fn host_replacement() -> Check {
    let scheme = generated_scheme(12, 2).map_err(e)?;
    let host = thm8_family(&scheme, 12, None, 0).map_err(e)?;
    ensure(host.array.profile().id() == "12^1x2^12" && host.array.runs() == 24, "host shape")?;
    ensure(is_irredundant(&host.array, 2).map_err(e)?.holds, "host not irredundant")?;
    let scheme_md = min_distance(&scheme.expand());
    ensure(scheme_md == 6, format!("scheme part MD {scheme_md}"))?;
    let seed = match search_moa(&SearchSpec::new(12, vec![3, 2, 2, 2, 2], 2)).map_err(e)? {
        SearchOutcome::Found { array, .. } => array,
        other => return Err(format!("seed search: {other:?}")),
    };
    // Full replacement gives 3^1 2^16; eight binary columns are then
    // removed by search while the distance stays at least 3.
    let c = thm8_family(&scheme, 12, Some((seed, None)), 8).map_err(e)?;
    ensure(c.array.runs() == 24 && c.array.profile().id() == "3^1x2^8", c.array.profile().id())?;
    ensure(verify_k_uniform(&c.array, 2).map_err(e)?.holds, "not 2-uniform")?;
    Ok(format!("host MD {}, scheme MD 6, 24x9 over 3^1 2^8 is 2-uniform", min_distance(&host.array)))
}

fn composite_levels() -> Check {
    let a = bush_oa_truncated(7, 4, 8).map_err(e)?;
    let s = verify_strength(&a, 4).map_err(e)?;
    ensure(a.runs() == 2401 && s.holds && s.subsets_checked == 70, "OA(2401,8,7,4) check")?;
    let md = min_distance(&a);
    ensure(md == 5, format!("MD {md}"))?;
    let p = product_construction(&bush_oa_truncated(3, 2, 4).map_err(e)?, &bush_oa_truncated(4, 2, 4).map_err(e)?)
        .map_err(e)?;
    ensure(p.runs() == 144 && p.levels().iter().all(|&l| l == 12), "product shape")?;
    ensure(verify_strength(&p, 2).map_err(e)?.holds, "product strength")?;
    ensure(min_distance(&p) >= 3, "product MD")?;
    let c = thm7_family(2, &[3, 4], &[vec![4, 3]]).map_err(e)?;
    ensure(c.is_verified() && c.array.runs() == 144 && c.array.profile().id() == "12^3x4^1x3^1", "replacement")?;
    Ok(format!("OA(2401,8,7,4) MD 5, product MD {}, 144x5 over 12^3 4^1 3^1 verified", min_distance(&p)))
}

fn equivalence_suite() -> Check {
    let pool = common::pool();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let (mut arrays, mut corrupted, mut comparisons) = (0, 0, 0);
    while arrays < 240 {
        let base = &pool[rng.gen_range(0..pool.len())];
        let mut a = common::scramble(base, &mut rng);
        if rng.gen_bool(0.4) {
            a = common::corrupt(&a, &mut rng);
            corrupted += 1;
        }
        if a.runs() > 72 || a.cols() > 12 || a.levels().iter().any(|&l| l > 6) {
            continue;
        }
        arrays += 1;
        for k in 1..=3usize.min(a.cols() - 1) {
            let lhs = verify_k_uniform(&a, k).map_err(e)?.holds;
            let rhs = verify_strength(&a, k).map_err(e)?.holds && min_distance(&a) > k;
            ensure(lhs == rhs, format!("uniformity disagrees on {} at k = {k}", a.profile()))?;
            let fast = is_irredundant(&a, k).map_err(e)?.holds;
            let direct = is_irredundant_direct(&a, k).map_err(e)?.holds;
            ensure(fast == direct, format!("irredundancy disagrees on {} at k = {k}", a.profile()))?;
            comparisons += 2;
        }
    }
    Ok(format!("{arrays} arrays ({corrupted} corrupted), {comparisons} comparisons, 0 disagreements"))
}

fn five_column_patterns() -> Check {
    for l in [[3, 2, 2, 2, 2], [2, 2, 3, 3, 3], [5, 5, 5, 2, 3], [2, 3, 5, 7, 11]] {
        ensure(feasibility_5col(&l).map_err(e)?.is_impossible(), format!("{l:?} not ruled out"))?;
    }
    ensure(!feasibility_5col(&[2, 3, 3, 3, 3]).map_err(e)?.is_impossible(), "(2,3,3,3,3) ruled out")?;

    // Every ruled-out pattern over levels 2..=5 whose smallest admissible
    // run count is small enough is searched directly, without the filter.
    let mut searched = 0;
    for l in (0..5).map(|_| 2u32..=5).multi_cartesian_product() {
        if !l.windows(2).all(|w| w[0] >= w[1]) {
            continue;
        }
        let Feasibility::Impossible(_) = feasibility_5col(&l).map_err(e)? else { continue };
        let runs = l
            .iter()
            .tuple_combinations()
            .map(|(&a, &b)| (a * b) as usize)
            .fold(1, num_integer::lcm);
        if runs > 100 {
            continue;
        }
        let spec = SearchSpec::new(runs, l.clone(), 2).with_min_distance(3).with_budget(2_000_000);
        if let SearchOutcome::Found { .. } = search_moa(&spec).map_err(e)? {
            return Err(format!("counterexample for {l:?} at {runs} runs"));
        }
        searched += 1;
    }
    ensure(searched >= 5, format!("only {searched} tiny cases"))?;
    Ok(format!("4 ruled out, (2,3,3,3,3) open, {searched} tiny cases searched without counterexample"))
}

fn seed_search() -> Check {
    let mut notes = Vec::new();
    for (spec, name) in [
        (SearchSpec::new(12, vec![3, 2, 2, 2, 2], 2), "MOA(12,5,3^1 2^4,2)"),
        (SearchSpec::new(6, vec![6, 3, 2], 1).with_min_distance(2), "MOA(6,3,6^1 3^1 2^1,1)"),
    ] {
        let t = Instant::now();
        let a = match search_moa(&spec).map_err(e)? {
            SearchOutcome::Found { array, .. } => array,
            other => return Err(format!("{name}: {other:?}")),
        };
        let dt = t.elapsed();
        ensure(dt < Duration::from_secs(5), format!("{name} took {dt:?}"))?;
        ensure(verify_strength(&a, spec.strength).map_err(e)?.holds, format!("{name} strength"))?;
        if spec.runs == 6 {
            ensure(min_distance(&a) >= 2 && is_ame(&a).map_err(e)?, "AME seed")?;
        }
        notes.push(format!("{name} in {dt:.1?}"));
    }
    Ok(format!("{}, AME confirmed", notes.join(", ")))
}

fn catalog_determinism() -> Check {
    let dir = tempfile::tempdir().map_err(e)?;
    let run = |sub: &str| -> Result<(), String> {
        let out = Command::new(env!("CARGO_BIN_EXE_oakit"))
            .args(["catalog", "build", "all", "-o", sub])
            .current_dir(dir.path())
            .output()
            .map_err(e)?;
        ensure(out.status.success(), String::from_utf8_lossy(&out.stderr).into_owned())
    };
    run("first")?;
    run("second")?;
    let list = |p: &Path| -> Result<Vec<String>, String> {
        let mut v: Vec<String> =
            std::fs::read_dir(p).map_err(e)?.map(|f| f.map(|f| f.file_name().to_string_lossy().into_owned())).try_collect().map_err(e)?;
        v.sort();
        Ok(v)
    };
    let (a, b) = (dir.path().join("first"), dir.path().join("second"));
    let names = list(&a)?;
    ensure(names == list(&b)?, "different file sets")?;
    for n in &names {
        ensure(std::fs::read(a.join(n)).map_err(e)? == std::fs::read(b.join(n)).map_err(e)?, format!("{n} differs"))?;
    }
    Ok(format!("{} entries, {} files byte-identical", names.len() / 2, names.len()))
}

fn main() {
    let criteria: [(&str, Option<u64>, fn() -> Check); 10] = [
        ("two-uniform 3^1 2^9 state", Some(1), golden_two_uniform),
        ("three-uniform 4^5 2^2 state", Some(1), golden_three_uniform),
        ("juxtaposition distance contract", Some(10), juxtaposition_contract),
        ("strength-3 array over 3^5 2^36", Some(120), strength_three_family),
        ("24-run host and 3^1 2^8 replacement", Some(10), host_replacement),
        ("composite levels at desk scale", Some(60), composite_levels),
        ("uniformity and irredundancy equivalences", None, equivalence_suite),
        ("five-column feasibility", None, five_column_patterns),
        ("seed search", None, seed_search),
        ("catalog build determinism", None, catalog_determinism),
    ];
    let mut failed = 0;
    for (i, (name, limit, f)) in criteria.into_iter().enumerate() {
        let t = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let dt = t.elapsed();
        let result = match (result, limit) {
            (Ok(_), Some(s)) if dt > Duration::from_secs(s) => Err(format!("took {dt:.2?}, limit {s} s")),
            (r, _) => r,
        };
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({dt:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({dt:.2?})", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
