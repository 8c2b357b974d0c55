//! End-to-end family pipelines. Each one composes the lemma-level builders,
//! trims columns where needed and finishes with a full oracle check.

use super::deletion::{delete_for_distance, DeletionStrategy};
use super::juxtapose::{lemma1_juxtapose, lemma3_juxtapose, partition_from_scheme};
use super::replace::{expansive_replace, ColumnReplacement, ReplacementPlan};
use super::{bush_oa_truncated, columns_with_level, trivial_moa, Construction, PredictedDistance};
use crate::algebra::field::prime_power;
use crate::algebra::hadamard::{hadamard01, hadamard01_auto, Hadamard01, HadamardMethod};
use crate::algebra::kron::{product_construction, replicate_zero};
use crate::algebra::{ds_linear, ds_poly3, DifferenceScheme};
use crate::array::distance::{guaranteed_deletion_budget, min_distance};
use crate::array::strength::verify_strength;
use crate::array::MixedArray;
use crate::catalog::seeds;
use crate::error::{param, Error, Result};

const DEFAULT_SEARCH_BUDGET: u64 = 2_000_000;
const MAX_RUNS: usize = 1 << 16;

/// `H_a (x) H_(2^h)`.
fn doubled_hadamard(base: usize, h: u32) -> Result<Hadamard01> {
    let h0 = hadamard01_auto(base)?;
    if h == 0 {
        return Ok(h0);
    }
    Ok(h0.kronecker(&hadamard01(1 << h, HadamardMethod::Sylvester)?))
}

fn search_failure(what: &str) -> Error {
    Error::Verification(format!("{what}: no column set found within the search budget"))
}

/// A seed array, split into its binary columns and the rest.
fn split_seed(seed: &MixedArray) -> (Vec<usize>, Vec<usize>) {
    (0..seed.cols()).partition(|&c| seed.level(c) != 2)
}

/// Repeated juxtaposition with doubled Hadamard schemes, then deletion.
///
/// The seed is an `MOA(r, a + b, ..., 2)` with `a` non-binary and `b >= 2`
/// binary columns. Step `L` juxtaposes the previous array with
/// `H_r (x) H_(2^(L-1))`, giving `b + r(2^L - 1)` binary columns on
/// `r 2^L` runs. The smallest step with enough binary columns is used; the
/// result keeps the first `keep_high` non-binary columns and `binary` binary
/// columns.
pub fn chain_family(seed: &MixedArray, keep_high: usize, binary: usize, strategy: DeletionStrategy) -> Result<Construction> {
    let (high, bin) = split_seed(seed);
    if high.is_empty() || bin.len() < 2 {
        return param("the seed needs a non-binary column and at least two binary columns");
    }
    if keep_high == 0 || keep_high > high.len() {
        return param(format!("can keep 1..={} non-binary columns, asked for {keep_high}", high.len()));
    }
    if binary == 0 {
        return param("at least one binary column is required");
    }
    if !verify_strength(seed, 2)?.holds {
        return param("the seed must have strength 2");
    }
    let r = seed.runs();
    let total = |l: u32| bin.len() + r * ((1usize << l) - 1);
    let mut steps = 1u32;
    while total(steps) < binary {
        steps += 1;
        if r << steps > MAX_RUNS {
            return param(format!("{binary} binary columns need more than {MAX_RUNS} runs"));
        }
    }

    let mut current = Construction::new(seed.clone(), format!("seed MOA({r},{},{},2)", seed.cols(), seed.profile()), 2, false, None);
    for l in 1..=steps {
        let scheme = doubled_hadamard(r, l - 1)?.scheme(2)?;
        let next = lemma1_juxtapose(&current.array, &scheme)?.after(&current).verify()?;
        current = next;
    }
    let host_cols = current.array.cols() - (r << (steps - 1));
    let scheme_half = (r << (steps - 1)) / 2;

    let drop_high: Vec<usize> = high[keep_high..].to_vec();
    let trimmed = current.array.delete_columns(&drop_high)?;
    let host_cols = host_cols - drop_high.len();
    let binary_cols = columns_with_level(&trimmed, 2);
    let j = binary_cols.len() - binary;

    let strategies: Vec<DeletionStrategy> = match strategy {
        DeletionStrategy::Auto => vec![
            DeletionStrategy::AnyWithinBudget,
            DeletionStrategy::MoaPartFirst,
            DeletionStrategy::Search { budget: DEFAULT_SEARCH_BUDGET },
        ],
        s => vec![s],
    };
    let mut last_err = None;
    for s in strategies {
        let (cols, predicted) = match s {
            DeletionStrategy::AnyWithinBudget => {
                let budget = guaranteed_deletion_budget(&trimmed, 2);
                if j > budget {
                    last_err = Some(Error::Parameter(format!("{j} deletions exceed the guaranteed budget {budget}")));
                    continue;
                }
                let md = min_distance(&trimmed);
                let cols = binary_cols[binary_cols.len() - j..].to_vec();
                (cols, PredictedDistance::at_least(format!("{md} - {j}"), md - j))
            }
            DeletionStrategy::MoaPartFirst => {
                let host_bin: Vec<usize> = binary_cols.iter().copied().filter(|&c| c < host_cols).collect();
                let from_host = j.min(host_bin.len());
                let from_scheme = j - from_host;
                if from_scheme + 3 > scheme_half {
                    last_err = Some(Error::Parameter(format!(
                        "{binary} binary columns is below the guaranteed range of this step"
                    )));
                    continue;
                }
                let mut cols = host_bin[..from_host].to_vec();
                cols.extend(binary_cols[binary_cols.len() - from_scheme..].iter().copied());
                let value = scheme_half - from_scheme;
                (cols, PredictedDistance::at_least(format!("{scheme_half} - {from_scheme}"), value))
            }
            DeletionStrategy::Search { budget } => match delete_for_distance(&trimmed, &binary_cols, j, 2, budget)? {
                Some(cols) => (cols, PredictedDistance::at_least("search floor", 3)),
                None => {
                    last_err = Some(search_failure("binary deletion"));
                    continue;
                }
            },
            DeletionStrategy::Auto => unreachable!(),
        };
        let out = trimmed.delete_columns(&cols)?;
        let mut c = Construction::new(
            out,
            format!("delete {} non-binary and {j} binary columns ({s:?})", drop_high.len()),
            2,
            true,
            Some(predicted),
        )
        .after(&current);
        if c.check()? {
            return Ok(c);
        }
        last_err = Some(Error::Verification(format!("{s:?} deletion left MD {:?}", c.certificate.measured_md)));
    }
    Err(last_err.unwrap_or_else(|| search_failure("binary deletion")))
}

/// Two-uniform arrays over `3^m 2^n` from the searched `MOA(12,5,3^1 2^4,2)`.
pub fn thm1_family(m: usize, n: usize) -> Result<Construction> {
    chain_family(seeds::moa_12_3x2_4()?, m, n, DeletionStrategy::Auto)
}

/// Two-uniform arrays over `d^m 2^n`. Only `d = 4` has a built-in seed.
pub fn thm2_family(d: u32, m: usize, n: usize) -> Result<Construction> {
    if d <= 3 {
        return param("use the ternary family for d = 3; d must exceed 3");
    }
    match d {
        4 => chain_family(seeds::moa_8_4x2_4()?, m, n, DeletionStrategy::Auto),
        _ => Err(Error::MissingSeed(format!(
            "an MOA(r,a+b,{d}^a 2^b,2) seed with a Hadamard order r; import one and call chain_family"
        ))),
    }
}

/// Strength-3 partition juxtaposition with a doubled Hadamard scheme of
/// order `v`, keeping `n` of its `v` columns.
fn partition_route(a_scheme: &DifferenceScheme, base: usize, h: u32, n: usize) -> Result<Construction> {
    let b_scheme = doubled_hadamard(base, h)?.scheme(3)?;
    let v = b_scheme.cols();
    let a = a_scheme.expand();
    let pa = partition_from_scheme(a_scheme)?;
    let kept: Vec<usize> = (0..n.min(v)).collect();
    let b_kept = b_scheme.expand().select_columns(&kept)?;
    let pb = partition_from_scheme(&b_scheme)?;
    lemma3_juxtapose(&a, &pa, &b_kept, &pb).map(|c| c.with_step(format!("binary scheme of order {v}, first {} columns", kept.len())))
}

/// Finishes a strength-3 route whose binary part must shrink past the
/// lemma's guarantee.
fn trim_strength3(built: Construction, n: usize, name: &str) -> Result<Construction> {
    let binary = columns_with_level(&built.array, 2);
    if binary.len() == n {
        built.verify()
    } else {
        let j = binary.len() - n;
        let cols = delete_for_distance(&built.array, &binary, j, 3, DEFAULT_SEARCH_BUDGET)?
            .ok_or_else(|| search_failure(name))?;
        Construction::new(
            built.array.delete_columns(&cols)?,
            format!("delete {j} binary columns beyond the guaranteed range"),
            3,
            true,
            Some(PredictedDistance::at_least("search floor", 4)),
        )
        .after(&built)
        .verify()
    }
}

/// Three-uniform arrays over `3^m 2^n`, `m` in {4, 5}, `n >= 16`.
pub fn thm3_family(m: usize, n: usize) -> Result<Construction> {
    if !(4..=5).contains(&m) {
        return param("m must be 4 or 5");
    }
    if n < 16 {
        return param("n must be at least 16");
    }
    let full = seeds::d3_18_5_3()?;
    let a_scheme = if m == 5 { full.clone() } else { full.select_columns(&(0..m).collect::<Vec<_>>())? };

    // Routes: order 36 * 2^h covers [18*2^h + 4, 36*2^h],
    // order 108 * 2^h covers [54*2^h + 4, 108*2^h].
    let mut best: Option<(usize, usize, u32)> = None;
    for (base, h) in (0..12u32).flat_map(|h| [(36usize, h), (108, h)]) {
        let v = base << h;
        if n <= v && n >= v / 2 + 4 {
            let runs = 6 * v;
            if best.is_none_or(|(r, _, _)| runs < r) {
                best = Some((runs, base, h));
            }
        }
    }
    match best {
        Some((runs, base, h)) => {
            if runs > MAX_RUNS {
                return param(format!("{runs} runs exceed the supported size"));
            }
            partition_route(&a_scheme, base, h, n)?.verify()
        }
        None => {
            // Below a route's guaranteed range: build the smallest route that
            // has enough columns and search for the extra deletions.
            let (base, h) = if n <= 36 { (36, 0) } else { (36, 1) };
            let v = base << h;
            let lower = (v / 2 + 4).min(v);
            let built = partition_route(&a_scheme, base, h, lower)?;
            trim_strength3(built, n, "three-uniform binary deletion")
        }
    }
}

/// Three-uniform arrays over `d^m 2^n` for an odd prime power `d > 4`,
/// `4 <= m <= d` and `n` in `[2d^2 + 4, 4d^2]` or `n >= 4d^2 + 4`.
pub fn thm4_family(d: u32, m: usize, n: usize) -> Result<Construction> {
    if d <= 4 || d % 2 == 0 || prime_power(d as u64).is_none() {
        return param("d must be an odd prime power above 4");
    }
    if !(4..=d as usize).contains(&m) {
        return param(format!("m must lie in 4..={d}"));
    }
    let d2 = (d * d) as usize;
    if n < 2 * d2 + 4 || (n > 4 * d2 && n < 4 * d2 + 4) {
        return param(format!("n must lie in [{}, {}] or be at least {}", 2 * d2 + 4, 4 * d2, 4 * d2 + 4));
    }
    let mut best: Option<(usize, usize, u32)> = None;
    for (base, h) in (0..12u32).flat_map(|h| [(4 * d2, h), (12 * d2, h)]) {
        let v = base << h;
        if n <= v && n >= v / 2 + 4 && best.is_none_or(|(bv, _, _)| v < bv) {
            best = Some((v, base, h));
        }
    }
    let (v, base, h) = best.ok_or_else(|| Error::Parameter(format!("no route covers n = {n}")))?;
    if 2 * d as usize * v > MAX_RUNS {
        return param(format!("{} runs exceed the supported size", 2 * d as usize * v));
    }
    let full = ds_poly3(d)?;
    let a_scheme = full.select_columns(&(0..m).collect::<Vec<_>>())?;
    partition_route(&a_scheme, base, h, n)?.verify()
}

/// `k`-uniform arrays from products of truncated polynomial arrays.
///
/// `factors` are prime powers, each at least `2k - 1`; the host has
/// `2k` columns over their product `d`. Each entry of `replacements` lists
/// sublevels multiplying to `d` and replaces the next host column, from the
/// left, by the full factorial over those sublevels.
pub fn thm7_family(k: u32, factors: &[u32], replacements: &[Vec<u32>]) -> Result<Construction> {
    if k == 0 {
        return param("k must be at least 1");
    }
    if factors.is_empty() {
        return param("at least one factor is required");
    }
    let mut sorted = factors.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return param("factors must be distinct");
    }
    let cols = 2 * k as usize;
    let mut host: Option<MixedArray> = None;
    for &q in &sorted {
        let part = bush_oa_truncated(q, k, cols)?;
        host = Some(match host {
            None => part,
            Some(h) => product_construction(&h, &part)?,
        });
    }
    let host = host.expect("factors are nonempty");
    let d: u32 = sorted.iter().product();
    let base = Construction::new(
        host.clone(),
        format!("product of polynomial arrays over {sorted:?}"),
        k as usize,
        true,
        Some(PredictedDistance::at_least(format!("{}", k + 1), k as usize + 1)),
    )
    .verify()?;
    if replacements.is_empty() {
        return Ok(base);
    }
    if replacements.len() > cols {
        return param(format!("at most {cols} columns can be replaced"));
    }
    let mut plan = ReplacementPlan::default();
    for (c, sub) in replacements.iter().enumerate() {
        if sub.iter().product::<u32>() != d {
            return param(format!("sublevels {sub:?} do not multiply to {d}"));
        }
        plan.replacements.push(ColumnReplacement::full(c, trivial_moa(sub)?));
    }
    expansive_replace(&host, k as usize, &plan)?.after(&base).verify()
}

/// A square or rectangular scheme `D(N, N, d)` from the generators, or a
/// missing-seed error.
pub fn generated_scheme(n_rows: usize, d: u32) -> Result<DifferenceScheme> {
    if d == 2 {
        return hadamard01_auto(n_rows)?.scheme(2);
    }
    if prime_power(d as u64).is_some() {
        let mut e = 0u32;
        let mut p = 1usize;
        while p < n_rows {
            p *= d as usize;
            e += 1;
        }
        if p == n_rows && e >= 1 {
            return ds_linear(d, e);
        }
    }
    Err(Error::MissingSeed(format!("a difference scheme D({n_rows},{n_rows},{d}); import one")))
}

/// The host `[(N) + 0_d, D + (d)]` and the split point between its parts.
pub fn scheme_host(scheme: &DifferenceScheme) -> Result<MixedArray> {
    let n = scheme.rows();
    let index = MixedArray::column(n as u32)?;
    replicate_zero(&index, scheme.order() as usize)?.concat_columns(&scheme.expand())
}

/// Replacement of the index column of `[(N) + 0_d, D + (d)]`.
///
/// `scheme` is `D(N, M', d)`, of which the first `m` columns are used.
/// `replacement` is an `N`-run array with optional kept columns; with none,
/// the host itself is returned. `trim` more `d`-level columns are then
/// removed by search, last columns first.
pub fn thm8_family(
    scheme: &DifferenceScheme,
    m: usize,
    replacement: Option<(MixedArray, Option<Vec<usize>>)>,
    trim: usize,
) -> Result<Construction> {
    if m == 0 || m > scheme.cols() {
        return param(format!("can use 1..={} scheme columns", scheme.cols()));
    }
    let (n, d) = (scheme.rows(), scheme.order());
    let s = if m == scheme.cols() { scheme.clone() } else { scheme.select_columns(&(0..m).collect::<Vec<_>>())? };
    let host = scheme_host(&s)?;
    let md_host = min_distance(&host);
    let md_scheme_part = min_distance(&s.expand());
    let base_name = format!("[({n}) + 0_{d}, D({n},{m},{d}) + ({d})]");

    let built = match replacement {
        None => Construction::new(
            host,
            base_name,
            2,
            md_host >= 3,
            Some(PredictedDistance::exact(format!("{md_host}"), md_host)),
        )
        .verify()?,
        Some((b, keep)) => {
            let full = keep.as_ref().is_none_or(|k| k.len() == b.cols() && k.iter().enumerate().all(|(i, &c)| i == c));
            let case1 = md_host == 3 && min_distance(&b) >= 1 && full;
            let case2 = md_scheme_part >= 3;
            if !case1 && !case2 && trim == 0 {
                return param(format!(
                    "neither hypothesis holds: MD of the host is {md_host}, MD of the scheme part is {md_scheme_part}"
                ));
            }
            let rep = match keep {
                None => ColumnReplacement::full(0, b),
                Some(k) => ColumnReplacement::keeping(0, b, k),
            };
            let base = Construction::new(scheme_host(&s)?, base_name, 2, false, None);
            expansive_replace(&base.array, 2, &ReplacementPlan::single(rep))?.after(&base)
        }
    };
    if trim == 0 {
        return built.verify();
    }
    let candidates = columns_with_level(&built.array, d);
    if trim >= candidates.len() {
        return param(format!("cannot trim {trim} of {} columns", candidates.len()));
    }
    let cols = delete_for_distance(&built.array, &candidates, trim, 2, DEFAULT_SEARCH_BUDGET)?
        .ok_or_else(|| search_failure("column trim"))?;
    Construction::new(
        built.array.delete_columns(&cols)?,
        format!("delete {trim} {d}-level columns"),
        2,
        true,
        Some(PredictedDistance::at_least("search floor", 3)),
    )
    .after(&built)
    .verify()
}

/// `IrMOA(d^(n+1), d^n + m, ...)` from the linear scheme `D(d^n, d^n, d)`
/// with the index column fully replaced by `b`.
pub fn cor_dn_family(d: u32, n: u32, b: &MixedArray) -> Result<Construction> {
    if prime_power(d as u64).is_none() {
        return param(format!("{d} is not a prime power"));
    }
    let scheme = ds_linear(d, n)?;
    if b.runs() != scheme.rows() {
        return param(format!("the replacement needs {} runs, got {}", scheme.rows(), b.runs()));
    }
    let m = scheme.cols();
    thm8_family(&scheme, m, Some((b.clone(), None)), 0)
}
