use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use oakit::algebra::hadamard01_auto;
use oakit::array::format::{parse_moa, serialize_moa, MoaDocument};
use oakit::catalog::{catalog_build, catalog_build_with_seed, catalog_list, find_entry, self_test};
use oakit::constructions::families::{
    cor_dn_family, generated_scheme, thm1_family, thm2_family, thm3_family, thm4_family, thm7_family, thm8_family,
};
use oakit::constructions::{
    bush_oa_truncated, expansive_replace, feasibility_5col, trivial_moa, ColumnReplacement, Construction,
    ReplacementPlan,
};
use oakit::quantum::{emit_state, verify_k_uniform};
use oakit::report::{feasibility_json, search_json, Report};
use oakit::search::{search_moa, SearchOutcome, SearchSpec};
use oakit::{Error, MixedArray};

/// Stdout writes; a closed pipe ends the process quietly.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        if let Err(e) = write!(std::io::stdout(), $($t)*) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            panic!("writing to stdout: {e}");
        }
    }};
}

macro_rules! outln {
    () => { out!("\n") };
    ($($t:tt)*) => {{ out!($($t)*); out!("\n") }};
}

#[derive(Parser)]
#[command(name = "oakit", version, about = "Mixed orthogonal arrays and the k-uniform states they induce")]
struct Cli {
    /// Write arrays even when an oracle rejects them.
    #[arg(long, global = true)]
    unverified: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check strength and, optionally, irredundancy.
    Verify {
        file: PathBuf,
        #[arg(long)]
        strength: usize,
        #[arg(long)]
        irredundant: Option<usize>,
    },
    /// Minimum distance and the pairwise distance spectrum.
    Distance { file: PathBuf },
    /// Run a construction pipeline.
    Construct {
        pipeline: PipelineName,
        /// Comma-separated `key=value` pairs; lists use `:` (factors=3:4).
        #[arg(long, default_value = "")]
        params: String,
        /// Replacement array for thm8.
        #[arg(long)]
        with: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Expand one column into the columns of another array.
    Replace {
        file: PathBuf,
        #[arg(long)]
        column: usize,
        #[arg(long)]
        with: PathBuf,
        /// Keep only these columns of the replacement.
        #[arg(long, value_delimiter = ',')]
        keep: Option<Vec<usize>>,
        /// Strength of the host; defaults to the strength line of the file.
        #[arg(long)]
        strength: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Print the state with one ket per row.
    State {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = StateFormat::Ket)]
        format: StateFormat,
    },
    /// Check that every k-party reduction is maximally mixed.
    Uniformity {
        file: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Backtracking search for a small array.
    Search {
        #[arg(long)]
        runs: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        levels: Vec<u32>,
        #[arg(long)]
        strength: usize,
        #[arg(long)]
        min_distance: Option<usize>,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Necessary-condition check for five-column strength-2 arrays.
    Feasible {
        #[arg(long, value_delimiter = ',', required = true)]
        levels: Vec<u32>,
    },
    /// Named families.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    /// Writes `<id>.moa` and `<id>.cert.json` into the output directory; `/` in ids becomes `_`.
    Build {
        /// Family id, or `all` for every entry that needs no imported seed.
        id: String,
        /// Seed array for import-backed entries.
        #[arg(long)]
        seed: Option<PathBuf>,
        #[arg(short, long, default_value = ".")]
        out_dir: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StateFormat {
    Ket,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum PipelineName {
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    Thm7,
    Thm8,
    CorDn,
    Bush,
    Hadamard,
}

/// A failed check that was reported normally.
struct Rejected;

enum Failure {
    Lib(Error),
    Rejected,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Lib(e.into())
    }
}

impl From<Rejected> for Failure {
    fn from(_: Rejected) -> Self {
        Failure::Rejected
    }
}

type CmdResult = Result<(), Failure>;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Verification(_) => 2,
        Error::MissingSeed(_) => 3,
        Error::Parameter(_) | Error::Malformed(_) | Error::Parse { .. } | Error::NoGenerator { .. } => 4,
        Error::Io(_) => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = self_test() {
        eprintln!("self-test failed: {e}");
        return ExitCode::from(2);
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Rejected) => ExitCode::from(2),
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn load(path: &Path) -> Result<MoaDocument, Error> {
    parse_moa(&fs::read_to_string(path)?)
}

fn emit(text: &str, path: Option<&Path>) -> Result<(), Error> {
    match path {
        Some(p) => Ok(fs::write(p, text)?),
        None => {
            out!("{text}");
            if !text.ends_with('\n') {
                outln!();
            }
            Ok(())
        }
    }
}

fn write_construction(c: &Construction, out: Option<&Path>, cert: Option<&Path>) -> Result<(), Error> {
    let mut doc = MoaDocument::plain(c.array.clone());
    doc.strength = Some(c.certificate.strength);
    emit(&serialize_moa(&doc), out)?;
    if let Some(p) = cert {
        fs::write(p, c.certificate_json() + "\n")?;
    }
    eprintln!(
        "{}: {} runs, {}, strength {}, MD {}",
        c.certificate.construction,
        c.array.runs(),
        c.certificate.profile,
        c.certificate.strength,
        c.certificate.measured_md.map_or("unchecked".into(), |m| m.to_string())
    );
    Ok(())
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Verify { file, strength, irredundant } => {
            let a = load(&file)?.array;
            let mut r = Report::for_array(&a).with_strength(&a, strength)?.with_distance(&a);
            if let Some(k) = irredundant {
                r = r.with_irredundant(&a, k)?;
            }
            outln!("{}", r.to_json());
            summary(&r);
            if !r.passed() {
                return Err(Rejected.into());
            }
        }
        Command::Distance { file } => {
            let a = load(&file)?.array;
            let r = Report::for_array(&a).with_distance(&a);
            outln!("{}", r.to_json());
            summary(&r);
        }
        Command::Construct { pipeline, params, with, output, certificate } => {
            let p = Params::parse(&params)?;
            let c = construct(pipeline, &p, with.as_deref())?;
            finish(c, cli.unverified, output.as_deref(), certificate.as_deref())?;
        }
        Command::Replace { file, column, with, keep, strength, output, certificate } => {
            let doc = load(&file)?;
            let k = strength.or(doc.strength).ok_or_else(|| {
                Error::Parameter("the host strength is unknown; pass --strength".into())
            })?;
            let b = load(&with)?.array;
            let rep = match keep {
                Some(cols) => ColumnReplacement::keeping(column, b, cols),
                None => ColumnReplacement::full(column, b),
            };
            let c = expansive_replace(&doc.array, k, &ReplacementPlan::single(rep))?;
            finish(c, cli.unverified, output.as_deref(), certificate.as_deref())?;
        }
        Command::State { file, format } => {
            let s = emit_state(&load(&file)?.array);
            match format {
                StateFormat::Ket => outln!("{s}"),
                StateFormat::Json => {
                    #[derive(Serialize)]
                    struct StateJson<'a> {
                        schema: &'static str,
                        levels: &'a [u32],
                        kets: &'a [Vec<u16>],
                    }
                    let j = StateJson { schema: oakit::report::SCHEMA, levels: s.levels(), kets: s.kets() };
                    outln!("{}", serde_json::to_string_pretty(&j).expect("serializes"));
                }
            }
            if s.has_duplicates() {
                eprintln!("warning: repeated kets; the state is not normalized");
            }
        }
        Command::Uniformity { file, k } => {
            let a = load(&file)?.array;
            let u = verify_k_uniform(&a, k)?;
            eprintln!("{k}-uniform: {} ({}/{} subsets)", u.holds, u.subsets_passed, u.subsets_checked);
            let r = Report::for_array(&a).with_uniformity(u);
            outln!("{}", r.to_json());
            if !r.passed() {
                return Err(Rejected.into());
            }
        }
        Command::Search { runs, levels, strength, min_distance, budget, output } => {
            let mut spec = SearchSpec::new(runs, levels, strength);
            if let Some(w) = min_distance {
                spec = spec.with_min_distance(w);
            }
            if let Some(b) = budget {
                spec = spec.with_budget(b);
            }
            match search_moa(&spec)? {
                SearchOutcome::Found { array, nodes } => {
                    let mut doc = MoaDocument::plain(array);
                    doc.strength = Some(strength);
                    emit(&serialize_moa(&doc), output.as_deref())?;
                    eprintln!("found after {nodes} nodes");
                }
                other => {
                    outln!("{}", search_json(&other));
                    eprintln!("no array: {other:?}");
                    return Err(Rejected.into());
                }
            }
        }
        Command::Feasible { levels } => {
            let f = feasibility_5col(&levels)?;
            outln!("{}", feasibility_json(&levels, &f));
            eprintln!("{f:?}");
        }
        Command::Catalog { action: CatalogAction::List } => {
            for e in catalog_list() {
                match e.requires {
                    Some(seed) => outln!("{}\t{} runs\tneeds {seed}", e.id, e.expected.runs),
                    None => outln!("{}\t{} runs", e.id, e.expected.runs),
                }
            }
        }
        Command::Catalog { action: CatalogAction::Build { id, seed, out_dir } } => {
            fs::create_dir_all(&out_dir)?;
            if id == "all" {
                for e in catalog_list().into_iter().filter(|e| e.requires.is_none()) {
                    write_entry(&e.id, &catalog_build(&e.id)?, &out_dir)?;
                }
            } else {
                let c = match seed {
                    Some(p) => catalog_build_with_seed(&id, &load(&p)?)?,
                    None => {
                        find_entry(&id)?;
                        catalog_build(&id)?
                    }
                };
                write_entry(&id, &c, &out_dir)?;
            }
        }
    }
    Ok(())
}

fn write_entry(id: &str, c: &Construction, dir: &Path) -> Result<(), Error> {
    let stem = id.replace('/', "_");
    let moa = dir.join(format!("{stem}.moa"));
    let cert = dir.join(format!("{stem}.cert.json"));
    write_construction(c, Some(&moa), Some(&cert))?;
    eprintln!("wrote {} and {}", moa.display(), cert.display());
    Ok(())
}

fn finish(mut c: Construction, unverified: bool, out: Option<&Path>, cert: Option<&Path>) -> CmdResult {
    if !c.is_verified() && !c.check()? && !unverified {
        eprintln!("rejected: {}", c.certificate_json());
        return Err(Rejected.into());
    }
    write_construction(&c, out, cert)?;
    Ok(())
}

fn summary(r: &Report) {
    if let Some(s) = &r.strength {
        eprintln!("strength {}: {}", s.k, s.holds);
    }
    if let Some(d) = &r.distance {
        eprintln!("minimum distance {}", d.min);
    }
    if let Some(i) = &r.irredundant {
        eprintln!("irredundant at {}: {}", i.k, i.holds);
    }
}

struct Params(HashMap<String, String>);

impl Params {
    fn parse(s: &str) -> Result<Self, Error> {
        let mut map = HashMap::new();
        for kv in s.split(',').filter(|t| !t.trim().is_empty()) {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::Parameter(format!("expected key=value, found {kv:?}")))?;
            map.insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(Self(map))
    }

    fn num<T: std::str::FromStr>(&self, key: &str) -> Result<T, Error> {
        let v = self.0.get(key).ok_or_else(|| Error::Parameter(format!("missing parameter {key}")))?;
        v.parse().map_err(|_| Error::Parameter(format!("{key}={v} is not a number")))
    }

    fn num_or<T: std::str::FromStr>(&self, key: &str, default: T) -> Result<T, Error> {
        if self.0.contains_key(key) {
            self.num(key)
        } else {
            Ok(default)
        }
    }

    fn list(&self, key: &str) -> Result<Vec<u32>, Error> {
        match self.0.get(key) {
            None => Ok(Vec::new()),
            Some(v) => v
                .split(':')
                .map(|t| t.parse().map_err(|_| Error::Parameter(format!("{key}: {t:?} is not a number"))))
                .collect(),
        }
    }
}

fn construct(pipeline: PipelineName, p: &Params, with: Option<&Path>) -> Result<Construction, Error> {
    use PipelineName as P;
    Ok(match pipeline {
        P::Thm1 => thm1_family(p.num("m")?, p.num("n")?)?,
        P::Thm2 => thm2_family(p.num("d")?, p.num("m")?, p.num("n")?)?,
        P::Thm3 => thm3_family(p.num("m")?, p.num("n")?)?,
        P::Thm4 => thm4_family(p.num("d")?, p.num("m")?, p.num("n")?)?,
        P::Thm7 => {
            let replace = p.list("replace")?;
            let replacements = if replace.is_empty() { vec![] } else { vec![replace] };
            thm7_family(p.num("k")?, &p.list("factors")?, &replacements)?
        }
        P::Thm8 => {
            let scheme = generated_scheme(p.num("rows")?, p.num("d")?)?;
            let m = p.num_or("m", scheme.cols())?;
            let keep = p.list("keep")?;
            let replacement = match with {
                None => None,
                Some(path) => {
                    let keep = (!keep.is_empty()).then(|| keep.iter().map(|&c| c as usize).collect());
                    Some((load(path)?.array, keep))
                }
            };
            thm8_family(&scheme, m, replacement, p.num_or("trim", 0)?)?
        }
        P::CorDn => {
            let sub = p.list("sub")?;
            let b: MixedArray = trivial_moa(&sub)?;
            cor_dn_family(p.num("d")?, p.num("n")?, &b)?
        }
        P::Bush => {
            let (q, k): (u32, u32) = (p.num("q")?, p.num("k")?);
            let cols = p.num_or("cols", q as usize + 1)?;
            let a = bush_oa_truncated(q, k, cols)?;
            Construction::new(a, format!("Bush OA({q}^{k}, {cols}, {q}, {k})"), k as usize, false, None).verify()?
        }
        P::Hadamard => {
            let n: usize = p.num("n")?;
            let h = hadamard01_auto(n)?;
            let a = h.scheme(2)?.expand();
            let md = n / 2;
            Construction::new(
                a,
                format!("H_{n} + (2)"),
                2,
                true,
                Some(oakit::constructions::PredictedDistance::exact("r - r/d", md)),
            )
            .verify()?
        }
    })
}
