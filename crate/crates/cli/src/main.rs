use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};

use bsymbol_cli::formats::{
    enumerator_csv, to_canonical_json, AnalysisReport, BoundRecord, CodeFile, PerWindowReport,
    RecipeRecord,
};
use bsymbol_cli::parallel::{default_threads, weight_enumerator_parallel};
use bsymbol_cli::suites;
use bsymbol_core::bounds::{bsymbol_griesmer_check, BoundReport, CodeParams};
use bsymbol_core::codes::{LinearCode, TraceCode};
use bsymbol_core::construct::{
    concat_simplex, extend_b2, generator_hash, repeat_code, shi_cyclic, thm5_code, thm6_code,
    ConstructedCode, ConstructionRecipe, RecipeKind,
};
use bsymbol_core::galois::FiniteField;
use bsymbol_core::{Error, ENUMERATION_CAP};

#[derive(Parser)]
#[command(
    name = "bsymbol",
    about = "Exact construction, analysis, and certification of linear codes in the b-symbol metric",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code from one of the named procedures and write its code file.
    Construct(ConstructArgs),
    /// Enumerate a code file: d_b, weight enumerator, and bound report per b.
    Analyze(AnalyzeArgs),
    /// Evaluate the b-symbol Griesmer bound on bare parameters.
    Bound(BoundArgs),
    /// Write the concatenated code E(C) of a code file.
    Concat(ConcatArgs),
    /// Run a named verification suite; nonzero exit on any failure.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// One of: shi | repeat | extend | thm5 | thm6
    kind: String,
    #[arg(long)]
    q: u64,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    b: u64,
    /// Repetition / extension count (repeat, extend).
    #[arg(long)]
    s: Option<u64>,
    /// Defining-set stride; must divide q - 1 (shi).
    #[arg(long)]
    delta: Option<u64>,
    /// Seed code file (extend).
    #[arg(long)]
    seed: Option<PathBuf>,
    /// Output code file; omit to print the code file to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AnalyzeArgs {
    code: PathBuf,
    /// Window sizes, repeatable: --b 1 --b 2
    #[arg(long, required = true)]
    b: Vec<u64>,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write enumerator CSVs; with several b values the window size is
    /// appended to the file stem.
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long)]
    threads: Option<usize>,
    /// Enumeration cap (number of codewords).
    #[arg(long)]
    cap: Option<u64>,
}

#[derive(Args)]
struct BoundArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    k: u64,
    #[arg(long)]
    db: u64,
    #[arg(long)]
    b: u64,
    #[arg(long)]
    q: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ConcatArgs {
    code: PathBuf,
    #[arg(long)]
    b: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: example | eq7 | theorem3 | families | bounds-sanity | all
    suite: String,
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } => 3,
        Error::VerificationFailed(_) => 4,
        _ => 2,
    }
}

fn fail(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(exit_code_for(&e))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Construct(args) => cmd_construct(args),
        Command::Analyze(args) => cmd_analyze(args),
        Command::Bound(args) => cmd_bound(args),
        Command::Concat(args) => cmd_concat(args),
        Command::Verify(args) => return cmd_verify(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(e),
    }
}

fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

fn read_to_string(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path)
        .map_err(|e| precondition(format!("cannot read {}: {e}", path.display())))
}

fn write_or_print(out: Option<&Path>, contents: &str) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, contents)
            .map_err(|e| precondition(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

fn load_code(path: &Path) -> Result<(LinearCode, Option<RecipeRecord>), Error> {
    let text = read_to_string(path)?;
    let file: CodeFile = serde_json::from_str(&text)
        .map_err(|e| precondition(format!("malformed code file {}: {e}", path.display())))?;
    let code = file.to_code()?;
    Ok((code, file.recipe))
}

fn verdict(report: &BoundReport) -> &'static str {
    if report.optimal {
        "optimal (meets bound)"
    } else if report.distance_optimal {
        "distance-optimal"
    } else {
        "meets bound"
    }
}

fn params_line(built: &ConstructedCode) -> Result<String, Error> {
    let p = &built.params;
    let report = bsymbol_griesmer_check(p)?;
    let mut line = format!("({},{},{})^{}_{} {}", p.n, p.k, p.d_b, p.b, p.q, verdict(&report));
    if let Some(gap) = report.gap {
        if gap > 0 {
            line.push_str(&format!(" [gap {gap}]"));
        }
    }
    Ok(line)
}

fn require(flag: Option<u64>, name: &str, kind: &str) -> Result<u64, Error> {
    flag.ok_or_else(|| precondition(format!("construct {kind} requires --{name}")))
}

fn cmd_construct(args: ConstructArgs) -> Result<(), Error> {
    let kind = bsymbol_cli::formats::parse_recipe_kind(&args.kind)
        .ok_or_else(|| precondition(format!("unknown construction kind '{}'", args.kind)))?;
    let built = match kind {
        RecipeKind::ShiCyclic => {
            let base = base_field(args.q)?;
            let k = require(args.k, "k", "shi")?;
            let delta = args.delta.unwrap_or(1);
            shi_cyclic(base, k, args.b, delta)?
        }
        RecipeKind::Repeat => {
            let base = base_field(args.q)?;
            let k = require(args.k, "k", "repeat")?;
            let s = args.s.unwrap_or(1);
            repeat_code(base, k, args.b, s)?
        }
        RecipeKind::ExtendB2 => {
            let seed_path = args
                .seed
                .as_deref()
                .ok_or_else(|| precondition("construct extend requires --seed <code-file>"))?;
            let (seed_code, _) = load_code(seed_path)?;
            if args.b != 2 {
                return Err(precondition("the length extension is defined for b = 2"));
            }
            if seed_code.field().order() != args.q {
                return Err(precondition("--q disagrees with the seed code's field"));
            }
            let seed = TraceCode::from_linear_code(&seed_code)?;
            extend_b2(&seed, args.s.unwrap_or(1))?
        }
        RecipeKind::Thm5 => {
            let base = base_field(args.q)?;
            thm5_code(base, require(args.k, "k", "thm5")?, args.b)?
        }
        RecipeKind::Thm6 => {
            let base = base_field(args.q)?;
            thm6_code(base, require(args.k, "k", "thm6")?, args.b)?
        }
        RecipeKind::Concat => {
            return Err(precondition(
                "use the `concat` subcommand to concatenate an existing code file",
            ));
        }
    };
    println!("{}", params_line(&built)?);
    let file = CodeFile::of(&built.code, Some(&built.recipe));
    let json = to_canonical_json(&file)?;
    if let Some(out) = args.out.as_deref() {
        write_or_print(Some(out), &json)?;
        println!("wrote {}", out.display());
    }
    Ok(())
}

/// Prime-power q given as a flag: factor it as p^r with p prime.
fn base_field(q: u64) -> Result<Arc<FiniteField>, Error> {
    if q < 2 {
        return Err(precondition("q must be a prime power >= 2"));
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            break;
        }
        p += 1;
    }
    if p * p > q {
        return FiniteField::new(q, 1);
    }
    let mut r = 0u32;
    let mut m = q;
    while m % p == 0 {
        m /= p;
        r += 1;
    }
    if m != 1 {
        return Err(precondition(format!("q = {q} is not a prime power")));
    }
    FiniteField::new(p, r)
}

fn csv_path(base: &Path, b: u64, lone: bool) -> PathBuf {
    if lone {
        return base.to_path_buf();
    }
    let stem = base.file_stem().and_then(|s| s.to_str()).unwrap_or("enumerator");
    let ext = base.extension().and_then(|s| s.to_str()).unwrap_or("csv");
    base.with_file_name(format!("{stem}.b{b}.{ext}"))
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<(), Error> {
    let (code, recipe) = load_code(&args.code)?;
    let threads = args.threads.unwrap_or_else(default_threads);
    let cap = args.cap.unwrap_or(ENUMERATION_CAP);
    let mut results = Vec::new();
    for &b in &args.b {
        if b < 1 || b > code.length() as u64 {
            return Err(Error::WindowOutOfRange {
                b: b as usize,
                n: code.length(),
            });
        }
        let enumerator = weight_enumerator_parallel(&code, b as usize, threads, cap)?;
        let d_b = enumerator
            .min_distance()
            .ok_or_else(|| precondition("code has no nonzero codeword"))? as u64;
        let params = CodeParams::new(
            code.length() as u64,
            code.dimension() as u64,
            d_b,
            b,
            code.field().order(),
        )?;
        let report = bsymbol_griesmer_check(&params)?;
        if let Some(csv) = args.csv.as_deref() {
            let path = csv_path(csv, b, args.b.len() == 1);
            write_or_print(Some(&path), &enumerator_csv(&enumerator))?;
        }
        results.push(PerWindowReport {
            b,
            d_b,
            enumerator: bsymbol_cli::formats::enumerator_rows(&enumerator),
            bound: BoundRecord::of(&report),
        });
    }
    let report = AnalysisReport {
        q: code.field().order(),
        n: code.length() as u64,
        k: code.dimension() as u64,
        recipe,
        results,
    };
    write_or_print(args.out.as_deref(), &to_canonical_json(&report)?)
}

fn cmd_bound(args: BoundArgs) -> Result<(), Error> {
    let params = CodeParams::new(args.n, args.k, args.db, args.b, args.q)?;
    let report = bsymbol_griesmer_check(&params)?;
    write_or_print(args.out.as_deref(), &to_canonical_json(&BoundRecord::of(&report))?)
}

fn cmd_concat(args: ConcatArgs) -> Result<(), Error> {
    let (code, _) = load_code(&args.code)?;
    let image = concat_simplex(&code, args.b as usize)?;
    let recipe = ConstructionRecipe {
        kind: RecipeKind::Concat,
        q: code.field().order(),
        k: code.dimension() as u64,
        b: args.b,
        s: None,
        delta: None,
        seed_hash: Some(generator_hash(&code)),
    };
    println!(
        "E(C): [{},{}] over GF({})",
        image.length(),
        image.dimension(),
        image.field().order()
    );
    let file = CodeFile::of(&image, Some(&recipe));
    write_or_print(args.out.as_deref(), &to_canonical_json(&file)?)
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    let results = if args.suite == "all" {
        suites::all_criteria()
    } else {
        match suites::suite(&args.suite) {
            Some(r) => r,
            None => {
                eprintln!(
                    "error: unknown suite '{}'; expected one of {} or all",
                    args.suite,
                    suites::SUITE_NAMES.join(", ")
                );
                return ExitCode::from(2);
            }
        }
    };
    let mut failed = false;
    for r in &results {
        let status = if r.passed { "pass" } else { "FAIL" };
        println!("criterion {:>2} [{status}] {}: {}", r.id, r.name, r.detail);
        failed |= !r.passed;
    }
    if failed {
        ExitCode::from(4)
    } else {
        ExitCode::SUCCESS
    }
}
