//! Command-line front end for the tiecode library.
//!
//! Subcommands cover classification of length vectors, realization of
//! genetic codes, threshold synthesis, censuses, the published count tables,
//! orbit canonicalization, game analyses, and enumeration to cache files.
//! Data output goes to stdout and is byte-deterministic; progress and
//! diagnostics go to stderr. Exit codes: 0 success, 1 domain error,
//! 2 parse/validation error.

use std::fmt::Display;
use std::fs::File;
use std::io::{BufReader, BufWriter};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use tiecode_core::boolfn::BoolFunc;
use tiecode_core::games::{
    self, game_from_lengths, is_decisive, is_weighted_majority, strategically_equivalent,
};
use tiecode_core::genetic::{self, CensusMode, GeneticCode, GeneticError, Vgc1Writer};
use tiecode_core::group::{canonical_real_witness, GroupElement};
use tiecode_core::strata::{self, StrataBfs, StrataError};
use tiecode_core::threshold::{synthesize, synthesize_at_half_perimeter, WeightedThreshold};
use tiecode_core::{parse_rationals, Rational};

#[derive(Parser)]
#[command(name = "tiecode", version, about = "Exact enumeration for tie arrangements, self-dual Boolean functions, genetic codes, and majority games")]
struct Cli {
    /// Worker threads for parallel enumeration (default: all cores).
    #[arg(long, global = true, value_name = "K", value_parser = clap::value_parser!(u16).range(1..))]
    parallel: Option<u16>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a length vector: canonical form, genetic code, verdict.
    Classify(ClassifyArgs),
    /// Find a length vector realizing a virtual genetic code.
    Realize(RealizeArgs),
    /// Synthesize threshold weights for a Boolean function table.
    Synthesize(SynthesizeArgs),
    /// Count codes, chambers, or strata at a given arity.
    Count(CountArgs),
    /// Print the published count tables, live-computed.
    Tables(TablesArgs),
    /// Canonical orbit representative and a witnessing group element.
    Orbit(OrbitArgs),
    /// Game-theoretic analyses of a length vector.
    Game(GameArgs),
    /// Enumerate codes or strata into a cache/checkpoint file.
    Enumerate(EnumerateArgs),
}

#[derive(Args)]
struct ClassifyArgs {
    /// Length vector, comma-separated rationals (e.g. "1,1/2,-3").
    #[arg(long, value_name = "L", allow_hyphen_values = true)]
    lengths: String,
    /// Classify non-generic vectors as strata instead of failing.
    #[arg(long)]
    allow_strata: bool,
}

#[derive(Args)]
struct RealizeArgs {
    /// Genetic code text, genes separated by ';' (e.g. "6,3;6,2,1"), "-" for empty.
    #[arg(long, value_name = "C")]
    code: String,
    /// Number of edges n.
    #[arg(long, value_name = "N")]
    n: usize,
}

#[derive(Args)]
struct SynthesizeArgs {
    /// Truth table as hex, most significant input first.
    #[arg(long, value_name = "HEX")]
    table: String,
    /// Number of variables.
    #[arg(long, value_name = "N")]
    n: usize,
    /// Pin the threshold to the half-perimeter of the weights.
    #[arg(long)]
    self_dual_at_half: bool,
    /// Scale the result to coprime integers.
    #[arg(long)]
    integral: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum CountWhat {
    /// Virtual genetic codes, v(n).
    Codes,
    /// Realizable codes (chambers up to symmetry), c(n).
    Chambers,
    /// Positive strata up to symmetry, k(n).
    Strata,
    /// All strata via the recursion, tk(n).
    TotalStrata,
}

#[derive(Args)]
struct CountArgs {
    /// Which census to run.
    #[arg(long, value_enum, value_name = "WHAT")]
    what: CountWhat,
    /// Arity n.
    #[arg(long, value_name = "N")]
    n: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct TablesArgs {
    /// Largest arity to tabulate (chambers/codes start at n = 3).
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u8).range(1..=8))]
    max_n: u8,
    /// Output format.
    #[arg(long, value_enum, default_value = "csv")]
    format: TableFormat,
    /// Compare against the published values; exit nonzero on mismatch.
    #[arg(long)]
    check: bool,
}

#[derive(Args)]
struct OrbitArgs {
    /// Length vector, comma-separated rationals.
    #[arg(long, value_name = "L", allow_hyphen_values = true)]
    lengths: String,
}

#[derive(Args)]
#[command(group = ArgGroup::new("analysis").args(["dummies", "equiv", "weights"]))]
struct GameArgs {
    /// Nonnegative length vector defining the game.
    #[arg(long, value_name = "L", allow_hyphen_values = true)]
    lengths: String,
    /// Report the voteless players.
    #[arg(long)]
    dummies: bool,
    /// Test strategic equivalence against a second length vector.
    #[arg(long, value_name = "L2")]
    equiv: Option<String>,
    /// Recognize the game as a weighted majority game (requires decisive).
    #[arg(long)]
    weights: bool,
}

#[derive(Args)]
#[command(group = ArgGroup::new("target").required(true).args(["codes", "strata"]))]
struct EnumerateArgs {
    /// Enumerate virtual genetic codes into a VGC1 cache file.
    #[arg(long)]
    codes: bool,
    /// Enumerate strata classes into an STR1 checkpoint file.
    #[arg(long)]
    strata: bool,
    /// Arity n (may be omitted when resuming).
    #[arg(long, value_name = "N")]
    n: Option<usize>,
    /// Output file.
    #[arg(long, value_name = "FILE")]
    out: std::path::PathBuf,
    /// Resume a strata run from an STR1 checkpoint.
    #[arg(long, value_name = "FILE")]
    resume: Option<std::path::PathBuf>,
}

/// Failures after parsing: validation (exit 2) names the offending flag,
/// domain errors (exit 1) describe the mathematical obstruction.
enum CliError {
    Validation(String),
    Domain(String),
}

impl CliError {
    fn invalid(flag: &str, message: impl Display) -> Self {
        CliError::Validation(format!("{flag}: {message}"))
    }
}

/// Arity-range problems are input validation; everything else the library
/// reports is a domain obstruction.
impl From<GeneticError> for CliError {
    fn from(e: GeneticError) -> Self {
        match e {
            GeneticError::ArityOutOfRange { .. } => CliError::invalid("--n", e),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<StrataError> for CliError {
    fn from(e: StrataError) -> Self {
        match e {
            StrataError::ArityOutOfRange { .. } => CliError::invalid("--n", e),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<games::GameError> for CliError {
    fn from(e: games::GameError) -> Self {
        CliError::Domain(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.parallel {
        rayon::ThreadPoolBuilder::new()
            .num_threads(k as usize)
            .build_global()
            .expect("global pool is built once");
    }
    let result = match cli.command {
        Command::Classify(args) => run_classify(args),
        Command::Realize(args) => run_realize(args),
        Command::Synthesize(args) => run_synthesize(args),
        Command::Count(args) => run_count(args),
        Command::Tables(args) => run_tables(args),
        Command::Orbit(args) => run_orbit(args),
        Command::Game(args) => run_game(args),
        Command::Enumerate(args) => run_enumerate(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Domain(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(CliError::Validation(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn parse_lengths(flag: &str, text: &str) -> Result<Vec<Rational>, CliError> {
    parse_rationals(text).map_err(|e| CliError::invalid(flag, e))
}

fn fractions(values: &[Rational]) -> Vec<String> {
    values.iter().map(Rational::to_string).collect()
}

fn emit(value: &impl Serialize) {
    println!("{}", serde_json::to_string(value).expect("serializable output"));
}

#[derive(Serialize)]
struct ClassifyOut {
    canonical: Vec<String>,
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    code: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    signature: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    zero_walls: Option<Vec<String>>,
}

fn run_classify(args: ClassifyArgs) -> Result<(), CliError> {
    let lengths = parse_lengths("--lengths", &args.lengths)?;
    let (canonical, _) = canonical_real_witness(&lengths);
    match genetic::genetic_code_of(&canonical) {
        Ok(code) => {
            emit(&ClassifyOut {
                canonical: fractions(&canonical),
                verdict: "generic",
                code: Some(code.to_string()),
                wall: None,
                signature: None,
                zero_walls: None,
            });
            Ok(())
        }
        Err(GeneticError::NonGeneric { wall }) => {
            if !args.allow_strata {
                return Err(CliError::Domain(format!(
                    "length vector is non-generic: {wall} ties its complement \
                     (pass --allow-strata to classify the stratum)"
                )));
            }
            let signature = strata::signature_of(&canonical)?.canonicalize();
            let zero_walls: Vec<String> =
                signature.zero_walls().iter().map(|w| w.to_string()).collect();
            emit(&ClassifyOut {
                canonical: fractions(&canonical),
                verdict: "stratum",
                code: None,
                wall: Some(wall.to_string()),
                signature: Some(signature.to_string()),
                zero_walls: Some(zero_walls),
            });
            Ok(())
        }
        Err(other) => Err(other.into()),
    }
}

#[derive(Serialize)]
struct RealizeOut {
    code: String,
    n: usize,
    realizable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<String>>,
}

fn run_realize(args: RealizeArgs) -> Result<(), CliError> {
    let code = GeneticCode::parse(&args.code, Some(args.n))
        .map_err(|e| CliError::invalid("--code", e))?;
    let witness = genetic::realize_code(&code)?;
    emit(&RealizeOut {
        code: code.to_string(),
        n: args.n,
        realizable: witness.is_some(),
        witness: witness.as_deref().map(fractions),
    });
    Ok(())
}

#[derive(Serialize)]
struct SynthesizeOut {
    threshold_function: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    threshold: Option<String>,
}

fn run_synthesize(args: SynthesizeArgs) -> Result<(), CliError> {
    let f = BoolFunc::from_hex(args.n, &args.table)
        .map_err(|e| CliError::invalid("--table", e))?;
    let found: Option<WeightedThreshold> = if args.self_dual_at_half {
        synthesize_at_half_perimeter(&f)
    } else {
        synthesize(&f)
    };
    let found = found.map(|wt| if args.integral { wt.cleared_denominators() } else { wt });
    emit(&SynthesizeOut {
        threshold_function: found.is_some(),
        weights: found.as_ref().map(|wt| fractions(wt.weights())),
        threshold: found.as_ref().map(|wt| wt.threshold().to_string()),
    });
    Ok(())
}

fn run_count(args: CountArgs) -> Result<(), CliError> {
    let value = match args.what {
        CountWhat::Codes => genetic::census(args.n, CensusMode::Virtual)?,
        CountWhat::Chambers => genetic::census(args.n, CensusMode::Chambers)?,
        CountWhat::Strata => strata::count_strata_positive(args.n)?,
        CountWhat::TotalStrata => strata::total_strata(args.n)?,
    };
    println!("{value}");
    Ok(())
}

/// Published values of the four count rows, used by `tables --check`.
const EXPECTED_C: [u64; 6] = [2, 3, 7, 21, 135, 2470];
const EXPECTED_V: [u64; 6] = [2, 3, 7, 21, 135, 2470];
const EXPECTED_K: [u64; 8] = [1, 2, 3, 7, 21, 117, 1506, 62254];
const EXPECTED_TK: [u64; 8] = [1, 3, 5, 10, 28, 138, 1623, 63742];

#[derive(Serialize)]
struct TableRow {
    quantity: &'static str,
    n: usize,
    value: u64,
}

#[derive(Serialize)]
struct TablesOut {
    rows: Vec<TableRow>,
}

fn run_tables(args: TablesArgs) -> Result<(), CliError> {
    let max_n = args.max_n as usize;
    let mut rows: Vec<TableRow> = Vec::new();
    for n in 3..=max_n {
        eprintln!("computing c({n})...");
        rows.push(TableRow { quantity: "c", n, value: genetic::census(n, CensusMode::Chambers)? });
    }
    for n in 3..=max_n {
        eprintln!("computing v({n})...");
        rows.push(TableRow { quantity: "v", n, value: genetic::census(n, CensusMode::Virtual)? });
    }
    let ks = strata::strata_counts_up_to(max_n)?;
    let tks = strata::total_strata_up_to(max_n)?;
    for (n, &value) in ks.iter().enumerate() {
        rows.push(TableRow { quantity: "k", n: n + 1, value });
    }
    for (n, &value) in tks.iter().enumerate() {
        rows.push(TableRow { quantity: "tk", n: n + 1, value });
    }

    match args.format {
        TableFormat::Csv => {
            println!("quantity,n,value");
            for row in &rows {
                println!("{},{},{}", row.quantity, row.n, row.value);
            }
        }
        TableFormat::Json => emit(&TablesOut { rows: rows.iter().map(|r| TableRow { quantity: r.quantity, n: r.n, value: r.value }).collect() }),
    }

    if args.check {
        let mut mismatches = 0;
        for row in &rows {
            let expected = match row.quantity {
                "c" => EXPECTED_C.get(row.n - 3),
                "v" => EXPECTED_V.get(row.n - 3),
                "k" => EXPECTED_K.get(row.n - 1),
                _ => EXPECTED_TK.get(row.n - 1),
            };
            if let Some(&want) = expected {
                if row.value != want {
                    eprintln!(
                        "check failed: {}({}) = {}, published value is {}",
                        row.quantity, row.n, row.value, want
                    );
                    mismatches += 1;
                }
            }
        }
        if mismatches > 0 {
            return Err(CliError::Domain(format!(
                "{mismatches} table entries disagree with the published values"
            )));
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct OrbitOut {
    canonical: Vec<String>,
    group_element: GroupElement,
}

fn run_orbit(args: OrbitArgs) -> Result<(), CliError> {
    let lengths = parse_lengths("--lengths", &args.lengths)?;
    let (canonical, witness) = canonical_real_witness(&lengths);
    emit(&OrbitOut { canonical: fractions(&canonical), group_element: witness });
    Ok(())
}

#[derive(Serialize)]
struct GameJson {
    n: usize,
    winning_table_hex: String,
}

#[derive(Serialize)]
struct GameOut {
    game: GameJson,
    decisive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    dummies: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    equivalent: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    weighted: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<String>>,
}

fn run_game(args: GameArgs) -> Result<(), CliError> {
    let lengths = parse_lengths("--lengths", &args.lengths)?;
    let game = game_from_lengths(&lengths)?;
    let mut out = GameOut {
        game: GameJson { n: game.n(), winning_table_hex: game.winning().to_hex() },
        decisive: is_decisive(&game),
        dummies: None,
        equivalent: None,
        weighted: None,
        weights: None,
    };
    if args.dummies {
        out.dummies = Some(games::dummies(&game).elements());
    } else if let Some(other_text) = &args.equiv {
        let other_lengths = parse_lengths("--equiv", other_text)?;
        let other = game_from_lengths(&other_lengths)?;
        out.equivalent = Some(strategically_equivalent(&game, &other)?);
    } else if args.weights {
        let witness = is_weighted_majority(&game)?;
        out.weighted = Some(witness.is_some());
        out.weights = witness.as_deref().map(fractions);
    }
    emit(&out);
    Ok(())
}

fn run_enumerate(args: EnumerateArgs) -> Result<(), CliError> {
    if args.codes {
        let n = args
            .n
            .ok_or_else(|| CliError::invalid("--n", "required when enumerating codes"))?;
        let file = File::create(&args.out)
            .map_err(|e| CliError::invalid("--out", format!("{}: {e}", args.out.display())))?;
        let mut writer = Vgc1Writer::new(BufWriter::new(file), n)?;
        let mut failure: Option<GeneticError> = None;
        let mut seen: u64 = 0;
        genetic::enumerate_virtual_codes(n, |code| {
            if failure.is_none() {
                seen += 1;
                if seen % 100_000 == 0 {
                    eprintln!("{seen} codes so far...");
                }
                if let Err(e) = writer.push(code) {
                    failure = Some(e);
                }
            }
        })?;
        if let Some(e) = failure {
            return Err(e.into());
        }
        let count = writer.finish()?;
        println!("{count}");
    } else {
        let mut bfs = match &args.resume {
            Some(path) => {
                let file = File::open(path).map_err(|e| {
                    CliError::invalid("--resume", format!("{}: {e}", path.display()))
                })?;
                let resumed = StrataBfs::resume(BufReader::new(file))?;
                if let Some(n) = args.n {
                    if n != resumed.n() {
                        return Err(CliError::invalid(
                            "--n",
                            format!("checkpoint is for n = {}, not {n}", resumed.n()),
                        ));
                    }
                }
                resumed
            }
            None => {
                let n = args.n.ok_or_else(|| {
                    CliError::invalid("--n", "required unless resuming a checkpoint")
                })?;
                StrataBfs::new(n)?
            }
        };
        eprintln!("expanding {} frontier entries...", bfs.pending());
        bfs.run();
        let file = File::create(&args.out)
            .map_err(|e| CliError::invalid("--out", format!("{}: {e}", args.out.display())))?;
        let mut writer = BufWriter::new(file);
        bfs.save(&mut writer)?;
        println!("{}", bfs.visited_count());
    }
    Ok(())
}
