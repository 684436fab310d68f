//! Command-line front end. A thin dispatcher: all real work lives in the
//! library modules, and identical inputs always produce byte-identical
//! output.
//!
//! Exit statuses: 0 success, 1 verification failure, 2 usage or limit
//! error, 3 domain-input error (bad word, bad permutation, bad basis).

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::class::Enumerator;
use crate::codec::{decode, encode, words_of_length, Word};
use crate::perm::{PatternSet, Permutation};
use crate::series::{
    class_series, catalan_series, simple_inflation_series, skew_series, word_count_series, Series,
};
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BAD_INPUT: i32 = 3;

/// Lengths past this need --force; enumeration grows roughly fourfold per
/// step, so this keeps accidental large runs from tying up a terminal.
const HARD_LENGTH_LIMIT: usize = 12;
const MAX_SERIES_ORDER: usize = 64;

#[derive(Parser)]
#[command(
    name = "crenel",
    version,
    about = "Enumeration and word codec for the class Av(4231, 35142, 42513, 351624)"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for tabular commands.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Plain,
    Csv,
    Jsonl,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesKind {
    Class,
    Simples,
    Words,
    Catalan,
    Skew,
    Inflations,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteKind {
    Structure,
    Codec,
    Inflation,
    Series,
    All,
}

impl SuiteKind {
    fn name(self) -> &'static str {
        match self {
            SuiteKind::Structure => "structure",
            SuiteKind::Codec => "codec",
            SuiteKind::Inflation => "inflation",
            SuiteKind::Series => "series",
            SuiteKind::All => "all",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Count class members by length (plain), emit the census (csv), or
    /// stream the members themselves (jsonl).
    Count {
        #[arg(long = "max-n")]
        max_n: usize,
        /// Override the basis: comma-separated digit-string patterns.
        #[arg(long)]
        basis: Option<String>,
        /// Allow lengths past the built-in guard.
        #[arg(long)]
        force: bool,
    },
    /// List the valid words of one length with their decoded permutations.
    Words {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        force: bool,
    },
    /// Decode a word to its simple permutation.
    Decode {
        #[arg(long)]
        word: String,
    },
    /// Encode an eligible simple permutation as its word.
    Encode {
        #[arg(long)]
        perm: String,
    },
    /// Print exact series coefficients for x^1 through x^order.
    Series {
        #[arg(long, value_enum)]
        which: SeriesKind,
        #[arg(long, default_value_t = 30)]
        order: usize,
    },
    /// Run a verification suite and report one line per check.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteKind::All)]
        suite: SuiteKind,
        /// Largest length the enumeration-backed checks inspect.
        #[arg(long = "max-n", default_value_t = 8)]
        max_n: usize,
        /// Truncation order for the series checks.
        #[arg(long, default_value_t = 30)]
        order: usize,
        #[arg(long)]
        basis: Option<String>,
        #[arg(long)]
        force: bool,
    },
}

/// Parses arguments from the process environment and runs; returns the exit
/// status. Usage errors exit through clap with status 2.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let mut sink = match open_sink(&cli.out) {
        Ok(sink) => sink,
        Err(e) => {
            eprintln!("cannot open output: {e}");
            return EXIT_USAGE;
        }
    };
    let status = dispatch(&cli, &mut sink);
    if sink.flush().is_err() {
        return EXIT_USAGE;
    }
    status
}

fn open_sink(path: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn dispatch(cli: &Cli, sink: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Count { max_n, basis, force } => run_count(cli, sink, *max_n, basis, *force),
        Command::Words { n, force } => run_words(cli, sink, *n, *force),
        Command::Decode { word } => run_decode(sink, word),
        Command::Encode { perm } => run_encode(sink, perm),
        Command::Series { which, order } => run_series(cli, sink, *which, *order),
        Command::Verify {
            suite,
            max_n,
            order,
            basis,
            force,
        } => run_verify(sink, *suite, *max_n, *order, basis, *force),
    };
    match result {
        Ok(status) => status,
        Err(e) => {
            eprintln!("i/o error: {e}");
            EXIT_USAGE
        }
    }
}

fn parse_basis(spec: &str) -> Result<PatternSet, String> {
    let patterns = spec
        .split(',')
        .map(|part| part.trim().parse::<Permutation>().map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    PatternSet::new(patterns).map_err(|e| e.to_string())
}

fn check_length_guard(requested: usize, force: bool) -> Result<(), i32> {
    if requested == 0 {
        eprintln!("lengths start at 1");
        return Err(EXIT_USAGE);
    }
    if requested > HARD_LENGTH_LIMIT && !force {
        eprintln!(
            "length {requested} exceeds the guard ({HARD_LENGTH_LIMIT}); pass --force to proceed"
        );
        return Err(EXIT_USAGE);
    }
    Ok(())
}

fn run_count(
    cli: &Cli,
    sink: &mut dyn Write,
    max_n: usize,
    basis: &Option<String>,
    force: bool,
) -> io::Result<i32> {
    if let Err(code) = check_length_guard(max_n, force) {
        return Ok(code);
    }
    let basis = match basis {
        None => PatternSet::default(),
        Some(spec) => match parse_basis(spec) {
            Ok(b) => b,
            Err(e) => {
                eprintln!("bad basis: {e}");
                return Ok(EXIT_BAD_INPUT);
            }
        },
    };
    let mut enumerator = Enumerator::new(basis).with_limit(max_n);
    match cli.format {
        OutputFormat::Plain => {
            // one row per level as soon as it is enumerated, so long runs
            // show progress
            for n in 1..=max_n {
                let count = enumerator.level(n).expect("within limit").members.len();
                writeln!(sink, "{n}\t{count}")?;
                sink.flush()?;
            }
        }
        OutputFormat::Csv => {
            writeln!(sink, "n,class,simple,skew_dec,sum_indec")?;
            for n in 1..=max_n {
                let census = enumerator.census(n).expect("within limit");
                writeln!(
                    sink,
                    "{},{},{},{},{}",
                    census.n,
                    census.class_count,
                    census.simple_count,
                    census.skew_dec_count,
                    census.sum_indec_count
                )?;
            }
        }
        OutputFormat::Jsonl => {
            for n in 1..=max_n {
                for member in &enumerator.level(n).expect("within limit").members {
                    writeln!(sink, "{}", member_json(n, member))?;
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn member_json(n: usize, p: &Permutation) -> String {
    let values: Vec<String> = p.values().iter().map(u32::to_string).collect();
    format!("{{\"n\":{n},\"perm\":[{}]}}", values.join(","))
}

fn run_words(cli: &Cli, sink: &mut dyn Write, n: usize, force: bool) -> io::Result<i32> {
    if let Err(code) = check_length_guard(n, force) {
        return Ok(code);
    }
    for word in words_of_length(n) {
        let q = decode(&word).expect("enumerated words decode");
        match cli.format {
            OutputFormat::Plain => writeln!(sink, "{word}\t{q}")?,
            OutputFormat::Csv => writeln!(sink, "{word},\"{q}\"")?,
            OutputFormat::Jsonl => {
                let values: Vec<String> = q.values().iter().map(u32::to_string).collect();
                writeln!(sink, "{{\"word\":\"{word}\",\"perm\":[{}]}}", values.join(","))?
            }
        }
    }
    Ok(EXIT_OK)
}

fn run_decode(sink: &mut dyn Write, input: &str) -> io::Result<i32> {
    let word: Word = match input.parse() {
        Ok(word) => word,
        Err(e) => {
            eprintln!("{e}");
            return Ok(EXIT_BAD_INPUT);
        }
    };
    match decode(&word) {
        Ok(q) => {
            writeln!(sink, "{q}")?;
            Ok(EXIT_OK)
        }
        Err(e) => {
            eprintln!("{e}");
            Ok(EXIT_BAD_INPUT)
        }
    }
}

fn run_encode(sink: &mut dyn Write, input: &str) -> io::Result<i32> {
    let p: Permutation = match input.parse() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("{e}");
            return Ok(EXIT_BAD_INPUT);
        }
    };
    match encode(&p) {
        Ok(word) => {
            writeln!(sink, "{word}")?;
            Ok(EXIT_OK)
        }
        Err(e) => {
            eprintln!("{e}");
            Ok(EXIT_BAD_INPUT)
        }
    }
}

fn run_series(cli: &Cli, sink: &mut dyn Write, which: SeriesKind, order: usize) -> io::Result<i32> {
    if order == 0 || order > MAX_SERIES_ORDER {
        eprintln!("order must be between 1 and {MAX_SERIES_ORDER}");
        return Ok(EXIT_USAGE);
    }
    let series: Series = match which {
        SeriesKind::Class => class_series(order).expect("series self-checks pass"),
        SeriesKind::Simples => word_count_series(order)
            .expect("series self-checks pass")
            .scale_int(2),
        SeriesKind::Words => word_count_series(order).expect("series self-checks pass"),
        SeriesKind::Catalan => catalan_series(order),
        SeriesKind::Skew => skew_series(order),
        SeriesKind::Inflations => simple_inflation_series(order).expect("series self-checks pass"),
    };
    let coefficient = |k: usize| {
        series
            .coeff_integer(k)
            .map(|c| c.to_string())
            .unwrap_or_else(|| series.coeff(k).to_string())
    };
    match cli.format {
        OutputFormat::Plain => {
            let row: Vec<String> = (1..=order).map(coefficient).collect();
            writeln!(sink, "{}", row.join(","))?;
        }
        OutputFormat::Csv => {
            writeln!(sink, "n,coefficient")?;
            for k in 1..=order {
                writeln!(sink, "{k},{}", coefficient(k))?;
            }
        }
        OutputFormat::Jsonl => {
            for k in 1..=order {
                writeln!(sink, "{{\"n\":{k},\"coefficient\":\"{}\"}}", coefficient(k))?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn run_verify(
    sink: &mut dyn Write,
    suite: SuiteKind,
    max_n: usize,
    order: usize,
    basis: &Option<String>,
    force: bool,
) -> io::Result<i32> {
    if let Err(code) = check_length_guard(max_n, force) {
        return Ok(code);
    }
    if order == 0 || order > MAX_SERIES_ORDER {
        eprintln!("order must be between 1 and {MAX_SERIES_ORDER}");
        return Ok(EXIT_USAGE);
    }
    if let Some(spec) = basis {
        // golden assertions only hold for the default basis
        match parse_basis(spec) {
            Ok(b) if b.is_default_basis() => {}
            Ok(_) => {
                eprintln!("verify runs against the default basis only");
                return Ok(EXIT_USAGE);
            }
            Err(e) => {
                eprintln!("bad basis: {e}");
                return Ok(EXIT_BAD_INPUT);
            }
        }
    }
    let mut enumerator = Enumerator::new(PatternSet::default()).with_limit(max_n.max(10));
    let checks = verify::run_suite(&mut enumerator, suite.name(), max_n, order);
    let mut failed = 0;
    for check in &checks {
        let mark = if check.passed { "ok " } else { "FAIL" };
        writeln!(sink, "{mark} {} — {}", check.name, check.detail)?;
        if !check.passed {
            failed += 1;
        }
    }
    writeln!(sink, "{} checks, {failed} failed", checks.len())?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_VERIFY_FAILED })
}
