use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use maxfreq::bench::{run_bench, BenchConfig, Corpus};
use maxfreq::engine::{run, Algorithm};
use maxfreq::generate::{generate, GeneratorSpec};
use maxfreq::params::{parse_decimal, MinSupport, MiningParams, DEFAULT_POOL_CAP};
use maxfreq::report::{render_csv, render_json, render_text, RuleSection};
use maxfreq::rules::{expand_frequent_subsets, generate_rules, single_consequent_only};
use maxfreq::txdb::{read_database, InputFormat};
use maxfreq::MineError;

#[derive(Parser)]
#[command(name = "maxfreq", version, about = "Maximal frequent itemset mining")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Mine a transaction file.
    Mine(MineArgs),
    /// Write a seeded synthetic corpus in matrix format.
    Generate(GenerateArgs),
    /// Time algorithms over generated or supplied corpora.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Matrix,
    Items,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputArg {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct MineArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "matrix")]
    format: FormatArg,
    /// Universe size for the items format; defaults to the largest item seen.
    #[arg(long)]
    universe: Option<usize>,
    #[arg(long, default_value = "mfif")]
    algorithm: String,
    /// Absolute count `N` or percentage `P%`.
    #[arg(long)]
    min_support: String,
    #[arg(long, default_value = "0")]
    min_confidence: String,
    /// Also print association rules.
    #[arg(long)]
    rules: bool,
    /// Restrict rules to a single consequent item.
    #[arg(long)]
    single_consequent: bool,
    #[arg(long, value_enum, default_value = "text")]
    output: OutputArg,
    #[arg(long, default_value_t = DEFAULT_POOL_CAP)]
    pool_cap: usize,
}

#[derive(Args, Clone)]
struct GeneratorArgs {
    /// Item universe size.
    #[arg(long, default_value_t = 20)]
    items: usize,
    /// Size of the planted itemset (0 for pure noise).
    #[arg(long, default_value_t = 12)]
    planted: usize,
    #[arg(long, default_value_t = 2)]
    copies: usize,
    #[arg(long, default_value_t = 0.2)]
    noise: f64,
    #[arg(long, default_value_t = 7)]
    seed: u64,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long)]
    transactions: usize,
    #[command(flatten)]
    generator: GeneratorArgs,
    /// Destination file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// Existing corpora (matrix format). Overrides --sizes.
    #[arg(long)]
    input: Vec<PathBuf>,
    /// Transaction counts of the generated corpora.
    #[arg(long, value_delimiter = ',', default_value = "100,500,5000,10000")]
    sizes: Vec<usize>,
    #[command(flatten)]
    generator: GeneratorArgs,
    #[arg(long, value_delimiter = ',', default_value = "mfif,apriori")]
    algorithms: Vec<String>,
    #[arg(long, default_value = "2")]
    min_support: String,
    #[arg(long, default_value_t = 3)]
    reps: usize,
    #[arg(long, default_value_t = DEFAULT_POOL_CAP)]
    pool_cap: usize,
    /// Report CSV; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Plot-ready CSV of median seconds per algorithm by transaction count.
    #[arg(long)]
    plot_data: Option<PathBuf>,
}

fn create(path: &Path) -> Result<BufWriter<File>, MineError> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|source| MineError::Io {
            path: path.display().to_string(),
            source,
        })
}

fn io_error(path: Option<&Path>, source: io::Error) -> MineError {
    MineError::Io {
        path: path.map_or("<stdout>".into(), |p| p.display().to_string()),
        source,
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), MineError> {
    match path {
        Some(p) => {
            let mut w = create(p)?;
            w.write_all(text.as_bytes())
                .and_then(|_| w.flush())
                .map_err(|e| io_error(Some(p), e))
        }
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| io_error(None, e)),
    }
}

fn cmd_mine(args: MineArgs) -> Result<(), MineError> {
    let format = match args.format {
        FormatArg::Matrix => InputFormat::Matrix,
        FormatArg::Items => InputFormat::Items(args.universe),
    };
    let db = read_database(&args.input, format)?;
    let algorithm: Algorithm = args.algorithm.parse()?;
    let min_support: MinSupport = args.min_support.parse()?;
    let params = MiningParams::from_min_support(min_support, db.len())?
        .with_min_confidence(parse_decimal(&args.min_confidence)?)
        .with_pool_cap(args.pool_cap);
    params.validate()?;

    let outcome = run(&db, &params, algorithm)?;

    let rules = if args.rules {
        let sources = expand_frequent_subsets(&db, &outcome.itemsets)?;
        let mut rules = generate_rules(&db, &sources, &params)?;
        if args.single_consequent {
            rules = single_consequent_only(rules);
        }
        Some(rules)
    } else {
        None
    };
    let section = rules.as_ref().map(|rules| RuleSection {
        min_confidence: params.min_confidence,
        rules,
    });

    let text = match args.output {
        OutputArg::Text => render_text(&outcome, &db, section.as_ref()),
        OutputArg::Json => render_json(&outcome, section.as_ref()),
        OutputArg::Csv => render_csv(&outcome, section.as_ref()),
    };
    write_output(None, &text)
}

fn generator_spec(n: usize, g: &GeneratorArgs) -> GeneratorSpec {
    GeneratorSpec {
        n_transactions: n,
        universe_size: g.items,
        planted_itemset_size: g.planted,
        planted_copies: g.copies,
        noise_density: g.noise,
        seed: g.seed,
    }
}

fn cmd_generate(args: GenerateArgs) -> Result<(), MineError> {
    let db = generate(&generator_spec(args.transactions, &args.generator))?;
    write_output(args.out.as_deref(), &db.to_matrix_text())
}

/// Exit status for bench: failure only when every row failed.
fn cmd_bench(args: BenchArgs) -> Result<bool, MineError> {
    let algorithms = args
        .algorithms
        .iter()
        .map(|a| a.parse())
        .collect::<Result<Vec<Algorithm>, _>>()?;
    let min_support: MinSupport = args.min_support.parse()?;
    if args.reps == 0 {
        return Err(MineError::Params("--reps must be at least 1".into()));
    }

    let corpora = if args.input.is_empty() {
        args.sizes
            .iter()
            .map(|&n| {
                let spec = generator_spec(n, &args.generator);
                generate(&spec).map(|db| Corpus {
                    name: format!(
                        "gen-n{n}-u{}-k{}-s{}",
                        spec.universe_size, spec.planted_itemset_size, spec.seed
                    ),
                    db,
                })
            })
            .collect::<Result<Vec<_>, _>>()?
    } else {
        args.input
            .iter()
            .map(|p| {
                read_database(p, InputFormat::Matrix).map(|db| Corpus {
                    name: p.display().to_string(),
                    db,
                })
            })
            .collect::<Result<Vec<_>, _>>()?
    };

    let config = BenchConfig {
        algorithms,
        min_support,
        pool_cap: args.pool_cap,
        repetitions: args.reps,
    };
    let report = run_bench(&corpora, &config);

    let csv_error =
        |path: Option<&Path>, e: csv::Error| io_error(path, io::Error::other(e.to_string()));
    match args.out.as_deref() {
        Some(p) => report
            .write_csv(create(p)?)
            .map_err(|e| csv_error(Some(p), e))?,
        None => report
            .write_csv(io::stdout().lock())
            .map_err(|e| csv_error(None, e))?,
    }
    if let Some(p) = args.plot_data.as_deref() {
        report
            .write_plot_data(create(p)?)
            .map_err(|e| csv_error(Some(p), e))?;
    }
    for row in report.rows.iter().filter(|r| !r.succeeded()) {
        eprintln!(
            "warning: {} on {} failed: {}",
            row.algorithm,
            row.corpus,
            row.error.as_deref().unwrap_or("")
        );
    }
    for corpus in report.inconsistent_corpora() {
        eprintln!("warning: algorithms disagree on {corpus}");
    }
    Ok(!report.all_failed())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Mine(args) => cmd_mine(args).map(|_| true),
        Command::Generate(args) => cmd_generate(args).map(|_| true),
        Command::Bench(args) => cmd_bench(args),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
