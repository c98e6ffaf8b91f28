use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use famalg::rootsys::DEFAULT_WEYL_CAP;
use famalg::weightlat::MinimalityOrder;
use famalg_cli::{
    parse_type, parse_weight, parse_word, run, run_ext, ExtJob, JobSpec, OutputFormat, RunError,
};

/// Exact dimensions of simple family-algebra modules: for a simple type, a
/// dominant parameter lambda, and highest weights of finite-dimensional
/// modules, reports dim S / dim N / dim Q per weight with all consistency
/// checks.
#[derive(Parser)]
#[command(
    name = "famalg",
    version,
    subcommand_negates_reqs = true,
    args_conflicts_with_subcommands = true
)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
    #[command(flatten)]
    report: ReportArgs,
}

#[derive(Args)]
struct ReportArgs {
    /// Simple type letter, A through G
    #[arg(long = "type", value_name = "LETTER", required = true)]
    type_letter: Option<char>,
    /// Rank of the simple type (at most 8)
    #[arg(long, required = true)]
    rank: Option<usize>,
    /// Parameter weight in fundamental coordinates, e.g. "0,0" or "1/2,0"
    #[arg(long, required = true, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Highest weight of V in fundamental coordinates; repeatable
    #[arg(long = "v", required = true, allow_hyphen_values = true)]
    v: Vec<String>,
    #[arg(long, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,
    /// Order backing the reported minimality flags
    #[arg(long, value_enum, default_value_t = OrderArg::RootLattice)]
    order_variant: OrderArg,
    /// Use the general-position fast path (errors when not applicable)
    #[arg(long)]
    fast_path: bool,
    /// Write the Kazhdan-Lusztig table of the integral Weyl group here
    /// (also honored from the FAMALG_KL_DUMP environment variable)
    #[arg(long)]
    kl_dump: Option<PathBuf>,
    /// Weyl-group enumeration cap
    #[arg(long, default_value_t = DEFAULT_WEYL_CAP)]
    cap: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Graded Ext dimensions between the standard object at x.lambda and
    /// the simple at y.lambda (regular dominant lambda only)
    Ext(ExtArgs),
}

#[derive(Args)]
struct ExtArgs {
    #[arg(long = "type", value_name = "LETTER")]
    type_letter: char,
    #[arg(long)]
    rank: usize,
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    /// Word for x over the integral simple reflections, 1-based, e.g. "1,2"
    #[arg(long)]
    x: String,
    /// Word for y, same convention; "e" is the identity
    #[arg(long)]
    y: String,
    #[arg(long, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,
    #[arg(long, default_value_t = DEFAULT_WEYL_CAP)]
    cap: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Json,
    Csv,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Table => OutputFormat::Table,
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Csv => OutputFormat::Csv,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    RootLattice,
    DominantCone,
}

impl From<OrderArg> for MinimalityOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::RootLattice => MinimalityOrder::RootLattice,
            OrderArg::DominantCone => MinimalityOrder::DominantCone,
        }
    }
}

fn build_job(args: &ReportArgs) -> Result<JobSpec, RunError> {
    let letter = parse_type(args.type_letter.expect("required"))?;
    let rank = args.rank.expect("required");
    let lambda = parse_weight(args.lambda.as_deref().expect("required"), "--lambda")?;
    let mut job = JobSpec::new(letter, rank, lambda);
    for v in &args.v {
        job.v_highest_weights.push(parse_weight(v, "--v")?);
    }
    job.format = args.format.into();
    job.order_variant = args.order_variant.into();
    job.fast_path = args.fast_path;
    job.kl_dump = args.kl_dump.clone();
    job.cap = args.cap;
    Ok(job)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let result = match &cli.command {
        Some(Command::Ext(ext)) => {
            let job = match (
                parse_type(ext.type_letter),
                parse_weight(&ext.lambda, "--lambda"),
            ) {
                (Ok(letter), Ok(lambda)) => match (parse_word(&ext.x), parse_word(&ext.y)) {
                    (Ok(x_word), Ok(y_word)) => Ok(ExtJob {
                        type_letter: letter,
                        rank: ext.rank,
                        lambda,
                        x_word,
                        y_word,
                        format: ext.format.into(),
                        cap: ext.cap,
                    }),
                    (Err(e), _) | (_, Err(e)) => Err(e),
                },
                (Err(e), _) | (_, Err(e)) => Err(e),
            };
            job.and_then(|j| run_ext(&j, &mut stdout.lock()))
        }
        None => build_job(&cli.report).and_then(|job| run(&job, &mut stdout.lock())),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
