use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cli::commands::{self, Options, Render};
use cli::CliError;

#[derive(Parser)]
#[command(name = "remak", version, about = "Remak decompositions of finite groups")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Largest action degree used to realize a quotient.
    #[arg(long, global = true)]
    coset_bound: Option<usize>,
    /// Largest group order enumerated by the oracle.
    #[arg(long, global = true)]
    oracle_bound: Option<usize>,
    /// Run twice and fail unless both outputs are byte-identical.
    #[arg(long, global = true)]
    seedless: bool,
    /// Recompute and check the certificate.
    #[arg(long, global = true)]
    certify: bool,
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Plain text output (the default).
    #[arg(long, global = true)]
    text: bool,
    /// Report the decomposition time. Ignored with --seedless.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Remak decomposition of a group, under optional operators.
    Decompose {
        #[arg(short = 'i', long = "input")]
        input: PathBuf,
        #[arg(long)]
        operators: Option<PathBuf>,
    },
    /// Direct complement of a subgroup, or the test it fails.
    Complement {
        #[arg(short = 'i', long = "input")]
        input: PathBuf,
        #[arg(long)]
        subgroup: PathBuf,
        #[arg(long)]
        operators: Option<PathBuf>,
    },
    /// Primary basis and Remak factors of an abelian group.
    Abelian {
        #[arg(short = 'i', long = "input")]
        input: PathBuf,
        #[arg(long)]
        operators: Option<PathBuf>,
    },
    /// Frame of a commutative ring given by structure constants.
    Frame {
        #[arg(short = 'i', long = "input")]
        input: PathBuf,
    },
    /// Centroid and frame of the commutator map of a class-2 group.
    Centroid {
        #[arg(short = 'i', long = "input")]
        input: PathBuf,
        /// Use the second centre instead of the group.
        #[arg(long)]
        zeta2: bool,
    },
    /// Compare the decomposition with the brute-force oracle.
    OracleCheck {
        #[arg(short = 'i', long = "input")]
        input: PathBuf,
    },
    /// Decompose every .json file in a directory; CSV summary.
    Batch {
        dir: PathBuf,
        /// Also cross-check each file with the oracle.
        #[arg(long)]
        oracle: bool,
        /// Write per-file reports and summary.csv here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Write the test corpus as group files.
    Corpus {
        dir: PathBuf,
        /// Also write table-format files for groups up to this order.
        #[arg(long, default_value_t = 0)]
        tables_up_to: u128,
    },
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))
}

fn read_opt(path: &Option<PathBuf>) -> Result<Option<String>, CliError> {
    path.as_ref().map(read).transpose()
}

fn render(r: &impl Render, json: bool) -> String {
    if json {
        let mut s = r.to_json();
        s.push('\n');
        s
    } else {
        r.to_text()
    }
}

fn run(command: &Command, opts: &Options, json: bool) -> Result<String, CliError> {
    Ok(match command {
        Command::Decompose { input, operators } => {
            render(&commands::decompose(&read(input)?, read_opt(operators)?.as_deref(), opts)?, json)
        }
        Command::Complement { input, subgroup, operators } => render(
            &commands::complement(&read(input)?, &read(subgroup)?, read_opt(operators)?.as_deref(), opts)?,
            json,
        ),
        Command::Abelian { input, operators } => {
            render(&commands::abelian(&read(input)?, read_opt(operators)?.as_deref())?, json)
        }
        Command::Frame { input } => render(&commands::frame(&read(input)?)?, json),
        Command::Centroid { input, zeta2 } => render(&commands::centroid_report(&read(input)?, *zeta2, opts)?, json),
        Command::OracleCheck { input } => {
            let r = commands::oracle_check(&read(input)?, opts)?;
            if !r.agree {
                eprint!("{}", r.to_text());
                return Err(CliError::Failed("pipeline and oracle disagree".into()));
            }
            render(&r, json)
        }
        Command::Batch { dir, oracle, out, jobs } => {
            let report = match jobs {
                Some(n) => rayon::ThreadPoolBuilder::new()
                    .num_threads(*n)
                    .build()
                    .map_err(|e| CliError::Failed(e.to_string()))?
                    .install(|| commands::batch(dir, *oracle, opts))?,
                None => commands::batch(dir, *oracle, opts)?,
            };
            if let Some(out) = out {
                std::fs::create_dir_all(out)?;
                for (row, r) in report.rows.iter().zip(&report.reports) {
                    if let Some(r) = r {
                        std::fs::write(out.join(format!("{}.report.json", row.file)), r.to_json())?;
                    }
                }
                std::fs::write(out.join("summary.csv"), report.csv())?;
            }
            render(&report, json)
        }
        Command::Corpus { dir, tables_up_to } => {
            let n = commands::write_corpus(dir, *tables_up_to)?;
            format!("wrote {n} groups to {}\n", dir.display())
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = &cli.global;
    let defaults = Options::default();
    let opts = Options {
        coset_bound: g.coset_bound.unwrap_or(defaults.coset_bound),
        oracle_bound: g.oracle_bound.unwrap_or(defaults.oracle_bound),
        certify: g.certify,
        timing: g.timing && !g.seedless,
    };
    let result = run(&cli.command, &opts, g.json).and_then(|out| {
        if g.seedless && run(&cli.command, &opts, g.json)? != out {
            return Err(CliError::Failed("two runs gave different output".into()));
        }
        Ok(out)
    });
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("remak: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
