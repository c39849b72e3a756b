use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use monodromy_core::cli::{
    cmd_fivepoint, cmd_fusion, cmd_lantern, cmd_modular, cmd_rep, cmd_scan, parse_level_range, parse_weights, to_csv,
    to_pretty, CliError, OutputFormat, ReportEnvelope, RunOptions, WordAlphabet,
};
use monodromy_core::orderlab::{DEFAULT_CLOSURE_CAP, DEFAULT_POWER_CAP};
use monodromy_core::par::Execution;

#[derive(Parser)]
#[command(name = "monodromy", version, about = "Exact three-strand braid monodromy at level l")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Maximum number of group elements enumerated by closures.
    #[arg(long, global = true, env = "MONODROMY_CLOSURE_CAP", default_value_t = DEFAULT_CLOSURE_CAP)]
    closure_cap: usize,
    /// Maximum power tried by order searches.
    #[arg(long, global = true, default_value_t = DEFAULT_POWER_CAP)]
    power_cap: u64,
    /// Working precision of interval enclosures.
    #[arg(long, global = true, env = "MONODROMY_PRECISION_BITS", default_value_t = 64)]
    precision_bits: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Run on a single thread.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, ValueEnum)]
enum Alphabet {
    Braid,
    Sigma,
    Xi,
}

#[derive(Subcommand)]
enum Command {
    /// Matrix, trace, determinant and orders of a word.
    Rep {
        #[arg(long)]
        level: u32,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, value_enum, default_value_t = Alphabet::Braid)]
        alphabet: Alphabet,
    },
    /// Finiteness verdicts over a range of levels.
    Scan {
        /// Inclusive range such as 1..10.
        #[arg(long)]
        levels: String,
    },
    /// A five-point loop word carried down to the braid generators.
    Fivepoint {
        #[arg(long)]
        level: u32,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Conformal block dimensions.
    Fusion {
        #[arg(long)]
        level: u32,
        #[arg(long, default_value_t = 0)]
        genus: u32,
        /// Comma-separated weights such as 1,1,1,1.
        #[arg(long, default_value = "")]
        weights: String,
    },
    /// The torus representation and its image.
    Modular {
        #[arg(long)]
        level: u32,
    },
    /// The loop relation checked letter by letter.
    Lantern {
        #[arg(long)]
        level: u32,
    },
}

fn run(cli: &Cli) -> Result<ReportEnvelope, CliError> {
    let c = &cli.common;
    let opts = RunOptions {
        closure_cap: c.closure_cap,
        power_cap: c.power_cap,
        precision_bits: c.precision_bits,
        exec: if c.sequential {
            Execution::Sequential
        } else {
            Execution::default()
        },
    };
    match &cli.command {
        Command::Rep { level, word, alphabet } => {
            let a = match alphabet {
                Alphabet::Braid => WordAlphabet::Braid,
                Alphabet::Sigma => WordAlphabet::Sigma,
                Alphabet::Xi => WordAlphabet::Xi,
            };
            cmd_rep(*level, word, a, &opts)
        }
        Command::Scan { levels } => {
            let (a, b) = parse_level_range(levels)?;
            cmd_scan(a, b, &opts)
        }
        Command::Fivepoint { level, word } => cmd_fivepoint(*level, word, &opts),
        Command::Fusion { level, genus, weights } => cmd_fusion(*level, *genus, &parse_weights(weights)?, &opts),
        Command::Modular { level } => cmd_modular(*level, &opts),
        Command::Lantern { level } => cmd_lantern(*level, &opts),
    }
}

fn render(r: &ReportEnvelope, f: OutputFormat) -> String {
    match f {
        OutputFormat::Json => serde_json::to_string_pretty(r).expect("report serializes") + "\n",
        OutputFormat::Csv => to_csv(r),
        OutputFormat::Pretty => to_pretty(r),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let format = match cli.common.format {
        Format::Json => OutputFormat::Json,
        Format::Csv => OutputFormat::Csv,
        Format::Pretty => OutputFormat::Pretty,
    };
    match run(&cli) {
        Ok(report) => {
            print!("{}", render(&report, format));
            if report.cap_exceeded {
                eprintln!("cap exceeded");
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
