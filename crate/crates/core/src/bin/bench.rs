use clap::{Parser, ValueEnum};
use monoidal::bench::{self, BenchConfig, OutputFormat, SuiteSel};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    Dlist,
    Codensity,
    Freeap,
    Prearrow,
    All,
}

impl From<SuiteArg> for SuiteSel {
    fn from(arg: SuiteArg) -> Self {
        match arg {
            SuiteArg::Dlist => SuiteSel::Dlist,
            SuiteArg::Codensity => SuiteSel::Codensity,
            SuiteArg::Freeap => SuiteSel::Freeap,
            SuiteArg::Prearrow => SuiteSel::Prearrow,
            SuiteArg::All => SuiteSel::All,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutputArg {
    Json,
    Csv,
    Table,
}

impl From<OutputArg> for OutputFormat {
    fn from(arg: OutputArg) -> Self {
        match arg {
            OutputArg::Json => OutputFormat::Json,
            OutputArg::Csv => OutputFormat::Csv,
            OutputArg::Table => OutputFormat::Table,
        }
    }
}

/// Compare naive left-nested builds against their Cayley-style
/// representations, reporting deterministic constructor counts and median
/// wall times per (suite, variant, size).
#[derive(Parser, Debug)]
#[command(name = "bench")]
struct Cli {
    /// Workload family to run.
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    suite: SuiteArg,

    /// Comma-separated strictly increasing sizes; defaults depend on the
    /// suite (larger for dlist, smaller for the tree-building suites).
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,

    /// Timed runs per cell; the median is reported.
    #[arg(long, default_value_t = 5)]
    repeats: u32,

    /// Untimed runs per cell before measuring.
    #[arg(long, default_value_t = 1)]
    warmup: u32,

    #[arg(long, value_enum, default_value_t = OutputArg::Table)]
    output: OutputArg,

    /// Seed for the generated workload inputs.
    #[arg(long, default_value_t = 0xC0FFEE)]
    seed: u64,
}

fn main() {
    let cli = Cli::parse();
    let config = BenchConfig {
        suite: cli.suite.into(),
        sizes: cli.sizes,
        repeats: cli.repeats,
        warmup: cli.warmup,
        output: cli.output.into(),
        seed: cli.seed,
    };
    match bench::run(&config) {
        Ok(report) => {
            print!("{}", bench::emit(&report, config.output));
            if report.summaries.iter().any(|s| !s.observations_match) {
                eprintln!("error: naive and cayley observations disagree");
                std::process::exit(1);
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(2);
        }
    }
}
