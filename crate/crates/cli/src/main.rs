//! Command-line front end: load problems from JSON, compute entropies and
//! refinements, and run the verification campaigns and scenarios.
//!
//! Exit codes: 0 success, 1 verification failure (a law or verdict did not
//! hold), 2 usage or validation error, 3 numeric failure.

mod problem;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use indexmap::IndexMap;

use sea_core::{
    cond_entropy, entropy, refine, EntropyOptions, Partition, SequentialEffectAlgebra,
};
use sea_verify::{
    check_sea_axioms, run_logsum_fuzz, run_theorem_campaign, scenario_example_2_3,
    scenario_nondistributivity, AxiomsConfig, CampaignConfig, ConfigError, InstanceKind,
    LogSumConfig,
};

use problem::{LoadedProblem, ProblemData};
use report::ReportFile;

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or invalid input files; exit code 2.
    Usage(String),
    /// Numeric or I/O failure during computation; exit code 3.
    Numeric(String),
}

impl From<ConfigError> for CliError {
    fn from(err: ConfigError) -> Self {
        CliError::Usage(err.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "sea",
    version,
    about = "Sequential effect algebras: partition entropies, refinements, and law verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum InstanceArg {
    Boolean,
    Fuzzy,
    Quantum,
}

impl From<InstanceArg> for InstanceKind {
    fn from(arg: InstanceArg) -> Self {
        match arg {
            InstanceArg::Boolean => InstanceKind::Boolean,
            InstanceArg::Fuzzy => InstanceKind::Fuzzy,
            InstanceArg::Quantum => InstanceKind::Quantum,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Entropy of one named partition, or the chain-rule triple for two
    Entropy {
        /// Problem file (JSON)
        input: PathBuf,
        /// One or two partition names defined in the file
        #[arg(required = true, num_args = 1..=2)]
        partitions: Vec<String>,
        /// Log base; overrides the file's options
        #[arg(long)]
        base: Option<f64>,
        /// Quantum spectral tolerance; overrides the file's options
        #[arg(long)]
        tol: Option<f64>,
        /// Write a machine-readable report here
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Refine one named partition by another and write the result back
    Refine {
        /// Problem file (JSON)
        input: PathBuf,
        /// Name of the outer partition
        left: String,
        /// Name of the inner partition
        right: String,
        /// Output problem file
        #[arg(long)]
        out: PathBuf,
        /// Name for the refined partition (default "<left>∘<right>")
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Verify the six entropy laws on seeded random cases
    CheckTheorem {
        #[arg(long, value_enum)]
        instance: InstanceArg,
        /// Hilbert-space dimension or ground-set size
        #[arg(long)]
        dim: usize,
        /// Partition-size menu; trials cycle through it for A, B, C
        #[arg(long, value_delimiter = ',', default_values_t = [2, 3, 2])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Master seed (falls back to SEA_SEED)
        #[arg(long, env = "SEA_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, default_value_t = 2.0)]
        base: f64,
        /// Worker threads (0 = automatic); never affects results
        #[arg(long, default_value_t = 0)]
        workers: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Verify the sequential-product axioms on seeded random cases
    Axioms {
        #[arg(long, value_enum)]
        instance: InstanceArg,
        #[arg(long, default_value_t = 4)]
        dim: usize,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, env = "SEA_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        workers: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Fuzz the log sum inequality on random nonnegative vectors
    Logsum {
        #[arg(long, default_value_t = 10000)]
        trials: usize,
        #[arg(long, env = "SEA_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2.0)]
        base: f64,
        #[arg(long, default_value_t = 0)]
        workers: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Reproduce the two-basis qubit scenario: vanishing meets, the Bayes
    /// contradiction, the working ∘-refinement, and the lattice laws
    #[command(name = "example-2-3")]
    Example23 {
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(CliError::Numeric(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Entropy {
            input,
            partitions,
            base,
            tol,
            json,
        } => cmd_entropy(&input, &partitions, base, tol, json.as_deref()),
        Command::Refine {
            input,
            left,
            right,
            out,
            name,
            tol,
            json,
        } => cmd_refine(&input, &left, &right, &out, name, tol, json.as_deref()),
        Command::CheckTheorem {
            instance,
            dim,
            sizes,
            trials,
            seed,
            tol,
            base,
            workers,
            json,
        } => {
            let config = CampaignConfig {
                instance: instance.into(),
                size: dim,
                partition_sizes: sizes,
                trials,
                seed,
                tolerance: tol,
                log_base: base,
            };
            cmd_check_theorem(&config, workers, json.as_deref())
        }
        Command::Axioms {
            instance,
            dim,
            trials,
            seed,
            workers,
            json,
        } => {
            let config = AxiomsConfig {
                instance: instance.into(),
                size: dim,
                trials,
                seed,
            };
            cmd_axioms(&config, workers, json.as_deref())
        }
        Command::Logsum {
            trials,
            seed,
            base,
            workers,
            json,
        } => {
            let config = LogSumConfig {
                trials,
                seed,
                log_base: base,
                ..LogSumConfig::standard(1, 0)
            };
            cmd_logsum(&config, workers, json.as_deref())
        }
        Command::Example23 { json } => cmd_example_2_3(json.as_deref()),
    }
}

fn with_workers<T: Send>(workers: usize, job: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    if workers == 0 {
        return Ok(job());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| CliError::Numeric(format!("building worker pool: {e}")))?;
    Ok(pool.install(job))
}

fn entropy_quantities<S: SequentialEffectAlgebra>(
    sea: &S,
    state: &S::State,
    partitions: &IndexMap<String, Partition<S::Element>>,
    names: &[String],
    opts: EntropyOptions,
) -> Result<IndexMap<String, f64>, CliError> {
    let lookup = |name: &String| {
        partitions.get(name).ok_or_else(|| {
            CliError::Usage(format!(
                "partition '{name}' not found; the file defines: {}",
                partitions.keys().cloned().collect::<Vec<_>>().join(", ")
            ))
        })
    };
    let a = lookup(&names[0])?;
    let h_a = entropy(sea, state, a, opts);
    let mut quantities = IndexMap::new();
    quantities.insert(format!("H({})", names[0]), h_a);
    if names.len() == 2 {
        let b = lookup(&names[1])?;
        let refined =
            refine(sea, a, b).map_err(|e| CliError::Numeric(format!("refinement: {e}")))?;
        let h_ab = entropy(sea, state, &refined, opts);
        let h_b_given_a = cond_entropy(sea, state, b, a, opts);
        quantities.insert(format!("H({}∘{})", names[0], names[1]), h_ab);
        quantities.insert(format!("H({}|{})", names[1], names[0]), h_b_given_a);
        quantities.insert("chain_residual".into(), h_ab - h_b_given_a - h_a);
    }
    Ok(quantities)
}

fn cmd_entropy(
    input: &std::path::Path,
    names: &[String],
    base: Option<f64>,
    tol: Option<f64>,
    json: Option<&std::path::Path>,
) -> Result<u8, CliError> {
    let LoadedProblem { raw, options, data } = problem::load_problem(input, base, tol)?;
    let quantities = match &data {
        ProblemData::Boolean {
            sea,
            state,
            partitions,
        } => entropy_quantities(sea, state, partitions, names, options)?,
        ProblemData::Fuzzy {
            sea,
            state,
            partitions,
        } => entropy_quantities(sea, state, partitions, names, options)?,
        ProblemData::Quantum {
            sea,
            state,
            partitions,
        } => entropy_quantities(sea, state, partitions, names, options)?,
    };

    println!(
        "entropies of '{}' (log base {}):",
        input.display(),
        options.log_base
    );
    report::print_quantities(&quantities);

    if let Some(path) = json {
        let mut file = ReportFile::new("entropy", &(&raw, names, options.log_base));
        file.quantities = Some(quantities);
        file.write(path)?;
    }
    Ok(0)
}

fn cmd_refine(
    input: &std::path::Path,
    left: &str,
    right: &str,
    out: &std::path::Path,
    name: Option<String>,
    tol: Option<f64>,
    json: Option<&std::path::Path>,
) -> Result<u8, CliError> {
    let LoadedProblem { raw, data, .. } = problem::load_problem(input, None, tol)?;
    let target = name.unwrap_or_else(|| format!("{left}∘{right}"));

    fn refined_values<S: SequentialEffectAlgebra>(
        sea: &S,
        partitions: &IndexMap<String, Partition<S::Element>>,
        left: &str,
        right: &str,
        to_value: impl Fn(&S::Element) -> serde_json::Value,
    ) -> Result<Vec<serde_json::Value>, CliError> {
        let lookup = |name: &str| {
            partitions.get(name).ok_or_else(|| {
                CliError::Usage(format!(
                    "partition '{name}' not found; the file defines: {}",
                    partitions.keys().cloned().collect::<Vec<_>>().join(", ")
                ))
            })
        };
        let refined = refine(sea, lookup(left)?, lookup(right)?)
            .map_err(|e| CliError::Numeric(format!("refinement: {e}")))?;
        Ok(refined.iter().map(to_value).collect())
    }

    let values = match &data {
        ProblemData::Boolean { sea, partitions, .. } => {
            refined_values(sea, partitions, left, right, problem::boolean_element_to_value)?
        }
        ProblemData::Fuzzy { sea, partitions, .. } => {
            refined_values(sea, partitions, left, right, problem::fuzzy_element_to_value)?
        }
        ProblemData::Quantum { sea, partitions, .. } => {
            refined_values(sea, partitions, left, right, problem::quantum_element_to_value)?
        }
    };

    let element_count = values.len();
    let mut output = raw.clone();
    output.partitions.insert(target.clone(), values);
    problem::write_problem(out, &output)?;
    println!(
        "wrote {element_count} refinement elements to '{}' as partition '{target}'",
        out.display()
    );

    if let Some(path) = json {
        let mut file = ReportFile::new("refine", &(&raw, left, right, &target));
        let mut quantities = IndexMap::new();
        quantities.insert("element_count".to_string(), element_count as f64);
        file.quantities = Some(quantities);
        file.write(path)?;
    }
    Ok(0)
}

fn cmd_check_theorem(
    config: &CampaignConfig,
    workers: usize,
    json: Option<&std::path::Path>,
) -> Result<u8, CliError> {
    config.validate()?;
    let report = with_workers(workers, || run_theorem_campaign(config))??;

    println!(
        "entropy-law campaign: {} instance, size {}, {} trials, seed {}, tolerance {:.1e}",
        config.instance, config.size, config.trials, config.seed, config.tolerance
    );
    report::print_law_table(&report.laws);
    println!(
        "  generator redraws: {}; trial errors: {}; runtime: {} ms",
        report.generator_redraws, report.trial_errors, report.runtime_ms
    );

    let failures: usize = report.laws.iter().map(|l| l.failures).sum();
    if failures > 0 {
        for law in report.laws.iter().filter(|l| l.failures > 0) {
            println!(
                "  VIOLATION: {} failed {} times; worst {:.3e}; reproduce with seed {} trial {}",
                law.law, law.failures, law.worst_residual, config.seed, law.worst_trial
            );
        }
    }

    if let Some(path) = json {
        let mut file = ReportFile::new("check-theorem", config);
        file.campaign = Some(report.clone());
        file.write(path)?;
    }

    if failures > 0 {
        Ok(1)
    } else if report.trial_errors > 0 {
        Err(CliError::Numeric(format!(
            "{} trials failed to generate cases",
            report.trial_errors
        )))
    } else {
        Ok(0)
    }
}

fn cmd_axioms(
    config: &AxiomsConfig,
    workers: usize,
    json: Option<&std::path::Path>,
) -> Result<u8, CliError> {
    let report = with_workers(workers, || check_sea_axioms(config))??;
    println!(
        "axiom campaign: {} instance, size {}, {} trials, seed {}",
        config.instance, config.size, config.trials, config.seed
    );
    report::print_law_table(&report.laws);
    println!("  runtime: {} ms", report.runtime_ms);

    if let Some(path) = json {
        let mut file = ReportFile::new("axioms", config);
        file.axioms = Some(report.clone());
        file.write(path)?;
    }
    Ok(if report.all_passed() { 0 } else { 1 })
}

fn cmd_logsum(
    config: &LogSumConfig,
    workers: usize,
    json: Option<&std::path::Path>,
) -> Result<u8, CliError> {
    let report = with_workers(workers, || run_logsum_fuzz(config))??;
    println!(
        "log-sum fuzz: {} trials, seed {}, log base {}",
        config.trials, config.seed, config.log_base
    );
    println!(
        "  min residual {:.3e} at trial {}; equality-case max |residual| {:.3e}; runtime {} ms",
        report.min_residual, report.min_trial, report.equality_max_abs, report.runtime_ms
    );

    if let Some(path) = json {
        let mut file = ReportFile::new("logsum", config);
        file.logsum = Some(report.clone());
        file.write(path)?;
    }
    Ok(if report.passed() { 0 } else { 1 })
}

fn cmd_example_2_3(json: Option<&std::path::Path>) -> Result<u8, CliError> {
    let records = vec![scenario_example_2_3(), scenario_nondistributivity()];
    for record in &records {
        report::print_scenario(record);
    }
    let all_true = records.iter().all(|r| r.all_true());

    if let Some(path) = json {
        let mut file = ReportFile::new("example-2-3", &());
        file.scenarios = Some(records);
        file.write(path)?;
    }
    Ok(if all_true { 0 } else { 1 })
}
