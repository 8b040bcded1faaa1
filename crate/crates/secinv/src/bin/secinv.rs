//! Command-line interface for the secondary-invariant kernel.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use secinv::error::Error;
use secinv::examples::{instance, instances};
use secinv::group::{validate_primaries, GroupRepresentation, PrimarySystem};
use secinv::molien::MolienProfile;
use secinv::monomial::MonomialOrder;
use secinv::problem::ProblemFile;
use secinv::report::RunReport;
use secinv::secondary::{
    compute_secondaries, irreducible_only, Algorithm, SecondaryOptions, SecondaryResult,
};

#[derive(Parser)]
#[command(
    name = "secinv",
    version,
    about = "Secondary invariants of finite matrix groups over Q"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Molien series and per-degree secondary counts.
    Molien {
        #[command(flatten)]
        input: InputArgs,
        /// Expand the series up to this degree (default: the degree cap
        /// implied by the primaries, or 10 without primaries).
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Compute all secondary invariants.
    Secondary {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Compute irreducible secondary invariants only; reducible ones are
    /// tracked as normal forms and never expanded.
    Irred {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Validate the input: group closure, primary invariant checks.
    Verify {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Run a built-in benchmark instance and report timings.
    Bench {
        /// Built-in example number (1-8; 7 and 8 are stretch instances).
        #[arg(long)]
        example: usize,
        #[command(flatten)]
        run: RunArgs,
    },
    /// List the built-in examples.
    List,
}

#[derive(Args)]
struct InputArgs {
    /// Problem file (see `docs/problem-format.md`).
    #[arg(conflicts_with = "example")]
    file: Option<PathBuf>,
    /// Built-in example number (1-9).
    #[arg(long)]
    example: Option<usize>,
}

#[derive(Args, Clone)]
struct RunArgs {
    /// Search strategy.
    #[arg(long, value_enum, default_value_t = AlgorithmArg::Improved)]
    algorithm: AlgorithmArg,
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    out: OutputFormat,
    /// Print the invariants themselves, not just counts.
    #[arg(long)]
    invariants: bool,
    /// Worker threads for candidate reduction (1 = sequential).
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Reynolds-image candidates generated per batch.
    #[arg(long, default_value_t = 1000)]
    batch_size: usize,
    /// Abort if the search passes this degree (exit code 4).
    #[arg(long)]
    max_degree: Option<u32>,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Basic,
    Refined,
    New,
    Improved,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(a: AlgorithmArg) -> Algorithm {
        match a {
            AlgorithmArg::Basic => Algorithm::Basic,
            AlgorithmArg::Refined => Algorithm::Refined,
            AlgorithmArg::New => Algorithm::New,
            AlgorithmArg::Improved => Algorithm::Improved,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

/// A fully loaded problem: group, names, order, optional primaries.
struct Loaded {
    names: Vec<String>,
    order: MonomialOrder,
    group: GroupRepresentation,
    primaries: Vec<secinv::poly::Polynomial>,
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Parse { .. } | Error::UnknownVariable(_) | Error::Problem(_) => 2,
        Error::GroupTooLarge { .. } | Error::DegreeCapOverrun { .. } => 4,
        _ => 3,
    }
}

fn fail(err: Error) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(exit_code_for(&err))
}

fn load(input: &InputArgs) -> Result<Loaded, Error> {
    match (&input.file, input.example) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Problem(format!("cannot read {}: {e}", path.display())))?;
            let pf = ProblemFile::parse(&text)?;
            let group = pf.close_group()?;
            Ok(Loaded {
                names: pf.variables,
                order: pf.order,
                group,
                primaries: pf.primaries,
            })
        }
        (None, Some(number)) => {
            let inst = instance(number)?;
            let order = MonomialOrder::DegRevLex;
            let group = GroupRepresentation::close(inst.generators.clone())?;
            let primaries = inst.parse_primaries(order)?;
            Ok(Loaded {
                names: inst.variable_names(),
                order,
                group,
                primaries,
            })
        }
        (None, None) => Err(Error::Problem(
            "no input: pass a problem file or --example N".into(),
        )),
        (Some(_), Some(_)) => unreachable!("clap conflict"),
    }
}

fn require_primaries(loaded: &Loaded) -> Result<PrimarySystem, Error> {
    if loaded.primaries.is_empty() {
        return Err(Error::InvalidPrimaries(
            "this input has no primary invariants (example 9's were never published); \
             only `molien --max-degree` and `verify` are available"
                .into(),
        ));
    }
    validate_primaries(&loaded.primaries, &loaded.group)
}

fn cmd_molien(input: &InputArgs, max_degree: Option<u32>) -> Result<(), Error> {
    let loaded = load(input)?;
    let group = &loaded.group;
    println!("group order: {}", group.order());
    if loaded.primaries.is_empty() {
        let cap = max_degree.unwrap_or(10);
        let series = secinv::molien::molien_series(group, cap)?;
        println!("molien coefficients a_0..a_{cap}:");
        print_series(&series);
        return Ok(());
    }
    let system = require_primaries(&loaded)?;
    let profile = MolienProfile::compute(group, system.degrees())?;
    let cap = max_degree.unwrap_or(profile.max_degree);
    let series = if cap == profile.max_degree {
        profile.series.clone()
    } else {
        secinv::molien::molien_series(group, cap)?
    };
    println!("primary degrees: {:?}", system.degrees());
    println!("molien coefficients a_0..a_{cap}:");
    print_series(&series);
    println!("secondary counts m_0..m_{}:", profile.max_degree);
    print_series(&profile.counts);
    println!("total secondary invariants: {}", profile.total);
    Ok(())
}

fn print_series(values: &[num_bigint::BigInt]) {
    let text: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    println!("  {}", text.join(", "));
}

fn run_search(
    input: &InputArgs,
    run: &RunArgs,
    irred: bool,
) -> Result<(), Error> {
    let loaded = load(input)?;
    let system = require_primaries(&loaded)?;
    let opts = SecondaryOptions {
        algorithm: run.algorithm.into(),
        batch_size: run.batch_size.max(1),
        threads: run.threads.max(1),
        max_degree: run.max_degree,
    };
    let start = Instant::now();
    let result = if irred {
        irreducible_only(&system, &loaded.group, opts)?
    } else {
        compute_secondaries(&system, &loaded.group, opts)?
    };
    let elapsed = start.elapsed();
    emit(&loaded, &system, run, irred, &result, elapsed)
}

fn emit(
    loaded: &Loaded,
    system: &PrimarySystem,
    run: &RunArgs,
    irred: bool,
    result: &SecondaryResult,
    elapsed: std::time::Duration,
) -> Result<(), Error> {
    let algorithm: Algorithm = run.algorithm.into();
    let algorithm_name = if irred {
        "improved (irreducible-only)"
    } else {
        algorithm.name()
    };
    let report = RunReport {
        result,
        algorithm: algorithm_name,
        group_order: loaded.group.order(),
        nvars: loaded.group.n(),
        primary_degrees: system.degrees(),
        threads: run.threads.max(1),
        elapsed,
        variable_names: &loaded.names,
        include_polynomials: run.invariants,
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run.out {
        OutputFormat::Text => report
            .write_text(&mut out)
            .map_err(|e| Error::Problem(format!("write failed: {e}"))),
        OutputFormat::Json => report.write_json_lines(&mut out),
    }
}

fn cmd_verify(input: &InputArgs) -> Result<(), Error> {
    let loaded = load(input)?;
    println!("variables: {}", loaded.names.join(", "));
    println!("monomial order: {}", loaded.order.name());
    println!(
        "group: {} generators, order {} ({})",
        loaded.group.generators().len(),
        loaded.group.order(),
        if loaded.group.is_permutation_group() {
            "permutation group"
        } else if loaded.group.is_monomial_group() {
            "monomial matrix group"
        } else {
            "general matrix group"
        }
    );
    if loaded.primaries.is_empty() {
        println!("primaries: none");
        return Ok(());
    }
    let system = validate_primaries(&loaded.primaries, &loaded.group)?;
    println!(
        "primaries: {} invariants, degrees {:?} -- valid homogeneous system of parameters",
        system.polys().len(),
        system.degrees()
    );
    let profile = MolienProfile::compute(&loaded.group, system.degrees())?;
    println!(
        "expected secondary invariants: {} (max degree {})",
        profile.total, profile.max_degree
    );
    Ok(())
}

fn cmd_bench(example: usize, run: &RunArgs) -> Result<(), Error> {
    let inst = instance(example)?;
    if !inst.has_primaries() {
        return Err(Error::InvalidPrimaries(format!(
            "example {example} ships matrices only; its primary invariants were never \
             published, so no secondary run is possible"
        )));
    }
    if inst.stretch {
        eprintln!(
            "note: example {example} is a stretch instance; expect a long run"
        );
    }
    let input = InputArgs {
        file: None,
        example: Some(example),
    };
    let loaded = load(&input)?;
    require_primaries(&loaded)?;
    eprintln!(
        "example {}: {} (group order {})",
        inst.number,
        inst.description,
        loaded.group.order()
    );
    run_search(&input, run, false)?;
    let exp = inst.expected;
    let _ = writeln!(
        std::io::stderr(),
        "published counts: {} secondaries (max degree {}), {} irreducible (max degree {})",
        exp.secondaries,
        exp.max_secondary_degree,
        exp.irreducibles,
        exp.max_irreducible_degree
    );
    Ok(())
}

fn cmd_list() {
    for inst in instances() {
        let status = if !inst.has_primaries() {
            " [matrices only]"
        } else if inst.stretch {
            " [stretch]"
        } else {
            ""
        };
        println!(
            "{}. {} -- {} variables, {} secondaries expected{}",
            inst.number,
            inst.description,
            inst.nvars,
            inst.expected.secondaries,
            status
        );
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Molien { input, max_degree } => cmd_molien(input, *max_degree),
        Command::Secondary { input, run } => run_search(input, run, false),
        Command::Irred { input, run } => run_search(input, run, true),
        Command::Verify { input } => cmd_verify(input),
        Command::Bench { example, run } => cmd_bench(*example, run),
        Command::List => {
            cmd_list();
            Ok(())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(e),
    }
}
