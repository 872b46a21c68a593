use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use idclass::report::{self, FactorizeReport, IdealsReport, SemigroupReport};
use idclass::{dot, verify, ClassMonoid, NumericalSemigroup, Order};

#[derive(Parser)]
#[command(
    name = "idclass",
    version,
    about = "Ideal class monoids of numerical semigroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum OrderArg {
    Inclusion,
    Preceq,
}

impl From<OrderArg> for Order {
    fn from(value: OrderArg) -> Order {
        match value {
            OrderArg::Inclusion => Order::Inclusion,
            OrderArg::Preceq => Order::Preceq,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classical invariants of the semigroup generated by a comma-separated list
    Analyze {
        /// Generators, e.g. 3,5,7
        generators: String,
    },
    /// Enumerate the ideal class monoid
    Ideals {
        /// Generators, e.g. 3,5,7
        generators: String,
        /// Include per-ideal classification flags
        #[arg(long)]
        classify: bool,
        /// Include the full addition table as an index matrix
        #[arg(long)]
        table: bool,
    },
    /// Export a Hasse diagram of the monoid as a DOT digraph
    Hasse {
        /// Generators, e.g. 4,6,9
        generators: String,
        /// Order the diagram by inclusion or by the algebraic preorder
        #[arg(long, value_enum, default_value_t = OrderArg::Inclusion)]
        order: OrderArg,
        /// Write the digraph to this path instead of standard output
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Re-check the structural facts over every semigroup up to a genus bound
    Verify {
        #[arg(long, default_value_t = 6)]
        max_genus: u64,
        /// Worker threads for distributing semigroups
        #[arg(long, env = "IDCLASS_JOBS", default_value_t = 1)]
        jobs: usize,
    },
    /// Minimal factorizations of one ideal into irreducible elements
    Factorize {
        /// Generators of the semigroup, e.g. 5,6,8,9
        generators: String,
        /// Generators of the ideal, e.g. 0,2,3,4 (normalized to minimum 0)
        #[arg(long)]
        ideal: String,
    },
}

fn parse_list(text: &str) -> Result<Vec<u64>, String> {
    let values: Result<Vec<u64>, _> = text
        .split(',')
        .map(|part| part.trim().parse::<u64>())
        .collect();
    match values {
        Ok(v) if !v.is_empty() => Ok(v),
        Ok(_) => Err("empty list".into()),
        Err(e) => Err(format!("cannot parse '{text}': {e}")),
    }
}

fn semigroup_from(text: &str) -> Result<NumericalSemigroup, String> {
    let gens = parse_list(text)?;
    if gens.contains(&0) {
        return Err("generators must be positive".into());
    }
    NumericalSemigroup::from_generators(&gens).map_err(|e| e.to_string())
}

const EXIT_VERIFY_FAILURES: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_IO: u8 = 3;

fn run() -> Result<(), (u8, String)> {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze { generators } => {
            let s = semigroup_from(&generators).map_err(|e| (EXIT_INPUT, e))?;
            print!("{}", report::to_json(&SemigroupReport::of(&s)));
            Ok(())
        }
        Command::Ideals {
            generators,
            classify,
            table,
        } => {
            let s = semigroup_from(&generators).map_err(|e| (EXIT_INPUT, e))?;
            let monoid = if classify || table {
                ClassMonoid::with_table(&s)
            } else {
                ClassMonoid::enumerate(&s)
            };
            let classifications = classify.then(|| monoid.classify().expect("table built"));
            let doc = IdealsReport::of(&monoid, classifications.as_deref(), table);
            print!("{}", report::to_json(&doc));
            Ok(())
        }
        Command::Hasse {
            generators,
            order,
            dot: path,
        } => {
            let s = semigroup_from(&generators).map_err(|e| (EXIT_INPUT, e))?;
            let order = Order::from(order);
            // the inclusion diagram needs no addition table
            let monoid = match order {
                Order::Preceq => ClassMonoid::with_table(&s),
                Order::Inclusion => ClassMonoid::enumerate(&s),
            };
            let classifications =
                (order == Order::Preceq).then(|| monoid.classify().expect("table built"));
            let text =
                dot::hasse_dot(&monoid, order, classifications.as_deref()).expect("table built");
            match path {
                Some(p) => std::fs::write(&p, text)
                    .map_err(|e| (EXIT_IO, format!("cannot write {}: {e}", p.display())))?,
                None => print!("{text}"),
            }
            Ok(())
        }
        Command::Verify { max_genus, jobs } => {
            let report = verify::run_verification(max_genus, jobs.max(1));
            print!("{}", report::to_json(&report));
            std::io::stdout().flush().ok();
            if report.passed {
                Ok(())
            } else {
                Err((
                    EXIT_VERIFY_FAILURES,
                    format!("{} checks failed", report.failure_count),
                ))
            }
        }
        Command::Factorize { generators, ideal } => {
            let s = semigroup_from(&generators).map_err(|e| (EXIT_INPUT, e))?;
            let gens = parse_list(&ideal).map_err(|e| (EXIT_INPUT, e))?;
            let monoid = ClassMonoid::with_table(&s);
            let target = monoid
                .index_of(&s.ideal(&gens))
                .expect("every normalized ideal is enumerated");
            let factorizations = monoid.minimal_factorizations(target).expect("table built");
            print!(
                "{}",
                report::to_json(&FactorizeReport::of(&monoid, &factorizations))
            );
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
