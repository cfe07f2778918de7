use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use tatebal::bicomplex::{Bicomplex, IteratedOrder};
use tatebal::complex::{Complex, Convention};
use tatebal::constructions::{hom_bicomplex, tensor_bicomplex};
use tatebal::tate::{TateKind, TateSetup};
use tatebal::verify::{run_suite, Fault, Suite};

use crate::format::{parse_bidegree, parse_module, parse_range, ComplexFile};
use crate::report::{Item, Report};
use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "tatebal", version, about = "Exact bicomplex homology and Tate balance over Z and Z/n")]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Homology of a complex read from a JSON file.
    Homology {
        file: PathBuf,
        /// Inclusive degree range, e.g. `-2..2`.
        #[arg(long, allow_hyphen_values = true)]
        degrees: String,
    },
    /// An invariant of the Hom or tensor bicomplex of two complexes.
    Bicomplex {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, value_enum)]
        kind: PairKind,
        /// Bidegree `i,j`.
        #[arg(long, allow_hyphen_values = true)]
        cell: String,
        #[arg(long, value_enum)]
        op: Op,
    },
    /// Tate cohomology or homology of two modules over Z/m, both ways.
    Tate {
        /// The modulus m of the ring Z/m.
        #[arg(long)]
        ring: u64,
        /// First module as a comma list of cyclic orders.
        #[arg(long)]
        module: String,
        /// Second module, same syntax.
        #[arg(long)]
        other: String,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, allow_hyphen_values = true, default_value = "-3..3")]
        range: String,
        /// Also report the bicomplex corners and the diagonal walk between them.
        #[arg(long)]
        both_ways: bool,
    },
    /// Run a seeded verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, env = "SEED", default_value_t = 1)]
        seed: u64,
        /// Number of random cases; defaults to the suite's standard size.
        #[arg(long, env = "CASES")]
        cases: Option<usize>,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PairKind {
    Hom,
    Tensor,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Ext,
    Tor,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Op {
    #[value(name = "H")]
    Core,
    #[value(name = "Hprime")]
    Rows,
    #[value(name = "Hsecond")]
    Columns,
    #[value(name = "E2-I")]
    IteratedFirst,
    #[value(name = "E2-II")]
    IteratedSecond,
    #[value(name = "core-eq")]
    CoreEquality,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Snf,
    Abgroup,
    Thm21,
    Prop31,
    Thm33,
    Balance,
}

impl SuiteArg {
    fn suite(self) -> Suite {
        match self {
            SuiteArg::Snf => Suite::Snf,
            SuiteArg::Abgroup => Suite::Groups,
            SuiteArg::Thm21 => Suite::Chase,
            SuiteArg::Prop31 => Suite::Witness,
            SuiteArg::Thm33 => Suite::Triple,
            SuiteArg::Balance => Suite::Balance,
        }
    }
}

fn value_name<T: ValueEnum>(v: T) -> String {
    v.to_possible_value().map(|p| p.get_name().to_string()).unwrap_or_default()
}

pub fn load_complex(path: &Path) -> Result<Complex, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    ComplexFile::from_json(&text)
        .and_then(|f| f.to_complex())
        .map_err(|e| match e {
            CliError::Format { location, message } => CliError::Format {
                location: format!("{}: {location}", path.display()),
                message,
            },
            CliError::Algebra(err) => CliError::Format {
                location: path.display().to_string(),
                message: err.to_string(),
            },
            other => other,
        })
}

/// Runs a parsed command line. `echo` is the command as typed.
pub fn execute(cli: &Cli, echo: &str) -> Result<Report, CliError> {
    let mut report = Report::new(echo);
    match &cli.command {
        Command::Homology { file, degrees } => {
            let c = load_complex(file)?;
            let (lo, hi) = parse_range(degrees)?;
            let mark = if c.convention() == Convention::Homological { "_" } else { "^" };
            for n in lo..=hi {
                let h = c.homology_type(n).map_err(|e| match e {
                    tatebal::Error::OutOfWindow { degree } => {
                        CliError::Usage(format!("degree {degree} lies outside the window stored in the file"))
                    }
                    other => other.into(),
                })?;
                report.push(Item::new(format!("H{mark}{n}"), vec![h.to_string()]));
            }
        }
        Command::Bicomplex { first, second, kind, cell, op } => {
            let (c, d) = (load_complex(first)?, load_complex(second)?);
            let (i, j) = parse_bidegree(cell)?;
            let x: Bicomplex = match kind {
                PairKind::Hom => hom_bicomplex(&c, &d)?,
                PairKind::Tensor => tensor_bicomplex(&c, &d)?,
            };
            let label = format!("({i},{j})");
            let name = value_name(*op);
            let item = match op {
                Op::Core => Item::new(label, vec![name, x.core_homology(i, j)?.group().group_type().to_string()]),
                Op::Rows => Item::new(label, vec![name, x.hprime(i, j)?.group().group_type().to_string()]),
                Op::Columns => Item::new(label, vec![name, x.hsecond(i, j)?.group().group_type().to_string()]),
                Op::IteratedFirst | Op::IteratedSecond => {
                    let order = if *op == Op::IteratedFirst {
                        IteratedOrder::FirstThenSecond
                    } else {
                        IteratedOrder::SecondThenFirst
                    };
                    Item::new(label, vec![name, x.iterated_homology(i, j, order)?.group_type().to_string()])
                }
                Op::CoreEquality => Item::new(label, vec![name]).with_pass(x.core_equality_check(i, j)?),
            };
            report.push(item);
        }
        Command::Tate { ring, module, other, kind, range, both_ways } => {
            let (left, right) = (parse_module(module, *ring)?, parse_module(other, *ring)?);
            let (lo, hi) = parse_range(range)?;
            let kind = match kind {
                KindArg::Ext => TateKind::Ext,
                KindArg::Tor => TateKind::Tor,
            };
            let balance = TateSetup::new(*ring, &left, &right)?.balance_report(kind, lo..=hi)?;
            report.notes.push(match kind {
                TateKind::Ext => "columns: Hom(P, N) | Hom(M, E) with P, E complete resolutions of M, N".into(),
                TateKind::Tor => "columns: P ⊗ N | M ⊗ Q with P, Q complete resolutions of M, N".into(),
            });
            if kind == TateKind::Tor {
                report.notes.push("rows are homological degrees n; cohomologically H^n = H_{-n}".into());
            }
            if *both_ways {
                report.notes.push("extra columns: bicomplex corners and the diagonal walk between them".into());
            }
            for row in balance.rows {
                let mut values = vec![row.first_route.to_string(), row.second_route.to_string()];
                if *both_ways {
                    values.push(row.first_corner.to_string());
                    values.push(row.second_corner.to_string());
                    values.push(if row.walk_ok { "walk ok" } else { "walk broken" }.into());
                }
                report.push(Item::new(format!("n={}", row.degree), values).with_pass(row.pass));
            }
        }
        Command::Verify { suite, seed, cases, inject_fault } => {
            let s = suite.suite();
            let cases = cases.unwrap_or_else(|| s.default_cases());
            let fault = if *inject_fault { Fault::CorruptDifferential } else { Fault::None };
            let r = run_suite(s, *seed, cases, fault);
            report.seed = Some(*seed);
            if *inject_fault {
                report.notes.push("fault injected: generated differentials are corrupted".into());
            }
            let mut item = Item::new(value_name(*suite), vec![
                format!("{} cases", r.cases),
                format!("{} checks", r.checks),
                format!("{} nonzero", r.nontrivial),
            ])
                .with_pass(r.passed());
            const SHOWN: usize = 20;
            item.notes = r.failures.iter().take(SHOWN).cloned().collect();
            if r.failures.len() > SHOWN {
                item.notes.push(format!("… {} more failures", r.failures.len() - SHOWN));
            }
            report.push(item);
        }
    }
    Ok(report)
}
