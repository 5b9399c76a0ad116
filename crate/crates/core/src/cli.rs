//! Command-line front end. `main.rs` only parses arguments and writes the
//! produced text; everything observable lives here so it can be tested.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::feng_rao::{self, OrderBoundTable};
use crate::semigroup::NumericalSemigroup;
use crate::suzuki::{self, SuzukiParams};
use crate::tables::{self, Format};

#[derive(Debug, Parser)]
#[command(
    name = "suzuki",
    version,
    about = "Weierstrass semigroups of the Suzuki curve and Feng-Rao code tables"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CommandKind,
}

#[derive(Debug, Clone, Subcommand)]
pub enum CommandKind {
    /// Print generators, genus, conductor, gaps and symmetry of H(P)
    Semigroup(CommonArgs),
    /// Check the counting, structure and minimality statements
    Verify(CommonArgs),
    /// Print rho, nu and the order bound for one ell, or the whole table
    Fengrao(CommonArgs),
    /// Print the rows where the non-rational point gives a larger order bound
    Table(CommonArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum PointKind {
    Rational,
    #[default]
    Generic,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Field size, 2*4^s (8, 32, 128, ...)
    #[arg(long, value_parser = parse_q)]
    pub q: SuzukiParams,
    #[arg(long, value_enum, default_value_t = PointKind::Generic)]
    pub point: PointKind,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub ell: Option<u64>,
    #[arg(long, value_parser = parse_format, default_value = "csv")]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Code length override for `table`
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub length: Option<u64>,
}

fn parse_q(s: &str) -> Result<SuzukiParams, String> {
    let q: u64 = s.parse().map_err(|e| format!("{e}"))?;
    SuzukiParams::from_q(q).map_err(|e| e.to_string())
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: tables::UnknownFormat| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Semigroup,
    Verify,
    Fengrao,
    Table,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliConfig {
    pub command: Command,
    pub params: SuzukiParams,
    pub point: PointKind,
    pub ell: Option<u64>,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub length_override: Option<u64>,
}

impl From<Cli> for CliConfig {
    fn from(cli: Cli) -> Self {
        let (command, a) = match cli.command {
            CommandKind::Semigroup(a) => (Command::Semigroup, a),
            CommandKind::Verify(a) => (Command::Verify, a),
            CommandKind::Fengrao(a) => (Command::Fengrao, a),
            CommandKind::Table(a) => (Command::Table, a),
        };
        CliConfig {
            command,
            params: a.q,
            point: a.point,
            ell: a.ell,
            format: a.format,
            output: a.output,
            length_override: a.length,
        }
    }
}

/// Text to emit plus the process exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub text: String,
}

fn semigroup_for(p: &SuzukiParams, point: PointKind) -> NumericalSemigroup {
    match point {
        PointKind::Rational => suzuki::rational_point_semigroup(p),
        PointKind::Generic => suzuki::nonrational_point_semigroup(p),
    }
}

fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn run(config: &CliConfig) -> Outcome {
    let p = &config.params;
    let mut text = String::new();
    let mut status = 0;
    match config.command {
        Command::Semigroup => {
            let s = semigroup_for(p, config.point);
            let point = match config.point {
                PointKind::Rational => "rational",
                PointKind::Generic => "generic",
            };
            writeln!(text, "q: {}", p.q()).unwrap();
            writeln!(text, "point: {point}").unwrap();
            writeln!(text, "generators: {}", join(s.generators())).unwrap();
            writeln!(text, "genus: {}", s.genus()).unwrap();
            writeln!(text, "conductor: {}", s.conductor()).unwrap();
            writeln!(text, "frobenius: {}", s.frobenius()).unwrap();
            writeln!(text, "gaps: {}", join(&s.gaps())).unwrap();
            writeln!(text, "symmetric: {}", s.is_symmetric().unwrap_or(false)).unwrap();
        }
        Command::Verify => {
            let report = suzuki::verify_structure(p);
            writeln!(text, "{report}").unwrap();
            if !report.all_passed() {
                status = 1;
            }
        }
        Command::Fengrao => {
            let s = semigroup_for(p, config.point);
            match config.ell {
                Some(ell) => {
                    writeln!(
                        text,
                        "ell={} rho_ell={} nu={} d_ord={}",
                        ell,
                        s.element_at_index(ell),
                        feng_rao::nu(&s, ell),
                        feng_rao::d_ord(&s, ell)
                    )
                    .unwrap();
                }
                None => {
                    let t = OrderBoundTable::build(&s).expect("Suzuki semigroups have gaps");
                    writeln!(text, "# horizon {}", t.horizon()).unwrap();
                    writeln!(text, "ell rho_ell nu d_ord").unwrap();
                    for ell in 1..=t.horizon() {
                        writeln!(
                            text,
                            "{} {} {} {}",
                            ell,
                            s.element_at_index(ell),
                            t.nu(ell).unwrap(),
                            t.d_ord(ell)
                        )
                        .unwrap();
                    }
                }
            }
        }
        Command::Table => {
            let cmp = match config.length_override {
                Some(n) => tables::compare_with_length(p, n),
                None => tables::compare(p),
            };
            text = tables::render(&cmp.records, config.format);
        }
    }
    Outcome { status, text }
}
