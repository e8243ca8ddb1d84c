//! Command-line front end. Every command is a pure function of its flags.

use clap::{Parser, Subcommand, ValueEnum};

use crate::bundles::{bundle_motive, bundle_motive_fixed_det, BundleSpec};
use crate::error::Result;
use crate::higgs::{higgs_motive, higgs_motive_mod_jac, HiggsSpec};
use crate::motive::MotiveClass;
use crate::pairs::{
    chamber_of, pair_motive_flip, pair_motive_geo, pair_motive_sym, ChamberSpec, Rational,
};
use crate::verify::Suite;

/// Exit code for a failed verification sweep.
pub const EXIT_VERIFY_FAILED: i32 = 1;
/// Exit code for invalid input or a violated hypothesis.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "motive-calc",
    version,
    about = "Exact motivic classes and Hodge diamonds of moduli spaces over a curve"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    ClassJson,
    Poincare,
    #[default]
    DiamondText,
    DiamondJson,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Method {
    #[default]
    Flip,
    Sym,
    Geo,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank-3 stable bundles of degree coprime to 3.
    Bundles {
        #[arg(long)]
        genus: u32,
        #[arg(long, allow_negative_numbers = true)]
        degree: i64,
        /// Fix the determinant (drop the Jacobian factor).
        #[arg(long)]
        fixed_det: bool,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Rank-2 pairs of degree e in a stability chamber.
    Pairs {
        #[arg(long)]
        genus: u32,
        #[arg(long = "e")]
        e: u32,
        #[arg(long)]
        chamber: u32,
        #[arg(long, value_enum, default_value_t)]
        method: Method,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Rank-3 Higgs bundles of degree coprime to 3.
    Higgs {
        #[arg(long)]
        genus: u32,
        #[arg(long, allow_negative_numbers = true)]
        degree: i64,
        /// Divide out one Jacobian factor.
        #[arg(long)]
        mod_jac: bool,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Chamber index of an exact stability parameter.
    Chamber {
        #[arg(long = "e")]
        e: u32,
        /// Rational `a/b` or integer.
        #[arg(long, allow_negative_numbers = true)]
        sigma: Rational,
    },
    /// Run verification sweeps.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(2..))]
        max_genus: u32,
    },
}

/// Rendered result of a command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: 0 }
    }
}

pub fn render(class: &MotiveClass, format: OutputFormat) -> String {
    let mut out = match format {
        OutputFormat::ClassJson => class.to_json(),
        OutputFormat::Poincare => class.poincare().display_in("t"),
        OutputFormat::DiamondText => return class.hodge_matrix().to_text(),
        OutputFormat::DiamondJson => class.hodge_matrix().to_json(class.genus()),
    };
    out.push('\n');
    out
}

/// Run a parsed command. Errors are input or hypothesis errors.
pub fn execute(command: &Command) -> Result<Output> {
    match *command {
        Command::Bundles {
            genus,
            degree,
            fixed_det,
            format,
        } => {
            let spec = BundleSpec::new(genus, degree)?;
            let class = if fixed_det {
                bundle_motive_fixed_det(&spec)
            } else {
                bundle_motive(&spec)
            };
            Ok(Output::ok(render(&class, format)))
        }
        Command::Pairs {
            genus,
            e,
            chamber,
            method,
            format,
        } => {
            let spec = ChamberSpec::new(genus, e, chamber)?;
            let class = match method {
                Method::Flip => pair_motive_flip(&spec),
                Method::Sym => pair_motive_sym(&spec)?,
                Method::Geo => pair_motive_geo(&spec)?,
            };
            Ok(Output::ok(render(&class, format)))
        }
        Command::Higgs {
            genus,
            degree,
            mod_jac,
            format,
        } => {
            let spec = HiggsSpec::new(genus, degree)?;
            let class = if mod_jac {
                higgs_motive_mod_jac(&spec)?
            } else {
                higgs_motive(&spec)?
            };
            Ok(Output::ok(render(&class, format)))
        }
        Command::Chamber { e, sigma } => Ok(Output::ok(format!("{}\n", chamber_of(sigma, e)?))),
        Command::Verify { suite, max_genus } => {
            let reports = suite.run(max_genus);
            let mut stdout = String::new();
            for r in &reports {
                stdout.push_str(&r.to_string());
                stdout.push('\n');
            }
            let code = if reports.iter().all(|r| r.passed()) {
                0
            } else {
                EXIT_VERIFY_FAILED
            };
            Ok(Output { stdout, code })
        }
    }
}

/// Parse `args` and run; returns the exit code. Output goes to stdout,
/// diagnostics to stderr.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            // help and version requests print to stdout and succeed
            let code = if err.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(out) => {
            print!("{}", out.stdout);
            out.code
        }
        Err(err) => {
            eprintln!("error: {err}");
            EXIT_USAGE
        }
    }
}
