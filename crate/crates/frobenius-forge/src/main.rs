//! Thin command-line frontend over the library: parse a ring spec,
//! dispatch to the engines, print one deterministic report.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use frobenius_forge::commands::{self, Options};
use frobenius_forge::dynamics::parse_tolerance;
use frobenius_forge::error::{Error, Result};
use frobenius_forge::report::{digest_bytes, Format, Report};
use frobenius_forge::ringspec::{self, RingSpec};

#[derive(Parser)]
#[command(
    name = "frobenius-forge",
    about = "Exact Frobenius pushforward decompositions, multiplicity dynamics, and differential-operator diagnostics",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Ring specification file.
    #[arg(long)]
    spec: PathBuf,
    /// Pushforward exponent.
    #[arg(long, default_value_t = 1)]
    e: u32,
    /// Budget: closure rounds / enumeration cells (0 = defaults).
    #[arg(long, default_value_t = 0)]
    budget: u64,
    /// Largest q = p^e tried by the witness search (0 = p^4).
    #[arg(long = "q-max", default_value_t = 0)]
    q_max: u64,
    /// Output format.
    #[arg(long, default_value = "human", value_parser = ["human", "machine"])]
    format: String,
    /// Cache directory for closure results.
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Limit tolerance, as a decimal or a fraction.
    #[arg(long, default_value = "1e-9")]
    tolerance: String,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose the e-th pushforward into summand classes.
    Decompose(Common),
    /// Iterate one-step decompositions to a fixed point (FFRT detection).
    Closure(Common),
    /// The one-step multiplicity matrix with the rank column check.
    Ematrix(Common),
    /// Primitivity, Perron data, positivity certificate, block report.
    Certify(Common),
    /// Trace-form discriminant of a presented extension.
    Discriminant(Common),
    /// Order filtration of a truncated operator.
    Order {
        #[command(flatten)]
        common: Common,
        /// Operator file.
        #[arg(long)]
        operator: PathBuf,
    },
    /// Search for an operator sending the squared invariant monomial to 1.
    Witness {
        #[command(flatten)]
        common: Common,
        /// Exponent tuple of the invariant monomial c, e.g. "2 0".
        #[arg(long)]
        c: String,
    },
}

fn load_spec(common: &Common) -> Result<(RingSpec, String)> {
    let bytes = std::fs::read(&common.spec).map_err(|e| {
        Error::Input(format!(
            "cannot read spec file {}: {e}",
            common.spec.display()
        ))
    })?;
    let digest = digest_bytes(&bytes);
    let text = String::from_utf8(bytes)
        .map_err(|_| Error::Input("spec file is not valid UTF-8".into()))?;
    let spec = ringspec::parse_ring_spec(&text)?;
    Ok((spec, digest))
}

fn options_of(common: &Common) -> Result<Options> {
    Ok(Options {
        e: common.e,
        budget: common.budget,
        q_max: common.q_max,
        tolerance: parse_tolerance(&common.tolerance)?,
        cache_dir: common.cache.clone(),
    })
}

fn run(cli: Cli) -> Result<Report> {
    match &cli.command {
        Command::Decompose(common) => {
            let (spec, digest) = load_spec(common)?;
            commands::cmd_decompose(&spec, &digest, &options_of(common)?)
        }
        Command::Closure(common) => {
            let (spec, digest) = load_spec(common)?;
            commands::cmd_closure(&spec, &digest, &options_of(common)?)
        }
        Command::Ematrix(common) => {
            let (spec, digest) = load_spec(common)?;
            commands::cmd_ematrix(&spec, &digest, &options_of(common)?)
        }
        Command::Certify(common) => {
            let (spec, digest) = load_spec(common)?;
            commands::cmd_certify(&spec, &digest, &options_of(common)?)
        }
        Command::Discriminant(common) => {
            let (spec, digest) = load_spec(common)?;
            commands::cmd_discriminant(&spec, &digest)
        }
        Command::Order { common, operator } => {
            let (spec, spec_digest) = load_spec(common)?;
            let op_text = std::fs::read_to_string(operator).map_err(|e| {
                Error::Input(format!(
                    "cannot read operator file {}: {e}",
                    operator.display()
                ))
            })?;
            // the digest covers both inputs
            let digest = digest_bytes(format!("{spec_digest}\n{op_text}").as_bytes());
            let (vars, prime) = match &spec {
                RingSpec::Diagonal(d) => (d.weights.num_vars(), d.weights.prime()),
                RingSpec::Group(g) => (g.group.dim_w(), g.group.prime),
                RingSpec::Extension(_) => {
                    return Err(Error::Input(
                        "order needs a diagonal or group ring spec".into(),
                    ))
                }
            };
            let opspec = ringspec::parse_operator_spec(&op_text, vars, prime)?;
            commands::cmd_order(&spec, &opspec, &digest)
        }
        Command::Witness { common, c } => {
            let (spec, digest) = load_spec(common)?;
            let exps: Vec<u64> = c
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|_| Error::Input(format!("bad exponent '{t}' in --c")))
                })
                .collect::<Result<_>>()?;
            commands::cmd_witness(&spec, &digest, &exps, &options_of(common)?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match &cli.command {
        Command::Decompose(c)
        | Command::Closure(c)
        | Command::Ematrix(c)
        | Command::Certify(c)
        | Command::Discriminant(c)
        | Command::Order { common: c, .. }
        | Command::Witness { common: c, .. } => {
            if c.format == "machine" {
                Format::Machine
            } else {
                Format::Human
            }
        }
    };
    match run(cli) {
        Ok(report) => {
            let timestamp = std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0);
            print!("{}", report.render(format, timestamp));
            ExitCode::from(report.exit_code as u8)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
