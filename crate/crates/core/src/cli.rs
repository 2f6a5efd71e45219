//! Command-line front end. Argument parsing lives here so that it can be
//! tested without spawning processes; the binary only maps the outcome to
//! an exit status.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::action::{verify_action, ActionError, SigmaParams};
use crate::frt::{verify_frt, FrtError, LambdaParams};
use crate::grassmann::{verify_flag_grassmann, GrassmannError};
use crate::irreps::{build_irrep, verify_representation, weyl_dimension, IrrepError};
use crate::literal::{parse_laurent, LiteralError};
use crate::ncalg::{AlgebraError, FlagAlgebra, Kind};
use crate::report::{Format, Report};
use crate::rmatrix::{verify_rmatrix_identities, RMatrixError};
use crate::serialize::{export_representation, SerializeError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid option: {0}")]
    Usage(String),
    #[error(transparent)]
    Literal(#[from] LiteralError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    RMatrix(#[from] RMatrixError),
    #[error(transparent)]
    Grassmann(#[from] GrassmannError),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Irrep(#[from] IrrepError),
    #[error(transparent)]
    Frt(#[from] FrtError),
    #[error(transparent)]
    Serialize(#[from] SerializeError),
}

impl CliError {
    /// Exit status: 2 for bad input, 3 for internal errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Literal(_) => 2,
            CliError::Irrep(IrrepError::NegativeSigma(_)) => 2,
            CliError::Frt(FrtError::NotDistinct(..) | FrtError::LambdaLength { .. }) => 2,
            CliError::Action(ActionError::SigmaLength { .. }) => 2,
            _ => 3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Structured,
}

impl From<ReportFormat> for Format {
    fn from(f: ReportFormat) -> Self {
        match f {
            ReportFormat::Text => Format::Text,
            ReportFormat::Structured => Format::Structured,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "qflag", version, about = "Exact checks for quantum flag manifolds of su(N)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// R-matrix identities: Yang-Baxter, Hecke, projectors, diagonal blocks.
    VerifyRmatrix {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
        /// Lift the default size bound N <= 4.
        #[arg(long)]
        allow_large: bool,
    },
    /// Flag and Grassmann coordinate identities after normal ordering.
    VerifyFlag {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
        #[arg(long)]
        allow_large: bool,
    },
    /// FRT-picture module: block identities, M . 1 and the reflection relation.
    VerifyFrt {
        #[arg(long)]
        n: usize,
        /// Comma-separated scalar literals lambda_1,...,lambda_N, e.g. "q^-2,1".
        #[arg(long, allow_hyphen_values = true, conflicts_with = "sigma")]
        lambda: Option<String>,
        /// Comma-separated integers; lambda is derived with lambda_N = 1.
        /// Defaults to all ones when neither option is given.
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<String>,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
        /// Lift the default bounds N <= 3 and degree <= 2.
        #[arg(long)]
        allow_large: bool,
    },
    /// Defining relations for the dressing action and the sigma-modules.
    VerifyAction {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        degree: usize,
        /// Check every sigma with |sigma_j| <= this bound.
        #[arg(long, default_value_t = 2)]
        sigma_bound: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
        #[arg(long)]
        allow_large: bool,
    },
    /// Extract the module generated by 1, verify it and optionally export it.
    Irrep {
        #[arg(long)]
        n: usize,
        /// Comma-separated non-negative integers sigma_1,...,sigma_{N-1}.
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
        /// Bound on the number of independent vectors (default: Weyl dimension + 2).
        #[arg(long)]
        cap: Option<usize>,
        /// Write the representation document to this path.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Sizes of the algebras and rewriting systems for rank N.
    Info {
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
}

/// What a run printed and whether every assertion passed.
#[derive(Debug)]
pub struct Outcome {
    pub success: bool,
    pub output: String,
}

impl Outcome {
    fn from_report(rep: &Report, format: ReportFormat) -> Self {
        Outcome {
            success: rep.all_passed(),
            output: rep.render(format.into()),
        }
    }
}

fn check_n(n: usize, max: usize, allow_large: bool) -> Result<(), CliError> {
    if n < 2 {
        return Err(CliError::Usage(format!("N must be at least 2, got {n}")));
    }
    if n > max && !allow_large {
        return Err(CliError::Usage(format!(
            "N={n} exceeds the default bound {max}; pass --allow-large to run anyway"
        )));
    }
    Ok(())
}

pub fn parse_sigma(s: &str) -> Result<Vec<i64>, CliError> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("sigma entries must be integers, got {x:?}")))
        })
        .collect()
}

pub fn parse_lambda(s: &str) -> Result<Vec<crate::scalar::Laurent>, CliError> {
    s.split(',').map(|x| Ok(parse_laurent(x)?)).collect()
}

pub fn run(cmd: &Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::VerifyRmatrix { n, format, allow_large } => {
            check_n(*n, 4, *allow_large)?;
            Ok(Outcome::from_report(&verify_rmatrix_identities(*n)?, *format))
        }
        Command::VerifyFlag { n, format, allow_large } => {
            check_n(*n, 4, *allow_large)?;
            Ok(Outcome::from_report(&verify_flag_grassmann(*n)?, *format))
        }
        Command::VerifyFrt { n, lambda, sigma, degree, format, allow_large } => {
            check_n(*n, 3, *allow_large)?;
            if *degree > 2 && !allow_large {
                return Err(CliError::Usage(format!(
                    "degree {degree} exceeds the default bound 2; pass --allow-large to run anyway"
                )));
            }
            let lam = match (lambda, sigma) {
                (Some(l), _) => LambdaParams::new(*n, parse_lambda(l)?)?,
                (None, Some(s)) => LambdaParams::from_sigma(*n, &parse_sigma(s)?)?,
                (None, None) => LambdaParams::from_sigma(*n, &vec![1; n - 1])?,
            };
            Ok(Outcome::from_report(&verify_frt(*n, &lam, *degree)?, *format))
        }
        Command::VerifyAction { n, degree, sigma_bound, format, allow_large } => {
            check_n(*n, 3, *allow_large)?;
            Ok(Outcome::from_report(&verify_action(*n, *degree, *sigma_bound)?, *format))
        }
        Command::Irrep { n, sigma, cap, out, format } => {
            check_n(*n, usize::MAX, true)?;
            let sp = SigmaParams::new(*n, parse_sigma(sigma)?)?;
            let rep = build_irrep(*n, &sp, *cap)?;
            let report = verify_representation(&rep)?;
            if let Some(path) = out {
                export_representation(&rep, path)?;
            }
            let mut outcome = Outcome::from_report(&report, *format);
            if *format == ReportFormat::Text {
                outcome.output.push_str(&format!("dimension {}\n", rep.dimension()));
                if let Some(path) = out {
                    outcome.output.push_str(&format!("wrote {}\n", path.display()));
                }
            }
            Ok(outcome)
        }
        Command::Info { n } => {
            check_n(*n, 6, false)?;
            let mut out = String::new();
            for kind in [Kind::Hol, Kind::Ahol] {
                let alg = FlagAlgebra::new(*n, kind)?;
                let rules = alg.rules();
                let inhomogeneous = rules.iter().filter(|r| r.rhs.terms().any(|(w, _)| w.len() != 2)).count();
                let counts: Vec<String> = (0..=3).map(|d| alg.monomials_of_degree(d).len().to_string()).collect();
                out.push_str(&format!(
                    "{kind:?}: {} generators, {} rewriting rules ({inhomogeneous} not length-preserving), ordered monomials of degree 0..3: {}\n",
                    alg.generators().len(),
                    rules.len(),
                    counts.join(", "),
                ));
            }
            let ones = vec![1u64; n - 1];
            out.push_str(&format!(
                "R-matrix size {0}x{0}; Chevalley generators: {1}; Weyl dimension at sigma=(1,...,1): {2}\n",
                n * n,
                4 * (n - 1),
                weyl_dimension(*n, &ones)?,
            ));
            Ok(Outcome { success: true, output: out })
        }
    }
}
