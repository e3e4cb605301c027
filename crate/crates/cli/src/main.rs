mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use modo_core::parser::{parse_config, parse_element, parse_factor_file, ParseError, SessionConfig};
use modo_core::{fixtures, BivarPoly, CurvePoint, DiffField, GaussianRational, ModoError, Modo};

#[derive(Parser)]
#[command(name = "modo", version, about = "Spectral curves and Burchnall-Chaundy generators for matrix differential operators")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// File of `factor <poly>;` statements used instead of the built-in factorizer.
    #[arg(long, global = true, env = "MODO_FACTORIZATION")]
    factorization: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print [L, B].
    Commutator {
        config: PathBuf,
        #[arg(long, default_value = "L")]
        left: String,
        #[arg(long, default_value = "B")]
        right: String,
    },
    /// Spectral curve f(lambda, mu) = DRes(L - lambda, B - mu).
    Curve { config: PathBuf },
    /// Generator F of the Burchnall-Chaundy ideal.
    Bcgen { config: PathBuf },
    /// Common solutions of L - lambda and B - mu at a point.
    Kernel {
        config: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Run every check on the pair.
    Verify { config: PathBuf },
    /// Run a built-in example and compare with its expected values.
    Demo {
        #[arg(value_parser = ["akns", "ex71", "ex72"])]
        name: String,
    },
}

/// Failure with its exit status.
pub enum Failure {
    Usage(String),
    Parse(ParseError),
    Compute(ModoError),
    Verification,
}

impl From<ModoError> for Failure {
    fn from(e: ModoError) -> Self {
        match e {
            ModoError::Parse(p) => Failure::Parse(p),
            other => Failure::Compute(other),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e)
    }
}

fn load(path: &Path) -> Result<SessionConfig, Failure> {
    let src = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(parse_config(&src)?)
}

fn pair<'a>(cfg: &'a SessionConfig, left: &str, right: &str) -> Result<(&'a Modo, &'a Modo), Failure> {
    let l = cfg.operator(left).ok_or_else(|| Failure::Usage(format!("no operator named {left}")))?;
    let b = cfg.operator(right).ok_or_else(|| Failure::Usage(format!("no operator named {right}")))?;
    Ok((l, b))
}

fn user_factors(cli: &Cli, cfg: &SessionConfig) -> Result<Option<Vec<(BivarPoly, u32)>>, Failure> {
    if let Some(path) = &cli.factorization {
        let src = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        return Ok(Some(parse_factor_file(&src)?));
    }
    Ok((!cfg.factors.is_empty()).then(|| cfg.factors.clone()))
}

fn gaussian(s: &str, flag: &str) -> Result<GaussianRational, Failure> {
    let bare = DiffField::diffpoly(&[], Vec::new()).expect("no symbols");
    parse_element(s, &bare)
        .ok()
        .and_then(|a| a.as_constant())
        .ok_or_else(|| Failure::Usage(format!("--{flag} must be a Gaussian rational, got '{s}'")))
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let fmt = cli.format;
    match &cli.command {
        Command::Commutator { config, left, right } => {
            let cfg = load(config)?;
            let (l, b) = pair(&cfg, left, right)?;
            let c = l.commutator(b, &cfg.field)?;
            report::commutator(&c, &cfg.field, fmt);
            Ok(())
        }
        Command::Curve { config } => {
            let cfg = load(config)?;
            let (l, b) = pair(&cfg, "L", "B")?;
            let rep = modo_core::spectral_curve(l, b, &cfg.field)?;
            report::curve(&rep, &cfg.field, fmt);
            Ok(())
        }
        Command::Bcgen { config } => {
            let cfg = load(config)?;
            let (l, b) = pair(&cfg, "L", "B")?;
            let user = user_factors(cli, &cfg)?;
            let rep = modo_core::bc_generator(l, b, &cfg.field, user.as_deref())?;
            report::bc(&rep, &cfg.field, fmt);
            Ok(())
        }
        Command::Kernel { config, lambda, mu } => {
            let cfg = load(config)?;
            let (l, b) = pair(&cfg, "L", "B")?;
            let pt = CurvePoint::new(gaussian(lambda, "lambda")?, gaussian(mu, "mu")?);
            let kb = modo_core::kernel_at_point(l, b, &pt, &cfg.field)?;
            report::kernel(&pt, &kb, &cfg.field, fmt);
            Ok(())
        }
        Command::Verify { config } => {
            let cfg = load(config)?;
            let (l, b) = pair(&cfg, "L", "B")?;
            let user = user_factors(cli, &cfg)?;
            let checks = report::verify_checks(l, b, &cfg.field, user.as_deref());
            let ok = report::checks(&checks, fmt);
            if ok {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Demo { name } => {
            let cfg = fixtures::load(name).ok_or_else(|| Failure::Usage(format!("unknown demo {name}")))?;
            let golden = fixtures::golden(name).expect("every demo has golden values");
            let ok = report::demo(name, &cfg, &golden, fmt)?;
            if ok {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let code = match &f {
                Failure::Usage(_) | Failure::Parse(_) => 2,
                Failure::Compute(_) | Failure::Verification => 1,
            };
            report::failure(&f, cli.format);
            ExitCode::from(code)
        }
    }
}
