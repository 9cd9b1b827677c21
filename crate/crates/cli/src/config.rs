use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qmatrix_core::reps::Family;
use qmatrix_core::AlgebraParams;

use crate::error::{CliError, CliResult};

#[derive(Debug, Parser)]
#[command(name = "qmatrix", version, about = "Exact computations in two-parameter quantum 2x2 matrix algebras at roots of unity")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// PI degree, center, module families and maximal-dimension criterion.
    Classify,
    /// PI degree by Smith normal form and in closed form.
    Pidegree,
    /// Central elements up to a degree cap.
    Center,
    /// Build or check one of the modules V1, V2, V3.
    Rep {
        #[arg(value_enum, default_value_t = RepAction::Verify)]
        action: RepAction,
    },
    /// Isomorphism of V(mu) and V(lambda).
    Iso,
    /// PI-degree cross-check over a parameter grid.
    Sweep,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Classify => "classify",
            Command::Pidegree => "pidegree",
            Command::Center => "center",
            Command::Rep { .. } => "rep",
            Command::Iso => "iso",
            Command::Sweep => "sweep",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RepAction {
    Build,
    Verify,
    Simple,
    Profile,
}

impl RepAction {
    pub fn name(self) -> &'static str {
        match self {
            RepAction::Build => "build",
            RepAction::Verify => "verify",
            RepAction::Simple => "simple",
            RepAction::Profile => "profile",
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// Flags shared by every subcommand. Anything left unset falls back to the config file.
#[derive(Debug, Clone, Default, Args)]
pub struct Flags {
    /// Order of alpha.
    #[arg(long, global = true)]
    pub m: Option<u32>,
    /// Order of beta.
    #[arg(long, global = true)]
    pub n: Option<u32>,
    /// alpha = zeta_m^k1, with gcd(k1, m) = 1.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub k1: Option<i64>,
    /// beta = zeta_n^k2, with gcd(k2, n) = 1.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub k2: Option<i64>,
    /// V1, V2 or V3.
    #[arg(long, global = true)]
    pub family: Option<String>,
    /// Comma-separated scalars: zeta(L)^e, cyc(L)[c0,c1,...] or rationals.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub mu: Option<String>,
    /// Second tuple for `iso`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    #[arg(long = "deg-cap", global = true)]
    pub deg_cap: Option<u32>,
    #[arg(long = "grid-max", global = true)]
    pub grid_max: Option<u32>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Key-value file with the same keys as the flags.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

/// Validated settings for one run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub m: Option<u32>,
    pub n: Option<u32>,
    pub k1: Option<i64>,
    pub k2: Option<i64>,
    pub family: Option<Family>,
    pub mu: Option<String>,
    pub lambda: Option<String>,
    pub deg_cap: u32,
    pub grid_max: u32,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub workers: Option<usize>,
}

pub const DEFAULT_DEG_CAP: u32 = 12;
pub const DEFAULT_GRID_MAX: u32 = 12;

fn parse_value<T: FromStr>(key: &str, v: &str) -> CliResult<T> {
    v.parse()
        .map_err(|_| CliError::Usage(format!("invalid value {v:?} for {key}")))
}

/// Read `key = value` lines; `#` starts a comment.
pub fn read_config_file(path: &Path) -> CliResult<Flags> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut f = Flags::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .or_else(|| line.split_once(':'))
            .ok_or_else(|| CliError::Usage(format!("{}:{}: expected key = value", path.display(), lineno + 1)))?;
        let (key, value) = (key.trim(), value.trim().trim_matches('"'));
        match key {
            "m" => f.m = Some(parse_value(key, value)?),
            "n" => f.n = Some(parse_value(key, value)?),
            "k1" => f.k1 = Some(parse_value(key, value)?),
            "k2" => f.k2 = Some(parse_value(key, value)?),
            "family" => f.family = Some(value.to_string()),
            "mu" => f.mu = Some(value.to_string()),
            "lambda" => f.lambda = Some(value.to_string()),
            "deg-cap" | "deg_cap" => f.deg_cap = Some(parse_value(key, value)?),
            "grid-max" | "grid_max" => f.grid_max = Some(parse_value(key, value)?),
            "format" => {
                f.format = Some(
                    Format::from_str(value, true)
                        .map_err(|_| CliError::Usage(format!("invalid format {value:?}")))?,
                )
            }
            "out" => f.out = Some(PathBuf::from(value)),
            "workers" => f.workers = Some(parse_value(key, value)?),
            other => {
                return Err(CliError::Usage(format!(
                    "{}:{}: unknown key {other:?}",
                    path.display(),
                    lineno + 1
                )))
            }
        }
    }
    Ok(f)
}

impl RunConfig {
    /// Merge flags over the config file (if any) and validate.
    pub fn resolve(flags: &Flags) -> CliResult<RunConfig> {
        let file = match &flags.config {
            Some(path) => read_config_file(path)?,
            None => Flags::default(),
        };
        let f = flags.clone();
        let family = match f.family.or(file.family) {
            Some(s) => Some(s.parse::<Family>()?),
            None => None,
        };
        let cfg = RunConfig {
            m: f.m.or(file.m),
            n: f.n.or(file.n),
            k1: f.k1.or(file.k1),
            k2: f.k2.or(file.k2),
            family,
            mu: f.mu.or(file.mu),
            lambda: f.lambda.or(file.lambda),
            deg_cap: f.deg_cap.or(file.deg_cap).unwrap_or(DEFAULT_DEG_CAP),
            grid_max: f.grid_max.or(file.grid_max).unwrap_or(DEFAULT_GRID_MAX),
            format: f.format.or(file.format).unwrap_or_default(),
            out: f.out.or(file.out),
            workers: f.workers.or(file.workers),
        };
        if cfg.grid_max < 2 {
            return Err(CliError::Usage("grid-max must be at least 2".into()));
        }
        if cfg.workers == Some(0) {
            return Err(CliError::Usage("workers must be positive".into()));
        }
        Ok(cfg)
    }

    /// The algebra named by `m, n, k1, k2`.
    pub fn params(&self) -> CliResult<AlgebraParams> {
        match (self.m, self.n, self.k1, self.k2) {
            (Some(m), Some(n), Some(k1), Some(k2)) => Ok(AlgebraParams::new(m, n, k1, k2)?),
            _ => Err(CliError::Usage("--m, --n, --k1 and --k2 are required".into())),
        }
    }

    pub fn family(&self) -> CliResult<Family> {
        self.family
            .ok_or_else(|| CliError::Usage("--family is required (V1, V2 or V3)".into()))
    }
}
