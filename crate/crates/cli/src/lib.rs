//! Command-line front end: argument parsing, dispatch and error mapping.

pub mod commands;
pub mod table;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use stringyk::cyclotomic::CycloError;
use stringyk::f2::F2Error;
use stringyk::group::GroupError;
use stringyk::sector::SectorError;
use stringyk::stringy::StringyError;
use stringyk::wproj::WprojError;

pub use table::{Format, TableDocument};

#[derive(Debug, Parser)]
#[command(name = "stringyk", version, about = "Twisted stringy K-theory of global quotients by finite abelian groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sq¹, integrality and (double) inverse transgressions of a class in F₂[x₁,…,x_k]
    Transgress(TransgressArgs),
    /// Sector-by-sector ranks of the twisted stringy K-theory
    Rank(RankArgs),
    /// The stringy product of two elements
    Star(StarArgs),
    /// Product rules, structure constants and presentation checks for ℂP[p:1:…:1]
    Wproj(WprojArgs),
}

#[derive(Debug, Args)]
pub struct TransgressArgs {
    /// Number of variables (the group is (Z/2)^k)
    #[arg(long)]
    pub k: usize,
    /// Class as a polynomial in x1..xk; `sq1(...)` is allowed
    #[arg(long)]
    pub poly: String,
    /// Apply Sq¹ to the given polynomial first
    #[arg(long)]
    pub sq1: bool,
    /// Group element g, e.g. 1,0,0
    #[arg(long)]
    pub g: Option<String>,
    /// Second group element h for the double transgression
    #[arg(long, requires = "g")]
    pub h: Option<String>,
    #[arg(long, value_enum, default_value = "markdown")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct RankArgs {
    /// `point`, `t6`, or a product such as `T2[x1] * T2[x1+x2] * 4*`
    #[arg(long)]
    pub space: String,
    /// Twisting class; `0` for the untwisted theory
    #[arg(long, default_value = "0")]
    pub class: String,
    /// Acting group, e.g. Z2^3 or Z4xZ2
    #[arg(long, default_value = "Z2^3")]
    pub group: String,
    /// Only report this sector
    #[arg(long)]
    pub sector: Option<String>,
    #[arg(long, value_enum, default_value = "markdown")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct StarArgs {
    /// Space for the global quotient product (ignored with --wproj)
    #[arg(long, default_value = "point")]
    pub space: String,
    #[arg(long, default_value = "0")]
    pub class: String,
    #[arg(long, default_value = "Z2^3")]
    pub group: String,
    /// Left factor: sector element JSON, or `unit`
    #[arg(long)]
    pub left: Option<String>,
    /// Right factor: sector element JSON, or `unit`
    #[arg(long)]
    pub right: Option<String>,
    /// Multiply in the stringy ring of ℂP[p:1:…:1] instead
    #[arg(long)]
    pub wproj: bool,
    #[arg(long, requires = "wproj")]
    pub p: Option<u32>,
    #[arg(long, requires = "wproj")]
    pub n: Option<u32>,
    /// Sector of the left factor
    #[arg(long, requires = "wproj", default_value = "0")]
    pub j: u32,
    /// Sector of the right factor
    #[arg(long, requires = "wproj", default_value = "0")]
    pub k: u32,
    #[arg(long, value_enum, default_value = "markdown")]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WprojTable {
    /// The product rule for every pair of sectors
    Cases,
    /// Rational structure constants on 1, (1-u), …, g1, …
    Constants,
    /// Products of all pairs of spanning elements
    Products,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WprojCheck {
    Presentations,
}

#[derive(Debug, Args)]
pub struct WprojArgs {
    #[arg(long)]
    pub p: u32,
    #[arg(long)]
    pub n: u32,
    #[arg(long, value_enum)]
    pub table: Option<WprojTable>,
    #[arg(long, value_enum)]
    pub check: Option<WprojCheck>,
    #[arg(long, value_enum, default_value = "markdown")]
    pub format: Format,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Domain(_) => 3,
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::Parse(_) => CliError::Parse(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<F2Error> for CliError {
    fn from(e: F2Error) -> Self {
        match e {
            F2Error::Parse(_) => CliError::Parse(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<CycloError> for CliError {
    fn from(e: CycloError) -> Self {
        match e {
            CycloError::Group(g) => g.into(),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<SectorError> for CliError {
    fn from(e: SectorError) -> Self {
        match e {
            SectorError::Group(g) => g.into(),
            SectorError::F2(f) => f.into(),
            SectorError::Cyclo(c) => c.into(),
            SectorError::Parse { .. } => CliError::Parse(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<StringyError> for CliError {
    fn from(e: StringyError) -> Self {
        match e {
            StringyError::Group(g) => g.into(),
            StringyError::Sector(s) => s.into(),
            StringyError::Cyclo(c) => c.into(),
            StringyError::Json(_) => CliError::Parse(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<WprojError> for CliError {
    fn from(e: WprojError) -> Self {
        match e {
            WprojError::Stringy(s) => s.into(),
            WprojError::Cyclo(c) => c.into(),
            WprojError::Parse(_) => CliError::Parse(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

/// Runs a parsed command and returns the rendered output.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let (docs, format) = match &cli.command {
        Command::Transgress(a) => (commands::transgress(a)?, a.format),
        Command::Rank(a) => (commands::rank(a)?, a.format),
        Command::Star(a) => (commands::star(a)?, a.format),
        Command::Wproj(a) => (commands::wproj(a)?, a.format),
    };
    Ok(table::render(&docs, format))
}
