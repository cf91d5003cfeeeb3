use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use orbkin_core::time::Calendar;

use crate::records::{Format, Method};

#[derive(Debug, Parser)]
#[command(
    name = "orbkin",
    version,
    about = "Ephemerides, zij tables and figure grids for nested-orb planetary models"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Position at one instant.
    Compute(ComputeArgs),
    /// Time series of positions, or the (θc, θp) latitude grid with --grid.
    Series(SeriesArgs),
    /// Zij table of the equations, or one of the figure surfaces.
    Tables(TablesArgs),
    /// Compare against a reference ephemeris CSV.
    Compare(CompareArgs),
}

#[derive(Debug, Args)]
pub struct ModelArg {
    /// Built-in model name (venus_1, venus_2) or path to a model file.
    #[arg(long, default_value = "venus_1")]
    pub model: String,
}

#[derive(Debug, Args)]
pub struct WhenArgs {
    /// Persian years since the epoch.
    #[arg(
        long = "t",
        value_name = "YEARS",
        allow_negative_numbers = true,
        conflicts_with = "date"
    )]
    pub t: Option<f64>,
    /// Calendar date and time (GMT), e.g. 1331-12-24T09:43.
    #[arg(long, value_name = "ISO")]
    pub date: Option<String>,
    #[arg(long, default_value = "julian", value_parser = parse_calendar)]
    pub calendar: Calendar,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write records here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub model: ModelArg,
    #[command(flatten)]
    pub when: WhenArgs,
    #[arg(long, value_enum, default_value = "full3d")]
    pub method: Method,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[command(flatten)]
    pub model: ModelArg,
    /// Start instant; defaults to the epoch.
    #[command(flatten)]
    pub when: WhenArgs,
    #[arg(long, value_enum, default_value = "full3d")]
    pub method: Method,
    /// Span in Persian years.
    #[arg(long, default_value_t = 5.0)]
    pub span: f64,
    /// Step in days; in degrees with --grid.
    #[arg(long)]
    pub step: Option<f64>,
    /// Emit the full-3D latitude over the (θc, θp) grid instead.
    #[arg(long)]
    pub grid: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct TablesArgs {
    #[command(flatten)]
    pub model: ModelArg,
    /// Grid step in degrees; must divide 360.
    #[arg(long, default_value_t = 1.0)]
    pub step: f64,
    /// interp_e − e over the (θc, θp) grid.
    #[arg(long, conflicts_with = "delta_lambda")]
    pub error_surface: bool,
    /// Longitude error from neglecting M over the (θc, θp) grid.
    #[arg(long)]
    pub delta_lambda: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub model: ModelArg,
    /// Reference CSV with columns jd,longitude_deg,latitude_deg (GMT JD).
    #[arg(long, value_name = "PATH")]
    pub reference: PathBuf,
    #[arg(long, value_enum, default_value = "full3d")]
    pub method: Method,
    #[command(flatten)]
    pub output: OutputArgs,
}

fn parse_calendar(s: &str) -> Result<Calendar, String> {
    s.parse().map_err(|e| format!("{e}"))
}
