use std::fs::{self, File};
use std::io::{self, Write};
use std::path::Path;

use orbkin_core::angle::wrap180;
use orbkin_core::grid::GridSample;
use orbkin_core::kinematics::{delta_lambda_grid, latitude_grid};
use orbkin_core::model::{builtin, load_model, OrbModel};
use orbkin_core::sexa::format_sex;
use orbkin_core::tables::{error_surface, generate_zij};
use orbkin_core::time::{
    calendar_from_jd, days_to_years, epoch_jd_gmt, julian_day, DateTime, Instant, PERSIAN_YEAR_DAYS,
};
use orbkin_core::{Exec, PlanarGeometry};
use serde::Serialize;

use crate::args::{CompareArgs, ComputeArgs, OutputArgs, SeriesArgs, TablesArgs, WhenArgs};
use crate::engine::Engine;
use crate::error::DataError;
use crate::records::{read_reference, write_rows, CompareRecord, Format, GridRecord, ZijRecord};

/// Longitude at the epoch as reported by the treatise and by IMCCE.
pub const PAPER_EPOCH_LONGITUDE: f64 = 264.0 + 23.0 / 60.0;
pub const IMCCE_EPOCH_LONGITUDE: f64 = 264.0 + 21.0 / 60.0;

/// Reference rows farther than this from the epoch draw a warning.
pub const COMPARE_WARN_YEARS: f64 = 10.0;

pub fn resolve_model(spec: &str) -> Result<OrbModel, DataError> {
    if let Some(m) = builtin(spec) {
        return Ok(m);
    }
    let path = Path::new(spec);
    let text = fs::read_to_string(path).map_err(|source| DataError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(load_model(&text)?)
}

fn model_label(spec: &str) -> String {
    Path::new(spec)
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| spec.to_string())
}

pub fn resolve_instant(when: &WhenArgs) -> Result<Instant, DataError> {
    match (&when.date, when.t) {
        (Some(text), _) => {
            let dt = DateTime::parse_iso(text)?;
            Ok(Instant::from_jd(julian_day(&dt, when.calendar)?))
        }
        (None, t) => Ok(Instant::from_years(t.unwrap_or(0.0))),
    }
}

fn emit<T: Serialize>(output: &OutputArgs, rows: &[T]) -> Result<(), DataError> {
    let format = output.format.unwrap_or(Format::Csv);
    match &output.out {
        Some(path) => {
            let f = File::create(path).map_err(|source| DataError::Read {
                path: path.clone(),
                source,
            })?;
            write_rows(f, rows, format)
        }
        None => write_rows(io::stdout().lock(), rows, format),
    }
}

fn emit_grid(output: &OutputArgs, grid: Vec<GridSample>) -> Result<(), DataError> {
    let rows: Vec<GridRecord> = grid.into_iter().map(GridRecord::from).collect();
    emit(output, &rows)
}

fn sex(x: f64) -> String {
    format_sex(x, 2)
}

pub fn compute(args: &ComputeArgs) -> Result<(), DataError> {
    let engine = Engine::new(resolve_model(&args.model.model)?, args.method)?;
    let instant = resolve_instant(&args.when)?;
    let rec = engine.record(instant);

    // with --format and no --out, stdout carries the machine record only
    if args.output.out.is_none() && args.output.format.is_some() {
        return emit(&args.output, &[rec]);
    }

    let mut out = io::stdout().lock();
    let date = calendar_from_jd(rec.jd, args.when.calendar);
    writeln!(out, "model      {}", model_label(&args.model.model))?;
    writeln!(out, "method     {}", rec.method)?;
    writeln!(
        out,
        "instant    t = {} Persian years, JD {:.5} GMT, {} ({})",
        rec.t_years, rec.jd, date, args.when.calendar
    )?;
    writeln!(
        out,
        "longitude  {:>11.6}°  {}",
        rec.longitude_deg,
        sex(rec.longitude_deg)
    )?;
    writeln!(
        out,
        "latitude   {:>11.6}°  {}",
        rec.latitude_deg,
        sex(rec.latitude_deg)
    )?;
    writeln!(out, "radius     {:>11.6}", rec.radius)?;

    if rec.t_years.abs() < 1e-9 {
        let gap = |x: f64| wrap180(rec.longitude_deg - x) * 60.0;
        writeln!(out)?;
        writeln!(
            out,
            "epoch longitude      sexagesimal    degrees      computed − value"
        )?;
        writeln!(
            out,
            "  paper (treatise)   {:<13}  {:>10.6}°  {:+.2}′",
            "264;23",
            PAPER_EPOCH_LONGITUDE,
            gap(PAPER_EPOCH_LONGITUDE)
        )?;
        writeln!(
            out,
            "  IMCCE              {:<13}  {:>10.6}°  {:+.2}′",
            "264;21",
            IMCCE_EPOCH_LONGITUDE,
            gap(IMCCE_EPOCH_LONGITUDE)
        )?;
        writeln!(
            out,
            "  computed           {:<13}  {:>10.6}°  ({})",
            sex(rec.longitude_deg),
            rec.longitude_deg,
            rec.method
        )?;
        writeln!(
            out,
            "  note: the treatise's 264;23 neglects M and interpolates the second equation; \
             the exact planar and full 3D paths give about 264;4 at this instant."
        )?;
    }
    drop(out);

    if args.output.out.is_some() {
        emit(&args.output, &[rec])?;
    }
    Ok(())
}

pub fn series(args: &SeriesArgs, exec: Exec) -> Result<(), DataError> {
    let model = resolve_model(&args.model.model)?;
    if args.grid {
        let step = args.step.unwrap_or(5.0);
        let grid = latitude_grid(&model, step, exec)?;
        eprintln!(
            "max |latitude| = {:.6}° over the {step}° grid",
            orbkin_core::grid::max_abs(&grid)
        );
        return emit_grid(&args.output, grid);
    }

    let step_days = args.step.unwrap_or(1.0);
    if !(step_days.is_finite() && step_days > 0.0) {
        return Err(DataError::Invalid(format!(
            "step must be positive, got {step_days}"
        )));
    }
    if !(args.span.is_finite() && args.span > 0.0) {
        return Err(DataError::Invalid(format!(
            "span must be positive, got {}",
            args.span
        )));
    }
    let start = resolve_instant(&args.when)?;
    let n = (args.span * PERSIAN_YEAR_DAYS / step_days + 1e-9).floor() as usize + 1;
    let instants: Vec<Instant> = (0..n)
        .map(|k| Instant::from_years(start.t + days_to_years(k as f64 * step_days)))
        .collect();
    let engine = Engine::new(model, args.method)?;
    emit(&args.output, &engine.records(&instants, exec))
}

pub fn tables(args: &TablesArgs, exec: Exec) -> Result<(), DataError> {
    let model = resolve_model(&args.model.model)?;
    if args.delta_lambda {
        return emit_grid(&args.output, delta_lambda_grid(&model, args.step, exec)?);
    }
    let g = PlanarGeometry::from_model(&model)?;
    if args.error_surface {
        return emit_grid(&args.output, error_surface(&g, args.step, exec)?);
    }
    let rows: Vec<ZijRecord> = generate_zij(&g, args.step)?
        .into_iter()
        .map(ZijRecord::from)
        .collect();
    emit(&args.output, &rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Summary {
    pub rows: usize,
    pub max_dlon_arcmin: f64,
    pub mean_dlon_arcmin: f64,
    pub rms_dlon_arcmin: f64,
    pub max_dlat_arcmin: f64,
    pub mean_dlat_arcmin: f64,
    pub rms_dlat_arcmin: f64,
}

/// Max of |Δ|, mean of Δ (signed) and RMS, per coordinate.
pub fn summarize(rows: &[CompareRecord]) -> Summary {
    let n = rows.len() as f64;
    let stats = |f: &dyn Fn(&CompareRecord) -> f64| {
        let max = rows.iter().map(|r| f(r).abs()).fold(0.0, f64::max);
        let mean = rows.iter().map(f).sum::<f64>() / n;
        let rms = (rows.iter().map(|r| f(r).powi(2)).sum::<f64>() / n).sqrt();
        (max, mean, rms)
    };
    let (max_dlon_arcmin, mean_dlon_arcmin, rms_dlon_arcmin) = stats(&|r| r.dlon_arcmin);
    let (max_dlat_arcmin, mean_dlat_arcmin, rms_dlat_arcmin) = stats(&|r| r.dlat_arcmin);
    Summary {
        rows: rows.len(),
        max_dlon_arcmin,
        mean_dlon_arcmin,
        rms_dlon_arcmin,
        max_dlat_arcmin,
        mean_dlat_arcmin,
        rms_dlat_arcmin,
    }
}

pub fn compare(args: &CompareArgs, exec: Exec) -> Result<(), DataError> {
    let engine = Engine::new(resolve_model(&args.model.model)?, args.method)?;
    let file = File::open(&args.reference).map_err(|source| DataError::Read {
        path: args.reference.clone(),
        source,
    })?;
    let refs = read_reference(file)?;

    let epoch = epoch_jd_gmt();
    let far = refs
        .iter()
        .filter(|r| (r.jd - epoch).abs() > COMPARE_WARN_YEARS * PERSIAN_YEAR_DAYS)
        .count();
    if far > 0 {
        eprintln!("warning: {far} reference row(s) lie more than {COMPARE_WARN_YEARS} years from the epoch");
    }

    let rows: Vec<CompareRecord> = exec.map(&refs, |r| {
        let rec = engine.record(Instant::from_jd(r.jd));
        CompareRecord {
            jd: r.jd,
            t_years: rec.t_years,
            longitude_deg: rec.longitude_deg,
            latitude_deg: rec.latitude_deg,
            ref_longitude_deg: r.longitude_deg,
            ref_latitude_deg: r.latitude_deg,
            dlon_arcmin: wrap180(rec.longitude_deg - r.longitude_deg) * 60.0,
            dlat_arcmin: (rec.latitude_deg - r.latitude_deg) * 60.0,
        }
    });
    emit(&args.output, &rows)?;

    let s = summarize(&rows);
    let text = format!(
        "compared {} row(s), method {}\n  Δlongitude  max {:.3}′  mean {:+.3}′  rms {:.3}′\n  Δlatitude   max {:.3}′  mean {:+.3}′  rms {:.3}′",
        s.rows,
        engine.method(),
        s.max_dlon_arcmin,
        s.mean_dlon_arcmin,
        s.rms_dlon_arcmin,
        s.max_dlat_arcmin,
        s.mean_dlat_arcmin,
        s.rms_dlat_arcmin
    );
    // keep stdout clean when it carries the rows
    if args.output.out.is_some() {
        println!("{text}");
    } else {
        eprintln!("{text}");
    }
    Ok(())
}
