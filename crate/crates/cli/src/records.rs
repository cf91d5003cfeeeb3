//! CSV/JSON row types. Field names are the column headers.

use std::cmp::Ordering;
use std::fmt;
use std::io::{self, Read, Write};
use std::str::FromStr;

use orbkin_core::grid::GridSample;
use orbkin_core::sexa::format_sex;
use orbkin_core::tables::ZijRow;
use serde::{Deserialize, Serialize};

use crate::error::DataError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum Method {
    Full3d,
    PlanarExact,
    PlanarInterp,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Full3d => "full3d",
            Method::PlanarExact => "planar_exact",
            Method::PlanarInterp => "planar_interp",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "full3d" => Ok(Method::Full3d),
            "planar_exact" => Ok(Method::PlanarExact),
            "planar_interp" => Ok(Method::PlanarInterp),
            _ => Err(format!("unknown method `{s}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EphemerisRecord {
    pub jd: f64,
    pub t_years: f64,
    pub method: Method,
    pub longitude_deg: f64,
    pub latitude_deg: f64,
    pub radius: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReferenceRecord {
    pub jd: f64,
    pub longitude_deg: f64,
    pub latitude_deg: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridRecord {
    pub theta_c: f64,
    pub theta_p: f64,
    pub value: f64,
}

impl From<GridSample> for GridRecord {
    fn from(s: GridSample) -> Self {
        GridRecord {
            theta_c: s.theta_c,
            theta_p: s.theta_p,
            value: s.value,
        }
    }
}

/// One zij line, decimal and sexagesimal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZijRecord {
    pub theta: f64,
    pub e_c: f64,
    pub chi: f64,
    pub e0: f64,
    pub de: f64,
    pub theta_sex: String,
    pub e_c_sex: String,
    pub chi_sex: String,
    pub e0_sex: String,
    pub de_sex: String,
}

pub const ZIJ_SEX_PLACES: usize = 2;

impl From<ZijRow> for ZijRecord {
    fn from(r: ZijRow) -> Self {
        let sex = |x: f64| format_sex(x, ZIJ_SEX_PLACES);
        ZijRecord {
            theta: r.theta,
            e_c: r.e_c,
            chi: r.chi,
            e0: r.e0,
            de: r.de,
            theta_sex: sex(r.theta),
            e_c_sex: sex(r.e_c),
            chi_sex: sex(r.chi),
            e0_sex: sex(r.e0),
            de_sex: sex(r.de),
        }
    }
}

/// Per-row result of a comparison; deltas are computed − reference, in
/// arcminutes, longitude wrapped to (−180°, 180°].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CompareRecord {
    pub jd: f64,
    pub t_years: f64,
    pub longitude_deg: f64,
    pub latitude_deg: f64,
    pub ref_longitude_deg: f64,
    pub ref_latitude_deg: f64,
    pub dlon_arcmin: f64,
    pub dlat_arcmin: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

pub fn write_rows<T: Serialize>(
    out: impl Write,
    rows: &[T],
    format: Format,
) -> Result<(), DataError> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        Format::Json => {
            let mut out = io::BufWriter::new(out);
            serde_json::to_writer_pretty(&mut out, rows)?;
            writeln!(out)?;
            out.flush()?;
        }
    }
    Ok(())
}

pub fn read_csv<T: for<'de> Deserialize<'de>>(input: impl Read) -> Result<Vec<T>, DataError> {
    let mut r = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(input);
    r.deserialize()
        .map(|row| row.map_err(DataError::from))
        .collect()
}

/// Parses a reference file and checks that jd strictly increases.
pub fn read_reference(input: impl Read) -> Result<Vec<ReferenceRecord>, DataError> {
    let rows: Vec<ReferenceRecord> = read_csv(input)?;
    if rows.is_empty() {
        return Err(DataError::EmptyReference);
    }
    for (i, w) in rows.windows(2).enumerate() {
        if w[1].jd.partial_cmp(&w[0].jd) != Some(Ordering::Greater) {
            return Err(DataError::Unsorted {
                row: i + 2,
                jd: w[1].jd,
                prev: w[0].jd,
            });
        }
    }
    if let Some(bad) = rows
        .iter()
        .find(|r| !(r.jd.is_finite() && r.longitude_deg.is_finite() && r.latitude_deg.is_finite()))
    {
        return Err(DataError::Invalid(format!(
            "non-finite value in reference row at jd {}",
            bad.jd
        )));
    }
    Ok(rows)
}
