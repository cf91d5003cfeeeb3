//! Timescales: Persian years, the equation of time, the epoch, and Julian
//! days.
//!
//! Model time `t` counts Persian years of exactly 365 mean solar days from
//! the epoch, noon of 24 December 1331 (Julian calendar) in Damascus mean
//! time. Calendar conversions use the proleptic Julian or Gregorian
//! calendar as requested; no ΔT or leap seconds are applied.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub const PERSIAN_YEAR_DAYS: f64 = 365.0;

/// Mean solar longitude at the reference equinox, −2°1′7″.
pub const LAMBDA_M_AT_EQUINOX: f64 = -(2.0 + 1.0 / 60.0 + 7.0 / 3600.0);

/// Longitude of Damascus east of Greenwich, 36°18′23″.
pub const DAMASCUS_LONGITUDE: f64 = 36.0 + 18.0 / 60.0 + 23.0 / 3600.0;

/// Equation of time at the spring equinox on the GMT convention, 8 min.
pub const GMT_EQUINOX_OFFSET_HOURS: f64 = 8.0 / 60.0;

/// Julian day of the epoch's nominal date, 1331-12-24 12:00 (Julian).
pub const EPOCH_JD: f64 = 2_207_563.0;

const DEG_PER_HOUR: f64 = 15.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TimeError {
    #[error("invalid date {0}")]
    InvalidDate(String),
    #[error("cannot parse date `{0}`; expected YYYY-MM-DD[THH:MM[:SS[.fff]]]")]
    Parse(String),
    #[error("unknown calendar `{0}`; expected julian or gregorian")]
    UnknownCalendar(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Calendar {
    Julian,
    Gregorian,
}

impl Calendar {
    pub fn name(self) -> &'static str {
        match self {
            Calendar::Julian => "julian",
            Calendar::Gregorian => "gregorian",
        }
    }

    pub fn is_leap(self, year: i64) -> bool {
        match self {
            Calendar::Julian => year.rem_euclid(4) == 0,
            Calendar::Gregorian => {
                year.rem_euclid(4) == 0 && (year.rem_euclid(100) != 0 || year.rem_euclid(400) == 0)
            }
        }
    }

    pub fn month_length(self, year: i64, month: u32) -> u32 {
        match month {
            1 | 3 | 5 | 7 | 8 | 10 | 12 => 31,
            4 | 6 | 9 | 11 => 30,
            2 if self.is_leap(year) => 29,
            2 => 28,
            _ => 0,
        }
    }
}

impl FromStr for Calendar {
    type Err = TimeError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "julian" => Ok(Calendar::Julian),
            "gregorian" => Ok(Calendar::Gregorian),
            _ => Err(TimeError::UnknownCalendar(s.to_string())),
        }
    }
}

impl fmt::Display for Calendar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DateTime {
    pub year: i64,
    pub month: u32,
    pub day: u32,
    pub hour: u32,
    pub minute: u32,
    pub second: f64,
}

impl DateTime {
    pub fn new(year: i64, month: u32, day: u32, hour: u32, minute: u32, second: f64) -> Self {
        DateTime {
            year,
            month,
            day,
            hour,
            minute,
            second,
        }
    }

    pub fn date(year: i64, month: u32, day: u32) -> Self {
        DateTime::new(year, month, day, 0, 0, 0.0)
    }

    pub fn validate(&self, cal: Calendar) -> Result<(), TimeError> {
        let ok = (1..=12).contains(&self.month)
            && self.day >= 1
            && self.day <= cal.month_length(self.year, self.month)
            && self.hour < 24
            && self.minute < 60
            && (0.0..60.0).contains(&self.second);
        if ok {
            Ok(())
        } else {
            Err(TimeError::InvalidDate(self.to_string()))
        }
    }

    fn day_fraction(&self) -> f64 {
        (self.hour as f64 + self.minute as f64 / 60.0 + self.second / 3600.0) / 24.0
    }

    /// Parses `YYYY-MM-DD`, optionally followed by `THH:MM`, `:SS` and a
    /// fractional second. A leading `-` gives astronomical negative years.
    pub fn parse_iso(text: &str) -> Result<Self, TimeError> {
        let err = || TimeError::Parse(text.to_string());
        let (date, time) = match text.split_once(['T', ' ']) {
            Some((d, t)) => (d, Some(t)),
            None => (text, None),
        };
        let (neg, date) = match date.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, date),
        };
        let mut parts = date.split('-');
        let (Some(y), Some(m), Some(d), None) =
            (parts.next(), parts.next(), parts.next(), parts.next())
        else {
            return Err(err());
        };
        let mut year: i64 = y.parse().map_err(|_| err())?;
        if neg {
            year = -year;
        }
        let month = m.parse().map_err(|_| err())?;
        let day = d.parse().map_err(|_| err())?;
        let (mut hour, mut minute, mut second) = (0, 0, 0.0);
        if let Some(t) = time {
            let t = t.strip_suffix('Z').unwrap_or(t);
            let fields: Vec<&str> = t.split(':').collect();
            if !(2..=3).contains(&fields.len()) {
                return Err(err());
            }
            hour = fields[0].parse().map_err(|_| err())?;
            minute = fields[1].parse().map_err(|_| err())?;
            if let Some(s) = fields.get(2) {
                second = s.parse().map_err(|_| err())?;
            }
        }
        Ok(DateTime::new(year, month, day, hour, minute, second))
    }
}

impl fmt::Display for DateTime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:04}-{:02}-{:02}T{:02}:{:02}:{:06.3}",
            self.year, self.month, self.day, self.hour, self.minute, self.second
        )
    }
}

/// Astronomical Julian Day (Meeus, ch. 7). Day fractions count from
/// midnight; JD integers fall at noon.
pub fn julian_day(dt: &DateTime, cal: Calendar) -> Result<f64, TimeError> {
    dt.validate(cal)?;
    let (mut y, mut m) = (dt.year, dt.month as i64);
    if m <= 2 {
        y -= 1;
        m += 12;
    }
    let b = match cal {
        Calendar::Julian => 0,
        Calendar::Gregorian => {
            let a = y.div_euclid(100);
            2 - a + a.div_euclid(4)
        }
    };
    let days =
        (365.25 * (y + 4716) as f64).floor() as i64 + (30.6001 * (m + 1) as f64).floor() as i64;
    Ok((days + dt.day as i64 + b) as f64 - 1524.5 + dt.day_fraction())
}

/// Inverse of [`julian_day`].
pub fn calendar_from_jd(jd: f64, cal: Calendar) -> DateTime {
    let shifted = jd + 0.5;
    let z = shifted.floor();
    let f = shifted - z;
    let z = z as i64;
    let a = match cal {
        Calendar::Julian => z,
        Calendar::Gregorian => {
            let alpha = ((z as f64 - 1_867_216.25) / 36_524.25).floor() as i64;
            z + 1 + alpha - alpha.div_euclid(4)
        }
    };
    let b = a + 1524;
    let c = ((b as f64 - 122.1) / 365.25).floor() as i64;
    let d = (365.25 * c as f64).floor() as i64;
    let e = ((b - d) as f64 / 30.6001).floor() as i64;
    let day = (b - d - (30.6001 * e as f64).floor() as i64) as u32;
    let month = if e < 14 { e - 1 } else { e - 13 } as u32;
    let year = if month > 2 { c - 4716 } else { c - 4715 };

    let mut secs = (f * 86_400.0 * 1000.0).round() / 1000.0;
    if secs >= 86_400.0 {
        // rounding pushed us to the next midnight
        return calendar_from_jd(z as f64 + 0.5, cal);
    }
    let hour = (secs / 3600.0).floor() as u32;
    secs -= hour as f64 * 3600.0;
    let minute = (secs / 60.0).floor() as u32;
    secs -= minute as f64 * 60.0;
    DateTime::new(year, month, day, hour, minute, secs)
}

pub fn days_to_years(days: f64) -> f64 {
    days / PERSIAN_YEAR_DAYS
}

pub fn years_to_days(t: f64) -> f64 {
    t * PERSIAN_YEAR_DAYS
}

/// Hours of the Damascus longitude, 36°18′23″ / 15°.
pub fn damascus_offset_hours() -> f64 {
    DAMASCUS_LONGITUDE / DEG_PER_HOUR
}

/// Local-noon epoch expressed in GMT: 12 h + 8 min − 36°18′23″/15°.
pub fn epoch_gmt() -> DateTime {
    epoch_gmt_with(DAMASCUS_LONGITUDE, GMT_EQUINOX_OFFSET_HOURS)
}

/// Local noon shifted by an equation-of-time offset and an observer
/// longitude east of Greenwich.
pub fn epoch_gmt_with(longitude_east: f64, eot_offset_hours: f64) -> DateTime {
    let hours = 12.0 + eot_offset_hours - longitude_east / DEG_PER_HOUR;
    let jd = EPOCH_JD - 0.5 + hours / 24.0;
    calendar_from_jd(jd, Calendar::Julian)
}

/// JD (GMT) of the epoch, about 1331-12-24 09:43.
pub fn epoch_jd_gmt() -> f64 {
    EPOCH_JD + (GMT_EQUINOX_OFFSET_HOURS - damascus_offset_hours()) / 24.0
}

/// A moment on the model's time axis.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Instant {
    /// Persian years since the epoch.
    pub t: f64,
}

impl Instant {
    pub fn from_years(t: f64) -> Self {
        Instant { t }
    }

    /// From a GMT Julian day.
    pub fn from_jd(jd: f64) -> Self {
        Instant {
            t: days_to_years(jd - epoch_jd_gmt()),
        }
    }

    pub fn jd(&self) -> f64 {
        epoch_jd_gmt() + years_to_days(self.t)
    }
}

/// Solar quantities feeding the equation of time, in degrees.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimescaleSample {
    /// mean longitude λm(t)
    pub lambda_m: f64,
    /// right ascension α(t)
    pub alpha: f64,
}

impl TimescaleSample {
    pub fn lambda_m_at_equinox(&self) -> f64 {
        LAMBDA_M_AT_EQUINOX
    }
}

/// `E = (−λm − 2°1′7″ + α) / 15°`, hours, French sign convention.
pub fn equation_of_time(sample: &TimescaleSample) -> f64 {
    (-sample.lambda_m + LAMBDA_M_AT_EQUINOX + sample.alpha) / DEG_PER_HOUR
}

/// `(civil_gap, mean_gap)`: sidereal minus civil time `α/15°`, and
/// sidereal minus mean time `(λm − λm(t₀))/15°`, both in hours.
pub fn sidereal_offsets(alpha: f64, lambda_m: f64) -> (f64, f64) {
    (
        alpha / DEG_PER_HOUR,
        (lambda_m - LAMBDA_M_AT_EQUINOX) / DEG_PER_HOUR,
    )
}
