//! Sexagesimal numbers in the `359;45,40` notation.
//!
//! The semicolon separates the integer part from the fraction, and commas
//! separate successive base-60 fraction digits, so `359;45,40` reads
//! `359 + 45/60 + 40/60²`. All downstream arithmetic happens on decimal
//! degrees; this type only exists at parse/format boundaries.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SexError {
    #[error("empty sexagesimal literal")]
    Empty,
    #[error("malformed sexagesimal literal {text:?}: unexpected character at byte {position}")]
    Malformed { text: String, position: usize },
    #[error("sexagesimal digit {digit} at byte {position} of {text:?} is not below 60")]
    DigitOutOfRange {
        text: String,
        position: usize,
        digit: u64,
    },
}

/// A signed sexagesimal number: `sign × (integer + Σ dᵢ/60ⁱ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SexNum {
    negative: bool,
    integer: u64,
    digits: Vec<u8>,
}

impl SexNum {
    /// Builds a number from parts. Panics if a fraction digit is 60 or more.
    pub fn new(negative: bool, integer: u64, digits: Vec<u8>) -> Self {
        assert!(
            digits.iter().all(|&d| d < 60),
            "fraction digit out of range"
        );
        let mut n = SexNum {
            negative,
            integer,
            digits,
        };
        n.normalize_sign();
        n
    }

    fn normalize_sign(&mut self) {
        if self.integer == 0 && self.digits.iter().all(|&d| d == 0) {
            self.negative = false;
        }
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn integer_part(&self) -> u64 {
        self.integer
    }

    pub fn fraction_digits(&self) -> &[u8] {
        &self.digits
    }

    /// Positional expansion as a float.
    pub fn to_degrees(&self) -> f64 {
        let mut value = self.integer as f64;
        let mut scale = 1.0;
        for &d in &self.digits {
            scale *= 60.0;
            value += d as f64 / scale;
        }
        if self.negative {
            -value
        } else {
            value
        }
    }

    /// Rounds `value` half-up (on its magnitude) to `places` fraction digits.
    pub fn from_degrees(value: f64, places: usize) -> Self {
        let negative = value < 0.0;
        let scale = 60f64.powi(places as i32);
        // floor(x + 0.5) is round-half-up for non-negative x.
        let mut units = (value.abs() * scale + 0.5).floor() as u128;
        let mut digits = vec![0u8; places];
        for slot in digits.iter_mut().rev() {
            *slot = (units % 60) as u8;
            units /= 60;
        }
        let mut n = SexNum {
            negative,
            integer: units as u64,
            digits,
        };
        n.normalize_sign();
        n
    }

    /// Drops trailing zero fraction digits, keeping at least `keep`.
    pub fn trimmed(mut self, keep: usize) -> Self {
        while self.digits.len() > keep && self.digits.last() == Some(&0) {
            self.digits.pop();
        }
        self
    }
}

impl fmt::Display for SexNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        write!(f, "{}", self.integer)?;
        for (i, d) in self.digits.iter().enumerate() {
            f.write_str(if i == 0 { ";" } else { "," })?;
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for SexNum {
    type Err = SexError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_sex(s)
    }
}

/// Parses `[-]INT(;INT(,INT)*)?`.
pub fn parse_sex(text: &str) -> Result<SexNum, SexError> {
    if text.is_empty() {
        return Err(SexError::Empty);
    }
    let bytes = text.as_bytes();
    let malformed = |position: usize| SexError::Malformed {
        text: text.to_string(),
        position,
    };

    let mut pos = 0;
    let negative = bytes[0] == b'-';
    if negative {
        pos = 1;
    }

    let read_int = |start: usize| -> Result<(u64, usize), SexError> {
        let mut end = start;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        if end == start {
            return Err(malformed(start));
        }
        let value = text[start..end]
            .parse::<u64>()
            .map_err(|_| malformed(start))?;
        Ok((value, end))
    };

    let (integer, end) = read_int(pos)?;
    pos = end;
    let mut digits = Vec::new();
    let mut sep = b';';
    while pos < bytes.len() {
        if bytes[pos] != sep {
            return Err(malformed(pos));
        }
        let start = pos + 1;
        let (digit, end) = read_int(start)?;
        if digit >= 60 {
            return Err(SexError::DigitOutOfRange {
                text: text.to_string(),
                position: start,
                digit,
            });
        }
        digits.push(digit as u8);
        pos = end;
        sep = b',';
    }
    Ok(SexNum::new(negative, integer, digits))
}

/// Value of a sexagesimal number in decimal degrees.
pub fn to_degrees(x: &SexNum) -> f64 {
    x.to_degrees()
}

/// Formats `x` with exactly `places` fraction digits, rounding half-up.
pub fn format_sex(x: f64, places: usize) -> String {
    SexNum::from_degrees(x, places).to_string()
}
