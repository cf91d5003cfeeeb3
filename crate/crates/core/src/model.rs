//! Orb systems: anchor points on the apsidal line, ordered rotations with
//! linear angle expressions, and the linear motion laws of the parameters.
//!
//! Models are read from and written to a small line-oriented text format:
//!
//! ```text
//! model venus_1
//! param theta_a = 0;1 /year + 77;52,10
//! point P3 60;0
//! rot P4 k 2*theta_c
//! ```
//!
//! `rot` lines are listed outermost-first. The planet is the point named `P`.

use std::fmt;

use thiserror::Error;

use crate::angle::normalize_deg;
use crate::geom3::{Rotation, Vec3};
use crate::sexa::{parse_sex, SexError, SexNum};

/// Sexagesimal places used when writing constants back out.
const SAVE_PLACES: usize = 6;

pub const PLANET: &str = "P";

pub const VENUS_1_TEXT: &str = include_str!("../models/venus_1.orb");
pub const VENUS_2_TEXT: &str = include_str!("../models/venus_2.orb");

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: bad sexagesimal literal: {source}")]
    Sexagesimal { line: usize, source: SexError },
    #[error("line {line}: rotation references undeclared anchor `{name}`")]
    UnknownAnchor { line: usize, name: String },
    #[error("line {line}: unknown parameter `{name}`")]
    UnknownParam { line: usize, name: String },
    #[error("line {line}: parameter `{name}` is used but has no `param` law")]
    UndeclaredParam { line: usize, name: String },
    #[error("line {line}: unsupported expression `{text}`: {reason}")]
    UnsupportedExpr {
        line: usize,
        text: String,
        reason: String,
    },
    #[error("line {line}: `{name}` declared twice")]
    Duplicate { line: usize, name: String },
    #[error("model has no planet point `{PLANET}`")]
    MissingPlanet,
    #[error("missing `model <name>` header")]
    MissingHeader,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    ThetaA,
    ThetaC,
    ThetaP,
}

impl Param {
    pub const ALL: [Param; 3] = [Param::ThetaA, Param::ThetaC, Param::ThetaP];

    pub fn name(self) -> &'static str {
        match self {
            Param::ThetaA => "theta_a",
            Param::ThetaC => "theta_c",
            Param::ThetaP => "theta_p",
        }
    }

    pub fn from_name(name: &str) -> Option<Param> {
        Param::ALL.into_iter().find(|p| p.name() == name)
    }
}

/// `phase + rate × t`, degrees and degrees per Persian year.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MotionLaw {
    pub phase: f64,
    pub rate: f64,
}

impl MotionLaw {
    pub const ZERO: MotionLaw = MotionLaw {
        phase: 0.0,
        rate: 0.0,
    };

    pub fn new(phase: f64, rate: f64) -> Self {
        MotionLaw { phase, rate }
    }

    /// Value at `t` Persian years, in `[0, 360)`.
    pub fn at(&self, t: f64) -> f64 {
        normalize_deg(self.phase + self.rate * t)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ParamSet {
    pub theta_a: f64,
    pub theta_c: f64,
    pub theta_p: f64,
}

impl ParamSet {
    /// Normalizes each angle into `[0, 360)`.
    pub fn new(theta_a: f64, theta_c: f64, theta_p: f64) -> Self {
        ParamSet {
            theta_a: normalize_deg(theta_a),
            theta_c: normalize_deg(theta_c),
            theta_p: normalize_deg(theta_p),
        }
    }

    pub fn get(&self, p: Param) -> f64 {
        match p {
            Param::ThetaA => self.theta_a,
            Param::ThetaC => self.theta_c,
            Param::ThetaP => self.theta_p,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Laws {
    laws: Vec<(Param, MotionLaw)>,
}

impl Laws {
    pub fn new() -> Self {
        Laws::default()
    }

    pub fn with(mut self, p: Param, law: MotionLaw) -> Self {
        self.set(p, law);
        self
    }

    pub fn set(&mut self, p: Param, law: MotionLaw) {
        match self.laws.iter_mut().find(|(q, _)| *q == p) {
            Some(slot) => slot.1 = law,
            None => self.laws.push((p, law)),
        }
    }

    pub fn get(&self, p: Param) -> Option<&MotionLaw> {
        self.laws.iter().find(|(q, _)| *q == p).map(|(_, l)| l)
    }

    pub fn iter(&self) -> impl Iterator<Item = &(Param, MotionLaw)> {
        self.laws.iter()
    }
}

/// Parameters at `t` Persian years since the epoch. Undeclared parameters
/// stay at zero.
pub fn params_at(laws: &Laws, t: f64) -> ParamSet {
    let at = |p| laws.get(p).unwrap_or(&MotionLaw::ZERO).at(t);
    ParamSet {
        theta_a: at(Param::ThetaA),
        theta_c: at(Param::ThetaC),
        theta_p: at(Param::ThetaP),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    I,
    J,
    K,
}

impl Axis {
    pub fn vector(self) -> Vec3 {
        match self {
            Axis::I => Vec3::I,
            Axis::J => Vec3::J,
            Axis::K => Vec3::K,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Axis::I => "i",
            Axis::J => "j",
            Axis::K => "k",
        }
    }

    fn from_tag(tag: &str) -> Option<Axis> {
        match tag {
            "i" => Some(Axis::I),
            "j" => Some(Axis::J),
            "k" => Some(Axis::K),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Term {
    pub coef: i32,
    pub param: Param,
}

/// `Σ coef × param + constant`, with coefficients in {−1, 1, 2}.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct AngleExpr {
    pub terms: Vec<Term>,
    pub constant: f64,
}

impl AngleExpr {
    pub fn constant(deg: f64) -> Self {
        AngleExpr {
            terms: Vec::new(),
            constant: deg,
        }
    }

    pub fn param(p: Param) -> Self {
        AngleExpr::terms(&[(1, p)])
    }

    pub fn terms(terms: &[(i32, Param)]) -> Self {
        AngleExpr {
            terms: terms
                .iter()
                .map(|&(coef, param)| Term { coef, param })
                .collect(),
            constant: 0.0,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, params: &ParamSet) -> f64 {
        self.terms
            .iter()
            .map(|t| t.coef as f64 * params.get(t.param))
            .sum::<f64>()
            + self.constant
    }
}

impl fmt::Display for AngleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for t in &self.terms {
            let mag = t.coef.abs();
            match (first, t.coef < 0) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            if mag != 1 {
                write!(f, "{mag}*")?;
            }
            f.write_str(t.param.name())?;
            first = false;
        }
        let c = self.constant;
        if first {
            write!(f, "{}", sex_literal(c))?;
        } else if c != 0.0 {
            let sep = if c < 0.0 { " - " } else { " + " };
            write!(f, "{sep}{}", sex_literal(c.abs()))?;
        }
        Ok(())
    }
}

fn sex_literal(v: f64) -> SexNum {
    SexNum::from_degrees(v, SAVE_PLACES).trimmed(1)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Anchor {
    pub name: String,
    /// Signed offset from the center of the World along `j`.
    pub offset: f64,
}

impl Anchor {
    pub fn point(&self) -> Vec3 {
        Vec3::new(0.0, self.offset, 0.0)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RotSpec {
    pub anchor: String,
    pub axis: Axis,
    pub angle: AngleExpr,
}

impl RotSpec {
    pub fn new(anchor: &str, axis: Axis, angle: AngleExpr) -> Self {
        RotSpec {
            anchor: anchor.to_string(),
            axis,
            angle,
        }
    }

    /// Any rotation not about `k` tilts an orb out of its carrier's plane.
    pub fn is_tilt(&self) -> bool {
        self.axis != Axis::K
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrbModel {
    pub name: String,
    pub anchors: Vec<Anchor>,
    /// Outermost first.
    pub rotations: Vec<RotSpec>,
    pub laws: Laws,
}

impl OrbModel {
    pub fn anchor(&self, name: &str) -> Option<&Anchor> {
        self.anchors.iter().find(|a| a.name == name)
    }

    pub fn anchor_point(&self, name: &str) -> Option<Vec3> {
        self.anchor(name).map(Anchor::point)
    }

    /// Initial position of the planet.
    pub fn planet(&self) -> Vec3 {
        self.anchor_point(PLANET)
            .expect("validated models always declare the planet point")
    }

    pub fn params_at(&self, t: f64) -> ParamSet {
        params_at(&self.laws, t)
    }

    /// Concrete rotations for one parameter set, outermost first.
    pub fn rotations_at(&self, params: &ParamSet) -> Vec<Rotation> {
        self.rotations
            .iter()
            .map(|r| {
                let center = self
                    .anchor_point(&r.anchor)
                    .expect("validated models only reference declared anchors");
                Rotation::new(center, r.axis.vector(), r.angle.eval(params))
            })
            .collect()
    }

    /// Copy with every tilt rotation for which `keep` is false set to 0°.
    pub fn with_tilts(&self, mut keep: impl FnMut(usize, &RotSpec) -> bool) -> OrbModel {
        let mut m = self.clone();
        for (idx, r) in m.rotations.iter_mut().enumerate() {
            if r.is_tilt() && !keep(idx, r) {
                r.angle = AngleExpr::constant(0.0);
            }
        }
        m
    }

    pub fn tilts_zeroed(&self) -> OrbModel {
        self.with_tilts(|_, _| false)
    }

    /// Keeps only the outermost tilt, which is the inclined orb.
    pub fn incline_only(&self) -> OrbModel {
        let first = self.rotations.iter().position(RotSpec::is_tilt);
        self.with_tilts(|idx, _| Some(idx) == first)
    }

    /// Constant angle of the outermost tilt, 0 if there is none.
    pub fn incline_tilt(&self) -> f64 {
        self.rotations
            .iter()
            .find(|r| r.is_tilt())
            .map(|r| r.angle.constant)
            .unwrap_or(0.0)
    }
}

fn syntax(line: usize, message: impl Into<String>) -> ModelError {
    ModelError::Syntax {
        line,
        message: message.into(),
    }
}

fn sex_at(line: usize, text: &str) -> Result<f64, ModelError> {
    parse_sex(text)
        .map(|s| s.to_degrees())
        .map_err(|source| ModelError::Sexagesimal { line, source })
}

fn is_sex_start(s: &str) -> bool {
    s.bytes().next().is_some_and(|b| b.is_ascii_digit())
}

fn parse_expr(line: usize, text: &str, laws: &Laws) -> Result<AngleExpr, ModelError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let unsupported = |reason: &str| ModelError::UnsupportedExpr {
        line,
        text: text.trim().to_string(),
        reason: reason.to_string(),
    };
    if compact.is_empty() {
        return Err(unsupported("empty expression"));
    }

    // Split into signed pieces at each top-level '+' or '-'.
    let mut pieces: Vec<(i32, &str)> = Vec::new();
    let mut sign = 1;
    let mut start = 0;
    let bytes = compact.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if b == b'+' || b == b'-' {
            if i > start {
                pieces.push((sign, &compact[start..i]));
            } else if i != 0 {
                return Err(unsupported("dangling operator"));
            }
            sign = if b == b'-' { -1 } else { 1 };
            start = i + 1;
        }
    }
    if start >= compact.len() {
        return Err(unsupported("dangling operator"));
    }
    pieces.push((sign, &compact[start..]));

    let mut expr = AngleExpr::default();
    let mut saw_constant = false;
    for (sign, piece) in pieces {
        let (coef, name) = match piece.split_once('*') {
            Some((c, n)) => {
                let c: i32 = c
                    .parse()
                    .map_err(|_| unsupported("coefficient must be an integer"))?;
                (c, n)
            }
            None => (1, piece),
        };
        if is_sex_start(name) {
            if piece.contains('*') {
                return Err(unsupported("constants cannot carry a coefficient"));
            }
            if saw_constant {
                return Err(unsupported("more than one constant"));
            }
            saw_constant = true;
            expr.constant = sign as f64 * sex_at(line, name)?;
            continue;
        }
        let param = Param::from_name(name).ok_or_else(|| ModelError::UnknownParam {
            line,
            name: name.to_string(),
        })?;
        if laws.get(param).is_none() {
            return Err(ModelError::UndeclaredParam {
                line,
                name: name.to_string(),
            });
        }
        let coef = sign * coef;
        if ![-1, 1, 2].contains(&coef) {
            return Err(unsupported("coefficients are limited to -1, 1 and 2"));
        }
        if expr.terms.iter().any(|t| t.param == param) {
            return Err(unsupported("parameter repeated"));
        }
        expr.terms.push(Term { coef, param });
    }
    Ok(expr)
}

fn parse_law(line: usize, rhs: &str) -> Result<MotionLaw, ModelError> {
    let (rate, rest) = rhs
        .split_once("/year")
        .ok_or_else(|| syntax(line, "expected `RATE /year + PHASE`"))?;
    let rate = sex_at(line, rate.trim())?;
    let rest = rest.trim();
    let (sign, phase) = match rest.as_bytes().first() {
        Some(b'+') => (1.0, &rest[1..]),
        Some(b'-') => (-1.0, &rest[1..]),
        None => (1.0, "0"),
        _ => return Err(syntax(line, "expected `+ PHASE` after `/year`")),
    };
    Ok(MotionLaw::new(sign * sex_at(line, phase.trim())?, rate))
}

/// Parses the model text format.
pub fn load_model(text: &str) -> Result<OrbModel, ModelError> {
    let mut name = None;
    let mut anchors: Vec<Anchor> = Vec::new();
    let mut rotations = Vec::new();
    let mut laws = Laws::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (keyword, rest) = content
            .split_once(char::is_whitespace)
            .map(|(k, r)| (k, r.trim()))
            .unwrap_or((content, ""));
        match keyword {
            "model" => {
                if rest.is_empty() || rest.contains(char::is_whitespace) {
                    return Err(syntax(line, "expected `model <name>`"));
                }
                if name.is_some() {
                    return Err(ModelError::Duplicate {
                        line,
                        name: "model".into(),
                    });
                }
                name = Some(rest.to_string());
            }
            "param" => {
                let (lhs, rhs) = rest
                    .split_once('=')
                    .ok_or_else(|| syntax(line, "expected `param NAME = LAW`"))?;
                let pname = lhs.trim();
                let param = Param::from_name(pname).ok_or_else(|| ModelError::UnknownParam {
                    line,
                    name: pname.to_string(),
                })?;
                if laws.get(param).is_some() {
                    return Err(ModelError::Duplicate {
                        line,
                        name: pname.to_string(),
                    });
                }
                laws.set(param, parse_law(line, rhs.trim())?);
            }
            "point" => {
                let fields: Vec<&str> = rest.split_whitespace().collect();
                let [pname, offset] = fields[..] else {
                    return Err(syntax(line, "expected `point NAME OFFSET`"));
                };
                if anchors.iter().any(|a| a.name == pname) {
                    return Err(ModelError::Duplicate {
                        line,
                        name: pname.to_string(),
                    });
                }
                anchors.push(Anchor {
                    name: pname.to_string(),
                    offset: sex_at(line, offset)?,
                });
            }
            "rot" => {
                let mut fields = rest.splitn(3, char::is_whitespace);
                let (Some(anchor), Some(axis), Some(expr)) =
                    (fields.next(), fields.next(), fields.next())
                else {
                    return Err(syntax(line, "expected `rot ANCHOR AXIS EXPR`"));
                };
                if !anchors.iter().any(|a| a.name == anchor) {
                    return Err(ModelError::UnknownAnchor {
                        line,
                        name: anchor.to_string(),
                    });
                }
                let axis = Axis::from_tag(axis)
                    .ok_or_else(|| syntax(line, format!("axis must be i, j or k, got `{axis}`")))?;
                rotations.push(RotSpec {
                    anchor: anchor.to_string(),
                    axis,
                    angle: parse_expr(line, expr, &laws)?,
                });
            }
            other => return Err(syntax(line, format!("unknown directive `{other}`"))),
        }
    }

    let model = OrbModel {
        name: name.ok_or(ModelError::MissingHeader)?,
        anchors,
        rotations,
        laws,
    };
    if model.anchor(PLANET).is_none() {
        return Err(ModelError::MissingPlanet);
    }
    Ok(model)
}

/// Writes a model in the text format accepted by [`load_model`].
pub fn save_model(m: &OrbModel) -> String {
    let mut out = format!("model {}\n", m.name);
    for p in Param::ALL {
        if let Some(law) = m.laws.get(p) {
            let sep = if law.phase < 0.0 { '-' } else { '+' };
            out += &format!(
                "param {} = {} /year {sep} {}\n",
                p.name(),
                sex_literal(law.rate),
                sex_literal(law.phase.abs())
            );
        }
    }
    for a in &m.anchors {
        out += &format!("point {} {}\n", a.name, sex_literal(a.offset));
    }
    for r in &m.rotations {
        out += &format!("rot {} {} {}\n", r.anchor, r.axis.tag(), r.angle);
    }
    out
}

fn sx(text: &str) -> f64 {
    parse_sex(text).expect("built-in literal").to_degrees()
}

/// θc's law is the mean Sun's minus the apogee's: `359;45,40 − 0;1` per
/// year and `280;9,0 − 77;52,10` at the epoch.
fn venus_laws() -> Laws {
    Laws::new()
        .with(Param::ThetaA, MotionLaw::new(sx("77;52,10"), sx("0;1")))
        .with(
            Param::ThetaC,
            MotionLaw::new(sx("202;16,50"), sx("359;44,40")),
        )
        .with(
            Param::ThetaP,
            MotionLaw::new(sx("320;50,19"), sx("225;1,48,41")),
        )
}

/// Offsets are the running sums of OP3 = 60, P3P4 = 1;41, P4P5 = −0;26
/// and P5P = 43;33.
fn venus_anchors() -> Vec<Anchor> {
    [
        ("P1", "0;0"),
        ("P2", "0;0"),
        ("P3", "60;0"),
        ("P4", "61;41"),
        ("P5", "61;15"),
        (PLANET, "104;48"),
    ]
    .into_iter()
    .map(|(name, offset)| Anchor {
        name: name.to_string(),
        offset: sx(offset),
    })
    .collect()
}

/// First Venus model: the Almagest-style variant.
pub fn venus_1() -> OrbModel {
    use Param::*;
    let c = |s: &str| AngleExpr::constant(sx(s));
    OrbModel {
        name: "venus_1".into(),
        anchors: venus_anchors(),
        rotations: vec![
            RotSpec::new("P1", Axis::K, AngleExpr::param(ThetaA)),
            RotSpec::new("P2", Axis::I, c("0;10")),
            RotSpec::new("P2", Axis::K, AngleExpr::param(ThetaC)),
            RotSpec::new("P3", Axis::K, AngleExpr::terms(&[(-1, ThetaC)])),
            RotSpec::new("P4", Axis::I, c("-0;5")),
            RotSpec::new("P4", Axis::J, c("3;0")),
            RotSpec::new("P4", Axis::K, AngleExpr::terms(&[(2, ThetaC)])),
            RotSpec::new("P5", Axis::I, c("0;5")),
            RotSpec::new("P5", Axis::J, c("0;30")),
            RotSpec::new(
                "P5",
                Axis::K,
                AngleExpr::terms(&[(1, ThetaP), (-1, ThetaC)]),
            ),
        ],
        laws: venus_laws(),
    }
}

/// Second Venus model: rotator half tilted 3;30, no separate epicycle tilt.
pub fn venus_2() -> OrbModel {
    let mut m = venus_1();
    m.name = "venus_2".into();
    m.rotations
        .retain(|r| !(r.anchor == "P5" && r.axis == Axis::J));
    for r in &mut m.rotations {
        if r.anchor == "P4" && r.axis == Axis::J {
            r.angle = AngleExpr::constant(sx("3;30"));
        }
    }
    m
}

/// Looks up a built-in model by name.
pub fn builtin(name: &str) -> Option<OrbModel> {
    match name {
        "venus_1" => Some(venus_1()),
        "venus_2" => Some(venus_2()),
        _ => None,
    }
}

pub fn builtin_text(name: &str) -> Option<&'static str> {
    match name {
        "venus_1" => Some(VENUS_1_TEXT),
        "venus_2" => Some(VENUS_2_TEXT),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angle::wrap180;
    use proptest::prelude::*;

    fn dms(d: f64, m: f64, s: f64) -> f64 {
        d + m / 60.0 + s / 3600.0
    }

    #[test]
    fn params_at_epoch() {
        let p = params_at(&venus_1().laws, 0.0);
        assert!((p.theta_a - dms(77.0, 52.0, 10.0)).abs() < 1e-12);
        assert!((p.theta_c - dms(202.0, 16.0, 50.0)).abs() < 1e-12);
        assert!((p.theta_p - dms(320.0, 50.0, 19.0)).abs() < 1e-12);
    }

    #[test]
    fn params_after_one_year() {
        let p = params_at(&venus_1().laws, 1.0);
        // 320;50,19 + 225;1,48,41 = 545;52,7,41 -> 185;52,7,41
        let expected = 185.0 + 52.0 / 60.0 + 7.0 / 3600.0 + 41.0 / 216_000.0;
        assert!((p.theta_p - expected).abs() < 1e-12);
        assert!((p.theta_a - dms(77.0, 53.0, 10.0)).abs() < 1e-12);
    }

    #[test]
    fn negative_time_stays_normalized() {
        let p = params_at(&venus_1().laws, -3.7);
        for v in [p.theta_a, p.theta_c, p.theta_p] {
            assert!((0.0..360.0).contains(&v));
        }
    }

    #[test]
    fn center_law_is_sun_minus_apogee() {
        let laws = venus_1().laws;
        let c = laws.get(Param::ThetaC).unwrap();
        let a = laws.get(Param::ThetaA).unwrap();
        assert!((c.phase - (sx("280;9,0") - a.phase)).abs() < 1e-12);
        assert!((c.rate - (sx("359;45,40") - a.rate)).abs() < 1e-12);
    }

    #[test]
    fn anchors_are_cumulative_offsets() {
        let m = venus_1();
        let off = |n| m.anchor(n).unwrap().offset;
        assert_eq!(off("P1"), 0.0);
        assert_eq!(off("P2"), 0.0);
        assert!((off("P3") - 60.0).abs() < 1e-12);
        assert!((off("P4") - dms(61.0, 41.0, 0.0)).abs() < 1e-12);
        assert!((off("P5") - dms(61.0, 15.0, 0.0)).abs() < 1e-12);
        assert!((off("P") - dms(104.0, 48.0, 0.0)).abs() < 1e-12);
        let legs = [sx("60"), sx("1;41"), sx("-0;26"), sx("43;33")];
        let sums: Vec<f64> = legs
            .iter()
            .scan(0.0, |acc, l| {
                *acc += l;
                Some(*acc)
            })
            .collect();
        for (name, sum) in ["P3", "P4", "P5", "P"].iter().zip(sums) {
            assert!((off(name) - sum).abs() < 1e-12);
        }
    }

    #[test]
    fn venus_1_rotation_list_in_order() {
        let m = venus_1();
        let listed: Vec<String> = m
            .rotations
            .iter()
            .map(|r| format!("{} {} {}", r.anchor, r.axis.tag(), r.angle))
            .collect();
        assert_eq!(
            listed,
            [
                "P1 k theta_a",
                "P2 i 0;10",
                "P2 k theta_c",
                "P3 k -theta_c",
                "P4 i -0;5",
                "P4 j 3;0",
                "P4 k 2*theta_c",
                "P5 i 0;5",
                "P5 j 0;30",
                "P5 k theta_p - theta_c",
            ]
        );
    }

    #[test]
    fn builtin_files_match_constants() {
        assert_eq!(load_model(VENUS_1_TEXT).unwrap(), venus_1());
        assert_eq!(load_model(VENUS_2_TEXT).unwrap(), venus_2());
    }

    #[test]
    fn venus_2_tilts() {
        let m = load_model(VENUS_2_TEXT).unwrap();
        assert_eq!(m.rotations.len(), 9);
        let p4j = m
            .rotations
            .iter()
            .find(|r| r.anchor == "P4" && r.axis == Axis::J)
            .unwrap();
        assert!((p4j.angle.constant - 3.5).abs() < 1e-15);
        assert!(!m
            .rotations
            .iter()
            .any(|r| r.anchor == "P5" && r.axis == Axis::J));
        assert_eq!(m.incline_tilt(), 10.0 / 60.0);
    }

    #[test]
    fn venus_1_file_tilts() {
        let m = load_model(VENUS_1_TEXT).unwrap();
        assert_eq!(m.rotations.len(), 10);
        let tilt = |a: &str, ax| {
            m.rotations
                .iter()
                .find(|r| r.anchor == a && r.axis == ax)
                .unwrap()
                .angle
                .constant
        };
        assert_eq!(tilt("P2", Axis::I), 10.0 / 60.0);
        assert_eq!(tilt("P4", Axis::I), -5.0 / 60.0);
        assert_eq!(tilt("P4", Axis::J), 3.0);
        assert_eq!(tilt("P5", Axis::I), 5.0 / 60.0);
        assert_eq!(tilt("P5", Axis::J), 0.5);
    }

    #[test]
    fn save_round_trips() {
        for m in [venus_1(), venus_2()] {
            let text = save_model(&m);
            assert_eq!(load_model(&text).unwrap(), m);
        }
        assert_eq!(
            save_model(&venus_2())
                .lines()
                .filter(|l| l.starts_with("rot "))
                .count(),
            9
        );
    }

    #[test]
    fn zero_rotation_model_saves_header_and_points() {
        let m = OrbModel {
            name: "bare".into(),
            anchors: vec![Anchor {
                name: "P".into(),
                offset: 1.5,
            }],
            rotations: vec![],
            laws: Laws::new(),
        };
        let text = save_model(&m);
        assert_eq!(text, "model bare\npoint P 1;30\n");
        assert_eq!(load_model(&text).unwrap(), m);
    }

    #[test]
    fn undeclared_anchor_is_named() {
        let text = "model x\npoint P 1;0\nrot Q k 0;10\n";
        match load_model(text) {
            Err(ModelError::UnknownAnchor { line, name }) => {
                assert_eq!(line, 3);
                assert_eq!(name, "Q");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn load_errors_carry_line_numbers() {
        let bad_sex = "model x\npoint P 1;60\n";
        assert!(matches!(
            load_model(bad_sex),
            Err(ModelError::Sexagesimal { line: 2, .. })
        ));
        let bad_coef = "model x\nparam theta_c = 1;0 /year + 0;0\npoint P 1;0\nrot P k 3*theta_c\n";
        assert!(matches!(
            load_model(bad_coef),
            Err(ModelError::UnsupportedExpr { line: 4, .. })
        ));
        let bad_param = "model x\npoint P 1;0\nrot P k theta_z\n";
        assert!(matches!(
            load_model(bad_param),
            Err(ModelError::UnknownParam { line: 3, .. })
        ));
        let undeclared = "model x\npoint P 1;0\nrot P k theta_a\n";
        assert!(matches!(
            load_model(undeclared),
            Err(ModelError::UndeclaredParam { line: 3, .. })
        ));
        assert!(matches!(
            load_model("point P 1;0\n"),
            Err(ModelError::MissingHeader)
        ));
        assert!(matches!(
            load_model("model x\npoint Q 1;0\n"),
            Err(ModelError::MissingPlanet)
        ));
        assert!(matches!(
            load_model("model x\nfrobnicate\n"),
            Err(ModelError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            load_model("model x\npoint P 1;0\nrot P q 0;1\n"),
            Err(ModelError::Syntax { line: 3, .. })
        ));
        assert!(matches!(
            load_model("model x\npoint P 1;0\nrot P k 0;1 + 0;2\n"),
            Err(ModelError::UnsupportedExpr { line: 3, .. })
        ));
    }

    #[test]
    fn expressions_with_constants() {
        let text =
            "model x\nparam theta_a = 0;1 /year - 2;0\npoint P 1;0\nrot P k theta_a - 0;30\n";
        let m = load_model(text).unwrap();
        assert_eq!(m.laws.get(Param::ThetaA).unwrap().phase, -2.0);
        assert_eq!(m.rotations[0].angle.constant, -0.5);
        assert_eq!(load_model(&save_model(&m)).unwrap(), m);
    }

    #[test]
    fn zeroing_tilts() {
        let z = venus_1().tilts_zeroed();
        assert!(z
            .rotations
            .iter()
            .filter(|r| r.is_tilt())
            .all(|r| r.angle.constant == 0.0));
        let inc = venus_1().incline_only();
        let tilts: Vec<f64> = inc
            .rotations
            .iter()
            .filter(|r| r.is_tilt())
            .map(|r| r.angle.constant)
            .collect();
        assert_eq!(tilts, [10.0 / 60.0, 0.0, 0.0, 0.0, 0.0]);
    }

    proptest! {
        #[test]
        fn apogee_plus_center_tracks_mean_sun(t in -10.0f64..10.0) {
            let p = params_at(&venus_1().laws, t);
            let sun = MotionLaw::new(sx("280;9,0"), sx("359;45,40")).at(t);
            prop_assert!(wrap180(p.theta_a + p.theta_c - sun).abs() <= 1e-12);
        }
    }
}
