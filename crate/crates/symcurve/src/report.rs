//! Report rendering: a stable machine-readable JSON schema and a compact
//! human-readable text form.
//!
//! Every numeric value is serialized exactly — rationals as `p/q` strings,
//! field elements in the same syntax the expression grammar accepts — so a
//! consumer can round-trip results without precision loss.  Each exact
//! string is accompanied by a `*_float` companion for consumers that only
//! need double precision.

use serde::{Deserialize, Serialize};

use crate::central::{CentralRejection, CentralResult};
use crate::curve::{CurveClass, Parametrization};
use crate::detect::SymmetryReport;
use crate::field::FieldElement;
use crate::geom::{Line, Point};
use crate::mirror::{MirrorRejection, MirrorResult};
use crate::poly::RealPoly;

/// Machine-readable form of a [`SymmetryReport`].
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct ReportJson {
    /// One of `"proper"`, `"point"`, `"line"`, `"improper"`.
    pub class: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<DegreesJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub central: Option<CentralJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mirror: Option<MirrorJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_verified: Option<bool>,
    pub notes: Vec<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DegreesJson {
    pub r: usize,
    pub s: usize,
    pub n: usize,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct CentralJson {
    pub symmetric: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta_float: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center: Option<PointJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct MirrorJson {
    pub symmetric: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta_float: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub axis: Option<AxisJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct PointJson {
    pub x: String,
    pub y: String,
    pub x_float: f64,
    pub y_float: f64,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct AxisJson {
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "B")]
    pub b: String,
    #[serde(rename = "C")]
    pub c: String,
    #[serde(rename = "A_float")]
    pub a_float: f64,
    #[serde(rename = "B_float")]
    pub b_float: f64,
    #[serde(rename = "C_float")]
    pub c_float: f64,
}

fn point_json(p: &Point) -> PointJson {
    PointJson {
        x: p.x.to_string(),
        y: p.y.to_string(),
        x_float: p.x.to_f64(),
        y_float: p.y.to_f64(),
    }
}

fn axis_json(line: &Line) -> AxisJson {
    AxisJson {
        a: line.a().to_string(),
        b: line.b().to_string(),
        c: line.c().to_string(),
        a_float: line.a().to_f64(),
        b_float: line.b().to_f64(),
        c_float: line.c().to_f64(),
    }
}

/// Stable one-line description of a central rejection.
pub fn describe_central_rejection(rejection: &CentralRejection) -> String {
    match rejection {
        CentralRejection::EvenDegreeX => "deg x is even".to_string(),
        CentralRejection::EvenDegreeY => "deg y is even".to_string(),
        CentralRejection::BetaNotReal { candidate } => {
            format!("beta not real: the forced offset is {candidate}")
        }
        CentralRejection::SystemFails { index } => {
            format!("coefficient equation {index} fails")
        }
        CentralRejection::EvenCoefficientNonzero { index } => {
            format!("shortcut case: even-index coefficient {index} is nonzero")
        }
    }
}

/// Stable one-line description of a mirror rejection.
pub fn describe_mirror_rejection(rejection: &MirrorRejection) -> String {
    match rejection {
        MirrorRejection::ParityProhibition { r, s } => {
            format!("parity prohibition: coordinate degrees {r} and {s} are odd and distinct")
        }
        MirrorRejection::SystemFails { index } => {
            format!("coefficient equation {index} fails")
        }
        MirrorRejection::QstarNotReal => {
            "the reflected-endpoint displacement is not normal to the axis".to_string()
        }
        MirrorRejection::SpecialCaseCoefficient { index } => {
            format!("shortcut case: coefficient {index} is misaligned with the leading coefficient")
        }
    }
}

fn central_json(result: &CentralResult) -> CentralJson {
    CentralJson {
        symmetric: result.is_symmetric(),
        beta: result.beta().map(FieldElement::to_string),
        beta_float: result.beta().map(FieldElement::to_f64),
        center: result.center().map(point_json),
        reason: result.rejection().map(describe_central_rejection),
    }
}

fn mirror_json(result: &MirrorResult) -> MirrorJson {
    MirrorJson {
        symmetric: result.is_symmetric(),
        beta: result.beta().map(FieldElement::to_string),
        beta_float: result.beta().map(FieldElement::to_f64),
        axis: result.axis().map(axis_json),
        reason: result.rejection().map(describe_mirror_rejection),
    }
}

fn class_name(class: &CurveClass) -> &'static str {
    match class {
        CurveClass::Point(_) => "point",
        CurveClass::Line(_) => "line",
        CurveClass::Improper { .. } => "improper",
        CurveClass::Proper => "proper",
    }
}

/// Converts a report into its machine-readable form.
pub fn report_json(report: &SymmetryReport) -> ReportJson {
    ReportJson {
        class: class_name(&report.curve_class).to_string(),
        degrees: report.degrees.map(|(r, s, n)| DegreesJson { r, s, n }),
        central: report.central.as_ref().map(central_json),
        mirror: report.mirror.as_ref().map(mirror_json),
        oracle_verified: report.oracle_verified,
        notes: report.notes.clone(),
    }
}

/// The line `A*x + B*y + C = 0` as a display equation.
pub fn line_equation(line: &Line) -> String {
    format!(
        "({})*x + ({})*y + ({}) = 0",
        line.a(),
        line.b(),
        line.c()
    )
}

/// Renders a report as human-readable text, one fact per line.
pub fn render_text(report: &SymmetryReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("class: {}\n", class_name(&report.curve_class)));
    if let Some((r, s, n)) = report.degrees {
        out.push_str(&format!("degrees: x {r}, y {s}, curve {n}\n"));
    }
    if let Some(central) = &report.central {
        match central {
            CentralResult::Symmetric { center, beta } => {
                out.push_str(&format!("central: yes (beta = {beta})\n"));
                out.push_str(&format!("  center: ({}, {})\n", center.x, center.y));
            }
            CentralResult::NotSymmetric { reason, beta } => {
                out.push_str(&format!(
                    "central: no ({})\n",
                    describe_central_rejection(reason)
                ));
                if let Some(beta) = beta {
                    out.push_str(&format!("  forced beta: {beta}\n"));
                }
            }
        }
    }
    if let Some(mirror) = &report.mirror {
        match mirror {
            MirrorResult::Symmetric { axis, beta } => {
                out.push_str(&format!("mirror: yes (beta = {beta})\n"));
                out.push_str(&format!("  axis: {}\n", line_equation(axis)));
            }
            MirrorResult::NotSymmetric { reason, beta } => {
                out.push_str(&format!(
                    "mirror: no ({})\n",
                    describe_mirror_rejection(reason)
                ));
                if let Some(beta) = beta {
                    out.push_str(&format!("  forced beta: {beta}\n"));
                }
            }
        }
    }
    if let Some(verified) = report.oracle_verified {
        out.push_str(&format!(
            "oracle: {}\n",
            if verified { "verified" } else { "FAILED" }
        ));
    }
    if !report.notes.is_empty() {
        out.push_str("notes:\n");
        for note in &report.notes {
            out.push_str(&format!("  - {note}\n"));
        }
    }
    out
}

fn render_poly(p: &RealPoly) -> String {
    let Some(degree) = p.degree() else {
        return "0".to_string();
    };
    let mut terms = Vec::new();
    for k in (0..=degree).rev() {
        let c = p.coeff(k);
        if c.is_zero() {
            continue;
        }
        let term = match k {
            0 => format!("({c})"),
            1 => format!("({c})*t"),
            _ => format!("({c})*t^{k}"),
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

/// Canonical expanded text form of a parametrization.  The output parses
/// back (under the expression grammar) to an identical [`Parametrization`].
pub fn canonical_curve_text(curve: &Parametrization) -> String {
    format!(
        "x(t) = {}\ny(t) = {}\n",
        render_poly(&curve.x),
        render_poly(&curve.y)
    )
}
