//! The end-to-end symmetry decision pipeline.
//!
//! [`detect_all`] classifies the input, runs both detectors on proper
//! curves, and then re-derives every positive verdict through an
//! independent polynomial-identity oracle before reporting it:
//!
//! * central: `z(-t + beta) + z(t)` must be the constant `2*z0`;
//! * mirror: `conj(z(t) - z0)` must equal `(z(-t + beta) - z0) * u`
//!   with the unit `u = conj(c_n) / ((-1)^n * c_n)` and `z0` any point
//!   on the axis.
//!
//! The oracles substitute into the parametrization directly (via Horner
//! composition), so they share no code path with the coefficient
//! systems that produced the verdicts.  An oracle mismatch, or a curve
//! reported as having both symmetry types, is an internal error: the
//! engine refuses to emit output it cannot vouch for.

use thiserror::Error;

use num_bigint::BigInt;

use crate::central::{self, CentralResult};
use crate::complex::ComplexElement;
use crate::curve::{ComplexCurve, CurveClass, Parametrization};
use crate::field::{FieldElement, Rational};
use crate::geom::{Line, Point};
use crate::mirror::{self, MirrorInternalError, MirrorResult};
use crate::poly::ComplexPoly;

/// A guaranteed invariant failed; the run aborts instead of emitting a
/// result the engine cannot vouch for.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum InternalError {
    #[error(transparent)]
    Mirror(#[from] MirrorInternalError),
    #[error("independent oracle rejected a positive verdict: {details}")]
    OracleMismatch { details: String },
    #[error("both symmetry types reported for one proper curve: {details}")]
    ExclusionViolated { details: String },
}

/// Everything the engine can say about one parametrized curve.
#[derive(Clone, PartialEq, Debug)]
pub struct SymmetryReport {
    /// Image classification; detectors run only on [`CurveClass::Proper`].
    pub curve_class: CurveClass,
    /// `(deg x, deg y, deg z)` for proper curves.
    pub degrees: Option<(usize, usize, usize)>,
    pub central: Option<CentralResult>,
    pub mirror: Option<MirrorResult>,
    /// `Some(true)` when at least one positive verdict was re-derived by
    /// its oracle; `None` when there was nothing to verify.
    pub oracle_verified: Option<bool>,
    pub notes: Vec<String>,
}

/// Independent recheck of a central verdict: `z(-t + beta) + z(t)` must
/// collapse to the constant `2*z0`.
pub fn oracle_check_central(curve: &ComplexCurve, beta: &FieldElement, center: &Point) -> bool {
    let minus_one = ComplexElement::from_int(-1);
    let beta_c = ComplexElement::from_real(beta.clone());
    let reflected = curve.z().compose_linear(&minus_one, &beta_c);
    let sum = reflected.add(curve.z());
    let z0 = ComplexElement::new(center.x.clone(), center.y.clone());
    let expected = ComplexPoly::constant(z0.scale_rational(&Rational::from_integer(BigInt::from(2))));
    sum == expected
}

/// Independent recheck of a mirror verdict: `conj(z(t) - z0)` must equal
/// `(z(-t + beta) - z0) * u` for `u = conj(c_n) / ((-1)^n * c_n)` and
/// `z0` a point on the axis.
pub fn oracle_check_mirror(curve: &ComplexCurve, beta: &FieldElement, axis: &Line) -> bool {
    let n = curve.degree();
    let c_n = curve.leading().clone();
    let denom = if n % 2 == 1 { -c_n.clone() } else { c_n.clone() };
    let u = c_n
        .conj()
        .div(&denom)
        .expect("leading coefficient of a proper curve is nonzero");
    let p = axis.some_point();
    let z0 = ComplexPoly::constant(ComplexElement::new(p.x, p.y));
    let lhs = curve.z().sub(&z0).conjugate();
    let minus_one = ComplexElement::from_int(-1);
    let beta_c = ComplexElement::from_real(beta.clone());
    let rhs = curve
        .z()
        .compose_linear(&minus_one, &beta_c)
        .sub(&z0)
        .scale(&u);
    lhs == rhs
}

fn degenerate_note(class: &CurveClass) -> String {
    match class {
        CurveClass::Point(p) => format!(
            "degenerate input: every parameter value maps to the single point {}",
            p
        ),
        CurveClass::Line(line) => format!(
            "degenerate input: the image lies on the line {}; every line is trivially symmetric",
            line
        ),
        CurveClass::Improper { gcd_degree } => format!(
            "improper parametrization: the curve is traced {} times; symmetry analysis \
             requires a proper parametrization",
            gcd_degree
        ),
        CurveClass::Proper => unreachable!("proper curves are not degenerate"),
    }
}

/// Classifies the input and, for proper curves, decides both symmetry
/// types, re-verifying every positive verdict through the oracles.
pub fn detect_all(param: &Parametrization) -> Result<SymmetryReport, InternalError> {
    let curve = match param.to_complex() {
        Err(err) => {
            let notes = vec![degenerate_note(&err.class)];
            return Ok(SymmetryReport {
                curve_class: err.class,
                degrees: None,
                central: None,
                mirror: None,
                oracle_verified: None,
                notes,
            });
        }
        Ok(curve) => curve,
    };
    let degrees = (
        curve.parametrization().deg_x(),
        curve.parametrization().deg_y(),
        curve.degree(),
    );
    let central = central::detect_central(&curve);
    let mirror = mirror::detect_mirror(&curve)?;
    if central.is_symmetric() && mirror.is_symmetric() {
        return Err(InternalError::ExclusionViolated {
            details: format!("z = {}", curve.z()),
        });
    }
    let mut oracle_verified = None;
    if let CentralResult::Symmetric { center, beta } = &central {
        if !oracle_check_central(&curve, beta, center) {
            return Err(InternalError::OracleMismatch {
                details: format!(
                    "central verdict with center {} and offset {} for z = {}",
                    center,
                    beta,
                    curve.z()
                ),
            });
        }
        oracle_verified = Some(true);
    }
    if let MirrorResult::Symmetric { axis, beta } = &mirror {
        if !oracle_check_mirror(&curve, beta, axis) {
            return Err(InternalError::OracleMismatch {
                details: format!(
                    "mirror verdict with axis {} and offset {} for z = {}",
                    axis,
                    beta,
                    curve.z()
                ),
            });
        }
        oracle_verified = Some(true);
    }
    let mut notes = Vec::new();
    if central.is_symmetric() {
        notes.push(
            "a polynomial curve admits no rotation symmetry of order greater than two, \
             so the detected point symmetry is its full rotation group"
                .to_string(),
        );
    }
    Ok(SymmetryReport {
        curve_class: CurveClass::Proper,
        degrees: Some(degrees),
        central: Some(central),
        mirror: Some(mirror),
        oracle_verified,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Poly, RealPoly};

    fn fe(n: i64) -> FieldElement {
        FieldElement::from_int(n)
    }

    fn real_poly(coeffs: &[i64]) -> RealPoly {
        Poly::new(coeffs.iter().map(|&c| fe(c)).collect())
    }

    fn param(x: &[i64], y: &[i64]) -> Parametrization {
        Parametrization::new(real_poly(x), real_poly(y))
    }

    #[test]
    fn central_verdicts_pass_the_oracle() {
        let report = detect_all(&param(&[0, 0, -2, 1], &[0, 1])).unwrap();
        assert_eq!(report.degrees, Some((3, 1, 3)));
        assert!(report.central.as_ref().unwrap().is_symmetric());
        assert!(!report.mirror.as_ref().unwrap().is_symmetric());
        assert_eq!(report.oracle_verified, Some(true));
        assert!(!report.notes.is_empty());
    }

    #[test]
    fn mirror_verdicts_pass_the_oracle() {
        let report = detect_all(&param(&[0, 1], &[0, 0, 1])).unwrap();
        assert!(!report.central.as_ref().unwrap().is_symmetric());
        assert!(report.mirror.as_ref().unwrap().is_symmetric());
        assert_eq!(report.oracle_verified, Some(true));
    }

    #[test]
    fn asymmetric_curves_have_nothing_to_verify() {
        let report = detect_all(&param(&[0, 1, 1], &[0, 0, 0, 1])).unwrap();
        assert!(!report.central.as_ref().unwrap().is_symmetric());
        assert!(!report.mirror.as_ref().unwrap().is_symmetric());
        assert_eq!(report.oracle_verified, None);
    }

    #[test]
    fn degenerate_inputs_are_reported_without_verdicts() {
        let report = detect_all(&param(&[3], &[5])).unwrap();
        assert_eq!(
            report.curve_class,
            CurveClass::Point(Point::new(fe(3), fe(5)))
        );
        assert!(report.central.is_none() && report.mirror.is_none());
        assert!(!report.notes.is_empty());

        let report = detect_all(&param(&[0, 0, 1], &[1, 0, 1])).unwrap();
        assert_eq!(
            report.curve_class,
            CurveClass::Line(Line::new(fe(1), fe(-1), fe(1)))
        );

        let report = detect_all(&param(&[0, 0, 1], &[0, 0, 0, 0, 1])).unwrap();
        assert_eq!(report.curve_class, CurveClass::Improper { gcd_degree: 2 });
    }

    #[test]
    fn oracles_reject_wrong_parameters() {
        let cubic = param(&[0, 0, -2, 1], &[0, 1]).to_complex().unwrap();
        let good_center = Point::new(FieldElement::from_ratio(-16, 27), FieldElement::from_ratio(2, 3));
        let good_beta = FieldElement::from_ratio(4, 3);
        assert!(oracle_check_central(&cubic, &good_beta, &good_center));
        assert!(!oracle_check_central(
            &cubic,
            &good_beta,
            &Point::new(fe(0), fe(0))
        ));
        assert!(!oracle_check_central(&cubic, &fe(1), &good_center));

        let parabola = param(&[0, 1], &[0, 0, 1]).to_complex().unwrap();
        let axis = Line::new(fe(1), fe(0), fe(0));
        assert!(oracle_check_mirror(&parabola, &FieldElement::zero(), &axis));
        assert!(!oracle_check_mirror(
            &parabola,
            &FieldElement::zero(),
            &Line::new(fe(1), fe(0), fe(-1))
        ));
        assert!(!oracle_check_mirror(&parabola, &fe(1), &axis));
    }
}
