//! Mirror symmetry detection.
//!
//! A proper curve `z(t)` of degree `n` is mirror symmetric exactly when
//! some `L(t) = alpha*t + beta` and reflection `F` satisfy
//! `F(z(t)) = z(L(t))`.  Writing the reflection as
//! `F(z) = z0 + e^(2i*phi) * conj(z - z0)`, the leading coefficients
//! force `alpha = -1`, fix the unit `e^(-2i*phi) = conj(c_n) / ((-1)^n
//! c_n)`, and pin the real offset
//! `beta = -2*Re(c_n * conj(c_{n-1})) / (n*|c_n|^2)`.  The remaining
//! coefficient equations form the triangular system
//!
//! ```text
//!   conj(c_k)*c_n*(-1)^(n-k) = conj(c_n) * sum_{j=k..n} c_j * C(j,k) * beta^(j-k)
//! ```
//!
//! for `k = n-1..1`, checked exactly.  The axis comes out in closed form:
//! with `D = (-1)^n*conj(c0)*c_n - conj(c_n)*c0 - conj(c_n)*Q(beta)` and
//! `Q(beta) = z(beta) - c0`, the axis is `conj(g)*z + g*conj(z) + C = 0`
//! where `(g, C) = (c_n, D)` for odd `n` and `(-i*c_n, i*D)` for even
//! `n`; `C` is guaranteed real when the system holds.

use thiserror::Error;

use num_bigint::BigInt;
use num_traits::One;

use crate::complex::ComplexElement;
use crate::curve::ComplexCurve;
use crate::field::{FieldElement, Rational};
use crate::geom::Line;

/// What the degree parities say about a possible mirror axis before any
/// system is solved.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AxisConstraint {
    /// The axis, if any, is parallel to the x-axis (`A = 0`).
    ParallelToXAxis,
    /// The axis, if any, is parallel to the y-axis (`B = 0`).
    ParallelToYAxis,
    /// The axis direction must be parallel to `(dx, dy)`; equivalently
    /// the axis normal is proportional to the leading coefficient pair
    /// `(a_r, a_s)`, so `(dx, dy) = (a_s, -a_r)`.
    ParallelToVector { dx: FieldElement, dy: FieldElement },
    /// Equal even degrees say nothing about the axis direction.
    Unconstrained,
}

/// Outcome of the degree-parity prefilter.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MirrorPrefilter {
    /// Distinct odd coordinate degrees admit no reflection at all.
    Reject { r: usize, s: usize },
    /// Mirror symmetry is not excluded; any axis must satisfy the
    /// constraint.
    Pass(AxisConstraint),
}

/// Why the mirror detector rejected a curve.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MirrorRejection {
    /// Coordinate degrees are odd and distinct.
    ParityProhibition { r: usize, s: usize },
    /// The coefficient equation with this index fails.
    SystemFails { index: usize },
    /// The reflected-endpoint displacement `Q(beta)` is not normal to
    /// the candidate axis.
    QstarNotReal,
    /// In the special case `c_{n-1} = 0`, the coefficient with this
    /// index breaks the required alignment with `c_n`.
    SpecialCaseCoefficient { index: usize },
}

/// Verdict of the mirror symmetry detector.
#[derive(Clone, PartialEq, Debug)]
pub enum MirrorResult {
    Symmetric { axis: Line, beta: FieldElement },
    NotSymmetric {
        reason: MirrorRejection,
        /// The forced offset, when the analysis got far enough to pin it.
        beta: Option<FieldElement>,
    },
}

impl MirrorResult {
    pub fn is_symmetric(&self) -> bool {
        matches!(self, MirrorResult::Symmetric { .. })
    }

    pub fn axis(&self) -> Option<&Line> {
        match self {
            MirrorResult::Symmetric { axis, .. } => Some(axis),
            MirrorResult::NotSymmetric { .. } => None,
        }
    }

    pub fn beta(&self) -> Option<&FieldElement> {
        match self {
            MirrorResult::Symmetric { beta, .. } => Some(beta),
            MirrorResult::NotSymmetric { beta, .. } => beta.as_ref(),
        }
    }

    pub fn rejection(&self) -> Option<&MirrorRejection> {
        match self {
            MirrorResult::Symmetric { .. } => None,
            MirrorResult::NotSymmetric { reason, .. } => Some(reason),
        }
    }
}

/// A theorem-guaranteed property failed while finishing a positive
/// verdict; the engine aborts rather than emit a doubtful axis.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum MirrorInternalError {
    #[error("axis constant term is not real: {details}")]
    AxisConstantNotReal { details: String },
    #[error("computed axis violates the parity constraint: {details}")]
    ConstraintViolated { details: String },
}

/// Degree-parity prefilter.  Reflections either fix each coordinate axis
/// direction (axis-parallel mirrors, which force one even and one odd
/// coordinate degree) or mix the two top coefficients (tilted mirrors,
/// which force equal degrees); the table below is the contrapositive.
pub fn mirror_prefilter(curve: &ComplexCurve) -> MirrorPrefilter {
    let r = curve.parametrization().deg_x();
    let s = curve.parametrization().deg_y();
    match (r % 2 == 1, s % 2 == 1) {
        (true, true) if r != s => MirrorPrefilter::Reject { r, s },
        (true, true) => {
            let a_r = curve.x().leading().expect("deg x >= 1").clone();
            let a_s = curve.y().leading().expect("deg y >= 1").clone();
            MirrorPrefilter::Pass(AxisConstraint::ParallelToVector {
                dx: a_s,
                dy: -a_r,
            })
        }
        (true, false) => MirrorPrefilter::Pass(AxisConstraint::ParallelToYAxis),
        (false, true) => MirrorPrefilter::Pass(AxisConstraint::ParallelToXAxis),
        (false, false) => match r.cmp(&s) {
            std::cmp::Ordering::Less => MirrorPrefilter::Pass(AxisConstraint::ParallelToYAxis),
            std::cmp::Ordering::Greater => MirrorPrefilter::Pass(AxisConstraint::ParallelToXAxis),
            std::cmp::Ordering::Equal => MirrorPrefilter::Pass(AxisConstraint::Unconstrained),
        },
    }
}

/// The forced offset `beta = -2*Re(c_n * conj(c_{n-1})) / (n*|c_n|^2)`,
/// which is real by construction.
pub fn mirror_beta(curve: &ComplexCurve) -> FieldElement {
    let n = curve.degree();
    let c_n = curve.leading();
    let w = c_n * &curve.coeff(n - 1).conj();
    let denom = c_n
        .modulus_squared()
        .scale(&Rational::from_integer(BigInt::from(n)));
    w.re
        .scale(&Rational::from_integer(BigInt::from(-2)))
        .div(&denom)
        .expect("leading coefficient of a proper curve is nonzero")
}

/// Checks the reflection coefficient system for the given real `beta`.
/// Returns the index of the first failing equation scanning from
/// `k = n-1` down to `k = 1`, or `None` when every equation holds.
pub fn verify_system(curve: &ComplexCurve, beta: &FieldElement) -> Option<usize> {
    let n = curve.degree();
    let coeffs = curve.z().coeffs();
    let c_n = curve.leading().clone();
    let c_n_conj = c_n.conj();
    let mut beta_pows: Vec<FieldElement> = Vec::with_capacity(n);
    beta_pows.push(FieldElement::one());
    for k in 1..n {
        beta_pows.push(&beta_pows[k - 1] * beta);
    }
    for k in (1..n).rev() {
        // binom tracks C(j, k) as j runs from k to n.
        let mut binom = BigInt::one();
        let mut sum = ComplexElement::zero();
        for j in k..=n {
            if j > k {
                binom = binom * BigInt::from(j) / BigInt::from(j - k);
            }
            let c = &coeffs[j];
            if !c.is_zero() {
                sum = sum
                    + c.scale(&beta_pows[j - k])
                        .scale_rational(&Rational::from_integer(binom.clone()));
            }
        }
        let lhs = &coeffs[k].conj() * &c_n;
        let lhs = if (n - k) % 2 == 1 { -lhs } else { lhs };
        if lhs != &c_n_conj * &sum {
            return Some(k);
        }
    }
    None
}

/// `Q(beta) = z(beta) - c0`, the displacement between the mirror-paired
/// curve points `z(beta)` and `z(0)`.
fn q_of(curve: &ComplexCurve, beta: &FieldElement) -> ComplexElement {
    let z_beta = curve.z().eval(&ComplexElement::from_real(beta.clone()));
    &z_beta - &curve.coeff(0)
}

/// The square-root-free form of the condition that `Q(beta)` is normal
/// to the axis direction: with `W = Q(beta) * conj(c_n)`, symmetry needs
/// `Im(W) = 0` for odd `n` and `Re(W) = 0` for even `n`.
pub fn qstar_is_real(curve: &ComplexCurve, beta: &FieldElement) -> bool {
    let w = &q_of(curve, beta) * &curve.leading().conj();
    if curve.degree() % 2 == 1 {
        w.im.is_zero()
    } else {
        w.re.is_zero()
    }
}

/// The closed-form axis for a curve whose system checks passed.  Errors
/// only on an internal inconsistency (the constant term must be real
/// when the system and the normality condition hold).
pub fn axis_from(curve: &ComplexCurve, beta: &FieldElement) -> Result<Line, MirrorInternalError> {
    let n = curve.degree();
    let c_n = curve.leading().clone();
    let c_0 = curve.coeff(0);
    let q = q_of(curve, beta);
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let d = (&c_0.conj() * &c_n).scale_rational(&Rational::from_integer(BigInt::from(sign)))
        - &c_n.conj() * &c_0
        - &c_n.conj() * &q;
    let (gamma, c_term) = if n % 2 == 1 {
        (c_n, d)
    } else {
        (-(&ComplexElement::i() * &c_n), &ComplexElement::i() * &d)
    };
    if !c_term.is_real() {
        return Err(MirrorInternalError::AxisConstantNotReal {
            details: format!(
                "n = {}, beta = {}, gamma = {}, constant term = {}, z = {}",
                n,
                beta,
                gamma,
                c_term,
                curve.z()
            ),
        });
    }
    let two = Rational::from_integer(BigInt::from(2));
    Ok(Line::new(
        gamma.re.scale(&two),
        gamma.im.scale(&two),
        c_term.re,
    ))
}

/// Special case `c_{n-1} = 0` (forcing `beta = 0`), where equation `[k]`
/// collapses to an alignment test between `c_k` and `c_n`: writing
/// `w = c_n * conj(c_k)`, it requires `Im(w) = 0` when `n - k` is even
/// and `Re(w) = 0` when `n - k` is odd.  (The parity is that of `n - k`,
/// not of `k`: the two coincide only for even `n`.)  The normality
/// condition is automatic because `Q(0) = 0`.
///
/// Returns `None` when `c_{n-1} != 0`; otherwise `Ok(())` for a
/// symmetric verdict or the index of the first failing coefficient.
pub fn fastpath_conditions(curve: &ComplexCurve) -> Option<Result<(), usize>> {
    let n = curve.degree();
    if !curve.coeff(n - 1).is_zero() {
        return None;
    }
    let c_n = curve.leading();
    for k in 1..=n - 2 {
        let c_k = curve.coeff(k);
        if c_k.is_zero() {
            continue;
        }
        let w = c_n * &c_k.conj();
        let ok = if (n - k) % 2 == 0 {
            w.im.is_zero()
        } else {
            w.re.is_zero()
        };
        if !ok {
            return Some(Err(k));
        }
    }
    Some(Ok(()))
}

/// The full mirror symmetry decision for a proper curve, including the
/// exact parity-constraint cross-check on any emitted axis.
pub fn detect_mirror(curve: &ComplexCurve) -> Result<MirrorResult, MirrorInternalError> {
    let constraint = match mirror_prefilter(curve) {
        MirrorPrefilter::Reject { r, s } => {
            return Ok(MirrorResult::NotSymmetric {
                reason: MirrorRejection::ParityProhibition { r, s },
                beta: None,
            })
        }
        MirrorPrefilter::Pass(constraint) => constraint,
    };
    let beta = match fastpath_conditions(curve) {
        Some(Err(index)) => {
            return Ok(MirrorResult::NotSymmetric {
                reason: MirrorRejection::SpecialCaseCoefficient { index },
                beta: Some(FieldElement::zero()),
            })
        }
        Some(Ok(())) => FieldElement::zero(),
        None => {
            let beta = mirror_beta(curve);
            if let Some(index) = verify_system(curve, &beta) {
                return Ok(MirrorResult::NotSymmetric {
                    reason: MirrorRejection::SystemFails { index },
                    beta: Some(beta),
                });
            }
            if !qstar_is_real(curve, &beta) {
                return Ok(MirrorResult::NotSymmetric {
                    reason: MirrorRejection::QstarNotReal,
                    beta: Some(beta),
                });
            }
            beta
        }
    };
    let axis = axis_from(curve, &beta)?;
    let constraint_ok = match &constraint {
        AxisConstraint::ParallelToXAxis => axis.is_parallel_to_x_axis(),
        AxisConstraint::ParallelToYAxis => axis.is_parallel_to_y_axis(),
        AxisConstraint::ParallelToVector { dx, dy } => axis.is_parallel_to_vector(dx, dy),
        AxisConstraint::Unconstrained => true,
    };
    if !constraint_ok {
        return Err(MirrorInternalError::ConstraintViolated {
            details: format!(
                "axis {} vs constraint {:?} for z = {}",
                axis,
                constraint,
                curve.z()
            ),
        });
    }
    Ok(MirrorResult::Symmetric { axis, beta })
}

/// The general path alone (offset formula, coefficient system, normality,
/// axis), bypassing the `c_{n-1} = 0` shortcut; used to cross-check that
/// the shortcut changes nothing.
pub fn detect_mirror_general(curve: &ComplexCurve) -> Result<MirrorResult, MirrorInternalError> {
    if let MirrorPrefilter::Reject { r, s } = mirror_prefilter(curve) {
        return Ok(MirrorResult::NotSymmetric {
            reason: MirrorRejection::ParityProhibition { r, s },
            beta: None,
        });
    }
    let beta = mirror_beta(curve);
    if let Some(index) = verify_system(curve, &beta) {
        return Ok(MirrorResult::NotSymmetric {
            reason: MirrorRejection::SystemFails { index },
            beta: Some(beta),
        });
    }
    if !qstar_is_real(curve, &beta) {
        return Ok(MirrorResult::NotSymmetric {
            reason: MirrorRejection::QstarNotReal,
            beta: Some(beta),
        });
    }
    let axis = axis_from(curve, &beta)?;
    Ok(MirrorResult::Symmetric { axis, beta })
}
