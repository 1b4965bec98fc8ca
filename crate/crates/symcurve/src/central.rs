//! Central symmetry detection.
//!
//! A proper curve `z(t)` of degree `n` is centrally symmetric exactly
//! when some affine change of parameter `L(t) = alpha*t + beta` satisfies
//! `z(L(t)) = 2*z0 - z(t)`.  Comparing leading coefficients forces
//! `alpha = -1` (hence `n` odd) and pins the candidate
//! `beta = -2*c_{n-1} / (n*c_n)`, which must come out real.  What remains
//! is a triangular system of coefficient equations
//!
//! ```text
//!   -c_i = (-1)^i * sum_{k=i..n} c_k * C(k,i) * beta^(k-i)    (i = 1..n)
//! ```
//!
//! checked exactly, most-sparse equations first.  On success the center
//! is `z0 = c0 + Q(beta)/2` where `Q(beta) = z(beta) - c0`.

use num_bigint::BigInt;
use num_traits::One;

use crate::complex::ComplexElement;
use crate::curve::ComplexCurve;
use crate::field::{FieldElement, Rational};
use crate::geom::Point;

/// Why the central detector rejected a curve.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CentralRejection {
    /// `deg x` is even; an even-degree coordinate cannot flip sign under
    /// `t -> -t + beta`.
    EvenDegreeX,
    /// `deg y` is even.
    EvenDegreeY,
    /// The forced reparametrization offset is not a real number.
    BetaNotReal { candidate: ComplexElement },
    /// The coefficient equation with this index fails.
    SystemFails { index: usize },
    /// In the special case `c_{n-1} = 0`, the even-index coefficient
    /// `c_index` must vanish but does not.
    EvenCoefficientNonzero { index: usize },
}

/// Verdict of the central symmetry detector.
#[derive(Clone, PartialEq, Debug)]
pub enum CentralResult {
    Symmetric { center: Point, beta: FieldElement },
    NotSymmetric {
        reason: CentralRejection,
        /// The candidate offset, when the analysis got far enough to pin
        /// a real one.
        beta: Option<FieldElement>,
    },
}

impl CentralResult {
    pub fn is_symmetric(&self) -> bool {
        matches!(self, CentralResult::Symmetric { .. })
    }

    pub fn center(&self) -> Option<&Point> {
        match self {
            CentralResult::Symmetric { center, .. } => Some(center),
            CentralResult::NotSymmetric { .. } => None,
        }
    }

    pub fn beta(&self) -> Option<&FieldElement> {
        match self {
            CentralResult::Symmetric { beta, .. } => Some(beta),
            CentralResult::NotSymmetric { beta, .. } => beta.as_ref(),
        }
    }

    pub fn rejection(&self) -> Option<&CentralRejection> {
        match self {
            CentralResult::Symmetric { .. } => None,
            CentralResult::NotSymmetric { reason, .. } => Some(reason),
        }
    }
}

/// Degree parity prefilter: both coordinate degrees must be odd, because
/// each coordinate must satisfy `p(-t + beta) = 2*p0 - p(t)` and the
/// leading term of an even-degree `p` keeps its sign on the left.
pub fn central_prefilter(curve: &ComplexCurve) -> Option<CentralRejection> {
    if curve.parametrization().deg_x() % 2 == 0 {
        return Some(CentralRejection::EvenDegreeX);
    }
    if curve.parametrization().deg_y() % 2 == 0 {
        return Some(CentralRejection::EvenDegreeY);
    }
    None
}

/// The forced candidate `beta = -2*c_{n-1} / (n*c_n)`, computed as a
/// complex number via `-2 * c_{n-1} * conj(c_n) / (n * |c_n|^2)` so the
/// division is by an exact real quantity.  The curve is centrally
/// symmetric only if this comes out real.
pub fn central_candidate(curve: &ComplexCurve) -> ComplexElement {
    let n = curve.degree();
    let c_n = curve.leading();
    let c_n1 = curve.coeff(n - 1);
    let denom = c_n
        .modulus_squared()
        .scale(&Rational::from_integer(BigInt::from(n)));
    (&c_n1 * &c_n.conj())
        .scale_rational(&Rational::from_integer(BigInt::from(-2)))
        .div_real(&denom)
        .expect("leading coefficient of a proper curve is nonzero")
}

/// Checks the triangular coefficient system for `alpha = -1` and the
/// given real `beta`.  Returns the index of the first failing equation
/// scanning from `i = n` down to `i = 1` (highest indices have the
/// fewest terms), or `None` when every equation holds.
pub fn verify_system(curve: &ComplexCurve, beta: &FieldElement) -> Option<usize> {
    let n = curve.degree();
    let coeffs = curve.z().coeffs();
    let mut beta_pows: Vec<FieldElement> = Vec::with_capacity(n);
    beta_pows.push(FieldElement::one());
    for k in 1..n {
        beta_pows.push(&beta_pows[k - 1] * beta);
    }
    for i in (1..=n).rev() {
        // binom tracks C(k, i) as k runs from i to n.
        let mut binom = BigInt::one();
        let mut sum = ComplexElement::zero();
        for k in i..=n {
            if k > i {
                binom = binom * BigInt::from(k) / BigInt::from(k - i);
            }
            let c = &coeffs[k];
            if !c.is_zero() {
                sum = sum
                    + c.scale(&beta_pows[k - i])
                        .scale_rational(&Rational::from_integer(binom.clone()));
            }
        }
        let rhs = if i % 2 == 1 { -sum } else { sum };
        if rhs != -coeffs[i].clone() {
            return Some(i);
        }
    }
    None
}

/// The symmetry center `z0 = (z(beta) + c0) / 2` as a plane point.
pub fn center_from(curve: &ComplexCurve, beta: &FieldElement) -> Point {
    let z_beta = curve.z().eval(&ComplexElement::from_real(beta.clone()));
    let z0 = (&z_beta + &curve.coeff(0)).scale_rational(&Rational::new(1.into(), 2.into()));
    Point::new(z0.re, z0.im)
}

/// Special case `c_{n-1} = 0` (forcing `beta = 0`), where the system
/// collapses to zero tests: with `beta = 0` equation `(i)` reads
/// `-c_i = (-1)^i * c_i`, which holds automatically for odd `i` and
/// demands `c_i = 0` for even `i`.  For `n = 3` there is no even index
/// in `1..=n-2`, so every such cubic is symmetric about `c0`.
///
/// Callers must have checked the degree parity already (`n` odd).
/// Returns `None` when `c_{n-1} != 0` and the general path must run.
pub fn fastpath(curve: &ComplexCurve) -> Option<CentralResult> {
    let n = curve.degree();
    debug_assert!(n % 2 == 1, "central fastpath requires odd degree");
    if !curve.coeff(n - 1).is_zero() {
        return None;
    }
    let mut k = 2;
    while k + 2 <= n {
        if !curve.coeff(k).is_zero() {
            return Some(CentralResult::NotSymmetric {
                reason: CentralRejection::EvenCoefficientNonzero { index: k },
                beta: Some(FieldElement::zero()),
            });
        }
        k += 2;
    }
    let c0 = curve.coeff(0);
    Some(CentralResult::Symmetric {
        center: Point::new(c0.re, c0.im),
        beta: FieldElement::zero(),
    })
}

/// The full central symmetry decision for a proper curve.
pub fn detect_central(curve: &ComplexCurve) -> CentralResult {
    if let Some(reason) = central_prefilter(curve) {
        return CentralResult::NotSymmetric { reason, beta: None };
    }
    if let Some(result) = fastpath(curve) {
        return result;
    }
    let candidate = central_candidate(curve);
    if !candidate.is_real() {
        return CentralResult::NotSymmetric {
            reason: CentralRejection::BetaNotReal { candidate },
            beta: None,
        };
    }
    let beta = candidate.re;
    if let Some(index) = verify_system(curve, &beta) {
        return CentralResult::NotSymmetric {
            reason: CentralRejection::SystemFails { index },
            beta: Some(beta),
        };
    }
    let center = center_from(curve, &beta);
    CentralResult::Symmetric { center, beta }
}

/// The general path alone (candidate formula plus full system),
/// bypassing the `c_{n-1} = 0` shortcut; used to cross-check that the
/// shortcut changes nothing.
pub fn detect_central_general(curve: &ComplexCurve) -> CentralResult {
    if let Some(reason) = central_prefilter(curve) {
        return CentralResult::NotSymmetric { reason, beta: None };
    }
    let candidate = central_candidate(curve);
    if !candidate.is_real() {
        return CentralResult::NotSymmetric {
            reason: CentralRejection::BetaNotReal { candidate },
            beta: None,
        };
    }
    let beta = candidate.re;
    if let Some(index) = verify_system(curve, &beta) {
        return CentralResult::NotSymmetric {
            reason: CentralRejection::SystemFails { index },
            beta: Some(beta),
        };
    }
    let center = center_from(curve, &beta);
    CentralResult::Symmetric { center, beta }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::Parametrization;
    use crate::poly::{Poly, RealPoly};

    fn fe(n: i64) -> FieldElement {
        FieldElement::from_int(n)
    }

    fn ratio(n: i64, d: i64) -> FieldElement {
        FieldElement::from_ratio(n, d)
    }

    fn real_poly(coeffs: &[i64]) -> RealPoly {
        Poly::new(coeffs.iter().map(|&c| fe(c)).collect())
    }

    fn curve(x: &[i64], y: &[i64]) -> ComplexCurve {
        Parametrization::new(real_poly(x), real_poly(y))
            .to_complex()
            .expect("test curve must be proper")
    }

    #[test]
    fn even_coordinate_degrees_are_prefiltered() {
        let parabola = curve(&[0, 1], &[0, 0, 1]);
        assert_eq!(
            detect_central(&parabola),
            CentralResult::NotSymmetric {
                reason: CentralRejection::EvenDegreeY,
                beta: None
            }
        );
        let flipped = curve(&[0, 0, 1], &[0, 0, 0, 1]);
        assert_eq!(
            detect_central(&flipped).rejection(),
            Some(&CentralRejection::EvenDegreeX)
        );
    }

    #[test]
    fn odd_cubics_are_always_symmetric_about_their_inflection() {
        // (t^3 - 2t^2, t): center at the inflection point (-16/27, 2/3).
        let c = curve(&[0, 0, -2, 1], &[0, 1]);
        let result = detect_central(&c);
        assert_eq!(
            result,
            CentralResult::Symmetric {
                center: Point::new(ratio(-16, 27), ratio(2, 3)),
                beta: ratio(4, 3),
            }
        );
    }

    #[test]
    fn fastpath_cubic_with_vanishing_second_coefficient() {
        let c = curve(&[0, 0, 0, 1], &[0, 1]); // (t^3, t)
        assert_eq!(
            detect_central(&c),
            CentralResult::Symmetric {
                center: Point::from_ints(0, 0),
                beta: FieldElement::zero(),
            }
        );
    }

    #[test]
    fn fastpath_rejects_on_even_coefficient() {
        // z = i*t^5 + t^3 + i*t^2: c_4 = 0 forces beta = 0, but c_2 != 0.
        let c = curve(&[0, 0, 0, 1], &[0, 0, 1, 0, 0, 1]);
        assert_eq!(
            detect_central(&c),
            CentralResult::NotSymmetric {
                reason: CentralRejection::EvenCoefficientNonzero { index: 2 },
                beta: Some(FieldElement::zero()),
            }
        );
    }

    #[test]
    fn complex_candidate_offset_rejects() {
        // z = (1+i)t^5 + (1+2i)t^4 + ... gives a non-real forced beta.
        let c = curve(&[0, 1, 0, 0, 1, 1], &[0, 2, 0, 0, 2, 1]);
        let result = detect_central(&c);
        match result {
            CentralResult::NotSymmetric {
                reason: CentralRejection::BetaNotReal { candidate },
                beta: None,
            } => {
                let expected = ComplexElement::new(ratio(-3, 5), ratio(-1, 5));
                assert_eq!(candidate, expected);
            }
            other => panic!("expected BetaNotReal, got {:?}", other),
        }
    }

    #[test]
    fn failing_equation_index_is_reported() {
        // z = i t^5 + i t^4 + t^3: beta = -2/5 is real but equation (2) fails.
        let c = curve(&[0, 0, 0, 1], &[0, 0, 0, 0, 1, 1]);
        assert_eq!(
            detect_central(&c),
            CentralResult::NotSymmetric {
                reason: CentralRejection::SystemFails { index: 2 },
                beta: Some(ratio(-2, 5)),
            }
        );
    }

    #[test]
    fn planted_shift_is_recovered() {
        // Start from the origin-symmetric (t^5 + t^3, t^3 - 2t) and
        // substitute t -> t + 1; the detector must find beta = -2 and the
        // center still at the origin.
        let base_x = real_poly(&[0, 0, 0, 1, 0, 1]);
        let base_y = real_poly(&[0, -2, 0, 1]);
        let x = base_x.compose_linear(&fe(1), &fe(1));
        let y = base_y.compose_linear(&fe(1), &fe(1));
        let c = Parametrization::new(x, y).to_complex().unwrap();
        assert_eq!(
            detect_central(&c),
            CentralResult::Symmetric {
                center: Point::from_ints(0, 0),
                beta: fe(-2),
            }
        );
    }

    #[test]
    fn translation_moves_the_center() {
        // Same curve translated by (4, -7/2).
        let base_x = real_poly(&[0, 0, 0, 1, 0, 1]).compose_linear(&fe(1), &fe(1));
        let base_y = real_poly(&[0, -2, 0, 1]).compose_linear(&fe(1), &fe(1));
        let x = base_x.add(&RealPoly::constant(fe(4)));
        let y = base_y.add(&RealPoly::constant(ratio(-7, 2)));
        let c = Parametrization::new(x, y).to_complex().unwrap();
        let result = detect_central(&c);
        assert_eq!(
            result.center(),
            Some(&Point::new(fe(4), ratio(-7, 2)))
        );
    }

    #[test]
    fn system_check_rejects_even_degree_when_called_directly() {
        // Bypassing the prefilter on (t, t^2): equation (n) itself fails,
        // so the prefilter and the system agree.
        let parabola = curve(&[0, 1], &[0, 0, 1]);
        assert_eq!(verify_system(&parabola, &FieldElement::zero()), Some(2));
    }

    #[test]
    fn fastpath_agrees_with_general_path_when_applicable() {
        let symmetric = curve(&[0, 1, 0, 1, 0, 1], &[0, -3, 0, 1]); // odd powers only
        let rejected = curve(&[0, 0, 1, 1], &[0, 1, 0, 1, 0, 1]); // c_2 != 0 in x
        for c in [symmetric, rejected] {
            if c.coeff(c.degree() - 1).is_zero() {
                let fast = fastpath(&c).expect("fastpath applies");
                let general = {
                    let candidate = central_candidate(&c);
                    assert!(candidate.is_real());
                    let beta = candidate.re;
                    match verify_system(&c, &beta) {
                        None => CentralResult::Symmetric {
                            center: center_from(&c, &beta),
                            beta,
                        },
                        Some(_) => CentralResult::NotSymmetric {
                            reason: fast.rejection().unwrap().clone(),
                            beta: Some(beta),
                        },
                    }
                };
                assert_eq!(fast.is_symmetric(), general.is_symmetric());
                assert_eq!(fast.center(), general.center());
                assert_eq!(fast.beta(), general.beta());
            }
        }
    }
}
