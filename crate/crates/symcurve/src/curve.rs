//! Polynomially parametrized plane curves and their classification.
//!
//! Symmetry analysis only makes sense for a *proper* parametrization: one
//! whose image is a genuine curve (not a single point, not a line — those
//! are symmetric in trivial ways) and which traces that image exactly
//! once.  [`Parametrization::classify`] sorts inputs into those buckets
//! exactly, and [`Parametrization::to_complex`] converts a proper curve
//! into the complex form `z(t) = x(t) + i*y(t)` the detectors work on.

use thiserror::Error;

use crate::complex::ComplexElement;
use crate::field::FieldElement;
use crate::gcd::{bivariate_gcd_degree, gcd_univariate};
use crate::geom::{Line, Point};
use crate::poly::{ComplexPoly, RealPoly};

/// A plane curve `(x(t), y(t))` with exact polynomial coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Parametrization {
    pub x: RealPoly,
    pub y: RealPoly,
}

/// What a parametrization's image is, decided exactly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CurveClass {
    /// Both coordinates are constant; the image is one point.
    Point(Point),
    /// The image lies on a line (given in normalized form).
    Line(Line),
    /// The parametrization retraces its image; `gcd_degree` is the exact
    /// tracing index (how many times each point is hit).
    Improper { gcd_degree: usize },
    /// Injective for almost every parameter value.
    Proper,
}

/// Returned when symmetry analysis is requested for an input that is not
/// a properly parametrized curve.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
#[error("not a proper parametrized curve: {class:?}")]
pub struct DegenerateCurve {
    pub class: CurveClass,
}

impl Parametrization {
    pub fn new(x: RealPoly, y: RealPoly) -> Self {
        Parametrization { x, y }
    }

    /// Degree of the x-coordinate (0 for constants).
    pub fn deg_x(&self) -> usize {
        self.x.degree().unwrap_or(0)
    }

    /// Degree of the y-coordinate (0 for constants).
    pub fn deg_y(&self) -> usize {
        self.y.degree().unwrap_or(0)
    }

    /// The curve degree `n = max(deg x, deg y)`.
    pub fn degree(&self) -> usize {
        self.deg_x().max(self.deg_y())
    }

    /// The point reached at parameter value `t`.
    pub fn eval(&self, t: &FieldElement) -> Point {
        Point::new(self.x.eval(t), self.y.eval(t))
    }

    /// Exact classification into point / line / improper / proper.
    pub fn classify(&self) -> CurveClass {
        let dx = self.x.degree().unwrap_or(0);
        let dy = self.y.degree().unwrap_or(0);
        if dx == 0 && dy == 0 {
            return CurveClass::Point(Point::new(self.x.coeff(0), self.y.coeff(0)));
        }
        // Any linear relation A*x(t) + B*y(t) + C = 0 falls into one of
        // three shapes: x constant (B = 0), y constant (A = 0), or
        // y = lambda*x + mu with lambda fixed by the leading coefficients.
        if dx == 0 {
            return CurveClass::Line(Line::new(
                FieldElement::one(),
                FieldElement::zero(),
                -&self.x.coeff(0),
            ));
        }
        if dy == 0 {
            return CurveClass::Line(Line::new(
                FieldElement::zero(),
                FieldElement::one(),
                -&self.y.coeff(0),
            ));
        }
        if dx == dy {
            let lambda = self
                .y
                .leading()
                .unwrap()
                .div(self.x.leading().unwrap())
                .expect("leading coefficients are nonzero");
            let residue = self.y.sub(&self.x.scale(&lambda));
            if residue.degree().unwrap_or(0) == 0 {
                // y = lambda*x + mu, so the image lies on lambda*x - y + mu = 0.
                let mu = residue.coeff(0);
                return CurveClass::Line(Line::new(lambda, -FieldElement::one(), mu));
            }
        }
        self.properness_class()
    }

    /// Decides proper vs improper.  A specialization `s = a` can only
    /// enlarge the gcd: the generic gcd of `x(t) - x(s)`, `y(t) - y(s)`
    /// has the form `h(t) - h(s)` with constant leading coefficient, so
    /// its degree survives every specialization and divides the
    /// specialized gcd.  A sample with gcd degree 1 therefore certifies
    /// properness outright; otherwise the exact bivariate gcd decides.
    fn properness_class(&self) -> CurveClass {
        for a in [0i64, 1, -1] {
            let at = FieldElement::from_int(a);
            let fa = self.x.sub(&RealPoly::constant(self.x.eval(&at)));
            let ga = self.y.sub(&RealPoly::constant(self.y.eval(&at)));
            let g = gcd_univariate(&fa, &ga);
            if g.degree() == Some(1) {
                return CurveClass::Proper;
            }
        }
        let d = bivariate_gcd_degree(&self.x, &self.y);
        if d == 1 {
            CurveClass::Proper
        } else {
            CurveClass::Improper { gcd_degree: d }
        }
    }

    /// Converts to the complex form, rejecting degenerate inputs.
    pub fn to_complex(&self) -> Result<ComplexCurve, DegenerateCurve> {
        match self.classify() {
            CurveClass::Proper => Ok(ComplexCurve::from_proper(self.clone())),
            class => Err(DegenerateCurve { class }),
        }
    }
}

/// A proper curve in complex form `z(t) = x(t) + i*y(t)`.
///
/// Keeps the original coordinates alongside `z` because the symmetry
/// prefilters inspect the real degrees and leading coefficients directly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComplexCurve {
    param: Parametrization,
    z: ComplexPoly,
}

impl ComplexCurve {
    fn from_proper(param: Parametrization) -> Self {
        let z = ComplexPoly::from_real_imag(&param.x, &param.y);
        let curve = ComplexCurve { param, z };
        debug_assert!(curve.degree() >= 2, "proper non-line curves have degree >= 2");
        curve
    }

    pub fn parametrization(&self) -> &Parametrization {
        &self.param
    }

    pub fn x(&self) -> &RealPoly {
        &self.param.x
    }

    pub fn y(&self) -> &RealPoly {
        &self.param.y
    }

    /// The complex coordinate polynomial `z(t)`.
    pub fn z(&self) -> &ComplexPoly {
        &self.z
    }

    /// Curve degree `n = deg z >= 2`.
    pub fn degree(&self) -> usize {
        self.z.degree().expect("proper curves are nonconstant")
    }

    /// The complex coefficient `c_k` of `z`.
    pub fn coeff(&self, k: usize) -> ComplexElement {
        self.z.coeff(k)
    }

    /// The leading complex coefficient `c_n != 0`.
    pub fn leading(&self) -> &ComplexElement {
        self.z.leading().expect("proper curves are nonconstant")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;

    fn fe(n: i64) -> FieldElement {
        FieldElement::from_int(n)
    }

    fn real_poly(coeffs: &[i64]) -> RealPoly {
        Poly::new(coeffs.iter().map(|&c| fe(c)).collect())
    }

    #[test]
    fn constant_coordinates_classify_as_a_point() {
        let p = Parametrization::new(real_poly(&[3]), real_poly(&[-2]));
        assert_eq!(p.classify(), CurveClass::Point(Point::from_ints(3, -2)));
    }

    #[test]
    fn degree_one_images_classify_as_lines() {
        // (t, 2t + 1) lies on 2x - y + 1 = 0.
        let p = Parametrization::new(real_poly(&[0, 1]), real_poly(&[1, 2]));
        assert_eq!(
            p.classify(),
            CurveClass::Line(Line::new(fe(2), fe(-1), fe(1)))
        );
    }

    #[test]
    fn hidden_linear_relations_are_found_in_any_degree() {
        // (t^2 + 1, 2t^2 + 5) lies on y = 2x + 3 even though both
        // coordinates have degree 2.
        let p = Parametrization::new(real_poly(&[1, 0, 1]), real_poly(&[5, 0, 2]));
        assert_eq!(
            p.classify(),
            CurveClass::Line(Line::new(fe(2), fe(-1), fe(3)))
        );
        // A vertical line from a constant x-coordinate.
        let v = Parametrization::new(real_poly(&[4]), real_poly(&[0, 0, 1]));
        assert_eq!(
            v.classify(),
            CurveClass::Line(Line::new(fe(1), fe(0), fe(-4)))
        );
    }

    #[test]
    fn retraced_curves_classify_as_improper_with_exact_index() {
        let double = Parametrization::new(real_poly(&[0, 0, 1]), real_poly(&[0, 0, 0, 0, 1]));
        assert_eq!(double.classify(), CurveClass::Improper { gcd_degree: 2 });
        let triple = Parametrization::new(
            real_poly(&[0, 0, 0, 1]),
            real_poly(&[0, 0, 0, 0, 0, 0, 1]),
        );
        assert_eq!(triple.classify(), CurveClass::Improper { gcd_degree: 3 });
    }

    #[test]
    fn injective_parametrizations_classify_as_proper() {
        let parabola = Parametrization::new(real_poly(&[0, 1]), real_poly(&[0, 0, 1]));
        assert_eq!(parabola.classify(), CurveClass::Proper);
        let cusp = Parametrization::new(real_poly(&[0, 0, 1]), real_poly(&[0, 0, 0, 1]));
        assert_eq!(cusp.classify(), CurveClass::Proper);
    }

    #[test]
    fn complex_form_interleaves_coordinates() {
        let p = Parametrization::new(real_poly(&[0, 1]), real_poly(&[0, 0, 1]));
        let c = p.to_complex().unwrap();
        assert_eq!(c.degree(), 2);
        assert_eq!(c.coeff(0), ComplexElement::zero());
        assert_eq!(c.coeff(1), ComplexElement::one());
        assert_eq!(c.coeff(2), ComplexElement::i());
    }

    #[test]
    fn degenerate_inputs_are_rejected_by_to_complex() {
        let line = Parametrization::new(real_poly(&[0, 1]), real_poly(&[1, 2]));
        let err = line.to_complex().unwrap_err();
        assert!(matches!(err.class, CurveClass::Line(_)));
        let improper = Parametrization::new(real_poly(&[0, 0, 1]), real_poly(&[0, 0, 0, 0, 1]));
        assert_eq!(
            improper.to_complex().unwrap_err().class,
            CurveClass::Improper { gcd_degree: 2 }
        );
    }

    #[test]
    fn radical_coefficients_classify_exactly() {
        // x = sqrt(2)/2 + t, y = t^2: proper.
        let x = Poly::new(vec![
            FieldElement::sqrt(2).scale(&crate::field::Rational::new(1.into(), 2.into())),
            fe(1),
        ]);
        let p = Parametrization::new(x, real_poly(&[0, 0, 1]));
        assert_eq!(p.classify(), CurveClass::Proper);
    }
}
