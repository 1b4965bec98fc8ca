//! Exact plane geometry: points, and lines in canonical normalized form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::field::{FieldElement, Rational};

/// A point of the plane with exact field coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Point {
    pub x: FieldElement,
    pub y: FieldElement,
}

impl Point {
    pub fn new(x: FieldElement, y: FieldElement) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(FieldElement::from_int(x), FieldElement::from_int(y))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// The line `A*x + B*y + C = 0`, stored in a canonical form so that two
/// descriptions of the same line compare equal.
///
/// Normalization: the coefficient triple is scaled so the first nonzero
/// of `(A, B)` is positive; when all three coefficients are rational they
/// are additionally scaled to coprime integers.  `(A, B) = (0, 0)` is not
/// a line and is rejected by the constructor.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Line {
    a: FieldElement,
    b: FieldElement,
    c: FieldElement,
}

impl Line {
    /// Builds the line `a*x + b*y + c = 0` and normalizes it.
    ///
    /// Panics if `(a, b) = (0, 0)`: callers must pass a genuine line.
    pub fn new(a: FieldElement, b: FieldElement, c: FieldElement) -> Self {
        let lead = if !a.is_zero() { &a } else { &b };
        assert!(
            !lead.is_zero(),
            "a line requires (A, B) != (0, 0); got C-only equation"
        );
        let inv = lead.inv().expect("nonzero leading coefficient");
        let a = &a * &inv;
        let b = &b * &inv;
        let c = &c * &inv;
        if let (Some(qa), Some(qb), Some(qc)) = (a.as_rational(), b.as_rational(), c.as_rational())
        {
            let (ia, ib, ic) = integer_normalize(&qa, &qb, &qc);
            return Line {
                a: FieldElement::from_rational(Rational::from_integer(ia)),
                b: FieldElement::from_rational(Rational::from_integer(ib)),
                c: FieldElement::from_rational(Rational::from_integer(ic)),
            };
        }
        Line { a, b, c }
    }

    pub fn a(&self) -> &FieldElement {
        &self.a
    }

    pub fn b(&self) -> &FieldElement {
        &self.b
    }

    pub fn c(&self) -> &FieldElement {
        &self.c
    }

    /// A direction vector of the line, `(-B, A)`.
    pub fn direction(&self) -> (FieldElement, FieldElement) {
        (-&self.b, self.a.clone())
    }

    /// Exact incidence test.
    pub fn contains(&self, p: &Point) -> bool {
        (&(&self.a * &p.x) + &(&self.b * &p.y) + self.c.clone()).is_zero()
    }

    /// Some point on the line: `(0, -C/B)` when `B != 0`, else `(-C/A, 0)`.
    pub fn some_point(&self) -> Point {
        if !self.b.is_zero() {
            let y = (-&self.c).div(&self.b).expect("B is nonzero");
            Point::new(FieldElement::zero(), y)
        } else {
            let x = (-&self.c).div(&self.a).expect("A is nonzero when B is zero");
            Point::new(x, FieldElement::zero())
        }
    }

    /// True when the line runs parallel to the x-axis (`A = 0`).
    pub fn is_parallel_to_x_axis(&self) -> bool {
        self.a.is_zero()
    }

    /// True when the line runs parallel to the y-axis (`B = 0`).
    pub fn is_parallel_to_y_axis(&self) -> bool {
        self.b.is_zero()
    }

    /// True when the line's direction is parallel to `(dx, dy)`, i.e.
    /// `A*dx + B*dy = 0` exactly.
    pub fn is_parallel_to_vector(&self, dx: &FieldElement, dy: &FieldElement) -> bool {
        (&(&self.a * dx) + &(&self.b * dy)).is_zero()
    }
}

/// Scales a rational coefficient triple (with leading entry 1) to coprime
/// integers; the leading entry stays positive because the scale factor is
/// positive.
fn integer_normalize(qa: &Rational, qb: &Rational, qc: &Rational) -> (BigInt, BigInt, BigInt) {
    let lcm = qa.denom().lcm(&qb.denom().lcm(qc.denom()));
    let ia = qa.numer() * (&lcm / qa.denom());
    let ib = qb.numer() * (&lcm / qb.denom());
    let ic = qc.numer() * (&lcm / qc.denom());
    let g = ia.gcd(&ib).gcd(&ic);
    if g.is_zero() {
        (ia, ib, ic)
    } else {
        (ia / &g, ib / &g, ic / &g)
    }
}

impl fmt::Display for Line {
    /// Renders e.g. `x - 2*y + 3 = 0` or `x + sqrt(3)*y - 5 = 0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (coeff, var) in [(&self.a, "x"), (&self.b, "y"), (&self.c, "")] {
            if coeff.is_zero() {
                continue;
            }
            let rendered = coeff.to_string();
            let (sign, magnitude) = match rendered.strip_prefix('-') {
                Some(rest) if !rendered.contains(" - ") && !rendered.contains(" + ") => {
                    ("-", rest.to_string())
                }
                _ => ("+", rendered),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let compound = magnitude.contains(' ');
            match (var, magnitude.as_str(), compound) {
                ("", _, true) => write!(f, "({})", magnitude)?,
                ("", _, false) => write!(f, "{}", magnitude)?,
                (v, "1", _) => write!(f, "{}", v)?,
                (v, _, true) => write!(f, "({})*{}", magnitude, v)?,
                (v, _, false) => write!(f, "{}*{}", magnitude, v)?,
            }
        }
        write!(f, " = 0")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(n: i64) -> FieldElement {
        FieldElement::from_int(n)
    }

    #[test]
    fn scalar_multiples_normalize_to_the_same_line() {
        let l1 = Line::new(fe(2), fe(-1), fe(1));
        let l2 = Line::new(fe(4), fe(-2), fe(2));
        let l3 = Line::new(fe(-2), fe(1), fe(-1));
        assert_eq!(l1, l2);
        assert_eq!(l1, l3);
    }

    #[test]
    fn rational_lines_scale_to_coprime_integers() {
        let l = Line::new(
            FieldElement::from_ratio(1, 2),
            FieldElement::from_ratio(-1, 3),
            FieldElement::from_ratio(5, 6),
        );
        assert_eq!(l, Line::new(fe(3), fe(-2), fe(5)));
    }

    #[test]
    fn horizontal_line_normalizes_with_positive_b() {
        // -2y + 4 = 0 is the line y = 2.
        let l = Line::new(fe(0), fe(-2), fe(4));
        assert_eq!(l, Line::new(fe(0), fe(1), fe(-2)));
        assert!(l.is_parallel_to_x_axis());
        assert!(l.contains(&Point::from_ints(7, 2)));
    }

    #[test]
    fn irrational_lines_normalize_to_leading_one() {
        // sqrt(3)x + y + (3 - 5 sqrt(3)) = 0, divided through by sqrt(3).
        let c = fe(3) - fe(5) * FieldElement::sqrt(3);
        let l = Line::new(FieldElement::sqrt(3), fe(1), c);
        assert!(l.a().is_one());
        let direct = Line::new(
            fe(1),
            FieldElement::from_ratio(1, 3) * FieldElement::sqrt(3),
            FieldElement::sqrt(3) - fe(5),
        );
        assert_eq!(l, direct);
    }

    #[test]
    fn incidence_and_direction() {
        let l = Line::new(fe(1), fe(-1), fe(6)); // y = x + 6
        assert!(l.contains(&Point::from_ints(0, 6)));
        assert!(l.contains(&Point::from_ints(-6, 0)));
        assert!(!l.contains(&Point::from_ints(1, 1)));
        assert!(l.is_parallel_to_vector(&fe(1), &fe(1)));
        assert!(!l.is_parallel_to_vector(&fe(1), &fe(-1)));
        let p = l.some_point();
        assert!(l.contains(&p));
    }

    #[test]
    fn vertical_line_some_point() {
        let l = Line::new(fe(2), fe(0), fe(-8)); // x = 4
        assert!(l.is_parallel_to_y_axis());
        assert_eq!(l.some_point(), Point::from_ints(4, 0));
    }

    #[test]
    fn display_forms() {
        assert_eq!(Line::new(fe(1), fe(1), fe(0)).to_string(), "x + y = 0");
        assert_eq!(Line::new(fe(0), fe(1), fe(-2)).to_string(), "y - 2 = 0");
        assert_eq!(Line::new(fe(1), fe(-1), fe(6)).to_string(), "x - y + 6 = 0");
    }
}
