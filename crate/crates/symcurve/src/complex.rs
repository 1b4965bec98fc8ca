//! Complex numbers with exact [`FieldElement`] components.
//!
//! A parametrized plane curve `(x(t), y(t))` is analyzed in the complex
//! form `z(t) = x(t) + i*y(t)`, so the detectors need complex arithmetic
//! whose real and imaginary parts stay exact.

use std::fmt;

use crate::field::{DivisionByZero, FieldElement, Rational};

/// A complex number `re + im * i` over a multi-quadratic field.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct ComplexElement {
    pub re: FieldElement,
    pub im: FieldElement,
}

impl ComplexElement {
    pub fn new(re: FieldElement, im: FieldElement) -> Self {
        ComplexElement { re, im }
    }

    pub fn zero() -> Self {
        ComplexElement::default()
    }

    pub fn one() -> Self {
        ComplexElement::from_real(FieldElement::one())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        ComplexElement::new(FieldElement::zero(), FieldElement::one())
    }

    pub fn from_real(re: FieldElement) -> Self {
        ComplexElement {
            re,
            im: FieldElement::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        ComplexElement::from_real(FieldElement::from_int(n))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate.
    pub fn conj(&self) -> ComplexElement {
        ComplexElement {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `|z|^2 = re^2 + im^2`, an exact real field element.
    pub fn modulus_squared(&self) -> FieldElement {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    /// Multiplies both components by a real scalar.
    pub fn scale(&self, s: &FieldElement) -> ComplexElement {
        ComplexElement {
            re: &self.re * s,
            im: &self.im * s,
        }
    }

    pub fn scale_rational(&self, q: &Rational) -> ComplexElement {
        ComplexElement {
            re: self.re.scale(q),
            im: self.im.scale(q),
        }
    }

    /// Exact division by a real field element.
    pub fn div_real(&self, s: &FieldElement) -> Result<ComplexElement, DivisionByZero> {
        let inv = s.inv()?;
        Ok(self.scale(&inv))
    }

    /// Exact complex division via `z / w = z * conj(w) / |w|^2`.
    pub fn div(&self, rhs: &ComplexElement) -> Result<ComplexElement, DivisionByZero> {
        let norm = rhs.modulus_squared();
        if norm.is_zero() {
            return Err(DivisionByZero);
        }
        (self * &rhs.conj()).div_real(&norm)
    }

    /// Floating approximation `(re, im)`, for display only.
    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

macro_rules! forward_complex_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait for ComplexElement {
            type Output = ComplexElement;
            fn $method(self, rhs: ComplexElement) -> ComplexElement {
                std::ops::$trait::$method(&self, &rhs)
            }
        }
        impl std::ops::$trait<&ComplexElement> for ComplexElement {
            type Output = ComplexElement;
            fn $method(self, rhs: &ComplexElement) -> ComplexElement {
                std::ops::$trait::$method(&self, rhs)
            }
        }
    };
}

impl std::ops::Add for &ComplexElement {
    type Output = ComplexElement;
    fn add(self, rhs: &ComplexElement) -> ComplexElement {
        ComplexElement {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl std::ops::Sub for &ComplexElement {
    type Output = ComplexElement;
    fn sub(self, rhs: &ComplexElement) -> ComplexElement {
        ComplexElement {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl std::ops::Mul for &ComplexElement {
    type Output = ComplexElement;
    fn mul(self, rhs: &ComplexElement) -> ComplexElement {
        ComplexElement {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

forward_complex_binop!(Add, add);
forward_complex_binop!(Sub, sub);
forward_complex_binop!(Mul, mul);

impl std::ops::Neg for &ComplexElement {
    type Output = ComplexElement;
    fn neg(self) -> ComplexElement {
        ComplexElement {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl std::ops::Neg for ComplexElement {
    type Output = ComplexElement;
    fn neg(self) -> ComplexElement {
        -&self
    }
}

impl fmt::Display for ComplexElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "({})*i", self.im);
        }
        write!(f, "({}) + ({})*i", self.re, self.im)
    }
}

impl fmt::Debug for ComplexElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
