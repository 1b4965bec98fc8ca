//! Dense univariate polynomials over an exact coefficient ring.
//!
//! `Poly<T>` stores coefficients in ascending order of power with the
//! invariant that the last stored coefficient is nonzero (the zero
//! polynomial stores nothing).  The coefficient ring is abstracted by
//! [`Coeff`] so the same code serves real polynomials, complex
//! polynomials, and nested polynomials (polynomials whose coefficients
//! are themselves polynomials, used by the bivariate gcd).
//!
//! The linear substitution `p(alpha*t + beta)` is implemented twice on
//! purpose: a Horner-style fast path ([`Poly::compose_linear`]) and an
//! explicit binomial-expansion reference path
//! ([`Poly::compose_linear_binomial`]).  The detectors use one route and
//! the verification oracle the other, so an error in either would show up
//! as a disagreement rather than a silently shared bug.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::complex::ComplexElement;
use crate::field::{FieldElement, Rational};

/// Ring operations needed for polynomial coefficients.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplication by a non-negative integer scalar (used for binomial
    /// coefficients, which can far exceed machine size).
    fn mul_nat(&self, n: &BigInt) -> Self;
}

impl Coeff for FieldElement {
    fn zero() -> Self {
        FieldElement::zero()
    }
    fn one() -> Self {
        FieldElement::one()
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul_nat(&self, n: &BigInt) -> Self {
        self.scale(&Rational::from_integer(n.clone()))
    }
}

impl Coeff for ComplexElement {
    fn zero() -> Self {
        ComplexElement::zero()
    }
    fn one() -> Self {
        ComplexElement::one()
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul_nat(&self, n: &BigInt) -> Self {
        self.scale_rational(&Rational::from_integer(n.clone()))
    }
}

/// A dense univariate polynomial; see the module docs for invariants.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<T: Coeff> {
    coeffs: Vec<T>,
}

pub type RealPoly = Poly<FieldElement>;
pub type ComplexPoly = Poly<ComplexElement>;

impl<T: Coeff> Poly<T> {
    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros to restore the representation invariant.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().map_or(false, Coeff::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// The identity polynomial `t`.
    pub fn identity() -> Self {
        Poly::monomial(T::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficient slice (empty for zero).
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// The coefficient of `t^k`, zero-padded beyond the degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.coeffs.get(k);
            let b = rhs.coeffs.get(k);
            coeffs.push(match (a, b) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::new(coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(Coeff::neg).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Poly::new(coeffs)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// `self * t^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// `self^k` by repeated squaring.
    pub fn pow(&self, k: u32) -> Self {
        let mut result = Poly::constant(T::one());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Horner evaluation at `x`.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// `self * (alpha*t + beta)` in one pass.
    fn mul_linear(&self, alpha: &T, beta: &T) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let n = self.coeffs.len();
        let mut coeffs = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let from_beta = self.coeffs.get(k).map(|c| c.mul(beta));
            let from_alpha = k.checked_sub(1).and_then(|j| self.coeffs.get(j)).map(|c| c.mul(alpha));
            coeffs.push(match (from_beta, from_alpha) {
                (Some(a), Some(b)) => a.add(&b),
                (Some(a), None) | (None, Some(a)) => a,
                (None, None) => T::zero(),
            });
        }
        Poly::new(coeffs)
    }

    /// The substitution `p(alpha*t + beta)`, computed by a nested Horner
    /// scheme: fold the coefficients from the top, multiplying the
    /// accumulator by `alpha*t + beta` at each step.  This is the fast
    /// path; [`Poly::compose_linear_binomial`] is the independent
    /// reference implementation.
    pub fn compose_linear(&self, alpha: &T, beta: &T) -> Self {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_linear(alpha, beta).add(&Poly::constant(c.clone()));
        }
        acc
    }

    /// The substitution `p(alpha*t + beta)` by direct binomial expansion:
    /// the coefficient of `t^i` is `alpha^i * sum_{k>=i} p_k * C(k,i) *
    /// beta^(k-i)`, with binomial coefficients maintained incrementally as
    /// exact big integers.
    pub fn compose_linear_binomial(&self, alpha: &T, beta: &T) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let n = self.coeffs.len() - 1;
        let mut beta_pows = Vec::with_capacity(n + 1);
        beta_pows.push(T::one());
        for k in 1..=n {
            beta_pows.push(beta_pows[k - 1].mul(beta));
        }
        let mut alpha_pow = T::one();
        let mut coeffs = Vec::with_capacity(n + 1);
        for i in 0..=n {
            // binom runs over C(k, i) for k = i..=n.
            let mut binom = BigInt::one();
            let mut sum = T::zero();
            for k in i..=n {
                if k > i {
                    // C(k, i) = C(k-1, i) * k / (k - i), an exact division.
                    binom = binom * BigInt::from(k) / BigInt::from(k - i);
                }
                let c = &self.coeffs[k];
                if !c.is_zero() {
                    sum = sum.add(&c.mul(&beta_pows[k - i]).mul_nat(&binom));
                }
            }
            coeffs.push(sum.mul(&alpha_pow));
            if i < n {
                alpha_pow = alpha_pow.mul(alpha);
            }
        }
        Poly::new(coeffs)
    }
}

impl<T: Coeff> Coeff for Poly<T> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::constant(T::one())
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn neg(&self) -> Self {
        self.neg()
    }
    fn mul_nat(&self, n: &BigInt) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.mul_nat(n)).collect())
    }
}

impl ComplexPoly {
    /// Lifts a real polynomial to a complex one.
    pub fn from_real(p: &RealPoly) -> Self {
        Poly::new(
            p.coeffs()
                .iter()
                .map(|c| ComplexElement::from_real(c.clone()))
                .collect(),
        )
    }

    /// Builds `z(t) = x(t) + i*y(t)` from the real coordinate polynomials.
    pub fn from_real_imag(x: &RealPoly, y: &RealPoly) -> Self {
        let n = x.coeffs().len().max(y.coeffs().len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(ComplexElement::new(x.coeff(k), y.coeff(k)));
        }
        Poly::new(coeffs)
    }

    /// Splits back into `(x, y)` with `z = x + i*y`.
    pub fn real_imag(&self) -> (RealPoly, RealPoly) {
        let re = Poly::new(self.coeffs().iter().map(|c| c.re.clone()).collect());
        let im = Poly::new(self.coeffs().iter().map(|c| c.im.clone()).collect());
        (re, im)
    }

    /// Conjugates every coefficient, i.e. computes `conj(z)(t)` for real `t`.
    pub fn conjugate(&self) -> Self {
        Poly::new(self.coeffs().iter().map(ComplexElement::conj).collect())
    }

    /// Multiplies every coefficient by the real scalar `s`.
    pub fn scale_real(&self, s: &FieldElement) -> Self {
        Poly::new(self.coeffs().iter().map(|c| c.scale(s)).collect())
    }
}

impl<T: Coeff + fmt::Display> fmt::Display for Poly<T> {
    /// Canonical rendering in descending powers with explicit `*`, e.g.
    /// `8*t^3 + 12*t^2 + 6*t + 1`.  Compound or negative coefficients are
    /// parenthesized so the output re-parses under the curve grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            let rendered = c.to_string();
            let needs_parens = rendered.contains(' ') || (!first && rendered.starts_with('-'));
            let coeff_part = if needs_parens {
                format!("({})", rendered)
            } else {
                rendered.clone()
            };
            match k {
                0 => write!(f, "{}", coeff_part)?,
                _ => {
                    if rendered == "1" {
                        write!(f, "t")?;
                    } else {
                        write!(f, "{}*t", coeff_part)?;
                    }
                    if k > 1 {
                        write!(f, "^{}", k)?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl<T: Coeff> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}
