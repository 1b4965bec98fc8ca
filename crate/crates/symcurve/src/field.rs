//! Exact arithmetic in multi-quadratic extensions of the rationals.
//!
//! Every quantity the detectors manipulate lives in a field
//! `Q(sqrt(d1), ..., sqrt(dk))` generated by the square roots appearing in
//! the input curve.  An element is stored as the finite sum
//! `sum q_d * sqrt(d)` over squarefree radicands `d >= 1` (the `d = 1`
//! term is the rational part).  Because the representation is canonical,
//! equality — and in particular the question "is this exactly zero?" — is
//! a structural comparison, never a numeric judgement call.
//!
//! Ordering of irrational elements is deliberately not provided: no
//! algorithm in this crate needs sign comparisons beyond exact zero tests
//! and signs of plain rationals.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number (always reduced, denominator positive).
pub type Rational = BigRational;

/// Division by zero in an exact field operation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("division by zero in exact field arithmetic")]
pub struct DivisionByZero;

/// An element of a multi-quadratic extension of Q.
///
/// Invariants: every radicand key is squarefree and >= 1, and no stored
/// coefficient is zero.  The empty sum is zero.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct FieldElement {
    terms: BTreeMap<u64, Rational>,
}

/// Splits `n` into `(s, m)` with `n = s^2 * m` and `m` squarefree.
fn squarefree_decompose(n: u64) -> (u64, u64) {
    let mut square_root = 1u64;
    let mut rest = n;
    let mut d = 2u64;
    while d * d <= rest {
        while rest % (d * d) == 0 {
            rest /= d * d;
            square_root *= d;
        }
        d += 1;
    }
    (square_root, rest)
}

/// Distinct prime factors of `n`, ascending.
fn prime_factors(n: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut rest = n;
    let mut d = 2u64;
    while d * d <= rest {
        if rest % d == 0 {
            primes.push(d);
            while rest % d == 0 {
                rest /= d;
            }
        }
        d += 1;
    }
    if rest > 1 {
        primes.push(rest);
    }
    primes
}

impl FieldElement {
    /// The additive identity.
    pub fn zero() -> Self {
        FieldElement {
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative identity.
    pub fn one() -> Self {
        FieldElement::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        FieldElement::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// The rational `num / den`.  Panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        FieldElement::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(q: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(1, q);
        }
        FieldElement { terms }
    }

    /// The exact square root of the non-negative integer `n`.
    ///
    /// The radicand is reduced to its squarefree core, so `sqrt(12)`
    /// is stored as `2 * sqrt(3)` and `sqrt(4)` as the rational `2`.
    pub fn sqrt(n: u64) -> Self {
        if n == 0 {
            return FieldElement::zero();
        }
        let (square_root, core) = squarefree_decompose(n);
        let coeff = Rational::from_integer(BigInt::from(square_root));
        let mut terms = BTreeMap::new();
        terms.insert(core, coeff);
        FieldElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().map_or(false, |q| q.is_one())
    }

    /// True when the element lies in Q itself.
    pub fn is_rational(&self) -> bool {
        self.terms.keys().all(|&d| d == 1)
    }

    /// The element as a rational number, if it is one.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(q) = self.terms.get(&1) {
                return Some(q.clone());
            }
        }
        None
    }

    /// The coefficient attached to `sqrt(d)` (zero if absent).
    /// `d` must be squarefree for the answer to be meaningful.
    pub fn coefficient_of(&self, d: u64) -> Rational {
        self.terms.get(&d).cloned().unwrap_or_else(Rational::zero)
    }

    fn insert_term(terms: &mut BTreeMap<u64, Rational>, d: u64, q: Rational) {
        if q.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match terms.entry(d) {
            Entry::Vacant(slot) => {
                slot.insert(q);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get() + q;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    fn add_ref(&self, rhs: &FieldElement) -> FieldElement {
        let mut terms = self.terms.clone();
        for (&d, q) in &rhs.terms {
            Self::insert_term(&mut terms, d, q.clone());
        }
        FieldElement { terms }
    }

    fn neg_ref(&self) -> FieldElement {
        let terms = self
            .terms
            .iter()
            .map(|(&d, q)| (d, -q.clone()))
            .collect();
        FieldElement { terms }
    }

    fn mul_ref(&self, rhs: &FieldElement) -> FieldElement {
        let mut terms = BTreeMap::new();
        for (&d1, q1) in &self.terms {
            for (&d2, q2) in &rhs.terms {
                // sqrt(d1) * sqrt(d2) = g * sqrt((d1/g) * (d2/g)) with
                // g = gcd(d1, d2); both factors stay squarefree, so the
                // product radicand is squarefree too.
                let g = d1.gcd(&d2);
                let d = (d1 / g)
                    .checked_mul(d2 / g)
                    .expect("radicand overflow in field multiplication");
                let q = q1 * q2 * Rational::from_integer(BigInt::from(g));
                Self::insert_term(&mut terms, d, q);
            }
        }
        FieldElement { terms }
    }

    /// Multiplies by a plain rational scalar.
    pub fn scale(&self, q: &Rational) -> FieldElement {
        if q.is_zero() {
            return FieldElement::zero();
        }
        let terms = self.terms.iter().map(|(&d, c)| (d, c * q)).collect();
        FieldElement { terms }
    }

    /// The exact multiplicative inverse.
    ///
    /// Works one prime radicand at a time: writing `a = u + sqrt(p) * v`
    /// with `u`, `v` free of `p`, the conjugate identity
    /// `1/a = (u - sqrt(p) * v) / (u^2 - p * v^2)` pushes the inversion
    /// down into the subfield without `sqrt(p)`.  The denominator is
    /// never zero because `sqrt(p)` is irrational over that subfield.
    pub fn inv(&self) -> Result<FieldElement, DivisionByZero> {
        if self.is_zero() {
            return Err(DivisionByZero);
        }
        let mut primes = Vec::new();
        for &d in self.terms.keys() {
            for p in prime_factors(d) {
                if !primes.contains(&p) {
                    primes.push(p);
                }
            }
        }
        Ok(inv_with_primes(self, &primes))
    }

    /// Exact division.  Fails only when `rhs` is zero.
    pub fn div(&self, rhs: &FieldElement) -> Result<FieldElement, DivisionByZero> {
        Ok(self.mul_ref(&rhs.inv()?))
    }

    /// Floating approximation, for display and JSON companions only.
    pub fn to_f64(&self) -> f64 {
        let sum: f64 = self
            .terms
            .iter()
            .map(|(&d, q)| q.to_f64().unwrap_or(f64::NAN) * (d as f64).sqrt())
            .sum();
        // The empty sum is the float additive identity -0.0; exact zero
        // should surface as plain 0.0 in JSON and logs.
        sum + 0.0
    }

    /// Sign of a rational element (`None` when the element is irrational).
    pub fn rational_sign(&self) -> Option<i32> {
        self.as_rational().map(|q| {
            if q.is_zero() {
                0
            } else if q.is_positive() {
                1
            } else {
                -1
            }
        })
    }

    #[cfg(test)]
    fn invariants_hold(&self) -> bool {
        self.terms.iter().all(|(&d, q)| {
            let (s, core) = squarefree_decompose(d);
            d >= 1 && s == 1 && core == d && !q.is_zero()
        })
    }
}

/// Recursive conjugation step of [`FieldElement::inv`].
fn inv_with_primes(a: &FieldElement, primes: &[u64]) -> FieldElement {
    let Some((&p, rest)) = primes.split_first() else {
        let q = a
            .as_rational()
            .expect("element with no radical primes must be rational");
        return FieldElement::from_rational(q.recip());
    };
    let mut u = BTreeMap::new();
    let mut v = BTreeMap::new();
    for (&d, q) in &a.terms {
        if d % p == 0 {
            v.insert(d / p, q.clone());
        } else {
            u.insert(d, q.clone());
        }
    }
    let u = FieldElement { terms: u };
    let v = FieldElement { terms: v };
    let p_elem = FieldElement::from_int(p as i64);
    let denom = &(&u * &u) - &(&p_elem * &(&v * &v));
    assert!(
        !denom.is_zero(),
        "conjugate norm vanished; radicand normalization is broken"
    );
    let denom_inv = inv_with_primes(&denom, rest);
    // (u - sqrt(p) * v) * denom_inv
    let sqrt_p_v = FieldElement {
        terms: v.terms.iter().map(|(&d, q)| (d * p, q.clone())).collect(),
    };
    (&u - &sqrt_p_v) * &denom_inv
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $base:ident) => {
        impl std::ops::$trait for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$base(rhs)
            }
        }
        impl std::ops::$trait for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$base(&rhs)
            }
        }
        impl std::ops::$trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$base(rhs)
            }
        }
    };
}

impl FieldElement {
    fn sub_ref(&self, rhs: &FieldElement) -> FieldElement {
        self.add_ref(&rhs.neg_ref())
    }
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_ref()
    }
}

impl std::ops::Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_ref()
    }
}

impl fmt::Display for FieldElement {
    /// Canonical exact rendering, e.g. `-1/2 + 3*sqrt(2)`.
    ///
    /// The output re-parses (via the expression grammar) to the identical
    /// element: rational part first, then radical terms by ascending
    /// radicand.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&d, q) in &self.terms {
            let (sign, magnitude) = if q.is_negative() {
                ("-", -q.clone())
            } else {
                ("+", q.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            if d == 1 {
                write!(f, "{}", magnitude)?;
            } else if magnitude.is_one() {
                write!(f, "sqrt({})", d)?;
            } else {
                write!(f, "{}*sqrt({})", magnitude, d)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
