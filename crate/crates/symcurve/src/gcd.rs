//! Exact polynomial gcds: univariate over the field, and bivariate via a
//! primitive pseudo-remainder sequence.
//!
//! The bivariate gcd degree of `x(t) - x(s)` and `y(t) - y(s)` is the
//! tracing index of the parametrization `(x, y)`: it is 1 exactly when
//! the parametrization is proper (injective for almost every parameter
//! value), and otherwise counts how many times the curve is traced.

use crate::field::FieldElement;
use crate::poly::{Poly, RealPoly};

/// Polynomials in `t` whose coefficients are polynomials in `s`.
pub type NestedPoly = Poly<RealPoly>;

/// Long division over field coefficients: returns `(quotient, remainder)`
/// with `num = quotient * den + remainder` and `deg remainder < deg den`.
/// Panics if `den` is zero.
pub fn div_rem(num: &RealPoly, den: &RealPoly) -> (RealPoly, RealPoly) {
    let d = den.degree().expect("polynomial division by zero");
    let lead_inv = den
        .leading()
        .expect("nonzero polynomial has a leading coefficient")
        .inv()
        .expect("leading coefficient is nonzero by the representation invariant");
    let mut rem = num.clone();
    let mut quot = vec![FieldElement::zero(); num.coeffs().len().saturating_sub(d)];
    while let Some(r) = rem.degree() {
        if r < d {
            break;
        }
        let factor = rem.leading().unwrap() * &lead_inv;
        let k = r - d;
        quot[k] = factor.clone();
        rem = rem.sub(&den.scale(&factor).shift_up(k));
    }
    (Poly::new(quot), rem)
}

/// Monic greatest common divisor by the Euclidean algorithm.  Each
/// remainder is rescaled to be monic, which both canonicalizes the result
/// and keeps rational coefficient growth in check.
pub fn gcd_univariate(a: &RealPoly, b: &RealPoly) -> RealPoly {
    let mut f = make_monic(a);
    let mut g = make_monic(b);
    while !g.is_zero() {
        let (_, r) = div_rem(&f, &g);
        f = g;
        g = make_monic(&r);
    }
    f
}

fn make_monic(p: &RealPoly) -> RealPoly {
    match p.leading() {
        None => RealPoly::zero(),
        Some(lead) => {
            if lead.is_one() {
                p.clone()
            } else {
                p.scale(&lead.inv().expect("leading coefficient is nonzero"))
            }
        }
    }
}

/// The `t`-degree of `gcd(x(t) - x(s), y(t) - y(s))`, i.e. the tracing
/// index of the parametrization.  Requires at least one of `x`, `y` to be
/// nonconstant.
pub fn bivariate_gcd_degree(x: &RealPoly, y: &RealPoly) -> usize {
    let f = parameter_difference(x);
    let g = parameter_difference(y);
    let gcd = nested_gcd(f, g);
    gcd.degree()
        .expect("gcd of polynomials that are not both zero is nonzero")
}

/// `p(t) - p(s)` as a polynomial in `t` over `F[s]`.
fn parameter_difference(p: &RealPoly) -> NestedPoly {
    if p.is_zero() || p.degree() == Some(0) {
        return NestedPoly::zero();
    }
    let mut coeffs: Vec<RealPoly> = Vec::new();
    // Constant t-coefficient: p_0 - p(s) = -(sum over j >= 1 of p_j s^j).
    coeffs.push(RealPoly::constant(p.coeff(0)).sub(p));
    for i in 1..=p.degree().unwrap() {
        coeffs.push(RealPoly::constant(p.coeff(i)));
    }
    Poly::new(coeffs)
}

/// Content of a nested polynomial: the monic gcd of its `t`-coefficients
/// as polynomials in `s`.
fn content(f: &NestedPoly) -> RealPoly {
    let mut c = RealPoly::zero();
    for coeff in f.coeffs() {
        c = gcd_univariate(&c, coeff);
        if c.degree() == Some(0) {
            break;
        }
    }
    c
}

/// Divides out the content, leaving a primitive polynomial.
fn primitive_part(f: &NestedPoly) -> NestedPoly {
    if f.is_zero() {
        return NestedPoly::zero();
    }
    let c = content(f);
    if c.degree() == Some(0) && c.leading().map_or(false, FieldElement::is_one) {
        return f.clone();
    }
    let coeffs = f
        .coeffs()
        .iter()
        .map(|coeff| {
            let (q, r) = div_rem(coeff, &c);
            assert!(r.is_zero(), "content must divide every coefficient");
            q
        })
        .collect();
    Poly::new(coeffs)
}

/// Fraction-free pseudo-remainder: repeatedly scales by the leading
/// coefficient of `g` so the division needs no coefficient inverses.
fn pseudo_rem(f: &NestedPoly, g: &NestedPoly) -> NestedPoly {
    let d_g = g.degree().expect("pseudo-division by zero");
    let lc_g = g.leading().unwrap().clone();
    let mut r = f.clone();
    while let Some(d_r) = r.degree() {
        if d_r < d_g {
            break;
        }
        let lc_r = r.leading().unwrap().clone();
        r = r.scale(&lc_g).sub(&g.scale(&lc_r).shift_up(d_r - d_g));
    }
    r
}

/// Primitive pseudo-remainder sequence; returns a gcd up to content,
/// which is all the degree queries need.
fn nested_gcd(f: NestedPoly, g: NestedPoly) -> NestedPoly {
    let mut f = primitive_part(&f);
    let mut g = primitive_part(&g);
    while !g.is_zero() {
        if f.degree() < g.degree() {
            std::mem::swap(&mut f, &mut g);
            continue;
        }
        let r = pseudo_rem(&f, &g);
        f = g;
        g = primitive_part(&r);
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fe(n: i64) -> FieldElement {
        FieldElement::from_int(n)
    }

    fn real_poly(coeffs: &[i64]) -> RealPoly {
        Poly::new(coeffs.iter().map(|&c| fe(c)).collect())
    }

    #[test]
    fn gcd_of_shared_factor() {
        // gcd(t^2 - 1, t - 1) = t - 1
        let g = gcd_univariate(&real_poly(&[-1, 0, 1]), &real_poly(&[-1, 1]));
        assert_eq!(g, real_poly(&[-1, 1]));
    }

    #[test]
    fn gcd_of_coprime_polynomials_is_one() {
        let g = gcd_univariate(&real_poly(&[1, 0, 1]), &real_poly(&[-1, 1]));
        assert_eq!(g, real_poly(&[1]));
    }

    #[test]
    fn gcd_with_zero_returns_the_other_argument_monic() {
        let g = gcd_univariate(&RealPoly::zero(), &real_poly(&[2, 4]));
        assert_eq!(g, real_poly(&[1, 2]).scale(&FieldElement::from_ratio(1, 2)));
    }

    #[test]
    fn tracing_index_of_injective_parametrizations_is_one() {
        assert_eq!(bivariate_gcd_degree(&real_poly(&[0, 1]), &real_poly(&[0, 0, 1])), 1);
        assert_eq!(bivariate_gcd_degree(&real_poly(&[0, 0, 1]), &real_poly(&[0, 0, 0, 1])), 1);
    }

    #[test]
    fn tracing_index_counts_the_repeated_substitution() {
        // (t^2, t^4) traces (u, u^2) twice.
        assert_eq!(bivariate_gcd_degree(&real_poly(&[0, 0, 1]), &real_poly(&[0, 0, 0, 0, 1])), 2);
        // (t^3, t^6) traces it three times.
        assert_eq!(
            bivariate_gcd_degree(
                &real_poly(&[0, 0, 0, 1]),
                &real_poly(&[0, 0, 0, 0, 0, 0, 1])
            ),
            3
        );
    }

    #[test]
    fn tracing_index_of_a_composite_parametrization() {
        // x = h^2, y = h^3 + h with h = t^2 + 1: every point is hit twice.
        let h = real_poly(&[1, 0, 1]);
        let x = h.pow(2);
        let y = h.pow(3).add(&h);
        assert_eq!(bivariate_gcd_degree(&x, &y), 2);
    }

    #[test]
    fn radical_coefficients_are_handled_exactly() {
        // x = sqrt(2) * t^2, y = t^3 is proper.
        let x = Poly::new(vec![fe(0), fe(0), FieldElement::sqrt(2)]);
        let y = real_poly(&[0, 0, 0, 1]);
        assert_eq!(bivariate_gcd_degree(&x, &y), 1);
    }

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = RealPoly> {
        proptest::collection::vec(-6i64..=6, 0..=max_deg + 1)
            .prop_map(|cs| Poly::new(cs.into_iter().map(fe).collect()))
    }

    proptest! {
        #[test]
        fn division_reconstructs_the_dividend(num in arb_poly(7), den in arb_poly(4)) {
            prop_assume!(!den.is_zero());
            let (q, r) = div_rem(&num, &den);
            prop_assert_eq!(q.mul(&den).add(&r), num);
            if let (Some(dr), Some(dd)) = (r.degree(), den.degree()) {
                prop_assert!(dr < dd);
            }
        }

        #[test]
        fn gcd_divides_both_arguments(a in arb_poly(5), b in arb_poly(5)) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let g = gcd_univariate(&a, &b);
            let (_, ra) = div_rem(&a, &g);
            let (_, rb) = div_rem(&b, &g);
            prop_assert!(ra.is_zero());
            prop_assert!(rb.is_zero());
        }
    }
}
