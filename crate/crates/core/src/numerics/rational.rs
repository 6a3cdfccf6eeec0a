//! Exact rational arithmetic and univariate rational polynomials.
//!
//! `Rational` is `num::BigRational`: arbitrary-precision, always stored in
//! lowest terms with a positive denominator, which is exactly the contract
//! the certificate checks rely on.

use crate::numerics::Interval;
use num::bigint::BigInt;
use num::traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

pub type Rational = num::BigRational;

/// Shorthand constructor used heavily by the certificate code.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Smallest interval (after outward verification) containing an exact rational.
pub(crate) fn rational_to_interval(x: &Rational) -> Interval {
    let approx = x.to_f64().expect("finite rational");
    let mut lo = approx;
    let mut hi = approx;
    // The to_f64 conversion is nearest-or-close; step outward until the
    // enclosure is proven by exact comparison.
    for _ in 0..8 {
        lo = lo.next_down();
        hi = hi.next_up();
        let lo_ok = Rational::from_float(lo).is_some_and(|l| &l <= x);
        let hi_ok = Rational::from_float(hi).is_some_and(|h| &h >= x);
        if lo_ok && hi_ok {
            return Interval::new(lo, hi);
        }
    }
    panic!("failed to enclose rational {x} in an interval");
}

/// Univariate polynomial with exact rational coefficients, ascending degree.
/// The zero polynomial has an empty coefficient list; otherwise the trailing
/// coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    pub fn zero() -> RationalPolynomial {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> RationalPolynomial {
        RationalPolynomial::from_coeffs(vec![c])
    }

    /// Polynomial from ascending coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> RationalPolynomial {
        let mut p = RationalPolynomial { coeffs };
        p.trim();
        p
    }

    /// Polynomial from ascending integer coefficients.
    pub fn from_int_coeffs(coeffs: &[i64]) -> RationalPolynomial {
        RationalPolynomial::from_coeffs(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn add(&self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        RationalPolynomial::from_coeffs(coeffs)
    }

    pub fn sub(&self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        RationalPolynomial::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> RationalPolynomial {
        RationalPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RationalPolynomial::from_coeffs(coeffs)
    }

    pub fn scale(&self, factor: &Rational) -> RationalPolynomial {
        RationalPolynomial::from_coeffs(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn pow(&self, exp: u32) -> RationalPolynomial {
        let mut acc = RationalPolynomial::constant(Rational::one());
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> RationalPolynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
            .collect();
        RationalPolynomial::from_coeffs(coeffs)
    }

    pub fn antiderivative(&self) -> RationalPolynomial {
        let mut coeffs = vec![Rational::zero()];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / Rational::from_integer(BigInt::from(i + 1)));
        }
        RationalPolynomial::from_coeffs(coeffs)
    }

    /// Exact definite integral over `[a, b]`.
    pub fn definite_integral(&self, a: &Rational, b: &Rational) -> Rational {
        let anti = self.antiderivative();
        anti.eval(b) - anti.eval(a)
    }

    /// Exact evaluation via Horner's scheme.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Substitute `x = s + shift`, returning the polynomial in `s`.
    pub fn shift_compose(&self, shift: &Rational) -> RationalPolynomial {
        // Horner in (s + shift): exact and O(n^2).
        let linear = RationalPolynomial::from_coeffs(vec![shift.clone(), Rational::one()]);
        let mut acc = RationalPolynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc
                .mul(&linear)
                .add(&RationalPolynomial::constant(c.clone()));
        }
        acc
    }

    /// Whether every coefficient is nonnegative.
    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})*x"),
                _ => format!("({c})*x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x_squared() -> RationalPolynomial {
        RationalPolynomial::from_int_coeffs(&[0, 0, 1])
    }

    #[test]
    fn derivative_of_square() {
        assert_eq!(
            x_squared().derivative(),
            RationalPolynomial::from_int_coeffs(&[0, 2])
        );
    }

    #[test]
    fn integral_of_square_over_half_interval() {
        let v = x_squared().definite_integral(&rat(0, 1), &rat(1, 2));
        assert_eq!(v, rat(1, 24));
    }

    #[test]
    fn shift_compose_square() {
        // (s + 1/2)^2 = s^2 + s + 1/4
        let shifted = x_squared().shift_compose(&rat(1, 2));
        assert_eq!(
            shifted,
            RationalPolynomial::from_coeffs(vec![rat(1, 4), rat(1, 1), rat(1, 1)])
        );
    }

    #[test]
    fn zero_polynomial_degree() {
        assert_eq!(RationalPolynomial::zero().degree(), None);
        assert_eq!(x_squared().degree(), Some(2));
    }

    #[test]
    fn rational_interval_enclosure_is_exact() {
        let x = rat(1, 3);
        let enc = rational_to_interval(&x);
        assert!(Rational::from_float(enc.lo()).unwrap() <= x);
        assert!(Rational::from_float(enc.hi()).unwrap() >= x);
        assert!(enc.width() < 1e-15);
    }

    proptest::proptest! {
        // (p + q)' = p' + q'
        #[test]
        fn derivative_is_linear(p in proptest::collection::vec(-20i64..20, 0..6),
                                q in proptest::collection::vec(-20i64..20, 0..6)) {
            let p = RationalPolynomial::from_int_coeffs(&p);
            let q = RationalPolynomial::from_int_coeffs(&q);
            proptest::prop_assert_eq!(p.add(&q).derivative(), p.derivative().add(&q.derivative()));
        }

        // Fundamental theorem: integral of p' over [0,1] = p(1) - p(0)
        #[test]
        fn ftc_on_unit_interval(p in proptest::collection::vec(-20i64..20, 0..6)) {
            let p = RationalPolynomial::from_int_coeffs(&p);
            let lhs = p.derivative().definite_integral(&rat(0, 1), &rat(1, 1));
            let rhs = p.eval(&rat(1, 1)) - p.eval(&rat(0, 1));
            proptest::prop_assert_eq!(lhs, rhs);
        }

        // shift_compose by a then -a is the identity, exactly
        #[test]
        fn shift_round_trip(p in proptest::collection::vec(-20i64..20, 0..6),
                            num in -12i64..12, den in 1i64..9) {
            let p = RationalPolynomial::from_int_coeffs(&p);
            let a = rat(num, den);
            proptest::prop_assert_eq!(p.shift_compose(&a).shift_compose(&(-a)), p);
        }
    }
}
