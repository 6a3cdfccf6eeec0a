//! Univariate polynomials with interval coefficients.
//!
//! These carry the enclosure guarantee through polynomial algebra: every
//! operation encloses the corresponding exact operation on any member
//! polynomial, so a certified sign of an integral or an evaluation is a
//! statement about all real polynomials compatible with the coefficients.

use crate::error::Result;
use crate::numerics::rational::rational_to_interval;
use crate::numerics::{Interval, RationalPolynomial};

/// Polynomial with interval coefficients, ascending degree.
#[derive(Debug, Clone)]
pub struct IntervalPolynomial {
    coeffs: Vec<Interval>,
}

impl IntervalPolynomial {
    pub fn zero() -> IntervalPolynomial {
        IntervalPolynomial { coeffs: Vec::new() }
    }

    pub fn from_coeffs(coeffs: Vec<Interval>) -> IntervalPolynomial {
        IntervalPolynomial { coeffs }
    }

    /// Degenerate enclosure of an exact rational polynomial.
    pub fn from_rational(p: &RationalPolynomial) -> IntervalPolynomial {
        IntervalPolynomial {
            coeffs: p.coeffs().iter().map(rational_to_interval).collect(),
        }
    }

    pub fn coeff(&self, i: usize) -> Interval {
        self.coeffs.get(i).copied().unwrap_or(Interval::ZERO)
    }

    pub fn coeffs(&self) -> &[Interval] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, rhs: &IntervalPolynomial) -> IntervalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntervalPolynomial {
            coeffs: (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect(),
        }
    }

    pub fn sub(&self, rhs: &IntervalPolynomial) -> IntervalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntervalPolynomial {
            coeffs: (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect(),
        }
    }

    pub fn mul(&self, rhs: &IntervalPolynomial) -> IntervalPolynomial {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return IntervalPolynomial::zero();
        }
        let mut coeffs = vec![Interval::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j] + a * b;
            }
        }
        IntervalPolynomial { coeffs }
    }

    pub fn scale(&self, factor: Interval) -> IntervalPolynomial {
        IntervalPolynomial {
            coeffs: self.coeffs.iter().map(|&c| c * factor).collect(),
        }
    }

    pub fn derivative(&self) -> IntervalPolynomial {
        IntervalPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| c * Interval::from_int(i as i64))
                .collect(),
        }
    }

    pub fn antiderivative(&self) -> IntervalPolynomial {
        let mut coeffs = vec![Interval::ZERO];
        for (i, &c) in self.coeffs.iter().enumerate() {
            // Division by a positive integer point interval never fails.
            coeffs.push(
                c.div(Interval::from_int(i as i64 + 1))
                    .expect("positive divisor"),
            );
        }
        IntervalPolynomial { coeffs }
    }

    /// Enclosure of the polynomial's value(s) over the argument interval,
    /// summed monomial by monomial.
    pub fn eval(&self, x: Interval) -> Interval {
        let mut acc = Interval::ZERO;
        let mut power = Interval::ONE;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                power = power * x;
            }
            acc = acc + c * power;
        }
        acc
    }

    /// Enclosure of the definite integral over `[a, b]`.
    pub fn definite_integral(&self, a: Interval, b: Interval) -> Result<Interval> {
        let anti = self.antiderivative();
        Ok(anti.eval(b) - anti.eval(a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rat;

    #[test]
    fn eval_encloses_exact_value() {
        // p(x) = 1 - 3x + x^2 at x = 1/2 is -1/4
        let p =
            IntervalPolynomial::from_rational(&RationalPolynomial::from_int_coeffs(&[1, -3, 1]));
        let v = p.eval(Interval::point(0.5));
        assert!(v.contains(-0.25));
        assert!(v.width() < 1e-14);
    }

    #[test]
    fn integral_matches_exact_rational_integral() {
        let p_exact = RationalPolynomial::from_int_coeffs(&[0, 0, 1]);
        let p = IntervalPolynomial::from_rational(&p_exact);
        let v = p
            .definite_integral(Interval::ZERO, Interval::point(0.5))
            .unwrap();
        let exact = p_exact.definite_integral(&rat(0, 1), &rat(1, 2));
        assert!(v.contains(num::traits::ToPrimitive::to_f64(&exact).unwrap()));
    }

    #[test]
    fn product_rule_enclosure() {
        // (p^2)' and 2 p p' must overlap as enclosures of the same polynomial
        let p =
            IntervalPolynomial::from_rational(&RationalPolynomial::from_int_coeffs(&[2, -1, 4]));
        let lhs = p.mul(&p).derivative();
        let rhs = p.derivative().mul(&p).scale(Interval::point(2.0));
        for i in 0..lhs.len().max(rhs.len()) {
            let (a, b) = (lhs.coeff(i), rhs.coeff(i));
            assert!(
                a.lo() <= b.hi() && b.lo() <= a.hi(),
                "coefficient {i} disjoint"
            );
        }
    }
}
