//! Certificate A2: the polynomial `G` has no zero in (0, 1], certified
//! through `G(0) > 0` and the three integral-ratio inequalities
//!
//! ```text
//! int (G')^2 / int G^2  <  pi^2          on [0, 1/2],
//! int (G')^2 / int G^2  <  4 pi^2        on [1/2, 3/4] and [3/4, 1].
//! ```
//!
//! A zero of `G` inside a subinterval would force the corresponding ratio
//! to reach the Neumann-bridge threshold, contradicting the certified
//! bound. The integrals are exact antiderivative evaluations of
//! interval-coefficient polynomials: the only width in the result comes
//! from the `pi^4` and `c_star^2` enclosures.

use crate::certificates::{CertificateReport, CheckResult};
use crate::numerics::{Constants, Interval, IntervalPolynomial, RationalPolynomial, Tristate};

/// `G(r) = 324 pi^4 (1 - c*^2)(5r^2 + 1)(1 + r)^2
///         - 144 pi^4 (1 + r^2)(1 + r)^4
///         - 2916 pi^4 r^2 (1 - c*^2)^2 + 8192 c*^2 (1 + r)^4`.
pub(super) fn g_polynomial(consts: &Constants) -> IntervalPolynomial {
    let one_r = RationalPolynomial::from_int_coeffs(&[1, 1]);
    let base_a = RationalPolynomial::from_int_coeffs(&[1, 0, 5]).mul(&one_r.pow(2));
    let base_b = RationalPolynomial::from_int_coeffs(&[1, 0, 1]).mul(&one_r.pow(4));
    let base_c = RationalPolynomial::from_int_coeffs(&[0, 0, 1]);
    let base_d = one_r.pow(4);

    let pi4 = consts.pi_fourth();
    let c2 = consts.c_star.square();
    let one_minus_c2 = Interval::ONE - c2;

    IntervalPolynomial::from_rational(&base_a)
        .scale(Interval::from_int(324) * pi4 * one_minus_c2)
        .sub(&IntervalPolynomial::from_rational(&base_b).scale(Interval::from_int(144) * pi4))
        .sub(
            &IntervalPolynomial::from_rational(&base_c)
                .scale(Interval::from_int(2916) * pi4 * one_minus_c2.square()),
        )
        .add(&IntervalPolynomial::from_rational(&base_d).scale(Interval::from_int(8192) * c2))
}

/// Enclosures of the three ratios, in subinterval order. `None` when the
/// denominator enclosure straddles zero.
pub(super) fn ratio_enclosures(consts: &Constants) -> [Option<Interval>; 3] {
    let g = g_polynomial(consts);
    let g2 = g.mul(&g);
    let gp = g.derivative();
    let gp2 = gp.mul(&gp);
    let breakpoints = [0.0, 0.5, 0.75, 1.0];
    let mut out = [None; 3];
    for k in 0..3 {
        let (a, b) = (
            Interval::point(breakpoints[k]),
            Interval::point(breakpoints[k + 1]),
        );
        let num = gp2.definite_integral(a, b);
        let den = g2.definite_integral(a, b);
        out[k] = match (num, den) {
            (Ok(n), Ok(d)) if d.certified_gt(Interval::ZERO) == Tristate::True => n.div(d).ok(),
            _ => None,
        };
    }
    out
}

pub(super) fn certify(consts: &Constants) -> CertificateReport {
    let mut checks = Vec::new();

    let g = g_polynomial(consts);
    let g0 = g.coeff(0);
    checks.push(CheckResult::from_tristate(
        "g_at_zero_positive",
        g0.certified_gt(Interval::ZERO),
        g0,
    ));

    let pi2 = consts.pi_squared();
    let bounds = [
        pi2,
        Interval::from_int(4) * pi2,
        Interval::from_int(4) * pi2,
    ];
    let names = ["ratio1_lt_pi2", "ratio2_lt_4pi2", "ratio3_lt_4pi2"];
    for (k, ratio) in ratio_enclosures(consts).into_iter().enumerate() {
        match ratio {
            Some(r) => checks.push(CheckResult::from_tristate(
                names[k],
                r.certified_lt(bounds[k]),
                r,
            )),
            None => checks.push(CheckResult::undetermined(names[k])),
        }
    }

    CertificateReport::new("A2", checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificates::{CheckStatus, OverallStatus};
    use crate::numerics::constants;

    #[test]
    fn a2_passes_with_default_constants() {
        let report = certify(constants());
        assert_eq!(report.overall, OverallStatus::Pass, "{}", report.to_json());
        for check in &report.checks {
            assert_eq!(check.status, CheckStatus::PassEnclosure, "{}", check.name);
        }
    }

    #[test]
    fn g_at_zero_matches_reference() {
        // 13342.408842115118821 from an independent 40-digit evaluation
        let g0 = g_polynomial(constants()).coeff(0);
        assert!(g0.contains(13342.40884211512), "{g0}");
        assert!(g0.width() < 1e-6);
    }

    #[test]
    fn ratios_match_reference_digits() {
        // Reference values from an independent 60-digit evaluation.
        let expected = [7.2876125741964, 29.7612643101344, 9.11554368152878];
        let ratios = ratio_enclosures(constants());
        for (ratio, e) in ratios.into_iter().zip(expected) {
            let r = ratio.unwrap();
            assert!(r.contains(e), "{r} should contain {e}");
            assert!(r.width() <= 1e-4, "width {}", r.width());
            assert!(
                (r.midpoint() - e).abs() <= 2e-6 * e,
                "midpoint off: {r} vs {e}"
            );
        }
    }

    #[test]
    fn fundamental_theorem_holds_for_g_squared() {
        // int_a^b (G^2)' = G(b)^2 - G(a)^2 as overlapping enclosures
        let g = g_polynomial(constants());
        let g2 = g.mul(&g);
        let (a, b) = (Interval::point(0.25), Interval::point(0.75));
        let lhs = g2.derivative().definite_integral(a, b).unwrap();
        let rhs = g.eval(b).square() - g.eval(a).square();
        assert!(
            lhs.lo() <= rhs.hi() && rhs.lo() <= lhs.hi(),
            "{lhs} vs {rhs}"
        );
    }

    #[test]
    fn widened_constants_undetermine_ratios() {
        let widened = constants().widened(0.05).unwrap();
        let report = certify(&widened);
        assert_ne!(report.overall, OverallStatus::Fail);
    }
}
