//! Certificate A4: negativity of
//! `S(r) = 3 pi^2 (5r^2+1) - sqrt(9 pi^4 (3r^2-1)^2 - 128 (16r^4-40r^2+9))
//!         - 27 pi^2 (r^2+3/4)^2 / (2 (r+1)^2)`
//! on `(1/2, r_star]`, via convexity: `S(1/2) = 0`, `S(r_star) < 0`, and
//! `S'' > 0` on the interval through the split `S = S_1 + S_2 + S_3` with
//! `S_1'' > S_1''(1/2) = -20 pi^2` (since `S_1''' > 0`), `S_2'' = 30 pi^2`,
//! and `S_3'' > S_3''(r_star)` (since `S_3''' < 0`).

use crate::certificates::{CertificateReport, CheckResult, CheckStatus};
use crate::error::Result;
use crate::numerics::{rat, Constants, Interval, RationalPolynomial, Tristate};
use std::f64::consts::PI;

// ---------------------------------------------------------------------------
// Plain f64 evaluation (plots and finite-difference validation)
// ---------------------------------------------------------------------------

pub(crate) fn s1_f64(r: f64) -> f64 {
    let t = r * r + 0.75;
    -27.0 * PI * PI * t * t / (2.0 * (r + 1.0) * (r + 1.0))
}

pub(crate) fn s2_f64(r: f64) -> f64 {
    3.0 * PI * PI * (5.0 * r * r + 1.0)
}

pub(crate) fn s3_f64(r: f64) -> f64 {
    -s3_radicand_f64(r).sqrt()
}

fn s3_radicand_f64(r: f64) -> f64 {
    let r2 = r * r;
    let t = 3.0 * r2 - 1.0;
    9.0 * PI.powi(4) * t * t - 128.0 * (16.0 * r2 * r2 - 40.0 * r2 + 9.0)
}

/// `S(r)` in plain floating point.
pub fn s_f64(r: f64) -> f64 {
    s1_f64(r) + s2_f64(r) + s3_f64(r)
}

/// Closed form of `S_1''`.
#[cfg(test)]
pub(crate) fn s1pp_f64(r: f64) -> f64 {
    let num = 16.0 * r.powi(4) + 64.0 * r.powi(3) + 96.0 * r * r - 48.0 * r + 51.0;
    -27.0 * PI * PI * num / (16.0 * (r + 1.0).powi(4))
}

/// Closed form of `S_3''`.
#[cfg(test)]
pub(crate) fn s3pp_f64(r: f64) -> f64 {
    let r2 = r * r;
    let r4 = r2 * r2;
    let r6 = r4 * r2;
    let pi4 = PI.powi(4);
    let pi8 = pi4 * pi4;
    let t = 3.0 * r2 - 1.0;
    let num = -486.0 * pi8 * t * t * t - 131072.0 * (64.0 * r6 - 240.0 * r4 + 108.0 * r2 - 45.0)
        + 2304.0 * pi4 * (288.0 * r6 - 684.0 * r4 + 291.0 * r2 - 47.0);
    num / s3_radicand_f64(r).powf(1.5)
}

// ---------------------------------------------------------------------------
// Interval evaluation
// ---------------------------------------------------------------------------

fn s3_radicand(r: Interval, consts: &Constants) -> Interval {
    let pi4 = consts.pi_fourth();
    let r2 = r.square();
    let r4 = r2.square();
    let t = Interval::from_int(3) * r2 - Interval::ONE;
    Interval::from_int(9) * pi4 * t.square()
        - Interval::from_int(128)
            * (Interval::from_int(16) * r4 - Interval::from_int(40) * r2 + Interval::from_int(9))
}

/// Certified enclosure of `S` over the argument interval.
pub fn s_interval(r: Interval, consts: &Constants) -> Result<Interval> {
    let pi2 = consts.pi_squared();
    let r2 = r.square();
    let head = Interval::from_int(3) * pi2 * (Interval::from_int(5) * r2 + Interval::ONE);
    let s3 = -(s3_radicand(r, consts).sqrt()?);
    let tail_num = Interval::from_int(27) * pi2 * (r2 + Interval::point(0.75)).square();
    let tail = tail_num.div(Interval::from_int(2) * (r + Interval::ONE).square())?;
    Ok(head + s3 - tail)
}

/// Certified enclosure of `S_3''` over the argument interval.
fn s3pp_interval(r: Interval, consts: &Constants) -> Result<Interval> {
    let pi4 = consts.pi_fourth();
    let pi8 = pi4.square();
    let r2 = r.square();
    let r4 = r2.square();
    let r6 = r4 * r2;
    let t = Interval::from_int(3) * r2 - Interval::ONE;
    let cube = t.square() * t;
    let num = -(Interval::from_int(486) * pi8 * cube)
        - Interval::from_int(131072)
            * (Interval::from_int(64) * r6 - Interval::from_int(240) * r4
                + Interval::from_int(108) * r2
                - Interval::from_int(45))
        + Interval::from_int(2304)
            * pi4
            * (Interval::from_int(288) * r6 - Interval::from_int(684) * r4
                + Interval::from_int(291) * r2
                - Interval::from_int(47));
    let radicand = s3_radicand(r, consts);
    let den = radicand.sqrt()? * radicand;
    num.div(den)
}

const SUBINTERVALS: usize = 64;

fn tristate_check(name: &str, t: Tristate, value: Option<Interval>) -> CheckResult {
    match value {
        Some(v) => CheckResult::from_tristate(name, t, v),
        None => CheckResult {
            name: name.to_string(),
            status: match t {
                Tristate::True => CheckStatus::PassEnclosure,
                Tristate::False => CheckStatus::Fail,
                Tristate::Undetermined => CheckStatus::Undetermined,
            },
            enclosure: None,
            residual: None,
        },
    }
}

pub(super) fn certify(consts: &Constants) -> CertificateReport {
    let mut checks = Vec::new();
    let pi2 = consts.pi_squared();
    let pi4 = consts.pi_fourth();
    let r_star = consts.r_star;

    // (i) endpoint anchors
    let s_half = match s_interval(Interval::point(0.5), consts) {
        Ok(v) => {
            let ok = v.contains(0.0) && v.width() <= 1e-10;
            CheckResult {
                name: "s_at_half_vanishes".to_string(),
                status: if ok {
                    CheckStatus::PassEnclosure
                } else {
                    CheckStatus::Undetermined
                },
                enclosure: Some([v.lo(), v.hi()]),
                residual: None,
            }
        }
        Err(_) => CheckResult::undetermined("s_at_half_vanishes"),
    };
    checks.push(s_half);

    let s_rstar = match s_interval(r_star, consts) {
        Ok(v) => {
            CheckResult::from_tristate("s_at_r_star_negative", v.certified_lt(Interval::ZERO), v)
        }
        Err(_) => CheckResult::undetermined("s_at_r_star_negative"),
    };
    checks.push(s_rstar);

    // (ii) sign constants of the S_3''' factorization
    let c1 = Interval::from_int(32768) - Interval::from_int(207) * pi4;
    checks.push(CheckResult::from_tristate(
        "sign_32768_minus_207pi4",
        c1.certified_gt(Interval::ZERO),
        c1,
    ));
    let c2 = Interval::from_int(81) * pi4 - Interval::from_int(2048);
    checks.push(CheckResult::from_tristate(
        "sign_81pi4_minus_2048",
        c2.certified_gt(Interval::ZERO),
        c2,
    ));
    let c3 = Interval::from_int(1152) - Interval::from_int(9) * pi4;
    checks.push(CheckResult::from_tristate(
        "sign_1152_minus_9pi4",
        c3.certified_gt(Interval::ZERO),
        c3,
    ));

    // the whole analysis lives on [1/2, r_star]
    checks.push(CheckResult::from_tristate(
        "r_star_below_three_quarters",
        r_star.certified_lt(Interval::point(0.75)),
        r_star,
    ));

    // radicand of S_3 stays positive across [1/2, r_star], by subdivision
    let hi = r_star.hi().max(0.5 + 1e-6);
    let mut radicand_sign = Tristate::True;
    let mut quartic_sign = Tristate::True;
    for k in 0..SUBINTERVALS {
        let a = 0.5 + (hi - 0.5) * k as f64 / SUBINTERVALS as f64;
        let b = 0.5 + (hi - 0.5) * (k + 1) as f64 / SUBINTERVALS as f64;
        let r = Interval::new(a, b);
        let rad = s3_radicand(r, consts);
        radicand_sign = worst(radicand_sign, rad.certified_gt(Interval::ZERO));
        // (81 pi^4 - 2048) r^4 + 1152 - 9 pi^4 > 0 (S_3''' numerator factor)
        let quartic = c2 * r.square().square() + c3;
        quartic_sign = worst(quartic_sign, quartic.certified_gt(Interval::ZERO));
    }
    checks.push(tristate_check("s3_radicand_positive", radicand_sign, None));

    // (iii) S_1''' > 0 on (1/2, r_star): its sign is the sign of -(4r - 3)
    let four_r_minus_3 = Interval::from_int(4) * Interval::new(0.5, hi) - Interval::from_int(3);
    checks.push(CheckResult::from_tristate(
        "s1_third_derivative_positive",
        four_r_minus_3.certified_lt(Interval::ZERO),
        four_r_minus_3,
    ));

    // S_1''(1/2) = -20 pi^2, exactly: the rational numerator polynomial
    // evaluates to 60 at 1/2 and 27 * 60 = 20 * 81
    let numerator = RationalPolynomial::from_int_coeffs(&[51, -48, 96, 64, 16]);
    let at_half = numerator.eval(&rat(1, 2));
    let exact_ok = at_half == rat(60, 1) && rat(27 * 60, 1) == rat(20 * 81, 1);
    checks.push(CheckResult::exact(
        "s1_second_derivative_at_half",
        exact_ok,
        format!("{}", at_half - rat(60, 1)),
    ));

    // (iv) S_3''' < 0 on (1/2, r_star): all factors of the factored
    // closed form have certified signs
    let s3ppp_prereqs = [
        checks
            .iter()
            .find(|c| c.name == "sign_32768_minus_207pi4")
            .unwrap()
            .status,
        checks
            .iter()
            .find(|c| c.name == "s3_radicand_positive")
            .unwrap()
            .status,
        match quartic_sign {
            Tristate::True => CheckStatus::PassEnclosure,
            Tristate::False => CheckStatus::Fail,
            Tristate::Undetermined => CheckStatus::Undetermined,
        },
    ];
    let s3ppp_status = if s3ppp_prereqs.contains(&CheckStatus::Fail) {
        CheckStatus::Fail
    } else if s3ppp_prereqs.contains(&CheckStatus::Undetermined) {
        CheckStatus::Undetermined
    } else {
        CheckStatus::PassEnclosure
    };
    checks.push(CheckResult {
        name: "s3_third_derivative_negative".to_string(),
        status: s3ppp_status,
        enclosure: None,
        residual: None,
    });

    // (v) S_3''(r_star) and the chain S'' > -20 pi^2 + 30 pi^2 + S_3''(r_star) > 0
    match s3pp_interval(r_star, consts) {
        Ok(v) => {
            checks.push(CheckResult::enclosure_only(
                "s3_second_derivative_at_r_star",
                v,
            ));
            let chain = Interval::from_int(10) * pi2 + v;
            checks.push(CheckResult::from_tristate(
                "second_derivative_chain_positive",
                chain.certified_gt(Interval::ZERO),
                chain,
            ));
        }
        Err(_) => {
            checks.push(CheckResult::undetermined("s3_second_derivative_at_r_star"));
            checks.push(CheckResult::undetermined(
                "second_derivative_chain_positive",
            ));
        }
    }

    // (vi) conclusion: a convex function that vanishes at 1/2 and is
    // negative at r_star is negative on (1/2, r_star]
    let prerequisites: Vec<&CheckResult> = checks
        .iter()
        .filter(|c| {
            [
                "s_at_half_vanishes",
                "s_at_r_star_negative",
                "r_star_below_three_quarters",
                "s3_radicand_positive",
                "s1_third_derivative_positive",
                "s1_second_derivative_at_half",
                "s3_third_derivative_negative",
                "second_derivative_chain_positive",
            ]
            .contains(&c.name.as_str())
        })
        .collect();
    let conclusion = CheckResult::conclusion("s_negative_by_convexity", &prerequisites);
    checks.push(conclusion);

    CertificateReport::new("A4", checks)
}

fn worst(a: Tristate, b: Tristate) -> Tristate {
    match (a, b) {
        (Tristate::False, _) | (_, Tristate::False) => Tristate::False,
        (Tristate::Undetermined, _) | (_, Tristate::Undetermined) => Tristate::Undetermined,
        _ => Tristate::True,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificates::OverallStatus;
    use crate::numerics::constants;

    #[test]
    fn a4_passes() {
        let report = certify(constants());
        assert_eq!(report.overall, OverallStatus::Pass, "{}", report.to_json());
    }

    #[test]
    fn s_anchors() {
        assert!(s_f64(0.5).abs() < 1e-10);
        let v = s_interval(constants().r_star, constants()).unwrap();
        assert!(v.contains(-1.81015135461831), "{v}");
        assert!(v.lo() > -1.95 && v.hi() < -1.65, "{v}");
    }

    #[test]
    fn s3pp_at_r_star_matches_reference() {
        let v = s3pp_interval(constants().r_star, constants()).unwrap();
        assert!(v.contains(-22.2782277299828), "{v}");
        assert!(v.lo() > -22.33 && v.hi() < -22.23, "{v}");
    }

    #[test]
    fn closed_form_derivatives_match_finite_differences() {
        // transcription guard: central differences of the bare functions
        let h = 1e-5;
        for r in [0.55, 0.6, 0.62] {
            let fd1 = (s1_f64(r + h) - 2.0 * s1_f64(r) + s1_f64(r - h)) / (h * h);
            assert!(
                (fd1 - s1pp_f64(r)).abs() <= 1e-5 * s1pp_f64(r).abs(),
                "S1'' at {r}: {fd1} vs {}",
                s1pp_f64(r)
            );
            let fd3 = (s3_f64(r + h) - 2.0 * s3_f64(r) + s3_f64(r - h)) / (h * h);
            assert!(
                (fd3 - s3pp_f64(r)).abs() <= 1e-5 * s3pp_f64(r).abs(),
                "S3'' at {r}: {fd3} vs {}",
                s3pp_f64(r)
            );
            // and S'' itself is positive there, consistent with the chain
            let sd = (s_f64(r + h) - 2.0 * s_f64(r) + s_f64(r - h)) / (h * h);
            assert!(sd > 0.0);
        }
    }

    #[test]
    fn s1pp_at_half_is_minus_20_pi2() {
        assert!((s1pp_f64(0.5) + 20.0 * PI * PI).abs() < 1e-10);
    }

    #[test]
    fn interval_and_f64_evaluations_agree() {
        for r in [0.52, 0.58, 0.63] {
            let iv = s_interval(Interval::point(r), constants()).unwrap();
            assert!(iv.contains(s_f64(r)), "{iv} vs {}", s_f64(r));
            assert!(iv.width() < 1e-9);
        }
    }
}
