//! Machine certificates for the four auxiliary inequalities behind the
//! region decomposition.
//!
//! Each certificate decomposes one lemma into checks that are either exact
//! (big-rational polynomial identities, zero residual, no tolerance) or
//! enclosure-based (certified interval comparisons). An enclosure check can
//! come back UNDETERMINED when the constant enclosures are too wide; it can
//! never silently pass, and widening enclosures can never turn a pass into
//! a failure.

mod a1;
mod a2;
mod a3;
mod a4;

pub use a4::{s_f64, s_interval};

use crate::error::Result;
use crate::geometry::ParallelogramParams;
use crate::numerics::{constants, Constants, Interval, Tristate};
use serde::Serialize;
use std::fmt;

/// Status of a single certificate check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CheckStatus {
    /// Exact rational identity with literal zero residual.
    #[serde(rename = "PASS-EXACT")]
    PassExact,
    /// Certified by interval enclosure.
    #[serde(rename = "PASS-ENCLOSURE")]
    PassEnclosure,
    /// The negation was certified: a genuine counterexample.
    #[serde(rename = "FAIL")]
    Fail,
    /// Enclosures too wide to decide either way.
    #[serde(rename = "UNDETERMINED")]
    Undetermined,
}

/// Overall verdict of a certificate or a certificate collection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OverallStatus {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "UNDETERMINED")]
    Undetermined,
}

impl fmt::Display for OverallStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OverallStatus::Pass => write!(f, "PASS"),
            OverallStatus::Fail => write!(f, "FAIL"),
            OverallStatus::Undetermined => write!(f, "UNDETERMINED"),
        }
    }
}

/// One named check with its supporting detail.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    /// Enclosure of the certified quantity, when interval-based.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub enclosure: Option<[f64; 2]>,
    /// Rational residual of an exact check ("0" on success).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
}

impl CheckResult {
    pub fn exact(name: &str, holds: bool, residual: String) -> CheckResult {
        CheckResult {
            name: name.to_string(),
            status: if holds {
                CheckStatus::PassExact
            } else {
                CheckStatus::Fail
            },
            enclosure: None,
            residual: Some(residual),
        }
    }

    pub fn from_tristate(name: &str, outcome: Tristate, value: Interval) -> CheckResult {
        CheckResult {
            name: name.to_string(),
            status: match outcome {
                Tristate::True => CheckStatus::PassEnclosure,
                Tristate::False => CheckStatus::Fail,
                Tristate::Undetermined => CheckStatus::Undetermined,
            },
            enclosure: Some([value.lo(), value.hi()]),
            residual: None,
        }
    }

    /// For checks whose inputs could not even be evaluated at the current
    /// enclosure widths (for instance the square root of a sign-ambiguous
    /// radicand): undetermined, never a failure.
    pub fn undetermined(name: &str) -> CheckResult {
        CheckResult {
            name: name.to_string(),
            status: CheckStatus::Undetermined,
            enclosure: None,
            residual: None,
        }
    }

    pub fn enclosure_only(name: &str, value: Interval) -> CheckResult {
        CheckResult {
            name: name.to_string(),
            status: CheckStatus::PassEnclosure,
            enclosure: Some([value.lo(), value.hi()]),
            residual: None,
        }
    }

    /// A conclusion drawn from other checks: passes as an enclosure check
    /// when every prerequisite passed, otherwise inherits the worst
    /// prerequisite status.
    pub fn conclusion(name: &str, prerequisites: &[&CheckResult]) -> CheckResult {
        let status = if prerequisites.iter().any(|c| c.status == CheckStatus::Fail) {
            CheckStatus::Fail
        } else if prerequisites
            .iter()
            .any(|c| c.status == CheckStatus::Undetermined)
        {
            CheckStatus::Undetermined
        } else {
            CheckStatus::PassEnclosure
        };
        CheckResult {
            name: name.to_string(),
            status,
            enclosure: None,
            residual: None,
        }
    }
}

/// A certified lemma: named checks plus the aggregated verdict.
#[derive(Debug, Clone, Serialize)]
pub struct CertificateReport {
    pub lemma: String,
    pub checks: Vec<CheckResult>,
    pub overall: OverallStatus,
}

impl CertificateReport {
    pub fn new(lemma: &str, checks: Vec<CheckResult>) -> CertificateReport {
        let overall = if checks.iter().any(|c| c.status == CheckStatus::Fail) {
            OverallStatus::Fail
        } else if checks.iter().any(|c| c.status == CheckStatus::Undetermined) {
            OverallStatus::Undetermined
        } else {
            OverallStatus::Pass
        };
        CertificateReport {
            lemma: lemma.to_string(),
            checks,
            overall,
        }
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Aggregate verdict over several reports.
pub fn combined_status(reports: &[CertificateReport]) -> OverallStatus {
    if reports.iter().any(|r| r.overall == OverallStatus::Fail) {
        OverallStatus::Fail
    } else if reports
        .iter()
        .any(|r| r.overall == OverallStatus::Undetermined)
    {
        OverallStatus::Undetermined
    } else {
        OverallStatus::Pass
    }
}

/// Radial polynomial positivity behind the R2 comparison.
pub fn certify_a1() -> CertificateReport {
    a1::certify(constants())
}

pub fn certify_a1_with(consts: &Constants) -> CertificateReport {
    a1::certify(consts)
}

/// Integral-ratio certificates for the polynomial `G`.
pub fn certify_a2() -> CertificateReport {
    a2::certify(constants())
}

pub fn certify_a2_with(consts: &Constants) -> CertificateReport {
    a2::certify(consts)
}

/// Factorization and positivity of `H` on the small-radius interval.
pub fn certify_a3() -> CertificateReport {
    a3::certify(constants())
}

pub fn certify_a3_with(consts: &Constants) -> CertificateReport {
    a3::certify(consts)
}

/// Convexity analysis of `S` on the mid-radius interval.
pub fn certify_a4() -> CertificateReport {
    a4::certify(constants())
}

pub fn certify_a4_with(consts: &Constants) -> CertificateReport {
    a4::certify(consts)
}

/// All four lemma certificates plus the cross-module pipeline checks, in a
/// fixed order.
pub fn certify_all() -> Vec<CertificateReport> {
    certify_all_with(constants())
}

pub fn certify_all_with(consts: &Constants) -> Vec<CertificateReport> {
    vec![
        a1::certify(consts),
        a2::certify(consts),
        a3::certify(consts),
        a4::certify(consts),
        certify_pipeline(consts),
    ]
}

/// Certified interval evaluation of the convexity reduction function
/// `g(r, t)`.
fn g_interval(r: Interval, t: Interval, consts: &Constants) -> Result<Interval> {
    let pi2 = consts.pi_squared();
    let pi4 = consts.pi_fourth();
    let r2 = r.square();
    let one = Interval::ONE;
    let head = Interval::from_int(3) * pi2 * (Interval::from_int(5) * r2 + one);
    let radicand = Interval::from_int(9) * pi4 * (Interval::from_int(3) * r2 - one).square()
        + Interval::from_int(8192) * r2 * t;
    let tail = (Interval::from_int(54) * pi2 * r2 * (one - t)).div((one + r).square())?;
    Ok(head - radicand.sqrt()? - tail)
}

/// `1 - (r^2 + 3/4)^2 / (4 r^2)` as an interval, the lower `t`-endpoint of
/// the R3 band.
fn angular_split_interval(r: Interval) -> Result<Interval> {
    let r2 = r.square();
    let s = (r2 + Interval::point(0.75)).square();
    Ok(Interval::ONE - s.div(Interval::from_int(4) * r2)?)
}

const PIPELINE_SAMPLES: usize = 256;

/// Cross-module spot checks: the block eigenvalue ordering and the
/// endpoint negativity of `g` that Steps 3 and 4 reduce to.
fn certify_pipeline(consts: &Constants) -> CertificateReport {
    let mut checks = Vec::new();

    // lambda_1(L) <= lambda_1(M) on a deterministic polar grid.
    let mut min_gap = f64::INFINITY;
    let mut ordering_ok = true;
    for i in 1..=24 {
        for j in 1..=24 {
            let r = i as f64 / 24.0;
            let theta = (j as f64 / 24.0) * std::f64::consts::FRAC_PI_2;
            let p = crate::geometry::PolarPoint::new(r, theta).unwrap();
            let q: ParallelogramParams = p.to_params();
            let (l1, _) = crate::rayleigh_ritz::matrix_l(&q).eigenvalues();
            let (m1, _) = crate::rayleigh_ritz::matrix_m(&q).eigenvalues();
            let gap = m1 - l1;
            min_gap = min_gap.min(gap);
            if gap < -1e-12 * m1.abs().max(1.0) {
                ordering_ok = false;
            }
        }
    }
    checks.push(CheckResult {
        name: "block_eigenvalue_ordering".to_string(),
        status: if ordering_ok {
            CheckStatus::PassEnclosure
        } else {
            CheckStatus::Fail
        },
        enclosure: Some([min_gap, min_gap]),
        residual: None,
    });

    // Step 3 endpoints: g(r, c_star^2) < 0 and g(r, t_split(r)) < 0 for
    // r in (1/2, r_star].
    let c2 = consts.c_star.square();
    let r_star_hi = consts.r_star.hi();
    let mut worst = Tristate::True;
    for k in 1..=PIPELINE_SAMPLES {
        let r = Interval::point(0.5 + (r_star_hi - 0.5) * k as f64 / PIPELINE_SAMPLES as f64);
        let first = g_interval(r, c2, consts)
            .map(|v| v.certified_lt(Interval::ZERO))
            .unwrap_or(Tristate::Undetermined);
        let second = angular_split_interval(r)
            .and_then(|t| g_interval(r, t, consts))
            .map(|v| v.certified_lt(Interval::ZERO))
            .unwrap_or(Tristate::Undetermined);
        worst = worst_of(worst, worst_of(first, second));
    }
    checks.push(CheckResult {
        name: "g_negative_mid_radii".to_string(),
        status: tristate_status(worst),
        enclosure: None,
        residual: None,
    });

    // Step 4 endpoints: g(r, c_star^2) < 0 on (0, 1/2] and g(r, 0) < 0 on
    // (0, 1/2), with g(1/2, 0) = 0 within enclosure width.
    let mut worst = Tristate::True;
    for k in 1..=PIPELINE_SAMPLES {
        let rv = 0.5 * k as f64 / PIPELINE_SAMPLES as f64;
        let r = Interval::point(rv);
        let first = g_interval(r, c2, consts)
            .map(|v| v.certified_lt(Interval::ZERO))
            .unwrap_or(Tristate::Undetermined);
        worst = worst_of(worst, first);
        if rv < 0.5 {
            let second = g_interval(r, Interval::ZERO, consts)
                .map(|v| v.certified_lt(Interval::ZERO))
                .unwrap_or(Tristate::Undetermined);
            worst = worst_of(worst, second);
        }
    }
    checks.push(CheckResult {
        name: "g_negative_small_radii".to_string(),
        status: tristate_status(worst),
        enclosure: None,
        residual: None,
    });

    match g_interval(Interval::point(0.5), Interval::ZERO, consts) {
        Ok(v) => {
            let ok = v.contains(0.0) && v.width() <= 1e-10;
            checks.push(CheckResult {
                name: "g_equality_anchor".to_string(),
                status: if ok {
                    CheckStatus::PassEnclosure
                } else {
                    CheckStatus::Undetermined
                },
                enclosure: Some([v.lo(), v.hi()]),
                residual: None,
            });
        }
        Err(_) => checks.push(CheckResult::undetermined("g_equality_anchor")),
    }

    CertificateReport::new("pipeline", checks)
}

fn worst_of(a: Tristate, b: Tristate) -> Tristate {
    match (a, b) {
        (Tristate::False, _) | (_, Tristate::False) => Tristate::False,
        (Tristate::Undetermined, _) | (_, Tristate::Undetermined) => Tristate::Undetermined,
        _ => Tristate::True,
    }
}

fn tristate_status(t: Tristate) -> CheckStatus {
    match t {
        Tristate::True => CheckStatus::PassEnclosure,
        Tristate::False => CheckStatus::Fail,
        Tristate::Undetermined => CheckStatus::Undetermined,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_run_passes() {
        let reports = certify_all();
        assert_eq!(reports.len(), 5);
        for lemma in ["A1", "A2", "A3", "A4"] {
            let report = reports.iter().find(|r| r.lemma == lemma).unwrap();
            assert_eq!(report.overall, OverallStatus::Pass, "{}", report.to_json());
        }
        assert_eq!(combined_status(&reports), OverallStatus::Pass);
    }

    #[test]
    fn widened_constants_degrade_to_undetermined() {
        let widened = constants().widened(0.05).unwrap();
        let reports = certify_all_with(&widened);
        let mut saw_undetermined = false;
        for report in &reports {
            assert_ne!(report.overall, OverallStatus::Fail, "{}", report.to_json());
            for check in &report.checks {
                assert_ne!(check.status, CheckStatus::Fail, "{}", check.name);
                if check.status == CheckStatus::Undetermined {
                    saw_undetermined = true;
                }
            }
        }
        assert!(saw_undetermined);
    }

    #[test]
    fn widening_is_monotone_per_check() {
        // every check passing with wide constants also passes with tight ones
        let tight = certify_all();
        let wide = certify_all_with(&constants().widened(1e-6).unwrap());
        for (t, w) in tight.iter().zip(&wide) {
            for (tc, wc) in t.checks.iter().zip(&w.checks) {
                assert_eq!(tc.name, wc.name);
                if matches!(
                    wc.status,
                    CheckStatus::PassExact | CheckStatus::PassEnclosure
                ) {
                    assert!(
                        matches!(
                            tc.status,
                            CheckStatus::PassExact | CheckStatus::PassEnclosure
                        ),
                        "{} passed wide but not tight",
                        tc.name
                    );
                }
            }
        }
    }

    #[test]
    fn report_serializes_to_schema() {
        let report = certify_a2();
        let json = report.to_json();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["lemma"], "A2");
        assert!(value["checks"].as_array().unwrap().len() >= 4);
        assert_eq!(value["overall"], "PASS");
        let ratio = value["checks"]
            .as_array()
            .unwrap()
            .iter()
            .find(|c| c["name"] == "ratio1_lt_pi2")
            .unwrap();
        assert_eq!(ratio["status"], "PASS-ENCLOSURE");
        assert!(ratio["enclosure"].as_array().unwrap().len() == 2);
    }
}
