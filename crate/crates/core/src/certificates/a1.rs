//! Certificate A1: the radial polynomial inequality behind the R2
//! comparison holds for all r > 1/2.
//!
//! Everything except the single `pi^4 > 96` enclosure is exact rational
//! arithmetic: positivity of the left-hand side via a shift to `s = r - 1/2`
//! with positive coefficients, the factorization of the squared inequality
//! with `pi^4` treated as a formal variable, and the positive shift
//! expansion of the residual polynomial `p`.

use crate::certificates::{CertificateReport, CheckResult};
use crate::numerics::{rat, Constants, Interval, RationalPolynomial};

fn poly(coeffs: &[i64]) -> RationalPolynomial {
    RationalPolynomial::from_int_coeffs(coeffs)
}

/// `9 (r^2 + 3/4)^2 - 2 (r^2 + 1) (1 + r)^2`.
fn lhs_positivity_poly() -> RationalPolynomial {
    let r2_34 = RationalPolynomial::from_coeffs(vec![rat(3, 4), rat(0, 1), rat(1, 1)]);
    let r2_1 = poly(&[1, 0, 1]);
    let one_r = poly(&[1, 1]);
    r2_34
        .pow(2)
        .scale(&rat(9, 1))
        .sub(&r2_1.mul(&one_r.pow(2)).scale(&rat(2, 1)))
}

/// The squared inequality as a pair `(without pi^4 factor, with pi^4
/// factor)`: `lhs = p0 + pi^4 * p1`.
fn squared_lhs_parts() -> (RationalPolynomial, RationalPolynomial) {
    let r2_34 = RationalPolynomial::from_coeffs(vec![rat(3, 4), rat(0, 1), rat(1, 1)]);
    let r2_1 = poly(&[1, 0, 1]);
    let one_r = poly(&[1, 1]);
    let r2_m1 = poly(&[-1, 0, 1]);
    let inner = poly(&[-36, 0, 160, 0, -64]); // 160 r^2 - 64 r^4 - 36

    let p1 = r2_34
        .pow(4)
        .scale(&rat(81, 1))
        .sub(
            &r2_34
                .pow(2)
                .mul(&r2_1)
                .mul(&one_r.pow(2))
                .scale(&rat(36, 1)),
        )
        .add(&r2_1.pow(2).mul(&one_r.pow(4)).scale(&rat(4, 1)))
        .sub(&r2_m1.pow(2).mul(&one_r.pow(4)).scale(&rat(4, 1)));
    let p0 = inner.mul(&one_r.pow(4)).scale(&rat(-4, 1));
    (p0, p1)
}

/// The factored form as the same pair: `(2r - 1)/256` times the
/// bracket, split into the `4096 (...)` and `pi^4 (...)` halves.
fn factored_rhs_parts() -> (RationalPolynomial, RationalPolynomial) {
    let front = poly(&[-1, 2]).scale(&rat(1, 256));
    let one_r = poly(&[1, 1]);
    let q0 = front
        .mul(&one_r.pow(4))
        .mul(&poly(&[-3, 2]))
        .mul(&poly(&[1, 2]))
        .mul(&poly(&[3, 2]))
        .scale(&rat(4096, 1));
    let q1 = front
        .mul(&poly(&[-1, 6]))
        .mul(&poly(&[9, -8, 4]))
        .mul(&poly(&[17, 8, 12]))
        .mul(&poly(&[9, 8, 20]));
    (q0, q1)
}

/// `p(r) = 128 (1+r)^4 (2r-3)(2r+1)(2r+3)
///         + 3 (6r-1)(4r^2-8r+9)(12r^2+8r+17)(20r^2+8r+9)`.
fn residual_poly() -> RationalPolynomial {
    let one_r = poly(&[1, 1]);
    let first = one_r
        .pow(4)
        .mul(&poly(&[-3, 2]))
        .mul(&poly(&[1, 2]))
        .mul(&poly(&[3, 2]))
        .scale(&rat(128, 1));
    let second = poly(&[-1, 6])
        .mul(&poly(&[9, -8, 4]))
        .mul(&poly(&[17, 8, 12]))
        .mul(&poly(&[9, 8, 20]))
        .scale(&rat(3, 1));
    first.add(&second)
}

pub(super) fn certify(consts: &Constants) -> CertificateReport {
    let mut checks = Vec::new();
    let half = rat(1, 2);

    // (i) positivity of the unsquared left-hand side for r > 1/2
    let shifted = lhs_positivity_poly().shift_compose(&half);
    let expected = RationalPolynomial::from_coeffs(vec![
        rat(27, 8),
        rat(6, 1),
        rat(14, 1),
        rat(10, 1),
        rat(7, 1),
    ]);
    let diff = shifted.sub(&expected);
    let all_positive = shifted.coeffs().iter().all(|c| c > &rat(0, 1));
    checks.push(CheckResult::exact(
        "lhs_shift_coefficients",
        diff.is_zero() && all_positive,
        format!("{diff}"),
    ));

    // (ii) factorization of the squared inequality, pi^4 formal: both sides
    // are degree <= 1 in pi^4, so equality at the specializations 0 and 1
    // proves the identity.
    let (p0, p1) = squared_lhs_parts();
    let (q0, q1) = factored_rhs_parts();
    let at_zero = p0.sub(&q0);
    checks.push(CheckResult::exact(
        "factorization_pi4_to_0",
        at_zero.is_zero(),
        format!("{at_zero}"),
    ));
    let at_one = p0.add(&p1).sub(&q0.add(&q1));
    checks.push(CheckResult::exact(
        "factorization_pi4_to_1",
        at_one.is_zero(),
        format!("{at_one}"),
    ));

    // (iii) p(r) in shifted form: 32 (162 + 1269 s + ... + 572 s^7),
    // manifestly positive for s > 0
    let p = residual_poly();
    let p_shifted = p.shift_compose(&half);
    let expected = poly(&[162, 1269, 2502, 3759, 3680, 3136, 1552, 572]).scale(&rat(32, 1));
    let diff = p_shifted.sub(&expected);
    checks.push(CheckResult::exact(
        "p_shift_expansion",
        diff.is_zero(),
        format!("{diff}"),
    ));
    let p_half = p.eval(&half);
    checks.push(CheckResult::exact(
        "p_at_half",
        p_half == rat(5184, 1),
        format!("{}", p_half.clone() - rat(5184, 1)),
    ));

    // (iv) pi^4 > 96
    let pi4 = consts.pi_fourth();
    checks.push(CheckResult::from_tristate(
        "pi4_gt_96",
        pi4.certified_gt(Interval::from_int(96)),
        pi4,
    ));

    // (v) 4r^2 - 8r + 9 has no real roots: discriminant 64 - 144 < 0
    let disc = rat(64, 1) - rat(144, 1);
    checks.push(CheckResult::exact(
        "quadratic_discriminant_negative",
        disc < rat(0, 1),
        format!("{disc}"),
    ));

    CertificateReport::new("A1", checks)
}
