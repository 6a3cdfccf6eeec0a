//! Certified enclosure of the first zero of the Bessel function J0.
//!
//! J0 is evaluated through its alternating power series
//! `sum_k (-1)^k (x^2/4)^k / (k!)^2` in interval arithmetic with an explicit
//! truncation-remainder bound, and the zero is bracketed by bisection on
//! [2, 3] keeping certified signs at both endpoints.

use crate::numerics::{Interval, Tristate};

const MAX_TERMS: usize = 40;

/// Interval enclosure of `J0` over the argument interval.
///
/// Valid for arguments within `[0, 3.5]`: there the series terms decrease
/// from index 1 on, so the classic alternating-series bound applies to the
/// truncation remainder.
pub fn j0_enclosure(x: Interval) -> Interval {
    assert!(
        x.lo() >= 0.0 && x.hi() <= 3.5,
        "j0_enclosure is certified on [0, 3.5] only"
    );
    let u = x
        .square()
        .div(Interval::from_int(4))
        .expect("nonzero divisor");
    let mut sum = Interval::ONE;
    let mut term = Interval::ONE;
    let mut sign = 1.0;
    for k in 1..=MAX_TERMS {
        term = (term * u)
            .div(Interval::from_int((k * k) as i64))
            .expect("nonzero divisor");
        sign = -sign;
        if term.hi() < 1e-18 {
            // |remainder| <= first omitted term (terms decrease for k >= 1
            // because u/(k+1)^2 < 1 on the certified domain).
            return sum + Interval::new(-term.hi(), term.hi());
        }
        sum = if sign > 0.0 { sum + term } else { sum - term };
    }
    unreachable!("series terminates within {MAX_TERMS} terms on [0, 3.5]");
}

/// Certified enclosure of the first positive zero of J0 (about 2.4048),
/// of width well below 1e-12.
pub fn bessel_j0_first_zero() -> Interval {
    let mut lo = 2.0_f64;
    let mut hi = 3.0_f64;
    debug_assert_eq!(
        j0_enclosure(Interval::point(lo)).certified_gt(Interval::ZERO),
        Tristate::True
    );
    debug_assert_eq!(
        j0_enclosure(Interval::point(hi)).certified_lt(Interval::ZERO),
        Tristate::True
    );
    for _ in 0..64 {
        if hi - lo <= 1e-13 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let val = j0_enclosure(Interval::point(mid));
        match val.certified_gt(Interval::ZERO) {
            Tristate::True => lo = mid,
            Tristate::False => hi = mid,
            // Sign not certifiable this close to the zero; the bracket is
            // already as tight as the series evaluation allows.
            Tristate::Undetermined => break,
        }
    }
    Interval::new(lo, hi)
}
