//! Closed floating-point intervals with outward rounding.
//!
//! Directed rounding is emulated: every primitive operation is evaluated in
//! round-to-nearest and the resulting endpoints are then widened outward by
//! one unit in the last place. Since round-to-nearest is within half an ulp
//! of the exact value, the widened interval encloses the exact result.

use crate::error::{Error, Result};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Outcome of a certified comparison between two intervals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tristate {
    /// The relation holds for every pair of members.
    True,
    /// The negated relation holds for every pair of members.
    False,
    /// The operand intervals overlap; no certified answer.
    Undetermined,
}

/// A closed interval `[lo, hi]` with `lo <= hi`, both finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    /// Interval with the given endpoints. Panics if `lo > hi` or either
    /// endpoint is not finite; enclosure bugs must not pass silently.
    pub fn new(lo: f64, hi: f64) -> Interval {
        assert!(
            lo.is_finite() && hi.is_finite() && lo <= hi,
            "invalid interval endpoints [{lo}, {hi}]"
        );
        Interval { lo, hi }
    }

    /// Degenerate interval containing exactly one double.
    pub fn point(x: f64) -> Interval {
        Interval::new(x, x)
    }

    /// Interval from an integer (exact for |n| < 2^53).
    pub fn from_int(n: i64) -> Interval {
        Interval::point(n as f64)
    }

    pub const ZERO: Interval = Interval { lo: 0.0, hi: 0.0 };
    pub const ONE: Interval = Interval { lo: 1.0, hi: 1.0 };

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Widen both endpoints outward by `pad` (used to stress-test
    /// soundness under precision loss).
    pub fn inflated(&self, pad: f64) -> Interval {
        assert!(pad >= 0.0 && pad.is_finite());
        Interval::new(self.lo - pad, self.hi + pad)
    }

    fn outward(lo: f64, hi: f64) -> Interval {
        Interval::new(lo.next_down(), hi.next_up())
    }

    /// `self / rhs`; fails if `rhs` contains zero.
    pub fn div(&self, rhs: Interval) -> Result<Interval> {
        if rhs.lo <= 0.0 && rhs.hi >= 0.0 {
            return Err(Error::IntervalDivisionByZero {
                lo: rhs.lo,
                hi: rhs.hi,
            });
        }
        let quotients = [
            self.lo / rhs.lo,
            self.lo / rhs.hi,
            self.hi / rhs.lo,
            self.hi / rhs.hi,
        ];
        let lo = quotients.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = quotients.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Ok(Interval::outward(lo, hi))
    }

    /// Square root; fails if the interval extends below zero.
    pub fn sqrt(&self) -> Result<Interval> {
        if self.lo < 0.0 {
            return Err(Error::IntervalSqrtNegative {
                lo: self.lo,
                hi: self.hi,
            });
        }
        let lo = self.lo.sqrt().next_down().max(0.0);
        Ok(Interval::new(lo, self.hi.sqrt().next_up()))
    }

    /// Tight square (sharper than `self * self` when the interval spans zero).
    pub fn square(&self) -> Interval {
        let (alo, ahi) = (self.lo.abs(), self.hi.abs());
        let big = alo.max(ahi);
        let small = if self.lo <= 0.0 && self.hi >= 0.0 {
            0.0
        } else {
            alo.min(ahi)
        };
        if small == 0.0 {
            Interval::new(0.0, (big * big).next_up())
        } else {
            Interval::outward(small * small, big * big)
        }
    }

    /// Certified strict comparison `self < rhs`.
    pub fn certified_lt(&self, rhs: Interval) -> Tristate {
        if self.hi < rhs.lo {
            Tristate::True
        } else if rhs.hi < self.lo {
            Tristate::False
        } else {
            Tristate::Undetermined
        }
    }

    /// Certified strict comparison `self > rhs`.
    pub fn certified_gt(&self, rhs: Interval) -> Tristate {
        rhs.certified_lt(*self)
    }
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, rhs: Interval) -> Interval {
        Interval::outward(self.lo + rhs.lo, self.hi + rhs.hi)
    }
}

impl Sub for Interval {
    type Output = Interval;
    fn sub(self, rhs: Interval) -> Interval {
        Interval::outward(self.lo - rhs.hi, self.hi - rhs.lo)
    }
}

impl Mul for Interval {
    type Output = Interval;
    fn mul(self, rhs: Interval) -> Interval {
        let products = [
            self.lo * rhs.lo,
            self.lo * rhs.hi,
            self.hi * rhs.lo,
            self.hi * rhs.hi,
        ];
        let lo = products.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = products.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Interval::outward(lo, hi)
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        // Negation is exact; no widening.
        Interval::new(-self.hi, -self.lo)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}
