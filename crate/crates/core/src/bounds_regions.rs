//! Region decomposition of the parameter quarter-disk and the main
//! inequality scan.
//!
//! In polar coordinates `c = r cos(theta)`, `d = r sin(theta)` the target
//! inequality reads
//!
//! ```text
//! min{ lambda_2(diag(L, M)), (2 j01 + pi)^2 / (1 + 2 r cos(theta) + r^2) }
//!     < 9 pi^2 / (1 + r)^2,
//! ```
//!
//! strict except at `(r, theta) = (1/2, pi/2)`. Four regions cover the
//! quarter-disk: R1 is handled by the Kröger bound, R2 by `lambda_2(L)`,
//! and R3/R4 by `lambda_1(M)` through the convexity of `g(r, t)` in
//! `t = cos^2(theta)`.

use crate::error::{Error, Result};
use crate::galerkin::{neumann_spectrum, GalerkinSpec};
use crate::geometry::{ParallelogramParams, PolarPoint};
use crate::numerics::constants;
use crate::rayleigh_ritz::mu3_upper_bound;
use rayon::prelude::*;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;

/// Slack for region-boundary comparisons, applied toward inclusion: a point
/// within rounding distance of a boundary may land in both regions, which is
/// harmless because both certify the same inequality.
const BOUNDARY_SLACK: f64 = 1e-14;

/// Margins within this tolerance of zero are classified "equality", which
/// only the optimal rectangle attains.
pub const EQUALITY_TOLERANCE: f64 = 1e-10;

/// The four regions of the covering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RegionId {
    R1,
    R2,
    R3,
    R4,
}

impl RegionId {
    pub const ALL: [RegionId; 4] = [RegionId::R1, RegionId::R2, RegionId::R3, RegionId::R4];

    pub fn index(&self) -> usize {
        match self {
            RegionId::R1 => 0,
            RegionId::R2 => 1,
            RegionId::R3 => 2,
            RegionId::R4 => 3,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            RegionId::R1 => "R1",
            RegionId::R2 => "R2",
            RegionId::R3 => "R3",
            RegionId::R4 => "R4",
        }
    }
}

/// A possibly-overlapping subset of the four regions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RegionSet(u8);

impl RegionSet {
    pub fn empty() -> RegionSet {
        RegionSet(0)
    }

    pub fn insert(&mut self, id: RegionId) {
        self.0 |= 1 << id.index();
    }

    pub fn contains(&self, id: RegionId) -> bool {
        self.0 & (1 << id.index()) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = RegionId> + '_ {
        RegionId::ALL.into_iter().filter(|id| self.contains(*id))
    }

    /// Lowest-index member, used for display-only overlap resolution.
    pub fn lowest(&self) -> Option<RegionId> {
        self.iter().next()
    }
}

impl fmt::Display for RegionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "none");
        }
        let names: Vec<&str> = self.iter().map(|id| id.name()).collect();
        write!(f, "{}", names.join("|"))
    }
}

impl Serialize for RegionSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(None)?;
        for id in self.iter() {
            seq.serialize_element(id.name())?;
        }
        seq.end()
    }
}

/// Kröger's bound `mu_3 <= (2 j01 + pi)^2 / diameter^2`, evaluated with the
/// midpoint of the certified `j01` enclosure.
pub fn kroger_bound(q: &ParallelogramParams) -> f64 {
    let j01 = constants().j01.midpoint();
    let s = 2.0 * j01 + PI;
    let diam = q.diameter();
    s * s / (diam * diam)
}

/// The convexity reduction function
/// `g(r, t) = 3 pi^2 (5 r^2 + 1) - sqrt(9 pi^4 (3 r^2 - 1)^2 + 8192 r^2 t)
///            - 54 pi^2 r^2 (1 - t) / (1 + r)^2`,
/// negative exactly where `lambda_1(M) < 9 pi^2 / (1 + r)^2` at
/// `t = cos^2(theta)`.
pub fn eval_g(r: f64, t: f64) -> Result<f64> {
    if !(r > 0.0 && r <= 1.0) {
        return Err(Error::invalid(format!("g: radius r = {r} outside (0, 1]")));
    }
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::invalid(format!(
            "g: argument t = {t} outside [0, 1]"
        )));
    }
    let pi2 = PI * PI;
    let r2 = r * r;
    let a = 9.0 * pi2 * pi2 * (3.0 * r2 - 1.0) * (3.0 * r2 - 1.0);
    let b = 8192.0 * r2;
    Ok(3.0 * pi2 * (5.0 * r2 + 1.0)
        - (a + b * t).sqrt()
        - 54.0 * pi2 * r2 * (1.0 - t) / ((1.0 + r) * (1.0 + r)))
}

/// Second derivative of `g` in `t`: `b^2 / (4 (a + b t)^{3/2})`, strictly
/// positive for `r > 0`.
#[cfg(test)]
fn g_second_derivative_t(r: f64, t: f64) -> f64 {
    let pi2 = PI * PI;
    let r2 = r * r;
    let a = 9.0 * pi2 * pi2 * (3.0 * r2 - 1.0) * (3.0 * r2 - 1.0);
    let b = 8192.0 * r2;
    b * b / (4.0 * (a + b * t).powf(1.5))
}

/// Every region whose defining inequalities hold at the point, with the
/// documented closure of R2 at `r = 1`.
pub fn classify(p: &PolarPoint) -> RegionSet {
    let consts = constants();
    let c_star = consts.c_star.midpoint();
    let r_star = consts.r_star.midpoint();
    let (r, theta) = (p.r(), p.theta());
    let cos_t = if theta == FRAC_PI_2 { 0.0 } else { theta.cos() };
    let cos2 = cos_t * cos_t;
    let angular_split = 1.0 - {
        let s = r * r + 0.75;
        s * s / (4.0 * r * r)
    };

    let mut set = RegionSet::empty();
    if cos_t > c_star - BOUNDARY_SLACK {
        set.insert(RegionId::R1);
    }
    if r > 0.5 - BOUNDARY_SLACK
        && cos2 < angular_split + BOUNDARY_SLACK
        && cos_t <= c_star + BOUNDARY_SLACK
    {
        set.insert(RegionId::R2);
    }
    if r > 0.5 - BOUNDARY_SLACK
        && r <= r_star + BOUNDARY_SLACK
        && cos2 >= angular_split - BOUNDARY_SLACK
        && cos2 <= c_star * c_star + BOUNDARY_SLACK
    {
        set.insert(RegionId::R3);
    }
    if r <= 0.5 + BOUNDARY_SLACK && cos_t <= c_star + BOUNDARY_SLACK {
        set.insert(RegionId::R4);
    }
    set
}

/// Bounds, threshold and margin of the main inequality at one point.
#[derive(Debug, Clone, Serialize)]
pub struct MarginReport {
    pub point: PolarPoint,
    pub rr_bound: f64,
    pub kroger: f64,
    pub rhs: f64,
    pub margin: f64,
    pub regions: RegionSet,
    pub equality: bool,
}

/// Evaluate `min(rr_bound, kroger) - 9 pi^2 / (1 + r)^2` at a point.
/// The margin is negative everywhere except at `(1/2, pi/2)`, where it
/// vanishes within [`EQUALITY_TOLERANCE`].
pub fn main_inequality(p: &PolarPoint) -> MarginReport {
    let q = p.to_params();
    let rr_bound = mu3_upper_bound(&q);
    let kroger = kroger_bound(&q);
    let rhs = 9.0 * PI * PI / ((1.0 + p.r()) * (1.0 + p.r()));
    let margin = rr_bound.min(kroger) - rhs;
    MarginReport {
        point: *p,
        rr_bound,
        kroger,
        rhs,
        margin,
        regions: classify(p),
        equality: margin.abs() <= EQUALITY_TOLERANCE,
    }
}

/// Grid coordinates: `r_i = i / nr` for `i = 1..=nr` and
/// `theta_j = (j / ntheta) (pi / 2)` for `j = 1..=ntheta`, so the zero
/// boundaries are never evaluated and the arcs `r = 1`, `theta = pi/2`
/// are included exactly.
pub fn grid_point(i: usize, nr: usize, j: usize, ntheta: usize) -> PolarPoint {
    let r = i as f64 / nr as f64;
    let theta = (j as f64 / ntheta as f64) * FRAC_PI_2;
    PolarPoint::new(r, theta).expect("grid point is a valid polar point")
}

/// Result of classifying every grid point.
#[derive(Debug, Clone, Serialize)]
pub struct CoverageReport {
    pub nr: usize,
    pub ntheta: usize,
    /// Grid indices `(i, j)` with empty region membership. Coverage holds
    /// iff this is empty.
    pub uncovered: Vec<(usize, usize)>,
    /// Number of grid points belonging to each region (overlaps counted
    /// in every member).
    pub region_counts: [usize; 4],
    /// Grid radii in `(r_star, 1]` where the R2 angular threshold fails to
    /// stay above `c_star^2` (the arc hand-off check; expected zero).
    pub arc_violations: usize,
}

/// Classify an `nr x ntheta` grid and verify that for radii beyond
/// `r_star` the R2 angular condition strictly contains `cos^2 = c_star^2`.
pub fn coverage_scan(nr: usize, ntheta: usize) -> Result<CoverageReport> {
    if nr < 2 || ntheta < 2 {
        return Err(Error::invalid("coverage grid must be at least 2 x 2"));
    }
    struct RowTally {
        uncovered: Vec<(usize, usize)>,
        counts: [usize; 4],
    }
    let rows: Vec<RowTally> = (1..=nr)
        .into_par_iter()
        .map(|i| {
            let mut tally = RowTally {
                uncovered: Vec::new(),
                counts: [0; 4],
            };
            for j in 1..=ntheta {
                let p = grid_point(i, nr, j, ntheta);
                let set = classify(&p);
                if set.is_empty() {
                    tally.uncovered.push((i, j));
                }
                for id in set.iter() {
                    tally.counts[id.index()] += 1;
                }
            }
            tally
        })
        .collect();

    let mut uncovered = Vec::new();
    let mut region_counts = [0usize; 4];
    for tally in rows {
        uncovered.extend(tally.uncovered);
        for (total, count) in region_counts.iter_mut().zip(tally.counts) {
            *total += count;
        }
    }

    let consts = constants();
    let c_star2 = consts.c_star.midpoint().powi(2);
    let r_star = consts.r_star.midpoint();
    let mut arc_violations = 0;
    for i in 1..=nr {
        let r = i as f64 / nr as f64;
        if r > r_star {
            let s = r * r + 0.75;
            if 1.0 - s * s / (4.0 * r * r) <= c_star2 {
                arc_violations += 1;
            }
        }
    }

    Ok(CoverageReport {
        nr,
        ntheta,
        uncovered,
        region_counts,
        arc_violations,
    })
}

/// One grid record of the target scan. `mu3` is the raw Galerkin value at
/// the scan truncation and `target_ratio` its scale-invariant target
/// against `36 pi^2`; the raw value is only as good as the truncation,
/// which cannot resolve near-degenerate slivers (small `theta`).
#[derive(Debug, Clone, Serialize)]
pub struct ScanRow {
    pub r: f64,
    pub theta: f64,
    pub c: f64,
    pub d: f64,
    pub mu3: f64,
    pub rr_bound: f64,
    pub kroger: f64,
    pub rhs: f64,
    pub margin: f64,
    pub target_ratio: f64,
    pub regions: RegionSet,
}

impl ScanRow {
    /// Target ratio of the best certified upper bound at this point:
    /// Galerkin, Rayleigh-Ritz and Kröger are all proven upper bounds for
    /// `mu_3`, so their minimum is one too. Unlike the raw Galerkin column
    /// this stays meaningful on arbitrarily thin parameter slivers.
    pub fn certified_ratio(&self) -> f64 {
        let perimeter = 2.0 * (1.0 + self.r);
        self.mu3.min(self.rr_bound).min(self.kroger) * perimeter * perimeter / (36.0 * PI * PI)
    }
}

/// Full scan of the scale-invariant target over the grid.
#[derive(Debug, Clone, Serialize)]
pub struct TargetScanReport {
    pub nr: usize,
    pub ntheta: usize,
    pub spec: GalerkinSpec,
    pub rows: Vec<ScanRow>,
    /// Maximum raw Galerkin target over the grid.
    pub max_target: f64,
    /// `max_target / (36 pi^2)`.
    pub max_ratio: f64,
    /// Row index attaining the raw maximum.
    pub argmax: usize,
    /// Maximum certified-bound target ratio (see
    /// [`ScanRow::certified_ratio`]); this is the quantity the sharp
    /// inequality caps at 1.
    pub max_certified_ratio: f64,
    /// Row index attaining the certified maximum.
    pub argmax_certified: usize,
}

/// Evaluate the Galerkin `mu_3` and the target `mu_3 |dOmega|^2` at every
/// grid point, in deterministic row-major order.
pub fn target_scan(nr: usize, ntheta: usize, spec: &GalerkinSpec) -> Result<TargetScanReport> {
    if nr < 2 || ntheta < 2 {
        return Err(Error::invalid("target grid must be at least 2 x 2"));
    }
    let sharp = 36.0 * PI * PI;
    let rows: Vec<ScanRow> = (1..=nr)
        .into_par_iter()
        .flat_map_iter(|i| {
            let spec = *spec;
            (1..=ntheta).map(move |j| {
                let p = grid_point(i, nr, j, ntheta);
                let q = p.to_params();
                let report = main_inequality(&p);
                let mu3 = neumann_spectrum(&q, &spec, 3)
                    .expect("grid basis larger than 3")
                    .values[2];
                let target = q
                    .scale_invariant_target(mu3.max(0.0))
                    .expect("nonnegative mu3");
                ScanRow {
                    r: p.r(),
                    theta: p.theta(),
                    c: q.c(),
                    d: q.d(),
                    mu3,
                    rr_bound: report.rr_bound,
                    kroger: report.kroger,
                    rhs: report.rhs,
                    margin: report.margin,
                    target_ratio: target / sharp,
                    regions: report.regions,
                }
            })
        })
        .collect();

    let (argmax, max_row) = rows
        .iter()
        .enumerate()
        .max_by(|(_, a), (_, b)| a.target_ratio.total_cmp(&b.target_ratio))
        .expect("grid is nonempty");
    let (argmax_certified, max_certified) = rows
        .iter()
        .enumerate()
        .map(|(i, row)| (i, row.certified_ratio()))
        .max_by(|(_, a), (_, b)| a.total_cmp(b))
        .expect("grid is nonempty");
    Ok(TargetScanReport {
        nr,
        ntheta,
        spec: *spec,
        max_target: max_row.target_ratio * sharp,
        max_ratio: max_row.target_ratio,
        argmax,
        max_certified_ratio: max_certified,
        argmax_certified,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn polar(r: f64, theta: f64) -> PolarPoint {
        PolarPoint::new(r, theta).unwrap()
    }

    #[test]
    fn kroger_values() {
        let a = kroger_bound(&ParallelogramParams::new(0.0, 0.5).unwrap());
        assert!((a - 50.577821979).abs() < 1e-6, "{a}");
        let b = kroger_bound(&ParallelogramParams::new(0.6, 0.8).unwrap());
        assert!((b - 19.7569617106).abs() < 1e-6, "{b}");
    }

    #[test]
    fn kroger_dominates_square_spectrum() {
        let q = ParallelogramParams::new(0.0, 1.0).unwrap();
        let mu3 = crate::galerkin::rectangle_exact_eigenvalues(1.0, 3).unwrap()[2];
        assert!(mu3 <= kroger_bound(&q));
    }

    #[test]
    fn g_vanishes_at_the_equality_radius() {
        assert!(eval_g(0.5, 0.0).unwrap().abs() < 1e-12);
    }

    #[test]
    fn g_is_negative_at_c_star_squared() {
        let t = constants().c_star.midpoint().powi(2);
        let v = eval_g(0.5, t).unwrap();
        assert!((v - (-2.52219054882)).abs() < 1e-6, "{v}");
    }

    #[test]
    fn g_is_strictly_convex_in_t() {
        assert!(g_second_derivative_t(0.6, 0.1) > 0.0);
    }

    #[test]
    fn g_domain_errors() {
        assert!(eval_g(0.0, 0.5).is_err());
        assert!(eval_g(1.5, 0.5).is_err());
        assert!(eval_g(0.5, -0.1).is_err());
        assert!(eval_g(0.5, 1.1).is_err());
    }

    #[test]
    fn classify_examples() {
        // cos(0.5) = 0.8776 > c_star: R1 only
        let set = classify(&polar(0.5, 0.5));
        assert!(set.contains(RegionId::R1) && set.iter().count() == 1);

        // r = 0.9, theta = 1.5: cos^2 = 0.0050 < 0.2489: R2 only
        let set = classify(&polar(0.9, 1.5));
        assert!(
            set.contains(RegionId::R2) && set.iter().count() == 1,
            "{set}"
        );

        // r = 0.6, cos(theta) = 0.41: inside the R3 bracket
        let set = classify(&polar(0.6, (0.41f64).acos()));
        assert!(set.contains(RegionId::R3), "{set}");
    }

    #[test]
    fn r1_membership_ignores_radius() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        let c_star = constants().c_star.midpoint();
        for _ in 0..500 {
            let r = rng.gen_range(0.01..1.0f64);
            let theta = rng.gen_range(0.01..FRAC_PI_2);
            if theta.cos() > c_star {
                assert!(classify(&polar(r, theta)).contains(RegionId::R1));
            }
        }
    }

    #[test]
    fn arc_at_unit_radius_is_covered() {
        // r = 1 with cos(theta) <= c_star relies on R2 being closed at 1
        for j in 1..=64 {
            let theta = (j as f64 / 64.0) * FRAC_PI_2;
            let set = classify(&polar(1.0, theta));
            assert!(!set.is_empty(), "uncovered at theta = {theta}");
            if theta.cos() <= constants().c_star.midpoint() {
                assert!(set.contains(RegionId::R2), "theta = {theta}: {set}");
            }
        }
    }

    #[test]
    fn equality_point_margin_vanishes() {
        let report = main_inequality(&polar(0.5, FRAC_PI_2));
        assert!(
            report.margin.abs() <= EQUALITY_TOLERANCE,
            "{}",
            report.margin
        );
        assert!(report.equality);
    }

    #[test]
    fn margins_are_negative_off_the_optimum() {
        for (r, theta) in [(0.5, 0.5), (0.9, 1.5), (0.3, 1.2), (0.7, 1.0)] {
            let report = main_inequality(&polar(r, theta));
            assert!(
                report.margin < 0.0,
                "margin {} at ({r}, {theta})",
                report.margin
            );
            assert!(!report.equality);
        }
    }

    #[test]
    fn coverage_on_a_medium_grid() {
        let report = coverage_scan(200, 200).unwrap();
        assert!(report.uncovered.is_empty(), "{:?}", report.uncovered);
        assert!(report.region_counts.iter().all(|&c| c > 0));
        assert_eq!(report.arc_violations, 0);
        assert!(coverage_scan(1, 5).is_err());
    }

    #[test]
    fn convexity_reduction_endpoints() {
        let consts = constants();
        let c_star2 = consts.c_star.midpoint().powi(2);
        let r_star = consts.r_star.midpoint();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for _ in 0..100 {
            let r = rng.gen_range(0.5..r_star).max(0.500001);
            assert!(eval_g(r, c_star2).unwrap() < 0.0, "r = {r}");
            let s = r * r + 0.75;
            let t2 = 1.0 - s * s / (4.0 * r * r);
            assert!(eval_g(r, t2).unwrap() < 0.0, "r = {r}");
        }
        for _ in 0..100 {
            let r = rng.gen_range(0.001..0.5f64);
            assert!(eval_g(r, c_star2).unwrap() < 0.0, "r = {r}");
            assert!(eval_g(r, 0.0).unwrap() < 0.0, "r = {r}");
        }
        // equality only at r = 1/2, t = 0
        assert!(eval_g(0.5, 0.0).unwrap().abs() < 1e-12);
    }

    #[test]
    fn small_target_scan() {
        let spec = GalerkinSpec::new(6, 6).unwrap();
        let report = target_scan(40, 40, &spec).unwrap();
        assert_eq!(report.rows.len(), 1600);
        // certified ratio caps at 1, attained at the optimal rectangle
        assert!(
            report.max_certified_ratio <= 1.0 + 1e-9,
            "{}",
            report.max_certified_ratio
        );
        let top = &report.rows[report.argmax_certified];
        assert_eq!((top.c, top.d), (0.0, 0.5));
        assert!((top.certified_ratio() - 1.0).abs() < 1e-9);
        // raw Galerkin agrees wherever the truncation resolves the domain
        for row in &report.rows {
            if row.theta >= std::f64::consts::FRAC_PI_4 {
                assert!(
                    row.target_ratio <= 1.0 + 1e-9,
                    "raw ratio {} at theta {}",
                    row.target_ratio,
                    row.theta
                );
            }
        }
        // the square sits on the grid and attains 16 pi^2
        let square = report
            .rows
            .iter()
            .find(|row| row.r == 1.0 && row.theta == FRAC_PI_2)
            .unwrap();
        let target = square.target_ratio * 36.0 * PI * PI;
        assert!((target - 16.0 * PI * PI).abs() < 1e-6, "{target}");
    }
}
