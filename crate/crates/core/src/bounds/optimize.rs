//! The interpolation constant `c` and crossover points between bounds.

use serde::Serialize;

use super::formulas::{thm_c_raw, thm_c_raw_du, thm_d_raw, thm_d_raw_du, two_moment_parts};
use super::BoundError;

const GOLDEN: f64 = 0.618_033_988_749_894_9;

/// Golden-section search for the maximum of `f` on `[lo, hi]`.
pub fn golden_section_max(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let mut x1 = hi - GOLDEN * (hi - lo);
    let mut x2 = lo + GOLDEN * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while hi - lo > tol {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + GOLDEN * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - GOLDEN * (hi - lo);
            f1 = f(x1);
        }
    }
    0.5 * (lo + hi)
}

/// Result of maximizing the two-moment ratio over `c`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OptimalC {
    /// The maximizer; infinite when the supremum is only approached as
    /// `|c| -> infinity`.
    pub c: f64,
    pub value: f64,
}

/// Maximize the two-moment ratio over all real `c` numerically.
///
/// `c = tan t` maps the line onto `(-pi/2, pi/2)`; a grid scan brackets the
/// maximum and golden-section search refines it.
pub fn optimal_c(m: u64, m_prime: u64, gamma: f64) -> Result<OptimalC, BoundError> {
    if m == 0 || m_prime == 0 || !(gamma.is_finite() && gamma >= 0.0) {
        return Err(BoundError::InvalidInput("bad optimal_c inputs".into()));
    }
    let (mf, mpf, u) = (m as f64, m_prime as f64, gamma * gamma);
    let ratio = |c: f64| {
        let (n, d) = two_moment_parts(mf, mpf, u, c);
        if d > 0.0 {
            n / d
        } else {
            f64::NEG_INFINITY
        }
    };
    let half = std::f64::consts::FRAC_PI_2;
    const STEPS: usize = 4000;
    let t_at = |i: usize| -half + (i as f64) * std::f64::consts::PI / STEPS as f64;
    let (best_i, best_v) =
        (1..STEPS)
            .map(|i| (i, ratio(t_at(i).tan())))
            .fold(
                (0, f64::NEG_INFINITY),
                |acc, x| if x.1 > acc.1 { x } else { acc },
            );
    if !best_v.is_finite() {
        return Err(BoundError::DegenerateDenominator(
            "E[w^2] <= 0 for every c".into(),
        ));
    }
    let limit = thm_c_raw(2.0, u).unwrap_or(f64::NEG_INFINITY);
    let lo = t_at(best_i - 1);
    let hi = t_at(best_i + 1);
    let t = golden_section_max(|t| ratio(t.tan()), lo, hi, 1e-13);
    let (c, value) = (t.tan(), ratio(t.tan()));
    if limit > value + 1e-12 {
        return Ok(OptimalC {
            c: f64::INFINITY,
            value: limit,
        });
    }
    Ok(OptimalC { c, value })
}

/// Closed form of the maximizer:
/// `(u^3 + (4-2m')u^2 + (m+m'-8)u + (2m'-m)) / (-u^2 + (m'-2)u + (4-m'))`
/// with `u = gamma^2`.
pub fn optimal_c_closed_form(m: u64, m_prime: u64, gamma: f64) -> Result<f64, BoundError> {
    let (m, mp, u) = (m as f64, m_prime as f64, gamma * gamma);
    let num = ((u + (4.0 - 2.0 * mp)) * u + (m + mp - 8.0)) * u + (2.0 * mp - m);
    let den = (-u + (mp - 2.0)) * u + (4.0 - mp);
    if den.abs() <= 1e-12 {
        return Err(BoundError::DegenerateDenominator(
            "-gamma^4 + (m'-2) gamma^2 + (4-m')".into(),
        ));
    }
    Ok(num / den)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CrossingKind {
    /// The difference changes sign.
    Crossing,
    /// The curves touch without crossing (a double root).
    Tangency,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CrossoverPoint {
    pub gamma: f64,
    pub kind: CrossingKind,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Crossover {
    Points(Vec<CrossoverPoint>),
    /// The two bounds agree at every sampled `gamma`.
    Identical,
}

/// Search window for crossover points.
pub const CROSSOVER_RANGE: (f64, f64) = (0.0, 4.0);
const CROSSOVER_TOL: f64 = 1e-10;

/// The four values `+-sqrt(3 +- sqrt 5) / 2` that are sometimes quoted as the
/// crossover points of the `(14, 5)` bound and the `m = 2` bound. They solve
/// `(2 gamma^2)^2 - 3 (2 gamma^2) + 1 = 0`, whereas the tangency points of
/// the two formulas solve `gamma^4 - 3 gamma^2 + 1 = 0`.
pub fn quoted_crossover_gammas() -> [f64; 4] {
    let s5 = 5f64.sqrt();
    let a = 0.5 * (3.0 - s5).sqrt();
    let b = 0.5 * (3.0 + s5).sqrt();
    [-b, -a, a, b]
}

/// Non-negative `gamma` in `[0, 4]` at which the two-pole-order bound for
/// `(m, m')` equals the single-pole-order bound for `m_ref`, compared as raw
/// (unclamped) formulas.
pub fn crossover_gammas(m: u64, m_prime: u64, m_ref: u64) -> Result<Crossover, BoundError> {
    if m == 0 || m_prime == 0 || m_ref == 0 {
        return Err(BoundError::InvalidInput(
            "pole orders must be at least 1".into(),
        ));
    }
    let (mf, mpf, mr) = (m as f64, m_prime as f64, m_ref as f64);
    let diff = |g: f64| -> Option<f64> {
        let u = g * g;
        let v = thm_d_raw(mf, mpf, u).ok()? - thm_c_raw(mr, u).ok()?;
        v.is_finite().then_some(v)
    };
    // derivative in u = gamma^2; its zeros away from gamma = 0 are the
    // critical points in gamma
    let diff_du = |g: f64| {
        let u = g * g;
        thm_d_raw_du(mf, mpf, u) - thm_c_raw_du(mr, u)
    };

    const STEPS: usize = 4000;
    let (lo, hi) = CROSSOVER_RANGE;
    let grid: Vec<f64> = (0..=STEPS)
        .map(|i| lo + (hi - lo) * i as f64 / STEPS as f64)
        .collect();
    let values: Vec<Option<f64>> = grid.iter().map(|&g| diff(g)).collect();
    if values.iter().flatten().all(|v| v.abs() < 1e-12) {
        return Ok(Crossover::Identical);
    }

    let mut points: Vec<CrossoverPoint> = Vec::new();
    let push = |points: &mut Vec<CrossoverPoint>, gamma: f64, kind| {
        if points.iter().all(|p| (p.gamma - gamma).abs() > 1e-7) {
            points.push(CrossoverPoint { gamma, kind });
        }
    };
    for i in 0..STEPS {
        let (a, b) = (grid[i], grid[i + 1]);
        match (values[i], values[i + 1]) {
            (Some(0.0), _) => {
                let kind = if diff_du(a).abs() < 1e-9 {
                    CrossingKind::Tangency
                } else {
                    CrossingKind::Crossing
                };
                push(&mut points, a, kind);
            }
            (Some(va), Some(vb)) if va * vb < 0.0 => {
                let g = bisect(|g| diff(g).unwrap_or(f64::NAN), a, b);
                push(&mut points, g, CrossingKind::Crossing);
            }
            _ => {}
        }
        // a double root shows up as a sign change of the derivative where
        // the difference itself nearly vanishes
        let (da, db) = (diff_du(a), diff_du(b));
        if a > 0.0 && da.is_finite() && db.is_finite() && da * db < 0.0 {
            let g = bisect(diff_du, a, b);
            if let Some(v) = diff(g) {
                if v.abs() < 1e-9 {
                    push(&mut points, g, CrossingKind::Tangency);
                }
            }
        }
    }
    if let Some(Some(v)) = values.last() {
        if *v == 0.0 {
            push(&mut points, hi, CrossingKind::Crossing);
        }
    }
    points.sort_by(|x, y| x.gamma.total_cmp(&y.gamma));
    Ok(Crossover::Points(points))
}

fn bisect(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let mut fa = f(a);
    while b - a > CROSSOVER_TOL {
        let mid = 0.5 * (a + b);
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fa < 0.0) == (fm < 0.0) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    0.5 * (a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::formulas::{generic_two_moment_bound, thm_c_bound, thm_d_bound};

    #[test]
    fn numeric_argmax_matches_closed_form() {
        let opt = optimal_c(14, 5, 0.5).unwrap();
        let closed = optimal_c_closed_form(14, 5, 0.5).unwrap();
        assert!((opt.c - closed).abs() < 1e-6, "{} vs {closed}", opt.c);
        // grid bracket on [-10, 10], then golden section; the ratio is not
        // unimodal there since it vanishes at c = (u - 2)/(u - 1)
        let f = |c| generic_two_moment_bound(14, 5, 0.5, c).unwrap();
        let best = (0..=2000)
            .map(|i| -10.0 + 0.01 * i as f64)
            .max_by(|a, b| f(*a).total_cmp(&f(*b)))
            .unwrap();
        let g = golden_section_max(f, best - 0.01, best + 0.01, 1e-12);
        assert!((g - closed).abs() < 1e-6);
    }

    #[test]
    fn supremum_is_thm_d() {
        for i in 0..=60 {
            let gamma = 0.05 * i as f64;
            let opt = optimal_c(14, 5, gamma).unwrap();
            let d = thm_d_bound(14, 5, gamma).unwrap().raw;
            assert!((opt.value - d).abs() < 1e-9, "gamma = {gamma}");
            if let Ok(c) = optimal_c_closed_form(14, 5, gamma) {
                let v = generic_two_moment_bound(14, 5, gamma, c).unwrap();
                assert!((v - d).abs() < 1e-9, "gamma = {gamma}");
            }
        }
    }

    #[test]
    fn tangency_points_for_14_5() {
        let Crossover::Points(points) = crossover_gammas(14, 5, 2).unwrap() else {
            panic!("expected points");
        };
        assert_eq!(points.len(), 2);
        for p in &points {
            assert_eq!(p.kind, CrossingKind::Tangency);
            let u = p.gamma * p.gamma;
            assert!((u * u - 3.0 * u + 1.0).abs() < 1e-9);
        }
        let golden = (5f64.sqrt() - 1.0) / 2.0;
        assert!((points[0].gamma - golden).abs() < 1e-8);
        assert!((points[1].gamma - 1.0 / golden).abs() < 1e-8);
    }

    #[test]
    fn quoted_values_solve_doubled_quadratic() {
        for g in quoted_crossover_gammas() {
            let v = 2.0 * g * g;
            assert!((v * v - 3.0 * v + 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn dominance_over_m2() {
        for i in 0..=10_000 {
            let g = 4.0 * i as f64 / 10_000.0;
            let d = thm_d_bound(14, 5, g).unwrap().value;
            let c = thm_c_bound(2, g).unwrap().value;
            assert!(d >= c - 1e-12, "gamma = {g}");
        }
    }

    #[test]
    fn identical_sentinel() {
        assert_eq!(crossover_gammas(4, 2, 1).unwrap(), Crossover::Identical);
    }

    #[test]
    fn plain_crossing() {
        // the m = 2 and m = 4 bounds meet only where both vanish
        let Crossover::Points(points) = crossover_gammas(14, 5, 4).unwrap() else {
            panic!("expected points");
        };
        for p in points {
            let u = p.gamma * p.gamma;
            let d = thm_d_raw(14.0, 5.0, u).unwrap();
            let c = thm_c_raw(4.0, u).unwrap();
            assert!((d - c).abs() < 1e-8);
        }
    }
}
