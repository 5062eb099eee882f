//! Closed-form density bounds, in floating point and in exact rationals.
//!
//! Every lacunarity bound depends on `gamma` only through `u = gamma^2`,
//! so the exact variants take `u` as a rational.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::BoundError;

/// A density bound after clamping to `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundValue {
    pub value: f64,
    /// The unclamped right-hand side.
    pub raw: f64,
    /// Set iff the raw value fell outside `[0, 1]` and was clamped.
    pub vacuous: bool,
}

impl BoundValue {
    pub fn clamp(raw: f64) -> Self {
        let value = raw.clamp(0.0, 1.0);
        Self {
            value,
            raw,
            vacuous: value != raw,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactBound {
    pub value: BigRational,
    pub raw: BigRational,
    pub vacuous: bool,
}

impl ExactBound {
    pub fn clamp(raw: BigRational) -> Self {
        let zero = BigRational::zero();
        let one = BigRational::one();
        let value = if raw < zero {
            zero
        } else if raw > one {
            one
        } else {
            raw.clone()
        };
        let vacuous = value != raw;
        Self {
            value,
            raw,
            vacuous,
        }
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.value)
    }
}

pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

const DEGENERATE_TOL: f64 = 1e-12;

fn check_den(den: f64, what: &str) -> Result<f64, BoundError> {
    if !den.is_finite() || den.abs() <= DEGENERATE_TOL {
        return Err(BoundError::DegenerateDenominator(what.to_string()));
    }
    Ok(den)
}

fn check_pole_orders(m: u64, m_prime: u64) -> Result<(), BoundError> {
    if m == 0 || m_prime == 0 {
        return Err(BoundError::InvalidInput(
            "pole orders must be at least 1".into(),
        ));
    }
    Ok(())
}

fn check_gamma(gamma: f64) -> Result<f64, BoundError> {
    if !(gamma.is_finite() && gamma >= 0.0) {
        return Err(BoundError::InvalidInput(format!(
            "gamma must be a non-negative real, got {gamma}"
        )));
    }
    Ok(gamma * gamma)
}

/// Lower bound for the density of `{v : |a_v| != gamma}` from a pole of
/// order `m` of `L(s, pi x pi x pibar x pibar)`:
/// `1 - (m - 1) / (m - 2 gamma^2 + gamma^4)`.
pub fn thm_c_bound(m: u64, gamma: f64) -> Result<BoundValue, BoundError> {
    check_pole_orders(m, 1)?;
    let u = check_gamma(gamma)?;
    Ok(BoundValue::clamp(thm_c_raw(m as f64, u)?))
}

pub(crate) fn thm_c_raw(m: f64, u: f64) -> Result<f64, BoundError> {
    let den = check_den(m - 2.0 * u + u * u, "m - 2 gamma^2 + gamma^4")?;
    Ok(1.0 - (m - 1.0) / den)
}

pub fn thm_c_exact(m: u64, gamma_sq: &BigRational) -> Result<ExactBound, BoundError> {
    check_pole_orders(m, 1)?;
    check_gamma_sq(gamma_sq)?;
    let m = int(m as i64);
    let u = gamma_sq;
    let den = &m - int(2) * u + u * u;
    if den.is_zero() {
        return Err(BoundError::DegenerateDenominator(
            "m - 2 gamma^2 + gamma^4".into(),
        ));
    }
    Ok(ExactBound::clamp(
        BigRational::one() - (m - BigRational::one()) / den,
    ))
}

fn check_gamma_sq(u: &BigRational) -> Result<(), BoundError> {
    if u.is_negative() {
        return Err(BoundError::InvalidInput(
            "gamma^2 must be non-negative".into(),
        ));
    }
    Ok(())
}

/// Numerator `m - m'^2 + 4m' - 8` of the two-pole-order bound.
fn thm_d_numerator(m: f64, mp: f64) -> f64 {
    m - mp * mp + 4.0 * mp - 8.0
}

/// Denominator `u^4 + (4-2m')u^3 + (2m'+m-12)u^2 + (4m'-2m)u + (2m-m'^2)`.
pub(crate) fn thm_d_denominator(m: f64, mp: f64, u: f64) -> f64 {
    let coeffs = [
        1.0,
        4.0 - 2.0 * mp,
        2.0 * mp + m - 12.0,
        4.0 * mp - 2.0 * m,
        2.0 * m - mp * mp,
    ];
    coeffs.iter().fold(0.0, |acc, c| acc * u + c)
}

fn thm_d_denominator_derivative(m: f64, mp: f64, u: f64) -> f64 {
    let coeffs = [
        4.0,
        3.0 * (4.0 - 2.0 * mp),
        2.0 * (2.0 * mp + m - 12.0),
        4.0 * mp - 2.0 * m,
    ];
    coeffs.iter().fold(0.0, |acc, c| acc * u + c)
}

pub(crate) fn thm_d_raw(m: f64, mp: f64, u: f64) -> Result<f64, BoundError> {
    let den = check_den(thm_d_denominator(m, mp, u), "degree-8 denominator")?;
    Ok(1.0 - thm_d_numerator(m, mp) / den)
}

/// `d/du` of the raw two-pole-order bound.
pub(crate) fn thm_d_raw_du(m: f64, mp: f64, u: f64) -> f64 {
    let den = thm_d_denominator(m, mp, u);
    thm_d_numerator(m, mp) * thm_d_denominator_derivative(m, mp, u) / (den * den)
}

/// `d/du` of the raw single-pole-order bound.
pub(crate) fn thm_c_raw_du(m: f64, u: f64) -> f64 {
    let den = m - 2.0 * u + u * u;
    (m - 1.0) * (2.0 * u - 2.0) / (den * den)
}

/// Lower bound for the density of `{v : |a_v| != gamma}` given poles of
/// order `m` for `pi^{x4}`-type and `m'` for `pi^{x3} x pibar^{x3}`
/// Rankin-Selberg products, with the second moment pinned to 2.
pub fn thm_d_bound(m: u64, m_prime: u64, gamma: f64) -> Result<BoundValue, BoundError> {
    check_pole_orders(m, m_prime)?;
    let u = check_gamma(gamma)?;
    Ok(BoundValue::clamp(thm_d_raw(m as f64, m_prime as f64, u)?))
}

pub fn thm_d_exact(m: u64, m_prime: u64, gamma_sq: &BigRational) -> Result<ExactBound, BoundError> {
    check_pole_orders(m, m_prime)?;
    check_gamma_sq(gamma_sq)?;
    let (m, mp) = (int(m as i64), int(m_prime as i64));
    let coeffs = [
        BigRational::one(),
        int(4) - int(2) * &mp,
        int(2) * &mp + &m - int(12),
        int(4) * &mp - int(2) * &m,
        int(2) * &m - &mp * &mp,
    ];
    let den = coeffs
        .iter()
        .fold(BigRational::zero(), |acc, c| acc * gamma_sq + c);
    if den.is_zero() {
        return Err(BoundError::DegenerateDenominator(
            "degree-8 denominator".into(),
        ));
    }
    let num = &m - &mp * &mp + int(4) * &mp - int(8);
    Ok(ExactBound::clamp(BigRational::one() - num / den))
}

/// `1 - 1 / (3 + gamma^2 (gamma^2 - 2)^3)`, the case `m = 14`, `m' = 5`.
pub fn corollary_bound(gamma: f64) -> Result<BoundValue, BoundError> {
    let u = check_gamma(gamma)?;
    let den = check_den(3.0 + u * (u - 2.0).powi(3), "3 + gamma^2 (gamma^2 - 2)^3")?;
    Ok(BoundValue::clamp(1.0 - 1.0 / den))
}

pub fn corollary_exact(gamma_sq: &BigRational) -> Result<ExactBound, BoundError> {
    check_gamma_sq(gamma_sq)?;
    let u = gamma_sq;
    let t = u - int(2);
    let den = int(3) + u * &t * &t * &t;
    if den.is_zero() {
        return Err(BoundError::DegenerateDenominator(
            "3 + gamma^2 (gamma^2 - 2)^3".into(),
        ));
    }
    Ok(ExactBound::clamp(BigRational::one() - den.recip()))
}

/// Moments `E[x^k]` of `x = |a_v|^2`, `k = 0..=4`, fixed by the pole orders.
fn moments(m: f64, mp: f64) -> [f64; 5] {
    [1.0, 1.0, 2.0, mp, m]
}

/// Cauchy-Schwarz density bound `E[w]^2 / E[w^2]` for the weight
/// `w = (x - gamma^2)(x - c)`, which vanishes where `|a_v| = gamma`.
/// Returns the raw ratio.
pub fn generic_two_moment_bound(
    m: u64,
    m_prime: u64,
    gamma: f64,
    c: f64,
) -> Result<f64, BoundError> {
    check_pole_orders(m, m_prime)?;
    let u = check_gamma(gamma)?;
    if !c.is_finite() {
        return Err(BoundError::InvalidInput("c must be finite".into()));
    }
    let (num, den) = two_moment_parts(m as f64, m_prime as f64, u, c);
    Ok(num / check_den(den, "E[w^2]")?)
}

/// `(E[w]^2, E[w^2])` for `w = (x - u)(x - c)`.
pub(crate) fn two_moment_parts(m: f64, mp: f64, u: f64, c: f64) -> (f64, f64) {
    let mo = moments(m, mp);
    // w = x^2 - s x + p
    let (s, p) = (u + c, u * c);
    let ew = mo[2] - s * mo[1] + p * mo[0];
    // w^2 = x^4 - 2s x^3 + (s^2 + 2p) x^2 - 2sp x + p^2
    let ew2 =
        mo[4] - 2.0 * s * mo[3] + (s * s + 2.0 * p) * mo[2] - 2.0 * s * p * mo[1] + p * p * mo[0];
    (ew * ew, ew2)
}

/// Lower bound `|alpha|^2 / (|alpha|^2 + 1)` for the density of
/// `{v : a_v != alpha}`.
pub fn propf_bound(alpha: Complex64) -> Result<BoundValue, BoundError> {
    if !(alpha.re.is_finite() && alpha.im.is_finite()) {
        return Err(BoundError::InvalidInput("alpha must be finite".into()));
    }
    let a2 = alpha.norm_sqr();
    Ok(BoundValue::clamp(a2 / (a2 + 1.0)))
}

pub fn propf_exact(alpha_abs_sq: &BigRational) -> Result<ExactBound, BoundError> {
    check_gamma_sq(alpha_abs_sq)?;
    Ok(ExactBound::clamp(
        alpha_abs_sq / (alpha_abs_sq + BigRational::one()),
    ))
}

/// Upper bound `1 - 1/r^2` for the density of zero traces of an
/// irreducible `r`-dimensional representation.
pub fn serre_bound(r: u64) -> Result<BigRational, BoundError> {
    if r == 0 {
        return Err(BoundError::InvalidInput("r must be at least 1".into()));
    }
    let r = int(r as i64);
    Ok(BigRational::one() - (&r * &r).recip())
}

/// Lower bound `(k^2 - 1)/k^2` for the density of `{v : |a_v| < k}`.
pub fn ramakrishnan_bound(k: f64) -> Result<BoundValue, BoundError> {
    if !(k.is_finite() && k > 0.0) {
        return Err(BoundError::InvalidInput(format!(
            "k must be positive, got {k}"
        )));
    }
    Ok(BoundValue::clamp((k * k - 1.0) / (k * k)))
}

pub fn ramakrishnan_exact(k: &BigRational) -> Result<ExactBound, BoundError> {
    if !k.is_positive() {
        return Err(BoundError::InvalidInput("k must be positive".into()));
    }
    let k2 = k * k;
    Ok(ExactBound::clamp((&k2 - BigRational::one()) / k2))
}
