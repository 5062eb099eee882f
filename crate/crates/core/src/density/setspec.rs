//! Sets of primes cut out by a condition on the normalized eigenvalue, and
//! the per-prime membership they induce on a stream.

use std::fmt;

use num_complex::Complex64;
use num_rational::BigRational;
use serde::Serialize;

use super::DensityError;
use crate::sources::{ChebotarevModel, EigenvalueStream, RawValue, StreamEntry};

/// Tolerance on `|a|^2` for streams whose values are only known as floats.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SetMode {
    AbsEquals,
    AbsNotEquals,
    ValueEquals,
    ValueNotEquals,
    AbsAtMost,
    AbsGreaterThan,
    AbsLessThan,
    AbsAtLeast,
}

impl SetMode {
    pub fn complement(self) -> Self {
        use SetMode::*;
        match self {
            AbsEquals => AbsNotEquals,
            AbsNotEquals => AbsEquals,
            ValueEquals => ValueNotEquals,
            ValueNotEquals => ValueEquals,
            AbsAtMost => AbsGreaterThan,
            AbsGreaterThan => AbsAtMost,
            AbsLessThan => AbsAtLeast,
            AbsAtLeast => AbsLessThan,
        }
    }

    /// The modes tested directly; the other four are their negations.
    fn is_base(self) -> bool {
        use SetMode::*;
        matches!(self, AbsEquals | ValueEquals | AbsAtMost | AbsLessThan)
    }

    fn symbol(self) -> &'static str {
        use SetMode::*;
        match self {
            AbsEquals => "|a| = ",
            AbsNotEquals => "|a| != ",
            ValueEquals => "a = ",
            ValueNotEquals => "a != ",
            AbsAtMost => "|a| <= ",
            AbsGreaterThan => "|a| > ",
            AbsLessThan => "|a| < ",
            AbsAtLeast => "|a| >= ",
        }
    }
}

/// A set of primes such as `{p : |a_p| != gamma}`. The target is real for
/// the `Abs*` modes; `tolerance: None` picks the default for the stream.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SetSpec {
    pub mode: SetMode,
    pub target: Complex64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
}

impl SetSpec {
    pub fn new(mode: SetMode, target: Complex64) -> Self {
        Self {
            mode,
            target,
            tolerance: None,
        }
    }

    pub fn abs(mode: SetMode, gamma: f64) -> Self {
        Self::new(mode, Complex64::new(gamma, 0.0))
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = Some(tolerance);
        self
    }

    pub fn complement(self) -> Self {
        Self {
            mode: self.mode.complement(),
            ..self
        }
    }

    /// Same mode and target; tolerance is ignored.
    pub fn same_set(&self, other: &SetSpec) -> bool {
        self.mode == other.mode && self.target == other.target
    }

    fn validate(&self) -> Result<(), DensityError> {
        let t = self.target;
        if !t.re.is_finite() || !t.im.is_finite() {
            return Err(DensityError::BadSet(format!("target {t} is not finite")));
        }
        let is_abs = !matches!(self.mode, SetMode::ValueEquals | SetMode::ValueNotEquals);
        if is_abs && (t.im != 0.0 || t.re < 0.0) {
            return Err(DensityError::BadSet(format!(
                "absolute-value sets need a non-negative real target, got {t}"
            )));
        }
        match self.tolerance {
            Some(tol) if !(tol >= 0.0 && tol.is_finite()) => Err(DensityError::BadSet(format!(
                "tolerance {tol} must be finite and non-negative"
            ))),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for SetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.mode.symbol())?;
        let t = self.target;
        if t.im == 0.0 {
            write!(f, "{}", t.re)
        } else {
            write!(f, "{}{:+}i", t.re, t.im)
        }
    }
}

/// Per-prime membership, in stream order.
#[derive(Debug, Clone, PartialEq)]
pub struct Membership {
    pub primes: Vec<u64>,
    pub member: Vec<bool>,
}

impl Membership {
    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn count(&self) -> usize {
        self.member.iter().filter(|&&b| b).count()
    }

    pub fn members(&self) -> impl Iterator<Item = u64> + '_ {
        self.primes
            .iter()
            .zip(&self.member)
            .filter(|(_, &b)| b)
            .map(|(&p, _)| p)
    }

    /// Membership for every prime in `primes`, e.g. the full prime set.
    pub fn all(primes: Vec<u64>) -> Self {
        let member = vec![true; primes.len()];
        Self { primes, member }
    }
}

/// Exact test on an integer value with weight 1.
fn exact_base(mode: SetMode, n: i64, target: Complex64) -> bool {
    let sq = (n as f64) * (n as f64);
    let g = target.re;
    match mode {
        SetMode::AbsEquals => sq == g * g,
        SetMode::ValueEquals => target.im == 0.0 && n as f64 == target.re,
        SetMode::AbsAtMost => sq <= g * g,
        SetMode::AbsLessThan => sq < g * g,
        _ => unreachable!("negated modes are handled by the caller"),
    }
}

fn float_base(mode: SetMode, e: &StreamEntry, target: Complex64, tol: f64) -> bool {
    let z = e.normalized;
    let g2 = target.re * target.re;
    match mode {
        SetMode::AbsEquals if target.re == 0.0 => e.exact_zero,
        SetMode::AbsEquals => (z.norm_sqr() - g2).abs() <= tol,
        SetMode::ValueEquals => (z - target).norm_sqr() <= tol,
        SetMode::AbsAtMost => z.norm_sqr() <= g2 + tol,
        SetMode::AbsLessThan => z.norm_sqr() < g2 - tol,
        _ => unreachable!("negated modes are handled by the caller"),
    }
}

/// Decide membership of every prime in the stream.
///
/// Streams of integer weight-1 values compare exactly and reject a positive
/// tolerance. Questions about `|a| = 0` always use the exact-zero flag.
pub fn classify(stream: &EigenvalueStream, spec: &SetSpec) -> Result<Membership, DensityError> {
    spec.validate()?;
    let exact = stream.is_exact();
    let tol = match (exact, spec.tolerance) {
        (true, Some(t)) if t > 0.0 => return Err(DensityError::ToleranceMisuse(t)),
        (true, _) => 0.0,
        (false, t) => t.unwrap_or(FLOAT_TOLERANCE),
    };
    let (base, negate) = if spec.mode.is_base() {
        (spec.mode, false)
    } else {
        (spec.mode.complement(), true)
    };
    let member = stream
        .entries
        .iter()
        .map(|e| {
            let hit = match e.raw {
                RawValue::Int(n) if exact => {
                    if base == SetMode::AbsEquals && spec.target.re == 0.0 {
                        e.exact_zero
                    } else {
                        exact_base(base, n, spec.target)
                    }
                }
                _ => float_base(base, e, spec.target, tol),
            };
            hit != negate
        })
        .collect();
    Ok(Membership {
        primes: stream.primes().collect(),
        member,
    })
}

/// Exact density of the set under a finite-group model, deciding each class
/// with the same rules as [`classify`].
pub fn model_density(model: &ChebotarevModel, spec: &SetSpec) -> Result<BigRational, DensityError> {
    let entries = model
        .classes
        .iter()
        .enumerate()
        .map(|(i, c)| StreamEntry {
            p: i as u64 + 2,
            raw: c.raw_trace(),
            normalized: c.trace,
            exact_zero: c.exact_zero,
        })
        .collect();
    let stream = EigenvalueStream {
        source_id: model.name.clone(),
        weight: 1,
        limit: model.classes.len() as u64 + 1,
        entries,
        excluded: Vec::new(),
    };
    let member = classify(&stream, spec)?.member;
    let hits: u64 = model
        .classes
        .iter()
        .zip(member)
        .filter(|(_, m)| *m)
        .map(|(c, _)| c.size)
        .sum();
    Ok(BigRational::new(hits.into(), model.order.into()))
}
