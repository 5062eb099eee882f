//! Finite-group models of Frobenius statistics.

use std::path::Path;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::primes::first_primes;
use super::stream::{EigenvalueStream, RawValue, StreamEntry};
use super::SourceError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConjugacyClass {
    pub name: String,
    pub size: u64,
    pub trace: Complex64,
    /// The trace is exactly zero (a character-table fact, not a rounding).
    pub exact_zero: bool,
    pub elt_order: u64,
}

impl ConjugacyClass {
    /// The trace as a raw stream value: an integer when it is one.
    pub fn raw_trace(&self) -> RawValue {
        if self.exact_zero {
            return RawValue::Int(0);
        }
        let t = self.trace;
        if t.im == 0.0 && t.re.fract() == 0.0 && t.re.abs() < 1e15 {
            RawValue::Int(t.re as i64)
        } else {
            RawValue::Complex { re: t.re, im: t.im }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChebotarevModel {
    pub name: String,
    pub order: u64,
    pub classes: Vec<ConjugacyClass>,
}

#[derive(Serialize, Deserialize)]
struct ClassJson {
    name: String,
    size: u64,
    trace_re: f64,
    #[serde(default)]
    trace_im: f64,
    elt_order: u64,
}

#[derive(Serialize, Deserialize)]
struct ModelJson {
    #[serde(default)]
    name: Option<String>,
    order: u64,
    classes: Vec<ClassJson>,
}

impl ChebotarevModel {
    pub fn new(name: &str, order: u64, classes: Vec<ConjugacyClass>) -> Result<Self, SourceError> {
        let model = Self {
            name: name.to_string(),
            order,
            classes,
        };
        model.validate()?;
        Ok(model)
    }

    fn validate(&self) -> Result<(), SourceError> {
        let total: u64 = self.classes.iter().map(|c| c.size).sum();
        if total != self.order {
            return Err(SourceError::BadModel(format!(
                "class sizes sum to {total}, group order is {}",
                self.order
            )));
        }
        let identity: Vec<&ConjugacyClass> =
            self.classes.iter().filter(|c| c.elt_order == 1).collect();
        match identity.as_slice() {
            [id] if id.size == 1
                && id.trace.im == 0.0
                && id.trace.re >= 1.0
                && id.trace.re.fract() == 0.0 => {}
            _ => {
                return Err(SourceError::BadModel(
                    "need exactly one identity class of size 1 whose trace is the dimension".into(),
                ))
            }
        }
        if self.classes.iter().any(|c| c.size == 0) {
            return Err(SourceError::BadModel("empty conjugacy class".into()));
        }
        Ok(())
    }

    /// Dimension of the representation: the trace at the identity.
    pub fn dimension(&self) -> u32 {
        self.classes
            .iter()
            .find(|c| c.elt_order == 1)
            .map_or(0, |c| c.trace.re as u32)
    }

    /// Exact proportion of group elements whose class satisfies `pred`.
    pub fn density(&self, pred: impl Fn(&ConjugacyClass) -> bool) -> BigRational {
        let hits: u64 = self
            .classes
            .iter()
            .filter(|c| pred(c))
            .map(|c| c.size)
            .sum();
        BigRational::new(BigInt::from(hits), BigInt::from(self.order))
    }

    /// `E|trace|^4`, the pole order of `L(s, rho x rho x rhobar x rhobar)`
    /// when the model describes an Artin representation, rounded to the
    /// nearest integer.
    pub fn fourth_moment(&self) -> u64 {
        let s: f64 = self
            .classes
            .iter()
            .map(|c| c.size as f64 * c.trace.norm_sqr().powi(2))
            .sum();
        (s / self.order as f64).round() as u64
    }

    pub fn from_json(text: &str) -> Result<Self, SourceError> {
        let json: ModelJson = serde_json::from_str(text)
            .map_err(|e| SourceError::BadModel(format!("model JSON: {e}")))?;
        let classes = json
            .classes
            .into_iter()
            .map(|c| ConjugacyClass {
                exact_zero: c.trace_re == 0.0 && c.trace_im == 0.0,
                trace: Complex64::new(c.trace_re, c.trace_im),
                name: c.name,
                size: c.size,
                elt_order: c.elt_order,
            })
            .collect();
        Self::new(json.name.as_deref().unwrap_or("model"), json.order, classes)
    }

    pub fn from_file(path: &Path) -> Result<Self, SourceError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| SourceError::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        let json = ModelJson {
            name: Some(self.name.clone()),
            order: self.order,
            classes: self
                .classes
                .iter()
                .map(|c| ClassJson {
                    name: c.name.clone(),
                    size: c.size,
                    trace_re: c.trace.re,
                    trace_im: c.trace.im,
                    elt_order: c.elt_order,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&json).expect("models serialize")
    }

    /// Draw `count` Frobenius classes, weighted by class size, and attach
    /// them to the first `count` primes.
    pub fn sample(&self, count: usize, seed: u64, source_id: &str) -> EigenvalueStream {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let weights = WeightedIndex::new(self.classes.iter().map(|c| c.size))
            .expect("validated models have positive class sizes");
        let entries = first_primes(count)
            .into_iter()
            .map(|p| {
                let class = &self.classes[weights.sample(&mut rng)];
                StreamEntry {
                    p,
                    raw: class.raw_trace(),
                    normalized: class.trace,
                    exact_zero: class.exact_zero,
                }
            })
            .collect();
        EigenvalueStream {
            source_id: source_id.to_string(),
            weight: 1,
            limit: count as u64,
            entries,
            excluded: Vec::new(),
        }
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// The group of order `r^3` (Q8 for `r = 2`, the Heisenberg group mod `r`
/// otherwise) acting by its `r`-dimensional irreducible representation.
/// Its `r` central classes carry traces `r * zeta`; the other `r^2 - 1`
/// classes have size `r` and trace zero.
pub fn serre_group_model(r: u64) -> Result<ChebotarevModel, SourceError> {
    if !is_prime(r) {
        return Err(SourceError::UnsupportedR(r));
    }
    let mut classes = Vec::new();
    for k in 0..r {
        let zeta = Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / r as f64);
        // exact values at the real roots of unity
        let trace = match (k, r) {
            (0, _) => Complex64::new(r as f64, 0.0),
            (1, 2) => Complex64::new(-2.0, 0.0),
            _ => zeta * r as f64,
        };
        classes.push(ConjugacyClass {
            name: if k == 0 { "1".into() } else { format!("z^{k}") },
            size: 1,
            trace,
            exact_zero: false,
            elt_order: if k == 0 { 1 } else { r },
        });
    }
    let outer_order = if r == 2 { 4 } else { r };
    for a in 0..r {
        for b in 0..r {
            if (a, b) == (0, 0) {
                continue;
            }
            classes.push(ConjugacyClass {
                name: format!("({a},{b})"),
                size: r,
                trace: Complex64::new(0.0, 0.0),
                exact_zero: true,
                elt_order: outer_order,
            });
        }
    }
    let name = if r == 2 {
        "Q8".to_string()
    } else {
        format!("Heis({r})")
    };
    ChebotarevModel::new(&name, r * r * r, classes)
}
