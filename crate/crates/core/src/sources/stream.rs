//! Prime-indexed eigenvalue streams.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// The unnormalized eigenvalue at a prime.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RawValue {
    Int(i64),
    /// A trace known only numerically, e.g. `r * zeta` for a root of unity.
    Complex {
        re: f64,
        im: f64,
    },
}

impl RawValue {
    pub fn as_complex(self) -> Complex64 {
        match self {
            RawValue::Int(n) => Complex64::new(n as f64, 0.0),
            RawValue::Complex { re, im } => Complex64::new(re, im),
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, RawValue::Int(_))
    }
}

impl fmt::Display for RawValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RawValue::Int(n) => write!(f, "{n}"),
            RawValue::Complex { re, im } => write!(f, "{re},{im}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StreamEntry {
    pub p: u64,
    pub raw: RawValue,
    /// `raw / p^((w-1)/2)`.
    pub normalized: Complex64,
    /// Set iff the raw value is exactly zero. Never derived from floats.
    pub exact_zero: bool,
}

impl StreamEntry {
    pub fn from_int(p: u64, value: i64, weight: u32) -> Self {
        let scale = normalization(p, weight);
        Self {
            p,
            raw: RawValue::Int(value),
            normalized: Complex64::new(value as f64 / scale, 0.0),
            exact_zero: value == 0,
        }
    }
}

/// `p^((w-1)/2)`.
pub fn normalization(p: u64, weight: u32) -> f64 {
    match weight {
        1 => 1.0,
        2 => (p as f64).sqrt(),
        w => (p as f64).powf((f64::from(w) - 1.0) / 2.0),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenvalueStream {
    pub source_id: String,
    pub weight: u32,
    /// Largest prime considered (or the sample count for synthetic streams).
    pub limit: u64,
    pub entries: Vec<StreamEntry>,
    /// Primes `<= limit` left out because the source is ramified there.
    pub excluded: Vec<u64>,
}

impl EigenvalueStream {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `true` if every raw value is an integer and no normalization is
    /// applied, so that set membership can be decided exactly.
    pub fn is_exact(&self) -> bool {
        self.weight == 1 && self.entries.iter().all(|e| e.raw.is_exact())
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.entries.iter().map(|e| e.p)
    }

    /// Checks that primes are strictly increasing and that the zero flags
    /// agree with the raw values.
    pub fn validate(&self) -> Result<(), String> {
        for w in self.entries.windows(2) {
            if w[0].p >= w[1].p {
                return Err(format!("primes out of order at {}", w[1].p));
            }
        }
        for e in &self.entries {
            if let RawValue::Int(n) = e.raw {
                if (n == 0) != e.exact_zero {
                    return Err(format!("zero flag disagrees with raw value at {}", e.p));
                }
            }
        }
        Ok(())
    }
}
