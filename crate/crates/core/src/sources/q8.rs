//! Frobenius traces of the 2-dimensional representation of a Q8 extension.
//!
//! For a degree-8 Galois polynomial the factorization pattern mod an
//! unramified `p` is `8/d` factors of degree `d`, where `d` is the order of
//! Frobenius. In Q8 the order determines the trace of the faithful
//! 2-dimensional representation: 1 -> 2, 2 -> -2, 4 -> 0.

use std::path::Path;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use super::gfp;
use super::primes::prime_sieve;
use super::stream::{EigenvalueStream, StreamEntry};
use super::SourceError;

/// `x^8 - 72x^6 + 180x^4 - 144x^2 + 36`, lowest degree first.
pub const DEFAULT_Q8_POLY: [i64; 9] = [36, 0, -144, 0, 180, 0, -72, 0, 1];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Q8Source {
    /// Monic integer polynomial, lowest degree first.
    pub coeffs: Vec<i64>,
    pub discriminant: BigInt,
}

/// Frobenius order statistics collected while building a stream.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OrderCounts {
    pub order1: u64,
    pub order2: u64,
    pub order4: u64,
}

impl OrderCounts {
    pub fn total(&self) -> u64 {
        self.order1 + self.order2 + self.order4
    }

    pub fn frequencies(&self) -> [f64; 3] {
        let t = self.total().max(1) as f64;
        [self.order1, self.order2, self.order4].map(|c| c as f64 / t)
    }

    /// Pearson chi-square statistic against `(1/8, 1/8, 3/4)`.
    pub fn chi_square(&self) -> f64 {
        let t = self.total() as f64;
        [
            (self.order1, 0.125),
            (self.order2, 0.125),
            (self.order4, 0.75),
        ]
        .iter()
        .map(|&(obs, pr)| {
            let exp = t * pr;
            (obs as f64 - exp).powi(2) / exp
        })
        .sum()
    }
}

/// 99.9% quantile of chi-square with two degrees of freedom.
pub const CHI_SQUARE_THRESHOLD: f64 = 13.8155;

impl Q8Source {
    pub fn new(coeffs: Vec<i64>) -> Result<Self, SourceError> {
        if coeffs.len() != 9 || coeffs[8] != 1 {
            return Err(SourceError::BadSpec(
                "a Q8 polynomial must be monic of degree 8".into(),
            ));
        }
        let discriminant = discriminant(&coeffs);
        if discriminant.is_zero() {
            return Err(SourceError::BadSpec(
                "polynomial has a repeated root".into(),
            ));
        }
        Ok(Self {
            coeffs,
            discriminant,
        })
    }

    pub fn default_polynomial() -> Self {
        Self::new(DEFAULT_Q8_POLY.to_vec()).expect("default polynomial is valid")
    }

    /// Read coefficients from a file, highest degree first, separated by
    /// whitespace or commas. Lines starting with `#` are ignored.
    pub fn from_file(path: &Path) -> Result<Self, SourceError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| SourceError::Io(format!("{}: {e}", path.display())))?;
        let mut coeffs = Vec::new();
        for line in text.lines().filter(|l| !l.trim_start().starts_with('#')) {
            for tok in line.split(|c: char| c.is_whitespace() || c == ',') {
                if tok.is_empty() {
                    continue;
                }
                coeffs.push(tok.parse::<i64>().map_err(|_| {
                    SourceError::BadSpec(format!("bad coefficient `{tok}` in {}", path.display()))
                })?);
            }
        }
        coeffs.reverse();
        Self::new(coeffs)
    }

    /// Short stable identifier: `q8` for the default polynomial, else a hash
    /// of the coefficients.
    pub fn id(&self) -> String {
        if self.coeffs == DEFAULT_Q8_POLY {
            return "q8".into();
        }
        let text: Vec<String> = self.coeffs.iter().map(i64::to_string).collect();
        let digest = Sha256::digest(text.join(",").as_bytes());
        let hex: String = digest[..6].iter().map(|b| format!("{b:02x}")).collect();
        format!("q8:{hex}")
    }

    pub fn is_ramified(&self, p: u64) -> bool {
        self.discriminant.mod_floor(&BigInt::from(p)).is_zero()
    }

    /// Order of Frobenius at an unramified `p`.
    pub fn frobenius_order(&self, p: u64) -> Result<u64, SourceError> {
        let f = gfp::from_ints(&self.coeffs, p);
        let degrees = gfp::factor_degrees(&f, p);
        let d = degrees[0];
        if degrees.iter().any(|&e| e != d) {
            return Err(SourceError::NotGaloisConsistent { p, degrees });
        }
        if !matches!(d, 1 | 2 | 4) {
            return Err(SourceError::NotGaloisConsistent { p, degrees });
        }
        Ok(d as u64)
    }

    pub fn eigenvalues(&self, limit: u64) -> Result<(EigenvalueStream, OrderCounts), SourceError> {
        let primes = prime_sieve(limit);
        let (good, excluded): (Vec<u64>, Vec<u64>) =
            primes.iter().partition(|&&p| !self.is_ramified(p));
        let orders: Result<Vec<u64>, SourceError> =
            good.par_iter().map(|&p| self.frobenius_order(p)).collect();
        let orders = orders?;
        let mut counts = OrderCounts::default();
        let entries = good
            .iter()
            .zip(&orders)
            .map(|(&p, &d)| {
                let trace = match d {
                    1 => {
                        counts.order1 += 1;
                        2
                    }
                    2 => {
                        counts.order2 += 1;
                        -2
                    }
                    _ => {
                        counts.order4 += 1;
                        0
                    }
                };
                StreamEntry::from_int(p, trace, 1)
            })
            .collect();
        Ok((
            EigenvalueStream {
                source_id: self.id(),
                weight: 1,
                limit,
                entries,
                excluded,
            },
            counts,
        ))
    }
}

/// Discriminant of a monic polynomial (lowest degree first):
/// `(-1)^(n(n-1)/2) Res(f, f')`.
pub fn discriminant(coeffs: &[i64]) -> BigInt {
    let n = coeffs.len() - 1;
    let f: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
    let df: Vec<BigInt> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    let res = resultant(&f, &df);
    let lead = &f[n];
    let d = res / lead;
    if (n * (n - 1) / 2) % 2 == 1 {
        -d
    } else {
        d
    }
}

/// Resultant as the determinant of the Sylvester matrix.
fn resultant(f: &[BigInt], g: &[BigInt]) -> BigInt {
    let (m, n) = (f.len() - 1, g.len() - 1);
    let size = m + n;
    let mut rows = vec![vec![BigInt::zero(); size]; size];
    // highest degree first along each row
    for i in 0..n {
        for (j, c) in f.iter().rev().enumerate() {
            rows[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in g.iter().rev().enumerate() {
            rows[n + i][i + j] = c.clone();
        }
    }
    bareiss_determinant(rows)
}

/// Fraction-free Gaussian elimination.
fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign.is_negative() {
        -det
    } else {
        det
    }
}
