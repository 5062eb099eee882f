//! Named bound evaluation with a JSON record of inputs and result.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::Value;

use super::formulas::{self, rational_to_f64, BoundValue, ExactBound};
use super::BoundError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    ThmC,
    ThmD,
    Corollary,
    Propf,
    Serre,
    Ramakrishnan,
}

impl BoundKind {
    pub const ALL: [BoundKind; 6] = [
        BoundKind::ThmC,
        BoundKind::ThmD,
        BoundKind::Corollary,
        BoundKind::Propf,
        BoundKind::Serre,
        BoundKind::Ramakrishnan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundKind::ThmC => "thm-c",
            BoundKind::ThmD => "thm-d",
            BoundKind::Corollary => "corollary",
            BoundKind::Propf => "propf",
            BoundKind::Serre => "serre",
            BoundKind::Ramakrishnan => "ramakrishnan",
        }
    }

    /// `true` for upper bounds on the density of zero traces; the others
    /// are lower bounds on the density of the complement of a level set.
    pub fn is_upper(self) -> bool {
        self == BoundKind::Serre
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundKind {
    type Err = BoundError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BoundKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| BoundError::InvalidInput(format!("unknown bound `{s}`")))
    }
}

/// A real input kept exactly when it was written as an integer, fraction or
/// terminating decimal.
#[derive(Debug, Clone, PartialEq)]
pub struct Real {
    pub value: f64,
    pub exact: Option<BigRational>,
    pub text: String,
}

impl Real {
    pub fn from_f64(value: f64) -> Self {
        Self {
            value,
            exact: BigRational::from_float(value),
            text: format!("{value}"),
        }
    }
}

/// Parse `n`, `a/b` or a terminating decimal such as `-1.25` exactly.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let a: BigInt = a.trim().parse().ok()?;
        let b: BigInt = b.trim().parse().ok()?;
        return (!b.is_zero()).then(|| BigRational::new(a, b));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let n: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().ok()?
    };
    let d = num_traits::pow(BigInt::from(10), frac_part.len());
    let r = BigRational::new(n, d);
    Some(if neg { -r } else { r })
}

impl FromStr for Real {
    type Err = BoundError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let exact = parse_rational(s);
        let value = match &exact {
            Some(r) => rational_to_f64(r),
            None => s
                .trim()
                .parse::<f64>()
                .map_err(|_| BoundError::InvalidInput(format!("not a real number: `{s}`")))?,
        };
        Ok(Self {
            value,
            exact,
            text: s.trim().to_string(),
        })
    }
}

/// Inputs for a named bound. Only the fields the bound uses are read.
#[derive(Debug, Clone, Default)]
pub struct BoundArgs {
    pub m: Option<u64>,
    pub m_prime: Option<u64>,
    pub gamma: Option<Real>,
    /// Complex target, written like `3+4i`.
    pub alpha: Option<String>,
    pub r: Option<u64>,
    pub k: Option<Real>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundRecord {
    pub bound: BoundKind,
    pub inputs: BTreeMap<String, Value>,
    pub value: f64,
    /// Exact value as `p/q` when every input was exact.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
    pub vacuous: bool,
}

fn need<T: Clone>(v: &Option<T>, bound: BoundKind, name: &str) -> Result<T, BoundError> {
    v.clone()
        .ok_or_else(|| BoundError::InvalidInput(format!("{bound} needs `{name}`")))
}

fn rational_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl BoundRecord {
    fn from_float(bound: BoundKind, inputs: BTreeMap<String, Value>, v: BoundValue) -> Self {
        Self {
            bound,
            inputs,
            value: v.value,
            exact: None,
            vacuous: v.vacuous,
        }
    }

    fn from_exact(bound: BoundKind, inputs: BTreeMap<String, Value>, v: ExactBound) -> Self {
        Self {
            bound,
            inputs,
            value: v.to_f64(),
            exact: Some(rational_string(&v.value)),
            vacuous: v.vacuous,
        }
    }

    pub fn evaluate(bound: BoundKind, args: &BoundArgs) -> Result<Self, BoundError> {
        let mut inputs = BTreeMap::new();
        let gamma_sq = |g: &Real| g.exact.as_ref().map(|x| x * x);
        match bound {
            BoundKind::ThmC => {
                let m = need(&args.m, bound, "m")?;
                let g = need(&args.gamma, bound, "gamma")?;
                inputs.insert("m".into(), m.into());
                inputs.insert("gamma".into(), g.value.into());
                match gamma_sq(&g) {
                    Some(u) => Ok(Self::from_exact(
                        bound,
                        inputs,
                        formulas::thm_c_exact(m, &u)?,
                    )),
                    None => Ok(Self::from_float(
                        bound,
                        inputs,
                        formulas::thm_c_bound(m, g.value)?,
                    )),
                }
            }
            BoundKind::ThmD => {
                let m = need(&args.m, bound, "m")?;
                let mp = need(&args.m_prime, bound, "m_prime")?;
                let g = need(&args.gamma, bound, "gamma")?;
                inputs.insert("m".into(), m.into());
                inputs.insert("m_prime".into(), mp.into());
                inputs.insert("gamma".into(), g.value.into());
                match gamma_sq(&g) {
                    Some(u) => Ok(Self::from_exact(
                        bound,
                        inputs,
                        formulas::thm_d_exact(m, mp, &u)?,
                    )),
                    None => Ok(Self::from_float(
                        bound,
                        inputs,
                        formulas::thm_d_bound(m, mp, g.value)?,
                    )),
                }
            }
            BoundKind::Corollary => {
                let g = need(&args.gamma, bound, "gamma")?;
                inputs.insert("gamma".into(), g.value.into());
                match gamma_sq(&g) {
                    Some(u) => Ok(Self::from_exact(
                        bound,
                        inputs,
                        formulas::corollary_exact(&u)?,
                    )),
                    None => Ok(Self::from_float(
                        bound,
                        inputs,
                        formulas::corollary_bound(g.value)?,
                    )),
                }
            }
            BoundKind::Propf => {
                let text = need(&args.alpha, bound, "alpha")?;
                inputs.insert("alpha".into(), text.clone().into());
                let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
                if let Ok(z) = Complex::<BigRational>::from_str(&compact) {
                    let abs_sq = &z.re * &z.re + &z.im * &z.im;
                    return Ok(Self::from_exact(
                        bound,
                        inputs,
                        formulas::propf_exact(&abs_sq)?,
                    ));
                }
                let z = Complex64::from_str(&compact).map_err(|_| {
                    BoundError::InvalidInput(format!("not a complex number: `{text}`"))
                })?;
                Ok(Self::from_float(bound, inputs, formulas::propf_bound(z)?))
            }
            BoundKind::Serre => {
                let r = need(&args.r, bound, "r")?;
                inputs.insert("r".into(), r.into());
                let v = formulas::serre_bound(r)?;
                Ok(Self::from_exact(bound, inputs, ExactBound::clamp(v)))
            }
            BoundKind::Ramakrishnan => {
                let k = need(&args.k, bound, "k")?;
                inputs.insert("k".into(), k.value.into());
                match &k.exact {
                    Some(x) => Ok(Self::from_exact(
                        bound,
                        inputs,
                        formulas::ramakrishnan_exact(x)?,
                    )),
                    None => Ok(Self::from_float(
                        bound,
                        inputs,
                        formulas::ramakrishnan_bound(k.value)?,
                    )),
                }
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("bound records serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(s: &str) -> Option<Real> {
        Some(s.parse().unwrap())
    }

    #[test]
    fn rational_parsing() {
        let q = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
        assert_eq!(parse_rational("3/4"), Some(q(3, 4)));
        assert_eq!(parse_rational("-1.25"), Some(q(-5, 4)));
        assert_eq!(parse_rational(".5"), Some(q(1, 2)));
        assert_eq!(parse_rational("2"), Some(q(2, 1)));
        assert_eq!(parse_rational("1e3"), None);
        assert_eq!(parse_rational("1/0"), None);
        let r: Real = "1e-3".parse().unwrap();
        assert!(r.exact.is_none() && r.value == 1e-3);
    }

    #[test]
    fn records() {
        let args = BoundArgs {
            m: Some(4),
            gamma: real("0"),
            ..Default::default()
        };
        let rec = BoundRecord::evaluate(BoundKind::ThmC, &args).unwrap();
        assert_eq!(rec.value, 0.25);
        assert_eq!(rec.exact.as_deref(), Some("1/4"));
        assert_eq!(
            rec.to_json(),
            r#"{"bound":"thm-c","inputs":{"gamma":0.0,"m":4},"value":0.25,"exact":"1/4","vacuous":false}"#
        );

        let args = BoundArgs {
            alpha: Some("3+4i".into()),
            ..Default::default()
        };
        let rec = BoundRecord::evaluate(BoundKind::Propf, &args).unwrap();
        assert_eq!(rec.exact.as_deref(), Some("25/26"));

        let args = BoundArgs {
            r: Some(3),
            ..Default::default()
        };
        assert_eq!(
            BoundRecord::evaluate(BoundKind::Serre, &args)
                .unwrap()
                .exact
                .as_deref(),
            Some("8/9")
        );

        let args = BoundArgs {
            m: Some(2),
            m_prime: Some(1),
            gamma: real("1"),
            ..Default::default()
        };
        let rec = BoundRecord::evaluate(BoundKind::ThmD, &args).unwrap();
        assert!(rec.vacuous);
        assert_eq!(rec.value, 0.0);

        assert!(BoundRecord::evaluate(BoundKind::ThmC, &BoundArgs::default()).is_err());
        assert_eq!(
            "corollary".parse::<BoundKind>().unwrap(),
            BoundKind::Corollary
        );
    }
}
