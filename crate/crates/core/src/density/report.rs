//! Checking an estimated density against a bound, and the report formats.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;
use serde_json::Value;

use super::estimate::DensityEstimate;
use super::setspec::{SetMode, SetSpec};
use super::DensityError;
use crate::bounds::{BoundKind, BoundRecord};
use crate::sources::SourceInfo;

/// Default allowance for finite-data error in a consistency verdict.
pub const DEFAULT_SLACK: f64 = 0.02;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// The density must be at least the value.
    Lower,
    /// The density must be at most the value.
    Upper,
}

impl Check {
    fn flip(self) -> Self {
        match self {
            Check::Lower => Check::Upper,
            Check::Upper => Check::Lower,
        }
    }
}

fn input_f64(record: &BoundRecord, key: &str) -> Result<f64, DensityError> {
    record
        .inputs
        .get(key)
        .and_then(Value::as_f64)
        .ok_or_else(|| {
            DensityError::InapplicableBound(format!("{} record has no `{key}`", record.bound))
        })
}

pub fn parse_complex(text: &str) -> Option<Complex64> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    Complex64::from_str(&compact).ok()
}

/// The set whose density the bound speaks about, and in which direction.
pub fn constrained_set(record: &BoundRecord) -> Result<(SetSpec, Check), DensityError> {
    Ok(match record.bound {
        BoundKind::ThmC | BoundKind::ThmD | BoundKind::Corollary => (
            SetSpec::abs(SetMode::AbsNotEquals, input_f64(record, "gamma")?),
            Check::Lower,
        ),
        BoundKind::Propf => {
            let text = record
                .inputs
                .get("alpha")
                .and_then(Value::as_str)
                .unwrap_or("");
            let alpha = parse_complex(text).ok_or_else(|| {
                DensityError::InapplicableBound(format!("cannot read alpha `{text}`"))
            })?;
            (SetSpec::new(SetMode::ValueNotEquals, alpha), Check::Lower)
        }
        BoundKind::Serre => (SetSpec::abs(SetMode::AbsEquals, 0.0), Check::Upper),
        BoundKind::Ramakrishnan => (
            SetSpec::abs(SetMode::AbsLessThan, input_f64(record, "k")?),
            Check::Lower,
        ),
    })
}

/// Refuse bounds whose hypotheses the source does not meet, judged from its
/// known pole orders.
pub fn check_applicable(info: &SourceInfo, record: &BoundRecord) -> Result<(), DensityError> {
    let po = info.pole_orders;
    let refuse = |why: String| {
        Err(DensityError::InapplicableBound(format!(
            "{} on {}: {why}",
            record.bound, info.id
        )))
    };
    let get = |k: &str| record.inputs.get(k).and_then(Value::as_u64);
    match record.bound {
        BoundKind::ThmC => {
            let m = get("m").unwrap_or(0);
            if m < po.k2 {
                return refuse(format!(
                    "m = {m} is below the pole order {} of L(s, pi x pi x pibar x pibar)",
                    po.k2
                ));
            }
        }
        BoundKind::ThmD | BoundKind::Corollary => {
            let (m, mp) = match record.bound {
                BoundKind::ThmD => (get("m").unwrap_or(0), get("m_prime").unwrap_or(0)),
                _ => (14, 5),
            };
            if info.dimension != 2 || po.k2 != 2 {
                return refuse(
                    "needs a GL(2) source with pole order 2 for pi x pibar twice".into(),
                );
            }
            if po.k3 != Some(mp) || po.k4 != Some(m) {
                return refuse(format!(
                    "(m, m') = ({m}, {mp}) but the source has ({}, {})",
                    po.k4.map_or("?".into(), |v| v.to_string()),
                    po.k3.map_or("?".into(), |v| v.to_string()),
                ));
            }
        }
        BoundKind::Serre => {
            let r = get("r").unwrap_or(0);
            if r != u64::from(info.dimension) {
                return refuse(format!(
                    "r = {r} but the source has dimension {}",
                    info.dimension
                ));
            }
        }
        BoundKind::Propf | BoundKind::Ramakrishnan => {}
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundSummary {
    pub name: BoundKind,
    /// The value compared against, after any complement conversion.
    pub value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
    pub check: Check,
    pub inputs: BTreeMap<String, Value>,
    pub vacuous: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DensityReport {
    pub source_id: String,
    pub set: SetSpec,
    pub estimate: DensityEstimate,
    pub bound: BoundSummary,
    pub consistent: bool,
    /// Margin in the direction of the check: `estimate - value` for lower
    /// checks, `value - estimate` for upper ones.
    pub gap: f64,
    pub slack: f64,
    /// Source-specific diagnostics, e.g. Frobenius order counts.
    pub extras: BTreeMap<String, Value>,
}

fn one_minus(exact: &Option<String>) -> Option<String> {
    let r = crate::bounds::record::parse_rational(exact.as_deref()?)?;
    let c = num_rational::BigRational::from_integer(1.into()) - r;
    Some(if c.denom() == &1.into() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    })
}

/// Compare the estimate for `set` with the bound. A bound on a set also
/// bounds its complement, with `1 - value` in the other direction.
pub fn verify_bound(
    source_id: &str,
    estimate: DensityEstimate,
    set: &SetSpec,
    record: &BoundRecord,
    slack: f64,
) -> Result<DensityReport, DensityError> {
    let (native, check) = constrained_set(record)?;
    let (value, exact, check) = if set.same_set(&native) {
        (record.value, record.exact.clone(), check)
    } else if set.same_set(&native.complement()) {
        (1.0 - record.value, one_minus(&record.exact), check.flip())
    } else {
        return Err(DensityError::InapplicableBound(format!(
            "{} constrains {native} or its complement, not {set}",
            record.bound
        )));
    };
    let x = estimate.point_estimate;
    let gap = match check {
        Check::Lower => x - value,
        Check::Upper => value - x,
    };
    Ok(DensityReport {
        source_id: source_id.to_string(),
        set: *set,
        bound: BoundSummary {
            name: record.bound,
            value,
            exact,
            check,
            inputs: record.inputs.clone(),
            vacuous: record.vacuous,
        },
        consistent: gap >= -slack,
        gap,
        slack,
        estimate,
        extras: BTreeMap::new(),
    })
}

#[derive(Serialize)]
struct JsonView<'a> {
    source: &'a str,
    set: String,
    set_spec: &'a SetSpec,
    natural: f64,
    dirichlet: Vec<[f64; 2]>,
    relative: Vec<[f64; 2]>,
    unreliable_s: Vec<f64>,
    extrapolated: f64,
    stabilized: bool,
    estimate: f64,
    limit: u64,
    members: usize,
    primes: usize,
    bound: &'a BoundSummary,
    consistent: bool,
    gap: f64,
    slack: f64,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    extras: &'a BTreeMap<String, Value>,
}

impl DensityReport {
    fn view(&self) -> JsonView<'_> {
        let e = &self.estimate;
        JsonView {
            source: &self.source_id,
            set: self.set.to_string(),
            set_spec: &self.set,
            natural: e.natural,
            dirichlet: e.dirichlet.iter().map(|p| [p.s, p.ratio]).collect(),
            relative: e.dirichlet.iter().map(|p| [p.s, p.relative]).collect(),
            unreliable_s: e
                .dirichlet
                .iter()
                .filter(|p| !p.reliable)
                .map(|p| p.s)
                .collect(),
            extrapolated: e.extrapolated,
            stabilized: e.stabilized,
            estimate: e.point_estimate,
            limit: e.limit,
            members: e.member_count,
            primes: e.stream_len,
            bound: &self.bound,
            consistent: self.consistent,
            gap: self.gap,
            slack: self.slack,
            extras: &self.extras,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.view()).expect("reports serialize")
    }

    pub fn to_csv(&self) -> String {
        let e = &self.estimate;
        let mut head = vec![
            "source",
            "set",
            "natural",
            "extrapolated",
            "stabilized",
            "estimate",
            "limit",
            "members",
            "primes",
            "bound",
            "check",
            "bound_value",
            "consistent",
            "gap",
            "slack",
        ]
        .into_iter()
        .map(String::from)
        .collect::<Vec<_>>();
        let quote = |s: &str| format!("\"{}\"", s.replace('"', "\"\""));
        let mut row = vec![
            quote(&self.source_id),
            quote(&self.set.to_string()),
            e.natural.to_string(),
            e.extrapolated.to_string(),
            e.stabilized.to_string(),
            e.point_estimate.to_string(),
            e.limit.to_string(),
            e.member_count.to_string(),
            e.stream_len.to_string(),
            self.bound.name.to_string(),
            if self.bound.check == Check::Lower {
                "lower"
            } else {
                "upper"
            }
            .to_string(),
            self.bound.value.to_string(),
            self.consistent.to_string(),
            self.gap.to_string(),
            self.slack.to_string(),
        ];
        for p in &e.dirichlet {
            head.push(format!("ratio_s={}", p.s));
            row.push(p.ratio.to_string());
            head.push(format!("relative_s={}", p.s));
            row.push(p.relative.to_string());
        }
        format!("{}\n{}\n", head.join(","), row.join(","))
    }

    pub fn to_table(&self) -> String {
        let e = &self.estimate;
        let b = &self.bound;
        let mut out = String::new();
        let _ = writeln!(out, "source      {}", self.source_id);
        let _ = writeln!(out, "set         {}", self.set);
        let _ = writeln!(
            out,
            "primes      {} (limit {}), members {}",
            e.stream_len, e.limit, e.member_count
        );
        let _ = writeln!(out, "natural     {:.6}", e.natural);
        let _ = writeln!(out, "  s        ratio     relative  tail<=    reliable");
        for p in &e.dirichlet {
            let _ = writeln!(
                out,
                "  {:<8} {:<9.6} {:<9.6} {:<9.3e} {}",
                p.s,
                p.ratio,
                p.relative,
                p.tail_bound,
                if p.reliable { "yes" } else { "no" }
            );
        }
        let _ = writeln!(
            out,
            "extrapolated {:.6} ({})",
            e.extrapolated,
            if e.stabilized {
                "stabilized"
            } else {
                "not stabilized"
            }
        );
        let rel = if b.check == Check::Lower { ">=" } else { "<=" };
        let exact = b
            .exact
            .as_ref()
            .map(|x| format!(" = {x}"))
            .unwrap_or_default();
        let _ = writeln!(
            out,
            "bound       {} : density {rel} {:.6}{exact}{}",
            b.name,
            b.value,
            if b.vacuous { " (vacuous)" } else { "" }
        );
        let _ = writeln!(out, "estimate    {:.6}", e.point_estimate);
        for (k, v) in &self.extras {
            let _ = writeln!(out, "{k:<11} {v}");
        }
        let _ = writeln!(
            out,
            "verdict     {} (gap {:+.6}, slack {})",
            if self.consistent {
                "consistent"
            } else {
                "INCONSISTENT"
            },
            self.gap,
            self.slack
        );
        out
    }

    /// Two columns `s-1` and ratio, for external plotting.
    pub fn plot_data(&self) -> String {
        let mut out = format!("# {} {}\n# s-1 ratio relative\n", self.source_id, self.set);
        for p in &self.estimate.dirichlet {
            let _ = writeln!(out, "{} {} {}", p.s - 1.0, p.ratio, p.relative);
        }
        out
    }
}
