use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::character::Character;
use super::constituent::{Constituent, ConstituentKind, Cuspidality};
use super::SatakeError;

/// A formal isobaric sum: constituents with positive multiplicities.
///
/// The map representation is canonical: equal constituents are merged and
/// zero multiplicities never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IsobaricRep {
    parts: BTreeMap<Constituent, u64>,
}

impl IsobaricRep {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(c: Constituent) -> Self {
        let mut r = Self::new();
        r.add(c, 1);
        r
    }

    pub fn trivial() -> Self {
        Self::single(Constituent::trivial())
    }

    pub fn add(&mut self, c: Constituent, mult: u64) {
        if mult > 0 {
            *self.parts.entry(c).or_insert(0) += mult;
        }
    }

    /// Isobaric sum.
    pub fn plus(&self, other: &IsobaricRep) -> IsobaricRep {
        let mut out = self.clone();
        for (c, m) in &other.parts {
            out.add(c.clone(), *m);
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn dimension(&self) -> u64 {
        self.parts
            .iter()
            .map(|(c, m)| u64::from(c.dimension()) * m)
            .sum()
    }

    pub fn multiplicity(&self, c: &Constituent) -> u64 {
        self.parts.get(c).copied().unwrap_or(0)
    }

    pub fn trivial_multiplicity(&self) -> u64 {
        self.multiplicity(&Constituent::trivial())
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Constituent, u64)> {
        self.parts.iter().map(|(c, m)| (c, *m))
    }

    /// Constituents in display order: decreasing dimension, then label.
    pub fn sorted(&self) -> Vec<(&Constituent, u64)> {
        let mut v: Vec<_> = self.iter().collect();
        v.sort_by(|(a, _), (b, _)| b.dimension().cmp(&a.dimension()).then_with(|| a.cmp(b)));
        v
    }

    pub fn dual(&self) -> IsobaricRep {
        let mut out = IsobaricRep::new();
        for (c, m) in &self.parts {
            out.add(c.dual(), *m);
        }
        out
    }

    /// True when every constituent is known to be cuspidal.
    pub fn is_resolved(&self) -> bool {
        self.parts
            .keys()
            .all(|c| c.cuspidality == Cuspidality::Cuspidal)
    }

    /// Number of distinct constituents (isomorphism classes).
    pub fn distinct(&self) -> usize {
        self.parts.len()
    }

    fn check_resolved(&self) -> Result<(), SatakeError> {
        match self
            .parts
            .keys()
            .find(|c| c.cuspidality != Cuspidality::Cuspidal)
        {
            Some(c) => Err(SatakeError::UnresolvedConstituent(c.to_string())),
            None => Ok(()),
        }
    }

    /// JSON form `{constituents:[{kind,k,det,char,mult,cuspidal,...}]}`.
    pub fn to_json(&self) -> IsobaricJson {
        IsobaricJson {
            constituents: self
                .sorted()
                .into_iter()
                .map(|(c, m)| ConstituentJson::from_constituent(c, m))
                .collect(),
        }
    }

    pub fn from_json(json: &IsobaricJson) -> Result<IsobaricRep, SatakeError> {
        let mut out = IsobaricRep::new();
        for entry in &json.constituents {
            if entry.mult == 0 {
                return Err(SatakeError::InvalidInput(
                    "multiplicity must be positive".into(),
                ));
            }
            out.add(entry.to_constituent()?, entry.mult);
        }
        Ok(out)
    }
}

/// Order of the pole at `s = 1` of `L(s, A x B)`: the number of pairs of
/// cuspidal constituents `sigma` of A and `tau` of B with `sigma ~ dual(tau)`,
/// counted with multiplicity.
pub fn pole_order(a: &IsobaricRep, b: &IsobaricRep) -> Result<u64, SatakeError> {
    a.check_resolved()?;
    b.check_resolved()?;
    let b_dual = b.dual();
    Ok(a.iter().map(|(c, m)| m * b_dual.multiplicity(c)).sum())
}

/// `pole_order(A, dual(A))`, the order of the pole of `L(s, A x A~)`.
pub fn self_pairing(a: &IsobaricRep) -> Result<u64, SatakeError> {
    pole_order(a, &a.dual())
}

impl fmt::Display for IsobaricRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, m)) in self.sorted().into_iter().enumerate() {
            if i > 0 {
                write!(f, " (+) ")?;
            }
            if m != 1 {
                write!(f, "{m}x ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for IsobaricRep {
    type Err = SatakeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut out = IsobaricRep::new();
        if s == "0" {
            return Ok(out);
        }
        for term in s.split("(+)") {
            let term = term.trim();
            let (mult, body) = match term.split_once("x ") {
                Some((n, rest)) if !n.is_empty() && n.chars().all(|c| c.is_ascii_digit()) => {
                    let m: u64 = n
                        .parse()
                        .map_err(|_| SatakeError::Parse(format!("bad multiplicity `{n}`")))?;
                    (m, rest)
                }
                _ => (1, term),
            };
            if mult == 0 {
                return Err(SatakeError::Parse("zero multiplicity".into()));
            }
            out.add(Constituent::parse(body)?, mult);
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IsobaricJson {
    pub constituents: Vec<ConstituentJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstituentJson {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub det: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub char: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ext: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quotient_order: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub dim: u32,
    pub mult: u64,
    pub cuspidal: Option<bool>,
}

impl ConstituentJson {
    fn from_constituent(c: &Constituent, mult: u64) -> Self {
        let mut j = ConstituentJson {
            kind: c.kind_name().to_string(),
            base: None,
            k: None,
            det: None,
            char: None,
            ext: None,
            quotient_order: None,
            label: None,
            dim: c.dimension(),
            mult,
            cuspidal: c.cuspidality.as_flag(),
        };
        match &c.kind {
            ConstituentKind::Trivial => {}
            ConstituentKind::Hecke(ch) => j.char = Some(ch.to_string()),
            ConstituentKind::Sym {
                base,
                k,
                det,
                twist,
            } => {
                j.base = Some(base.clone());
                j.k = Some(*k);
                j.det = Some(*det);
                j.char = Some(twist.to_string());
            }
            ConstituentKind::Induced {
                ext,
                quotient_order,
                character,
            } => {
                j.ext = Some(ext.clone());
                j.quotient_order = Some(*quotient_order);
                j.char = Some(character.to_string());
            }
            ConstituentKind::Opaque { label, .. } => j.label = Some(label.clone()),
        }
        j
    }

    fn to_constituent(&self) -> Result<Constituent, SatakeError> {
        let missing =
            |f: &str| SatakeError::InvalidInput(format!("`{}` entry lacks `{f}`", self.kind));
        let character = |s: &Option<String>| -> Result<Character, SatakeError> {
            s.as_deref()
                .map_or(Ok(Character::trivial()), Character::parse)
        };
        let cusp = Cuspidality::from_flag(self.cuspidal);
        let mut c = match self.kind.as_str() {
            "trivial" => Constituent::trivial(),
            "hecke" => {
                let ch = character(&self.char)?;
                if ch.is_trivial() {
                    return Err(SatakeError::InvalidInput(
                        "hecke entry with trivial character".into(),
                    ));
                }
                Constituent::hecke(ch)
            }
            "sym" => {
                let base = self.base.as_deref().ok_or_else(|| missing("base"))?;
                let k = self.k.ok_or_else(|| missing("k"))?;
                if k == 0 {
                    return Err(SatakeError::InvalidInput("sym entry with k = 0".into()));
                }
                Constituent::sym(base, k, self.det.unwrap_or(0), character(&self.char)?, cusp)
            }
            "induced" => {
                let ext = self.ext.as_deref().ok_or_else(|| missing("ext"))?;
                Constituent::induced(
                    ext,
                    self.quotient_order.unwrap_or(0),
                    character(&self.char)?,
                    cusp,
                )
            }
            "cuspidal" => {
                let label = self.label.as_deref().ok_or_else(|| missing("label"))?;
                Constituent::opaque(label, self.dim)
            }
            other => {
                return Err(SatakeError::InvalidInput(format!(
                    "unknown constituent kind `{other}`"
                )))
            }
        };
        c.cuspidality = cusp;
        if c.dimension() != self.dim {
            return Err(SatakeError::InvalidInput(format!(
                "dimension {} does not match constituent `{c}`",
                self.dim
            )));
        }
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ad_plus_one() -> IsobaricRep {
        let mut r = IsobaricRep::single(Constituent::adjoint("pi", Cuspidality::Cuspidal));
        r.add(Constituent::trivial(), 1);
        r
    }

    #[test]
    fn trivial_sum_is_self_dual() {
        let mut r = IsobaricRep::trivial();
        r.add(Constituent::trivial(), 1);
        assert_eq!(r.to_string(), "2x 1");
        assert_eq!(r.dual(), r);
    }

    #[test]
    fn adjoint_is_self_dual() {
        let r = ad_plus_one();
        assert_eq!(r.dual(), r);
        assert_eq!(r.to_string(), "Ad(pi) (+) 1");
    }

    #[test]
    fn pole_orders_from_lemmas() {
        let pi = IsobaricRep::single(Constituent::sym(
            "pi",
            1,
            0,
            Character::trivial(),
            Cuspidality::Cuspidal,
        ));
        assert_eq!(pole_order(&pi, &pi.dual()).unwrap(), 1);
        assert_eq!(pole_order(&ad_plus_one(), &ad_plus_one()).unwrap(), 2);
        let mut gl3 = ad_plus_one();
        gl3.add(
            Constituent::sym("pi", 4, -2, Character::trivial(), Cuspidality::Cuspidal),
            1,
        );
        assert_eq!(gl3.to_string(), "Sym4(pi)*det^-2 (+) Ad(pi) (+) 1");
        assert_eq!(pole_order(&gl3, &gl3).unwrap(), 3);
    }

    #[test]
    fn unresolved_constituent_is_rejected() {
        let r = IsobaricRep::single(Constituent::adjoint("pi", Cuspidality::Unknown));
        assert!(matches!(
            pole_order(&r, &r),
            Err(SatakeError::UnresolvedConstituent(_))
        ));
        let nc = IsobaricRep::single(Constituent::adjoint("pi", Cuspidality::NonCuspidal));
        assert!(self_pairing(&nc).is_err());
    }

    #[test]
    fn text_and_json_round_trip() {
        let text = "Sym4(pi)*det^-2 (+) 3x Ad(pi) (+) 2x 1";
        let r: IsobaricRep = text.parse().unwrap();
        assert_eq!(r.to_string(), text);
        assert_eq!(r.dimension(), 5 + 9 + 2);
        let json = serde_json::to_string(&r.to_json()).unwrap();
        let back: IsobaricJson = serde_json::from_str(&json).unwrap();
        assert_eq!(IsobaricRep::from_json(&back).unwrap(), r);
    }

    #[test]
    fn json_rejects_inconsistent_dimension() {
        let json = r#"{"constituents":[{"kind":"sym","base":"pi","k":2,"det":-1,"dim":4,"mult":1,"cuspidal":true}]}"#;
        let parsed: IsobaricJson = serde_json::from_str(json).unwrap();
        assert!(IsobaricRep::from_json(&parsed).is_err());
    }
}
