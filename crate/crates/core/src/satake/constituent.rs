use std::fmt;

use serde::{Deserialize, Serialize};

use super::character::{is_identifier, Character, Generator, OMEGA};
use super::SatakeError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Cuspidality {
    Cuspidal,
    NonCuspidal,
    Unknown,
}

impl Cuspidality {
    pub fn as_flag(self) -> Option<bool> {
        match self {
            Cuspidality::Cuspidal => Some(true),
            Cuspidality::NonCuspidal => Some(false),
            Cuspidality::Unknown => None,
        }
    }

    pub fn from_flag(flag: Option<bool>) -> Self {
        match flag {
            Some(true) => Cuspidality::Cuspidal,
            Some(false) => Cuspidality::NonCuspidal,
            None => Cuspidality::Unknown,
        }
    }
}

/// The label of a constituent. Two constituents are isomorphic iff their
/// labels are equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConstituentKind {
    Trivial,
    /// A non-trivial Hecke character of F.
    Hecke(Character),
    /// `Sym^k(base) (x) det^det (x) twist`, with `k >= 1`.
    Sym {
        base: String,
        k: u32,
        det: i64,
        twist: Character,
    },
    /// Automorphic induction from the quadratic extension `ext` of a
    /// character written in the `mu`/`q` generators. The label is the
    /// smaller of `psi` and `psi^tau`.
    Induced {
        ext: String,
        quotient_order: u32,
        character: Character,
    },
    /// An opaque cuspidal representation known only by name and degree.
    Opaque {
        label: String,
        dim: u32,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Constituent {
    pub kind: ConstituentKind,
    pub cuspidality: Cuspidality,
}

/// Name of the central-character generator of a base representation.
pub fn central_character_name(base: &str) -> String {
    if base == "pi" {
        OMEGA.to_string()
    } else {
        format!("{OMEGA}_{base}")
    }
}

impl Constituent {
    pub fn trivial() -> Self {
        Self {
            kind: ConstituentKind::Trivial,
            cuspidality: Cuspidality::Cuspidal,
        }
    }

    /// A Hecke character; the trivial character normalizes to [`Self::trivial`].
    pub fn hecke(character: Character) -> Self {
        if character.is_trivial() {
            return Self::trivial();
        }
        Self {
            kind: ConstituentKind::Hecke(character),
            cuspidality: Cuspidality::Cuspidal,
        }
    }

    /// `Sym^k(base) (x) det^det (x) twist`. For `k = 0` this is the character
    /// `omega^det * twist`.
    pub fn sym(base: &str, k: u32, det: i64, twist: Character, cuspidality: Cuspidality) -> Self {
        if k == 0 {
            let omega = Character::power(Generator::new(central_character_name(base), 0), det);
            return Self::hecke(omega.mul(&twist));
        }
        let cuspidality = if k == 1 {
            Cuspidality::Cuspidal
        } else {
            cuspidality
        };
        Self {
            kind: ConstituentKind::Sym {
                base: base.to_string(),
                k,
                det,
                twist,
            },
            cuspidality,
        }
    }

    /// `Ad(base) = Sym^2(base) (x) det^-1`.
    pub fn adjoint(base: &str, cuspidality: Cuspidality) -> Self {
        Self::sym(base, 2, -1, Character::trivial(), cuspidality)
    }

    pub fn induced(
        ext: &str,
        quotient_order: u32,
        character: Character,
        cuspidality: Cuspidality,
    ) -> Self {
        let conjugate = character.galois_conjugate(quotient_order);
        let character = character.min(conjugate);
        Self {
            kind: ConstituentKind::Induced {
                ext: ext.to_string(),
                quotient_order,
                character,
            },
            cuspidality,
        }
    }

    pub fn opaque(label: &str, dim: u32) -> Self {
        Self {
            kind: ConstituentKind::Opaque {
                label: label.to_string(),
                dim,
            },
            cuspidality: Cuspidality::Cuspidal,
        }
    }

    pub fn dimension(&self) -> u32 {
        match &self.kind {
            ConstituentKind::Trivial | ConstituentKind::Hecke(_) => 1,
            ConstituentKind::Sym { k, .. } => k + 1,
            ConstituentKind::Induced { .. } => 2,
            ConstituentKind::Opaque { dim, .. } => *dim,
        }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self.kind, ConstituentKind::Trivial)
    }

    /// The contragredient. For GL(2) symmetric powers the determinant
    /// exponent moves from `j` to `-j-k`.
    pub fn dual(&self) -> Constituent {
        let cusp = self.cuspidality;
        match &self.kind {
            ConstituentKind::Trivial => self.clone(),
            ConstituentKind::Hecke(c) => Self::hecke(c.inverse()),
            ConstituentKind::Sym {
                base,
                k,
                det,
                twist,
            } => Self::sym(base, *k, -det - i64::from(*k), twist.inverse(), cusp),
            ConstituentKind::Induced {
                ext,
                quotient_order,
                character,
            } => Self::induced(ext, *quotient_order, character.inverse(), cusp),
            ConstituentKind::Opaque { label, dim } => {
                let dual_label = match label.strip_suffix('~') {
                    Some(stripped) => stripped.to_string(),
                    None => format!("{label}~"),
                };
                Self {
                    kind: ConstituentKind::Opaque {
                        label: dual_label,
                        dim: *dim,
                    },
                    cuspidality: cusp,
                }
            }
        }
    }

    pub(crate) fn kind_name(&self) -> &'static str {
        match self.kind {
            ConstituentKind::Trivial => "trivial",
            ConstituentKind::Hecke(_) => "hecke",
            ConstituentKind::Sym { .. } => "sym",
            ConstituentKind::Induced { .. } => "induced",
            ConstituentKind::Opaque { .. } => "cuspidal",
        }
    }

    /// Parse one term of the canonical text form (without multiplicity).
    pub fn parse(text: &str) -> Result<Constituent, SatakeError> {
        let text = text.trim();
        let (body, cusp) = if let Some(b) = text.strip_suffix("{nc}") {
            (b, Some(Cuspidality::NonCuspidal))
        } else if let Some(b) = text.strip_suffix("{?}") {
            (b, Some(Cuspidality::Unknown))
        } else {
            (text, None)
        };
        let cuspidality = cusp.unwrap_or(Cuspidality::Cuspidal);
        let mut c = parse_body(body)?;
        c.cuspidality = cuspidality;
        Ok(c)
    }
}

fn parse_err(msg: impl Into<String>) -> SatakeError {
    SatakeError::Parse(msg.into())
}

/// Splits `name(inner)rest` into `(inner, rest)`.
fn parenthesized<'a>(text: &'a str, what: &str) -> Result<(&'a str, &'a str), SatakeError> {
    let open = text
        .find('(')
        .ok_or_else(|| parse_err(format!("expected `(` in {what} `{text}`")))?;
    let close = text[open..]
        .find(')')
        .map(|i| i + open)
        .ok_or_else(|| parse_err(format!("unbalanced parentheses in `{text}`")))?;
    Ok((&text[open + 1..close], &text[close + 1..]))
}

fn parse_body(body: &str) -> Result<Constituent, SatakeError> {
    if body == "1" {
        return Ok(Constituent::trivial());
    }
    if let Some(rest) = body.strip_prefix("Ad(") {
        let (base, tail) = parenthesized(&format!("({rest}"), "adjoint")
            .map(|(b, t)| (b.to_string(), t.to_string()))?;
        check_ident(&base)?;
        let twist = match tail.strip_prefix('*') {
            Some(t) => Character::parse(t)?,
            None if tail.is_empty() => Character::trivial(),
            None => return Err(parse_err(format!("trailing text in `{body}`"))),
        };
        return Ok(Constituent::sym(&base, 2, -1, twist, Cuspidality::Cuspidal));
    }
    if let Some(rest) = body.strip_prefix("Sym") {
        let digits: String = rest.chars().take_while(char::is_ascii_digit).collect();
        if !digits.is_empty() {
            let k: u32 = digits.parse().map_err(|_| parse_err("bad Sym degree"))?;
            let (base, tail) = parenthesized(&rest[digits.len()..], "symmetric power")?;
            check_ident(base)?;
            let mut det = 0;
            let mut tail = tail;
            if let Some(t) = tail.strip_prefix("*det^") {
                let end = t.find('*').unwrap_or(t.len());
                det = t[..end]
                    .parse::<i64>()
                    .map_err(|_| parse_err(format!("bad det exponent in `{body}`")))?;
                tail = &t[end..];
            }
            let twist = match tail.strip_prefix('*') {
                Some(t) => Character::parse(t)?,
                None if tail.is_empty() => Character::trivial(),
                None => return Err(parse_err(format!("trailing text in `{body}`"))),
            };
            if k == 0 {
                return Err(parse_err("Sym0 is written as a character"));
            }
            return Ok(Constituent::sym(base, k, det, twist, Cuspidality::Cuspidal));
        }
    }
    if let Some(rest) = body.strip_prefix("I_") {
        let (head, _) = rest.split_at(rest.find('(').unwrap_or(rest.len()));
        let (ext, order) = match head.split_once('[') {
            Some((e, o)) => (
                e,
                o.strip_suffix(']')
                    .and_then(|o| o.parse::<u32>().ok())
                    .ok_or_else(|| parse_err(format!("bad quotient order in `{body}`")))?,
            ),
            None => (head, 0),
        };
        check_ident(ext)?;
        let (inner, tail) = parenthesized(rest, "induced")?;
        if !tail.is_empty() {
            return Err(parse_err(format!("trailing text in `{body}`")));
        }
        let character = Character::parse(inner)?;
        return Ok(Constituent::induced(
            ext,
            order,
            character,
            Cuspidality::Cuspidal,
        ));
    }
    if let Some(rest) = body.strip_prefix("Cusp[") {
        let (dim, rest) = rest
            .split_once(']')
            .ok_or_else(|| parse_err(format!("bad opaque constituent `{body}`")))?;
        let dim: u32 = dim.parse().map_err(|_| parse_err("bad opaque dimension"))?;
        let (label, tail) = parenthesized(rest, "opaque")?;
        if !tail.is_empty() || label.is_empty() {
            return Err(parse_err(format!("bad opaque constituent `{body}`")));
        }
        return Ok(Constituent::opaque(label, dim));
    }
    let character = Character::parse(body)?;
    if character.is_trivial() {
        return Err(parse_err(format!("cannot parse constituent `{body}`")));
    }
    Ok(Constituent::hecke(character))
}

fn check_ident(s: &str) -> Result<(), SatakeError> {
    if is_identifier(s) {
        Ok(())
    } else {
        Err(parse_err(format!("bad label `{s}`")))
    }
}

impl fmt::Display for Constituent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ConstituentKind::Trivial => write!(f, "1")?,
            ConstituentKind::Hecke(c) => write!(f, "{c}")?,
            ConstituentKind::Sym {
                base,
                k,
                det,
                twist,
            } => {
                if *k == 2 && *det == -1 {
                    write!(f, "Ad({base})")?;
                } else {
                    write!(f, "Sym{k}({base})")?;
                    if *det != 0 {
                        write!(f, "*det^{det}")?;
                    }
                }
                if !twist.is_trivial() {
                    write!(f, "*{twist}")?;
                }
            }
            ConstituentKind::Induced {
                ext,
                quotient_order,
                character,
            } => {
                write!(f, "I_{ext}")?;
                if *quotient_order != 0 {
                    write!(f, "[{quotient_order}]")?;
                }
                write!(f, "({character})")?;
            }
            ConstituentKind::Opaque { label, dim } => write!(f, "Cusp[{dim}]({label})")?,
        }
        match self.cuspidality {
            Cuspidality::Cuspidal => Ok(()),
            Cuspidality::NonCuspidal => write!(f, "{{nc}}"),
            Cuspidality::Unknown => write!(f, "{{?}}"),
        }
    }
}
