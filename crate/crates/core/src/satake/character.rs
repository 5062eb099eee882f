//! Formal Hecke characters.
//!
//! A [`Character`] is a monomial in named generators. Each generator carries
//! its order (0 meaning "no relation imposed"), and exponents are reduced
//! modulo that order so that equal labels mean equal characters. The trivial
//! character is the empty monomial.

use std::collections::BTreeMap;
use std::fmt;

use super::SatakeError;

/// A named generator of the character group, with its order (0 = infinite).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub name: String,
    pub order: u32,
}

impl Generator {
    pub fn new(name: impl Into<String>, order: u32) -> Self {
        Self {
            name: name.into(),
            order,
        }
    }

    fn reduce(&self, exp: i64) -> i64 {
        if self.order == 0 {
            exp
        } else {
            exp.rem_euclid(i64::from(self.order))
        }
    }
}

/// Central character of the base GL(2) representation.
pub const OMEGA: &str = "omega";
/// Quadratic character attached to the inducing extension E/F.
pub const CHI: &str = "chi";
/// Descent to F of the quotient character when it is Galois-invariant.
pub const ETA: &str = "eta";
/// Inducing character of a dihedral representation (a character of E).
pub const MU: &str = "mu";
/// Quotient `mu / mu^tau` (a character of E).
pub const QUOTIENT: &str = "q";

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Character {
    factors: BTreeMap<Generator, i64>,
}

impl Character {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn generator(name: impl Into<String>, order: u32) -> Self {
        Self::power(Generator::new(name, order), 1)
    }

    pub fn power(gen: Generator, exp: i64) -> Self {
        let mut c = Self::trivial();
        c.push(gen, exp);
        c
    }

    /// `omega^exp`, the central character of the base representation.
    pub fn omega(exp: i64) -> Self {
        Self::power(Generator::new(OMEGA, 0), exp)
    }

    pub fn chi() -> Self {
        Self::generator(CHI, 2)
    }

    fn push(&mut self, gen: Generator, exp: i64) {
        let current = self.factors.remove(&gen).unwrap_or(0);
        let e = gen.reduce(current + exp);
        if e != 0 {
            self.factors.insert(gen, e);
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent(&self, name: &str) -> i64 {
        self.factors
            .iter()
            .find(|(g, _)| g.name == name)
            .map_or(0, |(_, e)| *e)
    }

    pub fn factors(&self) -> impl Iterator<Item = (&Generator, i64)> {
        self.factors.iter().map(|(g, e)| (g, *e))
    }

    pub fn mul(&self, other: &Character) -> Character {
        let mut out = self.clone();
        for (g, e) in &other.factors {
            out.push(g.clone(), *e);
        }
        out
    }

    pub fn inverse(&self) -> Character {
        let mut out = Character::trivial();
        for (g, e) in &self.factors {
            out.push(g.clone(), -e);
        }
        out
    }

    pub fn pow(&self, n: i64) -> Character {
        let mut out = Character::trivial();
        for (g, e) in &self.factors {
            out.push(g.clone(), e * n);
        }
        out
    }

    /// Order of the character if every generator has finite order.
    pub fn order(&self) -> Option<u32> {
        let mut order = 1u64;
        for (g, e) in &self.factors {
            if g.order == 0 {
                return None;
            }
            let n = u64::from(g.order);
            let part = n / num_integer::gcd(n, e.unsigned_abs());
            order = num_integer::lcm(order, part);
        }
        u32::try_from(order).ok()
    }

    /// Galois conjugation `tau` on characters of the quadratic extension,
    /// under the convention `mu^tau = mu * q^-1` and `q^tau = q^-1`, where
    /// the quotient generator `q` has order `quotient_order`. Every other
    /// generator is treated as a base change from F and is fixed.
    pub fn galois_conjugate(&self, quotient_order: u32) -> Character {
        let q = Generator::new(QUOTIENT, quotient_order);
        let mut out = Character::trivial();
        for (g, e) in &self.factors {
            match g.name.as_str() {
                MU => {
                    out.push(g.clone(), *e);
                    out.push(q.clone(), -e);
                }
                QUOTIENT => out.push(q.clone(), -e),
                _ => out.push(g.clone(), *e),
            }
        }
        out
    }

    /// Parse the text form produced by `Display`, e.g. `chi[2]*omega^-2`.
    pub fn parse(text: &str) -> Result<Character, SatakeError> {
        let text = text.trim();
        let mut out = Character::trivial();
        if text == "1" || text.is_empty() {
            return Ok(out);
        }
        for part in text.split('*') {
            let part = part.trim();
            let (base, exp) = match part.split_once('^') {
                Some((b, e)) => (
                    b,
                    e.parse::<i64>()
                        .map_err(|_| SatakeError::Parse(format!("bad exponent in `{part}`")))?,
                ),
                None => (part, 1),
            };
            let (name, order) = match base.split_once('[') {
                Some((n, rest)) => {
                    let o = rest
                        .strip_suffix(']')
                        .and_then(|o| o.parse::<u32>().ok())
                        .ok_or_else(|| SatakeError::Parse(format!("bad order in `{part}`")))?;
                    (n, o)
                }
                None => (base, 0),
            };
            if !is_identifier(name) {
                return Err(SatakeError::Parse(format!("bad character name `{name}`")));
            }
            out.push(Generator::new(name, order), exp);
        }
        Ok(out)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "1");
        }
        for (i, (g, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{}", g.name)?;
            if g.order != 0 {
                write!(f, "[{}]", g.order)?;
            }
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
