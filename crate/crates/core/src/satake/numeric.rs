//! Numeric Satake classes, used as a brute-force check on the symbolic layer.

use std::collections::BTreeMap;

use num_complex::Complex64;

use super::character::{Character, CHI, ETA, MU, QUOTIENT};
use super::constituent::{central_character_name, Constituent, ConstituentKind};
use super::isobaric::IsobaricRep;
use super::SatakeError;

/// Diagonal Satake parameters of a representation at one unramified place
/// of norm `norm`.
#[derive(Debug, Clone, PartialEq)]
pub struct SatakeClass {
    pub params: Vec<Complex64>,
    pub norm: u64,
}

impl SatakeClass {
    pub fn new(params: Vec<Complex64>, norm: u64) -> Self {
        Self { params, norm }
    }

    pub fn trace(&self) -> Complex64 {
        self.params.iter().sum()
    }

    pub fn dimension(&self) -> usize {
        self.params.len()
    }

    pub fn tensor(&self, other: &SatakeClass) -> Result<SatakeClass, SatakeError> {
        if self.norm != other.norm {
            return Err(SatakeError::PlaceMismatch {
                left: self.norm,
                right: other.norm,
            });
        }
        let params = self
            .params
            .iter()
            .flat_map(|a| other.params.iter().map(move |b| a * b))
            .collect();
        Ok(SatakeClass::new(params, self.norm))
    }

    /// Contragredient: inverse parameters.
    pub fn dual(&self) -> SatakeClass {
        SatakeClass::new(self.params.iter().map(|a| a.inv()).collect(), self.norm)
    }

    /// Complex conjugate parameters; equals [`Self::dual`] for unitary classes.
    pub fn conj(&self) -> SatakeClass {
        SatakeClass::new(self.params.iter().map(|a| a.conj()).collect(), self.norm)
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.params.iter().all(|a| (a.norm() - 1.0).abs() <= tol)
    }

    /// `Sym^k` of a GL(2) class `diag(a, b)`.
    pub fn sym_power(&self, k: u32) -> Result<SatakeClass, SatakeError> {
        let [a, b] = self.gl2_params()?;
        let params = (0..=k as i32)
            .map(|i| a.powi(i) * b.powi(k as i32 - i))
            .collect();
        Ok(SatakeClass::new(params, self.norm))
    }

    pub fn det(&self) -> Complex64 {
        self.params.iter().product()
    }

    /// Twist by the scalar `z`.
    pub fn scale(&self, z: Complex64) -> SatakeClass {
        SatakeClass::new(self.params.iter().map(|a| a * z).collect(), self.norm)
    }

    /// Sum of two classes at the same place.
    pub fn direct_sum(&self, other: &SatakeClass) -> Result<SatakeClass, SatakeError> {
        if self.norm != other.norm {
            return Err(SatakeError::PlaceMismatch {
                left: self.norm,
                right: other.norm,
            });
        }
        let mut params = self.params.clone();
        params.extend_from_slice(&other.params);
        Ok(SatakeClass::new(params, self.norm))
    }

    fn gl2_params(&self) -> Result<[Complex64; 2], SatakeError> {
        match self.params.as_slice() {
            [a, b] => Ok([*a, *b]),
            _ => Err(SatakeError::InvalidInput(format!(
                "expected a GL(2) class, got {} parameters",
                self.params.len()
            ))),
        }
    }
}

/// The class `diag(a eta / b, eta, b eta / a)` of `Ad(pi) (x) eta` on GL(3)
/// for `pi` with class `diag(a, b)`.
pub fn gl3_adjoint_class(base: &SatakeClass, eta: Complex64) -> Result<SatakeClass, SatakeError> {
    let [a, b] = base.gl2_params()?;
    Ok(SatakeClass::new(
        vec![a * eta / b, eta, b * eta / a],
        base.norm,
    ))
}

/// Local data at one place: Satake parameters of each GL(2) base, values
/// of named character generators, and whether the dihedral extension splits.
#[derive(Debug, Clone, Default)]
pub struct LocalData {
    pub bases: BTreeMap<String, [Complex64; 2]>,
    pub characters: BTreeMap<String, Complex64>,
    /// `true` if the inducing quadratic extension splits at this place.
    pub split: bool,
}

impl LocalData {
    /// Data for a GL(2) base `pi = diag(a, b)`, with `omega = ab` filled in.
    pub fn for_base(a: Complex64, b: Complex64) -> Self {
        let mut d = LocalData::default();
        d.set_base("pi", a, b);
        d
    }

    pub fn set_base(&mut self, name: &str, a: Complex64, b: Complex64) {
        self.bases.insert(name.to_string(), [a, b]);
        self.characters.insert(central_character_name(name), a * b);
    }

    /// Dihedral `pi = I_E(mu)` at a split place where the two places of E
    /// above v see `mu` as `x` and `y`. `eta` is the descent of `q` and is
    /// only meaningful when `y = +-x`.
    pub fn dihedral_split(x: Complex64, y: Complex64) -> Self {
        let mut d = LocalData::for_base(x, y);
        d.split = true;
        d.characters.insert(CHI.into(), Complex64::new(1.0, 0.0));
        d.characters.insert(MU.into(), x);
        d.characters.insert(QUOTIENT.into(), x / y);
        d.characters.insert(ETA.into(), x / y);
        d
    }

    /// Dihedral `pi` at an inert place: `pi_v = diag(z, -z)`, where
    /// `z^2 = mu(v)` and `eta(v) = eta_sign`.
    pub fn dihedral_inert(z: Complex64, eta_sign: f64) -> Self {
        let mut d = LocalData::for_base(z, -z);
        d.split = false;
        d.characters.insert(CHI.into(), Complex64::new(-1.0, 0.0));
        d.characters.insert(MU.into(), z * z);
        d.characters
            .insert(QUOTIENT.into(), Complex64::new(1.0, 0.0));
        d.characters
            .insert(ETA.into(), Complex64::new(eta_sign, 0.0));
        d
    }

    pub fn character(&self, c: &Character) -> Result<Complex64, SatakeError> {
        let mut value = Complex64::new(1.0, 0.0);
        for (g, e) in c.factors() {
            let v = self.characters.get(&g.name).ok_or_else(|| {
                SatakeError::InvalidInput(format!("no local value for character `{}`", g.name))
            })?;
            value *= v.powi(e as i32);
        }
        Ok(value)
    }

    fn base(&self, name: &str) -> Result<SatakeClass, SatakeError> {
        let [a, b] = self
            .bases
            .get(name)
            .ok_or_else(|| SatakeError::InvalidInput(format!("no local data for base `{name}`")))?;
        Ok(SatakeClass::new(vec![*a, *b], 0))
    }

    /// Trace of a constituent at this place.
    pub fn trace(&self, c: &Constituent) -> Result<Complex64, SatakeError> {
        match &c.kind {
            ConstituentKind::Trivial => Ok(Complex64::new(1.0, 0.0)),
            ConstituentKind::Hecke(ch) => self.character(ch),
            ConstituentKind::Sym {
                base,
                k,
                det,
                twist,
            } => {
                let class = self.base(base)?;
                let d = class.det().powi(*det as i32);
                Ok(class.sym_power(*k)?.trace() * d * self.character(twist)?)
            }
            ConstituentKind::Induced {
                quotient_order,
                character,
                ..
            } => {
                if !self.split {
                    return Ok(Complex64::new(0.0, 0.0));
                }
                let conj = character.galois_conjugate(*quotient_order);
                Ok(self.character(character)? + self.character(&conj)?)
            }
            ConstituentKind::Opaque { label, .. } => Err(SatakeError::InvalidInput(format!(
                "no local data for opaque constituent `{label}`"
            ))),
        }
    }

    /// Trace of an isobaric sum at this place.
    pub fn rep_trace(&self, rep: &IsobaricRep) -> Result<Complex64, SatakeError> {
        let mut total = Complex64::new(0.0, 0.0);
        for (c, m) in rep.iter() {
            total += self.trace(c)? * m as f64;
        }
        Ok(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::satake::constituent::Cuspidality;
    use crate::satake::decompose::{
        clebsch_gordan, gl3_adjoint_tensor, tensor_power_decompose, Gl2Type, Quotient,
    };
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::TAU;

    fn unit(rng: &mut ChaCha8Rng) -> Complex64 {
        Complex64::from_polar(1.0, rng.random::<f64>() * TAU)
    }

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn trace_examples() {
        assert_eq!(SatakeClass::new(vec![c(1.0), c(1.0)], 5).trace(), c(2.0));
        let t = 0.7f64;
        let x = SatakeClass::new(
            vec![
                Complex64::from_polar(1.0, t),
                Complex64::from_polar(1.0, -t),
            ],
            5,
        );
        assert!((x.trace() - c(2.0 * t.cos())).norm() < 1e-15);
    }

    #[test]
    fn tensor_is_multiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let x = SatakeClass::new(vec![unit(&mut rng), unit(&mut rng)], 7);
            let y = SatakeClass::new(vec![unit(&mut rng), unit(&mut rng), unit(&mut rng)], 7);
            let t = x.tensor(&y).unwrap();
            assert_eq!(t.dimension(), 6);
            assert!((t.trace() - x.trace() * y.trace()).norm() < 1e-12);
            let xc = x.tensor(&x.conj()).unwrap();
            assert!((xc.trace() - c(x.trace().norm_sqr())).norm() < 1e-12);
        }
        let x = SatakeClass::new(vec![c(2.0), c(3.0)], 7);
        assert_eq!(x.tensor(&SatakeClass::new(vec![c(1.0)], 7)).unwrap(), x);
        assert!(matches!(
            x.tensor(&SatakeClass::new(vec![c(1.0)], 11)),
            Err(SatakeError::PlaceMismatch { left: 7, right: 11 })
        ));
    }

    #[test]
    fn dual_trace_is_conjugate() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let pi = Constituent::sym("pi", 1, 0, Character::trivial(), Cuspidality::Cuspidal);
        for _ in 0..100 {
            let d = LocalData::for_base(unit(&mut rng), unit(&mut rng));
            let t = d.trace(&pi).unwrap();
            let td = d.trace(&pi.dual()).unwrap();
            assert!((td - t.conj()).norm() < 1e-12);
        }
    }

    #[test]
    fn clebsch_gordan_traces() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let (a, b) = (unit(&mut rng), unit(&mut rng));
            let d = LocalData::for_base(a, b);
            let class = SatakeClass::new(vec![a, b], 0);
            for x in 0..=4 {
                for y in 0..=4 {
                    let lhs = class
                        .sym_power(x)
                        .unwrap()
                        .tensor(&class.sym_power(y).unwrap())
                        .unwrap()
                        .trace();
                    let rhs = d.rep_trace(&clebsch_gordan(x, y)).unwrap();
                    assert!((lhs - rhs).norm() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn tensor_power_traces() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..50 {
            let d = LocalData::for_base(unit(&mut rng), unit(&mut rng));
            let t = d
                .trace(&Constituent::sym(
                    "pi",
                    1,
                    0,
                    Character::trivial(),
                    Cuspidality::Cuspidal,
                ))
                .unwrap();
            for k in 0..=4u32 {
                for l in 0..=4u32 {
                    if k + l == 0 {
                        continue;
                    }
                    let rep = tensor_power_decompose(Gl2Type::NonSolvablePolyhedral, k, l).unwrap();
                    let want = t.powi(k as i32) * t.conj().powi(l as i32);
                    assert!((d.rep_trace(&rep).unwrap() - want).norm() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn dihedral_traces() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let x = unit(&mut rng);
            let y_free = unit(&mut rng);
            let sign = if rng.random::<bool>() { 1.0 } else { -1.0 };
            let cases = [
                (Quotient::NonInvariant, LocalData::dihedral_split(x, y_free)),
                (Quotient::NonInvariant, LocalData::dihedral_inert(x, sign)),
                (Quotient::Invariant, LocalData::dihedral_split(x, x * sign)),
                (Quotient::Invariant, LocalData::dihedral_inert(x, sign)),
            ];
            for (quotient, d) in cases {
                let pi = d.bases["pi"];
                let t = pi[0] + pi[1];
                for k in 0..=3u32 {
                    for l in 0..=3u32 {
                        if k + l == 0 {
                            continue;
                        }
                        let rep =
                            tensor_power_decompose(Gl2Type::Dihedral(quotient), k, l).unwrap();
                        let want = t.powi(k as i32) * t.conj().powi(l as i32);
                        let got = d.rep_trace(&rep).unwrap();
                        assert!(
                            (got - want).norm() < 1e-9,
                            "{quotient:?} {k} {l}: {got} vs {want}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn gl3_trace_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let rep = gl3_adjoint_tensor(Gl2Type::NonSolvablePolyhedral).unwrap();
        for _ in 0..200 {
            let (a, b, eta) = (unit(&mut rng), unit(&mut rng), unit(&mut rng));
            let big = gl3_adjoint_class(&SatakeClass::new(vec![a, b], 0), eta).unwrap();
            let lhs = big.trace() * big.trace().conj();
            let rhs = LocalData::for_base(a, b).rep_trace(&rep).unwrap();
            assert!((lhs - rhs).norm() < 1e-10);
        }
    }
}
