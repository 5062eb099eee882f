//! Isobaric decompositions of tensor products for GL(2) and GL(3).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::character::{Character, Generator, CHI, ETA, MU, OMEGA, QUOTIENT};
use super::constituent::{Constituent, ConstituentKind, Cuspidality};
use super::isobaric::{pole_order, IsobaricRep};
use super::SatakeError;

/// Largest `k + l` for which `pi^k (x) pibar^l` is decomposed. Beyond this
/// the split pairing would need `Sym^5` or higher.
pub const MAX_TENSOR_DEGREE: u32 = 8;

/// Behaviour of the quotient `nu / nu^tau` of a dihedral representation
/// induced from `nu`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Quotient {
    /// Not Galois-invariant: `I_E(nu/nu^tau)` is cuspidal.
    NonInvariant,
    /// Galois-invariant but non-trivial: `I_E(nu/nu^tau)` splits into two characters.
    Invariant,
    /// `nu = nu^tau`. The induced representation is then not cuspidal;
    /// accepted only by [`dihedral_tensor`].
    Trivial,
}

impl Quotient {
    /// Order imposed on the quotient generator `q`.
    fn order(self) -> u32 {
        match self {
            Quotient::NonInvariant => 0,
            Quotient::Invariant => 2,
            Quotient::Trivial => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Gl2Type {
    NonSolvablePolyhedral,
    Tetrahedral,
    Octahedral,
    Dihedral(Quotient),
}

impl Gl2Type {
    /// Cuspidality of `Sym^k` of a cuspidal representation of this type.
    pub fn sym_cuspidality(self, k: u32) -> Cuspidality {
        use Cuspidality::*;
        match (self, k) {
            (_, 0 | 1) => Cuspidal,
            (Gl2Type::Dihedral(_), _) => NonCuspidal,
            (Gl2Type::Tetrahedral, 2) => Cuspidal,
            (Gl2Type::Tetrahedral, _) => NonCuspidal,
            (Gl2Type::Octahedral, 2 | 3) => Cuspidal,
            (Gl2Type::Octahedral, _) => NonCuspidal,
            (Gl2Type::NonSolvablePolyhedral, 2..=4) => Cuspidal,
            (Gl2Type::NonSolvablePolyhedral, _) => Unknown,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Gl2Type::NonSolvablePolyhedral => "non-solvable",
            Gl2Type::Tetrahedral => "tetrahedral",
            Gl2Type::Octahedral => "octahedral",
            Gl2Type::Dihedral(Quotient::NonInvariant) => "dihedral",
            Gl2Type::Dihedral(Quotient::Invariant) => "dihedral-invariant",
            Gl2Type::Dihedral(Quotient::Trivial) => "dihedral-trivial",
        }
    }

    pub fn parse(s: &str) -> Option<Gl2Type> {
        Some(match s {
            "non-solvable" | "nonsolvable" | "non-solvable-polyhedral" => {
                Gl2Type::NonSolvablePolyhedral
            }
            "tetrahedral" => Gl2Type::Tetrahedral,
            "octahedral" => Gl2Type::Octahedral,
            "dihedral" => Gl2Type::Dihedral(Quotient::NonInvariant),
            "dihedral-invariant" => Gl2Type::Dihedral(Quotient::Invariant),
            "dihedral-trivial" => Gl2Type::Dihedral(Quotient::Trivial),
            _ => return None,
        })
    }
}

/// Multiset of `Sym^k (x) det^j` symbols, keyed by `(k, j)`.
type SymAlgebra = BTreeMap<(u32, i64), u64>;

fn cg_product(lhs: &SymAlgebra, rhs: &SymAlgebra) -> SymAlgebra {
    let mut out = SymAlgebra::new();
    for (&(a, ja), &ma) in lhs {
        for (&(b, jb), &mb) in rhs {
            for i in 0..=a.min(b) {
                *out.entry((a + b - 2 * i, ja + jb + i64::from(i)))
                    .or_insert(0) += ma * mb;
            }
        }
    }
    out
}

fn sym_algebra_to_rep(alg: &SymAlgebra, resolve: impl Fn(u32) -> Cuspidality) -> IsobaricRep {
    let mut rep = IsobaricRep::new();
    for (&(k, j), &m) in alg {
        rep.add(
            Constituent::sym("pi", k, j, Character::trivial(), resolve(k)),
            m,
        );
    }
    rep
}

/// `Sym^a (x) Sym^b = (+)_{i=0..min(a,b)} Sym^{a+b-2i} (x) det^i`.
///
/// The constituents are formal symbols of the base `pi`; symmetric powers
/// above the first carry unknown cuspidality.
pub fn clebsch_gordan(a: u32, b: u32) -> IsobaricRep {
    let lhs = SymAlgebra::from([((a, 0), 1)]);
    let rhs = SymAlgebra::from([((b, 0), 1)]);
    sym_algebra_to_rep(&cg_product(&lhs, &rhs), |k| {
        if k <= 1 {
            Cuspidality::Cuspidal
        } else {
            Cuspidality::Unknown
        }
    })
}

fn check_tensor_range(k: u32, l: u32) -> Result<(), SatakeError> {
    if k + l == 0 {
        return Err(SatakeError::Range("k + l must be positive".into()));
    }
    if k + l > MAX_TENSOR_DEGREE {
        return Err(SatakeError::Range(format!(
            "k + l = {} exceeds {MAX_TENSOR_DEGREE}",
            k + l
        )));
    }
    Ok(())
}

/// Isobaric decomposition of `pi^{(x)k} (x) pibar^{(x)l}`.
///
/// For a non-solvable-polyhedral `pi` the pieces are twisted symmetric
/// powers; `Sym^5` and above (reachable once `k + l > 4`) are left with
/// unknown cuspidality. A dihedral `pi` is expanded through the induced
/// representation algebra, which resolves every piece.
pub fn tensor_power_decompose(ty: Gl2Type, k: u32, l: u32) -> Result<IsobaricRep, SatakeError> {
    check_tensor_range(k, l)?;
    tensor_power_unchecked(ty, k, l)
}

fn tensor_power_unchecked(ty: Gl2Type, k: u32, l: u32) -> Result<IsobaricRep, SatakeError> {
    match ty {
        Gl2Type::NonSolvablePolyhedral => {
            let mut alg = SymAlgebra::from([((0, 0), 1)]);
            let pi = SymAlgebra::from([((1, 0), 1)]);
            for _ in 0..k + l {
                alg = cg_product(&alg, &pi);
            }
            // pibar = pi (x) omega^-1 for unitary pi
            let alg: SymAlgebra = alg
                .into_iter()
                .map(|((s, j), m)| ((s, j - i64::from(l)), m))
                .collect();
            Ok(sym_algebra_to_rep(&alg, |s| ty.sym_cuspidality(s)))
        }
        Gl2Type::Dihedral(Quotient::Trivial) => Err(SatakeError::UnsupportedType(
            "a dihedral representation with trivial quotient nu/nu^tau is not cuspidal".into(),
        )),
        Gl2Type::Dihedral(quotient) => {
            let algebra = DihedralAlgebra::new(quotient);
            let pi = algebra.pi();
            let pibar = pi.dual();
            let mut acc = IsobaricRep::trivial();
            for _ in 0..k {
                acc = algebra.tensor(&acc, &pi)?;
            }
            for _ in 0..l {
                acc = algebra.tensor(&acc, &pibar)?;
            }
            Ok(acc)
        }
        Gl2Type::Tetrahedral | Gl2Type::Octahedral => Err(SatakeError::UnsupportedType(format!(
            "no isobaric decomposition is available for {} representations",
            ty.name()
        ))),
    }
}

/// The two Rankin-Selberg factors used to evaluate `L(s, pi^{xk} x pibar^{xl})`:
/// `pi^{(x)ceil(k/2)} (x) pibar^{(x)floor(l/2)}` and the complementary power.
/// Each involves at most four copies of `pi`, so their constituents are
/// resolved whenever `k + l <= 8`.
pub fn tensor_power_split(
    ty: Gl2Type,
    k: u32,
    l: u32,
) -> Result<(IsobaricRep, IsobaricRep), SatakeError> {
    check_tensor_range(k, l)?;
    let (ka, la) = (k.div_ceil(2), l / 2);
    let left = if ka + la == 0 {
        IsobaricRep::trivial()
    } else {
        tensor_power_unchecked(ty, ka, la)?
    };
    let right = if k - ka + l - la == 0 {
        IsobaricRep::trivial()
    } else {
        tensor_power_unchecked(ty, k - ka, l - la)?
    };
    Ok((left, right))
}

/// Order of the pole at `s = 1` of `L(s, pi^{xk} x pibar^{xl})`.
pub fn tensor_power_pole_order(ty: Gl2Type, k: u32, l: u32) -> Result<u64, SatakeError> {
    let (left, right) = tensor_power_split(ty, k, l)?;
    pole_order(&left, &right)
}

/// How two dihedral representations are related.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DihedralPair {
    /// `pi' = pibar`, both induced from the same quadratic extension.
    Contragredient(Quotient),
    /// `pi` and `pi'` cannot be induced from a common quadratic extension.
    DistinctExtensions,
}

/// `pi (x) pi'` for dihedral `pi, pi'`.
///
/// With `pi' = pibar` this is `1 (+) chi (+) I_E(nu/nu^tau)`, where the
/// induced piece splits as `eta (+) eta*chi` when the quotient is
/// Galois-invariant. Without a common extension the product is a single
/// cuspidal representation of GL(4).
pub fn dihedral_tensor(pair: DihedralPair) -> IsobaricRep {
    match pair {
        DihedralPair::Contragredient(quotient) => {
            let algebra = DihedralAlgebra::new(quotient);
            let pi = algebra.pi();
            algebra
                .tensor(&pi, &pi.dual())
                .expect("dihedral algebra is closed under tensor products")
        }
        DihedralPair::DistinctExtensions => IsobaricRep::single(Constituent::opaque("pi x pi'", 4)),
    }
}

/// `Pi (x) Pibar` for `Pi = Ad(pi) (x) eta` on GL(3): `A^4 pi (+) Ad pi (+) 1`
/// with `A^4 pi = Sym^4 pi (x) omega^-2`.
pub fn gl3_adjoint_tensor(base: Gl2Type) -> Result<IsobaricRep, SatakeError> {
    if base != Gl2Type::NonSolvablePolyhedral {
        return Err(SatakeError::UnsupportedType(format!(
            "the GL(3) lemma needs a base of non-solvable polyhedral type, got {}",
            base.name()
        )));
    }
    let ad = SymAlgebra::from([((2, -1), 1)]);
    Ok(sym_algebra_to_rep(&cg_product(&ad, &ad), |k| {
        base.sym_cuspidality(k)
    }))
}

/// Grothendieck-ring arithmetic for a dihedral `pi = I_E(mu)`.
///
/// Characters of E are monomials `mu^n q^e` with `q = mu/mu^tau`, where `q`
/// has order 0 (free), 2 (invariant quotient) or 1 (trivial quotient).
/// Characters of F are monomials in `omega`, `chi` and, for an invariant
/// quotient, its descent `eta` (taken of order two).
struct DihedralAlgebra {
    quotient: Quotient,
}

const EXT: &str = "E";

impl DihedralAlgebra {
    fn new(quotient: Quotient) -> Self {
        Self { quotient }
    }

    fn q_order(&self) -> u32 {
        self.quotient.order()
    }

    fn mu(&self) -> Character {
        Character::generator(MU, 0)
    }

    fn q(&self) -> Character {
        Character::power(Generator::new(QUOTIENT, self.q_order()), 1)
    }

    fn eta(&self) -> Character {
        Character::generator(ETA, 2)
    }

    fn pi(&self) -> IsobaricRep {
        IsobaricRep::single(self.induced(self.mu()))
    }

    /// Base change of a character of F to E.
    fn base_change(&self, lambda: &Character) -> Result<Character, SatakeError> {
        let mut out = Character::trivial();
        for (g, e) in lambda.factors() {
            let image = match g.name.as_str() {
                // omega o N = mu * mu^tau
                OMEGA => self.mu().mul(&self.mu().galois_conjugate(self.q_order())),
                CHI => Character::trivial(),
                ETA => self.q(),
                other => {
                    return Err(SatakeError::InvalidInput(format!(
                        "no base change rule for character `{other}`"
                    )))
                }
            };
            out = out.mul(&image.pow(e));
        }
        Ok(out)
    }

    /// Characters of F whose base change is the invariant character `psi`;
    /// they come as a pair `lambda, lambda*chi`.
    fn descend(&self, psi: &Character) -> Result<Character, SatakeError> {
        let n = psi.exponent(MU);
        let e = psi.exponent(QUOTIENT);
        if n % 2 != 0 {
            return Err(SatakeError::InvalidInput(format!(
                "character `{psi}` does not descend to F"
            )));
        }
        let a = n / 2;
        // mu^{2a} = (mu mu^tau)^a q^a
        let rest = self.q().pow(a + e);
        let mut lambda = Character::omega(a);
        match self.quotient {
            Quotient::NonInvariant => {
                if !rest.is_trivial() {
                    return Err(SatakeError::InvalidInput(format!(
                        "character `{psi}` is not Galois-invariant"
                    )));
                }
            }
            Quotient::Invariant => lambda = lambda.mul(&self.eta().pow(rest.exponent(QUOTIENT))),
            Quotient::Trivial => {}
        }
        debug_assert_eq!(self.base_change(&lambda).ok().as_ref(), Some(psi));
        Ok(lambda)
    }

    /// `I_E(psi)` as an isobaric sum, splitting it when `psi` is invariant.
    fn induce(&self, psi: Character) -> Result<IsobaricRep, SatakeError> {
        if psi.galois_conjugate(self.q_order()) == psi {
            let lambda = self.descend(&psi)?;
            let mut out = IsobaricRep::single(Constituent::hecke(lambda.clone()));
            out.add(Constituent::hecke(lambda.mul(&Character::chi())), 1);
            Ok(out)
        } else {
            Ok(IsobaricRep::single(self.induced(psi)))
        }
    }

    fn induced(&self, psi: Character) -> Constituent {
        Constituent::induced(EXT, self.q_order(), psi, Cuspidality::Cuspidal)
    }

    fn tensor_pieces(&self, a: &Constituent, b: &Constituent) -> Result<IsobaricRep, SatakeError> {
        use ConstituentKind::*;
        let f_char = |c: &Constituent| match &c.kind {
            Trivial => Some(Character::trivial()),
            Hecke(ch) => Some(ch.clone()),
            _ => None,
        };
        let e_char = |c: &Constituent| match &c.kind {
            Induced { character, .. } => Some(character.clone()),
            _ => None,
        };
        match (f_char(a), f_char(b), e_char(a), e_char(b)) {
            (Some(x), Some(y), _, _) => Ok(IsobaricRep::single(Constituent::hecke(x.mul(&y)))),
            (Some(x), None, _, Some(psi)) | (None, Some(x), Some(psi), _) => {
                self.induce(self.base_change(&x)?.mul(&psi))
            }
            (None, None, Some(psi), Some(phi)) => {
                let first = self.induce(psi.mul(&phi))?;
                let second = self.induce(psi.mul(&phi.galois_conjugate(self.q_order())))?;
                Ok(first.plus(&second))
            }
            _ => Err(SatakeError::InvalidInput(format!(
                "cannot tensor `{a}` with `{b}` in the dihedral algebra"
            ))),
        }
    }

    fn tensor(&self, a: &IsobaricRep, b: &IsobaricRep) -> Result<IsobaricRep, SatakeError> {
        let mut out = IsobaricRep::new();
        for (x, mx) in a.iter() {
            for (y, my) in b.iter() {
                for (z, mz) in self.tensor_pieces(x, y)?.iter() {
                    out.add(z.clone(), mx * my * mz);
                }
            }
        }
        Ok(out)
    }
}
