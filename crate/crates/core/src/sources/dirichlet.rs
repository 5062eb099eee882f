//! Real (quadratic or principal) Dirichlet characters.

use super::primes::prime_sieve;
use super::stream::{EigenvalueStream, StreamEntry};
use super::SourceError;

/// Jacobi symbol `(a/n)` for odd positive `n`.
pub fn jacobi(a: i64, n: u64) -> i32 {
    assert!(n % 2 == 1, "Jacobi symbol needs an odd modulus");
    let mut a = a.rem_euclid(n as i64) as u64;
    let mut n = n;
    let mut result = 1;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// Kronecker symbol `(d/p)` for a prime `p`.
pub fn kronecker_prime(d: i64, p: u64) -> i32 {
    if p == 2 {
        if d % 2 == 0 {
            0
        } else if matches!(d.rem_euclid(8), 1 | 7) {
            1
        } else {
            -1
        }
    } else {
        jacobi(d, p)
    }
}

fn is_squarefree(n: u64) -> bool {
    (2..)
        .take_while(|d: &u64| d * d <= n)
        .all(|d| !n.is_multiple_of(d * d))
}

pub fn is_fundamental_discriminant(d: i64) -> bool {
    if d == 1 || d == 0 {
        return false;
    }
    let m4 = d.rem_euclid(4);
    if m4 == 1 {
        return is_squarefree(d.unsigned_abs());
    }
    if m4 == 0 {
        let k = d / 4;
        return matches!(k.rem_euclid(4), 2 | 3) && is_squarefree(k.unsigned_abs());
    }
    false
}

/// The real characters mod `modulus`, listed by their discriminant:
/// index 0 is the principal character (`d = 1`), then the fundamental
/// discriminants `d` with `|d|` dividing the modulus, by increasing `|d|`
/// and negative before positive.
pub fn real_characters(modulus: u64) -> Result<Vec<i64>, SourceError> {
    if modulus == 0 {
        return Err(SourceError::BadModulus("modulus must be positive".into()));
    }
    let mut out = vec![1];
    for a in 1..=modulus {
        if !modulus.is_multiple_of(a) {
            continue;
        }
        for d in [-(a as i64), a as i64] {
            if is_fundamental_discriminant(d) {
                out.push(d);
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RealCharacter {
    pub modulus: u64,
    pub index: usize,
    /// Discriminant of the primitive character inducing it (1 if principal).
    pub discriminant: i64,
}

impl RealCharacter {
    pub fn new(modulus: u64, index: usize) -> Result<Self, SourceError> {
        let list = real_characters(modulus)?;
        let discriminant = *list.get(index).ok_or_else(|| {
            SourceError::BadModulus(format!(
                "modulus {modulus} has {} real characters, index {index} is out of range",
                list.len()
            ))
        })?;
        Ok(Self {
            modulus,
            index,
            discriminant,
        })
    }

    /// `chi(p)` for a prime not dividing the modulus.
    pub fn value(&self, p: u64) -> i32 {
        if self.discriminant == 1 {
            1
        } else {
            kronecker_prime(self.discriminant, p)
        }
    }

    pub fn id(&self) -> String {
        format!("dirichlet:{},{}", self.modulus, self.index)
    }

    pub fn eigenvalues(&self, limit: u64) -> EigenvalueStream {
        let (good, excluded): (Vec<u64>, Vec<u64>) = prime_sieve(limit)
            .into_iter()
            .partition(|p| !self.modulus.is_multiple_of(*p));
        let entries = good
            .into_iter()
            .map(|p| StreamEntry::from_int(p, i64::from(self.value(p)), 1))
            .collect();
        EigenvalueStream {
            source_id: self.id(),
            weight: 1,
            limit,
            entries,
            excluded,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_against_euler_criterion() {
        for p in prime_sieve(200).into_iter().skip(1) {
            for a in -50i64..50 {
                let e =
                    super::super::gfp::pow_mod_int(a.rem_euclid(p as i64) as u64, (p - 1) / 2, p);
                let expected = match e {
                    0 => 0,
                    1 => 1,
                    _ => -1,
                };
                assert_eq!(jacobi(a, p), expected, "({a}/{p})");
            }
        }
    }

    #[test]
    fn characters_mod_small_moduli() {
        assert_eq!(real_characters(4).unwrap(), vec![1, -4]);
        assert_eq!(real_characters(3).unwrap(), vec![1, -3]);
        assert_eq!(real_characters(8).unwrap(), vec![1, -4, -8, 8]);
        assert_eq!(real_characters(12).unwrap(), vec![1, -3, -4, 12]);
        assert!(RealCharacter::new(4, 2).is_err());
        assert!(RealCharacter::new(0, 0).is_err());
    }

    #[test]
    fn mod_four() {
        let chi = RealCharacter::new(4, 1).unwrap();
        let s = chi.eigenvalues(10_000);
        assert_eq!(s.excluded, vec![2]);
        assert!(s.is_exact());
        for e in &s.entries {
            let v = if e.p % 4 == 1 { 1.0 } else { -1.0 };
            assert_eq!(e.normalized.re, v);
            assert_eq!(e.normalized.norm_sqr(), 1.0);
        }
    }

    #[test]
    fn kronecker_at_two() {
        // (5/2) = -1, (-7/2) = 1
        assert_eq!(kronecker_prime(5, 2), -1);
        assert_eq!(kronecker_prime(-7, 2), 1);
        let chi = RealCharacter::new(5, 1).unwrap();
        assert_eq!(chi.discriminant, 5);
        assert_eq!(chi.value(2), -1);
        assert_eq!(chi.value(11), 1);
    }
}
