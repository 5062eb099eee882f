//! Frobenius traces of elliptic curves over Q by point counting.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use super::point_count::ShortCurve;
use super::primes::prime_sieve;
use super::stream::{EigenvalueStream, StreamEntry};
use super::SourceError;

/// `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EllipticCurve {
    pub a: [i64; 5],
}

/// Smallest prime counted by baby-step giant-step search.
const GROUP_ORDER_FLOOR: u64 = 1000;

/// The thirteen rational j-invariants of elliptic curves with complex
/// multiplication.
const CM_J_INVARIANTS: [i64; 13] = [
    0,
    1728,
    -3375,
    8000,
    -32768,
    54000,
    287_496,
    -884_736,
    -12_288_000,
    16_581_375,
    -884_736_000,
    -147_197_952_000,
    -262_537_412_640_768_000,
];

impl EllipticCurve {
    pub fn new(a1: i64, a2: i64, a3: i64, a4: i64, a6: i64) -> Result<Self, SourceError> {
        let curve = Self {
            a: [a1, a2, a3, a4, a6],
        };
        if curve.discriminant().is_zero() {
            return Err(SourceError::SingularCurve(curve.to_string()));
        }
        Ok(curve)
    }

    fn big(&self) -> [BigInt; 5] {
        self.a.map(BigInt::from)
    }

    /// `(b2, b4, b6, b8)`.
    fn b_invariants(&self) -> [BigInt; 4] {
        let [a1, a2, a3, a4, a6] = self.big();
        let b2 = &a1 * &a1 + 4 * &a2;
        let b4 = 2 * &a4 + &a1 * &a3;
        let b6 = &a3 * &a3 + 4 * &a6;
        let b8 = &a1 * &a1 * &a6 + 4 * &a2 * &a6 - &a1 * &a3 * &a4 + &a2 * &a3 * &a3 - &a4 * &a4;
        [b2, b4, b6, b8]
    }

    pub fn discriminant(&self) -> BigInt {
        let [b2, b4, b6, b8] = self.b_invariants();
        -&b2 * &b2 * &b8 - 8 * &b4 * &b4 * &b4 - 27 * &b6 * &b6 + 9 * &b2 * &b4 * &b6
    }

    pub fn j_invariant(&self) -> BigRational {
        let [b2, b4, _, _] = self.b_invariants();
        let c4 = &b2 * &b2 - 24 * &b4;
        BigRational::new(&c4 * &c4 * &c4, self.discriminant())
    }

    pub fn has_cm(&self) -> bool {
        let j = self.j_invariant();
        j.is_integer()
            && j.to_integer()
                .to_i64()
                .is_some_and(|j| CM_J_INVARIANTS.contains(&j))
    }

    pub fn is_good(&self, p: u64) -> bool {
        !self.discriminant().mod_floor(&BigInt::from(p)).is_zero()
    }

    /// `a_p = p + 1 - #E(F_p)` for a prime of good reduction.
    pub fn trace_of_frobenius(&self, p: u64) -> i64 {
        if p == 2 {
            return self.naive_trace(2);
        }
        let mut table = Vec::new();
        self.trace_at(p, &self.c_invariants(), &mut table)
    }

    /// `(c4, c6)`.
    fn c_invariants(&self) -> [BigInt; 2] {
        let [b2, b4, b6, _] = self.b_invariants();
        let c4 = &b2 * &b2 - 24 * &b4;
        let c6 = -&b2 * &b2 * &b2 + 36 * &b2 * &b4 - 216 * &b6;
        [c4, c6]
    }

    /// Group-order search on `y^2 = x^3 - 27 c4 x - 54 c6` above
    /// [`GROUP_ORDER_FLOOR`], the character sum below it or when the search
    /// is inconclusive.
    fn trace_at(&self, p: u64, c: &[BigInt; 2], table: &mut Vec<i8>) -> i64 {
        if p >= GROUP_ORDER_FLOOR {
            let m = BigInt::from(p);
            let r = |v: BigInt| v.mod_floor(&m).to_u64().expect("reduced value fits");
            let short = ShortCurve {
                a: r(-27 * &c[0]),
                b: r(-54 * &c[1]),
                p,
            };
            if let Some(n) = short.order() {
                return p as i64 + 1 - n as i64;
            }
        }
        self.trace_with_table(p, table)
    }

    /// Character-sum count for odd `p`, reusing `table` as the quadratic
    /// character buffer.
    ///
    /// Completing the square gives `(2y + a1 x + a3)^2 = g(x)` with
    /// `g = 4x^3 + b2 x^2 + 2 b4 x + b6`, so `a_p = -sum_x chi(g(x))`.
    /// `g` is stepped through `x = 0, 1, ...` by finite differences.
    fn trace_with_table(&self, p: u64, table: &mut Vec<i8>) -> i64 {
        debug_assert!(p > 2);
        let pu = p as usize;
        table.clear();
        table.resize(pu, -1);
        table[0] = 0;
        // squares: x^2 = (x-1)^2 + 2x - 1
        let mut sq = 0u64;
        for x in 1..=(p - 1) / 2 {
            sq += 2 * x - 1;
            if sq >= p {
                sq %= p;
            }
            table[sq as usize] = 1;
        }

        let [b2, b4, b6, _] = self.b_invariants();
        let m = BigInt::from(p);
        let r = |v: BigInt| v.mod_floor(&m).to_u64().expect("reduced value fits");
        let (c3, c2, c1, c0) = (4 % p, r(b2), r(2 * b4), r(b6));
        // g(0), and the forward differences at 0
        let g = |x: u64| ((((c3 * x + c2) % p) * x + c1) % p * x + c0) % p;
        let (g0, g1, g2, g3) = (g(0), g(1), g(2), g(3));
        let mut v = g0;
        let mut d1 = (g1 + p - g0) % p;
        let mut d2 = (g2 + 2 * (p - g1) + g0) % p;
        let d3 = (g3 + 3 * (p - g2) + 3 * g1 + (p - g0)) % p;
        let mut sum: i64 = 0;
        for _ in 0..p {
            sum += i64::from(table[v as usize]);
            v += d1;
            if v >= p {
                v -= p;
            }
            d1 += d2;
            if d1 >= p {
                d1 -= p;
            }
            d2 += d3;
            if d2 >= p {
                d2 -= p;
            }
        }
        -sum
    }

    /// `a_p` by enumerating every affine pair `(x, y)`.
    pub fn naive_trace(&self, p: u64) -> i64 {
        let m = BigInt::from(p);
        let [a1, a2, a3, a4, a6] = self
            .big()
            .map(|a| a.mod_floor(&m).to_u64().expect("reduced value fits"));
        let mut count = 1u64; // point at infinity
        for x in 0..p {
            let rhs = ((x * x % p * x) + a2 * x % p * x + a4 * x + a6) % p;
            for y in 0..p {
                let lhs = (y * y + a1 * x % p * y + a3 * y) % p;
                if lhs == rhs {
                    count += 1;
                }
            }
        }
        p as i64 + 1 - count as i64
    }

    /// Normalized traces `a_p / sqrt(p)` for every good prime `p <= limit`.
    pub fn eigenvalues(&self, limit: u64) -> EigenvalueStream {
        let primes = prime_sieve(limit);
        let disc = self.discriminant();
        let (good, excluded): (Vec<u64>, Vec<u64>) = primes
            .iter()
            .partition(|&&p| !disc.mod_floor(&BigInt::from(p)).is_zero());
        let c = self.c_invariants();
        let traces: Vec<i64> = good
            .par_iter()
            .map_init(Vec::new, |table, &p| {
                if p == 2 {
                    self.naive_trace(2)
                } else {
                    self.trace_at(p, &c, table)
                }
            })
            .collect();
        let entries = good
            .iter()
            .zip(traces)
            .map(|(&p, a)| {
                let a2 = i128::from(a) * i128::from(a);
                assert!(a2 <= 4 * i128::from(p), "Hasse bound violated: a_{p} = {a}");
                StreamEntry::from_int(p, a, 2)
            })
            .collect();
        EigenvalueStream {
            source_id: format!("ec:{self}"),
            weight: 2,
            limit,
            entries,
            excluded,
        }
    }
}

impl fmt::Display for EllipticCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a1, a2, a3, a4, a6] = self.a;
        write!(f, "{a1},{a2},{a3},{a4},{a6}")
    }
}

impl FromStr for EllipticCurve {
    type Err = SourceError;

    /// `a1,a2,a3,a4,a6`, or the short form `a4,a6`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Result<Vec<i64>, _> = s.split(',').map(|t| t.trim().parse::<i64>()).collect();
        let parts =
            parts.map_err(|_| SourceError::BadSpec(format!("bad curve coefficients `{s}`")))?;
        match parts.as_slice() {
            [a1, a2, a3, a4, a6] => EllipticCurve::new(*a1, *a2, *a3, *a4, *a6),
            [a4, a6] => EllipticCurve::new(0, 0, 0, *a4, *a6),
            _ => Err(SourceError::BadSpec(format!(
                "expected 5 (or 2) curve coefficients, got `{s}`"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn invariants_of_small_curves() {
        let e11 = EllipticCurve::new(0, -1, 1, -10, -20).unwrap();
        assert_eq!(e11.discriminant(), BigInt::from(-161_051));
        assert!(!e11.has_cm());
        let cm = EllipticCurve::new(0, 0, 0, -1, 0).unwrap();
        assert_eq!(cm.discriminant(), BigInt::from(64));
        assert_eq!(
            cm.j_invariant(),
            BigRational::from_integer(BigInt::from(1728))
        );
        assert!(cm.has_cm());
        assert!(EllipticCurve::new(0, 0, 0, 0, 0).is_err());
    }

    #[test]
    fn known_traces() {
        // 11a: a_2..a_13 = -2, -1, 1, -2, (11 bad), 4
        let e = EllipticCurve::new(0, -1, 1, -10, -20).unwrap();
        let got: Vec<i64> = [2, 3, 5, 7, 13]
            .iter()
            .map(|&p| e.trace_of_frobenius(p))
            .collect();
        assert_eq!(got, vec![-2, -1, 1, -2, 4]);
        // y^2 + y = x^3 - x^2 over F_2: x in {0,1} gives y^2 + y = 0, 4 points + infinity
        let e = EllipticCurve::new(0, -1, 1, 0, 0).unwrap();
        assert_eq!(e.naive_trace(2), 2 + 1 - 5);
        assert_eq!(e.trace_of_frobenius(2), -2);
    }

    #[test]
    fn character_sum_matches_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let primes = prime_sieve(97);
        let mut curves = 0;
        while curves < 20 {
            let a: [i64; 5] = std::array::from_fn(|_| rng.random_range(-20..=20));
            let Ok(e) = EllipticCurve::new(a[0], a[1], a[2], a[3], a[4]) else {
                continue;
            };
            curves += 1;
            for &p in &primes {
                if e.is_good(p) {
                    assert_eq!(e.trace_of_frobenius(p), e.naive_trace(p), "{e} at {p}");
                }
            }
        }
    }

    #[test]
    fn group_order_search_matches_character_sum() {
        let curves = [
            EllipticCurve::new(0, -1, 1, -10, -20).unwrap(),
            EllipticCurve::new(0, 0, 0, -1, 0).unwrap(),
            EllipticCurve::new(0, 0, 0, 0, 1).unwrap(),
            EllipticCurve::new(1, -1, 1, -2, 3).unwrap(),
        ];
        let mut table = Vec::new();
        for e in curves {
            let c = e.c_invariants();
            for p in prime_sieve(20_000)
                .into_iter()
                .filter(|&p| p >= GROUP_ORDER_FLOOR)
            {
                if e.is_good(p) {
                    assert_eq!(
                        e.trace_at(p, &c, &mut table),
                        e.trace_with_table(p, &mut table),
                        "{e} at {p}"
                    );
                }
            }
        }
    }

    #[test]
    fn cm_curve_vanishes_at_inert_primes() {
        let e = EllipticCurve::new(0, 0, 0, -1, 0).unwrap();
        let s = e.eigenvalues(10_000);
        assert_eq!(s.excluded, vec![2]);
        s.validate().unwrap();
        for entry in &s.entries {
            assert_eq!(entry.exact_zero, entry.p % 4 == 3, "p = {}", entry.p);
        }
    }

    #[test]
    fn parsing() {
        let e: EllipticCurve = "0,-1,1,-10,-20".parse().unwrap();
        assert_eq!(e.to_string(), "0,-1,1,-10,-20");
        let e: EllipticCurve = "-1,0".parse().unwrap();
        assert_eq!(e.a, [0, 0, 0, -1, 0]);
        assert!("1,2,3".parse::<EllipticCurve>().is_err());
        assert!(matches!(
            "0,0".parse::<EllipticCurve>(),
            Err(SourceError::SingularCurve(_))
        ));
    }
}
