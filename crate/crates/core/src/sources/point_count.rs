//! `#E(F_p)` for `y^2 = x^3 + a x + b` by baby-step giant-step search of the
//! Hasse interval.
//!
//! Each point `P` gives the set of `N` in `[p+1-2sqrt(p), p+1+2sqrt(p)]`
//! with `N P = O`; intersecting over a few points usually leaves one
//! candidate. When it does not (tiny group exponent), the caller falls back
//! to a character sum.

use std::collections::HashMap;

type Point = Option<(u64, u64)>;

#[derive(Debug, Clone, Copy)]
pub struct ShortCurve {
    pub a: u64,
    pub b: u64,
    pub p: u64,
}

fn mul(x: u64, y: u64, p: u64) -> u64 {
    if p < 1 << 32 {
        x * y % p
    } else {
        ((u128::from(x) * u128::from(y)) % u128::from(p)) as u64
    }
}

fn pow(mut x: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, x, p);
        }
        x = mul(x, x, p);
        e >>= 1;
    }
    r
}

fn inv(x: u64, p: u64) -> u64 {
    let (mut a, mut b) = (x as i128, p as i128);
    let (mut u, mut v) = (1i128, 0i128);
    while b != 0 {
        let q = a / b;
        (a, b) = (b, a - q * b);
        (u, v) = (v, u - q * v);
    }
    debug_assert_eq!(a, 1, "{x} is not invertible mod {p}");
    u.rem_euclid(p as i128) as u64
}

/// A square root of a quadratic residue (Tonelli-Shanks).
fn sqrt(n: u64, p: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    if p % 4 == 3 {
        return pow(n, (p + 1) / 4, p);
    }
    let (mut q, mut s) = (p - 1, 0);
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let z = (2..p)
        .find(|&z| pow(z, (p - 1) / 2, p) == p - 1)
        .expect("p is an odd prime");
    let mut m = s;
    let mut c = pow(z, q, p);
    let mut t = pow(n, q, p);
    let mut r = pow(n, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul(t2, t2, p);
            i += 1;
        }
        let b = pow(c, 1 << (m - i - 1), p);
        m = i;
        c = mul(b, b, p);
        t = mul(t, c, p);
        r = mul(r, b, p);
    }
    r
}

impl ShortCurve {
    fn rhs(&self, x: u64) -> u64 {
        let p = self.p;
        (mul(mul(x, x, p), x, p) + mul(self.a, x, p) + self.b) % p
    }

    fn neg(&self, pt: Point) -> Point {
        pt.map(|(x, y)| (x, (self.p - y) % self.p))
    }

    fn add(&self, s: Point, t: Point) -> Point {
        let p = self.p;
        let (Some((x1, y1)), Some((x2, y2))) = (s, t) else {
            return s.or(t);
        };
        let lambda = if x1 == x2 {
            if (y1 + y2) % p == 0 {
                return None;
            }
            let num = (3 * mul(x1, x1, p) + self.a) % p;
            mul(num, inv(2 * y1 % p, p), p)
        } else {
            mul((y2 + p - y1) % p, inv((x2 + p - x1) % p, p), p)
        };
        let x3 = (mul(lambda, lambda, p) + 2 * p - x1 - x2) % p;
        let y3 = (mul(lambda, (x1 + p - x3) % p, p) + p - y1) % p;
        Some((x3, y3))
    }

    fn scale(&self, pt: Point, mut n: u64) -> Point {
        let (mut acc, mut base) = (None, pt);
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            n >>= 1;
        }
        acc
    }

    /// Affine points with `x = 1, 2, ...` and `y != 0`.
    fn points(&self) -> impl Iterator<Item = Point> + '_ {
        (1..self.p).filter_map(move |x| {
            let r = self.rhs(x);
            (r != 0 && pow(r, (self.p - 1) / 2, self.p) == 1).then(|| Some((x, sqrt(r, self.p))))
        })
    }

    /// Every `k` in `[0, width]` with `(low + k) P = O`.
    fn annihilators(&self, pt: Point, low: u64, width: u64) -> Vec<u64> {
        let step = ((width + 1) as f64).sqrt().ceil() as u64;
        let mut table: HashMap<Point, u64> = HashMap::with_capacity(step as usize);
        let mut q = None;
        for j in 0..step {
            if j > 0 && q.is_none() {
                // the order of P is j: the solutions form a progression
                let first = (j - low % j) % j;
                return (first..=width).step_by(j as usize).collect();
            }
            table.entry(q).or_insert(j);
            q = self.add(q, pt);
        }
        // q = step * P; look for (low + i*step + j) P = O, i.e.
        // -(low P) - i*step*P = j P
        let giant = self.neg(q);
        let mut g = self.neg(self.scale(pt, low));
        let mut out = Vec::new();
        let mut i = 0;
        while i * step <= width {
            if let Some(&j) = table.get(&g) {
                let k = i * step + j;
                if k <= width {
                    out.push(k);
                }
            }
            g = self.add(g, giant);
            i += 1;
        }
        out
    }

    /// `#E(F_p)`, or `None` when a handful of points leave it ambiguous.
    pub fn order(&self) -> Option<u64> {
        let p = self.p;
        let r = (4 * p).isqrt(); // |a_p| <= floor(2 sqrt p)
        let low = p + 1 - r;
        let width = 2 * r;
        let mut candidates: Option<Vec<u64>> = None;
        for pt in self.points().take(8) {
            let found = self.annihilators(pt, low, width);
            let next: Vec<u64> = match candidates {
                None => found,
                Some(c) => c
                    .into_iter()
                    .filter(|k| found.binary_search(k).is_ok())
                    .collect(),
            };
            if next.len() == 1 {
                return Some(low + next[0]);
            }
            if next.is_empty() {
                return None;
            }
            candidates = Some(next);
        }
        None
    }
}
