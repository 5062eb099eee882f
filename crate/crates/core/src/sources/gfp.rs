//! Dense polynomials over F_p (p < 2^31), coefficients lowest degree first.

/// Polynomial over F_p; no trailing zeros, the zero polynomial is empty.
pub type Poly = Vec<u64>;

fn trim(mut f: Poly) -> Poly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

pub fn degree(f: &Poly) -> Option<usize> {
    f.len().checked_sub(1)
}

pub fn pow_mod_int(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod_int(a, p - 2, p)
}

/// Reduce integer coefficients (lowest degree first) modulo `p`.
pub fn from_ints(coeffs: &[i64], p: u64) -> Poly {
    let pi = p as i64;
    trim(coeffs.iter().map(|c| c.rem_euclid(pi) as u64).collect())
}

pub fn sub(f: &Poly, g: &Poly, p: u64) -> Poly {
    let n = f.len().max(g.len());
    let out = (0..n)
        .map(|i| {
            let a = f.get(i).copied().unwrap_or(0);
            let b = g.get(i).copied().unwrap_or(0);
            (a + p - b) % p
        })
        .collect();
    trim(out)
}

pub fn mul(f: &Poly, g: &Poly, p: u64) -> Poly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = (out[i + j] + a * b) % p;
        }
    }
    trim(out)
}

/// Remainder of `f` modulo a non-zero `g`.
pub fn rem(f: &Poly, g: &Poly, p: u64) -> Poly {
    let dg = degree(g).expect("division by the zero polynomial");
    let mut r = f.clone();
    let lead_inv = inv_mod(g[dg], p);
    while let Some(dr) = degree(&r) {
        if dr < dg {
            break;
        }
        let q = r[dr] * lead_inv % p;
        let shift = dr - dg;
        for (i, &c) in g.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - q * c % p) % p;
        }
        r = trim(r);
    }
    r
}

pub fn monic(f: &Poly, p: u64) -> Poly {
    match f.last() {
        None => Vec::new(),
        Some(&lead) => {
            let inv = inv_mod(lead, p);
            f.iter().map(|c| c * inv % p).collect()
        }
    }
}

/// Monic greatest common divisor.
pub fn gcd(f: &Poly, g: &Poly, p: u64) -> Poly {
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

pub fn derivative(f: &Poly, p: u64) -> Poly {
    trim(
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| (i as u64 % p) * c % p)
            .collect(),
    )
}

pub fn is_squarefree(f: &Poly, p: u64) -> bool {
    degree(&gcd(f, &derivative(f, p), p)) == Some(0)
}

/// `x^e mod f`.
pub fn x_pow_mod(e: u64, f: &Poly, p: u64) -> Poly {
    let mut result: Poly = vec![1];
    let mut base = rem(&vec![0, 1], f, p);
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = rem(&mul(&result, &base, p), f, p);
        }
        base = rem(&mul(&base, &base, p), f, p);
        e >>= 1;
    }
    result
}

/// Degrees of the irreducible factors of a monic squarefree `f`, with
/// multiplicity, by distinct-degree factorization.
///
/// The Frobenius map `h -> h^p` is linear on `F_p[x]/(f)`; its matrix
/// (the images `x^{ip} mod f`) is built once and each further power of
/// Frobenius costs one matrix-vector product.
pub fn factor_degrees(f: &Poly, p: u64) -> Vec<usize> {
    let n = degree(f).expect("non-zero polynomial");
    let xp = x_pow_mod(p, f, p);
    let mut frob: Vec<Poly> = Vec::with_capacity(n);
    let mut power: Poly = vec![1];
    for _ in 0..n {
        frob.push(power.clone());
        power = rem(&mul(&power, &xp, p), f, p);
    }
    let apply = |h: &Poly| -> Poly {
        let mut out = vec![0u64; n];
        for (i, &c) in h.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (j, &b) in frob[i].iter().enumerate() {
                out[j] = (out[j] + c * b) % p;
            }
        }
        trim(out)
    };

    let x: Poly = rem(&vec![0, 1], f, p);
    let mut degrees = Vec::new();
    let mut rest = f.clone();
    let mut h = x.clone();
    let mut d = 0;
    while degree(&rest).is_some_and(|k| k > 0) {
        d += 1;
        if 2 * d > degree(&rest).unwrap() {
            degrees.push(degree(&rest).unwrap());
            break;
        }
        h = apply(&h);
        let g = gcd(&sub(&h, &x, p), &rest, p);
        let k = degree(&g).unwrap_or(0);
        if k > 0 {
            degrees.extend(std::iter::repeat_n(d, k / d));
            rest = divide_exact(&rest, &g, p);
            h = rem(&h, &rest, p);
        }
    }
    degrees
}

/// Quotient of `f` by a monic divisor `g`.
fn divide_exact(f: &Poly, g: &Poly, p: u64) -> Poly {
    let dg = degree(g).expect("non-zero divisor");
    let df = degree(f).expect("non-zero dividend");
    let mut r = f.clone();
    let mut q = vec![0u64; df - dg + 1];
    for k in (0..=df - dg).rev() {
        let c = r[k + dg];
        q[k] = c;
        if c != 0 {
            for (i, &b) in g.iter().enumerate() {
                r[k + i] = (r[k + i] + p - c * b % p) % p;
            }
        }
    }
    debug_assert!(trim(r).is_empty(), "inexact division");
    trim(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Factor degrees by brute force: count monic irreducibles of each
    /// degree dividing f, for tiny p.
    fn brute_degrees(f: &Poly, p: u64) -> Vec<usize> {
        let mut rest = f.clone();
        let mut out = Vec::new();
        let mut d = 1;
        while 2 * d <= degree(&rest).unwrap_or(0) {
            let count = p.pow(d as u32);
            for code in 0..count {
                let mut g: Poly = (0..d).map(|i| code / p.pow(i as u32) % p).collect();
                g.push(1);
                while degree(&rest).unwrap_or(0) >= d && rem(&rest, &g, p).is_empty() {
                    out.push(d);
                    rest = divide_exact(&rest, &g, p);
                }
            }
            d += 1;
        }
        // no factor of degree <= half remains, so the rest is irreducible
        if let Some(r) = degree(&rest).filter(|&r| r > 0) {
            out.push(r);
        }
        out
    }

    #[test]
    fn arithmetic() {
        let p = 7;
        let f = from_ints(&[-1, 0, 1], p); // x^2 - 1
        assert_eq!(f, vec![6, 0, 1]);
        assert_eq!(gcd(&f, &from_ints(&[-1, 1], p), p), vec![6, 1]);
        assert!(is_squarefree(&f, p));
        assert!(!is_squarefree(&from_ints(&[1, 2, 1], p), p));
        assert_eq!(x_pow_mod(7, &from_ints(&[1, 0, 1], p), p), vec![0, 6]);
    }

    #[test]
    fn ddf_matches_brute_force() {
        let polys: [&[i64]; 4] = [
            &[36, 0, -144, 0, 180, 0, -72, 0, 1],
            &[1, 1, 0, 1],
            &[-2, 0, 0, 0, 1],
            &[5, -3, 2, 0, 1, 1],
        ];
        for coeffs in polys {
            for p in [5u64, 7, 11, 13] {
                let f = from_ints(coeffs, p);
                if degree(&f) != Some(coeffs.len() - 1) || !is_squarefree(&f, p) {
                    continue;
                }
                let mut got = factor_degrees(&f, p);
                got.sort_unstable();
                assert_eq!(got, brute_degrees(&f, p), "{coeffs:?} mod {p}");
            }
        }
    }
}
