//! Prime sieves.

/// All primes `<= limit`, ascending. Odd-only sieve of Eratosthenes.
pub fn prime_sieve(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = usize::try_from(limit).expect("sieve limit fits in memory");
    // index i stands for 2i + 1
    let half = (limit - 1) / 2 + 1;
    let mut composite = vec![false; half];
    composite[0] = true;
    let mut i = 1;
    while (2 * i + 1) * (2 * i + 1) <= limit {
        if !composite[i] {
            let p = 2 * i + 1;
            let mut j = (p * p) / 2;
            while j < half {
                composite[j] = true;
                j += p;
            }
        }
        i += 1;
    }
    let mut out = Vec::with_capacity(estimate_count(limit as u64));
    out.push(2);
    out.extend(
        composite
            .iter()
            .enumerate()
            .filter(|(_, &c)| !c)
            .map(|(i, _)| (2 * i + 1) as u64),
    );
    out
}

fn estimate_count(limit: u64) -> usize {
    let x = limit.max(3) as f64;
    (1.26 * x / x.ln()) as usize + 8
}

/// The first `count` primes.
pub fn first_primes(count: usize) -> Vec<u64> {
    if count == 0 {
        return Vec::new();
    }
    let n = count.max(6) as f64;
    // p_n < n (ln n + ln ln n) for n >= 6
    let bound = (n * (n.ln() + n.ln().ln())).ceil() as u64 + 1;
    let mut primes = prime_sieve(bound);
    primes.truncate(count);
    primes
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Segmented sieve with a different memory layout, used as an oracle.
    fn segmented(limit: u64) -> Vec<u64> {
        let root = (limit as f64).sqrt() as u64 + 1;
        let small: Vec<u64> = (2..=root)
            .filter(|n| (2..*n).take_while(|d| d * d <= *n).all(|d| n % d != 0))
            .collect();
        let mut out = Vec::new();
        let seg = 1 << 14;
        let mut lo = 2;
        while lo <= limit {
            let hi = (lo + seg - 1).min(limit);
            let mut mark = vec![true; (hi - lo + 1) as usize];
            for &p in &small {
                if p * p > hi {
                    break;
                }
                let start = (p * p).max(lo.div_ceil(p) * p);
                let mut m = start;
                while m <= hi {
                    mark[(m - lo) as usize] = false;
                    m += p;
                }
            }
            out.extend((lo..=hi).filter(|n| mark[(n - lo) as usize]));
            lo = hi + 1;
        }
        out
    }

    #[test]
    fn small_limits() {
        assert_eq!(prime_sieve(10), vec![2, 3, 5, 7]);
        assert_eq!(prime_sieve(2), vec![2]);
        assert!(prime_sieve(1).is_empty());
        assert_eq!(prime_sieve(3), vec![2, 3]);
    }

    #[test]
    fn matches_segmented_oracle() {
        for limit in [2, 3, 4, 97, 100, 1000, 65_536, 200_003] {
            assert_eq!(prime_sieve(limit), segmented(limit), "limit {limit}");
        }
    }

    #[test]
    fn pi_of_one_million() {
        assert_eq!(prime_sieve(1_000_000).len(), 78_498);
        assert_eq!(segmented(1_000_000).len(), 78_498);
    }

    #[test]
    fn first_primes_counts() {
        assert_eq!(first_primes(5), vec![2, 3, 5, 7, 11]);
        assert_eq!(first_primes(100_000).last(), Some(&1_299_709));
        assert!(first_primes(0).is_empty());
    }
}
