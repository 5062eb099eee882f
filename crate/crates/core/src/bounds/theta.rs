//! Best known exponents `theta(n)` towards the Ramanujan conjecture on GL(n).

use num_bigint::BigInt;
use num_rational::BigRational;

use super::BoundError;

/// `theta(n)`: 7/64, 5/14, 9/22 for `n = 2, 3, 4`, and `1/2 - 1/(n^2 + 1)`
/// beyond.
pub fn theta(n: u64) -> Result<BigRational, BoundError> {
    let q = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
    Ok(match n {
        0 | 1 => {
            return Err(BoundError::InvalidInput(format!(
                "theta is tabulated for n >= 2, got {n}"
            )))
        }
        2 => q(7, 64),
        3 => q(5, 14),
        4 => q(9, 22),
        _ => {
            let n = BigInt::from(n);
            q(1, 2) - BigRational::new(BigInt::from(1), &n * &n + 1)
        }
    })
}
