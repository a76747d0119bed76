//! Exact integer helpers. Nothing in this crate touches floating point.

use crate::error::{Error, Result};

/// `base^exp`, or an overflow error naming `what`.
pub fn pow(base: u64, exp: u64, what: &'static str) -> Result<u64> {
    let exp = u32::try_from(exp).map_err(|_| Error::Overflow(what))?;
    base.checked_pow(exp).ok_or(Error::Overflow(what))
}

/// Smallest `b` with `b^k >= n`.
///
/// Binary search over `b` in `1..=n`. A power that does not fit in `u64` is
/// strictly larger than any `n`, so it compares as "too big" rather than
/// wrapping.
pub fn ceil_root(n: u64, k: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidInput("ceil_root needs n >= 1".into()));
    }
    if k < 2 {
        return Err(Error::InvalidInput("ceil_root needs k >= 2".into()));
    }
    let at_least = |b: u64| match u32::try_from(k).ok().and_then(|e| b.checked_pow(e)) {
        Some(p) => p >= n,
        None => true,
    };
    let (mut lo, mut hi) = (1u64, n);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if at_least(mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(lo)
}

/// Largest `r` with `r^k <= x`, over `u128`.
pub fn floor_root_u128(x: u128, k: u32) -> u128 {
    if x < 2 || k == 1 {
        return x;
    }
    let fits = |r: u128| match r.checked_pow(k) {
        Some(p) => p <= x,
        None => false,
    };
    // 2^(128/k + 1) bounds the root from above.
    let mut hi: u128 = 1u128 << (128 / k + 1).min(127);
    let mut lo: u128 = 1;
    while lo < hi {
        let mid = lo + (hi - lo + 1) / 2;
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

/// `ceil(log2(x))` for `x >= 1`, by comparison against powers of two.
pub fn ceil_log2(x: u64) -> u64 {
    let mut t = 0u64;
    while t < 64 && (1u64 << t) < x {
        t += 1;
    }
    t
}

/// Binomial coefficient, saturating at `u128::MAX`.
pub fn binomial(n: u64, r: u64) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        // acc * (n - i) / (i + 1) stays integral at every step.
        acc = match acc.checked_mul(u128::from(n - i)) {
            Some(v) => v / u128::from(i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceil_root_examples() {
        assert_eq!(ceil_root(16, 2).unwrap(), 4);
        assert_eq!(ceil_root(17, 2).unwrap(), 5);
        assert_eq!(ceil_root(1_000_000, 3).unwrap(), 100);
        assert_eq!(ceil_root(1, 5).unwrap(), 1);
        assert_eq!(ceil_root(u64::MAX, 2).unwrap(), 1u64 << 32);
        assert!(ceil_root(0, 2).is_err());
        assert!(ceil_root(10, 1).is_err());
    }

    #[test]
    fn ceil_root_matches_linear_scan() {
        for k in 2..=5u64 {
            for n in 1..=3000u64 {
                let mut b = 1u64;
                while b.pow(k as u32) < n {
                    b += 1;
                }
                assert_eq!(ceil_root(n, k).unwrap(), b, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn pow_reports_overflow() {
        assert_eq!(pow(10, 19, "x").unwrap(), 10u64.pow(19));
        assert_eq!(pow(10, 20, "x"), Err(Error::Overflow("x")));
    }

    #[test]
    fn floor_root_small() {
        assert_eq!(floor_root_u128(1_000_000, 3), 100);
        assert_eq!(floor_root_u128(999_999, 3), 99);
        assert_eq!(floor_root_u128(u128::MAX, 2), u64::MAX as u128);
    }

    #[test]
    fn ceil_log2_examples() {
        assert_eq!(ceil_log2(16), 4);
        assert_eq!(ceil_log2(5), 3);
        assert_eq!(ceil_log2(999_999), 20);
        assert_eq!(ceil_log2(1), 0);
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(2, 2), 1);
        assert_eq!(binomial(1, 2), 0);
        assert_eq!(binomial(30, 15), 155_117_520);
    }
}
