//! Lower and upper bounds on the minimum chord count, side by side with
//! constructed and exhaustively computed values.

use serde::Serialize;

use crate::arith::{binomial, ceil_log2, ceil_root, floor_root_u128, pow};
use crate::construct::{construct, ConstructionPlan};
use crate::error::{Error, Result};

/// `ceil(log2(n-1))`: a graph with the property is pancyclic.
pub fn log_lower(n: u64) -> u64 {
    ceil_log2(n.saturating_sub(1).max(1))
}

/// Upper estimate of how many cycles with exactly `k` chords `c` chords can
/// form: choose the chords, their cyclic order, each chord's direction and
/// each connecting arc's direction.
fn cycle_capacity(c: u64, k: u64) -> u128 {
    let mut factorial: u128 = 1;
    for i in 2..k {
        factorial = factorial.saturating_mul(u128::from(i));
    }
    binomial(c, k)
        .saturating_mul(factorial)
        .saturating_mul(1u128 << (2 * k).min(127))
}

/// Surrogate counting bound: distinct lengths need distinct cycles, so the
/// capacity must reach the number of required lengths `n - max(k,3) + 1`.
pub fn counting_lower(n: u64, k: u64) -> Result<u64> {
    if k < 2 {
        return Err(Error::InvalidInput(format!("k must be >= 2, got {k}")));
    }
    if n < k.max(3) {
        return Err(Error::InvalidInput(format!("n = {n} is smaller than max(k,3)")));
    }
    let needed = u128::from(n - k.max(3) + 1);
    let mut c = k;
    while cycle_capacity(c, k) < needed {
        c += 1;
    }
    Ok(c)
}

/// `k * ceil(n^(1/k)) + k^2`.
pub fn theorem2_upper(n: u64, k: u64) -> Result<u64> {
    let required = ConstructionPlan::threshold(k)?;
    if n < required {
        return Err(Error::BelowThreshold { n, k, required });
    }
    let b = ceil_root(n, k)?;
    k.checked_mul(b)
        .and_then(|v| v.checked_add(k * k))
        .ok_or(Error::Overflow("k*ceil(n^(1/k)) + k^2"))
}

/// `count / n^(1/k)` truncated to four decimals, in exact integer arithmetic.
pub fn ratio_to_root(count: u64, n: u64, k: u64) -> Result<String> {
    let k32 = u32::try_from(k).map_err(|_| Error::Overflow("ratio exponent"))?;
    let scale = 10u128
        .checked_pow(4 * k32)
        .and_then(|s| s.checked_mul(u128::from(n)))
        .ok_or(Error::Overflow("n * 10^(4k)"))?;
    let root = floor_root_u128(scale, k32);
    if root == 0 {
        return Err(Error::InvalidInput("ratio needs n >= 1".into()));
    }
    let scaled = u128::from(count) * 100_000_000 / root;
    Ok(format!("{}.{:04}", scaled / 10_000, scaled % 10_000))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Instance {
    pub n: u64,
    pub k: u64,
    pub exact: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsRow {
    pub n: u64,
    pub k: u64,
    pub log_lower: u64,
    pub counting_lower: u64,
    pub theorem2_upper: Option<u64>,
    pub constructed_count: Option<u64>,
    pub exact: Option<u64>,
    pub ratio: Option<String>,
    pub flags: Vec<String>,
}

impl BoundsRow {
    pub const CSV_HEADER: &'static str =
        "n,k,log_lower,counting_lower_surrogate,theorem2_upper,constructed_count,exact,ratio,flags";

    pub fn to_csv(&self) -> String {
        let opt = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.n,
            self.k,
            self.log_lower,
            self.counting_lower,
            opt(self.theorem2_upper),
            opt(self.constructed_count),
            opt(self.exact),
            self.ratio.clone().unwrap_or_default(),
            self.flags.join(";")
        )
    }
}

pub fn bounds_row(inst: Instance) -> Result<BoundsRow> {
    let Instance { n, k, exact } = inst;
    let log_lower = log_lower(n);
    let counting_lower = counting_lower(n, k)?;
    let constructible = n >= pow(k + 2, k, "(k+2)^k")?;
    let (theorem2_upper, constructed_count, ratio) = if constructible {
        let count = construct(n, k)?.chord_count();
        (Some(theorem2_upper(n, k)?), Some(count), Some(ratio_to_root(count, n, k)?))
    } else {
        (None, None, None)
    };

    let mut flags = Vec::new();
    if let Some(c) = constructed_count {
        if log_lower > c {
            flags.push("log_lower>constructed".to_string());
        }
        if counting_lower > c {
            flags.push("counting_lower>constructed".to_string());
        }
        if theorem2_upper.is_some_and(|u| c > u + 1) {
            flags.push("constructed>budget".to_string());
        }
    }
    if let Some(x) = exact {
        if x < log_lower.max(counting_lower) {
            flags.push("exact<lower".to_string());
        }
        if constructed_count.is_some_and(|c| x > c) {
            flags.push("exact>constructed".to_string());
        }
    }
    Ok(BoundsRow { n, k, log_lower, counting_lower, theorem2_upper, constructed_count, exact, ratio, flags })
}

pub fn bounds_table(instances: &[Instance]) -> Result<Vec<BoundsRow>> {
    instances.iter().map(|&i| bounds_row(i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_lower_examples() {
        assert_eq!(log_lower(17), 4);
        assert_eq!(log_lower(6), 3);
        assert_eq!(log_lower(1_000_000), 20);
    }

    #[test]
    fn counting_lower_examples() {
        assert_eq!(counting_lower(17, 2).unwrap(), 2);
        // Smallest c with 8 c (c-1) >= 999_998 is 355.
        assert_eq!(counting_lower(1_000_000, 2).unwrap(), 355);
        assert!(counting_lower(6, 1).is_err());
    }

    #[test]
    fn counting_lower_brute_force() {
        for k in 2..=4u64 {
            for n in 6..400u64 {
                let needed = (n - k.max(3) + 1) as u128;
                let mut c = 0u64;
                loop {
                    let mut choose = 1u128;
                    for i in 0..k {
                        choose = choose * (c.saturating_sub(i)) as u128 / (i + 1) as u128;
                    }
                    let fact: u128 = (1..k).map(u128::from).product();
                    if choose * fact * 4u128.pow(k as u32) >= needed {
                        break;
                    }
                    c += 1;
                }
                assert_eq!(counting_lower(n, k).unwrap(), c, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn counting_lower_monotone() {
        for k in 2..=5 {
            let mut prev = 0;
            for n in 6..2000 {
                let c = counting_lower(n, k).unwrap();
                assert!(c >= prev);
                prev = c;
            }
        }
    }

    #[test]
    fn theorem2_examples() {
        assert_eq!(theorem2_upper(16, 2).unwrap(), 12);
        assert_eq!(theorem2_upper(256, 2).unwrap(), 36);
        for k in 2..=5u64 {
            let n = (k + 2).pow(k as u32);
            assert_eq!(theorem2_upper(n, k).unwrap(), k * (k + 2) + k * k);
        }
        assert!(theorem2_upper(15, 2).is_err());
    }

    #[test]
    fn ratio_formatting() {
        assert_eq!(ratio_to_root(9, 16, 2).unwrap(), "2.2500");
        assert_eq!(ratio_to_root(1, 2, 2).unwrap(), "0.7071");
    }

    #[test]
    fn table_rows() {
        let rows = bounds_table(&[Instance { n: 16, k: 2, exact: None }]).unwrap();
        let r = &rows[0];
        assert_eq!((r.log_lower, r.constructed_count, r.theorem2_upper), (4, Some(9), Some(12)));
        assert!(r.flags.is_empty());

        let rows = bounds_table(&[Instance { n: 6, k: 2, exact: Some(3) }]).unwrap();
        assert_eq!(rows[0].constructed_count, None);
        assert!(rows[0].flags.is_empty());
        let rows = bounds_table(&[Instance { n: 6, k: 2, exact: Some(2) }]).unwrap();
        assert_eq!(rows[0].flags, vec!["exact<lower".to_string()]);

        assert!(bounds_table(&[]).unwrap().is_empty());
    }
}
