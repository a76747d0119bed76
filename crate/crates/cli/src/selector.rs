use std::str::FromStr;

use anyhow::{bail, Context};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Which lengths a command should touch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LengthSelector {
    All,
    Sample(usize),
    List(Vec<u64>),
}

impl FromStr for LengthSelector {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> anyhow::Result<Self> {
        let s = s.trim();
        if s == "all" {
            return Ok(LengthSelector::All);
        }
        if let Some(count) = s.strip_prefix("sample:") {
            return Ok(LengthSelector::Sample(count.parse().context("sample count")?));
        }
        let mut out = Vec::new();
        for part in s.split(',').filter(|p| !p.is_empty()) {
            out.extend(parse_span(part)?);
        }
        if out.is_empty() {
            bail!("empty length list");
        }
        Ok(LengthSelector::List(out))
    }
}

/// `a` or `a..b` (inclusive).
pub fn parse_span(s: &str) -> anyhow::Result<Vec<u64>> {
    match s.split_once("..") {
        Some((a, b)) => {
            let a: u64 = a.trim().parse().with_context(|| format!("bad range start in `{s}`"))?;
            let b: u64 = b.trim().trim_start_matches('=').parse().with_context(|| format!("bad range end in `{s}`"))?;
            if a > b {
                bail!("empty range `{s}`");
            }
            Ok((a..=b).collect())
        }
        None => Ok(vec![s.trim().parse().with_context(|| format!("bad integer `{s}`"))?]),
    }
}

/// Comma-separated integers and inclusive ranges.
pub fn parse_list(s: &str) -> anyhow::Result<Vec<u64>> {
    let mut out = Vec::new();
    for part in s.split(',').filter(|p| !p.trim().is_empty()) {
        out.extend(parse_span(part)?);
    }
    Ok(out)
}

impl LengthSelector {
    /// Concrete, sorted lengths within `lo..=hi`.
    pub fn resolve(&self, lo: u64, hi: u64, seed: u64, max_all: u64) -> anyhow::Result<Vec<u64>> {
        match self {
            LengthSelector::All => {
                if hi > max_all {
                    bail!("refusing `all` for n = {hi} above --max-all-n = {max_all}; use sample:<count>");
                }
                Ok((lo..=hi).collect())
            }
            LengthSelector::Sample(count) => {
                let span = (hi - lo + 1) as usize;
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut picked: Vec<u64> = rand::seq::index::sample(&mut rng, span, (*count).min(span))
                    .into_iter()
                    .map(|i| lo + i as u64)
                    .collect();
                picked.sort_unstable();
                Ok(picked)
            }
            LengthSelector::List(list) => {
                let mut list = list.clone();
                list.sort_unstable();
                list.dedup();
                Ok(list)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_forms() {
        assert_eq!("all".parse::<LengthSelector>().unwrap(), LengthSelector::All);
        assert_eq!("sample:5".parse::<LengthSelector>().unwrap(), LengthSelector::Sample(5));
        assert_eq!("3,5..7".parse::<LengthSelector>().unwrap(), LengthSelector::List(vec![3, 5, 6, 7]));
        assert!("7..5".parse::<LengthSelector>().is_err());
        assert_eq!(parse_list("6..8,10").unwrap(), vec![6, 7, 8, 10]);
    }

    #[test]
    fn sampling_is_seeded() {
        let s = LengthSelector::Sample(10);
        let a = s.resolve(3, 1000, 7, 0).unwrap();
        assert_eq!(a, s.resolve(3, 1000, 7, 0).unwrap());
        assert_eq!(a.len(), 10);
        assert!(a.iter().all(|&l| (3..=1000).contains(&l)));
        assert_ne!(a, s.resolve(3, 1000, 8, 0).unwrap());
    }

    #[test]
    fn all_is_capped() {
        assert!(LengthSelector::All.resolve(3, 100, 0, 50).is_err());
        assert_eq!(LengthSelector::All.resolve(3, 5, 0, 50).unwrap(), vec![3, 4, 5]);
    }
}
