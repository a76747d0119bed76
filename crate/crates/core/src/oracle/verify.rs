use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{validate_witness, ChordedCycle};

use super::cycle::{CycleFinder, CycleSearch};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum LengthStatus {
    WitnessPass,
    OracleFound,
    Missing,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LengthEntry {
    pub length: u64,
    pub status: LengthStatus,
    /// Set when a supplied witness failed, whatever the oracle then decided.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discrepancy: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct PropertyReport {
    pub n: u64,
    pub k: u64,
    pub range: (u64, u64),
    #[serde(skip_serializing_if = "Option::is_none")]
    pub excluded: Option<String>,
    pub chord_count: usize,
    pub verdict: Verdict,
    pub entries: Vec<LengthEntry>,
    pub elapsed_ms: u128,
}

impl PropertyReport {
    pub fn missing(&self) -> impl Iterator<Item = u64> + '_ {
        self.entries.iter().filter(|e| e.status == LengthStatus::Missing).map(|e| e.length)
    }

    pub fn status(&self, l: u64) -> Option<LengthStatus> {
        self.entries.iter().find(|e| e.length == l).map(|e| e.status)
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifyConfig {
    /// Per-length budget for the oracle search.
    pub time_limit: Option<Duration>,
    /// Worker threads; 0 or 1 runs on the calling thread.
    pub workers: usize,
}

/// `max(k,3)..=n`. Length 2 cannot be a cycle in a simple graph.
pub fn required_lengths(n: u64, k: u64) -> (u64, u64) {
    (k.max(3), n)
}

fn exclusion_note(k: u64) -> Option<String> {
    (k == 2).then(|| "l=2 excluded by simple-graph convention".to_string())
}

/// Checks each length in `lengths`: a supplied witness is validated first;
/// if there is none or it fails, the exhaustive search decides.
pub fn verify_property<W>(
    g: &ChordedCycle,
    k: u64,
    lengths: &[u64],
    witnesses: Option<W>,
    cfg: &VerifyConfig,
) -> Result<PropertyReport>
where
    W: Fn(u64) -> Option<Vec<u64>> + Sync,
{
    let started = Instant::now();
    let n = g.n();
    if let Some(&bad) = lengths.iter().find(|&&l| l < 3 || l > n) {
        if bad == 2 && k == 2 {
            return Err(Error::DegenerateLength);
        }
        return Err(Error::LengthOutOfRange { length: bad, lo: 3, hi: n });
    }
    let finder = CycleFinder::new(g);
    let check = |l: u64| -> Result<LengthEntry> {
        let mut discrepancy = None;
        if let Some(w) = witnesses.as_ref().and_then(|f| f(l)) {
            let report = validate_witness(g, &w, k as usize);
            if report.is_pass() && report.length as u64 == l {
                return Ok(LengthEntry { length: l, status: LengthStatus::WitnessPass, discrepancy });
            }
            let why = if report.is_pass() {
                format!("witness has length {}", report.length)
            } else {
                report.to_string()
            };
            discrepancy = Some(format!("supplied witness rejected: {why}"));
        }
        let deadline = cfg.time_limit.map(|t| Instant::now() + t);
        let status = match finder.find(l as usize, k as usize, deadline)? {
            CycleSearch::Found(_) => LengthStatus::OracleFound,
            CycleSearch::Absent => LengthStatus::Missing,
            CycleSearch::Inconclusive => LengthStatus::Inconclusive,
        };
        Ok(LengthEntry { length: l, status, discrepancy })
    };

    let mut entries = if cfg.workers > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .build()
            .map_err(|e| Error::Invariant(format!("thread pool: {e}")))?;
        pool.install(|| lengths.par_iter().map(|&l| check(l)).collect::<Result<Vec<_>>>())?
    } else {
        lengths.iter().map(|&l| check(l)).collect::<Result<Vec<_>>>()?
    };
    entries.sort_by_key(|e| e.length);

    let verdict = if entries.iter().any(|e| e.status == LengthStatus::Missing) {
        Verdict::Fail
    } else if entries.iter().any(|e| e.status == LengthStatus::Inconclusive) {
        Verdict::Inconclusive
    } else {
        Verdict::Pass
    };
    let range = match (lengths.iter().min(), lengths.iter().max()) {
        (Some(&lo), Some(&hi)) => (lo, hi),
        _ => required_lengths(n, k),
    };
    Ok(PropertyReport {
        n,
        k,
        range,
        excluded: exclusion_note(k),
        chord_count: g.chord_count(),
        verdict,
        entries,
        elapsed_ms: started.elapsed().as_millis(),
    })
}

/// Witness source that never supplies anything; forces oracle-only checks.
pub fn no_witnesses(_: u64) -> Option<Vec<u64>> {
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::construct;
    use crate::graph::Chord;

    fn all(n: u64, k: u64) -> Vec<u64> {
        let (lo, hi) = required_lengths(n, k);
        (lo..=hi).collect()
    }

    #[test]
    fn construction_passes_with_witnesses() {
        let f = construct(16, 2).unwrap();
        let wit = |l: u64| f.witness(l).ok().map(|w| w.cycle.vertices);
        let r = verify_property(f.graph(), 2, &all(16, 2), Some(wit), &VerifyConfig::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(r.entries.iter().all(|e| e.status == LengthStatus::WitnessPass));
        assert_eq!(r.range, (3, 16));
        assert!(r.excluded.is_some());
    }

    #[test]
    fn bare_cycle_fails_everywhere() {
        let g = ChordedCycle::new(16).unwrap();
        let r = verify_property(&g, 2, &all(16, 2), Some(no_witnesses), &VerifyConfig::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.missing().count(), 14);
    }

    #[test]
    fn mutation_is_flagged() {
        let f = construct(16, 2).unwrap();
        let mut g = f.graph().clone();
        assert!(g.remove(2, 4));
        let wit = |l: u64| f.witness(l).ok().map(|w| w.cycle.vertices);
        let cfg = VerifyConfig { workers: 2, ..Default::default() };
        let r = verify_property(&g, 2, &all(16, 2), Some(wit), &cfg).unwrap();
        let e = r.entries.iter().find(|e| e.length == 16).unwrap();
        assert!(e.discrepancy.as_deref().unwrap().contains("non-edge"));
        // {1,4} and {2,5} still give a Hamiltonian cycle 1,4,3,2,5,...,16.
        assert_eq!(e.status, LengthStatus::OracleFound);
        assert_eq!(r.verdict, Verdict::Pass);

        assert!(g.remove(1, 4));
        let r = verify_property(&g, 2, &[16], Some(no_witnesses), &cfg).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
    }

    #[test]
    fn length_two_rejected() {
        let g = ChordedCycle::with_chords(6, [Chord(1, 3)]).unwrap();
        assert_eq!(
            verify_property(&g, 2, &[2], Some(no_witnesses), &VerifyConfig::default()).unwrap_err(),
            Error::DegenerateLength
        );
    }
}
