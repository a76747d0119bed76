//! Exact minimum chord count for small `n` by exhaustive subset search.
//!
//! Chords are indexed in lexicographic order and subsets are `u64` masks.
//! For each required length we list the `k`-chord masks that close a cycle
//! of that length in `C_n` with every chord present. A subset satisfies the
//! property iff every length has one of its masks inside the subset, which
//! also prunes partial subsets against the chords still available.

use std::collections::HashSet;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{is_host_pair, Chord, ChordedCycle};

use super::symmetry::dihedral_maps;
use super::verify::{no_witnesses, required_lengths, verify_property, Verdict, VerifyConfig};

/// Largest `n` whose chord candidates fit in a `u64` mask.
pub const MAX_SEARCH_N: u64 = 12;

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub max_chords: Option<usize>,
    pub time_limit: Option<Duration>,
    pub symmetry: bool,
    pub workers: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { max_chords: None, time_limit: None, symmetry: true, workers: 1 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum SearchStatus {
    /// Every smaller subset failed and `chords` satisfies the property.
    Exact { value: usize, chords: Vec<Chord> },
    /// Stopped early. All subsets smaller than `lower_bound` failed.
    Inconclusive { lower_bound: usize, upper_bound: Option<usize> },
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchOutcome {
    pub n: u64,
    pub k: u64,
    pub status: SearchStatus,
    /// Complete subsets tested against the property per size, starting at
    /// size 0. Non-canonical subsets skipped by symmetry are not counted.
    pub examined: Vec<u64>,
    pub elapsed: Duration,
}

impl SearchOutcome {
    pub fn exact(&self) -> Option<usize> {
        match self.status {
            SearchStatus::Exact { value, .. } => Some(value),
            SearchStatus::Inconclusive { .. } => None,
        }
    }
}

struct Problem {
    candidates: Vec<Chord>,
    /// Per required length, masks of `k` chords closing a cycle of that length.
    realizers: Vec<Vec<u64>>,
    /// `perms[g][i]` is the index of the image of candidate `i` under symmetry `g`.
    perms: Vec<Vec<usize>>,
}

fn candidates(n: u64) -> Vec<Chord> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            if !is_host_pair(n, a, b) {
                out.push(Chord(a, b));
            }
        }
    }
    out
}

/// Enumerates cycles of `C_n` plus all chords with exactly `k` chords, by
/// smallest vertex first, recording each cycle's chord mask by length.
fn realizers(n: u64, k: usize, index: &[Vec<Option<usize>>], lo: u64) -> Vec<Vec<u64>> {
    let n = n as usize;
    let mut found: Vec<HashSet<u64>> = vec![HashSet::new(); n + 1];

    fn walk(
        n: usize,
        k: usize,
        index: &[Vec<Option<usize>>],
        s: usize,
        v: usize,
        len: usize,
        mask: u64,
        used: usize,
        visited: &mut Vec<bool>,
        found: &mut Vec<HashSet<u64>>,
    ) {
        for u in 1..=n {
            if u == v {
                continue;
            }
            let chord = index[v][u];
            let now_used = used + usize::from(chord.is_some());
            if now_used > k {
                continue;
            }
            let host = chord.is_none() && (u + 1 == v || v + 1 == u || (u.min(v) == 1 && u.max(v) == n));
            if chord.is_none() && !host {
                continue;
            }
            let now_mask = chord.map_or(mask, |i| mask | 1u64 << i);
            if u == s {
                if len + 1 >= 3 && now_used == k {
                    found[len + 1].insert(now_mask);
                }
                continue;
            }
            if u < s || visited[u] {
                continue;
            }
            visited[u] = true;
            walk(n, k, index, s, u, len + 1, now_mask, now_used, visited, found);
            visited[u] = false;
        }
    }

    let mut visited = vec![false; n + 1];
    for s in 1..=n {
        visited[s] = true;
        walk(n, k, index, s, s, 0, 0, 0, &mut visited, &mut found);
        visited[s] = false;
    }
    (lo as usize..=n)
        .map(|l| {
            let mut masks: Vec<u64> = found[l].iter().copied().collect();
            masks.sort_unstable();
            masks
        })
        .collect()
}

impl Problem {
    fn new(n: u64, k: u64) -> Result<Self> {
        let candidates = candidates(n);
        let mut index = vec![vec![None; n as usize + 1]; n as usize + 1];
        for (i, c) in candidates.iter().enumerate() {
            index[c.0 as usize][c.1 as usize] = Some(i);
            index[c.1 as usize][c.0 as usize] = Some(i);
        }
        let (lo, _) = required_lengths(n, k);
        let mut realizers = realizers(n, k as usize, &index, lo);
        if let Some(pos) = realizers.iter().position(Vec::is_empty) {
            return Err(Error::InvalidInput(format!(
                "no chord set gives a cycle of length {} with exactly {k} chords in C_{n}",
                lo + pos as u64
            )));
        }
        // Scarce lengths first so pruning fails fast.
        realizers.sort_by_key(Vec::len);
        let perms = dihedral_maps(n)
            .into_iter()
            .map(|map| {
                candidates
                    .iter()
                    .map(|c| {
                        let (a, b) = (map[c.0 as usize] as usize, map[c.1 as usize] as usize);
                        index[a][b].expect("dihedral image of a chord is a chord")
                    })
                    .collect()
            })
            .collect();
        Ok(Problem { candidates, realizers, perms })
    }

    fn covers(&self, available: u64) -> bool {
        self.realizers.iter().all(|masks| masks.iter().any(|&m| m & !available == 0))
    }

    /// True if no dihedral image of `mask` precedes it in lexicographic subset order.
    fn is_canonical(&self, mask: u64) -> bool {
        self.perms.iter().all(|perm| {
            let mut image = 0u64;
            let mut bits = mask;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                image |= 1u64 << perm[i];
                bits &= bits - 1;
            }
            let diff = image ^ mask;
            diff == 0 || mask & (diff & diff.wrapping_neg()) != 0
        })
    }

    fn chords_of(&self, mask: u64) -> Vec<Chord> {
        (0..self.candidates.len()).filter(|i| mask >> i & 1 == 1).map(|i| self.candidates[i]).collect()
    }
}

struct Walker<'a> {
    problem: &'a Problem,
    /// `suffix[i]`: every candidate with index `>= i`.
    suffix: Vec<u64>,
    symmetry: bool,
    deadline: Option<Instant>,
    timed_out: &'a AtomicBool,
    nodes: u64,
    examined: u64,
}

impl Walker<'_> {
    fn expired(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes % 1024 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out.store(true, Ordering::Relaxed);
                }
            }
        }
        self.timed_out.load(Ordering::Relaxed)
    }

    /// Lexicographically first satisfying completion of `chosen` with `left`
    /// more chords drawn from indices `>= next`.
    fn first(&mut self, chosen: u64, next: usize, left: usize) -> Option<u64> {
        if self.expired() {
            return None;
        }
        let total = self.problem.candidates.len();
        if left == 0 {
            if self.symmetry && !self.problem.is_canonical(chosen) {
                return None;
            }
            self.examined += 1;
            return self.problem.covers(chosen).then_some(chosen);
        }
        if !self.problem.covers(chosen | self.suffix[next]) {
            return None;
        }
        for i in next..=total - left {
            if let Some(found) = self.first(chosen | 1u64 << i, i + 1, left - 1) {
                return Some(found);
            }
            if self.timed_out.load(Ordering::Relaxed) {
                return None;
            }
        }
        None
    }
}

/// Smallest chord count for which some chord set on `C_n` realizes every
/// length in `max(k,3)..=n` with exactly `k` chords.
///
/// A satisfying `hint` caps the search: reaching its size proves it optimal.
pub fn brute_force_c(n: u64, k: u64, cfg: &SearchConfig, hint: Option<&ChordedCycle>) -> Result<SearchOutcome> {
    let started = Instant::now();
    if !(4..=MAX_SEARCH_N).contains(&n) {
        return Err(Error::InvalidInput(format!("exhaustive search supports 4 <= n <= {MAX_SEARCH_N}, got {n}")));
    }
    if k < 2 {
        return Err(Error::InvalidInput(format!("k must be >= 2, got {k}")));
    }
    let deadline = cfg.time_limit.map(|t| started + t);
    let problem = Problem::new(n, k)?;
    let total = problem.candidates.len();
    let oracle_cfg = VerifyConfig { time_limit: None, workers: 1 };
    let (lo, hi) = required_lengths(n, k);
    let lengths: Vec<u64> = (lo..=hi).collect();

    let upper = match hint {
        Some(g) if g.n() == n => {
            let r = verify_property(g, k, &lengths, Some(no_witnesses), &oracle_cfg)?;
            (r.verdict == Verdict::Pass).then(|| (g.chord_count(), g.chords().collect::<Vec<_>>()))
        }
        _ => None,
    };

    let mut suffix = vec![0u64; total + 1];
    for i in (0..total).rev() {
        suffix[i] = suffix[i + 1] | 1u64 << i;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers.max(1))
        .build()
        .map_err(|e| Error::Invariant(format!("thread pool: {e}")))?;
    let timed_out = AtomicBool::new(false);
    let limit = cfg.max_chords.unwrap_or(total).min(total);
    let mut examined = Vec::new();

    for size in 0..=limit {
        if let Some((value, chords)) = upper.as_ref().filter(|(v, _)| *v == size) {
            examined.push(0);
            return finish(n, k, SearchStatus::Exact { value: *value, chords: chords.clone() }, examined, started);
        }
        let run = |first: Option<usize>| -> (Option<u64>, u64) {
            let mut w = Walker {
                problem: &problem,
                suffix: suffix.clone(),
                symmetry: cfg.symmetry,
                deadline,
                timed_out: &timed_out,
                nodes: 0,
                examined: 0,
            };
            let hit = match first {
                None => w.first(0, 0, 0),
                Some(i) => w.first(1u64 << i, i + 1, size - 1),
            };
            (hit, w.examined)
        };
        let results: Vec<(Option<u64>, u64)> = if size == 0 {
            vec![run(None)]
        } else {
            pool.install(|| (0..=total - size).into_par_iter().map(|i| run(Some(i))).collect())
        };
        examined.push(results.iter().map(|r| r.1).sum());
        if timed_out.load(Ordering::Relaxed) {
            let status = SearchStatus::Inconclusive { lower_bound: size, upper_bound: upper.map(|u| u.0) };
            return finish(n, k, status, examined, started);
        }
        // Partitions are ordered by first chord, so the first hit is the lexicographic minimum.
        if let Some(mask) = results.iter().find_map(|r| r.0) {
            let chords = problem.chords_of(mask);
            let g = ChordedCycle::with_chords(n, chords.iter().copied())?;
            let r = verify_property(&g, k, &lengths, Some(no_witnesses), &oracle_cfg)?;
            if r.verdict != Verdict::Pass {
                return Err(Error::Invariant(format!("search result {chords:?} fails the oracle")));
            }
            return finish(n, k, SearchStatus::Exact { value: size, chords }, examined, started);
        }
    }
    let status = SearchStatus::Inconclusive { lower_bound: limit + 1, upper_bound: upper.map(|u| u.0) };
    finish(n, k, status, examined, started)
}

fn finish(n: u64, k: u64, status: SearchStatus, examined: Vec<u64>, started: Instant) -> Result<SearchOutcome> {
    Ok(SearchOutcome { n, k, status, examined, elapsed: started.elapsed() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn candidate_count() {
        for n in 4..=12u64 {
            assert_eq!(candidates(n).len() as u64, n * (n - 3) / 2);
        }
    }

    #[test]
    fn canonical_rejects_rotated_copy() {
        let p = Problem::new(6, 2).unwrap();
        let idx = |a, b| p.candidates.iter().position(|&c| c == Chord(a, b)).unwrap();
        assert!(p.is_canonical(1 << idx(1, 3)));
        assert!(!p.is_canonical(1 << idx(2, 4)));
    }

    #[test]
    fn realizers_match_oracle() {
        // Every recorded mask, read back as a chord set, has the cycle the oracle expects.
        let p = Problem::new(7, 2).unwrap();
        let total: usize = p.realizers.iter().map(Vec::len).sum();
        assert!(total > 0);
        for masks in &p.realizers {
            for &m in masks.iter().take(5) {
                let g = ChordedCycle::with_chords(7, p.chords_of(m)).unwrap();
                let found = (3..=7).any(|l| crate::oracle::exists_cycle(&g, l, 2).unwrap());
                assert!(found);
            }
        }
    }

    #[test]
    fn small_search_runs() {
        let out = brute_force_c(6, 2, &SearchConfig::default(), None).unwrap();
        let v = out.exact().unwrap();
        assert!((3..=9).contains(&v));
    }

    #[test]
    fn max_chords_limit_is_inconclusive() {
        let cfg = SearchConfig { max_chords: Some(1), ..Default::default() };
        let out = brute_force_c(6, 2, &cfg, None).unwrap();
        assert_eq!(out.status, SearchStatus::Inconclusive { lower_bound: 2, upper_bound: None });
    }

    #[test]
    fn rejects_large_n() {
        assert!(brute_force_c(13, 2, &SearchConfig::default(), None).is_err());
    }
}
