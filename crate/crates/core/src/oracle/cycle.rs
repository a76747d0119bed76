//! Exact search for a simple cycle of a given length through exactly `k` chords.

use std::collections::VecDeque;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::graph::ChordedCycle;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycleSearch {
    /// Vertices of a cycle, smallest vertex first.
    Found(Vec<u64>),
    Absent,
    /// The deadline passed before the search space was exhausted.
    Inconclusive,
}

impl CycleSearch {
    pub fn is_found(&self) -> bool {
        matches!(self, CycleSearch::Found(_))
    }
}

/// Adjacency built once per graph, reused across queries.
pub struct CycleFinder {
    n: usize,
    adj: Vec<Vec<(usize, bool)>>,
}

const DEADLINE_POLL: u64 = 1 << 12;

impl CycleFinder {
    pub fn new(g: &ChordedCycle) -> Self {
        let adj = g
            .adjacency()
            .into_iter()
            .map(|list| list.into_iter().map(|(u, c)| (u as usize, c)).collect())
            .collect();
        CycleFinder { n: g.n() as usize, adj }
    }

    /// BFS distances to `s` inside the subgraph on vertices `>= s`.
    fn distances(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n + 1];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &(u, _) in &self.adj[v] {
                if u >= s && dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// Host-only arc from `u` back to `s` of exactly `len` edges through unused
    /// vertices above `s`, excluding both ends.
    fn host_arc(&self, u: usize, s: usize, len: usize, visited: &[bool]) -> Option<Vec<usize>> {
        let n = self.n;
        let step_up = |v: usize| if v == n { 1 } else { v + 1 };
        let step_down = |v: usize| if v == 1 { n } else { v - 1 };
        let up_len = (s + n - u) % n;
        let down_len = (u + n - s) % n;
        for (arc_len, step) in [(up_len, &step_up as &dyn Fn(usize) -> usize), (down_len, &step_down)] {
            if arc_len != len {
                continue;
            }
            let mut inner = Vec::with_capacity(len.saturating_sub(1));
            let mut v = step(u);
            let mut ok = true;
            while v != s {
                if v < s || visited[v] {
                    ok = false;
                    break;
                }
                inner.push(v);
                v = step(v);
            }
            if ok {
                return Some(inner);
            }
        }
        None
    }

    /// Depth-first search over cycles whose smallest vertex is the start.
    pub fn find(&self, l: usize, k: usize, deadline: Option<Instant>) -> Result<CycleSearch> {
        let n = self.n;
        if l < 3 || l > n {
            return Err(Error::LengthOutOfRange { length: l as u64, lo: 3, hi: n as u64 });
        }
        let mut visited = vec![false; n + 1];
        let mut nodes = 0u64;
        for s in 1..=n + 1 - l {
            let dist = self.distances(s);
            let mut path = vec![s];
            let mut chord_on_step: Vec<bool> = Vec::new();
            let mut cursor = vec![0usize];
            let mut used = 0usize;
            visited[s] = true;
            while let Some(&v) = path.last() {
                let idx = *cursor.last().unwrap();
                if idx == self.adj[v].len() {
                    path.pop();
                    cursor.pop();
                    visited[v] = false;
                    if let Some(c) = chord_on_step.pop() {
                        used -= usize::from(c);
                    }
                    continue;
                }
                *cursor.last_mut().unwrap() += 1;
                nodes += 1;
                if nodes % DEADLINE_POLL == 0 && deadline.is_some_and(|d| Instant::now() >= d) {
                    return Ok(CycleSearch::Inconclusive);
                }
                let (u, is_chord) = self.adj[v][idx];
                let remaining = l - (path.len() - 1);
                let now_used = used + usize::from(is_chord);
                if u == s {
                    if remaining == 1 && now_used == k && path.len() >= 3 {
                        return Ok(CycleSearch::Found(path.iter().map(|&x| x as u64).collect()));
                    }
                    continue;
                }
                if u < s || visited[u] || now_used > k {
                    continue;
                }
                let after = remaining - 1;
                if after == 0 || dist[u] > after || k - now_used > after {
                    continue;
                }
                if now_used == k {
                    if let Some(inner) = self.host_arc(u, s, after, &visited) {
                        let mut cycle: Vec<u64> = path.iter().map(|&x| x as u64).collect();
                        cycle.push(u as u64);
                        cycle.extend(inner.into_iter().map(|x| x as u64));
                        return Ok(CycleSearch::Found(cycle));
                    }
                    continue;
                }
                path.push(u);
                cursor.push(0);
                chord_on_step.push(is_chord);
                visited[u] = true;
                used = now_used;
            }
        }
        Ok(CycleSearch::Absent)
    }
}

/// Searches `g` for a cycle of length `l` with exactly `k` chords.
pub fn find_cycle(g: &ChordedCycle, l: u64, k: usize, deadline: Option<Instant>) -> Result<CycleSearch> {
    CycleFinder::new(g).find(l as usize, k, deadline)
}

/// Existence form of [`find_cycle`] without a deadline.
pub fn exists_cycle(g: &ChordedCycle, l: u64, k: usize) -> Result<bool> {
    Ok(find_cycle(g, l, k, None)?.is_found())
}
