//! The host cycle `C_n` on vertices `1..=n` plus a set of chords, and the
//! witness check every other module relies on.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An unordered vertex pair stored as `(lo, hi)` with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Chord(pub u64, pub u64);

impl Chord {
    pub fn new(a: u64, b: u64) -> Self {
        if a <= b {
            Chord(a, b)
        } else {
            Chord(b, a)
        }
    }

    pub fn lo(self) -> u64 {
        self.0
    }

    pub fn hi(self) -> u64 {
        self.1
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    Host,
    Chord,
    Absent,
}

/// `C_n` plus chords. Chords never coincide with host edges and iterate in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawChordedCycle", into = "RawChordedCycle")]
pub struct ChordedCycle {
    n: u64,
    chords: BTreeSet<Chord>,
}

#[derive(Serialize, Deserialize)]
struct RawChordedCycle {
    n: u64,
    chords: Vec<Chord>,
}

impl TryFrom<RawChordedCycle> for ChordedCycle {
    type Error = Error;

    fn try_from(raw: RawChordedCycle) -> Result<Self> {
        ChordedCycle::with_chords(raw.n, raw.chords)
    }
}

impl From<ChordedCycle> for RawChordedCycle {
    fn from(g: ChordedCycle) -> Self {
        RawChordedCycle { n: g.n, chords: g.chords.into_iter().collect() }
    }
}

/// True when `{a,b}` is an edge of the bare cycle `C_n`.
pub fn is_host_pair(n: u64, a: u64, b: u64) -> bool {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    hi == lo + 1 || (lo == 1 && hi == n)
}

impl ChordedCycle {
    pub fn new(n: u64) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidInput(format!("host cycle needs n >= 3, got {n}")));
        }
        Ok(ChordedCycle { n, chords: BTreeSet::new() })
    }

    pub fn with_chords<I>(n: u64, chords: I) -> Result<Self>
    where
        I: IntoIterator<Item = Chord>,
    {
        let mut g = Self::new(n)?;
        for c in chords {
            g.insert(c.0, c.1)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn chords(&self) -> impl ExactSizeIterator<Item = Chord> + '_ {
        self.chords.iter().copied()
    }

    pub fn chord_set(&self) -> &BTreeSet<Chord> {
        &self.chords
    }

    pub fn chord_count(&self) -> usize {
        self.chords.len()
    }

    fn check_vertex(&self, v: u64) -> Result<()> {
        if v == 0 || v > self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }

    fn check_pair(&self, a: u64, b: u64) -> Result<()> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(Error::InvalidInput(format!("loop at vertex {a}")));
        }
        Ok(())
    }

    /// Adds a chord. Returns `false` if it was already present.
    pub fn insert(&mut self, a: u64, b: u64) -> Result<bool> {
        self.check_pair(a, b)?;
        if is_host_pair(self.n, a, b) {
            return Err(Error::InvalidInput(format!("{{{a},{b}}} is a host edge, not a chord")));
        }
        Ok(self.chords.insert(Chord::new(a, b)))
    }

    pub fn remove(&mut self, a: u64, b: u64) -> bool {
        self.chords.remove(&Chord::new(a, b))
    }

    pub fn edge_kind(&self, a: u64, b: u64) -> Result<EdgeKind> {
        self.check_pair(a, b)?;
        Ok(if is_host_pair(self.n, a, b) {
            EdgeKind::Host
        } else if self.chords.contains(&Chord::new(a, b)) {
            EdgeKind::Chord
        } else {
            EdgeKind::Absent
        })
    }

    pub fn is_chord(&self, a: u64, b: u64) -> Result<bool> {
        Ok(self.edge_kind(a, b)? == EdgeKind::Chord)
    }

    pub fn has_edge(&self, a: u64, b: u64) -> Result<bool> {
        Ok(self.edge_kind(a, b)? != EdgeKind::Absent)
    }

    /// Adjacency lists (index 0 unused). Each entry records whether the edge is a chord.
    pub fn adjacency(&self) -> Vec<Vec<(u64, bool)>> {
        let n = self.n;
        let mut adj = vec![Vec::new(); n as usize + 1];
        for v in 1..=n {
            let next = if v == n { 1 } else { v + 1 };
            adj[v as usize].push((next, false));
            adj[next as usize].push((v, false));
        }
        for c in &self.chords {
            adj[c.0 as usize].push((c.1, true));
            adj[c.1 as usize].push((c.0, true));
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        adj
    }
}

/// Why a vertex sequence is not a cycle with the requested chord count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    TooShort { length: usize },
    VertexOutOfRange { vertex: u64 },
    Repeat { vertex: u64 },
    NonEdge { a: u64, b: u64 },
    ChordCount { actual: usize, expected: usize },
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::TooShort { length } => write!(f, "FAIL(too-short): length {length} < 3"),
            Failure::VertexOutOfRange { vertex } => write!(f, "FAIL(range): vertex {vertex}"),
            Failure::Repeat { vertex } => write!(f, "FAIL(repeat): vertex {vertex}"),
            Failure::NonEdge { a, b } => write!(f, "FAIL(non-edge): {{{a},{b}}}"),
            Failure::ChordCount { actual, expected } => {
                write!(f, "FAIL(count): {actual} chords, expected {expected}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub length: usize,
    /// Chords used by the cycle, sorted.
    pub chord_edges: Vec<Chord>,
    pub failure: Option<Failure>,
}

impl ValidationReport {
    pub fn is_pass(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => {
                write!(f, "PASS length {} chords", self.length)?;
                for c in &self.chord_edges {
                    write!(f, " {c}")?;
                }
                Ok(())
            }
            Some(fail) => write!(f, "{fail}"),
        }
    }
}

/// Checks that `w` is a simple cycle of `g` (closing `w[last] -> w[0]`) using
/// exactly `k` chords.
pub fn validate_witness(g: &ChordedCycle, w: &[u64], k: usize) -> ValidationReport {
    let length = w.len();
    let fail = |failure| ValidationReport { length, chord_edges: Vec::new(), failure: Some(failure) };
    if length < 3 {
        return fail(Failure::TooShort { length });
    }
    let mut seen = vec![false; g.n as usize + 1];
    for &v in w {
        if v == 0 || v > g.n {
            return fail(Failure::VertexOutOfRange { vertex: v });
        }
        if std::mem::replace(&mut seen[v as usize], true) {
            return fail(Failure::Repeat { vertex: v });
        }
    }
    let mut chord_edges = Vec::new();
    for i in 0..length {
        let (a, b) = (w[i], w[(i + 1) % length]);
        if is_host_pair(g.n, a, b) {
            continue;
        }
        let c = Chord::new(a, b);
        if !g.chords.contains(&c) {
            return fail(Failure::NonEdge { a, b });
        }
        chord_edges.push(c);
    }
    chord_edges.sort_unstable();
    let failure = (chord_edges.len() != k)
        .then_some(Failure::ChordCount { actual: chord_edges.len(), expected: k });
    ValidationReport { length, chord_edges, failure }
}

/// An explicit cycle, listed as its vertices in traversal order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessCycle {
    pub length: usize,
    pub vertices: Vec<u64>,
    pub chord_edges: Vec<Chord>,
}

impl WitnessCycle {
    /// Records the chords `vertices` uses in `g`. Does not validate.
    pub fn classify(g: &ChordedCycle, vertices: Vec<u64>) -> Self {
        let len = vertices.len();
        let mut chord_edges: Vec<Chord> = (0..len)
            .map(|i| Chord::new(vertices[i], vertices[(i + 1) % len]))
            .filter(|c| g.chords.contains(c))
            .collect();
        chord_edges.sort_unstable();
        WitnessCycle { length: len, vertices, chord_edges }
    }
}
