//! Text formats: canonical JSON, Graphviz DOT, and the plain edge list reader.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{is_host_pair, Chord, ChordedCycle};

/// Compact JSON followed by a newline. Field order is fixed by the types.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string(value).map_err(|e| Error::Parse(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

/// Host edges drawn as a ring, chords as labeled dashed arcs.
pub fn to_dot(g: &ChordedCycle, name: &str) -> String {
    let n = g.n();
    let mut out = String::new();
    let _ = writeln!(out, "graph \"{name}\" {{");
    let _ = writeln!(out, "  layout=circo;");
    let _ = writeln!(out, "  node [shape=circle];");
    for v in 1..=n {
        let next = if v == n { 1 } else { v + 1 };
        let _ = writeln!(out, "  {v} -- {next};");
    }
    for c in g.chords() {
        let _ = writeln!(out, "  {} -- {} [style=dashed, color=red, label=\"{}-{}\"];", c.0, c.1, c.0, c.1);
    }
    out.push_str("}\n");
    out
}

#[derive(Deserialize)]
struct ConstructionJson {
    n: u64,
    plan_chords: Vec<Chord>,
    tail_chords: Vec<Chord>,
}

/// Accepts the graph encoding or the output of `construct`.
fn parse_json(text: &str) -> Result<ChordedCycle> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if value.get("plan_chords").is_some() {
        let c: ConstructionJson = serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
        return ChordedCycle::with_chords(c.n, c.plan_chords.into_iter().chain(c.tail_chords));
    }
    serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))
}

/// Reads either the JSON encoding or an edge list whose first line is
/// `n=<int>`, followed by one `a b` pair per line. Host edges in the list
/// are ignored; everything else is a chord. `#` starts a comment.
pub fn parse_graph(text: &str) -> Result<ChordedCycle> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        return parse_json(trimmed);
    }
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty graph file".into()))?;
    let n: u64 = header
        .strip_prefix("n=")
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| Error::Parse(format!("expected header `n=<int>`, got `{header}`")))?;
    let mut g = ChordedCycle::new(n)?;
    for line in lines {
        let mut parts = line.split(|c: char| c == ',' || c.is_whitespace()).filter(|p| !p.is_empty());
        let mut next = || -> Result<u64> {
            parts
                .next()
                .and_then(|p| p.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad edge line `{line}`")))
        };
        let (a, b) = (next()?, next()?);
        if a == 0 || b == 0 || a > n || b > n || a == b {
            return Err(Error::Parse(format!("bad edge line `{line}`")));
        }
        if !is_host_pair(n, a, b) {
            g.insert(a, b)?;
        }
    }
    Ok(g)
}
