//! Chord patterns spliced into the host cycle for lengths `n-k+1 ..= n`.
//!
//! Each gadget reroutes a short interval `[start, end]` of the host path:
//!
//! * `Skip { anchor, span }`: chord `{a, a+span}`, shortens by `span - 1`, one chord.
//! * `Cross { anchor, shorten }`: `x -> x+2 -> x+1 -> x+3+s`, shortens by `s`, two chords.
//! * `Triple { anchor }`: `x -> x+3 -> x+1 -> x+2 -> x+4`, same length, three chords.
//!
//! Removing `d` edges with exactly `k` chords: one Cross(d) or Skip(d+1) (or
//! a Triple when `d = 0` and `k` is odd), padded with Cross(0)s.

use crate::error::{Error, Result};
use crate::graph::Chord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gadget {
    Skip { anchor: u64, span: u64 },
    Cross { anchor: u64, shorten: u64 },
    Triple { anchor: u64 },
}

impl Gadget {
    pub fn start(&self) -> u64 {
        match *self {
            Gadget::Skip { anchor, .. } | Gadget::Cross { anchor, .. } | Gadget::Triple { anchor } => {
                anchor
            }
        }
    }

    /// Last host vertex covered; the cycle resumes along the host path here.
    pub fn end(&self) -> u64 {
        match *self {
            Gadget::Skip { anchor, span } => anchor + span,
            Gadget::Cross { anchor, shorten } => anchor + 3 + shorten,
            Gadget::Triple { anchor } => anchor + 4,
        }
    }

    pub fn chords(&self) -> Vec<Chord> {
        match *self {
            Gadget::Skip { anchor: a, span } => vec![Chord::new(a, a + span)],
            Gadget::Cross { anchor: x, shorten } => {
                vec![Chord::new(x, x + 2), Chord::new(x + 1, x + 3 + shorten)]
            }
            Gadget::Triple { anchor: x } => {
                vec![Chord::new(x, x + 3), Chord::new(x + 1, x + 3), Chord::new(x + 2, x + 4)]
            }
        }
    }

    /// How many edges shorter the spliced cycle is than the host cycle.
    pub fn shortening(&self) -> u64 {
        match *self {
            Gadget::Skip { span, .. } => span - 1,
            Gadget::Cross { shorten, .. } => shorten,
            Gadget::Triple { .. } => 0,
        }
    }

    /// Vertices visited from `start` up to, but excluding, `end`.
    pub fn segment(&self) -> Vec<u64> {
        match *self {
            Gadget::Skip { anchor, .. } => vec![anchor],
            Gadget::Cross { anchor: x, .. } => vec![x, x + 2, x + 1],
            Gadget::Triple { anchor: x } => vec![x, x + 3, x + 1, x + 2],
        }
    }

    fn label(&self) -> String {
        match *self {
            Gadget::Skip { anchor, span } => format!("skip({anchor},{span})"),
            Gadget::Cross { anchor, shorten } => format!("cross({anchor},{shorten})"),
            Gadget::Triple { anchor } => format!("triple({anchor})"),
        }
    }
}

impl std::fmt::Display for Gadget {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.label())
    }
}

/// Gadgets realizing one tail length, on disjoint host intervals in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailAssignment {
    pub length: u64,
    pub gadgets: Vec<Gadget>,
}

impl TailAssignment {
    pub fn chords(&self) -> impl Iterator<Item = Chord> + '_ {
        self.gadgets.iter().flat_map(Gadget::chords)
    }

    /// The host cycle `1..=n` with every gadget spliced in.
    pub fn cycle(&self, n: u64) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.length as usize);
        let mut pos = 1u64;
        for g in &self.gadgets {
            out.extend(pos..g.start());
            out.extend(g.segment());
            pos = g.end();
        }
        out.extend(pos..=n);
        out
    }
}

/// Gadget kinds for dropping `d` edges with exactly `k` chords, before placement.
fn gadget_shapes(k: u64, d: u64) -> Vec<Gadget> {
    let mut shapes = Vec::new();
    let pad = if d == 0 {
        if k % 2 == 0 {
            k / 2
        } else {
            shapes.push(Gadget::Triple { anchor: 0 });
            (k - 3) / 2
        }
    } else if k % 2 == 0 {
        shapes.push(Gadget::Cross { anchor: 0, shorten: d });
        (k - 2) / 2
    } else {
        shapes.push(Gadget::Skip { anchor: 0, span: d + 1 });
        (k - 1) / 2
    };
    shapes.extend((0..pad).map(|_| Gadget::Cross { anchor: 0, shorten: 0 }));
    shapes
}

fn place(shape: Gadget, anchor: u64) -> Gadget {
    match shape {
        Gadget::Skip { span, .. } => Gadget::Skip { anchor, span },
        Gadget::Cross { shorten, .. } => Gadget::Cross { anchor, shorten },
        Gadget::Triple { .. } => Gadget::Triple { anchor },
    }
}

/// Assigns gadgets for every length `n-d`, `d < k`, packing them from vertex 1 upward.
pub fn plan_tail(n: u64, k: u64) -> Result<Vec<TailAssignment>> {
    if k < 2 {
        return Err(Error::InvalidInput(format!("k must be >= 2, got {k}")));
    }
    let mut out = Vec::with_capacity(k as usize);
    for d in 0..k {
        let mut anchor = 1u64;
        let mut gadgets = Vec::new();
        for shape in gadget_shapes(k, d) {
            let g = place(shape, anchor);
            // Keep clear of vertex n so no gadget chord collides with the host edge {1,n}.
            if g.end() >= n {
                return Err(Error::Invariant(format!("tail gadget {g} does not fit in C_{n}")));
            }
            anchor = g.end() + 1;
            gadgets.push(g);
        }
        let chords: usize = gadgets.iter().map(|g| g.chords().len()).sum();
        let shortening: u64 = gadgets.iter().map(Gadget::shortening).sum();
        if chords as u64 != k || shortening != d {
            return Err(Error::Invariant(format!(
                "gadgets for d = {d} give {chords} chords and shorten by {shortening}"
            )));
        }
        out.push(TailAssignment { length: n - d, gadgets });
    }
    Ok(out)
}
