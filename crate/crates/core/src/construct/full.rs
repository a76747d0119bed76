use std::collections::BTreeSet;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Chord, ChordedCycle, WitnessCycle};

use super::plan::{ConstructionPlan, Provenance};
use super::tail::{plan_tail, TailAssignment};

/// A cycle of one required length together with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub cycle: WitnessCycle,
    pub provenance: Provenance,
}

/// Plan chords plus tail gadgets: a chord set on `C_n` realizing every length
/// in `max(k,3)..=n` with exactly `k` chords.
#[derive(Debug, Clone)]
pub struct FullConstruction {
    plan: ConstructionPlan,
    tails: Vec<TailAssignment>,
    tail_added: BTreeSet<Chord>,
    graph: ChordedCycle,
}

pub fn construct(n: u64, k: u64) -> Result<FullConstruction> {
    let plan = ConstructionPlan::build(n, k)?;
    let tails = plan_tail(n, k)?;
    let mut graph = plan.graph();
    let mut tail_added = BTreeSet::new();
    for c in tails.iter().flat_map(TailAssignment::chords) {
        if graph.insert(c.lo(), c.hi())? {
            tail_added.insert(c);
        }
    }
    if tail_added.len() as u64 > k * k {
        return Err(Error::Invariant(format!(
            "{} tail chords exceed k^2 = {}",
            tail_added.len(),
            k * k
        )));
    }
    let full = FullConstruction { plan, tails, tail_added, graph };
    if full.chord_count() > full.budget() {
        return Err(Error::Invariant(format!(
            "{} chords exceed k*ceil(n^(1/k)) + k^2 + 1 = {}",
            full.chord_count(),
            full.budget()
        )));
    }
    Ok(full)
}

impl FullConstruction {
    pub fn plan(&self) -> &ConstructionPlan {
        &self.plan
    }

    pub fn graph(&self) -> &ChordedCycle {
        &self.graph
    }

    pub fn tails(&self) -> &[TailAssignment] {
        &self.tails
    }

    /// Tail chords that were not already plan chords.
    pub fn tail_added(&self) -> &BTreeSet<Chord> {
        &self.tail_added
    }

    pub fn n(&self) -> u64 {
        self.plan.n()
    }

    pub fn k(&self) -> u64 {
        self.plan.k()
    }

    pub fn chord_count(&self) -> u64 {
        self.graph.chord_count() as u64
    }

    /// `k*ceil(n^(1/k)) + k^2`.
    pub fn stated_bound(&self) -> u64 {
        self.k() * self.plan.b() + self.k() * self.k()
    }

    /// The stated bound plus the separately counted chord `{1, m}`.
    pub fn budget(&self) -> u64 {
        self.stated_bound() + 1
    }

    pub fn exceeds_stated_bound(&self) -> bool {
        self.chord_count() > self.stated_bound()
    }

    /// Required lengths, `max(k,3)..=n`.
    pub fn required_range(&self) -> (u64, u64) {
        (self.plan.min_length(), self.n())
    }

    pub fn witness(&self, l: u64) -> Result<Witness> {
        let n = self.n();
        let k = self.k();
        if l > self.plan.max_length() && l <= n {
            let tail = self
                .tails
                .iter()
                .find(|t| t.length == l)
                .ok_or_else(|| Error::Invariant(format!("no tail gadgets for length {l}")))?;
            let cycle = WitnessCycle::classify(&self.graph, tail.cycle(n));
            return Ok(Witness { cycle, provenance: Provenance::Tail { gadgets: tail.gadgets.clone() } });
        }
        match self.plan.decode(l) {
            Ok((vertices, provenance)) => {
                Ok(Witness { cycle: WitnessCycle::classify(&self.graph, vertices), provenance })
            }
            Err(Error::LengthOutOfRange { length, .. }) => {
                Err(Error::LengthOutOfRange { length, lo: k.max(3), hi: n })
            }
            Err(e) => Err(e),
        }
    }
}

impl Serialize for FullConstruction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("FullConstruction", 8)?;
        st.serialize_field("n", &self.n())?;
        st.serialize_field("k", &self.k())?;
        st.serialize_field("b", &self.plan.b())?;
        st.serialize_field("alpha", &self.plan.alpha())?;
        st.serialize_field("m", &self.plan.m())?;
        st.serialize_field("plan_chords", &self.plan.chords())?;
        st.serialize_field("tail_chords", &self.tail_added)?;
        st.serialize_field("chord_count", &self.chord_count())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::validate_witness;

    #[test]
    fn construct_16_2() {
        let f = construct(16, 2).unwrap();
        assert_eq!(f.chord_count(), 9);
        assert_eq!(
            f.tail_added().iter().copied().collect::<Vec<_>>(),
            vec![Chord(2, 4), Chord(2, 5)]
        );
        assert!(!f.exceeds_stated_bound());
        for l in 3..=16 {
            let w = f.witness(l).unwrap();
            let r = validate_witness(f.graph(), &w.cycle.vertices, 2);
            assert!(r.is_pass(), "l={l}: {r}");
            assert_eq!(r.length as u64, l);
            assert_eq!(r.chord_edges, w.cycle.chord_edges);
        }
        assert_eq!(f.witness(2).unwrap_err(), Error::DegenerateLength);
        assert!(matches!(f.witness(17), Err(Error::LengthOutOfRange { lo: 3, hi: 16, .. })));
    }

    #[test]
    fn tail_witness_examples() {
        let f = construct(16, 2).unwrap();
        let w = f.witness(16).unwrap();
        assert_eq!(&w.cycle.vertices[..4], &[1, 3, 2, 4]);
        assert_eq!(w.cycle.chord_edges, vec![Chord(1, 3), Chord(2, 4)]);
        let w = f.witness(15).unwrap();
        assert_eq!(&w.cycle.vertices[..4], &[1, 3, 2, 5]);
        assert_eq!(w.cycle.chord_edges, vec![Chord(1, 3), Chord(2, 5)]);

        let f = construct(125, 3).unwrap();
        let w = f.witness(125).unwrap();
        assert_eq!(w.cycle.chord_edges.len(), 3);
        assert_eq!(w.cycle.length, 125);
    }

    #[test]
    fn construct_256_2() {
        let f = construct(256, 2).unwrap();
        assert!(f.chord_count() <= 32 + 4 + 1);
        for l in 3..=256 {
            let w = f.witness(l).unwrap();
            assert!(validate_witness(f.graph(), &w.cycle.vertices, 2).is_pass(), "l={l}");
        }
    }

    #[test]
    fn json_layout() {
        let f = construct(16, 2).unwrap();
        assert_eq!(
            serde_json::to_string(&f).unwrap(),
            r#"{"n":16,"k":2,"b":4,"alpha":2,"m":6,"plan_chords":[[1,3],[1,4],[1,5],[1,6],[6,8],[6,12],[6,16]],"tail_chords":[[2,4],[2,5]],"chord_count":9}"#
        );
    }

    #[test]
    fn decode_is_deterministic() {
        let a = construct(1400, 4).unwrap();
        let b = construct(1400, 4).unwrap();
        for l in [4, 100, 700, 1396, 1397, 1400] {
            assert_eq!(a.witness(l).unwrap(), b.witness(l).unwrap());
        }
    }
}
