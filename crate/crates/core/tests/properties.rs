//! Randomized invariants of the graph model, the construction and the oracle.

use proptest::prelude::*;

use kchord_core::construct::{ConstructionPlan, DigitVector};
use kchord_core::graph::{is_host_pair, EdgeKind};
use kchord_core::oracle::{dihedral_maps, exists_cycle, relabel};
use kchord_core::{construct, validate_witness, Chord, ChordedCycle};

fn chorded(n: u64, pairs: &[(u64, u64)]) -> ChordedCycle {
    let mut g = ChordedCycle::new(n).unwrap();
    for &(a, b) in pairs {
        let (a, b) = (a % n + 1, b % n + 1);
        if a != b && !is_host_pair(n, a, b) {
            g.insert(a, b).unwrap();
        }
    }
    g
}

fn small_graph() -> impl Strategy<Value = ChordedCycle> {
    (5u64..=11, prop::collection::vec((0u64..64, 0u64..64), 0..6)).prop_map(|(n, p)| chorded(n, &p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn witness_survives_rotation_and_reversal(n in 16u64..600, pick in 0u64..u64::MAX, shift in 0usize..1000) {
        let f = construct(n, 2).unwrap();
        let (lo, hi) = f.required_range();
        let l = lo + pick % (hi - lo + 1);
        let w = f.witness(l).unwrap().cycle.vertices;
        let base = validate_witness(f.graph(), &w, 2);
        prop_assert!(base.is_pass(), "l={l}: {base}");
        prop_assert_eq!(base.length as u64, l);

        let mut rotated = w.clone();
        rotated.rotate_left(shift % w.len());
        let mut reversed = w.clone();
        reversed.reverse();
        for other in [rotated, reversed] {
            let r = validate_witness(f.graph(), &other, 2);
            prop_assert!(r.is_pass());
            prop_assert_eq!(&r.chord_edges, &base.chord_edges);
        }
    }

    #[test]
    fn every_pair_has_exactly_one_kind(g in small_graph()) {
        let n = g.n();
        let (mut host, mut chord) = (0u64, 0usize);
        for a in 1..=n {
            for b in a + 1..=n {
                let kind = g.edge_kind(a, b).unwrap();
                // Independent classification from the definitions.
                let expected = if b == a + 1 || (a == 1 && b == n) {
                    EdgeKind::Host
                } else if g.chord_set().contains(&Chord(a, b)) {
                    EdgeKind::Chord
                } else {
                    EdgeKind::Absent
                };
                prop_assert_eq!(kind, expected);
                prop_assert_eq!(g.edge_kind(b, a).unwrap(), kind);
                host += u64::from(kind == EdgeKind::Host);
                chord += usize::from(kind == EdgeKind::Chord);
            }
        }
        prop_assert_eq!(host, n);
        prop_assert_eq!(chord, g.chord_count());
    }

    #[test]
    fn path_lengths_follow_digits(k in 2u64..=3, extra in 0u64..400, raw in 0u64..u64::MAX, jpick in 0u64..100) {
        let n = ConstructionPlan::threshold(k).unwrap() + extra;
        let p = ConstructionPlan::build(n, k).unwrap();
        let s = p.b().pow(k as u32 - 1);
        let value = raw % s;
        let digits = DigitVector::from_value(value, p.b(), k as usize - 1).unwrap();
        let path = p.path_p(&digits).unwrap();
        // One edge per digit level plus one per unit of value.
        prop_assert_eq!(path.len() as u64 - 1, k - 1 + value);
        prop_assert_eq!((path[0], *path.last().unwrap()), (1, p.m()));

        let j = jpick % (p.alpha() + 1);
        let q = p.path_q(j).unwrap();
        // Chord m -> m+2+js, host run up to n, then the host edge n -> 1.
        prop_assert_eq!(q.len() as u64 - 1, n - p.m() - j * s);
        prop_assert!(p.path_q(p.alpha() + 1).is_err());
    }

    #[test]
    fn decode_is_deterministic(k in 2u64..=3, extra in 0u64..300, pick in 0u64..u64::MAX) {
        let n = ConstructionPlan::threshold(k).unwrap() + extra;
        let a = construct(n, k).unwrap();
        let b = construct(n, k).unwrap();
        prop_assert_eq!(a.graph(), b.graph());
        let (lo, hi) = a.required_range();
        let l = lo + pick % (hi - lo + 1);
        let (wa, wb) = (a.witness(l).unwrap(), b.witness(l).unwrap());
        prop_assert_eq!(&wa.cycle, &wb.cycle);
        prop_assert_eq!(wa.provenance, wb.provenance);
    }

    #[test]
    fn cycle_existence_is_dihedral_invariant(g in small_graph(), l in 3u64..=11, k in 0usize..=3, m in 0usize..22) {
        let n = g.n();
        prop_assume!(l <= n);
        let maps = dihedral_maps(n);
        let h = relabel(&g, &maps[m % maps.len()]);
        prop_assert_eq!(h.chord_count(), g.chord_count());
        prop_assert_eq!(exists_cycle(&g, l, k).unwrap(), exists_cycle(&h, l, k).unwrap());
    }
}
