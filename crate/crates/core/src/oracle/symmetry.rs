//! The dihedral group of `C_n` acting on vertex labels.

use crate::graph::{Chord, ChordedCycle};

/// All `2n` rotations and reflections, as vertex maps (index 0 unused).
pub fn dihedral_maps(n: u64) -> Vec<Vec<u64>> {
    let mut maps = Vec::with_capacity(2 * n as usize);
    for shift in 0..n {
        for reflect in [false, true] {
            let mut map = vec![0u64; n as usize + 1];
            for v in 1..=n {
                let base = if reflect { (n - (v - 1)) % n } else { v - 1 };
                map[v as usize] = (base + shift) % n + 1;
            }
            maps.push(map);
        }
    }
    maps
}

pub fn relabel(g: &ChordedCycle, map: &[u64]) -> ChordedCycle {
    ChordedCycle::with_chords(g.n(), g.chords().map(|c| Chord::new(map[c.0 as usize], map[c.1 as usize])))
        .expect("dihedral maps send chords to chords")
}

/// Lexicographically smallest sorted chord list among all dihedral images.
pub fn canonical_chords(g: &ChordedCycle) -> Vec<Chord> {
    dihedral_maps(g.n())
        .iter()
        .map(|map| {
            let mut image: Vec<Chord> =
                g.chords().map(|c| Chord::new(map[c.0 as usize], map[c.1 as usize])).collect();
            image.sort_unstable();
            image
        })
        .min()
        .unwrap_or_default()
}
