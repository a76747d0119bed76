//! Exhaustive minimum chord counts against a pinned fixture and a naive recount.

use kchord_core::bounds::log_lower;
use kchord_core::graph::is_host_pair;
use kchord_core::oracle::{brute_force_c, exists_cycle, required_lengths, SearchConfig, SearchStatus};
use kchord_core::{Chord, ChordedCycle};

fn fixture() -> Vec<(u64, u64, usize)> {
    include_str!("fixtures/exact_small.csv")
        .lines()
        .skip(1)
        .map(|line| {
            let f: Vec<u64> = line.split(',').map(|x| x.parse().unwrap()).collect();
            (f[0], f[1], f[2] as usize)
        })
        .collect()
}

fn all_chords(n: u64) -> Vec<Chord> {
    (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
        .filter(|&(a, b)| !is_host_pair(n, a, b))
        .map(|(a, b)| Chord(a, b))
        .collect()
}

fn realizes(g: &ChordedCycle, k: u64) -> bool {
    let (lo, hi) = required_lengths(g.n(), k);
    (lo..=hi).all(|l| exists_cycle(g, l, k as usize).unwrap())
}

/// Every subset of size `c`, no pruning and no symmetry.
fn some_subset_works(n: u64, k: u64, c: usize) -> bool {
    let pool = all_chords(n);
    let mut idx: Vec<usize> = (0..c).collect();
    loop {
        let g = ChordedCycle::with_chords(n, idx.iter().map(|&i| pool[i])).unwrap();
        if realizes(&g, k) {
            return true;
        }
        let Some(pos) = (0..c).rev().find(|&i| idx[i] < pool.len() - c + i) else {
            return false;
        };
        idx[pos] += 1;
        for i in pos + 1..c {
            idx[i] = idx[i - 1] + 1;
        }
    }
}

fn naive_c(n: u64, k: u64) -> usize {
    (k as usize..).find(|&c| some_subset_works(n, k, c)).unwrap()
}

#[test]
fn naive_recount_matches_fixture() {
    for (n, k, c) in fixture().into_iter().filter(|&(n, k, _)| n <= 8 && k == 2 || n <= 7) {
        assert_eq!(naive_c(n, k), c, "n={n} k={k}");
    }
}

#[test]
fn search_matches_fixture() {
    for (n, k, c) in fixture() {
        let out = brute_force_c(n, k, &SearchConfig::default(), None).unwrap();
        let SearchStatus::Exact { value, chords } = &out.status else {
            panic!("n={n} k={k} inconclusive");
        };
        assert_eq!(*value, c, "n={n} k={k}");
        assert_eq!(chords.len(), c);
        let g = ChordedCycle::with_chords(n, chords.iter().copied()).unwrap();
        assert!(realizes(&g, k), "optimal set for n={n} k={k} does not realize");
        assert!(c as u64 >= log_lower(n), "n={n}: {c} below the log bound");
    }
}

#[test]
fn symmetry_reduction_does_not_change_values() {
    for n in 6..=9 {
        let on = brute_force_c(n, 2, &SearchConfig::default(), None).unwrap();
        let off = brute_force_c(n, 2, &SearchConfig { symmetry: false, ..Default::default() }, None).unwrap();
        assert_eq!(on.exact(), off.exact(), "n={n}");
        assert!(on.exact().is_some());
    }
}

#[test]
fn parallel_search_agrees() {
    let serial = brute_force_c(10, 2, &SearchConfig::default(), None).unwrap();
    let parallel = brute_force_c(10, 2, &SearchConfig { workers: 4, ..Default::default() }, None).unwrap();
    assert_eq!(serial.exact(), parallel.exact());
}
