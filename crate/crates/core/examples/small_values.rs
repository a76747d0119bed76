//! Prints exact minimum chord counts for small cycles.

use kchord_core::bounds::log_lower;
use kchord_core::oracle::{brute_force_c, SearchConfig};

fn main() {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (k, lo, hi) = match args.as_slice() {
        [k, lo, hi] => (*k, *lo, *hi),
        _ => (2, 6, 9),
    };
    let cfg = SearchConfig { workers: 4, ..Default::default() };
    for n in lo..=hi {
        let out = brute_force_c(n, k, &cfg, None).expect("search");
        println!(
            "n={n} k={k} exact={:?} log_lower={} examined={:?} {:?}",
            out.exact(),
            log_lower(n),
            out.examined,
            out.elapsed
        );
    }
}
