//! Verifies the cup/cap constructions over a range of thresholds.
//!
//! cargo run --release --example cupcap_check -- KMAX LMAX

use std::time::Instant;

use satlab::geometry::{construct_cupcap_semisat, verify_cupcap};
use satlab::Mode;

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (kmax, lmax) = (args.first().copied().unwrap_or(6), args.get(1).copied().unwrap_or(6));
    for k in 3..=kmax {
        for l in 3..=lmax {
            let t = Instant::now();
            let p = construct_cupcap_semisat(k, l).unwrap();
            let r = verify_cupcap(&p, k, l, Mode::Semisat).unwrap();
            println!("({k},{l}) n={} {} examined={} {:.2?}", p.len(), r.verdict, r.stats.examined, t.elapsed());
        }
    }
}
