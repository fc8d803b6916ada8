//! Simulated annealing over small integer point sets, minimising the number
//! of arrangement cells where a new point creates neither a k-cup nor an
//! l-cap. Used to find the committed cup/cap fixtures.
//!
//! cargo run --release --example cupcap_search -- K L N [SEED] [RANGE] [ITERS] [sym] [sat]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use satlab::geometry::{cupcap_free_samples, max_cap, max_cup};
use satlab::{PlanarPointSet, Point, PositionMode};

fn realise(coords: &[(i64, i64)], sym: bool) -> Option<PlanarPointSet> {
    let mut pts: Vec<Point> = coords.iter().map(|&(x, y)| Point::from_ints(x, y)).collect();
    if sym {
        pts.extend(coords.iter().map(|&(x, y)| Point::from_ints(-x, -y)));
    }
    PlanarPointSet::new(pts, PositionMode::Cupcap).ok()
}

fn cost(p: &PlanarPointSet, k: usize, l: usize) -> usize {
    cupcap_free_samples(p, k, l).map(|v| v.len()).unwrap_or(usize::MAX / 2)
}

// With `sat`, only sets free of k-cups and l-caps are admitted.
fn admissible(p: &PlanarPointSet, k: usize, l: usize, sat: bool) -> bool {
    !sat || (max_cup(p.points()).is_ok_and(|c| c < k) && max_cap(p.points()).is_ok_and(|c| c < l))
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let num = |i: usize, d: u64| args.get(i).and_then(|s| s.parse().ok()).unwrap_or(d);
    let (k, l, n) = (num(0, 5) as usize, num(1, 5) as usize, num(2, 10) as usize);
    let seed = num(3, 1);
    let range = num(4, 20) as i64;
    let iters = num(5, 20000);
    let sym = args.iter().any(|a| a == "sym");
    let sat = args.iter().any(|a| a == "sat");
    let free_pts = if sym { n / 2 } else { n };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut cur: Vec<(i64, i64)>;
    loop {
        cur = (0..free_pts)
            .map(|_| (rng.random_range(-range..=range), rng.random_range(-range..=range)))
            .collect();
        if realise(&cur, sym).is_some_and(|p| admissible(&p, k, l, sat)) {
            break;
        }
    }
    let mut cur_cost = cost(&realise(&cur, sym).unwrap(), k, l);
    let mut best = (cur_cost, cur.clone());
    for it in 0..iters {
        let temp = 2.0 * (1.0 - it as f64 / iters as f64) + 0.05;
        let mut next = cur.clone();
        let i = rng.random_range(0..free_pts);
        let step = if rng.random_bool(0.2) { range } else { 3 };
        next[i].0 = (next[i].0 + rng.random_range(-step..=step)).clamp(-range, range);
        next[i].1 = (next[i].1 + rng.random_range(-step..=step)).clamp(-range, range);
        let Some(p) = realise(&next, sym).filter(|p| admissible(p, k, l, sat)) else { continue };
        let c = cost(&p, k, l);
        if c <= cur_cost || rng.random::<f64>() < (-((c - cur_cost) as f64) / temp).exp() {
            cur = next;
            cur_cost = c;
            if c < best.0 {
                best = (c, cur.clone());
                eprintln!("iter {it}: {c} free cells");
                if c == 0 {
                    break;
                }
            }
        }
    }
    let p = realise(&best.1, sym).unwrap();
    let coords: Vec<String> = p.points().iter().map(|q| format!("({}, {})", q.x, q.y)).collect();
    println!("free={} points=[{}]", best.0, coords.join(", "));
}
