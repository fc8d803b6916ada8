//! Tries every labelling of a core's 4-caps/4-cups as A1, A2 (caps) and
//! U1, U2 (cups), extends them along steep continuations and reports the
//! labellings whose extensions verify for several (k, l).
//!
//! cargo run --release --example cupcap_extend -- "x,y x,y ..." K0 L0

use num_traits::Signed;
use satlab::geometry::{cupcap_free_samples, orientation};
use satlab::model::{rat, Rational};
use satlab::{PlanarPointSet, Point, PositionMode};

fn chains(p: &[Point], len: usize, turn: i8) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by(|&a, &b| p[a].x.cmp(&p[b].x));
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(p: &[Point], order: &[usize], from: usize, len: usize, turn: i8, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in from..order.len() {
            let v = order[i];
            let n = cur.len();
            if n >= 2 && orientation(&p[cur[n - 2]], &p[cur[n - 1]], &p[v]) != turn {
                continue;
            }
            cur.push(v);
            rec(p, order, i + 1, len, turn, cur, out);
            cur.pop();
        }
    }
    rec(p, &order, 0, len, turn, &mut cur, &mut out);
    out
}

fn slope(a: &Point, b: &Point) -> Rational {
    (&b.y - &a.y) / (&b.x - &a.x)
}

// Extends the chain (listed by x) by one point; `left` picks the end, `up`
// whether the new point sits above the continuation (cup left / cap right
// go below, etc. are encoded by the sign of `steep`).
fn extend(pts: &mut Vec<Point>, chain: &mut Vec<usize>, left: bool, cup: bool, delta: &Rational) {
    let (minx, maxx) = pts.iter().fold((pts[0].x.clone(), pts[0].x.clone()), |(a, b), q| {
        (a.min(q.x.clone()), b.max(q.x.clone()))
    });
    let d = &maxx - &minx + rat(1);
    let q = if left {
        let (f1, f2) = (&pts[chain[0]], &pts[chain[1]]);
        let s = slope(f1, f2);
        let s2 = if cup { s - delta } else { s + delta };
        Point::new(&f1.x - &d, &f1.y - &d * s2)
    } else {
        let n = chain.len();
        let (g1, g2) = (&pts[chain[n - 2]], &pts[chain[n - 1]]);
        let s = slope(g1, g2);
        let s2 = if cup { s + delta } else { s - delta };
        Point::new(&g2.x + &d, &g2.y + &d * s2)
    };
    pts.push(q);
    let idx = pts.len() - 1;
    if left {
        chain.insert(0, idx);
    } else {
        chain.push(idx);
    }
}

fn max_abs_slope(p: &[Point]) -> Rational {
    let mut m = rat(0);
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            let s = slope(&p[i], &p[j]).abs();
            if s > m {
                m = s;
            }
        }
    }
    m
}

fn build(core: &[Point], lab: &[Vec<usize>; 4], k: usize, l: usize, k0: usize, l0: usize) -> Option<PlanarPointSet> {
    let mut pts = core.to_vec();
    let mut lab = lab.clone();
    for _ in 0..l.saturating_sub(l0) {
        let delta = max_abs_slope(&pts) * rat(2) + rat(1);
        extend(&mut pts, &mut lab[0], true, false, &delta);
        let delta = max_abs_slope(&pts) * rat(2) + rat(1);
        extend(&mut pts, &mut lab[1], false, false, &delta);
    }
    for _ in 0..k.saturating_sub(k0) {
        let delta = max_abs_slope(&pts) * rat(2) + rat(1);
        extend(&mut pts, &mut lab[2], true, true, &delta);
        let delta = max_abs_slope(&pts) * rat(2) + rat(1);
        extend(&mut pts, &mut lab[3], false, true, &delta);
    }
    PlanarPointSet::new(pts, PositionMode::Cupcap).ok()
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let core: Vec<Point> = args[0]
        .split_whitespace()
        .map(|t| {
            let (x, y) = t.split_once(',').unwrap();
            Point::from_ints(x.parse().unwrap(), y.parse().unwrap())
        })
        .collect();
    let k0: usize = args[1].parse().unwrap();
    let l0: usize = args[2].parse().unwrap();
    if args.get(3).is_some_and(|a| a == "probe") {
        probe(&core, k0, l0);
        return;
    }
    let caps = chains(&core, l0 - 1, -1);
    let cups = chains(&core, k0 - 1, 1);
    eprintln!("{} caps, {} cups", caps.len(), cups.len());
    let works = |lab: &[Vec<usize>; 4], k: usize, l: usize| {
        build(&core, lab, k, l, k0, l0).is_some_and(|p| cupcap_free_samples(&p, k, l).is_ok_and(|f| f.is_empty()))
    };
    if args.get(3).is_some_and(|a| a == "cups") {
        for u1 in &cups {
            for u2 in &cups {
                let lab = [caps[0].clone(), caps[0].clone(), u1.clone(), u2.clone()];
                if u1 != u2 && works(&lab, k0 + 1, l0) && works(&lab, k0 + 2, l0) {
                    println!("U1={u1:?} U2={u2:?}");
                }
            }
        }
        return;
    }
    let mut cap_pairs = Vec::new();
    for a1 in &caps {
        for a2 in &caps {
            let lab = [a1.clone(), a2.clone(), cups[0].clone(), cups[0].clone()];
            if (l0 == 4 || a1 != a2) && works(&lab, k0, l0 + 1) {
                cap_pairs.push((a1.clone(), a2.clone()));
            }
        }
    }
    eprintln!("{} cap pairs", cap_pairs.len());
    let mut cup_pairs = Vec::new();
    for u1 in &cups {
        for u2 in &cups {
            let lab = [caps[0].clone(), caps[0].clone(), u1.clone(), u2.clone()];
            if u1 != u2 && works(&lab, k0 + 1, l0) {
                cup_pairs.push((u1.clone(), u2.clone()));
            }
        }
    }
    eprintln!("{} cup pairs", cup_pairs.len());
    for (a1, a2) in &cap_pairs {
        for (u1, u2) in &cup_pairs {
            let lab = [a1.clone(), a2.clone(), u1.clone(), u2.clone()];
            if works(&lab, k0 + 1, l0 + 1) && works(&lab, k0 + 2, l0 + 1) {
                println!("A1={a1:?} A2={a2:?} U1={u1:?} U2={u2:?}");
            }
        }
    }
}

// Independent check of one labelling: random probes at several scales,
// each tested with the direct cup/cap-through DPs.
fn probe(core: &[Point], k0: usize, l0: usize) {
    use rand::{Rng, SeedableRng};
    use satlab::geometry::{max_cap_through, max_cup_through};
    let caps = chains(core, l0 - 1, -1);
    let cups = chains(core, k0 - 1, 1);
    let lab = [caps[0].clone(), caps[1].clone(), cups[0].clone(), cups[1].clone()];
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for (k, l) in [(k0, l0), (k0 + 1, l0 + 1), (k0, l0 + 1)] {
        let p = build(core, &lab, k, l, k0, l0).unwrap();
        let free = cupcap_free_samples(&p, k, l).unwrap().len();
        let base_free = cupcap_free_samples(&PlanarPointSet::new(core.to_vec(), PositionMode::Cupcap).unwrap(), k, l).unwrap().len();
        let mut bad = 0;
        let mut tried = 0;
        for _ in 0..20000 {
            let scale: i64 = [10, 1000, 100000, 10000000, 1_000_000_000][rng.random_range(0..5)];
            let q = Point::new(
                satlab::model::ratio(rng.random_range(-scale * 100..=scale * 100), 100),
                satlab::model::ratio(rng.random_range(-scale * 100..=scale * 100), 100),
            );
            let mut all = p.points().to_vec();
            all.push(q.clone());
            if PlanarPointSet::new(all, PositionMode::Cupcap).is_err() {
                continue;
            }
            tried += 1;
            let cup = max_cup_through(p.points(), &q).unwrap();
            let cap = max_cap_through(p.points(), &q).unwrap();
            if cup < k && cap < l {
                bad += 1;
            }
        }
        println!("({k},{l}) n={} free_cells={free} core_free={base_free} probes={tried} bad_probes={bad}", p.len());
    }
}
