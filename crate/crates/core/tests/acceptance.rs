//! One line per acceptance criterion. Exits non-zero if any criterion fails.

mod common;

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::Rng;
use satlab::geometry::{
    cell_samples, construct_cap, construct_convex_semisat, construct_cupcap_semisat, max_cap, max_cup, orientation,
    osat_convex_lower_bound, verify_convex, verify_cupcap,
};
use satlab::model::{rat, ratio, FinitePoset, NumberSequence, Point, PositionMode};
use satlab::sequences::{self, PIMatrix};
use satlab::{graphs, posets, search, Mode, Verdict};

use common::*;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn seq(values: &[i64]) -> NumberSequence {
    NumberSequence::from_integers(values).unwrap()
}

fn criterion_1() -> Outcome {
    for k in 2..=4 {
        for l in 2..=4 {
            let g = graphs::construct_saturated_product(&[k, l]).map_err(|e| e.to_string())?;
            ensure(g.n() == (k - 1) * (l - 1), || format!("[{k},{l}] has {} vertices", g.n()))?;
            let v = graphs::verify(&g, &[k, l], Mode::Sat).unwrap().verdict;
            ensure(v == Verdict::Saturated, || format!("[{k},{l}] verdict {v:?}"))?;
        }
    }
    let g = graphs::construct_saturated_product(&[3, 3, 3]).unwrap();
    ensure(g.n() == 8, || format!("[3,3,3] has {} vertices", g.n()))?;
    let v = graphs::verify(&g, &[3, 3, 3], Mode::Sat).unwrap().verdict;
    ensure(v == Verdict::Saturated, || format!("[3,3,3] verdict {v:?}"))?;
    Ok("products saturated for {2,3,4}^2 and [3,3,3] (8 vertices)".into())
}

fn criterion_2() -> Outcome {
    for mode in [Mode::Sat, Mode::Semisat] {
        let r = search::min_sat_graph(&[3, 3], mode, 5).map_err(|e| e.to_string())?;
        ensure(r.minimum_size == Some(4), || format!("{mode:?} minimum {:?}", r.minimum_size))?;
    }
    Ok("minimum [3,3] graph has 4 vertices in both modes".into())
}

fn criterion_3() -> Outcome {
    let cliques = graphs::clique_packing(36, 3).map_err(|e| e.to_string())?;
    ensure(cliques.len() >= 9, || format!("only {} triangles", cliques.len()))?;
    for (i, a) in cliques.iter().enumerate() {
        for b in &cliques[i + 1..] {
            let shared = a.iter().filter(|v| b.contains(v)).count();
            ensure(shared <= 1, || format!("{a:?} and {b:?} share an edge"))?;
        }
    }
    Ok(format!("{} pairwise edge-disjoint triangles on 36 vertices", cliques.len()))
}

fn criterion_4() -> Outcome {
    for k in 3..=6 {
        for l in 3..=6 {
            let built = [
                (posets::construct_semisat_tower(k, l).unwrap(), 2 * k + l - 5),
                (posets::construct_semisat_double(k, l).unwrap(), k + 3 * l - 7),
            ];
            for (p, size) in built {
                ensure(p.len() == size, || format!("({k},{l}) size {} != {size}", p.len()))?;
                let v = posets::verify(&p, k, l, Mode::Semisat).verdict;
                ensure(v == Verdict::SemisaturatedOnly, || format!("({k},{l}) size {size}: {v:?}"))?;
            }
        }
    }
    let r = search::min_semisat_poset(3, 3, 6).map_err(|e| e.to_string())?;
    ensure(r.minimum_size == Some(4), || format!("search minimum {:?}", r.minimum_size))?;
    Ok("both constructions semisaturated for 3 <= k,l <= 6; search minimum 4".into())
}

fn criterion_5() -> Outcome {
    for k in 2..=4 {
        for l in 2..=4 {
            let p = posets::construct_saturated_chains(k, l).unwrap();
            ensure(p.len() == (k - 1) * (l - 1), || format!("({k},{l}) size {}", p.len()))?;
            let v = posets::verify(&p, k, l, Mode::Sat).verdict;
            ensure(v == Verdict::Saturated, || format!("({k},{l}) verdict {v:?}"))?;
        }
    }
    let mut p = FinitePoset::antichain(0);
    while let Some(ext) = posets::extend_free(&p, 3, 4).unwrap() {
        p = posets::apply_extension(&p, &ext).unwrap();
        ensure(p.len() <= 6, || "extension ran past 6 elements".into())?;
    }
    ensure(p.len() == 6, || format!("stopped at {} elements", p.len()))?;
    let v = posets::verify(&p, 3, 4, Mode::Sat).verdict;
    ensure(v == Verdict::Saturated, || format!("grown poset verdict {v:?}"))?;
    Ok("chains saturated for {2,3,4}^2; growing (3,4) from empty stops at 6, saturated".into())
}

fn criterion_6() -> Outcome {
    let pairs: Vec<(usize, usize)> = (1..=9).flat_map(|k| (1..=9 / k).map(move |l| (k, l))).collect();
    let mut extended = 0u64;
    let mut saturated = 0u64;
    for n in 0..=9 {
        for p in search::permutations(n) {
            let values: Vec<i64> = p.iter().map(|&v| v as i64 + 1).collect();
            let (inc, dec) = (lis(&values), lds(&values));
            for &(k, l) in &pairs {
                if inc > k || dec > l {
                    continue;
                }
                let a = seq(&values);
                let sat = sequences::verify(&a, k + 1, l + 1, Mode::Sat).verdict == Verdict::Saturated;
                if sat {
                    saturated += 1;
                    ensure(n == k * l, || format!("{values:?} is ({},{})-saturated at length {n}", k + 1, l + 1))?;
                }
                if n < k * l {
                    let out = sequences::extend_saturate(&a, k, l).map_err(|e| format!("{values:?}: {e}"))?;
                    let v = out.values();
                    ensure(v.len() == k * l && lis(v) <= k && lds(v) <= l, || {
                        format!("bad extension of {values:?} for ({k},{l})")
                    })?;
                    extended += 1;
                }
            }
        }
    }
    Ok(format!("{saturated} saturated permutations all of length kl; {extended} shorter ones extended"))
}

fn criterion_7() -> Outcome {
    let m = sequences::matrices(&seq(&[33, 11, 22, 55, 44]), 3, 2).map_err(|e| e.to_string())?;
    ensure(m.r == PIMatrix::from_int_rows(&[&[1, 0, 4], &[2, 3, 5]]), || format!("R = {:?}", m.r.to_rows()))?;
    ensure(m.v == PIMatrix::from_int_rows(&[&[33, 0, 55], &[11, 22, 44]]), || format!("V = {:?}", m.v.to_rows()))?;
    ensure(m.w == PIMatrix::from_int_rows(&[&[11, 22, 44], &[33, 0, 55]]), || format!("W = {:?}", m.w.to_rows()))?;
    let ext = sequences::extend_saturate_detailed(&seq(&[33, 11, 22, 55, 44]), 3, 2).map_err(|e| e.to_string())?;
    ensure(ext.completed_r == PIMatrix::from_int_rows(&[&[1, 3, 5], &[2, 4, 6]]), || {
        format!("R' = {:?}", ext.completed_r.to_rows())
    })?;
    ensure(ext.inserted == vec![2], || format!("inserted at {:?}", ext.inserted))?;
    let v = ext.sequence.values();
    ensure(v[0] == rat(33) && v[1] == rat(11) && v[3] == rat(22) && v[4] == rat(55) && v[5] == rat(44), || {
        "original values moved".into()
    })?;
    Ok(format!("R, V, W and R' reproduced; new value {} at position 3", satlab::model::format_rational(&v[2])))
}

fn criterion_8() -> Outcome {
    let mut counts = Vec::new();
    for (k, l) in [(2, 2), (2, 3), (3, 3)] {
        let all = search::all_saturated_sequences(k + 1, l + 1).map_err(|e| e.to_string())?;
        let syt = sequences::count_rect_syt(k, l);
        ensure(BigUint::from(all.len()) == &syt * &syt, || format!("({k},{l}): {} sequences, {syt}^2 expected", all.len()))?;
        let mut images = HashSet::new();
        for a in &all {
            let ints: Vec<i64> = a.iter().map(|&v| v as i64).collect();
            let (r, w) = sequences::rsk_phi(&seq(&ints), k, l).map_err(|e| e.to_string())?;
            ensure(images.insert((r.to_rows(), w.to_rows())), || format!("phi not injective at {a:?}"))?;
        }
        counts.push(all.len().to_string());
    }
    Ok(format!("counts {} equal squared tableau counts; phi injective", counts.join(", ")))
}

fn criterion_9() -> Outcome {
    for k in 2..=6 {
        for l in 2..=6 {
            let p = sequences::construct_semisat(k, l);
            let size = (2 * k + l - 5).min(2 * l + k - 5);
            ensure(p.len() == size, || format!("({k},{l}) size {} != {size}", p.len()))?;
            let v = sequences::verify_points(&p, k, l, Mode::Semisat).unwrap().verdict;
            ensure(v == Verdict::SemisaturatedOnly, || format!("({k},{l}) verdict {v:?}"))?;
        }
    }
    let r = search::min_semisat_sequence(3, 3, search::SEQUENCE_MAX_N).map_err(|e| e.to_string())?;
    ensure(r.minimum_size == Some(4), || format!("search minimum {:?}", r.minimum_size))?;
    Ok("constructions semisaturated for 2 <= k,l <= 6; search minimum 4".into())
}

fn criterion_10() -> Outcome {
    let mut cases = Vec::new();
    for l in 3..=7 {
        cases.push((3, l, construct_cap(l - 1), l - 1));
    }
    for (k, l) in [(5, 5), (5, 4), (6, 4), (5, 6), (6, 5), (6, 6)] {
        let size = if l == 4 { 2 * k - 2 } else { 2 * k + 2 * l - 10 };
        cases.push((k, l, construct_cupcap_semisat(k, l).unwrap(), size));
    }
    for (k, l, p, size) in cases {
        ensure(p.len() == size, || format!("({k},{l}) size {} != {size}", p.len()))?;
        let v = verify_cupcap(&p, k, l, Mode::Semisat).map_err(|e| e.to_string())?.verdict;
        ensure(v == Verdict::SemisaturatedOnly, || format!("({k},{l}) verdict {v:?}"))?;
    }
    Ok("caps for (3,l) l <= 7, fixtures for (5,5), (5,4), (6,4), extended family on {5,6}^2".into())
}

fn criterion_11() -> Outcome {
    for n in 4..=7 {
        let p = construct_convex_semisat(n).unwrap();
        ensure(p.len() == 2 * n - 4, || format!("n={n} size {}", p.len()))?;
        let v = verify_convex(&p, n).map_err(|e| e.to_string())?.verdict;
        ensure(v == Verdict::SemisaturatedOnly, || format!("n={n} verdict {v:?}"))?;
    }
    let p = construct_convex_semisat(5).unwrap();
    for i in 0..p.len() {
        let v = verify_convex(&p.without(i), 5).unwrap().verdict;
        ensure(v == Verdict::NotSemisaturated, || format!("removing vertex {i} leaves {v:?}"))?;
    }
    Ok("zonogons semisaturated for n = 4..7; every 5-vertex deletion has a free point".into())
}

fn criterion_12() -> Outcome {
    for n in 2..22 {
        for d in 1..=5 {
            let got = osat_convex_lower_bound(n, d).unwrap();
            ensure(got == n - 1 + (n - 2) / d, || format!("n={n} d={d}: {got}"))?;
        }
    }
    for n in 4..=2000 {
        ensure(osat_convex_lower_bound(n, 2).unwrap() <= 2 * n - 4, || format!("n={n} exceeds 2n-4"))?;
    }
    Ok("formula on 20x5 grid; below 2n-4 at d=2 for 4 <= n <= 2000".into())
}

fn random_point(r: &mut impl Rng) -> Point {
    Point::new(random_rational(r, 60), random_rational(r, 60))
}

fn criterion_13() -> Outcome {
    let mut r = rng(2024);
    for _ in 0..2000 {
        let (a, b, c, t) = (random_point(&mut r), random_point(&mut r), random_point(&mut r), random_point(&mut r));
        let o = orientation(&a, &b, &c);
        let shift = |p: &Point| Point::new(&p.x + &t.x, &p.y + &t.y);
        ensure(
            orientation(&b, &a, &c) == -o
                && orientation(&a, &c, &b) == -o
                && orientation(&shift(&a), &shift(&b), &shift(&c)) == o,
            || format!("orientation of {a:?} {b:?} {c:?}"),
        )?;
    }

    for i in 0..100 {
        let p = random_points(&mut r, 4 + i % 6, 30, 1, PositionMode::Cupcap);
        let pts = p.points();
        ensure(max_cup(pts).unwrap() == brute_chain(pts, 1) && max_cap(pts).unwrap() == brute_chain(pts, -1), || {
            format!("chain DP disagrees on {pts:?}")
        })?;
    }

    for n in 0..=5 {
        for rel in all_labelled_posets(n) {
            let p = FinitePoset::from_relations(n, rel).unwrap();
            ensure(posets::max_antichain(&p).len() == brute_antichain(&p), || format!("width of {p:?}"))?;
            ensure(posets::chain_decomposition(&p).len() == brute_antichain(&p), || format!("cover of {p:?}"))?;
        }
    }
    for i in 0..200 {
        let p = random_poset(&mut r, 6 + i % 2, 0.35);
        ensure(posets::chain_decomposition(&p).len() == brute_antichain(&p), || format!("cover of {p:?}"))?;
    }

    for n in 0..=8 {
        for p in search::permutations(n) {
            let values: Vec<i64> = p.iter().map(|&v| v as i64 + 1).collect();
            let e = sequences::gamma(&seq(&values)).entries;
            ensure(e == run_lengths(&values), || format!("gamma of {values:?}"))?;
            ensure((0..e.len()).all(|t| (0..t).all(|s| e[t].0 > e[s].0 || e[t].1 > e[s].1)), || {
                format!("observation fails on {values:?}")
            })?;
            if n <= 6 {
                let m = sequences::matrices(&seq(&values), lis(&values), lds(&values)).unwrap();
                for mat in [&m.r, &m.w] {
                    let done = sequences::complete_partially_increasing(mat).unwrap();
                    ensure(partially_increasing(&mat.to_rows()) && partially_increasing(&done.to_rows()), || {
                        format!("matrix invariant on {values:?}")
                    })?;
                }
            }
        }
    }

    let mut probes = 0;
    let mut sets = 0;
    while probes < 10_000 {
        let mode = if sets % 2 == 0 { PositionMode::Cupcap } else { PositionMode::Convex };
        let p = random_points(&mut r, 3 + sets % 8, 12, 1, mode);
        sets += 1;
        let ranked = mode == PositionMode::Cupcap;
        let known: HashSet<Vec<i64>> = cell_samples(&p, mode)
            .unwrap()
            .samples
            .iter()
            .map(|s| sign_vector(p.points(), s, ranked))
            .collect();
        let mut taken = 0;
        while taken < 500 {
            let q = Point::new(ratio(r.random_range(-400..=400), 17), ratio(r.random_range(-400..=400), 13));
            let v = sign_vector(p.points(), &q, ranked);
            if v.contains(&0) || (ranked && p.points().iter().any(|a| a.x == q.x)) {
                continue;
            }
            ensure(known.contains(&v), || format!("probe {q:?} missed on {:?}", p.points()))?;
            taken += 1;
        }
        probes += taken;
    }
    Ok(format!("orientation, chain DP, Dilworth, observation, matrix invariants; {probes} probes on {sets} sets, none missed"))
}

fn main() {
    let criteria: [(fn() -> Outcome, Duration); 13] = [
        (criterion_1, Duration::from_secs(60)),
        (criterion_2, Duration::from_secs(300)),
        (criterion_3, Duration::from_secs(10)),
        (criterion_4, Duration::from_secs(720)),
        (criterion_5, Duration::from_secs(120)),
        (criterion_6, Duration::from_secs(600)),
        (criterion_7, Duration::from_secs(1)),
        (criterion_8, Duration::from_secs(300)),
        (criterion_9, Duration::from_secs(300)),
        (criterion_10, Duration::from_secs(900)),
        (criterion_11, Duration::from_secs(900)),
        (criterion_12, Duration::from_secs(1)),
        (criterion_13, Duration::from_secs(600)),
    ];
    let mut failed = 0;
    for (i, (run, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(_) if took > budget => Err(format!("took {took:.1?}, budget {budget:?}")),
            o => o,
        };
        match outcome {
            Ok(msg) => println!("PASS criterion {}: {msg} ({took:.2?})", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {}: {msg} ({took:.2?})", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
