#![allow(dead_code)]

// Brute-force oracles. Nothing here calls into the library's own
// algorithms beyond constructors and the orientation predicate.

use std::collections::{BTreeSet, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use satlab::geometry::orientation;
use satlab::model::{ratio, FinitePoset, PlanarPointSet, Point, PositionMode, Rational};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn sorted_by_x(points: &[Point], idx: &[usize]) -> Vec<usize> {
    let mut v = idx.to_vec();
    v.sort_by(|&a, &b| points[a].x.cmp(&points[b].x));
    v
}

fn is_chain(points: &[Point], idx: &[usize], turn: i8) -> bool {
    let v = sorted_by_x(points, idx);
    v.windows(3).all(|w| orientation(&points[w[0]], &points[w[1]], &points[w[2]]) == turn)
}

/// Largest subset forming a cup (`turn = 1`) or cap (`turn = -1`), by
/// enumerating every subset.
pub fn brute_chain(points: &[Point], turn: i8) -> usize {
    let n = points.len();
    let mut best = 0;
    for mask in 0u32..1 << n {
        let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if idx.len() > best && is_chain(points, &idx, turn) {
            best = idx.len();
        }
    }
    best
}

/// Same, restricted to subsets containing the extra point `p`.
pub fn brute_chain_through(points: &[Point], p: &Point, turn: i8) -> usize {
    let mut all = points.to_vec();
    all.push(p.clone());
    let n = points.len();
    let mut best = 0;
    for mask in 0u32..1 << n {
        let mut idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        idx.push(n);
        if idx.len() > best && is_chain(&all, &idx, turn) {
            best = idx.len();
        }
    }
    best
}

pub fn in_triangle(a: &Point, b: &Point, c: &Point, p: &Point) -> bool {
    let s = orientation(a, b, c);
    orientation(a, b, p) == s && orientation(b, c, p) == s && orientation(c, a, p) == s
}

/// No point of the subset inside a triangle of three others.
pub fn in_convex_position(points: &[Point], idx: &[usize]) -> bool {
    for &p in idx {
        for (ai, &a) in idx.iter().enumerate() {
            for (bi, &b) in idx.iter().enumerate().skip(ai + 1) {
                for &c in idx.iter().skip(bi + 1) {
                    if p != a && p != b && p != c && in_triangle(&points[a], &points[b], &points[c], &points[p]) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn brute_convex_through(points: &[Point], p: &Point) -> usize {
    let mut all = points.to_vec();
    all.push(p.clone());
    let n = points.len();
    let mut best = 0;
    for mask in 0u32..1 << n {
        let mut idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        idx.push(n);
        if idx.len() > best && in_convex_position(&all, &idx) {
            best = idx.len();
        }
    }
    best
}

/// Orientation of `q` against every pair `i < j`, plus the number of points
/// left of `q` when `with_rank` is set.
pub fn sign_vector(points: &[Point], q: &Point, with_rank: bool) -> Vec<i64> {
    let mut v = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            v.push(orientation(&points[i], &points[j], q) as i64);
        }
    }
    if with_rank {
        v.push(points.iter().filter(|p| p.x < q.x).count() as i64);
    }
    v
}

/// Random point set in general position for `mode`, coordinates in
/// `-range..=range` scaled by `1/den`.
pub fn random_points(r: &mut impl Rng, n: usize, range: i64, den: i64, mode: PositionMode) -> PlanarPointSet {
    loop {
        let pts: Vec<Point> = (0..n)
            .map(|_| Point::new(ratio(r.random_range(-range..=range), den), ratio(r.random_range(-range..=range), den)))
            .collect();
        if let Ok(p) = PlanarPointSet::new(pts, mode) {
            return p;
        }
    }
}

pub fn random_rational(r: &mut impl Rng, range: i64) -> Rational {
    ratio(r.random_range(-range..=range), r.random_range(1..=7))
}

/// Longest increasing and decreasing subsequence ending at each position.
pub fn run_lengths<T: Ord>(a: &[T]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::with_capacity(a.len());
    for t in 0..a.len() {
        let (mut dec, mut inc) = (1, 1);
        for s in 0..t {
            if a[s] > a[t] {
                dec = dec.max(out[s].0 + 1);
            }
            if a[s] < a[t] {
                inc = inc.max(out[s].1 + 1);
            }
        }
        out.push((dec, inc));
    }
    out
}

pub fn lis<T: Ord>(a: &[T]) -> usize {
    run_lengths(a).iter().map(|e| e.1).max().unwrap_or(0)
}

pub fn lds<T: Ord>(a: &[T]) -> usize {
    run_lengths(a).iter().map(|e| e.0).max().unwrap_or(0)
}

/// Nonnegative, distinct positive entries, positive entries increasing
/// strictly to the right and downwards along rows and columns.
pub fn partially_increasing(rows: &[Vec<Rational>]) -> bool {
    let zero = Rational::from_integer(0.into());
    let mut seen = HashSet::new();
    for row in rows {
        for v in row {
            if *v < zero || (*v > zero && !seen.insert(v.clone())) {
                return false;
            }
        }
    }
    for (i, row) in rows.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if *v == zero {
                continue;
            }
            let right = row[j + 1..].iter().filter(|w| **w > zero);
            let below = rows[i + 1..].iter().map(|r| &r[j]).filter(|w| **w > zero);
            if right.chain(below).any(|w| w <= v) {
                return false;
            }
        }
    }
    true
}

/// Every labelled poset on `n` elements, as sorted relation lists.
pub fn all_labelled_posets(n: usize) -> Vec<BTreeSet<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut natural = HashSet::new();
    for mask in 0u32..1 << pairs.len() {
        let rel = close(n, pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|e| *e.1));
        natural.insert(rel);
    }
    let mut all = HashSet::new();
    for rel in natural {
        for perm in permutations(n) {
            all.insert(rel.iter().map(|&(a, b)| (perm[a], perm[b])).collect::<BTreeSet<_>>());
        }
    }
    let mut out: Vec<_> = all.into_iter().collect();
    out.sort();
    out
}

/// Transitive closure by repeated composition.
pub fn close(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> BTreeSet<(usize, usize)> {
    let mut m = vec![vec![false; n]; n];
    for (a, b) in pairs {
        m[a][b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if m[i][k] && m[k][j] {
                    m[i][j] = true;
                }
            }
        }
    }
    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| m[i][j]).collect()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for at in 0..=p.len() {
            let mut q = p.clone();
            q.insert(at, n - 1);
            out.push(q);
        }
    }
    out
}

/// Random poset: each pair `i < j` of a random linear order related with
/// probability `density`, then closed.
pub fn random_poset(r: &mut impl Rng, n: usize, density: f64) -> FinitePoset {
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, r.random_range(0..=i));
    }
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if r.random_bool(density) {
                pairs.push((order[i], order[j]));
            }
        }
    }
    FinitePoset::from_relations(n, pairs).expect("acyclic by construction")
}

/// Size of a largest antichain, by subset enumeration.
pub fn brute_antichain(p: &FinitePoset) -> usize {
    let n = p.len();
    (0u32..1 << n)
        .filter(|&mask| {
            (0..n).all(|a| (0..n).all(|b| mask >> a & 1 == 0 || mask >> b & 1 == 0 || !p.lt(a, b)))
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Size of a longest chain, by subset enumeration.
pub fn brute_chain_len(p: &FinitePoset) -> usize {
    let n = p.len();
    (0u32..1 << n)
        .filter(|&mask| {
            (0..n).all(|a| (a + 1..n).all(|b| mask >> a & 1 == 0 || mask >> b & 1 == 0 || p.comparable(a, b)))
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}
