//! Edge-colored complete graphs: the iterated blow-up construction, clique
//! search, the partition-based semisaturation verifier, the edge-disjoint
//! clique packing and the random candidate sampler.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::model::ColoredCompleteGraph;
use crate::par;
use crate::report::{Mode, VerificationReport, Witness};

/// Default vertex cap for [`sample_random_semisat_candidate`].
pub const DEFAULT_VERTEX_CAP: u64 = 1_000_000;

/// Vertex partition `(S_1, ..., S_c)`; part `i` receives the new vertex's
/// color-`i+1` edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorPartition {
    pub parts: Vec<Vec<usize>>,
}

impl ColorPartition {
    /// Colors of the new vertex's edges, indexed by old vertex.
    pub fn new_vertex_colors(&self, n: usize) -> Vec<usize> {
        let mut colors = vec![0; n];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                colors[v] = i + 1;
            }
        }
        colors
    }
}

fn check_thresholds(k: &[usize]) -> Result<()> {
    if k.is_empty() {
        return Err(Error::InvalidThreshold("need at least one color".into()));
    }
    if let Some(&bad) = k.iter().find(|&&ki| ki < 2) {
        return Err(Error::InvalidThreshold(format!("clique thresholds must be >= 2, got {bad}")));
    }
    Ok(())
}

/// Iterated blow-up on `prod(k_i - 1)` vertices, free of a color-`i` `K_{k_i}`
/// for every `i` and saturated.
///
/// Blow-ups are applied from the last color down to color 1, so color 1 forms
/// the innermost cliques and each clique occupies a contiguous label range.
pub fn construct_saturated_product(k: &[usize]) -> Result<ColoredCompleteGraph> {
    check_thresholds(k)?;
    if k.len() > u8::MAX as usize {
        return Err(Error::InvalidThreshold("at most 255 colors".into()));
    }
    let total = k
        .iter()
        .try_fold(1usize, |acc, &ki| acc.checked_mul(ki - 1))
        .ok_or_else(|| Error::ParameterOverflow("blow-up size overflows".into()))?;
    // color[u][v] of the current stage, starting from a single vertex
    let mut n = 1usize;
    let mut colors: Vec<usize> = vec![0];
    for (idx, &ki) in k.iter().enumerate().rev() {
        let color = idx + 1;
        let s = ki - 1;
        let m = n * s;
        let mut next = vec![0usize; m * m];
        for u in 0..m {
            for v in 0..m {
                if u == v {
                    continue;
                }
                let (bu, bv) = (u / s, v / s);
                next[u * m + v] = if bu == bv { color } else { colors[bu * n + bv] };
            }
        }
        n = m;
        colors = next;
    }
    debug_assert_eq!(n, total);
    ColoredCompleteGraph::from_fn(n, k.len(), |u, v| colors[u * n + v])
}

fn find_clique_in(adj: &[FixedBitSet], cand: &FixedBitSet, size: usize, current: &mut Vec<usize>) -> bool {
    if current.len() == size {
        return true;
    }
    let need = size - current.len();
    if cand.count_ones(..) < need {
        return false;
    }
    let mut rest = cand.clone();
    for v in cand.ones() {
        if rest.count_ones(..) < need {
            return false;
        }
        rest.set(v, false);
        let mut next = rest.clone();
        next.intersect_with(&adj[v]);
        current.push(v);
        if find_clique_in(adj, &next, size, current) {
            return true;
        }
        current.pop();
    }
    false
}

/// Clique of `size` vertices inside `within`, in the graph given by `adj`.
fn clique_within(adj: &[FixedBitSet], within: &FixedBitSet, size: usize) -> Option<Vec<usize>> {
    if size == 0 {
        return Some(Vec::new());
    }
    // degree pruning: a member needs size-1 neighbours inside the candidate set
    let mut cand = within.clone();
    loop {
        let drop: Vec<usize> = cand
            .ones()
            .filter(|&v| {
                let mut nb = adj[v].clone();
                nb.intersect_with(&cand);
                nb.count_ones(..) + 1 < size
            })
            .collect();
        if drop.is_empty() {
            break;
        }
        for v in drop {
            cand.set(v, false);
        }
    }
    let mut current = Vec::with_capacity(size);
    find_clique_in(adj, &cand, size, &mut current).then_some(current)
}

/// Some `size` vertices spanning only edges of `color`, if any exist.
pub fn mono_clique_exists(g: &ColoredCompleteGraph, color: usize, size: usize) -> Option<Vec<usize>> {
    if size > g.n() {
        return None;
    }
    let adj = g.color_neighborhoods(color);
    let mut all = FixedBitSet::with_capacity(g.n());
    all.insert_range(..);
    clique_within(&adj, &all, size)
}

/// Monochromatic clique of `size` in `color` that contains vertex `v`.
pub fn mono_clique_through(g: &ColoredCompleteGraph, v: usize, color: usize, size: usize) -> Option<Vec<usize>> {
    if size == 0 {
        return Some(Vec::new());
    }
    let adj = g.color_neighborhoods(color);
    let mut rest = clique_within(&adj, &adj[v], size - 1)?;
    rest.push(v);
    rest.sort_unstable();
    Some(rest)
}

struct PartitionSearch<'a> {
    k: &'a [usize],
    adj: Vec<Vec<FixedBitSet>>,
    order: Vec<usize>,
    n: usize,
}

impl PartitionSearch<'_> {
    // Would adding `v` to `part` of color `i` close a K_{k_i - 1} of color i?
    fn blocked(
        &self,
        memo: &mut HashMap<(usize, FixedBitSet), bool>,
        parts: &[FixedBitSet],
        i: usize,
        v: usize,
    ) -> bool {
        let need = self.k[i] - 2;
        if need == 0 {
            return true;
        }
        let mut inside = parts[i].clone();
        inside.intersect_with(&self.adj[i][v]);
        if inside.count_ones(..) < need {
            return false;
        }
        if let Some(&hit) = memo.get(&(i, inside.clone())) {
            return hit;
        }
        let hit = clique_within(&self.adj[i], &inside, need).is_some();
        memo.insert((i, inside), hit);
        hit
    }

    fn dfs(
        &self,
        depth: usize,
        parts: &mut [FixedBitSet],
        memo: &mut HashMap<(usize, FixedBitSet), bool>,
        nodes: &mut u64,
    ) -> bool {
        *nodes += 1;
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for i in 0..self.k.len() {
            if self.blocked(memo, parts, i, v) {
                continue;
            }
            parts[i].insert(v);
            if self.dfs(depth + 1, parts, memo, nodes) {
                return true;
            }
            parts[i].set(v, false);
        }
        false
    }

    // Places the first vertices as dictated by `prefix`, then searches the rest.
    fn solve_from(&self, prefix: &[usize]) -> (Option<ColorPartition>, u64) {
        let mut parts = vec![FixedBitSet::with_capacity(self.n); self.k.len()];
        let mut memo = HashMap::new();
        let mut nodes = 0u64;
        for (depth, &i) in prefix.iter().enumerate() {
            nodes += 1;
            let v = self.order[depth];
            if self.blocked(&mut memo, &parts, i, v) {
                return (None, nodes);
            }
            parts[i].insert(v);
        }
        if !self.dfs(prefix.len(), &mut parts, &mut memo, &mut nodes) {
            return (None, nodes);
        }
        let parts = parts.iter().map(|p| p.ones().collect()).collect();
        (Some(ColorPartition { parts }), nodes)
    }
}

/// Searches for a partition `(S_1..S_c)` where no `S_i` holds a color-`i`
/// `K_{k_i - 1}`; such a partition is exactly a one-vertex extension creating
/// no new monochromatic `K_{k_i}`. Also returns the number of search nodes.
pub fn find_free_extension_counted(g: &ColoredCompleteGraph, k: &[usize]) -> Result<(Option<ColorPartition>, u64)> {
    check_thresholds(k)?;
    if k.len() != g.num_colors() {
        return Err(Error::InvalidThreshold(format!(
            "graph has {} colors but {} thresholds were given",
            g.num_colors(),
            k.len()
        )));
    }
    let n = g.n();
    let adj: Vec<Vec<FixedBitSet>> = (1..=k.len()).map(|c| g.color_neighborhoods(c)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(adj[0][v].count_ones(..)), v));
    let search = PartitionSearch { k, adj, order, n };

    // split the tree into prefixes over the first few vertices
    let c = k.len();
    let mut depth = 0;
    let mut width = 1usize;
    while depth < n && width * c <= 64 {
        depth += 1;
        width *= c;
    }
    let prefixes: Vec<Vec<usize>> = (0..width)
        .map(|mut code| {
            let mut p = vec![0; depth];
            for slot in p.iter_mut().rev() {
                *slot = code % c;
                code /= c;
            }
            p
        })
        .collect();
    Ok(par::first_hit_with_cost(&prefixes, |p| search.solve_from(p)))
}

pub fn find_free_extension(g: &ColoredCompleteGraph, k: &[usize]) -> Result<Option<ColorPartition>> {
    find_free_extension_counted(g, k).map(|(hit, _)| hit)
}

/// Decides `(k_1..k_c)`-(semi)saturation.
pub fn verify(g: &ColoredCompleteGraph, k: &[usize], mode: Mode) -> Result<VerificationReport> {
    check_thresholds(k)?;
    if mode == Mode::Sat {
        for (i, &ki) in k.iter().enumerate() {
            if let Some(vertices) = mono_clique_exists(g, i + 1, ki) {
                return Ok(VerificationReport::contains_forbidden(Witness::Clique {
                    color: i + 1,
                    vertices,
                }));
            }
        }
    }
    let (free, nodes) = find_free_extension_counted(g, k)?;
    let witness = free.map(|p| Witness::ColorPartition { parts: p.parts });
    Ok(VerificationReport::from_search(mode, witness, nodes))
}

fn is_prime(m: usize) -> bool {
    if m < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Largest prime `r` with `k * r <= n`.
pub fn packing_prime(n: usize, k: usize) -> Option<usize> {
    (2..=n / k.max(1)).rev().find(|&r| is_prime(r))
}

/// `r^2` pairwise edge-disjoint `k`-cliques in `K_n` (at least `n^2 / 16k^2`).
///
/// Vertex `(i, j)`, `i < k`, `j < r` is labeled `i * r + j`; clique `(a, b)`
/// takes `(i, a + (i + 1) * b mod r)` from every row `i`.
pub fn clique_packing(n: usize, k: usize) -> Result<Vec<Vec<usize>>> {
    if k == 0 {
        return Err(Error::InvalidThreshold("clique size must be positive".into()));
    }
    if n < 4 * k * k {
        return Err(Error::InputTooSmall(format!("need n >= 4k^2 = {}, got {n}", 4 * k * k)));
    }
    let r = packing_prime(n, k).expect("a prime exists below n/k when n >= 4k^2");
    let mut cliques = Vec::with_capacity(r * r);
    for a in 0..r {
        for b in 0..r {
            cliques.push((0..k).map(|i| i * r + (a + (i + 1) * b) % r).collect());
        }
    }
    Ok(cliques)
}

/// Part size `n = ceil(3 ln(c) 16 k^2 c^C(k-1,2))` and total vertex count `n c`.
pub fn random_construction_size(k: usize, c: usize) -> Result<(u64, u64)> {
    if k < 3 || c < 2 {
        return Err(Error::InvalidThreshold(format!("need k >= 3 and c >= 2, got k={k}, c={c}")));
    }
    let pairs = ((k - 1) * (k - 2) / 2) as f64;
    let raw = 3.0 * (c as f64).ln() * 16.0 * (k * k) as f64 * (c as f64).powf(pairs);
    if !raw.is_finite() || raw * c as f64 > u64::MAX as f64 / 2.0 {
        return Err(Error::ParameterOverflow(format!("construction size for k={k}, c={c} overflows")));
    }
    let n = raw.ceil() as u64;
    Ok((n, n * c as u64))
}

/// Uniform i.i.d. coloring of `K_{nc}` from a ChaCha8 stream seeded by `seed`.
///
/// Edges are colored in lexicographic `(u, v)` order, one draw each. The result
/// is semisaturated only with positive probability; nothing is verified here.
pub fn sample_random_semisat_candidate(k: usize, c: usize, seed: u64) -> Result<ColoredCompleteGraph> {
    sample_random_semisat_candidate_capped(k, c, seed, DEFAULT_VERTEX_CAP)
}

pub fn sample_random_semisat_candidate_capped(
    k: usize,
    c: usize,
    seed: u64,
    vertex_cap: u64,
) -> Result<ColoredCompleteGraph> {
    let (_, total) = random_construction_size(k, c)?;
    if total > vertex_cap {
        return Err(Error::ParameterOverflow(format!(
            "{total} vertices exceed the cap of {vertex_cap}"
        )));
    }
    Ok(random_coloring(total as usize, c, seed))
}

/// Seeded uniform coloring of `K_n` with `c` colors.
pub fn random_coloring(n: usize, c: usize, seed: u64) -> ColoredCompleteGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    ColoredCompleteGraph::from_fn(n, c, |_, _| rng.random_range(1..=c)).expect("colors drawn from 1..=c")
}
