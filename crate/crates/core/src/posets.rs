//! Posets: chain/antichain computations, the semisaturated and saturated
//! constructions, the free one-point extension algorithm and the verifier.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::FinitePoset;
use crate::par;
use crate::report::{Mode, VerificationReport, Witness};

/// A new element `p` with `D < p < U`; both sets are closed and every element
/// of `down` lies below every element of `up`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct OnePointExtension {
    pub down: Vec<usize>,
    pub up: Vec<usize>,
}

impl OnePointExtension {
    pub fn isolated() -> Self {
        Self { down: Vec::new(), up: Vec::new() }
    }

    pub fn is_valid_for(&self, p: &FinitePoset) -> bool {
        let n = p.len();
        if self.down.iter().chain(&self.up).any(|&x| x >= n) {
            return false;
        }
        let down = to_set(n, &self.down);
        let up = to_set(n, &self.up);
        down.is_disjoint(&up)
            && self.down.iter().all(|&d| p.below(d).is_subset(&down))
            && self.up.iter().all(|&u| p.above(u).is_subset(&up))
            && self.down.iter().all(|&d| self.up.iter().all(|&u| p.lt(d, u)))
    }
}

fn to_set(n: usize, items: &[usize]) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(n);
    s.extend(items.iter().copied());
    s
}

fn full_set(n: usize) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(n);
    s.insert_range(..);
    s
}

/// `P` plus a new element `n` placed according to `ext`.
pub fn apply_extension(p: &FinitePoset, ext: &OnePointExtension) -> Result<FinitePoset> {
    if !ext.is_valid_for(p) {
        return Err(Error::InvariantViolation("not a one-point extension of this poset".into()));
    }
    let n = p.len();
    let pairs = p
        .relations()
        .into_iter()
        .chain(ext.down.iter().map(|&d| (d, n)))
        .chain(ext.up.iter().map(|&u| (n, u)));
    FinitePoset::from_relations(n + 1, pairs)
}

// Down-closed (or up-closed) subsets of P inside `within`, which must itself be
// closed the same way. Elements are decided in `order`, a linear extension (or
// its reverse), so every subset is produced exactly once.
fn closed_subsets(p: &FinitePoset, order: &[usize], upward: bool, within: &FixedBitSet) -> Vec<FixedBitSet> {
    fn rec(
        p: &FinitePoset,
        order: &[usize],
        upward: bool,
        idx: usize,
        cur: &mut FixedBitSet,
        out: &mut Vec<FixedBitSet>,
    ) {
        if idx == order.len() {
            out.push(cur.clone());
            return;
        }
        let x = order[idx];
        rec(p, order, upward, idx + 1, cur, out);
        let needed = if upward { p.above(x) } else { p.below(x) };
        if needed.is_subset(cur) {
            cur.insert(x);
            rec(p, order, upward, idx + 1, cur, out);
            cur.set(x, false);
        }
    }
    let order: Vec<usize> = order.iter().copied().filter(|&x| within.contains(x)).collect();
    let mut out = Vec::new();
    let mut cur = FixedBitSet::with_capacity(p.len());
    rec(p, &order, upward, 0, &mut cur, &mut out);
    out
}

fn downsets(p: &FinitePoset) -> Vec<FixedBitSet> {
    closed_subsets(p, &p.linear_extension(), false, &full_set(p.len()))
}

// Elements above every member of `down`.
fn common_up(p: &FinitePoset, down: &FixedBitSet) -> FixedBitSet {
    let mut t = full_set(p.len());
    for d in down.ones() {
        t.intersect_with(p.above(d));
    }
    t
}

fn upsets_within(p: &FinitePoset, within: &FixedBitSet) -> Vec<FixedBitSet> {
    let mut order = p.linear_extension();
    order.reverse();
    closed_subsets(p, &order, true, within)
}

/// Every one-point extension of `P`, each exactly once.
pub fn enumerate_one_point_extensions(p: &FinitePoset) -> Vec<OnePointExtension> {
    let mut out = Vec::new();
    for down in downsets(p) {
        for up in upsets_within(p, &common_up(p, &down)) {
            out.push(OnePointExtension {
                down: down.ones().collect(),
                up: up.ones().collect(),
            });
        }
    }
    out
}

/// Longest chain ending at each element (`height`) and starting at each
/// element (`depth`), both counting the element itself.
pub fn heights_and_depths(p: &FinitePoset) -> (Vec<usize>, Vec<usize>) {
    let order = p.linear_extension();
    let n = p.len();
    let mut height = vec![1; n];
    let mut depth = vec![1; n];
    for &x in &order {
        height[x] = 1 + p.below(x).ones().map(|y| height[y]).max().unwrap_or(0);
    }
    for &x in order.iter().rev() {
        depth[x] = 1 + p.above(x).ones().map(|y| depth[y]).max().unwrap_or(0);
    }
    (height, depth)
}

/// A longest chain, listed bottom to top.
pub fn longest_chain(p: &FinitePoset) -> Vec<usize> {
    let (height, _) = heights_and_depths(p);
    let Some(mut x) = (0..p.len()).max_by_key(|&x| (height[x], std::cmp::Reverse(x))) else {
        return Vec::new();
    };
    let mut chain = vec![x];
    while height[x] > 1 {
        x = p.below(x).ones().find(|&y| height[y] == height[x] - 1).expect("height is realized");
        chain.push(x);
    }
    chain.reverse();
    chain
}

// Maximum matching in the comparability split graph restricted to `within`:
// returns `next[x] = Some(y)` when x_L is matched to y_R.
fn split_matching(p: &FinitePoset, within: &FixedBitSet) -> Vec<Option<usize>> {
    fn augment(
        p: &FinitePoset,
        within: &FixedBitSet,
        x: usize,
        seen: &mut FixedBitSet,
        prev: &mut [Option<usize>],
        next: &mut [Option<usize>],
    ) -> bool {
        for y in p.above(x).ones() {
            if !within.contains(y) || seen.contains(y) {
                continue;
            }
            seen.insert(y);
            if prev[y].is_none_or(|x2| augment(p, within, x2, seen, prev, next)) {
                prev[y] = Some(x);
                next[x] = Some(y);
                return true;
            }
        }
        false
    }
    let n = p.len();
    let mut next = vec![None; n];
    let mut prev = vec![None; n];
    for x in within.ones() {
        let mut seen = FixedBitSet::with_capacity(n);
        augment(p, within, x, &mut seen, &mut prev, &mut next);
    }
    next
}

/// Minimum chain cover of the elements in `within`; chains listed bottom to top.
pub fn chain_decomposition_within(p: &FinitePoset, within: &FixedBitSet) -> Vec<Vec<usize>> {
    let next = split_matching(p, within);
    let mut has_prev = FixedBitSet::with_capacity(p.len());
    for y in next.iter().flatten() {
        has_prev.insert(*y);
    }
    let mut chains = Vec::new();
    for x in within.ones() {
        if has_prev.contains(x) {
            continue;
        }
        let mut chain = vec![x];
        let mut cur = x;
        while let Some(y) = next[cur] {
            chain.push(y);
            cur = y;
        }
        chains.push(chain);
    }
    chains
}

/// Minimum chain cover (Dilworth decomposition) of the whole poset.
pub fn chain_decomposition(p: &FinitePoset) -> Vec<Vec<usize>> {
    chain_decomposition_within(p, &full_set(p.len()))
}

/// A maximum antichain among the elements of `within`, from the König cover
/// of the split-graph matching.
pub fn max_antichain_within(p: &FinitePoset, within: &FixedBitSet) -> Vec<usize> {
    let n = p.len();
    let next = split_matching(p, within);
    let mut prev = vec![None; n];
    for (x, y) in next.iter().enumerate() {
        if let Some(y) = *y {
            prev[y] = Some(x);
        }
    }
    // alternating reachability from unmatched left vertices
    let mut left = FixedBitSet::with_capacity(n);
    let mut right = FixedBitSet::with_capacity(n);
    let mut stack: Vec<usize> = within.ones().filter(|&x| next[x].is_none()).collect();
    for &x in &stack {
        left.insert(x);
    }
    while let Some(x) = stack.pop() {
        for y in p.above(x).ones() {
            if !within.contains(y) || right.contains(y) || next[x] == Some(y) {
                continue;
            }
            right.insert(y);
            if let Some(x2) = prev[y] {
                if !left.contains(x2) {
                    left.insert(x2);
                    stack.push(x2);
                }
            }
        }
    }
    within.ones().filter(|&x| left.contains(x) && !right.contains(x)).collect()
}

/// A maximum antichain of the whole poset.
pub fn max_antichain(p: &FinitePoset) -> Vec<usize> {
    max_antichain_within(p, &full_set(p.len()))
}

// Size of the largest antichain inside `within`.
fn width_within(p: &FinitePoset, within: &FixedBitSet) -> usize {
    let matched = split_matching(p, within).iter().filter(|m| m.is_some()).count();
    within.count_ones(..) - matched
}

fn check_positive(k: usize, l: usize, min: usize) -> Result<()> {
    if k < min || l < min {
        return Err(Error::InvalidThreshold(format!("need k, l >= {min}, got k={k}, l={l}")));
    }
    Ok(())
}

fn chain_pairs(chain: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    chain.windows(2).map(|w| (w[0], w[1]))
}

fn below_all(low: &[usize], high: &[usize]) -> Vec<(usize, usize)> {
    low.iter().flat_map(|&a| high.iter().map(move |&b| (a, b))).collect()
}

/// `(k-2)`-chain below an `(l-1)`-antichain below another `(k-2)`-chain;
/// `2k + l - 5` elements.
pub fn construct_semisat_tower(k: usize, l: usize) -> Result<FinitePoset> {
    if k < 2 || l < 3 {
        return Err(Error::InvalidThreshold(format!("need k >= 2, l >= 3, got k={k}, l={l}")));
    }
    let c1: Vec<usize> = (0..k - 2).collect();
    let a: Vec<usize> = (k - 2..k + l - 3).collect();
    let c2: Vec<usize> = (k + l - 3..2 * k + l - 5).collect();
    let mut pairs: Vec<(usize, usize)> = chain_pairs(&c1).chain(chain_pairs(&c2)).collect();
    pairs.extend(below_all(&c1, &a));
    pairs.extend(below_all(&a, &c2));
    pairs.extend(below_all(&c1, &c2));
    FinitePoset::from_relations(2 * k + l - 5, pairs)
}

/// `(l-1)`-antichain below a `(k-3)`-chain below another `(l-1)`-antichain,
/// plus an isolated `(l-2)`-antichain; `k + 3l - 7` elements.
pub fn construct_semisat_double(k: usize, l: usize) -> Result<FinitePoset> {
    check_positive(k, l, 3)?;
    let a1: Vec<usize> = (0..l - 1).collect();
    let c: Vec<usize> = (l - 1..k + l - 4).collect();
    let a2: Vec<usize> = (k + l - 4..k + 2 * l - 5).collect();
    let n = k + 3 * l - 7;
    let mut pairs: Vec<(usize, usize)> = chain_pairs(&c).collect();
    pairs.extend(below_all(&a1, &c));
    pairs.extend(below_all(&c, &a2));
    pairs.extend(below_all(&a1, &a2));
    FinitePoset::from_relations(n, pairs)
}

/// `l - 1` pairwise incomparable chains of `k - 1` elements each.
pub fn construct_saturated_chains(k: usize, l: usize) -> Result<FinitePoset> {
    check_positive(k, l, 2)?;
    let len = k - 1;
    let pairs = (0..l - 1).flat_map(|j| (0..len.saturating_sub(1)).map(move |t| (j * len + t, j * len + t + 1)));
    FinitePoset::from_relations(len * (l - 1), pairs)
}

/// An extension keeping `P` free of `k`-chains and `l`-antichains, or `None`
/// when `|P| = (k-1)(l-1)` and no such extension exists.
pub fn extend_free(p: &FinitePoset, k: usize, l: usize) -> Result<Option<OnePointExtension>> {
    let chain = longest_chain(p);
    let antichain = max_antichain(p);
    if chain.len() >= k || antichain.len() >= l {
        return Err(Error::PreconditionViolated(format!(
            "poset has a {}-chain and a {}-antichain",
            chain.len(),
            antichain.len()
        )));
    }
    if p.len() >= (k - 1) * (l - 1) {
        return Ok(None);
    }
    if antichain.len() + 2 <= l {
        return Ok(Some(OnePointExtension::isolated()));
    }
    let (height, depth) = heights_and_depths(p);
    let c = chain_decomposition(p)
        .into_iter()
        .find(|c| c.len() < k - 1)
        .expect("l-1 chains of k-1 elements would fill the poset");

    let closed_below = |x: usize| -> Vec<usize> {
        let mut s = p.below(x).clone();
        s.insert(x);
        s.ones().collect()
    };
    let closed_above = |x: usize| -> Vec<usize> {
        let mut s = p.above(x).clone();
        s.insert(x);
        s.ones().collect()
    };

    let bottom = c[0];
    if depth[bottom] < k - 1 {
        return Ok(Some(OnePointExtension { down: Vec::new(), up: closed_above(bottom) }));
    }
    let top = *c.last().unwrap();
    if height[top] < k - 1 {
        return Ok(Some(OnePointExtension { down: closed_below(top), up: Vec::new() }));
    }
    // largest q in C with |D_q| - 1 + depth(q) >= k - 1
    let qi = (0..c.len())
        .rev()
        .find(|&i| i + depth[c[i]] >= k - 1)
        .expect("the bottom of C qualifies");
    let s = *c
        .get(qi + 1)
        .ok_or_else(|| Error::InvariantViolation("q is the top of its chain".into()))?;
    Ok(Some(OnePointExtension { down: closed_below(c[qi]), up: closed_above(s) }))
}

/// Decides `(k, l)`-(semi)saturation by checking every one-point extension
/// for a `k`-chain or an `l`-antichain through the new element.
pub fn verify(p: &FinitePoset, k: usize, l: usize, mode: Mode) -> VerificationReport {
    if mode == Mode::Sat {
        let chain = longest_chain(p);
        if chain.len() >= k {
            return VerificationReport::contains_forbidden(Witness::PosetSubset {
                chain: true,
                elements: chain[..k].to_vec(),
            });
        }
        let antichain = max_antichain(p);
        if antichain.len() >= l {
            return VerificationReport::contains_forbidden(Witness::PosetSubset {
                chain: false,
                elements: antichain[..l].to_vec(),
            });
        }
    }
    let n = p.len();
    let (height, depth) = heights_and_depths(p);
    let all = full_set(n);
    let downs = downsets(p);
    let (free, examined) = par::first_hit_with_cost(&downs, |down| {
        let below = down.ones().map(|d| height[d]).max().unwrap_or(0);
        let mut count = 0u64;
        for up in upsets_within(p, &common_up(p, down)) {
            count += 1;
            let above = up.ones().map(|u| depth[u]).max().unwrap_or(0);
            if 1 + below + above >= k {
                continue;
            }
            let mut rest = all.clone();
            rest.difference_with(down);
            rest.difference_with(&up);
            if 1 + width_within(p, &rest) >= l {
                continue;
            }
            let ext = Witness::PosetExtension { down: down.ones().collect(), up: up.ones().collect() };
            return (Some(ext), count);
        }
        (None, count)
    });
    VerificationReport::from_search(mode, free, examined)
}
