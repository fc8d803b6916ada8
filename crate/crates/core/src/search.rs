//! Exhaustive searches for the smallest (semi)saturated structures at tiny
//! sizes. Graphs and posets are deduplicated by a canonical form (the
//! lexicographically least encoding over all relabelings); sequences are
//! enumerated as permutations since only the order type matters.

use std::collections::HashSet;

use serde_json::json;

use crate::error::{Error, Result};
use crate::model::{canonical_serialize, ColoredCompleteGraph, FinitePoset, NumberSequence, Structure};
use crate::report::{Mode, Verdict};
use crate::{graphs, par, posets, sequences};

/// Largest number of labeled colorings `min_sat_graph` will enumerate per size.
pub const GRAPH_COLORING_CAP: u64 = 1 << 15;
pub const POSET_MAX_N: usize = 6;
pub const SEQUENCE_MAX_N: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    /// Smallest size admitting the property, `None` if nothing up to the bound.
    pub minimum_size: Option<usize>,
    pub witness: Option<Structure>,
    /// Canonical candidates examined.
    pub explored: u64,
}

impl SearchResult {
    pub fn to_json(&self) -> serde_json::Value {
        let witness = self.witness.as_ref().map(|s| {
            serde_json::from_str::<serde_json::Value>(&canonical_serialize(s)).expect("canonical form is JSON")
        });
        json!({
            "minimum_size": self.minimum_size.map_or_else(|| json!("none up to bound"), |n| json!(n)),
            "witness": witness,
            "explored": self.explored,
        })
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut cur: Vec<u8> = (0..n as u8).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).expect("a larger element exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

// Verifies candidates in order and returns the first that passes.
fn first_passing<T: Sync, F>(cands: &[T], pass: F) -> Option<usize>
where
    F: Fn(&T) -> bool + Sync + Send,
{
    let idx: Vec<usize> = (0..cands.len()).collect();
    par::find_map_first(&idx, |&i| pass(&cands[i]).then_some(i))
}

fn graph_canonical(colors: &[u8], n: usize, perms: &[Vec<u8>]) -> Vec<u8> {
    let at = |u: usize, v: usize| {
        let (a, b) = (u.min(v), u.max(v));
        // index of pair (a, b) in lexicographic order
        colors[a * (2 * n - a - 1) / 2 + (b - a - 1)]
    };
    let mut best: Option<Vec<u8>> = None;
    let mut buf = Vec::with_capacity(colors.len());
    for p in perms {
        buf.clear();
        for u in 0..n {
            for v in u + 1..n {
                buf.push(at(p[u] as usize, p[v] as usize));
            }
        }
        if best.as_ref().is_none_or(|b| buf < *b) {
            best = Some(buf.clone());
        }
    }
    best.unwrap_or_default()
}

/// Smallest `n` with a `(k_1..k_c)`-(semi)saturated `c`-coloring of `K_n`.
pub fn min_sat_graph(k: &[usize], mode: Mode, max_n: usize) -> Result<SearchResult> {
    let c = k.len();
    if c == 0 || k.iter().any(|&ki| ki < 2) {
        return Err(Error::InvalidThreshold(format!("need one threshold >= 2 per color, got {k:?}")));
    }
    let pairs = max_n * max_n.saturating_sub(1) / 2;
    let labeled = (c as u64).checked_pow(pairs as u32).filter(|&t| t <= GRAPH_COLORING_CAP);
    if labeled.is_none() {
        return Err(Error::BoundTooLarge(format!(
            "{c}^{pairs} colorings of K_{max_n} exceed the cap {GRAPH_COLORING_CAP}"
        )));
    }
    let accept = |v: Verdict| match mode {
        Mode::Sat => v == Verdict::Saturated,
        Mode::Semisat => v == Verdict::Saturated || v == Verdict::SemisaturatedOnly,
    };
    let mut explored = 0;
    for n in 1..=max_n {
        let m = n * (n - 1) / 2;
        let perms = permutations(n);
        let mut seen = HashSet::new();
        let mut reps = Vec::new();
        let mut colors = vec![1u8; m];
        loop {
            let canon = graph_canonical(&colors, n, &perms);
            if seen.insert(canon.clone()) {
                reps.push(canon);
            }
            // next coloring in base c, digits 1..=c
            let Some(i) = colors.iter().rposition(|&d| (d as usize) < c) else { break };
            colors[i] += 1;
            colors[i + 1..].fill(1);
        }
        explored += reps.len() as u64;
        let build = |s: &Vec<u8>| {
            let mut it = s.iter();
            ColoredCompleteGraph::from_fn(n, c, |_, _| *it.next().expect("one color per pair") as usize)
                .expect("colors in range")
        };
        let hit = first_passing(&reps, |s| graphs::verify(&build(s), k, mode).is_ok_and(|r| accept(r.verdict)));
        if let Some(i) = hit {
            return Ok(SearchResult {
                minimum_size: Some(n),
                witness: Some(Structure::Graph(build(&reps[i]))),
                explored,
            });
        }
    }
    Ok(SearchResult { minimum_size: None, witness: None, explored })
}

// Strict orders on 0..n with every relation a < b having a < b as labels;
// every poset has such a labeling.
fn natural_posets(n: usize) -> Vec<u64> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let bit = |a: usize, b: usize| 1u64 << (a * n + b);
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let mut rel = 0u64;
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                rel |= bit(a, b);
            }
        }
        let closed = (0..n).all(|a| {
            (a + 1..n).all(|b| rel & bit(a, b) == 0 || (b + 1..n).all(|c| rel & bit(b, c) == 0 || rel & bit(a, c) != 0))
        });
        if closed {
            out.push(rel);
        }
    }
    out
}

fn poset_canonical(rel: u64, n: usize, perms: &[Vec<u8>]) -> u64 {
    perms
        .iter()
        .map(|p| {
            let mut r = 0u64;
            for a in 0..n {
                for b in 0..n {
                    if rel >> (a * n + b) & 1 == 1 {
                        r |= 1 << (p[a] as usize * n + p[b] as usize);
                    }
                }
            }
            r
        })
        .min()
        .unwrap_or(0)
}

fn poset_from_bits(rel: u64, n: usize) -> FinitePoset {
    let pairs = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|&(a, b)| rel >> (a * n + b) & 1 == 1);
    FinitePoset::from_relations(n, pairs).expect("enumerated relations are acyclic")
}

/// Smallest poset that is `(k, l)`-semisaturated (no `k`-chain or `l`-antichain
/// can be avoided by a new element).
pub fn min_semisat_poset(k: usize, l: usize, max_n: usize) -> Result<SearchResult> {
    if k < 2 || l < 2 {
        return Err(Error::InvalidThreshold(format!("need k, l >= 2, got k={k}, l={l}")));
    }
    if max_n > POSET_MAX_N {
        return Err(Error::BoundTooLarge(format!("poset search is capped at n = {POSET_MAX_N}, asked {max_n}")));
    }
    let mut explored = 0;
    for n in 1..=max_n {
        let perms = permutations(n);
        let mut seen = HashSet::new();
        let reps: Vec<u64> =
            natural_posets(n).into_iter().map(|r| poset_canonical(r, n, &perms)).filter(|&c| seen.insert(c)).collect();
        explored += reps.len() as u64;
        let hit = first_passing(&reps, |&r| posets::verify(&poset_from_bits(r, n), k, l, Mode::Semisat).is_semisaturated());
        if let Some(i) = hit {
            return Ok(SearchResult {
                minimum_size: Some(n),
                witness: Some(Structure::Poset(poset_from_bits(reps[i], n))),
                explored,
            });
        }
    }
    Ok(SearchResult { minimum_size: None, witness: None, explored })
}

fn as_sequence(perm: &[u8]) -> NumberSequence {
    let values: Vec<i64> = perm.iter().map(|&v| v as i64 + 1).collect();
    NumberSequence::from_integers(&values).expect("a permutation is distinct and positive")
}

fn check_sequence_params(k: usize, l: usize, n: usize) -> Result<()> {
    if k < 2 || l < 2 {
        return Err(Error::InvalidThreshold(format!("need k, l >= 2, got k={k}, l={l}")));
    }
    if n > SEQUENCE_MAX_N {
        return Err(Error::BoundTooLarge(format!("sequence search is capped at length {SEQUENCE_MAX_N}, asked {n}")));
    }
    Ok(())
}

/// Smallest permutation length admitting `(k, l)`-semisaturation.
pub fn min_semisat_sequence(k: usize, l: usize, max_n: usize) -> Result<SearchResult> {
    check_sequence_params(k, l, max_n)?;
    let mut explored = 0;
    for n in 1..=max_n {
        let perms = permutations(n);
        explored += perms.len() as u64;
        let hit = first_passing(&perms, |p| sequences::verify(&as_sequence(p), k, l, Mode::Semisat).is_semisaturated());
        if let Some(i) = hit {
            return Ok(SearchResult {
                minimum_size: Some(n),
                witness: Some(Structure::Sequence(as_sequence(&perms[i]))),
                explored,
            });
        }
    }
    Ok(SearchResult { minimum_size: None, witness: None, explored })
}

/// Every `(k, l)`-saturated permutation of length `(k-1)(l-1)`, as values
/// `1..=n`, in lexicographic order.
pub fn all_saturated_sequences(k: usize, l: usize) -> Result<Vec<Vec<usize>>> {
    check_sequence_params(k, l, (k.max(1) - 1) * (l.max(1) - 1))?;
    let n = (k - 1) * (l - 1);
    let perms = permutations(n);
    // cheap filter first: no increasing k-run and no decreasing l-run
    let free: Vec<&Vec<u8>> = perms
        .iter()
        .filter(|p| sequences::longest_increasing(p).len() < k && sequences::longest_decreasing(p).len() < l)
        .collect();
    let keep = par::map(&free, |p| sequences::verify(&as_sequence(p), k, l, Mode::Sat).verdict == Verdict::Saturated);
    Ok(free
        .into_iter()
        .zip(keep)
        .filter(|(_, ok)| *ok)
        .map(|(p, _)| p.iter().map(|&v| v as usize + 1).collect())
        .collect())
}
