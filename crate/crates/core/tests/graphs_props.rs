mod common;

use proptest::prelude::*;
use satlab::graphs::{
    clique_packing, construct_saturated_product, find_free_extension, mono_clique_exists, random_coloring, verify,
};
use satlab::model::ColoredCompleteGraph;
use satlab::{Mode, Verdict};

/// A monochromatic `size`-clique of `color` through `v`, by subset enumeration.
fn brute_clique_through(g: &ColoredCompleteGraph, v: usize, color: usize, size: usize) -> bool {
    let others: Vec<usize> = (0..g.n()).filter(|&u| u != v).collect();
    (0u32..1 << others.len()).any(|mask| {
        let mut s: Vec<usize> = (0..others.len()).filter(|&i| mask >> i & 1 == 1).map(|i| others[i]).collect();
        if s.len() + 1 != size {
            return false;
        }
        s.push(v);
        s.iter().all(|&a| s.iter().all(|&b| a == b || g.color(a, b) == color))
    })
}

fn brute_has_clique(g: &ColoredCompleteGraph, color: usize, size: usize) -> bool {
    (0..g.n()).any(|v| brute_clique_through(g, v, color, size))
}

/// Some coloring of a new vertex's edges that creates no forbidden clique.
fn brute_free_extension_exists(g: &ColoredCompleteGraph, k: &[usize]) -> bool {
    let (n, c) = (g.n(), k.len());
    (0..c.pow(n as u32)).any(|mut code| {
        let colors: Vec<usize> = (0..n)
            .map(|_| {
                let col = code % c + 1;
                code /= c;
                col
            })
            .collect();
        let h = g.extend(&colors).unwrap();
        (1..=c).all(|i| !brute_clique_through(&h, n, i, k[i - 1]))
    })
}

fn coloring(max_n: usize, c: usize) -> impl Strategy<Value = ColoredCompleteGraph> {
    (0..=max_n, any::<u64>()).prop_map(move |(n, seed)| random_coloring(n, c, seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn free_extension_is_sound_and_complete(g in coloring(7, 2), k1 in 2usize..5, k2 in 2usize..5) {
        let k = [k1, k2];
        match find_free_extension(&g, &k).unwrap() {
            Some(part) => {
                let h = g.extend(&part.new_vertex_colors(g.n())).unwrap();
                for (i, &ki) in k.iter().enumerate() {
                    prop_assert!(!brute_clique_through(&h, g.n(), i + 1, ki));
                }
            }
            None => prop_assert!(!brute_free_extension_exists(&g, &k)),
        }
    }

    #[test]
    fn three_colors_free_extension(g in coloring(5, 3)) {
        let k = [3, 3, 3];
        let found = find_free_extension(&g, &k).unwrap().is_some();
        prop_assert_eq!(found, brute_free_extension_exists(&g, &k));
    }

    #[test]
    fn clique_search_matches_subsets(g in coloring(8, 2), size in 1usize..5) {
        for color in 1..=2 {
            prop_assert_eq!(mono_clique_exists(&g, color, size).is_some(), brute_has_clique(&g, color, size));
        }
    }
}

fn threshold_vectors() -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
    while let Some(v) = stack.pop() {
        if !v.is_empty() {
            out.push(v.clone());
        }
        if v.len() == 3 {
            continue;
        }
        for k in 2..=11 {
            let mut w = v.clone();
            w.push(k);
            if w.iter().map(|&x| x - 1).product::<usize>() <= 10 {
                stack.push(w);
            }
        }
    }
    out.sort();
    out
}

#[test]
fn products_are_saturated() {
    for k in threshold_vectors() {
        let g = construct_saturated_product(&k).unwrap();
        assert_eq!(g.n(), k.iter().map(|&x| x - 1).product::<usize>());
        assert_eq!(verify(&g, &k, Mode::Sat).unwrap().verdict, Verdict::Saturated, "{k:?}");
    }
}

#[test]
fn leading_two_only_shifts_colors() {
    for k in threshold_vectors().into_iter().filter(|k| k.len() < 3) {
        let mut with_two = vec![2];
        with_two.extend(&k);
        let g = construct_saturated_product(&k).unwrap();
        let h = construct_saturated_product(&with_two).unwrap();
        assert_eq!(g.n(), h.n());
        assert!(g.edges().zip(h.edges()).all(|(a, b)| (a.0, a.1, a.2 + 1) == b));
        assert_eq!(
            verify(&g, &k, Mode::Sat).unwrap().verdict,
            verify(&h, &with_two, Mode::Sat).unwrap().verdict
        );
    }
}

#[test]
fn packings_are_edge_disjoint() {
    for (n, k) in [(36, 3), (50, 3), (64, 4), (100, 5), (144, 6)] {
        let cliques = clique_packing(n, k).unwrap();
        assert!(!cliques.is_empty());
        for c in &cliques {
            assert_eq!(c.len(), k);
            assert!(c.iter().all(|&v| v < n));
        }
        for (i, a) in cliques.iter().enumerate() {
            for b in &cliques[i + 1..] {
                assert!(a.iter().filter(|v| b.contains(v)).count() <= 1);
            }
        }
    }
}

/// Toy-scale run of the random construction's mechanism: the per-subset
/// triangle test agrees with the clique search on sampled colorings.
#[test]
fn random_colorings_at_toy_scale() {
    for seed in 0..5 {
        let g = random_coloring(30, 2, seed);
        assert_eq!(g, random_coloring(30, 2, seed));
        for color in 1..=2 {
            let mut any = false;
            for a in 0..30 {
                for b in a + 1..30 {
                    for c in b + 1..30 {
                        any |= g.color(a, b) == color && g.color(a, c) == color && g.color(b, c) == color;
                    }
                }
            }
            assert_eq!(mono_clique_exists(&g, color, 3).is_some(), any);
        }
    }
}
