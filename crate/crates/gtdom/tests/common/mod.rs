//! Shared corpus builders for the integration suites: exhaustive
//! enumerations of small trees and connected graphs, and seeded random
//! generators for the randomized criteria.

// Each test binary uses its own subset of these helpers.
#![allow(dead_code)]

use std::collections::HashSet;

use gtdom::{spider_graph, Graph, HeadSpec, SpiderKind, SpiderSide, TwinKind};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------------------
// Random corpora
// ---------------------------------------------------------------------------

/// Erdos-Renyi graph on `n` vertices with edge probability `p`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random graph with at least one edge, `2 <= n <= max_n`.
pub fn random_graph_with_edges(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    loop {
        let n = rng.gen_range(2..=max_n);
        let p = rng.gen_range(0.15..0.85);
        let g = random_graph(rng, n, p);
        if g.edge_count() > 0 {
            return g;
        }
    }
}

/// Random graph without isolated vertices, `2 <= n <= max_n`.
pub fn random_isolated_free(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    loop {
        let n = rng.gen_range(2..=max_n);
        let p = rng.gen_range(0.25..0.9);
        let g = random_graph(rng, n, p);
        if g.n() >= 2 && g.isolated_vertex().is_none() {
            return g;
        }
    }
}

/// Uniform random attachment tree on `n` vertices.
pub fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<_> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edges(g.n(), &edges).unwrap()
}

/// Bipartite distance-hereditary graph grown from a single vertex by random
/// pendant and false-twin additions.
pub fn random_bdh(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new()];
    for v in 1..n {
        let anchor = rng.gen_range(0..v);
        adj.push(Vec::new());
        if rng.gen_bool(0.5) {
            // pendant on anchor
            edges.push((anchor, v));
            adj[anchor].push(v);
            adj[v].push(anchor);
        } else {
            // false twin of anchor
            for u in adj[anchor].clone() {
                edges.push((u, v));
                adj[u].push(v);
                adj[v].push(u);
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// P4-tidy graph with at most `budget` vertices, built by composing the
/// allowed modular leaves under disjoint union and join, plus spiders with
/// recursively generated heads.
pub fn random_p4tidy(rng: &mut ChaCha8Rng, budget: usize) -> Graph {
    assert!(budget >= 1);
    let leaf = |rng: &mut ChaCha8Rng, budget: usize| -> Graph {
        let mut options: Vec<u8> = vec![0];
        if budget >= 4 {
            options.push(1);
        }
        if budget >= 5 {
            options.extend([2, 3, 4]);
        }
        match options[rng.gen_range(0..options.len())] {
            0 => Graph::edgeless(1),
            1 => Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap(),
            2 => Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap(),
            3 => Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap(),
            _ => Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap().complement(),
        }
    };
    if budget < 2 {
        return Graph::edgeless(1);
    }
    match rng.gen_range(0..10) {
        0..=2 => leaf(rng, budget),
        3..=5 if budget >= 4 => {
            // spider with an optional quasi replacement and recursive head
            let max_r = (budget / 2).min(4);
            let r = rng.gen_range(2..=max_r.max(2));
            let kind = if r >= 3 && rng.gen_bool(0.5) { SpiderKind::Thick } else { SpiderKind::Thin };
            let quasi = if budget > 2 * r && rng.gen_bool(0.4) {
                let side = if rng.gen_bool(0.5) { SpiderSide::Stable } else { SpiderSide::Clique };
                let twin = if rng.gen_bool(0.5) { TwinKind::True } else { TwinKind::False };
                Some((side, twin))
            } else {
                None
            };
            let head_budget = budget - 2 * r - usize::from(quasi.is_some());
            let head = if head_budget >= 1 && rng.gen_bool(0.6) {
                random_p4tidy(rng, head_budget)
            } else {
                Graph::edgeless(0)
            };
            spider_graph(kind, r, &head, quasi).unwrap()
        }
        _ => {
            let n1 = rng.gen_range(1..budget);
            let g1 = random_p4tidy(rng, n1);
            let g2 = random_p4tidy(rng, budget - g1.n());
            if rng.gen_bool(0.5) {
                g1.disjoint_union(&g2)
            } else {
                g1.join(&g2)
            }
        }
    }
}

/// All spider and quasi-spider shapes with the given weights and the standard
/// small-head menagerie.
pub fn spider_menagerie(weights_thin: &[usize], weights_thick: &[usize]) -> Vec<Graph> {
    let heads = [
        HeadSpec::Empty,
        HeadSpec::Complete(1),
        HeadSpec::Complete(2),
        HeadSpec::Edgeless(2),
        HeadSpec::Path(4),
    ];
    let quasis = [
        None,
        Some((SpiderSide::Stable, TwinKind::True)),
        Some((SpiderSide::Stable, TwinKind::False)),
        Some((SpiderSide::Clique, TwinKind::True)),
        Some((SpiderSide::Clique, TwinKind::False)),
    ];
    let mut out = Vec::new();
    for (kind, weights) in [(SpiderKind::Thin, weights_thin), (SpiderKind::Thick, weights_thick)] {
        for &r in weights {
            for head in &heads {
                for quasi in quasis {
                    out.push(spider_graph(kind, r, &head.build(), quasi).unwrap());
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Exhaustive enumerations
// ---------------------------------------------------------------------------

/// AHU canonical encoding of a free tree (rooted at its center, or the
/// smaller of the two center encodings).
fn tree_canonical(g: &Graph) -> String {
    fn encode(g: &Graph, v: usize, parent: Option<usize>) -> String {
        let mut children: Vec<String> = g
            .neighbor_ids(v)
            .iter()
            .filter(|&&u| Some(u) != parent)
            .map(|&u| encode(g, u, Some(v)))
            .collect();
        children.sort();
        format!("({})", children.concat())
    }
    let n = g.n();
    if n == 1 {
        return "()".into();
    }
    // Peel leaves to find the 1- or 2-vertex center.
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for &u in g.neighbor_ids(v) {
                if !removed[u] {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    let centers: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    centers.iter().map(|&c| encode(g, c, None)).min().unwrap()
}

/// All non-isomorphic trees on exactly `n` vertices.
pub fn all_trees(n: usize) -> Vec<Graph> {
    assert!(n >= 1);
    let mut current = vec![Graph::edgeless(1)];
    for size in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for tree in &current {
            for attach in 0..tree.n() {
                let mut edges = tree.edges();
                edges.push((attach, size - 1));
                let bigger = Graph::from_edges(size, &edges).unwrap();
                if seen.insert(tree_canonical(&bigger)) {
                    next.push(bigger);
                }
            }
        }
        current = next;
    }
    current
}

fn pair_index(n: usize, u: usize, v: usize) -> usize {
    // index of (u, v) with u < v in lexicographic pair order
    debug_assert!(u < v && v < n);
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

fn graph_from_mask(n: usize, mask: u32) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if mask & (1 << pair_index(n, u, v)) != 0 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// All non-isomorphic connected graphs on exactly `n <= 6` vertices, by mask
/// enumeration and brute-force canonical deduplication.
pub fn all_connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 6, "brute-force enumeration is limited to n <= 6");
    if n == 1 {
        return vec![Graph::edgeless(1)];
    }
    let pairs = n * (n - 1) / 2;
    // Precompute how each permutation moves pair slots.
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut slot_map = vec![0usize; pairs];
        for u in 0..n {
            for v in u + 1..n {
                let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
                slot_map[pair_index(n, u, v)] = pair_index(n, a, b);
            }
        }
        perms.push(slot_map);
        // next permutation in lexicographic order
        let mut i = n - 1;
        while i > 0 && perm[i - 1] >= perm[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while perm[j] <= perm[i - 1] {
            j -= 1;
        }
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }

    let image = |slot_map: &[usize], mask: u32| {
        let mut image = 0u32;
        for (slot, &target) in slot_map.iter().enumerate() {
            if mask & (1 << slot) != 0 {
                image |= 1 << target;
            }
        }
        image
    };
    // Keep a mask only if it is the smallest member of its isomorphism orbit.
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs) {
        if perms.iter().any(|slot_map| image(slot_map, mask) < mask) {
            continue;
        }
        let g = graph_from_mask(n, mask);
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}
