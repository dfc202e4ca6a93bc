//! Exact enumerators for the invariants that bound the Grundy total
//! domination number, plus the bound-check predicates.
//!
//! These are deliberately independent of the sequence solvers so they can
//! serve as oracles in tests: vertex cover by branch and bound, matchings by
//! augmenting paths (bipartite) or exhaustive branching, semistrong/strong
//! matchings and `delta_k` by subset enumeration. All of them are meant for
//! desk-scale graphs; [`bound_report`] enforces a cap.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::Graph;
use crate::sequence::eta;

/// Largest graph accepted by [`bound_report`] (full `delta_k` sweeps and the
/// matching enumerations stay cheap up to here).
pub const REPORT_VERTEX_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("graph has {n} vertices, above the report cap of {cap}")]
    GraphTooLarge { n: usize, cap: usize },
    #[error("total domination is undefined: vertex {v} is isolated")]
    IsolatedVertex { v: usize },
    #[error("k = {k} out of range 1..={n}")]
    KOutOfRange { k: usize, n: usize },
}

/// Every auxiliary invariant in one place.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    /// Vertex cover number `tau`.
    pub tau: usize,
    /// Matching number `nu`.
    pub nu: usize,
    /// Strong (induced) matching number `nu_s`.
    pub nu_s: usize,
    /// Semistrong matching number `nu_ss`.
    pub nu_ss: usize,
    /// Total domination number; `None` when an isolated vertex exists.
    pub gamma_t: Option<usize>,
    /// `delta_k` for `k = 1..=n` (`delta[k-1]` is `delta_k`).
    pub delta: Vec<usize>,
    pub eta: usize,
}

/// Minimum vertex cover size, by branch and bound on an uncovered edge.
pub fn vertex_cover_number(g: &Graph) -> usize {
    fn branch(g: &Graph, covered: &mut [bool], count: usize, best: &mut usize) {
        if count >= *best {
            return;
        }
        let uncovered = (0..g.n()).filter(|&u| !covered[u]).find_map(|u| {
            g.neighbor_ids(u).iter().find(|&&v| !covered[v]).map(|&v| (u, v))
        });
        match uncovered {
            None => *best = count,
            Some((u, v)) => {
                for x in [u, v] {
                    covered[x] = true;
                    branch(g, covered, count + 1, best);
                    covered[x] = false;
                }
            }
        }
    }
    let mut best = g.n();
    branch(g, &mut vec![false; g.n()], 0, &mut best);
    best
}

/// Maximum matching size: augmenting paths on bipartite graphs, exhaustive
/// branching otherwise (desk-scale only in the latter case).
pub fn matching_number(g: &Graph) -> usize {
    match g.is_bipartite() {
        Some(color) => bipartite_matching(g, &color),
        None => {
            assert!(g.n() <= 64, "exact matching on non-bipartite graphs is desk-scale only");
            let masks: Vec<u64> = (0..g.n())
                .map(|v| g.neighbor_ids(v).iter().fold(0u64, |m, &u| m | (1 << u)))
                .collect();
            let alive = if g.n() == 64 { !0 } else { (1u64 << g.n()) - 1 };
            nu_branch(&masks, alive, &mut HashMap::new())
        }
    }
}

fn bipartite_matching(g: &Graph, color: &[u8]) -> usize {
    fn try_augment(
        g: &Graph,
        v: usize,
        visited: &mut [bool],
        matched_with: &mut [Option<usize>],
    ) -> bool {
        for &u in g.neighbor_ids(v) {
            if visited[u] {
                continue;
            }
            visited[u] = true;
            let free = match matched_with[u] {
                None => true,
                Some(w) => try_augment(g, w, visited, matched_with),
            };
            if free {
                matched_with[u] = Some(v);
                return true;
            }
        }
        false
    }
    let mut matched_with = vec![None; g.n()];
    let mut size = 0;
    for (v, &side) in color.iter().enumerate() {
        if side == 0 {
            let mut visited = vec![false; g.n()];
            if try_augment(g, v, &mut visited, &mut matched_with) {
                size += 1;
            }
        }
    }
    size
}

fn nu_branch(masks: &[u64], alive: u64, memo: &mut HashMap<u64, usize>) -> usize {
    let v = match (0..masks.len()).find(|&v| alive & (1 << v) != 0 && masks[v] & alive != 0) {
        Some(v) => v,
        None => return 0,
    };
    if let Some(&cached) = memo.get(&alive) {
        return cached;
    }
    let mut best = nu_branch(masks, alive & !(1 << v), memo);
    let mut candidates = masks[v] & alive;
    while candidates != 0 {
        let u = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        best = best.max(1 + nu_branch(masks, alive & !(1 << v) & !(1 << u), memo));
    }
    memo.insert(alive, best);
    best
}

/// Enumerates matchings depth-first, keeping the largest one whose every edge
/// passes `keep`. Both matching properties below are closed under taking
/// subsets, so a failing partial matching prunes its whole branch.
fn max_matching_where(g: &Graph, keep: impl Fn(&Graph, &[(usize, usize)]) -> bool) -> usize {
    fn dfs(
        g: &Graph,
        edges: &[(usize, usize)],
        from: usize,
        current: &mut Vec<(usize, usize)>,
        matched: &mut Vec<bool>,
        best: &mut usize,
        keep: &impl Fn(&Graph, &[(usize, usize)]) -> bool,
    ) {
        *best = (*best).max(current.len());
        for i in from..edges.len() {
            let (u, v) = edges[i];
            if matched[u] || matched[v] {
                continue;
            }
            current.push((u, v));
            matched[u] = true;
            matched[v] = true;
            if keep(g, current) {
                dfs(g, edges, i + 1, current, matched, best, keep);
            }
            matched[u] = false;
            matched[v] = false;
            current.pop();
        }
    }
    let edges = g.edges();
    let mut best = 0;
    dfs(g, &edges, 0, &mut Vec::new(), &mut vec![false; g.n()], &mut best, &keep);
    best
}

/// Degree of `v` inside the subgraph induced by the matched vertices.
fn induced_degree(g: &Graph, matched: &[(usize, usize)], v: usize) -> usize {
    g.neighbor_ids(v)
        .iter()
        .filter(|&&u| matched.iter().any(|&(a, b)| a == u || b == u))
        .count()
}

/// Semistrong matching number: every matching edge has an endpoint of degree
/// one in the subgraph induced by the matched vertices.
pub fn semistrong_matching_number(g: &Graph) -> usize {
    max_matching_where(g, |g, m| {
        m.iter()
            .all(|&(u, v)| induced_degree(g, m, u) == 1 || induced_degree(g, m, v) == 1)
    })
}

/// Strong (induced) matching number: the matched vertices induce exactly the
/// matching.
pub fn strong_matching_number(g: &Graph) -> usize {
    max_matching_where(g, |g, m| {
        m.iter()
            .all(|&(u, v)| induced_degree(g, m, u) == 1 && induced_degree(g, m, v) == 1)
    })
}

/// Total domination number by smallest-first subset enumeration.
pub fn total_domination_number(g: &Graph) -> Result<usize, BoundsError> {
    if let Some(v) = g.isolated_vertex() {
        return Err(BoundsError::IsolatedVertex { v });
    }
    assert!(g.n() <= 64, "subset enumeration is desk-scale only");
    let n = g.n();
    let masks: Vec<u64> = (0..n)
        .map(|v| g.neighbor_ids(v).iter().fold(0u64, |m, &u| m | (1 << u)))
        .collect();
    let full = if n == 64 { !0 } else { (1u64 << n) - 1 };
    for k in 1..=n {
        let mut found = None;
        for_each_subset(n, k, &mut |subset| {
            if found.is_none() {
                let mut dom = 0u64;
                let mut rest = subset;
                while rest != 0 {
                    dom |= masks[rest.trailing_zeros() as usize];
                    rest &= rest - 1;
                }
                if dom == full {
                    found = Some(k);
                }
            }
        });
        if let Some(k) = found {
            return Ok(k);
        }
    }
    unreachable!("V itself totally dominates a graph without isolated vertices")
}

/// Calls `f` on every k-subset of `0..n` as a bitmask, in increasing mask
/// order (Gosper's hack).
fn for_each_subset(n: usize, k: usize, f: &mut impl FnMut(u64)) {
    if k == 0 {
        f(0);
        return;
    }
    if k > n {
        return;
    }
    let limit = if n == 64 { u64::MAX } else { 1u64 << n };
    let mut subset = (1u64 << k) - 1;
    loop {
        f(subset);
        let c = subset & subset.wrapping_neg();
        let r = subset + c;
        if r == 0 || r >= limit {
            break;
        }
        subset = (((r ^ subset) >> 2) / c) | r;
        if subset >= limit {
            break;
        }
    }
}

/// `delta_k`: the minimum size of `N(U)` over all `k`-subsets `U`.
pub fn delta_k(g: &Graph, k: usize) -> Result<usize, BoundsError> {
    let n = g.n();
    if k < 1 || k > n {
        return Err(BoundsError::KOutOfRange { k, n });
    }
    assert!(n <= 64, "subset enumeration is desk-scale only");
    let masks: Vec<u64> = (0..n)
        .map(|v| g.neighbor_ids(v).iter().fold(0u64, |m, &u| m | (1 << u)))
        .collect();
    let mut best = usize::MAX;
    for_each_subset(n, k, &mut |subset| {
        if best == 0 {
            return;
        }
        let mut dom = 0u64;
        let mut rest = subset;
        while rest != 0 {
            dom |= masks[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        best = best.min(dom.count_ones() as usize);
    });
    Ok(best)
}

/// Computes the whole report. Capped at [`REPORT_VERTEX_CAP`] vertices.
pub fn bound_report(g: &Graph) -> Result<BoundReport, BoundsError> {
    if g.n() > REPORT_VERTEX_CAP {
        return Err(BoundsError::GraphTooLarge { n: g.n(), cap: REPORT_VERTEX_CAP });
    }
    let delta = (1..=g.n()).map(|k| delta_k(g, k).expect("k in range")).collect();
    Ok(BoundReport {
        tau: vertex_cover_number(g),
        nu: matching_number(g),
        nu_s: strong_matching_number(g),
        nu_ss: semistrong_matching_number(g),
        gamma_t: total_domination_number(g).ok(),
        delta,
        eta: eta(g),
    })
}

/// One evaluated inequality, reported as `lhs <= rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    pub name: String,
    pub lhs: usize,
    pub rhs: usize,
    pub holds: bool,
}

fn check(name: impl Into<String>, lhs: usize, rhs: usize) -> BoundCheck {
    BoundCheck { name: name.into(), lhs, rhs, holds: lhs <= rhs }
}

/// Evaluates every applicable bound against a caller-supplied
/// `gamma = gamma_gr_t(g)` (typically from the oracle). On a correct `gamma`
/// every check holds.
pub fn check_all_bounds(g: &Graph, gamma: usize) -> Vec<BoundCheck> {
    let mut out = Vec::new();
    out.push(check("2*nu_ss <= gamma", 2 * semistrong_matching_number(g), gamma));
    out.push(check("gamma <= 2*tau", gamma, 2 * vertex_cover_number(g)));
    if g.is_bipartite().is_some() {
        out.push(check("gamma <= 2*nu (bipartite)", gamma, 2 * matching_number(g)));
    }
    if let Ok(gamma_t) = total_domination_number(g) {
        out.push(check("gamma_t <= gamma", gamma_t, gamma));
    }
    let n = g.n();
    for k in 1..=n {
        let dk = delta_k(g, k).expect("k in range");
        out.push(check(format!("gamma <= k + n - delta_k (k={k})"), gamma, k + n - dk));
    }
    out
}
