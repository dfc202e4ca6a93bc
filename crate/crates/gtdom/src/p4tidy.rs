//! Classification of modular P4-tidy leaves and their closed-form solutions.
//!
//! The non-trivial modular P4-tidy graphs are `C5`, `P5`, the complement of
//! `P5`, and the spider and quasi-spider graphs whose heads are again
//! P4-tidy. A spider partitions its vertices into a stable side `S`, a clique
//! side `C` of the same weight `r`, and a head `H` completely joined to `C`
//! and disjoint from `S`'s neighborhoods; thin spiders match `s_i ~ c_j` iff
//! `i = j`, thick spiders iff `i != j` (with `r >= 3`). A quasi-spider
//! replaces the last stable or clique vertex by a true- or false-twin pair.
//!
//! Values: thin spiders contribute `2r` over the head's value, thick spiders
//! contribute `4`; a true-twin replacement on the stable side adds `2` for
//! thick spiders, and `2 * eta(head)` for thin ones; false-twin replacements
//! change nothing.
//!
//! Recognition works by recovering the only possible partition from forced
//! anchors (pendant vertices for thin spiders, vertices with at most two
//! non-neighbors for thick ones) and then checking every spider axiom, so a
//! candidate is never accepted spuriously.

use thiserror::Error;

use crate::graph::{Graph, TwinKind, VertexSet};
use crate::mdt::{solve_via_mdt, LeafSolution, SolveError};
use crate::sequence::{eta, LegalSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpiderKind {
    Thin,
    Thick,
}

/// Side of a spider partition holding the replaced vertex of a quasi-spider.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpiderSide {
    Stable,
    Clique,
}

/// A recovered spider (or quasi-spider) partition.
///
/// `stable[i]` is matched with `clique[i]`; the replacement vertex of a
/// quasi-spider duplicates the last entry of its side and is stored in
/// `stable_extra` / `clique_extra`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpiderPartition {
    pub kind: SpiderKind,
    pub quasi: Option<(SpiderSide, TwinKind)>,
    pub stable: Vec<usize>,
    pub clique: Vec<usize>,
    pub stable_extra: Option<usize>,
    pub clique_extra: Option<usize>,
    pub head: Vec<usize>,
}

impl SpiderPartition {
    /// The weight `r = |S| = |C|` (not counting a quasi replacement).
    pub fn weight(&self) -> usize {
        self.clique.len()
    }
}

/// Classification of a modular graph against the P4-tidy leaf catalogue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LeafClass {
    Trivial,
    Cycle5,
    Path5,
    Path5Complement,
    Spider(SpiderPartition),
    NotP4Tidy,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum P4TidyError {
    #[error("graph is not P4-tidy; offending modular leaf on vertices {vertices:?}: {reason}")]
    NotP4Tidy { vertices: Vec<usize>, reason: String },
    #[error("invalid spider partition: {reason}")]
    InvalidSpider { reason: String },
}

// Canonical copies of the three sporadic 5-vertex leaves with one stored
// Grundy total dominating sequence each (cross-checked against the oracle in
// the tests).
const C5_EDGES: [(usize, usize); 5] = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)];
const C5_WITNESS: [usize; 4] = [0, 2, 4, 1];
const P5_EDGES: [(usize, usize); 4] = [(0, 1), (1, 2), (2, 3), (3, 4)];
const P5_WITNESS: [usize; 4] = [0, 4, 1, 3];
const P5C_EDGES: [(usize, usize); 6] = [(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 4)];
const P5C_WITNESS: [usize; 4] = [1, 2, 3, 4];

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// First permutation (in lexicographic order) mapping `canon` onto `g`.
fn find_isomorphism(canon: &Graph, g: &Graph) -> Option<Vec<usize>> {
    let n = canon.n();
    if g.n() != n || g.edge_count() != canon.edge_count() {
        return None;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let matches = (0..n).all(|i| {
            (i + 1..n).all(|j| canon.has_edge(i, j) == g.has_edge(perm[i], perm[j]))
        });
        if matches {
            return Some(perm);
        }
        if !next_permutation(&mut perm) {
            return None;
        }
    }
}

/// Identifies a 5-vertex leaf as C5, P5, or co-P5 and translates the stored
/// witness into the leaf's own labeling.
fn five_vertex_solution(g: &Graph) -> Option<(LeafClass, Vec<usize>)> {
    if g.n() != 5 {
        return None;
    }
    type Candidate = (&'static [(usize, usize)], &'static [usize], LeafClass);
    let candidates: [Candidate; 3] = [
        (&C5_EDGES, &C5_WITNESS, LeafClass::Cycle5),
        (&P5_EDGES, &P5_WITNESS, LeafClass::Path5),
        (&P5C_EDGES, &P5C_WITNESS, LeafClass::Path5Complement),
    ];
    for (edges, witness, class) in candidates {
        let canon = Graph::from_edges(5, edges).expect("canonical edges are valid");
        if let Some(perm) = find_isomorphism(&canon, g) {
            return Some((class, witness.iter().map(|&v| perm[v]).collect()));
        }
    }
    None
}

/// Index of an S- or C-side vertex for the thin/thick adjacency pattern; a
/// quasi replacement shares the index of the vertex it duplicates.
fn side_indices(members: &[usize], extra: Option<usize>) -> Vec<(usize, usize)> {
    let r = members.len();
    let mut out: Vec<(usize, usize)> = members.iter().copied().zip(0..r).collect();
    if let Some(x) = extra {
        out.push((x, r - 1));
    }
    out
}

fn verify_spider(g: &Graph, p: &SpiderPartition) -> bool {
    let r = p.weight();
    let min_weight = if p.kind == SpiderKind::Thin { 2 } else { 3 };
    if p.stable.len() != r || r < min_weight {
        return false;
    }
    match p.quasi {
        None => {
            if p.stable_extra.is_some() || p.clique_extra.is_some() {
                return false;
            }
        }
        Some((SpiderSide::Stable, _)) => {
            if p.stable_extra.is_none() || p.clique_extra.is_some() {
                return false;
            }
        }
        Some((SpiderSide::Clique, _)) => {
            if p.clique_extra.is_none() || p.stable_extra.is_some() {
                return false;
            }
        }
    }

    // The parts must partition the vertex set exactly.
    let mut seen = vec![false; g.n()];
    let mut count = 0;
    let all = p
        .stable
        .iter()
        .chain(&p.clique)
        .chain(&p.stable_extra)
        .chain(&p.clique_extra)
        .chain(&p.head);
    for &v in all {
        if v >= g.n() || seen[v] {
            return false;
        }
        seen[v] = true;
        count += 1;
    }
    if count != g.n() {
        return false;
    }

    let s_side = side_indices(&p.stable, p.stable_extra);
    let c_side = side_indices(&p.clique, p.clique_extra);

    // The replaced pair is (last member, extra); only it may deviate from
    // the side's default adjacency.
    let replaced_pair = |u: usize, v: usize, members: &[usize], extra: Option<usize>| {
        let last = members[members.len() - 1];
        extra == Some(v) && u == last || extra == Some(u) && v == last
    };
    // Stable side: no edges, except the pair of a true-twin replacement.
    for (a, &(u, _)) in s_side.iter().enumerate() {
        for &(v, _) in &s_side[a + 1..] {
            let expected = replaced_pair(u, v, &p.stable, p.stable_extra)
                && p.quasi == Some((SpiderSide::Stable, TwinKind::True));
            if g.has_edge(u, v) != expected {
                return false;
            }
        }
    }
    // Clique side: all edges, except the pair of a false-twin replacement.
    for (a, &(u, _)) in c_side.iter().enumerate() {
        for &(v, _) in &c_side[a + 1..] {
            let expected = !(replaced_pair(u, v, &p.clique, p.clique_extra)
                && p.quasi == Some((SpiderSide::Clique, TwinKind::False)));
            if g.has_edge(u, v) != expected {
                return false;
            }
        }
    }
    // Head: completely joined to the clique side, no stable-side edges.
    for &h in &p.head {
        if c_side.iter().any(|&(c, _)| !g.has_edge(h, c)) {
            return false;
        }
        if s_side.iter().any(|&(s, _)| g.has_edge(h, s)) {
            return false;
        }
    }
    // The thin/thick pattern between the sides.
    for &(s, i) in &s_side {
        for &(c, j) in &c_side {
            let expected = match p.kind {
                SpiderKind::Thin => i == j,
                SpiderKind::Thick => i != j,
            };
            if g.has_edge(s, c) != expected {
                return false;
            }
        }
    }
    true
}

fn partition(
    kind: SpiderKind,
    quasi: Option<(SpiderSide, TwinKind)>,
    pairs: Vec<(usize, usize)>,
    stable_extra: Option<usize>,
    clique_extra: Option<usize>,
    n: usize,
) -> SpiderPartition {
    let stable: Vec<usize> = pairs.iter().map(|&(s, _)| s).collect();
    let clique: Vec<usize> = pairs.iter().map(|&(_, c)| c).collect();
    let mut in_sides = VertexSet::new(n);
    for &v in stable.iter().chain(&clique).chain(&stable_extra).chain(&clique_extra) {
        if v < n {
            in_sides.insert(v);
        }
    }
    let head = (0..n).filter(|&v| !in_sides.contains(v)).collect();
    SpiderPartition { kind, quasi, stable, clique, stable_extra, clique_extra, head }
}

/// Candidate thin partitions, recovered from pendant vertices and (for quasi
/// variants) the forced shapes of the replaced pair.
fn thin_candidates(g: &Graph) -> Vec<SpiderPartition> {
    let n = g.n();
    let pendants: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 1).collect();
    let support = |v: usize| g.neighbor_ids(v)[0];
    let mut out = Vec::new();

    // Plain spider or a false-twin replacement on S: every stable vertex is a
    // pendant. With the replacement, exactly one support carries two of them.
    let mut by_support: Vec<(usize, Vec<usize>)> = Vec::new();
    for &p in &pendants {
        match by_support.iter_mut().find(|(s, _)| *s == support(p)) {
            Some((_, list)) => list.push(p),
            None => by_support.push((support(p), vec![p])),
        }
    }
    let doubles: Vec<&(usize, Vec<usize>)> =
        by_support.iter().filter(|(_, l)| l.len() == 2).collect();
    if by_support.iter().all(|(_, l)| l.len() == 1) {
        let pairs: Vec<(usize, usize)> = pendants.iter().map(|&p| (p, support(p))).collect();
        out.push(partition(SpiderKind::Thin, None, pairs, None, None, n));
    } else if doubles.len() == 1 && by_support.iter().all(|(_, l)| l.len() <= 2) {
        let (shared, twins) = doubles[0];
        let mut pairs: Vec<(usize, usize)> = pendants
            .iter()
            .filter(|&&p| support(p) != *shared)
            .map(|&p| (p, support(p)))
            .collect();
        pairs.push((twins[0].min(twins[1]), *shared));
        let extra = twins[0].max(twins[1]);
        out.push(partition(
            SpiderKind::Thin,
            Some((SpiderSide::Stable, TwinKind::False)),
            pairs,
            Some(extra),
            None,
            n,
        ));
    }

    // True-twin replacement on S: an adjacent pair of degree-2 vertices with
    // a common third neighbor.
    for (a, b) in g.edges() {
        if g.degree(a) != 2 || g.degree(b) != 2 {
            continue;
        }
        let third = |v: usize, other: usize| {
            g.neighbor_ids(v).iter().copied().find(|&x| x != other)
        };
        let (ca, cb) = (third(a, b), third(b, a));
        if let (Some(c), true) = (ca, ca == cb) {
            let mut pairs: Vec<(usize, usize)> = pendants.iter().map(|&p| (p, support(p))).collect();
            pairs.push((a, c));
            out.push(partition(
                SpiderKind::Thin,
                Some((SpiderSide::Stable, TwinKind::True)),
                pairs,
                Some(b),
                None,
                n,
            ));
        }
    }

    // Replacement on C: the matched stable vertex sees both copies, so it has
    // degree two; the copies are adjacent for K2 and non-adjacent otherwise.
    for v in 0..n {
        if g.degree(v) != 2 {
            continue;
        }
        let (x, y) = (g.neighbor_ids(v)[0], g.neighbor_ids(v)[1]);
        let twin = if g.has_edge(x, y) { TwinKind::True } else { TwinKind::False };
        let mut pairs: Vec<(usize, usize)> = pendants.iter().map(|&p| (p, support(p))).collect();
        pairs.push((v, x.min(y)));
        out.push(partition(
            SpiderKind::Thin,
            Some((SpiderSide::Clique, twin)),
            pairs,
            None,
            Some(x.max(y)),
            n,
        ));
    }
    out
}

/// Candidate thick partitions. In a thick spider every clique-side vertex has
/// one non-neighbor (its stable partner), or two when it faces a replaced
/// pair; everything else has at least `r >= 3` non-neighbors.
fn thick_candidates(g: &Graph) -> Vec<SpiderPartition> {
    let n = g.n();
    let non_neighbors = |v: usize| -> Vec<usize> {
        (0..n).filter(|&u| u != v && !g.has_edge(u, v)).collect()
    };
    let mut ones: Vec<(usize, usize)> = Vec::new();
    let mut twos: Vec<(usize, usize, usize)> = Vec::new();
    for v in 0..n {
        let nn = non_neighbors(v);
        match nn.len() {
            1 => ones.push((v, nn[0])),
            2 => twos.push((v, nn[0], nn[1])),
            _ => {}
        }
    }
    let mut out = Vec::new();
    match twos.len() {
        0 => {
            let mut shared: Vec<(usize, usize)> = Vec::new();
            for (i, &(c1, p1)) in ones.iter().enumerate() {
                for &(c2, p2) in &ones[i + 1..] {
                    if p1 == p2 {
                        shared.push((c1, c2));
                    }
                }
            }
            match shared.len() {
                0 => {
                    let pairs = ones.iter().map(|&(c, s)| (s, c)).collect();
                    out.push(partition(SpiderKind::Thick, None, pairs, None, None, n));
                }
                1 => {
                    let (c1, c2) = shared[0];
                    let s_r = ones.iter().find(|&&(c, _)| c == c1).unwrap().1;
                    let mut pairs: Vec<(usize, usize)> = ones
                        .iter()
                        .filter(|&&(c, _)| c != c1 && c != c2)
                        .map(|&(c, s)| (s, c))
                        .collect();
                    pairs.push((s_r, c1.min(c2)));
                    out.push(partition(
                        SpiderKind::Thick,
                        Some((SpiderSide::Clique, TwinKind::True)),
                        pairs,
                        None,
                        Some(c1.max(c2)),
                        n,
                    ));
                }
                _ => {}
            }
        }
        1 => {
            let (c_r, a, b) = twos[0];
            let twin = if g.has_edge(a, b) { TwinKind::True } else { TwinKind::False };
            let mut pairs: Vec<(usize, usize)> = ones.iter().map(|&(c, s)| (s, c)).collect();
            pairs.push((a.min(b), c_r));
            out.push(partition(
                SpiderKind::Thick,
                Some((SpiderSide::Stable, twin)),
                pairs,
                Some(a.max(b)),
                None,
                n,
            ));
        }
        2 => {
            let (v1, a1, b1) = twos[0];
            let (v2, a2, b2) = twos[1];
            let other = |a: usize, b: usize, skip: usize| if a == skip { b } else { a };
            if (a1 == v2 || b1 == v2) && (a2 == v1 || b2 == v1) {
                let s1 = other(a1, b1, v2);
                let s2 = other(a2, b2, v1);
                if s1 == s2 {
                    let mut pairs: Vec<(usize, usize)> = ones.iter().map(|&(c, s)| (s, c)).collect();
                    pairs.push((s1, v1.min(v2)));
                    out.push(partition(
                        SpiderKind::Thick,
                        Some((SpiderSide::Clique, TwinKind::False)),
                        pairs,
                        None,
                        Some(v1.max(v2)),
                        n,
                    ));
                }
            }
        }
        _ => {}
    }
    out
}

/// Recovers the spider partition of `g`, if `g` is a spider or quasi-spider.
fn find_spider_partition(g: &Graph) -> Option<SpiderPartition> {
    thin_candidates(g)
        .into_iter()
        .chain(thick_candidates(g))
        .find(|p| verify_spider(g, p))
}

/// Classifies a modular graph against the P4-tidy leaf catalogue.
pub fn classify_leaf(g: &Graph) -> LeafClass {
    if g.n() == 1 {
        return LeafClass::Trivial;
    }
    if let Some((class, _)) = five_vertex_solution(g) {
        return class;
    }
    match find_spider_partition(g) {
        Some(p) => LeafClass::Spider(p),
        None => LeafClass::NotP4Tidy,
    }
}

/// Solves a spider or quasi-spider given an exact solution of its head.
///
/// `head_solution` must be a Grundy total dominating sequence of the subgraph
/// induced by `p.head`, in the ids of `g` (empty head: empty solution).
pub fn grundy_spider(
    g: &Graph,
    p: &SpiderPartition,
    head_solution: &LeafSolution,
) -> Result<LeafSolution, P4TidyError> {
    if !verify_spider(g, p) {
        return Err(P4TidyError::InvalidSpider {
            reason: "partition does not describe this graph".into(),
        });
    }
    let r = p.weight();
    let head_set = VertexSet::from_vertices(g.n(), p.head.iter().copied());
    // Smallest head vertex isolated inside the head; authoritative for
    // eta(G[H]).
    let head_isolated = p
        .head
        .iter()
        .copied()
        .find(|&h| g.neighbor_ids(h).iter().all(|&u| !head_set.contains(u)));
    let t = &head_solution.witness;

    let mut witness: Vec<usize> = Vec::with_capacity(2 * r + t.len() + 2);
    match (p.kind, p.quasi) {
        // Base thin shape; false-twin replacements and a K2 on the clique
        // side keep both the value and the witness.
        (SpiderKind::Thin, None)
        | (SpiderKind::Thin, Some((SpiderSide::Clique, _)))
        | (SpiderKind::Thin, Some((SpiderSide::Stable, TwinKind::False))) => {
            witness.extend(&p.stable);
            witness.extend(t);
            witness.extend(&p.clique);
        }
        (SpiderKind::Thin, Some((SpiderSide::Stable, TwinKind::True))) => {
            match head_isolated {
                // Isolated head vertex: worth two extra moves. The isolated
                // vertex leads, the twin pair plays before the head, and c_r
                // must head the clique tail to footprint the isolated part.
                Some(v) => {
                    witness.extend(&p.stable[..r - 1]);
                    witness.push(v);
                    witness.push(p.stable[r - 1]);
                    witness.push(p.stable_extra.expect("stable quasi has a replacement"));
                    witness.extend(t);
                    witness.push(p.clique[r - 1]);
                    witness.extend(p.clique[..r - 1].iter().rev());
                }
                None => {
                    witness.extend(&p.stable);
                    witness.extend(t);
                    witness.extend(&p.clique);
                }
            }
        }
        (SpiderKind::Thick, None)
        | (SpiderKind::Thick, Some((SpiderSide::Clique, _)))
        | (SpiderKind::Thick, Some((SpiderSide::Stable, TwinKind::False))) => {
            witness.extend([p.stable[0], p.stable[1]]);
            witness.extend(t);
            witness.extend([p.clique[0], p.clique[1]]);
        }
        (SpiderKind::Thick, Some((SpiderSide::Stable, TwinKind::True))) => {
            witness.extend([p.stable[0], p.stable[1], p.stable[r - 1]]);
            witness.push(p.stable_extra.expect("stable quasi has a replacement"));
            witness.extend(t);
            witness.extend([p.clique[0], p.clique[1]]);
        }
    }
    Ok(LeafSolution::new(witness, 0))
}

fn p4tidy_leaf(leaf: &Graph) -> Result<LeafSolution, String> {
    if leaf.n() == 1 {
        return Ok(LeafSolution::new(Vec::new(), 1));
    }
    if let Some((_, witness)) = five_vertex_solution(leaf) {
        return Ok(LeafSolution::new(witness, 0));
    }
    let p = find_spider_partition(leaf)
        .ok_or_else(|| "modular leaf is not trivial, C5, P5, co-P5, or a (quasi-)spider".to_string())?;
    let head_set = VertexSet::from_vertices(leaf.n(), p.head.iter().copied());
    let (head_graph, head_map) = leaf.induced_subgraph(&head_set);
    let head_seq = grundy_p4tidy(&head_graph).map_err(|e| format!("in spider head: {e}"))?;
    let head_solution = LeafSolution::new(
        head_seq.order().iter().map(|&v| head_map[v]).collect(),
        eta(&head_graph),
    );
    grundy_spider(leaf, &p, &head_solution).map_err(|e| e.to_string())
}

/// Grundy total dominating sequence of a P4-tidy graph, or a rejection
/// naming the modular leaf that falls outside the catalogue.
pub fn grundy_p4tidy(g: &Graph) -> Result<LegalSequence, P4TidyError> {
    if g.n() == 0 {
        return Ok(LegalSequence::empty(0));
    }
    solve_via_mdt(g, p4tidy_leaf).map_err(|e| match e {
        SolveError::UnsupportedLeaf { vertices, reason } => {
            P4TidyError::NotP4Tidy { vertices, reason }
        }
    })
}
