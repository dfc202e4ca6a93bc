//! Exhaustive search for a maximum-length legal sequence.
//!
//! The ground truth the structural solvers are tested against. The search is
//! a memoized depth-first enumeration over positions. Because the set of
//! vertices dominated so far is exactly the union of the open neighborhoods
//! of the vertices already played, a position is fully described by the set
//! of played vertices; the memo table is keyed on that set alone, which also
//! covers the (dominated set, used set) pair. A cheap admissible bound (each
//! further move footprints at least one still-undominated vertex) skips
//! branches that cannot beat the best child found so far without affecting
//! exactness.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::Graph;
use crate::sequence::LegalSequence;

/// Default hard cap on the number of vertices accepted by [`grundy_exact`].
pub const DEFAULT_VERTEX_CAP: usize = 14;

/// Largest vertex count the oracle supports at all (bitmask width).
const MAX_SUPPORTED: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, above the cap of {cap}; pass a larger cap to search anyway")]
    CapExceeded { n: usize, cap: usize },
    #[error("cap {cap} exceeds the supported maximum of {MAX_SUPPORTED} vertices")]
    CapUnsupported { cap: usize },
}

/// Result of an exact search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    /// The Grundy total domination number (extended definition).
    pub length: usize,
    /// A witness attaining it: the first maximum found when candidate
    /// vertices are tried in ascending id.
    pub witness: Vec<usize>,
    /// Number of distinct search states expanded (diagnostics).
    pub explored: u64,
}

struct Searcher {
    n: usize,
    nbr: Vec<u64>,
    memo: HashMap<u64, u16>,
    explored: u64,
    full: u64,
}

impl Searcher {
    fn value(&mut self, used: u64, dominated: u64) -> u16 {
        if let Some(&v) = self.memo.get(&used) {
            return v;
        }
        self.explored += 1;
        let undominated = !dominated & self.full;
        // No continuation can play more moves than there are undominated
        // vertices left, since every move must footprint one of them.
        let bound = undominated.count_ones() as u16;
        let mut best = 0u16;
        for v in 0..self.n {
            if best >= bound {
                break;
            }
            let bit = 1u64 << v;
            if used & bit != 0 || self.nbr[v] & undominated == 0 {
                continue;
            }
            let val = 1 + self.value(used | bit, dominated | self.nbr[v]);
            if val > best {
                best = val;
            }
        }
        self.memo.insert(used, best);
        best
    }

    /// Rebuilds the deterministic witness by walking the memo table: at every
    /// position take the smallest vertex whose branch attains the optimum.
    fn witness(&mut self) -> Vec<usize> {
        let total = self.value(0, 0);
        let mut order = Vec::with_capacity(total as usize);
        let (mut used, mut dominated) = (0u64, 0u64);
        for step in 0..total {
            let remaining = total - step;
            let chosen = (0..self.n)
                .find(|&v| {
                    let bit = 1u64 << v;
                    if used & bit != 0 || self.nbr[v] & !dominated & self.full == 0 {
                        return false;
                    }
                    1 + self.value(used | bit, dominated | self.nbr[v]) == remaining
                })
                .expect("an optimal continuation exists");
            order.push(chosen);
            used |= 1u64 << chosen;
            dominated |= self.nbr[chosen];
        }
        order
    }
}

/// Computes the Grundy total domination number exactly, with a witness.
///
/// Refuses graphs larger than `vertex_cap` (default
/// [`DEFAULT_VERTEX_CAP`]) rather than truncating the search.
pub fn grundy_exact(g: &Graph, vertex_cap: Option<usize>) -> Result<OracleResult, OracleError> {
    let cap = vertex_cap.unwrap_or(DEFAULT_VERTEX_CAP);
    if cap > MAX_SUPPORTED {
        return Err(OracleError::CapUnsupported { cap });
    }
    if g.n() > cap {
        return Err(OracleError::CapExceeded { n: g.n(), cap });
    }
    let n = g.n();
    let nbr = (0..n)
        .map(|v| g.neighbor_ids(v).iter().fold(0u64, |m, &u| m | (1u64 << u)))
        .collect();
    let full = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let mut searcher = Searcher { n, nbr, memo: HashMap::new(), explored: 0, full };
    let witness = searcher.witness();
    let result = OracleResult {
        length: witness.len(),
        witness,
        explored: searcher.explored,
    };
    debug_assert!(
        LegalSequence::from_order(g, &result.witness).is_ok() || result.witness.is_empty()
    );
    Ok(result)
}
