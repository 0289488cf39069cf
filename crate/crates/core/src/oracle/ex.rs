//! Exhaustive Turán numbers.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use super::{pair_order, Meter, SearchBudget, SmallGraph};
use crate::embed::TreePattern;
use crate::error::{Error, Result};
use crate::graph::Graph;

const SPLIT_DEPTH: usize = 12;

fn check_args(p: usize, tree: &Graph, budget: &SearchBudget) -> Result<TreePattern> {
    if p > budget.max_order {
        return Err(Error::BudgetExceeded(format!(
            "p = {p} exceeds the search order cap {}",
            budget.max_order
        )));
    }
    SmallGraph::new(p)?;
    TreePattern::new(tree)
}

/// Edges of `k K_{n-1} ∪ K_r`, which has no component large enough for an
/// `n`-vertex tree and so seeds the incumbent.
fn clique_cover_seed(p: usize, n: usize) -> u64 {
    if n < 2 {
        return 0;
    }
    let (k, r) = (p / (n - 1), p % (n - 1));
    let pairs = |s: usize| (s * s.saturating_sub(1) / 2) as u64;
    k as u64 * pairs(n - 1) + pairs(r)
}

struct ExSearch<'a> {
    pattern: &'a TreePattern,
    pairs: Vec<(usize, usize)>,
    best: AtomicU64,
    meter: Meter,
}

impl ExSearch<'_> {
    fn dfs(&self, g: &mut SmallGraph, idx: usize, count: u64, local: &mut u64) {
        if !self.meter.tick(local) {
            return;
        }
        let remaining = (self.pairs.len() - idx) as u64;
        if count + remaining <= self.best.load(Ordering::Relaxed) {
            return;
        }
        if idx == self.pairs.len() {
            self.best.fetch_max(count, Ordering::Relaxed);
            return;
        }
        let (u, v) = self.pairs[idx];
        g.add_edge(u, v);
        if !self.pattern.contains_in(g) {
            self.dfs(g, idx + 1, count + 1, local);
        }
        g.remove_edge(u, v);
        self.dfs(g, idx + 1, count, local);
    }

    /// Feasible partial graphs after the first `depth` decisions.
    fn frontier(&self, p: usize, depth: usize) -> Vec<(SmallGraph, u64)> {
        let mut states = vec![(SmallGraph::new(p).expect("checked"), 0u64)];
        for &(u, v) in &self.pairs[..depth] {
            let mut next = Vec::with_capacity(states.len() * 2);
            for (g, count) in states {
                let mut with = g;
                with.add_edge(u, v);
                if !self.pattern.contains_in(&with) {
                    next.push((with, count + 1));
                }
                next.push((g, count));
            }
            states = next;
        }
        states
    }
}

/// `ex(p; tree)` by branch and bound over edge sets, edges decided in a fixed
/// vertex-by-vertex order with inclusion tried first.
pub fn ex_brute(p: usize, tree: &Graph, budget: &SearchBudget) -> Result<u64> {
    let pattern = check_args(p, tree, budget)?;
    let pairs = pair_order(p);
    if tree.order() > p {
        return Ok(pairs.len() as u64);
    }
    let depth = pairs.len().min(SPLIT_DEPTH);
    // the seed is achievable, so the search only has to look for strictly better graphs
    let search = ExSearch {
        pattern: &pattern,
        pairs,
        best: AtomicU64::new(clique_cover_seed(p, tree.order())),
        meter: Meter::new(budget),
    };
    let frontier = search.frontier(p, depth);
    frontier.into_par_iter().for_each(|(mut g, count)| {
        let mut local = 0;
        search.dfs(&mut g, depth, count, &mut local);
    });
    search.meter.finish("ex search")?;
    Ok(search.best.load(Ordering::Relaxed))
}

/// `ex(p; tree)` by testing every labeled graph on `p` vertices. Only for small `p`.
pub fn ex_brute_unpruned(p: usize, tree: &Graph, budget: &SearchBudget) -> Result<u64> {
    let pattern = check_args(p, tree, budget)?;
    let pairs = pair_order(p);
    if pairs.len() > 24 {
        return Err(Error::BudgetExceeded(format!(
            "unpruned search over 2^{} graphs",
            pairs.len()
        )));
    }
    let best = (0u32..1 << pairs.len())
        .into_par_iter()
        .filter_map(|mask| {
            let mut g = SmallGraph::new(p).expect("checked");
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
            (!pattern.contains_in(&g)).then_some(mask.count_ones() as u64)
        })
        .max()
        .unwrap_or(0);
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::TreeFamily;

    fn realize(f: TreeFamily) -> Graph {
        f.realize().unwrap()
    }

    #[test]
    fn documented_values() {
        let budget = SearchBudget::default();
        assert_eq!(ex_brute(5, &realize(TreeFamily::Path(5)), &budget).unwrap(), 6);
        assert_eq!(ex_brute(7, &realize(TreeFamily::TStar(6)), &budget).unwrap(), 11);
        assert_eq!(ex_brute(6, &realize(TreeFamily::Star(6)), &budget).unwrap(), 12);
    }

    #[test]
    fn pruned_matches_unpruned() {
        let budget = SearchBudget::default();
        for f in [
            TreeFamily::Path(4),
            TreeFamily::Star(4),
            TreeFamily::TStar(5),
            TreeFamily::TPrime(5),
        ] {
            let t = realize(f);
            for p in 4..=6 {
                assert_eq!(
                    ex_brute(p, &t, &budget).unwrap(),
                    ex_brute_unpruned(p, &t, &budget).unwrap()
                );
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let t = realize(TreeFamily::Path(5));
        let tight = SearchBudget {
            max_order: 6,
            ..SearchBudget::default()
        };
        assert!(matches!(ex_brute(7, &t, &tight), Err(Error::BudgetExceeded(_))));
        let few_nodes = SearchBudget {
            max_nodes: 10,
            ..SearchBudget::default()
        };
        assert!(matches!(
            ex_brute(8, &realize(TreeFamily::Star(5)), &few_nodes),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn tree_larger_than_host() {
        let budget = SearchBudget::default();
        assert_eq!(ex_brute(4, &realize(TreeFamily::Path(6)), &budget).unwrap(), 6);
    }
}
