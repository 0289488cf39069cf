//! Exhaustive two-color Ramsey numbers for pairs of trees.

use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;

use super::{pair_order, Meter, SearchBudget, SmallGraph};
use crate::embed::TreePattern;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::tree::is_isomorphic_tree;

const SPLIT_DEPTH: usize = 12;

struct Coloring<'a> {
    red: &'a TreePattern,
    blue: &'a TreePattern,
    pairs: Vec<(usize, usize)>,
    found: AtomicBool,
    meter: Meter,
}

type State = (SmallGraph, SmallGraph);

impl Coloring<'_> {
    /// Children of a partial coloring after deciding edge `idx`, skipping any
    /// whose new edge completes a red `left` or a blue `right`.
    fn children(&self, (red, blue): State, idx: usize) -> impl Iterator<Item = State> + '_ {
        let (u, v) = self.pairs[idx];
        let mut r = red;
        r.add_edge(u, v);
        let mut b = blue;
        b.add_edge(u, v);
        let red_ok = !self.red.contains_in(&r);
        let blue_ok = !self.blue.contains_in(&b);
        [(red_ok, (r, blue)), (blue_ok, (red, b))]
            .into_iter()
            .filter_map(|(ok, s)| ok.then_some(s))
    }

    fn dfs(&self, state: State, idx: usize, local: &mut u64) -> bool {
        if self.found.load(Ordering::Relaxed) || !self.meter.tick(local) {
            return false;
        }
        if idx == self.pairs.len() {
            self.found.store(true, Ordering::Relaxed);
            return true;
        }
        let children: Vec<State> = self.children(state, idx).collect();
        children.into_iter().any(|child| self.dfs(child, idx + 1, local))
    }

    /// Whether some coloring of `K_n` avoids a red `left` and a blue `right`.
    fn exists(&self, n: usize, first_red: bool) -> bool {
        let empty = SmallGraph::new(n).expect("checked");
        let mut states = vec![(empty, empty)];
        let mut start = 0;
        if first_red && !self.pairs.is_empty() {
            let (u, v) = self.pairs[0];
            let mut red = empty;
            red.add_edge(u, v);
            if self.red.contains_in(&red) {
                states.clear();
            } else {
                states = vec![(red, empty)];
            }
            start = 1;
        }
        let depth = self.pairs.len().min(SPLIT_DEPTH).max(start);
        for idx in start..depth {
            states = states
                .into_iter()
                .flat_map(|s| self.children(s, idx).collect::<Vec<_>>())
                .collect();
        }
        states.into_par_iter().any(|s| {
            let mut local = 0;
            self.dfs(s, depth, &mut local)
        })
    }
}

fn patterns(left: &Graph, right: &Graph) -> Result<(TreePattern, TreePattern)> {
    Ok((TreePattern::new(left)?, TreePattern::new(right)?))
}

/// Smallest `N` such that every red/blue coloring of `K_N` has a red `left` or a
/// blue `right`. Both arguments must be trees.
pub fn ramsey_brute(left: &Graph, right: &Graph, budget: &SearchBudget) -> Result<u64> {
    let (red, blue) = patterns(left, right)?;
    // swapping colors maps avoiding colorings to avoiding colorings when the
    // two trees are isomorphic, so one edge may be fixed red
    let symmetric = is_isomorphic_tree(left, right)?;
    let mut n = left.order().max(right.order());
    loop {
        if n > budget.max_order {
            return Err(Error::BudgetExceeded(format!(
                "Ramsey search passed the order cap {}",
                budget.max_order
            )));
        }
        SmallGraph::new(n)?;
        let search = Coloring {
            red: &red,
            blue: &blue,
            pairs: pair_order(n),
            found: AtomicBool::new(false),
            meter: Meter::new(budget),
        };
        let exists = search.exists(n, symmetric);
        search.meter.finish("Ramsey search")?;
        if !exists {
            return Ok(n as u64);
        }
        n += 1;
    }
}

/// The same number by testing every coloring with no pruning. Only for tiny `N`.
pub fn ramsey_brute_unpruned(left: &Graph, right: &Graph, budget: &SearchBudget) -> Result<u64> {
    let (red, blue) = patterns(left, right)?;
    let mut n = left.order().max(right.order());
    loop {
        let pairs = pair_order(n);
        if n > budget.max_order || pairs.len() > 24 {
            return Err(Error::BudgetExceeded(format!("unpruned Ramsey search at N = {n}")));
        }
        let avoidable = (0u32..1 << pairs.len()).into_par_iter().any(|mask| {
            let mut r = SmallGraph::new(n).expect("n <= 7");
            let mut b = r;
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    r.add_edge(u, v);
                } else {
                    b.add_edge(u, v);
                }
            }
            !red.contains_in(&r) && !blue.contains_in(&b)
        });
        if !avoidable {
            return Ok(n as u64);
        }
        n += 1;
    }
}
