//! Exhaustive searches used as ground truth for small orders.
//!
//! Searches are split into independent subtrees by fixing the first few edge
//! decisions; subtrees run in parallel and share only a monotone incumbent, so
//! results do not depend on the number of workers.

mod ex;
mod ramsey;
mod scan;

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Adjacency, Graph};

pub use ex::{ex_brute, ex_brute_unpruned};
pub use ramsey::{ramsey_brute, ramsey_brute_unpruned};
pub use scan::{scan_conjecture, Conjecture, ScanRecord, ScanReport};

/// Caps on exhaustive searches. Exceeding any of them aborts with
/// [`Error::BudgetExceeded`]; a partial search never produces a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    /// Largest `p` for Turán searches and largest `N` for Ramsey searches.
    pub max_order: usize,
    /// Search-tree nodes across all workers.
    pub max_nodes: u64,
    #[serde(with = "seconds")]
    pub time_cap: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_order: 8,
            max_nodes: u64::MAX,
            time_cap: Duration::from_secs(600),
        }
    }
}

mod seconds {
    use std::time::Duration;

    use serde::Serializer;

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64())
    }
}

/// Bit-row graph on at most 64 vertices, cheap to copy during search.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct SmallGraph {
    order: usize,
    rows: [u64; 64],
}

impl SmallGraph {
    pub fn new(order: usize) -> Result<Self> {
        if order > 64 {
            return Err(Error::Capacity(format!(
                "search graphs are limited to 64 vertices, got {order}"
            )));
        }
        Ok(SmallGraph { order, rows: [0; 64] })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
    }

    pub fn edge_count(&self) -> usize {
        self.rows[..self.order]
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn to_graph(&self) -> Graph {
        let edges = (0..self.order).flat_map(|u| {
            (u + 1..self.order)
                .filter(move |&v| self.rows[u] >> v & 1 == 1)
                .map(move |v| (u, v))
        });
        Graph::from_edges(self.order, edges).expect("order <= 64")
    }
}

impl Adjacency for SmallGraph {
    fn order(&self) -> usize {
        self.order
    }

    fn row(&self, v: usize) -> &[u64] {
        std::slice::from_ref(&self.rows[v])
    }

    fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }
}

/// Vertex pairs in the order `(0,1), (0,2), (1,2), (0,3), ...`.
fn pair_order(p: usize) -> Vec<(usize, usize)> {
    (1..p).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Shared node and time accounting with a cooperative stop flag.
struct Meter {
    budget: SearchBudget,
    start: Instant,
    nodes: AtomicU64,
    stop: AtomicBool,
}

const FLUSH: u64 = 4096;

impl Meter {
    fn new(budget: &SearchBudget) -> Self {
        Meter {
            budget: *budget,
            start: Instant::now(),
            nodes: AtomicU64::new(0),
            stop: AtomicBool::new(false),
        }
    }

    /// Counts one node; false once the search must stop.
    fn tick(&self, local: &mut u64) -> bool {
        *local += 1;
        if *local >= FLUSH {
            let total = self.nodes.fetch_add(*local, Ordering::Relaxed) + *local;
            *local = 0;
            if total > self.budget.max_nodes || self.start.elapsed() > self.budget.time_cap {
                self.stop.store(true, Ordering::Relaxed);
            }
        }
        !self.stop.load(Ordering::Relaxed)
    }

    fn finish(&self, what: &str) -> Result<()> {
        if self.stop.load(Ordering::Relaxed) {
            return Err(Error::BudgetExceeded(format!(
                "{what}: stopped after {} nodes and {:.1}s",
                self.nodes.load(Ordering::Relaxed),
                self.start.elapsed().as_secs_f64()
            )));
        }
        Ok(())
    }
}
