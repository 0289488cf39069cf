//! Dense simple graphs stored as per-vertex bit rows.
//!
//! A [`Graph`] is immutable once built: every operation that changes the edge set
//! returns a new value. Rows are padded to whole 64-bit words, and padding bits
//! are always zero so that equality and hashing are bit-exact.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count any constructor will produce.
pub const MAX_ORDER: usize = 4096;

/// Read access to a graph as bit rows. Implemented by [`Graph`] and by the
/// fixed-size search states of the oracles so that embedding code is shared.
pub trait Adjacency {
    fn order(&self) -> usize;

    /// Neighbor set of `v` as little-endian 64-bit words.
    fn row(&self, v: usize) -> &[u64];

    fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Adjacency for Graph {
    fn order(&self) -> usize {
        self.order
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }
}

fn check_order(order: usize) -> Result<()> {
    if order > MAX_ORDER {
        return Err(Error::Capacity(format!(
            "graph of order {order} exceeds the {MAX_ORDER}-vertex limit"
        )));
    }
    Ok(())
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self> {
        check_order(order)?;
        let words = order.div_ceil(64);
        Ok(Graph {
            order,
            words,
            bits: vec![0; order * words],
        })
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(order)?;
        for (u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u}, {v}) out of range for order {order}"
                )));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(order: usize) -> Result<Self> {
        Ok(Graph::empty(order)?.complement())
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let order = a
            .checked_add(b)
            .ok_or_else(|| Error::Capacity("order overflow".into()))?;
        let mut g = Graph::empty(order)?;
        for u in 0..a {
            for v in a..order {
                g.set_edge(u, v);
            }
        }
        Ok(g)
    }

    /// A `degree`-regular graph on `order` vertices: the circulant with offsets
    /// `±1..=±⌊degree/2⌋`, plus the antipodal offset `order/2` when `degree` is odd.
    ///
    /// Fails with [`Error::ParityViolation`] exactly when `degree * order` is odd,
    /// since then no regular graph of that degree exists.
    pub fn circulant_regular(order: usize, degree: usize) -> Result<Self> {
        check_order(order)?;
        if order < degree + 1 {
            return Err(Error::Domain(format!(
                "a {degree}-regular graph needs at least {} vertices, got {order}",
                degree + 1
            )));
        }
        if degree % 2 == 1 && order % 2 == 1 {
            return Err(Error::ParityViolation { order, degree });
        }
        let mut g = Graph::empty(order)?;
        for v in 0..order {
            for offset in 1..=degree / 2 {
                g.set_edge(v, (v + offset) % order);
            }
            if degree % 2 == 1 {
                g.set_edge(v, (v + order / 2) % order);
            }
        }
        Ok(g)
    }

    /// Vertex-disjoint union; the vertices of `parts[i]` follow those of `parts[i-1]`.
    pub fn disjoint_union(parts: &[Graph]) -> Result<Self> {
        let order: usize = parts.iter().map(|g| g.order).sum();
        let mut g = Graph::empty(order)?;
        let mut base = 0;
        for part in parts {
            for (u, v) in part.edges() {
                g.set_edge(base + u, base + v);
            }
            base += part.order;
        }
        Ok(g)
    }

    pub fn complement(&self) -> Self {
        let mut g = self.clone();
        for v in 0..self.order {
            let row = &mut g.bits[v * self.words..(v + 1) * self.words];
            for (i, w) in row.iter_mut().enumerate() {
                *w = !*w & word_mask(self.order, i);
            }
            row[v / 64] &= !(1u64 << (v % 64));
        }
        g
    }

    /// Subgraph induced on `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        let mut g = Graph::empty(vertices.len())?;
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.is_adjacent(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.is_adjacent(u, v)
    }

    pub fn degree(&self, v: usize) -> usize {
        Adjacency::degree(self, v)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        let twice: usize = self.bits.iter().map(|w| w.count_ones() as usize).sum();
        twice / 2
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter::new(self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for s in 0..self.order {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order <= 1 || self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.order >= 1 && self.edge_count() == self.order - 1 && self.is_connected()
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

fn word_mask(order: usize, word: usize) -> u64 {
    let lo = word * 64;
    if order >= lo + 64 {
        u64::MAX
    } else if order <= lo {
        0
    } else {
        (1u64 << (order - lo)) - 1
    }
}

/// Iterates the set bits of a word slice as vertex indices.
pub(crate) struct BitIter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl<'a> BitIter<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        BitIter {
            words,
            index: 0,
            current: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_and_bipartite_edge_counts() {
        assert_eq!(Graph::complete(5).unwrap().edge_count(), 10);
        assert_eq!(Graph::complete_bipartite(3, 4).unwrap().edge_count(), 12);
        assert_eq!(Graph::complete(0).unwrap().edge_count(), 0);
    }

    #[test]
    fn circulant_examples() {
        let g = Graph::circulant_regular(7, 4).unwrap();
        assert_eq!(g.edge_count(), 14);
        assert_eq!((g.min_degree(), g.max_degree()), (4, 4));

        let g = Graph::circulant_regular(6, 3).unwrap();
        assert_eq!(g.edge_count(), 9);
        assert_eq!((g.min_degree(), g.max_degree()), (3, 3));

        assert_eq!(
            Graph::circulant_regular(5, 3),
            Err(Error::ParityViolation { order: 5, degree: 3 })
        );
        assert!(matches!(Graph::circulant_regular(3, 3), Err(Error::Domain(_))));
    }

    #[test]
    fn circulant_exists_iff_even_product() {
        for p in 1..40 {
            for k in 0..p {
                let g = Graph::circulant_regular(p, k);
                if k * p % 2 == 0 {
                    let g = g.unwrap();
                    assert_eq!((g.min_degree(), g.max_degree()), (k, k), "p={p} k={k}");
                } else {
                    assert!(matches!(g, Err(Error::ParityViolation { .. })));
                }
            }
        }
    }

    #[test]
    fn complement_across_word_boundary() {
        let g = Graph::from_edges(130, [(0, 129), (64, 65)]).unwrap();
        let c = g.complement();
        assert_eq!(c.edge_count(), 130 * 129 / 2 - 2);
        assert!(!c.has_edge(0, 129));
        assert!(!c.has_edge(5, 5));
        assert_eq!(c.complement(), g);
    }

    #[test]
    fn rejects_bad_edges_and_orders() {
        assert!(matches!(Graph::from_edges(3, [(0, 3)]), Err(Error::InvalidArgument(_))));
        assert!(matches!(Graph::from_edges(3, [(1, 1)]), Err(Error::InvalidArgument(_))));
        assert!(matches!(Graph::empty(MAX_ORDER + 1), Err(Error::Capacity(_))));
    }

    #[test]
    fn components_and_distances() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (4, 5)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1, 2, 3], vec![4, 5]]);
        assert_eq!(g.distances_from(0)[3], Some(3));
        assert_eq!(g.distances_from(0)[4], None);
        assert!(!g.is_tree());
        assert!(Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap().is_tree());
    }
}
