//! Subgraph containment for trees.
//!
//! The non-leaf vertices of the tree (its skeleton) are placed by backtracking
//! in BFS order from a maximum-degree root, filtering host vertices by degree
//! and by the number of still-unused neighbors. Once the skeleton is placed,
//! the leaves are assigned with a bipartite matching, so interchangeable
//! leaves never cause a permutation blow-up.

use crate::error::{Error, Result};
use crate::graph::{Adjacency, BitIter, Graph};

const NONE: usize = usize::MAX;

/// A tree preprocessed for repeated embedding queries.
#[derive(Debug, Clone)]
pub struct TreePattern {
    order: usize,
    skeleton: Vec<usize>,
    parent_pos: Vec<usize>,
    degree: Vec<usize>,
    leaves: Vec<Vec<usize>>,
}

impl TreePattern {
    pub fn new(tree: &Graph) -> Result<Self> {
        if !tree.is_tree() {
            return Err(Error::InvalidArgument(
                "embedding pattern must be a tree (connected, order - 1 edges)".into(),
            ));
        }
        let order = tree.order();
        if order == 1 {
            return Ok(TreePattern {
                order,
                skeleton: vec![0],
                parent_pos: vec![NONE],
                degree: vec![0],
                leaves: vec![Vec::new()],
            });
        }
        let degrees = tree.degrees();
        let max_degree = tree.max_degree();
        // Among maximum-degree vertices prefer the most central one.
        let root = (0..order)
            .filter(|&v| degrees[v] == max_degree)
            .min_by_key(|&v| tree.distances_from(v).into_iter().flatten().max().unwrap_or(0))
            .unwrap_or(0);

        let mut skeleton = vec![root];
        let mut parent_pos = vec![NONE];
        let mut leaves = vec![Vec::new()];
        let mut visited = vec![false; order];
        visited[root] = true;
        let mut head = 0;
        while head < skeleton.len() {
            let v = skeleton[head];
            let mut children: Vec<usize> = tree.neighbors(v).filter(|&c| !visited[c]).collect();
            children.sort_by_key(|&c| std::cmp::Reverse(degrees[c]));
            for c in children {
                visited[c] = true;
                if degrees[c] == 1 {
                    leaves[head].push(c);
                } else {
                    skeleton.push(c);
                    parent_pos.push(head);
                    leaves.push(Vec::new());
                }
            }
            head += 1;
        }
        let degree = skeleton.iter().map(|&v| degrees[v]).collect();
        Ok(TreePattern {
            order,
            skeleton,
            parent_pos,
            degree,
            leaves,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn contains_in<H: Adjacency + ?Sized>(&self, host: &H) -> bool {
        self.embed_in(host).is_some()
    }

    /// Returns `map[tree_vertex] = host_vertex` for some embedding, if one exists.
    pub fn embed_in<H: Adjacency + ?Sized>(&self, host: &H) -> Option<Vec<usize>> {
        let n = host.order();
        if n < self.order {
            return None;
        }
        let words = host.row(0).len();
        let host_degree: Vec<usize> = (0..n).map(|v| host.degree(v)).collect();
        let big_enough = component_mask(host, self.order);
        let mut search = Search {
            host,
            pattern: self,
            host_degree,
            image: vec![NONE; self.skeleton.len()],
            used: vec![0; words],
            slot_of_host: vec![NONE; n],
            host_of_slot: Vec::new(),
            slot_pos: Vec::new(),
            visited: vec![0; words],
        };
        for (pos, leaves) in self.leaves.iter().enumerate() {
            search.slot_pos.extend(std::iter::repeat_n(pos, leaves.len()));
        }
        search.host_of_slot = vec![NONE; search.slot_pos.len()];

        for root in BitIter::new(&big_enough) {
            if search.host_degree[root] < self.degree[0] {
                continue;
            }
            search.place(0, root);
            if search.extend(1) {
                return Some(search.certificate());
            }
            search.unplace(0, root);
        }
        None
    }
}

/// True iff `host` has a (not necessarily induced) subgraph isomorphic to `tree`.
pub fn contains_tree(host: &Graph, tree: &Graph) -> Result<bool> {
    Ok(TreePattern::new(tree)?.contains_in(host))
}

/// Bitset of host vertices lying in components with at least `min_size` vertices.
fn component_mask<H: Adjacency + ?Sized>(host: &H, min_size: usize) -> Vec<u64> {
    let n = host.order();
    let words = host.row(0).len();
    let mut seen = vec![0u64; words];
    let mut keep = vec![0u64; words];
    let mut stack = Vec::new();
    for s in 0..n {
        if seen[s / 64] >> (s % 64) & 1 == 1 {
            continue;
        }
        let mut comp = vec![0u64; words];
        seen[s / 64] |= 1 << (s % 64);
        comp[s / 64] |= 1 << (s % 64);
        stack.push(s);
        let mut size = 1;
        while let Some(u) = stack.pop() {
            let row = host.row(u);
            for i in 0..words {
                let mut fresh = row[i] & !seen[i];
                seen[i] |= fresh;
                comp[i] |= fresh;
                while fresh != 0 {
                    let b = fresh.trailing_zeros() as usize;
                    fresh &= fresh - 1;
                    stack.push(i * 64 + b);
                    size += 1;
                }
            }
        }
        if size >= min_size {
            for i in 0..words {
                keep[i] |= comp[i];
            }
        }
    }
    keep
}

struct Search<'a, H: Adjacency + ?Sized> {
    host: &'a H,
    pattern: &'a TreePattern,
    host_degree: Vec<usize>,
    image: Vec<usize>,
    used: Vec<u64>,
    slot_of_host: Vec<usize>,
    host_of_slot: Vec<usize>,
    slot_pos: Vec<usize>,
    visited: Vec<u64>,
}

impl<H: Adjacency + ?Sized> Search<'_, H> {
    fn place(&mut self, pos: usize, h: usize) {
        self.image[pos] = h;
        self.used[h / 64] |= 1 << (h % 64);
    }

    fn unplace(&mut self, pos: usize, h: usize) {
        self.image[pos] = NONE;
        self.used[h / 64] &= !(1 << (h % 64));
    }

    fn free_neighbors(&self, h: usize) -> usize {
        self.host
            .row(h)
            .iter()
            .zip(&self.used)
            .map(|(r, u)| (r & !u).count_ones() as usize)
            .sum()
    }

    fn extend(&mut self, pos: usize) -> bool {
        let pattern = self.pattern;
        if pos == pattern.skeleton.len() {
            return self.match_leaves();
        }
        let parent_image = self.image[pattern.parent_pos[pos]];
        let need = pattern.degree[pos];
        let candidates: Vec<u64> = self
            .host
            .row(parent_image)
            .iter()
            .zip(&self.used)
            .map(|(r, u)| r & !u)
            .collect();
        for h in BitIter::new(&candidates) {
            if self.host_degree[h] < need || self.free_neighbors(h) < need - 1 {
                continue;
            }
            self.place(pos, h);
            if self.extend(pos + 1) {
                return true;
            }
            self.unplace(pos, h);
        }
        false
    }

    fn match_leaves(&mut self) -> bool {
        let pattern = self.pattern;
        for (pos, leaves) in pattern.leaves.iter().enumerate() {
            if self.free_neighbors(self.image[pos]) < leaves.len() {
                return false;
            }
        }
        for &h in &self.host_of_slot {
            if h != NONE {
                self.slot_of_host[h] = NONE;
            }
        }
        self.host_of_slot.iter_mut().for_each(|h| *h = NONE);
        for slot in 0..self.slot_pos.len() {
            self.visited.iter_mut().for_each(|w| *w = 0);
            if !self.augment(slot) {
                return false;
            }
        }
        true
    }

    fn augment(&mut self, slot: usize) -> bool {
        let anchor = self.image[self.slot_pos[slot]];
        let words = self.used.len();
        for i in 0..words {
            let mut free = self.host.row(anchor)[i] & !self.used[i] & !self.visited[i];
            while free != 0 {
                let b = free.trailing_zeros() as usize;
                free &= free - 1;
                let h = i * 64 + b;
                if self.visited[i] >> b & 1 == 1 {
                    continue;
                }
                self.visited[i] |= 1 << b;
                let holder = self.slot_of_host[h];
                if holder == NONE || self.augment(holder) {
                    self.slot_of_host[h] = slot;
                    self.host_of_slot[slot] = h;
                    return true;
                }
            }
        }
        false
    }

    fn certificate(&self) -> Vec<usize> {
        let pattern = self.pattern;
        let mut map = vec![NONE; pattern.order];
        for (pos, &v) in pattern.skeleton.iter().enumerate() {
            map[v] = self.image[pos];
        }
        let mut slot = 0;
        for leaves in &pattern.leaves {
            for &leaf in leaves {
                map[leaf] = self.host_of_slot[slot];
                slot += 1;
            }
        }
        map
    }
}
