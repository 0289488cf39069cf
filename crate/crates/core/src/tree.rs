//! The named tree families, canonical forms and small-order enumeration.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::format::{from_graph6, to_graph6};
use crate::graph::Graph;

/// Largest order accepted by [`enumerate_trees`].
pub const MAX_ENUMERATION_ORDER: usize = 10;

/// A graph known to be a tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree(Graph);

impl Tree {
    pub fn new(graph: Graph) -> Result<Self> {
        if !graph.is_tree() {
            return Err(Error::InvalidArgument(format!(
                "graph with {} vertices and {} edges is not a tree",
                graph.order(),
                graph.edge_count()
            )));
        }
        Ok(Tree(graph))
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Tree::new(Graph::from_edges(order, edges.iter().copied())?)
    }

    pub fn graph(&self) -> &Graph {
        &self.0
    }

    pub fn into_graph(self) -> Graph {
        self.0
    }

    pub fn order(&self) -> usize {
        self.0.order()
    }
}

/// Which tree a formula, search or witness is about.
///
/// * `Path(n)`: the path on `n >= 2` vertices.
/// * `Star(n)`: `K_{1,n-1}`, `n >= 2`.
/// * `TPrime(n)`: the unique tree on `n >= 4` vertices with maximum degree `n - 2`,
///   a star with one edge subdivided.
/// * `TStar(n)`: for `n >= 5`, the center `v0` joined to `v1..v_{n-3}` plus the
///   pendant path `v_{n-3} v_{n-2} v_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TreeFamily {
    Path(usize),
    Star(usize),
    TPrime(usize),
    TStar(usize),
    Explicit(Tree),
}

impl TreeFamily {
    pub fn order(&self) -> usize {
        match self {
            TreeFamily::Path(n) | TreeFamily::Star(n) | TreeFamily::TPrime(n) | TreeFamily::TStar(n) => *n,
            TreeFamily::Explicit(t) => t.order(),
        }
    }

    pub fn min_order(&self) -> usize {
        match self {
            TreeFamily::Path(_) | TreeFamily::Star(_) => 2,
            TreeFamily::TPrime(_) => 4,
            TreeFamily::TStar(_) => 5,
            TreeFamily::Explicit(_) => 1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.order() < self.min_order() {
            return Err(Error::InvalidArgument(format!(
                "{} needs at least {} vertices",
                self.name(),
                self.min_order()
            )));
        }
        Ok(())
    }

    pub fn name(&self) -> &'static str {
        match self {
            TreeFamily::Path(_) => "path",
            TreeFamily::Star(_) => "star",
            TreeFamily::TPrime(_) => "tprime",
            TreeFamily::TStar(_) => "tstar",
            TreeFamily::Explicit(_) => "g6",
        }
    }

    pub fn is_named(&self) -> bool {
        !matches!(self, TreeFamily::Explicit(_))
    }

    pub fn realize(&self) -> Result<Graph> {
        self.validate()?;
        let n = self.order();
        match self {
            TreeFamily::Path(_) => Graph::from_edges(n, (0..n - 1).map(|i| (i, i + 1))),
            TreeFamily::Star(_) => Graph::from_edges(n, (1..n).map(|i| (0, i))),
            TreeFamily::TPrime(_) => Graph::from_edges(n, (1..=n - 2).map(|i| (0, i)).chain([(n - 2, n - 1)])),
            TreeFamily::TStar(_) => {
                Graph::from_edges(n, (1..=n - 3).map(|i| (0, i)).chain([(n - 3, n - 2), (n - 2, n - 1)]))
            }
            TreeFamily::Explicit(t) => Ok(t.graph().clone()),
        }
    }

    pub fn max_degree(&self) -> Result<usize> {
        self.validate()?;
        Ok(match self {
            TreeFamily::Path(n) => (*n - 1).min(2),
            TreeFamily::Star(n) => n - 1,
            TreeFamily::TPrime(n) => n - 2,
            TreeFamily::TStar(n) => (n - 3).max(2),
            TreeFamily::Explicit(t) => t.graph().max_degree(),
        })
    }

    /// Maps an explicit tree to the named family it is isomorphic to, if any.
    /// Named families are returned unchanged.
    pub fn identify(self) -> Result<TreeFamily> {
        let TreeFamily::Explicit(tree) = &self else {
            return Ok(self);
        };
        let n = tree.order();
        let canon = canonical_form(tree.graph())?;
        let candidates = [
            TreeFamily::Star(n),
            TreeFamily::Path(n),
            TreeFamily::TPrime(n),
            TreeFamily::TStar(n),
        ];
        for family in candidates {
            if family.validate().is_ok() && canonical_form(&family.realize()?)? == canon {
                return Ok(family);
            }
        }
        Ok(self)
    }
}

impl fmt::Display for TreeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeFamily::Explicit(t) => write!(f, "g6:{}", to_graph6(t.graph())),
            named => write!(f, "{}:{}", named.name(), named.order()),
        }
    }
}

impl FromStr for TreeFamily {
    type Err = Error;

    /// Accepts `path:8`, `star:7`, `tprime:6`, `tstar:9`, or `g6:<graph6>` for an explicit tree.
    fn from_str(s: &str) -> Result<Self> {
        let (name, arg) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected `family:order` or `g6:<graph6>`, got `{s}`")))?;
        if matches!(name, "g6" | "graph6") {
            return Ok(TreeFamily::Explicit(Tree::new(from_graph6(arg)?)?));
        }
        let n: usize = arg
            .parse()
            .map_err(|_| Error::Parse(format!("bad order `{arg}` in `{s}`")))?;
        let family = match name.to_ascii_lowercase().as_str() {
            "path" | "p" => TreeFamily::Path(n),
            "star" | "k1" => TreeFamily::Star(n),
            "tprime" => TreeFamily::TPrime(n),
            "tstar" => TreeFamily::TStar(n),
            other => return Err(Error::Parse(format!("unknown tree family `{other}`"))),
        };
        family.validate()?;
        Ok(family)
    }
}

impl Serialize for TreeFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TreeFamily {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn bipartition(tree: &Graph) -> Result<(usize, usize)> {
    if !tree.is_tree() {
        return Err(Error::InvalidArgument("bipartition requires a tree".into()));
    }
    let even = tree
        .distances_from(0)
        .into_iter()
        .flatten()
        .filter(|d| d % 2 == 0)
        .count();
    Ok((even, tree.order() - even))
}

/// Size of the larger side of the tree's bipartition.
pub fn alpha2(tree: &Graph) -> Result<usize> {
    let (a, b) = bipartition(tree)?;
    Ok(a.max(b))
}

/// Both bipartition sizes, larger first.
pub fn bipartition_sizes(tree: &Graph) -> Result<(usize, usize)> {
    let (a, b) = bipartition(tree)?;
    Ok((a.max(b), a.min(b)))
}

/// True when every maximum-degree vertex has some vertex at distance exactly 3.
pub fn max_degree_vertex_has_distance3(tree: &Graph) -> bool {
    let delta = tree.max_degree();
    (0..tree.order())
        .filter(|&v| tree.degree(v) == delta)
        .all(|v| tree.distances_from(v).contains(&Some(3)))
}

/// Isomorphism-invariant string for a tree: the nested-parenthesis encoding
/// rooted at a centroid, minimized over the (at most two) centroids.
pub fn canonical_form(tree: &Graph) -> Result<String> {
    if !tree.is_tree() {
        return Err(Error::InvalidArgument("canonical form requires a tree".into()));
    }
    let n = tree.order();
    let adjacency: Vec<Vec<usize>> = (0..n).map(|v| tree.neighbors(v).collect()).collect();

    // Subtree sizes rooted at 0, via an explicit DFS order.
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0];
    parent[0] = 0;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in &adjacency[v] {
            if parent[w] == usize::MAX {
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let mut size = vec![1usize; n];
    for &v in order.iter().rev().filter(|&&v| v != 0) {
        size[parent[v]] += size[v];
    }
    let heaviest = |v: usize| {
        adjacency[v]
            .iter()
            .map(|&w| if parent[w] == v && w != 0 { size[w] } else { n - size[v] })
            .max()
            .unwrap_or(0)
    };
    let best = (0..n).map(heaviest).min().unwrap_or(0);
    (0..n)
        .filter(|&v| heaviest(v) == best)
        .map(|c| encode_rooted(&adjacency, c))
        .min()
        .ok_or_else(|| Error::InvalidArgument("empty tree".into()))
}

fn encode_rooted(adjacency: &[Vec<usize>], root: usize) -> String {
    fn go(adjacency: &[Vec<usize>], v: usize, from: usize) -> String {
        let mut children: Vec<String> = adjacency[v]
            .iter()
            .filter(|&&w| w != from)
            .map(|&w| go(adjacency, w, v))
            .collect();
        children.sort_unstable();
        let mut s = String::with_capacity(2 + children.iter().map(String::len).sum::<usize>());
        s.push('(');
        children.iter().for_each(|c| s.push_str(c));
        s.push(')');
        s
    }
    go(adjacency, root, usize::MAX)
}

/// Rebuilds a tree from a parenthesis encoding, numbering vertices in preorder.
fn decode_rooted(code: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut next = 0;
    for ch in code.chars() {
        match ch {
            '(' => {
                if let Some(&p) = stack.last() {
                    edges.push((p, next));
                }
                stack.push(next);
                next += 1;
            }
            ')' => {
                stack.pop().ok_or_else(|| Error::Parse("unbalanced tree code".into()))?;
            }
            _ => return Err(Error::Parse(format!("unexpected `{ch}` in tree code"))),
        }
    }
    Graph::from_edges(next, edges)
}

pub fn is_isomorphic_tree(a: &Graph, b: &Graph) -> Result<bool> {
    Ok(a.order() == b.order() && canonical_form(a)? == canonical_form(b)?)
}

/// One representative per isomorphism class of trees on `n` vertices,
/// ordered by canonical form, labelled in canonical preorder.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(Error::Capacity(format!(
            "tree enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}, got {n}"
        )));
    }
    let mut level: BTreeSet<String> = BTreeSet::from(["()".to_string()]);
    for _ in 1..n {
        let mut next = BTreeSet::new();
        for code in &level {
            let g = decode_rooted(code)?;
            let m = g.order();
            for v in 0..m {
                let grown = Graph::from_edges(m + 1, g.edges().chain([(v, m)]))?;
                next.insert(canonical_form(&grown)?);
            }
        }
        level = next;
    }
    level.iter().map(|code| decode_rooted(code)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_shapes() {
        let t8 = TreeFamily::TStar(8).realize().unwrap();
        let mut degrees = t8.degrees();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(degrees, vec![5, 2, 2, 1, 1, 1, 1, 1]);
        assert_eq!(t8.distances_from(0)[7], Some(3));

        let tp6 = TreeFamily::TPrime(6).realize().unwrap();
        assert_eq!((tp6.order(), tp6.max_degree()), (6, 4));

        let p4 = TreeFamily::Path(4).realize().unwrap();
        assert_eq!((p4.order(), p4.edge_count(), p4.max_degree()), (4, 3, 2));
    }

    #[test]
    fn family_order_limits() {
        assert!(TreeFamily::TStar(4).realize().is_err());
        assert!(TreeFamily::TPrime(3).realize().is_err());
        assert!(TreeFamily::Path(1).realize().is_err());
        assert!(TreeFamily::Star(2).realize().is_ok());
    }

    #[test]
    fn alpha2_examples() {
        assert_eq!(alpha2(&TreeFamily::Path(5).realize().unwrap()).unwrap(), 3);
        assert_eq!(alpha2(&TreeFamily::TStar(8).realize().unwrap()).unwrap(), 6);
        assert_eq!(alpha2(&TreeFamily::Star(6).realize().unwrap()).unwrap(), 5);
        assert!(alpha2(&Graph::complete(3).unwrap()).is_err());
    }

    #[test]
    fn tags_round_trip() {
        for tag in ["path:8", "star:7", "tprime:6", "tstar:9"] {
            let f: TreeFamily = tag.parse().unwrap();
            assert_eq!(f.to_string(), tag);
        }
        let explicit: TreeFamily = "g6:DhC".parse().unwrap();
        assert_eq!(explicit.order(), 5);
        assert_eq!(explicit.clone().identify().unwrap(), TreeFamily::Path(5));
        assert!("tstar:4".parse::<TreeFamily>().is_err());
        assert!("blob:4".parse::<TreeFamily>().is_err());
        assert!("g6:C~".parse::<TreeFamily>().is_err());
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| enumerate_trees(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
        assert!(enumerate_trees(0).is_err());
        assert!(enumerate_trees(11).is_err());
    }

    #[test]
    fn distance3_flag() {
        assert!(max_degree_vertex_has_distance3(
            &TreeFamily::TStar(9).realize().unwrap()
        ));
        assert!(!max_degree_vertex_has_distance3(
            &TreeFamily::TPrime(9).realize().unwrap()
        ));
        assert!(!max_degree_vertex_has_distance3(
            &TreeFamily::Star(9).realize().unwrap()
        ));
        // P5: the middle vertex has eccentricity 2
        assert!(!max_degree_vertex_has_distance3(
            &TreeFamily::Path(5).realize().unwrap()
        ));
        assert!(!max_degree_vertex_has_distance3(
            &TreeFamily::Path(4).realize().unwrap()
        ));
    }
}
