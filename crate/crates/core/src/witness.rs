//! Lower-bound witness graphs for Ramsey numbers.
//!
//! A witness `G` for the pair `(left, right)` contains no copy of `left` while its
//! complement contains no copy of `right`; it certifies `r(left, right) > |V(G)|`.

use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::embed::TreePattern;
use crate::error::{Error, Result};
use crate::expr::GraphExpr;
use crate::format::to_graph6;
use crate::graph::Graph;
use crate::tree::TreeFamily;

/// The graph a witness must avoid: a tree, or an arbitrary connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LeftGraph {
    Tree(TreeFamily),
    Connected(Graph),
}

impl LeftGraph {
    pub fn order(&self) -> usize {
        match self {
            LeftGraph::Tree(t) => t.order(),
            LeftGraph::Connected(g) => g.order(),
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        match self {
            LeftGraph::Tree(t) => t.realize(),
            LeftGraph::Connected(g) => Ok(g.clone()),
        }
    }
}

impl fmt::Display for LeftGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LeftGraph::Tree(t) => t.fmt(f),
            LeftGraph::Connected(g) => write!(f, "graph:{}", to_graph6(g)),
        }
    }
}

impl Serialize for LeftGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub left: LeftGraph,
    pub right: TreeFamily,
}

impl Claim {
    pub fn trees(left: TreeFamily, right: TreeFamily) -> Self {
        Claim {
            left: LeftGraph::Tree(left),
            right,
        }
    }
}

/// The proof recipes, each with the parameters that fix its multiplicities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "construction_id", content = "params", rename_all = "kebab-case")]
pub enum Construction {
    /// `K_size`.
    Clique { size: usize },
    /// A `(d1-1)`-regular graph on `d1+d2-1` vertices, or on `d1+d2-2` when
    /// `(d1-1)(d2-1)` is odd.
    RegularDegreeGap { d1: usize, d2: usize },
    /// `2 K_{d2-1}`.
    TwinCliques { d2: usize },
    /// `K_{m-1} ∪ H` with `H` `(d1-1)`-regular on `d1+d2-m` vertices when that is
    /// even, else `K_{m-2} ∪ H` with `H` on `d1+d2-m+1` vertices.
    CliquePlusRegular { d1: usize, d2: usize, m: usize },
    /// `2 K_{n-3}`; its complement `K_{n-3,n-3}` is too unbalanced for `T*_n`.
    TwoCliquesBelowOrder { n: usize },
    /// `x K_{m-1} ∪ y K_{m-2}` on `m+n-5` vertices.
    CliqueUnion { m: usize, n: usize, x: usize, y: usize },
    /// `(k+1) K_{m-1}` where `n-3 = k(m-1)`, on `m+n-4` vertices.
    EqualCliques { m: usize, n: usize },
    /// With `n = k(m-1)+b`: `(2k+b-m) K_{m-2} ∪ (m+2-b-k) K_{m-3}` on `m+n-6` vertices.
    ShiftedCliqueUnion { m: usize, n: usize },
    /// With `n = q(m-2)+a`: `(a-2) K_{m-1} ∪ (q-a+3) K_{m-2}` on `m+n-4` vertices.
    StarCliqueUnion { m: usize, n: usize },
    /// `x K_{m-1} ∪ y K_{m-2} ∪ z K_{m-3,m-3}` on `m+n-4` vertices.
    CliqueBipartiteUnion {
        m: usize,
        n: usize,
        x: usize,
        y: usize,
        z: usize,
    },
}

fn infeasible(msg: String) -> Error {
    Error::ConstructionInfeasible(msg)
}

impl Construction {
    pub fn id(&self) -> &'static str {
        match self {
            Construction::Clique { .. } => "clique",
            Construction::RegularDegreeGap { .. } => "regular-degree-gap",
            Construction::TwinCliques { .. } => "twin-cliques",
            Construction::CliquePlusRegular { .. } => "clique-plus-regular",
            Construction::TwoCliquesBelowOrder { .. } => "two-cliques-below-order",
            Construction::CliqueUnion { .. } => "clique-union",
            Construction::EqualCliques { .. } => "equal-cliques",
            Construction::ShiftedCliqueUnion { .. } => "shifted-clique-union",
            Construction::StarCliqueUnion { .. } => "star-clique-union",
            Construction::CliqueBipartiteUnion { .. } => "clique-bipartite-union",
        }
    }

    /// The graph expression, after checking the recipe's arithmetic side conditions.
    pub fn expr(&self) -> Result<GraphExpr> {
        use GraphExpr::*;
        match *self {
            Construction::Clique { size } => Ok(Complete(size)),
            Construction::RegularDegreeGap { d1, d2 } => {
                if d1 < 2 || d2 < 2 {
                    return Err(infeasible(format!("degrees must be >= 2, got {d1}, {d2}")));
                }
                let odd = (d1 - 1) * (d2 - 1) % 2 == 1;
                let order = if odd { d1 + d2 - 2 } else { d1 + d2 - 1 };
                Ok(Circulant(order, d1 - 1))
            }
            Construction::TwinCliques { d2 } => {
                if d2 < 2 {
                    return Err(infeasible(format!("twin cliques need d2 >= 2, got {d2}")));
                }
                Ok(GraphExpr::clique_union(&[(2, d2 - 1)]))
            }
            Construction::CliquePlusRegular { d1, d2, m } => {
                if d1 < 2 || m < 2 || d2 <= m || d1 > m - 1 {
                    return Err(infeasible(format!(
                        "need 2 <= d1 <= m-1 < m < d2, got d1={d1} d2={d2} m={m}"
                    )));
                }
                let base = d1 + d2 - m;
                let (clique, order) = if base % 2 == 0 {
                    (m - 1, base)
                } else {
                    (m - 2, base + 1)
                };
                Ok(DisjointUnion(vec![Complete(clique), Circulant(order, d1 - 1)]))
            }
            Construction::TwoCliquesBelowOrder { n } => {
                if n < 4 {
                    return Err(infeasible(format!("2K_(n-3) needs n >= 4, got {n}")));
                }
                Ok(GraphExpr::clique_union(&[(2, n - 3)]))
            }
            Construction::CliqueUnion { m, n, x, y } => {
                if m < 3 || m + n < 5 || (m - 1) * x + (m - 2) * y != m + n - 5 {
                    return Err(infeasible(format!("{x}*(m-1) + {y}*(m-2) != m+n-5 for m={m}, n={n}")));
                }
                Ok(GraphExpr::clique_union(&[(x, m - 1), (y, m - 2)]))
            }
            Construction::EqualCliques { m, n } => {
                if m < 2 || n < 3 || (n - 3) % (m - 1) != 0 {
                    return Err(infeasible(format!("m-1 must divide n-3, got m={m}, n={n}")));
                }
                Ok(GraphExpr::clique_union(&[((n - 3) / (m - 1) + 1, m - 1)]))
            }
            Construction::ShiftedCliqueUnion { m, n } => {
                if m < 4 {
                    return Err(infeasible(format!("shifted clique union needs m >= 4, got {m}")));
                }
                let (k, b) = (n / (m - 1), n % (m - 1));
                if 2 * k + b < m || b + k > m + 2 {
                    return Err(infeasible(format!(
                        "need (m-b)/2 <= k <= m+2-b, got m={m}, k={k}, b={b}"
                    )));
                }
                Ok(GraphExpr::clique_union(&[
                    (2 * k + b - m, m - 2),
                    (m + 2 - b - k, m - 3),
                ]))
            }
            Construction::StarCliqueUnion { m, n } => {
                if m < 5 {
                    return Err(infeasible(format!("star clique union needs m >= 5, got {m}")));
                }
                let (q, a) = (n / (m - 2), n % (m - 2));
                if !(2..=m - 3).contains(&a) || q + 3 < a {
                    return Err(infeasible(format!(
                        "need 2 <= a <= m-3 and q >= a-3, got m={m}, q={q}, a={a}"
                    )));
                }
                Ok(GraphExpr::clique_union(&[(a - 2, m - 1), (q + 3 - a, m - 2)]))
            }
            Construction::CliqueBipartiteUnion { m, n, x, y, z } => {
                if m < 4 || m + n < 4 || (m - 1) * x + (m - 2) * y + 2 * (m - 3) * z != m + n - 4 {
                    return Err(infeasible(format!(
                        "{x}*(m-1) + {y}*(m-2) + {z}*2(m-3) != m+n-4 for m={m}, n={n}"
                    )));
                }
                let mut parts = match GraphExpr::clique_union(&[(x, m - 1), (y, m - 2)]) {
                    DisjointUnion(parts) => parts,
                    other => vec![other],
                };
                if z > 0 {
                    parts.push(ScaledCopies(z, Box::new(CompleteBipartite(m - 3, m - 3))));
                }
                Ok(DisjointUnion(parts))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub graph: Graph,
    pub construction: Construction,
    pub claim: Claim,
    /// `|V(graph)| + 1`.
    pub implied_lower: usize,
}

pub fn build_witness(construction: Construction, claim: Claim) -> Result<Witness> {
    claim.right.validate()?;
    let graph = construction.expr()?.eval()?;
    let implied_lower = graph.order() + 1;
    Ok(Witness {
        graph,
        construction,
        claim,
        implied_lower,
    })
}

/// How an avoidance check was settled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Every component is smaller than the forbidden connected graph.
    ComponentOrder,
    /// The host's maximum degree is below the forbidden graph's.
    DegreeBound,
    EmbeddingSearch,
    /// A general connected graph in a large component; not decidable here.
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AvoidanceCheck {
    pub avoided: bool,
    pub method: Method,
    /// On failure, `embedding[v]` is the host vertex of pattern vertex `v`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub embedding: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub passed: bool,
    pub left: AvoidanceCheck,
    pub right: AvoidanceCheck,
}

fn avoid(host: &Graph, forbidden: &Graph, is_tree: bool) -> AvoidanceCheck {
    let largest = host.components().iter().map(Vec::len).max().unwrap_or(0);
    if largest < forbidden.order() && forbidden.is_connected() {
        return AvoidanceCheck {
            avoided: true,
            method: Method::ComponentOrder,
            embedding: None,
        };
    }
    if host.max_degree() < forbidden.max_degree() {
        return AvoidanceCheck {
            avoided: true,
            method: Method::DegreeBound,
            embedding: None,
        };
    }
    if !is_tree {
        return AvoidanceCheck {
            avoided: false,
            method: Method::Undecided,
            embedding: None,
        };
    }
    match TreePattern::new(forbidden).map(|p| p.embed_in(host)) {
        Ok(found) => AvoidanceCheck {
            avoided: found.is_none(),
            method: Method::EmbeddingSearch,
            embedding: found,
        },
        Err(_) => AvoidanceCheck {
            avoided: false,
            method: Method::Undecided,
            embedding: None,
        },
    }
}

/// Checks both halves of a witness exhaustively. Failure is a report, not an error;
/// errors only arise when a claimed family cannot be realized.
pub fn validate_witness(w: &Witness) -> Result<ValidationReport> {
    let left = w.claim.left.graph()?;
    let right = w.claim.right.realize()?;
    let left_check = avoid(&w.graph, &left, left.is_tree());
    let right_check = avoid(&w.graph.complement(), &right, true);
    Ok(ValidationReport {
        passed: left_check.avoided && right_check.avoided,
        left: left_check,
        right: right_check,
    })
}

/// Search-only variant of the left check, ignoring the structural shortcuts.
pub fn left_avoided_by_search(w: &Witness) -> Result<bool> {
    let left = w.claim.left.graph()?;
    Ok(!TreePattern::new(&left)?.contains_in(&w.graph))
}

/// The JSON sidecar written next to an exported witness.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessSidecar<'a> {
    #[serde(flatten)]
    pub construction: &'a Construction,
    pub claim: &'a Claim,
    pub order: usize,
    pub implied_lower: usize,
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub validated: Option<bool>,
}

impl Witness {
    pub fn sidecar(&self, validated: Option<bool>) -> WitnessSidecar<'_> {
        WitnessSidecar {
            construction: &self.construction,
            claim: &self.claim,
            order: self.graph.order(),
            implied_lower: self.implied_lower,
            graph6: to_graph6(&self.graph),
            validated,
        }
    }

    /// Maximum degree of the complement, the quantity most recipes control.
    pub fn complement_max_degree(&self) -> usize {
        let n = self.graph.order();
        (0..n).map(|v| n - 1 - self.graph.degree(v)).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_examples() {
        let w = build_witness(
            Construction::TwoCliquesBelowOrder { n: 8 },
            Claim::trees(TreeFamily::Path(8), TreeFamily::TStar(8)),
        )
        .unwrap();
        assert_eq!((w.graph.order(), w.implied_lower), (10, 11));
        assert_eq!(w.graph.components().len(), 2);

        let w = build_witness(
            Construction::CliqueUnion { m: 6, n: 8, x: 1, y: 1 },
            Claim::trees(TreeFamily::Path(6), TreeFamily::TStar(8)),
        )
        .unwrap();
        assert_eq!((w.graph.order(), w.implied_lower), (9, 10));

        let w = build_witness(
            Construction::CliqueBipartiteUnion {
                m: 7,
                n: 10,
                x: 0,
                y: 1,
                z: 1,
            },
            Claim::trees(TreeFamily::TStar(7), TreeFamily::Star(10)),
        )
        .unwrap();
        assert_eq!((w.graph.order(), w.implied_lower), (13, 14));
        assert_eq!(w.graph.edge_count(), 10 + 16);
    }

    #[test]
    fn shifted_clique_union_order() {
        // m = 7, n = 20: k = 3, b = 2, so K_5 plus 4 K_4 on m+n-6 = 21 vertices
        let g = Construction::ShiftedCliqueUnion { m: 7, n: 20 }
            .expr()
            .unwrap()
            .eval()
            .unwrap();
        assert_eq!(g.order(), 21);
        assert_eq!(g.components().len(), 5);
    }

    #[test]
    fn infeasible_multiplicities() {
        let err = Construction::CliqueUnion { m: 6, n: 8, x: 2, y: 0 }.expr();
        assert!(matches!(err, Err(Error::ConstructionInfeasible(_))));
        // m = 7, n = 8: k = 1, b = 2 gives 2k+b < m
        let err = Construction::ShiftedCliqueUnion { m: 7, n: 8 }.expr();
        assert!(matches!(err, Err(Error::ConstructionInfeasible(_))));
        let err = Construction::EqualCliques { m: 6, n: 9 }.expr();
        assert!(matches!(err, Err(Error::ConstructionInfeasible(_))));
    }

    #[test]
    fn validation_examples() {
        let claim = Claim::trees(TreeFamily::Path(8), TreeFamily::TStar(8));
        let w = build_witness(Construction::TwoCliquesBelowOrder { n: 8 }, claim).unwrap();
        let report = validate_witness(&w).unwrap();
        assert!(report.passed);
        assert_eq!(report.left.method, Method::ComponentOrder);
        assert_eq!(report.right.method, Method::EmbeddingSearch);

        // complement K_{5,5} does contain T*_6
        let claim = Claim::trees(TreeFamily::Path(6), TreeFamily::TStar(6));
        let w = Witness {
            graph: GraphExpr::clique_union(&[(2, 5)]).eval().unwrap(),
            construction: Construction::TwoCliquesBelowOrder { n: 8 },
            claim,
            implied_lower: 11,
        };
        let report = validate_witness(&w).unwrap();
        assert!(!report.passed);
        let map = report.right.embedding.unwrap();
        let complement = w.graph.complement();
        let t6 = TreeFamily::TStar(6).realize().unwrap();
        assert!(t6.edges().all(|(u, v)| complement.has_edge(map[u], map[v])));
    }

    #[test]
    fn general_connected_left_uses_component_order() {
        let k6 = Graph::complete(6).unwrap();
        let w = build_witness(
            Construction::CliqueUnion { m: 6, n: 8, x: 1, y: 1 },
            Claim {
                left: LeftGraph::Connected(k6),
                right: TreeFamily::TStar(8),
            },
        )
        .unwrap();
        let report = validate_witness(&w).unwrap();
        assert!(report.passed);
        assert_eq!(report.left.method, Method::ComponentOrder);
    }
}
