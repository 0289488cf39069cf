use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

/// Symbolic description of the clique-union style graphs used as extremal
/// constructions and Ramsey witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphExpr {
    Complete(usize),
    CompleteBipartite(usize, usize),
    DisjointUnion(Vec<GraphExpr>),
    Complement(Box<GraphExpr>),
    /// `(order, degree)`, realized by [`Graph::circulant_regular`].
    Circulant(usize, usize),
    /// `count` vertex-disjoint copies.
    ScaledCopies(usize, Box<GraphExpr>),
}

impl GraphExpr {
    /// `x K_a ∪ y K_b ∪ ...`, skipping zero multiplicities.
    pub fn clique_union(parts: &[(usize, usize)]) -> GraphExpr {
        GraphExpr::DisjointUnion(
            parts
                .iter()
                .filter(|&&(count, _)| count > 0)
                .map(|&(count, size)| GraphExpr::ScaledCopies(count, Box::new(GraphExpr::Complete(size))))
                .collect(),
        )
    }

    /// Vertex count the expression denotes, computed without building it.
    pub fn order(&self) -> Result<usize> {
        let overflow = || Error::Capacity("vertex count overflows".into());
        Ok(match self {
            GraphExpr::Complete(n) | GraphExpr::Circulant(n, _) => *n,
            GraphExpr::CompleteBipartite(a, b) => a.checked_add(*b).ok_or_else(overflow)?,
            GraphExpr::DisjointUnion(parts) => parts
                .iter()
                .try_fold(0usize, |acc, p| acc.checked_add(p.order()?).ok_or_else(overflow))?,
            GraphExpr::Complement(inner) => inner.order()?,
            GraphExpr::ScaledCopies(count, inner) => count.checked_mul(inner.order()?).ok_or_else(overflow)?,
        })
    }

    pub fn eval(&self) -> Result<Graph> {
        let order = self.order()?;
        if order > MAX_ORDER {
            return Err(Error::Capacity(format!(
                "expression denotes {order} vertices, limit is {MAX_ORDER}"
            )));
        }
        match self {
            GraphExpr::Complete(n) => Graph::complete(*n),
            GraphExpr::CompleteBipartite(a, b) => Graph::complete_bipartite(*a, *b),
            GraphExpr::DisjointUnion(parts) => {
                let graphs = parts.iter().map(GraphExpr::eval).collect::<Result<Vec<_>>>()?;
                Graph::disjoint_union(&graphs)
            }
            GraphExpr::Complement(inner) => Ok(inner.eval()?.complement()),
            GraphExpr::Circulant(p, k) => Graph::circulant_regular(*p, *k),
            GraphExpr::ScaledCopies(count, inner) => {
                let g = inner.eval()?;
                Graph::disjoint_union(&vec![g; *count])
            }
        }
    }
}

pub fn eval(expr: &GraphExpr) -> Result<Graph> {
    expr.eval()
}
