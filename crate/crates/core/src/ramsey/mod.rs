//! Exact values and bounds for `r(G, T)`.
//!
//! Every applicable statement contributes a [`Citation`] carrying a lower bound,
//! an upper bound, or both. The result is the intersection of all of them; an
//! empty intersection is reported as [`Error::Inconsistent`].

mod arith;
mod rules;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{ex_brute, SearchBudget};
use crate::tree::TreeFamily;
use crate::witness::{Claim, Construction, LeftGraph};

pub use arith::{clique_union_lower, counting_upper_bound, degree_lower_bound, frobenius_rep, frobenius_rep3};

use rules::Side;

/// The statements the engine knows, named by what they assert.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Statement {
    /// `r(G, T) >= max(|G|, |T|)` via a clique on one vertex fewer.
    OrderBound,
    /// `d1 + d2 - [(d1-1)(d2-1) odd]` via a regular graph.
    DegreeParity,
    /// `2 d2 - 1` when `d1 < d2 <= m`, via two cliques.
    TwinCliquesDegree,
    /// `d1 + d2` when `d2 > m`, via a clique plus a regular graph.
    CliquePlusRegularDegree,
    /// `r <= p` when the two Turán numbers at `p` sum below `C(p, 2)`.
    CountingBound,
    /// `m + n - 4` when `m + n - 5` splits into parts `m-1` and `m-2`.
    CliqueUnionLower,
    /// Two stars.
    StarStar,
    /// Two brooms `T'`.
    BroomBroom,
    /// A star against a larger broom.
    StarBroom,
    /// `2n - 5` for equal orders against `T*_n`: lower bound from `2K_{n-3}`,
    /// equality when `ex(2n-5; G) < n^2 - 5n + 4`.
    SameOrderTwoCliques,
    /// `r(P_n, T*_n) = r(T'_n, T*_n) = r(T*_n, T*_n) = 2n - 5` for `n >= 8`.
    #[serde(rename = "same-order-tstar")]
    SameOrderTStar,
    /// `r(K_{1,n-1}, T*_n) = 2n - 3`.
    #[serde(rename = "same-order-star-tstar")]
    SameOrderStarTStar,
    /// `m + n - 3` against `T*_n` when `m-1 | n-3`.
    #[serde(rename = "tstar-divisible")]
    TStarDivisible,
    /// `r(G_m, T*_n) <= m + n - 4` when `m-1 ∤ n-3`.
    #[serde(rename = "tstar-counting-upper")]
    TStarCountingUpper,
    /// `m + n - 4` against `T*_n` when the clique union fits.
    #[serde(rename = "tstar-clique-union")]
    TStarCliqueUnion,
    /// `m + n - 4` against `T*_n` under one of five residue conditions.
    #[serde(rename = "tstar-residue-conditions")]
    TStarResidueConditions,
    /// Degree-gap values against `T*_n`: stars exactly, brooms and `T*` within intervals.
    #[serde(rename = "tstar-degree-gap")]
    TStarDegreeGap,
    /// `m + n - 5 <= r <= m + n - 4` against `T*_n` via a shifted clique union.
    #[serde(rename = "tstar-shifted-cliques")]
    TStarShiftedCliques,
    /// `m + n - 3` against `T'_n` when `m-1 | n-3`.
    BroomDivisible,
    /// `r(G_m, T'_n) <= m + n - 4` when `m-1 ∤ n-3`.
    BroomCountingUpper,
    /// `T*_m` against `T'_n`, and `m + n - 4` when the clique union fits.
    BroomCliqueUnion,
    /// `m + n - 4` against `T'_n` under one of five residue conditions.
    BroomResidueConditions,
    /// `r(T_m, K_{1,n-1}) = m + n - 2` when `m-1 | n-2`.
    StarDivisible,
    /// `r(T_m, K_{1,n-1}) <= m + n - 3` for non-star trees when `n mod (m-1) != 2`.
    StarResidue,
    /// `r(T_m, K_{1,n-1}) = m + n - 3` via cliques of orders `m-1` and `m-2`.
    StarCliqueUnion,
    /// `r(T*_m, K_{1,n-1}) ∈ {m+n-4, m+n-3}`, the larger when a clique/bipartite union fits.
    #[serde(rename = "star-tstar-bipartite")]
    StarTStarBipartite,
    /// A caller-supplied Turán bound for an explicit graph.
    CertifiedTuran,
    /// Trees with a vertex adjacent to at least `⌊(m-1)/2⌋` leaves satisfy the
    /// average-degree Turán bound. Vocabulary only; never emitted.
    SparseTreeClass,
}

/// A witness recipe together with the orientation it certifies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessPlan {
    #[serde(flatten)]
    pub construction: Construction,
    pub claim: Claim,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Citation {
    pub id: Statement,
    /// The hypothesis as instantiated for this pair.
    pub quote: String,
    pub params: BTreeMap<&'static str, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessPlan>,
}

impl Citation {
    fn new(id: Statement, quote: impl Into<String>, params: &[(&'static str, u64)]) -> Self {
        Citation {
            id,
            quote: quote.into(),
            params: params.iter().copied().collect(),
            lower: None,
            upper: None,
            witness: None,
        }
    }

    fn lower(mut self, v: u64) -> Self {
        self.lower = Some(v);
        self
    }

    fn upper(mut self, v: u64) -> Self {
        self.upper = Some(v);
        self
    }

    fn exact(self, v: u64) -> Self {
        self.lower(v).upper(v)
    }

    fn witness(mut self, construction: Construction, claim: Option<Claim>) -> Self {
        self.witness = claim.map(|claim| WitnessPlan { construction, claim });
        self
    }

    pub fn is_equality(&self) -> bool {
        self.lower.is_some() && self.lower == self.upper
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RamseyBounds {
    pub left: LeftGraph,
    pub right: TreeFamily,
    pub lower: u64,
    /// `None` when no statement bounds the value from above.
    pub upper: Option<u64>,
    pub exact: bool,
    pub provenance: Vec<Citation>,
    /// A recipe whose graph has `lower - 1` vertices, when one of the lower bounds has one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower_witness: Option<WitnessPlan>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// A claimed upper bound `ex(p; G) <= edges` for an explicit graph `G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TuranCertificate {
    pub p: u64,
    pub edges: u64,
}

/// Bounds on `r(left, right)` for two trees.
pub fn ramsey_bounds(left: &TreeFamily, right: &TreeFamily) -> Result<RamseyBounds> {
    let a = Side::from_family(left)?;
    let b = Side::from_family(right)?;
    let mut citations = Vec::new();
    rules::collect(&mut citations, &a, &b)?;
    combine(LeftGraph::Tree(left.clone()), right.clone(), citations)
}

/// Bounds on `r(G, right)` for an explicit connected graph `G`, using
/// caller-supplied Turán certificates for the statements whose hypotheses are
/// conditions on `ex(p; G)`. A certificate at `p <= budget.max_order` for a tree
/// `G` is checked by exhaustive search; the rest are trusted and recorded.
pub fn ramsey_bounds_for_graph(
    left: &Graph,
    certificates: &[TuranCertificate],
    right: &TreeFamily,
    budget: &SearchBudget,
) -> Result<RamseyBounds> {
    if !left.is_connected() || left.order() < 2 {
        return Err(Error::InvalidArgument(
            "left graph must be connected with at least 2 vertices".into(),
        ));
    }
    let mut recorded = Vec::new();
    let mut certs = BTreeMap::new();
    for cert in certificates {
        let verified = if left.is_tree() && cert.p <= budget.max_order as u64 {
            let truth = ex_brute(cert.p as usize, left, budget)?;
            if truth > cert.edges {
                return Err(Error::InvalidArgument(format!(
                    "certificate ex({}; G) <= {} is false: exhaustive search finds {truth}",
                    cert.p, cert.edges
                )));
            }
            1
        } else {
            0
        };
        let quote = format!("ex({}; G) <= {}", cert.p, cert.edges);
        recorded.push(Citation::new(
            Statement::CertifiedTuran,
            quote,
            &[("p", cert.p), ("edges", cert.edges), ("verified", verified)],
        ));
        let slot = certs.entry(cert.p).or_insert(cert.edges);
        *slot = (*slot).min(cert.edges);
    }
    let a = Side::from_graph(left, certs)?;
    let b = Side::from_family(right)?;
    rules::collect(&mut recorded, &a, &b)?;
    combine(a.label.clone(), right.clone(), recorded)
}

fn combine(left: LeftGraph, right: TreeFamily, provenance: Vec<Citation>) -> Result<RamseyBounds> {
    let lower = provenance.iter().filter_map(|c| c.lower).max().unwrap_or(1);
    let upper = provenance.iter().filter_map(|c| c.upper).min();
    if let Some(u) = upper {
        if lower > u {
            let detail: Vec<String> = provenance
                .iter()
                .filter(|c| c.lower == Some(lower) || c.upper == Some(u))
                .map(|c| format!("{:?} {:?}", c.id, c.params))
                .collect();
            return Err(Error::Inconsistent(format!(
                "r({left}, {right}): lower bound {lower} exceeds upper bound {u} ({})",
                detail.join("; ")
            )));
        }
    }
    let exact = upper == Some(lower);
    // prefer the recipe of a statement that pins the value
    let at_lower = || provenance.iter().filter(|c| c.lower == Some(lower));
    let lower_witness = at_lower()
        .filter(|c| c.is_equality())
        .chain(at_lower())
        .find_map(|c| c.witness.clone());
    let note = (!exact).then(|| "no exact theorem applies".to_string());
    Ok(RamseyBounds {
        left,
        right,
        lower,
        upper,
        exact,
        provenance,
        lower_witness,
        note,
    })
}
