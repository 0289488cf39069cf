//! Exhaustive checks of open inequalities over all trees of a given order.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::{ex_brute, ramsey_brute, SearchBudget};
use crate::error::{Error, Result};
use crate::format::to_graph6;
use crate::graph::Graph;
use crate::tree::{alpha2, enumerate_trees, is_isomorphic_tree, TreeFamily};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Conjecture {
    /// `ex(p; T) <= ex(p; T*_n)` for every tree `T` on `n` vertices other than
    /// the star and `T'_n`.
    TStarMaximizesEx,
    /// `alpha2(T1) < alpha2(T2)` implies `ex(p; T1) <= ex(p; T2)`.
    ExMonotoneInAlpha2,
    /// `r(T, T*_n) = 2n - 5` for every non-star tree `T` on `n` vertices.
    SameOrderTStarRamsey,
}

impl Conjecture {
    pub const ALL: [Conjecture; 3] = [
        Conjecture::TStarMaximizesEx,
        Conjecture::ExMonotoneInAlpha2,
        Conjecture::SameOrderTStarRamsey,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Conjecture::TStarMaximizesEx => "tstar-maximizes-ex",
            Conjecture::ExMonotoneInAlpha2 => "ex-monotone-in-alpha2",
            Conjecture::SameOrderTStarRamsey => "same-order-tstar-ramsey",
        }
    }
}

impl fmt::Display for Conjecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Conjecture {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl FromStr for Conjecture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Conjecture::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown conjecture `{s}`")))
    }
}

/// One instance checked. For pairwise checks `against` is the second tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRecord {
    pub conjecture: Conjecture,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    pub tree: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub against: Option<String>,
    pub value: u64,
    pub bound: u64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub conjecture: Conjecture,
    pub n: usize,
    pub p_max: usize,
    pub checked: usize,
    pub failures: usize,
    pub records: Vec<ScanRecord>,
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn realize(f: TreeFamily) -> Result<Graph> {
    f.realize()
}

/// Runs every instance of `which` on trees with `n` vertices and `n <= p <= p_max`.
/// Failures are reported in the records, never dropped.
pub fn scan_conjecture(which: Conjecture, n: usize, p_max: usize, budget: &SearchBudget) -> Result<ScanReport> {
    if n < 5 {
        return Err(Error::Domain(format!("scans need n >= 5, got {n}")));
    }
    let trees = enumerate_trees(n)?;
    let mut records = Vec::new();
    match which {
        Conjecture::TStarMaximizesEx => {
            let star = realize(TreeFamily::Star(n))?;
            let broom = realize(TreeFamily::TPrime(n))?;
            let tstar = realize(TreeFamily::TStar(n))?;
            let mut eligible = Vec::new();
            for t in &trees {
                if !is_isomorphic_tree(t, &star)? && !is_isomorphic_tree(t, &broom)? {
                    eligible.push(t);
                }
            }
            for p in n..=p_max {
                let bound = ex_brute(p, &tstar, budget)?;
                for t in &eligible {
                    let value = ex_brute(p, t, budget)?;
                    records.push(ScanRecord {
                        conjecture: which,
                        n,
                        p: Some(p),
                        tree: to_graph6(t),
                        against: Some(to_graph6(&tstar)),
                        value,
                        bound,
                        pass: value <= bound,
                    });
                }
            }
        }
        Conjecture::ExMonotoneInAlpha2 => {
            let alphas = trees.iter().map(alpha2).collect::<Result<Vec<_>>>()?;
            for p in n..=p_max {
                let ex = trees
                    .iter()
                    .map(|t| ex_brute(p, t, budget))
                    .collect::<Result<Vec<_>>>()?;
                for i in 0..trees.len() {
                    for j in 0..trees.len() {
                        if alphas[i] < alphas[j] {
                            records.push(ScanRecord {
                                conjecture: which,
                                n,
                                p: Some(p),
                                tree: to_graph6(&trees[i]),
                                against: Some(to_graph6(&trees[j])),
                                value: ex[i],
                                bound: ex[j],
                                pass: ex[i] <= ex[j],
                            });
                        }
                    }
                }
            }
        }
        Conjecture::SameOrderTStarRamsey => {
            let star = realize(TreeFamily::Star(n))?;
            let tstar = realize(TreeFamily::TStar(n))?;
            let bound = 2 * n as u64 - 5;
            for t in &trees {
                if is_isomorphic_tree(t, &star)? {
                    continue;
                }
                let value = ramsey_brute(t, &tstar, budget)?;
                records.push(ScanRecord {
                    conjecture: which,
                    n,
                    p: None,
                    tree: to_graph6(t),
                    against: Some(to_graph6(&tstar)),
                    value,
                    bound,
                    pass: value == bound,
                });
            }
        }
    }
    let failures = records.iter().filter(|r| !r.pass).count();
    Ok(ScanReport {
        conjecture: which,
        n,
        p_max,
        checked: records.len(),
        failures,
        records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for c in Conjecture::ALL {
            assert_eq!(c.name().parse::<Conjecture>().unwrap(), c);
        }
        assert!("not-a-conjecture".parse::<Conjecture>().is_err());
    }

    #[test]
    fn tstar_scan_at_order_six() {
        let report = scan_conjecture(Conjecture::TStarMaximizesEx, 6, 7, &SearchBudget::default()).unwrap();
        // six trees on six vertices, minus the star and the broom
        assert_eq!(report.checked, 4 * 2);
        assert!(report.passed());
    }
}
