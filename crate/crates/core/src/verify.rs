//! Sweeps that cross-check the closed forms, the bounds engine, the witness
//! recipes and the oracles against each other.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::{ex_brute, ramsey_brute, SearchBudget};
use crate::ramsey::{counting_upper_bound, degree_lower_bound, frobenius_rep, frobenius_rep3, ramsey_bounds};
use crate::tree::{max_degree_vertex_has_distance3, TreeFamily};
use crate::turan::{ex_family, ex_upper};
use crate::witness::{build_witness, validate_witness, Claim, Construction};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub what: &'static str,
    pub checked: usize,
    pub mismatches: Vec<String>,
}

impl VerifyReport {
    fn new(what: &'static str) -> Self {
        VerifyReport {
            what,
            checked: 0,
            mismatches: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.mismatches.push(detail());
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// The four named families of order `n` that exist.
pub fn named_families(n: usize) -> Vec<TreeFamily> {
    [
        TreeFamily::Path(n),
        TreeFamily::Star(n),
        TreeFamily::TPrime(n),
        TreeFamily::TStar(n),
    ]
    .into_iter()
    .filter(|f| f.validate().is_ok())
    .collect()
}

/// Closed-form Turán numbers against exhaustive search for `n_min <= n <= n_max`
/// and `n <= p <= p_max`, over every family with a closed form at `n`.
pub fn verify_ex(n_min: usize, n_max: usize, p_max: usize, budget: &SearchBudget) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("ex");
    for n in n_min..=n_max {
        for family in named_families(n) {
            for p in n..=p_max {
                let formula = match ex_family(p as u64, &family) {
                    Ok(v) => v.edges,
                    Err(Error::Domain(_)) => continue,
                    Err(e) => return Err(e),
                };
                let brute = ex_brute(p, &family.realize()?, budget)?;
                report.check(formula == brute, || {
                    format!("ex({p}; {family}): formula {formula}, search {brute}")
                });
            }
        }
    }
    Ok(report)
}

/// Engine invariants over all named-family pairs with orders in `min_order..=max_order`.
/// Exact values up to `oracle_cap` are also compared with exhaustive search.
pub fn verify_ramsey(
    min_order: usize,
    max_order: usize,
    oracle_cap: u64,
    budget: &SearchBudget,
) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("ramsey");
    let families: Vec<TreeFamily> = (min_order..=max_order).flat_map(named_families).collect();
    for a in &families {
        for b in &families {
            let r = match ramsey_bounds(a, b) {
                Ok(r) => r,
                Err(e @ Error::Inconsistent(_)) => {
                    report.check(false, || format!("r({a}, {b}): {e}"));
                    continue;
                }
                Err(e) => return Err(e),
            };
            report.check(r.upper.is_none_or(|u| r.lower <= u), || {
                format!("r({a}, {b}): lower {} > upper {:?}", r.lower, r.upper)
            });
            if !r.exact {
                continue;
            }
            let v = r.lower;
            let (m, n) = (a.order() as u64, b.order() as u64);
            let (d1, d2) = (a.max_degree()? as u64, b.max_degree()? as u64);
            if d1 >= 2 && d2 >= 2 {
                let dist3 = max_degree_vertex_has_distance3(&b.realize()?);
                let floor = degree_lower_bound(d1, d2, m, dist3);
                report.check(v >= floor, || format!("r({a}, {b}) = {v} below degree bound {floor}"));
            }
            for p in m.max(n)..=m + n {
                let (Ok(e1), Ok(e2)) = (ex_upper(p, a), ex_upper(p, b)) else {
                    continue;
                };
                if let Some(p) = counting_upper_bound(e1, e2, p) {
                    report.check(v <= p, || format!("r({a}, {b}) = {v} above counting bound {p}"));
                    break;
                }
            }
            if let Some(plan) = &r.lower_witness {
                let w = build_witness(plan.construction, plan.claim.clone())?;
                let ok = w.graph.order() as u64 == v - 1 && validate_witness(&w)?.passed;
                report.check(ok, || {
                    format!("r({a}, {b}) = {v}: witness {:?} fails", plan.construction)
                });
            }
            if v <= oracle_cap {
                let brute = ramsey_brute(&a.realize()?, &b.realize()?, budget)?;
                report.check(brute == v, || format!("r({a}, {b}): engine {v}, search {brute}"));
            }
        }
    }
    Ok(report)
}

/// Every recipe with satisfiable side conditions on the grid
/// `m_min <= m <= m_max`, `m < n <= n_max`, validated against the pairs it is meant for.
pub fn witness_grid(m_min: usize, m_max: usize, n_max: usize) -> Vec<(Construction, Claim)> {
    use TreeFamily::*;
    let mut out = Vec::new();
    for m in m_min..=m_max {
        for n in m + 1..=n_max {
            let lefts = [Path(m), Star(m), TPrime(m), TStar(m)];
            if (n - 3) % (m - 1) == 0 {
                for left in &lefts {
                    for right in [TStar(n), TPrime(n)] {
                        out.push((Construction::EqualCliques { m, n }, Claim::trees(left.clone(), right)));
                    }
                }
            }
            if let Some((x, y)) = frobenius_rep((m - 1) as u64, (m - 2) as u64, (m + n - 5) as u64) {
                let recipe = Construction::CliqueUnion {
                    m,
                    n,
                    x: x as usize,
                    y: y as usize,
                };
                for left in &lefts {
                    for right in [Star(n), TPrime(n), TStar(n)] {
                        out.push((recipe, Claim::trees(left.clone(), right)));
                    }
                }
            }
            let recipe = Construction::ShiftedCliqueUnion { m, n };
            if recipe.expr().is_ok() {
                for left in [Path(m), TStar(m)] {
                    out.push((recipe, Claim::trees(left, TStar(n))));
                }
            }
            let recipe = Construction::StarCliqueUnion { m, n };
            if recipe.expr().is_ok() {
                for left in [Path(m), TPrime(m), TStar(m)] {
                    out.push((recipe, Claim::trees(left, Star(n))));
                }
            }
            if let Some((x, y, z)) =
                frobenius_rep3((m - 1) as u64, (m - 2) as u64, 2 * (m - 3) as u64, (m + n - 4) as u64)
            {
                let recipe = Construction::CliqueBipartiteUnion {
                    m,
                    n,
                    x: x as usize,
                    y: y as usize,
                    z: z as usize,
                };
                out.push((recipe, Claim::trees(TStar(m), Star(n))));
            }
        }
    }
    out
}

pub fn verify_witnesses(m_min: usize, m_max: usize, n_max: usize) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("witnesses");
    for (recipe, claim) in witness_grid(m_min, m_max, n_max) {
        let w = build_witness(recipe, claim.clone())?;
        let passed = validate_witness(&w)?.passed;
        report.check(passed, || {
            format!("{:?} for ({}, {}) fails validation", recipe, claim.left, claim.right)
        });
    }
    Ok(report)
}

/// Representability above the coprime threshold, and agreement with a direct
/// two-variable scan below it.
pub fn verify_frobenius(max_part: u64, max_target: u64) -> VerifyReport {
    let mut report = VerifyReport::new("frobenius");
    for a in 1..=max_part {
        for b in a + 1..=max_part {
            if gcd(a, b) != 1 {
                continue;
            }
            for n in 0..=max_target {
                let rep = frobenius_rep(a, b, n);
                if let Some((x, y)) = rep {
                    report.check(a * x + b * y == n, || format!("{a}*{x} + {b}*{y} != {n}"));
                }
                if n >= (a - 1) * (b - 1) {
                    report.check(rep.is_some(), || {
                        format!("{n} = {a}x + {b}y has no solution above the threshold")
                    });
                } else {
                    let direct = (0..=n / a).any(|x| (0..=n / b).any(|y| a * x + b * y == n));
                    report.check(rep.is_some() == direct, || {
                        format!("{n} = {a}x + {b}y: scan says {direct}")
                    });
                }
            }
        }
    }
    report
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
