//! The individual statements, each turned into zero or more citations.

use std::collections::BTreeMap;

use super::arith::{choose2, frobenius_rep, frobenius_rep3};
use super::{Citation, Statement};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::tree::{max_degree_vertex_has_distance3, Tree, TreeFamily};
use crate::turan;
use crate::witness::{Claim, Construction, LeftGraph};

/// One argument of `r(., .)` with the structural facts the statements test.
pub(super) struct Side {
    pub label: LeftGraph,
    /// The tree, identified with a named family where possible.
    family: Option<TreeFamily>,
    m: u64,
    delta: u64,
    connected: bool,
    path: bool,
    star: bool,
    tprime: bool,
    tstar: bool,
    /// Every maximum-degree vertex has a vertex at distance 3.
    dist3: bool,
    certs: BTreeMap<u64, u64>,
}

impl Side {
    pub fn from_family(family: &TreeFamily) -> Result<Side> {
        family.validate()?;
        if family.order() < 2 {
            return Err(Error::Domain("Ramsey bounds need trees with at least one edge".into()));
        }
        let family = family.clone().identify()?;
        let m = family.order() as u64;
        let delta = family.max_degree()? as u64;
        let (path, star, tprime, tstar, dist3) = match &family {
            TreeFamily::Path(_) => (true, m <= 3, m == 4, m == 5, m >= 6),
            TreeFamily::Star(_) => (m <= 3, true, false, false, false),
            TreeFamily::TPrime(_) => (m == 4, false, true, false, false),
            TreeFamily::TStar(_) => (m == 5, false, false, true, m >= 6),
            TreeFamily::Explicit(t) => (false, false, false, false, max_degree_vertex_has_distance3(t.graph())),
        };
        Ok(Side {
            label: LeftGraph::Tree(family.clone()),
            family: Some(family),
            m,
            delta,
            connected: true,
            path,
            star,
            tprime,
            tstar,
            dist3,
            certs: BTreeMap::new(),
        })
    }

    pub fn from_graph(graph: &Graph, certs: BTreeMap<u64, u64>) -> Result<Side> {
        if graph.is_tree() {
            let family = TreeFamily::Explicit(Tree::new(graph.clone())?);
            return Ok(Side {
                certs,
                ..Side::from_family(&family)?
            });
        }
        Ok(Side {
            label: LeftGraph::Connected(graph.clone()),
            family: None,
            m: graph.order() as u64,
            delta: graph.max_degree() as u64,
            connected: graph.is_connected(),
            path: false,
            star: false,
            tprime: false,
            tstar: false,
            dist3: max_degree_vertex_has_distance3(graph),
            certs,
        })
    }

    fn memberships(&self) -> Vec<TreeFamily> {
        let m = self.m as usize;
        let mut out = Vec::new();
        if self.path {
            out.push(TreeFamily::Path(m));
        }
        if self.star {
            out.push(TreeFamily::Star(m));
        }
        if self.tprime {
            out.push(TreeFamily::TPrime(m));
        }
        if self.tstar {
            out.push(TreeFamily::TStar(m));
        }
        out
    }

    /// Smallest known upper bound on `ex(p; self)`.
    pub fn ex_upper_at(&self, p: u64) -> Result<Option<u64>> {
        let mut best = self.certs.get(&p).copied();
        for family in self.memberships() {
            match turan::ex_upper(p, &family) {
                Ok(v) => best = Some(best.map_or(v, |b| b.min(v))),
                Err(Error::Domain(_) | Error::InvalidArgument(_)) => {}
                Err(e) => return Err(e),
            }
        }
        Ok(best)
    }

    /// Whether `2 ex(p; self) <= twice` (or `<` when `strict`) is known.
    fn ex_within(&self, p: u64, twice: u64, strict: bool) -> Result<bool> {
        Ok(match self.ex_upper_at(p)? {
            Some(e) if strict => 2 * e < twice,
            Some(e) => 2 * e <= twice,
            None => false,
        })
    }
}

fn claim(g: &Side, t: &Side) -> Option<Claim> {
    Some(Claim {
        left: g.label.clone(),
        right: t.family.clone()?,
    })
}

fn push(out: &mut Vec<Citation>, c: Citation) {
    let duplicate = out
        .iter()
        .any(|x| x.id == c.id && x.params == c.params && x.lower == c.lower && x.upper == c.upper);
    if !duplicate {
        out.push(c);
    }
}

pub(super) fn collect(out: &mut Vec<Citation>, a: &Side, b: &Side) -> Result<()> {
    symmetric(out, a, b);
    oriented(out, a, b)?;
    oriented(out, b, a)?;
    counting(out, a, b)
}

fn symmetric(out: &mut Vec<Citation>, a: &Side, b: &Side) {
    let (d1, d2) = (a.delta, b.delta);
    if d1 >= 2 && d2 >= 2 {
        let odd = (d1 - 1) * (d2 - 1) % 2;
        push(
            out,
            Citation::new(
                Statement::DegreeParity,
                format!(
                    "d1 = {d1} >= 2, d2 = {d2} >= 2, (d1-1)(d2-1) {}",
                    if odd == 1 { "odd" } else { "even" }
                ),
                &[("d1", d1), ("d2", d2)],
            )
            .lower(d1 + d2 - odd)
            .witness(
                Construction::RegularDegreeGap {
                    d1: d1 as usize,
                    d2: d2 as usize,
                },
                claim(a, b),
            ),
        );
    }

    let (m, n) = (a.m.min(b.m), a.m.max(b.m));
    if a.star && b.star && m >= 3 {
        let v = if m * n % 2 == 1 { m + n - 3 } else { m + n - 2 };
        let quote = format!(
            "m, n >= 3, mn = {} {}",
            m * n,
            if m * n % 2 == 1 { "odd" } else { "even" }
        );
        push(
            out,
            Citation::new(Statement::StarStar, quote, &[("m", m), ("n", n)]).exact(v),
        );
    }
    if a.tprime && b.tprime && m >= 5 {
        let (v, quote) = if (n - 3) % (m - 1) == 0 {
            (m + n - 3, "n >= m >= 5, m-1 | n-3")
        } else if m == n && m % 2 == 0 {
            (m + n - 5, "m = n even")
        } else {
            (m + n - 4, "n >= m >= 5, otherwise")
        };
        push(
            out,
            Citation::new(Statement::BroomBroom, quote, &[("m", m), ("n", n)]).exact(v),
        );
    }
}

/// Parameters of `n = k(m-1) + b = q(m-2) + a`.
struct Residues {
    k: u64,
    b: u64,
    q: u64,
    a: u64,
}

impl Residues {
    fn new(m: u64, n: u64) -> Self {
        Residues {
            k: n / (m - 1),
            b: n % (m - 1),
            q: n / (m - 2),
            a: n % (m - 2),
        }
    }

    /// The first of the five residue conditions that holds, if `b != 3`.
    fn condition(&self, m: u64, n: u64) -> Option<&'static str> {
        let Residues { k, b, a, .. } = *self;
        if b == 3 {
            None
        } else if matches!(b, 1 | 2 | 4) {
            Some("(i) b in {1, 2, 4}")
        } else if b == 0 && k >= 3 {
            Some("(ii) b = 0 and k >= 3")
        } else if n >= (m - 3) * (m - 3) + 2 {
            Some("(iii) n >= (m-3)^2 + 2")
        } else if n + b * (m - 2) + 1 >= m * m {
            Some("(iv) n >= m^2 - 1 - b(m-2)")
        } else if a >= 3 && n + (m - 1) >= (a - 3) * (m - 1) + 4 {
            Some("(v) a >= 3 and n >= (a-4)(m-1) + 4")
        } else {
            None
        }
    }

    fn params(&self, m: u64, n: u64) -> [(&'static str, u64); 6] {
        [
            ("m", m),
            ("n", n),
            ("k", self.k),
            ("b", self.b),
            ("q", self.q),
            ("a", self.a),
        ]
    }
}

fn oriented(out: &mut Vec<Citation>, g: &Side, t: &Side) -> Result<()> {
    let (m, n) = (g.m, t.m);
    let mn = [("m", m), ("n", n)];

    if m >= n {
        push(
            out,
            Citation::new(Statement::OrderBound, format!("|G| = {m} >= |T| = {n}"), &mn)
                .lower(m)
                .witness(Construction::Clique { size: m as usize - 1 }, claim(g, t)),
        );
    }

    let (d1, d2) = (g.delta, t.delta);
    if g.connected && d1 >= 2 && d2 >= 2 {
        let params = [("m", m), ("d1", d1), ("d2", d2)];
        if d1 < d2 && d2 <= m {
            push(
                out,
                Citation::new(Statement::TwinCliquesDegree, "G connected, d1 < d2 <= m", &params)
                    .lower(2 * d2 - 1)
                    .witness(Construction::TwinCliques { d2: d2 as usize }, claim(g, t)),
            );
        }
        if d2 > m {
            let reason = if (d1 + d2 - m) % 2 == 0 {
                Some("d2 > m and 2 | d1+d2-m")
            } else if d1 + 1 != m {
                Some("d2 > m and d1 != m-1")
            } else if t.dist3 {
                Some("d2 > m and every max-degree vertex of the right graph has a vertex at distance 3")
            } else {
                None
            };
            if let Some(reason) = reason {
                let recipe = Construction::CliquePlusRegular {
                    d1: d1 as usize,
                    d2: d2 as usize,
                    m: m as usize,
                };
                push(
                    out,
                    Citation::new(Statement::CliquePlusRegularDegree, reason, &params)
                        .lower(d1 + d2)
                        .witness(recipe, claim(g, t)),
                );
            }
        }
    }

    if g.connected && m >= 5 && n >= 5 && (t.star || t.tprime || t.tstar) {
        if let Some((x, y)) = frobenius_rep(m - 1, m - 2, m + n - 5) {
            let recipe = Construction::CliqueUnion {
                m: m as usize,
                n: n as usize,
                x: x as usize,
                y: y as usize,
            };
            push(
                out,
                Citation::new(
                    Statement::CliqueUnionLower,
                    format!("m, n >= 5, m+n-5 = {x}(m-1) + {y}(m-2)"),
                    &[("m", m), ("n", n), ("x", x), ("y", y)],
                )
                .lower(m + n - 4)
                .witness(recipe, claim(g, t)),
            );
        }
    }

    if g.star && t.tprime && n > m && m >= 4 {
        let even = m * (n - 1) % 2 == 0;
        let (v, quote) = if even {
            (m + n - 3, "n > m >= 4, 2 | m(n-1)")
        } else {
            (m + n - 4, "n > m >= 4, m(n-1) odd")
        };
        push(out, Citation::new(Statement::StarBroom, quote, &mn).exact(v));
    }

    if t.tstar && m == n {
        same_order_tstar(out, g, t)?;
    }
    if t.tstar && n > m {
        against_tstar(out, g, t)?;
    }
    if t.tprime && n > m && m >= 6 {
        against_broom(out, g, t)?;
    }
    if t.star && g.family.is_some() && m >= 3 {
        against_star(out, g, t);
    }
    Ok(())
}

fn same_order_tstar(out: &mut Vec<Citation>, g: &Side, t: &Side) -> Result<()> {
    let n = t.m;
    let params = [("n", n)];
    if g.star && n >= 5 {
        push(
            out,
            Citation::new(Statement::SameOrderStarTStar, "n >= 5", &params).exact(2 * n - 3),
        );
    }
    if !g.connected || n < 6 {
        return Ok(());
    }
    let p = 2 * n - 5;
    let mut c = Citation::new(
        Statement::SameOrderTwoCliques,
        format!("n = {n} >= 6, G connected"),
        &params,
    )
    .lower(p)
    .witness(Construction::TwoCliquesBelowOrder { n: n as usize }, claim(g, t));
    if g.ex_within(p, 2 * (n * n - 5 * n + 4), true)? {
        c.quote = format!(
            "n = {n} >= 6, G connected, ex({p}; G) < n^2-5n+4 = {}",
            n * n - 5 * n + 4
        );
        c = c.upper(p);
    }
    push(out, c);
    if n >= 8 && (g.path || g.tprime || g.tstar) {
        push(
            out,
            Citation::new(Statement::SameOrderTStar, "n >= 8, G in {P_n, T'_n, T*_n}", &params).exact(p),
        );
    }
    Ok(())
}

fn against_tstar(out: &mut Vec<Citation>, g: &Side, t: &Side) -> Result<()> {
    let (m, n) = (g.m, t.m);
    if m < 5 {
        return Ok(());
    }
    let mn = [("m", m), ("n", n)];
    let named4 = g.path || g.star || g.tprime || g.tstar;
    let named3 = g.path || g.tprime || g.tstar;

    if (n - 3) % (m - 1) == 0 {
        let k = (n - 3) / (m - 1);
        let p = m + n - 3;
        let via = if named4 {
            "G in {P, K_{1,m-1}, T', T*}"
        } else {
            "ex(m+n-3; G) <= (m-2)(m+n-3)/2"
        };
        if named4 || (g.connected && g.ex_within(p, (m - 2) * p, false)?) {
            push(
                out,
                Citation::new(
                    Statement::TStarDivisible,
                    format!("n > m >= 5, n-3 = {k}(m-1), {via}"),
                    &[("m", m), ("n", n), ("k", k)],
                )
                .exact(p)
                .witness(
                    Construction::EqualCliques {
                        m: m as usize,
                        n: n as usize,
                    },
                    claim(g, t),
                ),
            );
        }
        return Ok(());
    }
    if m < 7 {
        return Ok(());
    }

    let p = m + n - 4;
    let hyp = g.connected && g.ex_within(p, (m - 2) * p, false)?;
    if named4 || hyp {
        push(
            out,
            Citation::new(Statement::TStarCountingUpper, "n > m >= 7, m-1 ∤ n-3", &mn).upper(p),
        );
    }
    let res = Residues::new(m, n);
    if named3 || hyp {
        if let Some((x, y)) = frobenius_rep(m - 1, m - 2, m + n - 5) {
            let recipe = Construction::CliqueUnion {
                m: m as usize,
                n: n as usize,
                x: x as usize,
                y: y as usize,
            };
            push(
                out,
                Citation::new(
                    Statement::TStarCliqueUnion,
                    format!("n > m >= 7, m-1 ∤ n-3, m+n-5 = {x}(m-1) + {y}(m-2)"),
                    &[("m", m), ("n", n), ("x", x), ("y", y)],
                )
                .exact(p)
                .witness(recipe, claim(g, t)),
            );
        }
        if let Some(cond) = res.condition(m, n) {
            let Some((x, y)) = frobenius_rep(m - 1, m - 2, m + n - 5) else {
                return Err(Error::Inconsistent(format!(
                    "residue condition {cond} holds for m={m}, n={n} but m+n-5 has no clique split"
                )));
            };
            let recipe = Construction::CliqueUnion {
                m: m as usize,
                n: n as usize,
                x: x as usize,
                y: y as usize,
            };
            push(
                out,
                Citation::new(
                    Statement::TStarResidueConditions,
                    format!("n > m >= 7, {cond}"),
                    &res.params(m, n),
                )
                .exact(p)
                .witness(recipe, claim(g, t)),
            );
        }
    }

    if g.star {
        push(
            out,
            Citation::new(Statement::TStarDegreeGap, "n > m >= 7, m-1 ∤ n-3, G = K_{1,m-1}", &mn).exact(p),
        );
    }
    if (g.tprime || g.tstar) && n == m + 3 {
        push(
            out,
            Citation::new(Statement::TStarDegreeGap, "n = m+3, G in {T'_m, T*_m}", &mn).exact(2 * m - 1),
        );
    }
    if g.tprime {
        push(
            out,
            Citation::new(Statement::TStarDegreeGap, "n > m >= 7, m-1 ∤ n-3, G = T'_m", &mn)
                .lower(m + n - 5)
                .upper(p),
        );
    }
    if g.tstar {
        push(
            out,
            Citation::new(Statement::TStarDegreeGap, "n > m >= 7, m-1 ∤ n-3, G = T*_m", &mn)
                .lower(m + n - 6)
                .upper(p),
        );
    }

    let Residues { k, b, .. } = res;
    if b != 3 && m <= 2 * k + b && k + b <= m + 2 && (g.path || g.tstar || hyp) {
        push(
            out,
            Citation::new(
                Statement::TStarShiftedCliques,
                format!("n = {k}(m-1) + {b}, b != 3, (m-b)/2 <= k <= m+2-b"),
                &[("m", m), ("n", n), ("k", k), ("b", b)],
            )
            .lower(m + n - 5)
            .upper(p)
            .witness(
                Construction::ShiftedCliqueUnion {
                    m: m as usize,
                    n: n as usize,
                },
                claim(g, t),
            ),
        );
    }
    Ok(())
}

fn against_broom(out: &mut Vec<Citation>, g: &Side, t: &Side) -> Result<()> {
    let (m, n) = (g.m, t.m);
    let mn = [("m", m), ("n", n)];
    let named = g.path || g.tstar;

    if (n - 3) % (m - 1) == 0 {
        let k = (n - 3) / (m - 1);
        let p = m + n - 3;
        // the proof works from (m-2)(m+n-3)/2, which is weaker than the stated hypothesis
        let via = if named {
            "G in {T*_m, P_m}"
        } else {
            "ex(m+n-3; G) <= (m-2)(m+n-3)/2"
        };
        if named || (g.connected && g.ex_within(p, (m - 2) * p, false)?) {
            push(
                out,
                Citation::new(
                    Statement::BroomDivisible,
                    format!("n > m >= 6, n-3 = {k}(m-1), {via}"),
                    &[("m", m), ("n", n), ("k", k)],
                )
                .exact(p)
                .witness(
                    Construction::EqualCliques {
                        m: m as usize,
                        n: n as usize,
                    },
                    claim(g, t),
                ),
            );
        }
        return Ok(());
    }

    let p = m + n - 4;
    let hyp = named || (g.connected && g.ex_within(p, (m - 2) * p, true)?);
    if hyp {
        push(
            out,
            Citation::new(Statement::BroomCountingUpper, "n > m >= 6, m-1 ∤ n-3", &mn).upper(p),
        );
    }
    if g.tstar && n == m + 1 {
        push(
            out,
            Citation::new(Statement::BroomCliqueUnion, "G = T*_m, n = m+1", &mn).exact(2 * m - 3),
        );
    }
    if g.tstar && n >= m + 3 {
        push(
            out,
            Citation::new(Statement::BroomCliqueUnion, "G = T*_m, n >= m+3", &mn)
                .lower(m + n - 5)
                .upper(p),
        );
    }
    if !hyp {
        return Ok(());
    }
    if let Some((x, y)) = frobenius_rep(m - 1, m - 2, m + n - 5) {
        let recipe = Construction::CliqueUnion {
            m: m as usize,
            n: n as usize,
            x: x as usize,
            y: y as usize,
        };
        push(
            out,
            Citation::new(
                Statement::BroomCliqueUnion,
                format!("n > m >= 6, m-1 ∤ n-3, m+n-5 = {x}(m-1) + {y}(m-2)"),
                &[("m", m), ("n", n), ("x", x), ("y", y)],
            )
            .exact(p)
            .witness(recipe, claim(g, t)),
        );
    }
    let res = Residues::new(m, n);
    if let Some(cond) = res.condition(m, n) {
        let Some((x, y)) = frobenius_rep(m - 1, m - 2, m + n - 5) else {
            return Err(Error::Inconsistent(format!(
                "residue condition {cond} holds for m={m}, n={n} but m+n-5 has no clique split"
            )));
        };
        let recipe = Construction::CliqueUnion {
            m: m as usize,
            n: n as usize,
            x: x as usize,
            y: y as usize,
        };
        push(
            out,
            Citation::new(
                Statement::BroomResidueConditions,
                format!("n > m >= 6, {cond}"),
                &res.params(m, n),
            )
            .exact(p)
            .witness(recipe, claim(g, t)),
        );
    }
    Ok(())
}

fn against_star(out: &mut Vec<Citation>, g: &Side, t: &Side) {
    let (m, n) = (g.m, t.m);
    if (n - 2) % (m - 1) == 0 {
        let k = (n - 2) / (m - 1);
        push(
            out,
            Citation::new(
                Statement::StarDivisible,
                format!("m >= 3, n-2 = {k}(m-1)"),
                &[("m", m), ("n", n), ("k", k)],
            )
            .exact(m + n - 2),
        );
        return;
    }
    let (k, b) = (n / (m - 1), n % (m - 1));
    if !g.star && k >= 1 && b != 2 {
        let params = [("m", m), ("n", n), ("k", k), ("b", b)];
        let c = Citation::new(
            Statement::StarResidue,
            format!("T_m not a star, n = {k}(m-1) + {b}, b != 2"),
            &params,
        );
        if k + b >= m {
            push(
                out,
                Citation {
                    quote: format!("{}, k >= m-b", c.quote),
                    ..c
                }
                .exact(m + n - 3),
            );
        } else {
            push(out, c.upper(m + n - 3));
        }
    }
    if !g.star && n >= m && m >= 5 {
        let (q, a) = (n / (m - 2), n % (m - 2));
        if q >= 1 && (2..=m - 3).contains(&a) && n + 3 * (m - 1) >= a * (m - 1) + 3 {
            push(
                out,
                Citation::new(
                    Statement::StarCliqueUnion,
                    format!("n >= m >= 3, m-1 ∤ n-2, n = {q}(m-2) + {a}, n >= (a-3)(m-1) + 3"),
                    &[("m", m), ("n", n), ("q", q), ("a", a)],
                )
                .exact(m + n - 3)
                .witness(
                    Construction::StarCliqueUnion {
                        m: m as usize,
                        n: n as usize,
                    },
                    claim(g, t),
                ),
            );
        }
    }
    if g.tstar && n > m && m >= 5 {
        let mn = [("m", m), ("n", n)];
        match frobenius_rep3(m - 1, m - 2, 2 * (m - 3), m + n - 4) {
            Some((x, y, z)) => {
                let recipe = Construction::CliqueBipartiteUnion {
                    m: m as usize,
                    n: n as usize,
                    x: x as usize,
                    y: y as usize,
                    z: z as usize,
                };
                push(
                    out,
                    Citation::new(
                        Statement::StarTStarBipartite,
                        format!("n > m >= 5, m-1 ∤ n-2, m+n-4 = {x}(m-1) + {y}(m-2) + {z}*2(m-3)"),
                        &[("m", m), ("n", n), ("x", x), ("y", y), ("z", z)],
                    )
                    .exact(m + n - 3)
                    .witness(recipe, claim(g, t)),
                );
            }
            None => push(
                out,
                Citation::new(Statement::StarTStarBipartite, "n > m >= 5, m-1 ∤ n-2", &mn)
                    .lower(m + n - 4)
                    .upper(m + n - 3),
            ),
        }
    }
}

/// First `p` from the current lower bound up to `m + n` where the Turán numbers
/// leave too few edges for a graph to avoid both sides.
fn counting(out: &mut Vec<Citation>, a: &Side, b: &Side) -> Result<()> {
    let start = out.iter().filter_map(|c| c.lower).max().unwrap_or(1).max(a.m).max(b.m);
    for p in start..=a.m + b.m {
        let (Some(e1), Some(e2)) = (a.ex_upper_at(p)?, b.ex_upper_at(p)?) else {
            continue;
        };
        if e1 + e2 < choose2(p) {
            push(
                out,
                Citation::new(
                    Statement::CountingBound,
                    format!("ex({p}; G) + ex({p}; T) <= {e1} + {e2} < C({p}, 2) = {}", choose2(p)),
                    &[("p", p), ("ex_left", e1), ("ex_right", e2)],
                )
                .upper(p),
            );
            break;
        }
    }
    Ok(())
}
