//! Closed-form Turán numbers `ex(p; T)` for paths, stars, `T'` and `T*`.
//!
//! Every value records the formula branch it came from. Expressions of the form
//! `X / 2` are exact in their branch; halving checks parity and reports an
//! [`Error::Inconsistent`] instead of flooring, which surfaces dispatch mistakes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tree::TreeFamily;

const MAX_PARAM: u64 = 1 << 30;

/// `p = k * modulus + r` with `0 <= r < modulus`, plus the auxiliary residue
/// `t = (n - 3) mod (r + 2)` used by the middle residue classes of `T*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub p: u64,
    pub modulus: u64,
    pub k: u64,
    pub r: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<u64>,
}

impl Decomposition {
    pub fn new(p: u64, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::Domain("decomposition modulus must be positive".into()));
        }
        Ok(Decomposition {
            p,
            modulus,
            k: p / modulus,
            r: p % modulus,
            t: None,
        })
    }

    fn with_t(mut self, n: u64) -> Self {
        self.t = Some((n - 3) % (self.r + 2));
        self
    }
}

/// Which published result a Turán value comes from, named by the tree it covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TuranSource {
    /// Paths, all residues.
    PathTuran,
    /// Stars, all residues.
    StarTuran,
    /// `T'`, all residues.
    #[serde(rename = "tprime-turan")]
    TPrimeTuran,
    /// `T*` for the residues `r ∈ {0, 1, n-5, n-4, n-3, n-2}`.
    #[serde(rename = "tstar-extreme-residues")]
    TStarExtremeResidues,
    /// `T*` for `n >= 11` and `2 <= r <= n-6`.
    #[serde(rename = "tstar-middle-residues")]
    TStarMiddleResidues,
    /// `T*` for `6 <= n <= 10`.
    #[serde(rename = "tstar-small-order")]
    TStarSmallOrder,
    /// Clique-union lower bound and average-degree upper bound, any family.
    GenericBounds,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalValue {
    pub family: TreeFamily,
    pub n: u64,
    pub p: u64,
    pub edges: u64,
    pub branch: &'static str,
    pub citation: TuranSource,
    pub decomposition: Decomposition,
}

fn halve(twice: i64, context: &str) -> Result<u64> {
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::Inconsistent(format!(
            "{context}: numerator {twice} is not a non-negative even number"
        )));
    }
    Ok((twice / 2) as u64)
}

fn floor_half(x: i64) -> u64 {
    x.max(0) as u64 / 2
}

fn check_range(p: u64, n: u64) -> Result<()> {
    if p > MAX_PARAM || n > MAX_PARAM {
        return Err(Error::Domain(format!("parameters above {MAX_PARAM} are not supported")));
    }
    Ok(())
}

/// `((n-2)p - r(n-1-r)) / 2`, the edge count of `k K_{n-1} ∪ K_r`.
pub fn clique_cover_edges(p: u64, n: u64) -> Result<u64> {
    check_range(p, n)?;
    if n < 2 {
        return Err(Error::Domain("clique cover needs n >= 2".into()));
    }
    let d = Decomposition::new(p, n - 1)?;
    let (p, n, r) = (p as i64, n as i64, d.r as i64);
    halve((n - 2) * p - r * (n - 1 - r), "clique cover")
}

fn value(
    family: TreeFamily,
    p: u64,
    edges: u64,
    branch: &'static str,
    citation: TuranSource,
    d: Decomposition,
) -> ExtremalValue {
    ExtremalValue {
        n: family.order() as u64,
        family,
        p,
        edges,
        branch,
        citation,
        decomposition: d,
    }
}

/// `ex(p; P_n) = k C(n-1, 2) + C(r, 2)` for `p >= n >= 3`.
pub fn ex_path(p: u64, n: u64) -> Result<ExtremalValue> {
    check_range(p, n)?;
    if n < 3 || p < n {
        return Err(Error::Domain(format!(
            "path formula needs p >= n >= 3, got p={p}, n={n}"
        )));
    }
    let d = Decomposition::new(p, n - 1)?;
    let edges = d.k * ((n - 1) * (n - 2) / 2) + d.r * d.r.saturating_sub(1) / 2;
    debug_assert_eq!(Ok(edges), clique_cover_edges(p, n));
    Ok(value(
        TreeFamily::Path(n as usize),
        p,
        edges,
        "k*C(n-1,2)+C(r,2)",
        TuranSource::PathTuran,
        d,
    ))
}

/// `ex(p; K_{1,n-1}) = ⌊(n-2)p/2⌋` for `p >= n-1 >= 1`.
pub fn ex_star(p: u64, n: u64) -> Result<ExtremalValue> {
    check_range(p, n)?;
    if n < 2 || p + 1 < n {
        return Err(Error::Domain(format!(
            "star formula needs p >= n-1 >= 1, got p={p}, n={n}"
        )));
    }
    let d = Decomposition::new(p, n - 1)?;
    let edges = (n - 2) * p / 2;
    Ok(value(
        TreeFamily::Star(n as usize),
        p,
        edges,
        "floor((n-2)p/2)",
        TuranSource::StarTuran,
        d,
    ))
}

/// `ex(p; T'_n)` for `p >= n >= 5`.
pub fn ex_tprime(p: u64, n: u64) -> Result<ExtremalValue> {
    check_range(p, n)?;
    if n < 5 || p < n {
        return Err(Error::Domain(format!("T' formula needs p >= n >= 5, got p={p}, n={n}")));
    }
    let d = Decomposition::new(p, n - 1)?;
    let family = TreeFamily::TPrime(n as usize);
    let (pi, ni, r) = (p as i64, n as i64, d.r as i64);
    if n >= 7 && (2..=n - 4).contains(&d.r) {
        let edges = floor_half((ni - 2) * (pi - 1) - r - 1);
        Ok(value(
            family,
            p,
            edges,
            "floor(((n-2)(p-1)-r-1)/2)",
            TuranSource::TPrimeTuran,
            d,
        ))
    } else {
        let edges = halve((ni - 2) * pi - r * (ni - 1 - r), "T' clique cover")?;
        Ok(value(
            family,
            p,
            edges,
            "((n-2)p-r(n-1-r))/2",
            TuranSource::TPrimeTuran,
            d,
        ))
    }
}

fn tstar_extreme(p: u64, n: u64, d: Decomposition) -> Result<ExtremalValue> {
    let family = TreeFamily::TStar(n as usize);
    let (pi, ni, r) = (p as i64, n as i64, d.r as i64);
    if n > 6 && d.r == n - 5 {
        let edges = halve((ni - 2) * (pi - 2), "T* residue n-5")? + 1;
        Ok(value(
            family,
            p,
            edges,
            "(n-2)(p-2)/2+1",
            TuranSource::TStarExtremeResidues,
            d,
        ))
    } else {
        let edges = halve((ni - 2) * pi - r * (ni - 1 - r), "T* clique cover")?;
        Ok(value(
            family,
            p,
            edges,
            "((n-2)p-r(n-1-r))/2",
            TuranSource::TStarExtremeResidues,
            d,
        ))
    }
}

fn tstar_middle(p: u64, n: u64, d: Decomposition) -> Result<ExtremalValue> {
    let d = d.with_t(n);
    let family = TreeFamily::TStar(n as usize);
    let t = d.t.unwrap_or(0);
    let (pi, ni, r, ti) = (p as i64, n as i64, d.r as i64, t as i64);
    if d.r >= 4 && (2..=d.r - 1).contains(&t) {
        let edges = floor_half((ni - 2) * (pi - 1) - 2 * r - ti - 3);
        Ok(value(
            family,
            p,
            edges,
            "floor(((n-2)(p-1)-2r-t-3)/2)",
            TuranSource::TStarMiddleResidues,
            d,
        ))
    } else {
        let edges = halve((ni - 2) * (pi - 1) - ti * (r + 2 - ti) - r - 1, "T* middle residue")?;
        Ok(value(
            family,
            p,
            edges,
            "((n-2)(p-1)-t(r+2-t)-r-1)/2",
            TuranSource::TStarMiddleResidues,
            d,
        ))
    }
}

fn tstar_small(p: u64, n: u64, d: Decomposition) -> Result<ExtremalValue> {
    let family = TreeFamily::TStar(n as usize);
    let (pi, ni, r) = (p as i64, n as i64, d.r as i64);
    let source = TuranSource::TStarSmallOrder;
    let cover = || halve((ni - 2) * pi - r * (ni - 1 - r), "T* small-order clique cover");
    match n {
        6 | 7 => Ok(value(family, p, cover()?, "((n-2)p-r(n-1-r))/2", source, d)),
        8 | 9 if d.r == n - 5 => {
            let edges = halve((ni - 2) * (pi - 2), "T* small-order residue n-5")? + 1;
            Ok(value(family, p, edges, "(n-2)(p-2)/2+1", source, d))
        }
        8 | 9 => Ok(value(family, p, cover()?, "((n-2)p-r(n-1-r))/2", source, d)),
        10 => match d.r {
            5 => Ok(value(family, p, 4 * p - 7, "4p-7", source, d)),
            4 => Ok(value(family, p, 4 * p - 9, "4p-9", source, d)),
            _ => Ok(value(
                family,
                p,
                4 * p - halve(r * (9 - r), "T*_10 residue")?,
                "4p-r(9-r)/2",
                source,
                d,
            )),
        },
        _ => Err(Error::Domain(format!(
            "small-order T* formula covers 6 <= n <= 10, got {n}"
        ))),
    }
}

/// `ex(p; T*_n)` for `p >= n >= 6`.
///
/// Orders 6..=10 use the small-order table for every residue; from 11 on the
/// residue class selects between the extreme-residue and middle-residue formulas.
pub fn ex_tstar(p: u64, n: u64) -> Result<ExtremalValue> {
    check_range(p, n)?;
    if n < 6 || p < n {
        return Err(Error::Domain(format!("T* formula needs p >= n >= 6, got p={p}, n={n}")));
    }
    let d = Decomposition::new(p, n - 1)?;
    let extreme = d.r <= 1 || d.r + 5 >= n;
    if n <= 10 {
        let v = tstar_small(p, n, d)?;
        if cfg!(debug_assertions) && extreme {
            let other = tstar_extreme(p, n, d)?;
            if other.edges != v.edges {
                return Err(Error::Inconsistent(format!(
                    "T* formulas disagree at p={p}, n={n}: {} vs {}",
                    v.edges, other.edges
                )));
            }
        }
        Ok(v)
    } else if extreme {
        tstar_extreme(p, n, d)
    } else {
        tstar_middle(p, n, d)
    }
}

/// Closed form for any named family in its valid range.
pub fn ex_family(p: u64, family: &TreeFamily) -> Result<ExtremalValue> {
    family.validate()?;
    let n = family.order() as u64;
    match family {
        TreeFamily::Path(_) => ex_path(p, n),
        TreeFamily::Star(_) => ex_star(p, n),
        TreeFamily::TPrime(_) => ex_tprime(p, n),
        TreeFamily::TStar(_) => ex_tstar(p, n),
        TreeFamily::Explicit(_) => Err(Error::Domain("no closed form for an explicit tree".into())),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GenericBounds {
    pub lower: u64,
    pub upper: u64,
    pub sharpened: bool,
}

/// Lower bound from `k K_{m-1} ∪ K_r` and the average-degree upper bound
/// `⌊(m-2)p/2⌋`, sharpened to `⌊(m-2)(p-1)/2⌋` when `m-1 ∤ p` for paths, `T'` and `T*`.
pub fn ex_generic_bounds(p: u64, family: &TreeFamily) -> Result<GenericBounds> {
    family.validate()?;
    let m = family.order() as u64;
    check_range(p, m)?;
    if m < 5 || p < m {
        return Err(Error::Domain(format!(
            "generic bounds need p >= m >= 5, got p={p}, m={m}"
        )));
    }
    if !family.is_named() {
        return Err(Error::Domain(
            "generic upper bound is only known for the named families".into(),
        ));
    }
    let lower = clique_cover_edges(p, m)?;
    let sharpened = !p.is_multiple_of(m - 1) && !matches!(family, TreeFamily::Star(_));
    let upper = if sharpened {
        (m - 2) * (p - 1) / 2
    } else {
        (m - 2) * p / 2
    };
    Ok(GenericBounds {
        lower,
        upper,
        sharpened,
    })
}

/// Best known upper bound on `ex(p; family)`: the closed form when one exists,
/// otherwise the generic average-degree bound.
pub fn ex_upper(p: u64, family: &TreeFamily) -> Result<u64> {
    match ex_family(p, family) {
        Ok(v) => Ok(v.edges),
        Err(Error::Domain(_)) => Ok(ex_generic_bounds(p, family)?.upper),
        Err(e) => Err(e),
    }
}
