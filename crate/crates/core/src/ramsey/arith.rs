//! Small integer helpers shared by the Ramsey rules.

/// Nonnegative `(x, y)` with `a x + b y = n` and `x` as small as possible.
pub fn frobenius_rep(a: u64, b: u64, n: u64) -> Option<(u64, u64)> {
    if a == 0 || b == 0 {
        return None;
    }
    (0..=n / a)
        .find(|x| (n - a * x).is_multiple_of(b))
        .map(|x| (x, (n - a * x) / b))
}

/// Nonnegative `(x, y, z)` with `a x + b y + c z = n`, smallest `z` first.
pub fn frobenius_rep3(a: u64, b: u64, c: u64, n: u64) -> Option<(u64, u64, u64)> {
    if c == 0 {
        return None;
    }
    (0..=n / c).find_map(|z| frobenius_rep(a, b, n - c * z).map(|(x, y)| (x, y, z)))
}

/// Best lower bound on `r(G1, G2)` from the maximum degrees alone, where `G1` is
/// connected of order `m` and `has_dist3` says every maximum-degree vertex of
/// `G2` has a vertex at distance 3. Requires `d1, d2 >= 2`.
pub fn degree_lower_bound(d1: u64, d2: u64, m: u64, has_dist3: bool) -> u64 {
    let mut best = d1 + d2 - ((d1 - 1) * (d2 - 1) % 2);
    if d1 < d2 && d2 <= m {
        best = best.max(2 * d2 - 1);
    }
    if d2 > m && ((d1 + d2 - m).is_multiple_of(2) || d1 + 1 != m || has_dist3) {
        best = best.max(d1 + d2);
    }
    best
}

/// `Some(p)` when `ex1 + ex2 < C(p, 2)`, in which case every `p`-vertex graph
/// contains the first graph or its complement contains the second.
pub fn counting_upper_bound(ex1: u64, ex2: u64, p: u64) -> Option<u64> {
    let pairs = p.checked_mul(p.saturating_sub(1))? / 2;
    (ex1.checked_add(ex2)? < pairs).then_some(p)
}

/// `m + n - 4` when `m + n - 5` splits into parts `m - 1` and `m - 2`.
pub fn clique_union_lower(m: u64, n: u64) -> Option<u64> {
    if m < 5 || n < 5 {
        return None;
    }
    frobenius_rep(m - 1, m - 2, m + n - 5).map(|_| m + n - 4)
}

pub(crate) fn choose2(p: u64) -> u64 {
    p * p.saturating_sub(1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frobenius_examples() {
        assert_eq!(frobenius_rep(3, 5, 8), Some((1, 1)));
        assert_eq!(frobenius_rep(6, 5, 12), Some((2, 0)));
        assert_eq!(frobenius_rep(2, 3, 1), None);
        assert_eq!(frobenius_rep(4, 6, 0), Some((0, 0)));
        assert_eq!(frobenius_rep3(6, 5, 8, 13), Some((0, 1, 1)));
    }

    #[test]
    fn degree_bound_examples() {
        // d1 < d2 <= m
        assert_eq!(degree_lower_bound(4, 6, 7, false), 11);
        // d2 > m with d1+d2-m even
        assert_eq!(degree_lower_bound(4, 9, 7, false), 13);
        // d2 > m, odd gap, d1 = m-1: needs the distance-3 condition
        assert_eq!(degree_lower_bound(6, 10, 7, false), 15);
        assert_eq!(degree_lower_bound(6, 10, 7, true), 16);
        assert_eq!(degree_lower_bound(3, 4, 3, false), 7);
        assert_eq!(degree_lower_bound(4, 4, 4, false), 7);
    }

    #[test]
    fn counting_examples() {
        assert_eq!(counting_upper_bound(27, 27, 11), Some(11));
        assert_eq!(counting_upper_bound(6, 6, 6), Some(6));
        assert_eq!(counting_upper_bound(10, 11, 7), None);
    }

    #[test]
    fn clique_union_examples() {
        assert_eq!(clique_union_lower(6, 8), Some(10));
        assert_eq!(clique_union_lower(7, 10), Some(13));
        assert_eq!(clique_union_lower(5, 6), Some(7));
        assert_eq!(clique_union_lower(4, 6), None);
        // m+n-5 = 13 is not 6x + 5y
        assert_eq!(clique_union_lower(7, 11), None);
    }
}
