//! Small finite-poset helpers shared by the Hasse diagram and width code.
//!
//! All functions take the strict order as a predicate over vertex indices
//! `0..n`; the relation must be transitive and irreflexive.

/// Covering relations of the order: (a, b) with a < b and nothing in between.
/// Edges are returned sorted by (lower, upper).
pub fn covers<F>(n: usize, lt: F) -> Vec<(usize, usize)>
where
    F: Fn(usize, usize) -> bool,
{
    let mut edges = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                edges.push((a, b));
            }
        }
    }
    edges.sort_unstable();
    edges
}

/// Number of vertices in a longest chain of the poset.
pub fn longest_chain_vertices<F>(n: usize, lt: F) -> usize
where
    F: Fn(usize, usize) -> bool,
{
    fn depth<F: Fn(usize, usize) -> bool>(v: usize, n: usize, lt: &F, memo: &mut [usize]) -> usize {
        if memo[v] != 0 {
            return memo[v];
        }
        let mut best = 1;
        for u in 0..n {
            if lt(u, v) {
                best = best.max(1 + depth(u, n, lt, memo));
            }
        }
        memo[v] = best;
        best
    }
    let mut memo = vec![0; n];
    (0..n)
        .map(|v| depth(v, n, &lt, &mut memo))
        .max()
        .unwrap_or(0)
}

/// Exact width (largest antichain) by exhaustive search. Only sensible for
/// small posets; the caller switches to the matching route beyond 20 points.
pub fn width_exhaustive<F>(n: usize, lt: F) -> usize
where
    F: Fn(usize, usize) -> bool,
{
    assert!(n <= 30, "exhaustive width search is limited to 30 points");
    // comparability masks
    let adj: Vec<u32> = (0..n)
        .map(|v| {
            (0..n)
                .filter(|&u| u != v && (lt(u, v) || lt(v, u)))
                .fold(0u32, |acc, u| acc | 1 << u)
        })
        .collect();
    fn mis(cands: u32, adj: &[u32]) -> usize {
        if cands == 0 {
            return 0;
        }
        let v = cands.trailing_zeros() as usize;
        let without = mis(cands & !(1 << v), adj);
        let with = 1 + mis(cands & !(1 << v) & !adj[v], adj);
        without.max(with)
    }
    mis((1u32 << n) - 1, &adj)
}

/// Exact width through a minimum chain cover: the poset is covered by
/// n - matching chains, and that number equals the largest antichain.
pub fn width_by_chain_cover<F>(n: usize, lt: F) -> usize
where
    F: Fn(usize, usize) -> bool,
{
    // bipartite graph: left copy u, right copy v, edge when u < v
    let mut match_right: Vec<Option<usize>> = vec![None; n];
    let mut match_left: Vec<Option<usize>> = vec![None; n];

    fn augment<F: Fn(usize, usize) -> bool>(
        u: usize,
        n: usize,
        lt: &F,
        seen: &mut [bool],
        match_right: &mut [Option<usize>],
        match_left: &mut [Option<usize>],
    ) -> bool {
        for v in 0..n {
            if lt(u, v) && !seen[v] {
                seen[v] = true;
                if match_right[v].is_none()
                    || augment(
                        match_right[v].unwrap(),
                        n,
                        lt,
                        seen,
                        match_right,
                        match_left,
                    )
                {
                    match_right[v] = Some(u);
                    match_left[u] = Some(v);
                    return true;
                }
            }
        }
        false
    }

    let mut matching = 0;
    for u in 0..n {
        let mut seen = vec![false; n];
        if augment(u, n, &lt, &mut seen, &mut match_right, &mut match_left) {
            matching += 1;
        }
    }
    n - matching
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_and_antichain() {
        let lt_chain = |a: usize, b: usize| a < b;
        assert_eq!(width_exhaustive(5, lt_chain), 1);
        assert_eq!(width_by_chain_cover(5, lt_chain), 1);
        assert_eq!(longest_chain_vertices(5, lt_chain), 5);
        assert_eq!(covers(4, lt_chain), vec![(0, 1), (1, 2), (2, 3)]);

        let lt_anti = |_: usize, _: usize| false;
        assert_eq!(width_exhaustive(6, lt_anti), 6);
        assert_eq!(width_by_chain_cover(6, lt_anti), 6);
        assert_eq!(longest_chain_vertices(6, lt_anti), 1);
        assert!(covers(6, lt_anti).is_empty());
    }

    #[test]
    fn diamond() {
        // 0 < 1, 0 < 2, 1 < 3, 2 < 3 (transitively 0 < 3)
        let rel = [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)];
        let lt = |a: usize, b: usize| rel.contains(&(a, b));
        assert_eq!(width_exhaustive(4, lt), 2);
        assert_eq!(width_by_chain_cover(4, lt), 2);
        assert_eq!(longest_chain_vertices(4, lt), 3);
        assert_eq!(covers(4, lt), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn both_width_routes_agree_on_random_orders() {
        // deterministic pseudo-random divisibility posets
        for seed in 1..20u64 {
            let vals: Vec<u64> = (0..12).map(|i| (seed * 37 + i * i + 2) % 97 + 2).collect();
            let lt = |a: usize, b: usize| vals[a] != vals[b] && vals[b] % vals[a] == 0;
            assert_eq!(width_exhaustive(12, lt), width_by_chain_cover(12, lt));
        }
    }
}
