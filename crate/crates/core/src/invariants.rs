//! Independence number and vertex connectivity, both exact.

use std::ops::ControlFlow;

use crate::graph::{full_mask, Graph, VertexSet};
use crate::subsets::for_each_subset;

/// Exact independence number via branch and bound.
pub fn independence_number(g: &Graph) -> usize {
    maximum_independent_set(g).len()
}

/// A maximum independent set.
pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    let mut best = 0u64;
    grow(g.adjacency(), full_mask(g.order()), 0, &mut best);
    VertexSet(best)
}

fn grow(adj: &[u64], cand: u64, chosen: u64, best: &mut u64) {
    if cand == 0 {
        if chosen.count_ones() > best.count_ones() {
            *best = chosen;
        }
        return;
    }
    if chosen.count_ones() + cand.count_ones() <= best.count_ones() {
        return;
    }

    let mut min_v = 0;
    let mut min_d = u32::MAX;
    let mut max_v = 0;
    let mut max_d = 0;
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[v] & cand).count_ones();
        if d < min_d {
            min_d = d;
            min_v = v;
        }
        if d > max_d {
            max_d = d;
            max_v = v;
        }
    }

    // A vertex of degree <= 1 lies in some maximum independent set.
    if min_d <= 1 {
        let v = min_v;
        grow(adj, cand & !adj[v] & !(1 << v), chosen | 1 << v, best);
        return;
    }
    let v = max_v;
    grow(adj, cand & !adj[v] & !(1 << v), chosen | 1 << v, best);
    grow(adj, cand & !(1 << v), chosen, best);
}

/// Exact vertex connectivity: the least `|S|` such that `G - S` is
/// disconnected or a single vertex. Complete graphs give `n - 1`.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if g.is_complete() {
        return n - 1;
    }
    minimum_separator(g).map(VertexSet::len).unwrap_or(n - 1)
}

/// Smallest (then lexicographically first) vertex set whose removal
/// disconnects `g`. `None` for complete graphs.
pub fn minimum_separator(g: &Graph) -> Option<VertexSet> {
    let n = g.order();
    if n < 3 {
        return if g.is_connected() { None } else { Some(VertexSet::EMPTY) };
    }
    let bound = g.degree_profile().min.min(n - 2);
    for size in 0..=bound {
        let hit = for_each_subset(n, size, |s| {
            if g.count_components(s) >= 2 {
                ControlFlow::Break(s)
            } else {
                ControlFlow::Continue(())
            }
        });
        if let ControlFlow::Break(s) = hit {
            return Some(VertexSet(s));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{circulant, CirculantSpec};

    fn c(n: usize, d: &[usize]) -> Graph {
        circulant(&CirculantSpec::new(n, d).unwrap())
    }

    fn brute_alpha(g: &Graph) -> usize {
        let n = g.order();
        (0..1u64 << n)
            .filter(|&m| VertexSet(m).iter().all(|v| g.neighbors(v) & m == 0))
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn alpha_of_small_circulants() {
        // brute force over all 2^7 and 2^10 subsets
        assert_eq!(brute_alpha(&c(7, &[1, 3])), 2);
        assert_eq!(brute_alpha(&c(10, &[1, 2, 4])), 2);
        assert_eq!(independence_number(&c(7, &[1, 3])), 2);
        assert_eq!(independence_number(&c(10, &[1, 2, 4])), 2);
        for n in 1..8 {
            assert_eq!(independence_number(&Graph::complete(n).unwrap()), 1);
        }
        assert_eq!(independence_number(&Graph::empty(5).unwrap()), 5);
        assert_eq!(independence_number(&Graph::petersen()), 4);
    }

    #[test]
    fn alpha_set_is_independent() {
        let g = c(13, &[1, 3]);
        let s = maximum_independent_set(&g);
        assert!(s.iter().all(|v| g.neighbors(v) & s.bits() == 0));
        assert_eq!(s.len(), brute_alpha(&g));
    }

    #[test]
    fn connectivity() {
        assert_eq!(vertex_connectivity(&c(7, &[1, 3])), 4);
        assert_eq!(vertex_connectivity(&Graph::complete(5).unwrap()), 4);
        assert_eq!(vertex_connectivity(&Graph::complete(1).unwrap()), 0);
        assert_eq!(vertex_connectivity(&Graph::path(3).unwrap()), 1);
        assert_eq!(vertex_connectivity(&Graph::empty(2).unwrap()), 0);
        assert_eq!(vertex_connectivity(&Graph::cycle(6).unwrap()), 2);
        assert_eq!(vertex_connectivity(&Graph::petersen()), 3);
        assert_eq!(vertex_connectivity(&c(10, &[1, 2, 4])), 6);
    }
}
