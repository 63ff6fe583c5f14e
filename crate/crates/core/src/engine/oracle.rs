//! Unpruned exhaustive toughness, kept independent of the optimized engine:
//! it uses adjacency lists and its own depth-first component count.

use crate::error::EngineError;
use crate::graph::{Graph, VertexSet};
use crate::ratio::Ratio;

use super::ToughnessResult;

pub const ORACLE_MAX_ORDER: usize = 20;

fn components_without(lists: &[Vec<usize>], removed: u32) -> usize {
    let n = lists.len();
    let mut seen = vec![false; n];
    let mut stack = Vec::new();
    let mut count = 0;
    for start in 0..n {
        if removed >> start & 1 == 1 || seen[start] {
            continue;
        }
        count += 1;
        seen[start] = true;
        stack.push(start);
        while let Some(v) = stack.pop() {
            for &w in &lists[v] {
                if removed >> w & 1 == 0 && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

/// Exhaustive toughness over all `2^n` subsets (`n <= 20`).
///
/// Ties are broken like the engine: smallest cut, then smallest bitmask.
pub fn toughness_oracle(g: &Graph) -> Result<ToughnessResult, EngineError> {
    let n = g.order();
    if n > ORACLE_MAX_ORDER {
        return Err(EngineError::OrderTooLarge {
            n,
            max: ORACLE_MAX_ORDER,
        });
    }
    let lists: Vec<Vec<usize>> = (0..n).map(|u| (0..n).filter(|&v| g.has_edge(u, v)).collect()).collect();

    let mut best: Option<(Ratio, usize, u32, usize)> = None;
    for mask in 0u32..1 << n {
        let c = components_without(&lists, mask);
        if c < 2 {
            continue;
        }
        let size = mask.count_ones() as usize;
        let ratio = Ratio::of_cut(size, c);
        let better = match best {
            None => true,
            Some((r, s, _, _)) => ratio < r || (ratio == r && size < s),
        };
        if better {
            best = Some((ratio, size, mask, c));
        }
    }
    Ok(match best {
        None => ToughnessResult::infinite(),
        Some((value, _, mask, c)) => ToughnessResult {
            value,
            witness: Some(VertexSet(mask as u64)),
            witness_components: Some(c),
        },
    })
}
