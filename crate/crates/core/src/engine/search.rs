//! Size-class sweeps over vertex cuts.
//!
//! Every sweep walks cut sizes in ascending order and, inside a size class,
//! bitmasks in ascending order. A class is split into top-bit chunks that may
//! run on the rayon pool; chunk results are merged in chunk order, so the
//! outcome never depends on scheduling.

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use crate::error::EngineError;
use crate::graph::Graph;
use crate::ratio::Ratio;
use crate::subsets::{chunk_tops, for_each_in_chunk};

const DEADLINE_STRIDE: u32 = 1 << 12;

#[derive(Clone, Copy, Debug, Default)]
pub struct SearchOptions {
    pub deadline: Option<Instant>,
    /// Split size classes across the current rayon pool.
    pub parallel: bool,
}

impl SearchOptions {
    pub fn sequential() -> Self {
        SearchOptions {
            deadline: None,
            parallel: false,
        }
    }

    pub fn parallel() -> Self {
        SearchOptions {
            deadline: None,
            parallel: true,
        }
    }

    pub fn with_deadline(mut self, deadline: Option<Instant>) -> Self {
        self.deadline = deadline;
        self
    }
}

struct Clock {
    deadline: Option<Instant>,
    expired: AtomicBool,
}

impl Clock {
    fn new(deadline: Option<Instant>) -> Self {
        let expired = deadline.is_some_and(|d| Instant::now() >= d);
        Clock {
            deadline,
            expired: AtomicBool::new(expired),
        }
    }

    #[inline]
    fn tick(&self, counter: &mut u32) -> bool {
        *counter += 1;
        if *counter < DEADLINE_STRIDE {
            return false;
        }
        *counter = 0;
        if self.expired.load(Ordering::Relaxed) {
            return true;
        }
        match self.deadline {
            Some(d) if Instant::now() >= d => {
                self.expired.store(true, Ordering::Relaxed);
                true
            }
            _ => false,
        }
    }

    fn check(&self) -> Result<(), EngineError> {
        if self.expired.load(Ordering::Relaxed) {
            Err(EngineError::Timeout)
        } else {
            Ok(())
        }
    }
}

fn run_chunks<T: Send>(tops: std::ops::Range<usize>, parallel: bool, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    if parallel {
        tops.into_par_iter().map(f).collect()
    } else {
        tops.map(f).collect()
    }
}

/// Best cut of one size class: most components, ties to the smallest mask.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct ClassBest {
    components: usize,
    mask: u64,
}

/// Among the `size`-subsets whose removal leaves at least two components,
/// finds one with the most components (smallest mask on ties). `ceiling`
/// is an upper bound on the attainable count and enables early exit.
fn best_in_class(
    g: &Graph,
    size: usize,
    ceiling: usize,
    clock: &Clock,
    parallel: bool,
) -> Result<Option<ClassBest>, EngineError> {
    let n = g.order();
    // Lowest chunk known to contain a ceiling-attaining cut. Later chunks hold
    // only larger masks and cannot beat it.
    let saturated_at = AtomicUsize::new(usize::MAX);

    let chunk = |top: usize| -> Option<ClassBest> {
        if top > saturated_at.load(Ordering::Relaxed) {
            return None;
        }
        let mut best: Option<ClassBest> = None;
        let mut ticks = 0u32;
        let _ = for_each_in_chunk(top, size, |mask| {
            if clock.tick(&mut ticks) {
                return ControlFlow::Break(());
            }
            let c = g.count_components(mask);
            if c >= 2 && best.is_none_or(|b| c > b.components) {
                best = Some(ClassBest { components: c, mask });
                if c >= ceiling {
                    saturated_at.fetch_min(top, Ordering::Relaxed);
                    return ControlFlow::Break(());
                }
            }
            ControlFlow::Continue(())
        });
        best
    };

    let results = run_chunks(chunk_tops(n, size), parallel, chunk);
    clock.check()?;
    Ok(results
        .into_iter()
        .flatten()
        .fold(None, |acc: Option<ClassBest>, b| match acc {
            Some(a) if a.components >= b.components => Some(a),
            _ => Some(b),
        }))
}

/// Minimum of `|S| / c(G - S)` over cuts of a connected, noncomplete graph.
/// `alpha` bounds the number of components any cut can leave.
pub(crate) fn minimum_cut_ratio(
    g: &Graph,
    alpha: usize,
    opts: &SearchOptions,
) -> Result<Option<(Ratio, u64, usize)>, EngineError> {
    let n = g.order();
    let clock = Clock::new(opts.deadline);
    clock.check()?;
    let mut best: Option<(Ratio, u64, usize)> = None;

    for size in 1..n.saturating_sub(1) {
        let ceiling = alpha.min(n - size);
        if ceiling < 2 {
            continue;
        }
        // s / min(alpha, n - s) only grows with s, so once a class cannot
        // strictly beat the incumbent no later class can either.
        if let Some((ratio, _, _)) = best {
            if ratio.at_most_cut(size, ceiling) {
                break;
            }
        }
        if let Some(cb) = best_in_class(g, size, ceiling, &clock, opts.parallel)? {
            let ratio = Ratio::of_cut(size, cb.components);
            if best.is_none_or(|(b, _, _)| ratio < b) {
                best = Some((ratio, cb.mask, cb.components));
            }
        }
    }
    Ok(best)
}

/// First cut (by size, then mask) with `c(G - X) >= 2` and `t * c > |X|`.
/// `alpha` is an upper bound on the component count of any cut.
pub(crate) fn first_violation(
    g: &Graph,
    t: Ratio,
    alpha: usize,
    opts: &SearchOptions,
) -> Result<Option<(u64, usize)>, EngineError> {
    let n = g.order();
    let clock = Clock::new(opts.deadline);
    clock.check()?;

    if g.count_components(0) >= 2 {
        return Ok(if t > Ratio::ZERO {
            Some((0, g.count_components(0)))
        } else {
            None
        });
    }

    for size in 1..n.saturating_sub(1) {
        let ceiling = alpha.min(n - size);
        if ceiling < 2 {
            continue;
        }
        if !t.exceeds_cut(size, ceiling) {
            break;
        }
        let found_at = AtomicUsize::new(usize::MAX);
        let chunk = |top: usize| -> Option<(u64, usize)> {
            if top > found_at.load(Ordering::Relaxed) {
                return None;
            }
            let mut ticks = 0u32;
            let hit = for_each_in_chunk(top, size, |mask| {
                if clock.tick(&mut ticks) {
                    return ControlFlow::Break(None);
                }
                let c = g.count_components(mask);
                if c >= 2 && t.exceeds_cut(size, c) {
                    ControlFlow::Break(Some((mask, c)))
                } else {
                    ControlFlow::Continue(())
                }
            });
            match hit {
                ControlFlow::Break(Some(found)) => {
                    found_at.fetch_min(top, Ordering::Relaxed);
                    Some(found)
                }
                _ => None,
            }
        };
        let results = run_chunks(chunk_tops(n, size), opts.parallel, chunk);
        clock.check()?;
        if let Some(found) = results.into_iter().flatten().next() {
            return Ok(Some(found));
        }
    }
    Ok(None)
}
