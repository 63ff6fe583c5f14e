//! Fixed-size subset enumeration in increasing bitmask order.

use std::ops::ControlFlow;

/// Visits every `size`-subset of the lowest `width` bits (`width <= 63`) in
/// increasing numeric order using Gosper's successor.
#[inline]
pub fn for_each_in_width<B>(width: usize, size: usize, mut f: impl FnMut(u64) -> ControlFlow<B>) -> ControlFlow<B> {
    debug_assert!(width <= 63);
    if size > width {
        return ControlFlow::Continue(());
    }
    if size == 0 {
        return f(0);
    }
    let limit = 1u64 << width;
    let mut x = (1u64 << size) - 1;
    while x < limit {
        f(x)?;
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    ControlFlow::Continue(())
}

/// Top-bit chunks of the `size`-subsets of `n` vertices: every subset whose
/// highest element is `top` belongs to chunk `top`. Chunks are disjoint, and
/// concatenating them in increasing `top` order yields increasing bitmask order.
pub fn chunk_tops(n: usize, size: usize) -> std::ops::Range<usize> {
    if size == 0 || size > n {
        0..0
    } else {
        size - 1..n
    }
}

/// Visits the subsets of chunk `top` in increasing order.
#[inline]
pub fn for_each_in_chunk<B>(top: usize, size: usize, mut f: impl FnMut(u64) -> ControlFlow<B>) -> ControlFlow<B> {
    let high = 1u64 << top;
    for_each_in_width(top, size - 1, |low| f(low | high))
}

/// Visits every `size`-subset of `n` vertices (`n <= 64`) in increasing order.
pub fn for_each_subset<B>(n: usize, size: usize, mut f: impl FnMut(u64) -> ControlFlow<B>) -> ControlFlow<B> {
    if size == 0 {
        return f(0);
    }
    for top in chunk_tops(n, size) {
        for_each_in_chunk(top, size, &mut f)?;
    }
    ControlFlow::Continue(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn collect(n: usize, s: usize) -> Vec<u64> {
        let mut out = Vec::new();
        let _ = for_each_subset::<()>(n, s, |m| {
            out.push(m);
            ControlFlow::Continue(())
        });
        out
    }

    #[test]
    fn matches_filtered_range() {
        for n in 0..=10 {
            for s in 0..=n + 1 {
                let want: Vec<u64> = (0..1u64 << n).filter(|m| m.count_ones() as usize == s).collect();
                assert_eq!(collect(n, s), want, "n={n} s={s}");
            }
        }
    }

    #[test]
    fn full_width_top_chunk() {
        assert_eq!(collect(64, 64), vec![u64::MAX]);
        assert_eq!(collect(64, 1).len(), 64);
        assert_eq!(*collect(64, 1).last().unwrap(), 1 << 63);
        assert_eq!(collect(64, 63).len(), 64);
    }

    #[test]
    fn early_exit() {
        let mut seen = 0;
        let r = for_each_subset(8, 3, |m| {
            seen += 1;
            if m == 0b1011 {
                ControlFlow::Break(m)
            } else {
                ControlFlow::Continue(())
            }
        });
        assert_eq!(r, ControlFlow::Break(0b1011));
        assert_eq!(seen, 2);
    }
}
