//! Crate-internal helpers on canonical soft-set indices.
//!
//! On a space with `n = |X|*|E| <= 63` membership bits, the canonical index
//! of a soft set is its membership bitmask, so union is `|`, intersection is
//! `&`, and inclusion is `a & !b == 0`. Exhaustive scans run on these masks
//! and convert back to [`SoftSet`](crate::soft_set::SoftSet) values only for
//! witnesses and results.

/// `a ⊆ b` on canonical indices.
pub(crate) fn subset(a: u64, b: u64) -> bool {
    a & !b == 0
}

/// Every pair in `sel` has an upper bound in `sel`.
pub(crate) fn upward_directed(sel: &[u64]) -> bool {
    sel.iter().enumerate().all(|(i, &a)| {
        sel[i..]
            .iter()
            .all(|&b| sel.iter().any(|&c| subset(a | b, c)))
    })
}

/// Calls `visit` on every subset of `pool` with at most `cap` elements,
/// including the empty one, in index order. Stops when `visit` returns
/// `false`.
pub(crate) fn for_each_subset(pool: &[u64], cap: usize, visit: &mut impl FnMut(&[u64]) -> bool) {
    fn recurse(
        pool: &[u64],
        cap: usize,
        start: usize,
        current: &mut Vec<u64>,
        visit: &mut impl FnMut(&[u64]) -> bool,
    ) -> bool {
        if !visit(current) {
            return false;
        }
        if current.len() == cap {
            return true;
        }
        for i in start..pool.len() {
            current.push(pool[i]);
            let keep_going = recurse(pool, cap, i + 1, current, visit);
            current.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }
    let mut current = Vec::with_capacity(cap);
    recurse(pool, cap, 0, &mut current, visit);
}

/// All upward directed subsets of `pool` of size at most `cap`, paired with
/// their unions. The empty family is included with union `0`.
pub(crate) fn directed_subsets(pool: &[u64], cap: usize) -> Vec<(Vec<u64>, u64)> {
    let mut out = Vec::new();
    for_each_subset(pool, cap, &mut |sel| {
        if upward_directed(sel) {
            out.push((sel.to_vec(), sel.iter().fold(0, |acc, m| acc | m)));
        }
        true
    });
    out
}
