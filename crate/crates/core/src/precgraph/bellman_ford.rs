use num_traits::Zero;

use crate::rational::Rational;

/// Arc weights usable by the longest-path relaxation. `checked_add`
/// returns `None` on overflow.
pub trait PathWeight: Clone + Ord {
    fn zero() -> Self;
    fn checked_add(&self, other: &Self) -> Option<Self>;
}

impl PathWeight for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }

    fn checked_add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
}

impl PathWeight for i128 {
    fn zero() -> Self {
        0
    }

    fn checked_add(&self, other: &Self) -> Option<Self> {
        i128::checked_add(*self, *other)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Overflow;

/// Longest-path Bellman–Ford from a virtual source joined to every node
/// with weight zero. Returns the node sequence of a positive circuit
/// (forward order, not rotated) or `None` when every circuit is
/// non-positive. `arcs` are `(from, to, weight)`.
pub(crate) fn find_positive_circuit<W: PathWeight>(
    n: usize,
    arcs: &[(usize, usize, W)],
) -> Result<Option<Vec<usize>>, Overflow> {
    if n == 0 {
        return Ok(None);
    }
    let mut dist = vec![W::zero(); n];
    let mut pred: Vec<Option<usize>> = vec![None; n];
    let mut last_updated = None;
    for _round in 0..n {
        last_updated = None;
        for (from, to, w) in arcs {
            let cand = dist[*from].checked_add(w).ok_or(Overflow)?;
            if cand > dist[*to] {
                dist[*to] = cand;
                pred[*to] = Some(*from);
                last_updated = Some(*to);
            }
        }
        if last_updated.is_none() {
            return Ok(None);
        }
    }
    let start = last_updated.expect("loop exits early when nothing changes");
    Ok(Some(trace_cycle(&pred, start).unwrap_or_else(|| {
        (0..n)
            .find_map(|v| trace_cycle(&pred, v))
            .expect("an update in round n implies a cycle in the predecessor graph")
    })))
}

// Walks predecessors from `start` until a node repeats; returns the cycle in
// forward arc order.
fn trace_cycle(pred: &[Option<usize>], start: usize) -> Option<Vec<usize>> {
    let n = pred.len();
    let mut v = start;
    for _ in 0..n {
        v = pred[v]?;
    }
    // v now lies on a cycle of the predecessor graph
    let mut cycle = vec![v];
    let mut u = pred[v]?;
    while u != v {
        cycle.push(u);
        u = pred[u]?;
        if cycle.len() > n {
            return None;
        }
    }
    cycle.reverse();
    Some(cycle)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_positive_triangle() {
        let arcs = vec![(0usize, 1usize, 2i128), (1, 2, -1), (2, 0, 0), (2, 3, 5)];
        let c = find_positive_circuit(4, &arcs).unwrap().unwrap();
        let mut sorted = c.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![0, 1, 2]);
        // forward order: each consecutive pair is an arc
        for k in 0..c.len() {
            let (a, b) = (c[k], c[(k + 1) % c.len()]);
            assert!(arcs.iter().any(|(f, t, _)| (*f, *t) == (a, b)));
        }
    }

    #[test]
    fn zero_weight_cycles_are_not_positive() {
        let arcs = vec![(0usize, 1usize, 3i128), (1, 0, -3), (1, 1, 0)];
        assert_eq!(find_positive_circuit(2, &arcs).unwrap(), None);
    }

    #[test]
    fn overflow_is_reported() {
        let arcs = vec![(0usize, 0usize, i128::MAX)];
        assert_eq!(find_positive_circuit(2, &arcs), Err(Overflow));
    }
}
