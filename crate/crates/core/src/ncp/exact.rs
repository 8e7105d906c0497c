use std::ops::ControlFlow;

use super::{FeasibleSet, NcpError, PicTriple};
use crate::precgraph::for_each_simple_circuit;

/// Largest node count accepted by [`solve_exact`].
pub const DEFAULT_EXACT_CAP: usize = 12;

/// Exact solution set by exhaustive enumeration: the intersection, over all
/// elementary circuits, of `{λ : weight(λ) ≤ 0}`.
pub fn solve_exact(t: &PicTriple) -> Result<FeasibleSet, NcpError> {
    solve_exact_capped(t, DEFAULT_EXACT_CAP)
}

pub fn solve_exact_capped(t: &PicTriple, cap: usize) -> Result<FeasibleSet, NcpError> {
    if t.n() > cap {
        return Err(NcpError::InstanceTooLarge { n: t.n(), cap });
    }
    let graph = t.graph();
    let mut acc = FeasibleSet::everything();
    for_each_simple_circuit(&graph.adjacency(), |c| {
        let pwl = graph.circuit_pwl(c).expect("enumerated circuits use existing arcs");
        acc = acc.intersect(&pwl.nonpositive_set());
        if acc.is_empty() {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(acc)
}
