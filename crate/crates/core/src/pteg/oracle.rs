use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::EventGraphSpec;
use crate::rational::Rational;

// Min-plus Bellman-Ford from a virtual source; true iff a negative cycle
// exists. Edges are (u, v, w) meaning x_v ≤ x_u + w.
fn has_negative_cycle(n: usize, edges: &[(usize, usize, Rational)]) -> bool {
    let mut dist = vec![Rational::zero(); n];
    for _ in 0..n {
        let mut changed = false;
        for (u, v, w) in edges {
            let cand = &dist[*u] + w;
            if cand < dist[*v] {
                dist[*v] = cand;
                changed = true;
            }
        }
        if !changed {
            return false;
        }
    }
    edges.iter().any(|(u, v, w)| &dist[*u] + w < dist[*v])
}

/// Decides directly whether the spec admits a 1-periodic consistent
/// trajectory `x(k) = x + k·λ`, treating each place `j → i` with `m`
/// tokens as `τ⁻ ≤ x_i + m·λ − x_j ≤ τ⁺`.
pub fn oracle_1periodic(spec: &EventGraphSpec, lambda: &Rational) -> bool {
    // daters must not decrease
    if lambda.is_negative() {
        return false;
    }
    let mut edges = Vec::with_capacity(2 * spec.places.len());
    for p in &spec.places {
        let shift = Rational::from_integer(BigInt::from(p.marking)) * lambda;
        // x_j ≤ x_i + (m·λ − τ⁻)
        edges.push((p.to, p.from, &shift - &p.lower));
        if let Some(u) = &p.upper {
            // x_i ≤ x_j + (τ⁺ − m·λ)
            edges.push((p.from, p.to, u - &shift));
        }
    }
    !has_negative_cycle(spec.transition_count(), &edges)
}
