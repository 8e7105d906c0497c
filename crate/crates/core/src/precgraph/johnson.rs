//! Johnson's elementary-circuit enumeration.

use std::ops::ControlFlow;

use super::Circuit;

struct Search<'a, F> {
    adj: &'a [Vec<usize>],
    in_scc: Vec<bool>,
    blocked: Vec<bool>,
    blocked_by: Vec<Vec<usize>>,
    stack: Vec<usize>,
    emit: F,
}

impl<F: FnMut(&Circuit) -> ControlFlow<()>> Search<'_, F> {
    fn unblock(&mut self, u: usize) {
        self.blocked[u] = false;
        let waiting = std::mem::take(&mut self.blocked_by[u]);
        for w in waiting {
            if self.blocked[w] {
                self.unblock(w);
            }
        }
    }

    // Returns (found a circuit through v, stop requested).
    fn circuit(&mut self, v: usize, start: usize) -> (bool, bool) {
        let mut found = false;
        self.stack.push(v);
        self.blocked[v] = true;
        for idx in 0..self.adj[v].len() {
            let w = self.adj[v][idx];
            if !self.in_scc[w] {
                continue;
            }
            if w == start {
                found = true;
                let c = Circuit::new(self.stack.clone());
                if (self.emit)(&c).is_break() {
                    return (true, true);
                }
            } else if !self.blocked[w] {
                let (f, stop) = self.circuit(w, start);
                if stop {
                    return (true, true);
                }
                found |= f;
            }
        }
        if found {
            self.unblock(v);
        } else {
            for idx in 0..self.adj[v].len() {
                let w = self.adj[v][idx];
                if self.in_scc[w] && !self.blocked_by[w].contains(&v) {
                    self.blocked_by[w].push(v);
                }
            }
        }
        self.stack.pop();
        (found, false)
    }
}

// Nodes >= start that are both reachable from start and reach start.
fn component_of(adj: &[Vec<usize>], start: usize) -> Vec<bool> {
    let n = adj.len();
    let mut fwd = vec![false; n];
    let mut todo = vec![start];
    fwd[start] = true;
    while let Some(v) = todo.pop() {
        for &w in &adj[v] {
            if w >= start && !fwd[w] {
                fwd[w] = true;
                todo.push(w);
            }
        }
    }
    let mut radj = vec![Vec::new(); n];
    for (v, outs) in adj.iter().enumerate() {
        for &w in outs {
            radj[w].push(v);
        }
    }
    let mut bwd = vec![false; n];
    bwd[start] = true;
    let mut todo = vec![start];
    while let Some(v) = todo.pop() {
        for &w in &radj[v] {
            if w >= start && !bwd[w] {
                bwd[w] = true;
                todo.push(w);
            }
        }
    }
    fwd.iter().zip(&bwd).map(|(a, b)| *a && *b).collect()
}

/// Visits every elementary circuit of the digraph exactly once, each in
/// canonical rotation (smallest node first). Order is deterministic: by
/// smallest node, then depth-first over ascending successors.
///
/// `adj[v]` lists the successors of `v`.
pub fn for_each_simple_circuit(adj: &[Vec<usize>], mut f: impl FnMut(&Circuit) -> ControlFlow<()>) {
    let n = adj.len();
    let adj: Vec<Vec<usize>> = adj
        .iter()
        .map(|outs| {
            let mut o = outs.clone();
            o.sort_unstable();
            o.dedup();
            o
        })
        .collect();
    let mut search = Search {
        adj: &adj,
        in_scc: vec![false; n],
        blocked: vec![false; n],
        blocked_by: vec![Vec::new(); n],
        stack: Vec::new(),
        emit: &mut f,
    };
    for start in 0..n {
        let scc = component_of(&adj, start);
        let has_loop = adj[start].contains(&start);
        if !has_loop && scc.iter().filter(|x| **x).count() < 2 {
            continue;
        }
        search.in_scc = scc;
        for v in start..n {
            search.blocked[v] = false;
            search.blocked_by[v].clear();
        }
        if search.circuit(start, start).1 {
            return;
        }
    }
}

pub fn enumerate_simple_circuits(adj: &[Vec<usize>]) -> Vec<Circuit> {
    let mut out = Vec::new();
    for_each_simple_circuit(adj, |c| {
        out.push(c.clone());
        ControlFlow::Continue(())
    });
    out
}
