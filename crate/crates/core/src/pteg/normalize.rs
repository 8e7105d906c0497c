use std::collections::HashSet;

use num_traits::Zero;

use super::{validate_spec, EventGraphSpec, Place, Pteg, PtegError};
use crate::rational::Rational;

/// Result of reducing every marking to 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalized {
    /// The 0/1-marked graph; original transitions keep their indices and
    /// fresh ones are appended.
    pub spec: EventGraphSpec,
    pub pteg: Pteg,
    /// `transition_map[k]` is the index of original transition `k`.
    pub transition_map: Vec<usize>,
}

impl Normalized {
    pub fn added_transitions(&self) -> usize {
        self.spec.transition_count() - self.transition_map.len()
    }
}

fn fresh_name(taken: &mut HashSet<String>, base: String) -> String {
    let mut name = base.clone();
    let mut k = 1;
    while taken.contains(&name) {
        k += 1;
        name = format!("{base}_{k}");
    }
    taken.insert(name.clone());
    name
}

/// Replaces each place with `m ≥ 2` tokens by a chain of `m` one-token
/// places through `m − 1` fresh transitions. The original interval sits on
/// the place feeding the original downstream transition; the others are
/// `[0, 0]`, so the chain constrains `x_to + m·λ − x_from` exactly as the
/// original place does.
pub fn normalize(spec: &EventGraphSpec) -> Result<Normalized, PtegError> {
    validate_spec(spec).map_err(PtegError::Invalid)?;
    let mut transitions = spec.transitions.clone();
    let mut taken: HashSet<String> = transitions.iter().cloned().collect();
    let mut places = Vec::with_capacity(spec.places.len());
    for (idx, p) in spec.places.iter().enumerate() {
        if p.marking <= 1 {
            places.push(p.clone());
            continue;
        }
        let mut prev = p.from;
        for step in 1..p.marking {
            let base = format!(
                "{}_{}_p{}_{}",
                spec.transitions[p.from],
                spec.transitions[p.to],
                idx + 1,
                step
            );
            transitions.push(fresh_name(&mut taken, base));
            let fresh = transitions.len() - 1;
            places.push(Place::new(prev, fresh, 1, Rational::zero(), Some(Rational::zero())));
            prev = fresh;
        }
        places.push(Place::new(prev, p.to, 1, p.lower.clone(), p.upper.clone()));
    }
    let out = EventGraphSpec::new(transitions, places);
    debug_assert_eq!(out.transition_count(), spec.normalized_transition_count());
    let pteg = Pteg::from_spec(&out)?;
    Ok(Normalized {
        spec: out,
        pteg,
        transition_map: (0..spec.transition_count()).collect(),
    })
}
