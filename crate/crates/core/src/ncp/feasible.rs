use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::PicTriple;
use crate::maxplus::ExtScalar;
use crate::precgraph::{find_positive_circuit, Circuit};
use crate::rational::Rational;

/// Entries multiplied by the common denominator `D`, as `i128`.
#[derive(Debug, Clone)]
pub(super) struct ScaledTriple {
    n: usize,
    denom: BigInt,
    // (from, to, P·D, I·D, C·D)
    arcs: Vec<(usize, usize, Option<i128>, Option<i128>, Option<i128>)>,
}

fn scale(entry: &ExtScalar, denom: &BigInt) -> Result<Option<i128>, ()> {
    match entry {
        ExtScalar::Finite(r) => {
            let v = r * Rational::from_integer(denom.clone());
            debug_assert!(v.is_integer());
            v.to_integer().to_i128().map(Some).ok_or(())
        }
        _ => Ok(None),
    }
}

impl ScaledTriple {
    pub(super) fn new(t: &PicTriple) -> Option<Self> {
        let denom = t.denominator_lcm();
        let mut arcs = Vec::new();
        for (from, to, w) in t.graph().arcs() {
            arcs.push((
                from,
                to,
                scale(&w.p, &denom).ok()?,
                scale(&w.i, &denom).ok()?,
                scale(&w.c, &denom).ok()?,
            ));
        }
        Some(ScaledTriple { n: t.n(), denom, arcs })
    }

    // Weights at λ = a/b scaled by D·b; None when something overflows.
    fn weights_at(&self, lambda: &Rational) -> Option<Vec<(usize, usize, i128)>> {
        let a_d = (lambda.numer() * &self.denom).to_i128()?;
        let b = lambda.denom().to_i128()?;
        let mut out = Vec::with_capacity(self.arcs.len());
        for &(from, to, p, i, c) in &self.arcs {
            let mut best: Option<i128> = None;
            let mut take = |v: i128| best = Some(best.map_or(v, |x| x.max(v)));
            if let Some(p) = p {
                take(p.checked_mul(b)?.checked_add(a_d)?);
            }
            if let Some(i) = i {
                take(i.checked_mul(b)?.checked_sub(a_d)?);
            }
            if let Some(c) = c {
                take(c.checked_mul(b)?);
            }
            out.push((from, to, best.expect("arc has a finite term")));
        }
        Some(out)
    }

    fn positive_circuit_at(&self, lambda: &Rational) -> Option<Option<Vec<usize>>> {
        let arcs = self.weights_at(lambda)?;
        find_positive_circuit(self.n, &arcs).ok()
    }
}

fn rational_positive_circuit(t: &PicTriple, lambda: &Rational) -> Option<Vec<usize>> {
    let arcs: Vec<(usize, usize, Rational)> = t
        .graph()
        .arcs()
        .into_iter()
        .map(|(from, to, w)| {
            let weight = w.eval(lambda).as_finite().cloned().expect("arc has a finite term");
            (from, to, weight)
        })
        .collect();
    find_positive_circuit(t.n(), &arcs).expect("rational arithmetic cannot overflow")
}

/// A positive circuit of `G(λP ⊕ λ⁻¹I ⊕ C)`, or `None` when `λ` is feasible.
pub fn positive_circuit_at(t: &PicTriple, lambda: &Rational) -> Option<Circuit> {
    let found = match t.scaled().and_then(|s| s.positive_circuit_at(lambda)) {
        Some(found) => found,
        None => rational_positive_circuit(t, lambda),
    };
    found.map(Circuit::new)
}

/// True iff `G(λP ⊕ λ⁻¹I ⊕ C)` has no positive circuit.
pub fn feasible_at(t: &PicTriple, lambda: &Rational) -> bool {
    positive_circuit_at(t, lambda).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maxplus::MpMatrix;
    use crate::precgraph::detect_positive_circuit;
    use crate::rational::{int, ratio};

    #[test]
    fn empty_triple_is_always_feasible() {
        let t = PicTriple::empty(4);
        for l in [int(-100), int(0), ratio(7, 3)] {
            assert!(feasible_at(&t, &l));
        }
    }

    #[test]
    fn overflowing_scale_falls_back_to_rationals() {
        let huge = ExtScalar::Finite(Rational::from_integer(BigInt::from(10u8).pow(40)));
        let mut c = MpMatrix::bottoms(1, 1);
        c.set(0, 0, huge);
        let e = MpMatrix::bottoms(1, 1);
        let t = PicTriple::new(e.clone(), e, c).unwrap();
        assert!(t.scaled().is_none());
        assert!(!feasible_at(&t, &int(0)));
        let mut p = MpMatrix::bottoms(1, 1);
        p.set(0, 0, ExtScalar::int(0));
        let t = PicTriple::new(p, MpMatrix::bottoms(1, 1), MpMatrix::bottoms(1, 1)).unwrap();
        let tiny = Rational::new(BigInt::from(-1), BigInt::from(10u8).pow(45));
        assert!(feasible_at(&t, &tiny));
        assert!(!feasible_at(&t, &-tiny));
    }

    proptest::proptest! {
        #[test]
        fn scaled_path_agrees_with_matrix_route(
            entries in proptest::collection::vec(proptest::option::weighted(0.4, (-12i64..12, 1i64..4)), 48),
            num in -40i64..40, den in 1i64..7,
        ) {
            let n = 4;
            let mk = |k: usize| MpMatrix::from_fn(n, n, |r, c| match entries[k * 16 + r * n + c] {
                Some((a, b)) => ExtScalar::ratio(a, b),
                None => ExtScalar::Bottom,
            });
            let t = PicTriple::new(mk(0), mk(1), mk(2)).unwrap();
            let lambda = ratio(num, den);
            let fast = positive_circuit_at(&t, &lambda);
            let slow = detect_positive_circuit(&t.eval(&lambda)).unwrap();
            proptest::prop_assert_eq!(fast.is_none(), slow.is_none());
            if let Some(c) = fast {
                let w = crate::precgraph::PrecGraph::from_matrix(&t.eval(&lambda)).unwrap().circuit_weight(&c).unwrap();
                proptest::prop_assert!(w > int(0));
            }
        }
    }
}
