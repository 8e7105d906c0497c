use num_bigint::BigInt;
use num_traits::One;

use super::{positive_circuit_at, FeasibleSet, PicTriple};
use crate::rational::{simplest_between, Rational};

/// A-priori bound `1 + n·max|entry|` on the magnitude of every finite
/// endpoint and every circuit breakpoint.
pub fn endpoint_bound(t: &PicTriple) -> Rational {
    Rational::one() + Rational::from_integer(BigInt::from(t.n())) * t.max_abs_entry()
}

struct Search<'a> {
    t: &'a PicTriple,
    bound: Rational,
    // endpoints are k·λ + w = 0 roots with 1 ≤ k ≤ n, so their denominators
    // are at most n·D
    max_den: BigInt,
    // half the minimum gap between two such rationals
    eps: Rational,
}

#[derive(Clone, Copy)]
enum Side {
    Lower,
    Upper,
}

impl Search<'_> {
    // Exact sublevel interval of a positive circuit found at λ.
    fn witness_cut(&self, lambda: &Rational) -> Option<FeasibleSet> {
        let c = positive_circuit_at(self.t, lambda)?;
        let pwl = self.t.graph().circuit_pwl(&c).expect("witness uses existing arcs");
        Some(pwl.nonpositive_set())
    }

    fn snap(&self, lo: &Rational, hi: &Rational) -> Rational {
        let s = simplest_between(lo, hi);
        debug_assert!(s.denom() <= &self.max_den, "snapped {s} exceeds denominator bound");
        s
    }

    // A feasible λ, or None when the set is empty. The bracket always
    // contains the feasible set and at least halves per probe.
    fn locate(&self) -> Option<Rational> {
        let two = Rational::from_integer(2.into());
        let mut lo = -self.bound.clone();
        let mut hi = self.bound.clone();
        loop {
            if &hi - &lo < self.eps {
                let s = self.snap(&lo, &hi);
                return self.witness_cut(&s).is_none().then_some(s);
            }
            let mid = (&lo + &hi) / &two;
            match self.witness_cut(&mid) {
                None => return Some(mid),
                Some(cut) => match FeasibleSet::closed(lo, hi).intersect(&cut) {
                    FeasibleSet::Interval {
                        lo: Some(l),
                        hi: Some(h),
                    } => {
                        lo = l;
                        hi = h;
                    }
                    _ => return None,
                },
            }
        }
    }

    // Endpoint on `side` of the feasible interval containing `inside`;
    // None when unbounded on that side.
    fn endpoint(&self, inside: &Rational, side: Side) -> Option<Rational> {
        let outer = match side {
            Side::Lower => -self.bound.clone(),
            Side::Upper => self.bound.clone(),
        };
        self.witness_cut(&outer)?;
        // the endpoint lies between `far` (infeasible side) and `near`
        let two = Rational::from_integer(2.into());
        let mut far = outer;
        let mut near = inside.clone();
        loop {
            let width = match side {
                Side::Lower => &near - &far,
                Side::Upper => &far - &near,
            };
            if width < self.eps {
                break;
            }
            let mid = (&far + &near) / &two;
            match self.witness_cut(&mid) {
                None => near = mid,
                Some(cut) => {
                    // the witness's own sublevel set contains the feasible
                    // set, so its bound on this side is a valid new `far`
                    let bound = match side {
                        Side::Lower => cut.lo().cloned(),
                        Side::Upper => cut.hi().cloned(),
                    };
                    far = mid;
                    if let Some(b) = bound {
                        let tighter = match side {
                            Side::Lower => b > far && b <= near,
                            Side::Upper => b < far && b >= near,
                        };
                        if tighter {
                            if self.witness_cut(&b).is_none() {
                                return Some(b);
                            }
                            far = b;
                        }
                    }
                }
            }
        }
        let s = match side {
            Side::Lower => self.snap(&far, &near),
            Side::Upper => self.snap(&near, &far),
        };
        assert!(
            self.witness_cut(&s).is_none(),
            "snapped endpoint {s} is infeasible; denominator bound violated"
        );
        Some(s)
    }
}

/// Polynomial-time solver: locate a feasible point, then bisect each
/// endpoint and snap it to the unique rational with denominator at most
/// `n·D` in the final bracket.
pub fn solve_fast(t: &PicTriple) -> FeasibleSet {
    let n = t.n();
    if n == 0 {
        return FeasibleSet::everything();
    }
    let max_den = BigInt::from(n) * t.denominator_lcm();
    let eps = Rational::new(BigInt::one(), BigInt::from(2) * &max_den * &max_den);
    let search = Search {
        t,
        bound: endpoint_bound(t),
        max_den,
        eps,
    };
    let Some(inside) = search.locate() else {
        return FeasibleSet::Empty;
    };
    let lo = search.endpoint(&inside, Side::Lower);
    let hi = search.endpoint(&inside, Side::Upper);
    let set = FeasibleSet::interval(lo, hi);
    if let (Some(l), Some(h)) = (set.lo(), set.hi()) {
        let interior = (l + h) / Rational::from_integer(2.into());
        assert!(search.witness_cut(&interior).is_none(), "interior point {interior} infeasible");
    }
    set
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maxplus::{ExtScalar, MpMatrix};
    use crate::ncp::{feasible_at, solve_exact};
    use crate::rational::{int, ratio};

    fn single(p: Option<i64>, i: Option<i64>, c: Option<i64>) -> PicTriple {
        let m = |v: Option<i64>| {
            let mut x = MpMatrix::bottoms(1, 1);
            if let Some(v) = v {
                x.set(0, 0, ExtScalar::int(v));
            }
            x
        };
        PicTriple::new(m(p), m(i), m(c)).unwrap()
    }

    #[test]
    fn identity_inverse_term_gives_nonnegative_half_line() {
        let n = 3;
        let e = MpMatrix::bottoms(n, n);
        let t = PicTriple::new(e.clone(), MpMatrix::identity(n), e).unwrap();
        assert_eq!(solve_fast(&t), FeasibleSet::interval(Some(int(0)), None));
        assert_eq!(solve_exact(&t).unwrap(), solve_fast(&t));
    }

    #[test]
    fn degenerate_point_without_breakpoints() {
        // P11 = -3 forces λ ≤ 3, I22 = 3 forces λ ≥ 3
        let mut p = MpMatrix::bottoms(2, 2);
        p.set(0, 0, ExtScalar::int(-3));
        let mut i = MpMatrix::bottoms(2, 2);
        i.set(1, 1, ExtScalar::int(3));
        let t = PicTriple::new(p, i, MpMatrix::bottoms(2, 2)).unwrap();
        assert_eq!(solve_fast(&t), FeasibleSet::closed(int(3), int(3)));
    }

    #[test]
    fn small_cases() {
        assert_eq!(solve_fast(&PicTriple::empty(3)), FeasibleSet::everything());
        assert_eq!(solve_fast(&PicTriple::empty(0)), FeasibleSet::everything());
        assert_eq!(solve_fast(&single(None, None, Some(1))), FeasibleSet::Empty);
        assert_eq!(solve_fast(&single(None, None, Some(0))), FeasibleSet::everything());
        assert_eq!(solve_fast(&single(Some(2), None, None)), FeasibleSet::interval(None, Some(int(-2))));
        assert_eq!(solve_fast(&single(Some(-1), Some(1), None)), FeasibleSet::closed(int(1), int(1)));
        assert_eq!(solve_fast(&single(Some(0), Some(1), None)), FeasibleSet::Empty);
    }

    #[test]
    fn fractional_endpoints() {
        let b = ExtScalar::Bottom;
        let p = MpMatrix::from_rows(vec![vec![b.clone(), b.clone(), ExtScalar::ratio(-5, 2)], vec![b.clone(), b.clone(), b.clone()], vec![b.clone(), b.clone(), b.clone()]]).unwrap();
        let i = MpMatrix::from_rows(vec![vec![b.clone(), b.clone(), b.clone()], vec![ExtScalar::int(1), b.clone(), b.clone()], vec![b.clone(), ExtScalar::ratio(1, 3), b.clone()]]).unwrap();
        let t = PicTriple::new(p, i, MpMatrix::bottoms(3, 3)).unwrap();
        let exact = solve_exact(&t).unwrap();
        assert_eq!(solve_fast(&t), exact);
        // single circuit 1 -> 2 -> 3 -> 1 with weight 1 + 1/3 - 5/2 - λ
        assert_eq!(exact, FeasibleSet::interval(Some(ratio(-7, 6)), None));
        assert!(feasible_at(&t, &ratio(-7, 6)));
    }
}
