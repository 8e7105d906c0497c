use crate::maxplus::{ExtScalar, MpMatrix};
use crate::rational::{format_decimal, Rational};

use super::{dot, Circuit, GraphError, Line, Pwl};

/// Arc weight `max(p + λ, i − λ, c)` of the parametric precedence graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamArcWeight {
    pub p: ExtScalar,
    pub i: ExtScalar,
    pub c: ExtScalar,
}

impl ParamArcWeight {
    pub fn exists(&self) -> bool {
        self.p.is_finite() || self.i.is_finite() || self.c.is_finite()
    }

    fn terms(&self) -> Vec<Line> {
        let mut out = Vec::with_capacity(3);
        if let ExtScalar::Finite(p) = &self.p {
            out.push(Line::new(1, p.clone()));
        }
        if let ExtScalar::Finite(i) = &self.i {
            out.push(Line::new(-1, i.clone()));
        }
        if let ExtScalar::Finite(c) = &self.c {
            out.push(Line::new(0, c.clone()));
        }
        out
    }

    /// Weight at `λ`; ε when no term is finite.
    pub fn eval(&self, lambda: &Rational) -> ExtScalar {
        let l = ExtScalar::Finite(lambda.clone());
        l.otimes(&self.p).oplus(&l.inverse().otimes(&self.i)).oplus(&self.c)
    }

    pub fn pwl(&self) -> Option<Pwl> {
        let terms = self.terms();
        (!terms.is_empty()).then(|| Pwl::upper_envelope(&terms))
    }

    /// Textual envelope such as `max(-4+λ, -λ)` or `0.5-λ`.
    pub fn label(&self) -> String {
        let mut parts = Vec::new();
        if let ExtScalar::Finite(p) = &self.p {
            parts.push(if p == &Rational::from_integer(0.into()) {
                "λ".to_owned()
            } else {
                format!("{}+λ", format_decimal(p))
            });
        }
        if let ExtScalar::Finite(i) = &self.i {
            parts.push(if i == &Rational::from_integer(0.into()) {
                "-λ".to_owned()
            } else {
                format!("{}-λ", format_decimal(i))
            });
        }
        if let ExtScalar::Finite(c) = &self.c {
            parts.push(format_decimal(c));
        }
        match parts.len() {
            0 => "-inf".to_owned(),
            1 => parts.pop().unwrap(),
            _ => format!("max({})", parts.join(", ")),
        }
    }
}

fn check_triple(p: &MpMatrix, i: &MpMatrix, c: &MpMatrix) -> Result<usize, GraphError> {
    if !p.is_square() {
        return Err(GraphError::NotSquare(p.rows(), p.cols()));
    }
    if (i.rows(), i.cols()) != (p.rows(), p.cols()) || (c.rows(), c.cols()) != (p.rows(), p.cols()) {
        return Err(GraphError::DimensionMismatch);
    }
    for m in [p, i, c] {
        for r in 0..m.rows() {
            for col in 0..m.cols() {
                if m.get(r, col).is_top() {
                    return Err(GraphError::TopEntry(r, col));
                }
            }
        }
    }
    Ok(p.rows())
}

/// `A(λ) = λP ⊕ λ⁻¹I ⊕ C`.
pub fn eval_pic(p: &MpMatrix, i: &MpMatrix, c: &MpMatrix, lambda: &Rational) -> Result<MpMatrix, GraphError> {
    check_triple(p, i, c)?;
    Ok(p.scalar_mul(lambda)
        .oplus(&i.scalar_mul(&-lambda))
        .and_then(|m| m.oplus(c))
        .expect("shapes checked"))
}

fn arc_weight(p: &MpMatrix, i: &MpMatrix, c: &MpMatrix, from: usize, to: usize) -> ParamArcWeight {
    ParamArcWeight {
        p: p.get(to, from).clone(),
        i: i.get(to, from).clone(),
        c: c.get(to, from).clone(),
    }
}

/// Exact weight of `circuit` as a convex function of `λ`.
pub fn circuit_pwl(circuit: &Circuit, p: &MpMatrix, i: &MpMatrix, c: &MpMatrix) -> Result<Pwl, GraphError> {
    let n = check_triple(p, i, c)?;
    if circuit.is_empty() {
        return Err(GraphError::NotACircuit("empty node sequence".into()));
    }
    let mut total = Pwl::zero();
    for (from, to) in circuit.arcs() {
        if from >= n || to >= n {
            return Err(GraphError::MissingArc { from, to });
        }
        let arc = arc_weight(p, i, c, from, to).pwl().ok_or(GraphError::MissingArc { from, to })?;
        total = total.add(&arc);
    }
    Ok(total)
}

/// Parametric precedence graph `G(λP ⊕ λ⁻¹I ⊕ C)`; at most one arc per
/// ordered pair, carrying the envelope of the finite terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamGraph {
    n: usize,
    p: MpMatrix,
    i: MpMatrix,
    c: MpMatrix,
}

impl ParamGraph {
    pub fn new(p: MpMatrix, i: MpMatrix, c: MpMatrix) -> Result<Self, GraphError> {
        let n = check_triple(&p, &i, &c)?;
        Ok(ParamGraph { n, p, i, c })
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn weight(&self, from: usize, to: usize) -> Option<ParamArcWeight> {
        let w = arc_weight(&self.p, &self.i, &self.c, from, to);
        w.exists().then_some(w)
    }

    /// `(from, to, weight)` in lexicographic order.
    pub fn arcs(&self) -> Vec<(usize, usize, ParamArcWeight)> {
        let mut out = Vec::new();
        for from in 0..self.n {
            for to in 0..self.n {
                if let Some(w) = self.weight(from, to) {
                    out.push((from, to, w));
                }
            }
        }
        out
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for (from, to, _) in self.arcs() {
            adj[from].push(to);
        }
        adj
    }

    pub fn eval(&self, lambda: &Rational) -> MpMatrix {
        eval_pic(&self.p, &self.i, &self.c, lambda).expect("validated on construction")
    }

    pub fn circuit_pwl(&self, circuit: &Circuit) -> Result<Pwl, GraphError> {
        circuit_pwl(circuit, &self.p, &self.i, &self.c)
    }

    pub fn simple_circuits(&self) -> Vec<Circuit> {
        super::enumerate_simple_circuits(&self.adjacency())
    }

    pub fn to_dot(&self) -> String {
        dot::render(self.n, self.arcs().into_iter().map(|(f, t, w)| (f, t, w.label())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maxplus::ExtScalar::Bottom as B;
    use crate::ncp::FeasibleSet;
    use crate::rational::{int, ratio};

    fn s(v: i64) -> ExtScalar {
        ExtScalar::int(v)
    }

    // P, I, C of the three-transition example
    fn triple() -> (MpMatrix, MpMatrix, MpMatrix) {
        let p = MpMatrix::from_rows(vec![vec![B, B, B], vec![B, B, B], vec![B, B, s(-4)]]).unwrap();
        let i = MpMatrix::from_rows(vec![
            vec![s(0), s(0), B],
            vec![B, s(0), ExtScalar::ratio(1, 2)],
            vec![B, B, s(0)],
        ])
        .unwrap();
        let c = MpMatrix::from_rows(vec![
            vec![B, s(-3), B],
            vec![s(2), B, B],
            vec![s(6), ExtScalar::ratio(1, 2), B],
        ])
        .unwrap();
        (p, i, c)
    }

    #[test]
    fn eval_examples() {
        let (p, i, c) = triple();
        let a4 = eval_pic(&p, &i, &c, &int(4)).unwrap();
        assert_eq!(a4.get(0, 1), &s(-3));
        assert_eq!(a4.get(2, 2), &s(0));
        let a0 = eval_pic(&p, &i, &c, &int(0)).unwrap();
        assert_eq!(a0, p.oplus(&i).unwrap().oplus(&c).unwrap());
        let e = MpMatrix::bottoms(3, 3);
        assert_eq!(eval_pic(&e, &e, &e, &ratio(-7, 3)).unwrap(), e);
        assert!(eval_pic(&p, &MpMatrix::bottoms(2, 2), &c, &int(1)).is_err());
    }

    #[test]
    fn labels_follow_the_figure() {
        let (p, i, c) = triple();
        let g = ParamGraph::new(p, i, c).unwrap();
        let labels: Vec<(usize, usize, String)> = g.arcs().into_iter().map(|(f, t, w)| (f + 1, t + 1, w.label())).collect();
        assert_eq!(
            labels,
            vec![
                (1, 1, "-λ".to_owned()),
                (1, 2, "2".to_owned()),
                (1, 3, "6".to_owned()),
                (2, 1, "max(-λ, -3)".to_owned()),
                (2, 2, "-λ".to_owned()),
                (2, 3, "0.5".to_owned()),
                (3, 2, "0.5-λ".to_owned()),
                (3, 3, "max(-4+λ, -λ)".to_owned()),
            ]
        );
        assert_eq!(g.simple_circuits().len(), 6);
    }

    #[test]
    fn circuit_pwl_examples() {
        let (p, i, c) = triple();
        let big = circuit_pwl(&Circuit::new(vec![0, 2, 1]), &p, &i, &c).unwrap();
        assert_eq!(big.slopes(), vec![-2, -1]);
        assert_eq!(big.eval(&int(0)), ratio(13, 2));
        assert_eq!(big.nonpositive_set(), FeasibleSet::interval(Some(ratio(7, 2)), None));
        let self_loop = circuit_pwl(&Circuit::new(vec![2]), &p, &i, &c).unwrap();
        assert_eq!(self_loop.lines(), &[Line::new(-1, int(0)), Line::new(1, int(-4))]);
        let constant = circuit_pwl(&Circuit::new(vec![1, 2]), &MpMatrix::bottoms(3, 3), &MpMatrix::bottoms(3, 3), &c);
        assert!(matches!(constant, Err(GraphError::MissingArc { .. })));
        let only_c = MpMatrix::from_rows(vec![vec![B, s(1)], vec![s(-2), B]]).unwrap();
        let e = MpMatrix::bottoms(2, 2);
        let k = circuit_pwl(&Circuit::new(vec![0, 1]), &e, &e, &only_c).unwrap();
        assert_eq!(k, Pwl::constant(int(-1)));
    }
}
