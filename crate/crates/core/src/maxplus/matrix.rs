use std::fmt;

use crate::maxplus::{ExtScalar, MaxPlusError};
use crate::precgraph::Circuit;
use crate::rational::Rational;

/// Dense row-major matrix over the completed max-plus semifield.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MpMatrix {
    rows: usize,
    cols: usize,
    data: Vec<ExtScalar>,
}

impl MpMatrix {
    pub fn filled(rows: usize, cols: usize, value: ExtScalar) -> Self {
        MpMatrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    /// The all-ε matrix 𝓔.
    pub fn bottoms(rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, ExtScalar::Bottom)
    }

    /// The max-plus identity E⊗.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::bottoms(n, n);
        for i in 0..n {
            m.set(i, i, ExtScalar::zero());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<ExtScalar>>) -> Result<Self, MaxPlusError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(MaxPlusError::RaggedRows);
        }
        Ok(MpMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a column vector.
    pub fn column(values: Vec<ExtScalar>) -> Self {
        MpMatrix {
            rows: values.len(),
            cols: 1,
            data: values,
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> ExtScalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        MpMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &ExtScalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: ExtScalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = &ExtScalar> {
        self.data.iter()
    }

    pub fn row(&self, i: usize) -> &[ExtScalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn has_top(&self) -> bool {
        self.data.iter().any(ExtScalar::is_top)
    }

    pub fn has_bottom(&self) -> bool {
        self.data.iter().any(ExtScalar::is_bottom)
    }

    pub fn finite_entries(&self) -> impl Iterator<Item = &Rational> {
        self.data.iter().filter_map(ExtScalar::as_finite)
    }

    fn check_same_shape(&self, other: &Self) -> Result<(), MaxPlusError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(MaxPlusError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&ExtScalar, &ExtScalar) -> ExtScalar) -> Result<Self, MaxPlusError> {
        self.check_same_shape(other)?;
        Ok(MpMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    /// Elementwise max.
    pub fn oplus(&self, other: &Self) -> Result<Self, MaxPlusError> {
        self.zip_with(other, ExtScalar::oplus)
    }

    /// Elementwise min.
    pub fn wedge(&self, other: &Self) -> Result<Self, MaxPlusError> {
        self.zip_with(other, ExtScalar::wedge)
    }

    fn product(
        &self,
        other: &Self,
        init: ExtScalar,
        mul: impl Fn(&ExtScalar, &ExtScalar) -> ExtScalar,
        add: impl Fn(&ExtScalar, &ExtScalar) -> ExtScalar,
    ) -> Result<Self, MaxPlusError> {
        if self.cols != other.rows {
            return Err(MaxPlusError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(MpMatrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(init.clone(), |acc, k| add(&acc, &mul(self.get(i, k), other.get(k, j))))
        }))
    }

    /// Max-plus product `(A ⊗ C)ij = ⊕ₖ Aik ⊗ Ckj`.
    pub fn otimes(&self, other: &Self) -> Result<Self, MaxPlusError> {
        self.product(other, ExtScalar::Bottom, ExtScalar::otimes, ExtScalar::oplus)
    }

    /// Dual product `(A ⊙ C)ij = ∧ₖ Aik ⊙ Ckj`.
    pub fn odot(&self, other: &Self) -> Result<Self, MaxPlusError> {
        self.product(other, ExtScalar::Top, ExtScalar::odot, ExtScalar::wedge)
    }

    /// `A ⊗ A ⊗ … ⊗ A` (`power` factors; `E⊗` for zero).
    pub fn power(&self, power: usize) -> Result<Self, MaxPlusError> {
        if !self.is_square() {
            return Err(MaxPlusError::NotSquare(self.rows, self.cols));
        }
        let mut acc = MpMatrix::identity(self.rows);
        for _ in 0..power {
            acc = acc.otimes(self)?;
        }
        Ok(acc)
    }

    /// Conjugate `(A♯)ij = (Aji)⁻¹`, i.e. `−Aᵀ`.
    pub fn conjugate(&self) -> Self {
        MpMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).inverse())
    }

    /// `λ ⊗ A` for a finite `λ`.
    pub fn scalar_mul(&self, lambda: &Rational) -> Self {
        let coeff = ExtScalar::Finite(lambda.clone());
        self.scale(&coeff)
    }

    /// `c ⊗ A` for any extended scalar.
    pub fn scale(&self, coeff: &ExtScalar) -> Self {
        MpMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| coeff.otimes(a)).collect(),
        }
    }

    /// Tensor (Kronecker) product: block (i,j) is `Aij ⊗ B`.
    pub fn tensor(&self, other: &Self) -> Self {
        let (p, q) = (other.rows, other.cols);
        MpMatrix::from_fn(self.rows * p, self.cols * q, |r, c| {
            self.get(r / p, c / q).otimes(other.get(r % p, c % q))
        })
    }

    /// Kleene star `A* = E⊗ ⊕ A ⊕ A² ⊕ …`, computed by an in-place
    /// Floyd–Warshall sweep.
    ///
    /// Fails with a witness circuit as soon as a diagonal entry turns
    /// positive.
    pub fn kleene_star(&self) -> Result<Self, MaxPlusError> {
        if !self.is_square() {
            return Err(MaxPlusError::NotSquare(self.rows, self.cols));
        }
        if self.has_top() {
            return Err(MaxPlusError::TopEntry);
        }
        let n = self.rows;
        let mut s = self.clone();
        // via[i*n+j] = pivot that last improved the j -> i path
        let mut via: Vec<Option<usize>> = vec![None; n * n];
        if let Some(i) = (0..n).find(|&i| is_positive(s.get(i, i))) {
            return Err(MaxPlusError::PositiveCircuit(Circuit::new(vec![i])));
        }
        for k in 0..n {
            for i in 0..n {
                let s_ik = s.get(i, k).clone();
                if s_ik.is_bottom() {
                    continue;
                }
                for j in 0..n {
                    let cand = s_ik.otimes(s.get(k, j));
                    if cand > *s.get(i, j) {
                        s.set(i, j, cand);
                        via[i * n + j] = Some(k);
                    }
                }
            }
            if let Some(i) = (0..n).find(|&i| is_positive(s.get(i, i))) {
                return Err(MaxPlusError::PositiveCircuit(star_witness(self, &via, i)));
            }
        }
        Ok(s.oplus(&MpMatrix::identity(n)).expect("same shape"))
    }
}

fn is_positive(a: &ExtScalar) -> bool {
    *a > ExtScalar::zero()
}

// Appends the nodes strictly between `from` and `to` on the recorded
// best path from -> to.
fn expand_path(via: &[Option<usize>], n: usize, from: usize, to: usize, out: &mut Vec<usize>, depth: usize) {
    if depth > n * n {
        return;
    }
    if let Some(k) = via[to * n + from] {
        if k != from && k != to {
            expand_path(via, n, from, k, out, depth + 1);
            out.push(k);
            expand_path(via, n, k, to, out, depth + 1);
        }
    }
}

// Rebuilds the closed walk through `node` and returns a positive simple
// circuit contained in it.
fn star_witness(a: &MpMatrix, via: &[Option<usize>], node: usize) -> Circuit {
    let n = a.rows();
    let mut walk = vec![node];
    expand_path(via, n, node, node, &mut walk, 0);
    let candidate = Circuit::new(walk.clone());
    crate::precgraph::positive_subcircuit(a, &walk).unwrap_or(candidate)
}

impl fmt::Display for MpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A matrix multiplied by a scalar coefficient, kept symbolic until
/// evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledMatrix {
    pub coefficient: ExtScalar,
    pub matrix: MpMatrix,
}

impl ScaledMatrix {
    pub fn new(coefficient: ExtScalar, matrix: MpMatrix) -> Self {
        ScaledMatrix { coefficient, matrix }
    }

    pub fn eval(&self) -> MpMatrix {
        self.matrix.scale(&self.coefficient)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maxplus::ExtScalar::{Bottom as B, Top as T};
    use crate::rational::{int, ratio};

    fn s(v: i64) -> ExtScalar {
        ExtScalar::int(v)
    }

    fn half(num: i64) -> ExtScalar {
        ExtScalar::ratio(num, 2)
    }

    fn m(rows: Vec<Vec<ExtScalar>>) -> MpMatrix {
        MpMatrix::from_rows(rows).unwrap()
    }

    // A¹ and B⁰, B¹ of the three-transition example.
    fn a1() -> MpMatrix {
        m(vec![vec![B, s(0), B], vec![B, B, half(1)], vec![B, B, s(0)]])
    }

    fn b0() -> MpMatrix {
        m(vec![vec![T, T, T], vec![s(3), T, T], vec![T, T, T]])
    }

    fn b1() -> MpMatrix {
        m(vec![vec![T, T, T], vec![T, T, T], vec![T, T, s(4)]])
    }

    #[test]
    fn oplus_with_neutral_and_identity() {
        let a = a1();
        assert_eq!(a.oplus(&MpMatrix::bottoms(3, 3)).unwrap(), a);
        let expected = m(vec![vec![s(0), s(0), B], vec![B, s(0), half(1)], vec![B, B, s(0)]]);
        assert_eq!(a.oplus(&MpMatrix::identity(3)).unwrap(), expected);
        assert_eq!(a.wedge(&a).unwrap(), a);
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let a = MpMatrix::bottoms(2, 3);
        assert!(a.oplus(&MpMatrix::bottoms(3, 2)).is_err());
        assert!(a.otimes(&MpMatrix::bottoms(2, 2)).is_err());
        assert!(a.odot(&MpMatrix::bottoms(2, 3)).is_err());
    }

    #[test]
    fn products() {
        let a = a1();
        assert_eq!(MpMatrix::identity(3).otimes(&a).unwrap(), a);
        let nil = m(vec![vec![B, s(1)], vec![B, B]]);
        assert_eq!(nil.otimes(&nil).unwrap(), MpMatrix::bottoms(2, 2));
        let top_row = m(vec![vec![T, T], vec![s(1), s(2)]]);
        let x = m(vec![vec![s(0), B], vec![s(5), s(1)]]);
        let r = top_row.odot(&x).unwrap();
        assert_eq!(r.row(0), &[T, T]);
        assert_eq!(r.row(1), &[s(1), ExtScalar::Bottom]);
    }

    #[test]
    fn conjugates() {
        let p = b1().conjugate();
        for i in 0..3 {
            for j in 0..3 {
                let expected = if (i, j) == (2, 2) { s(-4) } else { B };
                assert_eq!(p.get(i, j), &expected);
            }
        }
        let c = b0().conjugate();
        assert_eq!(c.get(0, 1), &s(-3));
        assert_eq!(c.finite_entries().count(), 1);
        assert_eq!(c.conjugate(), b0());
    }

    #[test]
    fn scalar_multiplication() {
        let p = b1().conjugate();
        assert_eq!(p.scalar_mul(&int(0)), p);
        let shifted = p.scalar_mul(&int(4));
        assert_eq!(shifted.get(2, 2), &s(0));
        assert_eq!(shifted.finite_entries().count(), 1);
        assert_eq!(MpMatrix::bottoms(2, 2).scalar_mul(&ratio(7, 3)), MpMatrix::bottoms(2, 2));
        let sm = ScaledMatrix::new(s(4), p.clone());
        assert_eq!(sm.eval(), shifted);
    }

    #[test]
    fn kleene_star_small_cases() {
        assert_eq!(MpMatrix::bottoms(4, 4).kleene_star().unwrap(), MpMatrix::identity(4));
        let a = m(vec![vec![B, s(1)], vec![B, B]]);
        assert_eq!(a.kleene_star().unwrap(), m(vec![vec![s(0), s(1)], vec![B, s(0)]]));
        let loop_pos = m(vec![vec![B, s(1)], vec![s(0), B]]);
        match loop_pos.kleene_star() {
            Err(MaxPlusError::PositiveCircuit(c)) => assert_eq!(c.nodes(), &[0, 1]),
            other => panic!("expected positive circuit, got {other:?}"),
        }
        assert!(matches!(m(vec![vec![T]]).kleene_star(), Err(MaxPlusError::TopEntry)));
    }

    #[test]
    fn tensor_layout() {
        let c = m(vec![vec![s(1), B], vec![s(2), s(3)]]);
        let blockdiag = MpMatrix::identity(2).tensor(&c);
        assert_eq!(blockdiag.rows(), 4);
        for bi in 0..2 {
            for bj in 0..2 {
                for i in 0..2 {
                    for j in 0..2 {
                        let expected = if bi == bj { c.get(i, j).clone() } else { B };
                        assert_eq!(blockdiag.get(bi * 2 + i, bj * 2 + j), &expected);
                    }
                }
            }
        }
        let t2p = m(vec![vec![B, s(0)], vec![s(8), B]]);
        let p = b1().conjugate();
        let big = t2p.tensor(&p);
        assert_eq!(big.get(2, 5), &s(-4)); // block (1,2) = P
        assert_eq!(big.get(5, 2), &s(4)); // block (2,1) = 8 ⊗ P
        assert_eq!(big.finite_entries().count(), 2);
    }
}
