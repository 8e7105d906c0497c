use num_bigint::BigInt;

use super::{pic_reduction, Pteg, PtegError};
use crate::maxplus::{ExtScalar, MpMatrix};
use crate::ncp::PicTriple;
use crate::rational::Rational;

fn check_d(d: usize) -> Result<(), PtegError> {
    if d == 0 {
        Err(PtegError::ZeroPeriodicity)
    } else {
        Ok(())
    }
}

// d×d matrix with zeros at (k, k+offset) for every valid k.
fn shift(d: usize, offset: isize) -> MpMatrix {
    MpMatrix::from_fn(d, d, |r, c| {
        if c as isize - r as isize == offset {
            ExtScalar::zero()
        } else {
            ExtScalar::Bottom
        }
    })
}

fn unit(d: usize, r: usize, c: usize, v: ExtScalar) -> MpMatrix {
    let mut m = MpMatrix::bottoms(d, d);
    m.set(r, c, v);
    m
}

/// The `d×d` blocks `(T_P, T_I, T_C)`: `T_P` is a superdiagonal of zeros
/// plus `d·λ` in the bottom-left corner, `T_I` a subdiagonal of zeros plus
/// `−d·λ` in the top-right corner, `T_C = E⊗`.
pub fn tensor_blocks(d: usize, lambda: &Rational) -> Result<(MpMatrix, MpMatrix, MpMatrix), PtegError> {
    check_d(d)?;
    let dl = Rational::from_integer(BigInt::from(d)) * lambda;
    let tp = shift(d, 1)
        .oplus(&unit(d, d - 1, 0, ExtScalar::Finite(dl.clone())))
        .expect("same shape");
    let ti = shift(d, -1)
        .oplus(&unit(d, 0, d - 1, ExtScalar::Finite(-dl)))
        .expect("same shape");
    Ok((tp, ti, MpMatrix::identity(d)))
}

/// `(T_P ⊗ᵗ P) ⊕ (T_I ⊗ᵗ I) ⊕ (T_C ⊗ᵗ C)`: the `dn×dn` system whose
/// non-positive-circuit condition characterises `d`-periodic trajectories
/// with period `λ`.
pub fn tensor_system(p: &Pteg, d: usize, lambda: &Rational) -> Result<MpMatrix, PtegError> {
    let (tp, ti, tc) = tensor_blocks(d, lambda)?;
    let t = pic_reduction(p);
    Ok(tp
        .tensor(t.p())
        .oplus(&ti.tensor(t.i()))
        .and_then(|m| m.oplus(&tc.tensor(t.c())))
        .expect("blocks share a shape"))
}

/// The tensor system as a PIC triple in `μ = d·λ`: `μP′ ⊕ μ⁻¹I′ ⊕ C′`
/// equals [`tensor_system`] at `λ = μ/d`.
pub fn tensor_pic(p: &Pteg, d: usize) -> Result<PicTriple, PtegError> {
    check_d(d)?;
    let t = pic_reduction(p);
    let pp = unit(d, d - 1, 0, ExtScalar::zero()).tensor(t.p());
    let ip = unit(d, 0, d - 1, ExtScalar::zero()).tensor(t.i());
    let cp = shift(d, 1)
        .tensor(t.p())
        .oplus(&shift(d, -1).tensor(t.i()))
        .and_then(|m| m.oplus(&MpMatrix::identity(d).tensor(t.c())))
        .expect("blocks share a shape");
    Ok(PicTriple::new(pp, ip, cp).expect("square with finite or bottom entries"))
}
