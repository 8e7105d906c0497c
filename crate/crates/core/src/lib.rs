//! Exact max-plus algebra for P-time event graphs.
//!
//! The crate computes the set of admissible periods of `d`-periodic
//! schedules by reducing them to a parametric non-positive-circuit problem
//! over `λP ⊕ λ⁻¹I ⊕ C`, and synthesizes and checks concrete trajectories.
//! All arithmetic is over exact rationals.

pub mod cli;
pub mod maxplus;
pub mod ncp;
pub mod precgraph;
pub mod pteg;
pub mod rational;

pub use maxplus::{ExtScalar, MpMatrix};
pub use ncp::{solve_exact, solve_fast, FeasibleSet, PicTriple};
pub use pteg::{EventGraphSpec, Pteg};
pub use rational::Rational;
