#![allow(dead_code)]

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use ptegkit::maxplus::{ExtScalar, MpMatrix};
use ptegkit::ncp::PicTriple;
use ptegkit::pteg::{EventGraphSpec, Place};
use ptegkit::rational::{int, ratio, Rational};

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// `k / den` with `|k / den| ≤ bound` and `den ∈ 1..=max_den`.
pub fn rational(rng: &mut ChaCha8Rng, bound: i64, max_den: i64) -> Rational {
    let den = rng.gen_range(1..=max_den);
    ratio(rng.gen_range(-bound * den..=bound * den), den)
}

pub fn nonneg(rng: &mut ChaCha8Rng, bound: i64, dens: &[i64]) -> Rational {
    let den = dens[rng.gen_range(0..dens.len())];
    ratio(rng.gen_range(0..=bound * den), den)
}

/// Matrix over `R ∪ {−∞}` with finite entries at the given density.
pub fn sparse_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, density: f64, bound: i64, max_den: i64) -> MpMatrix {
    MpMatrix::from_fn(rows, cols, |_, _| {
        if rng.gen_bool(density) {
            ExtScalar::Finite(rational(rng, bound, max_den))
        } else {
            ExtScalar::Bottom
        }
    })
}

/// Matrix whose entries are ε, ⊤ or finite with the given weights.
pub fn extended_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, p_bottom: f64, p_top: f64) -> MpMatrix {
    MpMatrix::from_fn(rows, cols, |_, _| {
        let u: f64 = rng.gen();
        if u < p_bottom {
            ExtScalar::Bottom
        } else if u < p_bottom + p_top {
            ExtScalar::Top
        } else {
            ExtScalar::Finite(rational(rng, 8, 4))
        }
    })
}

pub fn random_triple(rng: &mut ChaCha8Rng, n: usize, density: f64) -> PicTriple {
    let p = sparse_matrix(rng, n, n, density, 10, 4);
    let i = sparse_matrix(rng, n, n, density, 10, 4);
    let c = sparse_matrix(rng, n, n, density, 10, 4);
    PicTriple::new(p, i, c).expect("square, no +inf")
}

fn names(n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("t{k}")).collect()
}

/// Random valid spec with `n` transitions and markings up to
/// `max_marking`; bounds have denominators in {1, 2, 4}.
///
/// Half of the specs are planted (see [`planted_spec`]).
pub fn random_spec(rng: &mut ChaCha8Rng, n: usize, max_marking: u32) -> EventGraphSpec {
    let planted = rng.gen_bool(0.5);
    let count = rng.gen_range(1..=2 * n + 2);
    build_spec(rng, n, count, max_marking, planted)
}

/// Spec whose bounds surround the delays of a hidden 1-periodic
/// trajectory, so that its period set is non-empty.
pub fn planted_spec(rng: &mut ChaCha8Rng, n: usize, places: usize, max_marking: u32) -> EventGraphSpec {
    build_spec(rng, n, places, max_marking, true)
}

fn build_spec(rng: &mut ChaCha8Rng, n: usize, count: usize, max_marking: u32, planted: bool) -> EventGraphSpec {
    const DENS: [i64; 3] = [1, 2, 4];
    let lambda = nonneg(rng, 5, &DENS);
    let x: Vec<Rational> = (0..n).map(|_| nonneg(rng, 10, &DENS)).collect();
    let mut places = Vec::with_capacity(count);
    for _ in 0..count {
        let from = rng.gen_range(0..n);
        let to = rng.gen_range(0..n);
        let marking = rng.gen_range(0..=max_marking);
        let (lower, upper) = if planted {
            let delay = &x[to] + Rational::from_integer(BigInt::from(marking)) * &lambda - &x[from];
            if delay < int(0) {
                continue;
            }
            let below = nonneg(rng, 2, &DENS);
            let lower = if below > delay { int(0) } else { &delay - below };
            let upper = rng.gen_bool(0.6).then(|| &delay + nonneg(rng, 2, &DENS));
            (lower, upper)
        } else {
            let lower = nonneg(rng, 6, &DENS);
            let upper = rng.gen_bool(0.5).then(|| &lower + nonneg(rng, 6, &DENS));
            (lower, upper)
        };
        places.push(Place::new(from, to, marking, lower, upper));
    }
    let spec = EventGraphSpec::new(names(n), places);
    if ptegkit::pteg::validate_spec(&spec).is_ok() {
        spec
    } else {
        // only duplicate places with disjoint intervals can fail; retry
        build_spec(rng, n, count, max_marking, planted)
    }
}
