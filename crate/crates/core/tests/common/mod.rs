#![allow(dead_code)]

use fddof::oracle::{allocate_basis, integer_rescale};
use fddof::rational::ratio;
use fddof::{ArrayHalfLengths, DirectionSet, Rational, ScatteringGeometry};
use rand::Rng;

/// Uniform rational `n/d` with `d` in `1..=max_denom`, `n/d` in `[lo, hi]`.
pub fn rational_in<R: Rng>(rng: &mut R, lo: i64, hi: i64, max_denom: i64) -> Rational {
    let d = rng.gen_range(1..=max_denom);
    ratio(rng.gen_range(lo * d..=hi * d), d)
}

/// Up to `max_fragments` random pieces of `[-1, 1]` with endpoint
/// denominators at most `max_denom`.
pub fn random_set<R: Rng>(rng: &mut R, max_fragments: usize, max_denom: i64) -> DirectionSet {
    let count = rng.gen_range(0..=max_fragments);
    let pieces: Vec<_> = (0..count)
        .filter_map(|_| {
            let a = rational_in(rng, -1, 1, max_denom);
            let b = rational_in(rng, -1, 1, max_denom);
            match a.cmp(&b) {
                std::cmp::Ordering::Less => Some((a, b)),
                std::cmp::Ordering::Greater => Some((b, a)),
                std::cmp::Ordering::Equal => None,
            }
        })
        .collect();
    DirectionSet::canonicalize(pieces).unwrap()
}

pub fn random_geometry<R: Rng>(rng: &mut R, max_denom: i64) -> ScatteringGeometry {
    let mut set = || random_set(rng, 3, max_denom);
    let (t11, r11, t22, r22, t12, r12) = (set(), set(), set(), set(), set(), set());
    let mut len = || rational_in(rng, 0, 4, max_denom);
    let lengths = ArrayHalfLengths::new(len(), len(), len(), len()).unwrap();
    ScatteringGeometry {
        t11,
        r11,
        t22,
        r22,
        t12,
        r12,
        lengths,
    }
}

/// Random geometry rescaled to integral atom dimensions, with every signal
/// space of dimension at most `max_dim`.
pub fn integral_geometry<R: Rng>(rng: &mut R, max_dim: usize) -> ScatteringGeometry {
    loop {
        let interfering = rng.gen_bool(0.8);
        let mut set = || random_set(rng, 3, 8);
        let (t11, r11, t22, r22, t12, r12) = (set(), set(), set(), set(), set(), set());
        if interfering && (t12.is_empty() || r12.is_empty()) {
            continue;
        }
        let mut len = || ratio(rng.gen_range(1..=8), 2);
        let lengths = ArrayHalfLengths::new(len(), len(), len(), len()).unwrap();
        let g = ScatteringGeometry {
            t11,
            r11,
            t22,
            r22,
            t12,
            r12,
            lengths,
        };
        let (g, _) = integer_rescale(&g);
        let basis = allocate_basis(&g).unwrap();
        let dims = [
            basis.t1.dim(),
            basis.t2.dim(),
            basis.r1.dim(),
            basis.r2.dim(),
        ];
        if dims.iter().all(|&d| d <= max_dim) {
            return g;
        }
    }
}
