//! Fixture geometries shared by the benchmarks.

use fddof::rational::{int, ratio};
use fddof::{ArrayHalfLengths, DirectionSet, ScatteringGeometry};

/// Deterministic pseudo-random geometry with up to three fragments per set
/// and endpoints on a 1/64 grid.
pub fn mixed_geometry(k: u64) -> ScatteringGeometry {
    let mut state = k.wrapping_mul(0x9e37_79b9_7f4a_7c15) | 1;
    let mut next = move |bound: u64| {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state % bound
    };
    let mut set = || {
        let pieces = (0..next(4)).filter_map(|_| {
            let a = next(129) as i64 - 64;
            let b = next(129) as i64 - 64;
            (a != b).then(|| (ratio(a.min(b), 64), ratio(a.max(b), 64)))
        });
        DirectionSet::canonicalize(pieces.collect::<Vec<_>>()).expect("grid endpoints are valid")
    };
    let (t11, r11, t22, r22, t12, r12) = (set(), set(), set(), set(), set(), set());
    let mut len = || ratio(next(64) as i64, next(64) as i64 + 1);
    let lengths = ArrayHalfLengths::new(len(), len(), len(), len()).expect("nonnegative");
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

/// Symmetric geometry with `|fwd| = |back| = 1`, quarter overlap steps and
/// integral atom dimensions.
pub fn symmetric_integral(l: i64, overlap_quarters: i64) -> ScatteringGeometry {
    let fwd = DirectionSet::interval(int(0), int(1)).expect("valid");
    let start = ratio(overlap_quarters - 4, 4);
    let back = DirectionSet::interval(start.clone(), start + int(1)).expect("valid");
    ScatteringGeometry::symmetric(int(4 * l), fwd, back).expect("nonnegative")
}
