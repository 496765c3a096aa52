//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p fddof-core --test acceptance`.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use fddof::oracle::{run_trial, DEFAULT_RANK_TOL, LEAKAGE_TOL};
use fddof::rational::{int, max, min, pos, ratio};
use fddof::{
    corner_points, fd_caps, fd_region, hd_region, is_rectangular, region_relate, DirectionSet,
    Point, Rational, Relation, ScatteringGeometry,
};
use num_traits::{Signed, ToPrimitive};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{integral_geometry, random_geometry, random_set};

struct Outcome {
    passed: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        passed: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        passed: false,
        detail: detail.into(),
    }
}

fn within(limit: Duration, elapsed: Duration, outcome: Outcome) -> Outcome {
    if outcome.passed && elapsed > limit {
        return fail(format!(
            "{} (took {elapsed:?}, limit {limit:?})",
            outcome.detail
        ));
    }
    outcome
}

fn pts(raw: &[(i64, i64)]) -> Vec<Point> {
    raw.iter()
        .map(|&(a, b)| Point::new(int(a), int(b)))
        .collect()
}

/// `|fwd| = |back| = 1`, `L = 1`, overlap `o`.
fn fig4_geometry(overlap: &Rational) -> ScatteringGeometry {
    let fwd = DirectionSet::interval(int(0), int(1)).unwrap();
    let back = DirectionSet::interval(overlap - int(1), overlap.clone()).unwrap();
    ScatteringGeometry::symmetric(int(1), fwd, back).unwrap()
}

fn ac1_overlap_figure() -> Outcome {
    let triangle = pts(&[(2, 0), (0, 2)]);
    let pentagon = pts(&[(2, 0), (2, 1), (1, 2), (0, 2)]);
    let rectangle = pts(&[(2, 0), (2, 2), (0, 2)]);
    let cases = [
        (int(1), &triangle),
        (ratio(3, 4), &pentagon),
        (ratio(1, 2), &rectangle),
        (ratio(1, 4), &rectangle),
        (int(0), &rectangle),
    ];
    for (overlap, expected) in cases {
        let g = fig4_geometry(&overlap);
        let fd: Vec<Point> = fd_region(&g).vertices.into_iter().skip(1).collect();
        if fd != *expected {
            return fail(format!("overlap {overlap}: FD vertices {fd:?}"));
        }
        let hd: Vec<Point> = hd_region(&g).vertices.into_iter().skip(1).collect();
        if hd != triangle {
            return fail(format!("overlap {overlap}: HD vertices {hd:?}"));
        }
    }
    pass("triangle / pentagon / rectangle x3, HD triangle throughout")
}

/// Corner pairs read independently off the three caps.
fn clamped_corners(g: &ScatteringGeometry) -> (Point, Point) {
    let c = fd_caps(g);
    let clamp = |x: Rational, hi: &Rational| min(pos(x), hi.clone());
    (
        Point::new(c.d1_max.clone(), clamp(&c.dsum_max - &c.d1_max, &c.d2_max)),
        Point::new(clamp(&c.dsum_max - &c.d2_max, &c.d1_max), c.d2_max.clone()),
    )
}

fn ac2_corner_identity() -> Outcome {
    const N: usize = 10_000;
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0_41E5);
    let mut branches = [0usize; 4];
    for k in 0..N {
        let g = random_geometry(&mut rng, 64);
        let corners = corner_points(&g);
        let (p1, p2) = clamped_corners(&g);
        if corners.p_prime != p1 || corners.p_double_prime != p2 {
            return fail(format!(
                "geometry #{k}: lemma corners {} {} vs caps {p1} {p2}",
                corners.p_prime, corners.p_double_prime
            ));
        }
        let l = &g.lengths;
        let up = &l.l_t1 * g.t11.measure() >= &l.l_r1 * g.r11.measure();
        let down = &l.l_r2 * g.r22.measure() >= &l.l_t2 * g.t22.measure();
        branches[usize::from(up) * 2 + usize::from(down)] += 1;
    }
    pass(format!("{N} geometries exact; branch counts {branches:?}"))
}

fn integral_set() -> Vec<ScatteringGeometry> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0_7AC1E);
    (0..100).map(|_| integral_geometry(&mut rng, 64)).collect()
}

const SEEDS: u64 = 20;

/// Expected (rank, nullity, codim) for s11, s12, s22, straight from the
/// interval measures.
fn expected_dims(g: &ScatteringGeometry) -> [[Rational; 3]; 3] {
    let l = &g.lengths;
    let two = int(2);
    let m = |s: &DirectionSet| s.measure();
    let dim_t1 = &two * &l.l_t1 * m(&g.t11);
    let dim_t2 = &two * &l.l_t2 * m(&g.t22.union(&g.t12));
    let dim_r1 = &two * &l.l_r1 * m(&g.r11.union(&g.r12));
    let dim_r2 = &two * &l.l_r2 * m(&g.r22);
    let rank11 = &two * min(&l.l_t1 * m(&g.t11), &l.l_r1 * m(&g.r11));
    let rank12 = &two * min(&l.l_t2 * m(&g.t12), &l.l_r1 * m(&g.r12));
    let rank22 = &two * min(&l.l_t2 * m(&g.t22), &l.l_r2 * m(&g.r22));
    let null12 = &two * &l.l_t2 * m(&g.t22.difference(&g.t12))
        + &two * pos(&l.l_t2 * m(&g.t12) - &l.l_r1 * m(&g.r12));
    let codim11 = &two * &l.l_r1 * m(&g.r12.difference(&g.r11))
        + &two * pos(&l.l_r1 * m(&g.r11) - &l.l_t1 * m(&g.t11));
    [
        [rank11.clone(), &dim_t1 - &rank11, codim11],
        [rank12.clone(), null12, &dim_r1 - &rank12],
        [rank22.clone(), &dim_t2 - &rank22, &dim_r2 - &rank22],
    ]
}

fn ac3_operator_identities(geometries: &[ScatteringGeometry]) -> Outcome {
    let mut interfering = 0;
    for (k, g) in geometries.iter().enumerate() {
        let expected = expected_dims(g);
        if !g.t12.is_empty() && !g.r12.is_empty() && g.lengths.l_t2.is_positive() {
            interfering += 1;
        }
        for seed in 0..SEEDS {
            let trial = run_trial(g, seed, DEFAULT_RANK_TOL).unwrap();
            let measured: Vec<Rational> = trial
                .operators
                .checks
                .iter()
                .map(|c| int(c.measured as i64))
                .collect();
            let flat: Vec<Rational> = expected.iter().flatten().cloned().collect();
            if measured != flat {
                return fail(format!(
                    "geometry #{k} seed {seed}: measured {:?} expected {:?}",
                    measured.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    flat.iter().map(|x| x.to_string()).collect::<Vec<_>>()
                ));
            }
        }
    }
    pass(format!(
        "{} geometries x {SEEDS} seeds, 9 identities each ({interfering} with self-interference)",
        geometries.len()
    ))
}

fn ac4_zero_forcing(geometries: &[ScatteringGeometry]) -> Outcome {
    let mut worst = 0.0f64;
    let mut beyond_orthogonal = 0;
    for (k, g) in geometries.iter().enumerate() {
        let (p1, _) = clamped_corners(g);
        let want = (
            p1.d1.to_integer().to_usize().unwrap(),
            p1.d2.to_integer().to_usize().unwrap(),
        );
        for seed in 0..SEEDS {
            let zf = run_trial(g, seed, DEFAULT_RANK_TOL).unwrap().zero_forcing;
            if zf.corner() != want {
                return fail(format!(
                    "geometry #{k} seed {seed}: zero-forcing {:?}, expected {want:?}",
                    zf.corner()
                ));
            }
            if zf.leakage >= LEAKAGE_TOL || zf.decoded_rank != zf.d1 {
                return fail(format!(
                    "geometry #{k} seed {seed}: leakage {:e}, decoded rank {} of {}",
                    zf.leakage, zf.decoded_rank, zf.d1
                ));
            }
            if zf.orthogonal_d2 < zf.d2 {
                beyond_orthogonal += 1;
            }
            worst = worst.max(zf.leakage);
        }
    }
    pass(format!(
        "corners exact, worst leakage {worst:.1e} < {LEAKAGE_TOL:e}; \
         {beyond_orthogonal} trials needed receive-side nulling"
    ))
}

fn ac5_fully_spread() -> Outcome {
    for l_bs in 1..=4 {
        for l_usr in 1..=4 {
            let g = ScatteringGeometry::fully_spread(int(l_bs), int(l_usr)).unwrap();
            let rel = region_relate(&hd_region(&g), &fd_region(&g));
            let want = if l_bs > l_usr {
                Relation::StrictSubset
            } else {
                Relation::Equal
            };
            if rel != want {
                return fail(format!(
                    "L_BS={l_bs} L_Usr={l_usr}: {rel:?}, expected {want:?}"
                ));
            }
        }
    }
    pass("16 array-size pairs")
}

fn ac6_rectangular() -> Outcome {
    const N: usize = 1_000;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5_0A5E);
    let mut rectangular = 0;
    for k in 0..N {
        let l = common::rational_in(&mut rng, 0, 4, 64);
        if !l.is_positive() {
            continue;
        }
        let fwd = random_set(&mut rng, 3, 64);
        let back = random_set(&mut rng, 3, 64);
        let g = ScatteringGeometry::symmetric(l, fwd.clone(), back.clone()).unwrap();
        let condition = back.difference(&fwd).measure() >= fwd.intersection(&back).measure();
        if is_rectangular(&g) != condition {
            return fail(format!("symmetric geometry #{k}: fwd {fwd}, back {back}"));
        }
        rectangular += usize::from(condition);
    }
    pass(format!("{N} draws, {rectangular} rectangular"))
}

fn ac7_genie() -> Outcome {
    const N: usize = 1_000;
    let mut rng = ChaCha8Rng::seed_from_u64(0x6E_41E);
    let mut checked = 0;
    while checked < N {
        let g = random_geometry(&mut rng, 64);
        let Ok(expanded) = g.genie_expand() else {
            continue;
        };
        let signalling = max(expanded.tx2_dim(), expanded.rx1_dim());
        if signalling != fd_caps(&g).dsum_max {
            return fail(format!(
                "max signalling dimension {signalling} vs dsum_max {}",
                fd_caps(&g).dsum_max
            ));
        }
        checked += 1;
    }
    pass(format!("{N} geometries"))
}

fn main() -> ExitCode {
    let mut all = true;
    let mut report = |label: &str, limit: Option<Duration>, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let outcome = match limit {
            Some(limit) => within(limit, elapsed, outcome),
            None => outcome,
        };
        all &= outcome.passed;
        println!(
            "[{}] {label}: {} ({:.2}s)",
            if outcome.passed { "PASS" } else { "FAIL" },
            outcome.detail,
            elapsed.as_secs_f64()
        );
    };

    report(
        "AC1 overlap figure regions",
        Some(Duration::from_secs(1)),
        &mut ac1_overlap_figure,
    );
    report(
        "AC2 corner identity",
        Some(Duration::from_secs(30)),
        &mut ac2_corner_identity,
    );
    let geometries = integral_set();
    report(
        "AC3 operator dimensions",
        Some(Duration::from_secs(60)),
        &mut || ac3_operator_identities(&geometries),
    );
    report(
        "AC4 zero-forcing corner",
        Some(Duration::from_secs(120)),
        &mut || ac4_zero_forcing(&geometries),
    );
    report("AC5 fully spread FD vs HD", None, &mut ac5_fully_spread);
    report("AC6 rectangular condition", None, &mut ac6_rectangular);
    report("AC7 genie expansion", None, &mut ac7_genie);

    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
