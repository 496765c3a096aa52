//! Discretized Hilbert-space oracle.
//!
//! Each signal space becomes a finite coordinate space with one basis vector
//! per resolvable direction, and each scattering operator a random complex
//! matrix supported on the blocks its scattering sets allow. Numerical ranks
//! of these matrices then check the closed-form dimension counts, and an
//! explicit zero-forcing construction checks that the region's corner is
//! reachable.

pub mod basis;
pub mod channel;
pub mod linalg;
pub mod verify;

use rayon::prelude::*;

pub use basis::{allocate_basis, integer_rescale, BasisAllocation, Space};
pub use channel::{sample_channel, DiscretizedChannel, DEFAULT_RANK_TOL};
pub use verify::{
    expected_corner, verify_operator_dims, zero_forcing_corner, IdentityCheck, OperatorReport,
    ZeroForcingCorner,
};

use crate::error::Result;
use crate::geometry::ScatteringGeometry;

/// Relative interference leakage accepted by the zero-forcing certificate.
pub const LEAKAGE_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct TrialReport {
    pub seed: u64,
    pub operators: OperatorReport,
    pub zero_forcing: ZeroForcingCorner,
    /// Corner predicted by the closed forms, when integral.
    pub expected_corner: Option<(usize, usize)>,
}

impl TrialReport {
    pub fn corner_matches(&self) -> bool {
        self.expected_corner == Some(self.zero_forcing.corner())
    }

    pub fn certificate_holds(&self) -> bool {
        self.zero_forcing.leakage < LEAKAGE_TOL
            && self.zero_forcing.decoded_rank == self.zero_forcing.d1
    }

    pub fn passed(&self) -> bool {
        self.operators.passed() && self.corner_matches() && self.certificate_holds()
    }
}

pub fn run_trial(g: &ScatteringGeometry, seed: u64, rank_tol: f64) -> Result<TrialReport> {
    let ch = sample_channel(g, seed)?.with_rank_tol(rank_tol)?;
    Ok(report_for(&ch, g))
}

/// Runs the operator and corner checks on an already-sampled channel.
pub fn report_for(ch: &DiscretizedChannel, g: &ScatteringGeometry) -> TrialReport {
    TrialReport {
        seed: ch.seed,
        operators: verify_operator_dims(ch, g),
        zero_forcing: zero_forcing_corner(ch),
        expected_corner: expected_corner(g),
    }
}

/// Independent trials for `seeds`, evaluated in parallel; results keep the
/// order of `seeds`.
pub fn run_trials(
    g: &ScatteringGeometry,
    seeds: &[u64],
    rank_tol: f64,
) -> Result<Vec<TrialReport>> {
    // surface quantization and tolerance errors once, up front
    allocate_basis(g)?;
    seeds
        .par_iter()
        .map(|&seed| run_trial(g, seed, rank_tol))
        .collect()
}
