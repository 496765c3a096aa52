//! Random block-supported scattering matrices.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::basis::{allocate_basis, BasisAllocation, SpaceBasis};
use super::linalg::{CMatrix, C64};
use crate::error::{Error, Result};
use crate::geometry::ScatteringGeometry;
use crate::interval::DirectionSet;

pub const DEFAULT_RANK_TOL: f64 = 1e-9;

/// Finite-dimensional stand-in for the three scattering operators.
///
/// Rows index receive basis vectors, columns transmit basis vectors. Entry
/// `(r, t)` of `s_ij` is nonzero only when the atom of `r` lies in `Ψ_Rij`
/// and the atom of `t` lies in `Ψ_Tij`; those entries are i.i.d. standard
/// complex normal.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscretizedChannel {
    pub basis: BasisAllocation,
    /// `T1 -> R1`
    pub s11: CMatrix,
    /// `T2 -> R1`, the self-interference path.
    pub s12: CMatrix,
    /// `T2 -> R2`
    pub s22: CMatrix,
    pub seed: u64,
    pub rank_tol: f64,
}

fn complex_normal<R: Rng>(rng: &mut R) -> C64 {
    let scale = std::f64::consts::FRAC_1_SQRT_2;
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    C64::new(re * scale, im * scale)
}

fn block_matrix<R: Rng>(
    rng: &mut R,
    rx: &SpaceBasis,
    rx_set: &DirectionSet,
    tx: &SpaceBasis,
    tx_set: &DirectionSet,
) -> CMatrix {
    let mut m = CMatrix::zeros(rx.dim(), tx.dim());
    let rows = rx.indices_within(rx_set);
    let cols = tx.indices_within(tx_set);
    for &r in &rows {
        for &c in &cols {
            m[(r, c)] = complex_normal(rng);
        }
    }
    m
}

pub fn sample_channel(g: &ScatteringGeometry, seed: u64) -> Result<DiscretizedChannel> {
    let basis = allocate_basis(g)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s11 = block_matrix(&mut rng, &basis.r1, &g.r11, &basis.t1, &g.t11);
    let s12 = block_matrix(&mut rng, &basis.r1, &g.r12, &basis.t2, &g.t12);
    let s22 = block_matrix(&mut rng, &basis.r2, &g.r22, &basis.t2, &g.t22);
    Ok(DiscretizedChannel {
        basis,
        s11,
        s12,
        s22,
        seed,
        rank_tol: DEFAULT_RANK_TOL,
    })
}

impl DiscretizedChannel {
    pub fn with_rank_tol(mut self, rank_tol: f64) -> Result<Self> {
        if !(rank_tol.is_finite() && rank_tol > 0.0) {
            return Err(Error::RankTolerance(rank_tol));
        }
        self.rank_tol = rank_tol;
        Ok(self)
    }

    /// Negative control: fills every entry of `s12` outside its support with
    /// fresh random values, so the self-interference path no longer respects
    /// the scattering geometry.
    pub fn corrupt_support(&mut self) {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ 0x5eed_c0de);
        for v in self.s12.iter_mut() {
            if *v == C64::new(0.0, 0.0) {
                *v = complex_normal(&mut rng);
            }
        }
    }
}
