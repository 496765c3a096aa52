//! Checks of the operator-dimension identities and the zero-forcing corner.

use num_traits::ToPrimitive;

use super::channel::DiscretizedChannel;
use super::linalg::{self, CMatrix};
use crate::geometry::ScatteringGeometry;
use crate::rational::{int, min, pos, Rational};

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub measured: usize,
    pub expected: Rational,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.expected == int(self.measured as i64)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OperatorReport {
    pub checks: Vec<IdentityCheck>,
    /// Matrices whose rank decision sits close to the tolerance; reseed.
    pub ill_conditioned: Vec<&'static str>,
}

impl OperatorReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }
}

/// `2 min(L_T |Ψ_T|, L_R |Ψ_R|)`
fn range_dim(l_t: &Rational, psi_t: Rational, l_r: &Rational, psi_r: Rational) -> Rational {
    int(2) * min(l_t * psi_t, l_r * psi_r)
}

/// Compares numerical rank, nullity and range codimension of each scattering
/// matrix with the closed forms.
pub fn verify_operator_dims(ch: &DiscretizedChannel, g: &ScatteringGeometry) -> OperatorReport {
    let l = &g.lengths;
    let two = int(2);
    let dim_t1 = int(ch.basis.t1.dim() as i64);
    let dim_t2 = int(ch.basis.t2.dim() as i64);
    let dim_r1 = int(ch.basis.r1.dim() as i64);
    let dim_r2 = int(ch.basis.r2.dim() as i64);

    let range11 = range_dim(&l.l_t1, g.t11.measure(), &l.l_r1, g.r11.measure());
    let range12 = range_dim(&l.l_t2, g.t12.measure(), &l.l_r1, g.r12.measure());
    let range22 = range_dim(&l.l_t2, g.t22.measure(), &l.l_r2, g.r22.measure());
    let null12 = &two * &l.l_t2 * g.t22.difference(&g.t12).measure()
        + &two * pos(&l.l_t2 * g.t12.measure() - &l.l_r1 * g.r12.measure());
    let codim11 = &two * &l.l_r1 * g.r12.difference(&g.r11).measure()
        + &two * pos(&l.l_r1 * g.r11.measure() - &l.l_t1 * g.t11.measure());

    let mut checks = Vec::with_capacity(9);
    let mut ill_conditioned = Vec::new();
    let matrices: [(&'static str, &CMatrix, Rational, Rational, Rational); 3] = [
        ("s11", &ch.s11, range11.clone(), &dim_t1 - &range11, codim11),
        ("s12", &ch.s12, range12.clone(), null12, &dim_r1 - &range12),
        (
            "s22",
            &ch.s22,
            range22.clone(),
            &dim_t2 - &range22,
            &dim_r2 - &range22,
        ),
    ];
    for (name, m, rank, nullity, codim) in matrices {
        let info = linalg::rank_info(m, ch.rank_tol);
        if info.near_boundary {
            ill_conditioned.push(name);
        }
        let (rows, cols) = m.shape();
        let names: [&'static str; 3] = match name {
            "s11" => ["rank s11", "nullity s11", "codim R(s11)"],
            "s12" => ["rank s12", "nullity s12", "codim R(s12)"],
            _ => ["rank s22", "nullity s22", "codim R(s22)"],
        };
        checks.push(IdentityCheck {
            name: names[0],
            measured: info.rank,
            expected: rank,
        });
        checks.push(IdentityCheck {
            name: names[1],
            measured: cols - info.rank,
            expected: nullity,
        });
        checks.push(IdentityCheck {
            name: names[2],
            measured: rows - info.rank,
            expected: codim,
        });
    }
    OperatorReport {
        checks,
        ill_conditioned,
    }
}

/// Outcome of the zero-forcing construction for the corner where flow 1 runs
/// at its point-to-point maximum.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroForcingCorner {
    /// `rank s11`, the uplink streams.
    pub d1: usize,
    /// Downlink streams that avoid corrupting the uplink.
    pub d2: usize,
    /// Dimension of the admissible transmit subspace at `T2`.
    pub preimage_dim: usize,
    /// Worst-case `||Π_K s12 x|| / ||s12||` over an orthonormal basis of the
    /// admissible subspace, where `K = R(s11) ∩ R(s12)`.
    pub leakage: f64,
    /// Rank of `s11` after `R1` projects out the interference span; equals
    /// `d1` when the uplink survives.
    pub decoded_rank: usize,
    /// Downlink streams when `T2` confines itself to the preimage of
    /// `R(s11)^⊥` (interference lands orthogonal to the uplink).
    pub orthogonal_d2: usize,
    /// Worst-case `||Π_R(s11) s12 x|| / ||s12||` for that preimage.
    pub orthogonal_leakage: f64,
}

impl ZeroForcingCorner {
    pub fn corner(&self) -> (usize, usize) {
        (self.d1, self.d2)
    }
}

fn worst_leakage(projector_basis: &CMatrix, s12: &CMatrix, inputs: &CMatrix) -> f64 {
    let norm = linalg::spectral_norm(s12);
    if norm == 0.0 || inputs.ncols() == 0 || projector_basis.ncols() == 0 {
        return 0.0;
    }
    let image = s12 * inputs;
    let projected = projector_basis * (projector_basis.adjoint() * image);
    projected
        .column_iter()
        .map(|c| c.norm() / norm)
        .fold(0.0, f64::max)
}

/// Spatial isolation of the downlink from the uplink receiver.
///
/// `R1` decodes the uplink from `R(s11)`. `T2` transmits inside the preimage
/// under `s12` of `K^⊥`, with `K = R(s11) ∩ R(s12)`: the interference it
/// creates then shares no direction with the uplink signal, and `R1` can null
/// it. When `R(s11)^⊥ ⊆ R(s12)` this preimage coincides with the preimage of
/// `R(s11)^⊥` and the interference is orthogonal to the uplink outright.
pub fn zero_forcing_corner(ch: &DiscretizedChannel) -> ZeroForcingCorner {
    let tol = ch.rank_tol;
    let norm11 = linalg::spectral_norm(&ch.s11);
    let norm12 = linalg::spectral_norm(&ch.s12);
    let norm22 = linalg::spectral_norm(&ch.s22);

    let uplink = linalg::range_basis(&ch.s11, tol);
    let interference = linalg::range_basis(&ch.s12, tol);
    let shared = linalg::intersection_basis(&uplink, &interference, tol);

    let admissible = linalg::null_basis_scaled(&(shared.adjoint() * &ch.s12), tol, Some(norm12));
    let d2 = linalg::rank_scaled(&(&ch.s22 * &admissible), tol, norm22);
    let leakage = worst_leakage(&shared, &ch.s12, &admissible);

    let interference_span = linalg::range_basis_scaled(&(&ch.s12 * &admissible), tol, Some(norm12));
    let nulling = CMatrix::identity(ch.s11.nrows(), ch.s11.nrows())
        - &interference_span * interference_span.adjoint();
    let decoded_rank = linalg::rank_scaled(&(nulling * &ch.s11), tol, norm11);

    let orthogonal = linalg::null_basis_scaled(&(uplink.adjoint() * &ch.s12), tol, Some(norm12));
    let orthogonal_d2 = linalg::rank_scaled(&(&ch.s22 * &orthogonal), tol, norm22);
    let orthogonal_leakage = worst_leakage(&uplink, &ch.s12, &orthogonal);

    ZeroForcingCorner {
        d1: uplink.ncols(),
        d2,
        preimage_dim: admissible.ncols(),
        leakage,
        decoded_rank,
        orthogonal_d2,
        orthogonal_leakage,
    }
}

/// Expected integer corner `(d1_max, min(dsum_max - d1_max, d2_max))`, if
/// both coordinates are integers.
pub fn expected_corner(g: &ScatteringGeometry) -> Option<(usize, usize)> {
    let p = crate::region::corner_points(g).p_prime;
    let as_usize = |x: &Rational| x.is_integer().then(|| x.to_integer().to_usize()).flatten();
    Some((as_usize(&p.d1)?, as_usize(&p.d2)?))
}
