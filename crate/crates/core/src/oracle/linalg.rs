//! Numerical rank, range and nullspace bases from the SVD.
//!
//! Ranks count singular values above `tol * scale`. `scale` defaults to the
//! matrix's own largest singular value; for products such as `A·P` that may
//! vanish exactly, pass the norm of `A` so rounding noise isn't counted.

use nalgebra::{Complex, DMatrix};

pub type C64 = Complex<f64>;
pub type CMatrix = DMatrix<C64>;

/// Singular values within this many decades of the threshold make a rank
/// decision suspect.
const BOUNDARY_DECADES: f64 = 0.5;

#[derive(Debug, Clone, PartialEq)]
pub struct RankInfo {
    pub rank: usize,
    /// Singular values, largest first.
    pub singular_values: Vec<f64>,
    /// Some singular value sits within half a decade of the cutoff.
    pub near_boundary: bool,
}

fn sorted_singular_values(a: &CMatrix) -> Vec<f64> {
    if a.nrows() == 0 || a.ncols() == 0 {
        return Vec::new();
    }
    let mut s: Vec<f64> = a.clone().singular_values().iter().copied().collect();
    s.sort_by(|x, y| y.total_cmp(x));
    s
}

pub fn rank_info(a: &CMatrix, tol: f64) -> RankInfo {
    rank_info_scaled(a, tol, None)
}

pub fn rank_info_scaled(a: &CMatrix, tol: f64, scale: Option<f64>) -> RankInfo {
    let singular_values = sorted_singular_values(a);
    let sigma_max = scale.unwrap_or_else(|| singular_values.first().copied().unwrap_or(0.0));
    if sigma_max == 0.0 {
        return RankInfo {
            rank: 0,
            singular_values,
            near_boundary: false,
        };
    }
    let cutoff = tol * sigma_max;
    let rank = singular_values.iter().filter(|&&s| s > cutoff).count();
    let band = 10f64.powf(BOUNDARY_DECADES);
    let near_boundary = singular_values
        .iter()
        .any(|&s| s > cutoff / band && s < cutoff * band);
    RankInfo {
        rank,
        singular_values,
        near_boundary,
    }
}

pub fn rank(a: &CMatrix, tol: f64) -> usize {
    rank_info(a, tol).rank
}

pub fn rank_scaled(a: &CMatrix, tol: f64, scale: f64) -> usize {
    rank_info_scaled(a, tol, Some(scale)).rank
}

/// Largest singular value; zero for empty matrices.
pub fn spectral_norm(a: &CMatrix) -> f64 {
    sorted_singular_values(a).first().copied().unwrap_or(0.0)
}

/// Pairs `(sigma, index)` of an SVD sorted by decreasing sigma.
fn order(sigma: &nalgebra::DVector<f64>) -> Vec<(f64, usize)> {
    let mut idx: Vec<(f64, usize)> = sigma.iter().copied().zip(0..).collect();
    idx.sort_by(|x, y| y.0.total_cmp(&x.0));
    idx
}

fn gather_columns(m: &CMatrix, cols: &[usize]) -> CMatrix {
    CMatrix::from_fn(m.nrows(), cols.len(), |r, c| m[(r, cols[c])])
}

/// Orthonormal basis of the column space.
pub fn range_basis(a: &CMatrix, tol: f64) -> CMatrix {
    range_basis_scaled(a, tol, None)
}

pub fn range_basis_scaled(a: &CMatrix, tol: f64, scale: Option<f64>) -> CMatrix {
    let (m, n) = a.shape();
    if m == 0 || n == 0 {
        return CMatrix::zeros(m, 0);
    }
    let svd = a.clone().svd(true, false);
    let u = svd.u.expect("left singular vectors requested");
    let ordered = order(&svd.singular_values);
    let scale = scale.unwrap_or(ordered[0].0);
    if scale == 0.0 {
        return CMatrix::zeros(m, 0);
    }
    let keep: Vec<usize> = ordered
        .iter()
        .filter(|(s, _)| *s > tol * scale)
        .map(|&(_, k)| k)
        .collect();
    gather_columns(&u, &keep)
}

/// Orthonormal basis of `{x : a x = 0}`.
pub fn null_basis(a: &CMatrix, tol: f64) -> CMatrix {
    null_basis_scaled(a, tol, None)
}

pub fn null_basis_scaled(a: &CMatrix, tol: f64, scale: Option<f64>) -> CMatrix {
    let (m, n) = a.shape();
    if n == 0 {
        return CMatrix::zeros(0, 0);
    }
    if m == 0 {
        return CMatrix::identity(n, n);
    }
    // Pad with zero rows so the SVD returns a full set of right vectors.
    let padded = if m < n {
        let mut p = CMatrix::zeros(n, n);
        p.view_mut((0, 0), (m, n)).copy_from(a);
        p
    } else {
        a.clone()
    };
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.expect("right singular vectors requested");
    let ordered = order(&svd.singular_values);
    let scale = scale.unwrap_or(ordered[0].0);
    let null: Vec<usize> = ordered
        .iter()
        .filter(|(s, _)| scale == 0.0 || *s <= tol * scale)
        .map(|&(_, k)| k)
        .collect();
    CMatrix::from_fn(n, null.len(), |r, c| v_t[(null[c], r)].conj())
}

/// Orthonormal basis of the orthogonal complement of the column space.
pub fn range_complement(a: &CMatrix, tol: f64) -> CMatrix {
    null_basis(&a.adjoint(), tol)
}

/// Orthonormal basis of the intersection of two column spans, each given by
/// orthonormal columns living in the same ambient space.
pub fn intersection_basis(q1: &CMatrix, q2: &CMatrix, tol: f64) -> CMatrix {
    let n = q1.nrows();
    if q1.ncols() == 0 || q2.ncols() == 0 {
        return CMatrix::zeros(n, 0);
    }
    let mut stacked = CMatrix::zeros(n, q1.ncols() + q2.ncols());
    stacked.view_mut((0, 0), (n, q1.ncols())).copy_from(q1);
    stacked
        .view_mut((0, q1.ncols()), (n, q2.ncols()))
        .copy_from(&(-q2));
    let coeffs = null_basis(&stacked, tol);
    if coeffs.ncols() == 0 {
        return CMatrix::zeros(n, 0);
    }
    let vectors = q1 * coeffs.rows(0, q1.ncols());
    range_basis(&vectors, tol)
}
