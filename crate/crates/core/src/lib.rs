//! Degrees-of-freedom regions for a three-node full-duplex wireless channel.
//!
//! A full-duplex base station serves an uplink user and a downlink user at the
//! same time. Each link couples through clustered scatterers, described here as
//! sets of direction cosines ([`DirectionSet`]). From the array half-lengths and
//! those sets the crate computes:
//!
//! - the full-duplex DoF region and its corner points ([`region`]),
//! - the half-duplex (time-division) region and how the two compare,
//! - a discretized Hilbert-space oracle that checks the operator-dimension
//!   identities and the zero-forcing corner with random scattering operators
//!   ([`oracle`]).
//!
//! All region arithmetic is exact over rationals. Floating point appears only
//! in the oracle and when values are formatted for output.

// Errors carry exact rationals for their messages and only occur on
// validation paths, so their size is not worth boxing.
#![allow(clippy::result_large_err)]

pub mod error;
pub mod geometry;
pub mod interval;
pub mod oracle;
pub mod rational;
pub mod region;

pub use error::{Error, Result};
pub use geometry::{ArrayHalfLengths, ScatteringGeometry};
pub use interval::{CosineApprox, DirectionSet, Interval};
pub use rational::Rational;
pub use region::{
    corner_points, fd_caps, fd_region, hd_region, is_rectangular, region_relate, Caps,
    CornerPoints, DofRegion, Point, RegionKind, Relation,
};
