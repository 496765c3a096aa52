//! Array sizes and scattering intervals of the three-node channel.
//!
//! Flow 1 is the uplink `T1 -> R1` (user to base station), flow 2 the downlink
//! `T2 -> R2`. The base station's own transmitter `T2` leaks into its receiver
//! `R1` through the backscatter sets `t12`/`r12`. The users are hidden from
//! each other, so there is no `T1 -> R2` coupling.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::interval::DirectionSet;
use crate::rational::{self, Rational};

/// Wavelength-normalized half-lengths; an array of half-length `L` has
/// physical length `2L`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArrayHalfLengths {
    pub l_t1: Rational,
    pub l_r1: Rational,
    pub l_t2: Rational,
    pub l_r2: Rational,
}

impl ArrayHalfLengths {
    pub fn new(l_t1: Rational, l_r1: Rational, l_t2: Rational, l_r2: Rational) -> Result<Self> {
        for l in [&l_t1, &l_r1, &l_t2, &l_r2] {
            if l.is_negative() {
                return Err(Error::NegativeLength(l.clone()));
            }
        }
        Ok(ArrayHalfLengths {
            l_t1,
            l_r1,
            l_t2,
            l_r2,
        })
    }

    pub fn uniform(l: Rational) -> Result<Self> {
        Self::new(l.clone(), l.clone(), l.clone(), l)
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        ArrayHalfLengths {
            l_t1: &self.l_t1 * c,
            l_r1: &self.l_r1 * c,
            l_t2: &self.l_t2 * c,
            l_r2: &self.l_r2 * c,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScatteringGeometry {
    /// Directions at `T1` reaching `R1`.
    pub t11: DirectionSet,
    /// Directions at `R1` lit by `T1`.
    pub r11: DirectionSet,
    /// Directions at `T2` reaching `R2`.
    pub t22: DirectionSet,
    /// Directions at `R2` lit by `T2`.
    pub r22: DirectionSet,
    /// Directions at `T2` that scatter back to `R1` (self-interference).
    pub t12: DirectionSet,
    /// Directions at `R1` carrying self-interference from `T2`.
    pub r12: DirectionSet,
    pub lengths: ArrayHalfLengths,
}

impl ScatteringGeometry {
    /// Every interval equal to `[-1, 1)`; base-station arrays have
    /// half-length `l_bs`, user arrays `l_usr`.
    pub fn fully_spread(l_bs: Rational, l_usr: Rational) -> Result<Self> {
        let full = DirectionSet::full();
        Ok(ScatteringGeometry {
            t11: full.clone(),
            r11: full.clone(),
            t22: full.clone(),
            r22: full.clone(),
            t12: full.clone(),
            r12: full,
            lengths: ArrayHalfLengths::new(l_usr.clone(), l_bs.clone(), l_bs, l_usr)?,
        })
    }

    /// All four arrays of half-length `l`; every intended link scatters over
    /// `fwd` and the self-interference path over `back`.
    pub fn symmetric(l: Rational, fwd: DirectionSet, back: DirectionSet) -> Result<Self> {
        Ok(ScatteringGeometry {
            t11: fwd.clone(),
            r11: fwd.clone(),
            t22: fwd.clone(),
            r22: fwd,
            t12: back.clone(),
            r12: back,
            lengths: ArrayHalfLengths::uniform(l)?,
        })
    }

    /// If the geometry has symmetric form, returns `(L, fwd, back)`.
    pub fn as_symmetric(&self) -> Option<(&Rational, &DirectionSet, &DirectionSet)> {
        let l = &self.lengths;
        let same_length = l.l_t1 == l.l_r1 && l.l_r1 == l.l_t2 && l.l_t2 == l.l_r2;
        let same_fwd = self.t11 == self.r11 && self.r11 == self.t22 && self.t22 == self.r22;
        (same_length && same_fwd && self.t12 == self.r12).then_some((&l.l_t1, &self.t11, &self.t12))
    }

    pub fn with_lengths(&self, lengths: ArrayHalfLengths) -> Self {
        ScatteringGeometry {
            lengths,
            ..self.clone()
        }
    }

    /// Signal-space dimension of transmitter `T2`, `2 L_T2 |t22 ∪ t12|`.
    pub fn tx2_dim(&self) -> Rational {
        rational::int(2) * &self.lengths.l_t2 * self.t22.union(&self.t12).measure()
    }

    /// Signal-space dimension of receiver `R1`, `2 L_R1 |r11 ∪ r12|`.
    pub fn rx1_dim(&self) -> Rational {
        rational::int(2) * &self.lengths.l_r1 * self.r11.union(&self.r12).measure()
    }

    /// Converse-side enlargement of the interference sets.
    ///
    /// `t22` and `t12` both become `t22 ∪ t12`, `r11` and `r12` both become
    /// `r11 ∪ r12`, and the `T2` and `R1` arrays grow so that the intended-link
    /// directions that were free of interference are paid for with extra
    /// aperture. Afterwards the larger of the `T2` and `R1` signal dimensions
    /// equals the original sum-DoF cap.
    pub fn genie_expand(&self) -> Result<Self> {
        let tx_union = self.t22.union(&self.t12);
        let rx_union = self.r11.union(&self.r12);
        if tx_union.measure().is_zero() {
            return Err(Error::DegenerateExpansion("t22 ∪ t12"));
        }
        if rx_union.measure().is_zero() {
            return Err(Error::DegenerateExpansion("r11 ∪ r12"));
        }
        let l = &self.lengths;
        let l_t2 =
            &l.l_t2 + &l.l_r1 * self.r11.difference(&self.r12).measure() / tx_union.measure();
        let l_r1 =
            &l.l_r1 + &l.l_t2 * self.t22.difference(&self.t12).measure() / rx_union.measure();
        Ok(ScatteringGeometry {
            t11: self.t11.clone(),
            r11: rx_union.clone(),
            t22: tx_union.clone(),
            r22: self.r22.clone(),
            t12: tx_union,
            r12: rx_union,
            lengths: ArrayHalfLengths {
                l_t1: l.l_t1.clone(),
                l_r1,
                l_t2,
                l_r2: l.l_r2.clone(),
            },
        })
    }
}
