//! Integer basis allocation over refinement atoms.
//!
//! An array of half-length `L` resolves `2L·w` orthonormal field patterns over
//! any direction interval of width `w`. Each signal space is split into atoms
//! (pieces lying wholly inside or outside every relevant scattering set) and
//! each atom gets that many basis vectors, so block support of the scattering
//! matrices follows directly from atom containment.

use std::ops::Range;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::geometry::ScatteringGeometry;
use crate::interval::DirectionSet;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Space {
    T1,
    T2,
    R1,
    R2,
}

impl Space {
    pub const ALL: [Space; 4] = [Space::T1, Space::T2, Space::R1, Space::R2];

    pub fn name(self) -> &'static str {
        match self {
            Space::T1 => "T1",
            Space::T2 => "T2",
            Space::R1 => "R1",
            Space::R2 => "R2",
        }
    }

    fn length(self, g: &ScatteringGeometry) -> &Rational {
        match self {
            Space::T1 => &g.lengths.l_t1,
            Space::T2 => &g.lengths.l_t2,
            Space::R1 => &g.lengths.l_r1,
            Space::R2 => &g.lengths.l_r2,
        }
    }

    /// The scattering sets this space's field patterns live on.
    fn family(self, g: &ScatteringGeometry) -> Vec<&DirectionSet> {
        match self {
            Space::T1 => vec![&g.t11],
            Space::T2 => vec![&g.t22, &g.t12],
            Space::R1 => vec![&g.r11, &g.r12],
            Space::R2 => vec![&g.r22],
        }
    }
}

/// One atom and the block of basis indices allocated to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomBlock {
    pub atom: DirectionSet,
    pub indices: Range<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceBasis {
    pub space: Space,
    pub blocks: Vec<AtomBlock>,
}

impl SpaceBasis {
    pub fn dim(&self) -> usize {
        self.blocks.last().map_or(0, |b| b.indices.end)
    }

    /// Basis indices whose atom lies inside `set`.
    pub fn indices_within(&self, set: &DirectionSet) -> Vec<usize> {
        self.blocks
            .iter()
            .filter(|b| b.atom.is_subset(set))
            .flat_map(|b| b.indices.clone())
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisAllocation {
    pub t1: SpaceBasis,
    pub t2: SpaceBasis,
    pub r1: SpaceBasis,
    pub r2: SpaceBasis,
}

impl BasisAllocation {
    pub fn space(&self, space: Space) -> &SpaceBasis {
        match space {
            Space::T1 => &self.t1,
            Space::T2 => &self.t2,
            Space::R1 => &self.r1,
            Space::R2 => &self.r2,
        }
    }
}

/// Atom dimensions `2L|A|` for every atom of `space`.
fn atom_dims(g: &ScatteringGeometry, space: Space) -> Vec<(DirectionSet, Rational)> {
    let two_l = rational::int(2) * space.length(g);
    DirectionSet::refine(&space.family(g))
        .into_iter()
        .map(|atom| {
            let dim = &two_l * atom.measure();
            (atom, dim)
        })
        .collect()
}

fn required_scale(g: &ScatteringGeometry) -> BigInt {
    Space::ALL
        .iter()
        .flat_map(|&s| atom_dims(g, s))
        .fold(BigInt::one(), |acc, (_, dim)| acc.lcm(dim.denom()))
}

pub fn allocate_basis(g: &ScatteringGeometry) -> Result<BasisAllocation> {
    let mut spaces = Vec::with_capacity(4);
    for space in Space::ALL {
        let mut blocks = Vec::new();
        let mut next = 0usize;
        for (atom, dim) in atom_dims(g, space) {
            let count = dim
                .is_integer()
                .then(|| dim.to_integer().to_usize())
                .flatten();
            let Some(count) = count else {
                let iv = atom.intervals()[0].clone();
                return Err(Error::Quantization {
                    space: space.name(),
                    lo: iv.lo,
                    hi: iv.hi,
                    dimension: dim,
                    suggested_scale: required_scale(g),
                });
            };
            blocks.push(AtomBlock {
                atom,
                indices: next..next + count,
            });
            next += count;
        }
        spaces.push(SpaceBasis { space, blocks });
    }
    let mut it = spaces.into_iter();
    Ok(BasisAllocation {
        t1: it.next().unwrap(),
        t2: it.next().unwrap(),
        r1: it.next().unwrap(),
        r2: it.next().unwrap(),
    })
}

/// Scales every array by the least positive integer that makes all atom
/// dimensions integral.
pub fn integer_rescale(g: &ScatteringGeometry) -> (ScatteringGeometry, BigInt) {
    let scale = required_scale(g);
    let c = Rational::from_integer(scale.clone());
    (g.with_lengths(g.lengths.scaled(&c)), scale)
}
