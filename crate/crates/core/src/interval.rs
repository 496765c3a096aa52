//! Finite unions of half-open subintervals of `[-1, 1]` with exact endpoints.
//!
//! A [`DirectionSet`] holds an effective scattering interval: the direction
//! cosines over which an array couples to a scatterer cluster. Values are kept
//! in canonical form (sorted, disjoint, non-touching), so structural equality
//! is set equality.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use num_traits::Zero;

/// The half-open interval `[lo, hi)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rational::int(2)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {})",
            rational::format(&self.lo),
            rational::format(&self.hi)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DirectionSet {
    intervals: Vec<Interval>,
}

/// How angles are mapped to direction cosines.
///
/// Cosines of angles outside the small table of exact values are rounded to
/// the nearest multiple of `1/denominator`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CosineApprox {
    pub denominator: u64,
}

impl Default for CosineApprox {
    fn default() -> Self {
        CosineApprox {
            denominator: 1_000_000_000_000,
        }
    }
}

impl CosineApprox {
    /// Cosine of an angle given in degrees, `0 <= deg <= 180`.
    pub fn cos_deg(&self, deg: &Rational) -> Rational {
        const EXACT: [(i64, i64, i64); 5] = [
            (0, 1, 1),
            (60, 1, 2),
            (90, 0, 1),
            (120, -1, 2),
            (180, -1, 1),
        ];
        for (angle, numer, denom) in EXACT {
            if *deg == rational::int(angle) {
                return rational::ratio(numer, denom);
            }
        }
        let radians = rational::to_f64(deg).to_radians();
        rational::from_f64_rounded(radians.cos(), self.denominator)
    }
}

fn check_endpoint(x: &Rational) -> Result<()> {
    let (min, max) = (rational::int(-1), rational::int(1));
    if *x < min || *x > max {
        return Err(Error::Domain {
            value: x.clone(),
            min,
            max,
        });
    }
    Ok(())
}

impl DirectionSet {
    pub fn empty() -> Self {
        DirectionSet::default()
    }

    /// `[-1, 1)`, every resolvable direction.
    pub fn full() -> Self {
        DirectionSet {
            intervals: vec![Interval {
                lo: rational::int(-1),
                hi: rational::int(1),
            }],
        }
    }

    /// Builds the canonical form of a list of `(lo, hi)` pairs.
    ///
    /// Overlapping and touching pieces are merged. Every endpoint must lie in
    /// `[-1, 1]` and every pair must satisfy `lo < hi`.
    pub fn canonicalize<I>(raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Rational, Rational)>,
    {
        let mut pieces = Vec::new();
        for (lo, hi) in raw {
            check_endpoint(&lo)?;
            check_endpoint(&hi)?;
            if lo >= hi {
                return Err(Error::MalformedInterval { lo, hi });
            }
            pieces.push(Interval { lo, hi });
        }
        Ok(Self::merge(pieces))
    }

    /// Single interval `[lo, hi)`.
    pub fn interval(lo: Rational, hi: Rational) -> Result<Self> {
        Self::canonicalize([(lo, hi)])
    }

    /// Direction cosines of a set of elevation angles given in degrees.
    ///
    /// Each `[a, b]` pair maps to `[cos b, cos a]`. Degenerate pairs, and
    /// pairs whose rounded cosines coincide, contribute nothing.
    pub fn from_angles<I>(angles_deg: I, approx: &CosineApprox) -> Result<Self>
    where
        I: IntoIterator<Item = (Rational, Rational)>,
    {
        let (min, max) = (rational::zero(), rational::int(180));
        let mut pieces = Vec::new();
        for (a, b) in angles_deg {
            for x in [&a, &b] {
                if *x < min || *x > max {
                    return Err(Error::Domain {
                        value: x.clone(),
                        min: min.clone(),
                        max: max.clone(),
                    });
                }
            }
            if a > b {
                return Err(Error::MalformedInterval { lo: a, hi: b });
            }
            let lo = approx.cos_deg(&b);
            let hi = approx.cos_deg(&a);
            if lo < hi {
                pieces.push(Interval { lo, hi });
            }
        }
        Ok(Self::merge(pieces))
    }

    fn merge(mut pieces: Vec<Interval>) -> Self {
        pieces.sort_by(|x, y| x.lo.cmp(&y.lo));
        let mut out: Vec<Interval> = Vec::with_capacity(pieces.len());
        for piece in pieces {
            match out.last_mut() {
                Some(last) if piece.lo <= last.hi => {
                    if piece.hi > last.hi {
                        last.hi = piece.hi;
                    }
                }
                _ => out.push(piece),
            }
        }
        DirectionSet { intervals: out }
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn measure(&self) -> Rational {
        self.intervals
            .iter()
            .fold(Rational::zero(), |acc, iv| acc + iv.width())
    }

    pub fn contains(&self, x: &Rational) -> bool {
        // first interval whose upper end is beyond x
        let idx = self.intervals.partition_point(|iv| iv.hi <= *x);
        self.intervals.get(idx).is_some_and(|iv| iv.lo <= *x)
    }

    pub fn is_subset(&self, other: &DirectionSet) -> bool {
        self.difference(other).is_empty()
    }

    pub fn union(&self, other: &DirectionSet) -> DirectionSet {
        Self::merge(
            self.intervals
                .iter()
                .chain(other.intervals.iter())
                .cloned()
                .collect(),
        )
    }

    pub fn intersection(&self, other: &DirectionSet) -> DirectionSet {
        let (a, b) = (&self.intervals, &other.intervals);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            let lo = rational::max(a[i].lo.clone(), b[j].lo.clone());
            let hi = rational::min(a[i].hi.clone(), b[j].hi.clone());
            if lo < hi {
                out.push(Interval { lo, hi });
            }
            if a[i].hi <= b[j].hi {
                i += 1;
            } else {
                j += 1;
            }
        }
        Self::merge(out)
    }

    pub fn difference(&self, other: &DirectionSet) -> DirectionSet {
        let mut out = Vec::new();
        let mut j = 0;
        for iv in &self.intervals {
            let mut cursor = iv.lo.clone();
            while j < other.intervals.len() && other.intervals[j].hi <= cursor {
                j += 1;
            }
            let mut k = j;
            while k < other.intervals.len() && other.intervals[k].lo < iv.hi {
                let cut = &other.intervals[k];
                if cut.lo > cursor {
                    out.push(Interval {
                        lo: cursor.clone(),
                        hi: cut.lo.clone(),
                    });
                }
                if cut.hi > cursor {
                    cursor = cut.hi.clone();
                }
                if cursor >= iv.hi {
                    break;
                }
                k += 1;
            }
            if cursor < iv.hi {
                out.push(Interval {
                    lo: cursor,
                    hi: iv.hi.clone(),
                });
            }
        }
        Self::merge(out)
    }

    /// Coarsest partition of the union of `sets` into intervals that are each
    /// contained in, or disjoint from, every input.
    pub fn refine(sets: &[&DirectionSet]) -> Vec<DirectionSet> {
        let mut cuts: Vec<Rational> = sets
            .iter()
            .flat_map(|s| s.intervals.iter())
            .flat_map(|iv| [iv.lo.clone(), iv.hi.clone()])
            .collect();
        cuts.sort();
        cuts.dedup();

        let mut atoms: Vec<(Interval, Vec<bool>)> = Vec::new();
        for w in cuts.windows(2) {
            let piece = Interval {
                lo: w[0].clone(),
                hi: w[1].clone(),
            };
            let mid = piece.midpoint();
            let signature: Vec<bool> = sets.iter().map(|s| s.contains(&mid)).collect();
            if !signature.iter().any(|&m| m) {
                continue;
            }
            match atoms.last_mut() {
                Some((last, sig)) if last.hi == piece.lo && *sig == signature => {
                    last.hi = piece.hi;
                }
                _ => atoms.push((piece, signature)),
            }
        }
        atoms
            .into_iter()
            .map(|(iv, _)| DirectionSet {
                intervals: vec![iv],
            })
            .collect()
    }
}

impl fmt::Display for DirectionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return f.write_str("∅");
        }
        for (k, iv) in self.intervals.iter().enumerate() {
            if k > 0 {
                f.write_str(" ∪ ")?;
            }
            write!(f, "{iv}")?;
        }
        Ok(())
    }
}
