//! Full-duplex and half-duplex degrees-of-freedom regions.
//!
//! The full-duplex region is cut out of the first quadrant by three caps: one
//! per flow (the point-to-point limit of each link) and one on the sum, set by
//! how much of the base station's aperture is shared with its own
//! self-interference. The half-duplex region is the time-sharing triangle
//! between the two single-flow points.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::geometry::ScatteringGeometry;
use crate::rational::{self, int, max, min, pos, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pub d1: Rational,
    pub d2: Rational,
}

impl Point {
    pub fn new(d1: Rational, d2: Rational) -> Self {
        Point { d1, d2 }
    }

    pub fn origin() -> Self {
        Point::new(rational::zero(), rational::zero())
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (rational::to_f64(&self.d1), rational::to_f64(&self.d2))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {})",
            rational::format(&self.d1),
            rational::format(&self.d2)
        )
    }
}

/// The three constraints of the full-duplex region.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Caps {
    pub d1_max: Rational,
    pub d2_max: Rational,
    pub dsum_max: Rational,
}

/// Products `L·|Ψ|` that every closed form is built from.
struct Terms {
    t11: Rational,
    r11: Rational,
    t22: Rational,
    r22: Rational,
    t12: Rational,
    r12: Rational,
    /// `L_T2 |t22 \ t12|`
    t22_only: Rational,
    /// `L_T2 |t22 ∩ t12|`
    t22_shared: Rational,
    /// `L_T2 |t12 \ t22|`
    t12_only: Rational,
    /// `L_R1 |r11 \ r12|`
    r11_only: Rational,
    /// `L_R1 |r11 ∩ r12|`
    r11_shared: Rational,
    /// `L_R1 |r12 \ r11|`
    r12_only: Rational,
}

impl Terms {
    fn of(g: &ScatteringGeometry) -> Self {
        let l = &g.lengths;
        Terms {
            t11: &l.l_t1 * g.t11.measure(),
            r11: &l.l_r1 * g.r11.measure(),
            t22: &l.l_t2 * g.t22.measure(),
            r22: &l.l_r2 * g.r22.measure(),
            t12: &l.l_t2 * g.t12.measure(),
            r12: &l.l_r1 * g.r12.measure(),
            t22_only: &l.l_t2 * g.t22.difference(&g.t12).measure(),
            t22_shared: &l.l_t2 * g.t22.intersection(&g.t12).measure(),
            t12_only: &l.l_t2 * g.t12.difference(&g.t22).measure(),
            r11_only: &l.l_r1 * g.r11.difference(&g.r12).measure(),
            r11_shared: &l.l_r1 * g.r11.intersection(&g.r12).measure(),
            r12_only: &l.l_r1 * g.r12.difference(&g.r11).measure(),
        }
    }
}

pub fn fd_caps(g: &ScatteringGeometry) -> Caps {
    let t = Terms::of(g);
    let two = int(2);
    Caps {
        d1_max: &two * min(t.t11.clone(), t.r11.clone()),
        d2_max: &two * min(t.t22.clone(), t.r22.clone()),
        dsum_max: &two * &t.t22_only + &two * &t.r11_only + &two * max(t.t12, t.r12),
    }
}

/// Intermediate quantities of the corner-point formulas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerTerms {
    pub d_t2: Rational,
    pub delta_t2: Rational,
    pub d_r1: Rational,
    pub delta_r1: Rational,
}

fn corner_terms_of(t: &Terms) -> CornerTerms {
    let two = int(2);
    let d_t2 = &two * &t.t22_only
        + &two
            * pos(min(
                t.t22_shared.clone(),
                pos(&t.t12 - &t.r12) + &t.r12_only,
            ));
    // the inner (L_R1|r12| - L_T2|t12|)^+ pairs both base-station arrays, as in delta_r1
    let delta_t2 = &two * &t.t22_only
        + &two
            * min(
                t.t22_shared.clone(),
                &t.t12 - pos(&t.t11 - (&t.r11_only + pos(&t.r12 - &t.t12))),
            );
    let d_r1 = &two * &t.r11_only
        + &two
            * pos(min(
                t.r11_shared.clone(),
                pos(&t.r12 - &t.t12) + &t.t12_only,
            ));
    let delta_r1 = &two * &t.r11_only
        + &two
            * min(
                t.r11_shared.clone(),
                &t.r12 - pos(&t.r22 - (&t.t22_only + pos(&t.t12 - &t.r12))),
            );
    CornerTerms {
        d_t2,
        delta_t2,
        d_r1,
        delta_r1,
    }
}

pub fn corner_terms(g: &ScatteringGeometry) -> CornerTerms {
    corner_terms_of(&Terms::of(g))
}

/// The two achievable pairs that bracket the sum-constraint facet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CornerPoints {
    /// Flow 1 at its point-to-point maximum.
    pub p_prime: Point,
    /// Flow 2 at its point-to-point maximum.
    pub p_double_prime: Point,
}

/// Evaluates the corner points branch by branch.
///
/// Branches are picked by whether the uplink transmitter (resp. downlink
/// receiver) is the bottleneck of its own link; ties go to the `>=` branch.
pub fn corner_points(g: &ScatteringGeometry) -> CornerPoints {
    let t = Terms::of(g);
    let c = corner_terms_of(&t);
    let two = int(2);

    let d1p = min(&two * &t.t11, &two * &t.r11);
    let d2p = if t.t11 >= t.r11 {
        min(c.d_t2, &two * &t.r22)
    } else {
        min(c.delta_t2, &two * &t.r22)
    };
    let d1pp = if t.r22 >= t.t22 {
        min(&two * &t.t11, c.d_r1)
    } else {
        min(&two * &t.t11, c.delta_r1)
    };
    let d2pp = min(&two * &t.t22, &two * &t.r22);

    CornerPoints {
        p_prime: Point::new(d1p, d2p),
        p_double_prime: Point::new(d1pp, d2pp),
    }
}

/// Corner points read off the caps: `(d1_max, dsum_max - d1_max)` and
/// `(dsum_max - d2_max, d2_max)`, each free coordinate clamped into
/// `[0, cap]`.
pub fn corners_from_caps(caps: &Caps) -> CornerPoints {
    let clamp = |x: Rational, hi: &Rational| min(pos(x), hi.clone());
    CornerPoints {
        p_prime: Point::new(
            caps.d1_max.clone(),
            clamp(&caps.dsum_max - &caps.d1_max, &caps.d2_max),
        ),
        p_double_prime: Point::new(
            clamp(&caps.dsum_max - &caps.d2_max, &caps.d1_max),
            caps.d2_max.clone(),
        ),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegionKind {
    /// `d1 <= d1_cap`, `d2 <= d2_cap`, `d1 + d2 <= dsum_cap`.
    CapConstrained,
    /// Time sharing between `(d1_cap, 0)` and `(0, d2_cap)`:
    /// `d1 / d1_cap + d2 / d2_cap <= 1`.
    TimeSharing,
}

/// A convex polygon of DoF pairs in the first quadrant.
///
/// The caps and kind define the region; `vertices` is derived from them and
/// runs counter-clockwise from the origin.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DofRegion {
    pub d1_cap: Rational,
    pub d2_cap: Rational,
    pub dsum_cap: Rational,
    pub kind: RegionKind,
    pub vertices: Vec<Point>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Equal,
    /// The first region lies strictly inside the second.
    StrictSubset,
    /// The second region lies strictly inside the first.
    StrictSuperset,
    Incomparable,
}

impl DofRegion {
    pub fn contains(&self, p: &Point) -> bool {
        if p.d1.is_negative() || p.d2.is_negative() || p.d1 > self.d1_cap || p.d2 > self.d2_cap {
            return false;
        }
        match self.kind {
            RegionKind::CapConstrained => &p.d1 + &p.d2 <= self.dsum_cap,
            RegionKind::TimeSharing => {
                &p.d1 * &self.d2_cap + &p.d2 * &self.d1_cap <= &self.d1_cap * &self.d2_cap
            }
        }
    }

    /// Exact area by the shoelace formula.
    pub fn area(&self) -> Rational {
        let n = self.vertices.len();
        if n < 3 {
            return rational::zero();
        }
        let twice = (0..n).fold(rational::zero(), |acc, k| {
            let (a, b) = (&self.vertices[k], &self.vertices[(k + 1) % n]);
            acc + &a.d1 * &b.d2 - &b.d1 * &a.d2
        });
        twice.abs() / int(2)
    }
}

fn cross(o: &Point, a: &Point, b: &Point) -> Rational {
    (&a.d1 - &o.d1) * (&b.d2 - &o.d2) - (&a.d2 - &o.d2) * (&b.d1 - &o.d1)
}

/// Drops repeated and collinear vertices from a closed convex chain.
fn simplify(mut pts: Vec<Point>) -> Vec<Point> {
    pts.dedup();
    while pts.len() > 1 && pts.first() == pts.last() {
        pts.pop();
    }
    loop {
        let n = pts.len();
        if n < 3 {
            return pts;
        }
        let redundant = (0..n).find(|&k| {
            let prev = &pts[(k + n - 1) % n];
            let next = &pts[(k + 1) % n];
            cross(prev, &pts[k], next).is_zero()
        });
        match redundant {
            Some(k) => {
                pts.remove(k);
            }
            None => return pts,
        }
    }
}

fn anchor_at_origin(mut pts: Vec<Point>) -> Vec<Point> {
    if let Some(k) = pts.iter().position(|p| *p == Point::origin()) {
        pts.rotate_left(k);
    }
    pts
}

pub fn fd_region(g: &ScatteringGeometry) -> DofRegion {
    region_from_caps(fd_caps(g))
}

pub fn region_from_caps(caps: Caps) -> DofRegion {
    let corners = corners_from_caps(&caps);
    let raw = vec![
        Point::origin(),
        Point::new(caps.d1_max.clone(), rational::zero()),
        corners.p_prime,
        corners.p_double_prime,
        Point::new(rational::zero(), caps.d2_max.clone()),
    ];
    DofRegion {
        d1_cap: caps.d1_max,
        d2_cap: caps.d2_max,
        dsum_cap: caps.dsum_max,
        kind: RegionKind::CapConstrained,
        vertices: anchor_at_origin(simplify(raw)),
    }
}

/// Convex hull of time sharing between uplink-only and downlink-only
/// operation.
pub fn hd_region(g: &ScatteringGeometry) -> DofRegion {
    let caps = fd_caps(g);
    let raw = vec![
        Point::origin(),
        Point::new(caps.d1_max.clone(), rational::zero()),
        Point::new(rational::zero(), caps.d2_max.clone()),
    ];
    DofRegion {
        dsum_cap: max(caps.d1_max.clone(), caps.d2_max.clone()),
        d1_cap: caps.d1_max,
        d2_cap: caps.d2_max,
        kind: RegionKind::TimeSharing,
        vertices: anchor_at_origin(simplify(raw)),
    }
}

/// Exact set relation between two regions.
///
/// Both are convex, so `a ⊆ b` iff every vertex of `a` lies in `b`.
pub fn region_relate(a: &DofRegion, b: &DofRegion) -> Relation {
    let a_in_b = a.vertices.iter().all(|p| b.contains(p));
    let b_in_a = b.vertices.iter().all(|p| a.contains(p));
    match (a_in_b, b_in_a) {
        (true, true) => Relation::Equal,
        (true, false) => Relation::StrictSubset,
        (false, true) => Relation::StrictSuperset,
        (false, false) => Relation::Incomparable,
    }
}

/// True when the sum constraint never binds.
pub fn is_rectangular(g: &ScatteringGeometry) -> bool {
    let caps = fd_caps(g);
    caps.dsum_max >= caps.d1_max + caps.d2_max
}
