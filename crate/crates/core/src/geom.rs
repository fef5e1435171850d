//! Planar geometry primitives shared by every other module. All coordinates
//! are metres in a flat 2-D plane; velocities are metres per second.

use serde::{Deserialize, Serialize};
use std::fmt;

/// A point in the simulation area.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Position {
    pub x: f64,
    pub y: f64,
}

impl Position {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Vector from `self` to `other`.
    pub fn offset_to(&self, other: &Position) -> Displacement {
        Displacement {
            dx: other.x - self.x,
            dy: other.y - self.y,
        }
    }

    pub fn distance_to(&self, other: &Position) -> f64 {
        distance(*self, *other)
    }
}

/// A velocity vector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Velocity {
    pub vx: f64,
    pub vy: f64,
}

impl Velocity {
    pub fn new(vx: f64, vy: f64) -> Self {
        Self { vx, vy }
    }

    pub const ZERO: Velocity = Velocity { vx: 0.0, vy: 0.0 };

    pub fn speed(&self) -> f64 {
        self.vx.hypot(self.vy)
    }
}

/// A displacement between two positions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Displacement {
    pub dx: f64,
    pub dy: f64,
}

impl Displacement {
    pub fn magnitude(&self) -> f64 {
        self.dx.hypot(self.dy)
    }
}

/// Vehicle identity, unique per run and never reused.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct NodeId(pub u32);

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Seconds since the start of a run. Non-negative by construction.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct SimTime(f64);

impl SimTime {
    pub const ZERO: SimTime = SimTime(0.0);

    pub fn from_secs(t: f64) -> Self {
        assert!(t.is_finite() && t >= 0.0, "sim time must be finite and non-negative");
        SimTime(t)
    }

    pub fn secs(&self) -> f64 {
        self.0
    }

    /// Elapsed seconds since `earlier`.
    pub fn since(&self, earlier: SimTime) -> f64 {
        self.0 - earlier.0
    }
}

impl fmt::Display for SimTime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Euclidean distance between two points.
pub fn distance(a: Position, b: Position) -> f64 {
    (a.x - b.x).hypot(a.y - b.y)
}

/// Cosine of the angle between a velocity vector and a displacement vector.
///
/// Returns 0.0 (neutral alignment) when either vector has zero magnitude: a
/// stationary vehicle is neither rewarded nor penalised, and no NaN can leak
/// into downstream scores.
pub fn cosine_between(v: Velocity, d: Displacement) -> f64 {
    let nv = v.speed();
    let nd = d.magnitude();
    if nv == 0.0 || nd == 0.0 {
        return 0.0;
    }
    let cos = (v.vx * d.dx + v.vy * d.dy) / (nv * nd);
    cos.clamp(-1.0, 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const TOL: f64 = 1e-9;

    #[test]
    fn distance_345_triangle() {
        assert!((distance(Position::new(0.0, 0.0), Position::new(3.0, 4.0)) - 5.0).abs() < TOL);
    }

    #[test]
    fn distance_identical_points() {
        assert_eq!(distance(Position::new(7.0, 2.0), Position::new(7.0, 2.0)), 0.0);
    }

    #[test]
    fn distance_axis_aligned() {
        assert!((distance(Position::new(0.0, 0.0), Position::new(250.0, 0.0)) - 250.0).abs() < TOL);
    }

    #[test]
    fn cosine_parallel() {
        let c = cosine_between(Velocity::new(10.0, 0.0), Displacement { dx: 5.0, dy: 0.0 });
        assert!((c - 1.0).abs() < TOL);
    }

    #[test]
    fn cosine_perpendicular() {
        let c = cosine_between(Velocity::new(10.0, 0.0), Displacement { dx: 0.0, dy: 5.0 });
        assert!(c.abs() < TOL);
    }

    #[test]
    fn cosine_zero_velocity_is_neutral() {
        let c = cosine_between(Velocity::ZERO, Displacement { dx: 5.0, dy: 5.0 });
        assert_eq!(c, 0.0);
    }

    fn arb_pos() -> impl Strategy<Value = Position> {
        (-1000.0..1000.0f64, -1000.0..1000.0f64).prop_map(|(x, y)| Position::new(x, y))
    }

    proptest! {
        #[test]
        fn distance_is_a_metric(a in arb_pos(), b in arb_pos(), c in arb_pos()) {
            let ab = distance(a, b);
            let ba = distance(b, a);
            let ac = distance(a, c);
            let cb = distance(c, b);
            prop_assert!(ab >= 0.0);
            prop_assert!((ab - ba).abs() < TOL);
            // zero iff equal (up to exact representation)
            if a == b {
                prop_assert_eq!(ab, 0.0);
            }
            prop_assert!(ab <= ac + cb + TOL);
        }

        #[test]
        fn cosine_in_unit_interval(
            vx in -50.0..50.0f64, vy in -50.0..50.0f64,
            dx in -1000.0..1000.0f64, dy in -1000.0..1000.0f64,
        ) {
            let c = cosine_between(Velocity::new(vx, vy), Displacement { dx, dy });
            prop_assert!((-1.0..=1.0).contains(&c));
        }

        #[test]
        fn cosine_scale_invariant(
            vx in -50.0..50.0f64, vy in -50.0..50.0f64,
            dx in -1000.0..1000.0f64, dy in -1000.0..1000.0f64,
            k in 0.001..100.0f64,
        ) {
            let v = Velocity::new(vx, vy);
            let d = Displacement { dx, dy };
            let scaled = Velocity::new(vx * k, vy * k);
            prop_assert!((cosine_between(v, d) - cosine_between(scaled, d)).abs() < 1e-6);
        }
    }
}
