//! Spherical trigonometry on curvature-1 geodesic triangles.
//!
//! Triangles are abstract: a triple of side lengths in radians, each side a
//! minor great-circle arc of the unit sphere. Angles and area follow from the
//! spherical law of cosines and the angle excess.

mod profile;

pub use profile::{revolution_totals, smooth_cone_profile, RevolutionTotals, WarpedProfile};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tol;

/// A geodesic triangle on the unit sphere, given by its side lengths.
///
/// Side `k` is opposite corner `k`. Valid triangles satisfy `0 < side < pi`,
/// the strict triangle inequalities, and perimeter `< 2*pi`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SphericalTriangle {
    sides: [f64; 3],
}

impl SphericalTriangle {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        let s = [a, b, c];
        for (i, &x) in s.iter().enumerate() {
            if !x.is_finite() || x <= 0.0 {
                return Err(Error::InvalidTriangle(format!(
                    "side {i} = {x} violates 0 < side"
                )));
            }
            if x >= std::f64::consts::PI {
                return Err(Error::InvalidTriangle(format!(
                    "side {i} = {x} violates side < pi"
                )));
            }
        }
        for i in 0..3 {
            let (x, y, z) = (s[i], s[(i + 1) % 3], s[(i + 2) % 3]);
            if x >= y + z {
                return Err(Error::InvalidTriangle(format!(
                    "side {i} = {x} violates the strict triangle inequality {x} < {y} + {z}"
                )));
            }
        }
        if a + b + c >= 2.0 * std::f64::consts::PI {
            return Err(Error::InvalidTriangle(format!(
                "perimeter {} violates a + b + c < 2*pi",
                a + b + c
            )));
        }
        Ok(Self { sides: s })
    }

    pub fn sides(&self) -> [f64; 3] {
        self.sides
    }

    pub fn side(&self, k: usize) -> f64 {
        self.sides[k]
    }

    /// Interior angle at corner `k` (opposite side `k`).
    ///
    /// The triangle was validated at construction, so an out-of-range cosine
    /// here is rounding noise and is clamped rather than rejected.
    pub fn angle(&self, k: usize) -> f64 {
        let a = self.sides[k];
        let b = self.sides[(k + 1) % 3];
        let c = self.sides[(k + 2) % 3];
        let cos_angle = (a.cos() - b.cos() * c.cos()) / (b.sin() * c.sin());
        cos_angle.clamp(-1.0, 1.0).acos()
    }

    /// All three interior angles, indexed like the corners.
    pub fn angles(&self) -> [f64; 3] {
        [self.angle(0), self.angle(1), self.angle(2)]
    }
}

fn clamped_acos(x: f64) -> Result<f64> {
    if x > 1.0 + tol::COSINE_CLAMP || x < -1.0 - tol::COSINE_CLAMP {
        return Err(Error::InvalidTriangle(format!(
            "law-of-cosines argument {x} outside [-1, 1]"
        )));
    }
    Ok(x.clamp(-1.0, 1.0).acos())
}

/// Angles of a valid triangle, in corner order. Each lies in (0, pi) and the
/// law of cosines `cos a = cos b cos c + sin b sin c cos(alpha)` holds with
/// `alpha` the angle opposite `a`.
pub fn angles_from_sides(t: &SphericalTriangle) -> [f64; 3] {
    t.angles()
}

/// Solve the side-angle-side problem: sides of lengths `b` and `a` meeting at
/// the included angle `gamma`. The returned triangle carries the inputs as
/// sides 0 and 1 and the derived third side as side 2, so the included angle
/// sits at corner 2.
pub fn solve_sas(b: f64, gamma: f64, a: f64) -> Result<SphericalTriangle> {
    for (name, v) in [("b", b), ("a", a)] {
        if !(v > 0.0 && v < std::f64::consts::PI) {
            return Err(Error::InvalidParameter {
                name: name.into(),
                reason: format!("{v} outside (0, pi)"),
            });
        }
    }
    if !(gamma > 0.0 && gamma < std::f64::consts::PI) {
        return Err(Error::Degenerate(format!(
            "included angle {gamma} outside (0, pi) flattens the triangle"
        )));
    }
    let cos_c = a.cos() * b.cos() + a.sin() * b.sin() * gamma.cos();
    let c = clamped_acos(cos_c)?;
    if c < 1e-14 || c > std::f64::consts::PI - 1e-14 {
        return Err(Error::Degenerate(format!(
            "derived side {c} is degenerate (0 or pi)"
        )));
    }
    SphericalTriangle::new(a, b, c)
}

/// Area of a triangle by the angle excess; always strictly positive.
pub fn area_excess(t: &SphericalTriangle) -> f64 {
    let [alpha, beta, gamma] = t.angles();
    alpha + beta + gamma - std::f64::consts::PI
}

/// Spherical excess via l'Huilier's theorem. Numerically stable for tiny
/// triangles; used as an independent route to the area.
pub fn excess_lhuilier(t: &SphericalTriangle) -> f64 {
    let [a, b, c] = t.sides();
    let s = 0.5 * (a + b + c);
    let m = (s / 2.0).tan()
        * ((s - a) / 2.0).tan()
        * ((s - b) / 2.0).tan()
        * ((s - c) / 2.0).tan();
    4.0 * m.max(0.0).sqrt().atan()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    // Half-angle formula: an independent route to the angles.
    fn angle_half_formula(t: &SphericalTriangle, k: usize) -> f64 {
        let [a, b, c] = [t.side(k), t.side((k + 1) % 3), t.side((k + 2) % 3)];
        let s = 0.5 * (a + b + c);
        let num = ((s - b).sin() * (s - c).sin()).max(0.0);
        let den = s.sin() * (s - a).sin();
        2.0 * (num / den).sqrt().atan()
    }

    #[test]
    fn octant_has_three_right_angles() {
        let t = SphericalTriangle::new(FRAC_PI_2, FRAC_PI_2, FRAC_PI_2).unwrap();
        for k in 0..3 {
            assert_relative_eq!(t.angle(k), FRAC_PI_2, epsilon = 1e-14);
        }
        assert_relative_eq!(area_excess(&t), FRAC_PI_2, epsilon = 1e-13);
    }

    #[test]
    fn doubled_triangle_building_block_angles() {
        // px = 0.2, right angle at x, xy = pi - 0.2. Sides indexed (opposite
        // p, opposite y, opposite x) = (xy, px, py).
        let eps = 0.2;
        let t = solve_sas(eps, FRAC_PI_2, PI - eps).unwrap();
        assert_relative_eq!(t.side(2), (-(eps.cos().powi(2))).acos(), epsilon = 1e-14);
        assert_relative_eq!(t.side(2), 2.8596993716338298, epsilon = 1e-13);

        let angle_p = t.angle(0);
        let angle_y = t.angle(1);
        let angle_x = t.angle(2);
        assert!(angle_p > FRAC_PI_2, "angle at p must exceed pi/2");
        assert!(angle_y < FRAC_PI_2, "angle at y must be below pi/2");
        assert_relative_eq!(angle_x, FRAC_PI_2, epsilon = 1e-12);
        assert_relative_eq!(angle_p, 2.3461277838322003, epsilon = 1e-12);
        assert_relative_eq!(angle_y, 0.7954648697575929, epsilon = 1e-12);
        // Cross-check against the half-angle route.
        for k in 0..3 {
            assert_relative_eq!(t.angle(k), angle_half_formula(&t, k), epsilon = 1e-11);
        }
    }

    #[test]
    fn small_equilateral_angle_and_excess() {
        let t = SphericalTriangle::new(0.1, 0.1, 0.1).unwrap();
        let alpha = t.angle(0);
        assert_relative_eq!(alpha, 1.0486427334982729, epsilon = 1e-13);
        let excess = area_excess(&t);
        assert_relative_eq!(excess, 4.3355469050256094e-3, epsilon = 1e-12);
        // Angle splits as pi/3 plus a third of the excess.
        assert_relative_eq!(alpha, PI / 3.0 + excess / 3.0, epsilon = 1e-12);
        assert_relative_eq!(excess, excess_lhuilier(&t), epsilon = 1e-14);
    }

    #[test]
    fn sas_lune_sector_third_side_equals_apex_angle() {
        for theta in [0.3, 0.7, 1.0471975511965976] {
            let t = solve_sas(FRAC_PI_2, theta, FRAC_PI_2).unwrap();
            assert_relative_eq!(t.side(2), theta, epsilon = 1e-14);
            assert_relative_eq!(area_excess(&t), theta, epsilon = 1e-12);
        }
    }

    #[test]
    fn sas_flat_angle_is_degenerate() {
        match solve_sas(0.3, PI, 0.3) {
            Err(Error::Degenerate(_)) => {}
            other => panic!("expected degeneracy error, got {other:?}"),
        }
    }

    #[test]
    fn invalid_triangles_name_the_violated_inequality() {
        let err = SphericalTriangle::new(2.0, 0.5, 0.5).unwrap_err();
        assert!(err.to_string().contains("triangle inequality"));
        let err = SphericalTriangle::new(2.5, 2.0, 1.9).unwrap_err();
        assert!(err.to_string().contains("2*pi"));
        let err = SphericalTriangle::new(-0.1, 0.5, 0.5).unwrap_err();
        assert!(err.to_string().contains("0 < side"));
    }

    fn valid_triangle_strategy() -> impl Strategy<Value = SphericalTriangle> {
        (1e-3..3.0f64, 1e-3..3.0f64, 1e-3..3.0f64)
            .prop_filter_map("triangle invariants", |(a, b, c)| {
                SphericalTriangle::new(a, b, c).ok()
            })
    }

    proptest! {
        // Reconstructing any side from the other two and the included angle
        // reproduces it.
        #[test]
        fn law_of_cosines_round_trip(t in valid_triangle_strategy()) {
            for k in 0..3 {
                let gamma = t.angle(k);
                let b = t.side((k + 1) % 3);
                let c = t.side((k + 2) % 3);
                let rebuilt = solve_sas(b, gamma, c).unwrap();
                prop_assert!((rebuilt.side(2) - t.side(k)).abs() < 1e-10);
            }
        }

        #[test]
        fn excess_is_positive(t in valid_triangle_strategy()) {
            prop_assert!(area_excess(&t) > 0.0);
        }

        // For tiny triangles the excess approaches the Euclidean Heron area.
        #[test]
        fn excess_matches_heron_for_tiny_triangles(
            (a, b, c) in (1e-4..1e-2f64, 1e-4..1e-2f64, 1e-4..1e-2f64)
                .prop_filter("triangle inequality, non-sliver", |(a, b, c)| {
                    let s = 0.5 * (a + b + c);
                    a < b + c && b < a + c && c < a + b
                        && (s * (s - a) * (s - b) * (s - c)) > 1e-3 * (a * b * c).powf(4.0 / 3.0)
                })
        ) {
            let t = SphericalTriangle::new(a, b, c).unwrap();
            let s = 0.5 * (a + b + c);
            let heron = (s * (s - a) * (s - b) * (s - c)).sqrt();
            let ratio = excess_lhuilier(&t) / heron;
            prop_assert!((ratio - 1.0).abs() < 0.01, "ratio {} off", ratio);
        }
    }
}
