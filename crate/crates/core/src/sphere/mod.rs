//! Geometry on the unit sphere.
//!
//! Caps of angular radius pi/6 pack exactly when their centers are at least
//! pi/3 apart, so throughout this module "touching" means angular distance
//! pi/3 within `angle_eps`.

mod caps;
mod delaunay;
mod point;
mod polygons;
pub mod tables;
mod trig;

use std::f64::consts::{FRAC_PI_3, PI};

pub use caps::{cap_contact_counts, project_neighbors, CapContacts};
pub use delaunay::{delaunay, Edge, SphericalTriangle, SphericalTriangulation};
pub use point::{angular_distance, CapConfiguration, CapFile, PolarConvention, SpherePoint};
pub use polygons::{
    assemble_polygons, classify_triangles, Classification, PolygonClass, PolygonComponent,
};
pub use trig::{
    acos_checked, base_angle_from_side, case512_chain, opposite_angle, regular_polygon_area,
    side_from_angle, side_from_apex_angle, Case512,
};

/// Minimum center separation of caps of angular radius pi/6.
pub const CAP_SEPARATION: f64 = FRAC_PI_3;

/// Angular radius of the caps cut out by touching neighbors of a unit ball.
pub const CAP_RADIUS: f64 = PI / 6.0;

/// Interior angle of the regular spherical triangle of side pi/3, arccos(1/3).
pub fn regular_angle() -> f64 {
    (1.0f64 / 3.0).acos()
}

/// The angles `2*pi - k*arccos(1/3)` for `k = 1..=4`, in that order.
pub fn forbidden_angles() -> [f64; 4] {
    let a = regular_angle();
    [1.0, 2.0, 3.0, 4.0].map(|k| 2.0 * PI - k * a)
}

/// Distance from `x` to the nearest of [`forbidden_angles`].
pub fn distance_to_forbidden(x: f64) -> f64 {
    forbidden_angles()
        .iter()
        .map(|f| (x - f).abs())
        .fold(f64::INFINITY, f64::min)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forbidden_set_values() {
        let f = forbidden_angles();
        let printed = [5.052, 3.821, 2.590, 1.359];
        for (x, p) in f.iter().zip(printed) {
            assert!((x - p).abs() < 1e-3);
        }
        assert!(distance_to_forbidden(f[2]) == 0.0);
    }

    #[test]
    fn full_turn_is_not_a_multiple_of_the_regular_angle() {
        let ratio = 2.0 * PI / regular_angle();
        assert!((ratio - 5.1043).abs() < 1e-4);
        assert!((ratio - ratio.round()).abs() > 1e-6);
    }
}
