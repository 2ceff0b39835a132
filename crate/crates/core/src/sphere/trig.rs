//! First law of cosines specialisations for triangles with sides of
//! length pi/3.

use std::f64::consts::{FRAC_PI_3, PI};

use serde::Serialize;

use super::regular_angle;
use crate::error::{Error, Result};
use crate::euclid::DEFAULT_EPS;

/// `acos` that clamps arguments within `DEFAULT_EPS` of `[-1, 1]` and
/// reports anything further out as infeasible.
pub fn acos_checked(x: f64, what: &'static str) -> Result<f64> {
    if !x.is_finite() || x.abs() > 1.0 + DEFAULT_EPS {
        return Err(Error::Domain { what, argument: x });
    }
    Ok(x.clamp(-1.0, 1.0).acos())
}

/// Side opposite the apex angle `alpha` of an isosceles triangle whose legs
/// are pi/3: `arccos((1 + 3 cos alpha) / 4)`.
pub fn side_from_apex_angle(alpha: f64) -> Result<f64> {
    acos_checked((1.0 + 3.0 * alpha.cos()) / 4.0, "side_from_apex_angle")
}

/// Base angle of the same isosceles triangle given its base `a`:
/// `arccos((1 - cos a) / (sqrt(3) sin a))`.
pub fn base_angle_from_side(a: f64) -> Result<f64> {
    acos_checked(
        (1.0 - a.cos()) / (3f64.sqrt() * a.sin()),
        "base_angle_from_side",
    )
}

/// Angle opposite side `c` in the spherical triangle with sides `a, b, c`.
pub fn opposite_angle(a: f64, b: f64, c: f64) -> Result<f64> {
    acos_checked(
        (c.cos() - a.cos() * b.cos()) / (a.sin() * b.sin()),
        "opposite_angle",
    )
}

/// Third side of the triangle with sides `a, b` enclosing `angle`.
pub fn side_from_angle(a: f64, b: f64, angle: f64) -> Result<f64> {
    acos_checked(
        a.cos() * b.cos() + a.sin() * b.sin() * angle.cos(),
        "side_from_angle",
    )
}

/// Area of the regular spherical triangle (3) or quadrilateral (4) with
/// side pi/3.
pub fn regular_polygon_area(sides: usize) -> Result<f64> {
    match sides {
        3 => Ok(6.0 * (1.0 / 3f64.sqrt()).asin() - PI),
        4 => Ok(8.0 * 2f64.sqrt().atan() - 2.0 * PI),
        n => Err(Error::UnsupportedSides(n)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Case512 {
    pub a: f64,
    pub gamma: f64,
    pub beta: f64,
    pub theta: f64,
    pub b: f64,
}

impl Case512 {
    /// The configuration is excluded because `b` exceeds the spherical
    /// diameter 2*pi/3 of a pentagon with sides pi/3.
    pub fn exceeds_pentagon_diameter(&self) -> bool {
        self.b > 2.0 * PI / 3.0
    }
}

/// Law-of-cosines chain for a quadrilateral sharing opposite vertices with
/// two pentagons: `a` spans two regular triangles, `gamma` is the base angle
/// over `a`, `beta` the quadrilateral angle from the first table row, and
/// `b` closes the angle `theta = 2*pi - (arccos(1/3) + beta + gamma)`.
pub fn case512_chain() -> Result<Case512> {
    let reg = regular_angle();
    let a = side_from_apex_angle(2.0 * reg)?;
    let gamma = base_angle_from_side(a)?;
    let quad_side = side_from_apex_angle(2.0 * PI - 4.0 * reg)?;
    let beta = 2.0 * base_angle_from_side(quad_side)?;
    let theta = 2.0 * PI - (reg + beta + gamma);
    let b = side_from_angle(a, FRAC_PI_3, theta)?;
    Ok(Case512 {
        a,
        gamma,
        beta,
        theta,
        b,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euclid::Vec3;
    use crate::sphere::SpherePoint;

    // Oracles: build the triangle from coordinates and measure.

    fn tangent_angle(at: Vec3, p: Vec3, q: Vec3) -> f64 {
        let t1 = p - at * p.dot(at);
        let t2 = q - at * q.dot(at);
        t1.cross(t2).norm().atan2(t1.dot(t2))
    }

    fn arc(p: Vec3, q: Vec3) -> f64 {
        p.cross(q).norm().atan2(p.dot(q))
    }

    /// Apex at the pole, legs of length `b` (azimuth 0) and `a` (azimuth
    /// `gamma`).
    fn triangle(a: f64, b: f64, gamma: f64) -> (Vec3, Vec3, Vec3) {
        (
            SpherePoint::from_polar(0.0, 0.0).unit(),
            SpherePoint::from_polar(b, 0.0).unit(),
            SpherePoint::from_polar(a, gamma).unit(),
        )
    }

    #[test]
    fn side_from_apex_matches_coordinates() {
        for alpha in [0.3, 1.0, 1.359, 2.0, 2.59, 3.0] {
            let (c, p, q) = triangle(FRAC_PI_3, FRAC_PI_3, alpha);
            assert!((side_from_apex_angle(alpha).unwrap() - arc(p, q)).abs() < 1e-12);
            let base = tangent_angle(p, c, q);
            let a = arc(p, q);
            assert!((base_angle_from_side(a).unwrap() - base).abs() < 1e-9);
        }
    }

    #[test]
    fn opposite_angle_matches_coordinates() {
        for (a, b, gamma) in [(1.151, 1.97, 0.9), (0.7, 1.3, 2.1), (FRAC_PI_3, 2.0, 1.5)] {
            let (_, p, q) = triangle(a, b, gamma);
            let c = arc(p, q);
            assert!((opposite_angle(a, b, c).unwrap() - gamma).abs() < 1e-9);
            assert!((side_from_angle(a, b, gamma).unwrap() - c).abs() < 1e-12);
        }
    }

    #[test]
    fn quadrilateral_rows() {
        let reg = regular_angle();
        let a1 = side_from_apex_angle(2.0 * PI - 4.0 * reg).unwrap();
        assert!((a1 - 1.151).abs() < 1e-3);
        let a2 = side_from_apex_angle(2.0 * PI - 3.0 * reg).unwrap();
        assert!((a2 - 1.970).abs() < 1e-3);
        assert!((side_from_apex_angle(reg).unwrap() - FRAC_PI_3).abs() < 1e-12);

        assert!((base_angle_from_side(a1).unwrap() - 1.1867).abs() < 1e-4);
        assert!((2.0 * base_angle_from_side(a1).unwrap() - 2.373).abs() < 1e-3);
        assert!((base_angle_from_side(a2).unwrap() - 0.5148).abs() < 1e-4);
        assert!((base_angle_from_side(FRAC_PI_3).unwrap() - reg).abs() < 1e-12);
    }

    #[test]
    fn pentagon_omegas() {
        let reg = regular_angle();
        let a1 = side_from_apex_angle(2.0 * PI - 4.0 * reg).unwrap();
        let a2 = side_from_apex_angle(2.0 * PI - 3.0 * reg).unwrap();
        assert!((opposite_angle(a1, a1, FRAC_PI_3).unwrap() - 1.158).abs() < 1e-3);
        assert!((opposite_angle(a1, a2, FRAC_PI_3).unwrap() - 0.671).abs() < 1e-3);
        let third = opposite_angle(FRAC_PI_3, FRAC_PI_3, FRAC_PI_3).unwrap();
        assert!((third - 1.23096).abs() < 1e-5);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(
            opposite_angle(0.2, 0.2, 1.5),
            Err(Error::Domain { .. })
        ));
        assert!(acos_checked(1.0 + 1e-12, "t").is_ok());
        assert!(acos_checked(1.0 + 1e-6, "t").is_err());
        assert!(acos_checked(f64::NAN, "t").is_err());
    }

    #[test]
    fn case512_values() {
        let c = case512_chain().unwrap();
        assert!((c.a - 1.91).abs() < 0.01);
        assert!((c.gamma - 0.615).abs() < 0.01);
        assert!((c.b - 2.15).abs() < 0.01);
        assert!(c.exceeds_pentagon_diameter());
    }

    #[test]
    fn polygon_areas_match_angle_excess() {
        // triangle: three angles arccos(1/3)
        let tri = 3.0 * regular_angle() - PI;
        assert!((regular_polygon_area(3).unwrap() - tri).abs() < 1e-12);

        // square of side pi/3 centred on the pole, measured from coordinates
        let mut lo = 0.0;
        let mut hi = PI / 2.0;
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            let s = arc(
                SpherePoint::from_polar(mid, 0.0).unit(),
                SpherePoint::from_polar(mid, PI / 2.0).unit(),
            );
            if s < FRAC_PI_3 {
                lo = mid
            } else {
                hi = mid
            }
        }
        let v: Vec<Vec3> = (0..4)
            .map(|k| SpherePoint::from_polar(lo, k as f64 * PI / 2.0).unit())
            .collect();
        let corner = tangent_angle(v[0], v[3], v[1]);
        let quad = 4.0 * corner - 2.0 * PI;
        assert!((regular_polygon_area(4).unwrap() - quad).abs() < 1e-9);

        let total =
            12.0 * regular_polygon_area(3).unwrap() + 4.0 * regular_polygon_area(4).unwrap();
        assert!((total - 12.052).abs() < 1e-3);
        assert!(total < 4.0 * PI);
        assert!(matches!(
            regular_polygon_area(5),
            Err(Error::UnsupportedSides(5))
        ));
    }
}
