use serde::{Deserialize, Serialize};

use super::CAP_RADIUS;
use crate::error::{Error, Result};
use crate::euclid::{Vec3, DEFAULT_EPS};

/// A point on the unit sphere, kept both as polar angles and as a unit
/// vector. `theta` is the inclination from +z in `[0, pi]`, `phi` the azimuth.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpherePoint {
    pub theta: f64,
    pub phi: f64,
    unit: Vec3,
}

impl SpherePoint {
    pub fn from_polar(theta: f64, phi: f64) -> Self {
        let (st, ct) = theta.sin_cos();
        let (sp, cp) = phi.sin_cos();
        Self {
            theta,
            phi,
            unit: Vec3::new(st * cp, st * sp, ct),
        }
    }

    /// Latitude form: `elevation` measured from the xy-plane.
    pub fn from_latitude(elevation: f64, phi: f64) -> Self {
        Self::from_polar(std::f64::consts::FRAC_PI_2 - elevation, phi)
    }

    /// Projects a nonzero vector onto the sphere; `None` for zero or
    /// non-finite input.
    pub fn from_vector(v: Vec3) -> Option<Self> {
        let unit = v.normalized().filter(|u| u.is_finite())?;
        Some(Self {
            theta: unit.z.clamp(-1.0, 1.0).acos(),
            phi: unit.y.atan2(unit.x),
            unit,
        })
    }

    pub fn unit(&self) -> Vec3 {
        self.unit
    }
}

/// Great-circle distance; the atan2 form stays accurate for nearly equal
/// and nearly antipodal points.
pub fn angular_distance(p: &SpherePoint, q: &SpherePoint) -> f64 {
    p.unit.cross(q.unit).norm().atan2(p.unit.dot(q.unit))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PolarConvention {
    /// Second coordinate is the angle from the +z axis.
    Inclination,
    /// Second coordinate is the elevation above the xy-plane.
    Latitude,
}

/// Centers of a packing of congruent spherical caps.
#[derive(Debug, Clone, PartialEq)]
pub struct CapConfiguration {
    points: Vec<SpherePoint>,
    angular_radius: f64,
}

impl CapConfiguration {
    /// Caps of radius pi/6 with the default angle tolerance.
    pub fn new(points: Vec<SpherePoint>) -> Result<Self> {
        Self::with_radius(points, CAP_RADIUS, DEFAULT_EPS)
    }

    /// Checks that the caps do not overlap (centers at least
    /// `2 * angular_radius - angle_eps` apart) and, for radius pi/6, that
    /// there are at most 12 of them.
    pub fn with_radius(
        points: Vec<SpherePoint>,
        angular_radius: f64,
        angle_eps: f64,
    ) -> Result<Self> {
        if !(angular_radius > 0.0 && angular_radius < std::f64::consts::FRAC_PI_2) {
            return Err(Error::Parameter(format!(
                "angular radius {angular_radius} must lie in (0, pi/2)"
            )));
        }
        if (angular_radius - CAP_RADIUS).abs() <= angle_eps && points.len() > 12 {
            return Err(Error::TooManyCaps(points.len()));
        }
        let minimum = 2.0 * angular_radius;
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                let distance = angular_distance(&points[i], &points[j]);
                if distance < minimum - angle_eps {
                    return Err(Error::CapOverlap {
                        i,
                        j,
                        distance,
                        minimum,
                    });
                }
            }
        }
        Ok(Self {
            points,
            angular_radius,
        })
    }

    pub fn points(&self) -> &[SpherePoint] {
        &self.points
    }

    pub fn units(&self) -> Vec<Vec3> {
        self.points.iter().map(SpherePoint::unit).collect()
    }

    pub fn angular_radius(&self) -> f64 {
        self.angular_radius
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn min_distance(&self) -> f64 {
        let mut best = f64::INFINITY;
        for (i, p) in self.points.iter().enumerate() {
            for q in &self.points[i + 1..] {
                best = best.min(angular_distance(p, q));
            }
        }
        best
    }

    /// `true` when the caps have the radius pi/6 of projected unit balls.
    pub fn is_kissing_radius(&self) -> bool {
        (self.angular_radius - CAP_RADIUS).abs() <= DEFAULT_EPS
    }

    pub fn from_json_str(s: &str, angle_eps: f64) -> Result<Self> {
        let file: CapFile = serde_json::from_str(s)?;
        let points = file
            .points
            .iter()
            .map(|&[theta, phi]| {
                if theta.is_finite() && phi.is_finite() {
                    Ok(SpherePoint::from_polar(theta, phi))
                } else {
                    Err(Error::Parameter("non-finite polar coordinate".into()))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::with_radius(points, file.angular_radius, angle_eps)
    }

    pub fn to_json_string(&self) -> String {
        let file = CapFile {
            angular_radius: self.angular_radius,
            points: self.points.iter().map(|p| [p.theta, p.phi]).collect(),
        };
        serde_json::to_string_pretty(&file).expect("cap file serializes")
    }
}

/// On-disk form: `{"angular_radius": r, "points": [[theta, phi], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CapFile {
    pub angular_radius: f64,
    pub points: Vec<[f64; 2]>,
}
