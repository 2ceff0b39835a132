//! Euclidean 3-space primitives and the packing data model.
//!
//! Units are chosen so that every ball has radius 1; two balls touch when
//! their centers are at distance 2.

use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Center distance of two touching unit balls.
pub const CONTACT_DISTANCE: f64 = 2.0;

pub const DEFAULT_EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 3]", into = "[f64; 3]")]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3::new(0.0, 0.0, 0.0);

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn dot(self, other: Vec3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(self, other: Vec3) -> Vec3 {
        Vec3::new(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_squared().sqrt()
    }

    /// Unit vector in the direction of `self`; `None` for the zero vector.
    pub fn normalized(self) -> Option<Vec3> {
        let n = self.norm();
        (n > 0.0 && n.is_finite()).then(|| self * (1.0 / n))
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Scalar triple product `self · (b × c)`.
    pub fn triple(self, b: Vec3, c: Vec3) -> f64 {
        self.dot(b.cross(c))
    }
}

impl From<[f64; 3]> for Vec3 {
    fn from([x, y, z]: [f64; 3]) -> Self {
        Vec3::new(x, y, z)
    }
}

impl From<Vec3> for [f64; 3] {
    fn from(v: Vec3) -> Self {
        [v.x, v.y, v.z]
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl AddAssign for Vec3 {
    fn add_assign(&mut self, o: Vec3) {
        *self = *self + o;
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

pub fn distance(a: Vec3, b: Vec3) -> f64 {
    (a - b).norm()
}

/// Absolute slack used for "equals 2" (distances) and "equals pi/3" (angles).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TolerancePolicy {
    pub distance_eps: f64,
    pub angle_eps: f64,
}

impl TolerancePolicy {
    pub fn new(distance_eps: f64, angle_eps: f64) -> Result<Self> {
        for eps in [distance_eps, angle_eps] {
            if !(eps > 0.0 && eps < 1e-3) {
                return Err(Error::InvalidTolerance(eps));
            }
        }
        Ok(Self {
            distance_eps,
            angle_eps,
        })
    }
}

impl Default for TolerancePolicy {
    fn default() -> Self {
        Self {
            distance_eps: DEFAULT_EPS,
            angle_eps: DEFAULT_EPS,
        }
    }
}

/// A finite packing of unit balls, stored by center.
#[derive(Debug, Clone, PartialEq)]
pub struct Packing {
    centers: Vec<Vec3>,
    tolerance: f64,
}

impl Packing {
    /// Builds a packing, rejecting non-finite centers and overlapping balls.
    pub fn new(centers: Vec<Vec3>, tolerance: f64) -> Result<Self> {
        let packing = Self::from_raw(centers, tolerance)?;
        if let Some(&(i, j)) = packing.validate().first() {
            return Err(Error::Overlap {
                i,
                j,
                distance: distance(packing.centers[i], packing.centers[j]),
            });
        }
        Ok(packing)
    }

    /// Builds a packing without the overlap check; [`Packing::validate`]
    /// reports the violations.
    pub fn from_raw(centers: Vec<Vec3>, tolerance: f64) -> Result<Self> {
        if !(tolerance >= 0.0 && tolerance.is_finite()) {
            return Err(Error::Parameter(format!(
                "packing tolerance must be finite and non-negative, got {tolerance}"
            )));
        }
        if let Some(index) = centers.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(Self { centers, tolerance })
    }

    pub fn centers(&self) -> &[Vec3] {
        &self.centers
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn len(&self) -> usize {
        self.centers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.centers.is_empty()
    }

    /// Every unordered pair `(i, j)`, `i < j`, whose centers are closer than
    /// `2 - tolerance`. Empty means the balls form a packing.
    pub fn validate(&self) -> Vec<(usize, usize)> {
        let limit = CONTACT_DISTANCE - self.tolerance;
        let mut bad = Vec::new();
        for (i, &a) in self.centers.iter().enumerate() {
            for (j, &b) in self.centers.iter().enumerate().skip(i + 1) {
                if distance(a, b) < limit {
                    bad.push((i, j));
                }
            }
        }
        bad
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let file: PackingFile = serde_json::from_str(s)?;
        file.into_packing()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&PackingFile::from(self)).expect("packing serializes")
    }
}

/// On-disk form: `{"radius": 1.0, "tolerance": 1e-9, "centers": [[x,y,z], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PackingFile {
    pub radius: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    pub centers: Vec<Vec3>,
}

impl PackingFile {
    pub fn into_packing(self) -> Result<Packing> {
        if self.radius != 1.0 {
            return Err(Error::InvalidRadius(self.radius));
        }
        Packing::new(self.centers, self.tolerance.unwrap_or(DEFAULT_EPS))
    }
}

impl From<&Packing> for PackingFile {
    fn from(p: &Packing) -> Self {
        Self {
            radius: 1.0,
            tolerance: Some(p.tolerance),
            centers: p.centers.clone(),
        }
    }
}
