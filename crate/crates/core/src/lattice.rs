//! The face-centered cubic lattice with shortest nonzero vector of length 2.
//!
//! Lattice points are kept as integer triples `(a, b, c)` with `a + b + c`
//! even; the Euclidean point is `sqrt(2) * (a, b, c)`, produced by a single
//! multiplication per coordinate.

use std::f64::consts::SQRT_2;
use std::ops::{Add, Neg};

use serde::Serialize;

use crate::euclid::{Vec3, DEFAULT_EPS};

/// An FCC lattice point in integer coordinates (sum of coordinates even).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FccPoint(pub [i64; 3]);

impl FccPoint {
    pub fn new(a: i64, b: i64, c: i64) -> Option<Self> {
        ((a + b + c).rem_euclid(2) == 0).then_some(Self([a, b, c]))
    }

    pub fn to_vec3(self) -> Vec3 {
        let [a, b, c] = self.0;
        Vec3::new(a as f64 * SQRT_2, b as f64 * SQRT_2, c as f64 * SQRT_2)
    }

    pub fn norm_squared_int(self) -> i64 {
        self.0.iter().map(|v| v * v).sum()
    }
}

impl Add for FccPoint {
    type Output = FccPoint;
    fn add(self, o: FccPoint) -> FccPoint {
        FccPoint([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }
}

impl Neg for FccPoint {
    type Output = FccPoint;
    fn neg(self) -> FccPoint {
        FccPoint([-self.0[0], -self.0[1], -self.0[2]])
    }
}

/// The twelve nearest-neighbor offsets (the cuboctahedron shell).
pub fn neighbor_offsets() -> [FccPoint; 12] {
    let mut out = [FccPoint([0; 3]); 12];
    let mut n = 0;
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        for si in [1, -1] {
            for sj in [1, -1] {
                let mut v = [0; 3];
                v[i] = si;
                v[j] = sj;
                out[n] = FccPoint(v);
                n += 1;
            }
        }
    }
    out
}

/// Rounds `v` to the nearest FCC point if it lies within `eps` of one.
pub fn nearest_fcc_point(v: Vec3, eps: f64) -> Option<FccPoint> {
    let coords = [v.x, v.y, v.z].map(|c| c / SQRT_2);
    let rounded = coords.map(|c| c.round());
    let p = FccPoint::new(rounded[0] as i64, rounded[1] as i64, rounded[2] as i64)?;
    ((p.to_vec3() - v).norm() <= eps).then_some(p)
}

pub fn is_fcc_point(v: Vec3, eps: f64) -> bool {
    nearest_fcc_point(v, eps).is_some()
}

/// All FCC points within Euclidean distance `radius` of the origin.
pub fn fcc_ball(radius: f64) -> Vec<Vec3> {
    fcc_ball_points(radius)
        .into_iter()
        .map(FccPoint::to_vec3)
        .collect()
}

pub fn fcc_ball_points(radius: f64) -> Vec<FccPoint> {
    assert!(radius >= 0.0, "radius must be non-negative");
    let limit = radius + DEFAULT_EPS;
    let r = (limit / SQRT_2).floor() as i64 + 1;
    let mut out = Vec::new();
    for a in -r..=r {
        for b in -r..=r {
            for c in -r..=r {
                if let Some(p) = FccPoint::new(a, b, c) {
                    if p.to_vec3().norm() <= limit {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Superbase {
    pub v: [Vec3; 4],
}

impl Superbase {
    pub fn sum(&self) -> Vec3 {
        self.v.iter().fold(Vec3::ZERO, |acc, &x| acc + x)
    }

    pub fn scaled(&self, s: f64) -> Superbase {
        Superbase {
            v: self.v.map(|x| x * s),
        }
    }

    /// Checks zero sum, pairwise obtuseness and independence of `v1, v2, v3`.
    pub fn is_valid(&self, eps: f64) -> bool {
        let scale = self.v.iter().map(|x| x.norm()).fold(1.0, f64::max);
        if self.sum().norm() > eps * scale {
            return false;
        }
        for i in 0..4 {
            for j in i + 1..4 {
                if self.v[i].dot(self.v[j]) > eps * scale * scale {
                    return false;
                }
            }
        }
        self.v[1].triple(self.v[2], self.v[3]).abs() > eps * scale.powi(3)
    }
}

/// An obtuse superbase of the FCC lattice, found by exhaustive search over
/// ordered triples of vectors from the first two shells.
pub fn fcc_superbase() -> Superbase {
    let [v0, v1, v2, v3] = fcc_superbase_int();
    Superbase {
        v: [v0, v1, v2, v3].map(FccPoint::to_vec3),
    }
}

pub(crate) fn fcc_superbase_int() -> [FccPoint; 4] {
    let mut candidates: Vec<FccPoint> = fcc_ball_points(2.0 * SQRT_2)
        .into_iter()
        .filter(|p| p.norm_squared_int() > 0)
        .collect();
    // shortest first, then lexicographic, so the search result is canonical
    candidates.sort_by_key(|p| (p.norm_squared_int(), std::cmp::Reverse(p.0)));

    let dot = |a: FccPoint, b: FccPoint| -> i64 { (0..3).map(|i| a.0[i] * b.0[i]).sum() };
    let det = |a: FccPoint, b: FccPoint, c: FccPoint| -> i64 {
        let [a0, a1, a2] = a.0;
        let [b0, b1, b2] = b.0;
        let [c0, c1, c2] = c.0;
        a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) + a2 * (b0 * c1 - b1 * c0)
    };

    for &v1 in &candidates {
        for &v2 in &candidates {
            for &v3 in &candidates {
                // FCC has index 2 in Z^3, so an integral basis has |det| = 2
                if det(v1, v2, v3).abs() != 2 {
                    continue;
                }
                let v0 = -(v1 + v2 + v3);
                let s = [v0, v1, v2, v3];
                let obtuse = (0..4).all(|i| (i + 1..4).all(|j| dot(s[i], s[j]) <= 0));
                if obtuse {
                    return s;
                }
            }
        }
    }
    unreachable!("the FCC lattice is of the first kind")
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VoronoiVectorReport {
    pub vectors: Vec<Vec3>,
    pub lengths: Vec<f64>,
    pub count_length_two: usize,
}

/// The fourteen vectors `±v1, ±(v0+v1), ±(v1+v2), ±(v1+v3), ±(v0+v1+v2),
/// ±(v0+v1+v3), ±(v1+v2+v3)`, which contain every strict Voronoi vector.
pub fn voronoi_candidates(sb: &Superbase) -> VoronoiVectorReport {
    let [v0, v1, v2, v3] = sb.v;
    let half = [
        v1,
        v0 + v1,
        v1 + v2,
        v1 + v3,
        v0 + v1 + v2,
        v0 + v1 + v3,
        v1 + v2 + v3,
    ];
    let vectors: Vec<Vec3> = half.iter().flat_map(|&v| [v, -v]).collect();
    let lengths: Vec<f64> = vectors.iter().map(|v| v.norm()).collect();
    let count_length_two = lengths
        .iter()
        .filter(|&&l| (l - 2.0).abs() <= DEFAULT_EPS)
        .count();
    VoronoiVectorReport {
        vectors,
        lengths,
        count_length_two,
    }
}
