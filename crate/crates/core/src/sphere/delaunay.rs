//! Spherical Delaunay triangulation as the convex hull of unit vectors.
//!
//! For points on the sphere, each hull facet cuts off an empty cap, so hull
//! facets are exactly the Delaunay cells. The hull is found by brute force:
//! a triple spans a facet plane when every other point lies on one side.
//! Facets with four or more cospherical vertices are fanned from their
//! smallest vertex index.

use std::collections::BTreeSet;

use serde::Serialize;

use super::point::CapConfiguration;
use crate::error::{Error, Result};
use crate::euclid::{Vec3, DEFAULT_EPS};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SphericalTriangle {
    /// Counter-clockwise when seen from outside the hull.
    pub vertices: [usize; 3],
    /// `sides[k]` is the arc opposite `vertices[k]`.
    pub sides: [f64; 3],
}

impl SphericalTriangle {
    pub fn edge(&self, k: usize) -> (usize, usize) {
        let a = self.vertices[(k + 1) % 3];
        let b = self.vertices[(k + 2) % 3];
        (a.min(b), a.max(b))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Edge {
    pub i: usize,
    pub j: usize,
    pub length: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SphericalTriangulation {
    pub n: usize,
    pub triangles: Vec<SphericalTriangle>,
    pub edges: Vec<Edge>,
}

impl SphericalTriangulation {
    pub fn face_count(&self) -> usize {
        self.triangles.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        let (i, j) = (i.min(j), i.max(j));
        self.edges
            .binary_search_by(|e| (e.i, e.j).cmp(&(i, j)))
            .is_ok()
    }
}

fn arc(p: Vec3, q: Vec3) -> f64 {
    p.cross(q).norm().atan2(p.dot(q))
}

pub fn delaunay(config: &CapConfiguration) -> Result<SphericalTriangulation> {
    triangulate_units(&config.units())
}

pub(crate) fn triangulate_units(pts: &[Vec3]) -> Result<SphericalTriangulation> {
    let n = pts.len();
    if n < 4 {
        return Err(Error::TooFewPoints(n));
    }
    let eps = DEFAULT_EPS;

    // facet vertex sets (sorted) with an outward normal
    let mut facets: Vec<(Vec<usize>, Vec3)> = Vec::new();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let Some(normal) = (pts[j] - pts[i]).cross(pts[k] - pts[i]).normalized() else {
                    continue;
                };
                let mut above = false;
                let mut below = false;
                let mut on_plane = vec![i, j, k];
                for (l, &p) in pts.iter().enumerate() {
                    if l == i || l == j || l == k {
                        continue;
                    }
                    let s = normal.dot(p - pts[i]);
                    if s > eps {
                        above = true;
                    } else if s < -eps {
                        below = true;
                    } else {
                        on_plane.push(l);
                    }
                    if above && below {
                        break;
                    }
                }
                if above && below {
                    continue;
                }
                if !above && !below {
                    return Err(Error::HemisphereDegeneracy);
                }
                on_plane.sort_unstable();
                if seen.insert(on_plane.clone()) {
                    let outward = if above { -normal } else { normal };
                    facets.push((on_plane, outward));
                }
            }
        }
    }

    let mut triangles = Vec::new();
    for (verts, normal) in facets {
        for [a, b, c] in fan_facet(pts, &verts, normal) {
            let (pa, pb, pc) = (pts[a], pts[b], pts[c]);
            triangles.push(SphericalTriangle {
                vertices: [a, b, c],
                sides: [arc(pb, pc), arc(pa, pc), arc(pa, pb)],
            });
        }
    }
    triangles.sort_by_key(|t| {
        let mut v = t.vertices;
        v.sort_unstable();
        v
    });

    let mut edge_set: BTreeSet<(usize, usize)> = BTreeSet::new();
    for t in &triangles {
        for k in 0..3 {
            edge_set.insert(t.edge(k));
        }
    }
    let edges: Vec<Edge> = edge_set
        .into_iter()
        .map(|(i, j)| Edge {
            i,
            j,
            length: arc(pts[i], pts[j]),
        })
        .collect();

    let f = triangles.len();
    let e = edges.len();
    if f != 2 * n - 4 || e != 3 * (n - 2) {
        return Err(Error::NonManifold(format!(
            "{n} points gave {f} faces and {e} edges"
        )));
    }
    Ok(SphericalTriangulation {
        n,
        triangles,
        edges,
    })
}

/// Orders the vertices of a planar facet counter-clockwise about its outward
/// normal and fans them from the smallest vertex index.
fn fan_facet(pts: &[Vec3], verts: &[usize], normal: Vec3) -> Vec<[usize; 3]> {
    let centroid =
        verts.iter().fold(Vec3::ZERO, |acc, &v| acc + pts[v]) * (1.0 / verts.len() as f64);
    let u = (pts[verts[0]] - centroid)
        .normalized()
        .expect("facet vertex differs from centroid");
    let w = normal.cross(u);
    let mut ring: Vec<(f64, usize)> = verts
        .iter()
        .map(|&v| {
            let d = pts[v] - centroid;
            (d.dot(w).atan2(d.dot(u)), v)
        })
        .collect();
    ring.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut cycle: Vec<usize> = ring.into_iter().map(|(_, v)| v).collect();
    let start = cycle
        .iter()
        .enumerate()
        .min_by_key(|(_, &v)| v)
        .map(|(i, _)| i)
        .expect("non-empty facet");
    cycle.rotate_left(start);
    (1..cycle.len() - 1)
        .map(|i| [cycle[0], cycle[i], cycle[i + 1]])
        .collect()
}
