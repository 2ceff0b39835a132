//! Triangle typing and the unions of irregular triangles.
//!
//! A triangle's type is the number of its sides longer than pi/3. Irregular
//! triangles (type 1..=3) glued across their long sides form polygons whose
//! boundary consists of sides of length exactly pi/3.

use std::collections::BTreeMap;
use std::f64::consts::FRAC_PI_3;

use serde::Serialize;

use super::delaunay::SphericalTriangulation;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    /// Type of each triangle, aligned with `SphericalTriangulation::triangles`.
    pub types: Vec<u8>,
    /// `histogram[r]` counts triangles of type `r`.
    pub histogram: [usize; 4],
}

impl Classification {
    pub fn regular_count(&self) -> usize {
        self.histogram[0]
    }
}

pub fn classify_triangles(t: &SphericalTriangulation, angle_eps: f64) -> Result<Classification> {
    let mut types = Vec::with_capacity(t.triangles.len());
    let mut histogram = [0; 4];
    for (index, tri) in t.triangles.iter().enumerate() {
        let mut r = 0u8;
        for &side in &tri.sides {
            if side < FRAC_PI_3 - angle_eps {
                return Err(Error::SideTooShort {
                    triangle: index,
                    side,
                });
            }
            if side > FRAC_PI_3 + angle_eps {
                r += 1;
            }
        }
        types.push(r);
        histogram[r as usize] += 1;
    }
    Ok(Classification { types, histogram })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PolygonClass {
    /// Quadrilateral: two type-I triangles.
    C4,
    /// Pentagon: types I, I, II.
    C5,
    /// Hexagon: three type-I triangles around a type-III triangle.
    C6,
    /// Hexagon of types I, I, II, II whose three long diagonals have no
    /// common vertex (zigzag).
    C6Prime,
    /// Hexagon of types I, I, II, II whose three long diagonals share a
    /// vertex (fan).
    C6DoublePrime,
    Other,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PolygonComponent {
    /// Triangle indices, ascending.
    pub triangles: Vec<usize>,
    /// Boundary vertices in order, when the component is a disk with all of
    /// its vertices on the boundary; empty otherwise.
    pub boundary: Vec<usize>,
    /// Long edges glued inside the component (the dual gluing tree).
    pub glued_edges: Vec<(usize, usize)>,
    /// Triangle types, ascending.
    pub types: Vec<u8>,
    pub class: PolygonClass,
}

/// Connected unions of irregular triangles, glued along sides longer than
/// pi/3, ordered by their smallest triangle index.
pub fn assemble_polygons(
    t: &SphericalTriangulation,
    classes: &Classification,
    angle_eps: f64,
) -> Vec<PolygonComponent> {
    let m = t.triangles.len();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }

    let mut by_edge: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (ti, tri) in t.triangles.iter().enumerate() {
        if classes.types[ti] == 0 {
            continue;
        }
        for k in 0..3 {
            if tri.sides[k] > FRAC_PI_3 + angle_eps {
                by_edge.entry(tri.edge(k)).or_default().push(ti);
            }
        }
    }
    for owners in by_edge.values() {
        for w in owners.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }

    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for ti in 0..m {
        if classes.types[ti] > 0 {
            let root = find(&mut parent, ti);
            groups.entry(root).or_default().push(ti);
        }
    }

    let mut out: Vec<PolygonComponent> = groups
        .into_values()
        .map(|tris| {
            let glued_edges: Vec<(usize, usize)> = by_edge
                .iter()
                .filter(|(_, owners)| owners.len() == 2 && tris.contains(&owners[0]))
                .map(|(&e, _)| e)
                .collect();
            let mut types: Vec<u8> = tris.iter().map(|&ti| classes.types[ti]).collect();
            types.sort_unstable();
            let boundary = disk_boundary(t, &tris);
            let class = classify_component(&types, &boundary, &glued_edges);
            PolygonComponent {
                triangles: tris,
                boundary,
                glued_edges,
                types,
                class,
            }
        })
        .collect();
    out.sort_by_key(|c| c.triangles[0]);
    out
}

/// Boundary cycle of a set of consistently oriented triangles, if it is a
/// single simple cycle of length `triangles + 2` (a disk without interior
/// vertices). Starts at the smallest vertex index.
fn disk_boundary(t: &SphericalTriangulation, tris: &[usize]) -> Vec<usize> {
    let mut directed: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for &ti in tris {
        let v = t.triangles[ti].vertices;
        for k in 0..3 {
            *directed.entry((v[k], v[(k + 1) % 3])).or_default() += 1;
        }
    }
    let mut next: BTreeMap<usize, usize> = BTreeMap::new();
    for &(a, b) in directed.keys() {
        if directed.contains_key(&(b, a)) {
            continue;
        }
        if next.insert(a, b).is_some() {
            return Vec::new();
        }
    }
    let Some(&start) = next.keys().next() else {
        return Vec::new();
    };
    let mut cycle = vec![start];
    let mut cur = next[&start];
    while cur != start {
        if cycle.len() > next.len() {
            return Vec::new();
        }
        cycle.push(cur);
        match next.get(&cur) {
            Some(&n) => cur = n,
            None => return Vec::new(),
        }
    }
    if cycle.len() != next.len() || cycle.len() != tris.len() + 2 {
        return Vec::new();
    }
    cycle
}

fn classify_component(types: &[u8], boundary: &[usize], glued: &[(usize, usize)]) -> PolygonClass {
    if boundary.is_empty() {
        return PolygonClass::Other;
    }
    match types {
        [1, 1] => PolygonClass::C4,
        [1, 1, 2] => PolygonClass::C5,
        [1, 1, 1, 3] => PolygonClass::C6,
        [1, 1, 2, 2] => {
            let shared = glued
                .iter()
                .fold(None::<Vec<usize>>, |acc, &(a, b)| match acc {
                    None => Some(vec![a, b]),
                    Some(s) => Some(s.into_iter().filter(|&v| v == a || v == b).collect()),
                });
            if shared.is_some_and(|s| !s.is_empty()) {
                PolygonClass::C6DoublePrime
            } else {
                PolygonClass::C6Prime
            }
        }
        _ => PolygonClass::Other,
    }
}
