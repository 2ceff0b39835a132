//! Oracles and generators shared by the integration tests.
#![allow(dead_code)]

use std::f64::consts::FRAC_PI_3;

use ballpack::{CapConfiguration, SpherePoint, SphericalTriangulation, Vec3};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

pub const EPS: f64 = 1e-9;

pub fn arc(u: Vec3, v: Vec3) -> f64 {
    u.dot(v).clamp(-1.0, 1.0).acos()
}

fn touching(a: Vec3, b: Vec3) -> bool {
    ((a - b).norm() - 2.0).abs() <= EPS
}

/// `(pairs, triplets, quadruples)` by checking every pair, triple and quadruple.
pub fn brute_counts(c: &[Vec3]) -> (usize, usize, usize) {
    let n = c.len();
    let (mut pairs, mut triples, mut quads) = (0, 0, 0);
    for i in 0..n {
        for j in i + 1..n {
            if !touching(c[i], c[j]) {
                continue;
            }
            pairs += 1;
            for k in j + 1..n {
                if !(touching(c[i], c[k]) && touching(c[j], c[k])) {
                    continue;
                }
                triples += 1;
                for l in k + 1..n {
                    if touching(c[i], c[l]) && touching(c[j], c[l]) && touching(c[k], c[l]) {
                        quads += 1;
                    }
                }
            }
        }
    }
    (pairs, triples, quads)
}

/// Up to 30 random points of `pool`, translated by a random vector.
pub fn random_sublattice(rng: &mut StdRng, pool: &[Vec3]) -> Vec<Vec3> {
    let n = rng.gen_range(1..=30);
    let mut pts: Vec<Vec3> = pool.choose_multiple(rng, n).copied().collect();
    let shift = Vec3::new(
        rng.gen_range(-5.0..5.0),
        rng.gen_range(-5.0..5.0),
        rng.gen_range(-5.0..5.0),
    );
    for p in &mut pts {
        *p += shift;
    }
    pts
}

pub fn random_unit(rng: &mut StdRng) -> Vec3 {
    loop {
        let v = Vec3::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        let r = v.norm();
        if r > 0.1 && r <= 1.0 {
            return v * (1.0 / r);
        }
    }
}

fn sequential_addition(rng: &mut StdRng, n: usize) -> Option<Vec<Vec3>> {
    let mut pts: Vec<Vec3> = Vec::new();
    for _ in 0..20_000 {
        if pts.len() == n {
            break;
        }
        let c = random_unit(rng);
        if pts.iter().all(|&p| arc(p, c) >= FRAC_PI_3) {
            pts.push(c);
        }
    }
    (pts.len() == n).then_some(pts)
}

fn perturbed_icosahedron(rng: &mut StdRng, n: usize) -> Vec<Vec3> {
    let g = (1.0 + 5f64.sqrt()) / 2.0;
    let mut vs = Vec::new();
    for a in [-1.0, 1.0] {
        for b in [-g, g] {
            vs.push(Vec3::new(0.0, a, b));
            vs.push(Vec3::new(a, b, 0.0));
            vs.push(Vec3::new(b, 0.0, a));
        }
    }
    // icosahedron edges are 1.107 > pi/3, so 0.02 of jitter keeps caps apart
    let mut vs: Vec<Vec3> = vs
        .into_iter()
        .map(|v| {
            (v.normalized().unwrap() + random_unit(rng) * 0.02)
                .normalized()
                .unwrap()
        })
        .collect();
    vs.shuffle(rng);
    vs.truncate(n);
    vs
}

pub fn config_from_units(units: Vec<Vec3>) -> CapConfiguration {
    let points = units
        .into_iter()
        .map(|v| SpherePoint::from_vector(v).unwrap())
        .collect();
    CapConfiguration::new(points).unwrap()
}

/// A random valid configuration of 5 to 12 caps: sequential random addition
/// for up to 9 points, otherwise a jittered icosahedron with points removed.
pub fn random_cap_configuration(rng: &mut StdRng) -> CapConfiguration {
    loop {
        let n = rng.gen_range(5..=12);
        let units = if n <= 9 && rng.gen_bool(0.5) {
            match sequential_addition(rng, n) {
                Some(u) => u,
                None => continue,
            }
        } else {
            perturbed_icosahedron(rng, n)
        };
        return config_from_units(units);
    }
}

/// Violations of: Euler counts, empty circumcaps under exhaustive testing,
/// every pi/3 pair being an edge, and stored sides matching coordinates.
pub fn delaunay_violations(config: &CapConfiguration, t: &SphericalTriangulation) -> Vec<String> {
    let mut out = Vec::new();
    let n = config.len();
    let u = config.units();
    if t.face_count() != 2 * n - 4 {
        out.push(format!("{} faces for {n} points", t.face_count()));
    }
    if t.edge_count() != 3 * (n - 2) {
        out.push(format!("{} edges for {n} points", t.edge_count()));
    }
    for tri in &t.triangles {
        let [a, b, c] = tri.vertices.map(|i| u[i]);
        let Some(normal) = (b - a).cross(c - a).normalized() else {
            out.push(format!("degenerate triangle {:?}", tri.vertices));
            continue;
        };
        // the circumcap is the side of the plane through a, b, c away from
        // the hull; no point may lie strictly beyond that plane
        let level = normal.dot(a);
        for (i, &p) in u.iter().enumerate() {
            if normal.dot(p) > level + EPS {
                out.push(format!("point {i} inside circumcap of {:?}", tri.vertices));
            }
        }
        for k in 0..3 {
            let (i, j) = tri.edge(k);
            if (tri.sides[k] - arc(u[i], u[j])).abs() > 1e-12 {
                out.push(format!(
                    "side {k} of {:?} does not match coordinates",
                    tri.vertices
                ));
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if (arc(u[i], u[j]) - FRAC_PI_3).abs() <= EPS && !t.has_edge(i, j) {
                out.push(format!("touching pair ({i}, {j}) is not an edge"));
            }
        }
    }
    out
}
