//! Touching caps and the neighbor projection of a ball packing.

use serde::Serialize;

use super::point::{CapConfiguration, SpherePoint};
use super::CAP_SEPARATION;
use crate::contact::ContactGraph;
use crate::error::{Error, Result};
use crate::euclid::{distance, Packing, TolerancePolicy, CONTACT_DISTANCE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CapContacts {
    pub pairs: usize,
    pub triplets: usize,
}

/// Pairs of cap centers at angular distance pi/3 and triples of mutually
/// touching caps.
pub fn cap_contact_counts(config: &CapConfiguration, angle_eps: f64) -> CapContacts {
    let units = config.units();
    let mut edges = Vec::new();
    for i in 0..units.len() {
        for j in i + 1..units.len() {
            let d = units[i].dot(units[j]).clamp(-1.0, 1.0).acos();
            if (d - CAP_SEPARATION).abs() <= angle_eps {
                edges.push((i, j));
            }
        }
    }
    let g = ContactGraph::from_edges(units.len(), edges).expect("indices are in range");
    CapContacts {
        pairs: g.edge_count(),
        triplets: g.count_triangles(),
    }
}

/// Central projection of the balls touching ball `i` onto the unit sphere
/// around its center. Each neighbor covers a cap of angular radius pi/6.
pub fn project_neighbors(p: &Packing, i: usize, tol: &TolerancePolicy) -> Result<CapConfiguration> {
    let c = p.centers();
    let Some(&center) = c.get(i) else {
        return Err(Error::IndexOutOfRange {
            index: i,
            len: c.len(),
        });
    };
    let points: Vec<SpherePoint> = c
        .iter()
        .enumerate()
        .filter(|&(j, &q)| {
            j != i && (distance(center, q) - CONTACT_DISTANCE).abs() <= tol.distance_eps
        })
        .filter_map(|(_, &q)| SpherePoint::from_vector(q - center))
        .collect();
    // a distance slack of eps on |c_j - c_k| moves the angle by about eps
    let eps = tol.angle_eps + tol.distance_eps;
    CapConfiguration::with_radius(points, super::CAP_RADIUS, eps)
}
