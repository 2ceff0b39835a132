//! Explicit extremal configurations: the octahedral FCC packing and the two
//! twelve-point cap packings with many touching pairs and triangles.

use std::f64::consts::{FRAC_PI_3, PI, SQRT_2};

use serde::Serialize;

use crate::audit::construction_lower;
use crate::contact::{count_contacts, ContactCounts};
use crate::error::{Error, Result};
use crate::euclid::{Packing, TolerancePolicy, Vec3, DEFAULT_EPS};
use crate::sphere::{CapConfiguration, PolarConvention, SpherePoint, CAP_RADIUS};

/// Closed-form sizes of the octahedral construction with `k` balls per edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OctahedralSpec {
    pub k: u64,
    pub n: u64,
    pub expected_triplets: u64,
    pub expected_quadruples: u64,
}

impl OctahedralSpec {
    pub fn new(k: u64) -> Result<Self> {
        if k < 2 {
            return Err(Error::Parameter(format!(
                "octahedral construction needs k >= 2, got {k}"
            )));
        }
        Ok(Self {
            k,
            n: (2 * k * k * k + k) / 3,
            expected_triplets: 4 * (k - 1) * k * (4 * k - 5) / 3,
            expected_quadruples: 4 * (k - 2) * (k - 1) * k / 3,
        })
    }
}

/// Integer-frame points of the octahedron: `|a| + |b| + |c| <= k - 1` with
/// `a + b + c` of the parity of `k - 1`, shifted onto even coordinate sum.
/// Each `c`-slice is a square cross-section of the octahedron.
fn octahedral_points(k: u64) -> Vec<[i64; 3]> {
    let r = k as i64 - 1;
    let shift = r.rem_euclid(2);
    let mut out = Vec::new();
    for c in -r..=r {
        for a in -r..=r {
            for b in -r..=r {
                if a.abs() + b.abs() + c.abs() <= r && (a + b + c - r).rem_euclid(2) == 0 {
                    out.push([a + shift, b, c]);
                }
            }
        }
    }
    out
}

/// `n(k)` unit balls on the FCC lattice whose centers span a regular
/// octahedron of edge `2(k - 1)` with `k` centers on every edge.
pub fn octahedral_packing(k: u64) -> Result<Packing> {
    OctahedralSpec::new(k)?;
    let centers = octahedral_points(k)
        .into_iter()
        .map(|[a, b, c]| Vec3::new(a as f64, b as f64, c as f64) * SQRT_2)
        .collect();
    Packing::new(centers, DEFAULT_EPS)
}

#[derive(Debug, Clone, Serialize)]
pub struct OctahedralReport {
    pub spec: OctahedralSpec,
    pub counts: ContactCounts,
    pub pairs_lower: f64,
    pub triplets_lower: f64,
    pub quadruples_lower: f64,
}

/// Builds the packing, counts its contacts and checks them against the
/// closed forms and the lower-bound expressions in `n`.
pub fn verify_octahedral(k: u64) -> Result<OctahedralReport> {
    let spec = OctahedralSpec::new(k)?;
    let packing = octahedral_packing(k)?;
    let counts = count_contacts(&packing, &TolerancePolicy::default())?;
    let (pairs_lower, triplets_lower, quadruples_lower) = construction_lower(spec.n)?;

    let mismatch = |what: &str, expected: String, computed: String| Error::Mismatch {
        what: format!("k={k} {what}"),
        expected,
        computed,
    };
    if counts.n as u64 != spec.n {
        return Err(mismatch(
            "ball count",
            spec.n.to_string(),
            counts.n.to_string(),
        ));
    }
    if counts.triplets as u64 != spec.expected_triplets {
        return Err(mismatch(
            "touching triplets",
            spec.expected_triplets.to_string(),
            counts.triplets.to_string(),
        ));
    }
    if counts.quadruples as u64 != spec.expected_quadruples {
        return Err(mismatch(
            "touching quadruples",
            spec.expected_quadruples.to_string(),
            counts.quadruples.to_string(),
        ));
    }
    for (what, lower, got) in [
        ("touching pairs", pairs_lower, counts.pairs),
        ("touching triplets", triplets_lower, counts.triplets),
        ("touching quadruples", quadruples_lower, counts.quadruples),
    ] {
        if got as f64 <= lower {
            return Err(mismatch(what, format!("> {lower}"), got.to_string()));
        }
    }
    Ok(OctahedralReport {
        spec,
        counts,
        pairs_lower,
        triplets_lower,
        quadruples_lower,
    })
}

/// Number of edge-2 octahedra in the tiling of the construction by
/// tetrahedra and octahedra.
pub fn octahedra_count(k: u64) -> Result<u64> {
    OctahedralSpec::new(k)?;
    Ok((k - 1).pow(3) - (k - 2) * (k - 1) * k / 3)
}

/// Coordinates of the twelve points, as (inclination-or-elevation, azimuth).
fn table6_angles() -> [(f64, f64); 12] {
    let a = (1.0f64 / 3.0).acos();
    let t2 = 2.0 * 2f64.sqrt().atan();
    let t7 = (-7.0f64 / 18.0).acos();
    let s2 = 2f64.sqrt();
    [
        (0.0, 0.0),
        (FRAC_PI_3, 0.0),
        (FRAC_PI_3, a),
        (FRAC_PI_3, 2.0 * a),
        (FRAC_PI_3, 3.0 * a),
        (FRAC_PI_3, 4.0 * a),
        (t7, -(2.0 * s2 / 5.0).atan()),
        (t2, a / 2.0),
        (t7, PI - (34.0 * s2 / 19.0).atan()),
        (t2, 5.0 * a / 2.0),
        (t2, 7.0 * a / 2.0),
        ((-53.0f64 / 54.0).acos(), (4.0 * s2 / 17.0).atan()),
    ]
}

#[derive(Debug, Clone)]
pub struct Table6 {
    pub config: CapConfiguration,
    pub convention: PolarConvention,
}

/// Twelve points with minimum distance pi/3 spanning ten regular triangles
/// of side pi/3. The first angle is read as an inclination from +z; if that
/// fails the minimum-distance check, as an elevation.
pub fn table6_configuration() -> Result<Table6> {
    let angles = table6_angles();
    let mut best = f64::NEG_INFINITY;
    for convention in [PolarConvention::Inclination, PolarConvention::Latitude] {
        let points: Vec<SpherePoint> = angles
            .iter()
            .map(|&(t, p)| match convention {
                PolarConvention::Inclination => SpherePoint::from_polar(t, p),
                PolarConvention::Latitude => SpherePoint::from_latitude(t, p),
            })
            .collect();
        match CapConfiguration::with_radius(points, CAP_RADIUS, DEFAULT_EPS) {
            Ok(config) => return Ok(Table6 { config, convention }),
            Err(Error::CapOverlap { distance, .. }) => best = best.max(distance),
            Err(e) => return Err(e),
        }
    }
    Err(Error::Convention { best })
}

/// The twelve vertices `(+-1, +-1, 0)/sqrt(2)` and permutations.
pub fn cuboctahedron_configuration() -> CapConfiguration {
    let mut points = Vec::with_capacity(12);
    for axis in 0..3 {
        for s in [1.0, -1.0] {
            for t in [1.0, -1.0] {
                let mut v = [0.0; 3];
                v[(axis + 1) % 3] = s;
                v[(axis + 2) % 3] = t;
                let p =
                    SpherePoint::from_vector(Vec3::new(v[0], v[1], v[2])).expect("nonzero vertex");
                points.push(p);
            }
        }
    }
    CapConfiguration::new(points).expect("cuboctahedron vertices are pi/3 apart")
}
