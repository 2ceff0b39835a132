mod common;

use std::f64::consts::FRAC_PI_3;

use ballpack::constructions::{cuboctahedron_configuration, table6_configuration};
use ballpack::sphere::{
    assemble_polygons, classify_triangles, delaunay, side_from_apex_angle, tables::lemma_table,
    PolygonClass,
};
use ballpack::{CapConfiguration, Error, SpherePoint, SphericalTriangulation, Vec3};
use common::{arc, config_from_units, delaunay_violations, random_cap_configuration, EPS};
use rand::rngs::StdRng;
use rand::SeedableRng;

fn check_invariants(config: &CapConfiguration, t: &SphericalTriangulation) {
    let v = delaunay_violations(config, t);
    assert!(v.is_empty(), "{v:?}");
}

#[test]
fn presets_satisfy_invariants() {
    for config in [
        cuboctahedron_configuration(),
        table6_configuration().unwrap().config,
    ] {
        let t = delaunay(&config).unwrap();
        check_invariants(&config, &t);
    }
}

#[test]
fn random_configurations_satisfy_invariants() {
    let mut rng = StdRng::seed_from_u64(2024);
    let mut done = 0;
    while done < 100 {
        let config = random_cap_configuration(&mut rng);
        assert!(config.min_distance() >= FRAC_PI_3 - EPS);
        let t = match delaunay(&config) {
            Ok(t) => t,
            Err(Error::HemisphereDegeneracy) => continue,
            Err(e) => panic!("{e}"),
        };
        check_invariants(&config, &t);
        let c = classify_triangles(&t, EPS).unwrap();
        assert_eq!(c.histogram.iter().sum::<usize>(), t.face_count());
        assert_eq!(classify_triangles(&t, EPS).unwrap(), c);
        done += 1;
    }
}

#[test]
fn cuboctahedron_polygons() {
    let config = cuboctahedron_configuration();
    let t = delaunay(&config).unwrap();
    let c = classify_triangles(&t, EPS).unwrap();
    assert_eq!(c.histogram, [8, 12, 0, 0]);
    let comps = assemble_polygons(&t, &c, EPS);
    assert_eq!(comps.len(), 6);
    for comp in &comps {
        assert_eq!(comp.class, PolygonClass::C4);
        assert_eq!(comp.boundary.len(), 4);
        assert_eq!(comp.glued_edges.len(), 1);
    }
}

#[test]
fn table6_triangulation() {
    let config = table6_configuration().unwrap().config;
    let t = delaunay(&config).unwrap();
    assert_eq!((t.face_count(), t.edge_count()), (20, 30));
    let c = classify_triangles(&t, EPS).unwrap();
    assert_eq!(c.regular_count(), 10);
    let irregular: usize = assemble_polygons(&t, &c, EPS)
        .iter()
        .map(|p| p.triangles.len())
        .sum();
    assert_eq!(irregular, 10);
}

#[test]
fn all_regular_triangulation_has_no_polygons() {
    // no closed triangulation of the sphere is all-regular, so relabel one
    let config = cuboctahedron_configuration();
    let t = delaunay(&config).unwrap();
    let mut c = classify_triangles(&t, EPS).unwrap();
    c.types.iter_mut().for_each(|r| *r = 0);
    assert!(assemble_polygons(&t, &c, EPS).is_empty());
}

#[test]
fn synthetic_pentagon_is_c5() {
    // first row of the pentagon table: both apex angles are the smaller
    // admissible value
    let table = lemma_table(2).unwrap();
    let row = &table.rows[0];
    let alpha = row.values[0].unwrap();
    let beta = row.values[1].unwrap();
    let omega = row.values[6].unwrap();
    let a = side_from_apex_angle(alpha).unwrap();
    let b = side_from_apex_angle(beta).unwrap();

    // hub vertex at the pole, diagonals a and b at azimuths 0 and omega
    let hub = Vec3::new(0.0, 0.0, 1.0);
    let v0 = SpherePoint::from_polar(a, 0.0).unit();
    let v4 = SpherePoint::from_polar(b, omega).unit();
    assert!((arc(v0, v4) - FRAC_PI_3).abs() < 1e-12);

    // apex on the side of the diagonal away from `away`
    let apex = |p: Vec3, q: Vec3, away: Vec3| {
        let m = (p + q).normalized().unwrap();
        let axis = p.cross(q).normalized().unwrap();
        let h = (0.5 / (arc(p, q) / 2.0).cos()).acos();
        let off = m * h.cos();
        let plus = off + axis * h.sin();
        let minus = off - axis * h.sin();
        if away.dot(plus) < away.dot(minus) {
            plus
        } else {
            minus
        }
    };
    let v1 = apex(v0, hub, v4);
    let v3 = apex(hub, v4, v0);
    for (p, q) in [(v0, v1), (v1, hub), (hub, v3), (v3, v4)] {
        assert!((arc(p, q) - FRAC_PI_3).abs() < 1e-12);
    }

    // a far point closes the sphere without touching the pentagon
    let centroid = (v0 + v1 + hub + v3 + v4).normalized().unwrap();
    let far = -centroid;
    let config = config_from_units(vec![v0, v1, hub, v3, v4, far]);
    let t = delaunay(&config).unwrap();
    check_invariants(&config, &t);
    let c = classify_triangles(&t, EPS).unwrap();
    let comps = assemble_polygons(&t, &c, EPS);
    let c5: Vec<_> = comps
        .iter()
        .filter(|p| p.class == PolygonClass::C5)
        .collect();
    assert_eq!(c5.len(), 1);
    assert_eq!(c5[0].boundary.len(), 5);
    assert!(c5[0].boundary.iter().all(|&v| v < 5));
}
