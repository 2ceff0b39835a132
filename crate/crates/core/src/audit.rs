//! Bound evaluators and a numeric audit of the surface-area argument behind
//! the upper bound `6n - 0.926 n^(2/3)` on touching pairs.
//!
//! The external inputs of that argument (a packing density bound, a cap
//! density bound and a separation result for twelve-neighbor balls) are kept
//! as named axioms in [`ProofParams`]; every number derived from them is
//! recomputed and compared with the printed value.

use std::f64::consts::{FRAC_PI_6, PI};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sphere::regular_polygon_area;

/// Printed coefficient of the general pairs bound.
pub const PAIRS_COEFFICIENT: f64 = 0.926;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProofParams {
    /// Radius of the enlarged balls around each center.
    pub r_hat: f64,
    /// Upper bound on the density of unit balls in their truncated Voronoi cells.
    pub density_bound: f64,
    /// Upper bound on the local density of pi/6 caps inside their alpha caps.
    pub molnar_bound: f64,
    /// Lower bound on the distance between centers of twelve-neighbor balls
    /// sharing a neighbor.
    pub hales_separation: f64,
}

impl Default for ProofParams {
    fn default() -> Self {
        Self {
            r_hat: 1.58731,
            density_bound: 0.7547,
            molnar_bound: 0.89332,
            hales_separation: 2.52,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub name: &'static str,
    pub n: u64,
    pub value: f64,
    pub formula_text: &'static str,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditResult {
    pub name: String,
    pub computed: f64,
    pub expected: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl AuditResult {
    fn close(name: &str, computed: f64, expected: f64, tolerance: f64) -> Self {
        Self {
            name: name.to_string(),
            computed,
            expected,
            tolerance,
            pass: (computed - expected).abs() <= tolerance,
        }
    }

    /// A strict inequality `computed < bound`, recorded with zero tolerance.
    fn less(name: &str, computed: f64, bound: f64) -> Self {
        Self {
            name: name.to_string(),
            computed,
            expected: bound,
            tolerance: 0.0,
            pass: computed < bound,
        }
    }
}

/// `(3 (18 pi)^(1/3)) / pi`, the coefficient of the lattice pairs bound.
pub fn lattice_pairs_coefficient() -> f64 {
    3.0 * (18.0 * PI).cbrt() / PI
}

/// `486^(1/3)`, the coefficient of the constructive lower bound on pairs.
pub fn construction_pairs_coefficient() -> f64 {
    486f64.cbrt()
}

fn n23(n: u64) -> f64 {
    (n as f64).powf(2.0 / 3.0)
}

/// Upper bound on touching pairs among `n` unit balls, general or lattice.
pub fn pairs_upper(n: u64, lattice: bool) -> Result<BoundReport> {
    if n < 2 {
        return Err(Error::Parameter(format!(
            "pairs bound needs n >= 2, got {n}"
        )));
    }
    let nf = n as f64;
    Ok(if lattice {
        BoundReport {
            name: "pairs_upper_lattice",
            n,
            value: 6.0 * nf - lattice_pairs_coefficient() * n23(n),
            formula_text: "6n - (3*(18*pi)^(1/3)/pi)*n^(2/3)",
        }
    } else {
        BoundReport {
            name: "pairs_upper",
            n,
            value: 6.0 * nf - PAIRS_COEFFICIENT * n23(n),
            formula_text: "6n - 0.926*n^(2/3)",
        }
    })
}

/// Upper bounds `(triplets, quadruples)`: `(25n/3, 11n/4)` in general and
/// `(8n, 2n)` for lattice packings.
pub fn triplets_quads_upper(n: u64, lattice: bool) -> Result<(BoundReport, BoundReport)> {
    let nf = n as f64;
    if lattice {
        if n < 2 {
            return Err(Error::Parameter(format!(
                "lattice bounds need n >= 2, got {n}"
            )));
        }
        return Ok((
            BoundReport {
                name: "triplets_upper_lattice",
                n,
                value: 8.0 * nf,
                formula_text: "8n",
            },
            BoundReport {
                name: "quadruples_upper_lattice",
                n,
                value: 2.0 * nf,
                formula_text: "2n",
            },
        ));
    }
    if n < 4 {
        return Err(Error::Parameter(format!(
            "triplet and quadruple bounds need n >= 4, got {n}"
        )));
    }
    Ok((
        BoundReport {
            name: "triplets_upper",
            n,
            value: 25.0 * nf / 3.0,
            formula_text: "25n/3",
        },
        BoundReport {
            name: "quadruples_upper",
            n,
            value: 11.0 * nf / 4.0,
            formula_text: "11n/4",
        },
    ))
}

/// Lower bounds `(pairs, triplets, quadruples)` achieved by constructions:
/// `6n - 486^(1/3) n^(2/3)`, `8n - 12 (3n/2)^(2/3) + 4 n^(1/3)` and
/// `2n - 4 (3n/2)^(2/3) + 2 n^(1/3)`.
pub fn construction_lower(n: u64) -> Result<(f64, f64, f64)> {
    if n < 2 {
        return Err(Error::Parameter(format!(
            "lower bounds need n >= 2, got {n}"
        )));
    }
    let nf = n as f64;
    let s = (1.5 * nf).powf(2.0 / 3.0);
    let c = nf.cbrt();
    Ok((
        6.0 * nf - construction_pairs_coefficient() * n23(n),
        8.0 * nf - 12.0 * s + 4.0 * c,
        2.0 * nf - 4.0 * s + 2.0 * c,
    ))
}

/// Pairs bound in dimension `d`:
/// `tau_d n / 2 - 2^(-d) delta_d^(-(d-1)/d) n^((d-1)/d)`, where `tau_d` is the
/// kissing number and `delta_d` the packing density.
pub fn high_dim_pairs_upper(n: u64, d: u32, tau_d: f64, delta_d: f64) -> Result<f64> {
    if d < 4 {
        return Err(Error::Parameter(format!("dimension must be >= 4, got {d}")));
    }
    if !(tau_d > 0.0 && tau_d.is_finite()) {
        return Err(Error::Parameter(format!(
            "kissing number must be positive, got {tau_d}"
        )));
    }
    if !(delta_d > 0.0 && delta_d < 1.0) {
        return Err(Error::Parameter(format!(
            "density must lie in (0, 1), got {delta_d}"
        )));
    }
    let df = d as f64;
    let e = (df - 1.0) / df;
    let nf = n as f64;
    Ok(0.5 * tau_d * nf - 2f64.powi(-(d as i32)) * delta_d.powf(-e) * nf.powf(e))
}

/// Area of a spherical cap of angular radius `rho` on a sphere of radius `r`.
fn cap_area(rho: f64, r: f64) -> f64 {
    2.0 * PI * (1.0 - rho.cos()) * r * r
}

/// Surface left on one enlarged sphere after removing the share covered by
/// `caps` touching neighbors.
fn exposed_surface(params: &ProofParams, caps: f64) -> f64 {
    let r = params.r_hat;
    4.0 * PI * r * r - caps * cap_area(FRAC_PI_6, r) / params.molnar_bound
}

/// Lower bound on the exposed surface per `n^(2/3)` from the isoperimetric
/// inequality: `4 pi / density^(2/3)`.
pub fn isoperimetric_coefficient(params: &ProofParams) -> f64 {
    4.0 * PI / params.density_bound.powf(2.0 / 3.0)
}

/// Coefficient of `n^(2/3)` in the resulting bound `6n - c n^(2/3)`.
pub fn final_coefficient(params: &ProofParams) -> f64 {
    let ratio = isoperimetric_coefficient(params) / (exposed_surface(params, 3.0) / 3.0);
    ratio / 2.0
}

/// Recomputes every derived constant of the surface-area argument.
pub fn audit_chain(params: &ProofParams) -> Vec<AuditResult> {
    let mut out = Vec::new();
    let r = params.r_hat;

    // the neighbor caps on the enlarged sphere have half-angle alpha
    let alpha = (1.0 / r).acos();
    out.push(AuditResult::close(
        "4cos(alpha) = 4/r_hat",
        4.0 * alpha.cos(),
        2.51998,
        1e-5,
    ));
    out.push(AuditResult::less(
        "4/r_hat < separation",
        4.0 / r,
        params.hales_separation,
    ));
    out.push(AuditResult::close(
        "dodecahedron circumradius sqrt(3) tan(pi/5)",
        3f64.sqrt() * (PI / 5.0).tan(),
        1.2584,
        1e-4,
    ));

    let iso = isoperimetric_coefficient(params);
    out.push(AuditResult::close(
        "4pi/density^(2/3)",
        iso,
        15.15980554,
        1e-6,
    ));
    out.push(AuditResult::less(
        "15.159805 < 4pi/density^(2/3)",
        15.159805,
        iso,
    ));

    let ten = exposed_surface(params, 10.0);
    let three = exposed_surface(params, 3.0);
    out.push(AuditResult::close(
        "exposed surface, 10 neighbors",
        ten,
        7.91956,
        1e-5,
    ));
    out.push(AuditResult::close(
        "exposed surface, at most 9 neighbors",
        three,
        24.53902,
        1e-5,
    ));
    out.push(AuditResult::less(
        "7.91956 < 24.53902/3",
        ten,
        24.53902 / 3.0,
    ));

    let ratio = 15.159805 / (24.53902 / 3.0);
    out.push(AuditResult::close(
        "15.159805/(24.53902/3)",
        ratio,
        1.85335,
        1e-5,
    ));
    out.push(AuditResult::close(
        "final coefficient",
        1.85335 / 2.0,
        0.926675,
        1e-6,
    ));
    out.push(AuditResult::close(
        "final coefficient from axioms",
        final_coefficient(params),
        0.926675,
        1e-5,
    ));
    out.push(AuditResult::less(
        "0.926 < 0.926675",
        PAIRS_COEFFICIENT,
        0.926675,
    ));

    // equality case of the isoperimetric inequality: one ball
    let vol = 4.0 / 3.0 * PI * r.powi(3);
    let surf = 4.0 * PI * r * r;
    let lhs = 36.0 * PI * vol * vol;
    let rhs = surf.powi(3);
    out.push(AuditResult::close(
        "36 pi vol^2 / svol^3 for one ball",
        lhs / rhs,
        1.0,
        1e-12,
    ));
    out.push(AuditResult::less("sqrt(2) < r_hat", 2f64.sqrt(), r));
    out
}

/// `(12n - (n - m - k) - 3k) / 2`, the pairs count bound when `m` balls
/// have 12 neighbors and `k` balls at most 9.
pub fn final_bound_inequality(n: u64, m: u64, k: u64) -> Result<f64> {
    if k < 4 || m + k > n {
        return Err(Error::Parameter(format!(
            "need 4 <= k <= n - m, got n={n}, m={m}, k={k}"
        )));
    }
    let (n, m, k) = (n as f64, m as f64, k as f64);
    Ok(0.5 * (12.0 * n - (n - m - k) - 3.0 * k))
}

/// `12 * (regular triangle area) + 4 * (regular quadrilateral area)` for
/// side pi/3, which must stay below `4 pi` for the twelve-triangle case to
/// be impossible.
pub fn twelve_triangle_area() -> f64 {
    12.0 * regular_polygon_area(3).expect("triangle")
        + 4.0 * regular_polygon_area(4).expect("square")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs_upper_values() {
        assert!((lattice_pairs_coefficient() - 3.665).abs() < 1e-3);
        assert!((pairs_upper(6, false).unwrap().value - 32.94).abs() < 0.01);
        assert!(pairs_upper(2, false).unwrap().value >= 1.0);
        assert!(pairs_upper(1, false).is_err());
        for n in 2..500 {
            assert!(pairs_upper(n, true).unwrap().value <= pairs_upper(n, false).unwrap().value);
        }
    }

    #[test]
    fn triplet_quad_values() {
        let (t, q) = triplets_quads_upper(12, false).unwrap();
        assert_eq!((t.value, q.value), (100.0, 33.0));
        let (t, q) = triplets_quads_upper(12, true).unwrap();
        assert_eq!((t.value, q.value), (96.0, 24.0));
        assert!(triplets_quads_upper(4, false).unwrap().1.value >= 1.0);
        assert!(triplets_quads_upper(3, false).is_err());
        assert!(triplets_quads_upper(1, true).is_err());
    }

    #[test]
    fn lower_bounds() {
        assert!((construction_pairs_coefficient() - 7.862).abs() < 1e-3);
        let (p, t, q) = construction_lower(19).unwrap();
        assert!(t < 56.0 && q < 8.0);
        assert!(p < 85.0);
        let (p, _, _) = construction_lower(6).unwrap();
        assert!((p - 10.03).abs() < 0.01);
    }

    #[test]
    fn high_dim() {
        let v = high_dim_pairs_upper(16, 4, 24.0, PI * PI / 16.0).unwrap();
        let expected = 12.0 * 16.0 - (PI * PI / 16.0f64).powf(-0.75) * 16f64.powf(0.75) / 16.0;
        assert!((v - expected).abs() < 1e-12);
        assert_eq!(high_dim_pairs_upper(0, 4, 24.0, 0.6).unwrap(), 0.0);
        let mut prev = f64::NEG_INFINITY;
        for n in 1..1000 {
            let v = high_dim_pairs_upper(n, 4, 24.0, 0.6).unwrap();
            assert!(v > prev);
            prev = v;
        }
        assert!(high_dim_pairs_upper(4, 3, 12.0, 0.7).is_err());
        assert!(high_dim_pairs_upper(4, 4, 24.0, 1.5).is_err());
    }

    #[test]
    fn chain_passes() {
        let results = audit_chain(&ProofParams::default());
        for r in &results {
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn chain_detects_bad_axiom() {
        let params = ProofParams {
            density_bound: 0.76,
            ..ProofParams::default()
        };
        assert!(audit_chain(&params).iter().any(|r| !r.pass));
    }

    #[test]
    fn final_inequality() {
        assert_eq!(final_bound_inequality(12, 0, 4).unwrap(), 62.0);
        assert!(final_bound_inequality(10, 10, 0).is_err());
        assert!(final_bound_inequality(10, 7, 4).is_err());
        // substituting n - m - k > 1.85335 n^(2/3) - 3k leaves 6n - 0.926675 n^(2/3)
        let n = 1000.0f64;
        let k = 10.0;
        let rest = 1.85335 * n.powf(2.0 / 3.0) - 3.0 * k;
        let bound = 0.5 * (12.0 * n - rest - 3.0 * k);
        assert!(((6.0 * n - bound) / n.powf(2.0 / 3.0) - 0.926675).abs() < 1e-12);
    }

    #[test]
    fn area_bound() {
        let a = twelve_triangle_area();
        assert!((a - 12.052).abs() < 1e-3);
        assert!(a < 4.0 * PI);
    }
}
