//! Case tables for the quadrilateral, pentagon and hexagon lemmas.
//!
//! Every row is recomputed from the two admissible polygon angles
//! `2*pi - 4*arccos(1/3)` and `2*pi - 3*arccos(1/3)` (and, for the hexagon
//! variants, all four forbidden angles as `theta`). Rows whose derived side
//! `c` falls below pi/3 are not realizable and carry no angle columns.

use std::f64::consts::FRAC_PI_3;

use serde::Serialize;

use super::trig::{base_angle_from_side, opposite_angle, side_from_apex_angle};
use super::{distance_to_forbidden, forbidden_angles};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemmaRow {
    pub label: Option<String>,
    /// One entry per header (after the label column); `None` prints as `-`.
    pub values: Vec<Option<f64>>,
    pub feasible: bool,
    /// The angle (sum) the lemma checks against the forbidden set.
    pub terminal: Option<f64>,
    pub note: Option<String>,
}

impl LemmaRow {
    /// Distance of the terminal value from the forbidden set, if the row has one.
    pub fn forbidden_margin(&self) -> Option<f64> {
        self.terminal.map(distance_to_forbidden)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemmaTable {
    pub id: u8,
    pub title: &'static str,
    /// `Some` when the first column holds case labels.
    pub label_header: Option<&'static str>,
    pub headers: Vec<&'static str>,
    pub rows: Vec<LemmaRow>,
}

impl LemmaTable {
    /// CSV with the table's column headers. Values are truncated (not
    /// rounded) to `precision` decimals, which is how the printed tables
    /// were produced.
    pub fn to_csv(&self, precision: usize) -> String {
        let mut out = String::new();
        let mut header: Vec<&str> = Vec::new();
        header.extend(self.label_header);
        header.extend(self.headers.iter().copied());
        out.push_str(&header.join(","));
        out.push('\n');
        for row in &self.rows {
            let mut cells: Vec<String> = Vec::new();
            if self.label_header.is_some() {
                cells.push(row.label.clone().unwrap_or_default());
            }
            cells.extend(row.values.iter().map(|v| match v {
                Some(x) => format_truncated(*x, precision),
                None => "-".to_string(),
            }));
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    /// Smallest distance from any terminal value to the forbidden set.
    pub fn min_forbidden_margin(&self) -> Option<f64> {
        self.rows
            .iter()
            .filter_map(LemmaRow::forbidden_margin)
            .reduce(f64::min)
    }
}

/// Decimal string of `x` truncated toward zero at `precision` places.
pub fn format_truncated(x: f64, precision: usize) -> String {
    let scale = 10f64.powi(precision as i32);
    // nudge by a few ulps so values like 2.59 printed from 2.5899999.. stay put
    let scaled = x * scale;
    let t = (scaled + scaled.signum() * scaled.abs() * 4.0 * f64::EPSILON).trunc() / scale;
    format!("{t:.precision$}")
}

fn admissible() -> [f64; 2] {
    let f = forbidden_angles();
    [f[3], f[2]]
}

fn row(label: Option<String>, values: Vec<Option<f64>>, terminal: Option<f64>) -> LemmaRow {
    LemmaRow {
        label,
        values,
        feasible: terminal.is_some(),
        terminal,
        note: None,
    }
}

fn infeasible(label: Option<String>, values: Vec<Option<f64>>, note: &str) -> LemmaRow {
    LemmaRow {
        label,
        values,
        feasible: false,
        terminal: None,
        note: Some(note.to_string()),
    }
}

pub fn quad_lemma_table() -> LemmaTable {
    let mut rows = Vec::new();
    for (i, alpha) in admissible().into_iter().enumerate() {
        let label = Some(format!("({})", i + 1));
        let a = side_from_apex_angle(alpha).expect("apex angle in range");
        let beta = 2.0 * base_angle_from_side(a).expect("side in range");
        let values = vec![Some(alpha), Some(a), Some(beta)];
        if beta < FRAC_PI_3 {
            rows.push(infeasible(
                label,
                values,
                "violates minimum distance: beta < pi/3",
            ));
        } else {
            rows.push(row(label, values, Some(beta)));
        }
    }
    LemmaTable {
        id: 1,
        title: "Cases for the Quadrilateral Lemma",
        label_header: Some("Cases"),
        headers: vec!["α", "a", "β"],
        rows,
    }
}

pub fn pentagon_lemma_table() -> LemmaTable {
    let [small, large] = admissible();
    let cases = [(small, small), (large, large), (small, large)];
    let rows = cases
        .iter()
        .enumerate()
        .map(|(i, &(alpha, beta))| {
            let label = Some(format!("({})", i + 1));
            let computed = (|| -> Result<Vec<f64>> {
                let a = side_from_apex_angle(alpha)?;
                let b = side_from_apex_angle(beta)?;
                let ap = base_angle_from_side(a)?;
                let bp = base_angle_from_side(b)?;
                let omega = opposite_angle(a, b, FRAC_PI_3)?;
                Ok(vec![alpha, beta, a, b, ap, bp, omega, ap + bp + omega])
            })();
            match computed {
                Ok(v) => {
                    let sum = v[7];
                    row(label, v.into_iter().map(Some).collect(), Some(sum))
                }
                Err(_) => infeasible(label, vec![Some(alpha), Some(beta)], "not realizable"),
            }
        })
        .collect();
    LemmaTable {
        id: 2,
        title: "Cases for the Pentagon Lemma",
        label_header: Some("Cases"),
        headers: vec!["α", "β", "a", "b", "α′", "β′", "ω", "α′+β′+ω"],
        rows,
    }
}

fn hexagon_c6() -> LemmaTable {
    let [s, l] = admissible();
    let cases = [(s, s, s), (s, s, l), (s, l, l), (l, l, l)];
    let rows = cases
        .iter()
        .map(|&(alpha, beta, gamma)| {
            let computed = (|| -> Result<Vec<f64>> {
                let a = side_from_apex_angle(alpha)?;
                let b = side_from_apex_angle(beta)?;
                let c = side_from_apex_angle(gamma)?;
                let ap = base_angle_from_side(a)?;
                let bp = base_angle_from_side(b)?;
                let omega = opposite_angle(a, b, c)?;
                Ok(vec![
                    alpha,
                    beta,
                    gamma,
                    a,
                    b,
                    c,
                    ap,
                    bp,
                    omega,
                    ap + bp + omega,
                ])
            })();
            match computed {
                Ok(v) => {
                    let sum = v[9];
                    row(None, v.into_iter().map(Some).collect(), Some(sum))
                }
                Err(_) => infeasible(
                    None,
                    vec![Some(alpha), Some(beta), Some(gamma)],
                    "not realizable",
                ),
            }
        })
        .collect();
    LemmaTable {
        id: 3,
        title: "Cases for C6 of the Hexagon Lemma",
        label_header: None,
        headers: vec!["α", "β", "γ", "a", "b", "c", "α′", "β′", "ω", "α′+β′+ω"],
        rows,
    }
}

/// Shared prefix of the C6′ and C6″ rows: sides `a, b`, the angle
/// `gamma = theta - alpha'` and the side `c` it subtends.
struct HexPrefix {
    a: f64,
    b: f64,
    alpha_p: f64,
    gamma: f64,
    c: f64,
}

fn hex_prefix(alpha: f64, beta: f64, theta: f64) -> Result<HexPrefix> {
    let a = side_from_apex_angle(alpha)?;
    let b = side_from_apex_angle(beta)?;
    let alpha_p = base_angle_from_side(a)?;
    let gamma = theta - alpha_p;
    let c = side_from_apex_angle(gamma)?;
    Ok(HexPrefix {
        a,
        b,
        alpha_p,
        gamma,
        c,
    })
}

fn hexagon_cases() -> Vec<(f64, f64, f64)> {
    let adm = admissible();
    let mut thetas = forbidden_angles();
    thetas.reverse();
    let mut out = Vec::new();
    for &alpha in &adm {
        for &beta in &adm {
            for &theta in &thetas {
                out.push((alpha, beta, theta));
            }
        }
    }
    out
}

fn hexagon_c6_prime() -> LemmaTable {
    let rows = hexagon_cases()
        .into_iter()
        .map(|(alpha, beta, theta)| {
            let p = hex_prefix(alpha, beta, theta).expect("sides in range");
            let head = vec![alpha, beta, theta, p.gamma, p.a, p.b, p.c];
            let mut values: Vec<Option<f64>> = head.into_iter().map(Some).collect();
            if p.c < FRAC_PI_3 {
                values.extend([None; 5]);
                return infeasible(None, values, "c < pi/3: not realizable");
            }
            let tail = (|| -> Result<[f64; 5]> {
                let bp = base_angle_from_side(p.b)?;
                let gamma_p = opposite_angle(FRAC_PI_3, p.c, p.a)?;
                let omega = opposite_angle(p.b, p.c, FRAC_PI_3)?;
                Ok([p.alpha_p, bp, gamma_p, omega, bp + gamma_p + omega])
            })();
            match tail {
                Ok(t) => {
                    values.extend(t.map(Some));
                    row(None, values, Some(t[4]))
                }
                Err(_) => {
                    values.extend([None; 5]);
                    infeasible(None, values, "not realizable")
                }
            }
        })
        .collect();
    LemmaTable {
        id: 4,
        title: "Cases for C6′ of the Hexagon Lemma",
        label_header: None,
        headers: vec![
            "α",
            "β",
            "θ",
            "γ",
            "a",
            "b",
            "c",
            "α′",
            "β′",
            "γ′",
            "ω",
            "β′+γ′+ω",
        ],
        rows,
    }
}

fn hexagon_c6_double_prime() -> LemmaTable {
    let rows = hexagon_cases()
        .into_iter()
        .map(|(alpha, beta, theta)| {
            let p = hex_prefix(alpha, beta, theta).expect("sides in range");
            let head = vec![alpha, beta, theta, p.alpha_p, p.gamma, p.a, p.b, p.c];
            let mut values: Vec<Option<f64>> = head.into_iter().map(Some).collect();
            if p.c < FRAC_PI_3 {
                values.extend([None; 3]);
                return infeasible(None, values, "c < pi/3: not realizable");
            }
            let tail = (|| -> Result<[f64; 3]> {
                let gamma_p = base_angle_from_side(p.c)?;
                let omega = opposite_angle(FRAC_PI_3, p.c, p.b)?;
                Ok([gamma_p, omega, gamma_p + omega])
            })();
            match tail {
                Ok(t) => {
                    values.extend(t.map(Some));
                    row(None, values, Some(t[2]))
                }
                Err(_) => {
                    values.extend([None; 3]);
                    infeasible(None, values, "not realizable")
                }
            }
        })
        .collect();
    LemmaTable {
        id: 5,
        title: "Cases for C6″ of the Hexagon Lemma",
        label_header: None,
        headers: vec!["α", "β", "θ", "α′", "γ", "a", "b", "c", "γ′", "ω", "γ′+ω"],
        rows,
    }
}

/// The C6, C6′ and C6″ tables, in that order.
pub fn hexagon_lemma_tables() -> [LemmaTable; 3] {
    [hexagon_c6(), hexagon_c6_prime(), hexagon_c6_double_prime()]
}

/// Table `which` in `1..=5`.
pub fn lemma_table(which: u8) -> Result<LemmaTable> {
    match which {
        1 => Ok(quad_lemma_table()),
        2 => Ok(pentagon_lemma_table()),
        3 => Ok(hexagon_c6()),
        4 => Ok(hexagon_c6_prime()),
        5 => Ok(hexagon_c6_double_prime()),
        n => Err(Error::Parameter(format!(
            "no lemma table {n}; expected 1..=5"
        ))),
    }
}

pub fn all_tables() -> Vec<LemmaTable> {
    (1..=5).map(|i| lemma_table(i).expect("valid id")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncation_formatting() {
        assert_eq!(format_truncated(2.3735879, 3), "2.373");
        assert_eq!(format_truncated(1.0296119, 3), "1.029");
        assert_eq!(format_truncated(1.1867939, 4), "1.1867");
        assert_eq!(format_truncated(2.59, 3), "2.590");
        assert_eq!(format_truncated(0.5, 0), "0");
    }

    #[test]
    fn table1_rows() {
        let t = quad_lemma_table();
        assert_eq!(t.rows.len(), 2);
        assert!(t.rows[0].feasible);
        assert!(!t.rows[1].feasible);
        let csv = t.to_csv(3);
        assert_eq!(
            csv,
            "Cases,α,a,β\n(1),1.359,1.151,2.373\n(2),2.590,1.970,1.029\n"
        );
        // beta of the realizable row avoids every forbidden angle
        assert!(t.rows[0].forbidden_margin().unwrap() > 0.01);
    }

    #[test]
    fn table2_sums() {
        let t = pentagon_lemma_table();
        let sums: Vec<f64> = t.rows.iter().map(|r| r.terminal.unwrap()).collect();
        for (s, p) in sums.iter().zip([3.532, 2.176, 2.373]) {
            assert!((s - p).abs() < 1e-3, "{s} vs {p}");
        }
    }

    #[test]
    fn hexagon_spot_values() {
        let [c6, c6p, c6pp] = hexagon_lemma_tables();
        assert_eq!(c6.rows.len(), 4);
        assert_eq!(c6p.rows.len(), 16);
        assert_eq!(c6pp.rows.len(), 16);
        assert!((c6.rows[1].terminal.unwrap() - 4.672).abs() < 1e-3);
        assert!((c6p.rows[11].terminal.unwrap() - 4.356).abs() < 1e-3);
        assert!((c6pp.rows[6].terminal.unwrap() - 2.286).abs() < 1e-3);

        for t in [&c6p, &c6pp] {
            let infeasible: Vec<usize> = t
                .rows
                .iter()
                .enumerate()
                .filter(|(_, r)| !r.feasible)
                .map(|(i, _)| i)
                .collect();
            assert_eq!(infeasible, vec![0, 4, 8, 12]);
        }
        let c_col = 6;
        assert!((c6p.rows[0].values[c_col].unwrap() - 0.149).abs() < 1e-3);
        assert!((c6p.rows[8].values[c_col].unwrap() - 0.725).abs() < 1e-3);
    }

    #[test]
    fn every_terminal_avoids_forbidden_set() {
        for t in all_tables() {
            assert!(t.min_forbidden_margin().unwrap() > 0.01, "table {}", t.id);
            for r in &t.rows {
                let width = t.headers.len();
                assert_eq!(r.values.len(), width);
            }
        }
    }

    #[test]
    fn unknown_table() {
        assert!(lemma_table(0).is_err());
        assert!(lemma_table(6).is_err());
    }
}
