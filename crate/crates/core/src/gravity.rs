//! The geopotential coefficient table: (C_nm, S_nm) with the derived
//! amplitude/phase representation (J_nm, λ_nm).
//!
//! The bundled default table holds the EGM2008 values for 2 ≤ n ≤ 4.  Both
//! representations of each harmonic are kept: the Cartesian force model uses
//! (C_nm, S_nm) directly, the Hamiltonian expansions use (J_nm, λ_nm).
//!
//! Note on the (4,0) row: the reference amplitude J_40 = -1.619331e-6 and the
//! coefficient C_40 = 1.6199e-6 disagree in the fourth digit under the
//! identity J_n0 = -C_n0.  Both published values are kept as-is: Hamiltonian
//! models read J_40, the Cartesian model reads C_40 (zonal n=4 does not enter
//! the degree-3 Cartesian model anyway).

use crate::constants::wrap_angle;
use crate::error::{Error, Result};

/// One geopotential harmonic: dimensionless coefficients stored in natural
/// units (the 1e-6 scale of the data file is applied at parse time).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Harmonic {
    pub n: u32,
    pub m: u32,
    pub c: f64,
    pub s: f64,
    /// Amplitude: √(C²+S²) for m ≠ 0, -C_n0 for m = 0.
    pub j: f64,
    /// Phase λ_nm [rad], defined by C = -J cos(m λ), S = -J sin(m λ).
    pub lambda: f64,
}

/// Coefficient table for 2 ≤ n ≤ `max_degree`, 0 ≤ m ≤ n.
#[derive(Debug, Clone)]
pub struct GravityCoefficients {
    rows: Vec<Harmonic>,
    pub max_degree: u32,
}

/// Published reference values (amplitude 1e-6, phase degrees), kept verbatim
/// so the Hamiltonian models use exactly the tabulated J_nm and λ_nm.
const REFERENCE_J_LAMBDA: [(u32, u32, f64, f64); 12] = [
    (2, 0, 1082.6261, 0.0),
    (2, 1, 0.001807, -81.5116),
    (2, 2, 1.81559, 75.0715),
    (3, 0, -2.53241, 0.0),
    (3, 1, 2.20947, 186.9692),
    (3, 2, 0.37445, 72.8111),
    (3, 3, 0.22139, 80.9928),
    (4, 0, -1.619331, 0.0),
    (4, 1, 0.67864, 41.4529),
    (4, 2, 0.16759, 121.0589),
    (4, 3, 0.060421, 56.1784),
    (4, 4, 0.007644, -14.6491),
];

pub const DEFAULT_TABLE: &str = include_str!("../data/gravity_coefficients.txt");

impl GravityCoefficients {
    /// The bundled EGM2008 table with published (C, S) and (J, λ) values.
    pub fn table1() -> Self {
        let mut t = Self::parse(DEFAULT_TABLE).expect("bundled table parses");
        // overwrite the derived (J, lambda) with the published ones
        for &(n, m, j, lam_deg) in &REFERENCE_J_LAMBDA {
            let row = t.rows.iter_mut().find(|r| r.n == n && r.m == m).expect("row exists");
            row.j = j * 1e-6;
            row.lambda = lam_deg.to_radians();
        }
        t
    }

    /// Parses the plain-text table: one `n m C_nm S_nm` row per harmonic,
    /// values in units of 1e-6; '#' starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 4 {
                return Err(Error::Invalid(format!(
                    "coefficient table line {}: expected 'n m C S', got {:?}",
                    lineno + 1,
                    raw
                )));
            }
            let n: u32 = fields[0]
                .parse()
                .map_err(|_| Error::Invalid(format!("bad degree on line {}", lineno + 1)))?;
            let m: u32 = fields[1]
                .parse()
                .map_err(|_| Error::Invalid(format!("bad order on line {}", lineno + 1)))?;
            let c: f64 = fields[2]
                .parse()
                .map_err(|_| Error::Invalid(format!("bad C value on line {}", lineno + 1)))?;
            let s: f64 = fields[3]
                .parse()
                .map_err(|_| Error::Invalid(format!("bad S value on line {}", lineno + 1)))?;
            if m > n || n < 2 {
                return Err(Error::Invalid(format!("invalid (n, m) = ({n}, {m}) on line {}", lineno + 1)));
            }
            let (j, lambda) = derive_j_lambda(n, m, c * 1e-6, s * 1e-6);
            rows.push(Harmonic { n, m, c: c * 1e-6, s: s * 1e-6, j, lambda });
        }
        if rows.is_empty() {
            return Err(Error::Invalid("empty coefficient table".into()));
        }
        let max_degree = rows.iter().map(|r| r.n).max().unwrap();
        Ok(GravityCoefficients { rows, max_degree })
    }

    pub fn get(&self, n: u32, m: u32) -> Option<&Harmonic> {
        self.rows.iter().find(|r| r.n == n && r.m == m)
    }

    pub fn c(&self, n: u32, m: u32) -> f64 {
        self.get(n, m).map_or(0.0, |r| r.c)
    }
    pub fn s(&self, n: u32, m: u32) -> f64 {
        self.get(n, m).map_or(0.0, |r| r.s)
    }
    pub fn j(&self, n: u32, m: u32) -> f64 {
        self.get(n, m).map_or(0.0, |r| r.j)
    }
    pub fn lambda(&self, n: u32, m: u32) -> f64 {
        self.get(n, m).map_or(0.0, |r| r.lambda)
    }

    pub fn rows(&self) -> &[Harmonic] {
        &self.rows
    }

    /// Scales every amplitude by a positive factor (used by invariance tests).
    pub fn scaled(&self, factor: f64) -> Self {
        let mut t = self.clone();
        for r in &mut t.rows {
            r.c *= factor;
            r.s *= factor;
            r.j *= factor;
        }
        t
    }

    /// Verifies the reconstruction identity C = -J cos(mλ), S = -J sin(mλ)
    /// for every row, at the stated relative tolerance.
    pub fn check_consistency(&self, tol: f64) -> Result<()> {
        for r in &self.rows {
            if r.m == 0 {
                continue;
            }
            let c_back = -r.j * ((r.m as f64) * r.lambda).cos();
            let s_back = -r.j * ((r.m as f64) * r.lambda).sin();
            let scale = r.j.abs().max(1e-30);
            if (c_back - r.c).abs() / scale > tol || (s_back - r.s).abs() / scale > tol {
                return Err(Error::Invalid(format!(
                    "coefficient ({}, {}) fails C/S reconstruction: ({:.6e}, {:.6e}) vs ({:.6e}, {:.6e})",
                    r.n, r.m, c_back, s_back, r.c, r.s
                )));
            }
        }
        Ok(())
    }
}

/// J_nm = √(C²+S²) (m ≠ 0) or -C_n0 (m = 0), with the phase from
/// C = -J cos(mλ), S = -J sin(mλ).
fn derive_j_lambda(_n: u32, m: u32, c: f64, s: f64) -> (f64, f64) {
    if m == 0 {
        (-c, 0.0)
    } else {
        let j = (c * c + s * s).sqrt();
        let lambda = wrap_angle((-s).atan2(-c)) / m as f64;
        (j, lambda)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn bundled_table_loads() {
        let t = GravityCoefficients::table1();
        assert_eq!(t.rows().len(), 12);
        assert_eq!(t.max_degree, 4);
        assert_relative_eq!(t.j(2, 2), 1.81559e-6);
        assert_relative_eq!(t.lambda(2, 2), 75.0715f64.to_radians());
        assert_relative_eq!(t.j(2, 0), 1082.6261e-6);
        assert_relative_eq!(t.c(2, 0), -1082.6261e-6);
        // the published (4,0) pair keeps both identities broken on purpose
        assert_relative_eq!(t.j(4, 0), -1.619331e-6);
        assert_relative_eq!(t.c(4, 0), 1.6199e-6);
    }

    #[test]
    fn derived_j_lambda_selfconsistent() {
        // derived values round-trip to 1e-12 relative
        let t = GravityCoefficients::parse(DEFAULT_TABLE).unwrap();
        t.check_consistency(1e-12).unwrap();
    }

    #[test]
    fn published_j_lambda_match_cs_within_print_rounding() {
        // printed digits carry ~1e-4 relative rounding
        let t = GravityCoefficients::table1();
        for r in t.rows() {
            if r.m == 0 {
                continue;
            }
            let c_back = -r.j * ((r.m as f64) * r.lambda).cos();
            let s_back = -r.j * ((r.m as f64) * r.lambda).sin();
            assert!(
                (c_back - r.c).abs() / r.j < 5e-4,
                "C mismatch at ({}, {}): {} vs {}",
                r.n,
                r.m,
                c_back,
                r.c
            );
            assert!((s_back - r.s).abs() / r.j < 5e-4);
        }
    }

    #[test]
    fn parse_rejects_bad_rows() {
        assert!(GravityCoefficients::parse("2 0 -1082").is_err());
        assert!(GravityCoefficients::parse("1 0 1.0 0.0").is_err());
        assert!(GravityCoefficients::parse("2 3 1.0 0.0").is_err());
        assert!(GravityCoefficients::parse("# only comments\n").is_err());
    }
}
