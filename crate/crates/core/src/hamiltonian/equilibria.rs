//! Equilibrium location and stability for the resonant models, plus the
//! inclination diagnostics: the bifurcation function f(i) and the dominance
//! boundary i0(e).

use super::{ResonantModel, ResonantState};
use crate::elements::OrbitalElements;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stability {
    Stable,
    Unstable,
}

/// One equilibrium of the reduced (angle, a) dynamics.
#[derive(Debug, Clone, Copy)]
pub struct EquilibriumReport {
    /// resonant angle at the equilibrium [rad]
    pub angle: f64,
    /// semimajor axis [km]
    pub a: f64,
    pub stability: Stability,
    /// eigenvalue pair of the linearized 2-D field [(re, im); 2], 1/s
    pub eigenvalues: [(f64, f64); 2],
}

/// f(i) = -sin i (1 - 2 cos i - 3 cos²i).  Vanishes at i = 0 and at
/// cos i = 1/3 (70.53°), with a maximum near 34.42°.
pub fn bifurcation_function(i: f64) -> f64 {
    let (s, c) = i.sin_cos();
    -s * (1.0 - 2.0 * c - 3.0 * c * c)
}

/// Root i0 ∈ (0°, 90°) of
/// (3/4)(1+cos i)²(e/2 - e³/16) = (3/2) sin²i (3e/2 + 27e³/16),
/// the boundary between t1- and t2-dominance. Bisection to 1e-10 rad.
pub fn solve_i0(e: f64) -> Result<f64> {
    if !(0.0 < e && e < 1.0) {
        return Err(Error::Invalid(format!("eccentricity must be in (0,1), got {e}")));
    }
    let f = |i: f64| {
        let (s, c) = i.sin_cos();
        0.75 * (1.0 + c).powi(2) * (e / 2.0 - e.powi(3) / 16.0)
            - 1.5 * s * s * (1.5 * e + 27.0 / 16.0 * e.powi(3))
    };
    let mut lo = 1e-12;
    let mut hi = std::f64::consts::FRAC_PI_2;
    // the left side dominates at i = 0 and loses by 90 degrees
    debug_assert!(f(lo) > 0.0 && f(hi) < 0.0);
    while hi - lo > 1e-10 {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Reduced 2-D field for equilibrium search: the rate of the librating
/// angle φ = angle + kω_eff ω and the rate of L', evaluated on states built
/// from elements (a, e, i) with the given fixed angles.
struct ReducedField<'a> {
    model: &'a ResonantModel,
    e: f64,
    i: f64,
    omega: f64,
    node: f64,
    k_omega_eff: f64,
}

impl ReducedField<'_> {
    fn state(&self, angle: f64, a: f64) -> Result<ResonantState> {
        let el = OrbitalElements::new(a, self.e, self.i, 0.0, self.omega, self.node)
            .map_err(|e| Error::Invalid(format!("equilibrium seed: {e}")))?;
        let mut s = self.model.state_from_elements(&el, 0.0);
        s.x[3] = angle;
        Ok(s)
    }

    /// (f1, f2) = (φ̇, L̇') in canonical units.
    fn eval(&self, angle: f64, a: f64) -> Result<[f64; 2]> {
        let s = self.state(angle, a)?;
        let mut dx = [0.0; 6];
        self.model.vector_field(&s, &mut dx)?;
        Ok([dx[3] + self.k_omega_eff * dx[4], dx[0]])
    }

    /// Jacobian of (f1, f2) with respect to (angle, a); a-derivatives chain
    /// through the √a scaling of all three primed actions.
    fn jac(&self, angle: f64, a: f64) -> Result<[[f64; 2]; 2]> {
        let s = self.state(angle, a)?;
        let mut j6 = [0.0; 36];
        self.model.jacobian(&s, &mut j6)?;
        let row_f1: Vec<f64> = (0..6).map(|k| j6[3 * 6 + k] + self.k_omega_eff * j6[4 * 6 + k]).collect();
        let row_f2: Vec<f64> = (0..6).map(|k| j6[k]).collect();
        let d_da = |row: &[f64]| -> f64 {
            // dx_j/da = x_j/(2a) for the primed actions (all scale as √a)
            (0..3).map(|j| row[j] * s.x[j] / (2.0 * self.model.units.km_to_canonical(a))).sum()
        };
        Ok([
            [row_f1[3], d_da(&row_f1)],
            [row_f2[3], d_da(&row_f2)],
        ])
    }

    /// Canonical 2×2 linearization at fixed (G', H') for stability:
    /// d(φ̇, L̇')/d(angle, L').
    fn stability_matrix(&self, angle: f64, a: f64) -> Result<[[f64; 2]; 2]> {
        let s = self.state(angle, a)?;
        let mut j6 = [0.0; 36];
        self.model.jacobian(&s, &mut j6)?;
        Ok([
            [
                j6[3 * 6 + 3] + self.k_omega_eff * j6[4 * 6 + 3],
                j6[3 * 6] + self.k_omega_eff * j6[4 * 6],
            ],
            [j6[3], j6[0]],
        ])
    }
}

/// Locates the equilibria of the reduced (angle, a) dynamics of `model` at
/// fixed (e, i, ω, Ω) by damped Newton iteration from a coarse seed grid,
/// merging duplicates within 0.5° and 0.1 km.  The stability of each root
/// comes from the eigenvalues of the canonical 2-D linearization.
pub fn find_equilibria(
    model: &ResonantModel,
    e: f64,
    i: f64,
    omega: f64,
    node: f64,
) -> Result<Vec<EquilibriumReport>> {
    let (_, a_res) = model.resonant_action_km();
    let field = ReducedField {
        model,
        e,
        i,
        omega,
        node,
        k_omega_eff: model.reduced_omega_multiplier(),
    };

    let mut roots: Vec<(f64, f64)> = Vec::new();
    let angle_seeds = 24;
    let a_seeds = 9;
    for ia in 0..angle_seeds {
        let angle0 = ia as f64 / angle_seeds as f64 * std::f64::consts::TAU;
        for ja in 0..a_seeds {
            let a0 = a_res - 20.0 + 40.0 * ja as f64 / (a_seeds - 1) as f64;
            if let Some(root) = newton_2d(&field, angle0, a0) {
                let ang = crate::constants::wrap_angle(root.0);
                let dup = roots.iter().any(|&(ra, rk)| {
                    angle_distance(ra, ang) < 0.5f64.to_radians() && (rk - root.1).abs() < 0.1
                });
                if !dup {
                    roots.push((ang, root.1));
                }
            }
        }
    }
    if roots.is_empty() {
        return Err(Error::NoConvergence("no equilibrium found from any seed".into()));
    }
    roots.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());

    let mut out = Vec::with_capacity(roots.len());
    for (angle, a) in roots {
        let m = field.stability_matrix(angle, a)?;
        let tr = m[0][0] + m[1][1];
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        let disc = tr * tr - 4.0 * det;
        // canonical rates convert to 1/s by the time unit
        let scale = 1.0 / model.units.time;
        let (eigs, stability) = if disc >= 0.0 {
            let r = disc.sqrt();
            (
                [((0.5 * (tr + r)) * scale, 0.0), ((0.5 * (tr - r)) * scale, 0.0)],
                Stability::Unstable,
            )
        } else {
            let im = (-disc).sqrt() * 0.5;
            (
                [((0.5 * tr) * scale, im * scale), ((0.5 * tr) * scale, -im * scale)],
                Stability::Stable,
            )
        };
        out.push(EquilibriumReport { angle, a, stability, eigenvalues: eigs });
    }
    Ok(out)
}

fn angle_distance(a: f64, b: f64) -> f64 {
    crate::constants::wrap_angle_signed(a - b).abs()
}

fn newton_2d(field: &ReducedField<'_>, mut angle: f64, mut a: f64) -> Option<(f64, f64)> {
    for _ in 0..60 {
        let f = field.eval(angle, a).ok()?;
        let j = field.jac(angle, a).ok()?;
        let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        if det.abs() < 1e-300 {
            return None;
        }
        let mut d_angle = (f[0] * j[1][1] - f[1] * j[0][1]) / det;
        let mut d_a = (j[0][0] * f[1] - j[1][0] * f[0]) / det;
        // damping keeps steps inside the basin
        let max_ang = 0.35;
        let max_a = 8.0;
        if d_angle.abs() > max_ang {
            d_angle = d_angle.signum() * max_ang;
        }
        if d_a.abs() > max_a {
            d_a = d_a.signum() * max_a;
        }
        angle -= d_angle;
        a -= d_a;
        if !a.is_finite() || !angle.is_finite() || a < 1000.0 {
            return None;
        }
        if d_angle.abs() < 1e-12 && d_a.abs() < 1e-9 {
            // converged; accept only true roots
            let f = field.eval(angle, a).ok()?;
            let ok = f[0].abs() < 1e-10 && f[1].abs() < 1e-10;
            return ok.then_some((angle, a));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::Constants;
    use crate::gravity::GravityCoefficients;
    use crate::hamiltonian::{ResonantModel, TermFilter};
    use approx::assert_relative_eq;

    #[test]
    fn bifurcation_function_shape() {
        assert_eq!(bifurcation_function(0.0), 0.0);
        // root at cos i = 1/3
        let root = (1.0f64 / 3.0).acos();
        assert!(bifurcation_function(root).abs() < 1e-15);
        assert_relative_eq!(root.to_degrees(), 70.529, epsilon = 0.01);
        // maximum near 34.42 degrees
        let mut best = (0.0, f64::MIN);
        let mut i = 0.0;
        while i < 1.2 {
            let v = bifurcation_function(i);
            if v > best.1 {
                best = (i, v);
            }
            i += 1e-5;
        }
        assert_relative_eq!(best.0.to_degrees(), 34.42, epsilon = 0.05);
    }

    #[test]
    fn i0_values() {
        // e = 0.5: about 39 degrees
        let i0 = solve_i0(0.5).unwrap();
        assert_relative_eq!(i0.to_degrees(), 39.1, epsilon = 0.1);
        // e -> 0 limit: root of (1+c) = 6(1-c), c = 5/7
        let i0 = solve_i0(1e-6).unwrap();
        assert_relative_eq!(i0.to_degrees(), (5.0f64 / 7.0).acos().to_degrees(), epsilon = 1e-3);
        assert!(solve_i0(0.0).is_err());
    }

    #[test]
    fn t1_only_equilibria() {
        let coeffs = GravityCoefficients::table1();
        let c = Constants::default();
        let model = ResonantModel::one_to_one(&coeffs, &c, 2, &TermFilter::only(&["T1"])).unwrap();
        let reports = find_equilibria(&model, 0.005, 0.0, 0.0, 0.0).unwrap();
        let lam22 = coeffs.lambda(2, 2);
        let stable: Vec<_> = reports.iter().filter(|r| r.stability == Stability::Stable).collect();
        let unstable: Vec<_> = reports.iter().filter(|r| r.stability == Stability::Unstable).collect();
        assert!(!stable.is_empty() && !unstable.is_empty());
        // stable at λ22 (mod π: the cos 2λ harmonic repeats), unstable at λ22 + 90°
        assert!(stable
            .iter()
            .any(|r| super::angle_distance(r.angle, lam22) < 0.02));
        assert!(unstable
            .iter()
            .any(|r| super::angle_distance(r.angle, lam22 + std::f64::consts::FRAC_PI_2) < 0.02));
        // purely imaginary pair at the stable point
        let s = stable[0];
        assert!(s.eigenvalues[0].0.abs() < 1e-12 * s.eigenvalues[0].1.abs().max(1e-30));
        assert!(s.eigenvalues[0].1 != 0.0);
    }
}
