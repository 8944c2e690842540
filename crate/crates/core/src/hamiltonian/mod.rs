//! Resonant Hamiltonian models for the 1:1 and 2:1 gravitational resonances.
//!
//! After dropping the non-resonant harmonics, the Hamiltonian in the primed
//! canonical variables (L', G', H', angle, ω, Ω) reads
//!
//!     K = -μ²/(2L'²) - c_θ n_θ L' + R_sec(L', G', H', ω) + Σ_k g_k cos/sin(arg_k)
//!
//! where the resonant angle is the stroboscopic mean node λ = M - θ + ω + Ω
//! for the 1:1 resonance (G' = G - L, H' = H - L, c_θ = 1) and
//! σ = M - 2θ + ω + 2Ω for the 2:1 resonance (G' = G - L, H' = H - 2L,
//! c_θ = 2).  All internal arithmetic uses canonical units (length R_E,
//! time 1/θ̇); the public constructors and accessors speak km/s/rad.
//!
//! Vector fields and variational Jacobians come from exact jet
//! differentiation of the closed-form coefficients, so no derivative is
//! approximated numerically.

pub mod equilibria;
pub mod terms;

pub use equilibria::{bifurcation_function, find_equilibria, solve_i0, EquilibriumReport, Stability};
pub use terms::{HarmonicTerm, Trig};

use crate::constants::{CanonicalUnits, Constants};
use crate::elements::OrbitalElements;
use crate::error::{Error, Result};
use crate::gravity::GravityCoefficients;
use crate::jet::Jet3;
use crate::kaula::ResonanceId;

/// Guard threshold below which 1/e chain-rule factors are refused.
pub const E_GUARD: f64 = 1e-4;
/// Guard threshold below which 1/sin i chain-rule factors are refused.
pub const SIN_I_GUARD: f64 = 1e-4;

/// Which flavor of resonant model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelKind {
    /// Full expansion at the configured degree and eccentricity order.
    Full,
    /// The 2:1 toy model: J2 secular part plus a subset of {t1, t2, t3}
    /// kept to second order in eccentricity.
    Toy,
}

/// Selection of resonant terms by label (used for J22-only and toy subsets).
#[derive(Debug, Clone, Default)]
pub struct TermFilter(pub Option<Vec<String>>);

impl TermFilter {
    pub fn all() -> Self {
        TermFilter(None)
    }
    pub fn only(labels: &[&str]) -> Self {
        TermFilter(Some(labels.iter().map(|s| s.to_string()).collect()))
    }
    fn keeps(&self, label: &str) -> bool {
        match &self.0 {
            None => true,
            // "J22" matches labels T1/T2 via the owning harmonic check below
            Some(list) => list.iter().any(|l| l == label),
        }
    }
}

/// Immutable resonant model: cached term lists plus canonical-unit scaling.
#[derive(Debug, Clone)]
pub struct ResonantModel {
    pub resonance: ResonanceId,
    pub kind: ModelKind,
    pub max_degree: u32,
    pub ecc_order: u32,
    /// secular closed forms (J2 and optionally J3, J4)
    pub secular: Vec<HarmonicTerm>,
    /// resonant harmonics, coefficients in canonical units
    pub resonant: Vec<HarmonicTerm>,
    pub units: CanonicalUnits,
    pub constants: Constants,
    /// μ in canonical units
    mu: f64,
    /// multiplier of n_θ L' in the kinetic part (1 for 1:1, 2 for 2:1)
    c_theta: f64,
    needs_e_guard: bool,
    needs_sini_guard: bool,
}

fn label_matches(filter: &TermFilter, t: &HarmonicTerm) -> bool {
    if filter.0.is_none() {
        return true;
    }
    // accept either the term label (T1, t3, J42b...) or the harmonic
    // group Jnm, e.g. "J22" keeps every J22-led term
    let group = format!("J{}{}", t.n, t.m);
    filter.keeps(t.label) || filter.keeps(&group)
}

impl ResonantModel {
    /// Full 1:1 model (secular + resonant expansion to O(e²)).
    pub fn one_to_one(
        coeffs: &GravityCoefficients,
        constants: &Constants,
        max_degree: u32,
        filter: &TermFilter,
    ) -> Result<Self> {
        Self::build(ResonanceId::GEO, ModelKind::Full, coeffs, constants, max_degree, 2, filter)
    }

    /// Full 2:1 model (secular + resonant expansion to O(e⁴) by default).
    pub fn two_to_one(
        coeffs: &GravityCoefficients,
        constants: &Constants,
        max_degree: u32,
        ecc_order: u32,
        filter: &TermFilter,
    ) -> Result<Self> {
        Self::build(ResonanceId::GPS, ModelKind::Full, coeffs, constants, max_degree, ecc_order, filter)
    }

    /// Toy 2:1 model: J2 plus any subset of {t1, t2, t3} at O(e²).
    pub fn toy(coeffs: &GravityCoefficients, constants: &Constants, filter: &TermFilter) -> Result<Self> {
        Self::build(ResonanceId::GPS, ModelKind::Toy, coeffs, constants, 2, 2, filter)
    }

    fn build(
        resonance: ResonanceId,
        kind: ModelKind,
        coeffs: &GravityCoefficients,
        constants: &Constants,
        max_degree: u32,
        ecc_order: u32,
        filter: &TermFilter,
    ) -> Result<Self> {
        if !(2..=4).contains(&max_degree) {
            return Err(Error::Invalid(format!("max degree must be 2..=4, got {max_degree}")));
        }
        constants.validate()?;
        let units = CanonicalUnits::new(constants);

        let secular;
        let mut resonant;
        match kind {
            ModelKind::Full => {
                secular = terms::secular_terms(coeffs, max_degree);
                resonant = match resonance {
                    ResonanceId { p_res: 1, q_res: 1 } => terms::res11_terms(coeffs, max_degree),
                    ResonanceId { p_res: 2, q_res: 1 } => terms::res21_terms(coeffs, max_degree),
                    other => {
                        return Err(Error::Invalid(format!(
                            "no closed-form expansion available for the {other} resonance"
                        )))
                    }
                };
                terms::truncate_ecc_order(&mut resonant, ecc_order);
            }
            ModelKind::Toy => {
                if resonance != ResonanceId::GPS {
                    return Err(Error::Invalid("toy model is defined for the 2:1 resonance".into()));
                }
                secular = terms::secular_terms(coeffs, 2);
                resonant = terms::toy21_terms(coeffs);
            }
        }
        resonant.retain(|t| label_matches(filter, t));
        // canonical scaling: coefficients are J μ R^n / a^(n+1) · (...); with
        // R_E = 1 the prefactor becomes J μ_c^(n+2) L^(-2n-2), so only μ is
        // rescaled and R^n drops out
        let mu = units.mu;
        let needs_e_guard = resonant.iter().chain(secular.iter()).any(|t| t.e_parity_odd());
        let needs_sini_guard = resonant.iter().chain(secular.iter()).any(|t| t.sin_parity_odd());
        let c_theta = resonance.p_res as f64 / resonance.q_res as f64;
        Ok(ResonantModel {
            resonance,
            kind,
            max_degree,
            ecc_order,
            secular,
            resonant,
            units,
            constants: *constants,
            mu,
            c_theta,
            needs_e_guard,
            needs_sini_guard,
        })
    }

    /// Resonant angle from the orbital angles and sidereal time:
    /// λ = M - θ + ω + Ω (1:1) or σ = M - 2θ + ω + 2Ω (2:1).
    pub fn resonant_angle(&self, el: &OrbitalElements, theta: f64) -> f64 {
        let c = self.c_theta;
        el.mean_anomaly - c * theta + el.arg_perigee + c * el.node
    }

    /// Builds the canonical state [L', G', H', angle, ω, Ω] from elements.
    pub fn state_from_elements(&self, el: &OrbitalElements, theta: f64) -> ResonantState {
        let mu_c = self.mu;
        let a_c = self.units.km_to_canonical(el.a);
        let l = (mu_c * a_c).sqrt();
        let g = l * (1.0 - el.e * el.e).sqrt();
        let h = g * el.i.cos();
        ResonantState {
            x: [
                l,
                g - l,
                h - self.c_theta * l,
                self.resonant_angle(el, theta),
                el.arg_perigee,
                el.node,
            ],
        }
    }

    /// Recovers (a [km], e, i) from the canonical actions.
    pub fn elements_from_state(&self, s: &ResonantState) -> Result<(f64, f64, f64)> {
        let (l, g, h) = self.unprimed(s);
        if !(l > 0.0) || !(g > 0.0) || g > l * (1.0 + 1e-9) || h.abs() > g * (1.0 + 1e-9) {
            return Err(Error::DegenerateState(format!("actions (L,G,H) = ({l},{g},{h})")));
        }
        let a = self.units.canonical_to_km(l * l / self.mu);
        let e = (1.0 - (g / l).powi(2)).max(0.0).sqrt();
        let i = (h / g).clamp(-1.0, 1.0).acos();
        Ok((a, e, i))
    }

    fn unprimed(&self, s: &ResonantState) -> (f64, f64, f64) {
        let l = s.x[0];
        (l, s.x[1] + l, s.x[2] + self.c_theta * l)
    }

    /// Exact resonant action and semimajor axis: L_res = ((q/p) μ²/θ̇)^(1/3)
    /// in physical units, a_res = L_res²/μ.
    pub fn resonant_action_km(&self) -> (f64, f64) {
        resonant_action(&self.resonance, &self.constants)
    }

    pub fn mu_canonical(&self) -> f64 {
        self.mu
    }
    pub fn c_theta(&self) -> f64 {
        self.c_theta
    }

    /// ω-multiplier of the reduced pendulum angle: for a single-harmonic
    /// model the angle that librates is angle + (kω/k) ω; multi-harmonic
    /// models reduce over the bare resonant angle.
    pub fn reduced_omega_multiplier(&self) -> f64 {
        if self.resonant.len() == 1 {
            let t = &self.resonant[0];
            t.k_omega as f64 / t.k_res as f64
        } else {
            0.0
        }
    }

    fn guard(&self, e: f64, sin_i: f64) -> Result<()> {
        if self.needs_e_guard && e < E_GUARD {
            return Err(Error::NearSingular(format!("e = {e:.2e} below guard {E_GUARD:.0e}")));
        }
        if self.needs_sini_guard && sin_i < SIN_I_GUARD {
            return Err(Error::NearSingular(format!("sin i = {sin_i:.2e} below guard {SIN_I_GUARD:.0e}")));
        }
        Ok(())
    }

    /// Jets of one coefficient (canonical energy units) with respect to the
    /// primed actions.
    fn coefficient_jet(&self, t: &HarmonicTerm, base: &StateJets) -> Jet3 {
        // prefactor: J μ^(n+2) L^(-2(n+1)) in canonical units (R_E = 1)
        let pref_scale = t.j * self.mu.powi(t.n as i32 + 2);
        let mut coeff = base.l.powi(-2 * (t.n as i32 + 1)).scale(pref_scale);

        // inclination polynomial: either all sin powers even or all odd
        let mut incl = Jet3::constant(0.0);
        let odd_s = t.sin_parity_odd();
        for &(c, sp, cp) in &t.incl {
            let half = (sp - if odd_s { 1 } else { 0 }) / 2;
            let mut mono = base.sin2.powi(half as i32).scale(c);
            if cp > 0 {
                mono = mono.mul(&base.cos_i.powi(cp as i32));
            }
            incl = incl.add(&mono);
        }
        if odd_s {
            incl = incl.mul(&base.sin_i);
        }
        coeff = coeff.mul(&incl);

        // eccentricity polynomial in u = e², odd parts carry one factor e
        let mut ecc = Jet3::constant(0.0);
        let odd_e = t.e_parity_odd();
        for &(c, k) in &t.ecc {
            let half = (k - if odd_e { 1 } else { 0 }) / 2;
            ecc = ecc.add(&base.e2.powi(half as i32).scale(c));
        }
        if odd_e {
            ecc = ecc.mul(&base.e);
        }
        coeff = coeff.mul(&ecc);

        // closed-form (1-e²)^(half/2) = (G/L)^half
        if t.e2_halfpow != 0 {
            coeff = coeff.mul(&base.g_over_l.powi(t.e2_halfpow));
        }
        coeff
    }

    fn state_jets(&self, s: &ResonantState) -> Result<StateJets> {
        let l = Jet3::variable(s.x[0], 0);
        let gp = Jet3::variable(s.x[1], 1);
        let hp = Jet3::variable(s.x[2], 2);
        let g = l.add(&gp);
        let h = hp.add(&l.scale(self.c_theta));

        let g_over_l = g.div(&l);
        let e2 = Jet3::constant(1.0).sub(&g_over_l.mul(&g_over_l));
        let cos_i = h.div(&g);
        let sin2 = Jet3::constant(1.0).sub(&cos_i.mul(&cos_i));

        let e_val = e2.v.max(0.0).sqrt();
        let sin_val = sin2.v.max(0.0).sqrt();
        self.guard(e_val, sin_val)?;

        // sqrt jets are only consumed when the corresponding parity needs
        // them, in which case the guard above ensured a safe argument
        let e = if self.needs_e_guard { e2.sqrt() } else { Jet3::constant(e_val) };
        let sin_i = if self.needs_sini_guard { sin2.sqrt() } else { Jet3::constant(sin_val) };

        Ok(StateJets { l, g_over_l, e2, e, cos_i, sin2, sin_i })
    }

    /// Hamiltonian value, canonical units.
    pub fn hamiltonian(&self, s: &ResonantState) -> Result<f64> {
        let base = self.state_jets(s)?;
        let mut k = -0.5 * self.mu * self.mu / (s.x[0] * s.x[0]) - self.c_theta * s.x[0];
        for t in self.secular.iter().chain(self.resonant.iter()) {
            let g = self.coefficient_jet(t, &base);
            let arg = t.k_res as f64 * s.x[3] + t.k_omega as f64 * s.x[4] + t.phase;
            let tv = match t.trig {
                Trig::Cos => arg.cos(),
                Trig::Sin => arg.sin(),
            };
            k += g.v * tv;
        }
        Ok(k)
    }

    /// Canonical vector field ẋ for x = [L', G', H', angle, ω, Ω]:
    /// action rates -∂K/∂angles, angle rates +∂K/∂actions.
    pub fn vector_field(&self, s: &ResonantState, dx: &mut [f64; 6]) -> Result<()> {
        let base = self.state_jets(s)?;
        let l = s.x[0];
        *dx = [0.0; 6];
        // kinetic part: ∂/∂L' (-μ²/2L'² - c_θ L') = μ²/L'³ - c_θ
        dx[3] = self.mu * self.mu / (l * l * l) - self.c_theta;
        for t in self.secular.iter().chain(self.resonant.iter()) {
            let g = self.coefficient_jet(t, &base);
            let arg = t.k_res as f64 * s.x[3] + t.k_omega as f64 * s.x[4] + t.phase;
            let (tv, tp) = match t.trig {
                Trig::Cos => (arg.cos(), -arg.sin()),
                Trig::Sin => (arg.sin(), arg.cos()),
            };
            let w = [t.k_res as f64, t.k_omega as f64, 0.0];
            for j in 0..3 {
                dx[3 + j] += g.g[j] * tv; // angle rates
                dx[j] -= g.v * tp * w[j]; // action rates
            }
        }
        Ok(())
    }

    /// 6×6 Jacobian of the vector field (row-major), exact.
    pub fn jacobian(&self, s: &ResonantState, jac: &mut [f64; 36]) -> Result<()> {
        let base = self.state_jets(s)?;
        let l = s.x[0];
        *jac = [0.0; 36];
        // kinetic second derivative enters d(angle rate)/dL'
        jac[3 * 6] = -3.0 * self.mu * self.mu / (l * l * l * l);
        for t in self.secular.iter().chain(self.resonant.iter()) {
            let g = self.coefficient_jet(t, &base);
            let arg = t.k_res as f64 * s.x[3] + t.k_omega as f64 * s.x[4] + t.phase;
            let (tv, tp) = match t.trig {
                Trig::Cos => (arg.cos(), -arg.sin()),
                Trig::Sin => (arg.sin(), arg.cos()),
            };
            let tpp = -tv;
            let w = [t.k_res as f64, t.k_omega as f64, 0.0];
            for i in 0..3 {
                for j in 0..3 {
                    // d(action rate_i)/d(action_j) = -∂²K/∂ang_i∂act_j
                    jac[i * 6 + j] += -g.g[j] * tp * w[i];
                    // d(action rate_i)/d(angle_j) = -∂²K/∂ang_i∂ang_j
                    jac[i * 6 + 3 + j] += -g.v * tpp * w[i] * w[j];
                    // d(angle rate_i)/d(action_j) = ∂²K/∂act_i∂act_j
                    jac[(3 + i) * 6 + j] += g.hess(i, j) * tv;
                    // d(angle rate_i)/d(angle_j) = ∂²K/∂act_i∂ang_j
                    jac[(3 + i) * 6 + 3 + j] += g.g[i] * tp * w[j];
                }
            }
        }
        Ok(())
    }

    /// Sum of the resonant harmonic evaluations at a state, physical km²/s².
    pub fn resonant_potential(&self, s: &ResonantState) -> Result<f64> {
        let base = self.state_jets(s)?;
        let mut total = 0.0;
        for t in &self.resonant {
            let g = self.coefficient_jet(t, &base);
            let arg = t.k_res as f64 * s.x[3] + t.k_omega as f64 * s.x[4] + t.phase;
            let tv = match t.trig {
                Trig::Cos => arg.cos(),
                Trig::Sin => arg.sin(),
            };
            total += g.v * tv;
        }
        Ok(total * self.units.energy)
    }
}

/// Canonical state of a resonant model: x = [L', G', H', angle, ω, Ω].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResonantState {
    pub x: [f64; 6],
}

struct StateJets {
    l: Jet3,
    g_over_l: Jet3,
    e2: Jet3,
    e: Jet3,
    cos_i: Jet3,
    sin2: Jet3,
    sin_i: Jet3,
}

/// Secular geopotential R^sec(a, e, i, ω) in physical units [km²/s²],
/// degree-2 through 4 closed forms.
pub fn secular_potential(a: f64, e: f64, i: f64, omega: f64, coeffs: &GravityCoefficients, c: &Constants) -> f64 {
    let ts = terms::secular_terms(coeffs, coeffs.max_degree.min(4));
    ts.iter()
        .map(|t| {
            let arg = t.k_omega as f64 * omega;
            let tv = match t.trig {
                Trig::Cos => arg.cos(),
                Trig::Sin => arg.sin(),
            };
            t.coefficient(a, e, i, c.mu_e, c.r_e) * tv
        })
        .sum()
}

/// Resonant value of the Delaunay action and semimajor axis for a p:q
/// commensurability (q Ṁ = p θ̇): L_res = ((q/p) μ²/θ̇)^(1/3) [km²/s],
/// a_res = (q/p)^(2/3) (μ/θ̇²)^(1/3) [km].
pub fn resonant_action(res: &ResonanceId, c: &Constants) -> (f64, f64) {
    let ratio = res.q_res as f64 / res.p_res as f64;
    let l_res = (ratio * c.mu_e * c.mu_e / c.theta_dot).cbrt();
    let a_res = l_res * l_res / c.mu_e;
    (l_res, a_res)
}

/// J2 secular rates (Ω̇, ω̇) [rad/s] with n* = √(μ/a³):
/// Ω̇ = -(3/2) n* J2 (R/(a(1-e²)))² cos i,
/// ω̇ = +(3/2) n* J2 (R/(a(1-e²)))² (2 - (5/2) sin²i).
pub fn j2_secular_rates(a: f64, e: f64, i: f64, coeffs: &GravityCoefficients, c: &Constants) -> (f64, f64) {
    let n_star = (c.mu_e / a.powi(3)).sqrt();
    let j2 = coeffs.j(2, 0);
    let factor = 1.5 * n_star * j2 * (c.r_e / (a * (1.0 - e * e))).powi(2);
    let node_dot = -factor * i.cos();
    let perigee_dot = factor * (2.0 - 2.5 * i.sin().powi(2));
    (node_dot, perigee_dot)
}

/// Index of the dominant-term label sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DominantLabel {
    /// T1 / t1
    First,
    /// T2 / t2
    Second,
    /// T3 / t3
    Third,
    /// a degree-4 harmonic (2:1 only)
    FourthDegree,
}

impl DominantLabel {
    pub fn index(&self) -> u8 {
        match self {
            DominantLabel::First => 0,
            DominantLabel::Second => 1,
            DominantLabel::Third => 2,
            DominantLabel::FourthDegree => 3,
        }
    }
    pub fn name(&self, res: &ResonanceId) -> &'static str {
        let one_to_one = *res == ResonanceId::GEO;
        match self {
            DominantLabel::First => {
                if one_to_one {
                    "T1"
                } else {
                    "t1"
                }
            }
            DominantLabel::Second => {
                if one_to_one {
                    "T2"
                } else {
                    "t2"
                }
            }
            DominantLabel::Third => {
                if one_to_one {
                    "T3"
                } else {
                    "t3"
                }
            }
            DominantLabel::FourthDegree => "deg4",
        }
    }
}

/// Dominant term at (a, e, i): the tracked coefficient of largest magnitude.
/// Tracked sets: {T1, T2, T3} for 1:1; {t1, t2, t3} plus the degree-4
/// harmonics (reported collectively) for 2:1.
pub fn dominant_term(
    res: &ResonanceId,
    e: f64,
    i: f64,
    a: f64,
    coeffs: &GravityCoefficients,
    c: &Constants,
) -> DominantLabel {
    let candidates: Vec<(DominantLabel, f64)> = match *res {
        ResonanceId::GEO => {
            let ts = terms::res11_terms(coeffs, 3);
            ["T1", "T2", "T3"]
                .iter()
                .zip([DominantLabel::First, DominantLabel::Second, DominantLabel::Third])
                .map(|(lbl, dl)| {
                    let t = ts.iter().find(|t| t.label == *lbl).expect("labeled term");
                    (dl, t.coefficient(a, e, i, c.mu_e, c.r_e).abs())
                })
                .collect()
        }
        ResonanceId::GPS => {
            let ts = terms::res21_terms(coeffs, 4);
            let mut v: Vec<(DominantLabel, f64)> = ["t1", "t2", "t3"]
                .iter()
                .zip([DominantLabel::First, DominantLabel::Second, DominantLabel::Third])
                .map(|(lbl, dl)| {
                    let t = ts.iter().find(|t| t.label == *lbl).expect("labeled term");
                    (dl, t.coefficient(a, e, i, c.mu_e, c.r_e).abs())
                })
                .collect();
            let deg4 = ts
                .iter()
                .filter(|t| t.n == 4)
                .map(|t| t.coefficient(a, e, i, c.mu_e, c.r_e).abs())
                .fold(0.0f64, f64::max);
            v.push((DominantLabel::FourthDegree, deg4));
            v
        }
        _ => panic!("dominant-term sets defined for 1:1 and 2:1 only"),
    };
    candidates
        .into_iter()
        .max_by(|a, b| a.1.partial_cmp(&b.1).expect("finite coefficients"))
        .map(|(dl, _)| dl)
        .expect("nonempty candidate set")
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn setup() -> (GravityCoefficients, Constants) {
        (GravityCoefficients::table1(), Constants::default())
    }

    #[test]
    fn secular_potential_examples() {
        let (coeffs, c) = setup();
        let a = 42164.0;
        // J3 = J4 = 0 -> pure J2 shape
        let only_j2 = GravityCoefficients::parse("2 0 -1082.6261 0\n2 2 1.57462 -0.90387").unwrap();
        let e = 0.1;
        let i = 0.5;
        let v = secular_potential(a, e, i, 0.3, &only_j2, &c);
        let expected = c.mu_e * c.r_e.powi(2) * 1082.6261e-6 / a.powi(3)
            * (0.75 * i.sin().powi(2) - 0.5)
            * (1.0 - e * e).powf(-1.5);
        assert_relative_eq!(v, expected, max_relative = 1e-13);

        // e = 0 kills the J3 term: potential is even in omega
        let v1 = secular_potential(a, 0.0, i, 0.4, &coeffs, &c);
        let v2 = secular_potential(a, 0.0, i, -0.4, &coeffs, &c);
        assert_relative_eq!(v1, v2, max_relative = 1e-13);

        // sin²i = 2/3 is the root of the J2 inclination factor
        let i_root = (2.0f64 / 3.0).sqrt().asin();
        let v = secular_potential(a, 0.1, i_root, 0.0, &only_j2, &c);
        assert!(v.abs() < 1e-16 * c.mu_e / a);
    }

    #[test]
    fn resonant_potential_t1_only() {
        let (coeffs, c) = setup();
        let model =
            ResonantModel::one_to_one(&coeffs, &c, 2, &TermFilter::only(&["T1"])).unwrap();
        let el = OrbitalElements::new(42164.1696, 0.005, 0.3, 0.0, 0.0, 0.0).unwrap();
        // pick theta so that the resonant angle equals lambda_22
        let lam22 = coeffs.lambda(2, 2);
        let mut s = model.state_from_elements(&el, 0.0);
        s.x[3] = lam22;
        let v = model.resonant_potential(&s).unwrap();
        let g1 = c.mu_e * c.r_e.powi(2) * coeffs.j(2, 2) / el.a.powi(3)
            * 0.75
            * (1.0 + el.i.cos()).powi(2)
            * (1.0 - 2.5 * el.e * el.e);
        assert_relative_eq!(v, g1, max_relative = 1e-12);
    }

    #[test]
    fn resonant_potential_21_at_zero_ecc() {
        // at e = 0 only t3 and the J44b term survive among the 2:1 harmonics
        let (coeffs, c) = setup();
        let ts = terms::res21_terms(&coeffs, 4);
        for t in &ts {
            let v = t.coefficient(26561.76, 0.0, 0.6, c.mu_e, c.r_e);
            if t.label == "t3" || t.label == "J44b" {
                assert!(v.abs() > 1e-10, "{} should survive at e = 0", t.label);
            } else {
                assert_eq!(v, 0.0, "{} should vanish at e = 0", t.label);
            }
        }
    }

    #[test]
    fn vector_field_matches_j2_rates() {
        let (coeffs, c) = setup();
        let model = ResonantModel::two_to_one(&coeffs, &c, 2, 2, &TermFilter::only(&[])).unwrap();
        assert!(model.resonant.is_empty());
        let el = OrbitalElements::new(26561.76, 0.1, 0.35, 0.3, 0.4, 0.5).unwrap();
        let s = model.state_from_elements(&el, 0.0);
        let mut dx = [0.0; 6];
        model.vector_field(&s, &mut dx).unwrap();
        let (node_dot, perigee_dot) = j2_secular_rates(el.a, el.e, el.i, &coeffs, &c);
        // canonical rates convert by the time unit
        assert_relative_eq!(dx[4] / model.units.time, perigee_dot, max_relative = 1e-12);
        assert_relative_eq!(dx[5] / model.units.time, node_dot, max_relative = 1e-12);
        // actions are conserved in a secular-only model
        assert!(dx[0].abs() < 1e-18 && dx[1].abs() < 1e-18 && dx[2].abs() < 1e-18);
    }

    #[test]
    fn t1_field_stationary_at_lambda22() {
        let (coeffs, c) = setup();
        let model = ResonantModel::one_to_one(&coeffs, &c, 2, &TermFilter::only(&["T1"])).unwrap();
        let el = OrbitalElements::new(42164.1696, 0.005, 0.2, 0.0, 0.0, 0.0).unwrap();
        let mut s = model.state_from_elements(&el, 0.0);
        s.x[3] = coeffs.lambda(2, 2);
        let mut dx = [0.0; 6];
        model.vector_field(&s, &mut dx).unwrap();
        // L̇' = 2 g1 sin(2λ - 2λ22) = 0 at λ = λ22
        assert!(dx[0].abs() < 1e-18, "L' rate should vanish at the equilibrium angle, got {}", dx[0]);
    }

    #[test]
    fn jacobian_matches_finite_differences() {
        let (coeffs, c) = setup();
        for (model, a0) in [
            (ResonantModel::one_to_one(&coeffs, &c, 4, &TermFilter::all()).unwrap(), 42164.0),
            (ResonantModel::two_to_one(&coeffs, &c, 4, 4, &TermFilter::all()).unwrap(), 26561.0),
            (ResonantModel::toy(&coeffs, &c, &TermFilter::all()).unwrap(), 26561.0),
        ] {
            let el = OrbitalElements::new(a0, 0.13, 0.42, 0.9, 0.7, 1.3).unwrap();
            let s0 = model.state_from_elements(&el, 0.3);
            let mut jac = [0.0; 36];
            model.jacobian(&s0, &mut jac).unwrap();
            let h = 1e-6;
            for j in 0..6 {
                let mut sp = s0;
                let mut sm = s0;
                sp.x[j] += h;
                sm.x[j] -= h;
                let mut fp = [0.0; 6];
                let mut fm = [0.0; 6];
                model.vector_field(&sp, &mut fp).unwrap();
                model.vector_field(&sm, &mut fm).unwrap();
                for i in 0..6 {
                    let fd = (fp[i] - fm[i]) / (2.0 * h);
                    let scale = jac[i * 6 + j].abs().max(1e-9);
                    assert!(
                        (jac[i * 6 + j] - fd).abs() / scale < 1e-5,
                        "J[{i}][{j}] = {} vs fd {}",
                        jac[i * 6 + j],
                        fd
                    );
                }
            }
        }
    }

    #[test]
    fn near_singular_guard() {
        let (coeffs, c) = setup();
        // toy model includes t1 (odd in e) and t3 (odd in sin i)
        let model = ResonantModel::toy(&coeffs, &c, &TermFilter::all()).unwrap();
        let el = OrbitalElements::new(26561.0, 1e-6, 0.3, 0.0, 0.0, 0.0).unwrap();
        let s = model.state_from_elements(&el, 0.0);
        let mut dx = [0.0; 6];
        assert!(matches!(model.vector_field(&s, &mut dx), Err(Error::NearSingular(_))));

        // the J2+J22 1:1 model is guard-free: i = 0 and e = 0 evaluate fine
        let model = ResonantModel::one_to_one(&coeffs, &c, 2, &TermFilter::only(&["J22"])).unwrap();
        let el = OrbitalElements::new(42164.0, 0.0, 0.0, 0.1, 0.0, 0.0).unwrap();
        let s = model.state_from_elements(&el, 0.0);
        model.vector_field(&s, &mut dx).unwrap();
        assert!(dx.iter().all(|v| v.is_finite()));
    }

    #[test]
    fn resonant_axes() {
        let c = Constants::default();
        let (_, a_geo) = resonant_action(&ResonanceId::GEO, &c);
        let (_, a_gps) = resonant_action(&ResonanceId::GPS, &c);
        assert_relative_eq!(a_geo, 42164.17, epsilon = 0.05);
        assert_relative_eq!(a_gps, 26561.8, epsilon = 5.0);
        // ratio law
        assert_relative_eq!(a_gps, a_geo / 2f64.powf(2.0 / 3.0), max_relative = 1e-12);
    }

    #[test]
    fn j2_rate_specials() {
        let (coeffs, c) = setup();
        // polar orbit: node rate vanishes
        let (nd, _) = j2_secular_rates(26561.0, 0.1, std::f64::consts::FRAC_PI_2, &coeffs, &c);
        assert!(nd.abs() < 1e-25);
        // critical inclination kills the perigee rate
        let crit = (0.8f64).sqrt().asin();
        let (_, pd) = j2_secular_rates(26561.0, 0.1, crit, &coeffs, &c);
        assert!(pd.abs() < 1e-22);
        // d(perigee + 2 node)/di < 0 on (0, 66.4 deg)
        let rate = |i: f64| {
            let (nd, pd) = j2_secular_rates(26561.0, 0.1, i, &coeffs, &c);
            pd + 2.0 * nd
        };
        for i_deg in [5.0, 20.0, 40.0, 63.4, 66.0] {
            let i = (i_deg as f64).to_radians();
            let d = (rate(i + 1e-6) - rate(i - 1e-6)) / 2e-6;
            assert!(d < 0.0, "d(omega_dot + 2 node_dot)/di should be negative at {i_deg} deg");
        }
    }

    #[test]
    fn dominant_term_examples() {
        let (coeffs, c) = setup();
        // 1:1 small e, i: T1
        let d = dominant_term(&ResonanceId::GEO, 0.01, 0.05, 42164.17, &coeffs, &c);
        assert_eq!(d, DominantLabel::First);
        // 2:1 at e = 0, i = 70.53 deg: the degree-4 harmonic
        let d = dominant_term(&ResonanceId::GPS, 0.0, 70.53f64.to_radians(), 26561.76, &coeffs, &c);
        assert_eq!(d, DominantLabel::FourthDegree);
        // 2:1 small e away from the t3 root: t3
        let d = dominant_term(&ResonanceId::GPS, 0.005, 30f64.to_radians(), 26561.76, &coeffs, &c);
        assert_eq!(d, DominantLabel::Third);
    }

    #[test]
    fn dominant_argmax_scale_invariant() {
        let (coeffs, c) = setup();
        let scaled = coeffs.scaled(7.3);
        for (e, i_deg) in [(0.05, 10.0), (0.3, 50.0), (0.5, 35.0), (0.5, 45.0), (0.0, 70.53)] {
            let i = (i_deg as f64).to_radians();
            assert_eq!(
                dominant_term(&ResonanceId::GPS, e, i, 26561.76, &coeffs, &c),
                dominant_term(&ResonanceId::GPS, e, i, 26561.76, &scaled, &c)
            );
        }
    }

    #[test]
    fn mirror_symmetry_of_t1_hamiltonian() {
        // K restricted to the T1-only model is invariant under λ -> 2λ22 - λ
        let (coeffs, c) = setup();
        let model = ResonantModel::one_to_one(&coeffs, &c, 2, &TermFilter::only(&["T1"])).unwrap();
        let lam22 = coeffs.lambda(2, 2);
        let el = OrbitalElements::new(42170.0, 0.005, 0.1, 0.0, 0.0, 0.0).unwrap();
        for lam_deg in [-200.0, -60.0, 10.0, 75.0, 130.0] {
            let mut s1 = model.state_from_elements(&el, 0.0);
            s1.x[3] = (lam_deg as f64).to_radians();
            let mut s2 = s1;
            s2.x[3] = 2.0 * lam22 - s1.x[3];
            let k1 = model.hamiltonian(&s1).unwrap();
            let k2 = model.hamiltonian(&s2).unwrap();
            assert_relative_eq!(k1, k2, max_relative = 1e-12);
        }
    }
}
