//! Kaula expansion machinery for the geopotential disturbing function:
//! inclination functions F_nmp, eccentricity functions G_npq, the phase
//! functions S_nmpq and resonant-argument bookkeeping.
//!
//! The disturbing function is assembled as
//!
//! R = -(μ/a) Σ_n Σ_m (R_E/a)^n Σ_p F_nmp(i) Σ_q G_npq(e) S_nmpq ,
//!
//! with S_nmpq = -J_nm cos ψ̃ (n-m even) or -J_nm sin ψ̃ (n-m odd) and
//! ψ̃ = (n-2p)ω + (n-2p+q)M + m(Ω-θ) - m λ_nm.  This module is the generic,
//! brute-force route; the closed-form expansions used by the resonant models
//! live in [`crate::hamiltonian`] and are cross-checked against this one.

use crate::constants::wrap_angle;
use crate::elements::OrbitalElements;
use crate::error::{Error, Result};
use crate::gravity::GravityCoefficients;

/// Index (n, m, p, q) of one term of the expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TermIndex {
    pub n: u32,
    pub m: u32,
    pub p: u32,
    pub q: i32,
}

impl TermIndex {
    pub fn new(n: u32, m: u32, p: u32, q: i32) -> Result<Self> {
        if n < 2 || m > n || p > n {
            return Err(Error::Invalid(format!("invalid term index (n,m,p,q) = ({n},{m},{p},{q})")));
        }
        Ok(TermIndex { n, m, p, q })
    }
}

/// A p:q gravitational resonance (orbital period : Earth rotation period).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResonanceId {
    pub p_res: i32,
    pub q_res: i32,
}

impl ResonanceId {
    pub const GEO: ResonanceId = ResonanceId { p_res: 1, q_res: 1 };
    pub const GPS: ResonanceId = ResonanceId { p_res: 2, q_res: 1 };

    pub fn new(p_res: i32, q_res: i32) -> Result<Self> {
        if p_res == 0 || q_res == 0 {
            return Err(Error::Invalid("resonance integers must be nonzero".into()));
        }
        if gcd(p_res.unsigned_abs(), q_res.unsigned_abs()) != 1 {
            return Err(Error::Invalid(format!("resonance {p_res}:{q_res} not coprime")));
        }
        Ok(ResonanceId { p_res, q_res })
    }
}

impl std::fmt::Display for ResonanceId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.p_res, self.q_res)
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Classification of one term with respect to a resonance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermClass {
    Secular,
    Resonant,
    NonResonant,
}

/// Secular iff m = 0 and n-2p+q = 0; resonant for the p:q commensurability
/// (q Ṁ = p θ̇) iff p_res (n-2p+q) = q_res m with m > 0, so that the argument
/// (n-2p+q) M - m θ drifts slowly.  For 1:1 this reduces to n-2p+q = m, for
/// 2:1 to 2(n-2p+q) = m.
pub fn classify_term(idx: &TermIndex, res: &ResonanceId) -> TermClass {
    let k = idx.n as i32 - 2 * idx.p as i32 + idx.q;
    if idx.m == 0 && k == 0 {
        TermClass::Secular
    } else if idx.m > 0 && res.p_res * k == res.q_res * idx.m as i32 {
        TermClass::Resonant
    } else {
        TermClass::NonResonant
    }
}

/// Generalized binomial coefficient with a possibly negative integer upper
/// index: C(a, k) = a(a-1)...(a-k+1)/k!.
pub fn binomial_general(a: i64, k: i64) -> f64 {
    if k < 0 {
        return 0.0;
    }
    let mut r = 1.0;
    for j in 0..k {
        r *= (a - j) as f64 / (j + 1) as f64;
    }
    r
}

fn factorial(n: u32) -> f64 {
    (1..=n as u64).map(|k| k as f64).product()
}

/// Kaula inclination function F_nmp(i), evaluated by the triple sum with
/// k = ⌊(n-m)/2⌋, w summed to min(p, k) and c over the non-vanishing
/// binomial range.
pub fn inclination_function(idx: &TermIndex, inc: f64) -> f64 {
    let (n, m, p) = (idx.n as i64, idx.m as i64, idx.p as i64);
    let k = (n - m) / 2;
    let (sin_i, cos_i) = inc.sin_cos();
    let mut total = 0.0;
    for w in 0..=p.min(k) {
        let pref = factorial((2 * n - 2 * w) as u32)
            / (factorial(w as u32)
                * factorial((n - w) as u32)
                * factorial((n - m - 2 * w) as u32)
                * 2f64.powi((2 * n - 2 * w) as i32));
        let sin_pow = sin_i.powi((n - m - 2 * w) as i32);
        let mut s_sum = 0.0;
        for s in 0..=m {
            let mut c_sum = 0.0;
            for c in 0..=(n - m - 2 * w + s) {
                let t = p - w - c;
                if t < 0 || t > m - s {
                    continue;
                }
                let sign = if (c - k).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
                c_sum += binomial_general(n - m - 2 * w + s, c) * binomial_general(m - s, t) * sign;
            }
            s_sum += binomial_general(m, s) * cos_i.powi(s as i32) * c_sum;
        }
        total += pref * sin_pow * s_sum;
    }
    total
}

/// Kaula eccentricity function G_npq(e), as the β-series truncated at
/// β^(2 k_max), with the p' = n-p, q' = -q reflection applied for p > n/2.
pub fn eccentricity_function(idx: &TermIndex, e: f64, k_max: u32) -> f64 {
    let n = idx.n as i64;
    let (pp, qp) = if 2 * idx.p <= idx.n {
        (idx.p as i64, idx.q as i64)
    } else {
        ((idx.n - idx.p) as i64, -(idx.q as i64))
    };
    let beta = e / (1.0 + (1.0 - e * e).sqrt());
    // x = (n - 2p' + q') e / (2β); the ratio e/(2β) stays finite as e -> 0
    let e_over_2beta = 0.5 * (1.0 + (1.0 - e * e).sqrt());
    let x = (n - 2 * pp + qp) as f64 * e_over_2beta;

    let mut series = 0.0;
    let beta2 = beta * beta;
    let mut beta2k = 1.0;
    for k in 0..=k_max as i64 {
        let h_p = if qp > 0 { k + qp } else { k };
        let mut p_sum = 0.0;
        let mut x_pow = 1.0;
        let mut sign = 1.0;
        for r in 0..=h_p {
            p_sum += binomial_general(2 * pp - 2 * n, h_p - r) * sign / factorial(r as u32) * x_pow;
            x_pow *= x;
            sign = -sign;
        }
        let h_q = if qp > 0 { k } else { k - qp };
        let mut q_sum = 0.0;
        let mut x_pow = 1.0;
        for r in 0..=h_q {
            q_sum += binomial_general(-2 * pp, h_q - r) / factorial(r as u32) * x_pow;
            x_pow *= x;
        }
        series += p_sum * q_sum * beta2k;
        beta2k *= beta2;
    }
    let sign_q = if idx.q.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    sign_q * (1.0 + beta2).powi(n as i32) * beta.powi(idx.q.abs()) * series
}

/// Resonant argument ψ̃_nmpq = (n-2p)ω + (n-2p+q)M + m(Ω-θ) - m λ_nm, mod 2π.
pub fn resonant_argument(idx: &TermIndex, el: &OrbitalElements, theta: f64, lambda_nm: f64) -> f64 {
    let n2p = idx.n as f64 - 2.0 * idx.p as f64;
    wrap_angle(
        n2p * el.arg_perigee
            + (n2p + idx.q as f64) * el.mean_anomaly
            + idx.m as f64 * (el.node - theta)
            - idx.m as f64 * lambda_nm,
    )
}

/// Phase function S_nmpq: -J cos ψ̃ for n-m even, -J sin ψ̃ for n-m odd.
pub fn phase_function(idx: &TermIndex, psi: f64, j_nm: f64) -> f64 {
    if (idx.n - idx.m) % 2 == 0 {
        -j_nm * psi.cos()
    } else {
        -j_nm * psi.sin()
    }
}

/// Default truncation order of the β-series (adequate up to e ≈ 0.75).
pub const DEFAULT_K_MAX: u32 = 6;

/// One generated term of the expansion, cached per model configuration.
#[derive(Debug, Clone)]
pub struct GeneratedTerm {
    pub index: TermIndex,
    pub class: TermClass,
    /// J_nm of the owning harmonic.
    pub j_nm: f64,
    /// λ_nm of the owning harmonic [rad].
    pub lambda_nm: f64,
    /// Leading order in eccentricity, |q|.
    pub e_order: u32,
}

impl GeneratedTerm {
    /// Angle combination as multipliers of (M, ω, Ω, θ) plus constant phase.
    pub fn angle_key(&self) -> (i32, i32, i32, i32, f64) {
        let n2p = self.index.n as i32 - 2 * self.index.p as i32;
        let m = self.index.m as i32;
        (n2p + self.index.q, n2p, m, -m, -(m as f64) * self.lambda_nm)
    }
}

/// Generates and caches the secular or resonant term set of the degree-2..4
/// expansion for one resonance. `q_window` bounds |q|.
pub fn generate_terms(
    coeffs: &GravityCoefficients,
    res: &ResonanceId,
    max_degree: u32,
    q_window: i32,
    keep: TermClass,
) -> Vec<GeneratedTerm> {
    let mut out = Vec::new();
    for n in 2..=max_degree {
        for m in 0..=n {
            let Some(h) = coeffs.get(n, m) else { continue };
            for p in 0..=n {
                for q in -q_window..=q_window {
                    let idx = TermIndex { n, m, p, q };
                    if classify_term(&idx, res) != keep {
                        continue;
                    }
                    out.push(GeneratedTerm {
                        index: idx,
                        class: keep,
                        j_nm: h.j,
                        lambda_nm: h.lambda,
                        e_order: q.unsigned_abs(),
                    });
                }
            }
        }
    }
    out
}

/// Evaluates the sum of the generated terms of R_earth at the given state:
/// Σ (μ R^n / a^(n+1)) F_nmp(i) G_npq(e) S_nmpq.  This is the brute-force
/// assembly route used to validate the closed-form models.
pub fn assemble_potential(
    terms: &[GeneratedTerm],
    el: &OrbitalElements,
    theta: f64,
    mu: f64,
    r_e: f64,
    k_max: u32,
) -> f64 {
    let mut total = 0.0;
    for t in terms {
        let n = t.index.n;
        let pref = mu * r_e.powi(n as i32) / el.a.powi(n as i32 + 1);
        let f = inclination_function(&t.index, el.i);
        let g = eccentricity_function(&t.index, el.e, k_max);
        let psi = resonant_argument(&t.index, el, theta, t.lambda_nm);
        // R = -Σ V_nm and S carries the -J factor, so each term enters with
        // the product of the two minus signs
        total -= pref * f * g * phase_function(&t.index, psi, t.j_nm);
    }
    total
}

/// One row of the human-readable term table emitted by the CLI.
pub fn term_table_row(t: &GeneratedTerm) -> String {
    let (k_m, k_om, k_node, k_theta, phase) = t.angle_key();
    let trig = if (t.index.n - t.index.m) % 2 == 0 { "cos" } else { "sin" };
    let mut angle = String::new();
    for (k, name) in [(k_m, "M"), (k_om, "w"), (k_node, "O"), (k_theta, "th")] {
        if k == 0 {
            continue;
        }
        if k > 0 && !angle.is_empty() {
            angle.push('+');
        }
        if k == 1 {
            angle.push_str(name);
        } else if k == -1 {
            angle.push('-');
            angle.push_str(name);
        } else {
            angle.push_str(&format!("{k}{name}"));
        }
    }
    if phase != 0.0 {
        angle.push_str(&format!("{:+.4}deg", phase.to_degrees()));
    }
    if angle.is_empty() {
        angle.push('0');
    }
    format!(
        "{:10} {:28} {:>2}  J{}{}*F({},{},{})*G({},{},{})  {}({})",
        format!("({},{},{},{})", t.index.n, t.index.m, t.index.p, t.index.q),
        match t.class {
            TermClass::Secular => "secular",
            TermClass::Resonant => "resonant",
            TermClass::NonResonant => "non-resonant",
        },
        t.e_order,
        t.index.n,
        t.index.m,
        t.index.n,
        t.index.m,
        t.index.p,
        t.index.n,
        t.index.p,
        t.index.q,
        trig,
        angle
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn idx(n: u32, m: u32, p: u32, q: i32) -> TermIndex {
        TermIndex { n, m, p, q }
    }

    #[test]
    fn resonance_id_invariants() {
        assert!(ResonanceId::new(2, 1).is_ok());
        assert!(ResonanceId::new(4, 2).is_err());
        assert!(ResonanceId::new(0, 1).is_err());
    }

    #[test]
    fn inclination_function_known_values() {
        // F_220(i) = (3/4)(1 + cos i)^2, equals 3 at i = 0
        assert_relative_eq!(inclination_function(&idx(2, 2, 0, 0), 0.0), 3.0, max_relative = 1e-14);
        let i = 0.7;
        assert_relative_eq!(
            inclination_function(&idx(2, 2, 0, 0), i),
            0.75 * (1.0 + i.cos()).powi(2),
            max_relative = 1e-13
        );
        // F_201(i) = (3/4) sin^2 i - 1/2, equals -1/2 at i = 0
        assert_relative_eq!(inclination_function(&idx(2, 0, 1, 0), 0.0), -0.5, max_relative = 1e-14);
        assert_relative_eq!(
            inclination_function(&idx(2, 0, 1, 0), i),
            0.75 * i.sin().powi(2) - 0.5,
            max_relative = 1e-13
        );
    }

    #[test]
    fn eccentricity_function_known_values() {
        // G vanishes like e^|q| at e = 0
        assert_relative_eq!(eccentricity_function(&idx(2, 2, 0, -1), 0.0, 6), 0.0);
        assert_relative_eq!(eccentricity_function(&idx(3, 2, 0, 2), 0.0, 6), 0.0);
        // G_210(0) = 1
        assert_relative_eq!(eccentricity_function(&idx(2, 0, 1, 0), 0.0, 6), 1.0);
        // G_210(e) = (1 - e^2)^(-3/2) within series truncation
        let e = 0.1;
        assert_relative_eq!(
            eccentricity_function(&idx(2, 0, 1, 0), e, 6),
            (1.0 - e * e).powf(-1.5),
            max_relative = 1e-12
        );
    }

    #[test]
    fn resonant_argument_cases() {
        // (2,2,0,0): psi = 2(M + w + O - th - lam22)
        let el = OrbitalElements::new(42164.0, 0.01, 0.3, 0.4, 0.5, 0.6).unwrap();
        let lam = 0.2;
        let got = resonant_argument(&idx(2, 2, 0, 0), &el, 0.15, lam);
        assert_relative_eq!(got, wrap_angle(2.0 * (0.4 + 0.5 + 0.6 - 0.15 - lam)), epsilon = 1e-13);

        // all angles zero
        let el0 = OrbitalElements::new(42164.0, 0.01, 0.3, 0.0, 0.0, 0.0).unwrap();
        assert_relative_eq!(resonant_argument(&idx(3, 1, 2, 1), &el0, 0.0, 0.0), 0.0);

        // (2,2,1,-1): hand-computed combination
        let el = OrbitalElements::new(42164.0, 0.01, 0.3, 0.3, 0.7, 1.1).unwrap();
        let got = resonant_argument(&idx(2, 2, 1, -1), &el, 0.2, 0.15);
        assert_relative_eq!(got, 1.2, epsilon = 1e-13);
    }

    #[test]
    fn phase_function_branches() {
        // n = m = 2, even branch at psi = 0: -J22
        assert_relative_eq!(phase_function(&idx(2, 2, 0, 0), 0.0, 1.81559e-6), -1.81559e-6);
        // n = 3, m = 2, odd branch at psi = 0: 0
        assert_relative_eq!(phase_function(&idx(3, 2, 1, 0), 0.0, 0.37445e-6), 0.0);
        // odd branch at psi = pi/2: -J32
        assert_relative_eq!(
            phase_function(&idx(3, 2, 1, 0), std::f64::consts::FRAC_PI_2, 0.37445e-6),
            -0.37445e-6
        );
    }

    #[test]
    fn classification_cases() {
        let geo = ResonanceId::GEO;
        let gps = ResonanceId::GPS;
        assert_eq!(classify_term(&idx(2, 0, 1, 0), &geo), TermClass::Secular);
        assert_eq!(classify_term(&idx(2, 2, 0, 0), &geo), TermClass::Resonant);
        // (2,2,1,-1) for 2:1: 2(n-2p+q) = -2 != 2 -> non-resonant
        assert_eq!(classify_term(&idx(2, 2, 1, -1), &gps), TermClass::NonResonant);
        // (2,2,0,-1) for 2:1: 2(2-0-1) = 2 = m -> resonant (the t1 argument)
        assert_eq!(classify_term(&idx(2, 2, 0, -1), &gps), TermClass::Resonant);
    }

    #[test]
    fn generated_21_terms_match_printed_arguments() {
        // enumerate all (n,m,p,q) with n <= 4, |q| <= 4 and check the 2:1
        // J22 resonant index set matches the printed t-arguments
        let coeffs = GravityCoefficients::table1();
        let terms = generate_terms(&coeffs, &ResonanceId::GPS, 2, 4, TermClass::Resonant);
        let j22: Vec<_> = terms.iter().filter(|t| t.index.m == 2).map(|t| t.index).collect();
        // expected: (2,2,0,-1) [t1: M-2th+2w+2O], (2,2,1,1) [t2: M-2th+2O],
        // (2,2,2,3) [M-2th-2w+2O]
        assert!(j22.contains(&idx(2, 2, 0, -1)));
        assert!(j22.contains(&idx(2, 2, 1, 1)));
        assert!(j22.contains(&idx(2, 2, 2, 3)));
        assert_eq!(j22.len(), 3);
    }

    #[test]
    fn term_table_is_readable() {
        let coeffs = GravityCoefficients::table1();
        let terms = generate_terms(&coeffs, &ResonanceId::GEO, 2, 2, TermClass::Resonant);
        let rows: Vec<String> = terms.iter().map(term_table_row).collect();
        assert!(rows.iter().any(|r| r.contains("(2,2,0,0)")));
        assert!(rows.iter().any(|r| r.contains("cos")));
    }
}
