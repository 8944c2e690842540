//! Closed-form term tables of the secular and resonant expansions of the
//! geopotential disturbing function: the degree/order ≤ 4 secular part, the
//! 1:1 resonant part to second order in eccentricity, the 2:1 resonant part
//! to fourth order, and the reduced 2:1 triplet (t1, t2, t3) kept to second
//! order for the toy model.
//!
//! Every coefficient is a product
//!     J_nm (μ R^n / a^(n+1)) · (inclination polynomial) · (eccentricity polynomial)
//! optionally times a closed-form (1-e²)^(k/2) factor for the secular terms.
//! Arguments are integer combinations k·(resonant angle) + kω·ω + phase.

use crate::gravity::GravityCoefficients;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trig {
    Cos,
    Sin,
}

/// One harmonic: a closed-form coefficient of (a, e, i) and its argument.
#[derive(Debug, Clone)]
pub struct HarmonicTerm {
    pub label: &'static str,
    /// degree: the prefactor scales as μ R^n / a^(n+1)
    pub n: u32,
    /// order of the harmonic (0 for zonal/secular pieces)
    pub m: u32,
    /// signed amplitude J_nm (dimensionless, natural units)
    pub j: f64,
    /// inclination polynomial: Σ c sin^sp(i) cos^cp(i) as (c, sp, cp)
    pub incl: Vec<(f64, u32, u32)>,
    /// eccentricity polynomial: Σ c e^k as (c, k)
    pub ecc: Vec<(f64, u32)>,
    /// extra closed-form factor (1-e²)^(half/2); 0 when absent
    pub e2_halfpow: i32,
    /// multiplier of the resonant angle (λ for 1:1, σ for 2:1)
    pub k_res: i32,
    /// multiplier of the argument of perigee
    pub k_omega: i32,
    /// constant phase [rad] (the -m λ_nm offsets)
    pub phase: f64,
    pub trig: Trig,
    /// true for the secular part, false for resonant harmonics
    pub secular: bool,
}

impl HarmonicTerm {
    /// All sin powers share one parity within a term; returns it.
    pub fn sin_parity_odd(&self) -> bool {
        self.incl.iter().any(|&(_, sp, _)| sp % 2 == 1)
    }

    /// All e powers share one parity within a term; returns it.
    pub fn e_parity_odd(&self) -> bool {
        self.ecc.iter().any(|&(_, k)| k % 2 == 1)
    }

    /// Plain evaluation of the coefficient in physical units [km²/s²].
    pub fn coefficient(&self, a: f64, e: f64, inc: f64, mu: f64, r_e: f64) -> f64 {
        let (si, ci) = inc.sin_cos();
        let incl: f64 = self.incl.iter().map(|&(c, sp, cp)| c * si.powi(sp as i32) * ci.powi(cp as i32)).sum();
        let ecc: f64 = self.ecc.iter().map(|&(c, k)| c * e.powi(k as i32)).sum();
        let extra = if self.e2_halfpow == 0 { 1.0 } else { (1.0 - e * e).powf(self.e2_halfpow as f64 / 2.0) };
        self.j * mu * r_e.powi(self.n as i32) / a.powi(self.n as i32 + 1) * incl * ecc * extra
    }
}

/// (1 ± cos i)^k expanded into cos-power monomials, scaled.
fn binomial_cos(scale: f64, k: u32, sign: f64, sin_pow: u32) -> Vec<(f64, u32, u32)> {
    let mut out = Vec::with_capacity(k as usize + 1);
    let mut coef = 1.0;
    for j in 0..=k {
        out.push((scale * coef * sign.powi(j as i32), sin_pow, j));
        coef = coef * (k - j) as f64 / (j + 1) as f64;
    }
    out
}

fn concat(parts: Vec<Vec<(f64, u32, u32)>>) -> Vec<(f64, u32, u32)> {
    parts.into_iter().flatten().collect()
}

/// Secular part R^sec up to degree `max_degree` (J2, J3, J4), exactly the
/// standard closed forms: the J3 piece carries e sin ω, the J4 piece a
/// constant and a cos 2ω harmonic.
pub fn secular_terms(coeffs: &GravityCoefficients, max_degree: u32) -> Vec<HarmonicTerm> {
    let mut out = Vec::new();
    out.push(HarmonicTerm {
        label: "J2",
        n: 2,
        m: 0,
        j: coeffs.j(2, 0),
        incl: vec![(0.75, 2, 0), (-0.5, 0, 0)],
        ecc: vec![(1.0, 0)],
        e2_halfpow: -3,
        k_res: 0,
        k_omega: 0,
        phase: 0.0,
        trig: Trig::Cos,
        secular: true,
    });
    if max_degree >= 3 {
        out.push(HarmonicTerm {
            label: "J3",
            n: 3,
            m: 0,
            j: coeffs.j(3, 0),
            // the factor 2 of the printed form is folded into the polynomial
            incl: vec![(2.0 * 15.0 / 16.0, 3, 0), (2.0 * -0.75, 1, 0)],
            ecc: vec![(1.0, 1)],
            e2_halfpow: -5,
            k_res: 0,
            k_omega: 1,
            phase: 0.0,
            trig: Trig::Sin,
            secular: true,
        });
    }
    if max_degree >= 4 {
        out.push(HarmonicTerm {
            label: "J4_2om",
            n: 4,
            m: 0,
            j: coeffs.j(4, 0),
            incl: vec![(-35.0 / 32.0, 4, 0), (15.0 / 16.0, 2, 0)],
            ecc: vec![(1.5, 2)],
            e2_halfpow: -7,
            k_res: 0,
            k_omega: 2,
            phase: 0.0,
            trig: Trig::Cos,
            secular: true,
        });
        out.push(HarmonicTerm {
            label: "J4_const",
            n: 4,
            m: 0,
            j: coeffs.j(4, 0),
            incl: vec![(105.0 / 64.0, 4, 0), (-15.0 / 8.0, 2, 0), (3.0 / 8.0, 0, 0)],
            ecc: vec![(1.0, 0), (1.5, 2)],
            e2_halfpow: -7,
            k_res: 0,
            k_omega: 0,
            phase: 0.0,
            trig: Trig::Cos,
            secular: true,
        });
    }
    out
}

/// The 1:1 resonant expansion to O(e²), in the stroboscopic mean node
/// λ = M - θ + ω + Ω.  Arguments are k λ + kω ω - m λ_nm.
pub fn res11_terms(coeffs: &GravityCoefficients, max_degree: u32) -> Vec<HarmonicTerm> {
    let mut t = Vec::new();
    let l22 = coeffs.lambda(2, 2);
    let l21 = coeffs.lambda(2, 1);

    // J22: the dominant pair
    t.push(HarmonicTerm {
        label: "T1",
        n: 2,
        m: 2,
        j: coeffs.j(2, 2),
        incl: binomial_cos(0.75, 2, 1.0, 0),
        ecc: vec![(1.0, 0), (-2.5, 2)],
        e2_halfpow: 0,
        k_res: 2,
        k_omega: 0,
        phase: -2.0 * l22,
        trig: Trig::Cos,
        secular: false,
    });
    t.push(HarmonicTerm {
        label: "T2",
        n: 2,
        m: 2,
        j: coeffs.j(2, 2),
        incl: vec![(27.0 / 8.0, 2, 0)],
        ecc: vec![(1.0, 2)],
        e2_halfpow: 0,
        k_res: 2,
        k_omega: -2,
        phase: -2.0 * l22,
        trig: Trig::Cos,
        secular: false,
    });
    // J21 (tiny; sin branch since n-m is odd)
    t.push(HarmonicTerm {
        label: "J21a",
        n: 2,
        m: 1,
        j: coeffs.j(2, 1),
        incl: binomial_cos(0.75, 1, 1.0, 1),
        ecc: vec![(-0.5, 1)],
        e2_halfpow: 0,
        k_res: 1,
        k_omega: 1,
        phase: -l21,
        trig: Trig::Sin,
        secular: false,
    });
    t.push(HarmonicTerm {
        label: "J21b",
        n: 2,
        m: 1,
        j: coeffs.j(2, 1),
        incl: vec![(-2.25, 1, 1)],
        ecc: vec![(1.0, 1)],
        e2_halfpow: 0,
        k_res: 1,
        k_omega: -1,
        phase: -l21,
        trig: Trig::Sin,
        secular: false,
    });

    if max_degree >= 3 {
        let l31 = coeffs.lambda(3, 1);
        let l32 = coeffs.lambda(3, 2);
        let l33 = coeffs.lambda(3, 3);
        t.push(HarmonicTerm {
            label: "J31a",
            n: 3,
            m: 1,
            j: coeffs.j(3, 1),
            incl: vec![(-15.0 / 16.0, 2, 0), (-15.0 / 16.0, 2, 1)],
            ecc: vec![(0.125, 2)],
            e2_halfpow: 0,
            k_res: 1,
            k_omega: 2,
            phase: -l31,
            trig: Trig::Cos,
            secular: false,
        });
        t.push(HarmonicTerm {
            label: "T3",
            n: 3,
            m: 1,
            j: coeffs.j(3, 1),
            incl: vec![(15.0 / 16.0, 2, 0), (45.0 / 16.0, 2, 1), (-0.75, 0, 0), (-0.75, 0, 1)],
            ecc: vec![(1.0, 0), (2.0, 2)],
            e2_halfpow: 0,
            k_res: 1,
            k_omega: 0,
            phase: -l31,
            trig: Trig::Cos,
            secular: false,
        });
        t.push(HarmonicTerm {
            label: "J31c",
            n: 3,
            m: 1,
            j: coeffs.j(3, 1),
            incl: vec![(15.0 / 16.0, 2, 0), (-45.0 / 16.0, 2, 1), (-0.75, 0, 0), (0.75, 0, 1)],
            ecc: vec![(11.0 / 8.0, 2)],
            e2_halfpow: 0,
            k_res: 1,
            k_omega: -2,
            phase: -l31,
            trig: Trig::Cos,
            secular: false,
        });
        t.push(HarmonicTerm {
            label: "J32a",
            n: 3,
            m: 2,
            j: coeffs.j(3, 2),
            incl: binomial_cos(-15.0 / 8.0, 2, 1.0, 1),
            ecc: vec![(1.0, 1)],
            e2_halfpow: 0,
            k_res: 2,
            k_omega: 1,
            phase: -2.0 * l32,
            trig: Trig::Sin,
            secular: false,
        });
        t.push(HarmonicTerm {
            label: "J32b",
            n: 3,
            m: 2,
            j: coeffs.j(3, 2),
            incl: vec![(45.0 / 8.0, 1, 0), (-45.0 / 4.0, 1, 1), (-135.0 / 8.0, 1, 2)],
            ecc: vec![(1.0, 1)],
            e2_halfpow: 0,
            k_res: 2,
            k_omega: -1,
            phase: -2.0 * l32,
            trig: Trig::Sin,
            secular: false,
        });
        t.push(HarmonicTerm {
            label: "J33a",
            n: 3,
            m: 3,
            j: coeffs.j(3, 3),
            incl: binomial_cos(15.0 / 8.0, 3, 1.0, 0),
            ecc: vec![(1.0, 0), (-6.0, 2)],
            e2_halfpow: 0,
            k_res: 3,
            k_omega: 0,
            phase: -3.0 * l33,
            trig: Trig::Cos,
            secular: false,
        });
        t.push(HarmonicTerm {
            label: "J33b",
            n: 3,
            m: 3,
            j: coeffs.j(3, 3),
            incl: vec![(45.0 / 8.0, 2, 0), (45.0 / 8.0, 2, 1)],
            ecc: vec![(53.0 / 8.0, 2)],
            e2_halfpow: 0,
            k_res: 3,
            k_omega: -2,
            phase: -3.0 * l33,
            trig: Trig::Cos,
            secular: false,
        });
    }

    if max_degree >= 4 {
        let l41 = coeffs.lambda(4, 1);
        let l42 = coeffs.lambda(4, 2);
        let l43 = coeffs.lambda(4, 3);
        let l44 = coeffs.lambda(4, 4);
        t.push(HarmonicTerm {
            label: "J41a",
            n: 4,
            m: 1,
            j: coeffs.j(4, 1),
            incl: vec![(35.0 / 16.0, 3, 0), (35.0 / 8.0, 3, 1), (-15.0 / 8.0, 1, 0), (-15.0 / 8.0, 1, 1)],
            ecc: vec![(0.5, 1)],
            e2_halfpow: 0,
            k_res: 1,
            k_omega: 1,
            phase: -l41,
            trig: Trig::Sin,
            secular: false,
        });
        t.push(HarmonicTerm {
            label: "J41b",
            n: 4,
            m: 1,
            j: coeffs.j(4, 1),
            incl: vec![(15.0 / 4.0, 1, 1), (-105.0 / 16.0, 3, 1)],
            ecc: vec![(2.5, 1)],
            e2_halfpow: 0,
            k_res: 1,
            k_omega: -1,
            phase: -l41,
            trig: Trig::Sin,
            secular: false,
        });
        t.push(HarmonicTerm {
            label: "J42a",
            n: 4,
            m: 2,
            j: coeffs.j(4, 2),
            incl: binomial_cos(-105.0 / 32.0, 2, 1.0, 2),
            ecc: vec![(0.5, 2)],
            e2_halfpow: 0,
            k_res: 2,
            k_omega: 2,
            phase: -2.0 * l42,
            trig: Trig::Cos,
            secular: false,
        });
        t.push(HarmonicTerm {
            label: "J42b",
            n: 4,
            m: 2,
            j: coeffs.j(4, 2),
            incl: concat(vec![
                vec![(105.0 / 8.0, 2, 1), (105.0 / 8.0, 2, 2)],
                binomial_cos(-15.0 / 8.0, 2, 1.0, 0),
            ]),
            ecc: vec![(1.0, 0), (1.0, 2)],
            e2_halfpow: 0,
            k_res: 2,
            k_omega: 0,
            phase: -2.0 * l42,
            trig: Trig::Cos,
            secular: false,
        });
        t.push(HarmonicTerm {
            label: "J42c",
            n: 4,
            m: 2,
            j: coeffs.j(4, 2),
            incl: vec![(105.0 / 16.0, 2, 0), (-315.0 / 16.0, 2, 2), (-15.0 / 4.0, 2, 0)],
            ecc: vec![(5.0, 2)],
            e2_halfpow: 0,
            k_res: 2,
            k_omega: -2,
            phase: -2.0 * l42,
            trig: Trig::Cos,
            secular: false,
        });
        t.push(HarmonicTerm {
            label: "J43a",
            n: 4,
            m: 3,
            j: coeffs.j(4, 3),
            incl: binomial_cos(105.0 / 16.0, 3, 1.0, 1),
            ecc: vec![(-1.5, 1)],
            e2_halfpow: 0,
            k_res: 3,
            k_omega: 1,
            phase: -3.0 * l43,
            trig: Trig::Sin,
            secular: false,
        });
        t.push(HarmonicTerm {
            label: "J43b",
            n: 4,
            m: 3,
            j: coeffs.j(4, 3),
            incl: vec![(105.0 / 8.0, 1, 0), (-315.0 / 8.0, 1, 2), (-105.0 / 4.0, 1, 3)],
            ecc: vec![(4.5, 1)],
            e2_halfpow: 0,
            k_res: 3,
            k_omega: -1,
            phase: -3.0 * l43,
            trig: Trig::Sin,
            secular: false,
        });
        t.push(HarmonicTerm {
            label: "J44a",
            n: 4,
            m: 4,
            j: coeffs.j(4, 4),
            incl: binomial_cos(105.0 / 16.0, 4, 1.0, 0),
            ecc: vec![(1.0, 0), (-11.0, 2)],
            e2_halfpow: 0,
            k_res: 4,
            k_omega: 0,
            phase: -4.0 * l44,
            trig: Trig::Cos,
            secular: false,
        });
        t.push(HarmonicTerm {
            label: "J44b",
            n: 4,
            m: 4,
            j: coeffs.j(4, 4),
            incl: binomial_cos(105.0 / 4.0, 2, 1.0, 2),
            ecc: vec![(53.0 / 4.0, 2)],
            e2_halfpow: 0,
            k_res: 4,
            k_omega: -2,
            phase: -4.0 * l44,
            trig: Trig::Cos,
            secular: false,
        });
    }
    t
}

/// The 2:1 resonant expansion to O(e⁴) in the doubled stroboscopic mean node
/// σ = M - 2θ + ω + 2Ω.  Arguments are k σ + kω ω - 2m' λ_nm.
pub fn res21_terms(coeffs: &GravityCoefficients, max_degree: u32) -> Vec<HarmonicTerm> {
    let mut t = Vec::new();
    let l22 = coeffs.lambda(2, 2);

    t.push(HarmonicTerm {
        label: "t1",
        n: 2,
        m: 2,
        j: coeffs.j(2, 2),
        incl: binomial_cos(0.75, 2, 1.0, 0),
        ecc: vec![(-0.5, 1), (1.0 / 16.0, 3)],
        e2_halfpow: 0,
        k_res: 1,
        k_omega: 1,
        phase: -2.0 * l22,
        trig: Trig::Cos,
        secular: false,
    });
    t.push(HarmonicTerm {
        label: "t2",
        n: 2,
        m: 2,
        j: coeffs.j(2, 2),
        incl: vec![(1.5, 2, 0)],
        ecc: vec![(1.5, 1), (27.0 / 16.0, 3)],
        e2_halfpow: 0,
        k_res: 1,
        k_omega: -1,
        phase: -2.0 * l22,
        trig: Trig::Cos,
        secular: false,
    });
    t.push(HarmonicTerm {
        label: "J22c",
        n: 2,
        m: 2,
        j: coeffs.j(2, 2),
        incl: binomial_cos(0.75, 2, -1.0, 0),
        ecc: vec![(67.0 / 48.0, 3)],
        e2_halfpow: 0,
        k_res: 1,
        k_omega: -3,
        phase: -2.0 * l22,
        trig: Trig::Cos,
        secular: false,
    });

    if max_degree >= 3 {
        let l32 = coeffs.lambda(3, 2);
        t.push(HarmonicTerm {
            label: "J32a",
            n: 3,
            m: 2,
            j: coeffs.j(3, 2),
            incl: binomial_cos(15.0 / 8.0, 2, 1.0, 1),
            ecc: vec![(0.125, 2), (1.0 / 48.0, 4)],
            e2_halfpow: 0,
            k_res: 1,
            k_omega: 2,
            phase: -2.0 * l32,
            trig: Trig::Sin,
            secular: false,
        });
        t.push(HarmonicTerm {
            label: "t3",
            n: 3,
            m: 2,
            j: coeffs.j(3, 2),
            incl: vec![(15.0 / 8.0, 1, 0), (-15.0 / 4.0, 1, 1), (-45.0 / 8.0, 1, 2)],
            ecc: vec![(1.0, 0), (2.0, 2), (239.0 / 64.0, 4)],
            e2_halfpow: 0,
            k_res: 1,
            k_omega: 0,
            phase: -2.0 * l32,
            trig: Trig::Sin,
            secular: false,
        });
        t.push(HarmonicTerm {
            label: "J32c",
            n: 3,
            m: 2,
            j: coeffs.j(3, 2),
            incl: vec![(-15.0 / 8.0, 1, 0), (-15.0 / 4.0, 1, 1), (45.0 / 8.0, 1, 2)],
            ecc: vec![(11.0 / 8.0, 2), (49.0 / 16.0, 4)],
            e2_halfpow: 0,
            k_res: 1,
            k_omega: -2,
            phase: -2.0 * l32,
            trig: Trig::Sin,
            secular: false,
        });
        t.push(HarmonicTerm {
            label: "J32d",
            n: 3,
            m: 2,
            j: coeffs.j(3, 2),
            incl: binomial_cos(-15.0 / 8.0, 2, -1.0, 1),
            ecc: vec![(131.0 / 128.0, 4)],
            e2_halfpow: 0,
            k_res: 1,
            k_omega: -4,
            phase: -2.0 * l32,
            trig: Trig::Sin,
            secular: false,
        });
    }

    if max_degree >= 4 {
        let l42 = coeffs.lambda(4, 2);
        let l44 = coeffs.lambda(4, 4);
        t.push(HarmonicTerm {
            label: "J42a",
            n: 4,
            m: 2,
            j: coeffs.j(4, 2),
            incl: binomial_cos(105.0 / 32.0, 2, 1.0, 2),
            ecc: vec![(19.0 / 48.0, 3)],
            e2_halfpow: 0,
            k_res: 1,
            k_omega: 3,
            phase: -2.0 * l42,
            trig: Trig::Cos,
            secular: false,
        });
        t.push(HarmonicTerm {
            label: "J42b",
            n: 4,
            m: 2,
            j: coeffs.j(4, 2),
            incl: concat(vec![
                vec![(105.0 / 8.0, 2, 1), (105.0 / 8.0, 2, 2)],
                binomial_cos(-15.0 / 8.0, 2, 1.0, 0),
            ]),
            ecc: vec![(0.5, 1), (33.0 / 16.0, 3)],
            e2_halfpow: 0,
            k_res: 1,
            k_omega: 1,
            phase: -2.0 * l42,
            trig: Trig::Cos,
            secular: false,
        });
        t.push(HarmonicTerm {
            label: "J42c",
            n: 4,
            m: 2,
            j: coeffs.j(4, 2),
            incl: vec![(105.0 / 16.0, 2, 0), (-315.0 / 16.0, 2, 2), (-15.0 / 4.0, 2, 0)],
            ecc: vec![(2.5, 1), (135.0 / 16.0, 3)],
            e2_halfpow: 0,
            k_res: 1,
            k_omega: -1,
            phase: -2.0 * l42,
            trig: Trig::Cos,
            secular: false,
        });
        t.push(HarmonicTerm {
            label: "J42d",
            n: 4,
            m: 2,
            j: coeffs.j(4, 2),
            incl: concat(vec![
                vec![(-105.0 / 8.0, 2, 1), (105.0 / 8.0, 2, 2)],
                binomial_cos(-15.0 / 8.0, 2, -1.0, 0),
            ]),
            ecc: vec![(49.0 / 48.0, 3)],
            e2_halfpow: 0,
            k_res: 1,
            k_omega: -3,
            phase: -2.0 * l42,
            trig: Trig::Cos,
            secular: false,
        });
        t.push(HarmonicTerm {
            label: "J44a",
            n: 4,
            m: 4,
            j: coeffs.j(4, 4),
            incl: binomial_cos(105.0 / 16.0, 4, 1.0, 0),
            ecc: vec![(0.5, 2), (-1.0 / 3.0, 4)],
            e2_halfpow: 0,
            k_res: 2,
            k_omega: 2,
            phase: -4.0 * l44,
            trig: Trig::Cos,
            secular: false,
        });
        t.push(HarmonicTerm {
            label: "J44b",
            n: 4,
            m: 4,
            j: coeffs.j(4, 4),
            incl: binomial_cos(105.0 / 4.0, 2, 1.0, 2),
            ecc: vec![(1.0, 0), (1.0, 2), (65.0 / 16.0, 4)],
            e2_halfpow: 0,
            k_res: 2,
            k_omega: 0,
            phase: -4.0 * l44,
            trig: Trig::Cos,
            secular: false,
        });
        t.push(HarmonicTerm {
            label: "J44c",
            n: 4,
            m: 4,
            j: coeffs.j(4, 4),
            incl: vec![(315.0 / 8.0, 4, 0)],
            ecc: vec![(5.0, 2), (155.0 / 12.0, 4)],
            e2_halfpow: 0,
            k_res: 2,
            k_omega: -2,
            phase: -4.0 * l44,
            trig: Trig::Cos,
            secular: false,
        });
        t.push(HarmonicTerm {
            label: "J44d",
            n: 4,
            m: 4,
            j: coeffs.j(4, 4),
            incl: binomial_cos(105.0 / 4.0, 2, -1.0, 2),
            ecc: vec![(67.0 / 48.0, 4)],
            e2_halfpow: 0,
            k_res: 2,
            k_omega: -4,
            phase: -4.0 * l44,
            trig: Trig::Cos,
            secular: false,
        });
    }
    t
}

/// The O(e²) forms of t1, t2, t3 used by the toy model.
pub fn toy21_terms(coeffs: &GravityCoefficients) -> Vec<HarmonicTerm> {
    let l22 = coeffs.lambda(2, 2);
    let l32 = coeffs.lambda(3, 2);
    vec![
        HarmonicTerm {
            label: "t1",
            n: 2,
            m: 2,
            j: coeffs.j(2, 2),
            incl: binomial_cos(0.75, 2, 1.0, 0),
            ecc: vec![(-0.5, 1)],
            e2_halfpow: 0,
            k_res: 1,
            k_omega: 1,
            phase: -2.0 * l22,
            trig: Trig::Cos,
            secular: false,
        },
        HarmonicTerm {
            label: "t2",
            n: 2,
            m: 2,
            j: coeffs.j(2, 2),
            incl: vec![(1.5, 2, 0)],
            ecc: vec![(1.5, 1)],
            e2_halfpow: 0,
            k_res: 1,
            k_omega: -1,
            phase: -2.0 * l22,
            trig: Trig::Cos,
            secular: false,
        },
        HarmonicTerm {
            label: "t3",
            n: 3,
            m: 2,
            j: coeffs.j(3, 2),
            incl: vec![(15.0 / 8.0, 1, 0), (-15.0 / 4.0, 1, 1), (-45.0 / 8.0, 1, 2)],
            ecc: vec![(1.0, 0), (2.0, 2)],
            e2_halfpow: 0,
            k_res: 1,
            k_omega: 0,
            phase: -2.0 * l32,
            trig: Trig::Sin,
            secular: false,
        },
    ]
}

/// Truncates every eccentricity polynomial to the requested order.
pub fn truncate_ecc_order(terms: &mut Vec<HarmonicTerm>, order: u32) {
    for t in terms.iter_mut() {
        t.ecc.retain(|&(_, k)| k <= order);
    }
    terms.retain(|t| !t.ecc.is_empty());
}
