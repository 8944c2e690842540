//! Osculating orbital elements, Delaunay action-angle variables, Cartesian
//! states and the conversions between them.

use crate::constants::{wrap_angle, Constants};
use crate::error::{Error, Result};

/// Osculating Keplerian elements: a [km], e, i [rad], M, ω, Ω [rad].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitalElements {
    pub a: f64,
    pub e: f64,
    pub i: f64,
    pub mean_anomaly: f64,
    pub arg_perigee: f64,
    pub node: f64,
}

impl OrbitalElements {
    pub fn new(a: f64, e: f64, i: f64, mean_anomaly: f64, arg_perigee: f64, node: f64) -> Result<Self> {
        if !(a > 0.0) {
            return Err(Error::Invalid(format!("semimajor axis must be positive, got {a}")));
        }
        if !(0.0..1.0).contains(&e) {
            return Err(Error::Invalid(format!("eccentricity must be in [0,1), got {e}")));
        }
        if !(0.0..=std::f64::consts::PI).contains(&i) {
            return Err(Error::Invalid(format!("inclination must be in [0, pi], got {i}")));
        }
        Ok(OrbitalElements {
            a,
            e,
            i,
            mean_anomaly: wrap_angle(mean_anomaly),
            arg_perigee: wrap_angle(arg_perigee),
            node: wrap_angle(node),
        })
    }
}

/// Delaunay variables (L, G, H) [km^2/s] with conjugate angles (M, ω, Ω).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DelaunayState {
    pub l: f64,
    pub g: f64,
    pub h: f64,
    pub mean_anomaly: f64,
    pub arg_perigee: f64,
    pub node: f64,
}

/// Reference frame of a Cartesian state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Frame {
    /// Geocentric quasi-inertial frame.
    QuasiInertial,
    /// Earth-fixed rotating frame (x axis through the Greenwich meridian).
    Synodic,
}

/// Cartesian position/velocity, km and km/s.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CartesianState {
    pub position: [f64; 3],
    pub velocity: [f64; 3],
    pub frame: Frame,
}

/// L = √(μ a), G = L√(1-e²), H = G cos i; angles copied unchanged.
pub fn elements_to_delaunay(el: &OrbitalElements, c: &Constants) -> DelaunayState {
    let l = (c.mu_e * el.a).sqrt();
    let g = l * (1.0 - el.e * el.e).sqrt();
    let h = g * el.i.cos();
    DelaunayState {
        l,
        g,
        h,
        mean_anomaly: el.mean_anomaly,
        arg_perigee: el.arg_perigee,
        node: el.node,
    }
}

/// Inverse of [`elements_to_delaunay`]. Signals `DegenerateState` when the
/// action inequalities L ≥ G ≥ |H| > 0 fail beyond a small tolerance.
pub fn delaunay_to_elements(d: &DelaunayState, c: &Constants) -> Result<OrbitalElements> {
    const TOL: f64 = 1e-9;
    if !(d.l > 0.0) || !(d.g > 0.0) {
        return Err(Error::DegenerateState(format!("actions must be positive: L={}, G={}", d.l, d.g)));
    }
    if d.g > d.l * (1.0 + TOL) {
        return Err(Error::DegenerateState(format!("G = {} exceeds L = {}", d.g, d.l)));
    }
    if d.h.abs() > d.g * (1.0 + TOL) {
        return Err(Error::DegenerateState(format!("|H| = {} exceeds G = {}", d.h.abs(), d.g)));
    }
    let a = d.l * d.l / c.mu_e;
    let ratio = (d.g / d.l).min(1.0);
    let e = (1.0 - ratio * ratio).max(0.0).sqrt();
    let i = (d.h / d.g).clamp(-1.0, 1.0).acos();
    OrbitalElements::new(a, e, i, d.mean_anomaly, d.arg_perigee, d.node)
}

/// Solves Kepler's equation E - e sin E = M by Newton iteration.
pub fn solve_kepler(mean_anomaly: f64, e: f64) -> f64 {
    let m = wrap_angle(mean_anomaly);
    let mut big_e = if e < 0.8 { m } else { std::f64::consts::PI };
    for _ in 0..50 {
        let f = big_e - e * big_e.sin() - m;
        let fp = 1.0 - e * big_e.cos();
        let d = f / fp;
        big_e -= d;
        if d.abs() < 1e-14 {
            break;
        }
    }
    big_e
}

/// Standard osculating-element to Cartesian conversion with respect to μ_E,
/// in the quasi-inertial frame.
pub fn elements_to_cartesian(el: &OrbitalElements, c: &Constants) -> Result<CartesianState> {
    if el.e >= 1.0 {
        return Err(Error::DegenerateState(format!("eccentricity {} not elliptic", el.e)));
    }
    let big_e = solve_kepler(el.mean_anomaly, el.e);
    let (sin_e, cos_e) = big_e.sin_cos();
    let sqrt_1me2 = (1.0 - el.e * el.e).sqrt();

    // perifocal coordinates
    let x_p = el.a * (cos_e - el.e);
    let y_p = el.a * sqrt_1me2 * sin_e;
    let r = el.a * (1.0 - el.e * cos_e);
    let n = (c.mu_e / el.a.powi(3)).sqrt();
    let vx_p = -el.a * n * sin_e / (1.0 - el.e * cos_e);
    let vy_p = el.a * n * sqrt_1me2 * cos_e / (1.0 - el.e * cos_e);
    debug_assert!(r > 0.0);

    let (sin_om, cos_om) = el.arg_perigee.sin_cos();
    let (sin_node, cos_node) = el.node.sin_cos();
    let (sin_i, cos_i) = el.i.sin_cos();

    // rotation perifocal -> inertial: R3(-Ω) R1(-i) R3(-ω)
    let rot = [
        [
            cos_node * cos_om - sin_node * sin_om * cos_i,
            -cos_node * sin_om - sin_node * cos_om * cos_i,
        ],
        [
            sin_node * cos_om + cos_node * sin_om * cos_i,
            -sin_node * sin_om + cos_node * cos_om * cos_i,
        ],
        [sin_om * sin_i, cos_om * sin_i],
    ];
    let position = [
        rot[0][0] * x_p + rot[0][1] * y_p,
        rot[1][0] * x_p + rot[1][1] * y_p,
        rot[2][0] * x_p + rot[2][1] * y_p,
    ];
    let velocity = [
        rot[0][0] * vx_p + rot[0][1] * vy_p,
        rot[1][0] * vx_p + rot[1][1] * vy_p,
        rot[2][0] * vx_p + rot[2][1] * vy_p,
    ];
    Ok(CartesianState { position, velocity, frame: Frame::QuasiInertial })
}

/// Inverse osculating conversion. Signals `DegenerateState` on rectilinear
/// (zero angular momentum) or non-elliptic states.
pub fn cartesian_to_elements(s: &CartesianState, c: &Constants) -> Result<OrbitalElements> {
    let r_vec = s.position;
    let v_vec = s.velocity;
    let r = norm3(&r_vec);
    let v2 = dot3(&v_vec, &v_vec);
    if r <= 0.0 {
        return Err(Error::DegenerateState("zero radius".into()));
    }

    let h_vec = cross3(&r_vec, &v_vec);
    let h = norm3(&h_vec);
    if h < 1e-9 * r * v2.sqrt().max(1e-30) {
        return Err(Error::DegenerateState("rectilinear orbit: zero angular momentum".into()));
    }

    let energy = 0.5 * v2 - c.mu_e / r;
    if energy >= 0.0 {
        return Err(Error::DegenerateState(format!("non-elliptic state, energy = {energy}")));
    }
    let a = -c.mu_e / (2.0 * energy);

    // eccentricity vector
    let rv = dot3(&r_vec, &v_vec);
    let e_vec = [
        (v2 - c.mu_e / r) * r_vec[0] / c.mu_e - rv * v_vec[0] / c.mu_e,
        (v2 - c.mu_e / r) * r_vec[1] / c.mu_e - rv * v_vec[1] / c.mu_e,
        (v2 - c.mu_e / r) * r_vec[2] / c.mu_e - rv * v_vec[2] / c.mu_e,
    ];
    let e = norm3(&e_vec);

    let i = (h_vec[2] / h).clamp(-1.0, 1.0).acos();

    // ascending node vector
    let n_vec = [-h_vec[1], h_vec[0], 0.0];
    let n_norm = norm3(&n_vec);

    let node = if n_norm > 1e-12 * h {
        wrap_angle(n_vec[1].atan2(n_vec[0]))
    } else {
        0.0 // equatorial: node undefined, fix it to zero
    };

    let arg_perigee = if e > 1e-12 {
        if n_norm > 1e-12 * h {
            let cos_om = dot3(&n_vec, &e_vec) / (n_norm * e);
            let mut om = cos_om.clamp(-1.0, 1.0).acos();
            if e_vec[2] < 0.0 {
                om = crate::constants::TWO_PI - om;
            }
            om
        } else {
            // equatorial: measure perigee from the x axis
            let mut om = e_vec[1].atan2(e_vec[0]);
            if h_vec[2] < 0.0 {
                om = -om;
            }
            wrap_angle(om)
        }
    } else {
        0.0
    };

    let mean_anomaly = if e > 1e-12 {
        let cos_nu = dot3(&e_vec, &r_vec) / (e * r);
        let mut nu = cos_nu.clamp(-1.0, 1.0).acos();
        if rv < 0.0 {
            nu = crate::constants::TWO_PI - nu;
        }
        let big_e = 2.0 * ((1.0 - e).sqrt() * (nu / 2.0).tan()).atan2((1.0 + e).sqrt());
        wrap_angle(big_e - e * big_e.sin())
    } else {
        // circular: argument of latitude plays the role of the anomaly
        let u = if n_norm > 1e-12 * h {
            let cos_u = dot3(&n_vec, &r_vec) / (n_norm * r);
            let mut u = cos_u.clamp(-1.0, 1.0).acos();
            if r_vec[2] < 0.0 {
                u = crate::constants::TWO_PI - u;
            }
            u
        } else {
            wrap_angle(r_vec[1].atan2(r_vec[0]))
        };
        u
    };

    OrbitalElements::new(a, e, i, mean_anomaly, arg_perigee, node)
}

pub fn dot3(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn cross3(a: &[f64; 3], b: &[f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub fn norm3(a: &[f64; 3]) -> f64 {
    dot3(a, a).sqrt()
}

/// Rotation by -θ about the third axis: maps synodic coordinates to the
/// quasi-inertial frame, (x,y,z)ᵀ = R3(-θ)(X,Y,Z)ᵀ.
pub fn rotate_synodic_to_inertial(v: &[f64; 3], theta: f64) -> [f64; 3] {
    let (s, c) = theta.sin_cos();
    [c * v[0] - s * v[1], s * v[0] + c * v[1], v[2]]
}

/// Inverse of [`rotate_synodic_to_inertial`].
pub fn rotate_inertial_to_synodic(v: &[f64; 3], theta: f64) -> [f64; 3] {
    let (s, c) = theta.sin_cos();
    [c * v[0] + s * v[1], -s * v[0] + c * v[1], v[2]]
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn consts() -> Constants {
        Constants::default()
    }

    #[test]
    fn delaunay_circular_equatorial() {
        let c = consts();
        // a chosen so that L = mu numerically: a = mu
        let el = OrbitalElements::new(c.mu_e, 0.0, 0.0, 0.0, 0.0, 0.0).unwrap();
        let d = elements_to_delaunay(&el, &c);
        assert_relative_eq!(d.l, c.mu_e, max_relative = 1e-14);
        assert_relative_eq!(d.g, d.l);
        assert_relative_eq!(d.h, d.l);
    }

    #[test]
    fn delaunay_half_eccentricity() {
        let c = consts();
        let el = OrbitalElements::new(42164.0, 0.5, 0.3, 0.1, 0.2, 0.3).unwrap();
        let d = elements_to_delaunay(&el, &c);
        assert_relative_eq!(d.g, d.l * 0.75f64.sqrt(), max_relative = 1e-14);
    }

    #[test]
    fn delaunay_geo_frozen_values() {
        // independent hand evaluation of the three formulas
        let c = consts();
        let el = OrbitalElements::new(42164.1696, 0.005, 30f64.to_radians(), 0.0, 0.0, 0.0).unwrap();
        let d = elements_to_delaunay(&el, &c);
        assert_relative_eq!(d.l, 129640.48993539838, max_relative = 1e-12);
        assert_relative_eq!(d.g, 129638.86941914589, max_relative = 1e-12);
        assert_relative_eq!(d.h, 112270.55423487394, max_relative = 1e-12);
    }

    #[test]
    fn delaunay_inverse_edge_cases() {
        let c = consts();
        let d = DelaunayState { l: 1.0e5, g: 1.0e5, h: 0.0, mean_anomaly: 0.4, arg_perigee: 0.5, node: 0.6 };
        let el = delaunay_to_elements(&d, &c).unwrap();
        assert_relative_eq!(el.e, 0.0);
        assert_relative_eq!(el.i, std::f64::consts::FRAC_PI_2);

        let bad = DelaunayState { l: 1.0e5, g: 1.1e5, h: 0.0, mean_anomaly: 0.0, arg_perigee: 0.0, node: 0.0 };
        assert!(matches!(delaunay_to_elements(&bad, &c), Err(Error::DegenerateState(_))));
    }

    #[test]
    fn cartesian_circular_equatorial() {
        let c = consts();
        let a = 42164.1696;
        let el = OrbitalElements::new(a, 0.0, 0.0, 0.0, 0.0, 0.0).unwrap();
        let s = elements_to_cartesian(&el, &c).unwrap();
        assert_relative_eq!(norm3(&s.position), a, max_relative = 1e-12);
        assert_relative_eq!(norm3(&s.velocity), (c.mu_e / a).sqrt(), max_relative = 1e-12);
    }

    #[test]
    fn cartesian_roundtrip() {
        let c = consts();
        let el = OrbitalElements::new(
            42164.0,
            0.1,
            30f64.to_radians(),
            40f64.to_radians(),
            50f64.to_radians(),
            60f64.to_radians(),
        )
        .unwrap();
        let s = elements_to_cartesian(&el, &c).unwrap();
        let back = cartesian_to_elements(&s, &c).unwrap();
        assert_relative_eq!(back.a, el.a, max_relative = 1e-9);
        assert_relative_eq!(back.e, el.e, max_relative = 1e-9);
        assert_relative_eq!(back.i, el.i, max_relative = 1e-9);
        assert_relative_eq!(back.mean_anomaly, el.mean_anomaly, max_relative = 1e-8);
        assert_relative_eq!(back.arg_perigee, el.arg_perigee, max_relative = 1e-8);
        assert_relative_eq!(back.node, el.node, max_relative = 1e-9);
    }

    #[test]
    fn degenerate_cartesian_states() {
        let c = consts();
        // radial (zero angular momentum)
        let s = CartesianState { position: [42164.0, 0.0, 0.0], velocity: [1.0, 0.0, 0.0], frame: Frame::QuasiInertial };
        assert!(cartesian_to_elements(&s, &c).is_err());
        // hyperbolic
        let s = CartesianState { position: [42164.0, 0.0, 0.0], velocity: [0.0, 9.0, 0.0], frame: Frame::QuasiInertial };
        assert!(cartesian_to_elements(&s, &c).is_err());
    }

    #[test]
    fn frame_rotations_inverse() {
        let v = [1.0, 2.0, 3.0];
        let theta = 0.7;
        let w = rotate_synodic_to_inertial(&v, theta);
        let back = rotate_inertial_to_synodic(&w, theta);
        for k in 0..3 {
            assert_relative_eq!(back[k], v[k], epsilon = 1e-15);
        }
    }
}
