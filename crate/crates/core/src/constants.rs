//! Physical constants and the internal canonical unit system.
//!
//! All external interfaces work in km, seconds and (at the CLI boundary)
//! degrees. The resonant Hamiltonian models internally use canonical units
//! in which the length unit is the Earth's equatorial radius and the time
//! unit makes the Earth rotation rate equal to one.

use crate::error::{Error, Result};

pub const TWO_PI: f64 = std::f64::consts::TAU;

/// Physical constants of the force models.
///
/// Defaults are the standard values consistent with the geostationary
/// distance 42164.17 km; every field can be overridden through the
/// configuration file.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    /// Earth's gravitational parameter GM_E, km^3/s^2.
    pub mu_e: f64,
    /// Earth's equatorial radius, km.
    pub r_e: f64,
    /// Earth's rotation rate, rad/s.
    pub theta_dot: f64,
    /// Solar gravitational parameter, km^3/s^2.
    pub gm_s: f64,
    /// Lunar gravitational parameter, km^3/s^2.
    pub gm_m: f64,
    /// Radiation pressure at 1 AU, N/m^2.
    pub p_r: f64,
    /// Astronomical unit, km.
    pub a_s: f64,
    /// Sidereal day, s.
    pub sidereal_day: f64,
}

impl Default for Constants {
    fn default() -> Self {
        let sidereal_day = 86164.0989;
        Constants {
            mu_e: 398600.4418,
            r_e: 6378.1363,
            theta_dot: TWO_PI / sidereal_day,
            gm_s: 1.32712440018e11,
            gm_m: 4902.800066,
            p_r: 4.56e-6,
            a_s: 1.495978707e8,
            sidereal_day,
        }
    }
}

impl Constants {
    /// Rebuilds `theta_dot` from a (possibly overridden) sidereal day.
    pub fn with_sidereal_day(mut self, day: f64) -> Self {
        self.sidereal_day = day;
        self.theta_dot = TWO_PI / day;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("mu_e", self.mu_e),
            ("r_e", self.r_e),
            ("theta_dot", self.theta_dot),
            ("gm_s", self.gm_s),
            ("gm_m", self.gm_m),
            ("p_r", self.p_r),
            ("a_s", self.a_s),
            ("sidereal_day", self.sidereal_day),
        ];
        for (name, v) in fields {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::Invalid(format!("constant {name} must be positive, got {v}")));
            }
        }
        let derived = TWO_PI / self.sidereal_day;
        if ((self.theta_dot - derived) / derived).abs() > 1e-12 {
            return Err(Error::Invalid(format!(
                "theta_dot = {} inconsistent with 2 pi / sidereal_day = {}",
                self.theta_dot, derived
            )));
        }
        Ok(())
    }

    /// Sidereal time θ(t) = θ0 + θ̇ t, reduced mod 2π.
    pub fn sidereal_time(&self, t: f64, theta0: f64) -> f64 {
        wrap_angle(theta0 + self.theta_dot * t)
    }
}

/// Canonical unit system for the Hamiltonian models: length unit R_E,
/// time unit 1/θ̇ (so that the Earth rotation rate is 1).
#[derive(Debug, Clone, Copy)]
pub struct CanonicalUnits {
    /// km per canonical length unit.
    pub length: f64,
    /// seconds per canonical time unit.
    pub time: f64,
    /// km^2/s per canonical action unit.
    pub action: f64,
    /// km^2/s^2 per canonical energy unit.
    pub energy: f64,
    /// μ_E in canonical units.
    pub mu: f64,
}

impl CanonicalUnits {
    pub fn new(c: &Constants) -> Self {
        let length = c.r_e;
        let time = 1.0 / c.theta_dot;
        let action = length * length / time;
        let energy = action / time;
        CanonicalUnits { length, time, action, energy, mu: c.mu_e / (length.powi(3) / (time * time)) }
    }

    pub fn km_to_canonical(&self, km: f64) -> f64 {
        km / self.length
    }
    pub fn canonical_to_km(&self, x: f64) -> f64 {
        x * self.length
    }
    pub fn seconds_to_canonical(&self, s: f64) -> f64 {
        s / self.time
    }
    pub fn canonical_to_seconds(&self, t: f64) -> f64 {
        t * self.time
    }
    pub fn action_to_canonical(&self, km2_s: f64) -> f64 {
        km2_s / self.action
    }
    pub fn canonical_to_action(&self, x: f64) -> f64 {
        x * self.action
    }
}

/// Reduces an angle to [0, 2π).
pub fn wrap_angle(x: f64) -> f64 {
    let r = x.rem_euclid(TWO_PI);
    if r == TWO_PI {
        0.0
    } else {
        r
    }
}

/// Reduces an angle to (-π, π].
pub fn wrap_angle_signed(x: f64) -> f64 {
    let r = wrap_angle(x);
    if r > std::f64::consts::PI {
        r - TWO_PI
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn defaults_validate() {
        let c = Constants::default();
        c.validate().unwrap();
        assert_relative_eq!(c.theta_dot, 7.292115147019296e-5, max_relative = 1e-12);
    }

    #[test]
    fn sidereal_time_basics() {
        let c = Constants::default();
        assert_relative_eq!(c.sidereal_time(0.0, 0.3), 0.3);
        // one full sidereal day returns to the initial angle
        assert_relative_eq!(c.sidereal_time(c.sidereal_day, 0.3), 0.3, epsilon = 1e-9);
        // half a day adds pi
        assert_relative_eq!(
            c.sidereal_time(c.sidereal_day / 2.0, 0.3),
            0.3 + std::f64::consts::PI,
            epsilon = 1e-9
        );
    }

    #[test]
    fn canonical_units_roundtrip() {
        let c = Constants::default();
        let u = CanonicalUnits::new(&c);
        assert_relative_eq!(u.canonical_to_km(u.km_to_canonical(42164.17)), 42164.17);
        // theta_dot is one canonical unit per canonical time
        assert_relative_eq!(c.theta_dot * u.time, 1.0);
        // mu scales as length^3 / time^2
        assert_relative_eq!(u.mu * u.length.powi(3) / (u.time * u.time), c.mu_e, max_relative = 1e-14);
    }

    #[test]
    fn invalid_constants_rejected() {
        let mut c = Constants::default();
        c.mu_e = -1.0;
        assert!(c.validate().is_err());
        let mut c = Constants::default();
        c.theta_dot *= 1.001;
        assert!(c.validate().is_err());
    }
}
