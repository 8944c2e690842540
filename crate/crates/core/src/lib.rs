//! Dynamics of Earth-orbiting debris near the 1:1 (geostationary) and 2:1
//! (GPS) gravitational resonances: secular/resonant geopotential
//! Hamiltonians, full Cartesian force models, fixed-step integrators with
//! variational equations, Fast Lyapunov Indicator cartography, pendulum
//! libration-width estimates and equilibrium/bifurcation reports.

pub mod amplitude;
pub mod cartesian;
pub mod cartography;
pub mod constants;
pub mod elements;
pub mod error;
pub mod fli;
pub mod gravity;
pub mod hamiltonian;
pub mod integrators;
mod jet;
pub mod kaula;
pub mod selftest;

pub use constants::{CanonicalUnits, Constants};
pub use elements::{CartesianState, DelaunayState, Frame, OrbitalElements};
pub use error::{Error, Result};
pub use gravity::GravityCoefficients;
pub use kaula::{ResonanceId, TermClass, TermIndex};
