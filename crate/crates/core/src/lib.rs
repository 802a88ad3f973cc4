//! Spin models of ultracold dipolar molecules in harmonic-trap mode space.
//!
//! The pipeline runs from single-molecule rotor structure in a DC electric
//! field, through dipolar interaction matrix elements in the 2D oscillator
//! basis, to a long-range XXZ spin model whose dynamics (DTWA ensembles,
//! mean-field trajectories, loss-extended equations of motion, and an exact
//! collective oracle) generate spin squeezing and feed a twist-untwist
//! sensing protocol.
//!
//! Conventions used throughout:
//! * energies in units of the rotational constant `B`, electric fields in
//!   `B/d`, dipole moments in `d` (see [`units`] for the KRb anchors),
//! * interaction matrix elements in units of `d^2/(4 pi eps0 a_perp^3)`,
//! * coupling matrices and effective fields in angular frequency (rad/s),
//!   times in seconds.

pub mod dynamics;
pub mod hobasis;
pub mod kinetic;
pub mod metrology;
pub mod output;
pub mod potential;
pub mod rotor;
pub mod semiclassical;
pub mod special;
pub mod spinmodel;
pub mod units;
pub mod workflows;





