//! Physical constants and the KRb unit anchors.
//!
//! The library works in reduced units (B, B/d, d, oscillator lengths); this
//! module holds the single set of conversions to SI.

/// Planck constant [J s].
pub const H_PLANCK: f64 = 6.62607015e-34;
/// Reduced Planck constant [J s].
pub const HBAR: f64 = 1.054571817e-34;
/// Boltzmann constant [J/K].
pub const K_BOLTZMANN: f64 = 1.380649e-23;
/// Vacuum permittivity [F/m].
pub const EPSILON_0: f64 = 8.8541878128e-12;
/// Atomic mass unit [kg].
pub const AMU: f64 = 1.66053906660e-27;
/// Bohr radius [m].
pub const BOHR_RADIUS: f64 = 5.29177210903e-11;
/// 1 Debye [C m].
pub const DEBYE: f64 = 3.33564e-30;

/// KRb rotational constant B/h [Hz].
pub const KRB_B_HZ: f64 = 1.114e9;
/// KRb permanent dipole moment [Debye].
pub const KRB_D_DEBYE: f64 = 0.566;
/// KRb molecular mass [kg] (40K 87Rb).
pub const KRB_MASS: f64 = 126.9 * AMU;
/// KRb s-wave scattering length for reactive g-e collisions, 118 a0 [m].
pub const KRB_A_SC: f64 = 118.0 * BOHR_RADIUS;

/// KRb dipole moment [C m].
pub fn krb_dipole_si() -> f64 {
    KRB_D_DEBYE * DEBYE
}

/// The field unit B/d for KRb, in V/cm.
pub fn krb_field_unit_v_per_cm() -> f64 {
    H_PLANCK * KRB_B_HZ / krb_dipole_si() / 100.0
}

/// d^2/(4 pi eps0) for KRb [J m^3].
pub fn krb_d2_over_4pieps0() -> f64 {
    let d = krb_dipole_si();
    d * d / (4.0 * std::f64::consts::PI * EPSILON_0)
}

/// Interaction energy unit d^2/(4 pi eps0 a_perp^3) in Hz (cyclic), for a
/// given in-plane oscillator length [m].
pub fn interaction_unit_hz(a_perp: f64) -> f64 {
    krb_d2_over_4pieps0() / (a_perp * a_perp * a_perp) / H_PLANCK
}

/// Same unit expressed as angular frequency [rad/s].
pub fn interaction_unit_rad(a_perp: f64) -> f64 {
    2.0 * std::f64::consts::PI * interaction_unit_hz(a_perp)
}

/// Oscillator length sqrt(hbar/(m omega)) for angular frequency omega [rad/s].
pub fn oscillator_length(mass: f64, omega: f64) -> f64 {
    (HBAR / (mass * omega)).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_unit_matches_krb_anchor() {
        // B/d = 3.9 kV/cm for KRb
        let f = krb_field_unit_v_per_cm();
        assert!((f - 3900.0).abs() / 3900.0 < 0.01, "B/d = {f} V/cm");
    }

    #[test]
    fn interaction_unit_scale() {
        // omega = 2 pi * 50 Hz trap: a_perp ~ 1.26 um, unit ~ 24 Hz
        let a = oscillator_length(KRB_MASS, 2.0 * std::f64::consts::PI * 50.0);
        assert!((a - 1.26e-6).abs() < 0.02e-6, "a_perp = {a}");
        let u = interaction_unit_hz(a);
        assert!((u - 24.0).abs() < 1.5, "unit = {u} Hz");
    }
}
