#pragma once

#include "gammalase/beamfield.hpp"

namespace gammalase {

/// Final state of a one-photon emission at polar angle theta (from +z) and
/// harmonic order N.
///
/// `minus_prime` and `plus_prime` are the light-cone components E' - p'_z
/// and E' + p'_z; the mass shell reads minus' plus' = 1 + p'_perp^2.
struct EmissionKinematics {
    double theta = 0.0;
    int harmonic = 1;
    double k_prime = 0.0;
    double E_prime = 1.0;
    double pz_prime = 0.0;
    double pperp_prime = 0.0;
    double minus_prime = 1.0;
    double plus_prime = 1.0;
    double R = 0.0;
    double R_prime = 0.0;
    double phi_k = 0.0;
    /// |k'_root - k'_closed| / k'_closed; zero when built from the closed form.
    double closed_form_discrepancy = 0.0;
};

/// Quasi-energy of the laser-dressed electron state with ladder index n:
/// E + (eA)^2 / (2 (E - p_z)) + (sigma/2 - n) k, with E = sqrt(1 + p^2).
/// Throws KinematicError on the light cone E = p_z.
double quasi_energy(int n, Spin sigma, double p_z, double p_perp,
                    LaserField const& laser);

/// Wiggling radius eA / (k (E - p_z)) in reduced Compton wavelengths.
double wiggling_radius(double E, double p_z, LaserField const& laser);

/// Same, from an already-known light-cone component E - p_z.
double wiggling_radius_lc(double minus, LaserField const& laser);

/// Closed-form emitted photon energy for harmonic N at angle theta:
///   k' = N k (E - p_z) / (E + N k + s - (p_z + N k + s) cos theta),
/// with s = (eA)^2 / (2 (E - p_z)). Throws KinematicError for N < 1.
double emitted_photon_energy(double theta, int harmonic,
                             ElectronBeam const& beam, LaserField const& laser);

/// Compton backscatter energy off the same beam with no coherent amplitude:
///   k'_0 = k (E - p_z) / (E + k - (p_z + k) cos theta).
double compton_energy(double theta, ElectronBeam const& beam, double k);

/// Final-state bundle built from the closed-form photon energy.
EmissionKinematics final_state(double theta, int harmonic,
                               ElectronBeam const& beam,
                               LaserField const& laser, double phi_k = 0.0);

/// Final state found by bracketed root-finding on the mass-shell residual of
/// the quasi-momentum and quasi-energy conservation rules, with R' evaluated
/// self-consistently. Independent of the closed form, which it cross-checks
/// through `closed_form_discrepancy`. Throws KinematicError when no root
/// exists below the kinematic bound.
EmissionKinematics solve_final_state(double theta, int harmonic,
                                     ElectronBeam const& beam,
                                     LaserField const& laser);

/// Residuals of the two conservation rules (z-momentum, energy) for a final
/// state, relative to the incoming energy scale.
struct SelectionResiduals {
    double momentum;
    double energy;
};
SelectionResiduals selection_residuals(EmissionKinematics const& kin,
                                       ElectronBeam const& beam,
                                       LaserField const& laser);

/// Relative wavelength shift (lambda' - lambda'_0) / lambda'_0 of harmonic-1
/// emission caused by a nonzero coherent amplitude of `radiation`:
///   (eA sin(theta/2))^2 / ((E - p_z) (E + k - (p_z + k) cos theta)).
double wavelength_shift(double theta, ElectronBeam const& beam,
                        LaserField const& radiation);

/// Inverse of wavelength_shift: the coherent intensity (W/m^2) of radiation
/// with the given wavelength that produces `measured_shift`.
double coherent_intensity_from_shift(double measured_shift, double theta,
                                     ElectronBeam const& beam,
                                     double radiation_wavelength_m);

/// A probe beam sent through radiation under test.
struct CoherenceProbe {
    ElectronBeam probe_beam;
    LaserField radiation;
    double theta = 0.0;
    double shift = 0.0;
    double compton_wavelength_m = 0.0;  // lambda'_0
    double shifted_wavelength_m = 0.0;  // lambda'
};

CoherenceProbe make_coherence_probe(ElectronBeam const& probe_beam,
                                    LaserField const& radiation, double theta);

}  // namespace gammalase
