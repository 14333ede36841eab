#include "gammalase/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gammalase/constants.hpp"
#include "gammalase/errors.hpp"
#include "gammalase/numerics.hpp"

namespace gammalase {

namespace {

struct HalfAngle {
    double c2;  // cos^2(theta/2) = (1 + cos theta) / 2
    double s2;  // sin^2(theta/2) = (1 - cos theta) / 2
};

HalfAngle half_angle(double theta)
{
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    return {c * c, s * s};
}

void require_harmonic(int harmonic)
{
    if (harmonic < 1) {
        throw KinematicError("harmonic order " + std::to_string(harmonic)
                             + " is a closed emission channel");
    }
}

// E - p_z cos(theta) in light-cone form; no cancellation for either sign of p_z.
double longitudinal_denominator(ElectronBeam const& beam, HalfAngle const& h)
{
    return beam.minus * h.c2 + beam.plus * h.s2;
}

// (eA)^2 / (E - p_z), i.e. eA R k.
double amplitude_shift(ElectronBeam const& beam, LaserField const& laser)
{
    return laser.amplitude * laser.amplitude / beam.minus;
}

// Completes a bundle from k' using the light-cone identity and the mass shell.
EmissionKinematics complete(double theta, int harmonic, double k_prime,
                            ElectronBeam const& beam, LaserField const& laser,
                            double phi_k)
{
    const HalfAngle h = half_angle(theta);
    EmissionKinematics kin;
    kin.theta = theta;
    kin.harmonic = harmonic;
    kin.phi_k = phi_k;
    kin.k_prime = k_prime;
    kin.pperp_prime = k_prime * std::sin(theta);
    kin.minus_prime = beam.minus - 2.0 * k_prime * h.s2;
    if (!(kin.minus_prime > 0.0)) {
        throw KinematicError("final electron reaches the light cone");
    }
    kin.plus_prime = (1.0 + kin.pperp_prime * kin.pperp_prime) / kin.minus_prime;
    kin.E_prime = 0.5 * (kin.plus_prime + kin.minus_prime);
    kin.pz_prime = 0.5 * (kin.plus_prime - kin.minus_prime);
    kin.R = wiggling_radius_lc(beam.minus, laser);
    kin.R_prime = wiggling_radius_lc(kin.minus_prime, laser);
    return kin;
}

}  // namespace

double quasi_energy(int n, Spin sigma, double p_z, double p_perp,
                    LaserField const& laser)
{
    const double rest = 1.0 + p_perp * p_perp;
    const double E = std::sqrt(rest + p_z * p_z);
    const double minus = p_z > 0.0 ? rest / (E + p_z) : E - p_z;
    if (!(minus > 0.0)) {
        throw KinematicError("quasi_energy: state on the light cone");
    }
    const double eA = laser.amplitude;
    return E + eA * eA / (2.0 * minus)
           + (0.5 * sign(sigma) - n) * laser.wave_number;
}

double wiggling_radius_lc(double minus, LaserField const& laser)
{
    if (!(minus > 0.0)) {
        throw KinematicError("wiggling_radius: E - p_z must be positive");
    }
    if (laser.amplitude == 0.0) {
        return 0.0;
    }
    return laser.amplitude / (laser.wave_number * minus);
}

double wiggling_radius(double E, double p_z, LaserField const& laser)
{
    const double minus = p_z > 0.0 ? (E * E - p_z * p_z) / (E + p_z) : E - p_z;
    if (!(minus > 0.0)) {
        throw KinematicError("wiggling_radius: state on the light cone");
    }
    return wiggling_radius_lc(minus, laser);
}

double emitted_photon_energy(double theta, int harmonic,
                             ElectronBeam const& beam, LaserField const& laser)
{
    require_harmonic(harmonic);
    const HalfAngle h = half_angle(theta);
    const double nk = harmonic * laser.wave_number;
    const double drift = 0.5 * amplitude_shift(beam, laser);
    const double denom = longitudinal_denominator(beam, h)
                         + 2.0 * (nk + drift) * h.s2;
    if (!(denom > 0.0)) {
        throw KinematicError("emitted_photon_energy: vanishing denominator");
    }
    return nk * beam.minus / denom;
}

double compton_energy(double theta, ElectronBeam const& beam, double k)
{
    if (!(k >= 0.0)) {
        throw DomainError("compton_energy: photon energy must be non-negative");
    }
    const HalfAngle h = half_angle(theta);
    const double denom = longitudinal_denominator(beam, h) + 2.0 * k * h.s2;
    if (!(denom > 0.0)) {
        throw KinematicError("compton_energy: vanishing denominator");
    }
    return k * beam.minus / denom;
}

EmissionKinematics final_state(double theta, int harmonic,
                               ElectronBeam const& beam,
                               LaserField const& laser, double phi_k)
{
    const double k_prime = emitted_photon_energy(theta, harmonic, beam, laser);
    return complete(theta, harmonic, k_prime, beam, laser, phi_k);
}

EmissionKinematics solve_final_state(double theta, int harmonic,
                                     ElectronBeam const& beam,
                                     LaserField const& laser)
{
    require_harmonic(harmonic);
    const HalfAngle h = half_angle(theta);
    const double nk = harmonic * laser.wave_number;
    const double sin_theta = std::sin(theta);

    // Mass-shell residual (E' - p'_z)(E' + p'_z) - p'_perp^2 - 1 with
    //   E' - p'_z = (E - p_z) - k' (1 - cos theta)
    //   E' + p'_z = (E + p_z) + 2 N k - k' (1 + cos theta) - eA k (R' - R)
    // from the difference and sum of the two conservation rules. The
    // incoming shell (E - p_z)(E + p_z) = 1 is subtracted analytically so the
    // residual carries no O(1) cancellation when k' is tiny.
    auto residual = [&](double k_prime) {
        const double minus_p = beam.minus - 2.0 * k_prime * h.s2;
        // R' - R = eA (D - D') / (k D D') with D - D' = 2 k' s^2.
        const double dR = laser.amplitude * 2.0 * k_prime * h.s2
                          / (laser.wave_number * beam.minus * minus_p);
        const double d_plus = 2.0 * nk - 2.0 * k_prime * h.c2
                              - laser.amplitude * laser.wave_number * dR;
        const double plus_p = beam.plus + d_plus;
        const double pperp = k_prime * sin_theta;
        return beam.minus * d_plus - 2.0 * k_prime * h.s2 * plus_p - pperp * pperp;
    };

    // Largest emitted energy allowed by energy conservation, further capped so
    // the final electron stays off the light cone.
    double hi = beam.energy - 1.0 + nk;
    hi = std::max(hi, nk * beam.minus / beam.plus * (1.0 + 1e-6));
    if (h.s2 > 0.0) {
        hi = std::min(hi, beam.minus / (2.0 * h.s2) * (1.0 - 1e-12));
    }
    const double lo = std::numeric_limits<double>::min();

    double k_prime = 0.0;
    try {
        k_prime = find_root(residual, RootBracket{lo, hi, 1e-15});
    } catch (BracketError const&) {
        throw KinematicError("solve_final_state: no emission root below the "
                             "kinematic bound (closed channel)");
    }
    EmissionKinematics kin = complete(theta, harmonic, k_prime, beam, laser, 0.0);
    const double closed = emitted_photon_energy(theta, harmonic, beam, laser);
    kin.closed_form_discrepancy = std::fabs(k_prime - closed) / closed;
    return kin;
}

SelectionResiduals selection_residuals(EmissionKinematics const& kin,
                                       ElectronBeam const& beam,
                                       LaserField const& laser)
{
    const double nk = kin.harmonic * laser.wave_number;
    const double drift = 0.5 * laser.amplitude * laser.wave_number
                         * (kin.R_prime - kin.R);
    const double scale = std::max(beam.energy + nk, 1.0);
    const double momentum = kin.pz_prime - beam.p_z + drift
                            + kin.k_prime * std::cos(kin.theta) - nk;
    const double energy = kin.E_prime + kin.k_prime - beam.energy - nk + drift;
    return {momentum / scale, energy / scale};
}

double wavelength_shift(double theta, ElectronBeam const& beam,
                        LaserField const& radiation)
{
    const HalfAngle h = half_angle(theta);
    const double denom = longitudinal_denominator(beam, h)
                         + 2.0 * radiation.wave_number * h.s2;
    const double eA2 = radiation.amplitude * radiation.amplitude;
    return eA2 * h.s2 / (beam.minus * denom);
}

double coherent_intensity_from_shift(double measured_shift, double theta,
                                     ElectronBeam const& beam,
                                     double radiation_wavelength_m)
{
    if (!(measured_shift >= 0.0)) {
        throw DomainError("coherent_intensity_from_shift: shift must be "
                          "non-negative");
    }
    if (measured_shift == 0.0) {
        return 0.0;
    }
    // The shift is linear in intensity; evaluate the slope at a unit intensity.
    const LaserField unit = make_laser(radiation_wavelength_m, 1.0);
    const double slope = wavelength_shift(theta, beam, unit);
    if (!(slope > 0.0)) {
        throw DomainError("coherent_intensity_from_shift: the shift vanishes "
                          "identically at this angle");
    }
    return measured_shift / slope;
}

CoherenceProbe make_coherence_probe(ElectronBeam const& probe_beam,
                                    LaserField const& radiation, double theta)
{
    CoherenceProbe probe;
    probe.probe_beam = probe_beam;
    probe.radiation = radiation;
    probe.theta = theta;
    probe.shift = wavelength_shift(theta, probe_beam, radiation);
    const double k0 = compton_energy(theta, probe_beam, radiation.wave_number);
    probe.compton_wavelength_m = wavelength_from_natural_energy(k0);
    probe.shifted_wavelength_m = probe.compton_wavelength_m * (1.0 + probe.shift);
    return probe;
}

}  // namespace gammalase
