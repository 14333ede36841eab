#include "gammalase/beamfield.hpp"

#include <cmath>
#include <sstream>

#include "gammalase/constants.hpp"
#include "gammalase/errors.hpp"

namespace gammalase {

double coherence_amplitude(double wavelength_m, double intensity_W_m2)
{
    if (!(wavelength_m > 0.0)) {
        throw DomainError("coherence_amplitude: wavelength must be positive");
    }
    if (!(intensity_W_m2 >= 0.0)) {
        throw DomainError("coherence_amplitude: intensity must be non-negative");
    }
    auto const& u = codata2018;
    const double mc3 = u.electron_mass_kg * u.speed_of_light_m_s
                       * u.speed_of_light_m_s * u.speed_of_light_m_s;
    return std::sqrt(u.fine_structure * u.compton_wavelength_m * wavelength_m
                     * wavelength_m * intensity_W_m2 / (pi * mc3));
}

LaserField make_laser(double wavelength_m, double intensity_W_m2)
{
    LaserField laser;
    laser.amplitude = coherence_amplitude(wavelength_m, intensity_W_m2);
    laser.wavelength_m = wavelength_m;
    laser.intensity_W_m2 = intensity_W_m2;
    laser.wave_number = 2.0 * pi * codata2018.compton_wavelength_m / wavelength_m;
    return laser;
}

ElectronBeam make_beam(double energy_MeV,
                       Direction direction,
                       Spin spin,
                       double density_m3)
{
    if (!(energy_MeV >= codata2018.electron_mass_MeV)) {
        std::ostringstream msg;
        msg << "make_beam: energy " << energy_MeV
            << " MeV is below the electron rest energy";
        throw DomainError(msg.str());
    }
    if (!(density_m3 >= 0.0)) {
        throw DomainError("make_beam: density must be non-negative");
    }
    ElectronBeam beam;
    beam.energy = energy_MeV / codata2018.electron_mass_MeV;
    const double e = beam.energy;
    const double p = std::sqrt((e - 1.0) * (e + 1.0));
    const double big = e + p;
    const double small = 1.0 / big;
    beam.direction = direction;
    if (direction == Direction::head_on) {
        beam.p_z = -p;
        beam.minus = big;
        beam.plus = small;
    } else {
        beam.p_z = p;
        beam.minus = small;
        beam.plus = big;
    }
    beam.spin = spin;
    beam.density_m3 = density_m3;
    return beam;
}

double critical_density(LaserField const& laser)
{
    const double force = laser.amplitude * laser.wave_number;
    if (!(force > 0.0)) {
        throw DomainError("critical_density: laser amplitude must be positive");
    }
    const double r_c = to_metres(std::sqrt(codata2018.fine_structure / force));
    return 1.0 / (r_c * r_c * r_c);
}

double photon_density_compton(LaserField const& laser)
{
    auto const& u = codata2018;
    const double photon_J = to_MeV(laser.wave_number) * 1.0e6
                            * u.elementary_charge_C;
    const double per_m3 = laser.intensity_W_m2 / (u.speed_of_light_m_s * photon_J);
    return to_compton_density(per_m3);
}

std::optional<std::string> density_warning(ElectronBeam const& beam,
                                           LaserField const& laser)
{
    if (laser.amplitude <= 0.0 || beam.density_m3 <= 0.0) {
        return std::nullopt;
    }
    const double limit = critical_density(laser) / 1.0e6;
    if (beam.density_m3 <= limit) {
        return std::nullopt;
    }
    std::ostringstream msg;
    msg << "beam density " << beam.density_m3
        << " m^-3 exceeds 1e-6 of the critical density ("
        << critical_density(laser)
        << " m^-3); space-charge effects are not modelled";
    return msg.str();
}

}  // namespace gammalase
