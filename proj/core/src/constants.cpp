#include "gammalase/constants.hpp"

#include <cmath>
#include <string>

#include "gammalase/errors.hpp"

namespace gammalase {

namespace {
constexpr double eV_per_MeV = 1.0e6;
constexpr double metres_per_nm = 1.0e-9;
}  // namespace

double to_natural_energy(double energy_MeV)
{
    if (!(energy_MeV >= 0.0)) {
        throw DomainError("to_natural_energy: energy must be non-negative, got "
                          + std::to_string(energy_MeV) + " MeV");
    }
    return energy_MeV / codata2018.electron_mass_MeV;
}

double to_MeV(double natural_energy)
{
    return natural_energy * codata2018.electron_mass_MeV;
}

double photon_energy_from_wavelength(double wavelength_m)
{
    if (!(wavelength_m > 0.0)) {
        throw DomainError("photon_energy_from_wavelength: wavelength must be "
                          "positive");
    }
    if (std::isinf(wavelength_m)) {
        return 0.0;
    }
    const double hbar_c_eV_m
        = codata2018.hbar_c_MeV_nm * eV_per_MeV * metres_per_nm;
    return 2.0 * pi * hbar_c_eV_m / wavelength_m;
}

double wavelength_from_natural_energy(double natural_energy)
{
    if (!(natural_energy > 0.0)) {
        throw DomainError("wavelength_from_natural_energy: energy must be "
                          "positive");
    }
    return 2.0 * pi * codata2018.compton_wavelength_m / natural_energy;
}

double to_metres(double natural_length)
{
    return natural_length * codata2018.compton_wavelength_m;
}

double to_compton_density(double density_m3)
{
    const double lc = codata2018.compton_wavelength_m;
    return density_m3 * lc * lc * lc;
}

double to_si_density(double compton_density)
{
    const double lc = codata2018.compton_wavelength_m;
    return compton_density / (lc * lc * lc);
}

}  // namespace gammalase
