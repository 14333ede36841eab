#pragma once

namespace gammalase {

/// CODATA-2018 constants. Everything inside the library runs in natural
/// units with c = hbar = m_e = 1: energies and momenta in units of the
/// electron rest energy, lengths in units of the reduced Compton wavelength.
struct UnitSystem {
    double electron_mass_MeV;
    double compton_wavelength_m;   // reduced, hbar / (m_e c)
    double fine_structure;
    double hbar_c_MeV_nm;
    double speed_of_light_m_s;
    double electron_mass_kg;
    double elementary_charge_C;
};

inline constexpr UnitSystem codata2018{
    .electron_mass_MeV = 0.51099895000,
    .compton_wavelength_m = 3.8615926796e-13,
    .fine_structure = 7.2973525693e-3,
    .hbar_c_MeV_nm = 197.3269804e-6,
    .speed_of_light_m_s = 299792458.0,
    .electron_mass_kg = 9.1093837015e-31,
    .elementary_charge_C = 1.602176634e-19,
};

inline constexpr double pi = 3.14159265358979323846;

/// Energy in MeV -> natural energy (units of m_e c^2). Throws DomainError for
/// negative input.
double to_natural_energy(double energy_MeV);

/// Natural energy -> MeV.
double to_MeV(double natural_energy);

/// Photon energy in eV for a vacuum wavelength in metres.
double photon_energy_from_wavelength(double wavelength_m);

/// Vacuum wavelength in metres of a photon with the given natural energy.
double wavelength_from_natural_energy(double natural_energy);

/// Natural length (reduced Compton wavelengths) -> metres.
double to_metres(double natural_length);

/// Number density in m^-3 -> particles per reduced Compton volume.
double to_compton_density(double density_m3);

/// Particles per reduced Compton volume -> m^-3.
double to_si_density(double compton_density);

}  // namespace gammalase
