#pragma once

#include <cmath>
#include <optional>
#include <string>

namespace gammalase {

/// Circularly polarised plane-wave background laser propagating along +z.
///
/// `wave_number` is the photon energy in units of m_e (k = 2 pi lambda_c /
/// lambda) and `amplitude` is eA in units of m_e, fixed by the intensity
/// through the fully-coherent amplitude relation.
struct LaserField {
    double wavelength_m = 0.0;
    double intensity_W_m2 = 0.0;
    double wave_number = 0.0;
    double amplitude = 0.0;
};

enum class Direction {
    head_on,         // electron moves along -z, against the laser
    co_propagating,  // electron moves along +z
};

enum class Spin : int {
    down = -1,
    up = 1,
};

constexpr int sign(Spin s) { return static_cast<int>(s); }
constexpr Spin flipped(Spin s) { return s == Spin::up ? Spin::down : Spin::up; }

/// Collinear incident electron (p_perp = 0) on the positive-energy branch.
///
/// The light-cone components E - p_z and E + p_z are stored separately
/// because one of them is tiny for ultrarelativistic beams and recovering it
/// from E and p_z would cancel catastrophically.
struct ElectronBeam {
    double energy = 1.0;
    double p_z = 0.0;
    double minus = 1.0;  // E - p_z
    double plus = 1.0;   // E + p_z
    Spin spin = Spin::up;
    double density_m3 = 0.0;
    Direction direction = Direction::head_on;

    double speed() const { return energy > 0.0 ? std::abs(p_z) / energy : 0.0; }
};

/// eA in units of m_e for a fully coherent wave of given wavelength (m) and
/// intensity (W/m^2): eA = sqrt(alpha lambda_c lambda^2 I / (pi m c^3)).
double coherence_amplitude(double wavelength_m, double intensity_W_m2);

/// Laser from wavelength and intensity, with k and eA derived.
LaserField make_laser(double wavelength_m, double intensity_W_m2);

ElectronBeam make_beam(double energy_MeV,
                       Direction direction,
                       Spin spin = Spin::up,
                       double density_m3 = 0.0);

/// Density (m^-3) at which the Coulomb force between neighbouring beam
/// electrons, alpha / r^2, matches the laser force eA k.
double critical_density(LaserField const& laser);

/// Laser photons per reduced Compton volume, I / (c hbar omega) lambda_c^3.
double photon_density_compton(LaserField const& laser);

/// Non-fatal check that the beam stays six orders of magnitude below the
/// critical density. Returns a message when it does not.
std::optional<std::string> density_warning(ElectronBeam const& beam,
                                           LaserField const& laser);

}  // namespace gammalase
