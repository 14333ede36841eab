#pragma once

#include <string>
#include <vector>

#include "gammalase/beamfield.hpp"
#include "gammalase/emission.hpp"

namespace gammalase {

/// One active tube section. Densities are particles per reduced Compton
/// volume; convert at the boundary with to_compton_density.
struct TubeConfig {
    double length_m = 0.0;
    double gain = 0.0;         // a, dimensionless
    double n0 = 0.0;           // fresh electrons entering the section
    double N0 = 0.0;           // seed photons
    int sections = 1;
    double reflection_efficiency = 1.0;

    /// Throws DomainError on L < 0, a <= 0, negative densities, sections < 1
    /// or an efficiency outside [0, 1].
    void validate() const;
};

struct TubeSample {
    double l_m = 0.0;
    double n = 0.0;        // unconverted electrons
    double n_prime = 0.0;  // electrons that have emitted
    double N = 0.0;        // photon density
};

enum class TubeSource { analytic, numeric };

struct TubeProfile {
    std::vector<TubeSample> samples;
    double asymptote = 0.0;  // N as l -> infinity
    TubeSource source = TubeSource::analytic;

    double final_photon_density() const
    {
        return samples.empty() ? 0.0 : samples.back().N;
    }
};

struct GainCoefficient {
    double a = 0.0;
    double gain_length_m = 0.0;  // lambda_c / a
    double solid_angle_sr = 1.0;
};

/// a = forward (theta = pi) spin-averaged cross section at zero occupation,
/// integrated over a unit solid angle.
GainCoefficient gain_coefficient(ElectronBeam const& beam, LaserField const& laser,
                                 EmissionOptions const& options = {});

/// Roots r1 <= r2 of 2 n^2 - (2 N0 + 3 n0 + 1) n + n0 (n0 + N0), with the
/// discriminant. r1 is the stable fixed point reached along the tube.
struct SeededRoots {
    double r1 = 0.0;
    double r2 = 0.0;
    double discriminant = 0.0;
};
SeededRoots seeded_roots(double n0, double N0);

/// Right-hand side dn/dx of the balance equation, x = a l / lambda_c.
double balance_rhs(double n, double n0, double N0);

/// 2 n0 / (sqrt(n0^2 + 6 n0 + 1) - n0 + 1).
double analytic_asymptote(double n0);

/// N0 + n0 - r1.
double seeded_asymptote(double n0, double N0);

/// Closed form for an unseeded section (N0 must be 0). `samples` points are
/// spread uniformly over [0, L]; a zero-length tube yields one sample.
TubeProfile evolve_analytic(TubeConfig const& config, int samples = 101);

/// Closed form with a photon seed.
TubeProfile evolve_seeded(TubeConfig const& config, int samples = 101);

/// RK4 integration of the same balance equation, used as an oracle.
TubeProfile evolve_numeric(TubeConfig const& config, int samples = 101,
                           int steps_per_interval = 200);

/// I = density * photon energy * c, in W/m^2 for a density in m^-3 and a
/// photon energy in natural units.
double output_intensity(double photon_density_m3, double photon_energy);

struct MultiSectionResult {
    std::vector<TubeProfile> sections;
    GainCoefficient gain;
    double photon_energy = 0.0;          // forward harmonic-1 k', natural units
    double final_density = 0.0;          // exact chain, Compton units
    double final_density_m3 = 0.0;
    double intensity_W_m2 = 0.0;         // exact chain
    double half_rule_density_m3 = 0.0;   // n0 / 2 per section
    double half_rule_intensity_W_m2 = 0.0;
    std::vector<std::string> warnings;
};

/// Chain of `sections` seeded sections. Each starts with fresh electrons at
/// the beam density and the previous section's photon output.
MultiSectionResult run_multi_section(ElectronBeam const& beam,
                                     LaserField const& laser,
                                     double section_length_m, int sections,
                                     double seed_density_m3 = 0.0,
                                     int samples = 101,
                                     EmissionOptions const& options = {});

struct CyclicResult {
    std::vector<double> cycle_density_m3;  // chain output of each cycle
    double final_density_m3 = 0.0;
    double intensity_W_m2 = 0.0;
    double photon_energy = 0.0;
    std::vector<std::string> warnings;
};

/// Repeats the linear chain `cycles` times. The photons leaving one cycle
/// are multiplied by `reflection_efficiency` and seed the next one.
CyclicResult run_cyclic(ElectronBeam const& beam, LaserField const& laser,
                        double section_length_m, int sections_per_cycle,
                        int cycles, double reflection_efficiency,
                        double seed_density_m3 = 0.0,
                        EmissionOptions const& options = {});

}  // namespace gammalase
