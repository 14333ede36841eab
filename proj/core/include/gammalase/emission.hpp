#pragma once

#include <optional>
#include <vector>

#include "gammalase/amplitudes.hpp"
#include "gammalase/beamfield.hpp"
#include "gammalase/kinematics.hpp"

namespace gammalase {

/// Harmonic-sum truncation: sum N = 1, 2, ... and stop once a term adds less
/// than `relative_cutoff` of the running total, or at `harmonic_max`.
struct EmissionOptions {
    int harmonic_max = 8;
    double relative_cutoff = 1e-14;
    double phi_k = 0.0;
};

/// Which outgoing-photon polarisation a cross section refers to.
struct PolarizationSelector {
    enum class Kind { basis, arbitrary, summed };
    Kind kind = Kind::summed;
    int basis_index = 1;        // for Kind::basis, 1 or 2
    Complex c1{1.0, 0.0};       // for Kind::arbitrary: e' = c1 e'_1 + c2 e'_2
    Complex c2{0.0, 0.0};

    static PolarizationSelector basis(int i);
    /// Throws DomainError unless |c1|^2 + |c2|^2 = 1 within 1e-12.
    static PolarizationSelector arbitrary(Complex c1, Complex c2);
    static PolarizationSelector summed();
};

enum class CrossSectionChannel { basis, polarized, summed, spin_averaged };

/// Differential cross section dSigma/dOmega in units of m_e^-2 per
/// steradian, for a slab of laser of one reduced Compton volume.
struct CrossSectionPoint {
    double theta = 0.0;
    int harmonics_used = 0;
    double value = 0.0;
    CrossSectionChannel channel = CrossSectionChannel::spin_averaged;
    unsigned photon_occupation = 0;
};

/// Cross-section prefactor for one harmonic at N_occ = 0:
///   alpha k'^2 / (8 pi m N k |p_z| (E - p_z) (E + m) (E' + m)).
double cross_section_prefactor(EmissionKinematics const& kin,
                               ElectronBeam const& beam, LaserField const& laser);

/// Transition-rate prefactor for one harmonic at N_occ = 0:
///   alpha k' / (2 pi)^3 / (4 E E' (E + m)(E' + m)) * E' k' / (N k (E - p_z)).
double rate_prefactor(EmissionKinematics const& kin, ElectronBeam const& beam,
                      LaserField const& laser);

/// Emission probability per unit time, volume and solid angle into basis
/// polarisation i (1 or 2) for the spin transition sigma -> sigma', summed
/// over harmonics. Scales with (N_occ + 1) for stimulated emission.
double transition_rate_density(double theta, ElectronBeam const& beam,
                               LaserField const& laser, Spin sigma,
                               Spin sigma_prime, int basis_index,
                               unsigned photon_occupation,
                               EmissionOptions const& options = {});

/// Polarised differential cross section for the spin transition
/// sigma -> sigma', summed over harmonics.
CrossSectionPoint diff_cross_section(double theta, ElectronBeam const& beam,
                                     LaserField const& laser, Spin sigma,
                                     Spin sigma_prime,
                                     PolarizationSelector const& selector,
                                     unsigned photon_occupation,
                                     EmissionOptions const& options = {});

/// Cross section for an unpolarised beam with outgoing spins unobserved:
/// one half of the sum over basis polarisations and both spins in and out.
CrossSectionPoint averaged_cross_section(double theta, ElectronBeam const& beam,
                                         LaserField const& laser,
                                         unsigned photon_occupation,
                                         EmissionOptions const& options = {});

/// Dominant polarisation of the harmonic-1 photon emitted at theta by an
/// unpolarised beam: principal eigenvector of the channel-weighted
/// polarisation density matrix, phase-fixed. Returns nullopt where the
/// emission vanishes.
std::optional<CVec3> emitted_polarization(double theta, ElectronBeam const& beam,
                                          LaserField const& laser,
                                          double phi_k = 0.0);

struct AngularRow {
    double theta = 0.0;
    double k_prime = 0.0;          // harmonic 1, natural units
    double averaged_xsec = 0.0;
    CVec3 polarization{};          // zero vector where emission vanishes
};

struct AngularSpectrum {
    std::vector<AngularRow> rows;
    ElectronBeam beam;
    LaserField laser;
    EmissionOptions options;
    unsigned photon_occupation = 0;
};

/// Per-angle harmonic-1 energy, averaged cross section and polarisation.
/// Throws DomainError unless the grid is strictly increasing inside [0, pi].
/// The result is identical for every worker count.
AngularSpectrum angular_spectrum(ElectronBeam const& beam,
                                 LaserField const& laser,
                                 std::vector<double> const& theta_grid,
                                 unsigned photon_occupation,
                                 EmissionOptions const& options = {},
                                 unsigned workers = 1);

/// Uniform grid of `points` angles with theta/pi in [0, 1]; a single point
/// sits at theta = 0.
std::vector<double> uniform_theta_grid(int points);

/// Klein-Nishina dsigma/dOmega (units of m_e^-2) in the electron rest frame
/// for incident photon energy omega and scattering cosine cos_scatter.
double klein_nishina_rest(double omega, double cos_scatter);

/// Lab-frame Klein-Nishina dsigma/dOmega' for a laser photon of energy k
/// along +z hitting a collinear electron beam, at lab angle theta of the
/// outgoing photon. Composes the rest-frame formula with the exact boost of
/// angles and energies along z.
double klein_nishina_reference(double theta, ElectronBeam const& beam, double k);

/// Averaged cross section divided by the Klein-Nishina reference times the
/// laser photon count per reduced Compton volume.
double klein_nishina_ratio(double theta, ElectronBeam const& beam,
                           LaserField const& laser,
                           EmissionOptions const& options = {});

}  // namespace gammalase
