#include "gammalase/emission.hpp"

#include <cmath>
#include <string>

#include "gammalase/constants.hpp"
#include "gammalase/errors.hpp"
#include "gammalase/parallel.hpp"

namespace gammalase {

namespace {

constexpr std::array<Spin, 2> both_spins{Spin::up, Spin::down};

struct BasisComponents {
    Complex c1;
    Complex c2;
};

BasisComponents components(CVec3 const& v, PolarizationBasis const& b)
{
    return {cdot(b.e1, v), cdot(b.e2, v)};
}

double selected_modulus(CVec3 const& v, PolarizationBasis const& b,
                        PolarizationSelector const& sel)
{
    using Kind = PolarizationSelector::Kind;
    const BasisComponents c = components(v, b);
    switch (sel.kind) {
    case Kind::basis: return std::norm(sel.basis_index == 1 ? c.c1 : c.c2);
    case Kind::arbitrary:
        return std::norm(std::conj(sel.c1) * c.c1 + std::conj(sel.c2) * c.c2);
    case Kind::summed: break;
    }
    return std::norm(c.c1) + std::norm(c.c2);
}

// Sums term(kin) over harmonics with the adaptive stopping rule.
template <class Term>
std::pair<double, int> harmonic_sum(double theta, ElectronBeam const& beam,
                                    LaserField const& laser,
                                    EmissionOptions const& options, Term&& term)
{
    if (options.harmonic_max < 1) {
        throw DomainError("harmonic_max must be >= 1");
    }
    double total = 0.0;
    int used = 0;
    for (int n = 1; n <= options.harmonic_max; ++n) {
        const EmissionKinematics kin
            = final_state(theta, n, beam, laser, options.phi_k);
        const double t = term(kin);
        total += t;
        used = n;
        if (total > 0.0 && t <= options.relative_cutoff * total) {
            break;
        }
    }
    return {total, used};
}

void require_basis_index(int i)
{
    if (i != 1 && i != 2) {
        throw DomainError("basis polarisation index must be 1 or 2, got "
                          + std::to_string(i));
    }
}

}  // namespace

PolarizationSelector PolarizationSelector::basis(int i)
{
    require_basis_index(i);
    PolarizationSelector s;
    s.kind = Kind::basis;
    s.basis_index = i;
    return s;
}

PolarizationSelector PolarizationSelector::arbitrary(Complex c1, Complex c2)
{
    const double n2 = std::norm(c1) + std::norm(c2);
    if (std::fabs(n2 - 1.0) > 1e-12) {
        throw DomainError("arbitrary polarisation must satisfy |c1|^2 + |c2|^2 = 1");
    }
    PolarizationSelector s;
    s.kind = Kind::arbitrary;
    s.c1 = c1;
    s.c2 = c2;
    return s;
}

PolarizationSelector PolarizationSelector::summed()
{
    return PolarizationSelector{};
}

double cross_section_prefactor(EmissionKinematics const& kin,
                               ElectronBeam const& beam, LaserField const& laser)
{
    constexpr double m = 1.0;
    const double alpha = codata2018.fine_structure;
    const double denom = 8.0 * pi * m * kin.harmonic * laser.wave_number
                         * std::fabs(beam.p_z) * beam.minus * (beam.energy + m)
                         * (kin.E_prime + m);
    if (!(denom > 0.0)) {
        throw KinematicError("cross section undefined for a beam at rest or a "
                             "vanishing laser frequency");
    }
    return alpha * kin.k_prime * kin.k_prime / denom;
}

double rate_prefactor(EmissionKinematics const& kin, ElectronBeam const& beam,
                      LaserField const& laser)
{
    constexpr double m = 1.0;
    const double alpha = codata2018.fine_structure;
    const double two_pi_cubed = 8.0 * pi * pi * pi;
    const double spinor = 4.0 * beam.energy * kin.E_prime * (beam.energy + m)
                          * (kin.E_prime + m);
    const double flux = kin.E_prime * kin.k_prime
                        / (kin.harmonic * laser.wave_number * beam.minus);
    return alpha * kin.k_prime / two_pi_cubed / spinor * flux;
}

double transition_rate_density(double theta, ElectronBeam const& beam,
                               LaserField const& laser, Spin sigma,
                               Spin sigma_prime, int basis_index,
                               unsigned photon_occupation,
                               EmissionOptions const& options)
{
    const auto selector = PolarizationSelector::basis(basis_index);
    const bool keep = sigma == sigma_prime;
    auto term = [&](EmissionKinematics const& kin) {
        const HarmonicVectors h = harmonic_vectors(kin, beam, laser, sigma);
        const PolarizationBasis b = polarization_basis(kin.theta, kin.phi_k);
        return rate_prefactor(kin, beam, laser)
               * selected_modulus(keep ? h.script_F : h.script_G, b, selector);
    };
    const auto [value, used] = harmonic_sum(theta, beam, laser, options, term);
    (void)used;
    return (photon_occupation + 1.0) * value;
}

CrossSectionPoint diff_cross_section(double theta, ElectronBeam const& beam,
                                     LaserField const& laser, Spin sigma,
                                     Spin sigma_prime,
                                     PolarizationSelector const& selector,
                                     unsigned photon_occupation,
                                     EmissionOptions const& options)
{
    const bool keep = sigma == sigma_prime;
    auto term = [&](EmissionKinematics const& kin) {
        const HarmonicVectors h = harmonic_vectors(kin, beam, laser, sigma);
        const PolarizationBasis b = polarization_basis(kin.theta, kin.phi_k);
        return cross_section_prefactor(kin, beam, laser)
               * selected_modulus(keep ? h.script_F : h.script_G, b, selector);
    };
    const auto [value, used] = harmonic_sum(theta, beam, laser, options, term);

    CrossSectionPoint p;
    p.theta = theta;
    p.harmonics_used = used;
    p.value = (photon_occupation + 1.0) * value;
    p.photon_occupation = photon_occupation;
    using Kind = PolarizationSelector::Kind;
    p.channel = selector.kind == Kind::basis       ? CrossSectionChannel::basis
                : selector.kind == Kind::arbitrary ? CrossSectionChannel::polarized
                                                   : CrossSectionChannel::summed;
    return p;
}

CrossSectionPoint averaged_cross_section(double theta, ElectronBeam const& beam,
                                         LaserField const& laser,
                                         unsigned photon_occupation,
                                         EmissionOptions const& options)
{
    if (!(theta >= 0.0 && theta <= pi)) {
        throw DomainError("averaged_cross_section: theta must lie in [0, pi]");
    }
    auto term = [&](EmissionKinematics const& kin) {
        double sum = 0.0;
        for (Spin sigma : both_spins) {
            const HarmonicVectors h = harmonic_vectors(kin, beam, laser, sigma);
            sum += h.norm_F * h.norm_F + h.norm_G * h.norm_G;
        }
        return 0.5 * cross_section_prefactor(kin, beam, laser) * sum;
    };
    const auto [value, used] = harmonic_sum(theta, beam, laser, options, term);

    CrossSectionPoint p;
    p.theta = theta;
    p.harmonics_used = used;
    p.value = (photon_occupation + 1.0) * value;
    p.channel = CrossSectionChannel::spin_averaged;
    p.photon_occupation = photon_occupation;
    return p;
}

std::optional<CVec3> emitted_polarization(double theta, ElectronBeam const& beam,
                                          LaserField const& laser, double phi_k)
{
    const EmissionKinematics kin = final_state(theta, 1, beam, laser, phi_k);
    const PolarizationBasis b = polarization_basis(theta, phi_k);

    // 2x2 density matrix in the (e'_1, e'_2) basis. The harmonic prefactor is
    // common to all channels and drops out of the eigenvector.
    double r11 = 0.0;
    double r22 = 0.0;
    Complex r12{};
    auto accumulate = [&](CVec3 const& v) {
        const BasisComponents c = components(v, b);
        r11 += std::norm(c.c1);
        r22 += std::norm(c.c2);
        r12 += c.c1 * std::conj(c.c2);
    };
    for (Spin sigma : both_spins) {
        const HarmonicVectors h = harmonic_vectors(kin, beam, laser, sigma);
        accumulate(h.script_F);
        accumulate(h.script_G);
    }
    const double trace = r11 + r22;
    if (!(trace > 0.0)) {
        return std::nullopt;
    }
    const double half_gap = 0.5 * (r11 - r22);
    const double lambda = 0.5 * trace + std::hypot(half_gap, std::abs(r12));
    Complex u1;
    Complex u2;
    if (std::abs(r12) <= 1e-300) {
        u1 = r11 >= r22 ? 1.0 : 0.0;
        u2 = r11 >= r22 ? 0.0 : 1.0;
    } else if (r11 >= r22) {
        // (rho - lambda) u = 0 -> u = (lambda - r22, conj(r12))
        u1 = lambda - r22;
        u2 = std::conj(r12);
    } else {
        u1 = r12;
        u2 = lambda - r11;
    }
    const CVec3 v = u1 * b.e1 + u2 * b.e2;
    return phase_fixed_unit(v);
}

std::vector<double> uniform_theta_grid(int points)
{
    if (points < 1) {
        throw DomainError("theta grid needs at least one point");
    }
    std::vector<double> grid(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        grid[i] = points == 1 ? 0.0 : pi * i / (points - 1);
    }
    return grid;
}

AngularSpectrum angular_spectrum(ElectronBeam const& beam,
                                 LaserField const& laser,
                                 std::vector<double> const& theta_grid,
                                 unsigned photon_occupation,
                                 EmissionOptions const& options,
                                 unsigned workers)
{
    for (std::size_t i = 0; i < theta_grid.size(); ++i) {
        const double t = theta_grid[i];
        if (!(t >= 0.0 && t <= pi) || (i > 0 && !(t > theta_grid[i - 1]))) {
            throw DomainError("angular_spectrum: theta grid must be strictly "
                              "increasing inside [0, pi]");
        }
    }
    AngularSpectrum spectrum;
    spectrum.beam = beam;
    spectrum.laser = laser;
    spectrum.options = options;
    spectrum.photon_occupation = photon_occupation;
    spectrum.rows = parallel_map(theta_grid.size(), workers, [&](std::size_t i) {
        const double theta = theta_grid[i];
        AngularRow row;
        row.theta = theta;
        row.k_prime = emitted_photon_energy(theta, 1, beam, laser);
        row.averaged_xsec
            = averaged_cross_section(theta, beam, laser, photon_occupation, options)
                  .value;
        if (auto pol = emitted_polarization(theta, beam, laser, options.phi_k)) {
            row.polarization = *pol;
        }
        return row;
    });
    return spectrum;
}

double klein_nishina_ratio(double theta, ElectronBeam const& beam,
                           LaserField const& laser, EmissionOptions const& options)
{
    const double averaged = averaged_cross_section(theta, beam, laser, 0, options).value;
    const double reference = klein_nishina_reference(theta, beam, laser.wave_number)
                             * photon_density_compton(laser);
    if (!(reference > 0.0)) {
        throw DomainError("klein_nishina_ratio: reference vanishes");
    }
    return averaged / reference;
}

}  // namespace gammalase
