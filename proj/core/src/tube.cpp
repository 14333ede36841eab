#include "gammalase/tube.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <string>

#include "gammalase/constants.hpp"
#include "gammalase/errors.hpp"
#include "gammalase/kinematics.hpp"
#include "gammalase/numerics.hpp"

namespace gammalase {

namespace {

constexpr double joules_per_MeV = 1.602176634e-13;

std::vector<double> sample_grid(double length_m, int samples)
{
    if (samples < 2) {
        throw DomainError("tube profile needs at least two samples");
    }
    if (length_m == 0.0) {
        return {0.0};
    }
    std::vector<double> grid(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        grid[i] = length_m * i / (samples - 1);
    }
    grid.back() = length_m;
    return grid;
}

double reduced_position(double l_m, TubeConfig const& c)
{
    return c.gain * l_m / codata2018.compton_wavelength_m;
}

// Number of electrons converted by position x, n0 - n(x), evaluated without
// cancellation: (n0 - r2) (e^{-s x} - 1) / (e^{-s x} - q).
double converted(double x, double n0, double N0)
{
    if (n0 == 0.0 || x == 0.0) {
        return 0.0;
    }
    const SeededRoots r = seeded_roots(n0, N0);
    if (r.discriminant <= 0.0) {
        // Double root: 1/(n - r) = 1/(n0 - r) - 2x.
        const double d0 = n0 - r.r1;
        return d0 - d0 / (1.0 - 2.0 * x * d0);
    }
    const double s = std::sqrt(r.discriminant);
    const double q = (n0 - r.r2) / (n0 - r.r1);
    const double e = std::exp(-s * x);
    return (n0 - r.r2) * std::expm1(-s * x) / (e - q);
}

TubeSample make_sample(double l_m, double n0, double N0, double conv)
{
    TubeSample t;
    t.l_m = l_m;
    t.n_prime = conv;
    t.n = n0 - conv;
    t.N = N0 + conv;
    return t;
}

std::string soft_gamma_warning(double photon_energy)
{
    const double lambda_nm = wavelength_from_natural_energy(photon_energy) * 1e9;
    if (lambda_nm < 0.05 || lambda_nm > 1.0) {
        std::ostringstream msg;
        msg << std::setprecision(4) << lambda_nm;
        return "photon wavelength " + msg.str()
               + " nm lies outside the 0.05-1 nm range where Bragg reflection "
                 "of soft gamma rays is assumed";
    }
    return {};
}

}  // namespace

void TubeConfig::validate() const
{
    if (!(length_m >= 0.0) || !std::isfinite(length_m)) {
        throw DomainError("tube length must be finite and >= 0");
    }
    if (!(gain > 0.0) || !std::isfinite(gain)) {
        throw DomainError("gain coefficient a must be positive");
    }
    if (!(n0 >= 0.0) || !(N0 >= 0.0) || !std::isfinite(n0) || !std::isfinite(N0)) {
        throw DomainError("tube densities must be finite and >= 0");
    }
    if (sections < 1) {
        throw DomainError("tube needs at least one section");
    }
    if (!(reflection_efficiency >= 0.0 && reflection_efficiency <= 1.0)) {
        throw DomainError("reflection efficiency must lie in [0, 1]");
    }
}

GainCoefficient gain_coefficient(ElectronBeam const& beam, LaserField const& laser,
                                 EmissionOptions const& options)
{
    GainCoefficient g;
    g.solid_angle_sr = 1.0;
    g.a = averaged_cross_section(pi, beam, laser, 0, options).value * g.solid_angle_sr;
    if (!(g.a > 0.0)) {
        throw DomainError("forward cross section vanishes; no gain");
    }
    g.gain_length_m = codata2018.compton_wavelength_m / g.a;
    return g;
}

SeededRoots seeded_roots(double n0, double N0)
{
    const double B = 2.0 * N0 + 3.0 * n0 + 1.0;
    const double C = n0 * (n0 + N0);
    SeededRoots r;
    r.discriminant = B * B - 8.0 * C;
    if (r.discriminant < 0.0) {
        throw NumericError("negative discriminant in tube balance equation");
    }
    const double big = B + std::sqrt(r.discriminant);
    r.r2 = big / 4.0;
    r.r1 = 2.0 * C / big;
    return r;
}

double balance_rhs(double n, double n0, double N0)
{
    return 2.0 * n * n - (2.0 * N0 + 3.0 * n0 + 1.0) * n + n0 * (n0 + N0);
}

double analytic_asymptote(double n0)
{
    return 2.0 * n0 / (std::sqrt(n0 * n0 + 6.0 * n0 + 1.0) - n0 + 1.0);
}

double seeded_asymptote(double n0, double N0)
{
    return N0 + n0 - seeded_roots(n0, N0).r1;
}

TubeProfile evolve_analytic(TubeConfig const& config, int samples)
{
    if (config.N0 != 0.0) {
        throw DomainError("evolve_analytic requires an unseeded tube (N0 = 0)");
    }
    config.validate();
    const double n0 = config.n0;
    const double S = std::sqrt(n0 * n0 + 6.0 * n0 + 1.0);
    TubeProfile p;
    p.source = TubeSource::analytic;
    p.asymptote = analytic_asymptote(n0);
    for (double l : sample_grid(config.length_m, samples)) {
        const double sx = S * reduced_position(l, config);
        const double e = std::exp(-sx);
        // N = 2 n0 (1 - e) / (S - n0 + 1 + (S + n0 - 1) e)
        const double N
            = -2.0 * n0 * std::expm1(-sx) / (S - n0 + 1.0 + (S + n0 - 1.0) * e);
        p.samples.push_back(make_sample(l, n0, 0.0, N));
    }
    return p;
}

TubeProfile evolve_seeded(TubeConfig const& config, int samples)
{
    config.validate();
    TubeProfile p;
    p.source = TubeSource::analytic;
    p.asymptote = seeded_asymptote(config.n0, config.N0);
    for (double l : sample_grid(config.length_m, samples)) {
        const double x = reduced_position(l, config);
        p.samples.push_back(
            make_sample(l, config.n0, config.N0, converted(x, config.n0, config.N0)));
    }
    return p;
}

TubeProfile evolve_numeric(TubeConfig const& config, int samples,
                           int steps_per_interval)
{
    config.validate();
    if (steps_per_interval < 1) {
        throw DomainError("steps_per_interval must be >= 1");
    }
    const double n0 = config.n0;
    const double N0 = config.N0;
    // Integrate the converted count c = n0 - n, dc/dx = -rhs(n0 - c).
    auto rhs = [n0, N0](double, double c) { return -balance_rhs(n0 - c, n0, N0); };

    TubeProfile p;
    p.source = TubeSource::numeric;
    p.asymptote = seeded_asymptote(n0, N0);
    const std::vector<double> grid = sample_grid(config.length_m, samples);
    double c = 0.0;
    p.samples.push_back(make_sample(grid.front(), n0, N0, c));
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const auto path = integrate_ode(rhs, c, reduced_position(grid[i - 1], config),
                                        reduced_position(grid[i], config),
                                        steps_per_interval);
        c = path.back().y;
        p.samples.push_back(make_sample(grid[i], n0, N0, c));
    }
    return p;
}

double output_intensity(double photon_density_m3, double photon_energy)
{
    if (!(photon_density_m3 >= 0.0) || !(photon_energy >= 0.0)) {
        throw DomainError("output_intensity needs non-negative inputs");
    }
    return photon_density_m3 * to_MeV(photon_energy) * joules_per_MeV
           * codata2018.speed_of_light_m_s;
}

MultiSectionResult run_multi_section(ElectronBeam const& beam,
                                     LaserField const& laser,
                                     double section_length_m, int sections,
                                     double seed_density_m3, int samples,
                                     EmissionOptions const& options)
{
    if (sections < 1) {
        throw DomainError("multi-section tube needs at least one section");
    }
    MultiSectionResult r;
    r.gain = gain_coefficient(beam, laser, options);
    r.photon_energy = emitted_photon_energy(pi, 1, beam, laser);

    TubeConfig cfg;
    cfg.length_m = section_length_m;
    cfg.gain = r.gain.a;
    cfg.n0 = to_compton_density(beam.density_m3);
    cfg.N0 = to_compton_density(seed_density_m3);
    cfg.sections = sections;
    for (int j = 0; j < sections; ++j) {
        r.sections.push_back(evolve_seeded(cfg, samples));
        cfg.N0 = r.sections.back().final_photon_density();
    }
    r.final_density = cfg.N0;
    r.final_density_m3 = to_si_density(r.final_density);
    r.intensity_W_m2 = output_intensity(r.final_density_m3, r.photon_energy);

    r.half_rule_density_m3 = seed_density_m3 + 0.5 * sections * beam.density_m3;
    r.half_rule_intensity_W_m2 = output_intensity(r.half_rule_density_m3, r.photon_energy);

    if (auto w = density_warning(beam, laser)) {
        r.warnings.push_back(*w);
    }
    if (cfg.n0 > 0.0 && cfg.n0 < 1.0) {
        std::ostringstream msg;
        msg << std::scientific << std::setprecision(3) << cfg.n0;
        r.warnings.push_back(
            "electron density is " + msg.str()
            + " per Compton volume (<< 1); the exact asymptote converts nearly all "
              "electrons in each section while the half-density rule converts half");
    }
    return r;
}

CyclicResult run_cyclic(ElectronBeam const& beam, LaserField const& laser,
                        double section_length_m, int sections_per_cycle,
                        int cycles, double reflection_efficiency,
                        double seed_density_m3, EmissionOptions const& options)
{
    if (cycles < 1) {
        throw DomainError("cyclic intensifier needs at least one cycle");
    }
    if (!(reflection_efficiency >= 0.0 && reflection_efficiency <= 1.0)) {
        throw DomainError("reflection efficiency must lie in [0, 1]");
    }
    CyclicResult r;
    double seed = seed_density_m3;
    for (int c = 0; c < cycles; ++c) {
        const MultiSectionResult pass = run_multi_section(
            beam, laser, section_length_m, sections_per_cycle, seed, 2, options);
        r.cycle_density_m3.push_back(pass.final_density_m3);
        r.photon_energy = pass.photon_energy;
        if (c == 0) {
            r.warnings = pass.warnings;
        }
        seed = reflection_efficiency * pass.final_density_m3;
    }
    r.final_density_m3 = r.cycle_density_m3.back();
    r.intensity_W_m2 = output_intensity(r.final_density_m3, r.photon_energy);
    if (auto w = soft_gamma_warning(r.photon_energy); !w.empty()) {
        r.warnings.push_back(w);
    }
    return r;
}

}  // namespace gammalase
