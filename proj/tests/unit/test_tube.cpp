#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gammalase/constants.hpp"
#include "gammalase/errors.hpp"
#include "gammalase/numerics.hpp"
#include "gammalase/tube.hpp"
#include "scenarios.hpp"

using namespace gammalase;
using namespace gammalase::testing;

namespace {

// Config whose full length corresponds to a l / lambda_c = x.
TubeConfig reduced(double n0, double N0, double x)
{
    TubeConfig c;
    c.gain = 1.0;
    c.n0 = n0;
    c.N0 = N0;
    c.length_m = x * codata2018.compton_wavelength_m;
    return c;
}

double profile_gap(TubeProfile const& a, TubeProfile const& b, double scale)
{
    double m = 0.0;
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        m = std::max(m, std::fabs(a.samples[i].N - b.samples[i].N) / scale);
        m = std::max(m, std::fabs(a.samples[i].n - b.samples[i].n) / scale);
    }
    return m;
}

}  // namespace

TEST(TubeConfig, Validation)
{
    TubeConfig c = reduced(1.0, 0.0, 1.0);
    EXPECT_NO_THROW(c.validate());
    c.gain = 0.0;
    EXPECT_THROW(c.validate(), DomainError);
    c = reduced(-1.0, 0.0, 1.0);
    EXPECT_THROW(c.validate(), DomainError);
    c = reduced(1.0, 0.0, 1.0);
    c.reflection_efficiency = 1.5;
    EXPECT_THROW(c.validate(), DomainError);
}

TEST(Analytic, InitialConditions)
{
    const TubeProfile p = evolve_analytic(reduced(0.7, 0.0, 5.0));
    EXPECT_EQ(p.samples.front().n, 0.7);
    EXPECT_EQ(p.samples.front().n_prime, 0.0);
    EXPECT_EQ(p.samples.front().N, 0.0);
}

TEST(Analytic, RequiresUnseededTube)
{
    EXPECT_THROW(evolve_analytic(reduced(1.0, 0.1, 1.0)), DomainError);
}

TEST(Analytic, DenseBeamSaturatesAtHalfDensity)
{
    for (double n0 : {1e4, 1e6, 1e8}) {
        EXPECT_NEAR(analytic_asymptote(n0) / n0, 0.5, 2.0 / n0);
    }
}

TEST(Analytic, DiluteBeamConvertsNearlyEverything)
{
    EXPECT_NEAR(analytic_asymptote(5.76e-20) / 5.76e-20, 1.0, 1e-15);
}

TEST(Analytic, MatchesRungeKutta)
{
    const TubeConfig c = reduced(1.0, 0.0, 10.0);
    EXPECT_LT(profile_gap(evolve_analytic(c), evolve_numeric(c), 1.0), 1e-8);
}

TEST(Seeded, ReducesToUnseededForm)
{
    for (double n0 : {1e-6, 0.3, 1.0, 7.0}) {
        const TubeConfig c = reduced(n0, 0.0, 3.0);
        EXPECT_LT(profile_gap(evolve_seeded(c), evolve_analytic(c), n0), 1e-12);
    }
}

TEST(Seeded, MatchesRungeKutta)
{
    const TubeConfig c = reduced(1.0, 0.5, 10.0);
    EXPECT_LT(profile_gap(evolve_seeded(c), evolve_numeric(c), 1.5), 1e-8);
}

TEST(Seeded, RandomSweepAgainstRungeKutta)
{
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> logd(std::log(1e-6), std::log(10.0));
    std::uniform_real_distribution<double> xs(0.1, 50.0);
    for (int i = 0; i < 20; ++i) {
        const TubeConfig c = reduced(std::exp(logd(rng)), std::exp(logd(rng)), xs(rng));
        const double scale = c.n0 + c.N0;
        EXPECT_LT(profile_gap(evolve_seeded(c), evolve_numeric(c, 101, 400), scale), 1e-8)
            << "n0=" << c.n0 << " N0=" << c.N0;
    }
}

TEST(Seeded, ConservationAndMonotonicity)
{
    const TubeConfig c = reduced(2.0, 0.4, 8.0);
    const TubeProfile p = evolve_seeded(c);
    double prev_n = c.n0;
    double prev_gap = 1e300;
    for (auto const& s : p.samples) {
        EXPECT_NEAR(s.n + s.N, c.n0 + c.N0, 1e-10);
        EXPECT_NEAR(s.n + s.n_prime, c.n0, 1e-10);
        EXPECT_LE(s.n, prev_n);
        EXPECT_GE(s.n, 0.0);
        const double gap = std::fabs(s.N - p.asymptote);
        EXPECT_LE(gap, prev_gap);
        prev_n = s.n;
        prev_gap = gap;
    }
}

TEST(Seeded, AsymptoteReachedFarDownTheTube)
{
    for (double n0 : {0.1, 1.0, 10.0}) {
        const TubeProfile p = evolve_seeded(reduced(n0, 0.2, 50.0));
        EXPECT_LT(std::fabs(p.final_photon_density() - p.asymptote), 1e-15 * n0);
    }
}

TEST(Seeded, FixedPointIsStationary)
{
    const double n0 = 1.3;
    const double N0 = 0.4;
    const SeededRoots r = seeded_roots(n0, N0);
    EXPECT_NEAR(balance_rhs(r.r1, n0, N0), 0.0, 1e-14);
    EXPECT_NEAR(balance_rhs(r.r2, n0, N0), 0.0, 1e-14);
    EXPECT_LT(r.r1, n0);
    EXPECT_GT(r.r2, n0);
    const auto path = integrate_ode(
        [&](double, double n) { return balance_rhs(n, n0, N0); }, r.r1, 0.0, 20.0, 200);
    for (auto const& s : path) {
        EXPECT_NEAR(s.y, r.r1, 1e-14);
    }
}

TEST(Seeded, ZeroLengthTubeHasNoPhotons)
{
    const TubeProfile p = evolve_seeded(reduced(1.0, 0.0, 0.0));
    ASSERT_EQ(p.samples.size(), 1u);
    EXPECT_EQ(p.samples.front().N, 0.0);
}

TEST(Seeded, EmptyBeamLeavesSeedUntouched)
{
    const TubeProfile p = evolve_seeded(reduced(0.0, 0.3, 5.0));
    EXPECT_EQ(p.final_photon_density(), 0.3);
}

TEST(OutputIntensity, Arithmetic)
{
    const double k = to_natural_energy(2.28);
    EXPECT_NEAR(output_intensity(0.5e18, k) / 5.5e13, 1.0, 0.01);
    EXPECT_EQ(output_intensity(0.0, k), 0.0);
    EXPECT_THROW(output_intensity(-1.0, k), DomainError);
}

TEST(Gain, GainLengthNearThreeHundredNanometres)
{
    const GainCoefficient g = gain_coefficient(beam_307(), reference_laser());
    EXPECT_GT(g.gain_length_m, 337e-9 / 2.0);
    EXPECT_LT(g.gain_length_m, 337e-9 * 2.0);
    EXPECT_EQ(g.solid_angle_sr, 1.0);
}

TEST(Gain, TracksKleinNishinaAcrossIntensity)
{
    const ElectronBeam b = beam_307();
    auto normalized = [&](double I) {
        const LaserField l = make_laser(785e-9, I);
        return gain_coefficient(b, l).a
               / (klein_nishina_reference(pi, b, l.wave_number) * photon_density_compton(l));
    };
    EXPECT_LT(rel_diff(normalized(1e15), normalized(1e17)), 0.02);
}

TEST(MultiSection, SingleSectionEqualsSeededProfile)
{
    const LaserField l = reference_laser();
    const ElectronBeam b = beam_307();
    const MultiSectionResult r = run_multi_section(b, l, 1e-6, 1);
    TubeConfig c;
    c.length_m = 1e-6;
    c.gain = r.gain.a;
    c.n0 = to_compton_density(b.density_m3);
    EXPECT_EQ(r.final_density, evolve_seeded(c).final_photon_density());
}

TEST(MultiSection, HeadlineIntensities)
{
    const LaserField l = reference_laser();
    const ElectronBeam b = beam_307();
    const MultiSectionResult one = run_multi_section(b, l, 0.01, 1);
    EXPECT_NEAR(one.half_rule_intensity_W_m2 / 5e13, 1.0, 0.5);
    EXPECT_NEAR(one.intensity_W_m2 / one.half_rule_intensity_W_m2, 2.0, 1e-6);
    EXPECT_FALSE(one.warnings.empty());
}

TEST(MultiSection, PumpingIsMonotoneWithDiminishingReturns)
{
    // A beam of one electron per Compton volume shows reabsorption clearly.
    const LaserField l = reference_laser();
    const ElectronBeam b = make_beam(307.0, Direction::head_on, Spin::up, to_si_density(1.0));
    const MultiSectionResult r = run_multi_section(b, l, 1e-5, 6);
    double prev_N = 0.0;
    double prev_gain = 1e300;
    for (auto const& s : r.sections) {
        const double N = s.final_photon_density();
        EXPECT_GE(N, prev_N);
        EXPECT_LE(N - prev_N, prev_gain * (1.0 + 1e-12));
        prev_gain = N - prev_N;
        prev_N = N;
    }
}

TEST(Cyclic, FullReflectionEqualsLongChain)
{
    const LaserField l = reference_laser();
    const ElectronBeam b = make_beam(7.68, Direction::head_on, Spin::up, to_si_density(0.5));
    const CyclicResult c = run_cyclic(b, l, 1e-5, 3, 4, 1.0);
    const MultiSectionResult chain = run_multi_section(b, l, 1e-5, 12, 0.0, 2);
    EXPECT_LT(rel_diff(c.final_density_m3, chain.final_density_m3), 1e-12);
}

TEST(Cyclic, ZeroReflectionEqualsSinglePass)
{
    const LaserField l = reference_laser();
    const ElectronBeam b = make_beam(7.68, Direction::head_on, Spin::up, to_si_density(0.5));
    const CyclicResult c = run_cyclic(b, l, 1e-5, 3, 5, 0.0);
    const MultiSectionResult pass = run_multi_section(b, l, 1e-5, 3, 0.0, 2);
    EXPECT_EQ(c.final_density_m3, pass.final_density_m3);
}

TEST(Cyclic, PartialReflectionApproachesFixedPoint)
{
    const LaserField l = reference_laser();
    const ElectronBeam b = make_beam(7.68, Direction::head_on, Spin::up, to_si_density(0.5));
    const double eta = 0.9;
    const CyclicResult c = run_cyclic(b, l, 1e-5, 2, 400, eta);
    for (std::size_t i = 1; i < c.cycle_density_m3.size(); ++i) {
        EXPECT_GE(c.cycle_density_m3[i], c.cycle_density_m3[i - 1]);
    }
    // Fixed point of N -> chain(eta N).
    const double last = c.cycle_density_m3.back();
    const double again
        = run_multi_section(b, l, 1e-5, 2, eta * last, 2).final_density_m3;
    EXPECT_LT(rel_diff(last, again), 1e-6);
}

TEST(Cyclic, SoftGammaWarningOnlyOutsideBraggRange)
{
    const LaserField l = reference_laser();
    const CyclicResult soft = run_cyclic(beam_768(), l, 0.01, 1, 2, 0.9);
    const CyclicResult hard = run_cyclic(beam_307(), l, 0.01, 1, 2, 0.9);
    auto mentions_bragg = [](CyclicResult const& r) {
        for (auto const& w : r.warnings) {
            if (w.find("Bragg") != std::string::npos) {
                return true;
            }
        }
        return false;
    };
    EXPECT_FALSE(mentions_bragg(soft));
    EXPECT_TRUE(mentions_bragg(hard));
    EXPECT_THROW(run_cyclic(beam_768(), l, 0.01, 1, 0, 0.9), DomainError);
    EXPECT_THROW(run_cyclic(beam_768(), l, 0.01, 1, 2, -0.1), DomainError);
}
