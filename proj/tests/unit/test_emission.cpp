#include <gtest/gtest.h>

#include <cmath>

#include "gammalase/constants.hpp"
#include "gammalase/emission.hpp"
#include "gammalase/errors.hpp"
#include "scenarios.hpp"

using namespace gammalase;
using namespace gammalase::testing;

TEST(CrossSection, AzimuthIndependent)
{
    const LaserField l = reference_laser();
    for (double x : {0.5, 0.9, 0.99, 0.999}) {
        EmissionOptions a;
        EmissionOptions b;
        b.phi_k = 1.234;
        const double v0 = averaged_cross_section(x * pi, beam_307(), l, 0, a).value;
        const double v1 = averaged_cross_section(x * pi, beam_307(), l, 0, b).value;
        EXPECT_LT(rel_diff(v0, v1), 1e-12);
    }
}

TEST(CrossSection, ForwardPeakedAndNonNegative)
{
    const LaserField l = reference_laser();
    const auto grid = uniform_theta_grid(400);
    for (double t : grid) {
        EXPECT_GE(averaged_cross_section(t, beam_307(), l, 0).value, 0.0);
    }
    const double hi = averaged_cross_section(0.999 * pi, beam_307(), l, 0).value;
    const double lo = averaged_cross_section(0.5 * pi, beam_307(), l, 0).value;
    EXPECT_GE(hi / lo, 1e3);
}

TEST(CrossSection, MonotoneOnForwardWindow)
{
    const LaserField l = reference_laser();
    double prev = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double t = pi * (0.9 + 0.1 * i / 200.0);
        const double v = averaged_cross_section(t, beam_307(), l, 0).value;
        EXPECT_GT(v, prev);
        prev = v;
    }
}

TEST(CrossSection, TruncationStable)
{
    const LaserField l = reference_laser();
    EmissionOptions few;
    few.harmonic_max = 8;
    EmissionOptions many;
    many.harmonic_max = 24;
    many.relative_cutoff = 0.0;
    for (double x : {0.3, 0.8, 0.99, 1.0}) {
        const double a = averaged_cross_section(x * pi, beam_307(), l, 0, few).value;
        const double b = averaged_cross_section(x * pi, beam_307(), l, 0, many).value;
        EXPECT_LT(rel_diff(a, b), 1e-10);
    }
}

TEST(CrossSection, StimulatedEmissionScalesWithOccupation)
{
    const LaserField l = reference_laser();
    const double v0 = averaged_cross_section(0.95 * pi, beam_307(), l, 0).value;
    const double v7 = averaged_cross_section(0.95 * pi, beam_307(), l, 7).value;
    EXPECT_NEAR(v7 / v0, 8.0, 1e-12);
}

TEST(CrossSection, AverageIsHalfTheChannelSum)
{
    const LaserField l = reference_laser();
    const double t = 0.97 * pi;
    double sum = 0.0;
    for (Spin s : {Spin::up, Spin::down}) {
        const ElectronBeam b = beam_307(s);
        for (Spin sp : {Spin::up, Spin::down}) {
            for (int i : {1, 2}) {
                sum += diff_cross_section(t, b, l, s, sp, PolarizationSelector::basis(i), 0)
                           .value;
            }
        }
    }
    EXPECT_LT(rel_diff(0.5 * sum, averaged_cross_section(t, beam_307(), l, 0).value),
              1e-12);
}

TEST(CrossSection, SelectorsAreConsistent)
{
    const LaserField l = reference_laser();
    const ElectronBeam b = beam_307();
    const double t = 2.2;
    auto xs = [&](PolarizationSelector const& sel) {
        return diff_cross_section(t, b, l, Spin::up, Spin::up, sel, 0).value;
    };
    const double e1 = xs(PolarizationSelector::basis(1));
    const double e2 = xs(PolarizationSelector::basis(2));
    EXPECT_LT(rel_diff(xs(PolarizationSelector::summed()), e1 + e2), 1e-14);
    EXPECT_LT(rel_diff(xs(PolarizationSelector::arbitrary({1.0, 0.0}, {0.0, 0.0})), e1),
              1e-14);
    const double r = 1.0 / std::sqrt(2.0);
    const double plus = xs(PolarizationSelector::arbitrary({r, 0.0}, {0.0, r}));
    const double minus = xs(PolarizationSelector::arbitrary({r, 0.0}, {0.0, -r}));
    EXPECT_LT(rel_diff(plus + minus, e1 + e2), 1e-12);
}

TEST(CrossSection, SelectorValidation)
{
    EXPECT_THROW(PolarizationSelector::basis(3), DomainError);
    EXPECT_THROW(PolarizationSelector::arbitrary({1.0, 0.0}, {1.0, 0.0}), DomainError);
    EXPECT_THROW(averaged_cross_section(4.0, beam_307(), reference_laser(), 0), DomainError);
    EmissionOptions bad;
    bad.harmonic_max = 0;
    EXPECT_THROW(averaged_cross_section(1.0, beam_307(), reference_laser(), 0, bad),
                 DomainError);
}

TEST(TransitionRate, RatioToCrossSectionIsFluxFactor)
{
    const LaserField l = reference_laser();
    const ElectronBeam b = beam_307();
    const double t = 0.98 * pi;
    const double rate = transition_rate_density(t, b, l, Spin::up, Spin::up, 1, 0);
    const double xs = diff_cross_section(t, b, l, Spin::up, Spin::up,
                                         PolarizationSelector::basis(1), 0)
                          .value;
    const double expected = 1.0 / (4.0 * pi * pi * b.energy / std::fabs(b.p_z));
    EXPECT_LT(rel_diff(rate / xs, expected), 1e-9);
}

TEST(KleinNishina, ThomsonLimitIntegratesToThomsonCrossSection)
{
    // Midpoint quadrature over cos(theta) at vanishing photon energy.
    const int n = 4000;
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        const double c = -1.0 + (i + 0.5) * 2.0 / n;
        total += klein_nishina_rest(1e-9, c) * 2.0 / n;
    }
    total *= 2.0 * pi;
    const double alpha = codata2018.fine_structure;
    EXPECT_NEAR(total / (8.0 * pi / 3.0 * alpha * alpha), 1.0, 1e-6);
}

TEST(KleinNishina, HighEnergySuppression)
{
    EXPECT_LT(klein_nishina_rest(100.0, -1.0), 0.01 * klein_nishina_rest(1e-6, -1.0));
    EXPECT_THROW(klein_nishina_rest(0.0, 0.0), DomainError);
}

TEST(KleinNishina, BoostConsistency)
{
    // Lab value times the inverse solid-angle Jacobian must reproduce the
    // rest-frame formula evaluated with independently boosted quantities.
    const ElectronBeam b = beam_307();
    const double k = reference_laser().wave_number;
    const double gamma = b.energy;
    const double beta = b.p_z / b.energy;
    for (double t : {0.5, 1.7, 2.9, 3.1}) {
        const double lab = klein_nishina_reference(t, b, k);
        const double kp = compton_energy(t, b, k);
        const double kp_rest = gamma * kp * (1.0 - beta * std::cos(t));
        const double cos_rest = (std::cos(t) - beta) / (1.0 - beta * std::cos(t));
        const double omega_rest = gamma * k * (1.0 - beta);
        const double rest = klein_nishina_rest(omega_rest, cos_rest);
        EXPECT_LT(rel_diff(lab * (kp_rest / kp) * (kp_rest / kp), rest), 1e-10);
    }
}

TEST(KleinNishina, RatioFlatInAngleAndIntensity)
{
    const ElectronBeam b = beam_307();
    for (double I : {1e15, 1e17}) {
        const LaserField l = make_laser(785e-9, I);
        double lo = 1e300;
        double hi = 0.0;
        for (double x = 0.05; x <= 1.0; x += 0.05) {
            const double r = klein_nishina_ratio(x * pi, b, l);
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        EXPECT_LT(hi / lo - 1.0, 0.02);
        EXPECT_NEAR(lo, (1.0 + b.speed()) / b.speed(), 0.02);
    }
}

TEST(EmittedPolarization, CircularAtBackscatter)
{
    const auto p = emitted_polarization(pi * (1.0 - 1e-9), beam_307(), reference_laser());
    ASSERT_TRUE(p.has_value());
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR((*p)[0].real(), r, 1e-6);
    EXPECT_NEAR((*p)[1].imag(), -r, 1e-6);
    EXPECT_NEAR(std::abs((*p)[2]), 0.0, 1e-6);
}

TEST(AngularSpectrum, GridValidation)
{
    const LaserField l = reference_laser();
    EXPECT_THROW(angular_spectrum(beam_307(), l, {0.1, 0.1}, 0), DomainError);
    EXPECT_THROW(angular_spectrum(beam_307(), l, {0.1, 4.0}, 0), DomainError);
    EXPECT_THROW(uniform_theta_grid(0), DomainError);
    EXPECT_EQ(uniform_theta_grid(1).front(), 0.0);
    EXPECT_EQ(uniform_theta_grid(5).back(), pi);
}

TEST(AngularSpectrum, IdenticalForAnyWorkerCount)
{
    const LaserField l = reference_laser();
    const auto grid = uniform_theta_grid(301);
    const AngularSpectrum a = angular_spectrum(beam_307(), l, grid, 0, {}, 1);
    for (unsigned w : {2u, 3u, 8u}) {
        const AngularSpectrum b = angular_spectrum(beam_307(), l, grid, 0, {}, w);
        ASSERT_EQ(a.rows.size(), b.rows.size());
        for (std::size_t i = 0; i < a.rows.size(); ++i) {
            EXPECT_EQ(a.rows[i].averaged_xsec, b.rows[i].averaged_xsec);
            EXPECT_EQ(a.rows[i].k_prime, b.rows[i].k_prime);
            EXPECT_EQ(a.rows[i].polarization, b.rows[i].polarization);
        }
    }
}
