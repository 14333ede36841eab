#include <gtest/gtest.h>

#include <cmath>

#include "gammalase/constants.hpp"
#include "gammalase/errors.hpp"
#include "gammalase/kinematics.hpp"
#include "scenarios.hpp"

using namespace gammalase;
using namespace gammalase::testing;

TEST(PhotonEnergy, SoftGammaFromSevenMeVBeam)
{
    const double kp = to_MeV(emitted_photon_energy(pi, 1, beam_768(), reference_laser()));
    EXPECT_NEAR(kp / 1.424e-3, 1.0, 5e-3);
}

TEST(PhotonEnergy, HardGammaFrom307MeVBeam)
{
    const double kp = to_MeV(emitted_photon_energy(pi, 1, beam_307(), reference_laser()));
    EXPECT_NEAR(kp, 2.263, 0.01);
}

TEST(PhotonEnergy, ForwardAlongLaserKeepsHarmonicEnergy)
{
    const LaserField l = reference_laser();
    for (int n = 1; n <= 4; ++n) {
        EXPECT_NEAR(emitted_photon_energy(0.0, n, beam_307(), l) / (n * l.wave_number), 1.0,
                    1e-14);
    }
}

TEST(PhotonEnergy, RejectsClosedHarmonic)
{
    EXPECT_THROW(emitted_photon_energy(pi, 0, beam_307(), reference_laser()), KinematicError);
    EXPECT_THROW(final_state(pi, -1, beam_307(), reference_laser()), KinematicError);
}

TEST(PhotonEnergy, IncreasesWithBeamEnergy)
{
    const LaserField l = reference_laser();
    double prev = 0.0;
    for (double E = 100.0; E <= 1000.0; E += 25.0) {
        const double kp = emitted_photon_energy(pi, 1, make_beam(E, Direction::head_on), l);
        EXPECT_GT(kp, prev);
        prev = kp;
    }
}

TEST(PhotonEnergy, ReducesToComptonWithoutCoherentAmplitude)
{
    const LaserField dark = make_laser(785e-9, 0.0);
    for (double E : {1.0, 7.68, 307.0}) {
        for (double t = 0.0; t <= pi; t += 0.1) {
            const ElectronBeam b = make_beam(E, Direction::head_on);
            EXPECT_EQ(emitted_photon_energy(t, 1, b, dark),
                      compton_energy(t, b, dark.wave_number));
        }
    }
}

TEST(PhotonEnergy, CoherentAmplitudeLowersEnergy)
{
    const ElectronBeam b = beam_307();
    const LaserField l = reference_laser();
    EXPECT_LT(emitted_photon_energy(pi, 1, b, l), compton_energy(pi, b, l.wave_number));
}

TEST(FinalState, ClosedFormAgreesWithRootSolve)
{
    const LaserField l = reference_laser();
    for (double E : {7.68, 50.0, 307.0, 1000.0}) {
        for (Direction d : {Direction::head_on, Direction::co_propagating}) {
            const ElectronBeam b = make_beam(E, d);
            for (int n : {1, 2, 3}) {
                for (double t : {0.3, 1.5, 2.9, pi}) {
                    const EmissionKinematics kin = solve_final_state(t, n, b, l);
                    EXPECT_LT(kin.closed_form_discrepancy, 1e-12)
                        << "E=" << E << " n=" << n << " theta=" << t;
                }
            }
        }
    }
}

TEST(FinalState, SatisfiesSelectionRules)
{
    const LaserField l = reference_laser();
    for (double t : {0.2, 1.0, 2.5, pi}) {
        const EmissionKinematics kin = final_state(t, 1, beam_307(), l);
        const SelectionResiduals r = selection_residuals(kin, beam_307(), l);
        EXPECT_LT(std::fabs(r.momentum), 1e-12);
        EXPECT_LT(std::fabs(r.energy), 1e-12);
        EXPECT_NEAR(kin.minus_prime * kin.plus_prime,
                    1.0 + kin.pperp_prime * kin.pperp_prime, 1e-12);
    }
}

TEST(FinalState, WigglingRadius)
{
    const LaserField l = reference_laser();
    const ElectronBeam b = beam_307();
    EXPECT_NEAR(wiggling_radius(b.energy, b.p_z, l), 4.0407, 1e-3);
    EXPECT_DOUBLE_EQ(wiggling_radius_lc(b.minus, l), l.amplitude / (l.wave_number * b.minus));
}

TEST(QuasiEnergy, LadderSpacingIsLaserPhoton)
{
    const LaserField l = reference_laser();
    const double e0 = quasi_energy(0, Spin::up, -600.0, 0.0, l);
    const double e1 = quasi_energy(1, Spin::up, -600.0, 0.0, l);
    EXPECT_NEAR(e0 - e1, l.wave_number, 1e-12);
}

TEST(Coherence, ShiftVanishesWithoutAmplitude)
{
    const ElectronBeam probe = make_beam(5.135, Direction::co_propagating);
    EXPECT_EQ(wavelength_shift(pi, probe, make_laser(0.87e-9, 0.0)), 0.0);
}

TEST(Coherence, ShiftIsLinearInIntensityAndInvertible)
{
    const ElectronBeam probe = make_beam(5.135, Direction::co_propagating);
    const double lambda = 0.8711e-9;
    const double s1 = wavelength_shift(pi, probe, make_laser(lambda, 1e26));
    const double s2 = wavelength_shift(pi, probe, make_laser(lambda, 2e26));
    EXPECT_NEAR(s2 / s1, 2.0, 1e-12);
    EXPECT_NEAR(coherent_intensity_from_shift(s1, pi, probe, lambda) / 1e26, 1.0, 1e-12);
    EXPECT_THROW(coherent_intensity_from_shift(s1, 0.0, probe, lambda), DomainError);
}

TEST(Coherence, ProbeWavelengths)
{
    const ElectronBeam source = beam_768();
    const double k = emitted_photon_energy(pi, 1, source, reference_laser());
    const LaserField rad = make_laser(wavelength_from_natural_energy(k), 1e26);
    const CoherenceProbe p
        = make_coherence_probe(make_beam(5.135, Direction::co_propagating), rad, pi);
    EXPECT_NEAR(p.compton_wavelength_m * 1e9 / 351.0, 1.0, 0.01);
    EXPECT_NEAR(p.shift / 2.77e-3, 1.0, 0.05);
    EXPECT_NEAR(p.shifted_wavelength_m / p.compton_wavelength_m - 1.0, p.shift, 1e-15);
}
