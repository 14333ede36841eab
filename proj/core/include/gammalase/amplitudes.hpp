#pragma once

#include <array>

#include "gammalase/beamfield.hpp"
#include "gammalase/kinematics.hpp"
#include "gammalase/vec3.hpp"

namespace gammalase {

/// Real orthonormal polarisation pair transverse to the emitted photon:
///   e1 = cos(theta) (cos phi, sin phi, 0) - sin(theta) z,
///   e2 = (-sin phi, cos phi, 0),
/// with e1 x e2 = k_hat.
struct PolarizationBasis {
    Vec3 e1;
    Vec3 e2;
    Vec3 k_hat;
};

PolarizationBasis polarization_basis(double theta, double phi_k);

/// Position of a coefficient in the ladder-shift index nu in {0, +sigma,
/// -sigma}. The Bessel order paired with a slot is N - nu.
enum class NuSlot : int {
    zero = 0,
    same = 1,      // nu = +sigma
    opposite = 2,  // nu = -sigma
};

inline constexpr std::array<NuSlot, 3> nu_slots{NuSlot::zero, NuSlot::same,
                                                NuSlot::opposite};

constexpr int nu_value(NuSlot slot, Spin sigma)
{
    switch (slot) {
    case NuSlot::same: return sign(sigma);
    case NuSlot::opposite: return -sign(sigma);
    default: return 0;
    }
}

/// Spin-keeping (F) and spin-flipping (G) coefficients of the emission
/// amplitude, indexed [polarisation i - 1][nu slot]. Entries are in units
/// where m_e = 1.
struct FGTable {
    std::array<std::array<Complex, 3>, 2> F{};
    std::array<std::array<Complex, 3>, 2> G{};
    Spin sigma = Spin::up;

    Complex f(int i, NuSlot slot) const { return F[i - 1][static_cast<int>(slot)]; }
    Complex g(int i, NuSlot slot) const { return G[i - 1][static_cast<int>(slot)]; }
};

/// Evaluate the twelve coefficients for initial spin sigma.
///
/// The spin-keeping in-plane coefficient for nu = +sigma closes its square
/// bracket after the -(R - R') p_z term.
FGTable fg_coefficients(EmissionKinematics const& kin, ElectronBeam const& beam,
                        LaserField const& laser, Spin sigma);

/// Bessel-weighted harmonic vectors
///   F_N = sum_i sum_nu F_i^nu J_{N-nu}(p'_perp R') e'_i,
///   G_N = sum_i sum_nu G_i^nu exp(i sigma phi) J_{N-nu}(p'_perp R') e'_i,
/// for the harmonic carried by `kin`.
struct HarmonicVectors {
    CVec3 script_F{};
    CVec3 script_G{};
    double norm_F = 0.0;
    double norm_G = 0.0;
};

HarmonicVectors harmonic_vectors(EmissionKinematics const& kin,
                                 ElectronBeam const& beam,
                                 LaserField const& laser, Spin sigma);

/// Unit polarisation of the photon emitted in the (sigma -> sigma') channel:
/// F_N / |F_N| when sigma' = sigma, G_N / |G_N| otherwise. The global phase
/// makes the first component of (numerically) largest magnitude real and
/// positive. Throws ClosedChannelError when the channel vector vanishes
/// relative to the other channel and to the coefficient scale.
CVec3 outgoing_polarization(EmissionKinematics const& kin,
                            ElectronBeam const& beam, LaserField const& laser,
                            Spin sigma, Spin sigma_prime);

/// Normalise v and fix its global phase as described above.
CVec3 phase_fixed_unit(CVec3 const& v);

}  // namespace gammalase
