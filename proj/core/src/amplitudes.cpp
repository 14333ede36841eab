#include "gammalase/amplitudes.hpp"

#include <algorithm>
#include <cmath>

#include "gammalase/bessel.hpp"
#include "gammalase/errors.hpp"

namespace gammalase {

namespace {
constexpr Complex I{0.0, 1.0};
constexpr double closed_channel_ratio = 1e-12;
}  // namespace

PolarizationBasis polarization_basis(double theta, double phi_k)
{
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    const double cp = std::cos(phi_k);
    const double sp = std::sin(phi_k);
    PolarizationBasis b;
    b.e1 = {ct * cp, ct * sp, -st};
    b.e2 = {-sp, cp, 0.0};
    b.k_hat = {st * cp, st * sp, ct};
    return b;
}

FGTable fg_coefficients(EmissionKinematics const& kin, ElectronBeam const& beam,
                        LaserField const& laser, Spin sigma)
{
    constexpr double m = 1.0;
    const double s = sign(sigma);
    const double k = laser.wave_number;
    const double ct = std::cos(kin.theta);
    const double st = std::sin(kin.theta);

    const double E = beam.energy;
    const double Ep = kin.E_prime;
    const double pp = kin.pperp_prime;
    const double R = kin.R;
    const double Rp = kin.R_prime;

    // p_z - E - m = -(minus + m) and p'_z - E' - m = -(minus' + m), formed
    // from the light-cone components to avoid cancellation.
    const double a = -(beam.minus + m);
    const double b = -(kin.minus_prime + m);
    // p'_z + E' + m and p_z + E + m.
    const double bp = kin.plus_prime + m;
    const double ap = beam.plus + m;
    // p_z (E' + m) - p'_z (E + m), rewritten in light-cone variables:
    // 2[p_z(E'+m) - p'_z(E+m)] = P D' - D P' + m (P - D - P' + D')
    const double cross_term
        = 0.5
          * ((beam.plus * kin.minus_prime - beam.minus * kin.plus_prime)
             + m * ((beam.plus - beam.minus) - (kin.plus_prime - kin.minus_prime)));

    FGTable t;
    t.sigma = sigma;
    auto& F1 = t.F[0];
    auto& F2 = t.F[1];
    auto& G1 = t.G[0];
    auto& G2 = t.G[1];
    constexpr int zero = static_cast<int>(NuSlot::zero);
    constexpr int same = static_cast<int>(NuSlot::same);
    constexpr int opp = static_cast<int>(NuSlot::opposite);

    F1[zero] = -ct * pp * (E + m)
               - st * ((Ep + m) * beam.p_z + (E + m) * kin.pz_prime
                       + 0.5 * k * k * R * Rp * a * b);
    F1[same] = 0.5 * k
               * (ct * R * a * b
                  + st * pp * ((R + Rp) * (E + m) - (R - Rp) * beam.p_z));
    F1[opp] = 0.5 * k * ct * Rp * a * b;

    G1[zero] = s * (ct * cross_term + st * pp * (0.5 * k * k * R * Rp * a + E + m));
    G1[same] = -0.5 * s * k
               * (ct * R * pp * a + st * (R * a * bp - Rp * ap * b));
    G1[opp] = -0.5 * s * k * ct * Rp * pp * a;

    F2[zero] = -I * s * pp * (E + m);
    F2[same] = -I * s * (0.5 * k * R) * a * b;
    F2[opp] = I * s * (0.5 * k * Rp) * a * b;

    G2[zero] = I * cross_term;
    G2[same] = I * (0.5 * k * R) * pp * a;
    G2[opp] = -I * (0.5 * k * Rp) * pp * a;
    return t;
}

HarmonicVectors harmonic_vectors(EmissionKinematics const& kin,
                                 ElectronBeam const& beam,
                                 LaserField const& laser, Spin sigma)
{
    const FGTable t = fg_coefficients(kin, beam, laser, sigma);
    const PolarizationBasis basis = polarization_basis(kin.theta, kin.phi_k);
    const double x = kin.pperp_prime * kin.R_prime;

    std::array<double, 3> bessel{};
    for (NuSlot slot : nu_slots) {
        bessel[static_cast<int>(slot)]
            = bessel_jn(kin.harmonic - nu_value(slot, sigma), x);
    }

    std::array<Complex, 2> f_coeff{};
    std::array<Complex, 2> g_coeff{};
    for (int i = 0; i < 2; ++i) {
        for (NuSlot slot : nu_slots) {
            const int j = static_cast<int>(slot);
            f_coeff[i] += t.F[i][j] * bessel[j];
            g_coeff[i] += t.G[i][j] * bessel[j];
        }
    }
    const Complex phase = std::polar(1.0, sign(sigma) * kin.phi_k);

    HarmonicVectors h;
    h.script_F = f_coeff[0] * basis.e1 + f_coeff[1] * basis.e2;
    h.script_G = (phase * g_coeff[0]) * basis.e1 + (phase * g_coeff[1]) * basis.e2;
    h.norm_F = std::hypot(std::abs(f_coeff[0]), std::abs(f_coeff[1]));
    h.norm_G = std::hypot(std::abs(g_coeff[0]), std::abs(g_coeff[1]));
    return h;
}

CVec3 phase_fixed_unit(CVec3 const& v)
{
    const double n = norm(v);
    if (!(n > 0.0)) {
        throw ClosedChannelError("phase_fixed_unit: zero vector");
    }
    double largest = 0.0;
    for (auto const& c : v) {
        largest = std::max(largest, std::abs(c));
    }
    // First component within rounding of the largest magnitude, so ties such
    // as circular polarisation resolve deterministically to the lowest axis.
    int pick = 0;
    for (int i = 0; i < 3; ++i) {
        if (std::abs(v[i]) >= largest * (1.0 - 1e-9)) {
            pick = i;
            break;
        }
    }
    const Complex rot = std::conj(v[pick]) / (std::abs(v[pick]) * n);
    return rot * v;
}

CVec3 outgoing_polarization(EmissionKinematics const& kin,
                            ElectronBeam const& beam, LaserField const& laser,
                            Spin sigma, Spin sigma_prime)
{
    const HarmonicVectors h = harmonic_vectors(kin, beam, laser, sigma);
    const bool keep = sigma_prime == sigma;
    const double mine = keep ? h.norm_F : h.norm_G;
    const double scale = std::max(h.norm_F, h.norm_G);
    if (!(mine > closed_channel_ratio * scale) || !(scale > 0.0)) {
        throw ClosedChannelError(keep ? "spin-keeping polarisation channel is closed"
                                      : "spin-flip polarisation channel is closed");
    }
    return phase_fixed_unit(keep ? h.script_F : h.script_G);
}

}  // namespace gammalase
