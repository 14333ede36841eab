#include <cmath>

#include "gammalase/constants.hpp"
#include "gammalase/emission.hpp"
#include "gammalase/errors.hpp"

namespace gammalase {

double klein_nishina_rest(double omega, double cos_scatter)
{
    if (!(omega > 0.0)) {
        throw DomainError("klein_nishina_rest: photon energy must be positive");
    }
    const double alpha = codata2018.fine_structure;
    const double ratio = 1.0 / (1.0 + omega * (1.0 - cos_scatter));  // omega'/omega
    const double sin2 = (1.0 - cos_scatter) * (1.0 + cos_scatter);
    return 0.5 * alpha * alpha * ratio * ratio * (ratio + 1.0 / ratio - sin2);
}

double klein_nishina_reference(double theta, ElectronBeam const& beam, double k)
{
    // Boost along z into the electron rest frame. The laser photon keeps its
    // direction (+z) and is blue-shifted to k (E - p_z). With c = cos(theta/2),
    // s = sin(theta/2), D = E - p_z, P = E + p_z:
    //   E - p_z cos(theta)   = D c^2 + P s^2
    //   E cos(theta) - p_z   = D c^2 - P s^2
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    const double c2 = c * c;
    const double s2 = s * s;
    const double D = beam.minus;
    const double P = beam.plus;
    const double doppler = D * c2 + P * s2;
    const double cos_rest = (D * c2 - P * s2) / doppler;

    const double omega_rest = k * D;
    // Outgoing lab energy from Compton kinematics; its rest-frame image is
    // k' (E - p_z cos theta).
    const double k_out = k * D / (doppler + 2.0 * k * s2);
    const double k_out_rest = k_out * doppler;
    const double jacobian = (k_out / k_out_rest) * (k_out / k_out_rest);
    return klein_nishina_rest(omega_rest, cos_rest) * jacobian;
}

}  // namespace gammalase
