#pragma once

namespace gammalase {

/// Largest |x| accepted by bessel_jn.
inline constexpr double bessel_max_argument = 1.0e6;

/// Bessel function of the first kind J_n(x) for integer order.
///
/// Uses the ascending power series for |x| <= 12 and Miller's downward
/// recurrence, normalised with J_0 + 2 sum J_2k = 1, beyond that. Negative
/// orders follow J_{-n}(x) = (-1)^n J_n(x). Throws DomainError for
/// |x| >= bessel_max_argument or non-finite x.
double bessel_jn(int order, double x);

}  // namespace gammalase
