#pragma once

#include <functional>
#include <vector>

namespace gammalase {

/// Closed interval [lo, hi] searched by find_root, with a relative
/// tolerance on the returned abscissa.
struct RootBracket {
    double lo;
    double hi;
    double tol = 1e-12;
};

/// Root of f inside the bracket. Requires f(lo) * f(hi) <= 0; otherwise
/// throws BracketError. Deterministic: same inputs give the same iterates.
double find_root(std::function<double(double)> const& f,
                 RootBracket const& bracket);

struct OdeSample {
    double l;
    double y;
};

/// Classic fixed-step fourth-order Runge-Kutta for dy/dl = rhs(l, y) over
/// [l0, l1], returning steps + 1 samples including both end points. Throws
/// NumericError as soon as the right-hand side yields a non-finite value.
std::vector<OdeSample>
integrate_ode(std::function<double(double, double)> const& rhs,
              double y0,
              double l0,
              double l1,
              int steps);

}  // namespace gammalase
