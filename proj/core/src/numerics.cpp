#include "gammalase/numerics.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <string>

#include <boost/math/tools/toms748_solve.hpp>
#include <boost/numeric/odeint/stepper/runge_kutta4.hpp>

#include "gammalase/errors.hpp"

namespace gammalase {

double find_root(std::function<double(double)> const& f,
                 RootBracket const& bracket)
{
    if (!(bracket.lo < bracket.hi) || !(bracket.tol > 0.0)) {
        throw BracketError("find_root: require lo < hi and tol > 0");
    }
    const double flo = f(bracket.lo);
    const double fhi = f(bracket.hi);
    if (!std::isfinite(flo) || !std::isfinite(fhi)) {
        throw NumericError("find_root: non-finite function value at bracket");
    }
    if (flo == 0.0) {
        return bracket.lo;
    }
    if (fhi == 0.0) {
        return bracket.hi;
    }
    if (flo * fhi > 0.0) {
        throw BracketError("find_root: interval [" + std::to_string(bracket.lo)
                           + ", " + std::to_string(bracket.hi)
                           + "] does not bracket a root");
    }

    const double tol = bracket.tol;
    auto converged = [tol](double a, double b) {
        return std::fabs(b - a) <= tol * std::max(std::fabs(a), std::fabs(b));
    };
    std::uintmax_t max_iter = 500;
    auto const [a, b] = boost::math::tools::toms748_solve(
        [&f](double x) { return f(x); },
        bracket.lo,
        bracket.hi,
        flo,
        fhi,
        converged,
        max_iter);
    // Pick whichever end has the smaller residual.
    return std::fabs(f(a)) <= std::fabs(f(b)) ? a : b;
}

std::vector<OdeSample>
integrate_ode(std::function<double(double, double)> const& rhs,
              double y0,
              double l0,
              double l1,
              int steps)
{
    if (steps < 1) {
        throw DomainError("integrate_ode: steps must be >= 1");
    }
    using State = std::array<double, 1>;
    boost::numeric::odeint::runge_kutta4<State> stepper;

    auto system = [&rhs](State const& y, State& dydl, double l) {
        dydl[0] = rhs(l, y[0]);
        if (!std::isfinite(dydl[0])) {
            throw NumericError("integrate_ode: non-finite right-hand side at l = "
                               + std::to_string(l));
        }
    };

    std::vector<OdeSample> out;
    out.reserve(static_cast<std::size_t>(steps) + 1);
    const double h = (l1 - l0) / steps;
    State y{y0};
    out.push_back({l0, y0});
    for (int i = 0; i < steps; ++i) {
        const double l = l0 + i * h;
        stepper.do_step(system, y, l, h);
        out.push_back({i + 1 == steps ? l1 : l0 + (i + 1) * h, y[0]});
    }
    return out;
}

}  // namespace gammalase
