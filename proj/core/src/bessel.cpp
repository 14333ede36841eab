#include "gammalase/bessel.hpp"

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "gammalase/errors.hpp"

namespace gammalase {

namespace {

constexpr double series_limit = 12.0;

// Ascending series sum_k (-1)^k (x/2)^{2k+n} / (k! (k+n)!), accumulated in
// extended precision to absorb cancellation near |x| = 12.
double series_jn(int n, double x)
{
    using real = long double;
    const real half = static_cast<real>(x) / 2;
    real lead = 1;
    for (int i = 1; i <= n; ++i) {
        lead *= half / i;
    }
    const real q = -half * half;
    real term = lead;
    real sum = lead;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<real>(k) * static_cast<real>(k + n));
        sum += term;
        if (std::fabs(term) <= 1e-21L * std::fabs(sum)) {
            break;
        }
    }
    return static_cast<double>(sum);
}

double miller_jn(int n, double x)
{
    const double ax = std::fabs(x);
    const int top = std::max(n, static_cast<int>(ax));
    int start = top + 30 + static_cast<int>(std::sqrt(60.0 * top));
    start += start % 2;

    constexpr double rescale_at = 1e250;
    double next = 0.0;  // J_{k+1}
    double cur = 1e-300;  // J_k
    double norm = 0.0;
    double wanted = 0.0;
    for (int k = start; k > 0; --k) {
        const double prev = (2.0 * k / ax) * cur - next;  // J_{k-1}
        next = cur;
        cur = prev;
        if (std::fabs(cur) > rescale_at) {
            cur /= rescale_at;
            next /= rescale_at;
            norm /= rescale_at;
            wanted /= rescale_at;
        }
        if (k - 1 == n) {
            wanted = cur;
        }
        if ((k - 1) % 2 == 0 && k - 1 > 0) {
            norm += 2.0 * cur;
        }
    }
    norm += cur;  // J_0
    double result = wanted / norm;
    if (x < 0.0 && n % 2 != 0) {
        result = -result;
    }
    return result;
}

}  // namespace

double bessel_jn(int order, double x)
{
    if (!std::isfinite(x) || std::fabs(x) >= bessel_max_argument) {
        throw DomainError("bessel_jn: argument outside supported range: "
                          + std::to_string(x));
    }
    const int n = std::abs(order);
    const double reflect = (order < 0 && n % 2 != 0) ? -1.0 : 1.0;
    if (x == 0.0) {
        return n == 0 ? 1.0 : 0.0;
    }
    const double value = std::fabs(x) <= series_limit ? series_jn(n, x)
                                                      : miller_jn(n, x);
    return reflect * value;
}

}  // namespace gammalase
