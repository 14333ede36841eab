#include <gtest/gtest.h>

#include <cmath>

#include "gammalase/bessel.hpp"
#include "gammalase/errors.hpp"

using namespace gammalase;

namespace {

// Independent ascending series in long double, good for moderate x.
long double series_jn(int n, long double x)
{
    long double term = 1.0L;
    for (int k = 1; k <= n; ++k) {
        term *= x / (2.0L * k);
    }
    long double sum = 0.0L;
    const long double q = -x * x / 4.0L;
    for (int m = 0; m < 200; ++m) {
        sum += term;
        term *= q / ((m + 1.0L) * (m + n + 1.0L));
        if (std::fabs(term) < 1e-30L * std::fabs(sum)) {
            break;
        }
    }
    return sum;
}

}  // namespace

TEST(Bessel, MatchesAscendingSeriesForSmallArguments)
{
    for (int n = 0; n <= 12; ++n) {
        for (double x : {1e-6, 0.01, 0.3, 1.0, 2.5, 5.0}) {
            const double ref = static_cast<double>(series_jn(n, x));
            EXPECT_NEAR(bessel_jn(n, x), ref, 1e-15 + 1e-12 * std::fabs(ref))
                << "n=" << n << " x=" << x;
        }
    }
}

TEST(Bessel, MatchesStandardLibraryAcrossRange)
{
    for (int n = 0; n <= 20; ++n) {
        for (double x = 0.05; x < 120.0; x *= 1.37) {
            const double ref = std::cyl_bessel_j(static_cast<double>(n), x);
            EXPECT_NEAR(bessel_jn(n, x), ref, 1e-12) << "n=" << n << " x=" << x;
        }
    }
}

TEST(Bessel, ReflectionForNegativeOrderAndArgument)
{
    for (int n = 1; n <= 6; ++n) {
        const double x = 3.7;
        const double sgn = (n % 2) ? -1.0 : 1.0;
        EXPECT_DOUBLE_EQ(bessel_jn(-n, x), sgn * bessel_jn(n, x));
        EXPECT_DOUBLE_EQ(bessel_jn(n, -x), sgn * bessel_jn(n, x));
    }
}

TEST(Bessel, ValuesAtZero)
{
    EXPECT_EQ(bessel_jn(0, 0.0), 1.0);
    EXPECT_EQ(bessel_jn(3, 0.0), 0.0);
}

TEST(Bessel, ThreeTermRecurrenceHolds)
{
    for (double x : {0.7, 4.2, 19.0, 55.5}) {
        for (int n = 1; n < 15; ++n) {
            const double lhs = bessel_jn(n - 1, x) + bessel_jn(n + 1, x);
            const double rhs = 2.0 * n / x * bessel_jn(n, x);
            EXPECT_NEAR(lhs, rhs, 1e-12);
        }
    }
}

TEST(Bessel, RejectsHugeOrNonFiniteArgument)
{
    EXPECT_THROW(bessel_jn(1, 1e7), DomainError);
    EXPECT_THROW(bessel_jn(1, NAN), DomainError);
}
