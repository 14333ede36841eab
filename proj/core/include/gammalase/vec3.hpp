#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace gammalase {

using Vec3 = std::array<double, 3>;
using Complex = std::complex<double>;
using CVec3 = std::array<Complex, 3>;

inline double dot(Vec3 const& a, Vec3 const& b)
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Vec3 cross(Vec3 const& a, Vec3 const& b)
{
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

/// Hermitian product a* . b
inline Complex cdot(CVec3 const& a, CVec3 const& b)
{
    return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1]
           + std::conj(a[2]) * b[2];
}

/// a* . b for a real left operand.
inline Complex cdot(Vec3 const& a, CVec3 const& b)
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double norm(CVec3 const& v)
{
    return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
}

inline CVec3 operator*(Complex s, Vec3 const& v)
{
    return {s * v[0], s * v[1], s * v[2]};
}

inline CVec3 operator+(CVec3 const& a, CVec3 const& b)
{
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline CVec3 operator*(Complex s, CVec3 const& v)
{
    return {s * v[0], s * v[1], s * v[2]};
}

}  // namespace gammalase
