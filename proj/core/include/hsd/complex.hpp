#pragma once

#include <cmath>
#include <complex>

namespace hsd {

using cplx = std::complex<double>;

inline bool is_finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline bool in_unit_disk(cplx z) { return std::abs(z) < 1.0; }

// |z|^2 without the sqrt of std::abs.
inline double abs_sq(cplx z) { return z.real() * z.real() + z.imag() * z.imag(); }

inline cplx sq(cplx z) { return z * z; }

}  // namespace hsd
