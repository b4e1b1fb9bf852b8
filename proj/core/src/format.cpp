#include "hsd/format.hpp"

#include <charconv>

namespace hsd {

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::string format_complex_csv(cplx z) {
    return format_double(z.real()) + "," + format_double(z.imag());
}

}  // namespace hsd
