#include "quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>

namespace hsd::detail {

cplx integrate_segment(const std::function<cplx(cplx)>& f, cplx z) {
    if (z == 0.0) return 0.0;
    using rule = boost::math::quadrature::gauss<double, 32>;
    const int panels = std::max(1, static_cast<int>(std::ceil(std::abs(z) / 0.25)));
    cplx total{};
    for (int p = 0; p < panels; ++p) {
        const double t0 = static_cast<double>(p) / panels;
        const double t1 = static_cast<double>(p + 1) / panels;
        const double mid = 0.5 * (t0 + t1);
        const double half = 0.5 * (t1 - t0);
        cplx acc{};
        // rule::abscissa() holds the non-negative half of the symmetric nodes.
        const auto& xs = rule::abscissa();
        const auto& ws = rule::weights();
        for (size_t i = 0; i < xs.size(); ++i) {
            const double tp = mid + half * xs[i];
            const double tm = mid - half * xs[i];
            acc += ws[i] * (f(tp * z) + f(tm * z));
        }
        total += half * acc;
    }
    return total * z;
}

}  // namespace hsd::detail
