#include "hsd/fd.hpp"

namespace hsd {

Jet3 fd_oracle(const AnalyticMap& f, cplx z, double step) {
    const double h = step;
    const cplx fm3 = f(z - 3.0 * h), fm2 = f(z - 2.0 * h), fm1 = f(z - h);
    const cplx f0 = f(z);
    const cplx fp1 = f(z + h), fp2 = f(z + 2.0 * h), fp3 = f(z + 3.0 * h);
    const cplx d1 = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
    const cplx d2 = (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
    const cplx d3 =
        (fm3 - 8.0 * fm2 + 13.0 * fm1 - 13.0 * fp1 + 8.0 * fp2 - fp3) / (8.0 * h * h * h);
    return {f0, d1, d2, d3};
}

}  // namespace hsd
