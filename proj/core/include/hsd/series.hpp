#pragma once

#include <vector>

#include "hsd/complex.hpp"
#include "hsd/errors.hpp"

namespace hsd {

/// Truncated Maclaurin series: coefficients c[0..N] of a function analytic at
/// the origin. Every operation truncates consistently at the common order.
class Series {
  public:
    static constexpr int kDefaultOrder = 16;

    explicit Series(int order);
    Series(std::vector<cplx> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    cplx operator[](int k) const { return coeffs_[static_cast<size_t>(k)]; }
    cplx& operator[](int k) { return coeffs_[static_cast<size_t>(k)]; }
    const std::vector<cplx>& coeffs() const { return coeffs_; }

    /// Coefficients of z -> z.
    static Series identity(int order);
    static Series constant(cplx c, int order);

    /// Generalized binomial series of (c0 + c1 z)^e; needs c0 != 0 and, for
    /// non-integral e, Re c0 > 0 (principal branch of c0^e).
    static Series binomial(cplx c0, cplx c1, double e, int order);

    /// Series of log(c0 + c1 z), principal branch, Re c0 > 0.
    static Series logarithm(cplx c0, cplx c1, int order);

    Series truncated(int order) const;

    /// Termwise antiderivative vanishing at 0 (same truncation order).
    Series integrated() const;
    Series differentiated() const;

    /// Substitution this(inner); requires inner[0] == 0.
    Series composed_with(const Series& inner) const;

    friend Series operator+(const Series& x, const Series& y);
    friend Series operator-(const Series& x, const Series& y);
    friend Series operator*(const Series& x, const Series& y);  // Cauchy product
    friend Series operator/(const Series& x, const Series& y);  // y[0] != 0
    friend Series operator*(cplx c, const Series& x);
    friend Series operator+(const Series& x, cplx c);

  private:
    std::vector<cplx> coeffs_;
};

inline Series operator*(const Series& x, cplx c) { return c * x; }
inline Series operator+(cplx c, const Series& x) { return x + c; }
inline Series operator-(const Series& x, cplx c) { return x + (-c); }

}  // namespace hsd
