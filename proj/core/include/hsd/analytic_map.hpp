#pragma once

#include <memory>
#include <vector>

#include "hsd/complex.hpp"
#include "hsd/jet.hpp"
#include "hsd/series.hpp"

namespace hsd {

/// An analytic function of one complex variable, represented as a closed-form
/// expression tree. Every map can be evaluated three ways:
///   - value(z)           plain evaluation,
///   - jet(z)             value plus first three derivatives (exact rules),
///   - series(order)      Maclaurin coefficients (independent rules).
/// Maps are immutable values; copies share structure.
class AnalyticMap {
  public:
    cplx operator()(cplx z) const;
    Jet3 jet(cplx z) const;
    Series series(int order = Series::kDefaultOrder) const;

    static AnalyticMap polynomial(std::vector<cplx> coeffs);
    static AnalyticMap identity();
    static AnalyticMap constant(cplx c);
    /// (a z + b) / (c z + d), with ad - bc != 0.
    static AnalyticMap mobius(cplx a, cplx b, cplx c, cplx d);
    /// (c0 + c1 z)^e. Integral exponents are evaluated by multiplication;
    /// otherwise the base must stay in the right half-plane.
    static AnalyticMap linear_power(cplx c0, cplx c1, double e);
    /// log(c0 + c1 z), principal branch.
    static AnalyticMap linear_log(cplx c0, cplx c1);
    static AnalyticMap compose(AnalyticMap outer, AnalyticMap inner);
    /// Map with the given derivative and value at 0; values away from 0 come
    /// from Gauss-Legendre quadrature along the segment [0, z].
    static AnalyticMap antiderivative(AnalyticMap derivative, cplx value_at_0 = 0.0);

    friend AnalyticMap operator+(const AnalyticMap& x, const AnalyticMap& y);
    friend AnalyticMap operator-(const AnalyticMap& x, const AnalyticMap& y);
    friend AnalyticMap operator*(const AnalyticMap& x, const AnalyticMap& y);
    friend AnalyticMap operator/(const AnalyticMap& x, const AnalyticMap& y);
    friend AnalyticMap operator*(cplx c, AnalyticMap x);
    friend AnalyticMap operator+(AnalyticMap x, cplx c);
    friend AnalyticMap operator-(cplx c, AnalyticMap x);

    struct Node;  // implementation detail

  private:
    explicit AnalyticMap(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

inline AnalyticMap operator*(AnalyticMap x, cplx c) { return c * std::move(x); }
inline AnalyticMap operator+(cplx c, AnalyticMap x) { return std::move(x) + c; }
inline AnalyticMap operator-(AnalyticMap x, cplx c) { return std::move(x) + (-c); }

}  // namespace hsd
