#include "hsd/series.hpp"

#include <algorithm>

namespace hsd {

namespace {

int common_order(const Series& x, const Series& y) {
    return std::max(x.order(), y.order());
}

}  // namespace

Series::Series(int order) : coeffs_(static_cast<size_t>(order) + 1, cplx{}) {
    if (order < 0) throw InvalidParameter("series order must be non-negative");
}

Series::Series(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw InvalidParameter("series needs at least the constant coefficient");
}

Series Series::identity(int order) {
    Series s(order);
    if (order >= 1) s[1] = 1.0;
    return s;
}

Series Series::constant(cplx c, int order) {
    Series s(order);
    s[0] = c;
    return s;
}

Series Series::binomial(cplx c0, cplx c1, double e, int order) {
    if (c0 == 0.0) throw DivisionByZero("binomial series requires a nonzero constant term");
    const bool integral = (e == std::nearbyint(e));
    if (!integral && !(c0.real() > 0.0))
        throw BranchViolation("binomial series requires Re c0 > 0 for non-integral exponents");
    const cplx ratio = c1 / c0;
    Series s(order);
    // c0^e * sum_k C(e, k) (c1/c0)^k z^k
    cplx lead;
    if (integral && std::abs(e) <= 64.0) {
        lead = 1.0;
        int n = static_cast<int>(std::nearbyint(std::abs(e)));
        for (int i = 0; i < n; ++i) lead *= c0;
        if (e < 0) lead = 1.0 / lead;
    } else {
        lead = std::pow(c0, e);
    }
    cplx term = lead;
    s[0] = term;
    for (int k = 1; k <= order; ++k) {
        term *= ratio * ((e - static_cast<double>(k) + 1.0) / static_cast<double>(k));
        s[k] = term;
    }
    return s;
}

Series Series::logarithm(cplx c0, cplx c1, int order) {
    if (!(c0.real() > 0.0))
        throw BranchViolation("log series requires Re c0 > 0");
    const cplx ratio = c1 / c0;
    Series s(order);
    s[0] = std::log(c0);
    cplx p = 1.0;
    for (int k = 1; k <= order; ++k) {
        p *= -ratio;
        s[k] = -p / static_cast<double>(k);
    }
    return s;
}

Series Series::truncated(int order) const {
    Series out(order);
    const int n = std::min(order, this->order());
    for (int k = 0; k <= n; ++k) out[k] = (*this)[k];
    return out;
}

Series Series::integrated() const {
    Series out(order());
    for (int k = 1; k <= order(); ++k) out[k] = (*this)[k - 1] / static_cast<double>(k);
    return out;
}

Series Series::differentiated() const {
    Series out(order());
    for (int k = 0; k < order(); ++k)
        out[k] = static_cast<double>(k + 1) * (*this)[k + 1];
    return out;
}

Series Series::composed_with(const Series& inner) const {
    if (inner[0] != 0.0)
        throw InvalidParameter("series composition requires inner constant term 0");
    const int n = common_order(*this, inner);
    Series acc = Series::constant((*this)[order()], n);
    for (int k = order() - 1; k >= 0; --k) {
        acc = acc * inner;
        acc[0] += (*this)[k];
    }
    return acc;
}

Series operator+(const Series& x, const Series& y) {
    Series out(common_order(x, y));
    for (int k = 0; k <= out.order(); ++k) {
        if (k <= x.order()) out[k] += x[k];
        if (k <= y.order()) out[k] += y[k];
    }
    return out;
}

Series operator-(const Series& x, const Series& y) {
    return x + (cplx{-1.0} * y);
}

Series operator*(const Series& x, const Series& y) {
    Series out(common_order(x, y));
    for (int k = 0; k <= out.order(); ++k) {
        cplx acc{};
        const int lo = std::max(0, k - y.order());
        const int hi = std::min(k, x.order());
        for (int i = lo; i <= hi; ++i) acc += x[i] * y[k - i];
        out[k] = acc;
    }
    return out;
}

Series operator/(const Series& x, const Series& y) {
    if (y[0] == 0.0) throw DivisionByZero("series division requires a nonzero constant term");
    Series q(common_order(x, y));
    for (int k = 0; k <= q.order(); ++k) {
        cplx acc = k <= x.order() ? x[k] : cplx{};
        const int hi = std::min(k, y.order());
        for (int j = 1; j <= hi; ++j) acc -= y[j] * q[k - j];
        q[k] = acc / y[0];
    }
    return q;
}

Series operator*(cplx c, const Series& x) {
    Series out(x.order());
    for (int k = 0; k <= x.order(); ++k) out[k] = c * x[k];
    return out;
}

Series operator+(const Series& x, cplx c) {
    Series out = x;
    out[0] += c;
    return out;
}

}  // namespace hsd
