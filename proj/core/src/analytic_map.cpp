#include "hsd/analytic_map.hpp"

#include <cmath>
#include <utility>
#include <variant>

#include "hsd/errors.hpp"
#include "quadrature.hpp"

namespace hsd {

namespace {

struct Poly {
    std::vector<cplx> c;
};
struct Mobius {
    cplx a, b, c, d;
};
struct LinPow {
    cplx c0, c1;
    double e;
};
struct LinLog {
    cplx c0, c1;
};
// mul * m + add
struct Scale {
    AnalyticMap m;
    cplx mul, add;
};
struct Sum {
    AnalyticMap x, y;
};
struct Prod {
    AnalyticMap x, y;
};
struct Quot {
    AnalyticMap x, y;
};
struct Comp {
    AnalyticMap outer, inner;
};
struct Anti {
    AnalyticMap derivative;
    cplx value_at_0;
};

using NodeVariant =
    std::variant<Poly, Mobius, LinPow, LinLog, Scale, Sum, Prod, Quot, Comp, Anti>;

cplx poly_value(const std::vector<cplx>& c, cplx z) {
    cplx acc{};
    for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

Jet3 poly_jet(const std::vector<cplx>& c, cplx z) {
    // Synthetic-division Horner: accumulates p, p', p''/2, p'''/6.
    cplx b0{}, b1{}, b2{}, b3{};
    for (size_t i = c.size(); i-- > 0;) {
        b3 = b3 * z + b2;
        b2 = b2 * z + b1;
        b1 = b1 * z + b0;
        b0 = b0 * z + c[i];
    }
    return {b0, b1, 2.0 * b2, 6.0 * b3};
}

cplx linear_pow_value(cplx c0, cplx c1, double e, cplx z) {
    const cplx w = c0 + c1 * z;
    const double rounded = std::nearbyint(e);
    if (e == rounded && std::abs(e) <= 8.0) {
        int n = static_cast<int>(rounded);
        const bool neg = n < 0;
        n = std::abs(n);
        cplx acc = 1.0;
        for (int i = 0; i < n; ++i) acc *= w;
        if (neg) {
            if (acc == 0.0) throw DivisionByZero("negative power of a zero base");
            acc = 1.0 / acc;
        }
        return acc;
    }
    if (!(w.real() > 0.0))
        throw BranchViolation("power base left the right half-plane");
    return std::pow(w, e);
}

}  // namespace

struct AnalyticMap::Node {
    NodeVariant v;
};

namespace {

struct ValueVisitor {
    cplx z;
    cplx operator()(const Poly& n) const { return poly_value(n.c, z); }
    cplx operator()(const Mobius& n) const {
        const cplx den = n.c * z + n.d;
        if (den == 0.0) throw OutOfDomain("evaluation at a Mobius pole");
        return (n.a * z + n.b) / den;
    }
    cplx operator()(const LinPow& n) const { return linear_pow_value(n.c0, n.c1, n.e, z); }
    cplx operator()(const LinLog& n) const {
        const cplx w = n.c0 + n.c1 * z;
        if (!(w.real() > 0.0))
            throw BranchViolation("log argument left the right half-plane");
        return std::log(w);
    }
    cplx operator()(const Scale& n) const { return n.mul * n.m(z) + n.add; }
    cplx operator()(const Sum& n) const { return n.x(z) + n.y(z); }
    cplx operator()(const Prod& n) const { return n.x(z) * n.y(z); }
    cplx operator()(const Quot& n) const {
        const cplx den = n.y(z);
        if (den == 0.0) throw DivisionByZero("map quotient denominator vanished");
        return n.x(z) / den;
    }
    cplx operator()(const Comp& n) const { return n.outer(n.inner(z)); }
    cplx operator()(const Anti& n) const {
        return n.value_at_0 +
               detail::integrate_segment([&](cplx w) { return n.derivative(w); }, z);
    }
};

struct JetVisitor {
    cplx z;
    Jet3 operator()(const Poly& n) const { return poly_jet(n.c, z); }
    Jet3 operator()(const Mobius& n) const {
        const Jet3 num{n.a * z + n.b, n.a, 0.0, 0.0};
        const Jet3 den{n.c * z + n.d, n.c, 0.0, 0.0};
        return num / den;
    }
    Jet3 operator()(const LinPow& n) const {
        return pow(Jet3{n.c0 + n.c1 * z, n.c1, 0.0, 0.0}, n.e);
    }
    Jet3 operator()(const LinLog& n) const {
        return log(Jet3{n.c0 + n.c1 * z, n.c1, 0.0, 0.0});
    }
    Jet3 operator()(const Scale& n) const { return n.mul * n.m.jet(z) + n.add; }
    Jet3 operator()(const Sum& n) const { return n.x.jet(z) + n.y.jet(z); }
    Jet3 operator()(const Prod& n) const { return n.x.jet(z) * n.y.jet(z); }
    Jet3 operator()(const Quot& n) const { return n.x.jet(z) / n.y.jet(z); }
    Jet3 operator()(const Comp& n) const {
        const Jet3 inner = n.inner.jet(z);
        const Jet3 outer = n.outer.jet(inner.f0);
        return compose(outer, inner.f0, inner);
    }
    Jet3 operator()(const Anti& n) const {
        const Jet3 d = n.derivative.jet(z);
        const cplx value = ValueVisitor{z}(n);
        return {value, d.f0, d.f1, d.f2};
    }
};

struct SeriesVisitor {
    int order;
    Series operator()(const Poly& n) const {
        Series s(order);
        const int hi = std::min<int>(order, static_cast<int>(n.c.size()) - 1);
        for (int k = 0; k <= hi; ++k) s[k] = n.c[static_cast<size_t>(k)];
        return s;
    }
    Series operator()(const Mobius& n) const {
        if (n.d == 0.0) throw DivisionByZero("Mobius series requires d != 0");
        return Series({n.b, n.a}).truncated(order) / Series({n.d, n.c}).truncated(order);
    }
    Series operator()(const LinPow& n) const {
        return Series::binomial(n.c0, n.c1, n.e, order);
    }
    Series operator()(const LinLog& n) const { return Series::logarithm(n.c0, n.c1, order); }
    Series operator()(const Scale& n) const { return n.mul * n.m.series(order) + n.add; }
    Series operator()(const Sum& n) const { return n.x.series(order) + n.y.series(order); }
    Series operator()(const Prod& n) const { return n.x.series(order) * n.y.series(order); }
    Series operator()(const Quot& n) const { return n.x.series(order) / n.y.series(order); }
    Series operator()(const Comp& n) const {
        return n.outer.series(order).composed_with(n.inner.series(order));
    }
    Series operator()(const Anti& n) const {
        return n.derivative.series(order).integrated() + n.value_at_0;
    }
};

}  // namespace

cplx AnalyticMap::operator()(cplx z) const { return std::visit(ValueVisitor{z}, node_->v); }

Jet3 AnalyticMap::jet(cplx z) const { return std::visit(JetVisitor{z}, node_->v); }

Series AnalyticMap::series(int order) const {
    return std::visit(SeriesVisitor{order}, node_->v);
}

AnalyticMap AnalyticMap::polynomial(std::vector<cplx> coeffs) {
    if (coeffs.empty()) coeffs.push_back(0.0);
    return AnalyticMap(std::make_shared<const Node>(Node{Poly{std::move(coeffs)}}));
}

AnalyticMap AnalyticMap::identity() { return polynomial({0.0, 1.0}); }

AnalyticMap AnalyticMap::constant(cplx c) { return polynomial({c}); }

AnalyticMap AnalyticMap::mobius(cplx a, cplx b, cplx c, cplx d) {
    if (a * d - b * c == 0.0)
        throw InvalidParameter("Mobius map requires ad - bc != 0");
    return AnalyticMap(std::make_shared<const Node>(Node{Mobius{a, b, c, d}}));
}

AnalyticMap AnalyticMap::linear_power(cplx c0, cplx c1, double e) {
    return AnalyticMap(std::make_shared<const Node>(Node{LinPow{c0, c1, e}}));
}

AnalyticMap AnalyticMap::linear_log(cplx c0, cplx c1) {
    return AnalyticMap(std::make_shared<const Node>(Node{LinLog{c0, c1}}));
}

AnalyticMap AnalyticMap::compose(AnalyticMap outer, AnalyticMap inner) {
    return AnalyticMap(
        std::make_shared<const Node>(Node{Comp{std::move(outer), std::move(inner)}}));
}

AnalyticMap AnalyticMap::antiderivative(AnalyticMap derivative, cplx value_at_0) {
    return AnalyticMap(
        std::make_shared<const Node>(Node{Anti{std::move(derivative), value_at_0}}));
}

AnalyticMap operator+(const AnalyticMap& x, const AnalyticMap& y) {
    return AnalyticMap(std::make_shared<const AnalyticMap::Node>(AnalyticMap::Node{Sum{x, y}}));
}

AnalyticMap operator-(const AnalyticMap& x, const AnalyticMap& y) {
    return x + (cplx{-1.0} * y);
}

AnalyticMap operator*(const AnalyticMap& x, const AnalyticMap& y) {
    return AnalyticMap(std::make_shared<const AnalyticMap::Node>(AnalyticMap::Node{Prod{x, y}}));
}

AnalyticMap operator/(const AnalyticMap& x, const AnalyticMap& y) {
    return AnalyticMap(std::make_shared<const AnalyticMap::Node>(AnalyticMap::Node{Quot{x, y}}));
}

AnalyticMap operator*(cplx c, AnalyticMap x) {
    return AnalyticMap(
        std::make_shared<const AnalyticMap::Node>(AnalyticMap::Node{Scale{std::move(x), c, 0.0}}));
}

AnalyticMap operator+(AnalyticMap x, cplx c) {
    return AnalyticMap(
        std::make_shared<const AnalyticMap::Node>(AnalyticMap::Node{Scale{std::move(x), 1.0, c}}));
}

AnalyticMap operator-(cplx c, AnalyticMap x) {
    return AnalyticMap(
        std::make_shared<const AnalyticMap::Node>(AnalyticMap::Node{Scale{std::move(x), -1.0, c}}));
}

}  // namespace hsd
