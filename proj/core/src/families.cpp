#include "hsd/families.hpp"

#include <algorithm>
#include <cmath>

#include "hsd/errors.hpp"

namespace hsd {

const char* to_string(OrderSource s) {
    switch (s) {
        case OrderSource::analytic: return "analytic";
        case OrderSource::saturated_dilatation: return "saturated_dilatation";
        case OrderSource::explicit_dilatation_sup: return "explicit_dilatation_sup";
        case OrderSource::empirical: return "empirical";
    }
    return "unknown";
}

double analytic_order(double lambda) {
    if (!(lambda >= 0.0)) throw InvalidParameter("order formula requires lambda >= 0");
    return std::sqrt(1.0 + lambda / 2.0);
}

OrderEstimate harmonic_order(double lambda, std::optional<double> R_sup) {
    if (!(lambda >= 0.0)) throw InvalidParameter("order formula requires lambda >= 0");
    OrderEstimate est{};
    est.lambda = lambda;
    if (lambda >= 1.5) {
        if (R_sup && *R_sup != 1.0)
            throw ConsistencyError(
                "for lambda >= 3/2 the dilatation sup is 1; a different R_sup is inconsistent");
        est.R_sup = 1.0;
        est.source = OrderSource::saturated_dilatation;
    } else if (lambda == 0.0) {
        if (R_sup && *R_sup != 0.0)
            throw InvalidParameter("for lambda = 0 the dilatation sup is 0");
        est.R_sup = 0.0;
        est.source = OrderSource::explicit_dilatation_sup;
    } else {
        if (!R_sup)
            throw InvalidParameter(
                "for 0 < lambda < 3/2 the dilatation sup is unknown; supply R_sup explicitly");
        if (!(*R_sup >= 0.0 && *R_sup <= 1.0))
            throw InvalidParameter("R_sup must lie in [0, 1]");
        est.R_sup = *R_sup;
        est.source = OrderSource::explicit_dilatation_sup;
    }
    est.half_order = std::sqrt(lambda / 2.0 + 1.0 + est.R_sup * est.R_sup / 2.0);
    est.order = est.half_order + est.R_sup / 2.0;
    return est;
}

double dilatation_sup_from_order(double lambda, double alpha) {
    const double radicand = 8.0 * alpha * alpha - 2.0 * lambda - 4.0;
    if (!(radicand >= 0.0))
        throw InvalidParameter("order/lambda pair puts the radicand below zero");
    const double r = -2.0 * alpha + std::sqrt(radicand);
    if (r < -1e-9 || r > 1.0 + 1e-9)
        throw InvalidParameter("recovered dilatation sup leaves [0, 1]");
    return std::clamp(r, 0.0, 1.0);
}

double dilatation_sup_lower_bound(double lambda) {
    if (!(lambda > 0.0 && lambda < 1.5))
        throw InvalidParameter("lower bound applies for lambda in (0, 3/2)");
    return std::sqrt(2.0 * lambda / 3.0);
}

double marty_residual(const CoefficientTriple& c) {
    return std::abs(3.0 * c.a3 - 2.0 * c.a2 * c.a2 - 2.0 * abs_sq(c.b2) - 1.0);
}

CoefficientTriple extremal_coefficients(const FamilyParams& p) {
    if (!(p.lambda > 0.0))
        throw InvalidParameter("extremal coefficients require lambda > 0");
    const HarmonicMap f0 = make_extremal(p);
    const Series h = f0.analytic_part().series(6);
    CoefficientTriple c{};
    c.a2 = p.a + p.R / 2.0;
    c.b2 = p.R / 2.0;
    c.a3 = h[3];
    if (std::abs(c.a2 - std::sqrt(p.lambda / 2.0 + 1.0 + p.R * p.R / 2.0)) > 1e-10)
        throw ConsistencyError("extremal a2 drifted from the half-order value");
    return c;
}

}  // namespace hsd
