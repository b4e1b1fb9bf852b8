#pragma once

#include <optional>

#include "hsd/catalog.hpp"
#include "hsd/complex.hpp"

namespace hsd {

/// Where an order value comes from.
enum class OrderSource {
    analytic,                 // analytic bounded-Schwarzian family
    saturated_dilatation,     // lambda >= 3/2, dilatation sup forced to 1
    explicit_dilatation_sup,  // caller-supplied dilatation sup
    empirical,
};

const char* to_string(OrderSource s);

struct OrderEstimate {
    double lambda;
    double R_sup;       // supremum of dilatation hyperbolic norms used
    double order;       // sqrt(lambda/2 + 1 + R_sup^2/2) + R_sup/2
    double half_order;  // the square-root term alone (the a2 bound)
    OrderSource source;
};

/// Order of the analytic family with Schwarzian norm <= lambda:
/// sqrt(1 + lambda/2).
double analytic_order(double lambda);

/// Order of the harmonic affine-and-linear-invariant family with Schwarzian
/// norm <= lambda. For lambda >= 3/2 the dilatation sup is 1 and R_sup may be
/// omitted (supplying anything else is an error). For lambda = 0 the sup is 0.
/// For 0 < lambda < 3/2 it is not known and the caller must supply a value;
/// the result is then conditional on it.
OrderEstimate harmonic_order(double lambda, std::optional<double> R_sup = {});

/// Inverse relation: the dilatation sup expressed through lambda and the
/// order, -2 alpha + sqrt(8 alpha^2 - 2 lambda - 4).
double dilatation_sup_from_order(double lambda, double alpha);

/// Strict lower bound sqrt(2 lambda / 3) for 0 < lambda < 3/2.
double dilatation_sup_lower_bound(double lambda);

struct CoefficientTriple {
    cplx a2, a3, b2;
};

/// Modulus of the Marty stationarity residual 3 a3 - 2 a2^2 - 2|b2|^2 - 1;
/// zero at an extremal mapping.
double marty_residual(const CoefficientTriple& c);

/// Coefficients of the extremal construction: a2 = a + R/2, b2 = R/2, and a3
/// from the series oracle (not hand-coded), so the Marty check exercises the
/// construction itself.
CoefficientTriple extremal_coefficients(const FamilyParams& p);

}  // namespace hsd
