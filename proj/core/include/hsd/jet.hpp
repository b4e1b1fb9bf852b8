#pragma once

#include <cmath>

#include "hsd/complex.hpp"
#include "hsd/errors.hpp"

namespace hsd {

/// Value and first three complex derivatives of an analytic function at an
/// implicit base point. All arithmetic is purely local: results depend only
/// on the operand fields, never on where the jet was produced.
struct Jet3 {
    cplx f0{};  // f(z0)
    cplx f1{};  // f'(z0)
    cplx f2{};  // f''(z0)
    cplx f3{};  // f'''(z0)

    /// Jet of z -> z at z0.
    static Jet3 identity(cplx z0) { return {z0, 1.0, 0.0, 0.0}; }

    /// Jet of a constant function.
    static Jet3 constant(cplx c) { return {c, 0.0, 0.0, 0.0}; }
};

inline bool is_finite(const Jet3& j) {
    return is_finite(j.f0) && is_finite(j.f1) && is_finite(j.f2) && is_finite(j.f3);
}

inline void ensure_finite(const Jet3& j, const char* op) {
    if (!is_finite(j)) throw NonFiniteValue(std::string(op) + " produced a non-finite jet");
}

inline Jet3 operator+(const Jet3& x, const Jet3& y) {
    return {x.f0 + y.f0, x.f1 + y.f1, x.f2 + y.f2, x.f3 + y.f3};
}

inline Jet3 operator-(const Jet3& x, const Jet3& y) {
    return {x.f0 - y.f0, x.f1 - y.f1, x.f2 - y.f2, x.f3 - y.f3};
}

inline Jet3 operator-(const Jet3& x) { return {-x.f0, -x.f1, -x.f2, -x.f3}; }

inline Jet3 operator*(cplx c, const Jet3& x) { return {c * x.f0, c * x.f1, c * x.f2, c * x.f3}; }
inline Jet3 operator*(const Jet3& x, cplx c) { return c * x; }
inline Jet3 operator+(const Jet3& x, cplx c) { return {x.f0 + c, x.f1, x.f2, x.f3}; }
inline Jet3 operator+(cplx c, const Jet3& x) { return x + c; }
inline Jet3 operator-(const Jet3& x, cplx c) { return x + (-c); }
inline Jet3 operator-(cplx c, const Jet3& x) { return (-x) + c; }

/// Leibniz rule through order three.
inline Jet3 operator*(const Jet3& x, const Jet3& y) {
    return {x.f0 * y.f0,
            x.f1 * y.f0 + x.f0 * y.f1,
            x.f2 * y.f0 + 2.0 * x.f1 * y.f1 + x.f0 * y.f2,
            x.f3 * y.f0 + 3.0 * x.f2 * y.f1 + 3.0 * x.f1 * y.f2 + x.f0 * y.f3};
}

/// Quotient rule, solved from q*y = x order by order.
inline Jet3 operator/(const Jet3& x, const Jet3& y) {
    if (y.f0 == 0.0) throw DivisionByZero("jet division requires a nonzero denominator value");
    const cplx q0 = x.f0 / y.f0;
    const cplx q1 = (x.f1 - q0 * y.f1) / y.f0;
    const cplx q2 = (x.f2 - 2.0 * q1 * y.f1 - q0 * y.f2) / y.f0;
    const cplx q3 = (x.f3 - 3.0 * q2 * y.f1 - 3.0 * q1 * y.f2 - q0 * y.f3) / y.f0;
    Jet3 q{q0, q1, q2, q3};
    ensure_finite(q, "jet division");
    return q;
}

inline Jet3 operator/(const Jet3& x, cplx c) { return x * (1.0 / c); }
inline Jet3 operator/(cplx c, const Jet3& x) { return Jet3::constant(c) / x; }

/// Jet of outer∘inner. `outer` must be a jet at `outer_base`, and the inner
/// value must coincide with that base point (caller contract).
inline Jet3 compose(const Jet3& outer, cplx outer_base, const Jet3& inner) {
    if (std::abs(inner.f0 - outer_base) > 1e-9 * std::max(1.0, std::abs(outer_base)))
        throw BasePointMismatch("jet composition: inner value does not match outer base point");
    const cplx g1 = inner.f1;
    const cplx g2 = inner.f2;
    const cplx g3 = inner.f3;
    return {outer.f0,
            outer.f1 * g1,
            outer.f1 * g2 + outer.f2 * g1 * g1,
            outer.f1 * g3 + 3.0 * outer.f2 * g1 * g2 + outer.f3 * g1 * g1 * g1};
}

/// Principal-branch logarithm of a jet; requires Re f0 > 0.
inline Jet3 log(const Jet3& x) {
    if (!(x.f0.real() > 0.0))
        throw BranchViolation("jet log requires a value in the right half-plane");
    const cplx r1 = x.f1 / x.f0;
    const cplx r2 = x.f2 / x.f0;
    const cplx r3 = x.f3 / x.f0;
    Jet3 out{std::log(x.f0), r1, r2 - r1 * r1, r3 - 3.0 * r1 * r2 + 2.0 * r1 * r1 * r1};
    ensure_finite(out, "jet log");
    return out;
}

/// x^a via the principal branch. Integral exponents of modulus <= 8 are
/// expanded by repeated multiplication and carry no branch restriction;
/// otherwise Re f0 > 0 is required.
inline Jet3 pow(const Jet3& x, double a) {
    const double rounded = std::nearbyint(a);
    if (a == rounded && std::abs(a) <= 8.0) {
        int n = static_cast<int>(rounded);
        const bool negative = n < 0;
        n = std::abs(n);
        Jet3 acc = Jet3::constant(1.0);
        for (int i = 0; i < n; ++i) acc = acc * x;
        return negative ? Jet3::constant(1.0) / acc : acc;
    }
    if (!(x.f0.real() > 0.0))
        throw BranchViolation("jet pow requires a value in the right half-plane");
    const cplx p = std::pow(x.f0, a);
    const cplx pm1 = p / x.f0;
    const cplx pm2 = pm1 / x.f0;
    const cplx pm3 = pm2 / x.f0;
    const cplx d1 = x.f1;
    Jet3 out{p,
             a * pm1 * d1,
             a * (a - 1.0) * pm2 * d1 * d1 + a * pm1 * x.f2,
             a * (a - 1.0) * (a - 2.0) * pm3 * d1 * d1 * d1 +
                 3.0 * a * (a - 1.0) * pm2 * d1 * x.f2 + a * pm1 * x.f3};
    ensure_finite(out, "jet pow");
    return out;
}

}  // namespace hsd
