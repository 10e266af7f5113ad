#ifndef STOKES_TYPES_HPP
#define STOKES_TYPES_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace stokes {

using Complex = std::complex<double>;
using Polyline = std::vector<Complex>;

/// Bad user input (malformed files, violated preconditions). CLI exit code 1.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure (non-convergence, ambiguous matching, ...). CLI exit code 2.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Axis-aligned rectangle in the x-plane.
struct Rect {
    double x0 = -3.0, y0 = -3.0, x1 = 3.0, y1 = 3.0;

    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    double diag() const { return std::hypot(width(), height()); }
    Complex center() const { return {0.5 * (x0 + x1), 0.5 * (y0 + y1)}; }

    bool contains(Complex z, double margin = 0.0) const {
        return z.real() >= x0 - margin && z.real() <= x1 + margin &&
               z.imag() >= y0 - margin && z.imag() <= y1 + margin;
    }
};

/// Shared numerical tolerances. Defaults are the production values; tests
/// may loosen or tighten individual knobs.
struct Tolerances {
    double tol_root = 1e-12;      // polynomial root residual, relative to coeff scale
    double tol_tp = 1e-5;         // root-gap threshold identifying a coalescence
    double tol_vtp = 1e-10;       // |F| convergence threshold for virtual turning points
    double tp_clearance = 1e-3;   // minimum path distance from turning points
    double tol_quad = 1e-12;      // absolute quadrature error budget per integral
    double vtp_dedupe = 1e-6;     // merge radius for located virtual turning points
    double cluster_tol = 1e-6;    // discriminant-root clustering (multiplicity)
    double tol_alpha = 1e-12;     // |sum alpha| admissibility (Noumi-Yamada)
    double tol_f = 1e-10;         // Noumi-Yamada state residual
};

inline double sqr(double v) { return v * v; }

}  // namespace stokes

#endif
