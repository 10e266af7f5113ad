#ifndef STOKES_POLY_ROOTS_HPP
#define STOKES_POLY_ROOTS_HPP

#include "stokes/types.hpp"

namespace stokes {

/// All complex roots (with multiplicity) of sum_k coeffs[k] z^k.
/// Aberth-Ehrlich simultaneous iteration followed by a Newton polish.
/// Degree 0 yields an empty list; a (near-)zero leading coefficient or
/// non-convergence raises NumericError with the offending data.
std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs);

/// One-step residual |p(z)| evaluated by Horner.
Complex poly_eval(const std::vector<Complex>& coeffs, Complex z);
Complex poly_eval_deriv(const std::vector<Complex>& coeffs, Complex z);

}  // namespace stokes

#endif
