#ifndef STOKES_RESULTANT_HPP
#define STOKES_RESULTANT_HPP

#include "stokes/char_symbol.hpp"

namespace stokes {

/// Res_xi(P, dP/dxi) as a polynomial in x (double coefficients, normalized so
/// the largest magnitude is 1). Zeros are the turning-point candidates plus
/// the zeros of the leading coefficient.
///
/// Coefficient degrees <= 12 use exact rational-complex arithmetic
/// (fraction-free Bareiss on the Sylvester matrix); higher degrees fall back
/// to numeric determinant sampling at scaled roots of unity with DFT
/// interpolation. rq_force_numeric exists for cross-checking the two routes.
std::vector<Complex> discriminant_poly(const CharSymbol& sym, bool force_numeric = false);

}  // namespace stokes

#endif
