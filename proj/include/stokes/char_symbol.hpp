#ifndef STOKES_CHAR_SYMBOL_HPP
#define STOKES_CHAR_SYMBOL_HPP

#include "stokes/xpoly.hpp"

namespace stokes {

/// Characteristic symbol P(x, xi) = sum_m c_m(x) xi^m with polynomial
/// coefficients c_m.
///
/// When the leading coefficient is a nonzero constant the symbol is
/// normalized to monic form. A non-constant leading coefficient is admitted
/// (the Noumi-Yamada symbol has c_n = x^3); its zeros are singular points of
/// the root field and are added to the singularity list automatically.
class CharSymbol {
public:
    CharSymbol(std::vector<XPoly> xi_coeffs, std::vector<Complex> singularities = {});

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<XPoly>& xi_coeffs() const { return coeffs_; }
    const std::vector<Complex>& singularities() const { return singular_; }

    /// Coefficients of P(x, .) as a polynomial in xi at fixed x.
    std::vector<Complex> coeffs_at(Complex x) const;
    /// Coefficients of dP/dx(x, .) at fixed x.
    std::vector<Complex> dx_coeffs_at(Complex x) const;

    Complex eval(Complex x, Complex xi) const;
    Complex eval_dxi(Complex x, Complex xi) const;
    Complex eval_dx(Complex x, Complex xi) const;

    /// d(xi_root)/dx = -P_x / P_xi at a simple root.
    Complex root_velocity(Complex x, Complex xi) const;

    double coeff_scale_at(Complex x) const;  // max |c_m(x)|
    bool near_singularity(Complex x, double radius) const;

private:
    std::vector<XPoly> coeffs_;    // ascending xi powers, size degree()+1
    std::vector<XPoly> dcoeffs_;   // x-derivatives of coeffs_
    std::vector<Complex> singular_;
};

/// All n roots of P(x, .) at fixed x, unordered, multiple roots repeated.
/// Residual guarantee: |P(x, r)| <= tol_root * (1 + coeff scale at x).
std::vector<Complex> eval_roots(const CharSymbol& sym, Complex x,
                                double tol_root = 1e-12);

}  // namespace stokes

#endif
