#include "stokes/char_symbol.hpp"

#include <sstream>

#include "stokes/poly_roots.hpp"

namespace stokes {

CharSymbol::CharSymbol(std::vector<XPoly> xi_coeffs, std::vector<Complex> singularities)
    : coeffs_(std::move(xi_coeffs)), singular_(std::move(singularities)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    if (degree() < 2) throw InputError("CharSymbol: xi-degree must be at least 2");

    const XPoly& lead = coeffs_.back();
    if (lead.degree() == 0) {
        Complex lc = lead.at(0);
        if (lc != Complex(1.0, 0.0)) {
            for (auto& c : coeffs_) c = (1.0 / lc) * c;
        }
    } else {
        // zeros of the leading coefficient are singular points of the root field
        for (Complex z : poly_roots(lead.coeffs())) {
            bool known = false;
            for (Complex s : singular_)
                if (std::abs(s - z) < 1e-9) known = true;
            if (!known) singular_.push_back(z);
        }
    }
    dcoeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) dcoeffs_.push_back(c.derivative());
}

std::vector<Complex> CharSymbol::coeffs_at(Complex x) const {
    std::vector<Complex> out(coeffs_.size());
    for (std::size_t m = 0; m < coeffs_.size(); ++m) out[m] = coeffs_[m].eval(x);
    return out;
}

std::vector<Complex> CharSymbol::dx_coeffs_at(Complex x) const {
    std::vector<Complex> out(dcoeffs_.size());
    for (std::size_t m = 0; m < dcoeffs_.size(); ++m) out[m] = dcoeffs_[m].eval(x);
    return out;
}

Complex CharSymbol::eval(Complex x, Complex xi) const {
    Complex acc{};
    for (std::size_t m = coeffs_.size(); m-- > 0;) acc = acc * xi + coeffs_[m].eval(x);
    return acc;
}

Complex CharSymbol::eval_dxi(Complex x, Complex xi) const {
    Complex acc{};
    for (std::size_t m = coeffs_.size(); m-- > 1;) acc = acc * xi + coeffs_[m].eval(x) * double(m);
    return acc;
}

Complex CharSymbol::eval_dx(Complex x, Complex xi) const {
    Complex acc{};
    for (std::size_t m = dcoeffs_.size(); m-- > 0;) acc = acc * xi + dcoeffs_[m].eval(x);
    return acc;
}

Complex CharSymbol::root_velocity(Complex x, Complex xi) const {
    Complex dxi = eval_dxi(x, xi);
    if (std::abs(dxi) < 1e-300) return Complex(0, 0);
    return -eval_dx(x, xi) / dxi;
}

double CharSymbol::coeff_scale_at(Complex x) const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c.eval(x)));
    return m;
}

bool CharSymbol::near_singularity(Complex x, double radius) const {
    for (Complex s : singular_)
        if (std::abs(x - s) < radius) return true;
    return false;
}

std::vector<Complex> eval_roots(const CharSymbol& sym, Complex x, double tol_root) {
    if (!is_finite(x)) throw InputError("eval_roots: non-finite x");
    auto c = sym.coeffs_at(x);
    std::vector<Complex> roots;
    try {
        roots = poly_roots(c);
    } catch (const NumericError& e) {
        std::ostringstream os;
        os << "eval_roots failed at x=(" << x.real() << "," << x.imag() << "): " << e.what();
        throw NumericError(os.str());
    }
    if (static_cast<int>(roots.size()) != sym.degree()) {
        std::ostringstream os;
        os << "eval_roots: degree dropped at x=(" << x.real() << "," << x.imag()
           << ") (near a singular point?)";
        throw NumericError(os.str());
    }
    double scale = 1.0 + sym.coeff_scale_at(x);
    for (Complex r : roots) {
        double res = std::abs(sym.eval(x, r));
        double rscale = scale * (1.0 + std::pow(std::abs(r), sym.degree()));
        if (!(res <= 1e4 * tol_root * rscale)) {
            std::ostringstream os;
            os << "eval_roots: residual " << res << " above tolerance at x=(" << x.real() << ","
               << x.imag() << ")";
            throw NumericError(os.str());
        }
    }
    return roots;
}

}  // namespace stokes
