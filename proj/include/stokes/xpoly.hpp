#ifndef STOKES_XPOLY_HPP
#define STOKES_XPOLY_HPP

#include <cstddef>

#include "stokes/types.hpp"

namespace stokes {

/// Polynomial in x with complex coefficients, ascending powers.
/// The zero polynomial is the empty coefficient list; otherwise the trailing
/// coefficient is nonzero.
class XPoly {
public:
    XPoly() = default;
    explicit XPoly(std::vector<Complex> coeffs) : c_(std::move(coeffs)) { trim(); }
    static XPoly constant(Complex v) { return XPoly({v}); }

    const std::vector<Complex>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly

    Complex at(std::size_t k) const { return k < c_.size() ? c_[k] : Complex{}; }

    Complex eval(Complex x) const {
        Complex acc{};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    XPoly derivative() const {
        if (c_.size() <= 1) return XPoly{};
        std::vector<Complex> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * double(i);
        return XPoly(std::move(d));
    }

    friend XPoly operator+(const XPoly& a, const XPoly& b) {
        std::vector<Complex> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.at(i) + b.at(i);
        return XPoly(std::move(r));
    }
    friend XPoly operator-(const XPoly& a, const XPoly& b) {
        std::vector<Complex> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.at(i) - b.at(i);
        return XPoly(std::move(r));
    }
    friend XPoly operator*(const XPoly& a, const XPoly& b) {
        if (a.is_zero() || b.is_zero()) return XPoly{};
        std::vector<Complex> r(a.c_.size() + b.c_.size() - 1, Complex{});
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return XPoly(std::move(r));
    }
    friend XPoly operator*(Complex s, const XPoly& a) {
        std::vector<Complex> r(a.c_);
        for (auto& v : r) v *= s;
        return XPoly(std::move(r));
    }

    double max_coeff_mag() const {
        double m = 0.0;
        for (auto v : c_) m = std::max(m, std::abs(v));
        return m;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == Complex{}) c_.pop_back();
    }
    std::vector<Complex> c_;
};

}  // namespace stokes

#endif
