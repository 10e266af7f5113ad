#include "stokes/resultant.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>

namespace stokes {
namespace {

using Rat = boost::multiprecision::cpp_rational;

struct RatComplex {
    Rat re, im;
    bool is_zero() const { return re == 0 && im == 0; }
};

RatComplex operator+(const RatComplex& a, const RatComplex& b) { return {a.re + b.re, a.im + b.im}; }
RatComplex operator-(const RatComplex& a, const RatComplex& b) { return {a.re - b.re, a.im - b.im}; }
RatComplex operator*(const RatComplex& a, const RatComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
RatComplex rc_div(const RatComplex& a, const RatComplex& b) {
    Rat d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

// polynomial over Q(i), ascending powers, exact-zero trimmed
using RatPoly = std::vector<RatComplex>;

void rp_trim(RatPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

RatPoly rp_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1, RatComplex{});
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    rp_trim(r);
    return r;
}

RatPoly rp_sub(const RatPoly& a, const RatPoly& b) {
    RatPoly r(std::max(a.size(), b.size()), RatComplex{});
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
    rp_trim(r);
    return r;
}

// exact division (Bareiss guarantees divisibility)
RatPoly rp_div_exact(RatPoly num, const RatPoly& den) {
    if (den.empty()) throw NumericError("resultant: division by zero polynomial");
    if (num.empty()) return {};
    if (num.size() < den.size())
        throw NumericError("resultant: inexact polynomial division (degree)");
    RatPoly q(num.size() - den.size() + 1, RatComplex{});
    for (std::size_t k = q.size(); k-- > 0;) {
        RatComplex coef = rc_div(num[k + den.size() - 1], den.back());
        q[k] = coef;
        for (std::size_t j = 0; j < den.size(); ++j)
            num[k + j] = num[k + j] - coef * den[j];
    }
    for (const auto& c : num)
        if (!c.is_zero()) throw NumericError("resultant: inexact polynomial division (remainder)");
    return q;
}

RatPoly xpoly_to_rat(const XPoly& p) {
    RatPoly r;
    r.reserve(p.coeffs().size());
    for (Complex c : p.coeffs()) r.push_back({Rat(c.real()), Rat(c.imag())});
    rp_trim(r);
    return r;
}

/// Fraction-free Bareiss determinant of a matrix of polynomials over Q(i).
RatPoly bareiss_det(std::vector<std::vector<RatPoly>> m) {
    const std::size_t n = m.size();
    int sign = 1;
    RatPoly prev{RatComplex{Rat(1), Rat(0)}};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].empty()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].empty()) ++r;
            if (r == n) return {};  // singular: zero determinant
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                RatPoly num = rp_sub(rp_mul(m[k][k], m[i][j]), rp_mul(m[i][k], m[k][j]));
                m[i][j] = num.empty() ? RatPoly{} : rp_div_exact(std::move(num), prev);
            }
            m[i][k].clear();
        }
        prev = m[k][k];
    }
    RatPoly det = m[n - 1][n - 1];
    if (sign < 0)
        for (auto& c : det) c = RatComplex{-c.re, -c.im};
    return det;
}

std::vector<std::vector<RatPoly>> sylvester(const std::vector<RatPoly>& p, const std::vector<RatPoly>& q) {
    const int dp = static_cast<int>(p.size()) - 1;
    const int dq = static_cast<int>(q.size()) - 1;
    const int n = dp + dq;
    std::vector<std::vector<RatPoly>> m(n, std::vector<RatPoly>(n));
    for (int r = 0; r < dq; ++r)
        for (int c = 0; c <= dp; ++c) m[r][r + c] = p[dp - c];
    for (int r = 0; r < dp; ++r)
        for (int c = 0; c <= dq; ++c) m[dq + r][r + c] = q[dq - c];
    return m;
}

std::vector<Complex> rat_to_double(const RatPoly& p) {
    std::vector<Complex> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        out[i] = Complex(p[i].re.convert_to<double>(), p[i].im.convert_to<double>());
    return out;
}

std::vector<Complex> exact_resultant(const CharSymbol& sym) {
    std::vector<RatPoly> p, q;
    for (const auto& c : sym.xi_coeffs()) p.push_back(xpoly_to_rat(c));
    {  // dP/dxi
        for (std::size_t m = 1; m < sym.xi_coeffs().size(); ++m) {
            RatPoly d = p[m];
            RatComplex f{Rat(static_cast<long>(m)), Rat(0)};
            for (auto& c : d) c = c * f;
            q.push_back(std::move(d));
        }
    }
    while (!p.empty() && p.back().empty()) p.pop_back();
    while (!q.empty() && q.back().empty()) q.pop_back();
    if (p.size() < 2 || q.empty()) throw NumericError("resultant: degenerate symbol");

    // scale all entries: Bareiss keeps exact minors, no normalization needed
    RatPoly det = bareiss_det(sylvester(p, q));
    if (det.empty())
        throw InputError("discriminant identically zero: degenerate symbol (repeated factor)");

    // normalize before the rational->double conversion so huge intermediates
    // cannot overflow
    std::size_t imax = 0;
    auto magn = [](const RatComplex& c) {
        return abs(c.re) + abs(c.im);
    };
    for (std::size_t i = 1; i < det.size(); ++i)
        if (magn(det[i]) > magn(det[imax])) imax = i;
    Rat scale = magn(det[imax]);
    for (auto& c : det) c = RatComplex{c.re / scale, c.im / scale};
    return rat_to_double(det);
}

std::vector<Complex> numeric_det(const CharSymbol& sym, Complex x) {
    // complex LU determinant of the Sylvester matrix evaluated at x
    auto pc = sym.coeffs_at(x);
    auto dc = pc;
    dc.erase(dc.begin());
    for (std::size_t m = 0; m < dc.size(); ++m) dc[m] *= double(m + 1);
    const int dp = static_cast<int>(pc.size()) - 1;
    const int dq = static_cast<int>(dc.size()) - 1;
    const int n = dp + dq;
    std::vector<std::vector<Complex>> a(n, std::vector<Complex>(n, Complex{}));
    for (int r = 0; r < dq; ++r)
        for (int c = 0; c <= dp; ++c) a[r][r + c] = pc[dp - c];
    for (int r = 0; r < dp; ++r)
        for (int c = 0; c <= dq; ++c) a[dq + r][r + c] = dc[dq - c];

    Complex det(1.0, 0.0);
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
        if (std::abs(a[piv][k]) == 0.0) return {Complex{}};
        if (piv != k) {
            std::swap(a[piv], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (int i = k + 1; i < n; ++i) {
            Complex f = a[i][k] / a[k][k];
            for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return {det};
}

std::vector<Complex> numeric_resultant(const CharSymbol& sym) {
    // degree bound: sum over Sylvester rows of the max x-degree in that row
    int dmax = 0;
    for (const auto& c : sym.xi_coeffs()) dmax = std::max(dmax, std::max(0, c.degree()));
    const int n = sym.degree();
    const int bound = (2 * n - 1) * dmax;
    const int samples = bound + 1;
    if (samples == 1) {
        // x-free symbol: resultant is a constant
        return {numeric_det(sym, Complex{})[0]};
    }
    const double radius = 1.5;
    std::vector<Complex> vals(samples);
    for (int k = 0; k < samples; ++k) {
        double ang = 2.0 * M_PI * k / samples;
        vals[k] = numeric_det(sym, radius * Complex(std::cos(ang), std::sin(ang)))[0];
    }
    // inverse DFT, then undo the radius scaling
    std::vector<Complex> coeff(samples);
    for (int m = 0; m < samples; ++m) {
        Complex acc{};
        for (int k = 0; k < samples; ++k) {
            double ang = -2.0 * M_PI * m * k / samples;
            acc += vals[k] * Complex(std::cos(ang), std::sin(ang));
        }
        coeff[m] = acc / double(samples) / std::pow(radius, m);
    }
    double cmax = 0.0;
    for (auto c : coeff) cmax = std::max(cmax, std::abs(c));
    if (cmax == 0.0)
        throw InputError("discriminant identically zero: degenerate symbol (repeated factor)");
    for (auto& c : coeff) c /= cmax;
    for (auto& c : coeff)
        if (std::abs(c) < 1e-12) c = Complex{};
    while (!coeff.empty() && coeff.back() == Complex{}) coeff.pop_back();
    if (coeff.empty())
        throw InputError("discriminant identically zero: degenerate symbol (repeated factor)");
    return coeff;
}

}  // namespace

std::vector<Complex> discriminant_poly(const CharSymbol& sym, bool force_numeric) {
    int dmax = 0;
    for (const auto& c : sym.xi_coeffs()) dmax = std::max(dmax, std::max(0, c.degree()));
    if (!force_numeric && dmax <= 12) return exact_resultant(sym);
    return numeric_resultant(sym);
}

}  // namespace stokes
