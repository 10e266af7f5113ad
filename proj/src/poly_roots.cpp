#include "stokes/poly_roots.hpp"

#include <algorithm>
#include <sstream>

namespace stokes {

Complex poly_eval(const std::vector<Complex>& c, Complex z) {
    Complex acc{};
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

Complex poly_eval_deriv(const std::vector<Complex>& c, Complex z) {
    Complex acc{};
    for (std::size_t i = c.size(); i-- > 1;) acc = acc * z + c[i] * double(i);
    return acc;
}

namespace {

std::string coeff_dump(const std::vector<Complex>& c) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ", ";
        os << "(" << c[i].real() << "," << c[i].imag() << ")";
    }
    os << "]";
    return os.str();
}

void newton_polish(const std::vector<Complex>& c, Complex& z) {
    for (int it = 0; it < 4; ++it) {
        Complex p = poly_eval(c, z);
        Complex dp = poly_eval_deriv(c, z);
        if (std::abs(dp) < 1e-30) break;
        Complex step = p / dp;
        if (!is_finite(step)) break;
        Complex zn = z - step;
        if (std::abs(poly_eval(c, zn)) <= std::abs(p))
            z = zn;
        else
            break;
        if (std::abs(step) < 1e-15 * (1.0 + std::abs(z))) break;
    }
}

}  // namespace

std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs_in) {
    std::vector<Complex> c(coeffs_in);
    while (!c.empty() && c.back() == Complex{}) c.pop_back();
    const int n = static_cast<int>(c.size()) - 1;
    if (n <= 0) return {};

    double cmax = 0.0;
    for (auto v : c) cmax = std::max(cmax, std::abs(v));
    if (cmax == 0.0) throw NumericError("poly_roots: zero polynomial");
    if (std::abs(c.back()) < 1e-13 * cmax)
        throw NumericError("poly_roots: leading coefficient vanishes, coeffs=" + coeff_dump(coeffs_in));
    for (auto& v : c) v /= c.back();

    if (n == 1) return {-c[0]};
    if (n == 2) {
        // stable quadratic: r1 via the sign-matched formula, r2 via Vieta
        Complex b = c[1], a0 = c[0];
        Complex d = std::sqrt(b * b - 4.0 * a0);
        Complex q = (std::real(std::conj(b) * d) >= 0.0) ? -0.5 * (b + d) : -0.5 * (b - d);
        Complex r1 = (std::abs(q) > 0.0) ? a0 / q : Complex{};
        Complex r2 = q;
        std::vector<Complex> roots{r1, r2};
        for (auto& r : roots) newton_polish(c, r);
        return roots;
    }

    // Aberth-Ehrlich from a perturbed circle of the Cauchy radius
    double radius = 0.0;
    for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(c[i]));
    radius = 1.0 + radius;
    std::vector<Complex> z(n);
    for (int k = 0; k < n; ++k) {
        double ang = 2.0 * M_PI * k / n + 0.4 + 0.13 * k / double(n);
        z[k] = radius * 0.8 * Complex(std::cos(ang), std::sin(ang));
    }

    const int max_iter = 300;
    bool converged = false;
    for (int it = 0; it < max_iter && !converged; ++it) {
        converged = true;
        for (int k = 0; k < n; ++k) {
            Complex p = poly_eval(c, z[k]);
            Complex dp = poly_eval_deriv(c, z[k]);
            Complex w = (std::abs(dp) > 0.0) ? p / dp : p;
            Complex s{};
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                Complex d = z[k] - z[j];
                if (std::abs(d) < 1e-300) d = Complex(1e-300, 0);
                s += 1.0 / d;
            }
            Complex denom = 1.0 - w * s;
            Complex corr = (std::abs(denom) > 1e-300) ? w / denom : w;
            if (!is_finite(corr)) corr = w;
            z[k] -= corr;
            if (std::abs(corr) > 1e-14 * (1.0 + std::abs(z[k]))) converged = false;
        }
    }
    if (!converged) {
        // multiple roots converge only linearly; accept if residuals are tiny
        for (int k = 0; k < n; ++k) {
            double scale = 1.0 + std::pow(std::abs(z[k]), n);
            if (std::abs(poly_eval(c, z[k])) > 1e-10 * scale)
                throw NumericError("poly_roots: Aberth iteration did not converge, coeffs=" +
                                   coeff_dump(coeffs_in));
        }
    }
    for (auto& r : z) newton_polish(c, r);
    return z;
}

}  // namespace stokes
