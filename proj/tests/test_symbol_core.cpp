#include <Eigen/Eigenvalues>
#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "stokes/poly_roots.hpp"
#include "stokes/resultant.hpp"
#include "stokes/turning_points.hpp"

using namespace stokes;
using stokes::testing::make_airy;
using stokes::testing::make_bnr;
using stokes::testing::make_double_tp;
using stokes::testing::make_two_tp;

namespace {

// independent oracle: companion-matrix eigenvalues
std::vector<Complex> companion_roots(std::vector<Complex> c) {
    while (!c.empty() && c.back() == Complex{}) c.pop_back();
    int n = static_cast<int>(c.size()) - 1;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) m(i, n - 1) = -c[i] / c[n];
    for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
    std::vector<Complex> out(n);
    for (int i = 0; i < n; ++i) out[i] = es.eigenvalues()(i);
    return out;
}

// multiset match with tolerance
bool roots_match(std::vector<Complex> a, std::vector<Complex> b, double tol) {
    if (a.size() != b.size()) return false;
    for (Complex v : a) {
        auto it = std::min_element(b.begin(), b.end(), [&](Complex p, Complex q) {
            return std::abs(p - v) < std::abs(q - v);
        });
        if (it == b.end() || std::abs(*it - v) > tol) return false;
        b.erase(it);
    }
    return true;
}

}  // namespace

TEST_CASE("bnr roots at x=0: 0 and +-i sqrt3") {
    auto sym = make_bnr();
    auto roots = eval_roots(sym, Complex(0, 0));
    double s3 = std::sqrt(3.0);
    CHECK(roots_match(roots, {Complex(0, 0), Complex(0, s3), Complex(0, -s3)}, 1e-12));
}

TEST_CASE("bnr roots at x=-1 match the hand factorization (xi-i)^2(xi+2i)") {
    // oracle: expand the factorization and compare coefficient lists
    XPoly lin_i({Complex(0, -1), Complex(1, 0)});    // xi - i
    XPoly lin_2i({Complex(0, 2), Complex(1, 0)});    // xi + 2i
    XPoly prod = lin_i * lin_i * lin_2i;
    auto sym = make_bnr();
    auto cs = sym.coeffs_at(Complex(-1, 0));
    REQUIRE(prod.coeffs().size() == cs.size());
    for (std::size_t m = 0; m < cs.size(); ++m)
        CHECK(std::abs(prod.coeffs()[m] - cs[m]) < 1e-14);

    auto roots = eval_roots(sym, Complex(-1, 0));
    CHECK(roots_match(roots, {Complex(0, 1), Complex(0, 1), Complex(0, -2)}, 2e-6));
}

TEST_CASE("bnr odd symmetry: roots at +1 are negated roots at -1") {
    auto sym = make_bnr();
    auto at_p = eval_roots(sym, Complex(1, 0));
    auto at_m = eval_roots(sym, Complex(-1, 0));
    for (auto& r : at_m) r = -r;
    CHECK(roots_match(at_p, at_m, 2e-6));
}

TEST_CASE("vieta residuals at random points") {
    auto sym = make_bnr();
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int trial = 0; trial < 40; ++trial) {
        Complex x(u(rng), u(rng));
        auto roots = eval_roots(sym, x);
        auto c = sym.coeffs_at(x);
        // elementary symmetric functions vs coefficient ratios
        Complex e1{}, e2{}, e3;
        e3 = roots[0] * roots[1] * roots[2];
        for (int i = 0; i < 3; ++i) e1 += roots[i];
        e2 = roots[0] * roots[1] + roots[0] * roots[2] + roots[1] * roots[2];
        double scale = 1.0 + std::pow(std::abs(x) * 2.0 + 3.0, 3);
        CHECK(std::abs(e1 - (-c[2] / c[3])) < 1e-11 * scale);
        CHECK(std::abs(e2 - (c[1] / c[3])) < 1e-11 * scale);
        CHECK(std::abs(e3 - (-c[0] / c[3])) < 1e-11 * scale);
    }
}

TEST_CASE("aberth agrees with the companion-matrix oracle") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + trial % 4;
        std::vector<Complex> c(n + 1);
        for (auto& v : c) v = Complex(u(rng), u(rng));
        if (std::abs(c.back()) < 0.2) c.back() += Complex(1.0, 0.5);
        auto mine = poly_roots(c);
        auto oracle = companion_roots(c);
        CHECK(roots_match(mine, oracle, 1e-7));
    }
}

TEST_CASE("xi-degree below 2 is rejected") {
    std::vector<XPoly> c(2);
    c[0] = XPoly({Complex(1, 0)});
    c[1] = XPoly({Complex(1, 0)});
    CHECK_THROWS_AS(CharSymbol(std::move(c)), InputError);
}

TEST_CASE("bnr turning points at +-1 from the exact discriminant") {
    auto sym = make_bnr();
    auto tps = ordinary_turning_points(sym, Rect{-3, -3, 3, 3});
    REQUIRE(tps.size() == 2);
    CHECK(std::abs(tps[0].location - Complex(-1, 0)) < 1e-10);
    CHECK(std::abs(tps[1].location - Complex(1, 0)) < 1e-10);
    CHECK(tps[0].multiplicity == 1);
    CHECK(tps[1].multiplicity == 1);
    // pairs share exactly one branch label (the middle branch)
    auto& p0 = tps[0].pair;
    auto& p1 = tps[1].pair;
    int shared = 0;
    for (int a : {p0.first, p0.second})
        for (int b : {p1.first, p1.second})
            if (a == b) ++shared;
    CHECK(shared == 1);
}

TEST_CASE("airy turning point at the origin") {
    auto tps = ordinary_turning_points(make_airy(), Rect{-3, -3, 3, 3});
    REQUIRE(tps.size() == 1);
    CHECK(std::abs(tps[0].location) < 1e-12);
    CHECK(tps[0].pair == std::pair<int, int>{1, 2});
    CHECK(tps[0].multiplicity == 1);
}

TEST_CASE("xi^2-(x^2-1) has simple turning points at +-1") {
    auto tps = ordinary_turning_points(make_two_tp(), Rect{-3, -3, 3, 3});
    REQUIRE(tps.size() == 2);
    CHECK(std::abs(tps[0].location - Complex(-1, 0)) < 1e-12);
    CHECK(std::abs(tps[1].location - Complex(1, 0)) < 1e-12);
    CHECK(tps[0].multiplicity == 1);
}

TEST_CASE("double turning point: clustered discriminant zeros") {
    auto tps = ordinary_turning_points(make_double_tp(Complex(0.3, 0.0)), Rect{-3, -3, 3, 3});
    REQUIRE(tps.size() == 1);
    CHECK(std::abs(tps[0].location - Complex(0.3, 0.0)) < 1e-7);
    CHECK(tps[0].multiplicity == 2);
}

TEST_CASE("degenerate symbol (repeated factor) is rejected") {
    // (xi - x)^2 has identically vanishing discriminant
    std::vector<XPoly> c(3);
    c[0] = XPoly({Complex(0, 0), Complex(0, 0), Complex(1, 0)});
    c[1] = XPoly({Complex(0, 0), Complex(-2, 0)});
    c[2] = XPoly({Complex(1, 0)});
    CharSymbol sym(std::move(c));
    CHECK_THROWS_AS(ordinary_turning_points(sym, Rect{-2, -2, 2, 2}), InputError);
}

TEST_CASE("boundary turning point is flagged, not dropped") {
    auto tps = ordinary_turning_points(make_airy(), Rect{0, -1, 2, 1});
    REQUIRE(tps.size() == 1);
    CHECK(tps[0].on_boundary);
}

TEST_CASE("exact and numeric resultant routes agree") {
    for (const CharSymbol& sym : {make_bnr(), make_two_tp()}) {
        auto exact = discriminant_poly(sym, false);
        auto numer = discriminant_poly(sym, true);
        auto re = poly_roots(exact);
        auto rn = poly_roots(numer);
        CHECK(roots_match(re, rn, 1e-8));
    }
}

TEST_CASE("bnr discriminant is proportional to x^2 - 1") {
    auto disc = discriminant_poly(make_bnr());
    REQUIRE(disc.size() == 3);
    CHECK(std::abs(disc[1]) < 1e-15);
    CHECK(std::abs(disc[0] / disc[2] + 1.0) < 1e-15);  // ratio -1: zeros at +-1
}
