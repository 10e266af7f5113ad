#ifndef STOKES_TEST_FIXTURES_HPP
#define STOKES_TEST_FIXTURES_HPP

#include "stokes/char_symbol.hpp"

namespace stokes::testing {

// xi^3 + 3 xi + 2 i x
inline CharSymbol make_bnr() {
    std::vector<XPoly> c(4);
    c[0] = XPoly({Complex(0, 0), Complex(0, 2)});
    c[1] = XPoly({Complex(3, 0)});
    c[2] = XPoly{};
    c[3] = XPoly({Complex(1, 0)});
    return CharSymbol(std::move(c));
}

// xi^2 - x
inline CharSymbol make_airy() {
    std::vector<XPoly> c(3);
    c[0] = XPoly({Complex(0, 0), Complex(-1, 0)});
    c[1] = XPoly{};
    c[2] = XPoly({Complex(1, 0)});
    return CharSymbol(std::move(c));
}

// xi^2 - (x^2 - 1)
inline CharSymbol make_two_tp() {
    std::vector<XPoly> c(3);
    c[0] = XPoly({Complex(1, 0), Complex(0, 0), Complex(-1, 0)});
    c[1] = XPoly{};
    c[2] = XPoly({Complex(1, 0)});
    return CharSymbol(std::move(c));
}

// xi^2 - (x - a)^2: double turning point at a
inline CharSymbol make_double_tp(Complex a) {
    std::vector<XPoly> c(3);
    c[0] = XPoly({-a * a, 2.0 * a, Complex(-1, 0)});
    c[1] = XPoly{};
    c[2] = XPoly({Complex(1, 0)});
    return CharSymbol(std::move(c));
}

}  // namespace stokes::testing

#endif
