#ifndef STOKES_TURNING_POINTS_HPP
#define STOKES_TURNING_POINTS_HPP

#include <utility>

#include "stokes/labeling.hpp"

namespace stokes {

struct TurningPoint {
    enum class Kind { Ordinary, Virtual };

    Complex location{};
    Kind kind = Kind::Ordinary;
    std::pair<int, int> pair{0, 0};  // 1-based branch labels, first < second
    int multiplicity = 1;
    bool on_boundary = false;
    int generation = 0;  // virtual points: search generation (1 = from ordinary pairs)
};

/// Zeros of the xi-discriminant of the symbol inside `region`, classified by
/// coalescing pair and multiplicity. Branch pairs are labeled by transporting
/// `anchor` to a probe point beside each zero. Declared singular points are
/// never reported; zeros on the region boundary (within tp_clearance) are
/// flagged, not dropped.
std::vector<TurningPoint> ordinary_turning_points(const CharSymbol& sym, const Rect& region,
                                                  const RootSet& anchor,
                                                  const Tolerances& tol = {});

/// Convenience overload computing its own anchor.
std::vector<TurningPoint> ordinary_turning_points(const CharSymbol& sym, const Rect& region,
                                                  const Tolerances& tol = {});

}  // namespace stokes

#endif
