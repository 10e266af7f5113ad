#ifndef STOKES_QUADRATURE_HPP
#define STOKES_QUADRATURE_HPP

#include "stokes/labeling.hpp"

namespace stokes {

struct QuadResult {
    Complex value{};
    double err = 0.0;        // accumulated error estimate
    RootSet end_labels;      // labels at (or just short of) the path end
};

/// Adaptive Gauss-Legendre integral of the labeled root field along a
/// polyline: int xi_j dx, or int (xi_j - xi_k) dx when k >= 0. Branch
/// indices are 0-based here.
///
/// `labels` must sit at pts[label_node]. When first_from_tp / last_to_tp is
/// set the corresponding end leg is integrated under the s^2 endpoint
/// substitution (the square-root branch behavior at a turning point becomes
/// analytic), and the tracker is never advanced onto the turning point
/// itself. A single-leg path with both flags must be pre-split by the
/// caller; integrate_path does this automatically for 2-point inputs.
QuadResult integrate_path(const CharSymbol& sym, Polyline pts, std::size_t label_node,
                          const RootSet& labels, int j, int k, double tol_abs,
                          bool first_from_tp, bool last_to_tp);

/// Spec-level convenience: computes its own anchor labeling over the path's
/// bounding box, auto-detours around turning points, and detects
/// turning-point endpoints. Branch j is 1-based (a global label).
QuadResult integrate_root(const CharSymbol& sym, const Polyline& path, int j,
                          const Tolerances& tol = {});

}  // namespace stokes

#endif
