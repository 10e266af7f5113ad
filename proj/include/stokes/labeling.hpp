#ifndef STOKES_LABELING_HPP
#define STOKES_LABELING_HPP

#include "stokes/char_symbol.hpp"

namespace stokes {

/// Labeled root set: roots[i] is the value of global branch i (0-based
/// internally, reported 1-based) at x. The labeling is fixed by sorting at an
/// anchor point and transported by path continuation everywhere else.
struct RootSet {
    Complex x;
    std::vector<Complex> roots;

    double min_gap() const;
    double max_mag() const;
};

/// Roots at x sorted lexicographically by (re, im) — the anchor convention.
RootSet sorted_root_set(const CharSymbol& sym, Complex x, double tol_root = 1e-12);

/// Default anchor: coarse grid scan of the region maximizing the minimum
/// pairwise root gap normalized by (1 + max |root|). Grid nodes near declared
/// singularities are skipped.
RootSet select_anchor(const CharSymbol& sym, const Rect& region, double tol_root = 1e-12);

/// Min-sum assignment of next onto prev (exact for n <= 6, greedy beyond).
/// Returns next permuted into prev's label order; motion_max = largest
/// matched displacement.
std::vector<Complex> match_roots(const std::vector<Complex>& prev,
                                 const std::vector<Complex>& next, double* motion_max);

/// Continuation of a labeled root set along arbitrary straight moves with
/// automatic step halving when labels become ambiguous.
class RootTracker {
public:
    RootTracker(const CharSymbol& sym, RootSet start, double tol_root = 1e-12);

    const RootSet& state() const { return state_; }
    void advance_to(Complex x1);

private:
    void step(Complex x1, int depth);
    const CharSymbol* sym_;
    RootSet state_;
    double tol_root_;
};

/// Labeled roots at every node of `path`, starting from start_labels (which
/// must sit at path.front()). Checks the turning-point clearance
/// precondition and names the offending point on violation.
std::vector<RootSet> track_roots(const CharSymbol& sym, const Polyline& path,
                                 const RootSet& start_labels, const Tolerances& tol = {});

/// Continuation of start_labels to `target` along a straight, auto-detoured
/// path (no clearance precondition; used internally).
RootSet transport_labels(const CharSymbol& sym, const RootSet& start_labels, Complex target,
                         const std::vector<Complex>& obstacles, double clearance,
                         double tol_root = 1e-12);

}  // namespace stokes

#endif
