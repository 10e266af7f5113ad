#include "stokes/labeling.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "stokes/path.hpp"
#include "stokes/poly_roots.hpp"
#include "stokes/resultant.hpp"

namespace stokes {

double RootSet::min_gap() const {
    double g = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            g = std::min(g, std::abs(roots[i] - roots[j]));
    return g;
}

double RootSet::max_mag() const {
    double m = 0.0;
    for (auto r : roots) m = std::max(m, std::abs(r));
    return m;
}

RootSet sorted_root_set(const CharSymbol& sym, Complex x, double tol_root) {
    RootSet rs{x, eval_roots(sym, x, tol_root)};
    std::sort(rs.roots.begin(), rs.roots.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return rs;
}

RootSet select_anchor(const CharSymbol& sym, const Rect& region, double tol_root) {
    const int nx = 21, ny = 21;
    double best = -1.0;
    Complex best_x;
    double guard = 0.05 * region.diag();
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            Complex x(region.x0 + region.width() * (ix + 0.5) / nx,
                      region.y0 + region.height() * (iy + 0.5) / ny);
            if (sym.near_singularity(x, guard)) continue;
            RootSet rs;
            try {
                rs = RootSet{x, eval_roots(sym, x, tol_root)};
            } catch (const NumericError&) {
                continue;
            }
            double metric = rs.min_gap() / (1.0 + rs.max_mag());
            if (metric > best) {
                best = metric;
                best_x = x;
            }
        }
    }
    if (best < 0.0) throw NumericError("select_anchor: no usable grid node in region");
    return sorted_root_set(sym, best_x, tol_root);
}

std::vector<Complex> match_roots(const std::vector<Complex>& prev,
                                 const std::vector<Complex>& next, double* motion_max) {
    const std::size_t n = prev.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    if (n <= 6) {
        std::vector<int> idx = perm, best = perm;
        double best_cost = std::numeric_limits<double>::infinity();
        do {
            double cost = 0.0;
            for (std::size_t i = 0; i < n; ++i) cost += std::abs(next[idx[i]] - prev[i]);
            if (cost < best_cost) {
                best_cost = cost;
                best = idx;
            }
        } while (std::next_permutation(idx.begin(), idx.end()));
        perm = best;
    } else {
        // greedy nearest-neighbor fallback
        std::vector<bool> used(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            double bd = std::numeric_limits<double>::infinity();
            int bj = -1;
            for (std::size_t j = 0; j < n; ++j) {
                if (used[j]) continue;
                double d = std::abs(next[j] - prev[i]);
                if (d < bd) {
                    bd = d;
                    bj = static_cast<int>(j);
                }
            }
            perm[i] = bj;
            used[bj] = true;
        }
    }
    std::vector<Complex> out(n);
    double mm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = next[perm[i]];
        mm = std::max(mm, std::abs(out[i] - prev[i]));
    }
    if (motion_max) *motion_max = mm;
    return out;
}

RootTracker::RootTracker(const CharSymbol& sym, RootSet start, double tol_root)
    : sym_(&sym), state_(std::move(start)), tol_root_(tol_root) {}

void RootTracker::step(Complex x1, int depth) {
    auto next = eval_roots(*sym_, x1, tol_root_);
    double motion = 0.0;
    auto matched = match_roots(state_.roots, next, &motion);
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < matched.size(); ++i)
        for (std::size_t j = i + 1; j < matched.size(); ++j)
            gap = std::min(gap, std::abs(matched[i] - matched[j]));
    // accept when labels are unambiguous: gap at least 3x the step motion
    if (motion == 0.0 || gap >= 3.0 * motion) {
        state_ = RootSet{x1, std::move(matched)};
        return;
    }
    if (depth > 60 || std::abs(x1 - state_.x) < 1e-14 * (1.0 + std::abs(x1))) {
        std::ostringstream os;
        os << "root matching ambiguity persists at minimum step near x=(" << x1.real() << ","
           << x1.imag() << ")";
        throw NumericError(os.str());
    }
    Complex mid = 0.5 * (state_.x + x1);
    step(mid, depth + 1);
    step(x1, depth + 1);
}

void RootTracker::advance_to(Complex x1) {
    if (x1 == state_.x) return;
    step(x1, 0);
}

std::vector<RootSet> track_roots(const CharSymbol& sym, const Polyline& path,
                                 const RootSet& start_labels, const Tolerances& tol) {
    if (path.empty()) return {};
    if (std::abs(path.front() - start_labels.x) > 1e-9 * (1.0 + std::abs(path.front())))
        throw InputError("track_roots: start_labels must sit at the first path node");

    // clearance precondition against the symbol's turning points
    std::vector<Complex> tps;
    {
        auto disc = discriminant_poly(sym);
        for (Complex r : poly_roots(disc))
            if (!sym.near_singularity(r, 10.0 * tol.cluster_tol)) tps.push_back(r);
    }
    int bad = clearance_violation(path, tps, tol.tp_clearance);
    if (bad >= 0) {
        std::ostringstream os;
        os << "track_roots: path violates tp_clearance=" << tol.tp_clearance
           << " at turning point (" << tps[bad].real() << "," << tps[bad].imag() << ")";
        throw InputError(os.str());
    }

    std::vector<RootSet> out;
    out.reserve(path.size());
    RootTracker tracker(sym, start_labels, tol.tol_root);
    out.push_back(tracker.state());
    for (std::size_t i = 1; i < path.size(); ++i) {
        tracker.advance_to(path[i]);
        out.push_back(tracker.state());
    }
    return out;
}

RootSet transport_labels(const CharSymbol& sym, const RootSet& start_labels, Complex target,
                         const std::vector<Complex>& obstacles, double clearance,
                         double tol_root) {
    Polyline p = with_detours({start_labels.x, target}, obstacles, clearance);
    RootTracker tracker(sym, start_labels, tol_root);
    for (std::size_t i = 1; i < p.size(); ++i) tracker.advance_to(p[i]);
    return tracker.state();
}

}  // namespace stokes
