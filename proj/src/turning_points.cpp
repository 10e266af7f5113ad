#include "stokes/turning_points.hpp"

#include <algorithm>

#include "stokes/path.hpp"
#include "stokes/poly_roots.hpp"
#include "stokes/resultant.hpp"

namespace stokes {

std::vector<TurningPoint> ordinary_turning_points(const CharSymbol& sym, const Rect& region,
                                                  const RootSet& anchor, const Tolerances& tol) {
    auto disc = discriminant_poly(sym);
    std::vector<Complex> zeros = poly_roots(disc);

    // polish against the discriminant polynomial itself
    for (Complex& z : zeros) {
        for (int it = 0; it < 8; ++it) {
            Complex p = poly_eval(disc, z);
            Complex dp = poly_eval_deriv(disc, z);
            if (std::abs(dp) < 1e-14) break;
            Complex step = p / dp;
            if (!is_finite(step) || std::abs(step) > 0.5) break;
            z -= step;
            if (std::abs(step) < 1e-15 * (1.0 + std::abs(z))) break;
        }
    }

    // drop declared singular points and far-outside zeros
    double margin = tol.tp_clearance;
    std::vector<Complex> kept;
    for (Complex z : zeros) {
        if (sym.near_singularity(z, 10.0 * tol.cluster_tol)) continue;
        if (!region.contains(z, margin)) continue;
        kept.push_back(z);
    }

    // cluster multiple zeros: multiplicity of the coalescence
    std::sort(kept.begin(), kept.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    std::vector<std::pair<Complex, int>> clusters;
    std::vector<bool> used(kept.size(), false);
    for (std::size_t i = 0; i < kept.size(); ++i) {
        if (used[i]) continue;
        Complex sum = kept[i];
        int count = 1;
        used[i] = true;
        for (std::size_t j = i + 1; j < kept.size(); ++j) {
            if (used[j]) continue;
            if (std::abs(kept[j] - kept[i]) <= tol.cluster_tol) {
                sum += kept[j];
                ++count;
                used[j] = true;
            }
        }
        clusters.push_back({sum / double(count), count});
    }

    std::vector<Complex> obstacles;
    for (auto& [loc, mult] : clusters) obstacles.push_back(loc);
    for (Complex s : sym.singularities()) obstacles.push_back(s);

    std::vector<TurningPoint> out;
    double probe_dist = std::max(0.01 * region.diag(), 50.0 * tol.tp_clearance);
    for (auto& [loc, mult] : clusters) {
        TurningPoint tp;
        tp.location = loc;
        tp.kind = TurningPoint::Kind::Ordinary;
        tp.multiplicity = mult;
        tp.on_boundary = !region.contains(loc, -margin) || !region.contains(loc, 0.0);

        // identify the coalescing pair at a labeled probe point beside the zero
        Complex dir = anchor.x - loc;
        dir = (std::abs(dir) > 0.0) ? dir / std::abs(dir) : Complex(1, 0);
        Complex probe = loc + probe_dist * dir;
        RootSet labels = transport_labels(sym, anchor, probe, obstacles, tol.tp_clearance,
                                          tol.tol_root);
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; a < labels.roots.size(); ++a) {
            for (std::size_t b = a + 1; b < labels.roots.size(); ++b) {
                double gap = std::abs(labels.roots[a] - labels.roots[b]);
                if (gap < best) {
                    best = gap;
                    tp.pair = {static_cast<int>(a) + 1, static_cast<int>(b) + 1};
                }
            }
        }
        out.push_back(tp);
    }
    std::sort(out.begin(), out.end(), [](const TurningPoint& a, const TurningPoint& b) {
        if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
        return a.location.imag() < b.location.imag();
    });
    return out;
}

std::vector<TurningPoint> ordinary_turning_points(const CharSymbol& sym, const Rect& region,
                                                  const Tolerances& tol) {
    return ordinary_turning_points(sym, region, select_anchor(sym, region, tol.tol_root), tol);
}

}  // namespace stokes
