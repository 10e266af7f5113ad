#include "stokes/quadrature.hpp"

#include <algorithm>

#include "stokes/path.hpp"
#include "stokes/poly_roots.hpp"
#include "stokes/resultant.hpp"

namespace stokes {
namespace {

// Legendre nodes/weights on [-1,1], computed once by Newton on the recurrence.
std::vector<std::pair<double, double>> legendre_rule(int n) {
    std::vector<std::pair<double, double>> rule(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (x * p1 - p0) / (x * x - 1.0);
        rule[i] = {x, 2.0 / ((1.0 - x * x) * dp * dp)};
    }
    std::sort(rule.begin(), rule.end());
    return rule;
}

const std::vector<std::pair<double, double>>& gl12() {
    static const auto rule = legendre_rule(12);
    return rule;
}

// Parameterized leg: straight (x = base + t dir, t in [0,1]) or endpoint
// substitution (x = base + (smax-t)^2 dir, t in [0,smax], base = turning pt).
struct LegMap {
    Complex base, dir;
    double smax = 1.0;
    bool sub = false;

    Complex pos(double t) const {
        if (!sub) return base + t * dir;
        double r = smax - t;
        return base + (r * r) * dir;
    }
    Complex dpos(double t) const {
        if (!sub) return dir;
        double r = smax - t;
        return (-2.0 * r) * dir;
    }
};

struct LegIntegrator {
    const CharSymbol* sym;
    LegMap map;
    int j, k;
    int depth_cap = 42;
    double err = 0.0;

    Complex field(const RootSet& rs) const {
        return k >= 0 ? rs.roots[j] - rs.roots[k] : rs.roots[j];
    }

    Complex sum_rule(double t0, double t1, RootTracker& tr) const {
        Complex acc{};
        double mid = 0.5 * (t0 + t1), half = 0.5 * (t1 - t0);
        for (auto [xn, wn] : gl12()) {
            double t = mid + half * xn;
            tr.advance_to(map.pos(t));
            acc += wn * field(tr.state()) * map.dpos(t);
        }
        return acc * half;
    }

    // returns the two-half estimate; tracker ends at pos(t1) unless skip_end
    Complex panel(double t0, double t1, RootTracker& tr, double tol, int depth, bool skip_end) {
        RootTracker probe = tr;
        Complex coarse = sum_rule(t0, t1, probe);
        double mid = 0.5 * (t0 + t1);
        RootTracker fine = tr;
        Complex fa = sum_rule(t0, mid, fine);
        Complex fb = sum_rule(mid, t1, fine);
        double est = std::abs(coarse - (fa + fb));
        if (est <= tol || depth >= depth_cap) {
            err += est;
            tr = fine;
            if (!skip_end) tr.advance_to(map.pos(t1));
            return fa + fb;
        }
        Complex left = panel(t0, mid, tr, 0.5 * tol, depth + 1, false);
        Complex right = panel(mid, t1, tr, 0.5 * tol, depth + 1, skip_end);
        return left + right;
    }
};

// integral over a straight leg p->q with labels at p; tracker ends at q
Complex straight_leg(const CharSymbol& sym, Complex p, Complex q, RootTracker& tr, int j, int k,
                     double tol, double* err) {
    LegIntegrator li{&sym, LegMap{p, q - p, 1.0, false}, j, k};
    Complex v = li.panel(0.0, 1.0, tr, tol, 0, false);
    *err += li.err;
    return v;
}

// integral from a turning point a to q, labels supplied at q; the returned
// tracker state stays at the innermost node (never on the turning point)
Complex leg_from_tp(const CharSymbol& sym, Complex a, Complex q, const RootSet& labels_at_q,
                    int j, int k, double tol, double* err) {
    double len = std::abs(q - a);
    if (len == 0.0) return {};
    LegMap map{a, (q - a) / len, std::sqrt(len), true};
    LegIntegrator li{&sym, map, j, k};
    RootTracker tr(sym, labels_at_q);
    // map integrates from q toward a: int_q^a, so negate for int_a^q
    Complex v = li.panel(0.0, map.smax, tr, tol, 0, true);
    *err += li.err;
    return -v;
}

}  // namespace

QuadResult integrate_path(const CharSymbol& sym, Polyline pts, std::size_t label_node,
                          const RootSet& labels, int j, int k, double tol_abs,
                          bool first_from_tp, bool last_to_tp) {
    QuadResult out;
    out.end_labels = labels;
    if (pts.size() < 2) return out;
    if (pts.size() == 2 && first_from_tp && last_to_tp)
        throw InputError("integrate_path: pre-split a single leg joining two turning points");
    const std::size_t legs = pts.size() - 1;
    double total = polyline_length(pts);
    if (total == 0.0) return out;

    if (label_node != (first_from_tp ? 1u : 0u))
        throw InputError("integrate_path: labels belong at node 1 for from-tp paths, node 0 otherwise");
    if (std::abs(labels.x - pts[label_node]) > 1e-9 * (1.0 + std::abs(labels.x)))
        throw InputError("integrate_path: labels must sit at pts[label_node]");

    auto leg_tol = [&](std::size_t i) {
        return tol_abs * std::abs(pts[i + 1] - pts[i]) / total;
    };

    // the from-tp first leg integrates backwards from the labeled node
    if (first_from_tp)
        out.value += leg_from_tp(sym, pts[0], pts[1], labels, j, k, leg_tol(0), &out.err);

    RootTracker tr(sym, labels);
    std::size_t start_leg = first_from_tp ? 1 : 0;
    for (std::size_t i = start_leg; i < legs; ++i) {
        bool final_to_tp = last_to_tp && (i == legs - 1);
        if (final_to_tp) {
            out.value -=
                leg_from_tp(sym, pts[i + 1], pts[i], tr.state(), j, k, leg_tol(i), &out.err);
            break;  // tracker intentionally stays short of the endpoint
        }
        out.value += straight_leg(sym, pts[i], pts[i + 1], tr, j, k, leg_tol(i), &out.err);
    }
    out.end_labels = tr.state();
    return out;
}

QuadResult integrate_root(const CharSymbol& sym, const Polyline& path, int j,
                          const Tolerances& tol) {
    QuadResult empty;
    if (path.size() < 2 || polyline_length(path) == 0.0) return empty;

    std::vector<Complex> tps;
    for (Complex r : poly_roots(discriminant_poly(sym)))
        if (!sym.near_singularity(r, 10.0 * tol.cluster_tol)) tps.push_back(r);

    auto near_tp = [&](Complex p) {
        for (Complex t : tps)
            if (std::abs(p - t) <= tol.cluster_tol) return true;
        return false;
    };
    bool from_tp = near_tp(path.front());
    bool to_tp = near_tp(path.back());

    std::vector<Complex> obstacles = tps;
    for (Complex s : sym.singularities()) obstacles.push_back(s);
    Polyline work = with_detours(path, obstacles, tol.tp_clearance);
    if (work.size() == 2 && from_tp && to_tp)
        work = {work[0], 0.5 * (work[0] + work[1]), work[1]};

    // anchor over the path's neighborhood
    Rect box;
    box.x0 = box.x1 = work[0].real();
    box.y0 = box.y1 = work[0].imag();
    for (Complex p : work) {
        box.x0 = std::min(box.x0, p.real());
        box.x1 = std::max(box.x1, p.real());
        box.y0 = std::min(box.y0, p.imag());
        box.y1 = std::max(box.y1, p.imag());
    }
    double pad = 0.5 + 0.25 * box.diag();
    box = Rect{box.x0 - pad, box.y0 - pad, box.x1 + pad, box.y1 + pad};
    RootSet anchor = select_anchor(sym, box, tol.tol_root);

    std::size_t label_node = from_tp ? 1 : 0;
    RootSet labels = transport_labels(sym, anchor, work[label_node], obstacles,
                                      tol.tp_clearance, tol.tol_root);
    return integrate_path(sym, work, label_node, labels, j - 1, -1, tol.tol_quad, from_tp, to_tp);
}

}  // namespace stokes
