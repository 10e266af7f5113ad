#include "stokes/path.hpp"

#include <algorithm>

namespace stokes {

double segment_distance(Complex a, Complex b, Complex p) {
    Complex d = b - a;
    double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(p - a);
    double t = std::clamp(std::real(std::conj(d) * (p - a)) / len2, 0.0, 1.0);
    return std::abs(p - (a + t * d));
}

double polyline_length(const Polyline& pts) {
    double s = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) s += std::abs(pts[i] - pts[i - 1]);
    return s;
}

int clearance_violation(const Polyline& path, const std::vector<Complex>& obstacles,
                        double clearance) {
    if (path.size() < 2) return -1;
    for (std::size_t o = 0; o < obstacles.size(); ++o) {
        Complex ob = obstacles[o];
        if (std::abs(ob - path.front()) < clearance || std::abs(ob - path.back()) < clearance)
            continue;  // endpoint exemption
        for (std::size_t i = 1; i < path.size(); ++i)
            if (segment_distance(path[i - 1], path[i], ob) < clearance)
                return static_cast<int>(o);
    }
    return -1;
}

namespace {

// One leg p->q, detouring around the qualifying obstacles.
void detour_leg(Complex p, Complex q, const std::vector<Complex>& obstacles, double clearance,
                Complex path_start, Complex path_end, Polyline& out) {
    Complex d = q - p;
    double len = std::abs(d);
    if (len == 0.0) return;
    Complex u = d / len;
    const double radius = 2.0 * clearance;

    struct Hit {
        double t;       // projection parameter along the leg
        Complex ob;
        double offset;  // signed perpendicular offset of the obstacle
    };
    std::vector<Hit> hits;
    for (Complex ob : obstacles) {
        if (std::abs(ob - path_start) < radius || std::abs(ob - path_end) < radius) continue;
        double t = std::real(std::conj(u) * (ob - p));
        if (t <= radius || t >= len - radius) continue;  // endpoint neighborhoods exempt
        double off = std::imag(std::conj(u) * (ob - p));
        if (std::abs(off) >= clearance) continue;
        hits.push_back({t, ob, off});
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.t < b.t; });

    double cursor = 0.0;
    for (const Hit& h : hits) {
        double half_chord = std::sqrt(std::max(0.0, radius * radius - h.offset * h.offset));
        double t_in = h.t - half_chord;
        double t_out = h.t + half_chord;
        if (t_in <= cursor) t_in = cursor;  // overlapping detours chain directly
        Complex entry = p + t_in * u;
        Complex exit = p + t_out * u;
        double side = (h.offset > 0.0) ? -1.0 : +1.0;  // opposite side; on-line goes left
        double a0 = std::arg(entry - h.ob);
        double a1 = std::arg(exit - h.ob);
        double delta = a1 - a0;
        while (delta <= -M_PI) delta += 2.0 * M_PI;
        while (delta > M_PI) delta -= 2.0 * M_PI;
        // choose the sweep whose midpoint lies on `side` of the leg
        for (int attempt = 0; attempt < 2; ++attempt) {
            double mid_ang = a0 + 0.5 * delta;
            Complex mid = h.ob + radius * Complex(std::cos(mid_ang), std::sin(mid_ang));
            double mid_side = std::imag(std::conj(u) * (mid - p));
            if (mid_side * side > 0.0) break;
            delta = (delta > 0.0) ? delta - 2.0 * M_PI : delta + 2.0 * M_PI;
        }
        const int arcs = 8;
        out.push_back(entry);
        for (int k = 1; k < arcs; ++k) {
            double ang = a0 + delta * k / arcs;
            out.push_back(h.ob + radius * Complex(std::cos(ang), std::sin(ang)));
        }
        out.push_back(exit);
        cursor = t_out;
    }
    out.push_back(q);
}

}  // namespace

Polyline with_detours(const Polyline& path, const std::vector<Complex>& obstacles,
                      double clearance) {
    if (path.size() < 2) return path;
    Polyline out;
    out.push_back(path.front());
    for (std::size_t i = 1; i < path.size(); ++i)
        detour_leg(path[i - 1], path[i], obstacles, clearance, path.front(), path.back(), out);
    // drop degenerate zero-length legs
    Polyline clean;
    for (Complex pnt : out)
        if (clean.empty() || std::abs(pnt - clean.back()) > 0.0) clean.push_back(pnt);
    return clean;
}

}  // namespace stokes
