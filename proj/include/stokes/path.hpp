#ifndef STOKES_PATH_HPP
#define STOKES_PATH_HPP

#include "stokes/types.hpp"

namespace stokes {

double segment_distance(Complex a, Complex b, Complex p);
double polyline_length(const Polyline& pts);

/// Index of the first obstacle violating the clearance margin in the
/// interior of `path` (endpoints exempt), or -1.
int clearance_violation(const Polyline& path, const std::vector<Complex>& obstacles,
                        double clearance);

/// Working polyline with semicircular detours (radius 2*clearance) around
/// obstacles closer than `clearance` to a leg interior. Obstacles at the
/// path endpoints are exempt. Deterministic side rule: pass on the side
/// opposite the obstacle's offset; exactly-on-the-line obstacles pass on the
/// left of the travel direction.
Polyline with_detours(const Polyline& path, const std::vector<Complex>& obstacles,
                      double clearance);

}  // namespace stokes

#endif
