#ifndef SPREADNET_CSV_HPP_
#define SPREADNET_CSV_HPP_

#include <cstdio>
#include <string>

namespace spreadnet {

/// Shortest-round-trip decimal formatting ('.' separator, no locale), so CSV
/// output is byte-stable across runs.
inline std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  // Prefer the shortest representation that still round-trips.
  for (int prec = 1; prec < 17; ++prec) {
    char probe[40];
    std::snprintf(probe, sizeof(probe), "%.*g", prec, v);
    double back = 0.0;
    std::sscanf(probe, "%lf", &back);
    if (back == v) return probe;
  }
  return buf;
}

}  // namespace spreadnet

#endif  // SPREADNET_CSV_HPP_
