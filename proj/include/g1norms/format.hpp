#ifndef G1NORMS_FORMAT_HPP
#define G1NORMS_FORMAT_HPP

#include <cstdio>
#include <string>

#include "g1norms/complex_matrix.hpp"
#include "g1norms/herglotz.hpp"

namespace g1norms {

// Report floats carry 17 significant digits so round-trips are exact and
// report files are byte-stable.
inline std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Row-major nested JSON array of [re, im] pairs.
std::string matrix_to_json(const ComplexMatrix& m);

// JSON array of [angle, weight] pairs.
std::string measure_to_json(const HerglotzMeasure& m);

}  // namespace g1norms

#endif  // G1NORMS_FORMAT_HPP
