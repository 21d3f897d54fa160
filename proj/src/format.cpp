#include "g1norms/format.hpp"

namespace g1norms {

std::string matrix_to_json(const ComplexMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ",";
    out += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ",";
      out += "[" + format_g17(m(i, j).real()) + "," + format_g17(m(i, j).imag()) + "]";
    }
    out += "]";
  }
  out += "]";
  return out;
}

std::string measure_to_json(const HerglotzMeasure& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.atoms.size(); ++i) {
    if (i) out += ",";
    out += "[" + format_g17(m.atoms[i].angle) + "," + format_g17(m.atoms[i].weight) + "]";
  }
  out += "]";
  return out;
}

}  // namespace g1norms
