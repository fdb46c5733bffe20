#include "fcg/combination.hpp"

#include <stdexcept>

namespace fcg {

std::string to_string(const Scalar& s) { return s.get_str(); }

Scalar parse_scalar(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  Scalar s;
  if (s.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
  if (sgn(s.get_den()) == 0) throw std::invalid_argument("zero denominator: " + text);
  s.canonicalize();
  return s;
}

int homogeneous_grading(const LinearCombination& x) {
  int grading = -1;
  for (const auto& [k, c] : x) {
    if (grading == -1) {
      grading = k.vertex_count();
    } else if (grading != k.vertex_count()) {
      return -2;
    }
  }
  return grading;
}

Tensor flip(const Tensor& t) {
  Tensor out;
  for (const auto& [k, c] : t) out.add({k.second, k.first}, c);
  return out;
}

Tensor tensor(const LinearCombination& a, const LinearCombination& b) {
  Tensor out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) out.add({ka, kb}, ca * cb);
  }
  return out;
}

}  // namespace fcg
