#include "kpairs/pair_class.hpp"

#include "kpairs/geometry_example.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace kpairs {

PairClass power(const PairClass& a, unsigned n) {
  PairClass out = PairClass::one();
  for (unsigned i = 0; i < n; ++i) out *= a;
  return out;
}

std::ostream& operator<<(std::ostream& os, const PairClass& p) {
  return os << "(amb " << p.amb() << ", comp " << p.comp() << ")";
}

void to_json(nlohmann::json& j, const PairClass& p) { j = {{"amb", p.amb()}, {"comp", p.comp()}}; }

void from_json(const nlohmann::json& j, PairClass& p) {
  p = PairClass(j.at("amb").get<MotivicPolynomial>(), j.at("comp").get<MotivicPolynomial>());
}

namespace catalog {
namespace {

void require_non_negative(int v, const char* what) {
  if (v < 0) throw std::invalid_argument(std::string("catalog: ") + what + " must be >= 0");
}

}  // namespace

PairClass point() { return {1, 1}; }

PairClass empty() { return {}; }

PairClass affine_line_marked(int s) {
  require_non_negative(s, "s");
  const auto line = MotivicPolynomial::lefschetz();
  return {line, line - s};
}

PairClass projective_line_marked(int s) {
  require_non_negative(s, "s");
  const auto line = projective_class(1);
  return {line, line - s};
}

PairClass projective_space(int n) {
  require_non_negative(n, "n");
  return {projective_class(n), projective_class(n)};
}

PairClass finite(int m, int k) {
  require_non_negative(m, "m");
  require_non_negative(k, "k");
  if (k > m) throw std::invalid_argument("catalog: finite(m, k) needs k <= m");
  return {m, m - k};
}

PairClass projective_space_with_hyperplanes(int n, int s) {
  require_non_negative(n, "n");
  require_non_negative(s, "s");
  const auto space = projective_class(n);
  return {space, space - hyperplane_union_class(n, s)};
}

}  // namespace catalog
}  // namespace kpairs
