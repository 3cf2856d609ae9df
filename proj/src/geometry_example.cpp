#include "kpairs/geometry_example.hpp"

#include "kpairs/lambda_power.hpp"

#include <algorithm>
#include <stdexcept>

namespace kpairs {

MotivicPolynomial hyperplane_union_class(int n, int s) {
  if (n < 0 || s < 0) throw std::invalid_argument("hyperplane_union_class: arguments must be >= 0");
  // Any k <= n of the hyperplanes meet in a CP^(n-k); more than n never meet.
  MotivicPolynomial out;
  for (int k = 1; k <= std::min(s, n); ++k) {
    const Integer c = generalized_binomial(s, static_cast<unsigned>(k));
    const MotivicPolynomial term = MotivicPolynomial(c) * projective_class(n - k);
    out = (k % 2 == 1) ? out + term : out - term;
  }
  return out;
}

PairClass sym_pair_p1_direct(int n, int s) {
  const auto space = projective_class(n);
  return {space, space - hyperplane_union_class(n, s)};
}

PairClass sym_pair_p1_lambda(int n, int s) {
  if (n < 0) throw std::invalid_argument("sym_pair_p1_lambda: n must be >= 0");
  const auto n_ = static_cast<std::size_t>(n);
  return kapranov_zeta_pair(catalog::projective_line_marked(s), n_)[n_];
}

MarkedP1Scene::MarkedP1Scene(std::vector<LinePoint> marks) : marks_(std::move(marks)) {}

MarkedP1Scene::MarkedP1Scene(std::vector<LinePoint> marks, const PrimeField& field)
    : marks_(std::move(marks)), field_(field) {
  for (std::size_t i = 0; i < marks_.size(); ++i) {
    const auto& m = marks_[i];
    const bool finite = m.v == 1 && m.u < field.size();
    const bool infinite = m.u == 1 && m.v == 0;
    if (!finite && !infinite) throw std::invalid_argument("MarkedP1Scene: mark is not a normalized point over F_q");
    for (std::size_t j = 0; j < i; ++j)
      if (marks_[j] == m) throw std::invalid_argument("MarkedP1Scene: marks must be distinct");
  }
}

MarkedP1Scene MarkedP1Scene::standard(int s, const PrimeField& field) {
  if (s < 0) throw std::invalid_argument("MarkedP1Scene::standard: s must be >= 0");
  if (static_cast<std::uint64_t>(s) > field.size() + 1)
    throw std::invalid_argument("MarkedP1Scene::standard: s exceeds q + 1 distinct points");
  std::vector<LinePoint> marks;
  if (s > 0) marks.push_back(LinePoint::infinity());
  for (int i = 1; i < s; ++i) marks.push_back(LinePoint::finite(static_cast<PrimeField::Element>(i - 1)));
  return MarkedP1Scene(std::move(marks), field);
}

ProjectivePoint::ProjectivePoint(std::vector<PrimeField::Element> coords, const PrimeField& field)
    : coords_(std::move(coords)) {
  for (auto& c : coords_) c %= field.size();
  const auto lead = std::find_if(coords_.begin(), coords_.end(), [](auto c) { return c != 0; });
  if (lead == coords_.end()) throw std::invalid_argument("ProjectivePoint: all coordinates are zero");
  const auto scale = field.inv(*lead);
  for (auto& c : coords_) c = field.mul(c, scale);
}

ProjectivePoint vieta_coefficients(const RootList& roots, std::uint64_t q) {
  const PrimeField field(q);
  std::vector<PrimeField::Element> p{1};
  for (const auto& r : roots) {
    if (r.u % q == 0 && r.v % q == 0) throw std::invalid_argument("vieta_coefficients: root (0:0)");
    // Multiply by (u - v z).
    std::vector<PrimeField::Element> next(p.size() + 1, 0);
    for (std::size_t j = 0; j < p.size(); ++j) {
      next[j] = field.add(next[j], field.mul(r.u % q, p[j]));
      next[j + 1] = field.sub(next[j + 1], field.mul(r.v % q, p[j]));
    }
    p = std::move(next);
  }
  return ProjectivePoint(std::move(p), field);
}

bool point_in_marked_union(const ProjectivePoint& p, const MarkedP1Scene& scene) {
  if (scene.size() == 0) return false;
  if (!scene.field()) throw std::invalid_argument("point_in_marked_union: scene has no field");
  const PrimeField& f = *scene.field();
  const auto& c = p.coords();
  const std::size_t n = p.dimension();
  for (const auto& mark : scene.marks()) {
    PrimeField::Element value = 0;
    for (std::size_t j = 0; j <= n; ++j)
      value = f.add(value, f.mul(c[j], f.mul(f.pow(mark.u, j), f.pow(mark.v, n - j))));
    if (value == 0) return true;
  }
  return false;
}

}  // namespace kpairs
