#pragma once

#include "kpairs/motivic_polynomial.hpp"
#include "kpairs/pair_class.hpp"
#include "kpairs/prime_field.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace kpairs {

/// Union of s hyperplanes of CP^n in general position, by inclusion-exclusion:
/// sum_{k=1}^{s} (-1)^(k-1) C(s,k) [CP^(n-k)], empty when n - k < 0.
MotivicPolynomial hyperplane_union_class(int n, int s);

/// S^n(CP^1, s points) as (CP^n, s hyperplanes).
PairClass sym_pair_p1_direct(int n, int s);

/// S^n(CP^1, s points) as the t^n coefficient of the Kapranov zeta function.
PairClass sym_pair_p1_lambda(int n, int s);

/// A point (u:v) of the projective line over F_q.
struct LinePoint {
  PrimeField::Element u = 0;
  PrimeField::Element v = 1;

  static LinePoint finite(PrimeField::Element x) { return {x, 1}; }
  static LinePoint infinity() { return {1, 0}; }

  friend bool operator==(const LinePoint&, const LinePoint&) = default;
};

/// Distinct marked points a_1..a_s on the projective line.
class MarkedP1Scene {
 public:
  /// Marks without a field (only s matters).
  explicit MarkedP1Scene(std::vector<LinePoint> marks);
  /// Marks realized over F_q; throws if marks repeat or leave the field.
  MarkedP1Scene(std::vector<LinePoint> marks, const PrimeField& field);

  /// s distinct F_q-rational marks: infinity first, then 0, 1, 2, ...
  /// Throws std::invalid_argument when s > q + 1.
  static MarkedP1Scene standard(int s, const PrimeField& field);

  std::size_t size() const { return marks_.size(); }
  const std::vector<LinePoint>& marks() const { return marks_; }
  const std::optional<PrimeField>& field() const { return field_; }

 private:
  std::vector<LinePoint> marks_;
  std::optional<PrimeField> field_;
};

/// (p_0 : ... : p_n) over F_q, scaled so the first nonzero entry is 1.
class ProjectivePoint {
 public:
  /// Throws std::invalid_argument for the zero vector.
  ProjectivePoint(std::vector<PrimeField::Element> coords, const PrimeField& field);

  std::size_t dimension() const { return coords_.size() - 1; }
  const std::vector<PrimeField::Element>& coords() const { return coords_; }

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
  friend auto operator<=>(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  std::vector<PrimeField::Element> coords_;
};

/// Multiset of n points of the projective line.
using RootList = std::vector<LinePoint>;

/// Coefficients p_0..p_n of prod_i (u_i - v_i z), i.e. of the binary form
/// F(u, v) = sum_j p_j u^j v^(n-j) vanishing exactly on the roots.
/// An empty list gives the point (1) of P^0. Throws std::invalid_argument if q
/// is not prime or a root is (0:0).
ProjectivePoint vieta_coefficients(const RootList& roots, std::uint64_t q);

/// F(a) = 0 for some mark a. For the mark at infinity this is p_n = 0.
bool point_in_marked_union(const ProjectivePoint& p, const MarkedP1Scene& scene);

}  // namespace kpairs
