#pragma once

#include "kpairs/geometry_example.hpp"
#include "kpairs/integer.hpp"
#include "kpairs/prime_field.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace kpairs {

/// Thrown when an enumeration would exceed its step budget. Oracles never
/// fall back to sampling.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Counts atomic enumeration steps against a fixed allowance.
class EnumerationBudget {
 public:
  static constexpr std::uint64_t kDefaultSteps = 10'000'000;

  explicit EnumerationBudget(std::uint64_t steps = kDefaultSteps) : remaining_(steps) {
    if (steps == 0) throw std::invalid_argument("EnumerationBudget: budget must be positive");
  }

  void charge(std::uint64_t steps, const char* what);
  std::uint64_t remaining() const { return remaining_; }

 private:
  std::uint64_t remaining_;
};

/// All points of P^n(F_q), normalized, in lexicographic order.
std::vector<ProjectivePoint> enumerate_projective(int n, std::uint64_t q, EnumerationBudget& budget);

/// Points of P^n(F_q) on at least one of the scene's hyperplanes, by testing
/// every point. Requires n >= 1 and a scene realized over F_q.
std::uint64_t count_marked_union(int n, std::uint64_t q, const MarkedP1Scene& scene, EnumerationBudget& budget);

/// N_r = |X(F_{q^r})| in closed form.
using PointCountFn = std::function<Integer(const Integer& q, unsigned r)>;

namespace point_counts {
inline Integer projective_line(const Integer& q, unsigned r) { return pow(q, r) + 1; }
inline Integer affine_line(const Integer& q, unsigned r) { return pow(q, r); }
inline PointCountFn points(unsigned s) {
  return [s](const Integer&, unsigned) { return Integer(s); };
}
inline Integer nothing(const Integer&, unsigned) { return 0; }
}  // namespace point_counts

/// |S^n X(F_q)| for n = 0..order from exp(sum_r N_r t^r / r), in exact
/// rational arithmetic. Throws std::logic_error if a coefficient is not an
/// integer.
std::vector<Integer> weil_symmetric_counts(const PointCountFn& counts, std::uint64_t q, std::size_t order);

/// Monic degree-n polynomials over F_q coprime to their derivative, by
/// enumerating all q^n of them.
std::uint64_t count_squarefree_monic(std::uint64_t q, int n, EnumerationBudget& budget);

/// `size` elements of which the first `marked` are distinguished.
struct MarkedSet {
  std::size_t size = 0;
  std::size_t marked = 0;
};

/// Dimension-0 data for a power-structure coefficient: exponent pair (M, N)
/// and label pairs (A_i, B_i) of weight i = 1, 2, ...
struct FiniteScene {
  MarkedSet atoms;
  std::vector<MarkedSet> labels;  // labels[i - 1] has weight i

  /// Throws std::invalid_argument if any marked count exceeds its set size.
  void validate() const;
};

struct ConfigCount {
  Integer ambient;
  Integer complement;

  friend bool operator==(const ConfigCount&, const ConfigCount&) = default;
};

/// Enumerates (K, phi) with K a subset of the atoms and phi: K -> labels of
/// total weight n. The complement counts those with K disjoint from the marked
/// atoms and no marked label in the image of phi.
ConfigCount count_power_configs(const FiniteScene& scene, int n, EnumerationBudget& budget);

}  // namespace kpairs
