#pragma once

#include "kpairs/ff_oracle.hpp"
#include "kpairs/pair_class.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace kpairs {

/// One verification result: {"check", "params", "expected", "actual", "pass"}.
struct CheckRecord {
  std::string check;
  nlohmann::json params;
  nlohmann::json expected;
  nlohmann::json actual;
  bool pass = false;
};

void to_json(nlohmann::json& j, const CheckRecord& r);

struct SuiteOptions {
  std::size_t order = 8;
  std::vector<std::uint64_t> fields{2, 3, 5};
  std::uint64_t budget = EnumerationBudget::kDefaultSteps;
};

struct NamedPair {
  std::string name;
  PairClass value;
};

/// Every catalog generator exercised by the suites, in a fixed order. Marked
/// point counts stay at or below 3 so each entry is realizable over F_2.
std::vector<NamedPair> catalog_generators();

/// Deterministic sums and differences of catalog generators.
std::vector<std::pair<NamedPair, NamedPair>> sampled_catalog_pairs(std::size_t count, std::uint64_t seed);

/// Ring axioms on random pairs, the subvariety product rule, and the
/// evaluation bounds 0 <= comp(q) <= amb(q) on the catalog.
std::vector<CheckRecord> check_ring_axioms(const SuiteOptions& opts);

/// zeta_{p+r} = zeta_p zeta_r on the pair ring (and on the base ring, with the
/// zeta inverse property).
std::vector<CheckRecord> check_zeta_multiplicativity(std::size_t samples, std::size_t order);

/// Same for the configuration series.
std::vector<CheckRecord> check_config_multiplicativity(std::size_t samples, std::size_t order);

/// The five power-structure axioms over sampled bases and exponents,
/// including virtual exponents m1 - m2.
std::vector<CheckRecord> check_power_axioms(std::size_t order);

/// With effective A and m, every coefficient of A^m satisfies
/// 0 <= comp(q) <= amb(q).
std::vector<CheckRecord> check_effectiveness(std::size_t order, const std::vector<std::uint64_t>& fields);

/// (1-t)^(-p) = zeta_p and (1+t)^p = lambda_p for every catalog generator.
std::vector<CheckRecord> check_identities(std::size_t order);

/// Kapranov coefficient of (CP^1, s points) against (CP^n, s hyperplanes).
std::vector<CheckRecord> check_p1_coherence(int max_n, int max_s);

/// Enumerated hyperplane-union counts against the evaluated union class, for
/// 1 <= n <= max_n and s <= min(5, q + 1).
std::vector<CheckRecord> check_hyperplane_counts(int max_n, const std::vector<std::uint64_t>& fields,
                                                 EnumerationBudget& budget);

/// Exhaustive dimension-0 grid: |M| <= 4, weights <= 2, |A_i| <= 2, n <= 4.
std::vector<CheckRecord> check_eq3_finite(EnumerationBudget& budget);

/// Weil exp-formula counts against the evaluated base-ring zeta coefficients
/// (and the closed form |P^n(F_q)| for the projective line).
std::vector<CheckRecord> check_weil(const std::vector<std::uint64_t>& fields, std::size_t max_n);

/// Squarefree monic counts against the evaluated configuration series of L.
std::vector<CheckRecord> check_squarefree(const std::vector<std::uint64_t>& fields, int max_n,
                                          EnumerationBudget& budget);

/// ring-axioms, statement1, statement2, power-axioms, identities, example-p1,
/// eq3-finite, weil, squarefree, all.
const std::vector<std::string>& suite_names();

/// Runs a named suite. Throws std::invalid_argument for an unknown name and
/// BudgetExceeded when an enumeration would overrun the budget.
std::vector<CheckRecord> run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace kpairs
