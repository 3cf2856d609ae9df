#pragma once

#include "kpairs/integer.hpp"
#include "kpairs/power_series.hpp"

#include <json.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace kpairs {

/// Integer polynomial in the Lefschetz class L. Stored densely by degree with
/// no trailing zero, so equal classes have identical representations.
class MotivicPolynomial {
 public:
  MotivicPolynomial() = default;
  MotivicPolynomial(int constant) : MotivicPolynomial(Integer(constant)) {}  // NOLINT: implicit
  MotivicPolynomial(Integer constant);                                       // NOLINT: implicit

  /// Coefficients of L^0, L^1, ...
  static MotivicPolynomial from_coefficients(std::vector<Integer> coeffs);
  MotivicPolynomial(std::initializer_list<int> coeffs);

  static MotivicPolynomial one() { return MotivicPolynomial(1); }
  /// L^degree.
  static MotivicPolynomial lefschetz(std::size_t degree = 1);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of L^d (zero past the top degree).
  Integer coefficient(std::size_t d) const;

  /// Nonzero terms in increasing degree.
  std::vector<std::pair<std::size_t, Integer>> terms() const;

  /// Substitutes L = q. Requires q >= 2.
  Integer evaluate(const Integer& q) const;

  /// "1 + 2L - L^3"; "0" for zero.
  std::string to_string() const;

  friend bool operator==(const MotivicPolynomial&, const MotivicPolynomial&) = default;

  friend MotivicPolynomial operator+(const MotivicPolynomial& a, const MotivicPolynomial& b);
  friend MotivicPolynomial operator-(const MotivicPolynomial& a, const MotivicPolynomial& b);
  friend MotivicPolynomial operator-(const MotivicPolynomial& a);
  friend MotivicPolynomial operator*(const MotivicPolynomial& a, const MotivicPolynomial& b);

  MotivicPolynomial& operator+=(const MotivicPolynomial& o) { return *this = *this + o; }
  MotivicPolynomial& operator-=(const MotivicPolynomial& o) { return *this = *this - o; }
  MotivicPolynomial& operator*=(const MotivicPolynomial& o) { return *this = *this * o; }

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

/// [CP^n] = 1 + L + ... + L^n.
MotivicPolynomial projective_class(int n);

/// prod_k (1 - L^k t)^(-m_k) for m = sum_k m_k L^k, truncated at t^order.
/// Negative m_k give polynomial factors (1 - L^k t)^|m_k|.
TruncatedSeries<MotivicPolynomial> zeta_series(const MotivicPolynomial& m, std::size_t order);

/// (1 - t)^(-m) over the integers.
TruncatedSeries<Integer> zeta_series(const Integer& m, std::size_t order);

std::ostream& operator<<(std::ostream& os, const MotivicPolynomial& p);

// {"0":"1","2":"-3"}: decimal-string degree -> decimal-string coefficient.
void to_json(nlohmann::json& j, const MotivicPolynomial& p);
void from_json(const nlohmann::json& j, MotivicPolynomial& p);

}  // namespace kpairs
