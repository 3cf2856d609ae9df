#pragma once

#include "kpairs/integer.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kpairs {

/// Additive and multiplicative identities of a coefficient ring.
template <class R>
struct ring_traits {
  static R zero() { return R{}; }
  static R one() { return R::one(); }
};

template <>
struct ring_traits<Integer> {
  static Integer zero() { return 0; }
  static Integer one() { return 1; }
};

template <class R>
concept CoefficientRing = requires(const R& a, const R& b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
  { ring_traits<R>::zero() } -> std::convertible_to<R>;
  { ring_traits<R>::one() } -> std::convertible_to<R>;
};

/// Power series c_0 + c_1 t + ... + c_N t^N; everything above t^N is dropped.
template <CoefficientRing R>
class TruncatedSeries {
 public:
  /// The zero series of the given order.
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, ring_traits<R>::zero()) {}

  /// Takes c_0 ... c_N; the order is coeffs.size() - 1.
  explicit TruncatedSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: need at least one coefficient");
  }

  static TruncatedSeries one(std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = ring_traits<R>::one();
    return s;
  }

  /// Coefficients c_0..c_k given, the rest zero up to `order`.
  static TruncatedSeries from_prefix(std::vector<R> prefix, std::size_t order) {
    prefix.resize(order + 1, ring_traits<R>::zero());
    return TruncatedSeries(std::move(prefix));
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const R& operator[](std::size_t n) const { return coeffs_.at(n); }
  R& operator[](std::size_t n) { return coeffs_.at(n); }
  const std::vector<R>& coeffs() const { return coeffs_; }

  bool has_unit_constant() const { return coeffs_[0] == ring_traits<R>::one(); }

  TruncatedSeries truncated(std::size_t order) const {
    if (order > this->order()) throw std::invalid_argument("TruncatedSeries: cannot extend order by truncation");
    return TruncatedSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  /// A(t) -> A(t^k), kept at `order`.
  TruncatedSeries substitute_power(std::size_t k, std::size_t order) const {
    if (k == 0) throw std::invalid_argument("substitute_power: k must be positive");
    TruncatedSeries out(order);
    for (std::size_t j = 0; j <= this->order() && j * k <= order; ++j) out.coeffs_[j * k] = coeffs_[j];
    return out;
  }

  /// Smallest degree where the two series differ, comparing up to the common order.
  friend std::optional<std::size_t> first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    for (std::size_t i = 0; i <= n; ++i)
      if (!(a.coeffs_[i] == b.coeffs_[i])) return i;
    return std::nullopt;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return !first_mismatch(a, b).has_value();
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= out.order(); ++i) out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return out;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= out.order(); ++i) out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return out;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a) {
    TruncatedSeries out(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) out.coeffs_[i] = -a.coeffs_[i];
    return out;
  }

  /// Cauchy product, truncated to the smaller order.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries out(n);
    const R zero = ring_traits<R>::zero();
    for (std::size_t i = 0; i <= n; ++i) {
      if (a.coeffs_[i] == zero) continue;
      for (std::size_t j = 0; i + j <= n; ++j) {
        if (b.coeffs_[j] == zero) continue;
        out.coeffs_[i + j] = out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return out;
  }

  /// Series quotient a / b. The divisor must have constant term 1.
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!b.has_unit_constant())
      throw std::invalid_argument("TruncatedSeries division: divisor constant term must be 1");
    const std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries out(n);
    const R zero = ring_traits<R>::zero();
    for (std::size_t k = 0; k <= n; ++k) {
      R c = a.coeffs_[k];
      for (std::size_t j = 1; j <= k; ++j) {
        if (b.coeffs_[j] == zero) continue;
        c = c - b.coeffs_[j] * out.coeffs_[k - j];
      }
      out.coeffs_[k] = std::move(c);
    }
    return out;
  }

  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }
  TruncatedSeries& operator/=(const TruncatedSeries& o) { return *this = *this / o; }

 private:
  std::vector<R> coeffs_;
};

}  // namespace kpairs
