#pragma once

#include "kpairs/motivic_polynomial.hpp"
#include "kpairs/pair_class.hpp"
#include "kpairs/power_series.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kpairs {

/// Supplies the zeta series (a lambda-structure) of a ring: constant term 1,
/// t-coefficient m, and zeta(a + b) = zeta(a) * zeta(b).
template <class R>
struct lambda_traits;

template <>
struct lambda_traits<Integer> {
  static TruncatedSeries<Integer> zeta(const Integer& m, std::size_t order) { return zeta_series(m, order); }
};

template <>
struct lambda_traits<MotivicPolynomial> {
  static TruncatedSeries<MotivicPolynomial> zeta(const MotivicPolynomial& m, std::size_t order) {
    return zeta_series(m, order);
  }
};

/// Componentwise: S^n(X,Y) has complement S^n(X \ Y).
template <>
struct lambda_traits<PairClass> {
  static TruncatedSeries<PairClass> zeta(const PairClass& m, std::size_t order) {
    const auto amb = zeta_series(m.amb(), order);
    const auto comp = zeta_series(m.comp(), order);
    TruncatedSeries<PairClass> out(order);
    for (std::size_t n = 0; n <= order; ++n) out[n] = PairClass(amb[n], comp[n]);
    return out;
  }
};

template <class R>
concept LambdaCapableRing = CoefficientRing<R> && requires(const R& m, std::size_t n) {
  { lambda_traits<R>::zeta(m, n) } -> std::convertible_to<TruncatedSeries<R>>;
};

/// Kapranov zeta function: coefficient of t^n is [S^n(X,Y)].
inline TruncatedSeries<PairClass> kapranov_zeta_pair(const PairClass& p, std::size_t order) {
  return lambda_traits<PairClass>::zeta(p, order);
}

/// zeta(t) / zeta(t^2): the generating series of unordered configurations of
/// distinct points.
template <LambdaCapableRing R>
TruncatedSeries<R> config_series(const R& m, std::size_t order) {
  const auto zeta = lambda_traits<R>::zeta(m, order);
  return zeta / lambda_traits<R>::zeta(m, order / 2).substitute_power(2, order);
}

/// Coefficient of t^n is [Lambda^n(X,Y)].
inline TruncatedSeries<PairClass> config_series_pair(const PairClass& p, std::size_t order) {
  return config_series(p, order);
}

/// Exponents b_1..b_N with A(t) = prod_i zeta_{b_i}(t^i) up to t^N.
template <LambdaCapableRing R>
struct FactorExponents {
  std::vector<R> exponents;  // exponents[i - 1] is b_i

  std::size_t order() const { return exponents.size(); }
  const R& b(std::size_t i) const { return exponents.at(i - 1); }

  TruncatedSeries<R> reconstruct() const {
    const std::size_t n = order();
    auto out = TruncatedSeries<R>::one(n);
    for (std::size_t i = 1; i <= n; ++i) out *= lambda_traits<R>::zeta(exponents[i - 1], n / i).substitute_power(i, n);
    return out;
  }
};

/// Peels zeta factors off A one degree at a time. After step i the residual
/// series has no terms in degrees 1..i.
template <LambdaCapableRing R>
FactorExponents<R> factor_exponents(const TruncatedSeries<R>& a) {
  if (!a.has_unit_constant()) throw std::invalid_argument("factor_exponents: constant term must be 1");
  const std::size_t n = a.order();
  FactorExponents<R> out;
  out.exponents.reserve(n);
  auto residual = a;
  for (std::size_t i = 1; i <= n; ++i) {
    R b = residual[i];
    if (!(b == ring_traits<R>::zero()))
      residual /= lambda_traits<R>::zeta(b, n / i).substitute_power(i, n);
    out.exponents.push_back(std::move(b));
  }
  return out;
}

/// A(t)^m = prod_i zeta_{m b_i}(t^i), truncated at t^order.
template <LambdaCapableRing R>
TruncatedSeries<R> power_pow(const TruncatedSeries<R>& a, const R& m, std::size_t order) {
  if (!a.has_unit_constant()) throw std::invalid_argument("power_pow: base constant term must be 1");
  if (a.order() < order) throw std::invalid_argument("power_pow: base series order is below the requested order");
  auto base = a.truncated(order);
  if (m == ring_traits<R>::zero() || base == TruncatedSeries<R>::one(order)) return TruncatedSeries<R>::one(order);
  const auto exps = factor_exponents(base);
  auto out = TruncatedSeries<R>::one(order);
  for (std::size_t i = 1; i <= order; ++i) {
    if (exps.b(i) == ring_traits<R>::zero()) continue;
    out *= lambda_traits<R>::zeta(m * exps.b(i), order / i).substitute_power(i, order);
  }
  return out;
}

/// 1 / (1 - t).
template <CoefficientRing R>
TruncatedSeries<R> geometric_series(std::size_t order) {
  return TruncatedSeries<R>(std::vector<R>(order + 1, ring_traits<R>::one()));
}

/// 1 + t.
template <CoefficientRing R>
TruncatedSeries<R> one_plus_t(std::size_t order) {
  auto s = TruncatedSeries<R>::one(order);
  if (order >= 1) s[1] = ring_traits<R>::one();
  return s;
}

/// One line of an axiom or identity report.
struct AxiomReport {
  std::string axiom;
  std::string sample;
  std::size_t order = 0;
  bool pass = false;
  std::optional<std::size_t> first_mismatch_degree;
};

void to_json(nlohmann::json& j, const AxiomReport& r);

/// Inputs for one round of the five power-structure axioms over the pair ring.
struct PowerAxiomSample {
  std::string label;
  TruncatedSeries<PairClass> a;
  TruncatedSeries<PairClass> b;
  PairClass m1;
  PairClass m2;
};

/// Checks, to `order`: A^0 = 1, A^1 = A, (AB)^m = A^m B^m,
/// A^(m1+m2) = A^m1 A^m2, A^(m1 m2) = (A^m2)^m1. One report per axiom per sample.
std::vector<AxiomReport> verify_power_axioms(const std::vector<PowerAxiomSample>& samples, std::size_t order);

/// (1 - t)^(-p) against the Kapranov zeta and (1 + t)^p against the
/// configuration series.
std::vector<AxiomReport> verify_identities(const PairClass& p, const std::string& label, std::size_t order);

template <class R>
void to_json(nlohmann::json& j, const TruncatedSeries<R>& s) {
  j = {{"order", s.order()}, {"coeffs", s.coeffs()}};
}

}  // namespace kpairs
