#include "kpairs/motivic_polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace kpairs {

Integer parse_integer(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size() ||
      !std::all_of(text.begin() + static_cast<long>(start), text.end(),
                   [](unsigned char c) { return std::isdigit(c) != 0; }))
    throw std::invalid_argument("not an integer: '" + text + "'");
  Integer v(text.substr(start));
  return text[0] == '-' ? Integer(-v) : v;
}

Integer generalized_binomial(const Integer& top, unsigned k) {
  Integer num = 1;
  Integer den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= top - i;
    den *= i + 1;
  }
  return num / den;
}

MotivicPolynomial::MotivicPolynomial(Integer constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

MotivicPolynomial::MotivicPolynomial(std::initializer_list<int> coeffs)
    : coeffs_(coeffs.begin(), coeffs.end()) {
  trim();
}

MotivicPolynomial MotivicPolynomial::from_coefficients(std::vector<Integer> coeffs) {
  MotivicPolynomial p;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

MotivicPolynomial MotivicPolynomial::lefschetz(std::size_t degree) {
  MotivicPolynomial p;
  p.coeffs_.assign(degree + 1, Integer(0));
  p.coeffs_[degree] = 1;
  return p;
}

void MotivicPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer MotivicPolynomial::coefficient(std::size_t d) const {
  return d < coeffs_.size() ? coeffs_[d] : Integer(0);
}

std::vector<std::pair<std::size_t, Integer>> MotivicPolynomial::terms() const {
  std::vector<std::pair<std::size_t, Integer>> out;
  for (std::size_t d = 0; d < coeffs_.size(); ++d)
    if (coeffs_[d] != 0) out.emplace_back(d, coeffs_[d]);
  return out;
}

Integer MotivicPolynomial::evaluate(const Integer& q) const {
  if (q < 2) throw std::invalid_argument("MotivicPolynomial::evaluate: q must be >= 2");
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

std::string MotivicPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms()) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << "L";
    if (d > 1) os << "^" << d;
  }
  return os.str();
}

MotivicPolynomial operator+(const MotivicPolynomial& a, const MotivicPolynomial& b) {
  std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return MotivicPolynomial::from_coefficients(std::move(out));
}

MotivicPolynomial operator-(const MotivicPolynomial& a) {
  MotivicPolynomial out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

MotivicPolynomial operator-(const MotivicPolynomial& a, const MotivicPolynomial& b) { return a + (-b); }

MotivicPolynomial operator*(const MotivicPolynomial& a, const MotivicPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return MotivicPolynomial::from_coefficients(std::move(out));
}

MotivicPolynomial projective_class(int n) {
  if (n < 0) throw std::invalid_argument("projective_class: n must be >= 0");
  return MotivicPolynomial::from_coefficients(std::vector<Integer>(static_cast<std::size_t>(n) + 1, Integer(1)));
}

namespace {

// Coefficients of (1 - x)^(-c): C(c + j - 1, j), built by the exact recurrence
// r_j = r_{j-1} (c + j - 1) / j.
std::vector<Integer> negative_binomial_coefficients(const Integer& c, std::size_t order) {
  std::vector<Integer> r(order + 1);
  r[0] = 1;
  for (std::size_t j = 1; j <= order; ++j) r[j] = r[j - 1] * (c + static_cast<long>(j) - 1) / static_cast<long>(j);
  return r;
}

}  // namespace

TruncatedSeries<MotivicPolynomial> zeta_series(const MotivicPolynomial& m, std::size_t order) {
  auto result = TruncatedSeries<MotivicPolynomial>::one(order);
  for (const auto& [k, c] : m.terms()) {
    const auto r = negative_binomial_coefficients(c, order);
    TruncatedSeries<MotivicPolynomial> factor(order);
    for (std::size_t j = 0; j <= order; ++j) factor[j] = r[j] * MotivicPolynomial::lefschetz(k * j);
    result *= factor;
  }
  return result;
}

TruncatedSeries<Integer> zeta_series(const Integer& m, std::size_t order) {
  return TruncatedSeries<Integer>(negative_binomial_coefficients(m, order));
}

std::ostream& operator<<(std::ostream& os, const MotivicPolynomial& p) { return os << p.to_string(); }

void to_json(nlohmann::json& j, const MotivicPolynomial& p) {
  j = nlohmann::json::object();
  for (const auto& [d, c] : p.terms()) j[std::to_string(d)] = c.str();
}

void from_json(const nlohmann::json& j, MotivicPolynomial& p) {
  if (!j.is_object()) throw std::invalid_argument("MotivicPolynomial JSON must be an object");
  std::vector<Integer> coeffs;
  for (const auto& [key, value] : j.items()) {
    const Integer deg = parse_integer(key);
    if (deg < 0 || deg > 1'000'000) throw std::invalid_argument("MotivicPolynomial JSON: bad degree " + key);
    const auto d = deg.convert_to<std::size_t>();
    if (coeffs.size() <= d) coeffs.resize(d + 1, Integer(0));
    coeffs[d] = parse_integer(value.get<std::string>());
  }
  p = MotivicPolynomial::from_coefficients(std::move(coeffs));
}

}  // namespace kpairs
