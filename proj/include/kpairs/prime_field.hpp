#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kpairs {

bool is_prime(std::uint64_t n);

/// Integers modulo a prime q. Elements are plain values in [0, q).
class PrimeField {
 public:
  using Element = std::uint64_t;

  /// Throws std::invalid_argument unless q is prime. q is capped at 2^31 so
  /// products fit in 64 bits.
  explicit PrimeField(std::uint64_t q) : q_(q) {
    if (!is_prime(q)) throw std::invalid_argument("PrimeField: " + std::to_string(q) + " is not prime");
    if (q >= (std::uint64_t{1} << 31)) throw std::invalid_argument("PrimeField: modulus too large");
  }

  std::uint64_t size() const { return q_; }

  Element reduce(std::int64_t v) const {
    const auto q = static_cast<std::int64_t>(q_);
    return static_cast<Element>(((v % q) + q) % q);
  }
  Element add(Element a, Element b) const { return (a + b) % q_; }
  Element sub(Element a, Element b) const { return (a + q_ - b) % q_; }
  Element neg(Element a) const { return (q_ - a) % q_; }
  Element mul(Element a, Element b) const { return (a * b) % q_; }
  Element pow(Element a, std::uint64_t e) const {
    Element r = 1 % q_;
    for (a %= q_; e > 0; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  }
  /// Throws std::domain_error for 0.
  Element inv(Element a) const {
    if (a % q_ == 0) throw std::domain_error("PrimeField: zero has no inverse");
    return pow(a, q_ - 2);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t q_;
};

}  // namespace kpairs
