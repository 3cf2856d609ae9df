#pragma once

#include "kpairs/motivic_polynomial.hpp"

#include <json.hpp>

#include <iosfwd>

namespace kpairs {

/// Class of a pair (X, Y) under [(X,Y)] -> ([X], [X \ Y]).
///
/// The product (X1 x X2, X1 x Y2 u Y1 x X2) has complement (X1\Y1) x (X2\Y2),
/// and cutting along a closed Z splits both X and X \ Y, so addition and
/// multiplication are both componentwise. The subvariety class [Y] is derived.
class PairClass {
 public:
  PairClass() = default;
  PairClass(MotivicPolynomial ambient, MotivicPolynomial complement)
      : amb_(std::move(ambient)), comp_(std::move(complement)) {}

  /// (pt, empty).
  static PairClass one() { return {1, 1}; }

  const MotivicPolynomial& amb() const { return amb_; }
  const MotivicPolynomial& comp() const { return comp_; }
  MotivicPolynomial sub() const { return amb_ - comp_; }

  friend bool operator==(const PairClass&, const PairClass&) = default;

  friend PairClass operator+(const PairClass& a, const PairClass& b) { return {a.amb_ + b.amb_, a.comp_ + b.comp_}; }
  friend PairClass operator-(const PairClass& a, const PairClass& b) { return {a.amb_ - b.amb_, a.comp_ - b.comp_}; }
  friend PairClass operator-(const PairClass& a) { return {-a.amb_, -a.comp_}; }
  friend PairClass operator*(const PairClass& a, const PairClass& b) { return {a.amb_ * b.amb_, a.comp_ * b.comp_}; }

  PairClass& operator+=(const PairClass& o) { return *this = *this + o; }
  PairClass& operator*=(const PairClass& o) { return *this = *this * o; }

 private:
  MotivicPolynomial amb_;
  MotivicPolynomial comp_;
};

/// n-fold product power; power(a, 0) is the unit.
PairClass power(const PairClass& a, unsigned n);

std::ostream& operator<<(std::ostream& os, const PairClass& p);

void to_json(nlohmann::json& j, const PairClass& p);
void from_json(const nlohmann::json& j, PairClass& p);

/// Concrete pairs. All reject negative parameters with std::invalid_argument.
namespace catalog {

PairClass point();
PairClass empty();
/// (A^1, s points).
PairClass affine_line_marked(int s);
/// (CP^1, s points).
PairClass projective_line_marked(int s);
/// (CP^n, empty).
PairClass projective_space(int n);
/// (m points, k of them marked); requires k <= m.
PairClass finite(int m, int k);
/// (CP^n, union of s hyperplanes in general position).
PairClass projective_space_with_hyperplanes(int n, int s);

}  // namespace catalog

}  // namespace kpairs
