#include "kpairs/ff_oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace kpairs {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void EnumerationBudget::charge(std::uint64_t steps, const char* what) {
  if (steps > remaining_)
    throw BudgetExceeded(std::string(what) + ": needs " + std::to_string(steps) + " steps, " +
                         std::to_string(remaining_) + " remain");
  remaining_ -= steps;
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > kSaturated / base) return kSaturated;
    r *= base;
  }
  return r;
}

using Poly = std::vector<PrimeField::Element>;  // low degree first, no trailing zeros

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mod(Poly a, const Poly& b, const PrimeField& f) {
  const auto lead_inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    const auto factor = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(factor, b[i]));
    trim(a);
  }
  return a;
}

std::size_t gcd_degree(Poly a, Poly b, const PrimeField& f) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, f);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() - 1;
}

}  // namespace

std::vector<ProjectivePoint> enumerate_projective(int n, std::uint64_t q, EnumerationBudget& budget) {
  if (n < 0) throw std::invalid_argument("enumerate_projective: n must be >= 0");
  const PrimeField field(q);
  std::uint64_t total = 0;
  for (int lead = 0; lead <= n; ++lead) {
    const auto c = saturating_pow(q, static_cast<std::uint64_t>(n - lead));
    total = (c == kSaturated || total > kSaturated - c) ? kSaturated : total + c;
  }
  budget.charge(total, "enumerate_projective");

  std::vector<ProjectivePoint> out;
  out.reserve(total);
  const auto dim = static_cast<std::size_t>(n);
  for (std::size_t lead = 0; lead <= dim; ++lead) {
    std::vector<PrimeField::Element> coords(dim + 1, 0);
    coords[lead] = 1;
    // Odometer over the coordinates after the leading one.
    while (true) {
      out.emplace_back(coords, field);
      std::size_t i = dim;
      while (i > lead && coords[i] == q - 1) coords[i--] = 0;
      if (i == lead) break;
      ++coords[i];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_marked_union(int n, std::uint64_t q, const MarkedP1Scene& scene, EnumerationBudget& budget) {
  if (n < 1) throw std::invalid_argument("count_marked_union: n must be >= 1");
  if (scene.size() > q + 1) throw std::invalid_argument("count_marked_union: more than q + 1 distinct marks");
  if (scene.size() > 0 && (!scene.field() || scene.field()->size() != q))
    throw std::invalid_argument("count_marked_union: scene is not realized over F_q");
  std::uint64_t count = 0;
  for (const auto& p : enumerate_projective(n, q, budget))
    if (point_in_marked_union(p, scene)) ++count;
  return count;
}

std::vector<Integer> weil_symmetric_counts(const PointCountFn& counts, std::uint64_t q, std::size_t order) {
  const Integer qq(q);
  std::vector<Integer> n_r(order + 1);
  for (std::size_t r = 1; r <= order; ++r) n_r[r] = counts(qq, static_cast<unsigned>(r));

  // E = exp(S) with S' = sum_r N_r t^(r-1), so n e_n = sum_{r=1}^n N_r e_{n-r}.
  std::vector<Rational> e(order + 1);
  std::vector<Integer> out(order + 1);
  e[0] = 1;
  out[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (std::size_t r = 1; r <= n; ++r) acc += Rational(n_r[r]) * e[n - r];
    e[n] = acc / static_cast<long>(n);
    if (denominator(e[n]) != 1)
      throw std::logic_error("weil_symmetric_counts: non-integer coefficient at t^" + std::to_string(n));
    out[n] = numerator(e[n]);
  }
  return out;
}

std::uint64_t count_squarefree_monic(std::uint64_t q, int n, EnumerationBudget& budget) {
  if (n < 1) throw std::invalid_argument("count_squarefree_monic: n must be >= 1");
  const PrimeField field(q);
  const auto total = saturating_pow(q, static_cast<std::uint64_t>(n));
  budget.charge(total, "count_squarefree_monic");

  const auto deg = static_cast<std::size_t>(n);
  Poly f(deg + 1, 0);
  f[deg] = 1;
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    auto rest = idx;
    for (std::size_t i = 0; i < deg; ++i, rest /= q) f[i] = rest % q;
    Poly df(deg, 0);
    for (std::size_t i = 1; i <= deg; ++i) df[i - 1] = field.mul(f[i], i % q);
    trim(df);
    if (!df.empty() && gcd_degree(f, df, field) == 0) ++count;
  }
  return count;
}

void FiniteScene::validate() const {
  if (atoms.marked > atoms.size) throw std::invalid_argument("FiniteScene: marked atoms exceed atoms");
  for (const auto& l : labels)
    if (l.marked > l.size) throw std::invalid_argument("FiniteScene: marked labels exceed labels");
}

namespace {

struct Label {
  std::size_t weight;
  bool marked;
};

struct ConfigWalker {
  const FiniteScene& scene;
  const std::vector<Label>& labels;
  std::size_t target;
  Integer ambient = 0;
  Integer complement = 0;

  // Atom `atom` is either left out of K or sent to one label.
  void walk(std::size_t atom, std::size_t weight, bool touches_marks) {
    if (atom == scene.atoms.size) {
      if (weight == target) {
        ++ambient;
        if (!touches_marks) ++complement;
      }
      return;
    }
    walk(atom + 1, weight, touches_marks);
    const bool atom_marked = atom < scene.atoms.marked;
    for (const auto& l : labels) {
      if (weight + l.weight > target) continue;
      walk(atom + 1, weight + l.weight, touches_marks || atom_marked || l.marked);
    }
  }
};

}  // namespace

ConfigCount count_power_configs(const FiniteScene& scene, int n, EnumerationBudget& budget) {
  if (n < 0) throw std::invalid_argument("count_power_configs: n must be >= 0");
  scene.validate();
  std::vector<Label> labels;
  for (std::size_t i = 0; i < scene.labels.size(); ++i)
    for (std::size_t j = 0; j < scene.labels[i].size; ++j) labels.push_back({i + 1, j < scene.labels[i].marked});
  budget.charge(saturating_pow(labels.size() + 1, scene.atoms.size), "count_power_configs");

  ConfigWalker walker{scene, labels, static_cast<std::size_t>(n)};
  walker.walk(0, 0, false);
  return {walker.ambient, walker.complement};
}

}  // namespace kpairs
