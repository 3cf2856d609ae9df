#include "kpairs/suites.hpp"

#include "kpairs/geometry_example.hpp"
#include "kpairs/lambda_power.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

namespace kpairs {

void to_json(nlohmann::json& j, const CheckRecord& r) {
  j = {{"check", r.check}, {"params", r.params}, {"expected", r.expected}, {"actual", r.actual}, {"pass", r.pass}};
}

namespace {

using PairSeries = TruncatedSeries<PairClass>;
using Json = nlohmann::json;

template <class R>
CheckRecord series_check(std::string check, Json params, const TruncatedSeries<R>& actual,
                         const TruncatedSeries<R>& expected) {
  CheckRecord rec{std::move(check), std::move(params), {}, {}, false};
  if (const auto k = first_mismatch(actual, expected)) {
    rec.expected = {{"degree", *k}, {"coeff", expected[*k]}};
    rec.actual = {{"degree", *k}, {"coeff", actual[*k]}};
  } else {
    const auto n = std::min(actual.order(), expected.order());
    rec.expected = {{"equal_to_order", expected.order()}};
    rec.actual = {{"equal_to_order", n}};
    rec.pass = n == expected.order();
  }
  return rec;
}

std::string str(const Integer& v) { return v.str(); }

Json strings(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(str(x));
  return out;
}

// mt19937_64 is fully specified, so raw draws are reproducible everywhere.
class SampleSource {
 public:
  explicit SampleSource(std::uint64_t seed) : rng_(seed) {}

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  int small(int lo, int hi) { return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  MotivicPolynomial polynomial() {
    std::vector<Integer> c(static_cast<std::size_t>(small(0, 4)));
    for (auto& x : c) x = small(-3, 3);
    return MotivicPolynomial::from_coefficients(std::move(c));
  }

  PairClass pair() { return {polynomial(), polynomial()}; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

std::vector<NamedPair> catalog_generators() {
  std::vector<NamedPair> out{{"point", catalog::point()}, {"empty", catalog::empty()}};
  for (int s = 0; s <= 2; ++s)
    out.push_back({"affine-marked:" + std::to_string(s), catalog::affine_line_marked(s)});
  for (int s = 0; s <= 3; ++s)
    out.push_back({"p1-marked:" + std::to_string(s), catalog::projective_line_marked(s)});
  for (int n = 0; n <= 3; ++n) out.push_back({"pn:" + std::to_string(n), catalog::projective_space(n)});
  for (int m = 1; m <= 3; ++m)
    for (int k = 0; k <= m; ++k)
      out.push_back({"finite:" + std::to_string(m) + "," + std::to_string(k), catalog::finite(m, k)});
  for (int n = 1; n <= 3; ++n)
    for (int s = 1; s <= 3; ++s)
      out.push_back({"pn-hyp:" + std::to_string(n) + "," + std::to_string(s),
                     catalog::projective_space_with_hyperplanes(n, s)});
  return out;
}

std::vector<std::pair<NamedPair, NamedPair>> sampled_catalog_pairs(std::size_t count, std::uint64_t seed) {
  const auto gens = catalog_generators();
  SampleSource src(seed);
  std::vector<std::pair<NamedPair, NamedPair>> out;
  for (std::size_t i = 0; i < count; ++i) {
    NamedPair a = gens[src.index(gens.size())];
    NamedPair b = gens[src.index(gens.size())];
    // Every third sample uses a difference of generators as its second summand.
    if (i % 3 == 2) {
      const auto& c = gens[src.index(gens.size())];
      b = {"sum(" + b.name + ",neg(" + c.name + "))", b.value - c.value};
    }
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

std::vector<CheckRecord> check_ring_axioms(const SuiteOptions& opts) {
  constexpr std::size_t kTriples = 40;
  constexpr std::uint64_t kSeed = 0x5eed0001;
  SampleSource src(kSeed);
  const PairClass zero;
  const PairClass one = PairClass::one();

  struct Axiom {
    std::string name;
    std::function<bool(const PairClass&, const PairClass&, const PairClass&)> holds;
  };
  const std::vector<Axiom> axioms{
      {"ring:add-associative", [](auto& a, auto& b, auto& c) { return (a + b) + c == a + (b + c); }},
      {"ring:add-commutative", [](auto& a, auto& b, auto&) { return a + b == b + a; }},
      {"ring:add-identity", [&](auto& a, auto&, auto&) { return a + zero == a; }},
      {"ring:add-inverse", [&](auto& a, auto&, auto&) { return a - a == zero && a + (-a) == zero; }},
      {"ring:mul-associative", [](auto& a, auto& b, auto& c) { return (a * b) * c == a * (b * c); }},
      {"ring:mul-commutative", [](auto& a, auto& b, auto&) { return a * b == b * a; }},
      {"ring:mul-identity", [&](auto& a, auto&, auto&) { return a * one == a && one * a == a; }},
      {"ring:distributive", [](auto& a, auto& b, auto& c) { return a * (b + c) == a * b + a * c; }},
      {"pair:product-subvariety",
       [](auto& a, auto& b, auto&) {
         return (a * b).sub() == a.amb() * b.sub() + a.sub() * b.amb() - a.sub() * b.sub();
       }},
  };

  std::vector<std::array<PairClass, 3>> triples;
  for (std::size_t i = 0; i < kTriples; ++i) triples.push_back({src.pair(), src.pair(), src.pair()});

  std::vector<CheckRecord> out;
  for (const auto& ax : axioms) {
    std::size_t failures = 0;
    for (const auto& [a, b, c] : triples)
      if (!ax.holds(a, b, c)) ++failures;
    out.push_back({ax.name, {{"samples", kTriples}, {"seed", kSeed}}, {{"failures", 0}}, {{"failures", failures}},
                   failures == 0});
  }

  for (const auto& g : catalog_generators()) {
    for (const auto q : opts.fields) {
      const Integer amb = g.value.amb().evaluate(q);
      const Integer comp = g.value.comp().evaluate(q);
      out.push_back({"catalog:evaluation-bounds",
                     {{"pair", g.name}, {"q", q}},
                     {{"bounds", "0<=comp<=amb"}},
                     {{"amb", str(amb)}, {"comp", str(comp)}},
                     comp >= 0 && comp <= amb});
    }
  }
  return out;
}

std::vector<CheckRecord> check_zeta_multiplicativity(std::size_t samples, std::size_t order) {
  std::vector<CheckRecord> out;
  for (const auto& [a, b] : sampled_catalog_pairs(samples, 0x5eed0002)) {
    out.push_back(series_check("statement1:zeta-multiplicative",
                               {{"p", a.name}, {"r", b.name}, {"order", order}},
                               kapranov_zeta_pair(a.value + b.value, order),
                               kapranov_zeta_pair(a.value, order) * kapranov_zeta_pair(b.value, order)));
  }
  SampleSource src(0x5eed0003);
  for (std::size_t i = 0; i < samples; ++i) {
    const auto a = src.polynomial();
    const auto b = src.polynomial();
    const Json params{{"a", a}, {"b", b}, {"order", order}};
    out.push_back(series_check("base:zeta-multiplicative", params, zeta_series(a + b, order),
                               zeta_series(a, order) * zeta_series(b, order)));
    out.push_back(series_check("base:zeta-inverse", params, zeta_series(-a, order) * zeta_series(a, order),
                               TruncatedSeries<MotivicPolynomial>::one(order)));
  }
  return out;
}

std::vector<CheckRecord> check_config_multiplicativity(std::size_t samples, std::size_t order) {
  std::vector<CheckRecord> out;
  for (const auto& [a, b] : sampled_catalog_pairs(samples, 0x5eed0004)) {
    out.push_back(series_check("statement2:lambda-multiplicative",
                               {{"p", a.name}, {"r", b.name}, {"order", order}},
                               config_series_pair(a.value + b.value, order),
                               config_series_pair(a.value, order) * config_series_pair(b.value, order)));
  }
  return out;
}

namespace {

struct NamedSeries {
  std::string name;
  PairSeries value;
};

std::vector<NamedSeries> effective_bases(std::size_t order) {
  using catalog::finite;
  using catalog::projective_line_marked;
  return {
      {"geometric", geometric_series<PairClass>(order)},
      {"one-plus-t", one_plus_t<PairClass>(order)},
      {"series:point;finite:2,1;p1-marked:1",
       PairSeries::from_prefix({PairClass::one(), finite(2, 1), projective_line_marked(1)}, order)},
      {"series:point;affine-marked:1;pn:1;pn-hyp:2,1",
       PairSeries::from_prefix({PairClass::one(), catalog::affine_line_marked(1), catalog::projective_space(1),
                                catalog::projective_space_with_hyperplanes(2, 1)},
                               order)},
  };
}

}  // namespace

std::vector<CheckRecord> check_power_axioms(std::size_t order) {
  using namespace catalog;
  const auto geo = geometric_series<PairClass>(order);
  const auto opt = one_plus_t<PairClass>(order);
  const auto mixed = PairSeries::from_prefix({PairClass::one(), finite(2, 1), projective_line_marked(1)}, order);
  const auto poly = PairSeries::from_prefix({PairClass::one(), PairClass::one(), PairClass::one()}, order);
  const auto virt = PairSeries::from_prefix({PairClass::one(), finite(1, 0) - affine_line_marked(1)}, order);
  const PairClass l_pair{MotivicPolynomial{0, 1}, MotivicPolynomial{0, 1}};

  const std::vector<PowerAxiomSample> samples{
      {"A=1+t+t^2 m1=(1+L,L) m2=(2,1)", poly, geo, {MotivicPolynomial{1, 1}, l_pair.comp()}, finite(2, 1)},
      {"A=1+t B=1/(1-t) m1=(3,2) m2=p1-marked:1", opt, geo, finite(3, 1), projective_line_marked(1)},
      {"A=1/(1-t) B=mixed m1=p1-marked:2 m2=pn:1", geo, mixed, projective_line_marked(2), projective_space(1)},
      {"A=mixed B=1+t m1=pn-hyp:2,2 m2=finite:2,1", mixed, opt, projective_space_with_hyperplanes(2, 2),
       finite(2, 1)},
      {"A=mixed B=poly m1=p1-marked:1-finite:2,1 m2=affine-marked:1", mixed, poly,
       projective_line_marked(1) - finite(2, 1), affine_line_marked(1)},
      {"A=1+t B=mixed m1=pn:2-p1-marked:3 m2=neg(point)", opt, mixed,
       projective_space(2) - projective_line_marked(3), -point()},
      {"A=virtual B=1/(1-t) m1=finite:3,1 m2=pn-hyp:1,2-pn:1", virt, geo, finite(3, 1),
       projective_space_with_hyperplanes(1, 2) - projective_space(1)},
      {"A=poly B=virtual m1=L-pair m2=finite:1,1-L-pair", poly, virt, l_pair, finite(1, 1) - l_pair},
      {"A=1/(1-t) B=1+t m1=affine-marked:2 m2=pn-hyp:3,1", geo, opt, affine_line_marked(2),
       projective_space_with_hyperplanes(3, 1)},
      {"A=mixed B=virtual m1=finite:2,0-finite:3,3 m2=p1-marked:0", mixed, virt, finite(2, 0) - finite(3, 3),
       projective_line_marked(0)},
      {"A=poly B=1/(1-t) m1=empty m2=point", poly, geo, empty(), point()},
      {"A=virtual B=poly m1=neg(pn:1) m2=neg(finite:2,1)", virt, poly, -projective_space(1), -finite(2, 1)},
  };

  std::vector<CheckRecord> out;
  for (const auto& r : verify_power_axioms(samples, order)) {
    Json report;
    to_json(report, r);
    out.push_back({"power-axiom:" + r.axiom,
                   {{"sample", r.sample}, {"order", r.order}},
                   {{"first_mismatch_degree", nullptr}},
                   {{"first_mismatch_degree", report["first_mismatch_degree"]}},
                   r.pass});
  }
  return out;
}

std::vector<CheckRecord> check_effectiveness(std::size_t order, const std::vector<std::uint64_t>& fields) {
  std::vector<CheckRecord> out;
  const auto gens = catalog_generators();
  for (const auto& base : effective_bases(order)) {
    for (const auto& m : gens) {
      const auto powered = power_pow(base.value, m.value, order);
      for (const auto q : fields) {
        Json violation = nullptr;
        for (std::size_t n = 0; n <= order && violation.is_null(); ++n) {
          const Integer amb = powered[n].amb().evaluate(q);
          const Integer comp = powered[n].comp().evaluate(q);
          if (comp < 0 || comp > amb) violation = {{"degree", n}, {"amb", str(amb)}, {"comp", str(comp)}};
        }
        out.push_back({"power:effectiveness",
                       {{"base", base.name}, {"exponent", m.name}, {"q", q}, {"order", order}},
                       {{"violation", nullptr}},
                       {{"violation", violation}},
                       violation.is_null()});
      }
    }
  }
  return out;
}

std::vector<CheckRecord> check_identities(std::size_t order) {
  std::vector<CheckRecord> out;
  for (const auto& g : catalog_generators()) {
    const Json params{{"pair", g.name}, {"order", order}};
    out.push_back(series_check("identity:zeta=(1-t)^-p", params,
                               power_pow(geometric_series<PairClass>(order), g.value, order),
                               kapranov_zeta_pair(g.value, order)));
    out.push_back(series_check("identity:lambda=(1+t)^p", params,
                               power_pow(one_plus_t<PairClass>(order), g.value, order),
                               config_series_pair(g.value, order)));
  }
  return out;
}

std::vector<CheckRecord> check_p1_coherence(int max_n, int max_s) {
  std::vector<CheckRecord> out;
  for (int n = 0; n <= max_n; ++n) {
    for (int s = 0; s <= max_s; ++s) {
      const auto direct = sym_pair_p1_direct(n, s);
      const auto lambda = sym_pair_p1_lambda(n, s);
      out.push_back({"example-p1:coherence", {{"n", n}, {"s", s}}, direct, lambda, direct == lambda});
    }
  }
  return out;
}

std::vector<CheckRecord> check_hyperplane_counts(int max_n, const std::vector<std::uint64_t>& fields,
                                                 EnumerationBudget& budget) {
  std::vector<CheckRecord> out;
  for (const auto q : fields) {
    const PrimeField field(q);
    const int max_s = static_cast<int>(std::min<std::uint64_t>(5, q + 1));
    for (int n = 1; n <= max_n; ++n) {
      for (int s = 0; s <= max_s; ++s) {
        const Integer expected = hyperplane_union_class(n, s).evaluate(q);
        const auto actual = count_marked_union(n, q, MarkedP1Scene::standard(s, field), budget);
        out.push_back({"ff:hyperplane-union-count",
                       {{"n", n}, {"s", s}, {"q", q}},
                       str(expected),
                       std::to_string(actual),
                       expected == actual});
      }
    }
  }
  return out;
}

std::vector<CheckRecord> check_eq3_finite(EnumerationBudget& budget) {
  constexpr int kMaxN = 4;
  std::vector<CheckRecord> out;
  for (std::size_t m = 0; m <= 4; ++m)
    for (std::size_t nm = 0; nm <= m; ++nm)
      for (std::size_t a1 = 0; a1 <= 2; ++a1)
        for (std::size_t b1 = 0; b1 <= a1; ++b1)
          for (std::size_t a2 = 0; a2 <= 2; ++a2)
            for (std::size_t b2 = 0; b2 <= a2; ++b2) {
              const FiniteScene scene{{m, nm}, {{a1, b1}, {a2, b2}}};
              auto cls = [](std::size_t size, std::size_t marked) {
                return PairClass(static_cast<int>(size), static_cast<int>(size - marked));
              };
              const auto base = PairSeries::from_prefix({PairClass::one(), cls(a1, b1), cls(a2, b2)}, kMaxN);
              const auto powered = power_pow(base, cls(m, nm), kMaxN);

              Json expected = Json::array();
              Json actual = Json::array();
              bool pass = true;
              for (int n = 0; n <= kMaxN; ++n) {
                const auto& c = powered[static_cast<std::size_t>(n)];
                const auto count = count_power_configs(scene, n, budget);
                const bool constant = c.amb().degree() <= 0 && c.comp().degree() <= 0;
                pass = pass && constant && c.amb().coefficient(0) == count.ambient &&
                       c.comp().coefficient(0) == count.complement;
                expected.push_back({c.amb(), c.comp()});
                actual.push_back({str(count.ambient), str(count.complement)});
              }
              out.push_back({"eq3-finite:configuration-count",
                             {{"M", m}, {"N", nm}, {"A1", a1}, {"B1", b1}, {"A2", a2}, {"B2", b2}, {"n_max", kMaxN}},
                             expected,
                             actual,
                             pass});
            }
  return out;
}

std::vector<CheckRecord> check_weil(const std::vector<std::uint64_t>& fields, std::size_t max_n) {
  struct Variety {
    std::string name;
    MotivicPolynomial cls;
    PointCountFn counts;
  };
  const std::vector<Variety> varieties{
      {"P1", projective_class(1), point_counts::projective_line},
      {"A1", MotivicPolynomial::lefschetz(), point_counts::affine_line},
      {"empty", MotivicPolynomial{}, point_counts::nothing},
      {"1 point", 1, point_counts::points(1)},
      {"3 points", 3, point_counts::points(3)},
  };

  std::vector<CheckRecord> out;
  for (const auto& v : varieties) {
    const auto zeta = zeta_series(v.cls, max_n);
    for (const auto q : fields) {
      const auto weil = weil_symmetric_counts(v.counts, q, max_n);
      std::vector<Integer> evaluated;
      for (std::size_t n = 0; n <= max_n; ++n) evaluated.push_back(zeta[n].evaluate(q));
      out.push_back({"weil:kapranov-specialization",
                     {{"variety", v.name}, {"q", q}, {"n_max", max_n}},
                     strings(weil),
                     strings(evaluated),
                     weil == evaluated});
      if (v.name == "P1") {
        std::vector<Integer> closed;
        for (std::size_t n = 0; n <= max_n; ++n) closed.push_back((pow(Integer(q), static_cast<unsigned>(n + 1)) - 1) / (q - 1));
        out.push_back({"weil:projective-closed-form",
                       {{"variety", v.name}, {"q", q}, {"n_max", max_n}},
                       strings(closed),
                       strings(weil),
                       weil == closed});
      }
    }
  }
  return out;
}

std::vector<CheckRecord> check_squarefree(const std::vector<std::uint64_t>& fields, int max_n,
                                          EnumerationBudget& budget) {
  const auto series = config_series(MotivicPolynomial::lefschetz(), static_cast<std::size_t>(max_n));
  std::vector<CheckRecord> out;
  for (const auto q : fields) {
    for (int n = 1; n <= max_n; ++n) {
      const Integer expected = series[static_cast<std::size_t>(n)].evaluate(q);
      const auto actual = count_squarefree_monic(q, n, budget);
      out.push_back({"ff:squarefree-count", {{"n", n}, {"q", q}}, str(expected), std::to_string(actual),
                     expected == actual});
    }
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ring-axioms", "statement1", "statement2", "power-axioms",
                                              "identities",  "example-p1", "eq3-finite", "weil",
                                              "squarefree",  "all"};
  return names;
}

std::vector<CheckRecord> run_suite(const std::string& name, const SuiteOptions& opts) {
  constexpr std::size_t kStatementSamples = 24;
  EnumerationBudget budget(opts.budget);
  auto append = [](std::vector<CheckRecord>& to, std::vector<CheckRecord> from) {
    to.insert(to.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
  };

  std::vector<CheckRecord> out;
  if (name == "ring-axioms") {
    out = check_ring_axioms(opts);
  } else if (name == "statement1") {
    out = check_zeta_multiplicativity(kStatementSamples, opts.order);
  } else if (name == "statement2") {
    out = check_config_multiplicativity(kStatementSamples, opts.order);
  } else if (name == "power-axioms") {
    out = check_power_axioms(opts.order);
    append(out, check_effectiveness(opts.order, opts.fields));
  } else if (name == "identities") {
    out = check_identities(opts.order);
  } else if (name == "example-p1") {
    out = check_p1_coherence(8, 5);
    append(out, check_hyperplane_counts(3, opts.fields, budget));
  } else if (name == "eq3-finite") {
    out = check_eq3_finite(budget);
  } else if (name == "weil") {
    out = check_weil(opts.fields, opts.order);
  } else if (name == "squarefree") {
    out = check_squarefree(opts.fields, 6, budget);
  } else if (name == "all") {
    for (const auto& n : suite_names())
      if (n != "all") append(out, run_suite(n, opts));
  } else {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }
  return out;
}

}  // namespace kpairs
