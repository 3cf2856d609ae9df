#include "kpairs/ff_oracle.hpp"
#include "kpairs/geometry_example.hpp"
#include "kpairs/lambda_power.hpp"
#include "kpairs/pair_spec.hpp"
#include "kpairs/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

namespace {

using kpairs::PairClass;
using Json = nlohmann::json;

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsage = 2, kBudget = 3 };

struct Config {
  std::size_t order = 8;
  std::vector<std::uint64_t> fields{2, 3, 5};
  std::string format = "text";
  std::uint64_t budget = kpairs::EnumerationBudget::kDefaultSteps;
};

Json pair_json(const PairClass& p) {
  Json j = p;
  j["sub"] = p.sub();
  return j;
}

void print_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    std::cout << line << '\n';
  }
}

void print_series(const kpairs::TruncatedSeries<PairClass>& s, const Config& cfg) {
  if (cfg.format == "json") {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(pair_json(c));
    std::cout << Json{{"order", s.order()}, {"coeffs", coeffs}}.dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows{{"n", "amb", "comp", "sub"}};
  for (std::size_t n = 0; n <= s.order(); ++n)
    rows.push_back({"t^" + std::to_string(n), s[n].amb().to_string(), s[n].comp().to_string(), s[n].sub().to_string()});
  print_table(rows);
}

int run_example(int n, int s, const Config& cfg) {
  const auto direct = kpairs::sym_pair_p1_direct(n, s);
  const auto lambda = kpairs::sym_pair_p1_lambda(n, s);
  const auto union_class = kpairs::hyperplane_union_class(n, s);
  bool ok = direct == lambda;

  Json counts = Json::array();
  for (const auto q : cfg.fields) {
    if (static_cast<std::uint64_t>(s) > q + 1) {
      std::cerr << "warning: skipping q=" << q << ": " << s << " distinct marks need q >= " << s - 1 << '\n';
      continue;
    }
    if (n < 1) continue;
    kpairs::EnumerationBudget budget(cfg.budget);
    const kpairs::PrimeField field(q);
    const auto count = kpairs::count_marked_union(n, q, kpairs::MarkedP1Scene::standard(s, field), budget);
    const auto expected = union_class.evaluate(q);
    ok = ok && expected == count;
    counts.push_back({{"q", q}, {"count", std::to_string(count)}, {"expected", expected.str()},
                      {"pass", expected == count}});
  }

  if (cfg.format == "json") {
    std::cout << Json{{"n", n},
                      {"s", s},
                      {"lambda", pair_json(lambda)},
                      {"direct", pair_json(direct)},
                      {"equal", direct == lambda},
                      {"union_class", union_class},
                      {"counts", counts}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "S^" << n << "(CP^1, " << s << " points)\n";
    print_table({{"pipeline", "amb", "comp", "sub"},
                 {"lambda", lambda.amb().to_string(), lambda.comp().to_string(), lambda.sub().to_string()},
                 {"direct", direct.amb().to_string(), direct.comp().to_string(), direct.sub().to_string()}});
    std::cout << "equal=" << (direct == lambda ? "true" : "false") << '\n';
    std::cout << "union class " << union_class << '\n';
    for (const auto& c : counts)
      std::cout << "q=" << c["q"].get<std::uint64_t>() << " count " << c["count"].get<std::string>() << " expected "
                << c["expected"].get<std::string>() << (c["pass"].get<bool>() ? " ok" : " MISMATCH") << '\n';
  }
  return ok ? kOk : kVerificationFailed;
}

int run_verify(const std::string& suite, const Config& cfg) {
  kpairs::SuiteOptions opts{cfg.order, cfg.fields, cfg.budget};
  const auto records = kpairs::run_suite(suite, opts);
  const bool ok = std::all_of(records.begin(), records.end(), [](const auto& r) { return r.pass; });
  if (cfg.format == "json") {
    std::cout << Json(records).dump(2) << '\n';
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : records) rows.push_back({r.pass ? "PASS" : "FAIL", r.check, r.params.dump()});
    print_table(rows);
    const auto passed = std::count_if(records.begin(), records.end(), [](const auto& r) { return r.pass; });
    std::cout << passed << "/" << records.size() << " checks passed\n";
  }
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for the Grothendieck ring of pairs of varieties"};
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--order,-N", cfg.order, "Truncation order")->capture_default_str();
  app.add_option("--q", cfg.fields, "Prime field sizes")->delimiter(',')->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--budget", cfg.budget, "Enumeration budget in atomic steps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string pair_spec;
  std::string base_spec;
  int ex_n = 0;
  int ex_s = 0;
  std::string suite = "all";

  auto* zeta = app.add_subcommand("zeta", "Kapranov zeta function of a pair");
  zeta->add_option("--pair", pair_spec, "Pair spec")->required();
  auto* lambda = app.add_subcommand("lambda", "Configuration-space series of a pair");
  lambda->add_option("--pair", pair_spec, "Pair spec")->required();
  auto* cls = app.add_subcommand("class", "Class of a pair");
  cls->add_option("--pair", pair_spec, "Pair spec")->required();
  auto* pow = app.add_subcommand("pow", "Power structure A(t)^m");
  pow->add_option("--base", base_spec, "geometric | one-plus-t | series:a0;a1;...")->required();
  pow->add_option("--pair", pair_spec, "Exponent pair spec")->required();
  auto* example = app.add_subcommand("example", "Symmetric powers of the marked projective line");
  example->add_option("--n", ex_n, "Symmetric power")->required()->check(CLI::NonNegativeNumber);
  example->add_option("--s", ex_s, "Number of marked points")->required()->check(CLI::NonNegativeNumber);
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(kpairs::suite_names()))->capture_default_str();

  // Global options are accepted after the subcommand too.
  for (auto* sub : {zeta, lambda, cls, pow, example, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  for (const auto q : cfg.fields) {
    if (!kpairs::is_prime(q)) {
      std::cerr << "error: field size " << q << " is not prime\n";
      return kUsage;
    }
  }

  try {
    if (*zeta) {
      print_series(kpairs::kapranov_zeta_pair(kpairs::parse_pair_spec(pair_spec), cfg.order), cfg);
    } else if (*lambda) {
      print_series(kpairs::config_series_pair(kpairs::parse_pair_spec(pair_spec), cfg.order), cfg);
    } else if (*cls) {
      const auto p = kpairs::parse_pair_spec(pair_spec);
      if (cfg.format == "json")
        std::cout << pair_json(p).dump(2) << '\n';
      else
        print_table({{"amb", "comp", "sub"}, {p.amb().to_string(), p.comp().to_string(), p.sub().to_string()}});
    } else if (*pow) {
      const auto base = kpairs::parse_base_series(base_spec, cfg.order);
      print_series(kpairs::power_pow(base, kpairs::parse_pair_spec(pair_spec), cfg.order), cfg);
    } else if (*example) {
      return run_example(ex_n, ex_s, cfg);
    } else if (*verify) {
      return run_verify(suite, cfg);
    }
  } catch (const kpairs::BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return kBudget;
  } catch (const kpairs::PairSpecError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
