#include "kpairs/lambda_power.hpp"

namespace kpairs {

void to_json(nlohmann::json& j, const AxiomReport& r) {
  j = {{"axiom", r.axiom},
       {"sample", r.sample},
       {"order", r.order},
       {"pass", r.pass},
       {"first_mismatch_degree", nullptr}};
  if (r.first_mismatch_degree) j["first_mismatch_degree"] = *r.first_mismatch_degree;
}

namespace {

using PairSeries = TruncatedSeries<PairClass>;

AxiomReport compare(std::string axiom, const std::string& sample, std::size_t order, const PairSeries& lhs,
                    const PairSeries& rhs) {
  AxiomReport r{std::move(axiom), sample, order, false, first_mismatch(lhs, rhs)};
  r.pass = !r.first_mismatch_degree && lhs.order() >= order && rhs.order() >= order;
  return r;
}

}  // namespace

std::vector<AxiomReport> verify_power_axioms(const std::vector<PowerAxiomSample>& samples, std::size_t order) {
  std::vector<AxiomReport> out;
  for (const auto& s : samples) {
    const auto& a = s.a;
    const auto a_m1 = power_pow(a, s.m1, order);
    out.push_back(compare("A^0=1", s.label, order, power_pow(a, PairClass{}, order), PairSeries::one(order)));
    out.push_back(compare("A^1=A", s.label, order, power_pow(a, PairClass::one(), order), a.truncated(order)));
    out.push_back(compare("(AB)^m=A^m*B^m", s.label, order, power_pow(a * s.b, s.m1, order),
                          a_m1 * power_pow(s.b, s.m1, order)));
    out.push_back(compare("A^(m1+m2)=A^m1*A^m2", s.label, order, power_pow(a, s.m1 + s.m2, order),
                          a_m1 * power_pow(a, s.m2, order)));
    out.push_back(compare("A^(m1*m2)=(A^m2)^m1", s.label, order, power_pow(a, s.m1 * s.m2, order),
                          power_pow(power_pow(a, s.m2, order), s.m1, order)));
  }
  return out;
}

std::vector<AxiomReport> verify_identities(const PairClass& p, const std::string& label, std::size_t order) {
  return {
      compare("zeta=(1-t)^-p", label, order, power_pow(geometric_series<PairClass>(order), p, order),
              kapranov_zeta_pair(p, order)),
      compare("lambda=(1+t)^p", label, order, power_pow(one_plus_t<PairClass>(order), p, order),
              config_series_pair(p, order)),
  };
}

}  // namespace kpairs
