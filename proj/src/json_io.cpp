#include "ddzeta/json_io.hpp"

namespace ddzeta {

Json to_json(const Real& x, int digits) { return x.to_string(digits); }

Json to_json(const Complex& z, int digits) {
  return Json{{"re", z.re.to_string(digits)}, {"im", z.im.to_string(digits)}};
}

Json to_json(const EvalResult& r, const EvalParams& p) {
  int d = p.ctx.target_decimal;
  Json terms = Json::object();
  for (auto& [label, term] : r.terms) terms[label] = to_json(term, d);
  Json j{{"value", to_json(r.value, d)},
         {"terms", std::move(terms)},
         {"error_estimate", r.error_estimate.to_string(6)},
         {"params",
          {{"precision_decimal", d},
           {"N", r.n_used},
           {"eta", p.eta.to_string(10)},
           {"T", r.t_used},
           {"max_zeros", p.zero_policy.max_zeros}}}};
  if (!r.singular.empty()) {
    j["singular"] = to_json(r.singular);
    j["omitted_terms"] = r.omitted_terms;
  }
  if (!r.warnings.empty()) j["warnings"] = r.warnings;
  return j;
}

Json to_json(const SingularExpansion& e, int digits) {
  Json ladder = Json::array();
  for (auto& [eps, v] : e.ladder)
    ladder.push_back(Json{{"eps", eps.to_string(12)}, {"value", to_json(v, digits)}});
  return Json{{"c2", to_json(e.c2, digits)},
              {"c1", to_json(e.c1, digits)},
              {"c0", to_json(e.c0, digits)},
              {"fit_residual", e.fit_residual.to_string(6)},
              {"ill_conditioned", e.ill_conditioned},
              {"ladder", std::move(ladder)}};
}

Json to_json(const std::vector<SingularityMatch>& matches) {
  Json arr = Json::array();
  for (const auto& m : matches) {
    Json e{{"set", m.label}};
    if (m.l > 0) e["l"] = m.l;
    if (m.n > 0) e["zero_index"] = m.n;
    arr.push_back(std::move(e));
  }
  return arr;
}

}  // namespace ddzeta
