// ddzeta: evaluate and verify double Dirichlet series attached to the
// von Mangoldt and Moebius functions.
//
// Exit codes: 0 success; 1 identity violated (verify); 2 precondition or
// parse failure; 3 singular evaluation point; 4 zero table missing.
#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "ddzeta/direct_sum.hpp"
#include "ddzeta/json_io.hpp"

using namespace ddzeta;

namespace {

struct RunConfig {
  int precision_decimal = 80;
  std::string zeros_file;
  int n_param = 4;
  std::string eta = "";      // decimal; empty -> 1/7
  std::string t_param = "auto";
  size_t max_zeros = 100;
  std::string output = "json";
};

std::string default_zeros_path() {
  if (const char* env = std::getenv("DDZETA_ZEROS")) return env;
  return "data/zeros100.txt";
}

Complex parse_complex(const std::string& text, mpfr_prec_t bits) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    return Complex(Real::from_string(text, bits), Real(0L, bits));
  return Complex(Real::from_string(text.substr(0, comma), bits),
                 Real::from_string(text.substr(comma + 1), bits));
}

PrecisionContext context_for(const RunConfig& rc, int guard = 20) {
  return PrecisionContext::make(rc.precision_decimal, guard);
}

EvalParams eval_params_for(const RunConfig& rc, const PrecisionContext& ctx) {
  EvalParams p(ctx);
  p.N = rc.n_param;
  if (!rc.eta.empty()) p.eta = Real::from_string(rc.eta, ctx.bits);
  if (rc.t_param != "auto" && !rc.t_param.empty())
    p.T = Real::from_string(rc.t_param, ctx.bits);
  p.zero_policy.max_zeros = rc.max_zeros;
  return p;
}

Workspace make_workspace(const RunConfig& rc, const PrecisionContext& ctx) {
  auto lr = load_zeros(rc.zeros_file, ctx);
  if (lr.precision_warning)
    std::cerr << "warning: zero table carries " << lr.table.source_digits
              << " digits, below the requested " << ctx.target_decimal << "\n";
  return Workspace(ctx, lr.table);
}

SeriesSpec series_from_name(const std::string& name) {
  if (name == "lambda") return SeriesSpec::lambda();
  if (name == "mu") return SeriesSpec::mu();
  throw CLI::ValidationError("--series", "must be 'lambda' or 'mu'");
}

int cmd_residue(const RunConfig& rc, int m, int n, const std::string& series) {
  if (m < 0 || n < 0 || (m + n) % 2 != 1) {
    std::cerr << "error: need m, n >= 0 with m+n odd\n";
    return 2;
  }
  if (series == "lambda") {
    Rational r = residue_r(static_cast<unsigned>(m), static_cast<unsigned>(n));
    if (rc.output == "json")
      std::cout << Json{{"m", m}, {"n", n}, {"series", "lambda"},
                        {"residue", r.str()}}.dump() << "\n";
    else
      std::cout << r.str() << "\n";
    return 0;
  }
  auto ctx = context_for(rc);
  auto ws = make_workspace(rc, ctx);
  Complex r = residue_closed_mu(m, n, ws);
  if (rc.output == "json")
    std::cout << Json{{"m", m}, {"n", n}, {"series", "mu"},
                      {"residue", to_json(r, ctx.target_decimal)}}.dump() << "\n";
  else
    std::cout << r.re.to_string(ctx.target_decimal) << "\n";
  return 0;
}

int cmd_verify(const RunConfig& rc, const std::string& suite, int max_idx) {
  if (max_idx > 100) {
    std::cerr << "error: --max capped at 100\n";
    return 2;
  }
  bool csv = (rc.output == "csv");
  if (csv) std::cout << "case,inputs,expected,actual,status\n";
  long checked = 0;
  auto fail = [&](const std::string& id, const std::string& detail) {
    std::cerr << "FAIL " << id << ": " << detail << "\n";
    return 1;
  };
  auto note = [&](const std::string& id, const std::string& in, const std::string& exp,
                  const std::string& act) {
    ++checked;
    if (csv)
      std::cout << id << "," << in << "," << exp << "," << act << ",ok\n";
  };
  bool run_all = (suite == "all");
  if (run_all || suite == "saalschutz") {
    for (int p = 0; p <= max_idx; ++p)
      for (int q = 0; q <= max_idx; ++q) {
        auto t = saalschutz_check(static_cast<unsigned>(p), static_cast<unsigned>(q));
        Rational lhs = t.lhs_term1 + t.lhs_term2;
        if (lhs != t.rhs)
          return fail("saalschutz", "(p,q)=(" + std::to_string(p) + "," + std::to_string(q) +
                                    ") lhs=" + lhs.str() + " rhs=" + t.rhs.str());
        note("saalschutz", "(" + std::to_string(p) + ";" + std::to_string(q) + ")",
             t.rhs.str(), lhs.str());
      }
  }
  if (run_all || suite == "reciprocity") {
    for (int m = 1; m <= max_idx; ++m)
      for (int n = 1; n <= max_idx; ++n) {
        if ((m + n) % 2 != 1) continue;
        auto t = reciprocity_check(static_cast<unsigned>(m), static_cast<unsigned>(n));
        if (t.difference != 0)
          return fail("reciprocity", "(m,n)=(" + std::to_string(m) + "," +
                                     std::to_string(n) + ") diff=" + t.difference.str());
        note("reciprocity", "(" + std::to_string(m) + ";" + std::to_string(n) + ")", "0",
             t.difference.str());
      }
  }
  if (run_all || suite == "thm41") {
    if (max_idx >= 0) {
      Rational r10 = residue_r(1, 0);
      if (r10 != Rational(1, 2)) return fail("thm41", "R(-1,0) != 1/2");
      note("thm41", "(1;0)", "1/2", r10.str());
    }
    for (int N = 1; N <= max_idx / 2; ++N) {
      Rational r = residue_r(1, static_cast<unsigned>(2 * N));
      if (r != 0) return fail("thm41", "R(-1,-" + std::to_string(2 * N) + ") != 0");
      note("thm41", "(1;" + std::to_string(2 * N) + ")", "0", r.str());
    }
  }
  if (run_all || suite == "cor44") {
    for (int N = 1; N <= max_idx / 2; ++N) {
      Rational expect(-1, static_cast<long>(2 * N + 1) * (2 * N + 2));
      Rational r = residue_r(static_cast<unsigned>(2 * N), 1);
      if (r != expect)
        return fail("cor44", "R(-" + std::to_string(2 * N) + ",-1) = " + r.str());
      note("cor44", "(" + std::to_string(2 * N) + ";1)", expect.str(), r.str());
    }
  }
  if (run_all || suite == "prop45") {
    for (int n = 1; n <= max_idx; n += 2) {
      Rational r = residue_r(0, static_cast<unsigned>(n));
      if (r != Rational(-1, 2))
        return fail("prop45", "R(0,-" + std::to_string(n) + ") = " + r.str());
      note("prop45", "(0;" + std::to_string(n) + ")", "-1/2", r.str());
    }
  }
  if (rc.output == "json")
    std::cout << Json{{"suite", suite}, {"max", max_idx}, {"cases", checked},
                      {"all_exact", true}}.dump() << "\n";
  else if (!csv)
    std::cout << "verified " << suite << " (" << checked << " cases, max " << max_idx
              << "): all identities hold exactly\n";
  return 0;
}

int cmd_eval(const RunConfig& rc, const std::string& s1_text, const std::string& s2_text,
             const std::string& series_name) {
  auto ctx = context_for(rc);
  Complex s1(ctx.bits), s2(ctx.bits);
  try {
    s1 = parse_complex(s1_text, ctx.bits);
    s2 = parse_complex(s2_text, ctx.bits);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  SeriesSpec series = series_from_name(series_name);
  auto ws = make_workspace(rc, ctx);
  EvalParams p = eval_params_for(rc, ctx);
  try {
    EvalResult r = eval_phi2(s1, s2, series, p, ws);
    std::cout << to_json(r, p).dump(2) << "\n";
    return 0;
  } catch (const SingularityError& e) {
    std::cout << Json{{"error", "singular point"}, {"matched_sets", to_json(e.matches)}}.dump(2)
              << "\n";
    return 3;
  } catch (const PoleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_oracle(const RunConfig& rc, const std::string& s1_text, const std::string& s2_text,
               const std::string& series_name, long cutoff) {
  auto ctx = context_for(rc);
  Complex s1(ctx.bits), s2(ctx.bits);
  try {
    s1 = parse_complex(s1_text, ctx.bits);
    s2 = parse_complex(s2_text, ctx.bits);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  SeriesSpec series = series_from_name(series_name);
  try {
    auto sieve = build_sieve(cutoff);
    auto r = direct_phi2(s1, s2, series, cutoff, sieve, ctx);
    std::cout << Json{{"value", to_json(r.value, ctx.target_decimal)},
                      {"tail_estimate", r.tail.value.to_string(6)},
                      {"is_rigorous", r.tail.is_rigorous},
                      {"terms_summed", r.terms_summed},
                      {"cutoff", cutoff}}.dump(2)
              << "\n";
    return 0;
  } catch (const RegionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CutoffError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_fit(const RunConfig& rc, int m, int n, const std::string& series_name,
            const std::string& ladder_start, int ladder_len) {
  auto ctx = PrecisionContext::make(std::max(rc.precision_decimal, 30),
                                    std::max(120 - rc.precision_decimal, 40));
  SeriesSpec series = series_from_name(series_name);
  RunConfig rc2 = rc;
  rc2.precision_decimal = ctx.target_decimal;
  auto ws = make_workspace(rc2, ctx);
  EvalParams p = eval_params_for(rc, ctx);
  p.ctx = ctx;
  try {
    auto ladder = geometric_ladder(Real::from_string(ladder_start, ctx.bits), ladder_len);
    auto fit = fit_singular_expansion(m, n, series, ladder, p, ws);
    std::cout << to_json(fit, ctx.target_decimal).dump(2) << "\n";
    return 0;
  } catch (const SingularCollisionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_zeros(const RunConfig& rc, const std::string& import_path, long validate_k) {
  auto ctx = context_for(rc);
  std::string path = import_path.empty() ? rc.zeros_file : import_path;
  try {
    auto lr = load_zeros(path, ctx);
    Json j{{"path", path},
           {"count", lr.table.count()},
           {"source_digits", lr.table.source_digits},
           {"precision_warning", lr.precision_warning}};
    if (validate_k > 0) {
      auto rep = validate_zeros(lr.table, static_cast<size_t>(validate_k), ctx);
      Json bad = Json::array();
      for (auto& e : rep.entries)
        if (!e.ok) bad.push_back(e.index + 1);
      j["validated"] = validate_k;
      j["max_residual"] = rep.max_residual.to_string(6);
      j["threshold"] = rep.threshold.to_string(3);
      j["all_ok"] = rep.all_ok;
      if (!bad.empty()) j["failing_indices"] = bad;
      std::cout << j.dump(2) << "\n";
      return rep.all_ok ? 0 : 1;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  } catch (const ZeroTableMissingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const OrderingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"double Dirichlet series evaluator (von Mangoldt / Moebius)"};
  app.set_config("--config", "ddzeta.conf", "plain key = value configuration file");
  app.require_subcommand(1);

  RunConfig rc;
  rc.zeros_file = default_zeros_path();
  app.add_option("--precision", rc.precision_decimal, "working decimal digits")
      ->capture_default_str()
      ->check(CLI::Range(30, 400));
  app.add_option("--zeros-file", rc.zeros_file, "zero-ordinate table path")
      ->capture_default_str();
  app.add_option("--N", rc.n_param, "truncation / contour parameter")->capture_default_str();
  app.add_option("--eta", rc.eta, "contour offset in (0,1), decimal (default 1/7)");
  app.add_option("--T", rc.t_param, "contour half-height or 'auto'")->capture_default_str();
  app.add_option("--max-zeros", rc.max_zeros, "zero-sum truncation")->capture_default_str();
  app.add_option("--output", rc.output, "json | csv | text")->capture_default_str();

  int m = 0, n = 0;
  std::string series = "lambda";

  auto* residue = app.add_subcommand("residue", "exact residue R(-m,-n) or mu analogue");
  residue->add_option("--m", m)->required();
  residue->add_option("--n", n)->required();
  residue->add_option("--series", series, "lambda | mu")->capture_default_str();

  std::string suite = "all";
  int max_idx = 40;
  auto* verify = app.add_subcommand("verify", "exact identity suites");
  verify->add_option("--suite", suite, "saalschutz|reciprocity|thm41|cor44|prop45|all")
      ->capture_default_str();
  verify->add_option("--max", max_idx, "index bound")->capture_default_str();

  std::string s1_text, s2_text;
  auto* eval = app.add_subcommand("eval", "meromorphic continuation at a point");
  eval->add_option("--s1", s1_text, "complex literal RE or RE,IM")->required();
  eval->add_option("--s2", s2_text)->required();
  eval->add_option("--series", series)->capture_default_str();

  long cutoff = 100000;
  auto* oracle = app.add_subcommand("oracle", "direct double sum in the convergence region");
  oracle->add_option("--s1", s1_text)->required();
  oracle->add_option("--s2", s2_text)->required();
  oracle->add_option("--series", series)->capture_default_str();
  oracle->add_option("--cutoff", cutoff)->capture_default_str();

  std::string ladder_start = "1e-3";
  int ladder_len = 8;
  auto* fit = app.add_subcommand("fit", "Laurent-model fit near a singular point");
  fit->add_option("--m", m)->required();
  fit->add_option("--n", n)->required();
  fit->add_option("--series", series)->capture_default_str();
  fit->add_option("--ladder-start", ladder_start)->capture_default_str();
  fit->add_option("--ladder-len", ladder_len)->capture_default_str();

  std::string import_path;
  long validate_k = 0;
  auto* zeros = app.add_subcommand("zeros", "zero-table import / validation");
  zeros->add_option("--import", import_path, "table to load instead of the default");
  zeros->add_option("--validate", validate_k, "check the first K ordinates");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (residue->parsed()) return cmd_residue(rc, m, n, series);
    if (verify->parsed()) return cmd_verify(rc, suite, max_idx);
    if (eval->parsed()) return cmd_eval(rc, s1_text, s2_text, series);
    if (oracle->parsed()) return cmd_oracle(rc, s1_text, s2_text, series, cutoff);
    if (fit->parsed()) return cmd_fit(rc, m, n, series, ladder_start, ladder_len);
    if (zeros->parsed()) return cmd_zeros(rc, import_path, validate_k);
  } catch (const ZeroTableMissingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const ParityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
