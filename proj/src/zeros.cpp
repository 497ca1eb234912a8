#include "ddzeta/zeros.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace ddzeta {

namespace {

// significant decimal digits in a literal like "14.1347251417..."
int significant_digits(const std::string& s) {
  int n = 0;
  bool seen_nonzero = false;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      if (c != '0') seen_nonzero = true;
      if (seen_nonzero) ++n;
    } else if (c == 'e' || c == 'E') {
      break;
    }
  }
  return n;
}

}  // namespace

LoadResult load_zeros(const std::string& path, const PrecisionContext& ctx) {
  std::ifstream in(path);
  if (!in) throw ZeroTableMissingError("zero table not found: " + path);
  LoadResult out;
  out.table.source_digits = 0;
  std::string line;
  long line_no = 0;
  int min_digits = 1 << 20;
  while (std::getline(in, line)) {
    ++line_no;
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    if (line[a] == '#') continue;
    size_t b = line.find_last_not_of(" \t\r");
    std::string tok = line.substr(a, b - a + 1);
    Real g(ctx.bits);
    try {
      g = Real::from_string(tok, ctx.bits);
    } catch (const std::invalid_argument&) {
      throw ParseError("unparseable ordinate '" + tok + "'", line_no);
    }
    if (!(g > 0.0)) throw ParseError("ordinate must be positive", line_no);
    if (!out.table.gammas.empty() && !(out.table.gammas.back() < g))
      throw OrderingError("zero table not strictly ascending at line " +
                          std::to_string(line_no));
    min_digits = std::min(min_digits, significant_digits(tok));
    out.table.gammas.push_back(std::move(g));
  }
  if (out.table.gammas.empty())
    throw ParseError("zero table contains no ordinates", line_no);
  out.table.source_digits = min_digits;
  out.precision_warning = (min_digits < ctx.target_decimal);
  return out;
}

std::string serialize_zeros(const ZeroTable& table) {
  std::ostringstream os;
  for (const Real& g : table.gammas) os << g.to_string(table.source_digits) << "\n";
  return os.str();
}

ZeroValidationReport validate_zeros(const ZeroTable& table, size_t k,
                                    const PrecisionContext& ctx) {
  if (k > table.count())
    throw std::invalid_argument("validate_zeros: k exceeds table size");
  // working precision must exceed the source precision to see the residual
  PrecisionContext vctx = PrecisionContext::make(
      std::max(ctx.target_decimal, table.source_digits + 10), ctx.guard_digits);
  ZeroValidationReport rep{{}, Real(0L, vctx.bits), true,
                           Real::pow10(-(table.source_digits - 5), vctx.bits)};
  Real half = vctx.real(1L) / 2;
  for (size_t i = 0; i < k; ++i) {
    Real gi(vctx.bits);
    mpfr_set(gi.raw(), table.gammas[i].raw(), MPFR_RNDN);
    Complex z = zeta_d(Complex(half, gi), 0, vctx);
    Real res = abs(z);
    bool ok = res < rep.threshold;
    if (!ok) rep.all_ok = false;
    rep.max_residual = max(rep.max_residual, res);
    rep.entries.push_back({i, res, ok});
  }
  return rep;
}

Real zero_sum_tail_bound(const Complex& s2, const Real& last_gamma,
                         const PrecisionContext& ctx) {
  Real t2 = abs(s2.im);
  if (!(last_gamma > t2 + 10L))
    throw std::invalid_argument("zero_sum_tail_bound: need last_gamma > |Im s2| + 10");
  mpfr_prec_t bits = ctx.bits;
  Real pi = ctx.pi();
  Real g = last_gamma;
  // |Gamma(s2 - rho)| ~ sqrt(2pi) (g+|s2|)^{Re s2 - 1} e^{-(pi/2)(g - |Im s2|)}
  // |Gamma(rho)|      ~ sqrt(2pi) g^{..} e^{-(pi/2) g}
  // zeta factor and density absorbed into the polynomial/log prefactor.
  Real sig2 = s2.re;
  Real poly = pow(g + abs(s2) + 2L, sig2 + Real::from_double(2.0, bits));
  Real expo = exp(-(pi / 2) * ((g - t2) + g));
  Real density = log(g) + 2L;
  Real inv_gs2 = exp(-loggamma(s2, ctx).re);  // 1/|Gamma(s2)| up to phase
  Real safety(16, bits);
  return safety * density * poly * expo * abs(inv_gs2) / pi;
}

}  // namespace ddzeta
