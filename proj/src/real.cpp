#include "ddzeta/real.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace ddzeta {

Real Real::from_string(const std::string& s, mpfr_prec_t prec) {
  if (s.empty()) throw std::invalid_argument("empty numeric literal");
  Real r(prec);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("malformed numeric literal: '" + s + "'");
  return r;
}

std::string Real::to_string(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(v_)) return "0";
  mpfr_exp_t e;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
  std::string m(raw);
  mpfr_free_str(raw);
  bool neg = !m.empty() && m[0] == '-';
  std::string d = neg ? m.substr(1) : m;
  // strip trailing zeros but keep at least one digit
  size_t last = d.find_last_not_of('0');
  d = d.substr(0, std::max<size_t>(last + 1, 1));
  std::string out = neg ? "-" : "";
  out += d.substr(0, 1);
  if (d.size() > 1) out += "." + d.substr(1);
  // mpfr exponent convention: value = 0.mantissa * 10^e
  long ex = static_cast<long>(e) - 1;
  if (ex != 0) out += "e" + std::to_string(ex);
  return out;
}

}  // namespace ddzeta
