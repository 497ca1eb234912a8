// Series descriptor: the Lambda series Phi2(s1,s2;1,Lambda), the Moebius
// series Phi2(s1,s2;1,mu), or a plug-in alpha-tilde described by its
// single-series data (Phi(s;alpha), pole location/residue of Phi/zeta, and
// the Laurent constants c_k(alpha)).
#ifndef DDZETA_SERIES_HPP
#define DDZETA_SERIES_HPP

#include <functional>
#include <optional>

#include "ddzeta/precision.hpp"

namespace ddzeta {

enum class SeriesKind { Lambda, Mu, Plugin };

struct PluginSeries {
  // Phi(s;alpha) anywhere it is needed: at -k, at zeta zeros, on the
  // contour.  (A table of values at -k alone cannot feed the zero sum or
  // the contour integrand.)
  std::function<Complex(const Complex&, const PrecisionContext&)> phi;
  // delta > 0 when Phi(s;alpha)/zeta(s) has a pole at s = delta.
  std::optional<Real> delta;
  std::optional<Real> residue_at_delta;  // residue of Phi/zeta at delta
  // c_k(alpha): constant term of the Laurent series of Phi(s;alpha)/zeta(s)
  // at s = -k, even k.
  std::function<Real(int, const PrecisionContext&)> c_k;
  // Distinct plug-ins sharing a workspace must carry distinct tags; contour
  // factors are only memoized for tagged plug-ins.
  std::string cache_tag;
};

struct SeriesSpec {
  SeriesKind kind = SeriesKind::Lambda;
  std::optional<PluginSeries> plugin;  // required iff kind == Plugin

  static SeriesSpec lambda() { return {SeriesKind::Lambda, std::nullopt}; }
  static SeriesSpec mu() { return {SeriesKind::Mu, std::nullopt}; }
  static SeriesSpec make_plugin(PluginSeries p) { return {SeriesKind::Plugin, std::move(p)}; }
};

}  // namespace ddzeta

#endif
