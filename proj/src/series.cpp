#include "hertz/series.hpp"

#include <algorithm>

namespace hertz {

TruncatedSeries::TruncatedSeries(RegistryPtr registry, int order)
    : registry_(std::move(registry)) {
  if (order < 0) throw Error("series order must be nonnegative");
  coeffs_.assign(order + 1, MultiPoly(registry_));
}

TruncatedSeries::TruncatedSeries(RegistryPtr registry,
                                 std::vector<MultiPoly> coefficients)
    : registry_(std::move(registry)), coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw Error("series needs at least one coefficient");
  for (const auto& c : coeffs_) {
    if (!same_registry(c.registry(), registry_))
      throw Error("series coefficient registry mismatch");
    if (!c.is_x_free()) throw Error("series coefficients must be free of x");
  }
}

TruncatedSeries TruncatedSeries::from_poly(const MultiPoly& p, int order) {
  TruncatedSeries s(p.registry(), order);
  for (int n = 0; n <= order; ++n) s.coeffs_[n] = p.x_coefficient(n);
  return s;
}

TruncatedSeries TruncatedSeries::from_integers(const std::vector<Integer>& values) {
  auto reg = Registry::x_only();
  std::vector<MultiPoly> coeffs;
  for (const auto& v : values) coeffs.emplace_back(reg, Rational(v));
  return TruncatedSeries(reg, std::move(coeffs));
}

std::optional<std::vector<Integer>> TruncatedSeries::integers() const {
  std::vector<Integer> out;
  for (const auto& c : coeffs_) {
    auto k = c.as_constant();
    if (!k || k->get_den() != 1) return std::nullopt;
    out.push_back(k->get_num());
  }
  return out;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order > this->order()) throw Error("cannot extend a truncated series");
  return TruncatedSeries(registry_, std::vector<MultiPoly>(
                                        coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries TruncatedSeries::substitute(
    std::span<const MultiPoly> images) const {
  std::vector<MultiPoly> out;
  for (const auto& c : coeffs_) out.push_back(c.substitute(images));
  return TruncatedSeries(images.front().registry(), std::move(out));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order(), b.order());
  TruncatedSeries out(a.registry_, order);
  for (int n = 0; n <= order; ++n) out.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order(), b.order());
  TruncatedSeries out(a.registry_, order);
  for (int i = 0; i <= order; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

std::string TruncatedSeries::str() const {
  std::string out;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (n) out += ' ';
    out += coeffs_[n].str();
  }
  return out;
}

TruncatedSeries series_from_rational(const RationalFunction& r, int order) {
  const TruncatedSeries num = TruncatedSeries::from_poly(r.num(), order);
  const TruncatedSeries den = TruncatedSeries::from_poly(r.den(), order);
  const MultiPoly& d0 = den[0];
  if (d0.is_zero())
    throw Error("series_from_rational: denominator has zero constant term in x");

  std::vector<MultiPoly> c;
  c.reserve(order + 1);
  for (int n = 0; n <= order; ++n) {
    MultiPoly acc = num[n];
    for (int k = 1; k <= n; ++k)
      if (!den[k].is_zero()) acc -= den[k] * c[n - k];
    c.push_back(exact_divide(acc, d0));
  }
  return TruncatedSeries(r.registry(), std::move(c));
}

TruncatedSeries fsum_series(const TruncatedSeries& y, int order) {
  if (order > y.order())
    throw Error("fsum_series: order exceeds the precision of the argument");
  if (!y[0].is_zero())
    throw Error("fsum_series: argument must have zero constant term");
  const TruncatedSeries yy = y.truncated(order);
  const RegistryPtr& reg = y.registry();

  // Horner: r = N!, then r = m! + y * r for m = N-1 .. 0.
  auto constant = [&](const Integer& v) {
    std::vector<MultiPoly> coeffs(order + 1, MultiPoly(reg));
    coeffs[0] = MultiPoly(reg, Rational(v));
    return TruncatedSeries(reg, std::move(coeffs));
  };
  std::vector<Integer> fact(order + 1, 1);
  for (int m = 1; m <= order; ++m) fact[m] = fact[m - 1] * m;

  TruncatedSeries r = constant(fact[order]);
  for (int m = order - 1; m >= 0; --m) r = constant(fact[m]) + yy * r;
  return r;
}

TruncatedSeries fsum_rational(const RationalFunction& y, int order) {
  return fsum_series(series_from_rational(y, order), order);
}

}  // namespace hertz
