#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hertz/poly.hpp"

namespace hertz {

/// Power series in x truncated after x^order. Each coefficient is an x-free
/// polynomial in the markers of the registry.
class TruncatedSeries {
 public:
  TruncatedSeries(RegistryPtr registry, int order);
  TruncatedSeries(RegistryPtr registry, std::vector<MultiPoly> coefficients);

  /// Expansion of a polynomial, truncated after x^order.
  static TruncatedSeries from_poly(const MultiPoly& p, int order);
  static TruncatedSeries from_integers(const std::vector<Integer>& values);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const RegistryPtr& registry() const { return registry_; }
  const MultiPoly& operator[](int n) const { return coeffs_.at(n); }
  const std::vector<MultiPoly>& coefficients() const { return coeffs_; }

  /// Integer coefficients when every coefficient is an integer constant.
  std::optional<std::vector<Integer>> integers() const;

  TruncatedSeries truncated(int order) const;
  TruncatedSeries substitute(std::span<const MultiPoly> images) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a,
                                   const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a,
                                   const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a,
                         const TruncatedSeries& b) = default;

  /// Space-separated coefficients in canonical text.
  std::string str() const;

 private:
  RegistryPtr registry_;
  std::vector<MultiPoly> coeffs_;
};

/// Coefficients c_0..c_N with num = den * sum c_n x^n mod x^(N+1). The x^0
/// part of the denominator must be nonzero and must divide exactly.
TruncatedSeries series_from_rational(const RationalFunction& r, int order);

/// sum_{m>=0} m! y^m truncated after x^order. Requires y[0] == 0.
TruncatedSeries fsum_series(const TruncatedSeries& y, int order);

/// Convenience: fsum of the expansion of a rational function.
TruncatedSeries fsum_rational(const RationalFunction& y, int order);

}  // namespace hertz
