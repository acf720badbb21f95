#include "hertz/distribution.hpp"

#include <vector>

namespace hertz {

namespace {

/// Markers to a constant, moving everything into the x-only registry.
std::vector<MultiPoly> markers_to_constant_x_only(const RegistryPtr& reg,
                                                  const Rational& value) {
  auto target = Registry::x_only();
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < reg->size(); ++i)
    images.push_back(i == reg->x_index() ? MultiPoly::x(target)
                                         : MultiPoly(target, value));
  return images;
}

RationalFunction plus_x(const RationalFunction& c) {
  MultiPoly x = MultiPoly::x(c.registry());
  return RationalFunction(x * c.den() + c.num(), c.den());
}

Integer factorial(int n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

Integer binomial(long top, long bottom) {
  if (top < 0 || bottom < 0 || bottom > top) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(top),
               static_cast<unsigned long>(bottom));
  return b;
}

}  // namespace

RationalFunction joint_distribution_argument(const PatternSet& patterns) {
  const RationalFunction c = cluster_gf(patterns);
  const auto images = shift_markers_images(patterns.registry(), -1);
  return plus_x(c.substitute(images));
}

TruncatedSeries joint_distribution_series(const PatternSet& patterns,
                                          int order) {
  return fsum_rational(joint_distribution_argument(patterns), order);
}

RationalFunction avoider_argument(const PatternSet& patterns) {
  const TransferDigraph d = build_transfer_digraph(patterns);
  const auto images = markers_to_constant_x_only(patterns.registry(), -1);
  const PolyMatrix a = d.weights.substitute(images);
  std::vector<std::size_t> targets;
  for (std::size_t v = 1; v <= patterns.size(); ++v) targets.push_back(v);
  return plus_x(walk_generating_function(a, targets));
}

TruncatedSeries avoider_series(const PatternSet& patterns, int order) {
  return fsum_rational(avoider_argument(patterns), order);
}

TruncatedSeries end_pattern_series(const PatternSet& patterns,
                                   const Permutation& alpha, int order) {
  const auto images = markers_to_constant_x_only(patterns.registry(), -1);
  const PolyMatrix a = end_in_adjacency(patterns, alpha).substitute(images);
  const std::size_t target[] = {patterns.size() + 1};
  const TruncatedSeries ends =
      series_from_rational(walk_generating_function(a, target), order);
  const TruncatedSeries y = series_from_rational(avoider_argument(patterns), order);

  // sum_{m>=1} m! y^(m-1) = sum_{j>=0} (j+1)! y^j, by Horner.
  const RegistryPtr& reg = y.registry();
  auto constant = [&](const Integer& v) {
    std::vector<MultiPoly> coeffs(order + 1, MultiPoly(reg));
    coeffs[0] = MultiPoly(reg, Rational(v));
    return TruncatedSeries(reg, std::move(coeffs));
  };
  TruncatedSeries r = constant(factorial(order + 1));
  for (int j = order - 1; j >= 0; --j) r = constant(factorial(j + 1)) + y * r;
  return ends * r;
}

MultiPoly brute_force_distribution(std::span<const Permutation> patterns, int n,
                                   const RegistryPtr& registry, int ceiling) {
  if (n > ceiling) throw CeilingExceeded("brute_force_distribution", n, ceiling);
  if (registry->marker_count() != patterns.size())
    throw Error("brute_force_distribution: one marker per pattern required");
  // Tally exponent vectors first; only distinct ones become terms.
  std::map<Monomial, long> tally;
  Monomial mono(registry->size(), 0);
  for_each_permutation(n, [&](std::span<const int> pi) {
    for (std::size_t k = 0; k < patterns.size(); ++k)
      mono[k] = static_cast<int>(count_occurrences(patterns[k].values(), pi));
    ++tally[mono];
  });
  MultiPoly out(registry);
  for (const auto& [m, count] : tally)
    out += MultiPoly::monomial(registry, m, Rational(count));
  return out;
}

MultiPoly brute_force_distribution(const PatternSet& patterns, int n,
                                   int ceiling) {
  return brute_force_distribution(patterns.patterns(), n, patterns.registry(),
                                  ceiling);
}

Integer hertzsprung_closed_form(int n) {
  if (n < 0) throw Error("hertzsprung_closed_form: negative n");
  Integer total = factorial(n);
  for (int k = 1; k <= n; ++k) {
    Integer inner = 0;
    for (int i = 1; i <= k; ++i) {
      Integer term = binomial(k - 1, i - 1) * binomial(n - k, i) * factorial(n - k);
      mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), i);
      inner += term;
    }
    if (k % 2) total -= inner;
    else total += inner;
  }
  return total;
}

Integer myers_count(const Permutation& tau, int n, int m) {
  if (is_self_overlapping(tau))
    throw Error("myers_count: " + tau.str() + " is self-overlapping");
  if (n < 0 || m < 0) throw Error("myers_count: negative argument");
  const long k = tau.size();
  Integer total = 0;
  for (long i = m; n - (k - 1) * i >= 0; ++i) {
    const long free = n - (k - 1) * i;
    Integer term = binomial(i, m) * binomial(free, i) * factorial(free);
    if ((m - i) % 2) total -= term;
    else total += term;
  }
  return total;
}

TruncatedSeries jackson_read_gf(int k, JacksonReadVariant variant, int order) {
  if (k < 2) throw Error("jackson_read_gf: k must be at least 2");
  auto reg = Registry::x_only();
  const MultiPoly x = MultiPoly::x(reg);
  const MultiPoly one(reg, 1);
  MultiPoly num = x - MultiPoly::x(reg, k);
  if (variant == JacksonReadVariant::Pair)
    num = x - Rational(2) * MultiPoly::x(reg, k) + MultiPoly::x(reg, k + 1);
  return fsum_rational(RationalFunction(num, one - MultiPoly::x(reg, k)), order);
}

namespace {

RegistryPtr u_registry() {
  static const RegistryPtr reg = Registry::make({"u"});
  return reg;
}

}  // namespace

RationalFunction jackson_id_argument(int k) {
  if (k < 2) throw Error("jackson_id_argument: k must be at least 2");
  const auto reg = u_registry();
  const MultiPoly one(reg, 1);
  const MultiPoly u = MultiPoly::variable(reg, 0);
  const MultiPoly x = MultiPoly::x(reg);
  const MultiPoly p = one - u * x - (one - u) * MultiPoly::x(reg, k - 1);
  const MultiPoly q = one - u * x - (one - u) * MultiPoly::x(reg, k);
  return RationalFunction(x * p, q);
}

RationalFunction single_pattern_id_argument(int k) {
  if (k < 2) throw Error("single_pattern_id_argument: k must be at least 2");
  const auto reg = u_registry();
  const MultiPoly one(reg, 1);
  const MultiPoly u1 = MultiPoly::variable(reg, 0) - one;
  const MultiPoly x = MultiPoly::x(reg);
  MultiPoly bracket(reg);
  for (int e = 1; e < k; ++e) bracket += MultiPoly::x(reg, e);
  const MultiPoly den = one - u1 * bracket;
  return RationalFunction(x * den + u1 * MultiPoly::x(reg, k), den);
}

TruncatedSeries jackson_id_distribution(int k, int order) {
  return fsum_rational(jackson_id_argument(k), order);
}

}  // namespace hertz
