#pragma once

#include <span>

#include "hertz/cluster.hpp"
#include "hertz/series.hpp"

namespace hertz {

inline constexpr int kDefaultOrder = 20;
inline constexpr int kDistributionBruteCeiling = 8;

/// Joint distribution sum_pi prod_tau u_tau^{tau(pi)} x^{|pi|}, truncated.
/// Coefficients are polynomials in the markers of patterns.registry().
TruncatedSeries joint_distribution_series(const PatternSet& patterns, int order);

/// x + C(u - 1; x) as a rational function (the argument of fsum above).
RationalFunction joint_distribution_argument(const PatternSet& patterns);

/// x + C(-1; x), specialized before any determinant is taken.
RationalFunction avoider_argument(const PatternSet& patterns);

/// Number of T-avoiders of each length 0..order.
TruncatedSeries avoider_series(const PatternSet& patterns, int order);

/// f^alpha(n): permutations of length n avoiding T except for one
/// occurrence of alpha as a suffix.
TruncatedSeries end_pattern_series(const PatternSet& patterns,
                                   const Permutation& alpha, int order);

/// sum over S_n of prod_tau u_tau^{count}, by enumeration. Markers follow
/// `registry`, one per pattern in order.
MultiPoly brute_force_distribution(std::span<const Permutation> patterns, int n,
                                   const RegistryPtr& registry,
                                   int ceiling = kDistributionBruteCeiling);
MultiPoly brute_force_distribution(const PatternSet& patterns, int n,
                                   int ceiling = kDistributionBruteCeiling);

/// Number of permutations of [n] with no two adjacent entries differing by 1,
/// from the explicit double sum.
Integer hertzsprung_closed_form(int n);

/// Permutations of [n] with exactly m occurrences of a non-self-overlapping
/// pattern tau. Throws if tau overlaps itself.
Integer myers_count(const Permutation& tau, int n, int m);

enum class JacksonReadVariant { Single, Pair };

/// Avoider counts of id_k (Single) or {id_k, reversed id_k} (Pair) from the
/// closed-form generating functions.
TruncatedSeries jackson_read_gf(int k, JacksonReadVariant variant, int order);

/// Distribution of the number of occurrences of id_k from the closed form
/// sum_m m! x^m (P/Q)^m. Coefficients are polynomials in the marker "u".
TruncatedSeries jackson_id_distribution(int k, int order);

/// The argument x P/Q of the closed form above.
RationalFunction jackson_id_argument(int k);

/// The single-pattern argument x + (u-1)x^k / (1 - (u-1)(x + ... + x^(k-1)))
/// over the same registry as jackson_id_argument.
RationalFunction single_pattern_id_argument(int k);

}  // namespace hertz
