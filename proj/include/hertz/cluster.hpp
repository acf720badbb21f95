#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hertz/perm.hpp"
#include "hertz/poly.hpp"
#include "hertz/poly_matrix.hpp"

namespace hertz {

/// Ordered antichain of Hertzsprung patterns, each of length >= 2. Carries
/// the marker registry (one marker u_tau per pattern, in input order).
class PatternSet {
 public:
  /// Throws unless the patterns form an antichain.
  explicit PatternSet(std::vector<Permutation> patterns);

  std::size_t size() const { return patterns_.size(); }
  const Permutation& operator[](std::size_t i) const { return patterns_[i]; }
  const std::vector<Permutation>& patterns() const { return patterns_; }
  auto begin() const { return patterns_.begin(); }
  auto end() const { return patterns_.end(); }

  std::optional<std::size_t> index_of(const Permutation& p) const;
  int min_length() const;

  const RegistryPtr& registry() const { return registry_; }
  MultiPoly marker(std::size_t i) const;

 private:
  std::vector<Permutation> patterns_;
  RegistryPtr registry_;
};

std::string marker_name(const Permutation& p);

struct AntichainViolation {
  Permutation contained;  // occurs as a Hertzsprung factor of `container`
  Permutation container;
};

enum class AntichainMode { Strict, Reduce };

struct AntichainCheck {
  std::optional<PatternSet> set;
  std::optional<AntichainViolation> violation;
  /// Patterns dropped in Reduce mode, in input order.
  std::vector<Permutation> dropped;
};

/// Strict mode reports the first comparable pair. Reduce mode drops every
/// pattern that contains another member; avoidance is unaffected by this.
/// Throws on duplicates or patterns shorter than 2.
AntichainCheck check_antichain(std::span<const Permutation> patterns,
                               AntichainMode mode = AntichainMode::Strict);

/// 1 iff the last i letters of sigma and the first i letters of tau differ by
/// a constant equal to |sigma|-i or -(|tau|-i). 1 <= i < min(|sigma|,|tau|).
int chi(const Permutation& sigma, const Permutation& tau, int i);

/// Bit e is set iff x^e occurs in the correlation polynomial.
std::uint64_t correlation_mask(std::span<const int> sigma,
                               std::span<const int> tau);

/// Omega(sigma, tau) = sum_i chi_i x^(|tau|-i).
MultiPoly correlation_poly(const Permutation& sigma, const Permutation& tau,
                           RegistryPtr registry = Registry::x_only());

/// Permutations having sigma as proper Hertzsprung prefix and tau as proper
/// Hertzsprung suffix, shorter than |sigma|+|tau|, sorted ascending.
std::vector<Permutation> overlap_set(const Permutation& sigma,
                                     const Permutation& tau);

bool is_self_overlapping(const Permutation& tau);

/// Weighted digraph on [epsilon, tau_1, ..., tau_t]; weights(i, j) is the
/// weight of the edge from vertex i to vertex j.
struct TransferDigraph {
  PatternSet patterns;
  PolyMatrix weights;

  /// "sigma -> tau : weight" for every nonzero edge, then the matrix.
  std::string str() const;
};

TransferDigraph build_transfer_digraph(const PatternSet& patterns);

/// Generating function of walks from vertex 0 that end in one of the
/// `targets` (zero-based vertex indices), by Cramer's rule on 1 - adjacency:
/// the sum of (-1)^v det(1-A : v+1, 1) over targets v, over det(1-A).
RationalFunction walk_generating_function(
    const PolyMatrix& adjacency, std::span<const std::size_t> targets);

/// Cluster generating function C(u; x).
RationalFunction cluster_gf(const PatternSet& patterns);

/// Adjacency matrix of the digraph extended by an unmarked copy of alpha,
/// placed last.
PolyMatrix end_in_adjacency(const PatternSet& patterns,
                            const Permutation& alpha);

/// Generating function of marked permutations ending in an unmarked
/// occurrence of alpha that would complete a cluster.
RationalFunction cluster_gf_end_in(const PatternSet& patterns,
                                   const Permutation& alpha);

inline constexpr int kClusterBruteCeiling = 8;

/// Sum of u_M over all T-clusters (pi, M) with |pi| = n, by definition.
MultiPoly brute_force_clusters(const PatternSet& patterns, int n,
                               int ceiling = kClusterBruteCeiling);

}  // namespace hertz
