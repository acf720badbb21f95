#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "hertz/perm.hpp"
#include "hertz/poly.hpp"

namespace hertz {

inline constexpr int kWilfCeiling = 9;
inline constexpr int kPalindromeCeiling = 25;
inline constexpr int kBonaMaxK = 5;
inline constexpr int kBonaMaxN = 20;
inline constexpr int kMeshCeiling = 11;

struct WilfClasses {
  int k = 0;
  /// Distinct autocorrelation polynomials, ordered by their exponent masks.
  std::vector<MultiPoly> polynomials;
  /// Bit e set iff x^e occurs; same order as `polynomials`.
  std::vector<std::uint64_t> masks;
  std::uint64_t count() const { return masks.size(); }
};

/// Distinct Omega(sigma, sigma) over sigma in S_k.
WilfClasses wilf_autocorrelation_classes(int k, int ceiling = kWilfCeiling);

/// Palindrome prefix lengths of a word, as a sorted list.
std::vector<int> palindrome_prefix_set(std::string_view word);

/// Number of distinct prefix-palindrome sets over binary palindromes of
/// length k.
std::uint64_t palindrome_prefix_count(int k, int ceiling = kPalindromeCeiling);

struct ConjectureOneRow {
  int k = 0;
  std::uint64_t a = 0;       // Wilf classes of length k
  std::uint64_t b_next = 0;  // palindrome prefix sets of length k + 1
  bool equal() const { return a == b_next; }
};

/// a_k against b_{k+1} for k = 3..kmax.
std::vector<ConjectureOneRow> check_conjecture_one(int kmax,
                                                   int ceiling = kWilfCeiling);

struct BonaViolation {
  Permutation tau;
  int n = 0;
  Integer tau_count;
  Integer id_count;
};

struct BonaReport {
  int k = 0;
  int nmax = 0;
  std::size_t patterns_checked = 0;
  /// Coefficients of the avoider series of id_k, n = 0..nmax.
  std::vector<Integer> id_counts;
  std::vector<BonaViolation> violations;
  bool holds() const { return violations.empty(); }
};

/// Compares |S_n(tau)| with |S_n(id_k)| for every tau in S_k and n <= nmax.
BonaReport check_bona(int k, int nmax);

/// Classical pattern with shaded boxes (column, row), both in 0..|pattern|.
struct MeshPattern {
  Permutation pattern;
  std::vector<std::pair<int, int>> shaded;
};

/// The 132-based pattern of the mesh conjecture.
MeshPattern mesh_p();

/// Generic containment by trying every classical occurrence and every box.
bool contains_mesh(const MeshPattern& p, std::span<const int> pi);

/// Containment of mesh_p(): some i with pi(i) > pi(i+1) > m, where m is the
/// maximum of pi before i (0 if none, and i is not first), and no later
/// entry lies strictly between m and pi(i).
bool contains_mesh_p(std::span<const int> pi);

/// |S_n(p)| for p = mesh_p().
Integer mesh_p_count(int n, int ceiling = kMeshCeiling);

struct MeshSeriesRow {
  int n = 0;
  Integer count;
  Integer predicted;  // coefficient of x^n in fsum(x/(1+x^2))
  bool equal() const { return count == predicted; }
};

std::vector<MeshSeriesRow> mesh_p_series_check(int nmax,
                                               int ceiling = kMeshCeiling);

}  // namespace hertz
