#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hertz/error.hpp"

namespace hertz {

/// Largest n for which exhaustive enumeration of S_n is permitted at all.
/// Individual oracles impose tighter ceilings of their own.
inline constexpr int kEnumerationCeiling = 12;

/// A permutation of {1..n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;

  /// Throws hertz::Error unless `values` is a bijection onto {1..n}.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values)
      : Permutation(std::vector<int>(values)) {}

  static Permutation identity(int n);
  static Permutation reverse_identity(int n);

  /// Accepts the digit form ("45312") and the comma form ("10,6,7,...").
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }

  /// Zero-based access to the value in position i+1.
  int operator[](std::size_t i) const { return values_[i]; }
  std::span<const int> values() const { return values_; }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  Permutation reversed() const;
  Permutation complemented() const;
  Permutation inverse() const;

  /// Digit form when n <= 9, comma form otherwise.
  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Order-isomorphic relabelling of a word of distinct integers onto {1..k}.
Permutation standardize(std::span<const int> word);

/// True iff the factor of `host` starting at zero-based `start` is a
/// Hertzsprung occurrence of `pattern`, i.e. host[start+i] - pattern[i] is
/// constant.
bool occurs_at(std::span<const int> pattern, std::span<const int> host,
               std::size_t start);

/// 1-based start positions of all Hertzsprung occurrences, ascending.
std::vector<std::size_t> find_occurrences(const Permutation& pattern,
                                          const Permutation& host);
std::size_t count_occurrences(std::span<const int> pattern,
                              std::span<const int> host);

/// True iff `pattern` is a Hertzsprung factor of `host`.
bool is_factor(const Permutation& pattern, const Permutation& host);

/// True iff `host` has no occurrence of any pattern.
bool avoids(const Permutation& host, std::span<const Permutation> patterns);

/// outer[parts...]: the block in slot i is parts[i] shifted so that blocks
/// are stacked in the relative order given by `outer`.
Permutation inflate(const Permutation& outer,
                    std::span<const Permutation> parts);

/// Lexicographic rank of a permutation of {1..n}, in [0, n!).
std::uint64_t rank(std::span<const int> perm);
Permutation unrank(int n, std::uint64_t r);

std::uint64_t factorial_u64(int n);

/// Lexicographic stream over S_n.
class PermutationStream {
 public:
  explicit PermutationStream(int n, int ceiling = kEnumerationCeiling);

  bool done() const { return done_; }
  std::span<const int> values() const { return current_; }
  Permutation current() const { return Permutation(current_); }
  void advance();

 private:
  std::vector<int> current_;
  bool done_ = false;
};

/// Calls f(std::span<const int>) for every permutation of S_n in
/// lexicographic order.
template <class F>
void for_each_permutation(int n, F&& f, int ceiling = kEnumerationCeiling) {
  for (PermutationStream s(n, ceiling); !s.done(); s.advance()) f(s.values());
}

std::vector<Permutation> all_permutations(int n, int ceiling = 9);

}  // namespace hertz
