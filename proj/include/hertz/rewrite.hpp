#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hertz/cluster.hpp"
#include "hertz/perm.hpp"
#include "hertz/series.hpp"

namespace hertz {

/// Length-preserving rule lhs -> rhs acting on Hertzsprung occurrences.
struct RewriteRule {
  RewriteRule(Permutation lhs, Permutation rhs);

  Permutation lhs;
  Permutation rhs;

  std::string str() const { return lhs.str() + " -> " + rhs.str(); }
  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

class RewriteSystem {
 public:
  explicit RewriteSystem(std::vector<RewriteRule> rules, std::string name = {});

  /// Rule-file grammar: one "LHS -> RHS" per line; blank lines and text
  /// after '#' are ignored.
  static RewriteSystem parse(std::string_view text, std::string name = {});

  const std::vector<RewriteRule>& rules() const { return rules_; }
  const std::string& name() const { return name_; }

  /// Distinct left-hand sides in rule order.
  std::vector<Permutation> domain() const;
  int max_rule_length() const;
  int min_rule_length() const;

  /// Rule-file rendering; parse(str()) reproduces the system.
  std::string str() const;

  /// Calls f(std::span<const int>) for every one-step rewrite of pi, in rule
  /// order then position order. Results may repeat.
  template <class F>
  void for_each_step(std::span<const int> pi, F&& f) const {
    std::vector<int> buf(pi.begin(), pi.end());
    for (const auto& rule : rules_) {
      const auto lhs = rule.lhs.values();
      const auto rhs = rule.rhs.values();
      if (lhs.size() > pi.size()) continue;
      for (std::size_t d = 0; d + lhs.size() <= pi.size(); ++d) {
        if (!occurs_at(lhs, pi, d)) continue;
        const int shift = pi[d] - lhs[0];
        for (std::size_t j = 0; j < rhs.size(); ++j) buf[d + j] = rhs[j] + shift;
        f(std::span<const int>(buf));
        for (std::size_t j = 0; j < rhs.size(); ++j) buf[d + j] = pi[d + j];
      }
    }
  }

 private:
  std::vector<RewriteRule> rules_;
  std::string name_;
};

/// Deduplicated one-step successors, sorted.
std::vector<Permutation> rewrite_successors(const Permutation& pi,
                                            const RewriteSystem& system);

/// Permutation statistic used as a termination certificate.
class Statistic {
 public:
  enum class Kind { SumOfPositions, OccurrenceCount };

  Statistic(Kind kind, Permutation pattern);

  /// "sigma:123" (sum of occurrence positions) or "count:123".
  static Statistic parse(std::string_view text);

  Kind kind() const { return kind_; }
  const Permutation& pattern() const { return pattern_; }
  std::string name() const;

  std::uint64_t operator()(std::span<const int> pi) const;

 private:
  Kind kind_;
  Permutation pattern_;
};

/// Sum of the 1-based start positions of occurrences of tau in pi.
std::uint64_t statistic_sigma(const Permutation& tau, const Permutation& pi);

inline constexpr int kTerminationCeiling = 11;

struct TerminationReport {
  enum class Method { AcyclicityScan, StatisticCertificate };

  Method method = Method::AcyclicityScan;
  /// False when a cycle or a non-increasing edge was found.
  bool terminating = true;
  /// Every length up to this one was scanned exhaustively.
  int verified_up_to = 0;
  std::optional<std::string> statistic;
  /// For a failure: the offending edge (cycle edge or non-increasing step).
  std::optional<Permutation> witness_from;
  std::optional<Permutation> witness_to;
};

/// Bounded termination evidence: scans S_n for every n <= nmax, either for
/// rewrite cycles or for edges along which the statistic fails to increase.
TerminationReport check_termination(
    const RewriteSystem& system, int nmax,
    const std::optional<Statistic>& statistic = std::nullopt,
    int ceiling = kTerminationCeiling);

struct OverlapEntry {
  Permutation first;
  Permutation second;
  std::vector<Permutation> overlaps;
};

/// olap of every ordered pair of left-hand sides with a nonempty overlap set.
std::vector<OverlapEntry> overlap_table(const RewriteSystem& system);

/// Union of the overlap sets of all ordered pairs from dom(R), sorted.
std::vector<Permutation> olap_of_system(const RewriteSystem& system);

struct JoinTrace {
  Permutation left;
  Permutation right;
  bool joinable = false;
  /// Least common descendant (lexicographically) when joinable.
  std::optional<Permutation> meet;
};

struct PeakReport {
  Permutation peak;
  std::vector<Permutation> successors;
  std::vector<JoinTrace> pairs;
};

struct ConfluenceReport {
  enum class Verdict { Confluent, NotConfluent, Inconclusive };

  Verdict verdict = Verdict::Inconclusive;
  std::vector<PeakReport> peaks;
  /// Set iff verdict is NotConfluent.
  std::optional<Permutation> counterexample;
  std::optional<JoinTrace> counterexample_pair;
};

std::string verdict_name(ConfluenceReport::Verdict v);

/// Decides joinability of every critical peak at olap(R) by intersecting
/// reachability sets. Requires termination evidence covering the longest
/// element of olap(R); a termination failure yields Inconclusive.
ConfluenceReport check_local_confluence(const RewriteSystem& system,
                                        const TerminationReport& termination);

struct NormalForm {
  Permutation form;
  /// True iff the system is known to be confluent.
  bool unique = false;
  int steps = 0;
};

/// Rewrites with the first applicable rule at its leftmost position until no
/// rule applies.
NormalForm normal_form(const Permutation& pi, const RewriteSystem& system,
                       const TerminationReport& termination,
                       const ConfluenceReport* confluence = nullptr);

inline constexpr int kClassesCeiling = 9;

struct EquivalenceClasses {
  std::uint64_t count = 0;
  /// Filled on request; each class sorted, classes ordered by least member.
  std::vector<std::vector<Permutation>> classes;
};

/// Components of S_n under the symmetric closure of the rewrite relation.
EquivalenceClasses equivalence_classes_bruteforce(const RewriteSystem& system,
                                                  int n,
                                                  bool with_classes = false,
                                                  int ceiling = kClassesCeiling);

/// Number of distinct normal forms reached from S_n.
std::uint64_t count_normal_forms(const RewriteSystem& system, int n,
                                 const TerminationReport& termination,
                                 int ceiling = kClassesCeiling);

/// Number of equivalence classes per length 0..order, as the number of
/// dom(R)-avoiders. Refuses unless the system is confluent and terminating
/// on the evidence given.
TruncatedSeries class_count_series(const RewriteSystem& system, int order,
                                   const ConfluenceReport& confluence,
                                   const TerminationReport& termination);

/// Termination plus confluence, with the termination scan extended to the
/// longest element of olap(R).
struct SystemAnalysis {
  TerminationReport termination;
  ConfluenceReport confluence;
};

SystemAnalysis analyze_system(const RewriteSystem& system, int nmax,
                              const std::optional<Statistic>& statistic,
                              int ceiling = kTerminationCeiling);

/// EQ1 .. EQ7.
RewriteSystem builtin_system(std::string_view name);
std::vector<std::string> builtin_system_names();
/// Statistic known to increase along the builtin system's rewrite steps.
Statistic builtin_statistic(std::string_view name);

}  // namespace hertz
