#include "hertz/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "hertz/distribution.hpp"
#include "hertz/union_find.hpp"

namespace hertz {

RewriteRule::RewriteRule(Permutation l, Permutation r)
    : lhs(std::move(l)), rhs(std::move(r)) {
  if (lhs.size() != rhs.size())
    throw Error("rule " + str() + " does not preserve length");
  if (lhs == rhs) throw Error("rule " + str() + " is trivial");
  if (lhs.empty()) throw Error("rule with empty left-hand side");
}

RewriteSystem::RewriteSystem(std::vector<RewriteRule> rules, std::string name)
    : rules_(std::move(rules)), name_(std::move(name)) {
  for (std::size_t i = 0; i < rules_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (rules_[i] == rules_[j]) throw Error("duplicate rule " + rules_[i].str());
}

namespace {

std::string_view trim(std::string_view s, std::size_t& offset) {
  std::size_t b = 0;
  while (b < s.size() && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  std::size_t e = s.size();
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  offset += b;
  return s.substr(b, e - b);
}

Permutation parse_at(std::string_view token, std::size_t line,
                     std::size_t column) {
  try {
    return Permutation::parse(token);
  } catch (const ParseError& e) {
    throw ParseError("bad permutation \"" + std::string(token) + "\"", line,
                     column + e.column() - 1);
  }
}

}  // namespace

RewriteSystem RewriteSystem::parse(std::string_view text, std::string name) {
  std::vector<RewriteRule> rules;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    ++line_no;
    pos = nl + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::size_t col = 1;
    line = trim(line, col);
    if (line.empty()) continue;
    std::size_t arrow = line.find("->");
    if (arrow == std::string_view::npos)
      throw ParseError("expected \"LHS -> RHS\"", line_no, col);
    std::size_t lcol = col;
    std::string_view lhs = trim(line.substr(0, arrow), lcol);
    std::size_t rcol = col + arrow + 2;
    std::string_view rhs = trim(line.substr(arrow + 2), rcol);
    if (lhs.empty()) throw ParseError("missing left-hand side", line_no, col);
    if (rhs.empty())
      throw ParseError("missing right-hand side", line_no, col + arrow + 2);
    Permutation l = parse_at(lhs, line_no, lcol);
    Permutation r = parse_at(rhs, line_no, rcol);
    try {
      rules.emplace_back(std::move(l), std::move(r));
    } catch (const Error& e) {
      throw ParseError(e.what(), line_no, col);
    }
  }
  return RewriteSystem(std::move(rules), std::move(name));
}

std::vector<Permutation> RewriteSystem::domain() const {
  std::vector<Permutation> dom;
  for (const auto& r : rules_)
    if (std::find(dom.begin(), dom.end(), r.lhs) == dom.end()) dom.push_back(r.lhs);
  return dom;
}

int RewriteSystem::max_rule_length() const {
  int m = 0;
  for (const auto& r : rules_) m = std::max(m, r.lhs.size());
  return m;
}

int RewriteSystem::min_rule_length() const {
  int m = 0;
  for (const auto& r : rules_) m = m == 0 ? r.lhs.size() : std::min(m, r.lhs.size());
  return m;
}

std::string RewriteSystem::str() const {
  std::string out;
  for (const auto& r : rules_) out += r.str() + "\n";
  return out;
}

std::vector<Permutation> rewrite_successors(const Permutation& pi,
                                            const RewriteSystem& system) {
  std::set<Permutation> out;
  system.for_each_step(pi.values(), [&](std::span<const int> s) {
    out.emplace(std::vector<int>(s.begin(), s.end()));
  });
  return {out.begin(), out.end()};
}

Statistic::Statistic(Kind kind, Permutation pattern)
    : kind_(kind), pattern_(std::move(pattern)) {
  if (pattern_.empty()) throw Error("statistic pattern must be nonempty");
}

Statistic Statistic::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("statistic must look like sigma:123 or count:123", 0, 1);
  std::string_view kind = text.substr(0, colon);
  Permutation p = Permutation::parse(text.substr(colon + 1));
  if (kind == "sigma") return Statistic(Kind::SumOfPositions, std::move(p));
  if (kind == "count") return Statistic(Kind::OccurrenceCount, std::move(p));
  throw ParseError("unknown statistic kind \"" + std::string(kind) + "\"", 0, 1);
}

std::string Statistic::name() const {
  return (kind_ == Kind::SumOfPositions ? "sigma:" : "count:") + pattern_.str();
}

std::uint64_t Statistic::operator()(std::span<const int> pi) const {
  const auto tau = pattern_.values();
  std::uint64_t total = 0;
  for (std::size_t d = 0; d + tau.size() <= pi.size(); ++d)
    if (occurs_at(tau, pi, d))
      total += kind_ == Kind::SumOfPositions ? d + 1 : 1;
  return total;
}

std::uint64_t statistic_sigma(const Permutation& tau, const Permutation& pi) {
  return Statistic(Statistic::Kind::SumOfPositions, tau)(pi.values());
}

namespace {

std::vector<int> to_vec(std::span<const int> s) { return {s.begin(), s.end()}; }

/// One length of the statistic certificate. Returns false on a violation.
bool statistic_scan(const RewriteSystem& system, const Statistic& stat, int n,
                    TerminationReport& report) {
  for (PermutationStream s(n, kTerminationCeiling); !s.done(); s.advance()) {
    const auto pi = s.values();
    const std::uint64_t before = stat(pi);
    bool ok = true;
    system.for_each_step(pi, [&](std::span<const int> next) {
      if (ok && stat(next) <= before) {
        ok = false;
        report.witness_from = Permutation(to_vec(pi));
        report.witness_to = Permutation(to_vec(next));
      }
    });
    if (!ok) return false;
  }
  return true;
}

/// One length of the acyclicity scan: iterative DFS over S_n indexed by
/// lexicographic rank. Returns false when a cycle is found.
bool acyclicity_scan(const RewriteSystem& system, int n,
                     TerminationReport& report) {
  const std::uint64_t total = factorial_u64(n);
  enum : std::uint8_t { White, Gray, Black };
  std::vector<std::uint8_t> color(total, White);

  struct Frame {
    std::uint64_t node;
    std::vector<std::uint64_t> next;
    std::size_t cursor = 0;
  };
  auto expand = [&](std::uint64_t node) {
    Frame f{node, {}, 0};
    const Permutation pi = unrank(n, node);
    system.for_each_step(pi.values(),
                         [&](std::span<const int> s) { f.next.push_back(rank(s)); });
    return f;
  };

  for (std::uint64_t start = 0; start < total; ++start) {
    if (color[start] != White) continue;
    std::vector<Frame> stack;
    stack.push_back(expand(start));
    color[start] = Gray;
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.cursor == top.next.size()) {
        color[top.node] = Black;
        stack.pop_back();
        continue;
      }
      const std::uint64_t child = top.next[top.cursor++];
      if (color[child] == Gray) {
        report.witness_from = unrank(n, top.node);
        report.witness_to = unrank(n, child);
        return false;
      }
      if (color[child] == White) {
        color[child] = Gray;
        stack.push_back(expand(child));
      }
    }
  }
  return true;
}

}  // namespace

TerminationReport check_termination(const RewriteSystem& system, int nmax,
                                    const std::optional<Statistic>& statistic,
                                    int ceiling) {
  if (nmax > ceiling) throw CeilingExceeded("check_termination", nmax, ceiling);
  if (nmax < system.max_rule_length())
    throw Error("check_termination: nmax " + std::to_string(nmax) +
                " is shorter than the longest rule");
  TerminationReport report;
  report.method = statistic ? TerminationReport::Method::StatisticCertificate
                            : TerminationReport::Method::AcyclicityScan;
  if (statistic) report.statistic = statistic->name();
  for (int n = 0; n <= nmax; ++n) {
    bool ok = true;
    if (n >= system.min_rule_length())
      ok = statistic ? statistic_scan(system, *statistic, n, report)
                     : acyclicity_scan(system, n, report);
    if (!ok) {
      report.terminating = false;
      return report;
    }
    report.verified_up_to = n;
  }
  return report;
}

std::vector<OverlapEntry> overlap_table(const RewriteSystem& system) {
  std::vector<OverlapEntry> out;
  const auto dom = system.domain();
  for (const auto& a : dom)
    for (const auto& b : dom)
      if (a.size() >= 2 && b.size() >= 2)
        if (auto o = overlap_set(a, b); !o.empty()) out.push_back({a, b, std::move(o)});
  return out;
}

std::vector<Permutation> olap_of_system(const RewriteSystem& system) {
  std::set<Permutation> all;
  for (const auto& e : overlap_table(system))
    all.insert(e.overlaps.begin(), e.overlaps.end());
  return {all.begin(), all.end()};
}

std::string verdict_name(ConfluenceReport::Verdict v) {
  switch (v) {
    case ConfluenceReport::Verdict::Confluent: return "confluent";
    case ConfluenceReport::Verdict::NotConfluent: return "not-confluent";
    case ConfluenceReport::Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

std::set<Permutation> reachable(const Permutation& from,
                                const RewriteSystem& system) {
  std::set<Permutation> seen{from};
  std::deque<Permutation> queue{from};
  while (!queue.empty()) {
    Permutation p = std::move(queue.front());
    queue.pop_front();
    system.for_each_step(p.values(), [&](std::span<const int> s) {
      Permutation q(to_vec(s));
      if (seen.insert(q).second) queue.push_back(std::move(q));
    });
  }
  return seen;
}

}  // namespace

ConfluenceReport check_local_confluence(const RewriteSystem& system,
                                        const TerminationReport& termination) {
  const auto peaks = olap_of_system(system);
  int longest = system.max_rule_length();
  for (const auto& p : peaks) longest = std::max(longest, p.size());
  ConfluenceReport report;
  if (!termination.terminating) {
    report.verdict = ConfluenceReport::Verdict::Inconclusive;
    return report;
  }
  if (termination.verified_up_to < longest)
    throw Error("check_local_confluence: termination verified up to " +
                std::to_string(termination.verified_up_to) + " but olap(R) reaches " +
                std::to_string(longest));

  report.verdict = ConfluenceReport::Verdict::Confluent;
  std::map<Permutation, std::set<Permutation>> reach_cache;
  auto reach = [&](const Permutation& p) -> const std::set<Permutation>& {
    auto it = reach_cache.find(p);
    if (it == reach_cache.end()) it = reach_cache.emplace(p, reachable(p, system)).first;
    return it->second;
  };

  for (const auto& peak : peaks) {
    PeakReport pr{peak, rewrite_successors(peak, system), {}};
    for (std::size_t i = 0; i < pr.successors.size(); ++i) {
      for (std::size_t j = i + 1; j < pr.successors.size(); ++j) {
        JoinTrace t{pr.successors[i], pr.successors[j], false, std::nullopt};
        const auto& ri = reach(t.left);
        const auto& rj = reach(t.right);
        for (const auto& p : ri) {
          if (rj.count(p)) {
            t.joinable = true;
            t.meet = p;
            break;
          }
        }
        if (!t.joinable && report.verdict == ConfluenceReport::Verdict::Confluent) {
          report.verdict = ConfluenceReport::Verdict::NotConfluent;
          report.counterexample = peak;
          report.counterexample_pair = t;
        }
        pr.pairs.push_back(std::move(t));
      }
    }
    report.peaks.push_back(std::move(pr));
  }
  return report;
}

namespace {

bool first_step(const RewriteSystem& system, std::vector<int>& pi) {
  for (const auto& rule : system.rules()) {
    const auto lhs = rule.lhs.values();
    for (std::size_t d = 0; d + lhs.size() <= pi.size(); ++d) {
      if (!occurs_at(lhs, pi, d)) continue;
      const int shift = pi[d] - lhs[0];
      for (std::size_t j = 0; j < lhs.size(); ++j) pi[d + j] = rule.rhs[j] + shift;
      return true;
    }
  }
  return false;
}

}  // namespace

NormalForm normal_form(const Permutation& pi, const RewriteSystem& system,
                       const TerminationReport& termination,
                       const ConfluenceReport* confluence) {
  if (!termination.terminating || termination.verified_up_to < pi.size())
    throw Error("normal_form: termination not verified at length " +
                std::to_string(pi.size()));
  std::vector<int> cur(pi.begin(), pi.end());
  NormalForm out{pi, false, 0};
  const std::uint64_t limit = std::min<std::uint64_t>(factorial_u64(pi.size()), 100000000);
  while (first_step(system, cur)) {
    if (static_cast<std::uint64_t>(++out.steps) > limit)
      throw Error("normal_form: rewriting does not terminate from " + pi.str());
  }
  out.form = Permutation(std::move(cur));
  out.unique = confluence != nullptr &&
               confluence->verdict == ConfluenceReport::Verdict::Confluent;
  return out;
}

EquivalenceClasses equivalence_classes_bruteforce(const RewriteSystem& system,
                                                  int n, bool with_classes,
                                                  int ceiling) {
  if (n > ceiling) throw CeilingExceeded("equivalence_classes_bruteforce", n, ceiling);
  const std::uint64_t total = factorial_u64(n);
  UnionFind uf(total);
  std::uint64_t r = 0;
  for (PermutationStream s(n, ceiling); !s.done(); s.advance(), ++r) {
    system.for_each_step(s.values(), [&](std::span<const int> next) {
      uf.unite(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(rank(next)));
    });
  }
  EquivalenceClasses out;
  out.count = uf.components();
  if (with_classes) {
    std::map<std::uint32_t, std::size_t> slot;
    r = 0;
    for (PermutationStream s(n, ceiling); !s.done(); s.advance(), ++r) {
      std::uint32_t root = uf.find(static_cast<std::uint32_t>(r));
      auto [it, fresh] = slot.try_emplace(root, out.classes.size());
      if (fresh) out.classes.emplace_back();
      out.classes[it->second].push_back(s.current());
    }
  }
  return out;
}

std::uint64_t count_normal_forms(const RewriteSystem& system, int n,
                                 const TerminationReport& termination,
                                 int ceiling) {
  if (n > ceiling) throw CeilingExceeded("count_normal_forms", n, ceiling);
  if (!termination.terminating || termination.verified_up_to < n)
    throw Error("count_normal_forms: termination not verified at length " +
                std::to_string(n));
  std::vector<bool> is_form(factorial_u64(n), false);
  std::vector<int> cur;
  for (PermutationStream s(n, ceiling); !s.done(); s.advance()) {
    cur.assign(s.values().begin(), s.values().end());
    while (first_step(system, cur)) {
    }
    is_form[rank(cur)] = true;
  }
  return static_cast<std::uint64_t>(std::count(is_form.begin(), is_form.end(), true));
}

TruncatedSeries class_count_series(const RewriteSystem& system, int order,
                                   const ConfluenceReport& confluence,
                                   const TerminationReport& termination) {
  if (!termination.terminating)
    throw Error("class_count_series: the system has a termination failure");
  if (confluence.verdict != ConfluenceReport::Verdict::Confluent)
    throw Error("class_count_series: the system is " +
                verdict_name(confluence.verdict) +
                "; normal forms are not class representatives");
  const auto dom = system.domain();
  AntichainCheck check = check_antichain(dom, AntichainMode::Reduce);
  return avoider_series(*check.set, order);
}

SystemAnalysis analyze_system(const RewriteSystem& system, int nmax,
                              const std::optional<Statistic>& statistic,
                              int ceiling) {
  int longest = std::max(nmax, system.max_rule_length());
  for (const auto& p : olap_of_system(system)) longest = std::max(longest, p.size());
  SystemAnalysis out;
  out.termination = check_termination(system, longest, statistic, ceiling);
  out.confluence = check_local_confluence(system, out.termination);
  return out;
}

namespace {

struct Builtin {
  const char* name;
  const char* rules;
  const char* statistic;
};

constexpr Builtin kBuiltins[] = {
    {"EQ1", "21 -> 12\n231 -> 312\n", "sigma:12"},
    {"EQ2", "132 -> 123\n", "count:123"},
    {"EQ3", "321 -> 123\n2341 -> 4123\n", "sigma:123"},
    {"EQ4", "132 -> 123\n213 -> 123\n", "sigma:123"},
    {"EQ5", "132 -> 123\n321 -> 123\n2341 -> 4123\n", "sigma:123"},
    {"EQ6", "132 -> 123\n213 -> 123\n321 -> 123\n2341 -> 4123\n", "sigma:123"},
    {"EQ7",
     "132 -> 123\n213 -> 123\n231 -> 123\n312 -> 123\n321 -> 123\n"
     "2341 -> 4123\n34512 -> 45123\n54123 -> 45123\n6745123 -> 7456123\n",
     "sigma:12"},
};

const Builtin& find_builtin(std::string_view name) {
  for (const auto& b : kBuiltins)
    if (name == b.name) return b;
  throw Error("unknown builtin system \"" + std::string(name) + "\"");
}

}  // namespace

RewriteSystem builtin_system(std::string_view name) {
  const Builtin& b = find_builtin(name);
  return RewriteSystem::parse(b.rules, b.name);
}

std::vector<std::string> builtin_system_names() {
  std::vector<std::string> out;
  for (const auto& b : kBuiltins) out.emplace_back(b.name);
  return out;
}

Statistic builtin_statistic(std::string_view name) {
  return Statistic::parse(find_builtin(name).statistic);
}

}  // namespace hertz
