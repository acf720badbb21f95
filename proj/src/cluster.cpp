#include "hertz/cluster.hpp"

#include <algorithm>
#include <set>

namespace hertz {

std::string marker_name(const Permutation& p) { return "u_" + p.str(); }

namespace {

void require_pattern_shape(std::span<const Permutation> patterns) {
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    if (patterns[i].size() < 2)
      throw Error("pattern " + patterns[i].str() + " is shorter than 2");
    for (std::size_t j = 0; j < i; ++j)
      if (patterns[i] == patterns[j])
        throw Error("duplicate pattern " + patterns[i].str());
  }
}

std::optional<AntichainViolation> first_violation(
    std::span<const Permutation> patterns) {
  for (const auto& a : patterns)
    for (const auto& b : patterns)
      if (&a != &b && is_factor(a, b)) return AntichainViolation{a, b};
  return std::nullopt;
}

}  // namespace

PatternSet::PatternSet(std::vector<Permutation> patterns)
    : patterns_(std::move(patterns)) {
  require_pattern_shape(patterns_);
  if (auto v = first_violation(patterns_))
    throw Error("not an antichain: " + v->contained.str() + " occurs in " +
                v->container.str());
  std::vector<std::string> names;
  for (const auto& p : patterns_) names.push_back(marker_name(p));
  registry_ = Registry::make(std::move(names));
}

std::optional<std::size_t> PatternSet::index_of(const Permutation& p) const {
  auto it = std::find(patterns_.begin(), patterns_.end(), p);
  if (it == patterns_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - patterns_.begin());
}

int PatternSet::min_length() const {
  int m = 0;
  for (const auto& p : patterns_) m = (m == 0) ? p.size() : std::min(m, p.size());
  return m;
}

MultiPoly PatternSet::marker(std::size_t i) const {
  return MultiPoly::variable(registry_, i);
}

AntichainCheck check_antichain(std::span<const Permutation> patterns,
                               AntichainMode mode) {
  require_pattern_shape(patterns);
  AntichainCheck out;
  if (mode == AntichainMode::Strict) {
    out.violation = first_violation(patterns);
    if (!out.violation)
      out.set.emplace(std::vector<Permutation>(patterns.begin(), patterns.end()));
    return out;
  }
  std::vector<Permutation> kept;
  for (const auto& p : patterns) {
    bool redundant = std::any_of(patterns.begin(), patterns.end(),
                                 [&](const Permutation& q) {
                                   return &q != &p && is_factor(q, p);
                                 });
    if (redundant)
      out.dropped.push_back(p);
    else
      kept.push_back(p);
  }
  out.set.emplace(std::move(kept));
  return out;
}

int chi(const Permutation& sigma, const Permutation& tau, int i) {
  const int s = sigma.size();
  const int t = tau.size();
  if (i < 1 || i >= std::min(s, t))
    throw Error("chi: overlap length " + std::to_string(i) + " out of range");
  const int diff = sigma[s - i] - tau[0];
  for (int j = 1; j < i; ++j)
    if (sigma[s - i + j] - tau[j] != diff) return 0;
  return (diff == s - i || diff == -(t - i)) ? 1 : 0;
}

std::uint64_t correlation_mask(std::span<const int> sigma,
                               std::span<const int> tau) {
  const int s = static_cast<int>(sigma.size());
  const int t = static_cast<int>(tau.size());
  std::uint64_t mask = 0;
  for (int i = 1; i < std::min(s, t); ++i) {
    const int diff = sigma[s - i] - tau[0];
    if (diff != s - i && diff != -(t - i)) continue;
    bool constant = true;
    for (int j = 1; j < i && constant; ++j)
      constant = sigma[s - i + j] - tau[j] == diff;
    if (constant) mask |= std::uint64_t{1} << (t - i);
  }
  return mask;
}

MultiPoly correlation_poly(const Permutation& sigma, const Permutation& tau,
                           RegistryPtr registry) {
  MultiPoly out(registry);
  std::uint64_t mask = correlation_mask(sigma.values(), tau.values());
  for (int e = 0; e < 64; ++e)
    if (mask >> e & 1) out += MultiPoly::x(registry, e);
  return out;
}

std::vector<Permutation> overlap_set(const Permutation& sigma,
                                     const Permutation& tau) {
  const int s = sigma.size();
  const int t = tau.size();
  std::vector<Permutation> out;
  for (int i = 1; i < std::min(s, t); ++i) {
    if (!chi(sigma, tau, i)) continue;
    std::vector<int> pi;
    if (sigma[s - i] - tau[0] == s - i) {
      // sigma is a literal prefix; the tail of tau sits above it.
      pi.assign(sigma.begin(), sigma.end());
      for (int j = i; j < t; ++j) pi.push_back(tau[j] + s - i);
    } else {
      // tau is a literal suffix; the head of sigma sits above it.
      for (int j = 0; j < s - i; ++j) pi.push_back(sigma[j] + t - i);
      pi.insert(pi.end(), tau.begin(), tau.end());
    }
    out.emplace_back(std::move(pi));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_self_overlapping(const Permutation& tau) {
  if (tau.size() < 2) throw Error("is_self_overlapping: pattern shorter than 2");
  return correlation_mask(tau.values(), tau.values()) != 0;
}

std::string TransferDigraph::str() const {
  auto label = [&](std::size_t v) {
    return v == 0 ? std::string("eps") : patterns[v - 1].str();
  };
  std::string out;
  for (std::size_t i = 0; i < weights.dim(); ++i)
    for (std::size_t j = 0; j < weights.dim(); ++j)
      if (!weights(i, j).is_zero())
        out += label(i) + " -> " + label(j) + " : " + weights(i, j).str() + "\n";
  out += weights.str();
  return out;
}

TransferDigraph build_transfer_digraph(const PatternSet& patterns) {
  const RegistryPtr& reg = patterns.registry();
  const std::size_t t = patterns.size();
  PolyMatrix a(reg, t + 1);
  for (std::size_t j = 0; j < t; ++j) {
    const MultiPoly u = patterns.marker(j);
    a(0, j + 1) = u * MultiPoly::x(reg, patterns[j].size());
    for (std::size_t i = 0; i < t; ++i)
      a(i + 1, j + 1) = u * correlation_poly(patterns[i], patterns[j], reg);
  }
  return TransferDigraph{patterns, std::move(a)};
}

RationalFunction walk_generating_function(
    const PolyMatrix& adjacency, std::span<const std::size_t> targets) {
  const RegistryPtr& reg = adjacency.registry();
  const PolyMatrix b = PolyMatrix::identity(reg, adjacency.dim()) - adjacency;
  MultiPoly num(reg);
  for (std::size_t v : targets) {
    if (v == 0 || v >= adjacency.dim())
      throw Error("walk target out of range");
    MultiPoly cof = det_bareiss(b.minor(v + 1, 1));
    if (v % 2 == 1)
      num -= cof;
    else
      num += cof;
  }
  return RationalFunction(std::move(num), det_bareiss(b));
}

RationalFunction cluster_gf(const PatternSet& patterns) {
  const TransferDigraph d = build_transfer_digraph(patterns);
  std::vector<std::size_t> targets;
  for (std::size_t v = 1; v <= patterns.size(); ++v) targets.push_back(v);
  return walk_generating_function(d.weights, targets);
}

PolyMatrix end_in_adjacency(const PatternSet& patterns,
                            const Permutation& alpha) {
  if (!patterns.index_of(alpha))
    throw Error("end-in pattern " + alpha.str() + " is not in the pattern set");
  const RegistryPtr& reg = patterns.registry();
  const std::size_t t = patterns.size();
  const TransferDigraph d = build_transfer_digraph(patterns);
  PolyMatrix a(reg, t + 2);
  for (std::size_t i = 0; i <= t; ++i)
    for (std::size_t j = 0; j <= t; ++j) a(i, j) = d.weights(i, j);
  a(0, t + 1) = MultiPoly::x(reg, alpha.size());
  for (std::size_t i = 0; i < t; ++i)
    a(i + 1, t + 1) = correlation_poly(patterns[i], alpha, reg);
  return a;
}

RationalFunction cluster_gf_end_in(const PatternSet& patterns,
                                   const Permutation& alpha) {
  const PolyMatrix a = end_in_adjacency(patterns, alpha);
  const std::size_t target[] = {patterns.size() + 1};
  return walk_generating_function(a, target);
}

MultiPoly brute_force_clusters(const PatternSet& patterns, int n, int ceiling) {
  if (n > ceiling) throw CeilingExceeded("brute_force_clusters", n, ceiling);
  const RegistryPtr& reg = patterns.registry();
  MultiPoly total(reg);
  if (n < 2) return total;

  struct Occurrence {
    int start;
    int length;
    std::size_t pattern;
  };
  for_each_permutation(n, [&](std::span<const int> pi) {
    std::vector<Occurrence> occ;
    std::vector<int> cover(n, 0);
    for (std::size_t k = 0; k < patterns.size(); ++k) {
      const auto& tau = patterns[k];
      for (int d = 0; d + tau.size() <= n; ++d) {
        if (!occurs_at(tau.values(), pi, d)) continue;
        occ.push_back({d, tau.size(), k});
        for (int j = d; j < d + tau.size(); ++j) ++cover[j];
      }
    }
    if (std::find(cover.begin(), cover.end(), 0) != cover.end()) return;
    if (occ.size() > 24) throw Error("brute_force_clusters: too many occurrences");

    const std::uint32_t subsets = 1u << occ.size();
    for (std::uint32_t m = 1; m < subsets; ++m) {
      // Every letter covered by a marked occurrence.
      std::vector<bool> covered(n, false);
      for (std::size_t a = 0; a < occ.size(); ++a)
        if (m >> a & 1)
          for (int j = occ[a].start; j < occ[a].start + occ[a].length; ++j)
            covered[j] = true;
      if (std::find(covered.begin(), covered.end(), false) != covered.end())
        continue;
      // Overlap graph on marked occurrences connected: flood from one.
      std::uint32_t reached = m & (~m + 1);
      bool grew = true;
      while (grew) {
        grew = false;
        for (std::size_t a = 0; a < occ.size(); ++a) {
          if (!(m >> a & 1) || (reached >> a & 1)) continue;
          for (std::size_t b = 0; b < occ.size(); ++b) {
            if (!(reached >> b & 1)) continue;
            bool share = occ[a].start < occ[b].start + occ[b].length &&
                         occ[b].start < occ[a].start + occ[a].length;
            if (share) {
              reached |= 1u << a;
              grew = true;
              break;
            }
          }
        }
      }
      if (reached != m) continue;
      Monomial mono(reg->size(), 0);
      for (std::size_t a = 0; a < occ.size(); ++a)
        if (m >> a & 1) ++mono[occ[a].pattern];
      total += MultiPoly::monomial(reg, std::move(mono), 1);
    }
  });
  return total;
}

}  // namespace hertz
