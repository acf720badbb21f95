#include "hertz/conjecture.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "hertz/cluster.hpp"
#include "hertz/distribution.hpp"
#include "hertz/series.hpp"

namespace hertz {

WilfClasses wilf_autocorrelation_classes(int k, int ceiling) {
  if (k > ceiling) throw CeilingExceeded("wilf_autocorrelation_classes", k, ceiling);
  if (k < 0) throw Error("wilf_autocorrelation_classes: negative k");
  std::set<std::uint64_t> masks;
  for_each_permutation(k, [&](std::span<const int> s) {
    masks.insert(correlation_mask(s, s));
  }, ceiling);
  WilfClasses out;
  out.k = k;
  auto reg = Registry::x_only();
  for (std::uint64_t m : masks) {
    MultiPoly p(reg);
    for (int e = 0; e < 64; ++e)
      if (m >> e & 1) p += MultiPoly::x(reg, e);
    out.polynomials.push_back(std::move(p));
    out.masks.push_back(m);
  }
  return out;
}

std::vector<int> palindrome_prefix_set(std::string_view word) {
  std::vector<int> out;
  for (std::size_t i = 1; i <= word.size(); ++i) {
    std::string_view prefix = word.substr(0, i);
    if (std::equal(prefix.begin(), prefix.begin() + i / 2, prefix.rbegin()))
      out.push_back(static_cast<int>(i));
  }
  return out;
}

std::uint64_t palindrome_prefix_count(int k, int ceiling) {
  if (k > ceiling) throw CeilingExceeded("palindrome_prefix_count", k, ceiling);
  if (k < 0) throw Error("palindrome_prefix_count: negative k");
  if (k == 0) return 1;
  const int free_bits = (k + 1) / 2;
  std::set<std::uint32_t> sets;
  std::string w(k, '0');
  for (std::uint32_t bits = 0; bits < (1u << free_bits); ++bits) {
    for (int i = 0; i < free_bits; ++i) {
      w[i] = (bits >> i & 1) ? '1' : '0';
      w[k - 1 - i] = w[i];
    }
    std::uint32_t set = 0;
    for (int len : palindrome_prefix_set(w)) set |= 1u << (len - 1);
    sets.insert(set);
  }
  return sets.size();
}

std::vector<ConjectureOneRow> check_conjecture_one(int kmax, int ceiling) {
  if (kmax > ceiling) throw CeilingExceeded("check_conjecture_one", kmax, ceiling);
  std::vector<ConjectureOneRow> rows;
  for (int k = 3; k <= kmax; ++k)
    rows.push_back({k, wilf_autocorrelation_classes(k, ceiling).count(),
                    palindrome_prefix_count(k + 1)});
  return rows;
}

namespace {

std::vector<Integer> avoider_counts(const Permutation& tau, int nmax) {
  return *avoider_series(PatternSet({tau}), nmax).integers();
}

}  // namespace

BonaReport check_bona(int k, int nmax) {
  if (k > kBonaMaxK) throw CeilingExceeded("check_bona k", k, kBonaMaxK);
  if (nmax > kBonaMaxN) throw CeilingExceeded("check_bona nmax", nmax, kBonaMaxN);
  if (k < 2) throw Error("check_bona: k must be at least 2");
  if (nmax < 0) throw Error("check_bona: negative nmax");
  BonaReport out;
  out.k = k;
  out.nmax = nmax;
  out.id_counts = avoider_counts(Permutation::identity(k), nmax);
  // Avoider counts depend only on the autocorrelation polynomial.
  std::map<std::uint64_t, std::vector<Integer>> by_mask;
  for (PermutationStream s(k); !s.done(); s.advance()) {
    const Permutation tau = s.current();
    ++out.patterns_checked;
    const std::uint64_t mask = correlation_mask(tau.values(), tau.values());
    auto it = by_mask.find(mask);
    if (it == by_mask.end()) it = by_mask.emplace(mask, avoider_counts(tau, nmax)).first;
    for (int n = 0; n <= nmax; ++n)
      if (it->second[n] > out.id_counts[n])
        out.violations.push_back({tau, n, it->second[n], out.id_counts[n]});
  }
  return out;
}

MeshPattern mesh_p() {
  return {Permutation{1, 3, 2},
          {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 0}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}};
}

bool contains_mesh(const MeshPattern& p, std::span<const int> pi) {
  const int k = p.pattern.size();
  const int n = static_cast<int>(pi.size());
  if (k > n) return false;
  std::vector<int> pos(k);
  std::vector<int> vals(k);
  // Enumerate increasing position tuples.
  for (int i = 0; i < k; ++i) pos[i] = i;
  while (true) {
    for (int i = 0; i < k; ++i) vals[i] = pi[pos[i]];
    bool iso = true;
    for (int i = 0; i < k && iso; ++i)
      for (int j = i + 1; j < k && iso; ++j)
        iso = (vals[i] < vals[j]) == (p.pattern[i] < p.pattern[j]);
    if (iso) {
      // Sorted values give the row boundaries.
      std::vector<int> sorted = vals;
      std::sort(sorted.begin(), sorted.end());
      bool ok = true;
      for (auto [a, b] : p.shaded) {
        const int lo_pos = a == 0 ? -1 : pos[a - 1];
        const int hi_pos = a == k ? n : pos[a];
        const int lo_val = b == 0 ? 0 : sorted[b - 1];
        const int hi_val = b == k ? n + 1 : sorted[b];
        for (int q = lo_pos + 1; q < hi_pos && ok; ++q)
          if (pi[q] > lo_val && pi[q] < hi_val) ok = false;
        if (!ok) break;
      }
      if (ok) return true;
    }
    int i = k - 1;
    while (i >= 0 && pos[i] == n - k + i) --i;
    if (i < 0) return false;
    ++pos[i];
    for (int j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
}

bool contains_mesh_p(std::span<const int> pi) {
  const std::size_t n = pi.size();
  int m = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (i > 0 && pi[i] > pi[i + 1] && pi[i + 1] > m) {
      bool clear = true;
      for (std::size_t q = i + 2; q < n && clear; ++q)
        clear = !(pi[q] > m && pi[q] < pi[i]);
      if (clear) return true;
    }
    m = std::max(m, pi[i]);
  }
  return false;
}

Integer mesh_p_count(int n, int ceiling) {
  if (n > ceiling) throw CeilingExceeded("mesh_p_count", n, ceiling);
  if (n < 0) throw Error("mesh_p_count: negative n");
  std::uint64_t count = 0;
  for_each_permutation(n, [&](std::span<const int> pi) {
    if (!contains_mesh_p(pi)) ++count;
  }, ceiling);
  return Integer(static_cast<unsigned long>(count));
}

std::vector<MeshSeriesRow> mesh_p_series_check(int nmax, int ceiling) {
  if (nmax > ceiling) throw CeilingExceeded("mesh_p_series_check", nmax, ceiling);
  auto reg = Registry::x_only();
  const MultiPoly one(reg, 1);
  const auto predicted =
      *fsum_rational(RationalFunction(MultiPoly::x(reg), one + MultiPoly::x(reg, 2)),
                     nmax)
           .integers();
  std::vector<MeshSeriesRow> rows;
  for (int n = 0; n <= nmax; ++n)
    rows.push_back({n, mesh_p_count(n, ceiling), predicted[n]});
  return rows;
}

}  // namespace hertz
