#include "hertz/perm.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>

namespace hertz {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n || seen[v])
      throw Error("not a permutation of 1.." + std::to_string(n));
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::reverse_identity(int n) {
  return identity(n).reversed();
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  if (text.find(',') == std::string_view::npos) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (c < '1' || c > '9')
        throw ParseError(std::string("unexpected character '") + c +
                             "' in permutation",
                         0, i + 1);
      values.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string_view::npos) comma = text.size();
      std::string_view tok = text.substr(pos, comma - pos);
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("expected a positive integer", 0, pos + 1);
      values.push_back(v);
      pos = comma + 1;
    }
  }
  const int n = static_cast<int>(values.size());
  std::vector<bool> seen(n + 1, false);
  for (std::size_t i = 0; i < values.size(); ++i) {
    int v = values[i];
    if (v < 1 || v > n || seen[v])
      throw ParseError("value " + std::to_string(v) +
                           " breaks the bijection onto 1.." + std::to_string(n),
                       0, i + 1);
    seen[v] = true;
  }
  return Permutation(std::move(values));
}

Permutation Permutation::reversed() const {
  std::vector<int> v(values_.rbegin(), values_.rend());
  return Permutation(std::move(v));
}

Permutation Permutation::complemented() const {
  std::vector<int> v(values_);
  for (int& x : v) x = size() + 1 - x;
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(values_.size());
  for (int i = 0; i < size(); ++i) v[values_[i] - 1] = i + 1;
  return Permutation(std::move(v));
}

std::string Permutation::str() const {
  std::string out;
  if (size() <= 9) {
    for (int v : values_) out.push_back(static_cast<char>('0' + v));
    return out;
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(values_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.str();
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : p) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
  return h;
}

Permutation standardize(std::span<const int> word) {
  std::vector<std::size_t> order(word.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return word[a] < word[b]; });
  std::vector<int> out(word.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && word[order[r]] == word[order[r - 1]])
      throw Error("standardize: letters must be distinct");
    out[order[r]] = static_cast<int>(r) + 1;
  }
  return Permutation(std::move(out));
}

bool occurs_at(std::span<const int> pattern, std::span<const int> host,
               std::size_t start) {
  if (start + pattern.size() > host.size()) return false;
  if (pattern.empty()) return true;
  const int shift = host[start] - pattern[0];
  for (std::size_t i = 1; i < pattern.size(); ++i)
    if (host[start + i] - pattern[i] != shift) return false;
  return true;
}

std::vector<std::size_t> find_occurrences(const Permutation& pattern,
                                          const Permutation& host) {
  std::vector<std::size_t> out;
  if (pattern.size() > host.size()) return out;
  for (std::size_t d = 0; d + pattern.size() <= host.values().size(); ++d)
    if (occurs_at(pattern.values(), host.values(), d)) out.push_back(d + 1);
  return out;
}

std::size_t count_occurrences(std::span<const int> pattern,
                              std::span<const int> host) {
  std::size_t count = 0;
  if (pattern.size() > host.size()) return 0;
  for (std::size_t d = 0; d + pattern.size() <= host.size(); ++d)
    if (occurs_at(pattern, host, d)) ++count;
  return count;
}

bool is_factor(const Permutation& pattern, const Permutation& host) {
  return count_occurrences(pattern.values(), host.values()) > 0;
}

bool avoids(const Permutation& host, std::span<const Permutation> patterns) {
  return std::none_of(patterns.begin(), patterns.end(),
                      [&](const Permutation& p) { return is_factor(p, host); });
}

Permutation inflate(const Permutation& outer,
                    std::span<const Permutation> parts) {
  if (static_cast<int>(parts.size()) != outer.size())
    throw Error("inflate: " + std::to_string(parts.size()) +
                " parts for an outer permutation of length " +
                std::to_string(outer.size()));
  for (const auto& p : parts)
    if (p.empty()) throw Error("inflate: parts must be nonempty");

  // Offset of the slot holding value v of `outer` is the total size of the
  // slots holding values 1..v-1.
  const Permutation inv = outer.inverse();
  std::vector<int> offset(outer.size());
  int running = 0;
  for (int v = 1; v <= outer.size(); ++v) {
    int slot = inv[v - 1] - 1;
    offset[slot] = running;
    running += parts[slot].size();
  }
  std::vector<int> out;
  out.reserve(running);
  for (int slot = 0; slot < outer.size(); ++slot)
    for (int v : parts[slot]) out.push_back(v + offset[slot]);
  return Permutation(std::move(out));
}

std::uint64_t factorial_u64(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t rank(std::span<const int> perm) {
  const int n = static_cast<int>(perm.size());
  std::uint64_t r = 0;
  std::uint32_t used = 0;
  for (int i = 0; i < n; ++i) {
    int v = perm[i];
    int smaller_unused = v - 1 - std::popcount(used & ((1u << v) - 2u));
    r = r * static_cast<std::uint64_t>(n - i) + smaller_unused;
    used |= 1u << v;
  }
  return r;
}

Permutation unrank(int n, std::uint64_t r) {
  std::vector<int> digits(n);
  for (int i = n - 1; i >= 0; --i) {
    std::uint64_t base = static_cast<std::uint64_t>(n - i);
    digits[i] = static_cast<int>(r % base);
    r /= base;
  }
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) {
    out[i] = pool[digits[i]];
    pool.erase(pool.begin() + digits[i]);
  }
  return Permutation(std::move(out));
}

PermutationStream::PermutationStream(int n, int ceiling) {
  if (n < 0) throw Error("PermutationStream: negative length");
  if (n > ceiling) throw CeilingExceeded("enumerate_permutations", n, ceiling);
  current_.resize(n);
  std::iota(current_.begin(), current_.end(), 1);
}

void PermutationStream::advance() {
  if (!done_) done_ = !std::next_permutation(current_.begin(), current_.end());
}

std::vector<Permutation> all_permutations(int n, int ceiling) {
  std::vector<Permutation> out;
  for_each_permutation(
      n, [&](std::span<const int> p) {
        out.emplace_back(std::vector<int>(p.begin(), p.end()));
      },
      ceiling);
  return out;
}

}  // namespace hertz
