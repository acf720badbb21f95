#include "hertz/poly.hpp"

#include <algorithm>
#include <numeric>

namespace hertz {

Registry::Registry(std::vector<std::string> markers) : names_(std::move(markers)) {
  for (const auto& n : names_)
    if (n == "x") throw Error("registry: marker may not be named x");
  names_.push_back("x");
}

std::shared_ptr<const Registry> Registry::x_only() {
  static const auto reg = std::make_shared<const Registry>(std::vector<std::string>{});
  return reg;
}

std::shared_ptr<const Registry> Registry::make(std::vector<std::string> markers) {
  return std::make_shared<const Registry>(std::move(markers));
}

std::optional<std::size_t> Registry::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool same_registry(const RegistryPtr& a, const RegistryPtr& b) {
  return a == b || *a == *b;
}

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly(RegistryPtr registry) : registry_(std::move(registry)) {}

MultiPoly::MultiPoly(RegistryPtr registry, const Rational& constant)
    : registry_(std::move(registry)) {
  if (constant != 0) terms_.emplace(Monomial(registry_->size(), 0), constant);
}

MultiPoly MultiPoly::variable(RegistryPtr registry, std::size_t index,
                              int power) {
  Monomial m(registry->size(), 0);
  m.at(index) = power;
  return monomial(std::move(registry), std::move(m), 1);
}

MultiPoly MultiPoly::x(RegistryPtr registry, int power) {
  std::size_t xi = registry->x_index();
  return variable(std::move(registry), xi, power);
}

MultiPoly MultiPoly::monomial(RegistryPtr registry, Monomial exponents,
                              const Rational& coefficient) {
  if (exponents.size() != registry->size())
    throw Error("monomial: exponent vector does not match registry");
  MultiPoly p(std::move(registry));
  if (coefficient != 0) p.terms_.emplace(std::move(exponents), coefficient);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

std::optional<Rational> MultiPoly::as_constant() const {
  if (!is_constant()) return std::nullopt;
  return constant_term();
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(Monomial(registry_->size(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& MultiPoly::leading_monomial() const {
  if (terms_.empty()) throw Error("leading monomial of the zero polynomial");
  return terms_.begin()->first;
}

const Rational& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw Error("leading coefficient of the zero polynomial");
  return terms_.begin()->second;
}

int MultiPoly::degree(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

int MultiPoly::total_degree() const {
  return terms_.empty()
             ? -1
             : std::accumulate(terms_.begin()->first.begin(),
                               terms_.begin()->first.end(), 0);
}

int MultiPoly::x_valuation() const {
  if (terms_.empty()) return -1;
  const std::size_t xi = registry_->x_index();
  int v = terms_.begin()->first[xi];
  for (const auto& [m, c] : terms_) v = std::min(v, m[xi]);
  return v;
}

bool MultiPoly::is_x_free() const { return degree(registry_->x_index()) <= 0; }

MultiPoly MultiPoly::x_coefficient(int k) const {
  const std::size_t xi = registry_->x_index();
  MultiPoly out(registry_);
  for (const auto& [m, c] : terms_) {
    if (m[xi] != k) continue;
    Monomial mm = m;
    mm[xi] = 0;
    out.terms_.emplace(std::move(mm), c);
  }
  return out;
}

void MultiPoly::require_compatible(const MultiPoly& other) const {
  if (!same_registry(registry_, other.registry_))
    throw Error("polynomial registries do not match");
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  require_compatible(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  require_compatible(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_compatible(b);
  MultiPoly out(a.registry_);
  if (a.is_zero() || b.is_zero()) return out;
  Monomial m(a.registry_->size());
  Rational prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      out.add_term(m, prod);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw Error("negative polynomial power");
  MultiPoly result(registry_, 1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  if (images.size() != registry_->size())
    throw Error("substitute: need one image per variable");
  const RegistryPtr& target = images.front().registry();
  for (const auto& im : images)
    if (!same_registry(im.registry(), target))
      throw Error("substitute: images must share a registry");

  // Powers of each image, grown on demand.
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power_of = [&](std::size_t var, int e) -> const MultiPoly& {
    auto& cache = powers[var];
    if (cache.empty()) cache.emplace_back(target, 1);
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(cache.back() * images[var]);
    return cache[e];
  };

  MultiPoly out(target);
  for (const auto& [m, c] : terms_) {
    MultiPoly term(target, c);
    for (std::size_t v = 0; v < m.size() && !term.is_zero(); ++v)
      if (m[v] > 0) term *= power_of(v, m[v]);
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::remap(RegistryPtr target,
                           std::span<const std::size_t> index_map) const {
  if (index_map.size() != registry_->size())
    throw Error("remap: need one target index per variable");
  MultiPoly out(target);
  for (const auto& [m, c] : terms_) {
    Monomial mm(target->size(), 0);
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m[v] > 0) mm.at(index_map[v]) += m[v];
    out.add_term(mm, c);
  }
  return out;
}

std::string rational_str(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

namespace {

std::string monomial_str(const Registry& reg, const Monomial& m) {
  std::string out;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += reg.name(v);
    if (m[v] > 1) out += '^' + std::to_string(m[v]);
  }
  return out;
}

}  // namespace

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    const std::string mono = monomial_str(*registry_, m);
    std::string body;
    if (mono.empty())
      body = rational_str(mag);
    else if (mag == 1)
      body = mono;
    else
      body = rational_str(mag) + "*" + mono;
    if (first)
      out = (negative ? "-" : "") + body;
    else
      out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return same_registry(a.registry_, b.registry_) && a.terms_ == b.terms_;
}

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw Error("division by the zero polynomial");
  if (!same_registry(a.registry(), b.registry()))
    throw Error("polynomial registries do not match");
  if (auto c = b.as_constant()) return a * Rational(1 / *c);
  const Monomial& lb = b.leading_monomial();
  const Rational& cb = b.leading_coefficient();
  MultiPoly quotient(a.registry());
  MultiPoly rem = a;
  while (!rem.is_zero()) {
    const Monomial& lr = rem.leading_monomial();
    Monomial q(lr.size());
    for (std::size_t i = 0; i < lr.size(); ++i) {
      q[i] = lr[i] - lb[i];
      if (q[i] < 0) throw Error("exact_divide: divisor does not divide dividend");
    }
    MultiPoly t = MultiPoly::monomial(a.registry(), std::move(q),
                                      rem.leading_coefficient() / cb);
    quotient += t;
    rem -= t * b;
  }
  return quotient;
}

std::vector<MultiPoly> shift_markers_images(const RegistryPtr& reg,
                                            const Rational& delta) {
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < reg->size(); ++i) {
    MultiPoly im = MultiPoly::variable(reg, i);
    if (i != reg->x_index()) im += MultiPoly(reg, delta);
    images.push_back(std::move(im));
  }
  return images;
}

std::vector<MultiPoly> constant_markers_images(const RegistryPtr& reg,
                                               const Rational& value) {
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < reg->size(); ++i)
    images.push_back(i == reg->x_index() ? MultiPoly::variable(reg, i)
                                         : MultiPoly(reg, value));
  return images;
}

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("rational function with zero denominator");
  if (!same_registry(num_.registry(), den_.registry()))
    throw Error("polynomial registries do not match");
  if (den_.leading_coefficient() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction::RationalFunction(MultiPoly num)
    : RationalFunction(num, MultiPoly(num.registry(), 1)) {}

RationalFunction RationalFunction::substitute(
    std::span<const MultiPoly> images) const {
  return RationalFunction(num_.substitute(images), den_.substitute(images));
}

RationalFunction operator+(const RationalFunction& a,
                           const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a,
                           const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

std::string RationalFunction::str() const {
  if (auto c = den_.as_constant(); c && *c == 1) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

}  // namespace hertz
