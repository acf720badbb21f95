#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hertz/error.hpp"

namespace hertz {

using Integer = mpz_class;
using Rational = mpq_class;

/// Ordered variable names of a polynomial ring. The last variable is always
/// the length variable "x"; the ones before it are markers.
class Registry {
 public:
  explicit Registry(std::vector<std::string> markers);

  /// Shared registry holding only x.
  static std::shared_ptr<const Registry> x_only();
  static std::shared_ptr<const Registry> make(std::vector<std::string> markers);

  std::size_t size() const { return names_.size(); }
  std::size_t marker_count() const { return names_.size() - 1; }
  std::size_t x_index() const { return names_.size() - 1; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> find(std::string_view name) const;

  friend bool operator==(const Registry& a, const Registry& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
};

using RegistryPtr = std::shared_ptr<const Registry>;

bool same_registry(const RegistryPtr& a, const RegistryPtr& b);

using Monomial = std::vector<int>;

/// Graded lexicographic order, greatest first: higher total degree wins,
/// ties broken lexicographically in registry order (markers, then x).
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients. No zero
/// coefficient is ever stored.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rational, GradedLexGreater>;

  explicit MultiPoly(RegistryPtr registry);
  MultiPoly(RegistryPtr registry, const Rational& constant);

  static MultiPoly variable(RegistryPtr registry, std::size_t index,
                            int power = 1);
  static MultiPoly x(RegistryPtr registry, int power = 1);
  static MultiPoly monomial(RegistryPtr registry, Monomial exponents,
                            const Rational& coefficient);

  const RegistryPtr& registry() const { return registry_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<Rational> as_constant() const;
  Rational constant_term() const;

  /// Requires a nonzero polynomial.
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  int degree(std::size_t var) const;
  int total_degree() const;
  /// Smallest x exponent among the terms; -1 for the zero polynomial.
  int x_valuation() const;
  bool is_x_free() const;

  /// The marker polynomial multiplying x^k.
  MultiPoly x_coefficient(int k) const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;

  MultiPoly pow(int e) const;

  /// Simultaneous substitution: variable i is replaced by images[i]. All
  /// images must share one registry, which becomes the registry of the
  /// result.
  MultiPoly substitute(std::span<const MultiPoly> images) const;

  /// Moves the polynomial into `target`, sending variable i to variable
  /// index_map[i] of the target registry.
  MultiPoly remap(RegistryPtr target,
                  std::span<const std::size_t> index_map) const;

  /// Canonical rendering: graded-lex descending, "^" powers, "*" products.
  std::string str() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  void require_compatible(const MultiPoly& other) const;
  void add_term(const Monomial& m, const Rational& c);

  RegistryPtr registry_;
  Terms terms_;
};

std::string rational_str(const Rational& q);

/// Exact quotient a/b. Throws hertz::Error when b does not divide a.
MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);

/// Images for substitute(): every marker u maps to u + delta, x is fixed.
std::vector<MultiPoly> shift_markers_images(const RegistryPtr& reg,
                                            const Rational& delta);
/// Images for substitute(): every marker maps to the constant value.
std::vector<MultiPoly> constant_markers_images(const RegistryPtr& reg,
                                               const Rational& value);

/// Fraction num/den kept as produced (no gcd reduction). The denominator is
/// sign-normalized so that its graded-lex leading coefficient is positive.
class RationalFunction {
 public:
  RationalFunction(MultiPoly num, MultiPoly den);
  explicit RationalFunction(MultiPoly num);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  const RegistryPtr& registry() const { return num_.registry(); }

  RationalFunction substitute(std::span<const MultiPoly> images) const;

  friend RationalFunction operator+(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a,
                                    const RationalFunction& b);

  std::string str() const;

  /// Cross-multiplication equality.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

 private:
  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace hertz
