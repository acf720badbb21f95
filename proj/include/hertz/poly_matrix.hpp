#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hertz/poly.hpp"

namespace hertz {

/// Dense square matrix of polynomials over one registry.
class PolyMatrix {
 public:
  PolyMatrix(RegistryPtr registry, std::size_t dim);

  static PolyMatrix identity(RegistryPtr registry, std::size_t dim);

  std::size_t dim() const { return dim_; }
  const RegistryPtr& registry() const { return registry_; }

  /// Zero-based element access.
  MultiPoly& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }
  const MultiPoly& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  /// Deletes row i and column j, both 1-based as in cofactor notation.
  PolyMatrix minor(std::size_t i, std::size_t j) const;

  PolyMatrix substitute(std::span<const MultiPoly> images) const;

  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

  /// One row per line, entries separated by " | ".
  std::string str() const;

 private:
  RegistryPtr registry_;
  std::size_t dim_;
  std::vector<MultiPoly> entries_;
};

inline constexpr std::size_t kMaxDeterminantDim = 16;

/// Fraction-free (Bareiss) determinant. The 0x0 determinant is 1.
MultiPoly det_bareiss(const PolyMatrix& m);

}  // namespace hertz
