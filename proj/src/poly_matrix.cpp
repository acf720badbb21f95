#include "hertz/poly_matrix.hpp"

#include <utility>

namespace hertz {

PolyMatrix::PolyMatrix(RegistryPtr registry, std::size_t dim)
    : registry_(std::move(registry)),
      dim_(dim),
      entries_(dim * dim, MultiPoly(registry_)) {}

PolyMatrix PolyMatrix::identity(RegistryPtr registry, std::size_t dim) {
  PolyMatrix m(std::move(registry), dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = MultiPoly(m.registry_, 1);
  return m;
}

PolyMatrix PolyMatrix::minor(std::size_t i, std::size_t j) const {
  if (i < 1 || i > dim_ || j < 1 || j > dim_)
    throw Error("minor: index out of range");
  PolyMatrix out(registry_, dim_ - 1);
  for (std::size_t r = 0, rr = 0; r < dim_; ++r) {
    if (r == i - 1) continue;
    for (std::size_t c = 0, cc = 0; c < dim_; ++c) {
      if (c == j - 1) continue;
      out(rr, cc) = (*this)(r, c);
      ++cc;
    }
    ++rr;
  }
  return out;
}

PolyMatrix PolyMatrix::substitute(std::span<const MultiPoly> images) const {
  PolyMatrix out(images.front().registry(), dim_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    out.entries_[k] = entries_[k].substitute(images);
  return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.dim_ != b.dim_) throw Error("matrix dimensions differ");
  PolyMatrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k)
    out.entries_[k] -= b.entries_[k];
  return out;
}

std::string PolyMatrix::str() const {
  std::string out;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      if (c) out += " | ";
      out += (*this)(r, c).str();
    }
    out += '\n';
  }
  return out;
}

MultiPoly det_bareiss(const PolyMatrix& m) {
  const std::size_t n = m.dim();
  if (n > kMaxDeterminantDim)
    throw Error("det_bareiss: dimension " + std::to_string(n) +
                " exceeds " + std::to_string(kMaxDeterminantDim));
  if (n == 0) return MultiPoly(m.registry(), 1);

  std::vector<std::vector<MultiPoly>> a(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r].push_back(m(r, c));

  bool negate = false;
  MultiPoly prev_pivot(m.registry(), 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return MultiPoly(m.registry());
      std::swap(a[k], a[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = exact_divide(t, prev_pivot);
      }
      a[i][k] = MultiPoly(m.registry());
    }
    prev_pivot = a[k][k];
  }
  MultiPoly det = a[n - 1][n - 1];
  return negate ? -det : det;
}

}  // namespace hertz
