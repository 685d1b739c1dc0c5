#include "raolab/matrix.hpp"

#include <string>
#include <utility>

namespace raolab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldMatrix::FieldMatrix(FieldSpec field, std::size_t rows, std::size_t cols,
                         std::vector<Fp> entries)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw DimensionMismatch("entry count " + std::to_string(data_.size()) + " != " +
                            std::to_string(rows) + "x" + std::to_string(cols));
  }
  for (auto& v : data_) v %= field.p();
}

FieldMatrix FieldMatrix::identity(FieldSpec field, std::size_t n) {
  FieldMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

FieldMatrix FieldMatrix::column(std::size_t j) const {
  FieldMatrix c(field_, rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
  return c;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product: inner dimensions differ");
  const auto& f = a.field();
  const std::uint64_t p = f.p();
  FieldMatrix c(f, a.rows(), b.cols());
  std::vector<std::uint64_t> acc(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t aik = a(i, k);
      if (aik == 0) continue;
      auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) {
        acc[j] = (acc[j] + aik * brow[j]) % p;
      }
    }
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = static_cast<Fp>(acc[j]);
  }
  return c;
}

FieldMatrix hconcat(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows() != b.rows()) {
    throw DimensionMismatch("hconcat: row counts " + std::to_string(a.rows()) + " and " +
                            std::to_string(b.rows()) + " differ");
  }
  FieldMatrix c(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = c.row(i);
    std::copy(a.row(i).begin(), a.row(i).end(), dst.begin());
    std::copy(b.row(i).begin(), b.row(i).end(), dst.begin() + a.cols());
  }
  return c;
}

FieldMatrix vconcat(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw DimensionMismatch("vconcat: column counts differ");
  std::vector<Fp> e = a.entries();
  e.insert(e.end(), b.entries().begin(), b.entries().end());
  return FieldMatrix(a.field(), a.rows() + b.rows(), a.cols(), std::move(e));
}

std::vector<std::size_t> row_reduce(FieldMatrix& m) {
  const auto& f = m.field();
  const std::uint64_t p = f.p();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      auto a = m.row(piv), b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto prow = m.row(r);
    const std::uint64_t inv = f.inv(prow[c]);
    for (std::size_t j = c; j < m.cols(); ++j) prow[j] = static_cast<Fp>(prow[j] * inv % p);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      auto irow = m.row(i);
      const Fp a = irow[c];
      if (a == 0) continue;
      const std::uint64_t na = p - a;
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (prow[j]) irow[j] = static_cast<Fp>((irow[j] + na * prow[j]) % p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const FieldMatrix& m) {
  if (m.empty()) return 0;
  // Eliminate along the shorter side.
  FieldMatrix w = m.rows() <= m.cols() ? m : m.transpose();
  const auto& f = w.field();
  const std::uint64_t p = f.p();
  std::size_t r = 0;
  for (std::size_t c = 0; c < w.cols() && r < w.rows(); ++c) {
    std::size_t piv = r;
    while (piv < w.rows() && w(piv, c) == 0) ++piv;
    if (piv == w.rows()) continue;
    if (piv != r) {
      auto a = w.row(piv), b = w.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto prow = w.row(r);
    const std::uint64_t inv = f.inv(prow[c]);
    for (std::size_t j = c; j < w.cols(); ++j) prow[j] = static_cast<Fp>(prow[j] * inv % p);
    for (std::size_t i = r + 1; i < w.rows(); ++i) {
      auto irow = w.row(i);
      const Fp a = irow[c];
      if (a == 0) continue;
      const std::uint64_t na = p - a;
      for (std::size_t j = c; j < w.cols(); ++j) {
        if (prow[j]) irow[j] = static_cast<Fp>((irow[j] + na * prow[j]) % p);
      }
    }
    ++r;
  }
  return r;
}

std::size_t kernel_dimension(const FieldMatrix& m) { return m.cols() - rank(m); }

std::size_t image_sum_dimension(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows() != b.rows()) {
    throw DimensionMismatch("image_sum_dimension: row counts " + std::to_string(a.rows()) +
                            " and " + std::to_string(b.rows()) + " differ");
  }
  return rank(hconcat(a, b));
}

FieldMatrix nullspace(const FieldMatrix& m) {
  FieldMatrix w = m;
  const auto pivots = row_reduce(w);
  const auto& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  const std::size_t dim = m.cols() - pivots.size();
  FieldMatrix basis(f, m.cols(), dim);
  std::size_t k = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = f.neg(w(i, free));
    ++k;
  }
  return basis;
}

FieldMatrix left_nullspace(const FieldMatrix& m) { return nullspace(m.transpose()).transpose(); }

FieldMatrix column_basis(const FieldMatrix& m) {
  FieldMatrix w = m;
  const auto pivots = row_reduce(w);
  FieldMatrix b(m.field(), m.rows(), pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) b(i, k) = m(i, pivots[k]);
  return b;
}

std::optional<std::vector<Fp>> solve(const FieldMatrix& m, std::span<const Fp> b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve: right-hand side length");
  FieldMatrix rhs(m.field(), m.rows(), 1, std::vector<Fp>(b.begin(), b.end()));
  FieldMatrix aug = hconcat(m, rhs);
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<Fp> x(m.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

}  // namespace raolab
