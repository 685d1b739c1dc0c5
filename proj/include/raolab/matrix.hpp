#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "raolab/field.hpp"

namespace raolab {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over a prime field. Values are immutable from the
/// point of view of the rank/kernel routines, which eliminate on a copy.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  FieldMatrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Fp> entries);

  static FieldMatrix identity(FieldSpec field, std::size_t n);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Fp operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Fp& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::span<const Fp> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<Fp> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  const std::vector<Fp>& entries() const { return data_; }

  FieldMatrix transpose() const;
  FieldMatrix column(std::size_t j) const;

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fp> data_;
};

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);

/// [A | B]; row counts must agree.
FieldMatrix hconcat(const FieldMatrix& a, const FieldMatrix& b);
/// [A ; B]; column counts must agree.
FieldMatrix vconcat(const FieldMatrix& a, const FieldMatrix& b);

std::size_t rank(const FieldMatrix& m);
std::size_t kernel_dimension(const FieldMatrix& m);
/// dim(im A + im B) = rank [A | B].
std::size_t image_sum_dimension(const FieldMatrix& a, const FieldMatrix& b);

/// Columns form a basis of { x : M x = 0 }.
FieldMatrix nullspace(const FieldMatrix& m);
/// Rows form a basis of { y : y M = 0 }.
FieldMatrix left_nullspace(const FieldMatrix& m);
/// Columns form a basis of the column space of M (a subset of M's columns).
FieldMatrix column_basis(const FieldMatrix& m);

/// Some solution of M x = b, if the system is consistent.
std::optional<std::vector<Fp>> solve(const FieldMatrix& m, std::span<const Fp> b);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(FieldMatrix& m);

}  // namespace raolab
