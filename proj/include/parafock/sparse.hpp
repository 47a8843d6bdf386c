#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <vector>

#include "parafock/fockspace.hpp"

namespace parafock {

struct MatrixEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  Complex value{};
};

/// Complex sparse matrix in coordinate form, sorted by (col, row) with at
/// most one entry per position (so it doubles as compressed-column storage).
///
/// boundary_rows() holds the basis indices whose image was clipped by the
/// cutoff when the operator was built; algebraic operations propagate the
/// union of their operands' sets.
class SparseOperator {
 public:
  SparseOperator() = default;
  explicit SparseOperator(std::size_t dim);

  /// Sorts, merges duplicate positions by summation and drops exact zeros.
  static SparseOperator from_entries(std::size_t dim, std::vector<MatrixEntry> entries,
                                     std::set<std::size_t> boundary = {});
  static SparseOperator identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  std::span<const MatrixEntry> entries() const noexcept { return entries_; }
  std::span<const MatrixEntry> column(std::size_t col) const;
  const std::set<std::size_t>& boundary_rows() const noexcept { return boundary_; }
  bool is_boundary(std::size_t index) const { return boundary_.contains(index); }

  Complex at(std::size_t row, std::size_t col) const;

  std::vector<Complex> apply(std::span<const Complex> v) const;
  FockVector apply(const FockVector& v) const;

  SparseOperator adjoint() const;

  SparseOperator operator*(const SparseOperator& rhs) const;
  SparseOperator operator+(const SparseOperator& rhs) const;
  SparseOperator operator-(const SparseOperator& rhs) const;
  SparseOperator scaled(Complex s) const;

  /// Largest |entry| over the given columns.
  double max_abs_on_columns(std::span<const std::size_t> cols) const;
  double max_abs() const noexcept;

 private:
  SparseOperator combine(const SparseOperator& rhs, double sign) const;
  void check_dims(const SparseOperator& rhs) const;
  void index_columns();

  std::size_t dim_ = 0;
  std::vector<MatrixEntry> entries_;
  std::vector<std::size_t> col_start_{0};
  std::set<std::size_t> boundary_;
};

inline SparseOperator operator*(Complex s, const SparseOperator& a) { return a.scaled(s); }

}  // namespace parafock
