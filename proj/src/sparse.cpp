#include "parafock/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace parafock {

SparseOperator::SparseOperator(std::size_t dim) : dim_(dim), col_start_(dim + 1, 0) {}

SparseOperator SparseOperator::from_entries(std::size_t dim, std::vector<MatrixEntry> entries,
                                            std::set<std::size_t> boundary) {
  for (const auto& e : entries)
    if (e.row >= dim || e.col >= dim) throw std::out_of_range("matrix entry outside dimension");
  std::sort(entries.begin(), entries.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });

  SparseOperator op(dim);
  op.entries_.reserve(entries.size());
  for (const auto& e : entries) {
    if (!op.entries_.empty() && op.entries_.back().row == e.row && op.entries_.back().col == e.col)
      op.entries_.back().value += e.value;
    else
      op.entries_.push_back(e);
  }
  std::erase_if(op.entries_, [](const MatrixEntry& e) { return e.value == Complex{}; });
  op.boundary_ = std::move(boundary);
  op.index_columns();
  return op;
}

SparseOperator SparseOperator::identity(std::size_t dim) {
  std::vector<MatrixEntry> entries;
  entries.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) entries.push_back({i, i, 1.0});
  return from_entries(dim, std::move(entries));
}

void SparseOperator::index_columns() {
  col_start_.assign(dim_ + 1, 0);
  for (const auto& e : entries_) ++col_start_[e.col + 1];
  for (std::size_t c = 0; c < dim_; ++c) col_start_[c + 1] += col_start_[c];
}

std::span<const MatrixEntry> SparseOperator::column(std::size_t col) const {
  if (col >= dim_) throw std::out_of_range("column index outside dimension");
  return std::span<const MatrixEntry>(entries_).subspan(col_start_[col],
                                                        col_start_[col + 1] - col_start_[col]);
}

Complex SparseOperator::at(std::size_t row, std::size_t col) const {
  auto c = column(col);
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const MatrixEntry& e, std::size_t r) { return e.row < r; });
  return (it != c.end() && it->row == row) ? it->value : Complex{};
}

std::vector<Complex> SparseOperator::apply(std::span<const Complex> v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector size does not match operator");
  std::vector<Complex> out(dim_);
  for (const auto& e : entries_) out[e.row] += e.value * v[e.col];
  return out;
}

FockVector SparseOperator::apply(const FockVector& v) const {
  return FockVector(v.basis(), apply(v.coeffs()));
}

SparseOperator SparseOperator::adjoint() const {
  std::vector<MatrixEntry> t;
  t.reserve(entries_.size());
  for (const auto& e : entries_) t.push_back({e.col, e.row, std::conj(e.value)});
  return from_entries(dim_, std::move(t), boundary_);
}

void SparseOperator::check_dims(const SparseOperator& rhs) const {
  if (rhs.dim_ != dim_) throw std::invalid_argument("operator dimension mismatch");
}

SparseOperator SparseOperator::operator*(const SparseOperator& rhs) const {
  check_dims(rhs);
  std::vector<MatrixEntry> out;
  std::vector<Complex> acc(dim_);
  std::vector<std::size_t> touched;
  std::vector<char> mark(dim_, 0);
  for (std::size_t col = 0; col < dim_; ++col) {
    for (const auto& b : rhs.column(col)) {
      for (const auto& a : column(b.row)) {
        if (!mark[a.row]) {
          mark[a.row] = 1;
          touched.push_back(a.row);
        }
        acc[a.row] += a.value * b.value;
      }
    }
    std::sort(touched.begin(), touched.end());
    for (auto r : touched) {
      out.push_back({r, col, acc[r]});
      acc[r] = {};
      mark[r] = 0;
    }
    touched.clear();
  }
  std::set<std::size_t> boundary = boundary_;
  boundary.insert(rhs.boundary_.begin(), rhs.boundary_.end());
  return from_entries(dim_, std::move(out), std::move(boundary));
}

SparseOperator SparseOperator::combine(const SparseOperator& rhs, double sign) const {
  check_dims(rhs);
  std::vector<MatrixEntry> all(entries_);
  all.reserve(entries_.size() + rhs.entries_.size());
  for (const auto& e : rhs.entries_) all.push_back({e.row, e.col, sign * e.value});
  std::set<std::size_t> boundary = boundary_;
  boundary.insert(rhs.boundary_.begin(), rhs.boundary_.end());
  return from_entries(dim_, std::move(all), std::move(boundary));
}

SparseOperator SparseOperator::operator+(const SparseOperator& rhs) const {
  return combine(rhs, 1.0);
}

SparseOperator SparseOperator::operator-(const SparseOperator& rhs) const {
  return combine(rhs, -1.0);
}

SparseOperator SparseOperator::scaled(Complex s) const {
  std::vector<MatrixEntry> out(entries_);
  for (auto& e : out) e.value *= s;
  return from_entries(dim_, std::move(out), boundary_);
}

double SparseOperator::max_abs_on_columns(std::span<const std::size_t> cols) const {
  double m = 0.0;
  for (auto c : cols)
    for (const auto& e : column(c)) m = std::max(m, std::abs(e.value));
  return m;
}

double SparseOperator::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e.value));
  return m;
}

}  // namespace parafock
