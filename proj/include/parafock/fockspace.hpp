#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace parafock {

using Complex = std::complex<double>;

/// Gelfand-Zetlin triple |m12, m22; m11) labelling one orthonormal basis
/// vector of the paraboson Fock space V(p).
struct GZPattern {
  int m12 = 0;
  int m22 = 0;
  int m11 = 0;

  /// Partition of length <= 2 with m11 between its parts.
  constexpr bool valid() const noexcept {
    return m22 >= 0 && m12 >= m22 && m12 >= m11 && m11 >= m22;
  }
  constexpr int degree() const noexcept { return m12 + m22; }

  friend constexpr bool operator==(const GZPattern&, const GZPattern&) = default;
};

/// Eigenvalues of h1 and h2.
struct Weight {
  double w1 = 0.0;
  double w2 = 0.0;
};

struct ParityIndicators {
  int even = 0;
  int odd = 0;
};

// Parity is taken mod 2, so negative arguments are accepted.
constexpr int even_indicator(long n) noexcept { return n % 2 == 0 ? 1 : 0; }
constexpr int odd_indicator(long n) noexcept { return 1 - even_indicator(n); }

constexpr ParityIndicators parity_indicators(long n) noexcept {
  return {even_indicator(n), odd_indicator(n)};
}

Weight weight_of(const GZPattern& m, double p) noexcept;

/// Truncated Gelfand-Zetlin basis: every pattern with m12 <= cutoff.
///
/// Patterns are ordered by degree m12 + m22, then m12, then m11, so weight
/// spaces occupy contiguous runs. Immutable after construction.
class FockBasis {
 public:
  /// Throws std::invalid_argument for p <= 1 or a negative cutoff.
  FockBasis(double p, int cutoff);

  double p() const noexcept { return p_; }
  int cutoff() const noexcept { return cutoff_; }
  std::size_t size() const noexcept { return patterns_.size(); }
  std::span<const GZPattern> patterns() const noexcept { return patterns_; }
  const GZPattern& operator[](std::size_t i) const { return patterns_.at(i); }

  std::optional<std::size_t> find(const GZPattern& m) const noexcept;
  bool contains(const GZPattern& m) const noexcept { return find(m).has_value(); }
  /// Throws std::out_of_range when the pattern is invalid or beyond the cutoff.
  std::size_t index_of(const GZPattern& m) const;

  /// Indices whose degree is at most cutoff - depth; an identity built from
  /// `depth` generator applications is free of clipping on these columns.
  std::vector<std::size_t> interior(int depth) const;

  /// Indices of the patterns of weight (p/2 + j, p/2 + k), i.e. m11 = j and
  /// m12 + m22 = j + k. Throws std::out_of_range if j + k exceeds the cutoff.
  std::vector<std::size_t> weight_block(int j, int k) const;

 private:
  double p_;
  int cutoff_;
  std::vector<GZPattern> patterns_;
  // Position of (m12, m22, m22) for each partition, indexed by m12(m12+1)/2 + m22;
  // a partition's patterns are contiguous in m11.
  std::vector<std::size_t> partition_start_;
};

FockBasis enumerate_basis(double p, int cutoff);

/// Closed-form basis size, sum over partitions of (m12 - m22 + 1).
std::size_t basis_size(int cutoff) noexcept;

/// Dense complex coefficient vector over a FockBasis. The basis must outlive
/// the vector.
class FockVector {
 public:
  explicit FockVector(const FockBasis& basis);
  FockVector(const FockBasis& basis, std::vector<Complex> coeffs);

  const FockBasis& basis() const noexcept { return *basis_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  Complex& operator[](std::size_t i) { return coeffs_[i]; }
  const Complex& operator[](std::size_t i) const { return coeffs_[i]; }
  Complex& at(const GZPattern& m) { return coeffs_[basis_->index_of(m)]; }
  Complex at(const GZPattern& m) const { return coeffs_[basis_->index_of(m)]; }

  std::span<Complex> coeffs() noexcept { return coeffs_; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  double norm() const noexcept;
  /// <this|other>, antilinear in this.
  Complex dot(const FockVector& other) const;

  FockVector& operator+=(const FockVector& other);
  FockVector& operator-=(const FockVector& other);
  FockVector& operator*=(Complex s) noexcept;

 private:
  void check_compatible(const FockVector& other) const;

  const FockBasis* basis_;
  std::vector<Complex> coeffs_;
};

inline FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
inline FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
inline FockVector operator*(Complex s, FockVector v) { return v *= s; }

}  // namespace parafock
