#pragma once

// Linear algebra over a prime field F_q: matrices of residues and subspaces
// held in reduced row echelon form.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qwallach {

using Residue = std::uint32_t;

bool is_prime(std::uint64_t q);

/// Throws std::invalid_argument unless q is a prime below 2^16.
void require_prime_field(std::uint32_t q);

Residue inverse_mod(Residue a, std::uint32_t q);

class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(std::size_t rows, std::size_t cols, std::uint32_t q);

  static FqMatrix identity(std::size_t n, std::uint32_t q);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t q() const { return q_; }

  Residue& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  Residue operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  /// The first `count` rows.
  FqMatrix top_rows(std::size_t count) const;
  /// Rows of *this followed by rows of `below`.
  FqMatrix stacked(const FqMatrix& below) const;

  friend FqMatrix operator*(const FqMatrix& a, const FqMatrix& b);
  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint32_t q_ = 2;
  std::vector<Residue> e_;
};

/// Reduced row echelon form with zero rows removed.
FqMatrix rref(FqMatrix m);
std::size_t rank(const FqMatrix& m);
/// Inverse of a square matrix; throws std::domain_error when singular.
FqMatrix inverse(const FqMatrix& m);

/// Subspace of F_q^n spanned by the rows of its canonical RREF basis.
class Subspace {
 public:
  Subspace() = default;
  /// Span of the rows of `generators`.
  explicit Subspace(const FqMatrix& generators);

  static Subspace zero(std::size_t n, std::uint32_t q);
  static Subspace whole(std::size_t n, std::uint32_t q);

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  const FqMatrix& basis() const { return basis_; }

  /// other is a subspace of *this.
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  FqMatrix basis_;
};

Subspace sum(const Subspace& a, const Subspace& b);
std::size_t intersection_dim(const Subspace& a, const Subspace& b);

}  // namespace qwallach
