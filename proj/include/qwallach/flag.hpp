#pragma once

// Complete flags in F_q^n and their relative position.
//
// A flag is stored canonically: its steps V_k as RREF subspaces, together
// with an adapted basis v_1..v_n (V_k = span(v_1..v_k)) in which v_{k+1} is
// reduced against the pivots of V_k and scaled to a leading 1. Two Flag
// values are equal iff they are the same flag.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qwallach/fq.hpp"
#include "qwallach/perm.hpp"
#include "qwallach/poly.hpp"

namespace qwallach {

inline constexpr std::size_t kDefaultFlagBudget = 20000;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Flag {
 public:
  /// Flag whose k-th step is spanned by the first k rows of `basis`, an
  /// invertible n x n matrix. Throws std::domain_error if singular.
  static Flag from_basis(const FqMatrix& basis);
  /// span(e_1) < span(e_1, e_2) < ...
  static Flag standard(int n, std::uint32_t q);

  int n() const { return static_cast<int>(basis_.rows()); }
  std::uint32_t q() const { return basis_.q(); }

  /// V_k for k in [0, n].
  const Subspace& step(int k) const { return steps_.at(static_cast<std::size_t>(k)); }
  /// Canonical adapted basis, row k-1 is v_k.
  const FqMatrix& adapted_basis() const { return basis_; }
  /// Inverse of adapted_basis(); row vectors times it give coordinates in v_1..v_n.
  const FqMatrix& coordinate_map() const { return coords_; }

  friend bool operator==(const Flag& a, const Flag& b) { return a.basis_ == b.basis_; }

 private:
  Flag() = default;

  FqMatrix basis_;
  FqMatrix coords_;
  std::vector<Subspace> steps_;
};

/// [n]_q! = prod_{k=1}^{n} [k]_q evaluated at q.
BigInt flag_count(int n, std::uint32_t q);

/// Every complete flag of F_q^n exactly once, in a deterministic order.
/// Throws BudgetExceeded if the flag count exceeds `budget`.
std::vector<Flag> enumerate_flags(int n, std::uint32_t q,
                                  std::size_t budget = kDefaultFlagBudget);

/// The GL-orbit label of (W, V): the permutation w with w(i) = j exactly
/// where dim(W_i n V_j) jumps, i.e.
///   d(i,j) - d(i-1,j) - d(i,j-1) + d(i-1,j-1) = 1,  d(i,j) = dim(W_i n V_j).
/// Computed by echelon reduction of W's basis in V's coordinates.
Perm relative_position(const Flag& W, const Flag& V);

/// Same label computed from the intersection-dimension table directly.
Perm relative_position_by_dimensions(const Flag& W, const Flag& V);

/// Orbit label of a pair given W's adapted basis in V's coordinates (row i
/// holds the coordinates of w_i). n <= Perm::kMaxN.
Perm position_from_coordinates(const FqMatrix& coords);

/// g . F for g in GL_n(F_q), acting on row vectors from the right (v -> v g).
Flag act(const FqMatrix& g, const Flag& flag);

}  // namespace qwallach
