#pragma once

// Eigenvalue multiplicities of left multiplication by tau, computed from
// exact ranks at integer specializations of q.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qwallach/matrix.hpp"
#include "qwallach/poly.hpp"
#include "qwallach/report.hpp"

namespace qwallach {

/// Exact rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank(IntMatrix m);

/// Rank of m reduced modulo the prime p (p < 2^63). Never exceeds rank(m).
std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p);

class EigenvalueCollision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// left_mult_matrix(tau(n)) with q = q0.
IntMatrix tau_matrix(int n, const BigInt& q0);

/// The candidate eigenvalues [k]_{q0}, k in [0,n] with k != n-1. Throws
/// EigenvalueCollision if two of them coincide.
std::vector<BigInt> eigenvalue_candidates(int n, const BigInt& q0);

/// n! - rank(M(q0) - [k]_{q0} I). Throws EigenvalueCollision when the
/// candidate eigenvalues collide at q0.
std::size_t multiplicity(int n, unsigned k, const BigInt& q0);

struct MultiplicityOptions {
  /// n above this uses modular ranks certified by the multiplicity sum.
  int exact_max_n = 5;
  /// Permit n beyond exact_max_n at all.
  bool allow_large = false;
};

/// One row per (q0, k): multiplicity against the fixed-point count, plus a
/// per-q0 row checking that multiplicities sum to n!. q0 = 1 is always
/// included.
std::vector<Check> verify_multiplicities(int n, std::vector<BigInt> sample_qs,
                                         MultiplicityOptions options = {});

}  // namespace qwallach
