#pragma once

// The Iwahori-Hecke algebra H of type A_{n-1} over Z[q], in the standard
// basis {T_w : w in S_n}, together with the group algebra Z[S_n] obtained by
// specializing q.
//
// Multiplication rests on the rule
//   T_i T_w = T_{s_i w}                        if length(s_i w) > length(w)
//   T_i T_w = q T_{s_i w} + (q - 1) T_w        otherwise
// applied along a reduced word of each left basis element.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qwallach/matrix.hpp"
#include "qwallach/perm.hpp"
#include "qwallach/poly.hpp"

namespace qwallach {

class HeckeElt {
 public:
  using Terms = std::map<Perm, Poly>;

  explicit HeckeElt(int n) : n_(n) {}

  /// c * T_w
  static HeckeElt basis(const Perm& w, const Poly& c = Poly(1));
  /// T_e
  static HeckeElt unit(int n) { return basis(Perm::identity(n)); }

  int rank() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  Poly coeff(const Perm& w) const;

  /// Adds c * T_w, dropping the entry if it cancels.
  void add_term(const Perm& w, const Poly& c);

  HeckeElt& operator+=(const HeckeElt& rhs);
  HeckeElt& operator-=(const HeckeElt& rhs);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend HeckeElt operator*(const Poly& c, const HeckeElt& a);
  friend bool operator==(const HeckeElt&, const HeckeElt&) = default;

  /// "poly*T_(one-line) + ..." in basis order; "0" when empty.
  std::string to_string() const;

 private:
  int n_;
  Terms terms_;
};

/// T_i * T_w; at most two terms.
HeckeElt simple_times_basis(int i, const Perm& w);

/// T_i * b
HeckeElt simple_times(int i, const HeckeElt& b);

/// The product in H. The left factor is expanded over reduced words chosen by
/// `strategy`; the result does not depend on that choice.
HeckeElt mul(const HeckeElt& a, const HeckeElt& b,
             WordStrategy strategy = WordStrategy::first_descent);

inline HeckeElt operator*(const HeckeElt& a, const HeckeElt& b) { return mul(a, b); }

/// tau = sum_{g=1}^{n} T_{s_g s_{g+1} ... s_{n-1}}.
HeckeElt tau(int n);

/// The k-values of the annihilating factors of tau: 0 (tau itself), then
/// every k in [1,n] except n-1, increasing. Factor k is tau - [k]_q.
std::vector<unsigned> wallach_factor_ks(int n);

/// tau * prod_{k in [1,n], k != n-1} (tau - [k]_q), factors in increasing k.
/// With `omit` set, that single factor (k = 0 means the leading tau) is left out.
HeckeElt wallach_product(int n, std::optional<unsigned> omit = std::nullopt);

// Group algebra Z[S_n]: absent key means coefficient zero.
using GroupElt = std::map<Perm, BigInt>;

/// Evaluates every coefficient at q = q0.
GroupElt specialize(const HeckeElt& a, const BigInt& q0);

/// Convolution product in Z[S_n].
GroupElt group_mul(const GroupElt& a, const GroupElt& b);

GroupElt group_add(GroupElt a, const GroupElt& b, const BigInt& scale = 1);

/// The q = 1 image of tau: the sum of the cycles s_g ... s_{n-1}.
GroupElt group_tau(int n);

/// t * prod_{k in [1,n], k != n-1} (t - k) in Z[S_n], same factor order and
/// `omit` semantics as wallach_product.
GroupElt wallach_group_product(int n, std::optional<unsigned> omit = std::nullopt);

/// Matrix of left multiplication by `a`: column w holds a * T_w. Rows and
/// columns follow enumerate_perms order.
PolyMatrix left_mult_matrix(const HeckeElt& a);

std::string to_string(const GroupElt& a);

}  // namespace qwallach
