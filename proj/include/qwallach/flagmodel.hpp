#pragma once

// The convolution algebra of GL(V)-invariant functions on pairs of complete
// flags over F_q, with the functions f_1 and f_t and the checks of their
// product rules.
//
// Functions are stored per orbit, labelled by relative_position(W, V) of a
// pair. Convolution (f*g)(W,V) = sum over flags V' of f(W,V') g(V',V) is
// evaluated once per orbit representative; the counts
//   N(x, y; z) = #{V' : pos(W,V') = x, pos(V',V) = y},  pos(W,V) = z
// are tabulated when the model is built and reused by every product.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qwallach/flag.hpp"
#include "qwallach/hecke.hpp"
#include "qwallach/perm.hpp"
#include "qwallach/poly.hpp"
#include "qwallach/report.hpp"

namespace qwallach {

class OrbitFn {
 public:
  using Values = std::map<Perm, BigInt>;

  OrbitFn(int n, std::uint32_t q) : n_(n), q_(q) {}

  int n() const { return n_; }
  std::uint32_t q() const { return q_; }
  const Values& values() const { return values_; }
  BigInt value(const Perm& orbit) const;
  bool is_zero() const { return values_.empty(); }

  void add(const Perm& orbit, const BigInt& v);

  OrbitFn& operator+=(const OrbitFn& rhs);
  OrbitFn& operator-=(const OrbitFn& rhs);
  friend OrbitFn operator+(OrbitFn a, const OrbitFn& b) { return a += b; }
  friend OrbitFn operator-(OrbitFn a, const OrbitFn& b) { return a -= b; }
  friend OrbitFn operator*(const BigInt& c, const OrbitFn& f);
  friend bool operator==(const OrbitFn&, const OrbitFn&) = default;

  std::string to_string() const;

 private:
  void check_compatible(const OrbitFn& rhs) const;

  int n_;
  std::uint32_t q_;
  Values values_;
};

class OrbitConstancyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// How a flag pair (W, V) is labelled by a permutation.
enum class OrbitConvention {
  natural,    // relative_position(W, V)
  transpose,  // relative_position(V, W), the inverse permutation
};

struct FlagModelOptions {
  std::size_t budget = kDefaultFlagBudget;
  /// The transpose convention makes e_x * e_y follow T_x T_y; the natural
  /// one reverses every product.
  OrbitConvention convention = OrbitConvention::transpose;
  /// Re-evaluate every pointwise definition and convolution on a second,
  /// randomly translated representative and throw OrbitConstancyError on
  /// disagreement.
  bool debug_orbit_checks = false;
  std::uint64_t seed = 0x5eed;
};

class FlagModel {
 public:
  FlagModel(int n, std::uint32_t q, FlagModelOptions options = {});

  int n() const { return n_; }
  std::uint32_t q() const { return q_; }
  const std::vector<Flag>& flags() const { return flags_; }
  /// Orbit labels in enumerate_perms order.
  const std::vector<Perm>& orbits() const { return orbits_; }
  OrbitConvention convention() const { return options_.convention; }

  /// Orbit label of (W, V) under the model's convention.
  Perm label(const Flag& W, const Flag& V) const;

  /// (standard flag, permuted coordinate flag) carrying label `orbit`.
  const std::pair<Flag, Flag>& representative(const Perm& orbit) const;
  /// g . representative(orbit) for a random g in GL_n(F_q).
  std::pair<Flag, Flag> translated_representative(const Perm& orbit) const;

  OrbitFn zero() const { return OrbitFn(n_, q_); }
  /// Indicator of the diagonal orbit.
  OrbitFn unit() const;
  /// Indicator e_x of orbit x.
  OrbitFn basis(const Perm& orbit) const;

  /// Evaluates `pred` on each orbit representative and stores the indicator.
  OrbitFn indicator(const std::function<bool(const Flag&, const Flag&)>& pred) const;

  OrbitFn f1() const;
  /// Indicator of X_t; the zero function for t > n.
  OrbitFn f_t(int t) const;

  OrbitFn convolve(const OrbitFn& f, const OrbitFn& g) const;

  /// sum over all flags V' of f(W,V') g(V',V), straight from the definition.
  BigInt convolve_at(const OrbitFn& f, const OrbitFn& g, const Flag& W, const Flag& V) const;

  /// N(x, y; z)
  std::uint64_t structure_constant(const Perm& x, const Perm& y, const Perm& z) const;

 private:
  struct Entry {
    std::uint32_t y;
    std::uint32_t z;
    std::uint64_t count;
  };

  std::vector<BigInt> dense(const OrbitFn& f) const;
  void check_same_model(const OrbitFn& f) const;
  FqMatrix random_invertible() const;

  int n_;
  std::uint32_t q_;
  FlagModelOptions options_;
  std::vector<Flag> flags_;
  std::vector<Perm> orbits_;
  std::vector<std::pair<Flag, Flag>> reps_;
  // table_[x] lists (y, z, N(x,y;z)) with nonzero count.
  std::vector<std::vector<Entry>> table_;
  mutable std::mt19937_64 rng_;
};

/// The defining condition of f_1 on (W, V'): for some g in [1,n],
/// W_r = V'_r for r < g and V'_r != W_r, W_r < V'_{r+1} for r in [g, n-1].
bool f1_holds(const Flag& W, const Flag& Vp);

/// (A, B) in X_t: the least indices m_r = min{i : A_r <= B_i} are strictly
/// increasing for r in [1, n-t]. These m_r are the only possible witness
/// sequence. Always true for t >= n-1. Requires t >= 0.
bool in_X_t(const Flag& A, const Flag& B, int t);

/// f_1 * f_t = [t]_q f_t + q^t f_{t+1} for t in [t_lo, t_hi] (f_t = 0 past n).
std::vector<Check> verify_lemma3(const FlagModel& model, int t_lo, int t_hi);
std::vector<Check> verify_lemma3(const FlagModel& model);

/// q^{t(t-1)/2} f_t = f_1 (f_1 - [1]) ... (f_1 - [t-1]) for t in [t_lo, t_hi],
/// f_{n-1} = f_n, and f_1 prod_{k in [1,n], k != n-1} (f_1 - [k]) = 0.
std::vector<Check> verify_factorization(const FlagModel& model, int t_lo, int t_hi);
std::vector<Check> verify_factorization(const FlagModel& model);

/// {f_t} and {f_1^t} (t in [0,n]) span the same space, related by the
/// triangular change of basis forced by the product rule; f_s * f_t = f_t * f_s.
std::vector<Check> verify_span_commutativity(const FlagModel& model);

/// e_x * e_y = specialize(T_x T_y, q) for all x, y; f_1 against
/// specialize(tau, q); and f_1 against the image of tau under the
/// anti-involution T_w -> T_{w^-1}.
std::vector<Check> compare_structure_constants(const FlagModel& model);

/// sum_{g=1}^{n} T_{c_g^-1}: tau with every basis label inverted.
HeckeElt reversed_tau(int n);

/// All bijections phi of S_n (n <= 4) such that e_x -> T_{phi(x)} preserves
/// every structure constant, and of those, the ones also sending f_1 to
/// specialize(tau, q).
struct MatchingSearch {
  std::size_t structure_preserving = 0;
  std::size_t also_matching_tau = 0;
};
MatchingSearch search_orbit_matchings(const FlagModel& model);

std::string describe(OrbitConvention convention);

}  // namespace qwallach
