#pragma once

// Permutations of [1,n] in one-line notation.
//
// Composition convention: compose(u, v) = u o v, i.e. (u o v)(i) = u(v(i)),
// the right factor is applied first. The simple reflection s_i is the
// transposition (i, i+1).

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qwallach {

class Perm {
 public:
  static constexpr int kMaxN = 16;

  Perm() = default;
  /// One-line notation, values in [1,n]. Throws std::invalid_argument unless
  /// the sequence is a bijection of [1,n].
  explicit Perm(std::span<const int> image);
  Perm(std::initializer_list<int> image)
      : Perm(std::span<const int>(image.begin(), image.size())) {}

  static Perm identity(int n);
  /// s_i = (i, i+1), 1 <= i <= n-1.
  static Perm simple(int n, int i);

  int size() const { return n_; }
  /// w(i) for 1-based i.
  int operator()(int i) const { return image_[static_cast<std::size_t>(i - 1)]; }
  std::vector<int> image() const;

  Perm inverse() const;
  bool is_identity() const;

  /// "(3 1 2)"
  std::string to_string() const;

  friend auto operator<=>(const Perm&, const Perm&) = default;
  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  friend Perm compose(const Perm& u, const Perm& v);
  friend Perm left_simple(int i, const Perm& w);
  friend Perm right_simple(const Perm& w, int i);

  std::int32_t n_ = 0;
  std::array<std::uint8_t, kMaxN> image_{};
};

/// u o v. Throws std::invalid_argument on size mismatch.
Perm compose(const Perm& u, const Perm& v);

/// s_i o w: swaps the values i and i+1 in the one-line notation of w.
Perm left_simple(int i, const Perm& w);
/// w o s_i: swaps positions i and i+1.
Perm right_simple(const Perm& w, int i);

/// Coxeter length, the number of inversions.
int length(const Perm& w);

/// True when length(s_i o w) > length(w), i.e. i precedes i+1 in w.
bool left_ascent(int i, const Perm& w);

enum class WordStrategy {
  first_descent,  // always split off the leftmost right descent
  last_descent,   // always split off the rightmost right descent
};

/// Indices i_1..i_l with w = s_{i_1} o ... o s_{i_l} and l = length(w).
std::vector<int> reduced_word(const Perm& w,
                              WordStrategy strategy = WordStrategy::first_descent);

/// s_{word[0]} o s_{word[1]} o ...
Perm from_word(int n, std::span<const int> word);

/// s_g o s_{g+1} o ... o s_{n-1}; the identity for g = n.
/// Throws std::out_of_range unless 1 <= g <= n.
Perm cycle_element(int n, int g);

/// All n! permutations in lexicographic order of their one-line notation.
std::vector<Perm> enumerate_perms(int n);

/// Position of w in enumerate_perms(w.size()).
std::size_t lex_rank(const Perm& w);

int fixed_point_count(const Perm& w);

/// Entry k is the number of permutations of [1,n] with exactly k fixed points.
std::vector<std::uint64_t> fixed_point_distribution(int n);

}  // namespace qwallach
