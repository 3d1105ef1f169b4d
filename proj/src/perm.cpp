#include "qwallach/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qwallach {

Perm::Perm(std::span<const int> image) : n_(static_cast<std::int32_t>(image.size())) {
  if (n_ > kMaxN) throw std::invalid_argument("Perm: size exceeds kMaxN");
  std::array<bool, kMaxN + 1> seen{};
  for (std::size_t i = 0; i < image.size(); ++i) {
    int v = image[i];
    if (v < 1 || v > n_ || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("Perm: not a bijection of [1,n]");
    }
    seen[static_cast<std::size_t>(v)] = true;
    image_[i] = static_cast<std::uint8_t>(v);
  }
}

Perm Perm::identity(int n) {
  if (n < 0 || n > kMaxN) throw std::invalid_argument("Perm::identity: bad size");
  Perm p;
  p.n_ = n;
  for (int i = 0; i < n; ++i) p.image_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i + 1);
  return p;
}

Perm Perm::simple(int n, int i) {
  if (i < 1 || i >= n) throw std::out_of_range("Perm::simple: index outside [1,n-1]");
  return right_simple(identity(n), i);
}

std::vector<int> Perm::image() const {
  return {image_.begin(), image_.begin() + n_};
}

Perm Perm::inverse() const {
  Perm r;
  r.n_ = n_;
  for (int i = 0; i < n_; ++i) {
    r.image_[image_[static_cast<std::size_t>(i)] - 1u] = static_cast<std::uint8_t>(i + 1);
  }
  return r;
}

bool Perm::is_identity() const {
  for (int i = 0; i < n_; ++i) {
    if (image_[static_cast<std::size_t>(i)] != i + 1) return false;
  }
  return true;
}

std::string Perm::to_string() const {
  std::ostringstream out;
  out << '(';
  for (int i = 0; i < n_; ++i) {
    if (i) out << ' ';
    out << static_cast<int>(image_[static_cast<std::size_t>(i)]);
  }
  out << ')';
  return out.str();
}

Perm compose(const Perm& u, const Perm& v) {
  if (u.n_ != v.n_) throw std::invalid_argument("compose: size mismatch");
  Perm r;
  r.n_ = u.n_;
  for (int i = 0; i < u.n_; ++i) {
    r.image_[static_cast<std::size_t>(i)] = u.image_[v.image_[static_cast<std::size_t>(i)] - 1u];
  }
  return r;
}

Perm left_simple(int i, const Perm& w) {
  Perm r = w;
  for (int k = 0; k < w.n_; ++k) {
    auto& v = r.image_[static_cast<std::size_t>(k)];
    if (v == i) {
      v = static_cast<std::uint8_t>(i + 1);
    } else if (v == i + 1) {
      v = static_cast<std::uint8_t>(i);
    }
  }
  return r;
}

Perm right_simple(const Perm& w, int i) {
  Perm r = w;
  std::swap(r.image_[static_cast<std::size_t>(i - 1)], r.image_[static_cast<std::size_t>(i)]);
  return r;
}

int length(const Perm& w) {
  int inv = 0;
  for (int i = 1; i <= w.size(); ++i) {
    for (int j = i + 1; j <= w.size(); ++j) inv += w(i) > w(j);
  }
  return inv;
}

bool left_ascent(int i, const Perm& w) {
  for (int k = 1; k <= w.size(); ++k) {
    if (w(k) == i) return true;
    if (w(k) == i + 1) return false;
  }
  return false;
}

std::vector<int> reduced_word(const Perm& w, WordStrategy strategy) {
  // w = (w o s_i) o s_i with length dropping by one whenever w(i) > w(i+1);
  // peel descents off the right end until the identity remains.
  std::vector<int> word;
  Perm cur = w;
  const int n = w.size();
  for (;;) {
    int descent = 0;
    if (strategy == WordStrategy::first_descent) {
      for (int i = 1; i < n && !descent; ++i) {
        if (cur(i) > cur(i + 1)) descent = i;
      }
    } else {
      for (int i = n - 1; i >= 1 && !descent; --i) {
        if (cur(i) > cur(i + 1)) descent = i;
      }
    }
    if (!descent) break;
    word.push_back(descent);
    cur = right_simple(cur, descent);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

Perm from_word(int n, std::span<const int> word) {
  Perm w = Perm::identity(n);
  for (int i : word) {
    if (i < 1 || i >= n) throw std::out_of_range("from_word: index outside [1,n-1]");
    w = right_simple(w, i);
  }
  return w;
}

Perm cycle_element(int n, int g) {
  if (g < 1 || g > n) throw std::out_of_range("cycle_element: g outside [1,n]");
  std::vector<int> word;
  for (int i = g; i <= n - 1; ++i) word.push_back(i);
  return from_word(n, word);
}

std::vector<Perm> enumerate_perms(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  std::vector<Perm> out;
  do {
    out.emplace_back(std::span<const int>(image));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

std::size_t lex_rank(const Perm& w) {
  // Lehmer code in the factorial number system.
  const int n = w.size();
  std::size_t rank = 0;
  for (int i = 1; i <= n; ++i) {
    std::size_t smaller = 0;
    for (int j = i + 1; j <= n; ++j) smaller += w(j) < w(i);
    rank = rank * static_cast<std::size_t>(n - i + 1) + smaller;
  }
  return rank;
}

int fixed_point_count(const Perm& w) {
  int c = 0;
  for (int i = 1; i <= w.size(); ++i) c += w(i) == i;
  return c;
}

std::vector<std::uint64_t> fixed_point_distribution(int n) {
  std::vector<std::uint64_t> dist(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& w : enumerate_perms(n)) ++dist[static_cast<std::size_t>(fixed_point_count(w))];
  return dist;
}

}  // namespace qwallach
