#include "qwallach/flag.hpp"

#include <array>

namespace qwallach {

namespace {

// Reduce `v` against the pivots of the RREF matrix `s` and scale to a
// leading 1. Returns false if v lies in span(s).
bool reduce_against(const FqMatrix& s, std::vector<Residue>& v, std::uint32_t q) {
  for (std::size_t r = 0; r < s.rows(); ++r) {
    std::size_t piv = 0;
    while (s(r, piv) == 0) ++piv;
    if (v[piv] == 0) continue;
    const std::uint64_t f = q - v[piv];
    for (std::size_t c = 0; c < v.size(); ++c) v[c] = static_cast<Residue>((v[c] + f * s(r, c)) % q);
  }
  std::size_t lead = 0;
  while (lead < v.size() && v[lead] == 0) ++lead;
  if (lead == v.size()) return false;
  const std::uint64_t inv = inverse_mod(v[lead], q);
  for (auto& x : v) x = static_cast<Residue>(x * inv % q);
  return true;
}

FqMatrix append_row(const FqMatrix& m, const std::vector<Residue>& row) {
  FqMatrix r(1, row.size(), m.q());
  for (std::size_t c = 0; c < row.size(); ++c) r(0, c) = row[c];
  return m.stacked(r);
}

}  // namespace

Flag Flag::from_basis(const FqMatrix& basis) {
  const std::size_t n = basis.rows();
  if (basis.cols() != n) throw std::invalid_argument("Flag: basis must be square");
  const std::uint32_t q = basis.q();
  Flag f;
  f.basis_ = FqMatrix(0, n, q);
  f.steps_.push_back(Subspace::zero(n, q));
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Residue> v(n);
    for (std::size_t c = 0; c < n; ++c) v[c] = basis(k, c);
    if (!reduce_against(f.steps_.back().basis(), v, q)) {
      throw std::domain_error("Flag: basis rows are linearly dependent");
    }
    f.basis_ = append_row(f.basis_, v);
    f.steps_.emplace_back(f.basis_);
  }
  f.coords_ = inverse(f.basis_);
  return f;
}

Flag Flag::standard(int n, std::uint32_t q) {
  return from_basis(FqMatrix::identity(static_cast<std::size_t>(n), q));
}

BigInt flag_count(int n, std::uint32_t q) {
  BigInt count = 1;
  for (int k = 1; k <= n; ++k) count *= q_int(static_cast<unsigned>(k)).eval(q);
  return count;
}

std::vector<Flag> enumerate_flags(int n, std::uint32_t q, std::size_t budget) {
  require_prime_field(q);
  if (n < 1 || n > Perm::kMaxN) throw std::invalid_argument("enumerate_flags: bad n");
  const BigInt count = flag_count(n, q);
  if (count > BigInt(static_cast<unsigned long>(budget))) {
    throw BudgetExceeded("flag count " + count.get_str() + " for (n,q) = (" + std::to_string(n) +
                         "," + std::to_string(q) + ") exceeds budget " + std::to_string(budget));
  }
  const auto dim = static_cast<std::size_t>(n);

  // Extend partial adapted bases one vector at a time. The next vector ranges
  // over nonzero vectors that vanish on the pivot columns of the current step
  // and have leading coefficient 1: one per line of V / V_k.
  std::vector<FqMatrix> partial{FqMatrix(0, dim, q)};
  for (std::size_t k = 0; k < dim; ++k) {
    std::vector<FqMatrix> next;
    for (const auto& b : partial) {
      const FqMatrix step = rref(b);
      std::vector<bool> pivot(dim, false);
      for (std::size_t r = 0; r < step.rows(); ++r) {
        std::size_t p = 0;
        while (step(r, p) == 0) ++p;
        pivot[p] = true;
      }
      std::vector<std::size_t> free_cols;
      for (std::size_t c = 0; c < dim; ++c) {
        if (!pivot[c]) free_cols.push_back(c);
      }
      // The leading 1 sits in free column `lead`; later free columns range
      // over all of F_q.
      for (std::size_t lead = 0; lead < free_cols.size(); ++lead) {
        const std::size_t tail = free_cols.size() - lead - 1;
        std::uint64_t combos = 1;
        for (std::size_t i = 0; i < tail; ++i) combos *= q;
        for (std::uint64_t code = 0; code < combos; ++code) {
          std::vector<Residue> v(dim, 0);
          v[free_cols[lead]] = 1;
          std::uint64_t rest = code;
          for (std::size_t i = 0; i < tail; ++i) {
            v[free_cols[lead + 1 + i]] = static_cast<Residue>(rest % q);
            rest /= q;
          }
          next.push_back(append_row(b, v));
        }
      }
    }
    partial = std::move(next);
  }

  std::vector<Flag> flags;
  flags.reserve(partial.size());
  for (const auto& b : partial) flags.push_back(Flag::from_basis(b));
  return flags;
}

Perm position_from_coordinates(const FqMatrix& coords) {
  const std::size_t n = coords.rows();
  const std::uint32_t q = coords.q();
  if (n > static_cast<std::size_t>(Perm::kMaxN)) throw std::invalid_argument("position: n too large");
  // Row i is reduced by earlier rows until its last nonzero coordinate is
  // distinct from theirs; that coordinate is w(i).
  std::array<std::array<Residue, Perm::kMaxN>, Perm::kMaxN> rows{};
  std::array<int, Perm::kMaxN> owner;
  owner.fill(-1);
  std::array<int, Perm::kMaxN> image{};
  for (std::size_t i = 0; i < n; ++i) {
    auto& r = rows[i];
    for (std::size_t c = 0; c < n; ++c) r[c] = coords(i, c);
    for (;;) {
      std::size_t last = n;
      while (last > 0 && r[last - 1] == 0) --last;
      if (last == 0) throw std::domain_error("position: coordinates are singular");
      const std::size_t j = last - 1;
      if (owner[j] < 0) {
        owner[j] = static_cast<int>(i);
        image[i] = static_cast<int>(j) + 1;
        break;
      }
      const auto& p = rows[static_cast<std::size_t>(owner[j])];
      const std::uint64_t f = std::uint64_t{r[j]} * inverse_mod(p[j], q) % q;
      for (std::size_t c = 0; c <= j; ++c) {
        r[c] = static_cast<Residue>((r[c] + (q - f) * p[c]) % q);
      }
    }
  }
  return Perm(std::span<const int>(image.data(), n));
}

Perm relative_position(const Flag& W, const Flag& V) {
  if (W.n() != V.n() || W.q() != V.q()) throw std::invalid_argument("relative_position: flag mismatch");
  return position_from_coordinates(W.adapted_basis() * V.coordinate_map());
}

Perm relative_position_by_dimensions(const Flag& W, const Flag& V) {
  if (W.n() != V.n() || W.q() != V.q()) throw std::invalid_argument("relative_position: flag mismatch");
  const int n = W.n();
  auto d = [&](int i, int j) {
    return static_cast<long>(intersection_dim(W.step(i), V.step(j)));
  };
  std::vector<int> image(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (d(i, j) - d(i - 1, j) - d(i, j - 1) + d(i - 1, j - 1) == 1) {
        if (image[static_cast<std::size_t>(i - 1)] != 0) {
          throw std::logic_error("relative_position_by_dimensions: two jumps in one row");
        }
        image[static_cast<std::size_t>(i - 1)] = j;
      }
    }
  }
  return Perm(std::span<const int>(image));
}

Flag act(const FqMatrix& g, const Flag& flag) {
  return Flag::from_basis(flag.adapted_basis() * g);
}

}  // namespace qwallach
