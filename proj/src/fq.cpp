#include "qwallach/fq.hpp"

#include <sstream>
#include <stdexcept>

namespace qwallach {

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

void require_prime_field(std::uint32_t q) {
  if (q >= (1u << 16) || !is_prime(q)) {
    throw std::invalid_argument("field cardinality must be a prime below 65536, got " +
                                std::to_string(q));
  }
}

Residue inverse_mod(Residue a, std::uint32_t q) {
  // Fermat: a^(q-2)
  std::uint64_t base = a % q, result = 1;
  for (std::uint32_t e = q - 2; e; e >>= 1) {
    if (e & 1u) result = result * base % q;
    base = base * base % q;
  }
  return static_cast<Residue>(result);
}

FqMatrix::FqMatrix(std::size_t rows, std::size_t cols, std::uint32_t q)
    : rows_(rows), cols_(cols), q_(q), e_(rows * cols, 0) {}

FqMatrix FqMatrix::identity(std::size_t n, std::uint32_t q) {
  FqMatrix m(n, n, q);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FqMatrix FqMatrix::top_rows(std::size_t count) const {
  FqMatrix m(count, cols_, q_);
  std::copy(e_.begin(), e_.begin() + static_cast<std::ptrdiff_t>(count * cols_), m.e_.begin());
  return m;
}

FqMatrix FqMatrix::stacked(const FqMatrix& below) const {
  if (below.cols_ != cols_ || below.q_ != q_) throw std::invalid_argument("FqMatrix: shape mismatch");
  FqMatrix m(rows_ + below.rows_, cols_, q_);
  std::copy(e_.begin(), e_.end(), m.e_.begin());
  std::copy(below.e_.begin(), below.e_.end(), m.e_.begin() + static_cast<std::ptrdiff_t>(e_.size()));
  return m;
}

FqMatrix operator*(const FqMatrix& a, const FqMatrix& b) {
  if (a.cols_ != b.rows_ || a.q_ != b.q_) throw std::invalid_argument("FqMatrix: shape mismatch");
  FqMatrix out(a.rows_, b.cols_, a.q_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < a.cols_; ++k) acc += std::uint64_t{a(i, k)} * b(k, j);
      out(i, j) = static_cast<Residue>(acc % a.q_);
    }
  }
  return out;
}

std::string FqMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out << '[';
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? " " : "") << (*this)(r, c);
    out << ']';
  }
  return out.str();
}

FqMatrix rref(FqMatrix m) {
  const std::uint32_t q = m.q();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t piv = lead;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != lead) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(lead, c));
    }
    const std::uint64_t inv = inverse_mod(m(lead, col), q);
    for (std::size_t c = 0; c < m.cols(); ++c) m(lead, c) = static_cast<Residue>(m(lead, c) * inv % q);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, col) == 0) continue;
      const std::uint64_t f = q - m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c) {
        m(r, c) = static_cast<Residue>((m(r, c) + f * m(lead, c)) % q);
      }
    }
    ++lead;
  }
  return m.top_rows(lead);
}

std::size_t rank(const FqMatrix& m) { return rref(m).rows(); }

FqMatrix inverse(const FqMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  FqMatrix aug(n, 2 * n, m.q());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  FqMatrix red = rref(aug);
  if (red.rows() < n) throw std::domain_error("inverse: singular matrix");
  FqMatrix inv(n, n, m.q());
  for (std::size_t r = 0; r < n; ++r) {
    if (red(r, r) != 1) throw std::domain_error("inverse: singular matrix");
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red(r, n + c);
  }
  return inv;
}

Subspace::Subspace(const FqMatrix& generators) : basis_(rref(generators)) {}

Subspace Subspace::zero(std::size_t n, std::uint32_t q) { return Subspace(FqMatrix(0, n, q)); }

Subspace Subspace::whole(std::size_t n, std::uint32_t q) {
  return Subspace(FqMatrix::identity(n, q));
}

bool Subspace::contains(const Subspace& other) const {
  if (other.dim() > dim()) return false;
  return rank(basis_.stacked(other.basis_)) == dim();
}

Subspace sum(const Subspace& a, const Subspace& b) {
  return Subspace(a.basis().stacked(b.basis()));
}

std::size_t intersection_dim(const Subspace& a, const Subspace& b) {
  return a.dim() + b.dim() - sum(a, b).dim();
}

}  // namespace qwallach
