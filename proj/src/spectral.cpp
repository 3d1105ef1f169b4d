#include "qwallach/spectral.hpp"

#include <algorithm>
#include <string>

#include "qwallach/hecke.hpp"
#include "qwallach/perm.hpp"

namespace qwallach {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (; e; e >>= 1) {
    if (e & 1u) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
  }
  return r;
}

// Primes just below 2^61 for the modular prepass.
constexpr std::uint64_t kModularPrimes[] = {
    2305843009213693951ull,  // 2^61 - 1
    2305843009213693921ull,
    2305843009213693907ull,
};

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

IntMatrix shifted(IntMatrix m, const BigInt& lambda) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= lambda;
  return m;
}

}  // namespace

std::size_t rank(IntMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  BigInt prev = 1, tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(m(piv, c)) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = c; j < cols; ++j) swap(m(piv, j), m(r, j));
    }
    const BigInt& p = m(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const bool lead_zero = sgn(m(i, c)) == 0;
      for (std::size_t j = c + 1; j < cols; ++j) {
        // m(i,j) <- (p m(i,j) - m(i,c) m(r,j)) / prev, an exact division.
        mpz_mul(tmp.get_mpz_t(), p.get_mpz_t(), m(i, j).get_mpz_t());
        if (!lead_zero) mpz_submul(tmp.get_mpz_t(), m(i, c).get_mpz_t(), m(r, j).get_mpz_t());
        mpz_divexact(m(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = p;
    ++r;
  }
  return r;
}

std::size_t rank_mod_p(const IntMatrix& src, std::uint64_t p) {
  const std::size_t rows = src.rows(), cols = src.cols();
  static_assert(sizeof(unsigned long) == 8, "residues are read through mpz_get_ui");
  std::vector<std::uint64_t> a(rows * cols);
  BigInt modulus, red;
  mpz_set_ui(modulus.get_mpz_t(), p);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_fdiv_r(red.get_mpz_t(), src(i, j).get_mpz_t(), modulus.get_mpz_t());
      a[i * cols + j] = mpz_get_ui(red.get_mpz_t());
    }
  }
  auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return a[i * cols + j]; };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(at(piv, j), at(r, j));
    }
    const std::uint64_t inv = pow_mod(at(r, c), p - 2, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (at(i, c) == 0) continue;
      const std::uint64_t f = mul_mod(at(i, c), inv, p);
      for (std::size_t j = c; j < cols; ++j) {
        const std::uint64_t sub = mul_mod(f, at(r, j), p);
        at(i, j) = at(i, j) >= sub ? at(i, j) - sub : at(i, j) + (p - sub);
      }
    }
    ++r;
  }
  return r;
}

IntMatrix tau_matrix(int n, const BigInt& q0) {
  const PolyMatrix pm = left_mult_matrix(tau(n));
  IntMatrix m(pm.rows(), pm.cols());
  for (std::size_t i = 0; i < pm.rows(); ++i) {
    for (std::size_t j = 0; j < pm.cols(); ++j) m(i, j) = pm(i, j).eval(q0);
  }
  return m;
}

std::vector<BigInt> eigenvalue_candidates(int n, const BigInt& q0) {
  std::vector<BigInt> values;
  for (unsigned k : wallach_factor_ks(n)) values.push_back(q_int(k).eval(q0));
  auto sorted = values;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw EigenvalueCollision("candidate eigenvalues collide at q = " + q0.get_str());
  }
  return values;
}

std::size_t multiplicity(int n, unsigned k, const BigInt& q0) {
  eigenvalue_candidates(n, q0);
  const IntMatrix m = tau_matrix(n, q0);
  return m.rows() - rank(shifted(m, q_int(k).eval(q0)));
}

std::vector<Check> verify_multiplicities(int n, std::vector<BigInt> sample_qs,
                                         MultiplicityOptions options) {
  if (n < 2) throw std::invalid_argument("verify_multiplicities: n must be at least 2");
  const bool large = n > options.exact_max_n;
  if (large && !options.allow_large) {
    throw std::invalid_argument("verify_multiplicities: n = " + std::to_string(n) +
                                " exceeds the exact ceiling " + std::to_string(options.exact_max_n));
  }
  if (std::find(sample_qs.begin(), sample_qs.end(), BigInt(1)) == sample_qs.end()) {
    sample_qs.insert(sample_qs.begin(), BigInt(1));
  }

  const auto expected = fixed_point_distribution(n);
  const std::uint64_t order = factorial(n);
  std::vector<Check> checks;

  // Modular ranks only bound multiplicities from above. When the bounds sum
  // to n! they are exact, because the annihilating polynomial of tau is
  // squarefree with distinct roots at q0 (confirmed here symbolically).
  bool annihilated = true;
  if (large) annihilated = wallach_product(n).is_zero();

  for (const auto& q0 : sample_qs) {
    eigenvalue_candidates(n, q0);
    const IntMatrix m = tau_matrix(n, q0);
    std::vector<std::uint64_t> mult(static_cast<std::size_t>(n) + 1, 0);
    for (unsigned k = 0; k <= static_cast<unsigned>(n); ++k) {
      const IntMatrix shifted_m = shifted(m, q_int(k).eval(q0));
      std::size_t rk = 0;
      if (large) {
        for (auto p : kModularPrimes) rk = std::max(rk, rank_mod_p(shifted_m, p));
      } else {
        rk = rank(shifted_m);
      }
      mult[k] = order - rk;
    }
    std::uint64_t total = 0;
    for (unsigned k = 0; k <= static_cast<unsigned>(n); ++k) {
      total += mult[k];
      Check c;
      c.name = "multiplicity";
      c.params = {{"n", n},
                  {"k", k},
                  {"q0", q0.get_si()},
                  {"multiplicity", static_cast<std::int64_t>(mult[k])},
                  {"fixed_point_count", static_cast<std::int64_t>(expected[k])},
                  {"match", mult[k] == expected[k]}};
      c.pass = mult[k] == expected[k];
      if (!c.pass) {
        c.details = "eigenvalue [" + std::to_string(k) + "]_q at q = " + q0.get_str() +
                    " has multiplicity " + std::to_string(mult[k]) + ", expected " +
                    std::to_string(expected[k]);
      }
      checks.push_back(std::move(c));
    }
    Check sum;
    sum.name = "multiplicity-sum";
    sum.params = {{"n", n},
                  {"q0", q0.get_si()},
                  {"sum", static_cast<std::int64_t>(total)},
                  {"order", static_cast<std::int64_t>(order)}};
    sum.pass = total == order && annihilated;
    if (large) sum.details = "modular ranks, certified by the sum and the vanishing product";
    if (!annihilated) sum.details = "tau does not satisfy its annihilating product";
    checks.push_back(std::move(sum));
  }
  return checks;
}

}  // namespace qwallach
