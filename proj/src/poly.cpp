#include "qwallach/poly.hpp"

#include <algorithm>
#include <sstream>

namespace qwallach {

Poly::Poly(long c) : coeffs_{BigInt(c)} { normalize(); }

Poly::Poly(const BigInt& c) : coeffs_{c} { normalize(); }

Poly::Poly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

Poly Poly::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> coeffs(degree + 1);
  coeffs[degree] = c;
  return Poly(std::move(coeffs));
}

BigInt Poly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

void Poly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                 b.coeffs_[j].get_mpz_t());
    }
  }
  return Poly(std::move(out));
}

BigInt Poly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << coeffs_[i].get_str();
    if (i == 1) out << "*q";
    if (i > 1) out << "*q^" << i;
  }
  return out.str();
}

Poly q_int(unsigned k) {
  return Poly(std::vector<BigInt>(k, BigInt(1)));
}

}  // namespace qwallach
