#include "qwallach/hecke.hpp"

#include <sstream>
#include <stdexcept>

namespace qwallach {

namespace {

void check_same_rank(int a, int b) {
  if (a != b) throw std::invalid_argument("Hecke: rank mismatch");
}

const Poly& q_minus_one() {
  static const Poly p = Poly::q() - Poly(1);
  return p;
}

void add_group_term(GroupElt& a, const Perm& w, const BigInt& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = a.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) a.erase(it);
  }
}

}  // namespace

HeckeElt HeckeElt::basis(const Perm& w, const Poly& c) {
  HeckeElt e(w.size());
  e.add_term(w, c);
  return e;
}

Poly HeckeElt::coeff(const Perm& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Poly() : it->second;
}

void HeckeElt::add_term(const Perm& w, const Poly& c) {
  if (c.is_zero()) return;
  check_same_rank(n_, w.size());
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& rhs) {
  check_same_rank(n_, rhs.n_);
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& rhs) {
  check_same_rank(n_, rhs.n_);
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

HeckeElt operator*(const Poly& c, const HeckeElt& a) {
  HeckeElt r(a.n_);
  if (c.is_zero()) return r;
  for (const auto& [w, p] : a.terms_) r.terms_.emplace(w, c * p);
  return r;
}

std::string HeckeElt::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << '(' << c.to_string() << ")*T_" << w.to_string();
  }
  return out.str();
}

HeckeElt simple_times_basis(int i, const Perm& w) {
  if (i < 1 || i >= w.size()) throw std::out_of_range("simple_times_basis: bad index");
  HeckeElt r(w.size());
  Perm sw = left_simple(i, w);
  if (left_ascent(i, w)) {
    r.add_term(sw, Poly(1));
  } else {
    r.add_term(sw, Poly::q());
    r.add_term(w, q_minus_one());
  }
  return r;
}

HeckeElt simple_times(int i, const HeckeElt& b) {
  if (i < 1 || i >= b.rank()) throw std::out_of_range("simple_times: bad index");
  HeckeElt r(b.rank());
  for (const auto& [w, c] : b.terms()) {
    Perm sw = left_simple(i, w);
    if (left_ascent(i, w)) {
      r.add_term(sw, c);
    } else {
      r.add_term(sw, Poly::q() * c);
      r.add_term(w, q_minus_one() * c);
    }
  }
  return r;
}

HeckeElt mul(const HeckeElt& a, const HeckeElt& b, WordStrategy strategy) {
  check_same_rank(a.rank(), b.rank());
  HeckeElt out(a.rank());
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [x, c] : a.terms()) {
    // T_x = T_{i_1} ... T_{i_l}; apply the rightmost generator first.
    HeckeElt acc = b;
    auto word = reduced_word(x, strategy);
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = simple_times(*it, acc);
    out += c * acc;
  }
  return out;
}

HeckeElt tau(int n) {
  if (n < 2) throw std::invalid_argument("tau: n must be at least 2");
  HeckeElt t(n);
  for (int g = 1; g <= n; ++g) t.add_term(cycle_element(n, g), Poly(1));
  return t;
}

std::vector<unsigned> wallach_factor_ks(int n) {
  std::vector<unsigned> ks{0};
  for (int k = 1; k <= n; ++k) {
    if (k != n - 1) ks.push_back(static_cast<unsigned>(k));
  }
  return ks;
}

HeckeElt wallach_product(int n, std::optional<unsigned> omit) {
  const HeckeElt t = tau(n);
  const auto ks = wallach_factor_ks(n);
  // Associate from the right so that every multiplication has a small left
  // factor; the product and its factor order are unchanged.
  HeckeElt acc = HeckeElt::unit(n);
  for (auto it = ks.rbegin(); it != ks.rend(); ++it) {
    if (omit && *omit == *it) continue;
    HeckeElt factor = t - HeckeElt::basis(Perm::identity(n), q_int(*it));
    acc = mul(factor, acc);
  }
  return acc;
}

GroupElt specialize(const HeckeElt& a, const BigInt& q0) {
  GroupElt out;
  for (const auto& [w, c] : a.terms()) add_group_term(out, w, c.eval(q0));
  return out;
}

GroupElt group_mul(const GroupElt& a, const GroupElt& b) {
  GroupElt out;
  for (const auto& [x, cx] : a) {
    for (const auto& [y, cy] : b) add_group_term(out, compose(x, y), cx * cy);
  }
  return out;
}

GroupElt group_add(GroupElt a, const GroupElt& b, const BigInt& scale) {
  for (const auto& [w, c] : b) add_group_term(a, w, scale * c);
  return a;
}

GroupElt group_tau(int n) {
  if (n < 2) throw std::invalid_argument("group_tau: n must be at least 2");
  GroupElt t;
  for (int g = 1; g <= n; ++g) add_group_term(t, cycle_element(n, g), 1);
  return t;
}

GroupElt wallach_group_product(int n, std::optional<unsigned> omit) {
  const GroupElt t = group_tau(n);
  const Perm e = Perm::identity(n);
  GroupElt acc{{e, BigInt(1)}};
  const auto ks = wallach_factor_ks(n);
  for (auto it = ks.rbegin(); it != ks.rend(); ++it) {
    if (omit && *omit == *it) continue;
    GroupElt factor = group_add(t, GroupElt{{e, BigInt(*it)}}, -1);
    acc = group_mul(factor, acc);
  }
  return acc;
}

PolyMatrix left_mult_matrix(const HeckeElt& a) {
  const int n = a.rank();
  const auto perms = enumerate_perms(n);
  PolyMatrix m(perms.size(), perms.size());
  for (std::size_t col = 0; col < perms.size(); ++col) {
    HeckeElt image = mul(a, HeckeElt::basis(perms[col]));
    for (const auto& [w, c] : image.terms()) m(lex_rank(w), col) = c;
  }
  return m;
}

std::string to_string(const GroupElt& a) {
  if (a.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : a) {
    if (!first) out << " + ";
    first = false;
    out << c.get_str() << "*" << w.to_string();
  }
  return out.str();
}

}  // namespace qwallach
