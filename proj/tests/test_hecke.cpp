#include "doctest.h"
#include "qwallach/hecke.hpp"

using namespace qwallach;

namespace {

const Poly q = Poly::q();

HeckeElt T(const Perm& w, const Poly& c = Poly(1)) { return HeckeElt::basis(w, c); }

}  // namespace

TEST_CASE("simple_times_basis") {
  const Perm e2 = Perm::identity(2), s1 = Perm::simple(2, 1);
  CHECK(simple_times_basis(1, e2) == T(s1));
  CHECK(simple_times_basis(1, s1) == T(e2, q) + T(s1, q - Poly(1)));
  // length(s2 s1) = 2 > 1
  const Perm s1_3 = Perm::simple(3, 1);
  CHECK(simple_times_basis(2, s1_3) == T(compose(Perm::simple(3, 2), s1_3)));
  CHECK(simple_times_basis(2, s1_3).terms().size() == 1);
  CHECK_THROWS_AS(simple_times_basis(3, s1_3), std::out_of_range);
}

TEST_CASE("mul") {
  const Perm s1 = Perm::simple(3, 1), s2 = Perm::simple(3, 2), e = Perm::identity(3);
  const HeckeElt b = T(s2, q) + T(Perm({3, 2, 1}), Poly(5));
  CHECK(mul(HeckeElt::unit(3), b) == b);
  CHECK(mul(b, HeckeElt::unit(3)) == b);
  CHECK(mul(T(s1), T(s1)) == T(e, q) + T(s1, q - Poly(1)));
  CHECK(mul(T(s1), T(s2)) == T(compose(s1, s2)));

  // Compare against the column of the left-multiplication matrix.
  const PolyMatrix m = left_mult_matrix(T(s1));
  const auto col = lex_rank(s2);
  for (const auto& w : enumerate_perms(3)) {
    CHECK(m(lex_rank(w), col) == mul(T(s1), T(s2)).coeff(w));
  }
  CHECK(mul(HeckeElt(3), b).is_zero());
}

TEST_CASE("tau") {
  const Perm e2 = Perm::identity(2), s1 = Perm::simple(2, 1);
  CHECK(tau(2) == T(s1) + T(e2));
  const HeckeElt t3 = tau(3);
  CHECK(t3 == T(compose(Perm::simple(3, 1), Perm::simple(3, 2))) + T(Perm::simple(3, 2)) +
                  T(Perm::identity(3)));
  for (int n = 2; n <= 7; ++n) CHECK(tau(n).terms().size() == static_cast<std::size_t>(n));
  CHECK_THROWS(tau(1));
}

TEST_CASE("wallach product, n = 2, by hand") {
  // tau^2 = T_s^2 + 2 T_s + 1 = q + (q-1) T_s + 2 T_s + 1 = (1+q) tau
  const HeckeElt t = tau(2);
  CHECK(mul(t, t) == q_int(2) * t);
  CHECK(wallach_product(2).is_zero());
}

TEST_CASE("wallach product vanishes and is minimal") {
  CHECK(wallach_factor_ks(3) == std::vector<unsigned>{0, 1, 3});
  CHECK(wallach_factor_ks(5) == std::vector<unsigned>{0, 1, 2, 3, 5});
  for (int n = 2; n <= 5; ++n) {
    CHECK(wallach_product(n).is_zero());
    for (unsigned k : wallach_factor_ks(n)) CHECK_FALSE(wallach_product(n, k).is_zero());
  }
  // tau (tau - 1) for n = 3 is the product without the k = 3 factor.
  const HeckeElt t = tau(3);
  CHECK_FALSE(mul(t, t - HeckeElt::unit(3)).is_zero());
}

TEST_CASE("specialize") {
  const GroupElt t3 = specialize(tau(3), 1);
  CHECK(t3 == GroupElt{{Perm::identity(3), 1}, {Perm::simple(3, 2), 1}, {cycle_element(3, 1), 1}});
  CHECK(specialize(HeckeElt(3), 7).empty());
  const Perm e = Perm::identity(2), s1 = Perm::simple(2, 1);
  CHECK(specialize(T(e, q) + T(s1, q - Poly(1)), 1) == GroupElt{{e, 1}});
  CHECK(specialize(tau(4), 1) == group_tau(4));
}

TEST_CASE("group algebra") {
  const Perm e = Perm::identity(3), s1 = Perm::simple(3, 1);
  const GroupElt a{{s1, 2}, {Perm({2, 3, 1}), -3}};
  CHECK(group_mul(GroupElt{{e, 1}}, a) == a);
  CHECK(group_mul(GroupElt{{s1, 1}}, GroupElt{{s1, 1}}) == GroupElt{{e, 1}});

  // t = s1 + 1 for n = 2: (s1 + 1)^2 = 2 (s1 + 1)
  const GroupElt t = group_tau(2);
  CHECK(group_mul(t, t) == group_add({}, t, 2));
  CHECK(wallach_group_product(2).empty());
  CHECK(wallach_group_product(3).empty());
  // dropping k = 4 for n = 4 leaves the multiplicity-one eigenvalue 4 alive
  CHECK_FALSE(wallach_group_product(4, 4u).empty());
}

TEST_CASE("left multiplication matrix") {
  CHECK(left_mult_matrix(HeckeElt::unit(3)) == PolyMatrix::identity(6));
  // basis order (1 2), (2 1): tau T_e = T_s + T_e, tau T_s = q T_e + q T_s
  const PolyMatrix m = left_mult_matrix(tau(2));
  CHECK(m(0, 0) == Poly(1));
  CHECK(m(1, 0) == Poly(1));
  CHECK(m(0, 1) == q);
  CHECK(m(1, 1) == q);

  // The factor matrices multiply to zero, as the element product does.
  for (int n = 2; n <= 4; ++n) {
    const PolyMatrix t = left_mult_matrix(tau(n));
    const auto size = t.rows();
    PolyMatrix acc = PolyMatrix::identity(size);
    for (unsigned k : wallach_factor_ks(n)) {
      acc = acc * (t - q_int(k) * PolyMatrix::identity(size));
    }
    CHECK(acc.is_zero());
  }
}

TEST_CASE("rendering") {
  CHECK(HeckeElt(2).to_string() == "0");
  CHECK(tau(2).to_string() == "(1)*T_(1 2) + (1)*T_(2 1)");
}
