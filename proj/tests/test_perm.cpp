#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "qwallach/perm.hpp"

using namespace qwallach;

TEST_CASE("construction rejects non-bijections") {
  CHECK_THROWS_AS(Perm({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Perm({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Perm({1, 4, 2}), std::invalid_argument);
  CHECK_NOTHROW(Perm({2, 3, 1}));
}

TEST_CASE("compose") {
  const Perm e = Perm::identity(3);
  const Perm s1 = Perm::simple(3, 1), s2 = Perm::simple(3, 2);
  const Perm v{3, 1, 2};
  CHECK(compose(e, v) == v);
  CHECK(compose(v, e) == v);
  CHECK(compose(s1, s1) == e);
  // (s1 o s2)(1) = s1(s2(1)) = s1(1) = 2, (s1 o s2)(2) = s1(3) = 3, (s1 o s2)(3) = s1(2) = 1
  CHECK(compose(s1, s2) == Perm({2, 3, 1}));
  CHECK(compose(s2, s1) == Perm({3, 1, 2}));
  CHECK(compose(s1, s2) != compose(s2, s1));
  CHECK_THROWS_AS(compose(s1, Perm::identity(4)), std::invalid_argument);
  CHECK(left_simple(1, v) == compose(s1, v));
  CHECK(right_simple(v, 2) == compose(v, s2));
}

TEST_CASE("length") {
  CHECK(length(Perm::identity(5)) == 0);
  for (int i = 1; i < 5; ++i) CHECK(length(Perm::simple(5, i)) == 1);
  CHECK(length(Perm({3, 2, 1})) == 3);
}

TEST_CASE("reduced words") {
  CHECK(reduced_word(Perm::identity(4)).empty());
  CHECK(reduced_word(Perm::simple(3, 2)) == std::vector<int>{2});
  const Perm w0{3, 2, 1};
  for (auto strategy : {WordStrategy::first_descent, WordStrategy::last_descent}) {
    const auto word = reduced_word(w0, strategy);
    CHECK(word.size() == 3);
    CHECK(from_word(3, word) == w0);
  }
  CHECK(reduced_word(w0, WordStrategy::first_descent) != reduced_word(w0, WordStrategy::last_descent));
}

TEST_CASE("cycle elements") {
  CHECK(cycle_element(4, 4).is_identity());
  CHECK(cycle_element(4, 3) == Perm::simple(4, 3));
  const Perm c = cycle_element(3, 1);
  CHECK(c == compose(Perm::simple(3, 1), Perm::simple(3, 2)));
  CHECK(length(c) == 2);
  for (int n = 2; n <= 6; ++n) {
    for (int g = 1; g <= n; ++g) CHECK(length(cycle_element(n, g)) == n - g);
  }
  CHECK_THROWS_AS(cycle_element(3, 0), std::out_of_range);
  CHECK_THROWS_AS(cycle_element(3, 4), std::out_of_range);
}

TEST_CASE("enumerate") {
  CHECK(enumerate_perms(1).size() == 1);
  CHECK(enumerate_perms(3).size() == 6);
  const auto all = enumerate_perms(5);
  CHECK(all.size() == 120);
  CHECK(std::set<Perm>(all.begin(), all.end()).size() == 120);
  CHECK(std::is_sorted(all.begin(), all.end()));
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(lex_rank(all[i]) == i);
}

TEST_CASE("fixed points") {
  CHECK(fixed_point_count(Perm::identity(4)) == 4);
  CHECK(fixed_point_count(Perm::simple(4, 1)) == 2);

  // Brute force over raw arrays, independent of enumerate_perms.
  std::vector<int> a(4);
  std::iota(a.begin(), a.end(), 1);
  int exactly_two = 0;
  do {
    int fixed = 0;
    for (int i = 0; i < 4; ++i) fixed += a[static_cast<std::size_t>(i)] == i + 1;
    exactly_two += fixed == 2;
  } while (std::next_permutation(a.begin(), a.end()));
  CHECK(exactly_two == 6);
  CHECK(fixed_point_distribution(4)[2] == 6);
}

TEST_CASE("no permutation has exactly n-1 fixed points") {
  for (int n = 2; n <= 7; ++n) {
    const auto dist = fixed_point_distribution(n);
    CHECK(dist[static_cast<std::size_t>(n - 1)] == 0);
    std::uint64_t total = 0, fact = 1;
    for (auto d : dist) total += d;
    for (int i = 2; i <= n; ++i) fact *= static_cast<std::uint64_t>(i);
    CHECK(total == fact);
  }
}

TEST_CASE("simple reflections change length by exactly one") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& w : enumerate_perms(n)) {
      for (int i = 1; i < n; ++i) {
        const Perm sw = compose(Perm::simple(n, i), w);
        CHECK(std::abs(length(sw) - length(w)) == 1);
        CHECK(left_ascent(i, w) == (length(sw) > length(w)));
      }
      for (auto strategy : {WordStrategy::first_descent, WordStrategy::last_descent}) {
        const auto word = reduced_word(w, strategy);
        CHECK(static_cast<int>(word.size()) == length(w));
        CHECK(from_word(n, word) == w);
      }
      CHECK(compose(w, w.inverse()).is_identity());
    }
  }
}

TEST_CASE("rendering") { CHECK(Perm({3, 1, 2}).to_string() == "(3 1 2)"); }
