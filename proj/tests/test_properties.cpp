#include "doctest.h"
#include "property_checks.hpp"

using namespace qwallach;
using namespace qwallach::props;

namespace {

void require_all(const std::vector<Check>& checks) {
  for (const auto& c : checks) CHECK_MESSAGE(c.pass, c.name, " ", c.details);
}

}  // namespace

TEST_CASE("generator relations as matrices") {
  for (int n = 2; n <= 5; ++n) require_all(matrix_relations(n));
}

TEST_CASE("random reduced words are reduced words") {
  Rng rng(7);
  for (int k = 0; k < 200; ++k) {
    const Perm w = random_perm(5, rng);
    const auto word = random_reduced_word(w, rng);
    CHECK(from_word(5, word) == w);
    CHECK(static_cast<int>(word.size()) == length(w));
  }
}

TEST_CASE("multiplication is associative") {
  for (int n = 2; n <= 5; ++n) CHECK(associativity(n, n <= 4 ? 30 : 8, 100 + n).pass);
}

TEST_CASE("product does not depend on the reduced word") {
  for (int n = 2; n <= 5; ++n) CHECK(word_invariance(n, 40, 200 + n).pass);
}

TEST_CASE("convolution is associative") {
  CHECK(convolution_associativity(FlagModel(3, 2), 20, 300).pass);
  CHECK(convolution_associativity(FlagModel(2, 5), 20, 302).pass);
}

TEST_CASE("relative position is GL-invariant") {
  CHECK(gl_invariance(3, 5, 300, 400).pass);
  CHECK(gl_invariance(4, 3, 300, 401).pass);
}

TEST_CASE("orbits of the full group match relative positions") {
  const Check small = orbit_partition(2, 2);
  CHECK(small.pass);
  CHECK(small.params.at("group_order") == 6);
  const Check c = orbit_partition(3, 2);
  CHECK(c.pass);
  CHECK(c.params.at("group_order") == 168);
  CHECK(c.params.at("orbits") == 6);
}
