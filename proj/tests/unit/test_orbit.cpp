#include <random>
#include <set>

#include "abelcode/orbit.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "random_suite.hpp"

using namespace abelcode;

namespace {

std::set<std::uint32_t> naive_coset(std::uint32_t a, std::uint32_t r, u64 mult) {
  std::set<std::uint32_t> out;
  u64 x = a % r;
  while (out.insert(static_cast<std::uint32_t>(x)).second) x = x * mult % r;
  return out;
}

}  // namespace

TEST_SUITE("orbit") {
  TEST_CASE("index text round trip") {
    const Index a = Index::parse("(1, 12,0)");
    CHECK(a.size() == 3);
    CHECK(a[1] == 12);
    CHECK(a.str() == "(1,12,0)");
    CHECK(Index::parse(a.str()) == a);
    CHECK(Index::parse("7") == Index{7});
    CHECK_THROWS_AS(Index::parse("(1,x)"), std::invalid_argument);
    CHECK_THROWS_AS(Index::parse(""), std::invalid_argument);
  }

  TEST_CASE("ambient linear ranks") {
    const Ambient amb(2, {3, 5, 7});
    CHECK(amb.length() == 105);
    const auto all = amb.all_indices();
    REQUIRE(all.size() == 105);
    for (u64 i = 0; i < amb.length(); ++i) {
      CHECK(amb.linear(all[i]) == i);
      CHECK(amb.unlinear(i) == all[i]);
    }
    CHECK_THROWS_AS(Ambient(2, {3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(Ambient(6, {5}), std::invalid_argument);
    CHECK_THROWS_AS(Ambient(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(amb.check(Index{3, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(amb.check(Index{0, 0}), std::invalid_argument);
  }

  TEST_CASE("orderings permute and restore") {
    const Ordering o{2, 0, 1};
    const Index a{4, 5, 6};
    CHECK(permute(a, o) == Index{6, 4, 5});
    CHECK(unpermute(permute(a, o), o) == a);
    CHECK(Ambient(2, {3, 5, 7}).permuted(o).r() == std::vector<std::uint32_t>{7, 3, 5});
    CHECK_THROWS_AS(check_ordering(Ordering{0, 0, 1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(check_ordering(Ordering{0, 1}, 3), std::invalid_argument);
  }

  TEST_CASE("cyclotomic cosets match naive closure") {
    for (u64 q : {2, 3, 4, 5}) {
      for (std::uint32_t r = 1; r < 80; ++r) {
        if (std::gcd(u64{r}, q) != 1) continue;
        for (u64 g : {u64{1}, u64{2}}) {
          const u64 mult = pow_mod(q, g, r);
          for (std::uint32_t a = 0; a < r; ++a) {
            const auto got = coset(a, r, q, g);
            const auto want = naive_coset(a, r, mult);
            CHECK(std::set<std::uint32_t>(got.begin(), got.end()) == want);
            CHECK(std::is_sorted(got.begin(), got.end()));
          }
        }
      }
    }
    CHECK(coset(1, 7, 2, 1) == std::vector<std::uint32_t>{1, 2, 4});
    CHECK(coset(3, 7, 2, 1) == std::vector<std::uint32_t>{3, 5, 6});
  }

  TEST_CASE("orbits partition the ambient") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
      const Ambient amb = suite::random_ambient(rng, 200);
      std::set<Index> seen;
      std::size_t total = 0;
      Index prev;
      for (const auto& orbit : all_orbits(amb)) {
        CHECK(std::is_sorted(orbit.begin(), orbit.end()));
        if (!prev.empty()) CHECK(prev < orbit.front());
        prev = orbit.front();
        CHECK(qorbit(amb, orbit.back()) == orbit);
        for (const auto& a : orbit) {
          CHECK(seen.insert(a).second);
          CHECK(std::binary_search(orbit.begin(), orbit.end(), amb.times_q_power(a, 1)));
        }
        total += orbit.size();
      }
      CHECK(total == amb.length());
    }
    const Ambient amb(2, {5, 9});
    CHECK(all_orbits(amb).size() == 8);
    CHECK(qorbit(amb, Index{1, 1}).size() == 12);
  }

  TEST_CASE("defining set validation") {
    const Ambient amb(2, {3, 7});
    CHECK(validate_defining_set(amb, fixtures::two_variable_members()).size() == 15);
    try {
      validate_defining_set(amb, fixtures::parse_all({"1,1", "2,2"}));
      FAIL("expected NotOrbitClosed");
    } catch (const NotOrbitClosed& e) {
      CHECK(e.member() == Index{2, 2});
      CHECK(e.missing() == Index{1, 4});
    }
    CHECK_THROWS_AS(validate_defining_set(amb, fixtures::parse_all({"3,1"})), std::invalid_argument);
    const auto def = validate_defining_set(amb, fixtures::parse_all({"0,0", "0,0"}));
    CHECK(def.size() == 1);
    const auto from = defining_set_from_orbits(amb, fixtures::parse_all({"0,3", "1,1", "1,3"}));
    CHECK(from.members() == fixtures::sorted(fixtures::two_variable_members()));
    CHECK(validate_defining_set(amb, {}).size() == 0);
  }

  TEST_CASE("projection") {
    const auto m = fixtures::parse_all({"1,2,0", "1,3,1", "2,0,0"});
    CHECK(project(m, 1) == fixtures::parse_all({"1", "2"}));
    CHECK(project(m, 2) == fixtures::parse_all({"1,2", "1,3", "2,0"}));
  }

  TEST_CASE("restricted representatives: canonical choice on the guard example") {
    const auto def = validate_defining_set(fixtures::guard_ambient(), fixtures::guard_members());
    const auto reps = restricted_reps(def, identity_ordering(3));
    CHECK(reps.reps() == fixtures::parse_all({"0,0,0", "0,1,1", "0,1,2"}));
    CHECK(restricted_reps_violation(def, identity_ordering(3), fixtures::guard_forbidden()) != "");
    CHECK(restricted_reps_violation(def, identity_ordering(3), fixtures::parse_all({"0,0,0", "0,1,1"})) != "");
  }

  TEST_CASE("restricted representatives: randomized choices stay valid") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 150; ++trial) {
      const auto rc = suite::random_code(rng, 100);
      const auto reps = restricted_reps(rc.def, rc.ordering, suite::random_chooser(rng));
      CHECK(restricted_reps_violation(rc.def, rc.ordering, reps.reps()) == "");
      std::set<Index> covered;
      for (const auto& e : reps.original_reps())
        for (const auto& a : qorbit(rc.def.ambient(), e)) covered.insert(a);
      CHECK(std::vector<Index>(covered.begin(), covered.end()) == rc.def.members());
    }
  }

  TEST_CASE("representatives with a bad chooser are rejected") {
    const auto def = validate_defining_set(fixtures::two_variable_ambient(), fixtures::two_variable_members());
    CHECK_THROWS(restricted_reps(def, identity_ordering(2), [](std::span<const std::uint32_t>) { return 99u; }));
  }
}
