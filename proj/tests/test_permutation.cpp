#include <catch2/catch_amalgamated.hpp>

#include <permlang/permutation.hpp>
#include <permlang/errors.hpp>

using namespace permlang;

namespace {
Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }
}

TEST_CASE("constructor validates one-line notation") {
  CHECK_NOTHROW(P({}));
  CHECK_NOTHROW(P({1}));
  CHECK_NOTHROW(P({3, 1, 2}));
  CHECK_THROWS_AS(P({0, 1}), InvalidInput);
  CHECK_THROWS_AS(P({1, 3}), InvalidInput);
  CHECK_THROWS_AS(P({2, 2, 1}), InvalidInput);
}

TEST_CASE("identity and accessors") {
  const auto e = Permutation::identity(4);
  CHECK(e == P({1, 2, 3, 4}));
  CHECK(e.is_identity());
  CHECK(P({}).is_identity());
  CHECK_FALSE(P({2, 1}).is_identity());
  const auto p = P({3, 1, 4, 2});
  CHECK(p.at(1) == 3);
  CHECK(p.at(4) == 2);
  CHECK(p.position_of(4) == 3);
  CHECK_THROWS_AS(p.at(0), InvalidInput);
  CHECK_THROWS_AS(p.at(5), InvalidInput);
}

TEST_CASE("reduce flattens an arbitrary integer sequence") {
  CHECK(reduce({6, 7, 8, 5, 4, 2, 1}) == P({5, 6, 7, 4, 3, 2, 1}));
  CHECK(reduce({10, 3}) == P({2, 1}));
  CHECK(reduce({}) == P({}));
}

TEST_CASE("inverse and composition") {
  const auto p = P({3, 1, 4, 2});
  CHECK(inverse(p) == P({2, 4, 1, 3}));
  CHECK(compose(p, inverse(p)) == Permutation::identity(4));
  // (a.b)(i) = a(b(i))
  CHECK(compose(P({2, 1, 3}), P({3, 1, 2})) == P({3, 2, 1}));
}

TEST_CASE("recoils are the descents of the inverse") {
  CHECK(recoils(P({2, 4, 1, 3})) == std::vector<int>{1, 3});
  CHECK(recoils(Permutation::identity(5)).empty());
  CHECK(recoil_count(P({3, 2, 1})) == 2);
  for (const auto& v : std::vector<std::vector<int>>{
           {2, 4, 1, 3}, {5, 1, 4, 2, 3}, {1, 3, 2, 5, 4}})
    CHECK(recoils(P(v)) == descents(inverse(P(v))));
}

TEST_CASE("descents") {
  CHECK(descents(P({3, 1, 2})) == std::vector<int>{1});
  CHECK(descent_count(P({1, 4, 3, 2})) == 2);
}

TEST_CASE("Lehmer code round trip") {
  const auto p = P({4, 1, 3, 2});
  CHECK(lehmer_code(p) == std::vector<int>{3, 0, 1, 0});
  CHECK(lehmer_decode(lehmer_code(p)) == p);
  CHECK(lehmer_decode({0, 0, 0}) == Permutation::identity(3));
}

TEST_CASE("insertion rho") {
  // rho_{3,4} of 5674321: values >= 3 shift up, 3 lands in position 4
  CHECK(insert_rho(P({5, 6, 7, 4, 3, 2, 1}), 3, 4) ==
        P({6, 7, 8, 3, 5, 4, 2, 1}));
  CHECK(insert_rho(P({}), 1, 1) == P({1}));
  CHECK_THROWS_AS(insert_rho(P({2, 1}), 4, 1), InvalidInput);
  CHECK_THROWS_AS(insert_rho(P({2, 1}), 1, 4), InvalidInput);
}

TEST_CASE("remove_entry undoes an insertion") {
  const auto q = insert_rho(P({5, 6, 7, 4, 3, 2, 1}), 3, 4);
  CHECK(remove_entry(q, 4) == P({5, 6, 7, 4, 3, 2, 1}));
  CHECK(remove_entry(P({1}), 1) == P({}));
}

TEST_CASE("shifting gamma") {
  // gamma_{5,2} of 5674321 lifts the entry in position 5 to position 2
  CHECK(shift_gamma(P({5, 6, 7, 4, 3, 2, 1}), 5, 2) ==
        P({5, 3, 6, 7, 4, 2, 1}));
  CHECK_THROWS_AS(shift_gamma(P({2, 1}), 2, 2), InvalidInput);
  CHECK_THROWS_AS(shift_gamma(P({2, 1}), 1, 2), InvalidInput);
}

TEST_CASE("move_entry repositions in either direction") {
  CHECK(move_entry(P({1, 2, 3, 4}), 1, 3) == P({2, 3, 1, 4}));
  CHECK(move_entry(P({2, 3, 1, 4}), 3, 1) == P({1, 2, 3, 4}));
  CHECK(move_entry(P({2, 1}), 2, 2) == P({2, 1}));
}

TEST_CASE("sandwich parameters") {
  const auto s = sandwich_params(P({1, 2, 5, 3, 4}));
  REQUIRE(s.has_value());
  CHECK(*s == SandwichParams{2, 2});
  CHECK(sandwich_params(P({2, 1})) == SandwichParams{0, 1});
  CHECK(sandwich_params(P({3, 1, 2})) == SandwichParams{0, 2});
  CHECK_FALSE(sandwich_params(Permutation::identity(3)).has_value());
  CHECK_FALSE(sandwich_params(P({2, 1, 3})).has_value());
  CHECK_FALSE(sandwich_params(P({2, 4, 1, 3})).has_value());
}
