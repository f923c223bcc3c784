#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include <permlang/counting.hpp>
#include <permlang/oracle.hpp>

using namespace permlang;

namespace {
Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }
}

TEST_CASE("small classes are listed exactly") {
  CHECK(enumerate_class(0, PermClass::Evil) == std::vector<Permutation>{P({})});
  CHECK(enumerate_class(1, PermClass::Rect) == std::vector<Permutation>{P({1})});
  // every length-4 pattern is avoided trivially at n = 3
  CHECK(enumerate_class(3, PermClass::Evil).size() == 6);
  CHECK(enumerate_class(3, PermClass::Ai).size() == 6);
  CHECK(enumerate_class(3, PermClass::Avoid123and132) ==
        std::vector<Permutation>{P({2, 1, 3}), P({2, 3, 1}), P({3, 1, 2}),
                                 P({3, 2, 1})});
}

TEST_CASE("class sizes at n = 4 and beyond") {
  for (int n = 4; n <= 7; ++n) {
    const auto target = seq_count(n);
    CHECK(BigInt(enumerate_class(n, PermClass::Evil).size()) == target);
    CHECK(BigInt(enumerate_class(n, PermClass::Rect).size()) == target);
    CHECK(BigInt(enumerate_class(n, PermClass::Ai).size()) == target);
  }
  CHECK(enumerate_class(5, PermClass::Avoid123and132).size() == 16);  // 2^(n-1)
}

TEST_CASE("enumeration is lexicographic and within the class") {
  const auto cls = enumerate_class(4, PermClass::Rect);
  CHECK(std::is_sorted(cls.begin(), cls.end()));
  for (const auto& p : cls) CHECK(avoids_all(p, rect_patterns()));
  CHECK(enumerate_class(4, PermClass::Evil) !=
        enumerate_class(4, PermClass::Rect));  // same size, different members
}

TEST_CASE("the oracle is capped") {
  CHECK_THROWS_AS(enumerate_class(11, PermClass::Evil), InvalidInput);
}

TEST_CASE("recoil buckets match the closed form") {
  for (int n = 2; n <= 6; ++n) {
    const auto evil = bucket_counts(n, PermClass::Evil);
    const auto rect = bucket_counts(n, PermClass::Rect);
    CHECK(evil.get(n, 0) == 1);
    for (int k = 1; k < n; ++k) {
      CHECK(evil.get(n, k) == evil_count_closed(n, k));
      CHECK(rect.get(n, k) == evil_count_closed(n, k));
    }
    CHECK(evil.row_sum(n) == seq_count(n));
  }
}

TEST_CASE("descent buckets are reported but differ from recoil buckets") {
  const auto by_descents = bucket_counts_by_descents(4, PermClass::Evil);
  CHECK(by_descents.row_sum(4) == 20);
}
