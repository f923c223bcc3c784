#pragma once

#include <algorithm>
#include <string_view>
#include <vector>

#include "counting.hpp"
#include "patterns.hpp"
#include "permutation.hpp"

namespace permlang {

enum class PermClass { Evil, Rect, Ai, Avoid123and132 };

inline const std::vector<Permutation>& class_patterns(PermClass c) {
  switch (c) {
    case PermClass::Evil: return evil_patterns();
    case PermClass::Rect: return rect_patterns();
    case PermClass::Ai: return almost_increasing_patterns();
    default: return avoid_123_132_patterns();
  }
}

inline std::string_view class_name(PermClass c) {
  switch (c) {
    case PermClass::Evil: return "evil";
    case PermClass::Rect: return "rect";
    case PermClass::Ai: return "ai";
    default: return "avoid-123-132";
  }
}

// Ground truth by exhaustive pattern scan, lexicographic order.  Capped at
// n = 10; everything past that is for the closed forms.
inline std::vector<Permutation> enumerate_class(int n, PermClass c) {
  if (n < 0 || n > 10) throw InvalidInput("oracle enumeration is capped at n = 10");
  const auto& pats = class_patterns(c);
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    Permutation p(v);
    if (avoids_all(p, pats)) out.push_back(std::move(p));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline CountTable bucket_counts(int n, PermClass c) {
  CountTable t;
  for (const auto& p : enumerate_class(n, c)) {
    const int k = recoil_count(p);
    BigInt v = t.has(n, k) ? t.get(n, k) + 1 : BigInt(1);
    t.set(n, k, std::move(v), CountMethod::BruteForce);
  }
  return t;
}

// Extra statistic, reported but never asserted against a claim.
inline CountTable bucket_counts_by_descents(int n, PermClass c) {
  CountTable t;
  for (const auto& p : enumerate_class(n, c)) {
    const int k = descent_count(p);
    BigInt v = t.has(n, k) ? t.get(n, k) + 1 : BigInt(1);
    t.set(n, k, std::move(v), CountMethod::BruteForce);
  }
  return t;
}

}  // namespace permlang
