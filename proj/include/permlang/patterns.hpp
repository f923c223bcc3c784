#pragma once

#include <optional>
#include <vector>

#include "permutation.hpp"

namespace permlang {

namespace detail {

// Extend a partial embedding one position at a time; a new position must
// relate to every chosen one exactly as the pattern prescribes.
inline bool find_embedding(const Permutation& p, const Permutation& sig,
                           std::vector<int>& chosen, int from) {
  const int t = static_cast<int>(chosen.size());
  if (t == sig.size()) return true;
  for (int pos = from; pos <= p.size() - (sig.size() - t - 1); ++pos) {
    bool ok = true;
    for (int s = 0; s < t && ok; ++s)
      ok = (p.at(chosen[s]) < p.at(pos)) == (sig.at(s + 1) < sig.at(t + 1));
    if (!ok) continue;
    chosen.push_back(pos);
    if (find_embedding(p, sig, chosen, pos + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

// Positions (1-based, increasing) of the first occurrence of sig in p, in
// lexicographic order of position vectors; nullopt if p avoids sig.
inline std::optional<std::vector<int>> find_pattern(const Permutation& p,
                                                    const Permutation& sig) {
  if (sig.empty()) return std::vector<int>{};
  if (sig.size() > p.size()) return std::nullopt;
  std::vector<int> chosen;
  chosen.reserve(sig.size());
  if (detail::find_embedding(p, sig, chosen, 1)) return chosen;
  return std::nullopt;
}

inline bool contains_pattern(const Permutation& p, const Permutation& sig) {
  return find_pattern(p, sig).has_value();
}

inline bool avoids_all(const Permutation& p, const std::vector<Permutation>& sigs) {
  for (const auto& s : sigs)
    if (contains_pattern(p, s)) return false;
  return true;
}

struct PatternHit {
  Permutation pattern;
  std::vector<int> positions;
};

inline std::optional<PatternHit> find_any_pattern(
    const Permutation& p, const std::vector<Permutation>& sigs) {
  for (const auto& s : sigs)
    if (auto hit = find_pattern(p, s)) return PatternHit{s, *hit};
  return std::nullopt;
}

inline const std::vector<Permutation>& evil_patterns() {
  static const std::vector<Permutation> v = {
      Permutation({2, 4, 1, 3}), Permutation({4, 1, 3, 2}),
      Permutation({4, 2, 1, 3}), Permutation({3, 2, 1, 4})};
  return v;
}

inline const std::vector<Permutation>& rect_patterns() {
  static const std::vector<Permutation> v = {
      Permutation({2, 4, 1, 3}), Permutation({2, 4, 3, 1}),
      Permutation({4, 2, 1, 3}), Permutation({4, 2, 3, 1})};
  return v;
}

inline const std::vector<Permutation>& almost_increasing_patterns() {
  static const std::vector<Permutation> v = {
      Permutation({4, 3, 2, 1}), Permutation({4, 3, 1, 2}),
      Permutation({3, 4, 2, 1}), Permutation({3, 4, 1, 2})};
  return v;
}

inline const std::vector<Permutation>& avoid_123_132_patterns() {
  static const std::vector<Permutation> v = {Permutation({1, 2, 3}),
                                             Permutation({1, 3, 2})};
  return v;
}

inline bool is_evil_avoiding(const Permutation& p) {
  return avoids_all(p, evil_patterns());
}

// Pattern-scan route; rect.hpp's peel recognizer is the fast one.
inline bool is_rectangular(const Permutation& p) {
  return avoids_all(p, rect_patterns());
}

}  // namespace permlang
