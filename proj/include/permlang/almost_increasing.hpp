#pragma once

#include <string>

#include "patterns.hpp"
#include "permutation.hpp"
#include "rect.hpp"
#include "words.hpp"

namespace permlang {

// 1-almost-increasing: for every i, at most one j <= i has p_j > i.
// Equivalently, avoidance of 4321, 4312, 3421, 3412; both characterizations
// are evaluated and must agree.
inline bool is_almost_increasing(const Permutation& p) {
  bool threshold = true;
  for (int i = 1; i <= p.size() && threshold; ++i) {
    int above = 0;
    for (int j = 1; j <= i; ++j)
      if (p.at(j) > i) ++above;
    threshold = above <= 1;
  }
  const bool by_patterns = avoids_all(p, almost_increasing_patterns());
  if (threshold != by_patterns)
    throw InternalError("almost-increasing characterizations disagree");
  return threshold;
}

// Reuses the rect letters with different insertions: '1' = rho_{1,1},
// '2' = rho_{2,1}, 'u' = rho_{2,2}, 'd' = rho_{1,2}.
inline Permutation decode_ai(const Word& w) {
  if (!is_valid_rect_word(w)) throw InvalidWord("word not in the rect language");
  Permutation cur;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    switch (*it) {
      case '1': cur = insert_rho(cur, 1, 1); break;
      case '2': cur = insert_rho(cur, 2, 1); break;
      case 'u': cur = insert_rho(cur, 2, 2); break;
      default: cur = insert_rho(cur, 1, 2); break;
    }
  }
  return cur;
}

// Peel discriminators: a leading 1 was inserted by '1', a second-position 1
// by 'd', a leading 2 by '2', a second-position 2 by 'u'.  The first two
// rules win ties, which is exactly what keeps "21" and "u1" out of the word.
inline Word encode_ai(const Permutation& p) {
  if (p.empty()) throw InvalidInput("no word encodes the empty permutation");
  if (!is_almost_increasing(p))
    throw NotAlmostIncreasing("permutation is not 1-almost-increasing");
  Permutation cur = p;
  std::string letters;
  while (!cur.empty()) {
    if (cur.at(1) == 1) {
      letters.push_back('1');
      cur = remove_entry(cur, 1);
    } else if (cur.size() >= 2 && cur.at(2) == 1) {
      letters.push_back('d');
      cur = remove_entry(cur, 2);
    } else if (cur.at(1) == 2) {
      letters.push_back('2');
      cur = remove_entry(cur, 1);
    } else if (cur.size() >= 2 && cur.at(2) == 2) {
      letters.push_back('u');
      cur = remove_entry(cur, 2);
    } else {
      throw InternalError("almost-increasing peel is stuck");
    }
  }
  return Word{AlphabetKind::Ai, std::move(letters)};
}

// Word-level change of class.  These bijections do not preserve recoils.
inline Permutation ai_to_rect(const Permutation& p) {
  return decode_rect(Word{AlphabetKind::Rect, encode_ai(p).letters});
}

inline Permutation rect_to_ai(const Permutation& p) {
  return decode_ai(Word{AlphabetKind::Ai, encode_rect(p).letters});
}

}  // namespace permlang
