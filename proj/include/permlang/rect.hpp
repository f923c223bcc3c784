#pragma once

#include <optional>
#include <string>

#include "patterns.hpp"
#include "permutation.hpp"
#include "words.hpp"

namespace permlang {

// The four rect operators.  Preconditions are the structural ones only;
// rectangularity of the input is the caller's contract (the operators
// preserve it but do not check it).

inline Permutation apply_psi1(const Permutation& p) { return insert_rho(p, 1, 1); }

inline Permutation apply_psi2(const Permutation& p) {
  if (p.empty() || p.at(1) == 1)
    throw DomainError("psi_2 needs a permutation not starting with 1");
  return insert_rho(p, 1, 2);
}

inline Permutation apply_psiu(const Permutation& p) {
  if (p.empty() || p.at(1) == 1)
    throw DomainError("psi_u needs a permutation not starting with 1");
  return insert_rho(p, p.at(1), 1);
}

inline Permutation apply_psid(const Permutation& p) {
  if (p.empty()) throw DomainError("psi_d is undefined on the empty permutation");
  return insert_rho(p, p.at(1) + 1, 1);
}

// Leftmost letter is the outermost operator; folds right to left from e_0.
inline Permutation decode_rect(const Word& w) {
  if (!is_valid_rect_word(w)) throw InvalidWord("word not in the rect language");
  Permutation cur;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    switch (*it) {
      case '1': cur = apply_psi1(cur); break;
      case '2': cur = apply_psi2(cur); break;
      case 'u': cur = apply_psiu(cur); break;
      default: cur = apply_psid(cur); break;
    }
  }
  return cur;
}

// Peels the outermost operator per step.  The first two entries decide the
// letter; exactly one case applies to a rectangular permutation, no case to
// anything else, so this doubles as a rectangularity recognizer.
inline std::optional<Word> try_encode_rect(const Permutation& p) {
  if (p.empty()) throw InvalidInput("no word encodes the empty permutation");
  Permutation cur = p;
  std::string letters;
  while (!cur.empty()) {
    if (cur.at(1) == 1) {
      letters.push_back('1');
      cur = remove_entry(cur, 1);
    } else if (cur.at(2) == 1) {
      letters.push_back(cur.at(1) == 2 ? 'd' : '2');
      cur = remove_entry(cur, cur.at(1) == 2 ? 1 : 2);
    } else if (cur.at(2) == cur.at(1) + 1) {
      letters.push_back('u');
      cur = remove_entry(cur, 1);
    } else if (cur.at(2) == cur.at(1) - 1) {
      letters.push_back('d');
      cur = remove_entry(cur, 1);
    } else {
      return std::nullopt;
    }
  }
  return Word{AlphabetKind::Rect, std::move(letters)};
}

inline Word encode_rect(const Permutation& p) {
  if (auto w = try_encode_rect(p)) return *w;
  throw NotRectangular("permutation is not rectangular");
}

}  // namespace permlang
