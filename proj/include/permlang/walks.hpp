#pragma once

#include <array>
#include <cstdlib>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"
#include "words.hpp"

namespace permlang {

// Walk on the path graph 1..7: starts and ends at vertex 4, steps L/R, and
// stays inside the path.  Even prefixes therefore sit on {2,4,6}.
struct Walk {
  std::string steps;
  friend bool operator==(const Walk&, const Walk&) = default;
};

inline bool is_valid_walk(const Walk& w) {
  if (w.steps.size() % 2 != 0) return false;
  int v = 4;
  for (char c : w.steps) {
    if (c != 'L' && c != 'R') return false;
    v += c == 'R' ? 1 : -1;
    if (v < 1 || v > 7) return false;
  }
  return v == 4;
}

// Step pair -> letter, by current even-step vertex.  At 4: LR->1, RL->d,
// LL->u (to 2), RR->2 (to 6).  At 2: LR->2, RL->u, RR->d (to 4).  At 6:
// LR->2, RL->u, LL->d (to 4).  A terminal '1' completes the word.
inline Word walk_to_word(const Walk& w) {
  if (!is_valid_walk(w)) throw InvalidWalk("not a closed walk at 4 inside 1..7");
  std::string letters;
  letters.reserve(w.steps.size() / 2 + 1);
  int v = 4;
  for (size_t t = 0; t < w.steps.size(); t += 2) {
    const bool l1 = w.steps[t] == 'L';
    const bool l2 = w.steps[t + 1] == 'L';
    if (v == 4) {
      if (l1 && !l2) letters.push_back('1');
      else if (!l1 && l2) letters.push_back('d');
      else if (l1 && l2) { letters.push_back('u'); v = 2; }
      else { letters.push_back('2'); v = 6; }
    } else {
      // at 2 the out-of-range pair is LL, at 6 it is RR; validation above
      // already excluded both
      if (l1 && !l2) letters.push_back('2');
      else if (!l1 && l2) letters.push_back('u');
      else { letters.push_back('d'); v = 4; }
    }
  }
  letters.push_back('1');
  return Word{AlphabetKind::Rect, std::move(letters)};
}

// Inverse: drop the terminal '1', replay letters as step pairs.  '1' never
// occurs away from vertex 4 in a valid word ("21"/"u1" are forbidden), and
// the prefix always returns to 4.
inline Walk word_to_walk(const Word& w) {
  if (!is_valid_rect_word(w)) throw InvalidWord("word not in the rect language");
  std::string steps;
  steps.reserve(2 * (w.letters.size() - 1));
  int v = 4;
  for (size_t t = 0; t + 1 < w.letters.size(); ++t) {
    const char c = w.letters[t];
    if (v == 4) {
      switch (c) {
        case '1': steps += "LR"; break;
        case 'd': steps += "RL"; break;
        case 'u': steps += "LL"; v = 2; break;
        default: steps += "RR"; v = 6; break;
      }
    } else {
      switch (c) {
        case '2': steps += "LR"; break;
        case 'u': steps += "RL"; break;
        case 'd': steps += (v == 2) ? "RR" : "LL"; v = 4; break;
        default: throw InternalError("'1' away from vertex 4 in a valid word");
      }
    }
  }
  if (v != 4) throw InternalError("word prefix did not return to vertex 4");
  return Walk{std::move(steps)};
}

// Closed walks at 4 of the given length, by powers of the path adjacency
// matrix.
inline BigInt count_walks(int length) {
  if (length < 0 || length % 2 != 0)
    throw InvalidInput("walk length must be even and nonnegative");
  std::array<std::array<BigInt, 7>, 7> m{};
  for (int i = 0; i < 7; ++i) m[i][i] = 1;
  for (int step = 0; step < length; ++step) {
    std::array<std::array<BigInt, 7>, 7> next{};
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) {
        if (j > 0) next[i][j - 1] += m[i][j];
        if (j < 6) next[i][j + 1] += m[i][j];
      }
    m = next;
  }
  return m[3][3];
}

// All valid walks of the given length, lexicographic with L < R.
inline std::vector<Walk> enumerate_walks(int length) {
  if (length < 0 || length % 2 != 0)
    throw InvalidInput("walk length must be even and nonnegative");
  std::vector<Walk> out;
  std::string cur;
  auto dfs = [&](auto&& self, int v) -> void {
    const int left = length - static_cast<int>(cur.size());
    if (left == 0) {
      if (v == 4) out.push_back(Walk{cur});
      return;
    }
    if (std::abs(v - 4) > left) return;
    if (v > 1) {
      cur.push_back('L');
      self(self, v - 1);
      cur.pop_back();
    }
    if (v < 7) {
      cur.push_back('R');
      self(self, v + 1);
      cur.pop_back();
    }
  };
  dfs(dfs, 4);
  return out;
}

}  // namespace permlang
