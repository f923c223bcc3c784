#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace permlang {

// AI words reuse the rect letters; the two kinds differ only in how a word is
// decoded back to a permutation.
enum class AlphabetKind { Rect, Evil, Ai };

inline std::string_view alphabet_letters(AlphabetKind kind) {
  return kind == AlphabetKind::Evil ? "pqrs" : "12ud";
}

inline std::string_view alphabet_name(AlphabetKind kind) {
  switch (kind) {
    case AlphabetKind::Rect: return "rect";
    case AlphabetKind::Evil: return "evil";
    default: return "ai";
  }
}

struct Word {
  AlphabetKind kind = AlphabetKind::Rect;
  std::string letters;
  friend bool operator==(const Word&, const Word&) = default;
};

inline Word make_word(AlphabetKind kind, std::string letters) {
  for (char c : letters)
    if (alphabet_letters(kind).find(c) == std::string_view::npos)
      throw InvalidWord(std::string("letter '") + c + "' not in the " +
                        std::string(alphabet_name(kind)) + " alphabet");
  return Word{kind, std::move(letters)};
}

namespace detail {

// Substring route: nonempty, ends in '1', no "21" or "u1".
inline bool rect_letters_ok(std::string_view w) {
  if (w.empty() || w.back() != '1') return false;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if ((w[i] == '2' || w[i] == 'u') && w[i + 1] == '1') return false;
  return true;
}

// Substring route: nonempty, ends in 's', no "sp" or "sq", and everything
// after the last 'r' (the whole word if there is none) is 's'.
inline bool evil_letters_ok(std::string_view w) {
  if (w.empty() || w.back() != 's') return false;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == 's' && (w[i + 1] == 'p' || w[i + 1] == 'q')) return false;
  const size_t last_r = w.rfind('r');
  const size_t from = last_r == std::string_view::npos ? 0 : last_r + 1;
  for (size_t i = from; i < w.size(); ++i)
    if (w[i] != 's') return false;
  return true;
}

}  // namespace detail

inline bool is_valid_rect_word(const Word& w) {
  if (w.kind == AlphabetKind::Evil)
    throw InvalidWord("rect-language test on an evil-alphabet word");
  return detail::rect_letters_ok(w.letters);
}

inline bool is_valid_evil_word(const Word& w) {
  if (w.kind != AlphabetKind::Evil)
    throw InvalidWord("evil-language test on a rect-alphabet word");
  return detail::evil_letters_ok(w.letters);
}

inline bool is_valid_word(const Word& w) {
  return w.kind == AlphabetKind::Evil ? is_valid_evil_word(w)
                                      : is_valid_rect_word(w);
}

// Complete DFA over a 4-letter alphabet.  Built by hand from the forbidden
// substrings, independently of the scanners above; the two routes are tested
// against each other.
struct LanguageAutomaton {
  AlphabetKind kind = AlphabetKind::Rect;
  std::array<char, 4> letters{};
  char marked = 0;  // letter whose count equals the recoil number
  int num_states = 0;
  int start = 0;
  std::vector<char> accepting;
  std::vector<std::array<int, 4>> delta;  // delta[state][letter index]

  int letter_index(char c) const {
    for (int i = 0; i < 4; ++i)
      if (letters[i] == c) return i;
    return -1;
  }
};

// States: 0 start, 1 after '1' (accepting), 2 after '2'/'u', 3 after 'd',
// 4 dead.  '1' out of state 2 is the forbidden "21"/"u1".
inline const LanguageAutomaton& rect_language() {
  static const LanguageAutomaton aut = [] {
    LanguageAutomaton a;
    a.kind = AlphabetKind::Rect;
    a.letters = {'1', '2', 'u', 'd'};
    a.marked = 'd';
    a.num_states = 5;
    a.start = 0;
    a.accepting = {0, 1, 0, 0, 0};
    a.delta = {
        {1, 2, 2, 3},  // start
        {1, 2, 2, 3},  // after 1
        {4, 2, 2, 3},  // after 2/u
        {1, 2, 2, 3},  // after d
        {4, 4, 4, 4},  // dead
    };
    return a;
  }();
  return aut;
}

// States track (seen p/q since the last r, currently inside a trailing s-run):
// 0 = (no, no) start / after 'r', 1 = (yes, no), 2 = (no, yes) accepting,
// 3 = (yes, yes), 4 dead.  'p'/'q' after an 's' is forbidden, and a word may
// only end inside an s-run whose letters follow an 'r' or start the word.
inline const LanguageAutomaton& evil_language() {
  static const LanguageAutomaton aut = [] {
    LanguageAutomaton a;
    a.kind = AlphabetKind::Evil;
    a.letters = {'p', 'q', 'r', 's'};
    a.marked = 'r';
    a.num_states = 5;
    a.start = 0;
    a.accepting = {0, 0, 1, 0, 0};
    a.delta = {
        {1, 1, 0, 2},  // (no, no)
        {1, 1, 0, 3},  // (yes, no)
        {4, 4, 0, 2},  // (no, yes)
        {4, 4, 0, 3},  // (yes, yes)
        {4, 4, 4, 4},  // dead
    };
    return a;
  }();
  return aut;
}

inline const LanguageAutomaton& ai_language() {
  static const LanguageAutomaton aut = [] {
    LanguageAutomaton a = rect_language();
    a.kind = AlphabetKind::Ai;
    return a;
  }();
  return aut;
}

inline const LanguageAutomaton& language_for(AlphabetKind kind) {
  switch (kind) {
    case AlphabetKind::Evil: return evil_language();
    case AlphabetKind::Ai: return ai_language();
    default: return rect_language();
  }
}

inline bool accepts(const LanguageAutomaton& aut, std::string_view letters) {
  int state = aut.start;
  for (char c : letters) {
    const int ix = aut.letter_index(c);
    if (ix < 0) return false;
    state = aut.delta[state][ix];
  }
  return aut.accepting[state] != 0;
}

// Words of length n in lexicographic order of the automaton's letter order.
inline std::vector<Word> generate_words(const LanguageAutomaton& aut, int n) {
  if (n < 0) throw InvalidInput("negative word length");
  // reach[j][s]: an accepting state is exactly j letters away from s
  std::vector<std::vector<char>> reach(n + 1,
                                       std::vector<char>(aut.num_states, 0));
  for (int s = 0; s < aut.num_states; ++s) reach[0][s] = aut.accepting[s];
  for (int j = 1; j <= n; ++j)
    for (int s = 0; s < aut.num_states; ++s)
      for (int ix = 0; ix < 4 && !reach[j][s]; ++ix)
        reach[j][s] = reach[j - 1][aut.delta[s][ix]];
  std::vector<Word> out;
  std::string cur;
  auto dfs = [&](auto&& self, int state, int left) -> void {
    if (!reach[left][state]) return;
    if (left == 0) {
      out.push_back(Word{aut.kind, cur});
      return;
    }
    for (int ix = 0; ix < 4; ++ix) {
      cur.push_back(aut.letters[ix]);
      self(self, aut.delta[state][ix], left - 1);
      cur.pop_back();
    }
  };
  dfs(dfs, aut.start, n);
  return out;
}

inline BigInt count_words(const LanguageAutomaton& aut, int n) {
  if (n < 0) throw InvalidInput("negative word length");
  std::vector<BigInt> dp(aut.num_states, 0);
  dp[aut.start] = 1;
  for (int step = 0; step < n; ++step) {
    std::vector<BigInt> next(aut.num_states, 0);
    for (int s = 0; s < aut.num_states; ++s) {
      if (dp[s] == 0) continue;
      for (int ix = 0; ix < 4; ++ix) next[aut.delta[s][ix]] += dp[s];
    }
    dp = std::move(next);
  }
  BigInt total = 0;
  for (int s = 0; s < aut.num_states; ++s)
    if (aut.accepting[s]) total += dp[s];
  return total;
}

// Words of length n containing exactly k copies of the marked letter.
inline BigInt count_words_marked(const LanguageAutomaton& aut, int n, int k) {
  if (n < 0) throw InvalidInput("negative word length");
  if (k < 0 || k > n) return 0;
  const int marked_ix = aut.letter_index(aut.marked);
  std::vector<std::vector<BigInt>> dp(aut.num_states,
                                      std::vector<BigInt>(k + 1, 0));
  dp[aut.start][0] = 1;
  for (int step = 0; step < n; ++step) {
    std::vector<std::vector<BigInt>> next(aut.num_states,
                                          std::vector<BigInt>(k + 1, 0));
    for (int s = 0; s < aut.num_states; ++s)
      for (int c = 0; c <= k; ++c) {
        if (dp[s][c] == 0) continue;
        for (int ix = 0; ix < 4; ++ix) {
          const int c2 = c + (ix == marked_ix ? 1 : 0);
          if (c2 <= k) next[aut.delta[s][ix]][c2] += dp[s][c];
        }
      }
    dp = std::move(next);
  }
  BigInt total = 0;
  for (int s = 0; s < aut.num_states; ++s)
    if (aut.accepting[s]) total += dp[s][k];
  return total;
}

// b: substitute 2->p, u->q, d->r, 1->s, then reverse the prefix before the
// last 'r' (if any).
inline Word map_b(const Word& w) {
  if (w.kind != AlphabetKind::Rect)
    throw InvalidWord("map_b expects a rect-alphabet word");
  if (!is_valid_rect_word(w)) throw InvalidWord("word not in the rect language");
  std::string out;
  out.reserve(w.letters.size());
  for (char c : w.letters) {
    switch (c) {
      case '2': out.push_back('p'); break;
      case 'u': out.push_back('q'); break;
      case 'd': out.push_back('r'); break;
      default: out.push_back('s'); break;
    }
  }
  const size_t last_r = out.rfind('r');
  if (last_r != std::string::npos)
    std::reverse(out.begin(), out.begin() + last_r);
  return Word{AlphabetKind::Evil, std::move(out)};
}

// Inverse of b: reverse the prefix before the last 'r', then substitute back.
inline Word map_b_inv(const Word& w) {
  if (w.kind != AlphabetKind::Evil)
    throw InvalidWord("map_b_inv expects an evil-alphabet word");
  if (!is_valid_evil_word(w)) throw InvalidWord("word not in the evil language");
  std::string out = w.letters;
  const size_t last_r = out.rfind('r');
  if (last_r != std::string::npos)
    std::reverse(out.begin(), out.begin() + last_r);
  for (char& c : out) {
    switch (c) {
      case 'p': c = '2'; break;
      case 'q': c = 'u'; break;
      case 'r': c = 'd'; break;
      default: c = '1'; break;
    }
  }
  return Word{AlphabetKind::Rect, std::move(out)};
}

}  // namespace permlang
