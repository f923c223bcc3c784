#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "permutation.hpp"
#include "walks.hpp"
#include "words.hpp"

namespace permlang {

// Accepted forms: space-separated values ("3 2 4 1"), compact digits for
// n <= 9 ("3241"), and "e0" or the empty string for e_0.
inline Permutation parse_permutation(std::string_view text) {
  std::string s(text);
  size_t begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) return Permutation();
  s = s.substr(begin, s.find_last_not_of(" \t") - begin + 1);
  if (s == "e0") return Permutation();
  std::vector<int> vals;
  if (s.find(' ') == std::string::npos && s.find('\t') == std::string::npos) {
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
        throw InvalidInput("compact permutation form allows digits 1-9 only");
      vals.push_back(c - '0');
    }
    if (vals.size() > 9)
      throw InvalidInput("compact permutation form is limited to n <= 9");
  } else {
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
      size_t used = 0;
      int v;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw InvalidInput("cannot parse permutation entry '" + tok + "'");
      }
      if (used != tok.size())
        throw InvalidInput("cannot parse permutation entry '" + tok + "'");
      vals.push_back(v);
    }
  }
  return Permutation(std::move(vals));
}

inline std::string format_permutation(const Permutation& p) {
  if (p.empty()) return "e0";
  std::string out;
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) out.push_back(' ');
    out += std::to_string(p.at(i));
  }
  return out;
}

inline Word parse_word(AlphabetKind kind, std::string_view text) {
  return make_word(kind, std::string(text));
}

inline Walk parse_walk(std::string_view text) {
  for (char c : text)
    if (c != 'L' && c != 'R') throw InvalidWalk("walk steps are L and R");
  return Walk{std::string(text)};
}

}  // namespace permlang
