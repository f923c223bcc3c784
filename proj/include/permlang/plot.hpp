#pragma once

#include <string>

#include "permutation.hpp"

namespace permlang {

// One row per value, top value first; '*' marks (i, p_i).
inline std::string ascii_plot(const Permutation& p) {
  std::string out;
  const int n = p.size();
  for (int v = n; v >= 1; --v) {
    for (int i = 1; i <= n; ++i) out.push_back(p.at(i) == v ? '*' : '.');
    out.push_back('\n');
  }
  return out;
}

// Unit-square grid scaled by 10, one filled dot per (i, p_i).  Integer
// coordinates only, so output is byte-stable.
inline std::string svg_plot(const Permutation& p) {
  const int n = p.size();
  const int w = 10 * (n > 0 ? n : 1);
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) +
         "\" height=\"" + std::to_string(w) + "\" viewBox=\"0 0 " +
         std::to_string(w) + " " + std::to_string(w) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(w) + "\" height=\"" +
         std::to_string(w) + "\" fill=\"white\" stroke=\"black\"/>\n";
  for (int g = 1; g < n; ++g) {
    const std::string c = std::to_string(10 * g);
    out += "<line x1=\"" + c + "\" y1=\"0\" x2=\"" + c + "\" y2=\"" +
           std::to_string(w) + "\" stroke=\"#ddd\"/>\n";
    out += "<line x1=\"0\" y1=\"" + c + "\" x2=\"" + std::to_string(w) +
           "\" y2=\"" + c + "\" stroke=\"#ddd\"/>\n";
  }
  for (int i = 1; i <= n; ++i) {
    out += "<circle cx=\"" + std::to_string(10 * i - 5) + "\" cy=\"" +
           std::to_string(10 * (n - p.at(i)) + 5) + "\" r=\"3\" fill=\"black\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace permlang
