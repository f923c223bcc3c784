#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace permlang {

// One-line notation over {1..n}.  Positions and values are both 1-based; the
// empty permutation e_0 is allowed.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> values) : vals_(std::move(values)) {
    std::vector<char> seen(vals_.size(), 0);
    for (int v : vals_) {
      if (v < 1 || v > size() || seen[v - 1])
        throw InvalidInput("not a permutation of 1..n");
      seen[v - 1] = 1;
    }
  }

  static Permutation identity(int n) {
    if (n < 0) throw InvalidInput("negative permutation size");
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(vals_.size()); }
  bool empty() const { return vals_.empty(); }

  // value at position i
  int at(int i) const {
    if (i < 1 || i > size()) throw InvalidInput("position out of range");
    return vals_[i - 1];
  }

  // position of value v
  int position_of(int v) const {
    for (int i = 0; i < size(); ++i)
      if (vals_[i] == v) return i + 1;
    throw InvalidInput("value out of range");
  }

  const std::vector<int>& values() const { return vals_; }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (vals_[i] != i + 1) return false;
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.vals_ <=> b.vals_;
  }

 private:
  std::vector<int> vals_;
};

// Pattern of any sequence of distinct integers: values replaced by ranks.
inline Permutation reduce(const std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return seq[a] < seq[b]; });
  std::vector<int> out(n);
  for (int rank = 0; rank < n; ++rank) {
    if (rank > 0 && seq[idx[rank]] == seq[idx[rank - 1]])
      throw InvalidInput("reduce requires distinct entries");
    out[idx[rank]] = rank + 1;
  }
  return Permutation(std::move(out));
}

inline Permutation inverse(const Permutation& p) {
  std::vector<int> out(p.size());
  for (int i = 1; i <= p.size(); ++i) out[p.at(i) - 1] = i;
  return Permutation(std::move(out));
}

// (a.b)(i) = a(b(i))
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw InvalidInput("compose size mismatch");
  std::vector<int> out(a.size());
  for (int i = 1; i <= a.size(); ++i) out[i - 1] = a.at(b.at(i));
  return Permutation(std::move(out));
}

// Recoils: values i with pos(i) > pos(i+1); equivalently descents of the
// inverse.  Returned sorted.
inline std::vector<int> recoils(const Permutation& p) {
  std::vector<int> pos(p.size() + 1);
  for (int i = 1; i <= p.size(); ++i) pos[p.at(i)] = i;
  std::vector<int> out;
  for (int v = 1; v < p.size(); ++v)
    if (pos[v] > pos[v + 1]) out.push_back(v);
  return out;
}

inline int recoil_count(const Permutation& p) {
  return static_cast<int>(recoils(p).size());
}

// Descents: positions i with p_i > p_{i+1}.  Returned sorted.
inline std::vector<int> descents(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i < p.size(); ++i)
    if (p.at(i) > p.at(i + 1)) out.push_back(i);
  return out;
}

inline int descent_count(const Permutation& p) {
  return static_cast<int>(descents(p).size());
}

// c_i = #{j > i : p_j < p_i}
inline std::vector<int> lehmer_code(const Permutation& p) {
  std::vector<int> c(p.size(), 0);
  for (int i = 1; i <= p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j)
      if (p.at(j) < p.at(i)) ++c[i - 1];
  return c;
}

inline Permutation lehmer_decode(const std::vector<int>& code) {
  const int n = static_cast<int>(code.size());
  std::vector<int> remaining(n);
  std::iota(remaining.begin(), remaining.end(), 1);
  std::vector<int> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (code[i] < 0 || code[i] >= static_cast<int>(remaining.size()))
      throw InvalidInput("lehmer code entry out of range");
    out.push_back(remaining[code[i]]);
    remaining.erase(remaining.begin() + code[i]);
  }
  return Permutation(std::move(out));
}

// rho_{i,j}: increment values >= i, then insert value i at position j.
inline Permutation insert_rho(const Permutation& p, int i, int j) {
  const int n = p.size();
  if (i < 1 || i > n + 1 || j < 1 || j > n + 1)
    throw InvalidInput("insert_rho index out of range");
  std::vector<int> out;
  out.reserve(n + 1);
  for (int pos = 1; pos <= n; ++pos) {
    const int v = p.at(pos);
    out.push_back(v >= i ? v + 1 : v);
  }
  out.insert(out.begin() + (j - 1), i);
  return Permutation(std::move(out));
}

// Delete position pos and reduce; inverse of insert_rho at a known position.
inline Permutation remove_entry(const Permutation& p, int pos) {
  const int n = p.size();
  if (pos < 1 || pos > n) throw InvalidInput("remove_entry position out of range");
  const int removed = p.at(pos);
  std::vector<int> out;
  out.reserve(n - 1);
  for (int i = 1; i <= n; ++i) {
    if (i == pos) continue;
    const int v = p.at(i);
    out.push_back(v > removed ? v - 1 : v);
  }
  return Permutation(std::move(out));
}

// Remove the entry at position `from` and reinsert it at position `to`.
inline Permutation move_entry(const Permutation& p, int from, int to) {
  const int n = p.size();
  if (from < 1 || from > n || to < 1 || to > n)
    throw InvalidInput("move_entry position out of range");
  std::vector<int> out = p.values();
  const int moved = out[from - 1];
  out.erase(out.begin() + (from - 1));
  out.insert(out.begin() + (to - 1), moved);
  return Permutation(std::move(out));
}

// gamma_{a,b}, b < a: remove the entry at position a and reinsert it at
// position b.
inline Permutation shift_gamma(const Permutation& p, int a, int b) {
  if (b < 1 || a > p.size() || b >= a)
    throw InvalidInput("shift_gamma needs 1 <= b < a <= n");
  return move_entry(p, a, b);
}

struct SandwichParams {
  int a = 0;
  int b = 0;
  friend bool operator==(const SandwichParams&, const SandwichParams&) = default;
};

// p is (a,b)-sandwiched if it begins with 1..a (a may be 0) and ends with the
// run a+1..a+b, b >= 1.  Identities are excluded; for a non-identity the
// parameters are unique: the prefix run length forces a, then b = p_n - a.
inline std::optional<SandwichParams> sandwich_params(const Permutation& p) {
  const int n = p.size();
  if (p.is_identity()) return std::nullopt;
  int a = 0;
  while (a < n && p.at(a + 1) == a + 1) ++a;
  const int b = p.at(n) - a;
  if (b < 1 || b > n - a) return std::nullopt;
  for (int j = 1; j <= b; ++j)
    if (p.at(n - b + j) != a + j) return std::nullopt;
  return SandwichParams{a, b};
}

}  // namespace permlang
