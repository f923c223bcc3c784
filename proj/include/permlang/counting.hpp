#pragma once

#include <algorithm>
#include <map>
#include <utility>

#include "errors.hpp"
#include "numeric.hpp"

namespace permlang {

// C(a,b) with the convention C(a,b) = 0 whenever b < 0 or b > a.
inline BigInt binomial(int a, int b) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigInt num = 1;
  for (int i = 1; i <= b; ++i) {
    num *= a - b + i;
    num /= i;  // exact: product of i consecutive integers is divisible by i!
  }
  return num;
}

// Common count of all three classes: e(n) = 4 e(n-1) - 2 e(n-2), e(1) = 1,
// e(2) = 2.
inline BigInt seq_count(int n) {
  if (n < 1) throw InvalidInput("seq_count needs n >= 1");
  BigInt a = 1, b = 2;  // e(1), e(2)
  if (n == 1) return a;
  for (int i = 3; i <= n; ++i) {
    BigInt c = 4 * b - 2 * a;
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

// |Evil(n,k)| for k >= 1:  sum_{i=0}^{n-k-1} 2^i C(i+k-1, k-1) C(n-i-1, k).
// k = 0 is the single identity and is handled by callers.
inline BigInt evil_count_closed(int n, int k) {
  if (k <= 0) throw InvalidInput("evil_count_closed needs k >= 1");
  BigInt total = 0;
  for (int i = 0; i <= n - k - 1; ++i)
    total += (BigInt(1) << i) * binomial(i + k - 1, k - 1) * binomial(n - i - 1, k);
  return total;
}

// Same refined count by the recurrence
//   E(n,k) = 3 E(n-1,k) + E(n-1,k-1) - 2 E(n-2,k),
// with E(n,0) = 1 and E(n,k) = 0 for k < 0, n < 0 or k >= n >= 1.
inline BigInt evil_count_recur(int n, int k) {
  std::map<std::pair<int, int>, BigInt> memo;
  auto rec = [&](auto&& self, int nn, int kk) -> BigInt {
    if (kk < 0 || nn < 0) return 0;
    if (kk == 0) return 1;
    if (kk >= nn) return 0;
    const auto key = std::make_pair(nn, kk);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt v = 3 * self(self, nn - 1, kk) + self(self, nn - 1, kk - 1) -
               2 * self(self, nn - 2, kk);
    return memo.emplace(key, std::move(v)).first->second;
  };
  return rec(rec, n, k);
}

enum class CountMethod { ClosedForm, Recurrence, TransferMatrix, BruteForce };

inline const char* count_method_name(CountMethod m) {
  switch (m) {
    case CountMethod::ClosedForm: return "closed";
    case CountMethod::Recurrence: return "recur";
    case CountMethod::TransferMatrix: return "dfa";
    default: return "brute";
  }
}

// Refined counts keyed by (n,k), each cell remembering how it was computed.
struct CountTable {
  struct Cell {
    BigInt value;
    CountMethod method = CountMethod::BruteForce;
  };
  std::map<std::pair<int, int>, Cell> cells;

  void set(int n, int k, BigInt v, CountMethod m) {
    cells[{n, k}] = Cell{std::move(v), m};
  }
  bool has(int n, int k) const { return cells.count({n, k}) != 0; }
  const BigInt& get(int n, int k) const {
    auto it = cells.find({n, k});
    if (it == cells.end()) throw InvalidInput("count table cell missing");
    return it->second.value;
  }
  BigInt row_sum(int n) const {
    BigInt total = 0;
    for (const auto& [key, cell] : cells)
      if (key.first == n) total += cell.value;
    return total;
  }
};

}  // namespace permlang
