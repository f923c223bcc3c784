#pragma once

#include <string>
#include <vector>

#include "patterns.hpp"
#include "permutation.hpp"
#include "words.hpp"

namespace permlang {

inline int least_recoil(const Permutation& p) {
  const auto r = recoils(p);
  if (r.empty()) throw DomainError("identity has no recoil");
  return r.front();
}

// The four evil operators.  As with the rect ones, only the structural
// preconditions are checked; evil-avoidance of the input is the caller's
// contract.

inline Permutation apply_psip(const Permutation& p) {
  if (p.is_identity()) throw DomainError("psi_p is undefined on identities");
  return insert_rho(p, 1, 1);
}

// rho_{t+1,1} for t the least recoil; if p is (a,b)-sandwiched the new entry
// is then shifted from the front to position a+2 via gamma_{n-b+2, a+2}
// applied to the size-(n+1) intermediate.
inline Permutation apply_psiq(const Permutation& p) {
  if (p.is_identity()) throw DomainError("psi_q is undefined on identities");
  const int n = p.size();
  Permutation out = insert_rho(p, least_recoil(p) + 1, 1);
  if (auto sp = sandwich_params(p))
    out = shift_gamma(out, n - sp->b + 2, sp->a + 2);
  return out;
}

inline Permutation apply_psir(const Permutation& p) {
  if (p.empty()) throw DomainError("psi_r is undefined on the empty permutation");
  return insert_rho(p, 1, p.size() + 1);
}

// Needs a suffix 1..t; since the suffix ends at position n, t can only be p_n.
inline Permutation apply_psis(const Permutation& p) {
  if (p.empty()) return Permutation({1});
  const int n = p.size();
  const int t = p.at(n);
  for (int j = 1; j <= t; ++j)
    if (p.at(n - t + j) != j)
      throw DomainError("psi_s needs an identity suffix");
  return insert_rho(p, t + 1, n + 1);
}

inline Permutation decode_evil(const Word& w) {
  if (!is_valid_evil_word(w)) throw InvalidWord("word not in the evil language");
  Permutation cur;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    switch (*it) {
      case 'p': cur = apply_psip(cur); break;
      case 'q': cur = apply_psiq(cur); break;
      case 'r': cur = apply_psir(cur); break;
      default: cur = apply_psis(cur); break;
    }
  }
  return cur;
}

namespace detail {

// Undo psi_q by generate-and-verify.  An image has first entry v >= 2 and no
// identity suffix.  The preimage either was not sandwiched (strip the front
// entry) or was (undo the gamma shift first); build both candidates, keep the
// one psi_q maps back.  Exactly one candidate verifies; any other count is a
// bug in the caller's precondition.
inline Permutation invert_psiq(const Permutation& s) {
  const int n = s.size();
  const int v = s.at(1);
  std::vector<Permutation> hits;
  auto consider = [&](const Permutation& cand) {
    if (cand.is_identity()) return;
    if (apply_psiq(cand) != s) return;
    for (const auto& h : hits)
      if (h == cand) return;
    hits.push_back(cand);
  };
  consider(remove_entry(s, 1));
  // Sandwiched preimage: s_2.. starts with the run 1..a+1, so a is that run
  // length minus one and b = v-1-a.  Undo the shift by moving the entry at
  // position a+2 back to position n-b+1, then strip the front entry.
  if (n >= 2 && s.at(2) == 1) {
    int run = 1;
    while (2 + run <= n && s.at(2 + run) == run + 1) ++run;
    const int a = run - 1;
    const int b = v - 1 - a;
    if (b >= 1 && a + 2 < n - b + 1)
      consider(remove_entry(move_entry(s, a + 2, n - b + 1), 1));
  }
  if (hits.size() != 1)
    throw InternalError("psi_q inversion found " +
                        std::to_string(hits.size()) + " preimages");
  return hits.front();
}

}  // namespace detail

// Peels the outermost operator per step.  Discriminators: a leading 1 means
// psi_p; a suffix 1..m means psi_s (m >= 2) or psi_r (m == 1); otherwise
// psi_q (its images never carry an identity suffix).
inline Word encode_evil(const Permutation& p) {
  if (p.empty()) throw InvalidInput("no word encodes the empty permutation");
  if (!is_evil_avoiding(p)) throw NotEvilAvoiding("permutation is not evil-avoiding");
  Permutation cur = p;
  std::string letters;
  while (!cur.empty()) {
    const int n = cur.size();
    if (cur.is_identity()) {
      letters.append(n, 's');
      break;
    }
    if (cur.at(1) == 1) {
      letters.push_back('p');
      cur = remove_entry(cur, 1);
      continue;
    }
    const int m = cur.at(n);
    bool suffix = true;
    for (int j = 1; j <= m && suffix; ++j) suffix = cur.at(n - m + j) == j;
    if (suffix) {
      letters.push_back(m >= 2 ? 's' : 'r');
      cur = remove_entry(cur, n);
    } else {
      letters.push_back('q');
      cur = detail::invert_psiq(cur);
    }
  }
  return Word{AlphabetKind::Evil, std::move(letters)};
}

// The map psi_{i,k,n}: Evil(i-1, k-1) -> Evil(n-1, k), defined for
// k+1 <= i <= n-1.  Computed as psi_s^(n-i-1) after psi_r and cross-checked
// against the closed block form (p_1+n-i, ..., p_{i-1}+n-i, 1, ..., n-i).
inline Permutation apply_psi_ikn(const Permutation& p, int i, int k, int n) {
  if (i != p.size() + 1) throw InvalidInput("psi_{i,k,n} needs i = |p| + 1");
  if (k != recoil_count(p) + 1)
    throw InvalidInput("psi_{i,k,n} needs k = recoils(p) + 1");
  if (!(k + 1 <= i && i <= n - 1))
    throw InvalidInput("psi_{i,k,n} needs k+1 <= i <= n-1");
  Permutation out = apply_psir(p);
  for (int step = 0; step < n - i - 1; ++step) out = apply_psis(out);
  std::vector<int> block;
  block.reserve(n - 1);
  for (int j = 1; j < i; ++j) block.push_back(p.at(j) + n - i);
  for (int v = 1; v <= n - i; ++v) block.push_back(v);
  if (out != Permutation(std::move(block)))
    throw InternalError("psi_{i,k,n} routes disagree");
  return out;
}

}  // namespace permlang
