#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "evil.hpp"
#include "patterns.hpp"
#include "permutation.hpp"

namespace permlang {

// Weakly decreasing positive parts; trailing zeros are never stored.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] < 1) throw InvalidInput("partition parts must be positive");
      if (i > 0 && parts[i] > parts[i - 1])
        throw InvalidInput("partition parts must be weakly decreasing");
    }
  }

  int length() const { return static_cast<int>(parts.size()); }
  int first() const { return parts.front(); }
  int smallest() const { return parts.back(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts <=> b.parts;
  }
};

// Valid for ambient n: nonempty, fits in an l x (n-l) box, and is not the
// full l x (n-l) rectangle.
inline bool partition_valid_for(const Partition& lam, int n) {
  if (lam.parts.empty()) return false;
  const int l = lam.length();
  if (lam.first() > n - l) return false;
  if (lam.first() == n - l && lam.smallest() == n - l) return false;
  return true;
}

struct PartitionSequence {
  int ambient = 0;
  std::vector<Partition> partitions;

  int k() const { return static_cast<int>(partitions.size()); }
  friend bool operator==(const PartitionSequence&, const PartitionSequence&) = default;
};

// Chain condition between consecutive partitions: with l the smallest part of
// the previous one, the next must have at least n-l parts and its first n-l
// parts all equal.
inline bool chain_ok(const Partition& prev, const Partition& next, int n) {
  const int width = n - prev.smallest();
  if (next.length() < width) return false;
  for (int j = 1; j < width; ++j)
    if (next.parts[j] != next.parts[0]) return false;
  return true;
}

inline bool is_valid_parseq(const PartitionSequence& ps) {
  if (ps.ambient < 1) return false;
  for (const auto& lam : ps.partitions)
    if (!partition_valid_for(lam, ps.ambient)) return false;
  for (int i = 0; i + 1 < ps.k(); ++i)
    if (!chain_ok(ps.partitions[i], ps.partitions[i + 1], ps.ambient)) return false;
  return true;
}

// All partitions valid for ambient n, lexicographically sorted.
inline std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto dfs = [&](auto&& self, int maxpart) -> void {
    if (!cur.empty()) {
      Partition lam(cur);
      if (partition_valid_for(lam, n)) out.push_back(std::move(lam));
    }
    if (static_cast<int>(cur.size()) >= n) return;
    for (int part = maxpart; part >= 1; --part) {
      // a partition with l parts needs first() <= n - l; prune early
      if (!cur.empty() && cur.front() > n - static_cast<int>(cur.size()) - 1) break;
      cur.push_back(part);
      self(self, part);
      cur.pop_back();
    }
  };
  dfs(dfs, n - 1);
  std::sort(out.begin(), out.end());
  return out;
}

// Brute-force route to ParSeq(n,k): filter all chains of valid partitions.
// Deliberately independent of P below; the counts are cross-validated.
inline std::vector<PartitionSequence> enumerate_parseq(int n, int k) {
  if (n < 1 || k < 0) throw InvalidInput("enumerate_parseq needs n >= 1, k >= 0");
  std::vector<PartitionSequence> out;
  if (k == 0) {
    out.push_back(PartitionSequence{n, {}});
    return out;
  }
  const auto valid = enumerate_partitions(n);
  std::vector<Partition> cur;
  auto dfs = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(PartitionSequence{n, cur});
      return;
    }
    for (const auto& lam : valid) {
      if (!cur.empty() && !chain_ok(cur.back(), lam, n)) continue;
      cur.push_back(lam);
      self(self);
      cur.pop_back();
    }
  };
  dfs(dfs);
  return out;
}

// Evil-avoiding permutation starting with 1, graded by recoil number.
struct GrassmannianWitness {
  Permutation perm;
  int recoil_count = 0;
  friend bool operator==(const GrassmannianWitness&, const GrassmannianWitness&) = default;
};

inline GrassmannianWitness make_witness(const Permutation& p) {
  if (p.empty() || p.at(1) != 1)
    throw InvalidInput("witness permutations start with 1");
  if (!is_evil_avoiding(p)) throw NotEvilAvoiding("witness is not evil-avoiding");
  return GrassmannianWitness{p, permlang::recoil_count(p)};
}

// f: Evil(n-1,k) -> St(n,k), prepend 1 and shift everything up.
inline GrassmannianWitness f_map(const Permutation& p) {
  if (!is_evil_avoiding(p)) throw NotEvilAvoiding("f needs an evil-avoiding input");
  std::vector<int> v;
  v.reserve(p.size() + 1);
  v.push_back(1);
  for (int x : p.values()) v.push_back(x + 1);
  return make_witness(Permutation(std::move(v)));
}

inline Permutation f_inv(const GrassmannianWitness& w) {
  if (w.perm.empty() || w.perm.at(1) != 1)
    throw InvalidInput("f_inv needs a permutation starting with 1");
  std::vector<int> v;
  v.reserve(w.perm.size() - 1);
  for (int i = 2; i <= w.perm.size(); ++i) v.push_back(w.perm.at(i) - 1);
  return Permutation(std::move(v));
}

// P: St(n,k) -> ParSeq(n,k).  With c the Lehmer code of the inverse and
// a_1 < ... < a_k its descent positions,
//   lambda^i = (n - a_i)^(a_i) - (0^(a_{i-1}), c_{a_{i-1}+1}, ..., c_{a_i}).
inline PartitionSequence P_map(const GrassmannianWitness& w) {
  const int n = w.perm.size();
  if (n < 1 || w.perm.at(1) != 1)
    throw InvalidInput("P needs a permutation starting with 1");
  const std::vector<int> c = lehmer_code(inverse(w.perm));
  std::vector<int> a;
  for (int i = 1; i < n; ++i)
    if (c[i - 1] > c[i]) a.push_back(i);
  if (static_cast<int>(a.size()) != w.recoil_count)
    throw InternalError("code descents disagree with the recoil number");
  PartitionSequence ps{n, {}};
  int prev = 0;
  for (int ai : a) {
    std::vector<int> parts;
    parts.reserve(ai);
    for (int j = 1; j <= ai; ++j)
      parts.push_back(n - ai - (j <= prev ? 0 : c[j - 1]));
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    ps.partitions.emplace_back(std::move(parts));
    prev = ai;
  }
  if (!is_valid_parseq(ps)) throw InternalError("P produced an invalid sequence");
  return ps;
}

// Inverse of P: the code of the inverse permutation is the left-aligned sum
// of the tuples (f_i)^(n-f_i) - lambda^i, f_i the first part of lambda^i.
inline GrassmannianWitness P_inv(const PartitionSequence& ps) {
  if (!is_valid_parseq(ps)) throw InvalidInput("invalid partition sequence");
  const int n = ps.ambient;
  std::vector<int> c(n, 0);
  for (const auto& lam : ps.partitions) {
    const int f = lam.first();
    const int width = n - f;
    if (width > n) throw InvalidInput("partition too wide for ambient size");
    for (int j = 1; j <= width; ++j)
      c[j - 1] += f - (j <= lam.length() ? lam.parts[j - 1] : 0);
  }
  const Permutation perm = inverse(lehmer_decode(c));
  GrassmannianWitness w = make_witness(perm);
  if (w.recoil_count != ps.k())
    throw InternalError("P_inv changed the recoil number");
  return w;
}

namespace detail {

inline Partition dup_first(const Partition& lam, int copies) {
  std::vector<int> parts;
  parts.reserve(lam.length() + copies);
  for (int c = 0; c < copies; ++c) parts.push_back(lam.first());
  for (int x : lam.parts) parts.push_back(x);
  return Partition(std::move(parts));
}

inline bool all_parts_equal(const Partition& lam) {
  return lam.first() == lam.smallest();
}

}  // namespace detail

// Conjugate of psi_p: duplicate the first part of every partition.
inline PartitionSequence Psi1(const PartitionSequence& ps) {
  if (!is_valid_parseq(ps)) throw InvalidInput("invalid partition sequence");
  if (ps.k() < 1) throw InvalidInput("Psi1 needs a nonempty sequence");
  PartitionSequence out{ps.ambient + 1, {}};
  for (const auto& lam : ps.partitions)
    out.partitions.push_back(detail::dup_first(lam, 1));
  if (!is_valid_parseq(out)) throw InternalError("Psi1 left the valid range");
  return out;
}

// Conjugate of psi_q: if the first partition is rectangular, prepend a part
// one larger; otherwise increment its first part.  Later partitions get their
// first part duplicated.
inline PartitionSequence Psi2(const PartitionSequence& ps) {
  if (!is_valid_parseq(ps)) throw InvalidInput("invalid partition sequence");
  if (ps.k() < 1) throw InvalidInput("Psi2 needs a nonempty sequence");
  PartitionSequence out{ps.ambient + 1, {}};
  const Partition& lam1 = ps.partitions.front();
  std::vector<int> parts = lam1.parts;
  if (detail::all_parts_equal(lam1)) {
    parts.insert(parts.begin(), lam1.first() + 1);
  } else {
    parts[0] += 1;
  }
  out.partitions.emplace_back(std::move(parts));
  for (int i = 1; i < ps.k(); ++i)
    out.partitions.push_back(detail::dup_first(ps.partitions[i], 1));
  if (!is_valid_parseq(out)) throw InternalError("Psi2 left the valid range");
  return out;
}

// Conjugate of psi_{i,k,n}: ParSeq(i,k-1) -> ParSeq(n,k).  Prepend the single
// part (i-1) and duplicate the first part of each partition n-i times.
inline PartitionSequence Phi(const PartitionSequence& ps, int i, int k, int n) {
  if (!is_valid_parseq(ps)) throw InvalidInput("invalid partition sequence");
  if (ps.ambient != i || ps.k() != k - 1)
    throw InvalidInput("Phi_{i,k,n} needs a sequence in ParSeq(i, k-1)");
  if (!(k + 1 <= i && i <= n - 1))
    throw InvalidInput("Phi_{i,k,n} needs k+1 <= i <= n-1");
  PartitionSequence out{n, {}};
  out.partitions.push_back(Partition({i - 1}));
  for (const auto& lam : ps.partitions)
    out.partitions.push_back(detail::dup_first(lam, n - i));
  if (!is_valid_parseq(out)) throw InternalError("Phi left the valid range");
  return out;
}

namespace detail {

inline Partition strip_first(const Partition& lam) {
  return Partition(std::vector<int>(lam.parts.begin() + 1, lam.parts.end()));
}

}  // namespace detail

// Word of p computed on the partition-sequence side: push p through f and P,
// then peel Phi / Psi1 / Psi2 steps.  The first partition decides: a single
// part belongs to Phi, equal first two parts to Psi1, and a strictly larger
// first part to Psi2 (inverted by generate-and-verify over its two branches).
// Independent route from encode_evil; the two must agree everywhere.
inline Word parseq_encode_evil(const Permutation& p) {
  if (p.empty()) throw InvalidInput("no word encodes the empty permutation");
  if (!is_evil_avoiding(p)) throw NotEvilAvoiding("permutation is not evil-avoiding");
  PartitionSequence cur = P_map(f_map(p));
  std::string letters;
  while (true) {
    const int n = cur.ambient;
    if (cur.partitions.empty()) {
      letters.append(n - 1, 's');
      break;
    }
    const Partition& lam1 = cur.partitions.front();
    if (lam1.length() == 1) {
      // Phi_{i,k,n} with i = lam1_1 + 1 contributed s^(n-i-1) r
      const int i = lam1.first() + 1;
      letters.append(n - i - 1, 's');
      letters.push_back('r');
      PartitionSequence next{i, {}};
      for (size_t j = 1; j < cur.partitions.size(); ++j) {
        const Partition& mu = cur.partitions[j];
        if (mu.length() <= n - i) throw InternalError("Phi peel: partition too short");
        for (int t = 0; t <= n - i; ++t)
          if (mu.parts[t] != mu.first())
            throw InternalError("Phi peel: duplicated prefix missing");
        next.partitions.emplace_back(
            std::vector<int>(mu.parts.begin() + (n - i), mu.parts.end()));
      }
      cur = std::move(next);
      continue;
    }
    if (lam1.parts[0] == lam1.parts[1]) {
      letters.push_back('p');
      PartitionSequence next{n - 1, {}};
      for (const auto& mu : cur.partitions) {
        if (mu.length() < 2 || mu.parts[0] != mu.parts[1])
          throw InternalError("Psi1 peel: duplicated first part missing");
        next.partitions.push_back(detail::strip_first(mu));
      }
      cur = std::move(next);
      continue;
    }
    letters.push_back('q');
    std::vector<PartitionSequence> hits;
    auto consider = [&](PartitionSequence cand) {
      if (!is_valid_parseq(cand)) return;
      if (Psi2(cand) != cur) return;
      for (const auto& h : hits)
        if (h == cand) return;
      hits.push_back(std::move(cand));
    };
    auto rest_stripped = [&]() -> std::optional<std::vector<Partition>> {
      std::vector<Partition> rest;
      for (size_t j = 1; j < cur.partitions.size(); ++j) {
        const Partition& mu = cur.partitions[j];
        if (mu.length() < 2 || mu.parts[0] != mu.parts[1]) return std::nullopt;
        rest.push_back(detail::strip_first(mu));
      }
      return rest;
    }();
    if (rest_stripped) {
      // rectangular branch: the prepended part comes off
      {
        PartitionSequence cand{n - 1, {}};
        cand.partitions.push_back(detail::strip_first(lam1));
        for (const auto& mu : *rest_stripped) cand.partitions.push_back(mu);
        consider(std::move(cand));
      }
      // non-rectangular branch: the incremented first part comes back down
      {
        std::vector<int> parts = lam1.parts;
        parts[0] -= 1;
        PartitionSequence cand{n - 1, {}};
        cand.partitions.emplace_back(std::move(parts));
        for (const auto& mu : *rest_stripped) cand.partitions.push_back(mu);
        consider(std::move(cand));
      }
    }
    if (hits.size() != 1)
      throw InternalError("Psi2 inversion found " +
                          std::to_string(hits.size()) + " preimages");
    cur = std::move(hits.front());
  }
  return Word{AlphabetKind::Evil, std::move(letters)};
}

// The three conjugation identities through f, P and the partition-sequence
// operators, checked against the permutation-side operators.  The psi_{i,k,n}
// family is swept over all admissible targets n <= max_target.
inline bool conjugation_check(const Permutation& p, int max_target = 9) {
  if (p.is_identity())
    throw DomainError("conjugation_check needs a non-identity permutation");
  if (!is_evil_avoiding(p)) throw NotEvilAvoiding("permutation is not evil-avoiding");
  const PartitionSequence ps = P_map(f_map(p));
  if (f_inv(P_inv(Psi1(ps))) != apply_psip(p)) return false;
  if (f_inv(P_inv(Psi2(ps))) != apply_psiq(p)) return false;
  const int i = p.size() + 1;
  const int k = recoil_count(p) + 1;
  for (int n = i + 1; n <= std::max(i + 1, max_target); ++n)
    if (f_inv(P_inv(Phi(ps, i, k, n))) != apply_psi_ikn(p, i, k, n)) return false;
  return true;
}

}  // namespace permlang
