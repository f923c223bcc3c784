#pragma once

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "almost_increasing.hpp"
#include "counting.hpp"
#include "evil.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "parseq.hpp"
#include "patterns.hpp"
#include "permutation.hpp"
#include "plot.hpp"
#include "rect.hpp"
#include "text.hpp"
#include "walks.hpp"
#include "words.hpp"

namespace permlang {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // counterexample or informational payload
};

struct VerifyOptions {
  int max_n = 8;  // exhaustive sweeps go up to this size
};

namespace detail {

template <class F>
void for_each_perm(int n, F&& fn) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    fn(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

template <class F>
void run_check(std::vector<CheckResult>& out, std::string name, F&& body) {
  try {
    std::optional<std::string> bad = body();
    out.push_back({std::move(name), !bad.has_value(), bad.value_or("")});
  } catch (const std::exception& e) {
    out.push_back({std::move(name), false, std::string("exception: ") + e.what()});
  }
}

inline std::string show_table(const CountTable& t, int n) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, cell] : t.cells) {
    if (key.first != n) continue;
    if (!first) os << " ";
    first = false;
    os << key.second << ":" << cell.value;
  }
  return os.str();
}

}  // namespace detail

inline std::vector<CheckResult> run_verify(const Fixtures& fx,
                                           const VerifyOptions& opt = {}) {
  namespace d = detail;
  std::vector<CheckResult> res;
  const int N = opt.max_n;

  d::run_check(res, "perm.recoils-are-inverse-descents", [&]() -> std::optional<std::string> {
    for (int n = 0; n <= N; ++n) {
      std::optional<std::string> bad;
      d::for_each_perm(n, [&](const Permutation& p) {
        if (bad) return;
        if (recoils(p) != descents(inverse(p)))
          bad = format_permutation(p);
      });
      if (bad) return bad;
    }
    return std::nullopt;
  });

  d::run_check(res, "perm.sandwich-least-recoil", [&]() -> std::optional<std::string> {
    for (int n = 2; n <= N; ++n) {
      std::optional<std::string> bad;
      d::for_each_perm(n, [&](const Permutation& p) {
        if (bad) return;
        if (auto sp = sandwich_params(p))
          if (least_recoil(p) != sp->a + sp->b)
            bad = format_permutation(p);
      });
      if (bad) return bad;
    }
    return std::nullopt;
  });

  d::run_check(res, "langs.scanner-dfa-agree", [&]() -> std::optional<std::string> {
    for (auto kind : {AlphabetKind::Rect, AlphabetKind::Evil}) {
      const auto& aut = language_for(kind);
      const auto letters = alphabet_letters(kind);
      std::string cur;
      auto sweep = [&](auto&& self) -> std::optional<std::string> {
        if (!cur.empty()) {
          const Word w{kind, cur};
          if (is_valid_word(w) != accepts(aut, cur))
            return std::string(alphabet_name(kind)) + " word " + cur;
        }
        if (cur.size() >= 7) return std::nullopt;
        for (char c : letters) {
          cur.push_back(c);
          if (auto bad = self(self)) return bad;
          cur.pop_back();
        }
        return std::nullopt;
      };
      if (auto bad = sweep(sweep)) return bad;
    }
    return std::nullopt;
  });

  d::run_check(res, "langs.counts-match-recurrence", [&]() -> std::optional<std::string> {
    for (int n = 1; n <= std::max(12, N); ++n) {
      const BigInt e = seq_count(n);
      if (count_words(rect_language(), n) != e) return "rect words n=" + std::to_string(n);
      if (count_words(evil_language(), n) != e) return "evil words n=" + std::to_string(n);
    }
    if (count_words(rect_language(), 0) != 0 || count_words(evil_language(), 0) != 0)
      return std::string("empty word accepted");
    return std::nullopt;
  });

  d::run_check(res, "langs.generated-words-sound", [&]() -> std::optional<std::string> {
    for (auto kind : {AlphabetKind::Rect, AlphabetKind::Evil}) {
      const auto& aut = language_for(kind);
      // order is by the automaton's letter order, not ASCII; compare ranks
      auto ranks = [&](const std::string& s) {
        std::string r = s;
        for (char& c : r) c = static_cast<char>('0' + aut.letter_index(c));
        return r;
      };
      for (int n = 1; n <= N; ++n) {
        const auto words = generate_words(aut, n);
        if (BigInt(words.size()) != count_words(aut, n))
          return std::string(alphabet_name(kind)) + " count n=" + std::to_string(n);
        for (size_t i = 0; i < words.size(); ++i) {
          if (!is_valid_word(words[i]))
            return std::string(alphabet_name(kind)) + " invalid " + words[i].letters;
          if (i > 0 && ranks(words[i - 1].letters) >= ranks(words[i].letters))
            return std::string(alphabet_name(kind)) + " order " + words[i].letters;
        }
      }
    }
    return std::nullopt;
  });

  d::run_check(res, "rect.roundtrip", [&]() -> std::optional<std::string> {
    for (int n = 1; n <= N; ++n) {
      for (const auto& p : enumerate_class(n, PermClass::Rect)) {
        const Word w = encode_rect(p);
        if (!is_valid_rect_word(w)) return "invalid word for " + format_permutation(p);
        const auto ds = std::count(w.letters.begin(), w.letters.end(), 'd');
        if (static_cast<int>(ds) != recoil_count(p))
          return "d-count mismatch for " + format_permutation(p);
        if (decode_rect(w) != p) return "roundtrip " + format_permutation(p);
      }
      for (const auto& w : generate_words(rect_language(), n)) {
        const Permutation p = decode_rect(w);
        if (!is_rectangular(p)) return "decode left class: " + w.letters;
        if (encode_rect(p) != w) return "word roundtrip " + w.letters;
      }
    }
    return std::nullopt;
  });

  d::run_check(res, "rect.recognizer-matches-patterns", [&]() -> std::optional<std::string> {
    for (int n = 1; n <= N; ++n) {
      std::optional<std::string> bad;
      d::for_each_perm(n, [&](const Permutation& p) {
        if (bad) return;
        if (try_encode_rect(p).has_value() != is_rectangular(p))
          bad = format_permutation(p);
      });
      if (bad) return bad;
    }
    return std::nullopt;
  });

  d::run_check(res, "evil.roundtrip", [&]() -> std::optional<std::string> {
    for (int n = 1; n <= N; ++n) {
      for (const auto& p : enumerate_class(n, PermClass::Evil)) {
        const Word w = encode_evil(p);
        if (!is_valid_evil_word(w)) return "invalid word for " + format_permutation(p);
        const auto rs = std::count(w.letters.begin(), w.letters.end(), 'r');
        if (static_cast<int>(rs) != recoil_count(p))
          return "r-count mismatch for " + format_permutation(p);
        if (decode_evil(w) != p) return "roundtrip " + format_permutation(p);
      }
      for (const auto& w : generate_words(evil_language(), n)) {
        const Permutation p = decode_evil(w);
        if (!is_evil_avoiding(p)) return "decode left class: " + w.letters;
        if (encode_evil(p) != w) return "word roundtrip " + w.letters;
      }
    }
    return std::nullopt;
  });

  d::run_check(res, "rect.images-partition-class", [&]() -> std::optional<std::string> {
    for (int n = 0; n + 1 <= N; ++n) {
      std::set<Permutation> seen;
      for (const auto& p : enumerate_class(n, PermClass::Rect)) {
        std::vector<Permutation> images;
        images.push_back(apply_psi1(p));
        if (!p.empty() && p.at(1) != 1) {
          images.push_back(apply_psi2(p));
          images.push_back(apply_psiu(p));
        }
        if (!p.empty()) images.push_back(apply_psid(p));
        for (auto& q : images)
          if (!seen.insert(q).second)
            return "duplicate image " + format_permutation(q);
      }
      const auto next = enumerate_class(n + 1, PermClass::Rect);
      if (seen != std::set<Permutation>(next.begin(), next.end()))
        return "images of Rect(" + std::to_string(n) + ") miss the class";
    }
    return std::nullopt;
  });

  d::run_check(res, "evil.images-partition-class", [&]() -> std::optional<std::string> {
    for (int n = 0; n + 1 <= N; ++n) {
      std::set<Permutation> seen;
      for (const auto& p : enumerate_class(n, PermClass::Evil)) {
        std::vector<Permutation> images;
        if (!p.is_identity()) {
          images.push_back(apply_psip(p));
          images.push_back(apply_psiq(p));
        }
        if (!p.empty()) images.push_back(apply_psir(p));
        try {
          images.push_back(apply_psis(p));
        } catch (const DomainError&) {
        }
        for (auto& q : images)
          if (!seen.insert(q).second)
            return "duplicate image " + format_permutation(q);
      }
      const auto next = enumerate_class(n + 1, PermClass::Evil);
      if (seen != std::set<Permutation>(next.begin(), next.end()))
        return "images of Evil(" + std::to_string(n) + ") miss the class";
    }
    return std::nullopt;
  });

  d::run_check(res, "map.word-bijection", [&]() -> std::optional<std::string> {
    for (int n = 1; n <= N; ++n) {
      std::set<std::string> images;
      for (const auto& w : generate_words(rect_language(), n)) {
        const Word e = map_b(w);
        if (!is_valid_evil_word(e)) return "map_b left language: " + w.letters;
        if (std::count(w.letters.begin(), w.letters.end(), 'd') !=
            std::count(e.letters.begin(), e.letters.end(), 'r'))
          return "marked count changed: " + w.letters;
        if (map_b_inv(e) != w) return "roundtrip " + w.letters;
        images.insert(e.letters);
      }
      if (BigInt(images.size()) != count_words(evil_language(), n))
        return "image misses evil words at n=" + std::to_string(n);
    }
    return std::nullopt;
  });

  d::run_check(res, "bijection.evil-to-rect", [&]() -> std::optional<std::string> {
    for (int n = 1; n <= N; ++n) {
      std::set<Permutation> images;
      for (const auto& p : enumerate_class(n, PermClass::Evil)) {
        const Permutation q = decode_rect(map_b_inv(encode_evil(p)));
        if (!is_rectangular(q)) return "image not rectangular: " + format_permutation(p);
        if (recoil_count(q) != recoil_count(p))
          return "recoil number changed: " + format_permutation(p);
        if (!images.insert(q).second) return "not injective at " + format_permutation(q);
      }
      const auto rect = enumerate_class(n, PermClass::Rect);
      if (images != std::set<Permutation>(rect.begin(), rect.end()))
        return "not onto Rect(" + std::to_string(n) + ")";
    }
    return std::nullopt;
  });

  d::run_check(res, "bijection.rect-to-ai", [&]() -> std::optional<std::string> {
    for (int n = 1; n <= N; ++n) {
      std::set<Permutation> images;
      for (const auto& p : enumerate_class(n, PermClass::Rect)) {
        const Permutation q = rect_to_ai(p);
        if (!is_almost_increasing(q))
          return "image not almost-increasing: " + format_permutation(p);
        if (ai_to_rect(q) != p) return "inverse failed at " + format_permutation(p);
        images.insert(q);
      }
      const auto ai = enumerate_class(n, PermClass::Ai);
      if (images != std::set<Permutation>(ai.begin(), ai.end()))
        return "not onto AI(" + std::to_string(n) + ")";
    }
    return std::nullopt;
  });

  d::run_check(res, "ai.roundtrip", [&]() -> std::optional<std::string> {
    for (int n = 1; n <= N; ++n) {
      for (const auto& p : enumerate_class(n, PermClass::Ai))
        if (decode_ai(encode_ai(p)) != p) return "roundtrip " + format_permutation(p);
      for (const auto& w : generate_words(ai_language(), n)) {
        const Permutation p = decode_ai(w);
        if (!is_almost_increasing(p)) return "decode left class: " + w.letters;
        if (encode_ai(p) != w) return "word roundtrip " + w.letters;
      }
    }
    return std::nullopt;
  });

  d::run_check(res, "ai.products-of-double-avoiders", [&]() -> std::optional<std::string> {
    for (int n = 1; n <= std::min(N, 6); ++n) {
      const auto cls = enumerate_class(n, PermClass::Avoid123and132);
      std::set<Permutation> products;
      for (const auto& t1 : cls)
        for (const auto& t2 : cls) {
          const Permutation prod = compose(t1, t2);
          if (!is_almost_increasing(prod))
            return format_permutation(t1) + " . " + format_permutation(t2);
          products.insert(prod);
        }
      if (n == 4) {
        const auto ai = enumerate_class(4, PermClass::Ai);
        if (products != std::set<Permutation>(ai.begin(), ai.end()))
          return std::string("products do not cover AI(4)");
      }
    }
    return std::nullopt;
  });

  d::run_check(res, "parseq.cardinalities", [&]() -> std::optional<std::string> {
    for (int n = 2; n <= N + 1; ++n) {
      const auto evil = enumerate_class(n - 1, PermClass::Evil);
      std::map<int, int> by_k;
      for (const auto& p : evil) ++by_k[recoil_count(p)];
      std::map<int, int> st_by_k;
      for (const auto& p : enumerate_class(n, PermClass::Evil))
        if (p.at(1) == 1) ++st_by_k[recoil_count(p)];
      for (int k = 0; k <= n - 1; ++k) {
        const int expect = by_k.count(k) ? by_k[k] : 0;
        const int st = st_by_k.count(k) ? st_by_k[k] : 0;
        const auto ps = enumerate_parseq(n, k);
        if (static_cast<int>(ps.size()) != expect || st != expect)
          return "n=" + std::to_string(n) + " k=" + std::to_string(k);
      }
    }
    return std::nullopt;
  });

  d::run_check(res, "parseq.P-roundtrip", [&]() -> std::optional<std::string> {
    for (int n = 2; n <= N + 1; ++n) {
      for (const auto& p : enumerate_class(n, PermClass::Evil)) {
        if (p.at(1) != 1) continue;
        const GrassmannianWitness w = make_witness(p);
        if (P_inv(P_map(w)) != w) return "P roundtrip " + format_permutation(p);
      }
      for (int k = 0; k <= n - 1; ++k)
        for (const auto& ps : enumerate_parseq(n, k))
          if (P_map(P_inv(ps)) != ps)
            return "P_inv roundtrip n=" + std::to_string(n) + " k=" + std::to_string(k);
    }
    return std::nullopt;
  });

  d::run_check(res, "parseq.encoder-agreement", [&]() -> std::optional<std::string> {
    for (int n = 1; n <= N; ++n)
      for (const auto& p : enumerate_class(n, PermClass::Evil))
        if (parseq_encode_evil(p) != encode_evil(p))
          return format_permutation(p);
    return std::nullopt;
  });

  d::run_check(res, "parseq.conjugation", [&]() -> std::optional<std::string> {
    for (int n = 1; n <= N; ++n)
      for (const auto& p : enumerate_class(n, PermClass::Evil))
        if (!p.is_identity() && !conjugation_check(p, N + 1))
          return format_permutation(p);
    return std::nullopt;
  });

  d::run_check(res, "walks.counts", [&]() -> std::optional<std::string> {
    for (int n = 1; n <= std::max(12, N); ++n)
      if (count_walks(2 * n - 2) != count_words(rect_language(), n))
        return "n=" + std::to_string(n);
    return std::nullopt;
  });

  d::run_check(res, "walks.roundtrip", [&]() -> std::optional<std::string> {
    for (int n = 1; n <= N; ++n)
      for (const auto& w : generate_words(rect_language(), n)) {
        const Walk walk = word_to_walk(w);
        if (!is_valid_walk(walk)) return "invalid walk for " + w.letters;
        if (walk_to_word(walk) != w) return "word roundtrip " + w.letters;
      }
    for (int len = 0; len <= std::min(14, 2 * N - 2); len += 2)
      for (const auto& walk : enumerate_walks(len))
        if (word_to_walk(walk_to_word(walk)) != walk)
          return "walk roundtrip " + walk.steps;
    return std::nullopt;
  });

  d::run_check(res, "counting.closed-vs-recurrence", [&]() -> std::optional<std::string> {
    for (int n = 1; n <= 30; ++n) {
      BigInt row = 1;  // identity, k = 0
      for (int k = 1; k < n; ++k) {
        const BigInt c = evil_count_closed(n, k);
        if (c != evil_count_recur(n, k))
          return "n=" + std::to_string(n) + " k=" + std::to_string(k);
        row += c;
      }
      if (row != seq_count(n)) return "row sum n=" + std::to_string(n);
    }
    return std::nullopt;
  });

  d::run_check(res, "counting.refined-counts-agree", [&]() -> std::optional<std::string> {
    for (int n = 1; n <= N; ++n) {
      const CountTable evil = bucket_counts(n, PermClass::Evil);
      const CountTable rect = bucket_counts(n, PermClass::Rect);
      for (int k = 0; k <= n - 1; ++k) {
        const BigInt expected = k == 0 ? BigInt(1) : evil_count_closed(n, k);
        const BigInt e = evil.has(n, k) ? evil.get(n, k) : BigInt(0);
        const BigInt r = rect.has(n, k) ? rect.get(n, k) : BigInt(0);
        const BigInt we = count_words_marked(evil_language(), n, k);
        const BigInt wr = count_words_marked(rect_language(), n, k);
        if (e != expected || r != expected || we != expected || wr != expected)
          return "n=" + std::to_string(n) + " k=" + std::to_string(k);
      }
    }
    return std::nullopt;
  });

  d::run_check(res, "fixtures.pairs32", [&]() -> std::optional<std::string> {
    for (const auto& row : fx.pairs32) {
      if (encode_rect(row.rect_perm).letters != row.rect_word)
        return "encode_rect " + row.rect_word;
      if (map_b(Word{AlphabetKind::Rect, row.rect_word}).letters != row.evil_word)
        return "map_b " + row.rect_word;
      if (decode_evil(Word{AlphabetKind::Evil, row.evil_word}) != row.evil_perm)
        return "decode_evil " + row.evil_word;
      if (encode_evil(row.evil_perm).letters != row.evil_word)
        return "encode_evil " + row.evil_word;
      if (map_b_inv(Word{AlphabetKind::Evil, row.evil_word}).letters != row.rect_word)
        return "map_b_inv " + row.evil_word;
      if (decode_rect(Word{AlphabetKind::Rect, row.rect_word}) != row.rect_perm)
        return "decode_rect " + row.rect_word;
    }
    return std::nullopt;
  });

  d::run_check(res, "fixtures.large-pair", [&]() -> std::optional<std::string> {
    if (!is_evil_avoiding(fx.evil101)) return std::string("evil101 not evil-avoiding");
    if (!is_rectangular(fx.rect101)) return std::string("rect101 not rectangular");
    if (!try_encode_rect(fx.rect101)) return std::string("rect101 fails the recognizer");
    const Permutation mapped = decode_rect(map_b_inv(encode_evil(fx.evil101)));
    if (mapped != fx.rect101) return std::string("evil101 does not map to rect101");
    if (recoil_count(fx.evil101) != recoil_count(fx.rect101))
      return std::string("recoil numbers differ across the pair");
    return std::nullopt;
  });

  // Reported as information only: descent-refined counts carry no claim.
  d::run_check(res, "info.descent-buckets", [&]() -> std::optional<std::string> {
    return std::nullopt;
  });
  {
    std::ostringstream os;
    for (int n = 1; n <= std::min(N, 7); ++n) {
      const CountTable evil = bucket_counts_by_descents(n, PermClass::Evil);
      const CountTable rect = bucket_counts_by_descents(n, PermClass::Rect);
      os << "n=" << n << " evil[" << d::show_table(evil, n) << "] rect["
         << d::show_table(rect, n) << "]; ";
    }
    res.back().detail = os.str();
  }

  return res;
}

}  // namespace permlang
