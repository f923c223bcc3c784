// Acceptance gate: ten criteria, one PASS/FAIL line each, exit code equal to
// the number of failures.  Every criterion is independent; an exception
// inside one marks it failed and the rest still run.

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <permlang/fixtures.hpp>
#include <permlang/permlang.hpp>

using namespace permlang;

namespace {

int failures = 0;

void criterion(int idx, const std::string& name,
               const std::function<std::string()>& body) {
  std::string detail;
  try {
    detail = body();
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  if (detail.empty()) {
    std::cout << "PASS  criterion " << idx << ": " << name << "\n";
  } else {
    ++failures;
    std::cout << "FAIL  criterion " << idx << ": " << name << " -- " << detail
              << "\n";
  }
}

std::string show(const Permutation& p) { return format_permutation(p); }

// Composed bijection Evil(n,k) -> Rect(n,k).
Permutation evil_to_rect(const Permutation& p) {
  return decode_rect(map_b_inv(encode_evil(p)));
}

const std::vector<long> kSequence{1, 2, 6, 20, 68, 232, 792, 2704, 9232};

}  // namespace

int main() {
  // Class enumerations are the expensive part; do each (n, class) once.
  std::map<int, std::vector<Permutation>> evil, rect, ai;
  for (int n = 1; n <= 9; ++n) {
    evil[n] = enumerate_class(n, PermClass::Evil);
    rect[n] = enumerate_class(n, PermClass::Rect);
    ai[n] = enumerate_class(n, PermClass::Ai);
  }

  Fixtures fx;
  std::string fixtures_error;
  try {
    fx = load_fixtures(FIXTURES_DIR);
  } catch (const std::exception& e) {
    fixtures_error = e.what();
  }

  criterion(1, "sequence counts 1,2,6,20,68,232,792,2704,9232 for n <= 9", [&] {
    for (int n = 1; n <= 9; ++n) {
      const BigInt want = kSequence[n - 1];
      if (BigInt(evil[n].size()) != want)
        return "evil(" + std::to_string(n) + ")";
      if (BigInt(rect[n].size()) != want)
        return "rect(" + std::to_string(n) + ")";
      if (BigInt(ai[n].size()) != want) return "ai(" + std::to_string(n) + ")";
      if (seq_count(n) != want) return "recurrence(" + std::to_string(n) + ")";
      if (count_words(evil_language(), n) != want)
        return "evil words(" + std::to_string(n) + ")";
      if (count_words(rect_language(), n) != want)
        return "rect words(" + std::to_string(n) + ")";
    }
    return std::string();
  });

  criterion(2, "recoil-refined counts agree across both classes, both word "
               "languages and the closed form, n <= 9", [&] {
    for (int n = 1; n <= 9; ++n) {
      const auto be = bucket_counts(n, PermClass::Evil);
      const auto br = bucket_counts(n, PermClass::Rect);
      for (int k = 0; k < n; ++k) {
        const BigInt closed = k == 0 ? BigInt(1) : evil_count_closed(n, k);
        const BigInt from_evil = be.has(n, k) ? be.get(n, k) : BigInt(0);
        const BigInt from_rect = br.has(n, k) ? br.get(n, k) : BigInt(0);
        std::ostringstream at;
        at << "(n=" << n << ",k=" << k << ")";
        if (from_evil != closed) return "evil brute != closed " + at.str();
        if (from_rect != closed) return "rect brute != closed " + at.str();
        if (count_words_marked(evil_language(), n, k) != closed)
          return "marked evil words != closed " + at.str();
        if (count_words_marked(rect_language(), n, k) != closed)
          return "marked rect words != closed " + at.str();
      }
    }
    return std::string();
  });

  criterion(3, "decode_rect . map_b_inv . encode_evil is a recoil-preserving "
               "bijection Evil(n,k) -> Rect(n,k), n <= 9", [&] {
    for (int n = 1; n <= 9; ++n) {
      std::vector<Permutation> images;
      images.reserve(evil[n].size());
      for (const auto& p : evil[n]) {
        const Permutation q = evil_to_rect(p);
        if (recoil_count(q) != recoil_count(p))
          return "recoil change at " + show(p);
        images.push_back(q);
      }
      std::sort(images.begin(), images.end());
      if (std::adjacent_find(images.begin(), images.end()) != images.end())
        return "not injective at n = " + std::to_string(n);
      if (images != rect[n]) return "not onto at n = " + std::to_string(n);
    }
    return std::string();
  });

  criterion(4, "the 101-element fixture pair maps across exactly", [&] {
    if (!fixtures_error.empty()) return "fixtures: " + fixtures_error;
    if (fx.evil101.size() != 101 || fx.rect101.size() != 101)
      return std::string("fixture permutations are not 101 elements");
    if (evil_to_rect(fx.evil101) != fx.rect101)
      return std::string("image differs from the rectangular fixture");
    return std::string();
  });

  criterion(5, "worked 20-element example reproduces byte-exactly", [&] {
    const Permutation rect_perm({4, 1, 2, 5, 6, 3, 9, 8, 10, 7, 11, 13, 12,
                                 15, 14, 17, 18, 19, 20, 16});
    const Permutation evil_perm({3, 4, 5, 1, 12, 11, 18, 19, 15, 16, 17, 20,
                                 13, 14, 8, 9, 10, 6, 7, 2});
    const std::string rect_word = "22uud1dud11d1d1uuud1";
    const std::string evil_word = "qqqsrsrssrqrsrqqpprs";
    if (encode_rect(rect_perm).letters != rect_word) return std::string("encode_rect");
    if (map_b(make_word(AlphabetKind::Rect, rect_word)).letters != evil_word)
      return std::string("map_b");
    if (decode_evil(make_word(AlphabetKind::Evil, evil_word)) != evil_perm)
      return std::string("decode_evil");
    if (decode_rect(make_word(AlphabetKind::Rect, rect_word)) != rect_perm)
      return std::string("decode_rect");
    if (map_b_inv(make_word(AlphabetKind::Evil, evil_word)).letters != rect_word)
      return std::string("map_b_inv");
    if (encode_evil(evil_perm).letters != evil_word) return std::string("encode_evil");
    return std::string();
  });

  criterion(6, "all 32 table rows reproduced by the codecs and map_b", [&] {
    if (!fixtures_error.empty()) return "fixtures: " + fixtures_error;
    for (size_t i = 0; i < fx.pairs32.size(); ++i) {
      const auto& row = fx.pairs32[i];
      const std::string at = " in row " + std::to_string(i + 1);
      if (encode_rect(row.rect_perm).letters != row.rect_word)
        return "encode_rect" + at;
      if (decode_rect(make_word(AlphabetKind::Rect, row.rect_word)) != row.rect_perm)
        return "decode_rect" + at;
      if (encode_evil(row.evil_perm).letters != row.evil_word)
        return "encode_evil" + at;
      if (decode_evil(make_word(AlphabetKind::Evil, row.evil_word)) != row.evil_perm)
        return "decode_evil" + at;
      if (map_b(make_word(AlphabetKind::Rect, row.rect_word)).letters != row.evil_word)
        return "map_b" + at;
      if (map_b_inv(make_word(AlphabetKind::Evil, row.evil_word)).letters != row.rect_word)
        return "map_b_inv" + at;
    }
    return std::string();
  });

  criterion(7, "partition-sequence examples, conjugation identities and the "
               "independent encoder, n <= 8", [&] {
    auto PS = [](int ambient, std::vector<std::vector<int>> parts) {
      PartitionSequence ps{ambient, {}};
      for (auto& p : parts) ps.partitions.emplace_back(std::move(p));
      return ps;
    };
    if (P_map(make_witness(Permutation({1, 3, 2, 5, 4}))) !=
        PS(5, {{3, 2}, {1, 1, 1}}))
      return std::string("P example");
    if (Psi1(PS(4, {{2}, {1, 1}})) != PS(5, {{2, 2}, {1, 1, 1}}))
      return std::string("Psi1 example");
    if (Psi2(PS(5, {{3, 2}, {1, 1, 1}})) != PS(6, {{4, 2}, {1, 1, 1, 1}}))
      return std::string("Psi2 example");
    if (Phi(PS(4, {{2, 1}}), 4, 2, 5) != PS(5, {{3}, {2, 2, 1}}))
      return std::string("Phi example");
    for (int n = 1; n <= 8; ++n)
      for (const auto& p : evil[n]) {
        if (!p.is_identity() && !conjugation_check(p))
          return "conjugation at " + show(p);
        if (parseq_encode_evil(p).letters != encode_evil(p).letters)
          return "encoders disagree at " + show(p);
      }
    return std::string();
  });

  criterion(8, "walk counts for n <= 12 and walk/word round trips", [&] {
    for (int n = 1; n <= 12; ++n)
      if (count_walks(2 * n - 2) != seq_count(n))
        return "count at n = " + std::to_string(n);
    for (int n = 1; n <= 8; ++n)
      for (const auto& w : generate_words(rect_language(), n))
        if (walk_to_word(word_to_walk(w)).letters != w.letters)
          return "word round trip at " + w.letters;
    for (int len = 0; len <= 14; len += 2)
      for (const auto& walk : enumerate_walks(len))
        if (word_to_walk(walk_to_word(walk)).steps != walk.steps)
          return "walk round trip at " + walk.steps;
    return std::string();
  });

  criterion(9, "products of {123,132}-avoiders are 1-almost-increasing, with "
               "exact coverage at n = 4", [&] {
    for (int n = 1; n <= 6; ++n) {
      const auto avoiders = enumerate_class(n, PermClass::Avoid123and132);
      for (const auto& a : avoiders)
        for (const auto& b : avoiders)
          if (!is_almost_increasing(compose(a, b)))
            return "product " + show(a) + " . " + show(b);
    }
    const auto avoiders4 = enumerate_class(4, PermClass::Avoid123and132);
    std::set<Permutation> products;
    for (const auto& a : avoiders4)
      for (const auto& b : avoiders4) products.insert(compose(a, b));
    const std::set<Permutation> expected(ai[4].begin(), ai[4].end());
    if (products != expected) return std::string("coverage at n = 4");
    if (expected.size() != 20) return std::string("|AI(4)| != 20");
    return std::string();
  });

  criterion(10, "recurrence equals closed form for 1 <= k < n <= 30", [&] {
    for (int n = 1; n <= 30; ++n) {
      BigInt row = 1;
      for (int k = 1; k < n; ++k) {
        const BigInt a = evil_count_recur(n, k);
        if (a != evil_count_closed(n, k))
          return "(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
        row += a;
      }
      if (row != seq_count(n)) return "row sum at n = " + std::to_string(n);
    }
    return std::string();
  });

  std::cout << (failures ? "ACCEPTANCE: " + std::to_string(failures) + " criterion(s) failed"
                         : std::string("ACCEPTANCE: all 10 criteria passed"))
            << "\n";
  return failures;
}
