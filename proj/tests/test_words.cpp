#include <catch2/catch_amalgamated.hpp>

#include <permlang/words.hpp>

using namespace permlang;

TEST_CASE("make_word rejects letters outside the alphabet") {
  CHECK_NOTHROW(make_word(AlphabetKind::Rect, "2ud1"));
  CHECK_NOTHROW(make_word(AlphabetKind::Evil, "pqrs"));
  CHECK_THROWS_AS(make_word(AlphabetKind::Rect, "2xd1"), InvalidWord);
  CHECK_THROWS_AS(make_word(AlphabetKind::Evil, "1"), InvalidWord);
}

TEST_CASE("rect language membership") {
  auto ok = [](const std::string& s) {
    return is_valid_rect_word(make_word(AlphabetKind::Rect, s));
  };
  CHECK(ok("1"));
  CHECK(ok("11"));
  CHECK(ok("d1"));
  CHECK(ok("ud1"));
  CHECK(ok("22uud1dud11d1d1uuud1"));
  CHECK_FALSE(ok(""));
  CHECK_FALSE(ok("2"));       // must end in 1
  CHECK_FALSE(ok("21"));      // forbidden factor
  CHECK_FALSE(ok("u21"));
  CHECK_FALSE(ok("u1"));
  CHECK_FALSE(ok("1ud"));
}

TEST_CASE("evil language membership") {
  auto ok = [](const std::string& s) {
    return is_valid_evil_word(make_word(AlphabetKind::Evil, s));
  };
  CHECK(ok("s"));
  CHECK(ok("ss"));
  CHECK(ok("rs"));
  CHECK(ok("qrs"));
  CHECK(ok("psrs"));
  CHECK(ok("qqqsrsrssrqrsrqqpprs"));
  CHECK_FALSE(ok(""));
  CHECK_FALSE(ok("p"));       // must end in s
  CHECK_FALSE(ok("ps"));      // p needs a later r
  CHECK_FALSE(ok("sp"));      // forbidden factor
  CHECK_FALSE(ok("sqs"));
  CHECK_FALSE(ok("rsq"));
}

TEST_CASE("substring scanners agree with the automata") {
  for (int n = 0; n <= 6; ++n) {
    std::string w(n, '1');
    const auto& letters = alphabet_letters(AlphabetKind::Rect);
    // odometer over all words of length n
    std::vector<int> ix(n, 0);
    for (;;) {
      for (int i = 0; i < n; ++i) w[i] = letters[ix[i]];
      CHECK(detail::rect_letters_ok(w) == accepts(rect_language(), w));
      int i = n - 1;
      while (i >= 0 && ix[i] == 3) ix[i--] = 0;
      if (i < 0) break;
      ++ix[i];
    }
  }
}

TEST_CASE("word generation is exhaustive and ordered") {
  const auto words = generate_words(rect_language(), 3);
  std::vector<std::string> got;
  for (const auto& w : words) got.push_back(w.letters);
  CHECK(got == std::vector<std::string>{"111", "1d1", "2d1", "ud1", "d11", "dd1"});
  CHECK(generate_words(evil_language(), 2).size() == 2);  // ss, rs
  CHECK(generate_words(rect_language(), 0).empty());
}

TEST_CASE("counting by transfer matrix") {
  const std::vector<long> expect{1, 2, 6, 20, 68, 232, 792, 2704, 9232};
  for (int n = 1; n <= 9; ++n) {
    CHECK(count_words(rect_language(), n) == expect[n - 1]);
    CHECK(count_words(evil_language(), n) == expect[n - 1]);
  }
  CHECK(count_words(rect_language(), 0) == 0);
}

TEST_CASE("marked counting refines by the recoil letter") {
  CHECK(count_words_marked(rect_language(), 3, 0) == 1);
  CHECK(count_words_marked(rect_language(), 3, 1) == 4);
  CHECK(count_words_marked(rect_language(), 3, 2) == 1);
  BigInt total = 0;
  for (int k = 0; k < 6; ++k) total += count_words_marked(evil_language(), 6, k);
  CHECK(total == count_words(evil_language(), 6));
  CHECK(count_words_marked(evil_language(), 4, 2) ==
        count_words_marked(rect_language(), 4, 2));
}

TEST_CASE("map_b and its inverse") {
  const auto rect = make_word(AlphabetKind::Rect, "22uud1dud11d1d1uuud1");
  const auto evil = map_b(rect);
  CHECK(evil.kind == AlphabetKind::Evil);
  CHECK(evil.letters == "qqqsrsrssrqrsrqqpprs");
  CHECK(map_b_inv(evil).letters == rect.letters);
  CHECK(map_b(make_word(AlphabetKind::Rect, "ud1")).letters == "qrs");
  CHECK(map_b(make_word(AlphabetKind::Rect, "1")).letters == "s");
  CHECK(map_b(make_word(AlphabetKind::Rect, "d1")).letters == "rs");
  // every valid rect word maps to a valid evil word and back, n <= 6
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : generate_words(rect_language(), n)) {
      const auto e = map_b(w);
      CHECK(is_valid_evil_word(e));
      CHECK(map_b_inv(e).letters == w.letters);
    }
}
