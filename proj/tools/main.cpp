#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <permlang/fixtures.hpp>
#include <permlang/permlang.hpp>
#include <permlang/verify.hpp>

using nlohmann::json;
using namespace permlang;

namespace {

// Exit codes: 0 ok, 1 domain error (not in class, word or walk outside its
// language), 2 usage error (bad flags, malformed permutation text), 3 failed
// verify checks.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join_args(const std::vector<std::string>& parts) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back(' ');
    out += parts[i];
  }
  return out;
}

Permutation parse_perm_arg(const std::vector<std::string>& parts) {
  try {
    return parse_permutation(join_args(parts));
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
}

json perm_json(const Permutation& p) { return json(p.values()); }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct ClassReport {
  bool member;
  std::optional<PatternHit> witness;
};

ClassReport report_for(const Permutation& p, const std::vector<Permutation>& pats) {
  auto hit = find_any_pattern(p, pats);
  return ClassReport{!hit.has_value(), std::move(hit)};
}

void print_class_line(const std::string& name, const ClassReport& r) {
  std::cout << name << ": " << (r.member ? "yes" : "no");
  if (!r.member) {
    std::cout << " (contains " << format_permutation(r.witness->pattern)
              << " at positions";
    for (int pos : r.witness->positions) std::cout << " " << pos;
    std::cout << ")";
  }
  std::cout << "\n";
}

json class_json(const ClassReport& r) {
  json j{{"member", r.member}};
  if (!r.member) {
    j["pattern"] = r.witness->pattern.values();
    j["positions"] = r.witness->positions;
  }
  return j;
}

int run_classify(const Permutation& p, bool as_json) {
  const auto evil = report_for(p, evil_patterns());
  const auto rect = report_for(p, rect_patterns());
  const auto ai = report_for(p, almost_increasing_patterns());
  if (ai.member != is_almost_increasing(p))
    throw InternalError("almost-increasing routes disagree");
  if (as_json) {
    emit(json{{"permutation", perm_json(p)},
              {"recoils", recoils(p)},
              {"evil", class_json(evil)},
              {"rect", class_json(rect)},
              {"ai", class_json(ai)}});
    return 0;
  }
  std::cout << "permutation: " << format_permutation(p) << "\n";
  std::cout << "recoils:";
  for (int r : recoils(p)) std::cout << " " << r;
  std::cout << "\n";
  print_class_line("evil", evil);
  print_class_line("rect", rect);
  print_class_line("ai", ai);
  return 0;
}

Word encode_for_class(const std::string& cls, const Permutation& p) {
  if (cls == "evil") return encode_evil(p);
  if (cls == "rect") return encode_rect(p);
  return encode_ai(p);
}

Permutation decode_for_class(const std::string& cls, const std::string& letters) {
  if (cls == "evil") return decode_evil(make_word(AlphabetKind::Evil, letters));
  if (cls == "rect") return decode_rect(make_word(AlphabetKind::Rect, letters));
  return decode_ai(make_word(AlphabetKind::Ai, letters));
}

// Hub representation for `map`: every source becomes a rect-language word.
Word to_rect_word(const std::string& from, const std::vector<std::string>& input) {
  if (from == "walk") return walk_to_word(parse_walk(join_args(input)));
  const Permutation p = parse_perm_arg(input);
  if (from == "evil") return map_b_inv(encode_evil(p));
  if (from == "rect") return encode_rect(p);
  return Word{AlphabetKind::Rect, encode_ai(p).letters};
}

std::string from_rect_word(const std::string& to, const Word& w, json& out_json) {
  if (to == "walk") {
    const Walk walk = word_to_walk(w);
    out_json = walk.steps;
    return walk.steps;
  }
  Permutation p;
  if (to == "evil")
    p = decode_evil(map_b(w));
  else if (to == "rect")
    p = decode_rect(w);
  else
    p = decode_ai(Word{AlphabetKind::Ai, w.letters});
  out_json = perm_json(p);
  return format_permutation(p);
}

BigInt count_total(int n, const std::string& method) {
  if (method == "recur") return seq_count(n);
  if (method == "dfa") return count_words(evil_language(), n);
  if (method == "brute") return BigInt(enumerate_class(n, PermClass::Evil).size());
  BigInt total = 1;
  for (int k = 1; k < n; ++k) total += evil_count_closed(n, k);
  return total;
}

BigInt count_refined(int n, int k, const std::string& method) {
  if (k < 0 || k > n - 1) return 0;
  if (method == "recur") return evil_count_recur(n, k);
  if (method == "dfa") return count_words_marked(evil_language(), n, k);
  if (method == "brute") {
    const CountTable t = bucket_counts(n, PermClass::Evil);
    return t.has(n, k) ? t.get(n, k) : BigInt(0);
  }
  return k == 0 ? BigInt(1) : evil_count_closed(n, k);
}

int run_verify_cmd(int max_n, const std::string& fixtures_dir, bool as_json) {
  const Fixtures fx = load_fixtures(fixtures_dir);
  VerifyOptions opt;
  opt.max_n = max_n;
  const auto checks = run_verify(fx, opt);
  int failures = 0;
  for (const auto& c : checks)
    if (!c.pass) ++failures;
  if (as_json) {
    json arr = json::array();
    for (const auto& c : checks) {
      json j{{"name", c.name}, {"status", c.pass ? "ok" : "fail"}};
      if (!c.detail.empty()) j["counterexample"] = c.detail;
      arr.push_back(std::move(j));
    }
    emit(json{{"max_n", max_n}, {"checks", arr}, {"failures", failures}});
  } else {
    for (const auto& c : checks) {
      std::cout << (c.pass ? "ok   " : "FAIL ") << c.name;
      if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
      std::cout << "\n";
    }
    std::cout << (failures ? "failed checks: " + std::to_string(failures)
                           : std::string("all checks passed"))
              << "\n";
  }
  return failures ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recoil-preserving bijections between evil-avoiding, rectangular\n"
               "and 1-almost-increasing permutations, their word encodings, and\n"
               "the walk model on the 7-vertex path."};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of text");

  auto* classify = app.add_subcommand("classify", "class membership with pattern witnesses");
  classify->fallthrough();
  std::vector<std::string> classify_perm;
  classify->add_option("perm", classify_perm, "permutation (\"3 2 4 1\", \"3241\" or e0)")
      ->required();

  auto* encode = app.add_subcommand("encode", "permutation to word");
  encode->fallthrough();
  std::string enc_class;
  std::vector<std::string> enc_perm;
  encode->add_option("--class", enc_class, "evil, rect or ai")
      ->required()
      ->check(CLI::IsMember({"evil", "rect", "ai"}));
  encode->add_option("perm", enc_perm, "permutation")->required();

  auto* decode = app.add_subcommand("decode", "word to permutation");
  decode->fallthrough();
  std::string dec_class, dec_word;
  decode->add_option("--class", dec_class, "evil, rect or ai")
      ->required()
      ->check(CLI::IsMember({"evil", "rect", "ai"}));
  decode->add_option("word", dec_word, "word letters")->required();

  auto* mapcmd = app.add_subcommand("map", "convert between classes and walks");
  mapcmd->fallthrough();
  std::string map_from, map_to;
  std::vector<std::string> map_input;
  const auto map_kinds = CLI::IsMember({"evil", "rect", "ai", "walk"});
  mapcmd->add_option("--from", map_from, "evil, rect, ai or walk")->required()->check(map_kinds);
  mapcmd->add_option("--to", map_to, "evil, rect, ai or walk")->required()->check(map_kinds);
  mapcmd->add_option("input", map_input, "permutation or L/R walk")->required();

  auto* count = app.add_subcommand("count", "class sizes, optionally refined by recoils");
  count->fallthrough();
  int count_n = 0;
  int count_k = -1;
  std::string count_method = "closed";
  count->add_option("--n", count_n, "permutation size")->required();
  count->add_option("--k", count_k, "recoil number");
  count->add_option("--method", count_method,
                    "closed, recur, dfa (evil word language) or brute (n <= 10)")
      ->check(CLI::IsMember({"closed", "recur", "dfa", "brute"}));

  auto* words = app.add_subcommand("words", "list language words of a given length");
  words->fallthrough();
  std::string words_class;
  int words_n = 0;
  words->add_option("--class", words_class, "rect, evil or ai")
      ->required()
      ->check(CLI::IsMember({"rect", "evil", "ai"}));
  words->add_option("--n", words_n, "word length")->required();

  auto* verify = app.add_subcommand("verify", "run the cross-validation suite");
  verify->fallthrough();
  int verify_max_n = 8;
  std::string fixtures_dir = "fixtures";
  verify->add_option("--max-n", verify_max_n, "exhaustive sweep depth");
  verify->add_option("--fixtures", fixtures_dir, "fixture directory");

  auto* plot = app.add_subcommand("plot", "permutation matrix plot");
  plot->fallthrough();
  std::string plot_format = "ascii";
  std::vector<std::string> plot_perm;
  plot->add_option("--format", plot_format, "ascii or svg")
      ->check(CLI::IsMember({"ascii", "svg"}));
  plot->add_option("perm", plot_perm, "permutation")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(classify)) return run_classify(parse_perm_arg(classify_perm), as_json);

    if (app.got_subcommand(encode)) {
      const Permutation p = parse_perm_arg(enc_perm);
      const Word w = encode_for_class(enc_class, p);
      if (as_json)
        emit(json{{"class", enc_class}, {"permutation", perm_json(p)}, {"word", w.letters}});
      else
        std::cout << w.letters << "\n";
      return 0;
    }

    if (app.got_subcommand(decode)) {
      const Permutation p = decode_for_class(dec_class, dec_word);
      if (as_json)
        emit(json{{"class", dec_class}, {"word", dec_word},
                  {"permutation", perm_json(p)}});
      else
        std::cout << format_permutation(p) << "\n";
      return 0;
    }

    if (app.got_subcommand(mapcmd)) {
      const Word hub = to_rect_word(map_from, map_input);
      json out_json;
      const std::string out = from_rect_word(map_to, hub, out_json);
      if (as_json)
        emit(json{{"from", map_from}, {"to", map_to},
                  {"input", join_args(map_input)}, {"output", out_json}});
      else
        std::cout << out << "\n";
      return 0;
    }

    if (app.got_subcommand(count)) {
      if (count_n < 1) throw UsageError("count needs --n >= 1");
      const bool refined = count->count("--k") > 0;
      const BigInt value = refined ? count_refined(count_n, count_k, count_method)
                                   : count_total(count_n, count_method);
      if (as_json) {
        json j{{"n", count_n}, {"count", value.str()}, {"method", count_method}};
        if (refined) j["k"] = count_k;
        emit(j);
      } else {
        std::cout << value << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(words)) {
      if (words_n < 0) throw UsageError("words needs --n >= 0");
      const AlphabetKind kind = words_class == "evil" ? AlphabetKind::Evil
                                : words_class == "ai" ? AlphabetKind::Ai
                                                      : AlphabetKind::Rect;
      const auto list = generate_words(language_for(kind), words_n);
      if (as_json) {
        json arr = json::array();
        for (const auto& w : list) arr.push_back(w.letters);
        emit(json{{"class", words_class}, {"n", words_n}, {"words", arr}});
      } else {
        for (const auto& w : list) std::cout << w.letters << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(verify))
      return run_verify_cmd(verify_max_n, fixtures_dir, as_json);

    if (app.got_subcommand(plot)) {
      const Permutation p = parse_perm_arg(plot_perm);
      const std::string out = plot_format == "svg" ? svg_plot(p) : ascii_plot(p);
      if (as_json)
        emit(json{{"permutation", perm_json(p)}, {"format", plot_format}, {"plot", out}});
      else
        std::cout << out;
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
