#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "permutation.hpp"

namespace permlang {

struct TableRow {
  Permutation rect_perm;
  std::string rect_word;
  std::string evil_word;
  Permutation evil_perm;
};

struct Fixtures {
  Permutation evil101;
  Permutation rect101;
  std::vector<TableRow> pairs32;
};

namespace detail {

inline nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open fixture file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InvalidInput("cannot parse " + path + ": " + e.what());
  }
  return j;
}

inline Permutation perm_of_json(const nlohmann::json& j) {
  return Permutation(j.get<std::vector<int>>());
}

}  // namespace detail

inline Fixtures load_fixtures(const std::string& dir) {
  Fixtures f;
  f.evil101 = detail::perm_of_json(detail::load_json(dir + "/evil101.json"));
  f.rect101 = detail::perm_of_json(detail::load_json(dir + "/rect101.json"));
  for (const auto& row : detail::load_json(dir + "/pairs32.json"))
    f.pairs32.push_back(TableRow{detail::perm_of_json(row.at("rect_perm")),
                                row.at("rect_word").get<std::string>(),
                                row.at("evil_word").get<std::string>(),
                                detail::perm_of_json(row.at("evil_perm"))});
  if (f.pairs32.size() != 32) throw InvalidInput("pairs32 fixture must have 32 rows");
  return f;
}

}  // namespace permlang
