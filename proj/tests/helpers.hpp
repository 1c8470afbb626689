#pragma once

#include "ordspace/io.hpp"

#include <string>

inline std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

inline ordspace::OrdinalSpace load_fixture(const std::string& name) {
  return ordspace::parse_rank_matrix(ordspace::read_file(fixture(name)));
}

inline ordspace::RankMatrix ranks(int n, std::initializer_list<int> entries) {
  ordspace::RankMatrix r(n, n);
  auto it = entries.begin();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = *it++;
  return r;
}
