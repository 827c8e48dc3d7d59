#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qflag/io.hpp"

namespace support {

inline qflag::QuiverPtr data_quiver(const std::string& name) {
  return qflag::load_quiver(std::string(QFLAG_DATA_DIR) + "/quivers/" + name + ".json");
}

// Vertices "1".."n"; arrows a1, a2, ... between 1-based vertex numbers.
inline qflag::QuiverPtr make_quiver(size_t n, const std::vector<std::pair<size_t, size_t>>& edges) {
  std::vector<std::string> vs;
  for (size_t i = 1; i <= n; ++i) vs.push_back(std::to_string(i));
  std::vector<qflag::Arrow> as;
  for (size_t k = 0; k < edges.size(); ++k)
    as.push_back({"a" + std::to_string(k + 1), edges[k].first - 1, edges[k].second - 1});
  return std::make_shared<const qflag::Quiver>(vs, as);
}

inline qflag::QuiverPtr standard(qflag::Family f, int rank) {
  return std::make_shared<const qflag::Quiver>(qflag::standard_quiver(f, rank));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace support
