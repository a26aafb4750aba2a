#include "fixtures.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qdiag::testing {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

std::string fixture_path(const std::string& relative) { return std::string(QDIAG_FIXTURE_DIR) + "/" + relative; }

std::string golden_path(const std::string& name) { return std::string(QDIAG_GOLDEN_DIR) + "/" + name; }

std::string query_fixture(const std::string& name) {
  std::string text = read_file(fixture_path("queries/" + name + ".sql"));
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text;
}

std::vector<std::string> query_fixture_names() {
  std::vector<std::string> names;
  for (const auto& entry : std::filesystem::directory_iterator(fixture_path("queries")))
    if (entry.path().extension() == ".sql") names.push_back(entry.path().stem().string());
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace qdiag::testing
