#pragma once

#include <string>
#include <vector>

namespace qdiag::testing {

std::string read_file(const std::string& path);

/// SQL text of tests/fixtures/queries/<name>.sql, trailing newline removed.
std::string query_fixture(const std::string& name);

/// Names of every file in tests/fixtures/queries, sorted.
std::vector<std::string> query_fixture_names();

std::string fixture_path(const std::string& relative);
std::string golden_path(const std::string& name);

}  // namespace qdiag::testing
