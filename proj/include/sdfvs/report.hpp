#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sdfvs {

struct RunReport {
  std::string name;
  int n = 0;
  long long m = 0;
  int s_size = 0;
  int k = 0;
  bool yes = false;
  std::vector<int> solution;  // 1-based, sorted
  long long nodes = 0;
  long long trials = 0;
  double wall_ms = 0;
  std::uint64_t seed = 0;
  std::string mode;
  bool exact = true;  // false: one-sided monte-carlo NO
  int retries = 0;
};

std::string report_human(const RunReport& r);
std::string report_json(const RunReport& r);
const char* csv_header();
std::string csv_row(const RunReport& r);

}  // namespace sdfvs
