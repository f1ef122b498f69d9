#pragma once

// The CLI invocations pinned by golden files, shared by the unit suite and
// the acceptance suite.

#include <string>
#include <utility>
#include <vector>

namespace dsum::test {

inline const std::vector<std::pair<std::string, std::string>>& golden_cases() {
  static const std::vector<std::pair<std::string, std::string>> cases = {
      {"count_routes", "count --shape [3,3,1,1] --route all"},
      {"tsum_exact", "tsum -d 2 -s 2 -a 1 -m 12"},
      {"tsum_real", "tsum -d 2 -s 2 -a 0.5 -m 6 --precision 128"},
      {"asym", "asym -d 2 -s 2 -a 1 -m 1000"},
      {"ratio_json", "ratio -d 1 -s 2 -a 2 --m 16,64,256 --assert-trend"},
      {"ratio_csv", "ratio -d 2 -s 2 -a 1 --m 8,32,128 --format csv"},
      {"selberg_both", "selberg -d 1 -s 2 -a 2 --mode both --samples 50000 --seed 42"},
      {"enumerate", "enumerate -d 2 -s 3 -m 4"},
  };
  return cases;
}

}  // namespace dsum::test
