#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "extsq/suite/acceptance.hpp"

namespace extsq::suite {

struct RunReport {
  std::string command;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  std::optional<long> wall_time_ms;  // left out unless timing was asked for
  nlohmann::json result;             // command output; null when there is none

  void add(std::string name, bool passed, std::string detail = {});
  bool passed() const;
  // checks sorted by name, keys in sorted order
  nlohmann::json to_json() const;
  std::string text() const;
};

}  // namespace extsq::suite
