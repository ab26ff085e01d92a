#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace gcw {

struct BatteryCheck {
  int criterion = 0;
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
  double seconds = 0;
};

struct BatteryItem {
  int criterion = 0;
  std::string name;
  // Fills expected/computed/pass; exceptions count as failures.
  std::function<void(BatteryCheck&)> run;
};

const std::vector<BatteryItem>& battery_items();
std::string criterion_title(int criterion);

// Items whose name contains `filter` (case-insensitive; empty matches all).
// Each result is also written to `log` as it completes.
std::vector<BatteryCheck> run_battery(const std::string& filter, std::ostream* log = nullptr);

}  // namespace gcw
