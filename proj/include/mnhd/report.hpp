#pragma once

#include <string>

#include "json.hpp"
#include "mnhd/analysis.hpp"

namespace mnhd {

/// {"a": "p/q", "b": "r/s", "m": k}
nlohmann::json to_json(const QuadValue& q);
nlohmann::json to_json(const MnhdReport& report);
std::string to_text(const MnhdReport& report);

}  // namespace mnhd
