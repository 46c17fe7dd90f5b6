#pragma once

// JSON form of expansion records:
//   {"family", "input": {"value", "precision"}, "a0", "digits", "status"}
// NICF records add "eps"; HCCF digits are [re, im] pairs.

#include <cstddef>
#include <string>

#include <json.hpp>

#include "cfevt/cf/expansion.hpp"

namespace cfevt {

struct ExpansionInput {
  std::string value;          // decimal string or source label
  std::size_t precision = 0;  // bits at which the digits were certified
};

nlohmann::json expansion_to_json(const Expansion& e, const ExpansionInput& input);
Expansion expansion_from_json(const nlohmann::json& j);

}  // namespace cfevt
