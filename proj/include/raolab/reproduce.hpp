#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "raolab/field.hpp"

namespace raolab {

struct ReproduceOptions {
  FieldSpec field{};
  std::uint64_t seed = 1;
  int trials = 5;
};

/// Tags accepted by run_reproduction, in a stable order.
std::vector<std::string> reproduction_tags();

/// Runs the pipeline bound to a tag and returns the computed values under
/// the same keys as the golden file. Unknown tags throw std::invalid_argument.
nlohmann::json run_reproduction(const std::string& tag, const ReproduceOptions& opt = {});

/// Differences between a computed result and the expected values; only keys
/// present in `expected` are compared, recursively.
std::vector<std::string> golden_diff(const nlohmann::json& computed, const nlohmann::json& expected,
                                     const std::string& path = "");

}  // namespace raolab
