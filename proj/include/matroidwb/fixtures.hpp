#pragma once

#include <string>
#include <vector>

#include "matroidwb/matroid.hpp"

namespace matroidwb {

// Basis lists of the worked lattice path example M[125,356]: the matroid, its
// principal truncation, and its principal extension by element 7.
const std::vector<Subset>& example_bases();
const std::vector<Subset>& example_truncation_bases();
const std::vector<Subset>& example_extension_bases();

// M[125,356] built from its interval bounds.
Matroid example_lpm();

struct FixtureResult {
  std::string name;
  bool passed = false;
  bool informational = false;  // reported, never counted as a failure
  std::string detail;
};

struct FixtureOptions {
  // Replaces the expected basis list of the example, e.g. to show that a
  // tampered list is detected.
  std::vector<Subset> example_override;
  std::uint64_t seed = 1;
};

std::vector<FixtureResult> run_reference_fixtures(const FixtureOptions& options = {});

// "{125,126}" style rendering of a basis list (elements below 10 only).
std::string compact_list(const std::vector<Subset>& sets);

}  // namespace matroidwb
