#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "matroidwb/analysis.hpp"
#include "matroidwb/constructions.hpp"
#include "matroidwb/matroid.hpp"
#include "matroidwb/verdict.hpp"

namespace matroidwb {

// Matroid text format:
//   matroid <n> <r>
//   <one basis per line, ascending elements separated by spaces>
// A rank-0 matroid has a single empty basis line. '#' starts a comment.
std::string write_matroid(const Matroid& m);
// Throws MatroidError(kParseError) with "line N: ..." messages; basis errors
// from validation propagate unchanged.
Matroid read_matroid(std::string_view text);

// graph <v> <e>, then one "a b" line per edge.
std::string write_graph(const MultiGraph& g);
MultiGraph read_graph(std::string_view text);

// sys <n> <k>, then one line per member set (possibly empty).
std::string write_set_system(const SetSystem& s);
SetSystem read_set_system(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

// "1,2,5" or "1 2 5" into a subset of [n]; n = 0 skips the range check.
Subset parse_subset(std::string_view text, int n = 0);
Pair parse_pair(std::string_view text);

std::string verdict_to_json(const Verdict& v, std::string_view matroid_id, int indent = 2);

// The fields of a verdict file needed to re-verify a witness in isolation.
struct VerdictRecord {
  std::string property;
  std::string matroid_id;
  Outcome outcome = Outcome::kInconclusive;
  std::optional<Pair> pair;
  std::optional<Witness> witness;
  std::optional<Rational> c;
  std::optional<std::pair<Subset, Subset>> sets;
};
VerdictRecord parse_verdict_json(std::string_view text);

Outcome parse_outcome(std::string_view name);

// Recomputes a recorded Fails verdict for m in exact arithmetic. Returns an
// empty string when the witness reproduces, otherwise the reason it does not.
std::string reverify_witness(const Matroid& m, const VerdictRecord& rec);

}  // namespace matroidwb
