#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matroidwb/analysis.hpp"
#include "matroidwb/matroid.hpp"

namespace matroidwb {

struct CensusInstance {
  long id = 0;
  std::string family;
  std::string params;
  Matroid matroid;
};

// Families: "lpm" (max_total, connected_only), "sparse_paving" (n, r or
// max_n), "bicircular" (max_edges), "uniform" (max_n). `limit` caps the count.
std::vector<CensusInstance> census_instances(const std::string& family, const std::map<std::string, std::string>& params,
                                             std::size_t limit);

struct CensusJob {
  std::string family;
  std::map<std::string, std::string> params;
  std::vector<std::string> checks;  // negcorr balanced rayleigh strong_rayleigh hpp positroid paving c_rayleigh
  std::optional<Rational> c;        // for c_rayleigh
  long budget = 20000;
  std::uint64_t seed = 1;
  int workers = 1;
  std::size_t limit = 5000;
  bool run_sos = true;
  bool cross_check = true;  // all-pairs cross-check of the single-pair hpp verdict
  std::string out_dir;      // empty: no files written
  bool resume = false;

  void validate() const;
};

struct CensusRow {
  long id = 0;
  std::string family, params;
  int n = 0, r = 0;
  std::size_t num_bases = 0;
  std::string connected = "-", paving = "-", sparse_paving = "-", positroid = "-";
  std::string neg_corr = "-", rayleigh = "-", hpp = "-", balanced = "-", c_rayleigh = "-";
  std::string witness_ref;
  // Outcome per requested check; strong_rayleigh and hpp share the hpp column.
  std::map<std::string, Outcome> outcomes;
  std::vector<std::pair<std::string, std::string>> witness_files;  // (file name, JSON)
  std::vector<std::string> violations;                              // hierarchy violations
  std::optional<std::string> cross_check_disagreement;
};

std::string census_header();
std::string census_csv_line(const CensusRow& row);

// Runs every check for one instance; pure given (instance, job).
CensusRow census_evaluate(const CensusInstance& inst, const CensusJob& job);

struct CensusSummary {
  long rows = 0;
  long skipped = 0;  // already present when resuming
  std::map<std::string, long> fails;
  std::map<std::string, long> inconclusive;
  long hierarchy_violations = 0;
  long cross_check_disagreements = 0;
  bool interrupted = false;
  std::vector<CensusRow> all_rows;  // rows evaluated in this run, id order
};

// Streams instances to a pool of workers and writes rows in id order to
// <out_dir>/census.csv, witnesses to <out_dir>/witnesses/<id>-<check>.json.
CensusSummary run_census(const CensusJob& job, const std::function<void(const CensusRow&)>& on_row = {});

// Asks a running census to stop after flushing finished rows.
void request_census_stop();
void reset_census_stop();

}  // namespace matroidwb
