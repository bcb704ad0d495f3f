#include "matroidwb/census.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "matroidwb/classifiers.hpp"
#include "matroidwb/constructions.hpp"
#include "matroidwb/formats.hpp"

namespace matroidwb {

namespace {

std::atomic<bool> g_stop{false};

const std::set<std::string>& known_checks() {
  static const std::set<std::string> k = {"negcorr", "balanced", "rayleigh", "strong_rayleigh",
                                          "hpp",     "positroid", "paving",  "c_rayleigh"};
  return k;
}

int int_param(const std::map<std::string, std::string>& p, const std::string& key, int fallback) {
  auto it = p.find(key);
  if (it == p.end()) return fallback;
  try {
    return std::stoi(it->second);
  } catch (const std::exception&) {
    throw MatroidError(ErrorCode::kInvalidArgument, "parameter " + key + "='" + it->second + "' is not an integer");
  }
}

bool bool_param(const std::map<std::string, std::string>& p, const std::string& key, bool fallback) {
  auto it = p.find(key);
  if (it == p.end()) return fallback;
  return it->second == "1" || it->second == "true" || it->second == "yes";
}

std::string dashed(Subset s) {
  std::string out;
  for (int e : elements_of(s)) {
    if (!out.empty()) out += '-';
    out += std::to_string(e);
  }
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

void request_census_stop() { g_stop = true; }
void reset_census_stop() { g_stop = false; }

std::vector<CensusInstance> census_instances(const std::string& family, const std::map<std::string, std::string>& params,
                                             std::size_t limit) {
  std::vector<CensusInstance> out;
  auto add = [&](std::string p, Matroid m) {
    out.push_back(CensusInstance{static_cast<long>(out.size()) + 1, family, std::move(p), std::move(m)});
    return out.size() < limit;
  };
  if (family == "lpm") {
    lpm_family(int_param(params, "max_total", 7), limit, bool_param(params, "connected_only", true),
               [&](const LatticePathPair& pp, const Matroid& m) {
                 return add("lower=" + pp.lower() + " upper=" + pp.upper(), m);
               });
  } else if (family == "sparse_paving") {
    std::vector<std::pair<int, int>> shapes;
    if (params.count("n")) {
      const int n = int_param(params, "n", 0);
      if (params.count("r")) {
        shapes.emplace_back(n, int_param(params, "r", 0));
      } else {
        for (int r = 1; r < n; ++r) shapes.emplace_back(n, r);
      }
    } else {
      const int max_n = int_param(params, "max_n", 6);
      for (int n = 2; n <= max_n; ++n) {
        for (int r = 1; r < n; ++r) shapes.emplace_back(n, r);
      }
    }
    for (const auto& [n, r] : shapes) {
      bool more = out.size() < limit;
      if (!more) break;
      sparse_paving_family(n, r, limit - out.size(), [&](const Matroid& m) {
        std::string h;
        for_each_k_subset(n, r, [&](Subset s) {
          if (!m.is_basis(s)) h += (h.empty() ? "" : "|") + dashed(s);
        });
        more = add("n=" + std::to_string(n) + " r=" + std::to_string(r) + " H=" + (h.empty() ? "-" : h), m);
        return more;
      });
    }
  } else if (family == "bicircular") {
    bicircular_family(int_param(params, "max_edges", 6), limit, [&](const MultiGraph& g, const Matroid& m) {
      std::string e;
      for (const auto& [a, b] : g.edges) e += (e.empty() ? "" : "|") + std::to_string(a) + "-" + std::to_string(b);
      return add("v=" + std::to_string(g.num_vertices) + " edges=" + e, m);
    });
  } else if (family == "uniform") {
    const int max_n = int_param(params, "max_n", 6);
    for (int n = 1; n <= max_n && out.size() < limit; ++n) {
      for (int k = 0; k <= n && out.size() < limit; ++k) add("k=" + std::to_string(k) + " n=" + std::to_string(n), uniform(k, n));
    }
  } else {
    throw MatroidError(ErrorCode::kUnknownName, "unknown census family '" + family + "'");
  }
  return out;
}

void CensusJob::validate() const {
  if (checks.empty()) throw MatroidError(ErrorCode::kInvalidArgument, "census needs at least one check");
  for (const auto& c : checks) {
    if (!known_checks().count(c)) throw MatroidError(ErrorCode::kInvalidArgument, "unknown check '" + c + "'");
  }
  if (std::find(checks.begin(), checks.end(), "c_rayleigh") != checks.end() && (!c || *c <= 0)) {
    throw MatroidError(ErrorCode::kInvalidArgument, "c_rayleigh needs a positive c");
  }
  if (budget <= 0) throw MatroidError(ErrorCode::kInvalidArgument, "budget must be positive");
  if (workers < 1) throw MatroidError(ErrorCode::kInvalidArgument, "workers must be at least 1");
}

std::string census_header() {
  return "id,family,params,n,r,num_bases,connected,paving,sparse_paving,positroid,neg_corr_all_pairs,"
         "rayleigh_outcome,hpp_outcome,witness_ref,balanced,c_rayleigh";
}

std::string census_csv_line(const CensusRow& row) {
  std::ostringstream s;
  s << row.id << ',' << row.family << ',' << row.params << ',' << row.n << ',' << row.r << ',' << row.num_bases << ','
    << row.connected << ',' << row.paving << ',' << row.sparse_paving << ',' << row.positroid << ',' << row.neg_corr
    << ',' << row.rayleigh << ',' << row.hpp << ',' << (row.witness_ref.empty() ? "-" : row.witness_ref) << ','
    << row.balanced << ',' << row.c_rayleigh;
  return s.str();
}

CensusRow census_evaluate(const CensusInstance& inst, const CensusJob& job) {
  const Matroid& m = inst.matroid;
  CensusRow row;
  row.id = inst.id;
  row.family = inst.family;
  row.params = inst.params;
  row.n = m.size();
  row.r = m.rank();
  row.num_bases = m.num_bases();
  row.connected = yes_no(is_connected(m));
  const std::string id = std::to_string(inst.id);
  const std::uint64_t seed = mix_seed(job.seed, static_cast<std::uint64_t>(inst.id));
  auto wants = [&](const char* c) { return std::find(job.checks.begin(), job.checks.end(), c) != job.checks.end(); };

  HppOptions opts;
  opts.budget = job.budget;
  opts.seed = seed;
  opts.run_sos = job.run_sos;
  opts.cross_check_all_pairs = job.cross_check;

  auto record = [&](const Verdict& v, const std::string& name) {
    row.outcomes[name] = v.outcome;
    if (v.fails()) {
      const std::string file = id + "-" + name + ".json";
      row.witness_files.emplace_back(file, verdict_to_json(v, id));
      row.witness_ref += (row.witness_ref.empty() ? "" : "|") + std::string("witnesses/") + file;
    }
    return std::string(outcome_name(v.outcome));
  };

  if (wants("paving")) {
    row.paving = yes_no(is_paving(m));
    row.sparse_paving = yes_no(is_sparse_paving(m));
  }
  if (wants("positroid") && m.size() <= 9) row.positroid = yes_no(positroid_verdict(m).order.has_value());
  std::optional<Outcome> negcorr, rayleigh, strong, hpp, balanced, crayleigh;
  if (wants("negcorr")) {
    const Verdict v = neg_corr_all_pairs(m);
    negcorr = v.outcome;
    row.neg_corr = v.holds() ? "true" : "false";
    record(v, "negcorr");
  }
  if (wants("balanced")) {
    const Verdict v = is_balanced(m);
    balanced = v.outcome;
    row.balanced = record(v, "balanced");
  }
  const BoundedPoly f = basis_poly(m);
  if (wants("rayleigh")) {
    const Verdict v = rayleigh_verdict(f, std::nullopt, opts);
    rayleigh = v.outcome;
    row.rayleigh = record(v, "rayleigh");
  }
  if (wants("strong_rayleigh")) {
    const Verdict v = strong_rayleigh_verdict(f, std::nullopt, opts);
    strong = v.outcome;
    row.hpp = record(v, "strong_rayleigh");
  }
  if (wants("hpp")) {
    const Verdict v = hpp_verdict(m, opts);
    hpp = v.outcome;
    row.hpp = record(v, "hpp");
    if (v.single_pair && v.cross_check &&
        ((*v.single_pair == Outcome::kHolds && *v.cross_check == Outcome::kFails) ||
         (*v.single_pair == Outcome::kFails && *v.cross_check == Outcome::kHolds))) {
      row.cross_check_disagreement = std::string("single pair ") + outcome_name(*v.single_pair) + ", all pairs " +
                                     outcome_name(*v.cross_check);
    }
  }
  if (wants("c_rayleigh")) {
    const Verdict v = c_rayleigh_verdict(f, *job.c, std::nullopt, opts);
    crayleigh = v.outcome;
    row.c_rayleigh = record(v, "c_rayleigh");
  }

  // hpp Holds => rayleigh not Fails => neg_corr Holds, plus the weaker links.
  auto is = [](const std::optional<Outcome>& o, Outcome want) { return o && *o == want; };
  const bool stable = is(hpp, Outcome::kHolds) || is(strong, Outcome::kHolds);
  if (stable && is(rayleigh, Outcome::kFails)) row.violations.push_back("stable but not Rayleigh");
  if (stable && is(negcorr, Outcome::kFails)) row.violations.push_back("stable but not negatively correlated");
  if (rayleigh && *rayleigh != Outcome::kFails && is(negcorr, Outcome::kFails)) {
    row.violations.push_back("Rayleigh not refuted but not negatively correlated");
  }
  if (is(balanced, Outcome::kHolds) && is(negcorr, Outcome::kFails)) row.violations.push_back("balanced but not negatively correlated");
  if (job.c && *job.c >= 1 && is(rayleigh, Outcome::kHolds) && is(crayleigh, Outcome::kFails)) {
    row.violations.push_back("Rayleigh but not c-Rayleigh for c >= 1");
  }
  return row;
}

CensusSummary run_census(const CensusJob& job, const std::function<void(const CensusRow&)>& on_row) {
  job.validate();
  reset_census_stop();
  CensusSummary summary;
  const auto instances = census_instances(job.family, job.params, job.limit);

  long resume_after = 0;
  std::ofstream csv;
  std::filesystem::path dir;
  if (!job.out_dir.empty()) {
    dir = job.out_dir;
    std::filesystem::create_directories(dir / "witnesses");
    const auto csv_path = dir / "census.csv";
    if (job.resume && std::filesystem::exists(csv_path)) {
      std::ifstream in(csv_path);
      std::string line;
      std::getline(in, line);
      if (line != census_header()) throw MatroidError(ErrorCode::kParseError, "existing census.csv has a different header");
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        resume_after = std::max(resume_after, std::stol(line.substr(0, line.find(','))));
      }
      csv.open(csv_path, std::ios::app);
    } else {
      csv.open(csv_path, std::ios::trunc);
      csv << census_header() << '\n';
    }
    if (!csv) throw MatroidError(ErrorCode::kInvalidArgument, "cannot write " + csv_path.string());
  }

  std::vector<const CensusInstance*> todo;
  for (const auto& inst : instances) {
    if (inst.id > resume_after) {
      todo.push_back(&inst);
    } else {
      ++summary.skipped;
    }
  }

  std::vector<std::optional<CensusRow>> results(todo.size());
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  int running = job.workers;
  std::exception_ptr failure;

  auto worker = [&]() {
    while (!g_stop) {
      const std::size_t k = next.fetch_add(1);
      if (k >= todo.size()) break;
      try {
        CensusRow row = census_evaluate(*todo[k], job);
        std::lock_guard<std::mutex> lock(mu);
        results[k] = std::move(row);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        g_stop = true;
      }
      cv.notify_all();
    }
    std::lock_guard<std::mutex> lock(mu);
    --running;
    cv.notify_all();
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < job.workers; ++w) pool.emplace_back(worker);

  // Rows are written strictly in id order, so the CSV is always a prefix.
  for (std::size_t k = 0; k < todo.size(); ++k) {
    std::unique_lock<std::mutex> lock(mu);
    cv.wait(lock, [&] { return results[k].has_value() || running == 0; });
    if (!results[k]) break;
    CensusRow row = std::move(*results[k]);
    results[k].reset();
    lock.unlock();
    if (csv.is_open()) {
      for (const auto& [name, body] : row.witness_files) {
        std::ofstream w(dir / "witnesses" / name);
        w << body << '\n';
      }
      csv << census_csv_line(row) << '\n';
      csv.flush();
    }
    ++summary.rows;
    for (const auto& [check, outcome] : row.outcomes) {
      if (outcome == Outcome::kFails) ++summary.fails[check];
      if (outcome == Outcome::kInconclusive) ++summary.inconclusive[check];
    }
    if (row.positroid == "false") ++summary.fails["positroid"];
    summary.hierarchy_violations += static_cast<long>(row.violations.size());
    if (row.cross_check_disagreement) ++summary.cross_check_disagreements;
    if (on_row) on_row(row);
    summary.all_rows.push_back(std::move(row));
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  summary.interrupted = summary.rows + summary.skipped < static_cast<long>(instances.size());
  return summary;
}

}  // namespace matroidwb
