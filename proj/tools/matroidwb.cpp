#include <csignal>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "matroidwb/analysis.hpp"
#include "matroidwb/census.hpp"
#include "matroidwb/classifiers.hpp"
#include "matroidwb/constructions.hpp"
#include "matroidwb/fixtures.hpp"
#include "matroidwb/formats.hpp"

using namespace matroidwb;

namespace {

// Exit codes: 0 Holds, 1 Fails, 2 Inconclusive, 3 usage or input error.
constexpr int kExitError = 3;

struct Globals {
  std::uint64_t seed = 1;
  long budget = 20000;
  int workers = 1;
  std::string out;
};

int exit_code(Outcome o) {
  switch (o) {
    case Outcome::kHolds: return 0;
    case Outcome::kFails: return 1;
    case Outcome::kInconclusive: return 2;
  }
  return kExitError;
}

// Comma lists keep their order and may repeat, unlike subsets.
std::vector<int> ordered_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw MatroidError(ErrorCode::kInvalidArgument, "bad integer '" + tok + "'");
    }
  }
  return out;
}

Matroid load(const std::string& path) { return read_matroid(read_file(path)); }

std::string stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    write_file(g.out, text.back() == '\n' ? text : text + "\n");
  }
}

// Graph given by file or by one of the standard families.
struct GraphArgs {
  std::string file;
  int complete = 0, cycle = 0;
  std::string bipartite;

  void add(CLI::App* app) {
    app->add_option("--graph", file, "graph file");
    app->add_option("--complete", complete, "complete graph K_v");
    app->add_option("--cycle", cycle, "cycle C_v");
    app->add_option("--bipartite", bipartite, "complete bipartite graph a,b");
  }
  MultiGraph get() const {
    if (!file.empty()) return read_graph(read_file(file));
    if (complete > 0) return complete_graph(complete);
    if (cycle > 0) return cycle_graph(cycle);
    if (!bipartite.empty()) {
      const auto ab = ordered_list(bipartite);
      if (ab.size() != 2) throw MatroidError(ErrorCode::kInvalidArgument, "--bipartite needs a,b");
      return complete_bipartite_graph(ab[0], ab[1]);
    }
    throw MatroidError(ErrorCode::kInvalidArgument, "give --graph, --complete, --cycle or --bipartite");
  }
};

struct ConstructArgs {
  int k = 0, n = 0, r = 0;
  GraphArgs graph;
  std::string sys, lower, upper, name, in, in2, set, del, con;
  int p = 0, q = 0;
};

void add_construct(CLI::App& app, ConstructArgs& a, std::function<Matroid()>& build) {
  auto* cmd = app.add_subcommand("construct", "build a matroid and write it in matroid text format");
  cmd->require_subcommand(1);

  auto* s = cmd->add_subcommand("uniform", "U(k,n)");
  s->add_option("--k", a.k)->required();
  s->add_option("--n", a.n)->required();
  s->callback([&] { build = [&] { return uniform(a.k, a.n); }; });

  s = cmd->add_subcommand("graphic", "cycle matroid of a graph");
  a.graph.add(s);
  s->callback([&] { build = [&] { return graphic(a.graph.get()); }; });

  s = cmd->add_subcommand("bicircular", "bicircular matroid of a graph");
  a.graph.add(s);
  s->callback([&] { build = [&] { return bicircular(a.graph.get()); }; });

  s = cmd->add_subcommand("transversal", "transversal matroid of a set system file");
  s->add_option("--sys", a.sys)->required();
  s->callback([&] { build = [&] { return transversal(read_set_system(read_file(a.sys))); }; });

  s = cmd->add_subcommand("lpm", "lattice path matroid M[lower, upper]");
  s->add_option("--lower", a.lower, "interval lower ends l_1,...,l_r")->required();
  s->add_option("--upper", a.upper, "interval upper ends u_1,...,u_r")->required();
  s->add_option("--n", a.n, "ground set size (default u_r)");
  s->callback([&] {
    build = [&] {
      const auto lo = ordered_list(a.lower), up = ordered_list(a.upper);
      const int n = a.n > 0 ? a.n : (up.empty() ? 0 : up.back());
      return lattice_path(LatticePathPair::from_bounds(lo, up, n));
    };
  });

  s = cmd->add_subcommand("whirl", "rank-r whirl");
  s->add_option("--r", a.r)->required();
  s->callback([&] { build = [&] { return whirl(a.r); }; });

  s = cmd->add_subcommand("atlas", "named matroid");
  s->add_option("name", a.name, "MK4, BK33, TicTacToe, U24, W3")->required();
  s->callback([&] { build = [&] { return named_atlas(a.name); }; });

  s = cmd->add_subcommand("2sum", "2-sum of two matroids along basepoints");
  s->add_option("--in", a.in)->required();
  s->add_option("--in2", a.in2)->required();
  s->add_option("--p", a.p, "basepoint in the first matroid")->required();
  s->add_option("--q", a.q, "basepoint in the second matroid")->required();
  s->callback([&] { build = [&] { return two_sum(load(a.in), a.p, load(a.in2), a.q); }; });

  s = cmd->add_subcommand("dual", "dual matroid");
  s->add_option("--in", a.in)->required();
  s->callback([&] { build = [&] { return dual(load(a.in)); }; });

  s = cmd->add_subcommand("minor", "M / contract \\ delete, relabeled 1..n'");
  s->add_option("--in", a.in)->required();
  s->add_option("--delete", a.del, "elements to delete");
  s->add_option("--contract", a.con, "elements to contract");
  s->callback([&] {
    build = [&] {
      const Matroid m = load(a.in);
      const Subset d = parse_subset(a.del, m.size()), c = parse_subset(a.con, m.size());
      if (c & d) throw MatroidError(ErrorCode::kInvalidArgument, "--delete and --contract overlap");
      // Contract first, then delete the surviving images of d.
      const Minor mc = contraction(m, c);
      Subset d2 = 0;
      for (std::size_t k = 0; k < mc.labels.size(); ++k) {
        if (contains(d, mc.labels[k])) d2 |= bit_of(static_cast<int>(k) + 1);
      }
      return deletion(mc.matroid, d2).matroid;
    };
  });

  s = cmd->add_subcommand("extension", "principal extension by a new element n+1");
  s->add_option("--in", a.in)->required();
  s->add_option("--F", a.set, "flat F, e.g. 1,2,3")->required();
  s->callback([&] {
    build = [&] {
      const Matroid m = load(a.in);
      return principal_extension(m, parse_subset(a.set, m.size()));
    };
  });

  s = cmd->add_subcommand("truncation", "principal truncation by F");
  s->add_option("--in", a.in)->required();
  s->add_option("--F", a.set, "set F, e.g. 1,2,3")->required();
  s->callback([&] {
    build = [&] {
      const Matroid m = load(a.in);
      return principal_truncation(m, parse_subset(a.set, m.size()));
    };
  });

  s = cmd->add_subcommand("relax", "relax a circuit-hyperplane");
  s->add_option("--in", a.in)->required();
  s->add_option("--H", a.set, "circuit-hyperplane")->required();
  s->callback([&] {
    build = [&] {
      const Matroid m = load(a.in);
      return relax(m, parse_subset(a.set, m.size()));
    };
  });
}

struct CheckArgs {
  std::string prop, file, pair, c, witness, set;
  bool no_sos = false, cross_check = false;
  long samples = 2000;
};

int run_check(const Globals& g, const CheckArgs& a) {
  const Matroid m = load(a.file);
  const std::string id = stem(a.file);

  if (!a.witness.empty()) {
    const VerdictRecord rec = parse_verdict_json(read_file(a.witness));
    const std::string why = reverify_witness(m, rec);
    if (!why.empty()) {
      std::cerr << "witness does not reproduce: " << why << '\n';
      return kExitError;
    }
    std::cout << "witness verified: " << rec.property << " Fails on " << id << '\n';
    return 1;
  }

  std::optional<Pair> pair;
  if (!a.pair.empty()) pair = parse_pair(a.pair);
  HppOptions opts;
  opts.seed = g.seed;
  opts.budget = g.budget;
  opts.run_sos = !a.no_sos;
  opts.cross_check_all_pairs = a.cross_check;

  auto boolean = [&](const char* name, bool holds, std::string diagnostics = {}) {
    Verdict v;
    v.property = name;
    v.outcome = holds ? Outcome::kHolds : Outcome::kFails;
    v.diagnostics = std::move(diagnostics);
    return v;
  };

  Verdict v;
  const std::string& p = a.prop;
  if (p == "negcorr") {
    v = pair ? neg_corr(m, pair->first, pair->second) : neg_corr_all_pairs(m);
  } else if (p == "balanced") {
    v = is_balanced(m);
  } else if (p == "rayleigh") {
    v = rayleigh_verdict(basis_poly(m), pair, opts);
  } else if (p == "strong_rayleigh") {
    v = strong_rayleigh_verdict(basis_poly(m), pair, opts);
  } else if (p == "hpp") {
    v = hpp_verdict(m, opts);
  } else if (p == "c_rayleigh") {
    if (a.c.empty()) throw MatroidError(ErrorCode::kInvalidArgument, "c_rayleigh needs --c");
    v = c_rayleigh_verdict(basis_poly(m), parse_rational(a.c), pair, opts);
  } else if (p == "nlc") {
    v = nlc_check(uniform_basis_measure(m));
  } else if (p == "paving") {
    v = boolean("paving", is_paving(m));
  } else if (p == "sparse_paving") {
    v = boolean("sparse_paving", is_sparse_paving(m));
  } else if (p == "positroid") {
    const auto found = positroid_verdict(m);
    std::string diag = std::to_string(found.orders_tried) + " orders tried";
    if (found.order) {
      diag += "; base-sorting order";
      for (int e : *found.order) diag += " " + std::to_string(e);
    }
    v = boolean("positroid", found.order.has_value(), diag);
  } else if (p == "min_c") {
    const auto est = min_c_estimate(basis_poly(m), a.samples, g.seed);
    std::ostringstream s;
    s << "{\"property\": \"min_c\", \"matroid_id\": \"" << id << "\", \"lower_bound\": \"" << format_rational(est.bound)
      << "\", \"samples\": " << est.samples;
    if (est.pair) s << ", \"pair\": [" << est.pair->first << ", " << est.pair->second << "]";
    s << "}";
    emit(g, s.str());
    return 0;
  } else if (p == "nice_extension") {
    const Subset f = a.set.empty() ? m.ground_set() : parse_subset(a.set, m.size());
    const auto rep = nice_extension_report(m, f);
    std::ostringstream s;
    s << "F = " << to_string(rep.f) << "\nS = " << to_string(rep.extenders) << " (k = " << rep.k << ")\n";
    for (const auto& [b, count] : rep.equations) s << "  basis " << to_string(b) << ": " << count << " extending elements\n";
    s << "uniform weights 1/" << rep.k << ": " << (rep.uniform_satisfies ? "satisfy" : "violate") << " the system\n";
    if (rep.solution) {
      s << "nonnegative solution:";
      for (const auto& [e, w] : *rep.solution) s << " lambda_" << e << "=" << format_rational(w);
      s << (rep.solution_verified ? " (verified)" : " (NOT verified)") << '\n';
    } else {
      s << "no nonnegative solution\n";
    }
    emit(g, s.str());
    return rep.solution ? 0 : 1;
  } else {
    throw MatroidError(ErrorCode::kInvalidArgument, "unknown property '" + p + "'");
  }
  emit(g, verdict_to_json(v, id));
  return exit_code(v.outcome);
}

struct CensusArgs {
  std::string family, checks = "negcorr", c;
  std::vector<std::string> params;
  std::size_t limit = 5000;
  bool resume = false, no_sos = false;
};

void on_sigint(int) { request_census_stop(); }

int run_census_cmd(const Globals& g, const CensusArgs& a) {
  CensusJob job;
  job.family = a.family;
  for (const auto& kv : a.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw MatroidError(ErrorCode::kInvalidArgument, "--param expects key=value, got '" + kv + "'");
    job.params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  std::stringstream ss(a.checks);
  for (std::string c; std::getline(ss, c, ',');) {
    if (!c.empty()) job.checks.push_back(c);
  }
  if (!a.c.empty()) job.c = parse_rational(a.c);
  job.budget = g.budget;
  job.seed = g.seed;
  job.workers = g.workers;
  job.limit = a.limit;
  job.run_sos = !a.no_sos;
  job.cross_check = true;  // always on in census mode
  job.out_dir = g.out;
  job.resume = a.resume;

  std::signal(SIGINT, on_sigint);
  const auto summary = run_census(job, [&](const CensusRow& row) {
    if (g.out.empty()) std::cout << census_csv_line(row) << '\n';
    for (const auto& v : row.violations) std::cerr << "row " << row.id << ": hierarchy violation: " << v << '\n';
    if (row.cross_check_disagreement) std::cerr << "row " << row.id << ": " << *row.cross_check_disagreement << '\n';
  });
  std::signal(SIGINT, SIG_DFL);

  std::cerr << "rows " << summary.rows << ", skipped " << summary.skipped;
  for (const auto& [check, count] : summary.fails) std::cerr << ", " << check << " Fails " << count;
  for (const auto& [check, count] : summary.inconclusive) std::cerr << ", " << check << " Inconclusive " << count;
  std::cerr << ", hierarchy violations " << summary.hierarchy_violations << '\n';
  if (summary.interrupted) {
    std::cerr << "interrupted; rerun with --resume to continue\n";
    return 130;
  }
  return summary.hierarchy_violations ? 1 : 0;
}

std::vector<Subset> read_basis_list(const std::string& path) {
  std::vector<Subset> out;
  std::istringstream in(read_file(path));
  for (std::string line; std::getline(in, line);) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    // "125" is read digit by digit; "1 2 5" and "1,2,5" by token.
    if (line.find_first_of(" ,") == std::string::npos) {
      Subset s = 0;
      for (char ch : line) {
        if (ch >= '1' && ch <= '9') s |= bit_of(ch - '0');
      }
      out.push_back(s);
    } else {
      out.push_back(parse_subset(line));
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matroidwb: matroid construction, property checks and censuses"};
  app.set_config("--config", "", "key=value file; command-line flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--budget", g.budget, "search evaluations per pair")->capture_default_str();
  app.add_option("--workers", g.workers, "census worker threads")->capture_default_str();
  app.add_option("--out", g.out, "output file (census: output directory)");

  ConstructArgs ca;
  std::function<Matroid()> build;
  add_construct(app, ca, build);

  CheckArgs chk;
  auto* check = app.add_subcommand("check", "run one property check; exit 0 Holds, 1 Fails, 2 Inconclusive");
  check->add_option("--prop", chk.prop,
                    "negcorr balanced rayleigh strong_rayleigh hpp c_rayleigh nlc paving sparse_paving positroid "
                    "min_c nice_extension")
      ->required();
  check->add_option("file", chk.file, "matroid file")->required();
  check->add_option("--pair", chk.pair, "restrict to the pair i,j");
  check->add_option("--c", chk.c, "constant for c_rayleigh");
  check->add_option("--F", chk.set, "set F for nice_extension (default: ground set)");
  check->add_option("--witness", chk.witness, "re-verify a Fails verdict file instead of searching");
  check->add_option("--samples", chk.samples, "samples for min_c");
  check->add_flag("--no-sos", chk.no_sos, "skip the SOS tier");
  check->add_flag("--cross-check", chk.cross_check, "hpp: also check every pair");

  CensusArgs cen;
  auto* census = app.add_subcommand("census", "run checks over a matroid family");
  census->add_option("--family", cen.family, "lpm, sparse_paving, bicircular, uniform")->required();
  census->add_option("--param", cen.params, "family parameter key=value (repeatable)");
  census->add_option("--checks", cen.checks, "comma list of checks")->capture_default_str();
  census->add_option("--c", cen.c, "constant for c_rayleigh");
  census->add_option("--limit", cen.limit, "maximum number of instances")->capture_default_str();
  census->add_flag("--resume", cen.resume, "continue an existing census.csv");
  census->add_flag("--no-sos", cen.no_sos, "skip the SOS tier");

  std::string poly_file;
  std::vector<int> ray;
  auto* poly = app.add_subcommand("poly", "print the basis polynomial or a Rayleigh difference");
  poly->add_option("file", poly_file, "matroid file")->required();
  poly->add_option("--rayleigh", ray, "print Delta_ij instead")->expected(2);

  std::string example_file;
  auto* verify = app.add_subcommand("verify-paper", "run the reference fixtures");
  verify->add_option("--example-bases", example_file, "expected basis list of M[125,356], one basis per line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (build) {
      const Matroid m = build();
      const std::string text = write_matroid(m);
      emit(g, text);
      (g.out.empty() ? std::cerr : std::cout)
          << "n=" << m.size() << " r=" << m.rank() << " bases=" << m.num_bases() << '\n';
      return 0;
    }
    if (check->parsed()) return run_check(g, chk);
    if (census->parsed()) return run_census_cmd(g, cen);
    if (poly->parsed()) {
      const Matroid m = load(poly_file);
      const BoundedPoly f = basis_poly(m);
      emit(g, dump(ray.empty() ? f : rayleigh_diff(f, ray[0], ray[1])));
      return 0;
    }
    if (verify->parsed()) {
      FixtureOptions opts;
      opts.seed = g.seed;
      if (!example_file.empty()) opts.example_override = read_basis_list(example_file);
      int failed = 0;
      std::ostringstream report;
      for (const auto& r : run_reference_fixtures(opts)) {
        const char* tag = r.informational ? "INFO" : (r.passed ? "PASS" : "FAIL");
        report << tag << "  " << r.name;
        if (!r.detail.empty()) report << ": " << r.detail;
        report << '\n';
        failed += !r.passed && !r.informational;
      }
      report << (failed ? std::to_string(failed) + " fixture(s) failed" : std::string("all fixtures pass")) << '\n';
      emit(g, report.str());
      return failed ? 1 : 0;
    }
  } catch (const MatroidError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
