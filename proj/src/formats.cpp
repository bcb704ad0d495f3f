#include "matroidwb/formats.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace matroidwb {

namespace {

using nlohmann::json;

[[noreturn]] void parse_error(int line, const std::string& what) {
  throw MatroidError(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Line {
  int number;
  std::string_view text;  // comment stripped, trimmed
};

// Non-blank lines with their 1-based numbers.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view raw = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (!raw.empty()) out.push_back({number, raw});
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == ',')) ++pos;
    std::size_t end = pos;
    while (end < s.size() && s[end] != ' ' && s[end] != '\t' && s[end] != ',') ++end;
    if (end > pos) out.push_back(s.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

bool to_int(std::string_view s, int& out) {
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

int int_token(std::string_view s, int line, const char* what) {
  int v = 0;
  if (!to_int(s, v)) parse_error(line, std::string("expected ") + what + ", got '" + std::string(s) + "'");
  return v;
}

Subset element_line(const Line& line, int n) {
  Subset s = 0;
  if (line.text == "-") return s;
  for (auto tok : tokens(line.text)) {
    const int e = int_token(tok, line.number, "an element");
    if (e < 1 || e > n) parse_error(line.number, "element " + std::to_string(e) + " outside [1," + std::to_string(n) + "]");
    if (contains(s, e)) parse_error(line.number, "element " + std::to_string(e) + " repeated");
    s |= bit_of(e);
  }
  return s;
}

std::string elements_text(Subset s) {
  std::string out;
  for (int e : elements_of(s)) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e);
  }
  return out;
}

// Header "<keyword> a b"; returns (a, b).
std::pair<int, int> header(const std::vector<Line>& lines, const char* keyword) {
  if (lines.empty()) throw MatroidError(ErrorCode::kParseError, "line 1: missing '" + std::string(keyword) + "' header");
  const auto& h = lines.front();
  const auto t = tokens(h.text);
  if (t.size() != 3 || t[0] != keyword) {
    parse_error(h.number, "expected '" + std::string(keyword) + " <a> <b>', got '" + std::string(h.text) + "'");
  }
  return {int_token(t[1], h.number, "a count"), int_token(t[2], h.number, "a count")};
}

json rational_json(const Rational& q) { return format_rational(q); }

}  // namespace

std::string write_matroid(const Matroid& m) {
  std::string out = "matroid " + std::to_string(m.size()) + " " + std::to_string(m.rank()) + "\n";
  for (Subset b : m.bases()) out += elements_text(b) + "\n";
  return out;
}

Matroid read_matroid(std::string_view text) {
  const auto lines = content_lines(text);
  const auto [n, r] = header(lines, "matroid");
  if (n < 1 || n > kMaxElements) parse_error(lines.front().number, "element count must be in [1,16]");
  if (r < 0 || r > n) parse_error(lines.front().number, "rank must be in [0,n]");
  std::vector<Subset> bases;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Subset b = element_line(lines[k], n);
    if (popcount(b) != r) {
      parse_error(lines[k].number, "basis has " + std::to_string(popcount(b)) + " elements, header says rank " + std::to_string(r));
    }
    bases.push_back(b);
  }
  if (bases.empty()) {
    if (r != 0) throw MatroidError(ErrorCode::kEmptyBases, "no bases listed");
    bases.push_back(0);
  }
  return Matroid::from_bases(n, std::move(bases));
}

std::string write_graph(const MultiGraph& g) {
  std::string out = "graph " + std::to_string(g.num_vertices) + " " + std::to_string(g.num_edges()) + "\n";
  for (const auto& [a, b] : g.edges) out += std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

MultiGraph read_graph(std::string_view text) {
  const auto lines = content_lines(text);
  const auto [v, e] = header(lines, "graph");
  if (static_cast<int>(lines.size()) - 1 != e) {
    parse_error(lines.back().number, "header announces " + std::to_string(e) + " edges, found " + std::to_string(lines.size() - 1));
  }
  MultiGraph g{v, {}};
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto t = tokens(lines[k].text);
    if (t.size() != 2) parse_error(lines[k].number, "edge needs two endpoints");
    const int a = int_token(t[0], lines[k].number, "a vertex"), b = int_token(t[1], lines[k].number, "a vertex");
    if (a < 1 || b < 1 || a > v || b > v) parse_error(lines[k].number, "endpoint outside [1," + std::to_string(v) + "]");
    g.edges.emplace_back(a, b);
  }
  g.validate();
  return g;
}

std::string write_set_system(const SetSystem& s) {
  std::string out = "sys " + std::to_string(s.n) + " " + std::to_string(s.family.size()) + "\n";
  for (Subset a : s.family) out += (a ? elements_text(a) : "-") + "\n";
  return out;
}

SetSystem read_set_system(std::string_view text) {
  const auto lines = content_lines(text);
  const auto [n, k] = header(lines, "sys");
  if (n < 1 || n > kMaxElements) parse_error(lines.front().number, "ground set size must be in [1,16]");
  if (static_cast<int>(lines.size()) - 1 != k) {
    parse_error(lines.back().number, "header announces " + std::to_string(k) + " sets, found " + std::to_string(lines.size() - 1));
  }
  SetSystem s{n, {}};
  for (std::size_t i = 1; i < lines.size(); ++i) s.family.push_back(element_line(lines[i], n));
  s.validate();
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MatroidError(ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MatroidError(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  out << contents;
}

Subset parse_subset(std::string_view text, int n) {
  Subset s = 0;
  for (auto tok : tokens(text)) {
    int e = 0;
    if (!to_int(tok, e) || e < 1 || e > kMaxElements || (n > 0 && e > n)) {
      throw MatroidError(ErrorCode::kInvalidArgument, "bad element '" + std::string(tok) + "'");
    }
    s |= bit_of(e);
  }
  return s;
}

Pair parse_pair(std::string_view text) {
  const auto t = tokens(text);
  int a = 0, b = 0;
  if (t.size() != 2 || !to_int(t[0], a) || !to_int(t[1], b)) {
    throw MatroidError(ErrorCode::kInvalidArgument, "expected a pair 'i,j', got '" + std::string(text) + "'");
  }
  return {a, b};
}

Outcome parse_outcome(std::string_view name) {
  if (name == "Holds") return Outcome::kHolds;
  if (name == "Fails") return Outcome::kFails;
  if (name == "Inconclusive") return Outcome::kInconclusive;
  throw MatroidError(ErrorCode::kParseError, "unknown outcome '" + std::string(name) + "'");
}

std::string verdict_to_json(const Verdict& v, std::string_view matroid_id, int indent) {
  json j;
  j["property"] = v.property;
  j["matroid_id"] = std::string(matroid_id);
  if (v.pair) j["pair"] = {v.pair->first, v.pair->second};
  j["outcome"] = outcome_name(v.outcome);
  if (v.holds()) {
    j["certificate_kind"] = certificate_name(v.certificate);
    if (v.certificate == CertificateKind::kSinglePairWagner) {
      j["inner_certificate_kind"] = certificate_name(v.inner_certificate);
    }
  }
  if (v.witness) {
    json point = json::array();
    for (const auto& q : v.witness->point) point.push_back(rational_json(q));
    j["witness"] = {{"point", point}, {"value", rational_json(v.witness->value)}};
  }
  if (v.sets) j["sets"] = {elements_of(v.sets->first), elements_of(v.sets->second)};
  if (v.c) j["c"] = rational_json(*v.c);
  if (v.gram) {
    json basis = json::array();
    for (const auto& m : v.gram->basis) basis.push_back(elements_of(m.linear));
    json matrix = json::array();
    for (const auto& row : v.gram->gram) {
      json r = json::array();
      for (const auto& q : row) r.push_back(rational_json(q));
      matrix.push_back(r);
    }
    j["gram"] = {{"basis", basis}, {"matrix", matrix}};
  }
  if (v.cross_check) j["cross_check"] = outcome_name(*v.cross_check);
  j["tiers_run"] = v.tiers_run;
  if (!v.diagnostics.empty()) j["diagnostics"] = v.diagnostics;
  if (v.best_value) j["best_value"] = *v.best_value;
  j["seed"] = v.seed;
  j["wall_ms"] = v.wall_ms;
  return j.dump(indent);
}

VerdictRecord parse_verdict_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MatroidError(ErrorCode::kParseError, std::string("verdict JSON: ") + e.what());
  }
  VerdictRecord rec;
  try {
    rec.property = j.at("property").get<std::string>();
    rec.matroid_id = j.value("matroid_id", std::string());
    rec.outcome = parse_outcome(j.at("outcome").get<std::string>());
    if (j.contains("pair")) rec.pair = Pair{j["pair"].at(0).get<int>(), j["pair"].at(1).get<int>()};
    if (j.contains("c")) rec.c = parse_rational(j["c"].get<std::string>());
    if (j.contains("sets")) {
      rec.sets = std::make_pair(subset_of(j["sets"].at(0).get<std::vector<int>>()),
                                subset_of(j["sets"].at(1).get<std::vector<int>>()));
    }
    if (j.contains("witness")) {
      Witness w;
      for (const auto& q : j["witness"].at("point")) w.point.push_back(parse_rational(q.get<std::string>()));
      w.value = parse_rational(j["witness"].at("value").get<std::string>());
      rec.witness = std::move(w);
    }
  } catch (const json::exception& e) {
    throw MatroidError(ErrorCode::kParseError, std::string("verdict JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw MatroidError(ErrorCode::kParseError, std::string("verdict JSON: ") + e.what());
  }
  return rec;
}

std::string reverify_witness(const Matroid& m, const VerdictRecord& rec) {
  if (rec.outcome != Outcome::kFails) return "verdict is not a Fails record";
  const int n = m.size();
  auto in_range = [n](const Pair& p) { return p.first >= 1 && p.second >= 1 && p.first <= n && p.second <= n && p.first != p.second; };
  const std::string& prop = rec.property;

  if (prop == "balanced" || prop == "negcorr") {
    if (!rec.pair || !in_range(*rec.pair) || !rec.witness) return "record lacks a pair or value";
    const Subset c = rec.sets ? rec.sets->first : 0, d = rec.sets ? rec.sets->second : 0;
    const auto [e, f] = *rec.pair;
    long total = 0, ne = 0, nf = 0, nef = 0;
    for (Subset b : m.bases()) {
      if ((b & c) != c || (b & d)) continue;
      ++total;
      ne += contains(b, e);
      nf += contains(b, f);
      nef += contains(b, e) && contains(b, f);
    }
    const Rational diff = Rational(ne) * nf - Rational(total) * nef;
    if (diff != rec.witness->value) return "recomputed N_e N_f - N N_ef = " + format_rational(diff);
    return diff < 0 ? "" : "recomputed difference is not negative";
  }
  if (prop == "nlc") {
    if (!rec.sets) return "record lacks (S, T)";
    const Measure mu = uniform_basis_measure(m);
    auto w = [&](Subset s) {
      auto it = mu.weights.find(s);
      return it == mu.weights.end() ? Rational(0) : it->second;
    };
    const auto [s, t] = *rec.sets;
    return w(s) * w(t) - w(s | t) * w(s & t) < 0 ? "" : "lattice inequality holds at (S, T)";
  }
  if (prop == "rayleigh" || prop == "strong_rayleigh" || prop == "hpp" || prop == "c_rayleigh") {
    if (!rec.pair || !in_range(*rec.pair) || !rec.witness) return "record lacks a pair or witness";
    if (static_cast<int>(rec.witness->point.size()) != n) return "witness point has the wrong dimension";
    if (prop == "rayleigh" || prop == "c_rayleigh") {
      for (const auto& q : rec.witness->point) {
        if (q <= 0) return "witness point leaves the positive orthant";
      }
    }
    const BoundedPoly f = basis_poly(m);
    BoundedPoly delta;
    if (prop == "c_rayleigh") {
      if (!rec.c) return "record lacks c";
      delta = scaled_rayleigh_diff(f, rec.pair->first, rec.pair->second, *rec.c);
    } else {
      delta = rayleigh_diff(f, rec.pair->first, rec.pair->second);
    }
    const Rational value = evaluate(delta, rec.witness->point);
    if (value != rec.witness->value) return "recomputed value " + format_rational(value);
    return value < 0 ? "" : "recomputed value is not negative";
  }
  return "property '" + prop + "' has no re-verifiable witness";
}

}  // namespace matroidwb
