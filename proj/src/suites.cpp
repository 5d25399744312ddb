#include "qschubert/suites.hpp"

#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "qschubert/error.hpp"

namespace qschubert {

namespace {

const char* kManifest = R"({
  "version": 1,
  "seed": 20240607,
  "suites": {
    "confluence": {},
    "ladder": {"gamma_limit": 64},
    "muir": {
      "cases": [
        {"n": 3, "p": [1, 2], "q": [1, 2], "relation": "[1|1][2|2] - [2|2][1|1] - (q - q^-1)*[1|2][2|1] = 0"},
        {"n": 4, "p": [1, 2], "q": [1, 2], "relation": "[1|1][2|2] - [2|2][1|1] - (q - q^-1)*[1|2][2|1] = 0"}
      ]
    },
    "pieri": {"max_degree": 2, "gamma_limit": 64},
    "asl": {"gamma_limit": 64},
    "dehom": {"max_degree": 2, "gamma_limit": 64, "delta_limit": 64},
    "hilbert": {"max_degree": 3, "cross_check_cap": 3, "gamma_limit": 64},
    "gorenstein": {"gamma_limit": 512},
    "roundtrip": {"samples": 200, "max_factors": 3}
  }
})";

const Json& suite_defaults(const std::string& name) { return manifest().at("suites").at(name); }

int default_degree(const std::string& suite, const RunConfig& c) {
  return c.max_degree ? *c.max_degree : suite_defaults(suite).at("max_degree").get<int>();
}

std::string grass_name(int m, int n) { return "G(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

std::string gamma_case(const IndexSet& g, int m, int n) { return grass_name(m, n) + " gamma=" + g.to_string(); }

void require_grassmannian(const Shape& s) {
  if (s.m > s.n) fail(ErrorCode::InvalidArgument, "grassmannian suites need m <= n, got " + s.to_string());
}

/// The given gamma, or every gamma of Pi_{m,n} when the poset is within the
/// suite's limit, or just the bottom element otherwise.
std::vector<IndexSet> gammas_for(const std::string& suite, const RunConfig& c) {
  if (c.gamma) return {*c.gamma};
  auto all = IndexSet::all(c.shape.m, c.shape.n);
  if (all.size() <= suite_defaults(suite).at("gamma_limit").get<std::size_t>()) return all;
  return {all.front()};
}

using CaseResult = std::pair<bool, std::string>;

void run_case(std::vector<ReportLine>& out, const std::string& suite, const std::string& name,
              const std::function<CaseResult()>& body) {
  ReportLine line{suite, name, "pass", ""};
  try {
    auto [ok, witness] = body();
    line.status = ok ? "pass" : "fail";
    line.witness = std::move(witness);
  } catch (const Error& e) {
    line.status = e.code() == ErrorCode::BudgetExceeded ? "budget" : "error";
    line.witness = e.what();
  } catch (const std::exception& e) {
    line.status = "error";
    line.witness = e.what();
  }
  out.push_back(std::move(line));
}

std::string first_or(const std::vector<std::string>& failures, const std::string& fallback) {
  return failures.empty() ? fallback : failures.front();
}

void confluence_suite(const RunConfig& c, std::vector<ReportLine>& out) {
  run_case(out, "confluence", "O_q(M_" + c.shape.to_string() + ")", [&]() -> CaseResult {
    const auto r = confluence_check(c.shape);
    if (r.passed()) return {true, std::to_string(r.triples_checked) + " overlaps resolve"};
    return {false, "overlap " + word_to_string(c.shape, r.failures.front().triple) + " does not resolve"};
  });
}

void ladder_suite(const RunConfig& c, std::vector<ReportLine>& out) {
  require_grassmannian(c.shape);
  const int m = c.shape.m, n = c.shape.n;
  for (const auto& g : gammas_for("ladder", c)) {
    run_case(out, "ladder", gamma_case(g, m, n) + " relations", [&]() -> CaseResult {
      const auto rels = ladder_relations(g, m, n);
      for (const auto& r : rels)
        if (!r.holds) return {false, "(" + r.kind + ") " + r.relation};
      return {true, std::to_string(rels.size()) + " relations hold"};
    });
    run_case(out, "ladder", gamma_case(g, m, n) + " gkdim", [&]() -> CaseResult {
      const auto lad = ladder(g, m, n);
      const auto gk = rank_and_gkdim(g, m, n);
      const int via_ladder = static_cast<int>(lad.size()) + 1;
      const bool ok = gk.agrees() && gk.rank == via_ladder;
      return {ok, "|L|+1=" + std::to_string(via_ladder) + " rank=" + std::to_string(gk.rank) +
                      " formula=" + std::to_string(gk.formula)};
    });
  }
}

void muir_suite(const RunConfig&, std::vector<ReportLine>& out) {
  for (const auto& entry : suite_defaults("muir").at("cases")) {
    const int n = entry.at("n").get<int>();
    const auto p = entry.at("p").get<std::vector<int>>();
    const auto q = entry.at("q").get<std::vector<int>>();
    run_case(out, "muir", "n=" + std::to_string(n) + " P=Q=" + IndexSet(p).to_string(), [&]() -> CaseResult {
      const Shape s{n, n};
      const auto r = parse_minor_relation(entry.at("relation").get<std::string>(), s);
      const auto ext = muir_extend(QuantumMatrixAlgebra(s), r, p, q);
      return {ext.verified, ext.to_string()};
    });
  }
}

void pieri_suite(const RunConfig& c, std::vector<ReportLine>& out) {
  require_grassmannian(c.shape);
  const int m = c.shape.m, n = c.shape.n, d = default_degree("pieri", c);
  for (const auto& g : gammas_for("pieri", c)) {
    if (!c.gamma && upper_neighbours(g, m, n).empty()) continue;
    run_case(out, "pieri", gamma_case(g, m, n) + " D=" + std::to_string(d), [&]() -> CaseResult {
      const auto r = pieri_check(g, m, n, d);
      std::string dims;
      for (const auto& deg : r.degrees) {
        if (!dims.empty()) dims += ",";
        dims += std::to_string(deg.ideal_dim);
      }
      return {r.passed(), "dims " + dims + " over " + std::to_string(r.upper_neighbours.size()) + " neighbours"};
    });
  }
}

void asl_suite(const RunConfig& c, std::vector<ReportLine>& out) {
  require_grassmannian(c.shape);
  const int m = c.shape.m, n = c.shape.n;
  auto one = [&](const std::optional<IndexSet>& g) {
    const std::string name = g ? gamma_case(*g, m, n) : grass_name(m, n);
    run_case(out, "asl", name, [&]() -> CaseResult {
      const auto r = asl_check(m, n, g);
      std::set<int> exps;
      for (const auto& s : r.scalars) exps.insert(s.c.low_degree());
      std::string seen;
      for (int e : exps) seen += (seen.empty() ? "" : ",") + LaurentQ::q_power(e).to_string();
      return {r.passed(), first_or(r.failures, std::to_string(r.scalars.size()) + " scalars in {" + seen + "}")};
    });
  };
  if (!c.gamma) one(std::nullopt);
  for (const auto& g : gammas_for("asl", c)) one(g);
}

void dehom_suite(const RunConfig& c, std::vector<ReportLine>& out) {
  require_grassmannian(c.shape);
  const int m = c.shape.m, n = c.shape.n, d = default_degree("dehom", c);
  if (!c.delta) {
    for (const auto& g : gammas_for("dehom", c)) {
      run_case(out, "dehom", gamma_case(g, m, n) + " D=" + std::to_string(d), [&]() -> CaseResult {
        const auto r = dehom_check(g, m, n, d);
        return {r.passed(), first_or(r.failures, std::to_string(r.relations.size()) + " relations, " +
                                                     std::to_string(r.expressed) + " minors expressed")};
      });
    }
  }
  if (n == m || c.gamma) return;
  const Shape det{m, n - m};
  run_case(out, "dehom", "delta_map " + det.to_string(), [&]() -> CaseResult {
    const auto r = delta_map_check(det);
    return {r.passed(), std::to_string(r.size) + " minors onto " + grass_name(m, n) + " minus " +
                            delta_map_missing(det).to_string()};
  });
  std::vector<IndexPair> deltas;
  if (c.delta) {
    deltas.push_back(*c.delta);
  } else {
    auto all = matrix_poset(det).elements();
    if (all.size() <= suite_defaults("dehom").at("delta_limit").get<std::size_t>()) deltas = std::move(all);
  }
  for (const auto& delta : deltas) {
    run_case(out, "dehom", "O_q(M_" + det.to_string() + ") delta=" + delta.to_string() + " D=" + std::to_string(d),
             [&]() -> CaseResult {
               const auto r = dehom_correspondence_check(delta, det, d);
               return {r.passed(), first_or(r.failures, "gamma=" + r.gamma.to_string() + ", " +
                                                            std::to_string(r.products_checked) + " products")};
             });
  }
}

std::string dims_string(const std::vector<mpz_class>& dims) {
  std::string s;
  for (const auto& x : dims) s += (s.empty() ? "" : " ") + x.get_str();
  return s;
}

void hilbert_suite(const RunConfig& c, std::vector<ReportLine>& out) {
  require_grassmannian(c.shape);
  const int m = c.shape.m, n = c.shape.n, d = default_degree("hilbert", c);
  const int cap = suite_defaults("hilbert").at("cross_check_cap").get<int>();
  auto one = [&](const std::optional<IndexSet>& g) {
    const std::string name = (g ? gamma_case(*g, m, n) : grass_name(m, n)) + " D=" + std::to_string(d);
    run_case(out, "hilbert", name, [&]() -> CaseResult {
      const auto r = hilbert(g, m, n, d, cap);
      return {r.consistent(), dims_string(r.dims)};
    });
  };
  if (!c.gamma) one(std::nullopt);
  for (const auto& g : gammas_for("hilbert", c)) one(g);
}

void gorenstein_suite(const RunConfig& c, std::vector<ReportLine>& out) {
  require_grassmannian(c.shape);
  const int m = c.shape.m, n = c.shape.n;
  const auto poset = grassmann_poset(m, n);
  for (const auto& g : gammas_for("gorenstein", c)) {
    run_case(out, "gorenstein", gamma_case(g, m, n), [&]() -> CaseResult {
      const bool classified = gorenstein(g, n).gorenstein;
      const auto h = h_vector(poset.restrict_upper(g));
      const bool palindromic = is_palindromic(h);
      return {classified == palindromic, "h=(" + dims_string(h) + ") gorenstein=" + (classified ? "true" : "false")};
    });
  }
}

void roundtrip_suite(const RunConfig& c, std::vector<ReportLine>& out) {
  require_grassmannian(c.shape);
  const int m = c.shape.m, n = c.shape.n;
  const auto& defaults = suite_defaults("roundtrip");
  const int samples = defaults.at("samples").get<int>();
  const int max_factors = defaults.at("max_factors").get<int>();
  run_case(out, "roundtrip", grass_name(m, n) + " seed=" + std::to_string(c.seed), [&]() -> CaseResult {
    const auto& g = grassmannian(m, n);
    const auto& elems = g.poset().elements();
    std::mt19937_64 rng(c.seed);
    for (int i = 0; i < samples; ++i) {
      std::vector<IndexSet> factors(1 + rng() % max_factors);
      for (auto& f : factors) f = elems[rng() % elems.size()];
      const auto st = g.straighten(factors);
      if (!(g.expand(st) == g.product(factors))) {
        std::string p;
        for (const auto& f : factors) p += f.to_string();
        return {false, p + " re-expands incorrectly"};
      }
    }
    return {true, std::to_string(samples) + " products re-expand exactly"};
  });
}

using SuiteFn = void (*)(const RunConfig&, std::vector<ReportLine>&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"confluence", confluence_suite}, {"ladder", ladder_suite},         {"muir", muir_suite},
      {"pieri", pieri_suite},           {"asl", asl_suite},               {"dehom", dehom_suite},
      {"hilbert", hilbert_suite},       {"gorenstein", gorenstein_suite}, {"roundtrip", roundtrip_suite},
  };
  return r;
}

}  // namespace

void RunConfig::validate() const {
  if (shape.m < 1 || shape.n < 1) fail(ErrorCode::InvalidArgument, "shape needs m, n >= 1");
  if (max_degree && *max_degree < 0) fail(ErrorCode::InvalidArgument, "max degree must be >= 0");
  if (q0 && *q0 == 0) fail(ErrorCode::ZeroSpecialization, "q0 must be nonzero");
  if (gamma && !gamma->fits(shape.m, shape.n))
    fail(ErrorCode::InvalidArgument, "gamma " + gamma->to_string() + " is not in Pi_" + shape.to_string());
}

const Json& manifest() {
  static const Json j = Json::parse(kManifest);
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

Json to_json(const ReportLine& line) {
  return Json{{"suite", line.suite}, {"case", line.case_name}, {"status", line.status}, {"witness", line.witness}};
}

std::vector<ReportLine> run_suite(const std::string& name, const RunConfig& config) {
  config.validate();
  std::vector<ReportLine> out;
  bool found = false;
  for (const auto& [suite, fn] : registry()) {
    if (name != "all" && name != suite) continue;
    found = true;
    try {
      fn(config, out);
    } catch (const Error& e) {
      out.push_back({suite, config.shape.to_string(), "error", e.what()});
    }
  }
  if (!found) fail(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
  return out;
}

bool all_passed(const std::vector<ReportLine>& lines) {
  for (const auto& l : lines)
    if (!l.passed()) return false;
  return true;
}

std::string format_report(const std::vector<ReportLine>& lines, OutputFormat format) {
  if (format == OutputFormat::Json) {
    Json report = Json::array();
    for (const auto& l : lines) report.push_back(to_json(l));
    return Json{{"manifest_version", manifest().at("version")}, {"passed", all_passed(lines)}, {"report", report}}
               .dump(2) +
           "\n";
  }
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& l : lines) {
    if (!l.passed()) ++failed;
    os << l.status << "  " << l.suite << "  " << l.case_name << ": " << l.witness << "\n";
  }
  os << lines.size() - failed << " passed, " << failed << " failed\n";
  return os.str();
}

}  // namespace qschubert
