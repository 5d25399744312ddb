#include "qschubert/commands.hpp"

#include <sstream>

#include "qschubert/error.hpp"

namespace qschubert {

namespace {

bool json(const CommandContext& ctx) { return ctx.format == OutputFormat::Json; }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

IndexSet parse_gamma(const std::string& text, int m, int n) {
  const auto g = IndexSet::parse(text);
  if (!g.fits(m, n))
    fail(ErrorCode::InvalidArgument, g.to_string() + " is not an element of Pi_" + Shape{m, n}.to_string());
  return g;
}

std::optional<IndexSet> maybe_gamma(const std::string& text, int m, int n) {
  if (text.empty()) return std::nullopt;
  return parse_gamma(text, m, n);
}

IndexPair parse_delta(const std::string& text, const Shape& s) {
  const auto d = IndexPair::parse(text);
  if (!d.fits(s)) fail(ErrorCode::InvalidArgument, d.to_string() + " does not fit " + s.to_string());
  return d;
}

Shape grass_shape(const std::string& text) {
  const Shape s = parse_shape(text);
  if (s.m > s.n) fail(ErrorCode::InvalidArgument, "grassmannian needs m <= n, got " + s.to_string());
  return s;
}

Json mpz_json(const mpz_class& x) { return x.fits_slong_p() ? Json(x.get_si()) : Json(x.get_str()); }

std::vector<IndexPair> parse_product(const std::string& text, const Shape& s) {
  if (text.find('|') != std::string::npos) return parse_index_pair_product(text);
  std::vector<IndexPair> out;
  for (const auto& x : parse_index_set_product(text)) {
    if (!x.fits(s.m, s.n)) fail(ErrorCode::InvalidArgument, x.to_string() + " is not a maximal minor of " + s.to_string());
    out.push_back(x.as_pair());
  }
  return out;
}

}  // namespace

CommandOutput cmd_minor(const CommandContext& ctx, const std::string& shape, const std::string& minor) {
  const Shape s = parse_shape(shape);
  const auto p = minor.find('|') != std::string::npos ? IndexPair::parse(minor) : IndexSet::parse(minor).as_pair();
  if (!p.fits(s)) fail(ErrorCode::InvalidArgument, p.to_string() + " does not fit " + s.to_string());
  NcPoly value = quantum_minor(p, s);
  if (ctx.q0) value = specialize(value, *ctx.q0);
  return {json(ctx) ? dump(to_json(value)) : value.to_string() + "\n"};
}

CommandOutput cmd_straighten(const CommandContext& ctx, const std::string& shape, const std::string& product,
                             const std::string& gamma) {
  const Shape s = grass_shape(shape);
  const auto factors = parse_index_set_product(product);
  AlgElement e = grassmannian(s.m, s.n).multiply(factors, maybe_gamma(gamma, s.m, s.n));
  if (ctx.q0) e = specialize(e, *ctx.q0);
  return {json(ctx) ? dump(to_json(e)) : e.to_string() + "\n"};
}

CommandOutput cmd_relations(const CommandContext& ctx, const std::string& shape,
                            const std::vector<std::string>& products) {
  const Shape s = parse_shape(shape);
  if (products.empty()) fail(ErrorCode::InvalidArgument, "no products given");
  std::vector<std::vector<IndexPair>> parsed;
  for (const auto& p : products) parsed.push_back(parse_product(p, s));
  const auto rels = find_relations(QuantumMatrixAlgebra(s), parsed);
  if (json(ctx)) {
    Json out = Json::array();
    for (const auto& r : rels) out.push_back(to_json(r));
    return {dump(out)};
  }
  std::string text;
  for (const auto& r : rels) text += r.to_string() + "\n";
  return {rels.empty() ? "no relations\n" : text};
}

CommandOutput cmd_muir(const CommandContext& ctx, int n, const std::string& relation, const std::string& p,
                       const std::string& q) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "n must be >= 1");
  const Shape s{n, n};
  const auto r = parse_minor_relation(relation, s);
  const auto ext = muir_extend(QuantumMatrixAlgebra(s), r, parse_int_list(p), parse_int_list(q));
  return {json(ctx) ? dump(to_json(ext)) : ext.to_string() + "\n", ext.verified};
}

CommandOutput cmd_ladder(const CommandContext& ctx, const std::string& gamma, const std::string& shape) {
  const Shape s = grass_shape(shape);
  const auto g = parse_gamma(gamma, s.m, s.n);
  const auto lad = ladder(g, s.m, s.n);
  if (json(ctx)) {
    Json out = Json::array();
    for (const auto& l : lad)
      out.push_back({{"i", l.i}, {"j", l.j}, {"name", ladder_label_name(l, s.m, s.n)}, {"label", to_json(l.label)}});
    return {dump(out)};
  }
  std::string text;
  for (const auto& l : lad)
    text += "(" + std::to_string(l.i) + "," + std::to_string(l.j) + ") " + ladder_label_name(l, s.m, s.n) + " = " +
            l.label.to_string() + "\n";
  return {text};
}

namespace {

CommandOutput gk_output(const CommandContext& ctx, const GkDimension& gk) {
  if (json(ctx)) return {dump(Json{{"rank", gk.rank}, {"formula", gk.formula}, {"agrees", gk.agrees()}}), gk.agrees()};
  return {"gkdim " + std::to_string(gk.rank) + " (poset rank " + std::to_string(gk.rank) + ", closed form " +
              std::to_string(gk.formula) + ")\n",
          gk.agrees()};
}

}  // namespace

CommandOutput cmd_gkdim_grass(const CommandContext& ctx, int m, int n, const std::string& gamma) {
  if (m < 1 || n < m) fail(ErrorCode::InvalidArgument, "grassmannian needs 1 <= m <= n");
  return gk_output(ctx, rank_and_gkdim(parse_gamma(gamma, m, n), m, n));
}

CommandOutput cmd_gkdim_det(const CommandContext& ctx, const std::string& shape, const std::string& delta) {
  const Shape s = parse_shape(shape);
  return gk_output(ctx, rank_and_gkdim(parse_delta(delta, s), s));
}

CommandOutput cmd_gorenstein(const CommandContext& ctx, const std::string& gamma, int n) {
  const auto g = IndexSet::parse(gamma);
  if (!g.fits(static_cast<int>(g.size()), n)) fail(ErrorCode::InvalidArgument, g.to_string() + " is not a subset of 1.." + std::to_string(n));
  const auto b = gorenstein(g, n);
  return {json(ctx) ? dump(to_json(b)) : std::string(b.gorenstein ? "true" : "false") + "\n"};
}

CommandOutput cmd_hilbert(const CommandContext& ctx, const std::string& shape, const std::string& gamma,
                          int max_degree) {
  const Shape s = grass_shape(shape);
  if (max_degree < 0) fail(ErrorCode::InvalidArgument, "max degree must be >= 0");
  const auto r = hilbert(maybe_gamma(gamma, s.m, s.n), s.m, s.n, max_degree);
  if (json(ctx)) {
    Json dims = Json::array(), checks = Json::array();
    for (const auto& d : r.dims) dims.push_back(mpz_json(d));
    for (const auto& c : r.checks)
      checks.push_back({{"degree", c.degree},
                        {"generic_rank", c.generic_rank},
                        {"rank_at_2", c.rank_at_2},
                        {"rank_at_1/3", c.rank_at_third}});
    return {dump(Json{{"dims", dims}, {"cross_checks", checks}, {"consistent", r.consistent()}}), r.consistent()};
  }
  std::string text;
  for (const auto& d : r.dims) text += (text.empty() ? "" : " ") + d.get_str();
  text += "\n";
  if (!r.consistent()) text += "normal-form ranks disagree with multichain counts\n";
  return {text, r.consistent()};
}

CommandOutput cmd_express(const CommandContext& ctx, const std::string& shape, const std::string& gamma,
                          const std::string& x) {
  const Shape s = grass_shape(shape);
  auto e = express_in_ladder(parse_gamma(x, s.m, s.n), parse_gamma(gamma, s.m, s.n), s.m, s.n);
  if (ctx.q0)
    for (auto& t : e.terms) t.coeff = LaurentQ(t.coeff.eval(*ctx.q0));
  return {json(ctx) ? dump(to_json(e)) : e.to_string() + "\n", e.certified};
}

CommandOutput cmd_detring_straighten(const CommandContext& ctx, const std::string& shape, const std::string& delta,
                                     const std::string& product) {
  const Shape s = parse_shape(shape);
  std::optional<IndexPair> d;
  if (!delta.empty()) d = parse_delta(delta, s);
  DetAlgElement e = straighten_det(parse_index_pair_product(product), s, d);
  if (ctx.q0) e = specialize(e, *ctx.q0);
  return {json(ctx) ? dump(to_json(e)) : e.to_string() + "\n"};
}

CommandOutput cmd_detring_laplace(const CommandContext& ctx, int t, const std::string& rows,
                                  const std::string& cols, const std::string& shape) {
  std::optional<Shape> s;
  if (!shape.empty()) s = parse_shape(shape);
  const auto r = laplace_last_row(t, parse_int_list(rows), parse_int_list(cols), s);
  return {json(ctx) ? dump(to_json(r)) : expansion_to_string(r) + "\n", r.verified};
}

CommandOutput cmd_detring_dehom_check(const CommandContext& ctx, const std::string& shape,
                                      const std::string& delta, int max_degree) {
  const Shape s = parse_shape(shape);
  if (max_degree < 0) fail(ErrorCode::InvalidArgument, "max degree must be >= 0");
  const auto r = dehom_correspondence_check(parse_delta(delta, s), s, max_degree);
  if (json(ctx)) {
    Json exps = Json::object();
    for (const auto& [k, e] : r.m_exponents) exps[k.to_string()] = e;
    return {dump(Json{{"delta", to_json(r.delta)},
                      {"gamma", to_json(r.gamma)},
                      {"ideal_matches", r.ideal_matches},
                      {"m_exponents", exps},
                      {"products_checked", r.products_checked},
                      {"failures", r.failures},
                      {"passed", r.passed()}}),
            r.passed()};
  }
  std::ostringstream os;
  os << "delta " << r.delta.to_string() << " -> gamma " << r.gamma.to_string() << "\n";
  os << "ideal " << (r.ideal_matches ? "matches" : "does not match") << "\n";
  os << r.products_checked << " products checked\n";
  for (const auto& f : r.failures) os << "failure: " << f << "\n";
  os << (r.passed() ? "pass" : "fail") << "\n";
  return {os.str(), r.passed()};
}

CommandOutput cmd_check(const CommandContext& ctx, const std::string& suite, const std::string& shape,
                        const std::string& gamma, const std::string& delta, int max_degree) {
  RunConfig config;
  config.shape = parse_shape(shape);
  config.format = ctx.format;
  config.seed = ctx.seed;
  config.q0 = ctx.q0;
  if (max_degree >= 0) config.max_degree = max_degree;
  if (!gamma.empty()) config.gamma = parse_gamma(gamma, config.shape.m, config.shape.n);
  if (!delta.empty()) {
    if (config.shape.n <= config.shape.m)
      fail(ErrorCode::InvalidArgument, "a delta needs a grassmannian shape m x n with n > m");
    config.delta = parse_delta(delta, Shape{config.shape.m, config.shape.n - config.shape.m});
  }
  const auto lines = run_suite(suite, config);
  return {format_report(lines, ctx.format), all_passed(lines)};
}

}  // namespace qschubert
