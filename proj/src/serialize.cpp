#include "qschubert/serialize.hpp"

#include <algorithm>
#include <cctype>

#include "qschubert/error.hpp"

namespace qschubert {

namespace {

Json shape_json(const Shape& s) { return Json::array({s.m, s.n}); }

Shape shape_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) fail(ErrorCode::Parse, "shape must be [m, n]");
  return Shape{j[0].get<int>(), j[1].get<int>()};
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) fail(ErrorCode::Parse, std::string("missing field '") + name + "'");
  return j.at(name);
}

template <typename F>
auto guarded(F f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, e.what());
  }
}

}  // namespace

Shape parse_shape(std::string_view text) {
  const auto x = text.find_first_of("xX");
  if (x == std::string_view::npos) fail(ErrorCode::Parse, "shape must look like 2x4: '" + std::string(text) + "'");
  const auto m = parse_int_list(text.substr(0, x));
  const auto n = parse_int_list(text.substr(x + 1));
  if (m.size() != 1 || n.size() != 1 || m[0] < 1 || n[0] < 1)
    fail(ErrorCode::Parse, "shape must look like 2x4: '" + std::string(text) + "'");
  return Shape{m[0], n[0]};
}

Json to_json(const IndexSet& x) { return Json(x.cols); }

Json to_json(const IndexPair& p) { return Json{{"rows", p.rows}, {"cols", p.cols}}; }

IndexSet index_set_from_json(const Json& j) {
  return guarded([&] { return IndexSet(j.get<std::vector<int>>()); });
}

IndexPair index_pair_from_json(const Json& j) {
  return guarded([&] {
    return IndexPair(field(j, "rows").get<std::vector<int>>(), field(j, "cols").get<std::vector<int>>());
  });
}

Json to_json(const NcPoly& p) {
  Json terms = Json::array();
  for (const auto& [w, c] : p.terms()) {
    Json word = Json::array();
    for (const auto& g : w.generators(p.shape())) word.push_back({g.row, g.col});
    terms.push_back({{"word", word}, {"coeff", c.to_string()}});
  }
  return Json{{"shape", shape_json(p.shape())}, {"terms", terms}};
}

NcPoly ncpoly_from_json(const Json& j) {
  return guarded([&] {
    const Shape s = shape_from(field(j, "shape"));
    NcPoly out(s);
    for (const auto& t : field(j, "terms")) {
      std::vector<Generator> gens;
      for (const auto& g : field(t, "word")) gens.push_back({g.at(0).get<int>(), g.at(1).get<int>()});
      out += normal_form(Word::from_generators(s, gens), s) * LaurentQ::parse(field(t, "coeff").get<std::string>());
    }
    return out;
  });
}

Json to_json(const AlgElement& e) {
  Json terms = Json::array();
  for (const auto& [s, c] : e.terms) {
    Json factors = Json::array();
    for (const auto& f : s.factors) factors.push_back(to_json(f));
    terms.push_back({{"factors", factors}, {"coeff", c.to_string()}});
  }
  return Json{{"shape", shape_json(Shape{e.m, e.n})},
              {"gamma", e.gamma ? to_json(*e.gamma) : Json(nullptr)},
              {"terms", terms}};
}

AlgElement alg_element_from_json(const Json& j) {
  return guarded([&] {
    AlgElement out;
    const Shape s = shape_from(field(j, "shape"));
    out.m = s.m;
    out.n = s.n;
    if (!field(j, "gamma").is_null()) out.gamma = index_set_from_json(j.at("gamma"));
    for (const auto& t : field(j, "terms")) {
      StdMonomial mono;
      for (const auto& f : field(t, "factors")) mono.factors.push_back(index_set_from_json(f));
      if (!mono.is_standard()) fail(ErrorCode::Parse, mono.to_string() + " is not a standard monomial");
      out.add_term(mono, LaurentQ::parse(field(t, "coeff").get<std::string>()));
    }
    return out;
  });
}

Json to_json(const DetAlgElement& e) {
  Json terms = Json::array();
  for (const auto& [s, c] : e.terms) {
    Json factors = Json::array();
    for (const auto& f : s.factors) factors.push_back(to_json(f));
    terms.push_back({{"factors", factors}, {"coeff", c.to_string()}});
  }
  return Json{{"shape", shape_json(e.shape)},
              {"delta", e.delta ? to_json(*e.delta) : Json(nullptr)},
              {"terms", terms}};
}

DetAlgElement det_element_from_json(const Json& j) {
  return guarded([&] {
    DetAlgElement out;
    out.shape = shape_from(field(j, "shape"));
    if (!field(j, "delta").is_null()) out.delta = index_pair_from_json(j.at("delta"));
    for (const auto& t : field(j, "terms")) {
      DetMonomial mono;
      for (const auto& f : field(t, "factors")) mono.factors.push_back(index_pair_from_json(f));
      if (!mono.is_standard()) fail(ErrorCode::Parse, mono.to_string() + " is not a standard monomial");
      out.add_term(mono, LaurentQ::parse(field(t, "coeff").get<std::string>()));
    }
    return out;
  });
}

Json to_json(const MinorRelation& r) {
  Json terms = Json::array();
  for (const auto& t : r.terms) {
    Json term{{"coeff", t.coeff.to_string()}};
    if (t.factors.size() <= 2) {
      term["left"] = to_json(t.factors.at(0));
      term["right"] = t.factors.size() == 2 ? to_json(t.factors[1]) : Json(nullptr);
    } else {
      Json factors = Json::array();
      for (const auto& f : t.factors) factors.push_back(to_json(f));
      term["factors"] = factors;
    }
    terms.push_back(term);
  }
  return Json{{"shape", shape_json(r.shape)}, {"verified", r.verified}, {"terms", terms}};
}

MinorRelation minor_relation_from_json(const Json& j) {
  return guarded([&] {
    MinorRelation out;
    out.shape = shape_from(field(j, "shape"));
    out.verified = j.value("verified", false);
    for (const auto& t : field(j, "terms")) {
      MinorRelation::Term term{LaurentQ::parse(field(t, "coeff").get<std::string>()), {}};
      if (t.contains("factors")) {
        for (const auto& f : t.at("factors")) term.factors.push_back(index_pair_from_json(f));
      } else {
        term.factors.push_back(index_pair_from_json(field(t, "left")));
        if (t.contains("right") && !t.at("right").is_null()) term.factors.push_back(index_pair_from_json(t.at("right")));
      }
      out.terms.push_back(std::move(term));
    }
    return out;
  });
}

MinorRelation parse_minor_relation(std::string_view text, const Shape& s) {
  std::string body(text);
  if (const auto eq = body.find('='); eq != std::string::npos) {
    std::string rhs = body.substr(eq + 1);
    rhs.erase(std::remove_if(rhs.begin(), rhs.end(), [](unsigned char c) { return std::isspace(c); }), rhs.end());
    if (rhs != "0") fail(ErrorCode::Parse, "relation must have right-hand side 0");
    body.resize(eq);
  }
  // Split on top-level + and - (outside brackets and parentheses).
  std::vector<std::pair<bool, std::string>> pieces;
  int depth = 0;
  bool negative = false;
  std::string cur;
  auto flush = [&] {
    const auto first = cur.find_first_not_of(" \t");
    if (first == std::string::npos) fail(ErrorCode::Parse, "empty term in relation");
    pieces.emplace_back(negative, cur.substr(first));
    cur.clear();
    negative = false;
  };
  for (std::size_t i = 0; i < body.size(); ++i) {
    const char c = body[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth < 0) fail(ErrorCode::Parse, "unbalanced brackets in relation");
    const bool exponent = i > 0 && body[i - 1] == '^';
    if (depth == 0 && (c == '+' || c == '-') && !exponent) {
      if (cur.find_first_not_of(" \t") != std::string::npos) flush();
      if (c == '-') negative = !negative;
      continue;
    }
    cur += c;
  }
  if (depth != 0) fail(ErrorCode::Parse, "unbalanced brackets in relation");
  flush();

  MinorRelation out;
  out.shape = s;
  for (auto& [neg, term] : pieces) {
    const auto open = term.find('[');
    if (open == std::string::npos) fail(ErrorCode::Parse, "term without a minor: '" + term + "'");
    std::string coeff = term.substr(0, open);
    while (!coeff.empty() && (std::isspace(static_cast<unsigned char>(coeff.back())) || coeff.back() == '*'))
      coeff.pop_back();
    LaurentQ c(1);
    if (!coeff.empty()) {
      if (coeff.front() == '(' && coeff.back() == ')') coeff = coeff.substr(1, coeff.size() - 2);
      c = LaurentQ::parse(coeff);
    }
    auto factors = parse_index_pair_product(term.substr(open));
    for (const auto& f : factors)
      if (f.rows.back() > s.m || f.cols.back() > s.n)
        fail(ErrorCode::ShapeMismatch, "minor " + f.to_string() + " does not fit the shape");
    out.terms.push_back({neg ? -c : c, std::move(factors)});
  }
  return out;
}

Json to_json(const LadderExpression& e) {
  Json ladder = Json::array();
  for (const auto& l : e.ladder)
    ladder.push_back({{"i", l.i}, {"j", l.j}, {"label", to_json(l.label)}, {"name", ladder_label_name(l, e.m, e.n)}});
  Json terms = Json::array();
  for (const auto& t : e.terms) {
    Json labels = Json::array();
    for (auto idx : t.labels) labels.push_back(ladder_label_name(e.ladder[idx], e.m, e.n));
    terms.push_back({{"labels", labels}, {"gamma_power", t.gamma_power}, {"coeff", t.coeff.to_string()}});
  }
  return Json{{"shape", shape_json(Shape{e.m, e.n})}, {"x", to_json(e.x)}, {"gamma", to_json(e.gamma)},
              {"ladder", ladder}, {"terms", terms}, {"certified", e.certified}};
}

Json to_json(const BlockGapDecomposition& b) {
  return Json{{"blocks", b.blocks}, {"gaps", b.gaps}, {"last_gap_empty", b.last_gap_empty}, {"t", b.t},
              {"gorenstein", b.gorenstein}};
}

AlgElement specialize(const AlgElement& e, const Rational& q0) {
  AlgElement out = e;
  out.terms.clear();
  for (const auto& [s, c] : e.terms) out.add_term(s, LaurentQ(c.eval(q0)));
  return out;
}

DetAlgElement specialize(const DetAlgElement& e, const Rational& q0) {
  DetAlgElement out = e;
  out.terms.clear();
  for (const auto& [s, c] : e.terms) out.add_term(s, LaurentQ(c.eval(q0)));
  return out;
}

NcPoly specialize(const NcPoly& p, const Rational& q0) {
  NcPoly out(p.shape());
  for (const auto& [w, c] : p.terms()) out.add_term(w, LaurentQ(c.eval(q0)));
  return out;
}

}  // namespace qschubert
