#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qschubert/qschubert.h"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitError = 3;

struct Args {
  std::string format = "text";
  std::uint64_t seed = 0;
  std::string q0;
  std::size_t budget = 0;

  std::string shape;
  std::string gamma;
  std::string delta;
  std::string minor;
  std::string product;
  std::string relation;
  std::string x;
  std::string p;
  std::string q;
  std::string rows;
  std::string cols;
  std::string suite;
  std::vector<std::string> products;
  std::vector<int> grass;
  int n = 0;
  int t = 0;
  int max_degree = -1;
};

int finish(qs_status status, char* out) {
  if (out) {
    std::fputs(out, stdout);
    qs_string_free(out);
  }
  if (status == QS_OK) return 0;
  if (status == QS_CHECK_FAILED) return kExitCheckFailed;
  std::fprintf(stderr, "error (%s): %s\n", qs_status_name(status), qs_last_error());
  return status == QS_INVALID_ARGUMENT || status == QS_PARSE ? kExitUsage : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum matrix algebras, quantum grassmannians and their Schubert and determinantal quotients"};
  app.require_subcommand(1);
  app.fallthrough();
  Args a;
  app.add_option("--format", a.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  auto* seed = app.add_option("--seed", a.seed, "Seed for randomized suites");
  app.add_option("--q0", a.q0, "Specialize coefficients at this nonzero rational");
  app.add_option("--budget", a.budget, "Words per graded component (overrides QSCHUBERT_BUDGET)");

  std::function<qs_status(qs_context*, char**)> action;

  auto* minor = app.add_subcommand("minor", "Quantum minor in normal form");
  minor->add_option("--shape", a.shape, "m x n, e.g. 2x4")->required();
  minor->add_option("minor", a.minor, "[1,2|1,3], or a column set for a maximal minor")->required();
  minor->callback([&] {
    action = [&](qs_context* c, char** out) { return qs_minor(c, a.shape.c_str(), a.minor.c_str(), out); };
  });

  auto* straighten = app.add_subcommand("straighten", "Standard monomial expansion in O_q(G_{m,n})");
  straighten->add_option("--shape", a.shape)->required();
  straighten->add_option("--gamma", a.gamma, "Work in the Schubert quotient of gamma");
  straighten->add_option("product", a.product, "e.g. [2,4][1,3]")->required();
  straighten->callback([&] {
    action = [&](qs_context* c, char** out) {
      return qs_straighten(c, a.shape.c_str(), a.product.c_str(), a.gamma.c_str(), out);
    };
  });

  auto* relations = app.add_subcommand("relations", "Linear relations among products of minors");
  relations->add_option("--shape", a.shape)->required();
  // Products are taken from the extras: CLI11 would split "[1,3][2,4]" as its own list syntax.
  relations->allow_extras()->fallthrough(false);
  relations->footer("Positional arguments: products of one multidegree, e.g. \"[1,3][2,4]\" \"[2,4][1,3]\"");
  relations->callback([&] {
    a.products = relations->remaining();
    if (a.products.empty()) throw CLI::RequiredError("products");
    action = [&](qs_context* c, char** out) {
      std::vector<const char*> ptrs;
      for (const auto& p : a.products) ptrs.push_back(p.c_str());
      return qs_relations(c, a.shape.c_str(), ptrs.data(), ptrs.size(), out);
    };
  });

  auto* muir = app.add_subcommand("muir", "Extend a relation of O_q(M_n) by complementary rows and columns");
  muir->add_option("--n", a.n, "Matrix size")->required();
  muir->add_option("--p", a.p, "Row set P")->required();
  muir->add_option("--q", a.q, "Column set Q")->required();
  muir->add_option("relation", a.relation, "e.g. \"[1|1][2|2] - [2|2][1|1] - (q - q^-1)*[1|2][2|1]\"")->required();
  muir->callback([&] {
    action = [&](qs_context* c, char** out) {
      return qs_muir(c, a.n, a.relation.c_str(), a.p.c_str(), a.q.c_str(), out);
    };
  });

  auto* ladder = app.add_subcommand("ladder", "Ladder positions and labels of gamma");
  ladder->add_option("--gamma", a.gamma)->required();
  ladder->add_option("--shape", a.shape)->required();
  ladder->callback([&] {
    action = [&](qs_context* c, char** out) { return qs_ladder(c, a.gamma.c_str(), a.shape.c_str(), out); };
  });

  auto* gkdim = app.add_subcommand("gkdim", "GK dimension by poset rank and closed form");
  auto* grass = gkdim->add_option("--grass", a.grass, "m n")->expected(2);
  gkdim->add_option("--gamma", a.gamma);
  auto* det_shape = gkdim->add_option("--shape", a.shape, "Matrix shape, with --delta");
  gkdim->add_option("--delta", a.delta);
  grass->excludes(det_shape);
  gkdim->callback([&] {
    if (!a.grass.empty()) {
      if (a.gamma.empty()) throw CLI::RequiredError("--gamma");
      action = [&](qs_context* c, char** out) {
        return qs_gkdim_grass(c, a.grass[0], a.grass[1], a.gamma.c_str(), out);
      };
    } else {
      if (a.shape.empty() || a.delta.empty()) throw CLI::RequiredError("--grass m n --gamma, or --shape and --delta");
      action = [&](qs_context* c, char** out) { return qs_gkdim_det(c, a.shape.c_str(), a.delta.c_str(), out); };
    }
  });

  auto* gor = app.add_subcommand("gorenstein", "Block/gap Gorenstein criterion");
  gor->add_option("--gamma", a.gamma)->required();
  gor->add_option("--n", a.n)->required();
  gor->callback([&] {
    action = [&](qs_context* c, char** out) { return qs_gorenstein(c, a.gamma.c_str(), a.n, out); };
  });

  auto* hilb = app.add_subcommand("hilbert", "Graded dimensions, cross-checked by normal-form rank");
  hilb->add_option("--shape", a.shape)->required();
  hilb->add_option("--gamma", a.gamma);
  hilb->add_option("--max-deg", a.max_degree)->required();
  hilb->callback([&] {
    action = [&](qs_context* c, char** out) {
      return qs_hilbert(c, a.shape.c_str(), a.gamma.c_str(), a.max_degree, out);
    };
  });

  auto* express = app.add_subcommand("express", "Write x in the localized quotient via ladder labels");
  express->add_option("--shape", a.shape)->required();
  express->add_option("--gamma", a.gamma)->required();
  express->add_option("x", a.x, "A maximal minor >= gamma")->required();
  express->callback([&] {
    action = [&](qs_context* c, char** out) {
      return qs_express(c, a.shape.c_str(), a.gamma.c_str(), a.x.c_str(), out);
    };
  });

  auto* det = app.add_subcommand("detring", "Quantum determinantal rings");
  det->require_subcommand(1);
  auto* dst = det->add_subcommand("straighten", "Standard monomial expansion in O_q(M_{m,n})");
  dst->add_option("--shape", a.shape)->required();
  dst->add_option("--delta", a.delta, "Work in the quotient by the minors not >= delta");
  dst->add_option("product", a.product, "e.g. [2|2][1|1]")->required();
  dst->callback([&] {
    action = [&](qs_context* c, char** out) {
      return qs_detring_straighten(c, a.shape.c_str(), a.delta.c_str(), a.product.c_str(), out);
    };
  });
  auto* lap = det->add_subcommand("laplace", "Expansion of a t x t minor along its last row");
  lap->add_option("--t", a.t)->required();
  lap->add_option("--rows", a.rows)->required();
  lap->add_option("--cols", a.cols)->required();
  lap->add_option("--shape", a.shape);
  lap->callback([&] {
    action = [&](qs_context* c, char** out) {
      return qs_detring_laplace(c, a.t, a.rows.c_str(), a.cols.c_str(), a.shape.c_str(), out);
    };
  });
  auto* dh = det->add_subcommand("dehom-check", "Compare the quotient by delta with a localized Schubert quotient");
  dh->add_option("--shape", a.shape)->required();
  dh->add_option("--delta", a.delta)->required();
  dh->add_option("--max-deg", a.max_degree)->required();
  dh->callback([&] {
    action = [&](qs_context* c, char** out) {
      return qs_detring_dehom_check(c, a.shape.c_str(), a.delta.c_str(), a.max_degree, out);
    };
  });

  auto* check = app.add_subcommand("check", "Run verification suites");
  std::vector<std::string> suites = {"all", "confluence", "ladder", "muir", "pieri", "asl",
                                     "dehom", "hilbert", "gorenstein", "roundtrip"};
  check->add_option("suite", a.suite)->required()->check(CLI::IsMember(suites));
  check->add_option("--shape", a.shape)->required();
  check->add_option("--gamma", a.gamma);
  check->add_option("--delta", a.delta, "Matrix-side delta in Delta_{m,n-m}");
  check->add_option("--max-deg", a.max_degree, "Defaults per suite from the manifest");
  check->callback([&] {
    action = [&](qs_context* c, char** out) {
      return qs_check(c, a.suite.c_str(), a.shape.c_str(), a.gamma.c_str(), a.delta.c_str(), a.max_degree, out);
    };
  });

  auto* man = app.add_subcommand("manifest", "Print the suite defaults manifest");
  man->callback([&] { action = [](qs_context*, char** out) { return qs_manifest(out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  qs_context* ctx = nullptr;
  if (qs_context_new(&ctx) != QS_OK) return finish(QS_INTERNAL, nullptr);
  qs_context_set_format(ctx, a.format == "json" ? QS_FORMAT_JSON : QS_FORMAT_TEXT);
  if (seed->count()) qs_context_set_seed(ctx, a.seed);
  if (a.budget) qs_set_component_budget(a.budget);
  int code = 0;
  if (const qs_status s = qs_context_set_q0(ctx, a.q0.c_str()); s != QS_OK) {
    code = finish(s, nullptr);
  } else {
    char* out = nullptr;
    const qs_status s2 = action(ctx, &out);
    code = finish(s2, out);
  }
  qs_context_free(ctx);
  return code;
}
