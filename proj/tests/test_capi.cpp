#include <doctest.h>

#include <string>

#include <json.hpp>

#include "qschubert/qschubert.h"

namespace {

struct Context {
  qs_context* ctx = nullptr;
  Context() { REQUIRE(qs_context_new(&ctx) == QS_OK); }
  ~Context() { qs_context_free(ctx); }
};

template <typename F>
std::pair<qs_status, std::string> call(F f) {
  char* out = nullptr;
  const qs_status st = f(&out);
  std::string text = out ? out : "";
  if (st != QS_OK && st != QS_CHECK_FAILED) CHECK(out == nullptr);
  qs_string_free(out);
  return {st, text};
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(qs_version()) == "0.1.0");
  CHECK(std::string(qs_status_name(QS_OK)) == "ok");
  CHECK(std::string(qs_status_name(QS_PARSE)) == "parse error");
  CHECK(std::string(qs_status_name(QS_CHECK_FAILED)) == "check failed");
  qs_string_free(nullptr);
}

TEST_CASE("element commands") {
  Context c;
  auto [st, text] = call([&](char** o) { return qs_minor(c.ctx, "2x2", "[1,2|1,2]", o); });
  CHECK(st == QS_OK);
  CHECK(text == "X11*X22 - q*X12*X21\n");

  std::tie(st, text) = call([&](char** o) { return qs_straighten(c.ctx, "2x4", "[2,4][1,3]", nullptr, o); });
  CHECK(st == QS_OK);
  CHECK(text == "(q^-1 - q^-3)*[1,2][3,4] + q^-2*[1,3][2,4]\n");

  std::tie(st, text) = call([&](char** o) { return qs_straighten(c.ctx, "2x4", "[1,2][3,4]", "2,3", o); });
  CHECK(st == QS_OK);
  CHECK(text == "0\n");

  REQUIRE(qs_context_set_q0(c.ctx, "2") == QS_OK);
  std::tie(st, text) = call([&](char** o) { return qs_minor(c.ctx, "2x2", "[1,2|1,2]", o); });
  CHECK(text == "X11*X22 - 2*X12*X21\n");
  CHECK(qs_context_set_q0(c.ctx, "0") == QS_ZERO_SPECIALIZATION);
  CHECK(qs_context_set_q0(c.ctx, nullptr) == QS_OK);

  REQUIRE(qs_context_set_format(c.ctx, QS_FORMAT_JSON) == QS_OK);
  std::tie(st, text) = call([&](char** o) { return qs_straighten(c.ctx, "2x4", "[2,4][1,3]", nullptr, o); });
  const auto j = nlohmann::json::parse(text);
  CHECK(j["terms"].size() == 2);
}

TEST_CASE("structural commands") {
  Context c;
  CHECK(call([&](char** o) { return qs_gorenstein(c.ctx, "1,3", 4, o); }).second == "true\n");
  CHECK(call([&](char** o) { return qs_gorenstein(c.ctx, "1,4", 5, o); }).second == "false\n");
  CHECK(call([&](char** o) { return qs_hilbert(c.ctx, "2x4", nullptr, 2, o); }).second == "1 6 20\n");
  const auto gk = call([&](char** o) { return qs_gkdim_grass(c.ctx, 3, 7, "1,3,6", o); });
  CHECK(gk.first == QS_OK);
  CHECK(gk.second.rfind("gkdim 9", 0) == 0);
  const auto lap = call([&](char** o) { return qs_detring_laplace(c.ctx, 2, "1,2", "1,2", nullptr, o); });
  CHECK(lap.second == "[1,2|1,2] = X22*[1|1] - q^-1*X21*[1|2]\n");
  const char* products[] = {"[1,3][2,4]", "[2,4][1,3]", "[1,4][2,3]"};
  const auto rel = call([&](char** o) { return qs_relations(c.ctx, "2x4", products, 3, o); });
  CHECK(rel.second == "[1,2|1,3][1,2|2,4] - [1,2|2,4][1,2|1,3] - (q - q^-1)*[1,2|1,4][1,2|2,3] = 0\n");
  const auto ladder = call([&](char** o) { return qs_ladder(c.ctx, "1,3,6", "3x7", o); });
  CHECK(ladder.first == QS_OK);
  CHECK(ladder.second.find("(2,4)") != std::string::npos);
  const auto muir = call([&](char** o) {
    return qs_muir(c.ctx, 3, "[1|1][2|2] - [2|2][1|1] - (q - q^-1)*[1|2][2|1] = 0", "1,2", "1,2", o);
  });
  CHECK(muir.second == "[1,3|1,3][2,3|2,3] - [2,3|2,3][1,3|1,3] - (q - q^-1)*[1,3|2,3][2,3|1,3] = 0\n");
}

TEST_CASE("checks and manifest") {
  Context c;
  const auto all = call([&](char** o) { return qs_check(c.ctx, "all", "2x4", nullptr, nullptr, 2, o); });
  CHECK(all.first == QS_OK);
  CHECK(all.second.find(" 0 failed") != std::string::npos);
  const auto names = call([](char** o) { return qs_suites(o); });
  CHECK(names.second.rfind("confluence ladder", 0) == 0);
  const auto m = call([](char** o) { return qs_manifest(o); });
  CHECK(nlohmann::json::parse(m.second)["version"] == 1);
}

TEST_CASE("errors") {
  Context c;
  auto r = call([&](char** o) { return qs_minor(c.ctx, "2x", "[1|1]", o); });
  CHECK(r.first == QS_PARSE);
  CHECK(std::string(qs_last_error()).size() > 0);
  r = call([&](char** o) { return qs_check(c.ctx, "nope", "2x4", nullptr, nullptr, -1, o); });
  CHECK(r.first == QS_INVALID_ARGUMENT);
  r = call([&](char** o) { return qs_express(c.ctx, "2x4", "2,3", "1,3", o); });
  CHECK(r.first == QS_NOT_IN_RESIDUAL_POSET);
  r = call([&](char** o) { return qs_detring_laplace(c.ctx, 1, "1", "1", nullptr, o); });
  CHECK(r.first == QS_PRECONDITION_VIOLATED);
  CHECK(qs_minor(c.ctx, "2x2", "[1|1]", nullptr) == QS_INVALID_ARGUMENT);
  CHECK(qs_minor(nullptr, "2x2", "[1|1]", nullptr) == QS_INVALID_ARGUMENT);
  CHECK(qs_context_new(nullptr) == QS_INVALID_ARGUMENT);
  qs_context_free(nullptr);
}
