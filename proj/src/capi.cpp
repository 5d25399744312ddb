#include "qschubert/qschubert.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "qschubert/commands.hpp"
#include "qschubert/config.hpp"
#include "qschubert/error.hpp"

struct qs_context {
  qschubert::CommandContext cmd;
};

namespace {

thread_local std::string last_error;

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string arg(const char* s) { return s ? std::string(s) : std::string(); }

qs_status fail_with(qs_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename F>
qs_status guard(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const qschubert::Error& e) {
    return fail_with(static_cast<qs_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return fail_with(QS_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail_with(QS_INTERNAL, e.what());
  }
}

template <typename F>
qs_status run(const qs_context* ctx, char** out, F&& body) {
  if (!out) return fail_with(QS_INVALID_ARGUMENT, "out must not be NULL");
  *out = nullptr;
  if (!ctx) return fail_with(QS_INVALID_ARGUMENT, "context must not be NULL");
  return guard([&] {
    const qschubert::CommandOutput result = body(ctx->cmd);
    *out = copy_string(result.text);
    if (!result.ok) {
      last_error = "check failed";
      return QS_CHECK_FAILED;
    }
    return QS_OK;
  });
}

}  // namespace

extern "C" {

const char* qs_version(void) { return "0.1.0"; }

const char* qs_status_name(qs_status status) {
  switch (status) {
    case QS_OK: return "ok";
    case QS_INVALID_ARGUMENT: return "invalid argument";
    case QS_PARSE: return "parse error";
    case QS_ZERO_SPECIALIZATION: return "zero specialization";
    case QS_SHAPE_MISMATCH: return "shape mismatch";
    case QS_INHOMOGENEOUS_INPUT: return "inhomogeneous input";
    case QS_PRECONDITION_VIOLATED: return "precondition violated";
    case QS_VERIFICATION_FAILED: return "verification failed";
    case QS_BUDGET_EXCEEDED: return "budget exceeded";
    case QS_HYPOTHESIS_VIOLATED: return "hypothesis violated";
    case QS_NOT_IN_RESIDUAL_POSET: return "not in residual poset";
    case QS_NO_RELATION_FOUND: return "no relation found";
    case QS_INTERNAL: return "internal error";
    case QS_CHECK_FAILED: return "check failed";
  }
  return "unknown status";
}

const char* qs_last_error(void) { return last_error.c_str(); }

void qs_string_free(char* s) { std::free(s); }

qs_status qs_context_new(qs_context** out) {
  if (!out) return fail_with(QS_INVALID_ARGUMENT, "out must not be NULL");
  return guard([&] {
    *out = new qs_context();
    return QS_OK;
  });
}

void qs_context_free(qs_context* ctx) { delete ctx; }

qs_status qs_context_set_format(qs_context* ctx, qs_format format) {
  if (!ctx) return fail_with(QS_INVALID_ARGUMENT, "context must not be NULL");
  if (format != QS_FORMAT_TEXT && format != QS_FORMAT_JSON) return fail_with(QS_INVALID_ARGUMENT, "unknown format");
  ctx->cmd.format = format == QS_FORMAT_JSON ? qschubert::OutputFormat::Json : qschubert::OutputFormat::Text;
  return QS_OK;
}

qs_status qs_context_set_seed(qs_context* ctx, uint64_t seed) {
  if (!ctx) return fail_with(QS_INVALID_ARGUMENT, "context must not be NULL");
  ctx->cmd.seed = seed;
  return QS_OK;
}

qs_status qs_context_set_q0(qs_context* ctx, const char* q0) {
  if (!ctx) return fail_with(QS_INVALID_ARGUMENT, "context must not be NULL");
  return guard([&] {
    if (!q0 || !*q0) {
      ctx->cmd.q0.reset();
      return QS_OK;
    }
    const auto v = qschubert::parse_rational(q0);
    if (v == 0) qschubert::fail(qschubert::ErrorCode::ZeroSpecialization, "q0 must be nonzero");
    ctx->cmd.q0 = v;
    return QS_OK;
  });
}

qs_status qs_set_component_budget(size_t words) {
  qschubert::set_component_budget(words);
  return QS_OK;
}

qs_status qs_minor(const qs_context* ctx, const char* shape, const char* minor, char** out) {
  return run(ctx, out, [&](const auto& c) { return qschubert::cmd_minor(c, arg(shape), arg(minor)); });
}

qs_status qs_straighten(const qs_context* ctx, const char* shape, const char* product, const char* gamma, char** out) {
  return run(ctx, out,
             [&](const auto& c) { return qschubert::cmd_straighten(c, arg(shape), arg(product), arg(gamma)); });
}

qs_status qs_relations(const qs_context* ctx, const char* shape, const char* const* products, size_t count,
                       char** out) {
  return run(ctx, out, [&](const auto& c) {
    if (!products && count) qschubert::fail(qschubert::ErrorCode::InvalidArgument, "products must not be NULL");
    std::vector<std::string> list;
    for (size_t i = 0; i < count; ++i) list.push_back(arg(products[i]));
    return qschubert::cmd_relations(c, arg(shape), list);
  });
}

qs_status qs_muir(const qs_context* ctx, int n, const char* relation, const char* p, const char* q, char** out) {
  return run(ctx, out, [&](const auto& c) { return qschubert::cmd_muir(c, n, arg(relation), arg(p), arg(q)); });
}

qs_status qs_ladder(const qs_context* ctx, const char* gamma, const char* shape, char** out) {
  return run(ctx, out, [&](const auto& c) { return qschubert::cmd_ladder(c, arg(gamma), arg(shape)); });
}

qs_status qs_gkdim_grass(const qs_context* ctx, int m, int n, const char* gamma, char** out) {
  return run(ctx, out, [&](const auto& c) { return qschubert::cmd_gkdim_grass(c, m, n, arg(gamma)); });
}

qs_status qs_gkdim_det(const qs_context* ctx, const char* shape, const char* delta, char** out) {
  return run(ctx, out, [&](const auto& c) { return qschubert::cmd_gkdim_det(c, arg(shape), arg(delta)); });
}

qs_status qs_gorenstein(const qs_context* ctx, const char* gamma, int n, char** out) {
  return run(ctx, out, [&](const auto& c) { return qschubert::cmd_gorenstein(c, arg(gamma), n); });
}

qs_status qs_hilbert(const qs_context* ctx, const char* shape, const char* gamma, int max_degree, char** out) {
  return run(ctx, out,
             [&](const auto& c) { return qschubert::cmd_hilbert(c, arg(shape), arg(gamma), max_degree); });
}

qs_status qs_express(const qs_context* ctx, const char* shape, const char* gamma, const char* x, char** out) {
  return run(ctx, out, [&](const auto& c) { return qschubert::cmd_express(c, arg(shape), arg(gamma), arg(x)); });
}

qs_status qs_detring_straighten(const qs_context* ctx, const char* shape, const char* delta, const char* product,
                                char** out) {
  return run(ctx, out, [&](const auto& c) {
    return qschubert::cmd_detring_straighten(c, arg(shape), arg(delta), arg(product));
  });
}

qs_status qs_detring_laplace(const qs_context* ctx, int t, const char* rows, const char* cols, const char* shape,
                             char** out) {
  return run(ctx, out,
             [&](const auto& c) { return qschubert::cmd_detring_laplace(c, t, arg(rows), arg(cols), arg(shape)); });
}

qs_status qs_detring_dehom_check(const qs_context* ctx, const char* shape, const char* delta, int max_degree,
                                 char** out) {
  return run(ctx, out, [&](const auto& c) {
    return qschubert::cmd_detring_dehom_check(c, arg(shape), arg(delta), max_degree);
  });
}

qs_status qs_check(const qs_context* ctx, const char* suite, const char* shape, const char* gamma, const char* delta,
                   int max_degree, char** out) {
  return run(ctx, out, [&](const auto& c) {
    return qschubert::cmd_check(c, arg(suite), arg(shape), arg(gamma), arg(delta), max_degree);
  });
}

qs_status qs_suites(char** out) {
  if (!out) return fail_with(QS_INVALID_ARGUMENT, "out must not be NULL");
  *out = nullptr;
  return guard([&] {
    std::string names;
    for (const auto& s : qschubert::suite_names()) names += (names.empty() ? "" : " ") + s;
    *out = copy_string(names);
    return QS_OK;
  });
}

qs_status qs_manifest(char** out) {
  if (!out) return fail_with(QS_INVALID_ARGUMENT, "out must not be NULL");
  *out = nullptr;
  return guard([&] {
    *out = copy_string(qschubert::manifest().dump(2) + "\n");
    return QS_OK;
  });
}

}  // extern "C"
