#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qschubert/suites.hpp"

namespace qschubert {

/// Settings shared by every command.
struct CommandContext {
  OutputFormat format = OutputFormat::Text;
  /// Coefficients of element outputs are specialized at q0 when set.
  std::optional<Rational> q0;
  std::uint64_t seed = kDefaultSeed;
};

/// Rendered output (newline terminated) and whether every check passed.
struct CommandOutput {
  std::string text;
  bool ok = true;
};

// Arguments are in the CLI's textual syntax: shapes "2x4", index sets
// "1,3,6" or "[1,3,6]", index pairs "[1,2|1,3]", products "[2,4][1,3]".
// Optional arguments are empty strings when absent.

CommandOutput cmd_minor(const CommandContext& ctx, const std::string& shape, const std::string& minor);
CommandOutput cmd_straighten(const CommandContext& ctx, const std::string& shape, const std::string& product,
                             const std::string& gamma);
/// Products of maximal minors ("[1,3][2,4]") or of index pairs.
CommandOutput cmd_relations(const CommandContext& ctx, const std::string& shape,
                            const std::vector<std::string>& products);
CommandOutput cmd_muir(const CommandContext& ctx, int n, const std::string& relation, const std::string& p,
                       const std::string& q);
CommandOutput cmd_ladder(const CommandContext& ctx, const std::string& gamma, const std::string& shape);
CommandOutput cmd_gkdim_grass(const CommandContext& ctx, int m, int n, const std::string& gamma);
CommandOutput cmd_gkdim_det(const CommandContext& ctx, const std::string& shape, const std::string& delta);
CommandOutput cmd_gorenstein(const CommandContext& ctx, const std::string& gamma, int n);
CommandOutput cmd_hilbert(const CommandContext& ctx, const std::string& shape, const std::string& gamma,
                          int max_degree);
CommandOutput cmd_express(const CommandContext& ctx, const std::string& shape, const std::string& gamma,
                          const std::string& x);
CommandOutput cmd_detring_straighten(const CommandContext& ctx, const std::string& shape, const std::string& delta,
                                     const std::string& product);
CommandOutput cmd_detring_laplace(const CommandContext& ctx, int t, const std::string& rows,
                                  const std::string& cols, const std::string& shape);
CommandOutput cmd_detring_dehom_check(const CommandContext& ctx, const std::string& shape,
                                      const std::string& delta, int max_degree);
/// max_degree < 0 uses the manifest defaults.
CommandOutput cmd_check(const CommandContext& ctx, const std::string& suite, const std::string& shape,
                        const std::string& gamma, const std::string& delta, int max_degree);

}  // namespace qschubert
