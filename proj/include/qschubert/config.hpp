#pragma once

#include <cstddef>

namespace qschubert {

/// Largest number of words in one graded component before BudgetExceeded.
/// Starts at 20000, or at QSCHUBERT_BUDGET when that is set.
std::size_t component_budget();
void set_component_budget(std::size_t words);

}  // namespace qschubert
