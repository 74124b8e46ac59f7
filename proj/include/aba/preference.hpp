#ifndef ABA_PREFERENCE_HPP
#define ABA_PREFERENCE_HPP

#include <vector>

#include "aba/framework.hpp"

namespace aba {

// The liftings of <= from values to set-vs-assumption comparisons.
// ExistsMinBar is only meaningful inside conjunction-closed frameworks
// (it is the middle clause of the conjunction comparison) and is not
// selectable from the CLI for ordinary queries.
enum class Lifting { ExistsMin, ForallMin, ForallMinBar, ExistsMinBar };

// min(delta): values of delta's members with no strictly smaller value among
// them. Computed over the union of the members' value sets, which for
// conjunction assumptions realizes min(delta) = min(delta^andE).
std::vector<ValueId> min_values(const Framework& f, AsmSet delta);

// minbar(delta): min closed under incomparability — every value of delta that
// is not strictly above some element of min(delta).
std::vector<ValueId> minbar_values(const Framework& f, AsmSet delta);

// delta < a under the chosen lifting. An empty delta is never strictly less
// than anything: assumption-free deductions must keep their force as defeats.
bool lifted_less(const Framework& f, Lifting l, AsmSet delta, int target_asm);

// Same comparison with the target given as an explicit assumption set
// (both sides of a conjunction comparison).
bool lifted_less_set(const Framework& f, Lifting l, AsmSet delta, AsmSet theta);

}  // namespace aba

#endif
