#ifndef ABA_SEMANTICS_HPP
#define ABA_SEMANTICS_HPP

#include <vector>

#include "aba/defeat.hpp"

namespace aba {

enum class SemanticsKind { ConflictFree, Naive, Admissible, Complete, Preferred, Grounded, Stable };

struct Query {
    DefeatKind kind = DefeatKind::D;
    Lifting lifting = Lifting::ExistsMin;
    ClosureMode mode = ClosureMode::full();
    bool strict_closure = false;   // experimental: Cl_S(D) = D instead of Cl_S(D) cap Ab
};

// Everything a semantics query needs, built once per (framework, query):
// supports, the O(1) defeat table and the closedness flags for S and R.
class SemanticsContext {
public:
    SemanticsContext(const Framework& f, const SupportFamily& fam, Query q);

    const Framework& framework() const { return *f_; }
    const Query& query() const { return q_; }

    bool closed_s(AsmSet m) const { return closed_s_[m]; }
    bool closed_r(AsmSet m) const { return closed_r_[m]; }
    const std::vector<AsmSet>& closed_sets() const { return closed_sets_; }   // S-closed in Ab
    bool defeats(AsmSet delta, AsmSet target) const { return table_.defeats(q_.kind, delta, target); }

    bool is_conflict_free(AsmSet delta) const;
    // Delta defends target: every S-closed defeater of target is defeated
    // by some S-closed subset of delta.
    bool defends(AsmSet delta, AsmSet target) const;
    bool is_admissible(AsmSet delta) const;
    bool is_complete(AsmSet delta) const;
    bool is_stable(AsmSet delta) const;

private:
    const Framework* f_;
    Query q_;
    DefeatTable table_;
    std::vector<char> closed_s_, closed_r_;
    std::vector<AsmSet> closed_sets_;

    bool counter_defeated_from(AsmSet delta, AsmSet defeater) const;
};

struct ExtensionSet {
    Query query;
    SemanticsKind kind;
    std::vector<AsmSet> extensions;   // sorted by bitset value

    bool contains(AsmSet m) const;
};

// Exact enumeration over all 2^|Ab| candidates (guardrail enforced).
ExtensionSet enumerate(const SemanticsContext& ctx, SemanticsKind kind);

// Convenience wrapper building the context internally.
ExtensionSet enumerate(const Framework& f, const SupportFamily& fam, Query q, SemanticsKind kind);

}  // namespace aba

#endif
