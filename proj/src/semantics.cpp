#include "aba/semantics.hpp"

#include <algorithm>

namespace aba {

SemanticsContext::SemanticsContext(const Framework& f, const SupportFamily& fam, Query q)
    : f_(&f), q_(std::move(q)), table_(fam, f, q_.lifting) {
    check_enumeration_guardrail(f);
    int n = f.num_assumptions();
    size_t total = size_t{1} << n;
    closed_s_.resize(total);
    closed_r_.resize(total);
    ClosureMode full = ClosureMode::full();
    for (AsmSet m = 0; m < total; ++m) {
        closed_s_[m] = is_closed(f, q_.mode, m, q_.strict_closure);
        closed_r_[m] = is_closed(f, full, m, q_.strict_closure);
        if (closed_s_[m]) closed_sets_.push_back(m);
    }
}

bool SemanticsContext::is_conflict_free(AsmSet delta) const {
    AsmSet sub = delta;
    while (true) {
        if (closed_s_[sub] && defeats(sub, delta)) return false;
        if (sub == 0) break;
        sub = (sub - 1) & delta;
    }
    return true;
}

bool SemanticsContext::counter_defeated_from(AsmSet delta, AsmSet defeater) const {
    AsmSet sub = delta;
    while (true) {
        if (closed_s_[sub] && defeats(sub, defeater)) return true;
        if (sub == 0) break;
        sub = (sub - 1) & delta;
    }
    return false;
}

bool SemanticsContext::defends(AsmSet delta, AsmSet target) const {
    for (AsmSet d2 : closed_sets_)
        if (defeats(d2, target) && !counter_defeated_from(delta, d2)) return false;
    return true;
}

bool SemanticsContext::is_admissible(AsmSet delta) const {
    if (!closed_r_[delta] || !is_conflict_free(delta)) return false;
    // Defending every subset of delta collapses to defending delta itself:
    // defeat is monotone in the target, so the defeaters of delta's subsets
    // are exactly the defeaters of delta.
    for (AsmSet d2 : closed_sets_)
        if (defeats(d2, delta) && !counter_defeated_from(delta, d2)) return false;
    return true;
}

bool SemanticsContext::is_complete(AsmSet delta) const {
    if (!is_admissible(delta)) return false;
    // Must contain every S-closed set it defends (see the completeness-scope
    // note in the README: unrestricted sets would be vacuously defended).
    for (AsmSet d2 : closed_sets_)
        if ((d2 & ~delta) != 0 && defends(delta, d2)) return false;
    return true;
}

bool SemanticsContext::is_stable(AsmSet delta) const {
    if (!closed_r_[delta] || !is_conflict_free(delta)) return false;
    int n = f_->num_assumptions();
    for (int a = 0; a < n; ++a) {
        AsmSet bit = AsmSet{1} << a;
        if ((delta & bit) == 0 && !defeats(delta, bit)) return false;
    }
    return true;
}

bool ExtensionSet::contains(AsmSet m) const {
    return std::binary_search(extensions.begin(), extensions.end(), m);
}

namespace {

std::vector<AsmSet> keep_maximal(std::vector<AsmSet> sets) {
    std::vector<AsmSet> out;
    for (AsmSet m : sets) {
        bool maximal = true;
        for (AsmSet o : sets)
            if (o != m && (m & ~o) == 0) { maximal = false; break; }
        if (maximal) out.push_back(m);
    }
    return out;
}

std::vector<AsmSet> keep_minimal(std::vector<AsmSet> sets) {
    std::vector<AsmSet> out;
    for (AsmSet m : sets) {
        bool minimal = true;
        for (AsmSet o : sets)
            if (o != m && (o & ~m) == 0) { minimal = false; break; }
        if (minimal) out.push_back(m);
    }
    return out;
}

}  // namespace

ExtensionSet enumerate(const SemanticsContext& ctx, SemanticsKind kind) {
    const Framework& f = ctx.framework();
    size_t total = size_t{1} << f.num_assumptions();
    std::vector<AsmSet> hits;
    switch (kind) {
        case SemanticsKind::ConflictFree:
            for (AsmSet m = 0; m < total; ++m)
                if (ctx.is_conflict_free(m)) hits.push_back(m);
            break;
        case SemanticsKind::Naive: {
            // Maximality ranges over the closed conflict-free sets: a
            // conflict-free superset that is not closed does not disqualify.
            std::vector<AsmSet> ccf;
            for (AsmSet m = 0; m < total; ++m)
                if (ctx.closed_r(m) && ctx.is_conflict_free(m)) ccf.push_back(m);
            hits = keep_maximal(std::move(ccf));
            break;
        }
        case SemanticsKind::Admissible:
            for (AsmSet m = 0; m < total; ++m)
                if (ctx.is_admissible(m)) hits.push_back(m);
            break;
        case SemanticsKind::Complete:
            for (AsmSet m = 0; m < total; ++m)
                if (ctx.is_complete(m)) hits.push_back(m);
            break;
        case SemanticsKind::Preferred: {
            std::vector<AsmSet> adm;
            for (AsmSet m = 0; m < total; ++m)
                if (ctx.is_admissible(m)) adm.push_back(m);
            hits = keep_maximal(std::move(adm));
            break;
        }
        case SemanticsKind::Grounded: {
            std::vector<AsmSet> comp;
            for (AsmSet m = 0; m < total; ++m)
                if (ctx.is_complete(m)) comp.push_back(m);
            hits = keep_minimal(std::move(comp));
            break;
        }
        case SemanticsKind::Stable:
            for (AsmSet m = 0; m < total; ++m)
                if (ctx.is_stable(m)) hits.push_back(m);
            break;
    }
    std::sort(hits.begin(), hits.end());
    return ExtensionSet{ctx.query(), kind, std::move(hits)};
}

ExtensionSet enumerate(const Framework& f, const SupportFamily& fam, Query q, SemanticsKind kind) {
    SemanticsContext ctx(f, fam, std::move(q));
    return enumerate(ctx, kind);
}

}  // namespace aba
