#include "aba/preference.hpp"

#include <algorithm>

namespace aba {

namespace {

std::vector<ValueId> value_union(const Framework& f, AsmSet delta) {
    std::vector<ValueId> vals;
    for (int i = 0; i < f.num_assumptions(); ++i)
        if (delta & (AsmSet{1} << i))
            for (ValueId v : f.valuation(i)) vals.push_back(v);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

std::vector<ValueId> minimal_of(const Framework& f, const std::vector<ValueId>& vals) {
    std::vector<ValueId> out;
    for (ValueId a : vals) {
        bool dominated = false;
        for (ValueId b : vals)
            if (f.lt(b, a)) { dominated = true; break; }
        if (!dominated) out.push_back(a);
    }
    return out;
}

std::vector<ValueId> minbar_of(const Framework& f, const std::vector<ValueId>& vals) {
    std::vector<ValueId> mins = minimal_of(f, vals);
    std::vector<ValueId> out;
    for (ValueId a : vals)
        for (ValueId b : mins)
            if (!f.lt(b, a)) { out.push_back(a); break; }
    return out;
}

bool compare(const Framework& f, Lifting l, const std::vector<ValueId>& dvals,
             const std::vector<ValueId>& tvals) {
    if (dvals.empty()) return false;   // empty-set rule
    std::vector<ValueId> dside, tside;
    bool exists_d;
    switch (l) {
        case Lifting::ExistsMin:
            dside = minimal_of(f, dvals); tside = minimal_of(f, tvals); exists_d = true;
            // exists alpha as well
            for (ValueId b : dside)
                for (ValueId a : tside)
                    if (f.lt(b, a)) return true;
            return false;
        case Lifting::ForallMin:
            dside = minimal_of(f, dvals); tside = minimal_of(f, tvals); exists_d = false;
            break;
        case Lifting::ForallMinBar:
            dside = minbar_of(f, dvals); tside = minbar_of(f, tvals); exists_d = false;
            break;
        case Lifting::ExistsMinBar:
            dside = minbar_of(f, dvals); tside = minbar_of(f, tvals); exists_d = true;
            break;
        default: return false;
    }
    // Remaining clauses quantify "for every alpha" on the target side.
    for (ValueId b : dside) {
        bool all = true;
        for (ValueId a : tside)
            if (!f.lt(b, a)) { all = false; break; }
        if (exists_d) { if (all) return true; }
        else if (!all) return false;
    }
    return !exists_d;
}

}  // namespace

std::vector<ValueId> min_values(const Framework& f, AsmSet delta) {
    return minimal_of(f, value_union(f, delta));
}

std::vector<ValueId> minbar_values(const Framework& f, AsmSet delta) {
    return minbar_of(f, value_union(f, delta));
}

bool lifted_less(const Framework& f, Lifting l, AsmSet delta, int target_asm) {
    return compare(f, l, value_union(f, delta), f.valuation(target_asm));
}

bool lifted_less_set(const Framework& f, Lifting l, AsmSet delta, AsmSet theta) {
    return compare(f, l, value_union(f, delta), value_union(f, theta));
}

}  // namespace aba
