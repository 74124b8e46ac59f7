#include "aba/deduction.hpp"

#include <algorithm>
#include <set>

namespace aba {

bool SupportFamily::contains(SentenceId s, AsmSet delta) const {
    const auto& v = table[s];
    return std::binary_search(v.begin(), v.end(), delta);
}

namespace {

// Inserts into a sorted vector, returns true if new.
bool insert_sorted(std::vector<AsmSet>& v, AsmSet m) {
    auto it = std::lower_bound(v.begin(), v.end(), m);
    if (it != v.end() && *it == m) return false;
    v.insert(it, m);
    return true;
}

}  // namespace

SupportFamily compute_supports(const Framework& f) {
    SupportFamily fam;
    fam.table.resize(f.num_sentences());

    // Seeds: the single-node tree for each assumption.
    for (int i = 0; i < f.num_assumptions(); ++i)
        insert_sorted(fam.table[f.asm_sentence(i)], AsmSet{1} << i);

    // Round-robin over rules until no table change. Each rule application
    // joins one support per body sentence and adds the head itself when the
    // head is an assumption (Def 2 counts every assumption node).
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Rule& r : f.rules()) {
            AsmSet head_bit = f.is_assumption(r.head)
                                  ? (AsmSet{1} << f.asm_index(r.head))
                                  : AsmSet{0};
            // Partial unions over the cartesian product of body supports,
            // deduplicated at every step to keep the frontier <= 2^|Ab|.
            std::set<AsmSet> partial{AsmSet{0}};
            bool feasible = true;
            for (SentenceId b : r.body) {
                const auto& supports = fam.table[b];
                if (supports.empty()) { feasible = false; break; }
                std::set<AsmSet> next;
                for (AsmSet acc : partial)
                    for (AsmSet s : supports) next.insert(acc | s);
                partial = std::move(next);
            }
            if (!feasible) continue;
            for (AsmSet acc : partial)
                if (insert_sorted(fam.table[r.head], acc | head_bit)) changed = true;
        }
    }
    return fam;
}

std::vector<char> closure(const Framework& f, const ClosureMode& s, AsmSet delta) {
    std::vector<char> derived(f.num_sentences(), 0);
    for (int i = 0; i < f.num_assumptions(); ++i)
        if (delta & (AsmSet{1} << i)) derived[f.asm_sentence(i)] = 1;

    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t ri = 0; ri < f.rules().size(); ++ri) {
            if (!s.includes(ri)) continue;
            const Rule& r = f.rules()[ri];
            if (derived[r.head]) continue;
            bool ok = true;
            for (SentenceId b : r.body)
                if (!derived[b]) { ok = false; break; }
            if (ok) { derived[r.head] = 1; changed = true; }
        }
    }
    return derived;
}

bool is_closed(const Framework& f, const ClosureMode& s, AsmSet delta, bool strict) {
    std::vector<char> cl = closure(f, s, delta);
    for (int sid = 0; sid < f.num_sentences(); ++sid) {
        if (!cl[sid]) continue;
        int i = f.asm_index(sid);
        if (i >= 0) {
            if (!(delta & (AsmSet{1} << i))) return false;
        } else if (strict) {
            return false;   // closure left Ab entirely
        }
    }
    return true;
}

std::vector<AsmSet> closed_subsets(const Framework& f, const ClosureMode& s, AsmSet delta,
                                   bool strict) {
    std::vector<AsmSet> out;
    AsmSet sub = delta;
    while (true) {
        if (is_closed(f, s, sub, strict)) out.push_back(sub);
        if (sub == 0) break;
        sub = (sub - 1) & delta;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace aba
