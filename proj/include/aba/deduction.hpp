#ifndef ABA_DEDUCTION_HPP
#define ABA_DEDUCTION_HPP

#include <vector>

#include "aba/framework.hpp"

namespace aba {

// Exact assumption supports: delta is in table[s] iff there is a finite
// deduction tree of s whose set of assumption nodes is exactly delta.
// Deliberately non-monotonic in delta.
struct SupportFamily {
    std::vector<std::vector<AsmSet>> table;   // per sentence, sorted

    bool contains(SentenceId s, AsmSet delta) const;
    const std::vector<AsmSet>& supports(SentenceId s) const { return table[s]; }
};

SupportFamily compute_supports(const Framework& f);

inline bool derives(const SupportFamily& fam, AsmSet delta, SentenceId a) {
    return fam.contains(a, delta);
}

// Which rules participate in S-closure.
struct ClosureMode {
    enum Tag { Full, Empty, Custom };
    Tag tag = Full;
    std::vector<char> rule_in;   // per rule index, Custom only

    static ClosureMode full() { return {Full, {}}; }
    static ClosureMode empty() { return {Empty, {}}; }
    static ClosureMode custom(std::vector<char> in) { return {Custom, std::move(in)}; }

    bool includes(size_t rule) const {
        switch (tag) {
            case Full: return true;
            case Empty: return false;
            default: return rule < rule_in.size() && rule_in[rule];
        }
    }
};

// Forward-chaining closure of delta under the rules selected by s; returns a
// membership flag per sentence (all derivable sentences, not just assumptions).
std::vector<char> closure(const Framework& f, const ClosureMode& s, AsmSet delta);

// Closedness test. The default compares delta against Cl_S(delta)
// projected to Ab; with strict=true the whole closure must stay inside
// delta (any derivable non-assumption sentence then breaks closedness).
bool is_closed(const Framework& f, const ClosureMode& s, AsmSet delta, bool strict = false);

// The S-closed subsets of delta.
std::vector<AsmSet> closed_subsets(const Framework& f, const ClosureMode& s, AsmSet delta,
                                   bool strict = false);

}  // namespace aba

#endif
