#ifndef ABA_TRANSLATE_HPP
#define ABA_TRANSLATE_HPP

#include <vector>

#include "aba/deduction.hpp"
#include "aba/framework.hpp"
#include "aba/preference.hpp"

namespace aba {

struct TranslationResult {
    enum Kind { D2F, ConjClosure, R2D, SingleContrary };
    Kind kind = D2F;
    Framework target;
    std::vector<SentenceId> assumption_map;        // source asm index -> target sentence
    std::vector<std::vector<size_t>> rule_map;     // source rule index -> target rule indices
    std::vector<size_t> structural_rules;          // propagation / conj intro+elim / contrapositive
    std::vector<int> conj_asm_of_mask;             // ConjClosure: base mask -> target asm index

    // tau(Delta) for the d2f translations, Delta^andI for the conjunction
    // closure, identity for r2d and the contrary reduction.
    AsmSet map_set(AsmSet source) const;
};

// Def-9 style translation for flat, totally ordered frameworks: priorities
// move into value superscripts, one translated rule per value tuple, strict
// rules conclude at the fresh maximum omega. The precondition bypass exists
// for the regression test that reproduces why this translation is wrong on
// non-flat inputs.
TranslationResult translate_d2f_total(const Framework& f, bool bypass_preconditions = false);

// Paired-antecedent variant, adequate for arbitrary frameworks under the
// forall-minbar lifting. Every assumption antecedent contributes its own
// value superscript to the rule head's minimum, and propagation rules
// A^alpha -> A^v(A) keep translated sets closed exactly when the source
// sets are.
TranslationResult translate_d2f_minbar(const Framework& f);

// tau(S) for a source rule subset: the union of the translated rules, plus
// the structural rules (always included for the minbar variant).
ClosureMode translate_rule_subset(const TranslationResult& tr, const Framework& source,
                                  const ClosureMode& s);

// Adds canonical conjunctions of all nonempty assumption subsets, with
// introduction/elimination rules and component-value valuations.
TranslationResult conjunction_closure(const Framework& f);

// Contrapositive translation of a conjunction-closed framework: fresh
// contraries A^not and rules C -> (conj Delta)^not for every strictly less
// preferred exact support of a contrary of C. By default supports are drawn
// from base assumptions only (deductions avoiding the conjunction rules);
// include_conj_supports admits conjunction assumptions into the supports.
TranslationResult translate_r2d(const Framework& fc, Lifting l,
                                bool include_conj_supports = false);

// Collapses each multi-member contrary set {A1,...,An} to {A1}, adding
// rules Ai -> A1.
TranslationResult single_contrary_reduction(const Framework& f);

}  // namespace aba

#endif
