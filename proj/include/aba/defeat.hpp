#ifndef ABA_DEFEAT_HPP
#define ABA_DEFEAT_HPP

#include <vector>

#include "aba/deduction.hpp"
#include "aba/framework.hpp"
#include "aba/preference.hpp"

namespace aba {

// f: plain attack (lifting-independent), d: direct defeat, r: d plus reverse.
enum class DefeatKind { F, D, R };

struct AttackWitness {
    AsmSet support;        // exact support of the contrary
    SentenceId contrary;   // the derived member of the target's contrary set
};

// All (support, contrary) pairs with which delta attacks the assumption;
// nonempty iff delta attacks it.
std::vector<AttackWitness> attacks(const SupportFamily& fam, const Framework& f,
                                   AsmSet delta, int target_asm);

// Defeating a conjunction assumption means defeating its conjuncts: a defeat
// target is closed under conjunction elimination before the member scan and
// the reverse clause. Identity for frameworks without conjunctions.
AsmSet expand_conj_targets(const Framework& f, AsmSet target);

bool d_defeats(const SupportFamily& fam, const Framework& f, Lifting l,
               AsmSet delta, int target_asm);

// Precomputed defeat relation between assumption sets. Three tables over all
// 2^|Ab| masks make every set-vs-set defeat query O(1):
//   attacked_f[m]: assumptions attacked by some support inside m
//   attacked_d[m]: assumptions d-defeated by some support inside m
//   rev_hit[m]:    assumptions A with a support of a contrary of A inside m
//                  that is strictly less than A (the reverse clause)
class DefeatTable {
public:
    DefeatTable(const SupportFamily& fam, const Framework& f, Lifting l);

    bool defeats(DefeatKind k, AsmSet delta, AsmSet target) const {
        switch (k) {
            case DefeatKind::F: return (attacked_f_[delta] & target) != 0;
            case DefeatKind::D: return (attacked_d_[delta] & target) != 0;
            default:
                return (attacked_d_[delta] & target) != 0 ||
                       (rev_hit_[expand_[target]] & delta) != 0;
        }
    }
    bool defeats_asm(DefeatKind k, AsmSet delta, int target_asm) const {
        return defeats(k, delta, AsmSet{1} << target_asm);
    }

private:
    std::vector<AsmSet> attacked_f_, attacked_d_, rev_hit_, expand_;
};

// Direct evaluation of Def 6's set-vs-set clauses (no precomputation); the
// DefeatTable is checked against this in the tests.
bool set_defeats(const SupportFamily& fam, const Framework& f, DefeatKind k, Lifting l,
                 AsmSet delta, AsmSet target);

}  // namespace aba

#endif
