#ifndef ABA_VERIFY_HPP
#define ABA_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "aba/defeat.hpp"
#include "aba/framework.hpp"
#include "aba/semantics.hpp"

namespace aba {

enum class OrderShape { Chain, RandomPreorder, Trivial };

struct GeneratorConfig {
    int max_assumptions = 5;
    int max_rules = 8;
    int max_body = 2;
    int max_values = 4;
    OrderShape order_shape = OrderShape::RandomPreorder;
    bool flat_only = false;
    bool ensure_contraposition = false;
    std::uint64_t seed = 0;
};

// Deterministic: (cfg, instance) fully determines the framework. With
// ensure_contraposition the instance is saturated by adding contrapositive
// rules until closure holds (rejection-resampled if saturation diverges).
Framework generate_framework(const GeneratorConfig& cfg, std::uint64_t instance);

// A violation of closure under contraposition: delta exactly supports a
// contrary of `blamed`, but {blamed} u delta \ {dropped} supports no
// contrary of `dropped`.
struct ContrapositionWitness {
    AsmSet delta;
    int blamed;    // assumption index A
    int dropped;   // assumption index B in delta
};
std::vector<ContrapositionWitness> check_contraposition(const Framework& f);
inline bool closed_under_contraposition(const Framework& f) {
    return check_contraposition(f).empty();
}

// Consistency-postulate scan: conflict-free delta (under k/l/s) containing a
// member one of whose contraries is derivable from delta.
struct ConsistencyWitness {
    AsmSet delta;
    int member;
};
std::vector<ConsistencyWitness> check_consistency(const Framework& f, DefeatKind k,
                                                  Lifting l, const ClosureMode& s);

struct Counterexample {
    std::uint64_t instance;
    std::string framework;             // serialized shrunk framework
    std::string clause;                // failing clause + parameter triple
    std::vector<std::string> delta;    // offending assumption set
};

struct TheoremReport {
    std::string theorem;
    int trials = 0;
    std::vector<Counterexample> counterexamples;

    bool ok() const { return counterexamples.empty(); }
};

// Property sweep. Known ids: T1, T2a, T2b, T3, T4, T5, T6, T7, Remark3,
// LiftingChain, LiftingExistsMinbar. Per-id preconditions (contraposition
// closure, flat + total order, trivial priorities, conjunction bounds) are
// imposed on the generator configuration. Failing instances are shrunk to
// locally minimal ones by dropping assumptions, rules, contraries and order
// pairs while the same clause keeps failing.
TheoremReport verify_theorem(const std::string& id, GeneratorConfig cfg, int trials = 500);

// Searches contraposition-closed instances for (i) a d-complete set that is
// not r-complete and (ii) an r-admissible set that is neither d-admissible
// nor a subset of a d-admissible set.
struct DivergenceReport {
    int trials = 0;
    bool complete_diverges = false;
    bool admissible_diverges = false;
    std::string complete_witness;      // serialized framework, empty if none
    std::string admissible_witness;
    std::string detail;
};
DivergenceReport find_d_r_divergence(GeneratorConfig cfg, int trials = 500);

// The historical per-member notion of defence: delta defends+ A iff delta
// r-emin-defeats every set that r-emin-defeats {A}; admissible+ drops the
// subset-defense requirement of the closure-based definition and the two
// notions diverge.
struct AbaPlusReport {
    std::vector<AsmSet> admissible_plus;
    std::vector<AsmSet> admissible;        // r-emin-full-closure admissible
    std::vector<AsmSet> plus_only;
    std::vector<AsmSet> admissible_only;
};
AbaPlusReport demo_abaplus_admissible(const Framework& f);

}  // namespace aba

#endif
