#ifndef ABA_FRAMEWORK_HPP
#define ABA_FRAMEWORK_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace aba {

using SentenceId = int;
using ValueId = int;

// Bit i corresponds to the i-th assumption (declaration order).
using AsmSet = std::uint64_t;

inline int popcount(AsmSet s) { return __builtin_popcountll(s); }

// Structural tag carried by sentences created by the translations.
struct Decoration {
    enum Kind { None, Valued, Conj, Neg };
    Kind kind = None;
    SentenceId base = -1;               // Valued / Neg
    ValueId value = -1;                 // Valued
    std::vector<SentenceId> parts;      // Conj, sorted by sentence id
};

struct Sentence {
    std::string name;
    Decoration deco;
};

struct Rule {
    std::vector<SentenceId> body;       // empty body = strict premise
    SentenceId head = -1;

    bool operator==(const Rule& o) const { return head == o.head && body == o.body; }
};

// The central tuple (L, R, Ab, contraries, V, <=, valuation).
//
// Valuations are set-valued: an ordinary assumption carries the singleton
// {v(A)}; a conjunction assumption carries the value set of its components
// (min/minbar are computed over unions of these sets, so this one
// representation serves both plain and conjunction-closed frameworks).
class Framework {
public:
    // -- construction -----------------------------------------------------
    SentenceId add_sentence(const std::string& name, Decoration deco = {});
    SentenceId intern(const std::string& name);          // add if missing
    std::optional<SentenceId> find_sentence(const std::string& name) const;

    void mark_assumption(SentenceId s);
    size_t add_rule(std::vector<SentenceId> body, SentenceId head);   // index (existing on dup)
    void add_contrary(SentenceId assumption, SentenceId contrary);
    void set_contraries(SentenceId assumption, std::vector<SentenceId> contraries);

    ValueId add_value(const std::string& name);
    std::optional<ValueId> find_value(const std::string& name) const;
    void declare_leq(ValueId lo, ValueId hi);            // lo <= hi
    void set_valuation(SentenceId assumption, std::vector<ValueId> values);

    // -- access -----------------------------------------------------------
    int num_sentences() const { return static_cast<int>(sentences_.size()); }
    int num_assumptions() const { return static_cast<int>(assumptions_.size()); }
    int num_values() const { return static_cast<int>(values_.size()); }
    int num_rules() const { return static_cast<int>(rules_.size()); }

    const Sentence& sentence(SentenceId s) const { return sentences_[s]; }
    const std::vector<Rule>& rules() const { return rules_; }
    const std::vector<SentenceId>& assumptions() const { return assumptions_; }
    const std::string& value_name(ValueId v) const { return values_[v]; }
    const std::vector<std::pair<ValueId, ValueId>>& declared_leq() const { return leq_pairs_; }

    bool is_assumption(SentenceId s) const { return asm_index_[s] >= 0; }
    int asm_index(SentenceId s) const { return asm_index_[s]; }             // -1 if not in Ab
    SentenceId asm_sentence(int i) const { return assumptions_[i]; }

    const std::vector<SentenceId>& contraries(int asm_i) const { return contraries_[asm_i]; }
    const std::vector<ValueId>& valuation(int asm_i) const { return valuation_[asm_i]; }

    bool normalized() const { return normalized_; }
    bool leq(ValueId a, ValueId b) const { return leq_mat_[a * num_values() + b]; }
    bool lt(ValueId a, ValueId b) const { return leq(a, b) && !leq(b, a); }

    AsmSet full_asm_set() const {
        int n = num_assumptions();
        return n >= 64 ? ~AsmSet{0} : ((AsmSet{1} << n) - 1);
    }
    std::vector<std::string> asm_names(AsmSet set) const;

private:
    std::vector<Sentence> sentences_;
    std::unordered_map<std::string, SentenceId> sentence_index_;
    std::vector<Rule> rules_;
    std::vector<SentenceId> assumptions_;
    std::vector<int> asm_index_;
    std::vector<std::vector<SentenceId>> contraries_;    // per assumption index
    std::vector<std::string> values_;
    std::unordered_map<std::string, ValueId> value_index_;
    std::vector<std::pair<ValueId, ValueId>> leq_pairs_;
    std::vector<std::vector<ValueId>> valuation_;        // per assumption index
    std::vector<char> leq_mat_;
    bool normalized_ = false;

    friend Framework normalize_preorder(Framework f);
    friend std::vector<std::string> validate(const Framework& f);
};

// Replaces <= by its reflexive-transitive closure; idempotent.
Framework normalize_preorder(Framework f);

// Lists every violated invariant; empty report means well-formed.
std::vector<std::string> validate(const Framework& f);

// True iff no rule head is an assumption.
bool is_flat(const Framework& f);

// True iff <= is total on the values (requires a normalized preorder).
bool is_total_order(const Framework& f);

// Subset-enumeration guardrail: default 20 assumptions, overridable via the
// ABA_MAX_AB environment variable (hard cap 30). Throws std::runtime_error.
int max_enumerable_assumptions();
void check_enumeration_guardrail(const Framework& f);

}  // namespace aba

#endif
