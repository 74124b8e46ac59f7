#include "aba/framework.hpp"

#include <cstdlib>
#include <stdexcept>

namespace aba {

SentenceId Framework::add_sentence(const std::string& name, Decoration deco) {
    auto it = sentence_index_.find(name);
    if (it != sentence_index_.end()) return it->second;
    SentenceId id = static_cast<SentenceId>(sentences_.size());
    sentences_.push_back(Sentence{name, std::move(deco)});
    sentence_index_.emplace(name, id);
    asm_index_.push_back(-1);
    return id;
}

SentenceId Framework::intern(const std::string& name) { return add_sentence(name); }

std::optional<SentenceId> Framework::find_sentence(const std::string& name) const {
    auto it = sentence_index_.find(name);
    if (it == sentence_index_.end()) return std::nullopt;
    return it->second;
}

void Framework::mark_assumption(SentenceId s) {
    if (asm_index_[s] >= 0) return;
    asm_index_[s] = static_cast<int>(assumptions_.size());
    assumptions_.push_back(s);
    contraries_.emplace_back();
    valuation_.emplace_back();
}

size_t Framework::add_rule(std::vector<SentenceId> body, SentenceId head) {
    Rule r{std::move(body), head};
    for (size_t i = 0; i < rules_.size(); ++i)
        if (rules_[i] == r) return i;
    rules_.push_back(std::move(r));
    return rules_.size() - 1;
}

void Framework::set_contraries(SentenceId assumption, std::vector<SentenceId> contraries) {
    int i = asm_index_[assumption];
    if (i < 0) throw std::runtime_error("contraries set for non-assumption '" +
                                        sentences_[assumption].name + "'");
    contraries_[i] = std::move(contraries);
}

void Framework::add_contrary(SentenceId assumption, SentenceId contrary) {
    int i = asm_index_[assumption];
    if (i < 0) throw std::runtime_error("contrary declared for non-assumption '" +
                                        sentences_[assumption].name + "'");
    for (SentenceId c : contraries_[i])
        if (c == contrary) return;
    contraries_[i].push_back(contrary);
}

ValueId Framework::add_value(const std::string& name) {
    auto it = value_index_.find(name);
    if (it != value_index_.end()) return it->second;
    ValueId id = static_cast<ValueId>(values_.size());
    values_.push_back(name);
    value_index_.emplace(name, id);
    return id;
}

std::optional<ValueId> Framework::find_value(const std::string& name) const {
    auto it = value_index_.find(name);
    if (it == value_index_.end()) return std::nullopt;
    return it->second;
}

void Framework::declare_leq(ValueId lo, ValueId hi) {
    leq_pairs_.emplace_back(lo, hi);
    normalized_ = false;
}

void Framework::set_valuation(SentenceId assumption, std::vector<ValueId> values) {
    int i = asm_index_[assumption];
    if (i < 0) throw std::runtime_error("valuation declared for non-assumption '" +
                                        sentences_[assumption].name + "'");
    valuation_[i] = std::move(values);
}

std::vector<std::string> Framework::asm_names(AsmSet set) const {
    std::vector<std::string> out;
    for (int i = 0; i < num_assumptions(); ++i)
        if (set & (AsmSet{1} << i)) out.push_back(sentences_[assumptions_[i]].name);
    return out;
}

Framework normalize_preorder(Framework f) {
    int n = f.num_values();
    f.leq_mat_.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) f.leq_mat_[i * n + i] = 1;
    for (auto [lo, hi] : f.leq_pairs_)
        if (lo >= 0 && lo < n && hi >= 0 && hi < n) f.leq_mat_[lo * n + hi] = 1;
    // Floyd-Warshall transitive closure.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (!f.leq_mat_[i * n + k]) continue;
            for (int j = 0; j < n; ++j)
                if (f.leq_mat_[k * n + j]) f.leq_mat_[i * n + j] = 1;
        }
    f.normalized_ = true;
    return f;
}

std::vector<std::string> validate(const Framework& f) {
    std::vector<std::string> report;
    if (f.num_assumptions() == 0) report.push_back("assumptions must be nonempty");
    if (f.num_values() == 0) report.push_back("value set must be nonempty");
    for (int v = 0; v < f.num_values(); ++v)
        if (f.find_sentence(f.value_name(v)))
            report.push_back("value '" + f.value_name(v) + "' collides with a sentence");
    for (auto [lo, hi] : f.leq_pairs_)
        if (lo < 0 || lo >= f.num_values() || hi < 0 || hi >= f.num_values())
            report.push_back("order declaration references an unregistered value");
    for (int i = 0; i < f.num_assumptions(); ++i) {
        for (SentenceId c : f.contraries(i))
            if (c < 0 || c >= f.num_sentences())
                report.push_back("contrary of '" + f.sentence(f.asm_sentence(i)).name +
                                 "' is not a registered sentence");
        if (f.valuation(i).empty())
            report.push_back("assumption '" + f.sentence(f.asm_sentence(i)).name +
                             "' has no value");
        for (ValueId v : f.valuation(i))
            if (v < 0 || v >= f.num_values())
                report.push_back("valuation of '" + f.sentence(f.asm_sentence(i)).name +
                                 "' references an unregistered value");
    }
    for (const Rule& r : f.rules()) {
        if (r.head < 0 || r.head >= f.num_sentences())
            report.push_back("rule head is not a registered sentence");
        for (SentenceId b : r.body)
            if (b < 0 || b >= f.num_sentences())
                report.push_back("rule body sentence is not registered");
    }
    if (!f.normalized()) report.push_back("preorder is not normalized");
    return report;
}

bool is_flat(const Framework& f) {
    for (const Rule& r : f.rules())
        if (f.is_assumption(r.head)) return false;
    return true;
}

bool is_total_order(const Framework& f) {
    int n = f.num_values();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!f.leq(a, b) && !f.leq(b, a)) return false;
    return true;
}

int max_enumerable_assumptions() {
    if (const char* env = std::getenv("ABA_MAX_AB")) {
        int v = std::atoi(env);
        if (v > 0) return v > 30 ? 30 : v;
    }
    return 20;
}

void check_enumeration_guardrail(const Framework& f) {
    int limit = max_enumerable_assumptions();
    if (f.num_assumptions() > limit)
        throw std::runtime_error(
            "framework has " + std::to_string(f.num_assumptions()) +
            " assumptions; subset enumeration is capped at " + std::to_string(limit) +
            " (override with ABA_MAX_AB)");
}

}  // namespace aba
