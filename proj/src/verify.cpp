#include "aba/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>

#include "aba/preference.hpp"
#include "aba/text.hpp"
#include "aba/translate.hpp"

namespace aba {
namespace {

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
    x ^= x >> 30; x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27; x *= 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::string asm_name(int i) {
    if (i < 26) return std::string(1, static_cast<char>('a' + i));
    return "a" + std::to_string(i);
}

Framework generate_raw(const GeneratorConfig& cfg, std::uint64_t instance, int attempt) {
    std::mt19937_64 rng(mix(cfg.seed, mix(instance, static_cast<std::uint64_t>(attempt))));
    auto pick = [&](int n) { return static_cast<int>(rng() % n); };

    Framework f;
    int na = 1 + pick(cfg.max_assumptions);
    int nx = pick(3);
    if (cfg.flat_only && nx == 0) nx = 1;   // rule heads need somewhere to go
    for (int i = 0; i < na; ++i) f.mark_assumption(f.intern(asm_name(i)));
    std::vector<SentenceId> pool = f.assumptions();
    for (int i = 0; i < nx; ++i) pool.push_back(f.intern("s" + std::to_string(i)));

    int nv = cfg.order_shape == OrderShape::Trivial ? 1 : 1 + pick(cfg.max_values);
    for (int v = 0; v < nv; ++v) f.add_value("v" + std::to_string(v));
    if (cfg.order_shape == OrderShape::Chain)
        for (int v = 0; v + 1 < nv; ++v) f.declare_leq(v, v + 1);
    else if (cfg.order_shape == OrderShape::RandomPreorder)
        for (int a = 0; a < nv; ++a)
            for (int b = 0; b < nv; ++b)
                if (a != b && pick(4) == 0) f.declare_leq(a, b);
    for (int i = 0; i < na; ++i) f.set_valuation(f.asm_sentence(i), {pick(nv)});

    for (int i = 0; i < na; ++i) {
        int nc = pick(3);
        for (int k = 0; k < nc; ++k) f.add_contrary(f.asm_sentence(i), pool[pick(pool.size())]);
    }

    int nr = pick(cfg.max_rules + 1);
    for (int r = 0; r < nr; ++r) {
        SentenceId head = cfg.flat_only
                              ? pool[na + pick(nx)]
                              : pool[pick(pool.size())];
        std::vector<SentenceId> body;
        int nb = pick(cfg.max_body + 1);
        for (int k = 0; k < nb; ++k) {
            SentenceId s = pool[pick(pool.size())];
            if (std::find(body.begin(), body.end(), s) == body.end()) body.push_back(s);
        }
        f.add_rule(std::move(body), head);
    }
    return normalize_preorder(std::move(f));
}

// Repair toward Def-8 closure by adding the missing contrapositive rules;
// false when the rule budget runs out (caller resamples).
bool saturate_contraposition(Framework& f, int budget) {
    for (int step = 0; step < budget; ++step) {
        auto witnesses = check_contraposition(f);
        if (witnesses.empty()) return true;
        const auto& w = witnesses.front();
        int b = w.dropped;
        SentenceId head = -1;
        for (SentenceId c : f.contraries(b))
            if (!f.is_assumption(c)) { head = c; break; }
        if (head < 0) {
            std::string n = "k" + f.sentence(f.asm_sentence(b)).name;
            while (f.find_sentence(n)) n += "_";
            head = f.intern(n);
            f.add_contrary(f.asm_sentence(b), head);
        }
        std::vector<SentenceId> body;
        body.push_back(f.asm_sentence(w.blamed));
        for (int i = 0; i < f.num_assumptions(); ++i)
            if (i != b && (w.delta & (AsmSet{1} << i))) body.push_back(f.asm_sentence(i));
        std::sort(body.begin(), body.end());
        f.add_rule(std::move(body), head);
    }
    return false;
}

}  // namespace

Framework generate_framework(const GeneratorConfig& cfg, std::uint64_t instance) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Framework f = generate_raw(cfg, instance, attempt);
        if (!cfg.ensure_contraposition) return f;
        if (saturate_contraposition(f, 4 * cfg.max_rules + 16)) return f;
    }
    // Rejection exhausted; a framework without contraries is vacuously closed.
    Framework f = generate_raw(cfg, instance, 0);
    for (int i = 0; i < f.num_assumptions(); ++i) f.set_contraries(f.asm_sentence(i), {});
    return f;
}

std::vector<ContrapositionWitness> check_contraposition(const Framework& f) {
    check_enumeration_guardrail(f);
    SupportFamily fam = compute_supports(f);
    std::vector<ContrapositionWitness> out;
    for (int a = 0; a < f.num_assumptions(); ++a) {
        for (SentenceId c : f.contraries(a)) {
            for (AsmSet delta : fam.supports(c)) {
                if (delta == 0) continue;
                for (int b = 0; b < f.num_assumptions(); ++b) {
                    if (!(delta & (AsmSet{1} << b))) continue;
                    AsmSet required = (delta & ~(AsmSet{1} << b)) | (AsmSet{1} << a);
                    bool ok = false;
                    for (SentenceId d : f.contraries(b))
                        if (fam.contains(d, required)) { ok = true; break; }
                    if (!ok) out.push_back({delta, a, b});
                }
            }
        }
    }
    return out;
}

std::vector<ConsistencyWitness> check_consistency(const Framework& f, DefeatKind k,
                                                  Lifting l, const ClosureMode& s) {
    check_enumeration_guardrail(f);
    SupportFamily fam = compute_supports(f);
    SemanticsContext ctx(f, fam, Query{k, l, s, false});
    std::vector<ConsistencyWitness> out;
    for (AsmSet delta = 0; delta <= f.full_asm_set(); ++delta) {
        if (!ctx.is_conflict_free(delta)) continue;
        for (int a = 0; a < f.num_assumptions(); ++a) {
            if (!(delta & (AsmSet{1} << a))) continue;
            // delta derives c iff some deduction's exact support lies inside it
            bool hit = false;
            for (SentenceId c : f.contraries(a)) {
                for (AsmSet s : fam.supports(c))
                    if ((s & ~delta) == 0) { hit = true; break; }
                if (hit) break;
            }
            if (hit) out.push_back({delta, a});
        }
    }
    return out;
}

namespace {

struct Failure {
    std::string clause;
    std::vector<std::string> delta;
};

const char* lifting_name(Lifting l) {
    switch (l) {
        case Lifting::ExistsMin: return "emin";
        case Lifting::ForallMin: return "amin";
        case Lifting::ForallMinBar: return "aminbar";
        default: return "eminbar";
    }
}

const char* sem_name(SemanticsKind k) {
    switch (k) {
        case SemanticsKind::Naive: return "naive";
        case SemanticsKind::Grounded: return "grounded";
        case SemanticsKind::Preferred: return "preferred";
        case SemanticsKind::Stable: return "stable";
        case SemanticsKind::Complete: return "complete";
        case SemanticsKind::Admissible: return "admissible";
        default: return "cf";
    }
}

const Lifting kLiftings[] = {Lifting::ExistsMin, Lifting::ForallMin, Lifting::ForallMinBar};
const SemanticsKind kTheoremSems[] = {SemanticsKind::Naive, SemanticsKind::Grounded,
                                      SemanticsKind::Preferred, SemanticsKind::Stable};

// Rule subset keyed by rule content, so shrinking a framework does not
// reshuffle which rules the sampled S contains.
ClosureMode sampled_mode(const Framework& f, std::uint64_t salt) {
    std::vector<char> in(f.num_rules(), 0);
    for (int r = 0; r < f.num_rules(); ++r) {
        std::string sig = f.sentence(f.rules()[r].head).name;
        for (SentenceId b : f.rules()[r].body) sig += "," + f.sentence(b).name;
        in[r] = (std::hash<std::string>{}(sig) ^ salt) & 1;
    }
    return ClosureMode::custom(std::move(in));
}

struct NamedMode {
    std::string name;
    ClosureMode mode;
};

std::vector<NamedMode> closure_modes(const Framework& f, std::uint64_t salt) {
    return {{"full", ClosureMode::full()},
            {"empty", ClosureMode::empty()},
            {"sampled", sampled_mode(f, salt)}};
}

// Set comparison for biconditional theorems; extensions on either side are
// reported with that side's assumption names.
std::optional<Failure> compare_extensions(const std::string& clause,
                                          const Framework& src, std::vector<AsmSet> mapped,
                                          const Framework& tgt, const ExtensionSet& target) {
    std::sort(mapped.begin(), mapped.end());
    mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
    for (AsmSet m : mapped)
        if (!target.contains(m))
            return Failure{clause + ": missing on the translated side", tgt.asm_names(m)};
    for (AsmSet m : target.extensions)
        if (!std::binary_search(mapped.begin(), mapped.end(), m))
            return Failure{clause + ": extra on the translated side", tgt.asm_names(m)};
    (void)src;
    return std::nullopt;
}

std::optional<Failure> check_translation(const std::string& label, const Framework& f,
                                         const SupportFamily& fam,
                                         const TranslationResult& tr,
                                         const SupportFamily& tfam, DefeatKind src_kind,
                                         DefeatKind tgt_kind, Lifting l,
                                         const NamedMode& m) {
    ClosureMode ts = translate_rule_subset(tr, f, m.mode);
    SemanticsContext src(f, fam, Query{src_kind, l, m.mode, false});
    SemanticsContext tgt(tr.target, tfam, Query{tgt_kind, l, ts, false});
    for (SemanticsKind sem : kTheoremSems) {
        ExtensionSet es = enumerate(src, sem);
        ExtensionSet et = enumerate(tgt, sem);
        std::vector<AsmSet> mapped;
        for (AsmSet d : es.extensions) mapped.push_back(tr.map_set(d));
        std::string clause = label + "/" + sem_name(sem) + "/" + lifting_name(l) +
                             "/S=" + m.name;
        if (auto fail = compare_extensions(clause, f, std::move(mapped), tr.target, et))
            return fail;
    }
    return std::nullopt;
}

std::optional<Failure> run_check(const std::string& id, const Framework& f,
                                 std::uint64_t salt) {
    if (id == "T1") {
        for (Lifting l : kLiftings)
            for (const NamedMode& m : closure_modes(f, salt)) {
                auto w = check_consistency(f, DefeatKind::D, l, m.mode);
                if (!w.empty())
                    return Failure{"T1/" + std::string(lifting_name(l)) + "/S=" + m.name +
                                       ": conflict-free set derives a member's contrary",
                                   f.asm_names(w.front().delta)};
            }
        return std::nullopt;
    }
    if (id == "T2a" || id == "T2b") {
        SupportFamily fam = compute_supports(f);
        for (Lifting l : kLiftings)
            for (const NamedMode& m : closure_modes(f, salt)) {
                SemanticsContext d(f, fam, Query{DefeatKind::D, l, m.mode, false});
                SemanticsContext r(f, fam, Query{DefeatKind::R, l, m.mode, false});
                std::string suffix = std::string("/") + lifting_name(l) + "/S=" + m.name;
                if (id == "T2a") {
                    for (AsmSet delta = 0; delta <= f.full_asm_set(); ++delta)
                        if (d.is_admissible(delta) && !r.is_admissible(delta))
                            return Failure{"T2a" + suffix +
                                               ": d-admissible set is not r-admissible",
                                           f.asm_names(delta)};
                } else {
                    ExtensionSet cd = enumerate(d, SemanticsKind::Complete);
                    ExtensionSet cr = enumerate(r, SemanticsKind::Complete);
                    for (AsmSet delta : cd.extensions) {
                        bool covered = false;
                        for (AsmSet e : cr.extensions)
                            if ((delta & ~e) == 0) { covered = true; break; }
                        if (!covered)
                            return Failure{"T2b" + suffix +
                                               ": d-complete set in no r-complete set",
                                           f.asm_names(delta)};
                    }
                }
            }
        return std::nullopt;
    }
    if (id == "T3" || id == "T4") {
        SupportFamily fam = compute_supports(f);
        TranslationResult tr =
            id == "T3" ? translate_d2f_total(f) : translate_d2f_minbar(f);
        SupportFamily tfam = compute_supports(tr.target);
        for (Lifting l : kLiftings) {
            if (id == "T4" && l != Lifting::ForallMinBar) continue;
            for (const NamedMode& m : closure_modes(f, salt))
                if (auto fail = check_translation(id, f, fam, tr, tfam, DefeatKind::D,
                                                  DefeatKind::F, l, m))
                    return fail;
        }
        return std::nullopt;
    }
    if (id == "T5") {
        SupportFamily fam = compute_supports(f);
        for (Lifting l : kLiftings)
            for (const NamedMode& m : closure_modes(f, salt)) {
                SemanticsContext cf(f, fam, Query{DefeatKind::F, l, m.mode, false});
                SemanticsContext cd(f, fam, Query{DefeatKind::D, l, m.mode, false});
                SemanticsContext cr(f, fam, Query{DefeatKind::R, l, m.mode, false});
                for (SemanticsKind sem : kTheoremSems) {
                    ExtensionSet ef = enumerate(cf, sem);
                    ExtensionSet ed = enumerate(cd, sem);
                    ExtensionSet er = enumerate(cr, sem);
                    std::string clause = std::string("T5/") + sem_name(sem) + "/" +
                                         lifting_name(l) + "/S=" + m.name;
                    if (ed.extensions != ef.extensions)
                        return Failure{clause + ": d and f disagree under trivial priorities",
                                       {}};
                    if (er.extensions != ef.extensions)
                        return Failure{clause + ": r and f disagree under trivial priorities",
                                       {}};
                }
            }
        return std::nullopt;
    }
    if (id == "T6") {
        SupportFamily fam = compute_supports(f);
        TranslationResult tr = conjunction_closure(f);
        SupportFamily tfam = compute_supports(tr.target);
        for (Lifting l : kLiftings)
            for (const NamedMode& m : closure_modes(f, salt))
                for (DefeatKind x : {DefeatKind::D, DefeatKind::R}) {
                    std::string label =
                        std::string("T6/") + (x == DefeatKind::D ? "d" : "r");
                    if (auto fail = check_translation(label, f, fam, tr, tfam, x, x, l, m))
                        return fail;
                }
        return std::nullopt;
    }
    if (id == "T7") {
        TranslationResult conj = conjunction_closure(f);
        const Framework& fc = conj.target;
        SupportFamily cfam = compute_supports(fc);
        for (Lifting l : kLiftings) {
            TranslationResult tr = translate_r2d(fc, l);
            SupportFamily tfam = compute_supports(tr.target);
            for (const NamedMode& m : closure_modes(fc, salt)) {
                // S must contain the conjunction intro/elim rules.
                std::vector<char> in(fc.num_rules(), 0);
                for (int r = 0; r < fc.num_rules(); ++r) in[r] = m.mode.includes(r);
                for (size_t r : conj.structural_rules) in[r] = 1;
                NamedMode wedge{m.name, ClosureMode::custom(std::move(in))};
                if (auto fail = check_translation("T7", fc, cfam, tr, tfam, DefeatKind::R,
                                                  DefeatKind::D, l, wedge))
                    return fail;
            }
        }
        return std::nullopt;
    }
    if (id == "Remark3" || id == "LiftingChain" || id == "LiftingExistsMinbar") {
        for (AsmSet delta = 1; delta <= f.full_asm_set(); ++delta)
            for (int a = 0; a < f.num_assumptions(); ++a) {
                bool em = lifted_less(f, Lifting::ExistsMin, delta, a);
                if (id == "Remark3") {
                    bool am = lifted_less(f, Lifting::ForallMin, delta, a);
                    bool ab = lifted_less(f, Lifting::ForallMinBar, delta, a);
                    if (em != am || am != ab)
                        return Failure{"Remark3: liftings disagree on a total order",
                                       f.asm_names(delta)};
                } else if (id == "LiftingChain") {
                    bool am = lifted_less(f, Lifting::ForallMin, delta, a);
                    bool ab = lifted_less(f, Lifting::ForallMinBar, delta, a);
                    if ((ab && !am) || (am && !em))
                        return Failure{"LiftingChain: aminbar <= amin <= emin violated",
                                       f.asm_names(delta)};
                } else {
                    bool eb = lifted_less(f, Lifting::ExistsMinBar, delta, a);
                    if (em != eb)
                        return Failure{"LiftingExistsMinbar: emin and eminbar differ",
                                       f.asm_names(delta)};
                }
            }
        return std::nullopt;
    }
    throw std::invalid_argument("unknown theorem id '" + id + "'");
}

bool theorem_precondition(const std::string& id, const Framework& f, bool require_cp) {
    if (f.num_assumptions() == 0) return false;
    // Consistency needs flatness: in a non-flat framework a deriving subset
    // need not be closed, so it cannot defeat and conflict-freeness goes
    // vacuous while the contrary is still derived.
    if (id == "T1") return is_flat(f) && (!require_cp || closed_under_contraposition(f));
    if (id == "T2a" || id == "T2b")
        return !require_cp || closed_under_contraposition(f);
    if (id == "T3") return is_flat(f) && is_total_order(f);
    if (id == "T5") {
        for (int i = 1; i < f.num_assumptions(); ++i)
            if (f.valuation(i) != f.valuation(0)) return false;
        return true;
    }
    if (id == "T6" || id == "T7") return f.num_assumptions() <= 6;
    if (id == "Remark3") return is_total_order(f);
    return true;
}

// Rebuilds the framework without the selected element (ids remapped by name).
Framework drop_element(const Framework& f, SentenceId skip_sentence, int skip_rule,
                       int skip_pair, int skip_contrary_asm, int skip_contrary_idx) {
    Framework g;
    auto keep = [&](SentenceId s) { return s != skip_sentence; };
    for (int i = 0; i < f.num_assumptions(); ++i)
        if (keep(f.asm_sentence(i)))
            g.mark_assumption(g.intern(f.sentence(f.asm_sentence(i)).name));
    auto map = [&](SentenceId s) { return g.intern(f.sentence(s).name); };
    for (int r = 0; r < f.num_rules(); ++r) {
        if (r == skip_rule) continue;
        const Rule& rule = f.rules()[r];
        if (!keep(rule.head)) continue;
        bool ok = true;
        std::vector<SentenceId> body;
        for (SentenceId b : rule.body) {
            if (!keep(b)) { ok = false; break; }
            body.push_back(map(b));
        }
        if (ok) g.add_rule(std::move(body), map(rule.head));
    }
    for (int v = 0; v < f.num_values(); ++v) g.add_value(f.value_name(v));
    for (size_t p = 0; p < f.declared_leq().size(); ++p) {
        if (static_cast<int>(p) == skip_pair) continue;
        g.declare_leq(f.declared_leq()[p].first, f.declared_leq()[p].second);
    }
    for (int i = 0; i < f.num_assumptions(); ++i) {
        if (!keep(f.asm_sentence(i))) continue;
        SentenceId a = map(f.asm_sentence(i));
        g.set_valuation(a, f.valuation(i));
        const auto& cs = f.contraries(i);
        for (size_t k = 0; k < cs.size(); ++k) {
            if (i == skip_contrary_asm && static_cast<int>(k) == skip_contrary_idx) continue;
            if (keep(cs[k])) g.add_contrary(a, map(cs[k]));
        }
    }
    return normalize_preorder(std::move(g));
}

Framework shrink(const std::string& id, Framework f, const std::string& clause,
                 std::uint64_t salt, bool require_cp) {
    auto still_fails = [&](const Framework& g) {
        if (g.num_assumptions() == 0 || !theorem_precondition(id, g, require_cp)) return false;
        try {
            auto fail = run_check(id, g, salt);
            return fail && fail->clause == clause;
        } catch (const std::exception&) {
            return false;
        }
    };
    bool improved = true;
    while (improved) {
        improved = false;
        std::vector<Framework> candidates;
        for (int i = 0; i < f.num_assumptions(); ++i)
            candidates.push_back(drop_element(f, f.asm_sentence(i), -1, -1, -1, -1));
        for (int r = 0; r < f.num_rules(); ++r)
            candidates.push_back(drop_element(f, -1, r, -1, -1, -1));
        for (size_t p = 0; p < f.declared_leq().size(); ++p)
            candidates.push_back(drop_element(f, -1, -1, static_cast<int>(p), -1, -1));
        for (int i = 0; i < f.num_assumptions(); ++i)
            for (size_t k = 0; k < f.contraries(i).size(); ++k)
                candidates.push_back(drop_element(f, -1, -1, -1, i, static_cast<int>(k)));
        for (Framework& g : candidates)
            if (still_fails(g)) {
                f = std::move(g);
                improved = true;
                break;
            }
    }
    return f;
}

GeneratorConfig adjust_config(const std::string& id, GeneratorConfig cfg) {
    // T1 honours the caller's flag: with saturation off, inconsistency
    // witnesses on unclosed frameworks are reported rather than filtered.
    if (id == "T1") cfg.flat_only = true;
    if (id == "T2a" || id == "T2b") cfg.ensure_contraposition = true;
    if (id == "T3") { cfg.flat_only = true; cfg.order_shape = OrderShape::Chain; }
    if (id == "T5") cfg.order_shape = OrderShape::Trivial;
    if (id == "T6" || id == "T7")
        cfg.max_assumptions = std::min(cfg.max_assumptions, 3);
    if (id == "Remark3") cfg.order_shape = OrderShape::Chain;
    return cfg;
}

}  // namespace

TheoremReport verify_theorem(const std::string& id, GeneratorConfig cfg, int trials) {
    cfg = adjust_config(id, cfg);
    bool require_cp = cfg.ensure_contraposition;
    TheoremReport rep;
    rep.theorem = id;
    rep.trials = trials;
    for (int t = 0; t < trials; ++t) {
        Framework f = generate_framework(cfg, static_cast<std::uint64_t>(t));
        if (!theorem_precondition(id, f, require_cp)) continue;
        auto fail = run_check(id, f, static_cast<std::uint64_t>(t));
        if (!fail) continue;
        Framework small =
            shrink(id, f, fail->clause, static_cast<std::uint64_t>(t), require_cp);
        auto sf = run_check(id, small, static_cast<std::uint64_t>(t));
        const Failure& use = sf ? *sf : *fail;
        rep.counterexamples.push_back(
            {static_cast<std::uint64_t>(t), serialize(sf ? small : f), use.clause, use.delta});
        if (rep.counterexamples.size() >= 5) break;
    }
    return rep;
}

DivergenceReport find_d_r_divergence(GeneratorConfig cfg, int trials) {
    cfg.ensure_contraposition = true;
    DivergenceReport rep;
    rep.trials = trials;
    for (int t = 0; t < trials; ++t) {
        if (rep.complete_diverges && rep.admissible_diverges) break;
        Framework f = generate_framework(cfg, static_cast<std::uint64_t>(t));
        if (!closed_under_contraposition(f)) continue;
        SupportFamily fam = compute_supports(f);
        for (Lifting l : kLiftings) {
            for (const NamedMode& m : closure_modes(f, static_cast<std::uint64_t>(t))) {
                SemanticsContext d(f, fam, Query{DefeatKind::D, l, m.mode, false});
                SemanticsContext r(f, fam, Query{DefeatKind::R, l, m.mode, false});
                if (!rep.complete_diverges) {
                    for (AsmSet delta = 0; delta <= f.full_asm_set(); ++delta)
                        if (d.is_complete(delta) && !r.is_complete(delta)) {
                            rep.complete_diverges = true;
                            rep.complete_witness = serialize(f);
                            rep.detail += "d-complete-not-r-complete lifting=" +
                                          std::string(lifting_name(l)) + " S=" + m.name +
                                          " seed=" + std::to_string(t) + "; ";
                            break;
                        }
                }
                if (!rep.admissible_diverges) {
                    ExtensionSet ad = enumerate(d, SemanticsKind::Admissible);
                    for (AsmSet delta = 0; delta <= f.full_asm_set(); ++delta) {
                        if (!r.is_admissible(delta)) continue;
                        bool extensible = false;
                        for (AsmSet e : ad.extensions)
                            if ((delta & ~e) == 0) { extensible = true; break; }
                        if (!extensible) {
                            rep.admissible_diverges = true;
                            rep.admissible_witness = serialize(f);
                            rep.detail += "r-admissible-not-d-extensible lifting=" +
                                          std::string(lifting_name(l)) + " S=" + m.name +
                                          " seed=" + std::to_string(t) + "; ";
                            break;
                        }
                    }
                }
            }
        }
    }
    if (!rep.complete_diverges && !rep.admissible_diverges)
        rep.detail = "no divergence found within the configured bounds";
    return rep;
}

AbaPlusReport demo_abaplus_admissible(const Framework& f) {
    if (!is_flat(f)) throw std::runtime_error("the comparison is defined for flat frameworks");
    check_enumeration_guardrail(f);
    SupportFamily fam = compute_supports(f);
    SemanticsContext ctx(f, fam, Query{DefeatKind::R, Lifting::ExistsMin,
                                       ClosureMode::full(), false});
    AbaPlusReport rep;
    rep.admissible = enumerate(ctx, SemanticsKind::Admissible).extensions;
    for (AsmSet delta = 0; delta <= f.full_asm_set(); ++delta) {
        if (!ctx.is_conflict_free(delta)) continue;
        bool ok = true;
        for (int a = 0; ok && a < f.num_assumptions(); ++a) {
            if (!(delta & (AsmSet{1} << a))) continue;
            for (AsmSet theta = 0; theta <= f.full_asm_set(); ++theta)
                if (ctx.defeats(theta, AsmSet{1} << a) && !ctx.defeats(delta, theta)) {
                    ok = false;
                    break;
                }
        }
        if (ok) rep.admissible_plus.push_back(delta);
    }
    for (AsmSet m : rep.admissible_plus)
        if (!std::binary_search(rep.admissible.begin(), rep.admissible.end(), m))
            rep.plus_only.push_back(m);
    for (AsmSet m : rep.admissible)
        if (!std::binary_search(rep.admissible_plus.begin(), rep.admissible_plus.end(), m))
            rep.admissible_only.push_back(m);
    return rep;
}

}  // namespace aba
