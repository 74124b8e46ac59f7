#include "aba/translate.hpp"

#include <algorithm>
#include <stdexcept>

namespace aba {

AsmSet TranslationResult::map_set(AsmSet source) const {
    if (kind == ConjClosure) {
        AsmSet out = 0;
        AsmSet sub = source;
        while (sub) {
            out |= AsmSet{1} << conj_asm_of_mask[sub];
            sub = (sub - 1) & source;
        }
        return out;
    }
    return source;   // assumption indices are preserved by the other kinds
}

namespace {

// Value machinery shared by the two d2f variants. The value set is extended
// with a fresh maximum omega (index nv) used on strict-rule conclusions.
struct ExtValues {
    const Framework& f;
    int nv;          // omega = nv

    bool lt(int a, int b) const {
        if (b == nv) return a != nv;
        if (a == nv) return false;
        return f.lt(a, b);
    }
    std::vector<int> min_of(std::vector<int> vals) const {
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        std::vector<int> out;
        for (int a : vals) {
            bool dom = false;
            for (int b : vals)
                if (lt(b, a)) { dom = true; break; }
            if (!dom) out.push_back(a);
        }
        return out;
    }
};

std::string fresh_name(const Framework& f, std::string base) {
    while (f.find_value(base) || f.find_sentence(base)) base += "_";
    return base;
}

struct D2fBuilder {
    const Framework& f;
    ExtValues ext;
    TranslationResult out;
    std::vector<std::string> vname;

    explicit D2fBuilder(const Framework& src) : f(src), ext{src, src.num_values()} {
        out.kind = TranslationResult::D2F;
        for (int v = 0; v < f.num_values(); ++v) vname.push_back(f.value_name(v));
        vname.push_back(fresh_name(f, "w"));
        // Intern the whole expanded language up front: sentence (s, a) gets
        // the predictable id s*(nv+1)+a.
        for (int s = 0; s < f.num_sentences(); ++s)
            for (int a = 0; a <= ext.nv; ++a) {
                Decoration d;
                d.kind = Decoration::Valued;
                d.base = s;
                d.value = a;
                out.target.add_sentence(f.sentence(s).name + "^" + vname[a], d);
            }
        ValueId triv = out.target.add_value(fresh_name(f, "triv"));
        for (int i = 0; i < f.num_assumptions(); ++i) {
            if (f.valuation(i).size() != 1)
                throw std::runtime_error("d2f translation requires singleton valuations");
            SentenceId t = id(f.asm_sentence(i), f.valuation(i)[0]);
            out.target.mark_assumption(t);
            out.target.set_valuation(t, {triv});
            out.assumption_map.push_back(t);
        }
        for (int i = 0; i < f.num_assumptions(); ++i) {
            int vb = f.valuation(i)[0];
            for (SentenceId c : f.contraries(i))
                for (int a = 0; a <= ext.nv; ++a)
                    if (!ext.lt(a, vb))
                        out.target.add_contrary(out.assumption_map[i], id(c, a));
        }
        out.rule_map.resize(f.num_rules());
    }

    SentenceId id(SentenceId s, int a) const { return s * (ext.nv + 1) + a; }

    // Calls fn once per value tuple over the rule body.
    template <typename Fn>
    void for_each_tuple(const Rule& r, Fn fn) {
        std::vector<int> tuple(r.body.size(), 0);
        while (true) {
            fn(tuple);
            size_t k = 0;
            while (k < tuple.size() && tuple[k] == ext.nv) tuple[k++] = 0;
            if (k == tuple.size()) break;
            ++tuple[k];
        }
    }

    void finish() { out.target = normalize_preorder(std::move(out.target)); }
};

}  // namespace

TranslationResult translate_d2f_total(const Framework& f, bool bypass_preconditions) {
    if (!bypass_preconditions) {
        if (!is_flat(f)) throw std::runtime_error("d2f-total requires a flat framework");
        if (!is_total_order(f)) throw std::runtime_error("d2f-total requires a total value order");
    }
    D2fBuilder b(f);
    for (size_t ri = 0; ri < f.rules().size(); ++ri) {
        const Rule& r = f.rules()[ri];
        if (r.body.empty()) {
            b.out.rule_map[ri].push_back(b.out.target.add_rule({}, b.id(r.head, b.ext.nv)));
            continue;
        }
        b.for_each_tuple(r, [&](const std::vector<int>& tuple) {
            std::vector<SentenceId> body;
            for (size_t k = 0; k < r.body.size(); ++k) body.push_back(b.id(r.body[k], tuple[k]));
            for (int m : b.ext.min_of(tuple))
                b.out.rule_map[ri].push_back(b.out.target.add_rule(body, b.id(r.head, m)));
        });
    }
    b.finish();
    return std::move(b.out);
}

TranslationResult translate_d2f_minbar(const Framework& f) {
    D2fBuilder b(f);
    for (size_t ri = 0; ri < f.rules().size(); ++ri) {
        const Rule& r = f.rules()[ri];
        // A deduction's support includes an assumption head, so a conclusion
        // in Ab can never be asserted above its own priority.
        int head_cap = f.is_assumption(r.head)
                           ? f.valuation(f.asm_index(r.head))[0]
                           : b.ext.nv;
        if (r.body.empty()) {
            b.out.rule_map[ri].push_back(b.out.target.add_rule({}, b.id(r.head, head_cap)));
            continue;
        }
        b.for_each_tuple(r, [&](const std::vector<int>& tuple) {
            std::vector<SentenceId> body;
            std::vector<int> head_vals = tuple;
            if (head_cap != b.ext.nv) head_vals.push_back(head_cap);
            auto push = [&](SentenceId s) {
                if (std::find(body.begin(), body.end(), s) == body.end()) body.push_back(s);
            };
            for (size_t k = 0; k < r.body.size(); ++k) push(b.id(r.body[k], tuple[k]));
            for (size_t k = 0; k < r.body.size(); ++k) {
                int g = f.is_assumption(r.body[k])
                            ? f.valuation(f.asm_index(r.body[k]))[0]
                            : tuple[k];
                push(b.id(r.body[k], g));
                head_vals.push_back(g);
            }
            // The head minimum ranges over the paired superscripts as well;
            // with the bare tuple minimum an assumption's own priority can
            // drop out of a derived conclusion, which breaks adequacy on
            // non-flat inputs.
            if (head_cap != b.ext.nv) {
                // An assumption head is asserted at its own priority from the
                // body alone (that instance keeps the closure firing), while
                // the other minimal superscripts additionally require the head
                // assumption itself, mirroring its place in the support.
                SentenceId self = b.id(r.head, head_cap);
                b.out.rule_map[ri].push_back(b.out.target.add_rule(body, self));
                for (int m : b.ext.min_of(head_vals)) {
                    if (m == head_cap) continue;
                    std::vector<SentenceId> body2 = body;
                    if (std::find(body2.begin(), body2.end(), self) == body2.end())
                        body2.push_back(self);
                    b.out.rule_map[ri].push_back(
                        b.out.target.add_rule(std::move(body2), b.id(r.head, m)));
                }
            } else {
                for (int m : b.ext.min_of(head_vals))
                    b.out.rule_map[ri].push_back(b.out.target.add_rule(body, b.id(r.head, m)));
            }
        });
    }
    for (int i = 0; i < f.num_assumptions(); ++i) {
        SentenceId s = f.asm_sentence(i);
        int vb = f.valuation(i)[0];
        for (int a = 0; a <= b.ext.nv; ++a)
            if (a != vb)
                b.out.structural_rules.push_back(
                    b.out.target.add_rule({b.id(s, a)}, b.id(s, vb)));
    }
    b.finish();
    return std::move(b.out);
}

ClosureMode translate_rule_subset(const TranslationResult& tr, const Framework& source,
                                  const ClosureMode& s) {
    std::vector<char> in(tr.target.num_rules(), 0);
    for (size_t ri = 0; ri < tr.rule_map.size(); ++ri)
        if (s.includes(ri))
            for (size_t t : tr.rule_map[ri]) in[t] = 1;
    for (size_t t : tr.structural_rules) in[t] = 1;
    (void)source;
    return ClosureMode::custom(std::move(in));
}

TranslationResult conjunction_closure(const Framework& f) {
    int n = f.num_assumptions();
    if (n > 6)
        throw std::runtime_error("conjunction closure of " + std::to_string(n) +
                                 " assumptions exceeds the representable target size");
    TranslationResult out;
    out.kind = TranslationResult::ConjClosure;
    out.target = f;
    out.conj_asm_of_mask.assign(size_t{1} << n, -1);
    for (int i = 0; i < n; ++i) {
        out.assumption_map.push_back(f.asm_sentence(i));
        out.conj_asm_of_mask[AsmSet{1} << i] = i;
    }
    for (AsmSet m = 1; m < (AsmSet{1} << n); ++m) {
        if (popcount(m) < 2) continue;
        std::string name;
        std::vector<SentenceId> parts;
        std::vector<ValueId> vals;
        for (int i = 0; i < n; ++i)
            if (m & (AsmSet{1} << i)) {
                if (!name.empty()) name += "&";
                name += f.sentence(f.asm_sentence(i)).name;
                parts.push_back(f.asm_sentence(i));
                for (ValueId v : f.valuation(i)) vals.push_back(v);
            }
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        Decoration d;
        d.kind = Decoration::Conj;
        d.parts = parts;
        SentenceId conj = out.target.add_sentence(name, d);
        out.target.mark_assumption(conj);
        out.target.set_valuation(conj, vals);
        out.conj_asm_of_mask[m] = out.target.asm_index(conj);
        out.structural_rules.push_back(out.target.add_rule(parts, conj));   // and-introduction
        for (SentenceId p : parts)
            out.structural_rules.push_back(out.target.add_rule({conj}, p)); // and-elimination
    }
    out.rule_map.resize(f.num_rules());
    for (size_t ri = 0; ri < f.rules().size(); ++ri) out.rule_map[ri] = {ri};
    out.target = normalize_preorder(std::move(out.target));
    return out;
}

TranslationResult translate_r2d(const Framework& fc, Lifting l, bool include_conj_supports) {
    int n = fc.num_assumptions();
    // Identify the conjunction assumptions and their base masks.
    AsmSet conj_bits = 0;
    std::vector<AsmSet> base_mask(n, 0);
    for (int i = 0; i < n; ++i) {
        const Decoration& d = fc.sentence(fc.asm_sentence(i)).deco;
        if (d.kind == Decoration::Conj) {
            conj_bits |= AsmSet{1} << i;
            for (SentenceId p : d.parts) {
                int pi = fc.asm_index(p);
                if (pi < 0) throw std::runtime_error("conjunction component is not an assumption");
                base_mask[i] |= AsmSet{1} << pi;
            }
        } else {
            base_mask[i] = AsmSet{1} << i;
        }
    }
    int nb = popcount(~conj_bits & fc.full_asm_set());
    if ((~conj_bits & fc.full_asm_set()) != ((AsmSet{1} << nb) - 1))
        throw std::runtime_error("base assumptions must precede conjunction assumptions");
    std::vector<int> asm_of_base(size_t{1} << nb, -1);
    for (int i = 0; i < n; ++i)
        if (base_mask[i] < asm_of_base.size()) asm_of_base[base_mask[i]] = i;
    // The input must carry the conjunction intro/elim rules.
    for (int i = 0; i < n; ++i) {
        if (!(conj_bits & (AsmSet{1} << i))) continue;
        const Decoration& d = fc.sentence(fc.asm_sentence(i)).deco;
        bool has_intro = false;
        std::vector<char> has_elim(d.parts.size(), 0);
        for (const Rule& r : fc.rules()) {
            if (r.head == fc.asm_sentence(i) && r.body == d.parts) has_intro = true;
            if (r.body.size() == 1 && r.body[0] == fc.asm_sentence(i))
                for (size_t k = 0; k < d.parts.size(); ++k)
                    if (r.head == d.parts[k]) has_elim[k] = 1;
        }
        if (!has_intro || std::find(has_elim.begin(), has_elim.end(), 0) != has_elim.end())
            throw std::runtime_error("input lacks conjunction intro/elim rules; "
                                     "apply the conjunction closure first");
    }

    TranslationResult out;
    out.kind = TranslationResult::R2D;
    out.target = fc;
    for (int i = 0; i < n; ++i) out.assumption_map.push_back(fc.asm_sentence(i));
    out.rule_map.resize(fc.num_rules());
    for (size_t ri = 0; ri < fc.rules().size(); ++ri) out.rule_map[ri] = {ri};

    // Fresh contraries A^not for every assumption of the conjunction-closed
    // framework, whether or not a contrapositive rule ever concludes them.
    std::vector<SentenceId> neg(n);
    for (int i = 0; i < n; ++i) {
        Decoration d;
        d.kind = Decoration::Neg;
        d.base = fc.asm_sentence(i);
        neg[i] = out.target.add_sentence(fc.sentence(fc.asm_sentence(i)).name + "^not", d);
        out.target.add_contrary(fc.asm_sentence(i), neg[i]);
    }

    SupportFamily fam = compute_supports(fc);
    for (int c = 0; c < n; ++c) {
        for (SentenceId b : fc.contraries(c)) {
            for (AsmSet delta : fam.supports(b)) {
                if (delta == 0) continue;
                if (!include_conj_supports && (delta & conj_bits)) continue;
                if (!lifted_less(fc, l, delta, c)) continue;
                AsmSet flat = 0;
                for (int i = 0; i < n; ++i)
                    if (delta & (AsmSet{1} << i)) flat |= base_mask[i];
                int target_asm = asm_of_base[flat];
                if (target_asm < 0)
                    throw std::runtime_error("missing conjunction assumption for a support");
                out.structural_rules.push_back(
                    out.target.add_rule({fc.asm_sentence(c)}, neg[target_asm]));
            }
        }
    }
    std::sort(out.structural_rules.begin(), out.structural_rules.end());
    out.structural_rules.erase(
        std::unique(out.structural_rules.begin(), out.structural_rules.end()),
        out.structural_rules.end());
    out.target = normalize_preorder(std::move(out.target));
    return out;
}

TranslationResult single_contrary_reduction(const Framework& f) {
    TranslationResult out;
    out.kind = TranslationResult::SingleContrary;
    out.target = f;
    out.rule_map.resize(f.num_rules());
    for (size_t ri = 0; ri < f.rules().size(); ++ri) out.rule_map[ri] = {ri};
    for (int i = 0; i < f.num_assumptions(); ++i) {
        out.assumption_map.push_back(f.asm_sentence(i));
        const auto& cs = f.contraries(i);
        if (cs.size() <= 1) continue;
        for (size_t k = 1; k < cs.size(); ++k)
            out.structural_rules.push_back(out.target.add_rule({cs[k]}, cs[0]));
        out.target.set_contraries(f.asm_sentence(i), {cs[0]});
    }
    out.target = normalize_preorder(std::move(out.target));
    return out;
}

}  // namespace aba
