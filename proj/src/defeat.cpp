#include "aba/defeat.hpp"

namespace aba {

// Supports that pass through a conjunction assumption are padded copies of a
// conjunction-free deduction (the conjuncts ride along via the introduction
// and elimination rules) and would let idle conjuncts shift the lifted value
// set, so defeats are carried by conjunction-free supports only.
AsmSet conj_assumption_mask(const Framework& f) {
    AsmSet m = 0;
    for (int a = 0; a < f.num_assumptions(); ++a)
        if (f.sentence(f.asm_sentence(a)).deco.kind == Decoration::Conj)
            m |= AsmSet{1} << a;
    return m;
}

std::vector<AttackWitness> attacks(const SupportFamily& fam, const Framework& f,
                                   AsmSet delta, int target_asm) {
    std::vector<AttackWitness> out;
    AsmSet conj = conj_assumption_mask(f);
    for (SentenceId c : f.contraries(target_asm))
        for (AsmSet s : fam.supports(c))
            if ((s & ~delta) == 0 && !(s & conj)) out.push_back(AttackWitness{s, c});
    return out;
}

bool d_defeats(const SupportFamily& fam, const Framework& f, Lifting l,
               AsmSet delta, int target_asm) {
    AsmSet conj = conj_assumption_mask(f);
    for (SentenceId c : f.contraries(target_asm))
        for (AsmSet s : fam.supports(c))
            if ((s & ~delta) == 0 && !(s & conj) && !lifted_less(f, l, s, target_asm))
                return true;
    return false;
}

AsmSet expand_conj_targets(const Framework& f, AsmSet target) {
    AsmSet out = target;
    for (int a = 0; a < f.num_assumptions(); ++a) {
        if (!(target & (AsmSet{1} << a))) continue;
        const Decoration& d = f.sentence(f.asm_sentence(a)).deco;
        if (d.kind != Decoration::Conj) continue;
        for (SentenceId p : d.parts)
            if (f.is_assumption(p)) out |= AsmSet{1} << f.asm_index(p);
    }
    return out;
}

bool set_defeats(const SupportFamily& fam, const Framework& f, DefeatKind k, Lifting l,
                 AsmSet delta, AsmSet target) {
    int n = f.num_assumptions();
    target = expand_conj_targets(f, target);
    for (int a = 0; a < n; ++a) {
        if (!(target & (AsmSet{1} << a))) continue;
        if (k == DefeatKind::F) {
            if (!attacks(fam, f, delta, a).empty()) return true;
        } else if (d_defeats(fam, f, l, delta, a)) {
            return true;
        }
    }
    if (k != DefeatKind::R) return false;
    // Reverse clause: some member of delta is attacked from within target by
    // a strictly less preferred support.
    AsmSet conj = conj_assumption_mask(f);
    for (int a = 0; a < n; ++a) {
        if (!(delta & (AsmSet{1} << a))) continue;
        for (SentenceId c : f.contraries(a))
            for (AsmSet s : fam.supports(c))
                if ((s & ~target) == 0 && !(s & conj) && lifted_less(f, l, s, a))
                    return true;
    }
    return false;
}

namespace {

// Superset propagation: after marking every listed support mask, mark[m] holds
// iff some listed mask is a subset of m.
void propagate_supersets(std::vector<char>& mark, int n) {
    for (int bit = 0; bit < n; ++bit) {
        AsmSet step = AsmSet{1} << bit;
        for (AsmSet m = 0; m < mark.size(); ++m)
            if (!(m & step) && mark[m]) mark[m | step] = 1;
    }
}

}  // namespace

DefeatTable::DefeatTable(const SupportFamily& fam, const Framework& f, Lifting l) {
    int n = f.num_assumptions();
    size_t total = size_t{1} << n;
    attacked_f_.assign(total, 0);
    attacked_d_.assign(total, 0);
    rev_hit_.assign(total, 0);
    std::vector<char> any(total), dok(total), rev(total);
    AsmSet conj = conj_assumption_mask(f);
    for (int a = 0; a < n; ++a) {
        std::fill(any.begin(), any.end(), 0);
        std::fill(dok.begin(), dok.end(), 0);
        std::fill(rev.begin(), rev.end(), 0);
        for (SentenceId c : f.contraries(a))
            for (AsmSet s : fam.supports(c)) {
                if (s & conj) continue;
                any[s] = 1;
                if (lifted_less(f, l, s, a)) rev[s] = 1;
                else dok[s] = 1;
            }
        propagate_supersets(any, n);
        propagate_supersets(dok, n);
        propagate_supersets(rev, n);
        AsmSet bit = AsmSet{1} << a;
        for (size_t m = 0; m < total; ++m) {
            if (any[m]) attacked_f_[m] |= bit;
            if (dok[m]) attacked_d_[m] |= bit;
            if (rev[m]) rev_hit_[m] |= bit;
        }
    }
    // Conjunction targets stand for their conjuncts: hitting any expansion
    // member counts, and the reverse clause draws from the expanded set.
    std::vector<AsmSet> exp(n);
    bool has_conj = false;
    for (int a = 0; a < n; ++a) {
        exp[a] = expand_conj_targets(f, AsmSet{1} << a);
        if (exp[a] != (AsmSet{1} << a)) has_conj = true;
    }
    expand_.resize(total);
    expand_[0] = 0;
    for (size_t m = 1; m < total; ++m) {
        int low = __builtin_ctzll(m);
        expand_[m] = expand_[m & (m - 1)] | exp[low];
    }
    if (has_conj)
        for (size_t m = 0; m < total; ++m) {
            AsmSet af = 0, ad = 0;
            for (int a = 0; a < n; ++a) {
                if (attacked_f_[m] & exp[a]) af |= AsmSet{1} << a;
                if (attacked_d_[m] & exp[a]) ad |= AsmSet{1} << a;
            }
            attacked_f_[m] = af;
            attacked_d_[m] = ad;
        }
}

}  // namespace aba
