#include "aba/defeat.hpp"
#include "aba/text.hpp"
#include "aba/verify.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace aba;

namespace {

// p undercuts the stronger q, and only the reverse clause lets q answer
Framework underdog() {
    return parse_framework(
        "assumption p. assumption q. contrary q : nq. rule nq <- p .\n"
        "value p = v1. value q = v2. order v1 < v2.\n");
}

// nr needs both p and q; only the set {p,q} carries the attack
Framework joint_attack() {
    return parse_framework(
        "assumption p. assumption q. assumption r. contrary r : nr.\n"
        "rule nr <- p, q .\n"
        "value p = v1. value q = v2. value r = v3.\n"
        "order v1 < v2. order v2 < v3.\n");
}

const Lifting kAll[] = {Lifting::ExistsMin, Lifting::ForallMin, Lifting::ForallMinBar};

}  // namespace

TEST_CASE("attack without enough priority is no direct defeat") {
    Framework f = underdog();
    SupportFamily fam = compute_supports(f);
    auto ws = attacks(fam, f, AsmSet{1} << 0, 1);
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].support == AsmSet{1});
    CHECK(ws[0].contrary == *f.find_sentence("nq"));
    CHECK_FALSE(d_defeats(fam, f, Lifting::ExistsMin, AsmSet{1}, 1));
    CHECK(attacks(fam, f, AsmSet{1} << 1, 0).empty());
}

TEST_CASE("the reverse clause turns the attack around") {
    Framework f = underdog();
    SupportFamily fam = compute_supports(f);
    AsmSet p = AsmSet{1}, q = AsmSet{1} << 1;
    for (Lifting l : kAll) {
        CHECK_FALSE(set_defeats(fam, f, DefeatKind::D, l, p, q));
        CHECK_FALSE(set_defeats(fam, f, DefeatKind::D, l, q, p));
        CHECK(set_defeats(fam, f, DefeatKind::F, l, p, q));
        CHECK(set_defeats(fam, f, DefeatKind::R, l, q, p));   // q strikes back
        CHECK_FALSE(set_defeats(fam, f, DefeatKind::R, l, p, q));
    }
}

TEST_CASE("joint supports defeat only as a set") {
    Framework f = joint_attack();
    SupportFamily fam = compute_supports(f);
    AsmSet p = AsmSet{1}, q = AsmSet{1} << 1, r = AsmSet{1} << 2;
    CHECK(set_defeats(fam, f, DefeatKind::F, Lifting::ExistsMin, p | q, r));
    CHECK_FALSE(set_defeats(fam, f, DefeatKind::D, Lifting::ExistsMin, p | q, r));
    CHECK(set_defeats(fam, f, DefeatKind::R, Lifting::ExistsMin, r, p | q));
    CHECK_FALSE(set_defeats(fam, f, DefeatKind::R, Lifting::ExistsMin, r, p));
    CHECK_FALSE(set_defeats(fam, f, DefeatKind::R, Lifting::ExistsMin, r, q));
}

TEST_CASE("nothing defeats or is defeated by the empty set") {
    Framework f = joint_attack();
    SupportFamily fam = compute_supports(f);
    for (Lifting l : kAll) {
        DefeatTable t(fam, f, l);
        for (AsmSet m = 0; m <= f.full_asm_set(); ++m)
            for (DefeatKind k : {DefeatKind::F, DefeatKind::D, DefeatKind::R}) {
                CHECK_FALSE(t.defeats(k, m, 0));
                CHECK_FALSE(t.defeats(k, 0, m));
            }
    }
}

TEST_CASE("assumption-free attacks survive every priority") {
    // strict deduction of q's contrary: no support values to compare against
    Framework f = parse_framework(
        "assumption q. contrary q : nq. rule nq <- .\n"
        "value q = v2.\n");
    SupportFamily fam = compute_supports(f);
    for (Lifting l : kAll)
        for (DefeatKind k : {DefeatKind::F, DefeatKind::D, DefeatKind::R})
            CHECK(set_defeats(fam, f, k, l, 0, AsmSet{1}));
}

TEST_CASE("the defeat table matches the direct clause evaluation and the reference") {
    GeneratorConfig cfg;
    cfg.max_assumptions = 4;
    cfg.seed = 21;
    for (int t = 0; t < 40; ++t) {
        Framework f = generate_framework(cfg, t);
        SupportFamily fam = compute_supports(f);
        for (Lifting l : kAll) {
            DefeatTable table(fam, f, l);
            for (DefeatKind k : {DefeatKind::F, DefeatKind::D, DefeatKind::R}) {
                oracle::Sem ref(f, Query{k, l, ClosureMode::full(), false});
                for (AsmSet d = 0; d <= f.full_asm_set(); ++d)
                    for (AsmSet g = 0; g <= f.full_asm_set(); ++g) {
                        INFO("instance ", t);
                        bool got = table.defeats(k, d, g);
                        CHECK(got == set_defeats(fam, f, k, l, d, g));
                        CHECK(got == ref.defeats(d, g));
                    }
            }
        }
    }
}

TEST_CASE("defeat is monotone in both arguments") {
    GeneratorConfig cfg;
    cfg.max_assumptions = 4;
    cfg.seed = 22;
    for (int t = 0; t < 25; ++t) {
        Framework f = generate_framework(cfg, t);
        SupportFamily fam = compute_supports(f);
        DefeatTable table(fam, f, Lifting::ExistsMin);
        for (DefeatKind k : {DefeatKind::F, DefeatKind::D, DefeatKind::R})
            for (AsmSet d = 0; d <= f.full_asm_set(); ++d)
                for (AsmSet g = 0; g <= f.full_asm_set(); ++g)
                    if (table.defeats(k, d, g))
                        for (int i = 0; i < f.num_assumptions(); ++i) {
                            CHECK(table.defeats(k, d | (AsmSet{1} << i), g));
                            CHECK(table.defeats(k, d, g | (AsmSet{1} << i)));
                        }
    }
}

TEST_CASE("trivial priorities equate the three defeat kinds") {
    GeneratorConfig cfg;
    cfg.order_shape = OrderShape::Trivial;
    cfg.seed = 23;
    for (int t = 0; t < 25; ++t) {
        Framework f = generate_framework(cfg, t);
        SupportFamily fam = compute_supports(f);
        DefeatTable table(fam, f, Lifting::ExistsMin);
        for (AsmSet d = 0; d <= f.full_asm_set(); ++d)
            for (AsmSet g = 0; g <= f.full_asm_set(); ++g) {
                bool base = table.defeats(DefeatKind::F, d, g);
                CHECK(table.defeats(DefeatKind::D, d, g) == base);
                CHECK(table.defeats(DefeatKind::R, d, g) == base);
            }
    }
}
