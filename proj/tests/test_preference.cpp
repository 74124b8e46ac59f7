#include <algorithm>

#include "aba/preference.hpp"
#include "aba/text.hpp"
#include "aba/verify.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace aba;

namespace {

// Five singleton-valued assumptions over the preorder
// al3 < al1, al3 < al5, al4 < al5, al2 < al4.
Framework diamond() {
    return parse_framework(
        "assumption a1. assumption a2. assumption a3. assumption a4. assumption a5.\n"
        "value a1 = al1. value a2 = al2. value a3 = al3. value a4 = al4. value a5 = al5.\n"
        "order al3 < al1. order al3 < al5. order al4 < al5. order al2 < al4.\n");
}

AsmSet bits(std::initializer_list<int> is) {
    AsmSet m = 0;
    for (int i : is) m |= AsmSet{1} << i;
    return m;
}

}  // namespace

TEST_CASE("min and minbar over a partial order") {
    Framework f = diamond();
    AsmSet d = bits({0, 2, 3});   // values {al1, al3, al4}
    std::vector<ValueId> mn = min_values(f, d);
    std::sort(mn.begin(), mn.end());
    CHECK(mn == std::vector<ValueId>{*f.find_value("al3"), *f.find_value("al4")});
    std::vector<ValueId> mb = minbar_values(f, d);
    std::sort(mb.begin(), mb.end());
    // al1 is incomparable with al4, so minbar keeps it
    CHECK(mb == std::vector<ValueId>{*f.find_value("al1"), *f.find_value("al3"),
                                     *f.find_value("al4")});
}

TEST_CASE("the liftings judge the running comparisons differently") {
    Framework f = diamond();
    AsmSet d23 = bits({1, 2});
    CHECK(lifted_less(f, Lifting::ExistsMin, d23, 3));        // al2 < al4
    CHECK_FALSE(lifted_less(f, Lifting::ForallMin, d23, 3));  // al3 not< al4
    AsmSet d134 = bits({0, 2, 3});
    CHECK(lifted_less(f, Lifting::ForallMin, d134, 4));       // al3,al4 < al5
    CHECK_FALSE(lifted_less(f, Lifting::ForallMinBar, d134, 4));  // al1 not< al5
}

TEST_CASE("an empty set is never strictly preferred") {
    Framework f = diamond();
    for (Lifting l : {Lifting::ExistsMin, Lifting::ForallMin, Lifting::ForallMinBar,
                      Lifting::ExistsMinBar})
        for (int a = 0; a < f.num_assumptions(); ++a) CHECK_FALSE(lifted_less(f, l, 0, a));
}

TEST_CASE("set-vs-set comparison matches the singleton form") {
    Framework f = diamond();
    for (AsmSet d = 0; d <= f.full_asm_set(); ++d)
        for (int a = 0; a < f.num_assumptions(); ++a)
            for (Lifting l : {Lifting::ExistsMin, Lifting::ForallMin, Lifting::ForallMinBar,
                              Lifting::ExistsMinBar})
                CHECK(lifted_less_set(f, l, d, AsmSet{1} << a) ==
                      lifted_less(f, l, d, a));
}

TEST_CASE("exists-min over minbar coincides with exists-min") {
    GeneratorConfig cfg;
    cfg.seed = 3;
    for (int t = 0; t < 60; ++t) {
        Framework f = generate_framework(cfg, t);
        for (AsmSet d = 0; d <= f.full_asm_set(); ++d)
            for (int a = 0; a < f.num_assumptions(); ++a) {
                INFO("instance ", t);
                CHECK(lifted_less(f, Lifting::ExistsMinBar, d, a) ==
                      lifted_less(f, Lifting::ExistsMin, d, a));
            }
    }
}

TEST_CASE("forall-minbar implies forall-min implies exists-min") {
    GeneratorConfig cfg;
    cfg.seed = 4;
    for (int t = 0; t < 60; ++t) {
        Framework f = generate_framework(cfg, t);
        for (AsmSet d = 1; d <= f.full_asm_set(); ++d)
            for (int a = 0; a < f.num_assumptions(); ++a) {
                bool ab = lifted_less(f, Lifting::ForallMinBar, d, a);
                bool am = lifted_less(f, Lifting::ForallMin, d, a);
                bool em = lifted_less(f, Lifting::ExistsMin, d, a);
                INFO("instance ", t);
                CHECK((!ab || am));
                CHECK((!am || em));
            }
    }
}

TEST_CASE("total orders collapse the liftings") {
    GeneratorConfig cfg;
    cfg.seed = 5;
    cfg.order_shape = OrderShape::Chain;
    for (int t = 0; t < 40; ++t) {
        Framework f = generate_framework(cfg, t);
        for (AsmSet d = 1; d <= f.full_asm_set(); ++d)
            for (int a = 0; a < f.num_assumptions(); ++a) {
                bool em = lifted_less(f, Lifting::ExistsMin, d, a);
                CHECK(lifted_less(f, Lifting::ForallMin, d, a) == em);
                CHECK(lifted_less(f, Lifting::ForallMinBar, d, a) == em);
            }
    }
}

TEST_CASE("lifted_less agrees with the reference implementation") {
    GeneratorConfig cfg;
    cfg.seed = 6;
    for (int t = 0; t < 60; ++t) {
        Framework f = generate_framework(cfg, t);
        for (AsmSet d = 0; d <= f.full_asm_set(); ++d)
            for (int a = 0; a < f.num_assumptions(); ++a)
                for (Lifting l : {Lifting::ExistsMin, Lifting::ForallMin,
                                  Lifting::ForallMinBar, Lifting::ExistsMinBar}) {
                    INFO("instance ", t);
                    CHECK(lifted_less(f, l, d, a) == oracle::lifted_less(f, l, d, a));
                }
    }
}
