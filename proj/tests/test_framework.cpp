#include <cstdlib>
#include <stdexcept>

#include "aba/framework.hpp"
#include "doctest.h"

using namespace aba;

TEST_CASE("interning is idempotent") {
    Framework f;
    SentenceId p = f.intern("p");
    CHECK(f.intern("p") == p);
    CHECK(f.add_sentence("q") != p);
    CHECK(f.find_sentence("q").has_value());
    CHECK_FALSE(f.find_sentence("zz").has_value());
}

TEST_CASE("duplicate rules collapse to one index") {
    Framework f;
    SentenceId p = f.intern("p"), q = f.intern("q");
    size_t r0 = f.add_rule({p}, q);
    size_t r1 = f.add_rule({p}, q);
    CHECK(r0 == r1);
    CHECK(f.num_rules() == 1);
    CHECK(f.add_rule({}, q) != r0);
}

TEST_CASE("assumption indexing follows declaration order") {
    Framework f;
    SentenceId p = f.intern("p"), q = f.intern("q");
    f.mark_assumption(q);
    f.mark_assumption(p);
    CHECK(f.asm_index(q) == 0);
    CHECK(f.asm_index(p) == 1);
    CHECK(f.asm_sentence(0) == q);
    CHECK_FALSE(f.is_assumption(f.intern("r")));
    CHECK(f.asm_index(f.intern("r")) == -1);
    CHECK(f.full_asm_set() == 0b11);
}

TEST_CASE("normalize_preorder takes the reflexive-transitive closure") {
    Framework f;
    f.mark_assumption(f.intern("a"));
    ValueId v0 = f.add_value("v0"), v1 = f.add_value("v1"), v2 = f.add_value("v2");
    f.set_valuation(f.asm_sentence(0), {v0});
    f.declare_leq(v0, v1);
    f.declare_leq(v1, v2);
    Framework g = normalize_preorder(std::move(f));
    CHECK(g.normalized());
    CHECK(g.leq(v0, v2));
    CHECK(g.leq(v1, v1));
    CHECK(g.lt(v0, v2));
    CHECK_FALSE(g.leq(v2, v0));
    // idempotent
    Framework h = normalize_preorder(std::move(g));
    CHECK(h.leq(v0, v2));
}

TEST_CASE("a <=-cycle yields equivalence, not strictness") {
    Framework f;
    f.mark_assumption(f.intern("a"));
    ValueId v0 = f.add_value("v0"), v1 = f.add_value("v1");
    f.set_valuation(f.asm_sentence(0), {v0});
    f.declare_leq(v0, v1);
    f.declare_leq(v1, v0);
    Framework g = normalize_preorder(std::move(f));
    CHECK(g.leq(v0, v1));
    CHECK(g.leq(v1, v0));
    CHECK_FALSE(g.lt(v0, v1));
    CHECK_FALSE(g.lt(v1, v0));
}

TEST_CASE("validate flags the broken invariants") {
    Framework empty;
    CHECK_FALSE(validate(normalize_preorder(std::move(empty))).empty());

    Framework f;
    f.mark_assumption(f.intern("a"));
    f.add_value("v0");
    // no valuation for a
    CHECK_FALSE(validate(normalize_preorder(std::move(f))).empty());

    Framework g;
    g.mark_assumption(g.intern("a"));
    g.set_valuation(g.asm_sentence(0), {g.add_value("v0")});
    CHECK(validate(normalize_preorder(std::move(g))).empty());
}

TEST_CASE("flatness and totality predicates") {
    Framework f;
    SentenceId p = f.intern("p");
    f.mark_assumption(p);
    SentenceId s = f.intern("s");
    f.add_rule({p}, s);
    ValueId v0 = f.add_value("v0"), v1 = f.add_value("v1");
    f.set_valuation(p, {v0});

    SUBCASE("flat, partial") {
        Framework g = normalize_preorder(std::move(f));
        CHECK(is_flat(g));
        CHECK_FALSE(is_total_order(g));   // v0 and v1 incomparable
    }
    SUBCASE("non-flat, total") {
        f.add_rule({s}, p);
        f.declare_leq(v0, v1);
        Framework g = normalize_preorder(std::move(f));
        CHECK_FALSE(is_flat(g));
        CHECK(is_total_order(g));
    }
}

TEST_CASE("enumeration guardrail reads ABA_MAX_AB with a hard cap") {
    unsetenv("ABA_MAX_AB");
    CHECK(max_enumerable_assumptions() == 20);
    setenv("ABA_MAX_AB", "25", 1);
    CHECK(max_enumerable_assumptions() == 25);
    setenv("ABA_MAX_AB", "99", 1);
    CHECK(max_enumerable_assumptions() == 30);
    setenv("ABA_MAX_AB", "4", 1);

    Framework f;
    ValueId v = f.add_value("v0");
    for (int i = 0; i < 5; ++i) {
        SentenceId s = f.intern("a" + std::to_string(i));
        f.mark_assumption(s);
        f.set_valuation(s, {v});
    }
    Framework g = normalize_preorder(std::move(f));
    CHECK_THROWS_AS(check_enumeration_guardrail(g), std::runtime_error);
    setenv("ABA_MAX_AB", "5", 1);
    CHECK_NOTHROW(check_enumeration_guardrail(g));
    unsetenv("ABA_MAX_AB");
}
