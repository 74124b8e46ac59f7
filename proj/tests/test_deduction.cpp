#include <algorithm>

#include "aba/deduction.hpp"
#include "aba/text.hpp"
#include "aba/verify.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace aba;

namespace {

// Ab = {p,q,r}, rules r <- p, nq <- p, nr <- q.
Framework chain_framework() {
    return parse_framework(
        "assumption p. assumption q. assumption r.\n"
        "contrary q : nq. contrary r : nr.\n"
        "rule r <- p . rule nq <- p . rule nr <- q .\n");
}

}  // namespace

TEST_CASE("supports are exact assumption sets of deduction trees") {
    Framework f = chain_framework();
    SupportFamily fam = compute_supports(f);
    SentenceId r = *f.find_sentence("r");
    // r is derivable as itself or via p, and the assumption head counts
    std::vector<AsmSet> expect = {AsmSet{1} << 2, (AsmSet{1} << 0) | (AsmSet{1} << 2)};
    std::sort(expect.begin(), expect.end());
    CHECK(fam.supports(r) == expect);
}

TEST_CASE("support derivability is non-monotonic") {
    Framework f = chain_framework();
    SupportFamily fam = compute_supports(f);
    SentenceId r = *f.find_sentence("r");
    AsmSet p = AsmSet{1} << 0;
    CHECK_FALSE(derives(fam, p, r));                  // {p} alone: the tree contains r too
    CHECK_FALSE(derives(fam, f.full_asm_set(), r));   // and {p,q,r} is not an exact support
    CHECK(derives(fam, p, *f.find_sentence("nq")));
    CHECK(derives(fam, p, *f.find_sentence("p")));    // assumptions support themselves
    CHECK_FALSE(derives(fam, 0, *f.find_sentence("p")));
}

TEST_CASE("strict rules give empty supports") {
    Framework f = parse_framework("assumption a. rule t <- . rule u <- t, a .");
    SupportFamily fam = compute_supports(f);
    CHECK(fam.contains(*f.find_sentence("t"), 0));
    CHECK(fam.supports(*f.find_sentence("u")) == std::vector<AsmSet>{AsmSet{1}});
}

TEST_CASE("closure respects the rule subset") {
    Framework f = chain_framework();
    AsmSet p = AsmSet{1} << 0;
    std::vector<char> full = closure(f, ClosureMode::full(), p);
    CHECK(full[*f.find_sentence("r")]);
    CHECK(full[*f.find_sentence("nq")]);
    std::vector<char> none = closure(f, ClosureMode::empty(), p);
    CHECK(none[*f.find_sentence("p")]);
    CHECK_FALSE(none[*f.find_sentence("r")]);
    std::vector<char> in(f.num_rules(), 0);
    in[1] = 1;   // nq <- p only
    std::vector<char> some = closure(f, ClosureMode::custom(in), p);
    CHECK(some[*f.find_sentence("nq")]);
    CHECK_FALSE(some[*f.find_sentence("r")]);
}

TEST_CASE("closedness projects to assumptions unless strict") {
    Framework f = chain_framework();
    AsmSet p = AsmSet{1} << 0, r = AsmSet{1} << 2;
    CHECK_FALSE(is_closed(f, ClosureMode::full(), p));         // p derives the assumption r
    CHECK(is_closed(f, ClosureMode::full(), p | r));           // nq stays outside Ab
    CHECK_FALSE(is_closed(f, ClosureMode::full(), p | r, true));
    CHECK(is_closed(f, ClosureMode::empty(), p));
    CHECK(is_closed(f, ClosureMode::full(), 0));
}

TEST_CASE("closed_subsets lists exactly the closed subsets") {
    Framework f = chain_framework();
    AsmSet all = f.full_asm_set();
    std::vector<AsmSet> got = closed_subsets(f, ClosureMode::full(), all);
    std::vector<AsmSet> expect;
    for (AsmSet m = 0; m <= all; ++m)
        if (is_closed(f, ClosureMode::full(), m)) expect.push_back(m);
    std::sort(got.begin(), got.end());
    std::sort(expect.begin(), expect.end());
    CHECK(got == expect);
    CHECK(std::find(got.begin(), got.end(), AsmSet{1}) == got.end());
}

TEST_CASE("supports agree with the tree-enumeration reference") {
    GeneratorConfig cfg;
    cfg.max_assumptions = 5;
    cfg.seed = 11;
    for (int t = 0; t < 40; ++t) {
        Framework f = generate_framework(cfg, t);
        SupportFamily fam = compute_supports(f);
        auto ref = oracle::supports(f);
        for (SentenceId s = 0; s < f.num_sentences(); ++s) {
            INFO("instance ", t, " sentence ", f.sentence(s).name);
            CHECK(fam.supports(s) == ref[s]);
        }
    }
}
