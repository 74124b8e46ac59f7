// Command-line front end: solve / translate / check / verify.
// Exit codes: 0 ok, 1 property violated or counterexample found, 2 usage/parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "aba/deduction.hpp"
#include "aba/semantics.hpp"
#include "aba/text.hpp"
#include "aba/translate.hpp"
#include "aba/verify.hpp"

using nlohmann::json;

namespace {

aba::DefeatKind parse_defeat(const std::string& s) {
    if (s == "f") return aba::DefeatKind::F;
    if (s == "d") return aba::DefeatKind::D;
    if (s == "r") return aba::DefeatKind::R;
    throw CLI::ValidationError("--defeat must be one of f, d, r");
}

aba::Lifting parse_lifting(const std::string& s) {
    if (s == "emin") return aba::Lifting::ExistsMin;
    if (s == "amin") return aba::Lifting::ForallMin;
    if (s == "aminbar") return aba::Lifting::ForallMinBar;
    throw CLI::ValidationError("--lifting must be one of emin, amin, aminbar");
}

aba::SemanticsKind parse_semantics(const std::string& s) {
    if (s == "cf") return aba::SemanticsKind::ConflictFree;
    if (s == "naive") return aba::SemanticsKind::Naive;
    if (s == "adm") return aba::SemanticsKind::Admissible;
    if (s == "complete") return aba::SemanticsKind::Complete;
    if (s == "preferred") return aba::SemanticsKind::Preferred;
    if (s == "grounded") return aba::SemanticsKind::Grounded;
    if (s == "stable") return aba::SemanticsKind::Stable;
    throw CLI::ValidationError("unknown --semantics value '" + s + "'");
}

aba::ClosureMode parse_closure(const aba::Framework& f, const std::string& s) {
    if (s == "full") return aba::ClosureMode::full();
    if (s == "empty") return aba::ClosureMode::empty();
    if (s.rfind("rules=", 0) == 0) {
        std::ifstream in(s.substr(6));
        if (!in) throw std::runtime_error("cannot open '" + s.substr(6) + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return aba::ClosureMode::custom(aba::parse_rule_subset(f, buf.str()));
    }
    throw CLI::ValidationError("--closure must be full, empty or rules=<file>");
}

json names_json(const std::vector<std::string>& names) { return json(names); }

int run_solve(const std::string& path, const std::string& defeat,
              const std::string& lifting, const std::string& semantics,
              const std::string& closure) {
    aba::Framework f = aba::parse_framework_file(path);
    aba::Query q;
    q.kind = parse_defeat(defeat);
    q.lifting = parse_lifting(lifting);
    q.mode = parse_closure(f, closure);
    aba::SupportFamily fam = aba::compute_supports(f);
    aba::ExtensionSet ext = aba::enumerate(f, fam, q, parse_semantics(semantics));
    json out;
    out["query"] = {{"defeat", defeat},
                    {"lifting", lifting},
                    {"semantics", semantics},
                    {"closure", closure}};
    out["extensions"] = json::array();
    for (aba::AsmSet m : ext.extensions) out["extensions"].push_back(f.asm_names(m));
    out["flat"] = aba::is_flat(f);
    out["total_order"] = aba::is_total_order(f);
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_translate(const std::string& path, const std::string& mode,
                  const std::string& lifting) {
    aba::Framework f = aba::parse_framework_file(path);
    aba::TranslationResult tr;
    if (mode == "d2f-total") tr = aba::translate_d2f_total(f);
    else if (mode == "d2f-minbar") tr = aba::translate_d2f_minbar(f);
    else if (mode == "conj") tr = aba::conjunction_closure(f);
    else if (mode == "r2d") tr = aba::translate_r2d(aba::conjunction_closure(f).target,
                                                    parse_lifting(lifting));
    else if (mode == "single-contrary") tr = aba::single_contrary_reduction(f);
    else throw CLI::ValidationError("unknown --mode value '" + mode + "'");
    std::cout << aba::serialize(tr.target);
    return 0;
}

int run_check(const std::string& path, const std::string& defeat,
              const std::string& lifting, const std::string& closure) {
    aba::Framework f = aba::parse_framework_file(path);
    json out;
    auto cw = aba::check_contraposition(f);
    out["contraposition"] = cw.empty();
    out["contraposition_witnesses"] = json::array();
    for (const auto& w : cw)
        out["contraposition_witnesses"].push_back(
            {{"delta", names_json(f.asm_names(w.delta))},
             {"blamed", f.sentence(f.asm_sentence(w.blamed)).name},
             {"dropped", f.sentence(f.asm_sentence(w.dropped)).name}});
    auto sw = aba::check_consistency(f, parse_defeat(defeat), parse_lifting(lifting),
                                     parse_closure(f, closure));
    out["consistency"] = sw.empty();
    out["consistency_witnesses"] = json::array();
    for (const auto& w : sw)
        out["consistency_witnesses"].push_back(
            {{"delta", names_json(f.asm_names(w.delta))},
             {"member", f.sentence(f.asm_sentence(w.member)).name}});
    std::cout << out.dump(2) << "\n";
    return cw.empty() && sw.empty() ? 0 : 1;
}

int run_verify(const std::string& theorem, int trials, std::uint64_t seed, bool raw) {
    aba::GeneratorConfig cfg;
    cfg.seed = seed;
    cfg.ensure_contraposition = !raw;
    aba::TheoremReport rep = aba::verify_theorem(theorem, cfg, trials);
    json out;
    out["theorem"] = rep.theorem;
    out["trials"] = rep.trials;
    out["counterexamples"] = json::array();
    for (const auto& c : rep.counterexamples)
        out["counterexamples"].push_back({{"instance", c.instance},
                                          {"framework", c.framework},
                                          {"clause", c.clause},
                                          {"delta", names_json(c.delta)}});
    std::cout << out.dump(2) << "\n";
    return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"prioritized assumption-based argumentation engine"};
    app.require_subcommand(1);

    std::string path, defeat = "d", lifting = "emin", semantics = "complete",
                closure = "full", mode, theorem;
    int trials = 500;
    std::uint64_t seed = 0;

    CLI::App* solve = app.add_subcommand("solve", "enumerate extensions");
    solve->add_option("file", path)->required();
    solve->add_option("--defeat", defeat);
    solve->add_option("--lifting", lifting);
    solve->add_option("--semantics", semantics);
    solve->add_option("--closure", closure);

    CLI::App* translate = app.add_subcommand("translate", "apply a framework translation");
    translate->add_option("file", path)->required();
    translate->add_option("--mode", mode)->required();
    translate->add_option("--lifting", lifting);

    CLI::App* check = app.add_subcommand("check", "contraposition + consistency postulate");
    check->add_option("file", path)->required();
    check->add_option("--defeat", defeat);
    check->add_option("--lifting", lifting);
    check->add_option("--closure", closure);

    CLI::App* verify = app.add_subcommand("verify", "randomized theorem sweep");
    verify->add_option("--theorem", theorem)->required();
    verify->add_option("--trials", trials);
    verify->add_option("--seed", seed);
    bool raw = false;
    verify->add_flag("--raw", raw,
                     "skip contraposition saturation (T1 then reports violations)");

    try {
        app.parse(argc, argv);
        if (solve->parsed()) return run_solve(path, defeat, lifting, semantics, closure);
        if (translate->parsed()) return run_translate(path, mode, lifting);
        if (check->parsed()) return run_check(path, defeat, lifting, closure);
        return run_verify(theorem, trials, seed, raw);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
