// irrlab — finite commutative ring laboratory.
//
// Subcommands: info, classify, verify, search, polyslice. All output is
// deterministic; --json switches every subcommand to JSON.
//
// Exit codes: 0 success (report-mode findings included), 1 assert-mode
// counterexample from `verify`, 2 parse/usage/construction error, 3 internal
// invariant violation (ring tables fail an axiom).

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "irrlab/classify.hpp"
#include "irrlab/ideal.hpp"
#include "irrlab/pattern.hpp"
#include "irrlab/poly_slice.hpp"
#include "irrlab/report.hpp"
#include "irrlab/ring.hpp"
#include "irrlab/ringspec.hpp"
#include "irrlab/verify.hpp"

namespace {

using namespace irrlab;

struct Options {
    bool json = false;
    std::string spec_text;
    std::string element;
    std::string props = "P1,P2,P3,P4,P5,P6,P7,C1";
    std::string catalog_path;
    bool builtin = true;
    std::string pattern;
    std::string base;
    int degree = 1;
};

FiniteRing build_checked(const std::string& text,
                         const std::string& quotient_var = "x") {
    FiniteRing R = build_ring(parse_ring_spec(text), quotient_var);
    validate_ring(R);
    return R;
}

int cmd_info(const Options& opt) {
    RingSpec spec = parse_ring_spec(opt.spec_text);
    FiniteRing R = build_ring(spec);
    validate_ring(R);
    DerivedSets D = derive_sets(R);
    RingInfo info = summarize_ring(spec, R, D);
    PrincipalPoset poset = principal_poset(R);
    if (opt.json) {
        nlohmann::json j = {{"ring", ring_info_to_json(info)},
                            {"poset", poset_to_json(R, poset)}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "spec: " << info.spec << "\norder: " << info.order
              << "\nlocal: " << (info.local ? "yes" : "no")
              << "\nharmless zero divisors only: "
              << (info.harmless_only ? "yes" : "no") << "\n";
    auto set_line = [](const char* name, const std::vector<std::string>& s) {
        std::cout << name << ": {" << detail::join(s, ",") << "}\n";
    };
    set_line("units", info.units);
    set_line("zero divisors", info.zero_divisors);
    set_line("nilradical", info.nilradical);
    set_line("jacobson", info.jacobson);
    set_line("1-U(R)", info.one_minus_units);
    std::cout << "principal ideal poset:\n" << poset_to_text(R, poset);
    return 0;
}

int cmd_classify(const Options& opt) {
    FiniteRing R = build_checked(opt.spec_text);
    auto records = classify_ring(R);
    if (!opt.element.empty()) {
        Elem e = R.find_label(opt.element);
        if (e < 0)
            throw usage_error("no element labeled \"" + opt.element + "\" in " +
                              R.spec);
        records = {records[e]};
    }
    if (opt.json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& c : records) rows.push_back(record_to_json(R, c));
        nlohmann::json j = {{"ring", R.spec}, {"records", rows}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << classification_to_text(R, records);
    }
    return 0;
}

int cmd_search(const Options& opt) {
    FiniteRing R = build_checked(opt.spec_text);
    auto records = classify_ring(R);
    FlagPattern pat = FlagPattern::parse(opt.pattern);
    auto matches = find_counterexamples(records, pat);
    if (opt.json) {
        nlohmann::json rows = nlohmann::json::array();
        for (Elem e : matches) rows.push_back(record_to_json(R, records[e]));
        nlohmann::json j = {{"ring", R.spec},
                            {"pattern", opt.pattern},
                            {"matches", rows}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "ring: " << R.spec << "\npattern: " << opt.pattern
                  << "\nmatches: " << matches.size() << "\n";
        std::vector<ClassificationRecord> rows;
        for (Elem e : matches) rows.push_back(records[e]);
        if (!rows.empty()) std::cout << classification_to_text(R, rows);
    }
    return 0;
}

int cmd_verify(const Options& opt) {
    std::vector<RingSpec> catalog = opt.catalog_path.empty()
                                        ? builtin_catalog()
                                        : load_catalog_file(opt.catalog_path);
    std::vector<PropId> props = parse_prop_list(opt.props);
    FullReport report = run_catalog(catalog, props);
    if (opt.json)
        std::cout << report_to_json(report).dump(2) << "\n";
    else
        std::cout << report_to_text(report);
    return report.exit_code;
}

int cmd_polyslice(const Options& opt) {
    // base quotient rings are built in the variable y so slice polynomials
    // in x stay readable
    FiniteRing A = build_checked(opt.base, "y");
    SliceReport rep = bounded_slice_check(A, opt.degree);
    if (opt.json)
        std::cout << slice_to_json(rep).dump(2) << "\n";
    else
        std::cout << slice_to_text(rep);
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite commutative ring laboratory"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "emit JSON instead of text");

    auto* info = app.add_subcommand("info", "ring summary and ideal poset");
    info->add_option("spec", opt.spec_text, "ring spec, e.g. zn:6")->required();

    auto* classify =
        app.add_subcommand("classify", "per-element classification flags");
    classify->add_option("spec", opt.spec_text)->required();
    classify->add_option("--element", opt.element, "restrict to one label");

    auto* verify =
        app.add_subcommand("verify", "run the proposition suite on a catalog");
    verify->add_option("--props", opt.props, "comma-separated ids (P1..P7,C1)");
    auto* cat = verify->add_option("--catalog", opt.catalog_path,
                                   "catalog file, one spec per line");
    verify->add_flag("--builtin", opt.builtin, "use the builtin catalog")
        ->excludes(cat);

    auto* search =
        app.add_subcommand("search", "find elements matching a flag pattern");
    search->add_option("--pattern", opt.pattern, "e.g. \"b_irr and not irr\"")
        ->required();
    search->add_option("spec", opt.spec_text)->required();

    auto* polyslice = app.add_subcommand(
        "polyslice", "bounded-degree polynomial slice checks over a local base");
    polyslice->add_option("--base", opt.base, "base ring spec")->required();
    polyslice->add_option("--degree", opt.degree, "degree bound d >= 1")
        ->required();

    // accept --json before or after the subcommand name
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*info) return cmd_info(opt);
        if (*classify) return cmd_classify(opt);
        if (*verify) return cmd_verify(opt);
        if (*search) return cmd_search(opt);
        if (*polyslice) return cmd_polyslice(opt);
    } catch (const invariant_error& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const construction_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
