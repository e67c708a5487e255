#pragma once

#include <iomanip>
#include <sstream>
#include <string>

#include <json.hpp>

#include "irrlab/ideal.hpp"
#include "irrlab/poly_slice.hpp"
#include "irrlab/verify.hpp"

namespace irrlab {

// All emitters are deterministic: no timestamps, keys sorted (nlohmann
// objects are key-ordered maps), rows in element/catalog order.

inline nlohmann::json flags_to_json(const ClassificationRecord& c) {
    nlohmann::json j = nlohmann::json::array();
    for (bool f : c.flags()) j.push_back(f);
    return j;
}

inline nlohmann::json record_to_json(const FiniteRing& R,
                                     const ClassificationRecord& c) {
    return {{"element", R.label(c.element)},
            {"zero", c.is_zero},
            {"unit", c.is_unit},
            {"zd", c.is_zero_divisor},
            {"harmless", c.is_harmless_zd},
            {"irr", c.irr},
            {"b_irr", c.b_irr},
            {"f_irr", c.f_irr}};
}

inline nlohmann::json ring_info_to_json(const RingInfo& info) {
    return {{"spec", info.spec},
            {"order", info.order},
            {"local", info.local},
            {"harmless_only", info.harmless_only},
            {"units", info.units},
            {"zero_divisors", info.zero_divisors},
            {"nilradical", info.nilradical},
            {"jacobson", info.jacobson},
            {"one_minus_units", info.one_minus_units}};
}

inline nlohmann::json proposition_to_json(const PropositionReport& p) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& w : p.witnesses)
        witnesses.push_back(
            {{"element", w.element}, {"flags", flags_to_json(w.record)}});
    nlohmann::json j = {{"id", p.id},
                        {"ring", p.ring},
                        {"mode", p.mode},
                        {"verdict", p.verdict},
                        {"witnesses", witnesses}};
    if (p.restricted_verdict) j["restricted_verdict"] = *p.restricted_verdict;
    return j;
}

inline nlohmann::json report_to_json(const FullReport& report) {
    nlohmann::json rings = nlohmann::json::array();
    for (const auto& r : report.rings) rings.push_back(ring_info_to_json(r));
    nlohmann::json props = nlohmann::json::array();
    for (const auto& p : report.propositions)
        props.push_back(proposition_to_json(p));
    return {{"propositions", props}, {"rings", rings}};
}

namespace detail {

inline std::string pad(const std::string& s, size_t w) {
    return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

inline std::string join(const std::vector<std::string>& parts,
                        const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

inline std::string flag_string(const ClassificationRecord& c) {
    std::string out;
    for (bool f : c.flags()) out += f ? '1' : '0';
    return out;
}

}  // namespace detail

/// Column header matching the fixed flag order.
inline constexpr const char* kFlagHeader = "zero unit zd harmless irr b_irr f_irr";

inline std::string classification_to_text(
    const FiniteRing& R, const std::vector<ClassificationRecord>& records) {
    size_t w = 7;
    for (const auto& c : records) w = std::max(w, R.label(c.element).size() + 1);
    std::ostringstream out;
    out << detail::pad("element", w) << " " << kFlagHeader << "\n";
    for (const auto& c : records) {
        out << detail::pad(R.label(c.element), w);
        const char* names[7] = {"zero", "unit", "zd", "harmless", "irr",
                                "b_irr", "f_irr"};
        auto flags = c.flags();
        for (int i = 0; i < 7; ++i) {
            std::string cell = flags[i] ? "1" : "0";
            out << " " << detail::pad(cell, std::string(names[i]).size());
        }
        out << "\n";
    }
    return out.str();
}

inline std::string report_to_text(const FullReport& report) {
    std::ostringstream out;
    out << "rings:\n";
    out << "  " << detail::pad("spec", 24) << detail::pad("order", 7)
        << detail::pad("local", 7) << detail::pad("harmless", 10)
        << detail::pad("|U|", 5) << detail::pad("|Z|", 5) << "\n";
    for (const auto& r : report.rings) {
        out << "  " << detail::pad(r.spec, 24)
            << detail::pad(std::to_string(r.order), 7)
            << detail::pad(r.local ? "yes" : "no", 7)
            << detail::pad(r.harmless_only ? "yes" : "no", 10)
            << detail::pad(std::to_string(r.units.size()), 5)
            << detail::pad(std::to_string(r.zero_divisors.size()), 5) << "\n";
    }
    out << "propositions:\n";
    out << "  " << detail::pad("id", 4) << detail::pad("ring", 24)
        << detail::pad("mode", 8) << detail::pad("verdict", 24)
        << detail::pad("restricted", 12) << "witnesses\n";
    for (const auto& p : report.propositions) {
        std::vector<std::string> ws;
        for (const auto& w : p.witnesses)
            ws.push_back(w.element + "[" + detail::flag_string(w.record) + "]");
        out << "  " << detail::pad(p.id, 4) << detail::pad(p.ring, 24)
            << detail::pad(p.mode, 8) << detail::pad(p.verdict, 24)
            << detail::pad(p.restricted_verdict.value_or("-"), 12)
            << detail::join(ws, " ") << "\n";
    }
    return out.str();
}

inline nlohmann::json poset_to_json(const FiniteRing& R,
                                    const PrincipalPoset& poset) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& I : poset.ideals) {
        std::vector<std::string> elems;
        for (Elem e : I.elements) elems.push_back(R.label(e));
        nodes.push_back(
            {{"generator", R.label(I.generator)}, {"elements", elems}});
    }
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [lo, hi] : poset.cover_edges)
        edges.push_back({lo, hi});
    return {{"ideals", nodes}, {"cover_edges", edges}};
}

inline std::string poset_to_text(const FiniteRing& R,
                                 const PrincipalPoset& poset) {
    std::ostringstream out;
    for (size_t i = 0; i < poset.ideals.size(); ++i) {
        const auto& I = poset.ideals[i];
        std::vector<std::string> elems;
        for (Elem e : I.elements) elems.push_back(R.label(e));
        out << "  [" << i << "] (" << R.label(I.generator) << ") = {"
            << detail::join(elems, ",") << "}\n";
    }
    out << "  cover edges:";
    for (const auto& [lo, hi] : poset.cover_edges)
        out << " " << lo << "<" << hi;
    out << "\n";
    return out.str();
}

inline nlohmann::json slice_to_json(const SliceReport& rep) {
    return {{"base", rep.base_spec},
            {"degree_bound", rep.degree_bound},
            {"maximal_ideal_generator", rep.t_label},
            {"examined", rep.examined},
            {"zero_divisors", rep.zero_divisors},
            {"harmless", rep.harmless},
            {"jacobson_pairs_checked", rep.jacobson_pairs_checked},
            {"jacobson_pairs_sampled", rep.jacobson_pairs_sampled},
            {"harmless_pass", rep.harmless_pass},
            {"z_equals_t_pass", rep.z_equals_t_pass},
            {"z_equals_nil_pass", rep.z_equals_nil_pass},
            {"jacobson_unit_pass", rep.jacobson_unit_pass},
            {"harmless_witnesses", rep.harmless_witnesses},
            {"z_equals_t_witnesses", rep.z_equals_t_witnesses},
            {"z_equals_nil_witnesses", rep.z_equals_nil_witnesses},
            {"jacobson_unit_witnesses", rep.jacobson_unit_witnesses}};
}

inline std::string slice_to_text(const SliceReport& rep) {
    std::ostringstream out;
    out << "base: " << rep.base_spec << "  degree <= " << rep.degree_bound
        << "  maximal ideal (" << rep.t_label << ")\n";
    out << "examined: " << rep.examined
        << "  zero divisors: " << rep.zero_divisors
        << "  harmless: " << rep.harmless << "\n";
    auto line = [&](const char* name, bool pass,
                    const std::vector<std::string>& ws) {
        out << "  " << detail::pad(name, 22) << (pass ? "pass" : "FAIL");
        if (!ws.empty()) out << "  witnesses: " << detail::join(ws, "; ");
        out << "\n";
    };
    line("all zd harmless", rep.harmless_pass, rep.harmless_witnesses);
    line("Z-slice = t-slice", rep.z_equals_t_pass, rep.z_equals_t_witnesses);
    line("Z-slice = Nil-slice", rep.z_equals_nil_pass,
         rep.z_equals_nil_witnesses);
    out << "  " << detail::pad("1-f*g unit (J-slice)", 22)
        << (rep.jacobson_unit_pass ? "pass" : "FAIL") << "  ("
        << rep.jacobson_pairs_checked << " pairs"
        << (rep.jacobson_pairs_sampled ? ", sampled" : "") << ")";
    if (!rep.jacobson_unit_witnesses.empty())
        out << "  witnesses: " << detail::join(rep.jacobson_unit_witnesses, "; ");
    out << "\n";
    return out.str();
}

}  // namespace irrlab
