#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "irrlab/classify.hpp"
#include "irrlab/pattern.hpp"
#include "irrlab/ringspec.hpp"

namespace irrlab {

enum class PropId { P1, P2, P3, P4, P5, P6, P7, C1 };

inline const char* prop_name(PropId id) {
    switch (id) {
        case PropId::P1: return "P1";
        case PropId::P2: return "P2";
        case PropId::P3: return "P3";
        case PropId::P4: return "P4";
        case PropId::P5: return "P5";
        case PropId::P6: return "P6";
        case PropId::P7: return "P7";
        case PropId::C1: return "C1";
    }
    return "?";
}

inline std::vector<PropId> all_props() {
    return {PropId::P1, PropId::P2, PropId::P3, PropId::P4,
            PropId::P5, PropId::P6, PropId::P7, PropId::C1};
}

/// Parse a comma-separated proposition list such as "P1,P2,C1".
inline std::vector<PropId> parse_prop_list(const std::string& text) {
    std::vector<PropId> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        bool found = false;
        for (PropId id : all_props())
            if (tok == prop_name(id)) {
                out.push_back(id);
                found = true;
            }
        if (!found) throw usage_error("unknown proposition id: " + tok);
    }
    if (out.empty()) throw usage_error("empty proposition list");
    return out;
}

/// Report-mode propositions surface findings without failing the run.
inline bool is_report_mode(PropId id) {
    return id == PropId::P6 || id == PropId::P7;
}

struct PropWitness {
    std::string element;
    ClassificationRecord record;
};

struct PropositionReport {
    std::string id;
    std::string ring;  // spec text
    std::string mode;  // "assert" | "report"
    std::string verdict;  // "holds" | "counterexamples found" | "vacuous"
    std::vector<PropWitness> witnesses;
    std::optional<std::string> restricted_verdict;  // P6/P7 only
};

struct RingInfo {
    std::string spec;
    int order = 0;
    bool local = false;
    bool harmless_only = false;
    std::vector<std::string> units, zero_divisors, nilradical, jacobson,
        one_minus_units;
};

struct FullReport {
    std::vector<RingInfo> rings;
    std::vector<PropositionReport> propositions;
    int exit_code = 0;
};

namespace detail {

/// Factor-coordinate view of a product ring, built from its spec.
struct ProductView {
    std::vector<FiniteRing> factors;
    std::vector<DerivedSets> factor_sets;
    std::vector<std::vector<ClassificationRecord>> factor_records;

    explicit ProductView(const RingSpec& spec) {
        for (const auto& c : spec.children) {
            factors.push_back(build_ring(c));
            factor_sets.push_back(derive_sets(factors.back()));
            factor_records.push_back(
                classify_ring(factors.back(), factor_sets.back()));
        }
    }

    std::vector<int> decode(int idx) const {
        std::vector<int> out(factors.size());
        for (size_t i = 0; i < factors.size(); ++i) {
            out[i] = idx % factors[i].order;
            idx /= factors[i].order;
        }
        return out;
    }

    bool all_factors_harmless() const {
        for (size_t i = 0; i < factors.size(); ++i)
            if (!has_only_harmless_zds(factors[i], factor_sets[i])) return false;
        return true;
    }

    /// Whether every factor satisfies the three-way equivalence on its own
    /// nonzero non-units.
    bool all_factors_equivalent() const {
        for (size_t i = 0; i < factors.size(); ++i)
            for (const auto& c : factor_records[i]) {
                if (c.is_zero || c.is_unit) continue;
                if (c.irr != c.b_irr || c.b_irr != c.f_irr) return false;
            }
        return true;
    }
};

inline void finish_verdict(PropositionReport& rep) {
    rep.verdict = rep.witnesses.empty() ? "holds" : "counterexamples found";
}

}  // namespace detail

/**
 * Check one proposition on one ring. The spec is needed alongside the ring
 * because P5-P7 quantify over product coordinates.
 *
 * Verdicts follow each proposition's stated hypotheses: P3/P4/C1 are
 * "vacuous" off harmless rings, P6 off products of harmless rings, P7 off
 * products of rings satisfying the equivalence. P5-P7 on a non-product spec
 * is a usage error.
 */
inline PropositionReport check_proposition(
    PropId id, const RingSpec& spec, const FiniteRing& R, const DerivedSets& D,
    const std::vector<ClassificationRecord>& records) {
    PropositionReport rep;
    rep.id = prop_name(id);
    rep.ring = print_ring_spec(spec);
    rep.mode = is_report_mode(id) ? "report" : "assert";

    auto witness = [&](const ClassificationRecord& c) {
        rep.witnesses.push_back({R.label(c.element), c});
    };

    switch (id) {
        case PropId::P1:  // irreducible => B-irreducible, nonzero non-units
            for (const auto& c : records) {
                if (c.is_zero || c.is_unit) continue;
                if (c.irr && !c.b_irr) witness(c);
            }
            detail::finish_verdict(rep);
            return rep;
        case PropId::P2:  // B-irreducible => F-irreducible, all elements
            for (const auto& c : records)
                if (c.b_irr && !c.f_irr) witness(c);
            detail::finish_verdict(rep);
            return rep;
        case PropId::P3:  // harmless rings: B-irreducible => irreducible
            if (!has_only_harmless_zds(R, D)) {
                rep.verdict = "vacuous";
                return rep;
            }
            for (const auto& c : records)
                if (c.b_irr && !c.irr) witness(c);
            detail::finish_verdict(rep);
            return rep;
        case PropId::P4:  // harmless rings: nonzero F-irreducible => B-irreducible
            if (!has_only_harmless_zds(R, D)) {
                rep.verdict = "vacuous";
                return rep;
            }
            for (const auto& c : records) {
                if (c.is_zero) continue;
                if (c.f_irr && !c.b_irr) witness(c);
            }
            detail::finish_verdict(rep);
            return rep;
        case PropId::C1:  // harmless rings: three-way equivalence
            if (!has_only_harmless_zds(R, D)) {
                rep.verdict = "vacuous";
                return rep;
            }
            for (const auto& c : records) {
                if (c.is_zero || c.is_unit) continue;
                if (c.irr != c.b_irr || c.b_irr != c.f_irr) witness(c);
            }
            detail::finish_verdict(rep);
            return rep;
        case PropId::P5:
        case PropId::P6:
        case PropId::P7:
            break;
    }

    if (spec.kind != RingSpec::Kind::product)
        throw usage_error(std::string(prop_name(id)) +
                          " applies only to product specs, got " + rep.ring);
    detail::ProductView view(spec);

    if (id == PropId::P5) {
        // every nonzero non-unit F-irreducible tuple has exactly one
        // coordinate F-irreducible with all other coordinates units
        for (const auto& c : records) {
            if (c.is_zero || c.is_unit || !c.f_irr) continue;
            auto coords = view.decode(c.element);
            int matches = 0;
            for (size_t i = 0; i < coords.size(); ++i) {
                if (!view.factor_records[i][coords[i]].f_irr) continue;
                bool others_units = true;
                for (size_t j = 0; j < coords.size(); ++j)
                    if (j != i && !view.factor_sets[j].is_unit(coords[j]))
                        others_units = false;
                if (others_units) ++matches;
            }
            if (matches != 1) witness(c);
        }
        detail::finish_verdict(rep);
        return rep;
    }

    // P6 / P7: three-way equivalence on the product, plus the restricted
    // variant over tuples with every coordinate nonzero.
    const bool applicable = id == PropId::P6 ? view.all_factors_harmless()
                                             : view.all_factors_equivalent();
    if (!applicable) {
        rep.verdict = "vacuous";
        return rep;
    }
    bool restricted_holds = true;
    for (const auto& c : records) {
        if (c.is_zero || c.is_unit) continue;
        if (c.irr == c.b_irr && c.b_irr == c.f_irr) continue;
        witness(c);
        auto coords = view.decode(c.element);
        bool all_nonzero = true;
        for (size_t i = 0; i < coords.size(); ++i)
            if (coords[i] == view.factors[i].zero) all_nonzero = false;
        if (all_nonzero) restricted_holds = false;
    }
    detail::finish_verdict(rep);
    rep.restricted_verdict =
        restricted_holds ? "holds" : "counterexamples found";
    return rep;
}

inline PropositionReport check_proposition(PropId id, const RingSpec& spec) {
    FiniteRing R = build_ring(spec);
    DerivedSets D = derive_sets(R);
    return check_proposition(id, spec, R, D, classify_ring(R, D));
}

inline RingInfo summarize_ring(const RingSpec& spec, const FiniteRing& R,
                               const DerivedSets& D) {
    RingInfo info;
    info.spec = print_ring_spec(spec);
    info.order = R.order;
    info.local = is_local(R, D);
    info.harmless_only = has_only_harmless_zds(R, D);
    auto labels = [&](const std::vector<Elem>& es) {
        std::vector<std::string> out;
        out.reserve(es.size());
        for (Elem e : es) out.push_back(R.label(e));
        return out;
    };
    info.units = labels(D.units);
    info.zero_divisors = labels(D.zero_divisors);
    info.nilradical = labels(D.nilradical);
    info.jacobson = labels(D.jacobson);
    info.one_minus_units = labels(D.one_minus_units);
    return info;
}

/**
 * Run every applicable requested proposition on every catalog ring.
 *
 * P5-P7 are skipped (no row) on non-product specs; unmet harmless or
 * equivalence preconditions yield "vacuous" rows. Each ring's tables are
 * validated first; a bad table throws invariant_error. Exit code 1 iff an
 * assert-mode proposition found a counterexample; report-mode findings do
 * not affect it.
 */
inline FullReport run_catalog(const std::vector<RingSpec>& catalog,
                              const std::vector<PropId>& props) {
    FullReport report;
    for (const auto& spec : catalog) {
        FiniteRing R;
        try {
            R = build_ring(spec);
        } catch (const construction_error& e) {
            throw construction_error("catalog entry " + print_ring_spec(spec) +
                                     ": " + e.what());
        }
        validate_ring(R);
        DerivedSets D = derive_sets(R);
        auto records = classify_ring(R, D);
        report.rings.push_back(summarize_ring(spec, R, D));
        for (PropId id : props) {
            if ((id == PropId::P5 || id == PropId::P6 || id == PropId::P7) &&
                spec.kind != RingSpec::Kind::product)
                continue;
            PropositionReport pr = check_proposition(id, spec, R, D, records);
            if (pr.mode == "assert" && pr.verdict == "counterexamples found")
                report.exit_code = 1;
            report.propositions.push_back(std::move(pr));
        }
    }
    return report;
}

}  // namespace irrlab
