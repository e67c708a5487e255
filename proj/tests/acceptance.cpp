// Acceptance suite: runs every gate criterion and prints one PASS/FAIL line
// per criterion. Exit status is the number of failed criteria.
//
// argv[1] (optional): path to the irrlab CLI binary; the determinism and
// exit-status criteria run against the real process when it is given.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "irrlab/classify.hpp"
#include "irrlab/pattern.hpp"
#include "irrlab/poly_slice.hpp"
#include "irrlab/report.hpp"
#include "irrlab/ring.hpp"
#include "irrlab/ringspec.hpp"
#include "irrlab/verify.hpp"

using namespace irrlab;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void criterion(const std::string& name, bool pass, const std::string& note = "") {
    std::cout << (pass ? "PASS" : "FAIL") << "  " << name;
    if (!note.empty()) std::cout << "  (" << note << ")";
    std::cout << "\n";
    if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string run_process(const std::string& cmd, int& exit_code) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return out;
    }
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

// Z_6 example: 3 is B-irreducible but not irreducible. Under 1 s.
void criterion_z6_example() {
    auto t0 = Clock::now();
    FiniteRing z6 = make_cyclic(6);
    ClassificationRecord c = classify_element(z6, 3);
    double dt = seconds_since(t0);
    criterion("z6-example: classify(Z_6,3) has b_irr and not irr",
              c.b_irr && !c.irr && dt < 1.0,
              "t=" + std::to_string(dt) + "s");
}

// P1 and P2 hold with zero counterexamples across the builtin catalog.
void criterion_p1_p2() {
    auto t0 = Clock::now();
    FullReport report = run_catalog(builtin_catalog(), {PropId::P1, PropId::P2});
    bool ok = report.exit_code == 0;
    size_t rows = 0;
    for (const auto& p : report.propositions) {
        ++rows;
        if (p.verdict != "holds" || !p.witnesses.empty()) ok = false;
    }
    ok = ok && rows == 2 * builtin_catalog().size();
    double dt = seconds_since(t0);
    criterion("p1-p2: irr=>b_irr and b_irr=>f_irr across the catalog",
              ok && dt < 30.0, "t=" + std::to_string(dt) + "s");
}

// C1 holds on every harmless catalog ring, and harmlessness is true for
// exactly the prime-power Z_n plus the three quotients.
void criterion_c1_harmless() {
    std::set<std::string> expected_harmless;
    for (int n : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29})
        expected_harmless.insert("zn:" + std::to_string(n));
    expected_harmless.insert("quot(zn:2,[0,0,1])");
    expected_harmless.insert("quot(zn:2,[1,1,1])");
    expected_harmless.insert("quot(zn:4,[0,0,1])");

    bool ok = true;
    std::string note;
    for (const auto& spec : builtin_catalog()) {
        FiniteRing R = build_ring(spec);
        DerivedSets D = derive_sets(R);
        std::string name = print_ring_spec(spec);
        bool harmless = has_only_harmless_zds(R, D);
        if (harmless != (expected_harmless.count(name) > 0)) {
            ok = false;
            note = "harmless mismatch at " + name;
            break;
        }
        if (harmless) {
            auto rep = check_proposition(PropId::C1, spec, R, D,
                                         classify_ring(R, D));
            if (rep.verdict != "holds") {
                ok = false;
                note = "C1 fails on " + name;
                break;
            }
        }
    }
    // the named non-harmless members each have a recorded witness
    for (const char* text : {"zn:6", "zn:10", "zn:12", "zn:15"}) {
        if (!ok) break;
        FiniteRing R = build_ring(parse_ring_spec(text));
        if (find_counterexamples(R, "zd and not harmless").empty()) {
            ok = false;
            note = std::string("no witness recorded for ") + text;
        }
    }
    criterion("c1-harmless: equivalence on exactly the harmless catalog rings",
              ok, note);
}

// P5: every nonzero non-unit F-irreducible tuple in a catalog product has
// exactly one F-irreducible coordinate with all others units.
void criterion_p5() {
    bool ok = true;
    std::string note;
    for (const auto& spec : builtin_catalog()) {
        if (spec.kind != RingSpec::Kind::product) continue;
        auto rep = check_proposition(PropId::P5, spec);
        if (rep.verdict != "holds") {
            ok = false;
            note = "P5 fails on " + print_ring_spec(spec);
            break;
        }
    }
    criterion("p5: product F-irreducibles have the one-coordinate pattern", ok,
              note);
}

// P6/P7 finding on prod(zn:2,zn:2): witnesses (1,0), (0,1); restricted holds.
void criterion_p6_p7_finding(const std::string& cli) {
    RingSpec spec = parse_ring_spec("prod(zn:2,zn:2)");
    bool ok = true;
    std::string note;
    for (PropId id : {PropId::P6, PropId::P7}) {
        auto rep = check_proposition(id, spec);
        if (rep.verdict != "counterexamples found" ||
            rep.witnesses.size() != 2 || rep.witnesses[0].element != "(1,0)" ||
            rep.witnesses[1].element != "(0,1)" ||
            rep.restricted_verdict != "holds") {
            ok = false;
            note = std::string(prop_name(id)) + " report mismatch";
        }
        for (const auto& w : rep.witnesses)
            if (!w.record.f_irr || !w.record.b_irr || w.record.irr) {
                ok = false;
                note = "witness flags wrong";
            }
    }
    if (ok && !cli.empty()) {
        int code = -1;
        run_process(cli + " verify --builtin --json", code);
        if (code != 0) {
            ok = false;
            note = "verify run exited " + std::to_string(code);
        }
    }
    criterion("p6-p7: prod(zn:2,zn:2) findings reported, run exits 0", ok, note);
}

// Binary F-irreducibility equals the refinement oracle on all rings of
// order <= 12 in the catalog.
void criterion_oracle() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string note;
    for (const auto& spec : builtin_catalog()) {
        FiniteRing R = build_ring(spec);
        if (R.order > 12) continue;
        DerivedSets D = derive_sets(R);
        for (int r = 0; r < R.order && ok; ++r) {
            if (D.is_unit(r)) continue;
            if (is_f_irreducible_refinement(R, r, 4) !=
                is_f_irreducible(R, D, r)) {
                ok = false;
                note = "mismatch at " + R.spec + " element " + R.label(r);
            }
        }
        if (!ok) break;
    }
    double dt = seconds_since(t0);
    criterion("oracle: refinement oracle matches binary F-irreducibility",
              ok && dt < 30.0, note.empty() ? "t=" + std::to_string(dt) + "s"
                                            : note);
}

// Slice check over Z_4, d=2: exactly 7 zero divisors, all harmless, and the
// three slices coincide.
void criterion_slice() {
    auto t0 = Clock::now();
    SliceReport rep = bounded_slice_check(make_cyclic(4), 2);
    double dt = seconds_since(t0);
    bool ok = rep.zero_divisors == 7 && rep.harmless == 7 &&
              rep.harmless_pass && rep.z_equals_t_pass &&
              rep.z_equals_nil_pass && rep.jacobson_unit_pass && dt < 5.0;
    criterion("slice: Z_4[x] degree<=2 slice identities", ok,
              "t=" + std::to_string(dt) + "s");
}

// The classification flag multiset of Z_6 equals that of Z_2 x Z_3.
void criterion_crt() {
    auto multiset = [](const FiniteRing& R) {
        std::map<std::array<bool, 7>, int> m;
        for (const auto& c : classify_ring(R)) m[c.flags()]++;
        return m;
    };
    FiniteRing z6 = build_ring(parse_ring_spec("zn:6"));
    FiniteRing p = build_ring(parse_ring_spec("prod(zn:2,zn:3)"));
    criterion("crt: flag multiset of zn:6 equals prod(zn:2,zn:3)",
              multiset(z6) == multiset(p));
}

// Two verify runs produce byte-identical JSON, under 60 s total.
void criterion_determinism(const std::string& cli) {
    auto t0 = Clock::now();
    bool ok;
    std::string note;
    if (!cli.empty()) {
        int c1 = -1, c2 = -1;
        std::string a = run_process(cli + " verify --builtin --json", c1);
        std::string b = run_process(cli + " verify --builtin --json", c2);
        ok = !a.empty() && a == b && c1 == 0 && c2 == 0;
        note = "via CLI";
    } else {
        auto props = parse_prop_list("P1,P2,P3,P4,P5,P6,P7,C1");
        std::string a = report_to_json(run_catalog(builtin_catalog(), props)).dump(2);
        std::string b = report_to_json(run_catalog(builtin_catalog(), props)).dump(2);
        ok = a == b;
        note = "in-process";
    }
    double dt = seconds_since(t0);
    criterion("determinism: verify --builtin --json is byte-identical",
              ok && dt < 60.0, note + ", t=" + std::to_string(dt) + "s");
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";
    criterion_z6_example();
    criterion_p1_p2();
    criterion_c1_harmless();
    criterion_p5();
    criterion_p6_p7_finding(cli);
    criterion_oracle();
    criterion_slice();
    criterion_crt();
    criterion_determinism(cli);
    if (g_failures)
        std::cout << g_failures << " criterion(s) failed\n";
    else
        std::cout << "all acceptance criteria passed\n";
    return g_failures;
}
