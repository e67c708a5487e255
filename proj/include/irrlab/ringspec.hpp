#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "irrlab/ring.hpp"

namespace irrlab {

/**
 * Parse tree of the ring-construction DSL:
 *
 *   spec := "zn:" NAT
 *         | "prod(" spec ("," spec)+ ")"
 *         | "quot(zn:" NAT ",[" NAT ("," NAT)* "])"
 *
 * Quotient coefficient lists are little-endian, stored reduced mod n, and
 * must end in a coefficient congruent to 1 (monic modulus).
 */
struct RingSpec {
    enum class Kind { cyclic, product, quotient };
    Kind kind = Kind::cyclic;
    int n = 0;                       // cyclic / quotient base modulus
    std::vector<RingSpec> children;  // product factors
    std::vector<int> coeffs;         // quotient modulus, little-endian

    friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

namespace detail {

class SpecParser {
public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    RingSpec parse() {
        RingSpec s = parse_spec();
        if (pos_ != text_.size()) fail("trailing input");
        return s;
    }

private:
    std::string_view text_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw usage_error("ring spec syntax error at position " +
                          std::to_string(pos_) + ": " + what + " in \"" +
                          std::string(text_) + "\"");
    }

    bool eat(std::string_view tok) {
        if (text_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view tok) {
        if (!eat(tok)) fail("expected \"" + std::string(tok) + "\"");
    }

    int parse_nat() {
        size_t start = pos_;
        long long v = 0;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1'000'000) fail("number too large");
            ++pos_;
        }
        if (pos_ == start) fail("expected a number");
        return static_cast<int>(v);
    }

    RingSpec parse_spec() {
        if (eat("zn:")) {
            RingSpec s;
            s.kind = RingSpec::Kind::cyclic;
            s.n = parse_nat();
            if (s.n < 2) fail("cyclic ring needs n >= 2");
            return s;
        }
        if (eat("prod(")) {
            RingSpec s;
            s.kind = RingSpec::Kind::product;
            s.children.push_back(parse_spec());
            expect(",");
            s.children.push_back(parse_spec());
            while (eat(",")) s.children.push_back(parse_spec());
            expect(")");
            return s;
        }
        if (eat("quot(zn:")) {
            RingSpec s;
            s.kind = RingSpec::Kind::quotient;
            s.n = parse_nat();
            if (s.n < 2) fail("quotient base needs n >= 2");
            expect(",[");
            s.coeffs.push_back(parse_nat());
            while (eat(",")) s.coeffs.push_back(parse_nat());
            expect("])");
            if (s.coeffs.size() < 2) fail("quotient modulus needs degree >= 1");
            for (auto& c : s.coeffs) c %= s.n;
            if (s.coeffs.back() != 1) fail("quotient modulus must be monic mod n");
            return s;
        }
        fail("expected zn:, prod( or quot(zn:");
    }
};

}  // namespace detail

inline RingSpec parse_ring_spec(std::string_view text) {
    return detail::SpecParser(text).parse();
}

inline std::string print_ring_spec(const RingSpec& s) {
    switch (s.kind) {
        case RingSpec::Kind::cyclic:
            return "zn:" + std::to_string(s.n);
        case RingSpec::Kind::product: {
            std::string out = "prod(";
            for (size_t i = 0; i < s.children.size(); ++i) {
                if (i) out += ",";
                out += print_ring_spec(s.children[i]);
            }
            return out + ")";
        }
        case RingSpec::Kind::quotient: {
            std::string out = "quot(zn:" + std::to_string(s.n) + ",[";
            for (size_t i = 0; i < s.coeffs.size(); ++i) {
                if (i) out += ",";
                out += std::to_string(s.coeffs[i]);
            }
            return out + "])";
        }
    }
    throw usage_error("corrupt ring spec");
}

inline FiniteRing build_ring(const RingSpec& s,
                             const std::string& quotient_var = "x") {
    switch (s.kind) {
        case RingSpec::Kind::cyclic:
            return make_cyclic(s.n);
        case RingSpec::Kind::product: {
            std::vector<FiniteRing> factors;
            factors.reserve(s.children.size());
            for (const auto& c : s.children) factors.push_back(build_ring(c));
            return make_product(factors);
        }
        case RingSpec::Kind::quotient:
            return make_poly_quotient(s.n, s.coeffs, quotient_var);
    }
    throw usage_error("corrupt ring spec");
}

/**
 * The builtin verification catalog: Z_2..Z_30, all pairwise products of
 * Z_2..Z_6, and three small polynomial quotients (F_2[x]/(x^2), F_4,
 * Z_4[x]/(x^2)).
 */
inline std::vector<RingSpec> builtin_catalog() {
    std::vector<RingSpec> cat;
    for (int n = 2; n <= 30; ++n)
        cat.push_back(parse_ring_spec("zn:" + std::to_string(n)));
    for (int i = 2; i <= 6; ++i)
        for (int j = i; j <= 6; ++j)
            cat.push_back(parse_ring_spec("prod(zn:" + std::to_string(i) +
                                          ",zn:" + std::to_string(j) + ")"));
    cat.push_back(parse_ring_spec("quot(zn:2,[0,0,1])"));
    cat.push_back(parse_ring_spec("quot(zn:2,[1,1,1])"));
    cat.push_back(parse_ring_spec("quot(zn:4,[0,0,1])"));
    return cat;
}

/// One spec per line; "#" begins a comment; blank lines ignored.
inline std::vector<RingSpec> parse_catalog(std::istream& in) {
    std::vector<RingSpec> cat;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        size_t e = line.find_last_not_of(" \t\r");
        cat.push_back(parse_ring_spec(line.substr(b, e - b + 1)));
    }
    return cat;
}

inline std::vector<RingSpec> load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open catalog file: " + path);
    return parse_catalog(in);
}

}  // namespace irrlab
