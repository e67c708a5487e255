#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "irrlab/classify.hpp"

namespace irrlab {

/**
 * Boolean search pattern over classification flags.
 *
 *   expr := or ; or := and ("or" and)* ; and := not ("and" not)* ;
 *   not := "not" not | flag | "(" expr ")"
 *   flag := zero | unit | zd | harmless | irr | b_irr | f_irr
 */
class FlagPattern {
public:
    static FlagPattern parse(std::string_view text);

    bool matches(const ClassificationRecord& c) const { return eval(0, c); }

private:
    // nodes in postfix-free tree form: op + children indices, or flag leaf
    enum class Op { flag, not_, and_, or_ };
    struct Node {
        Op op;
        int flag = -1;  // index into ClassificationRecord::flags()
        int lhs = -1, rhs = -1;
    };
    std::vector<Node> nodes_;  // node 0 is the root

    bool eval(int idx, const ClassificationRecord& c) const {
        const Node& n = nodes_[idx];
        switch (n.op) {
            case Op::flag:
                return c.flags()[n.flag];
            case Op::not_:
                return !eval(n.lhs, c);
            case Op::and_:
                return eval(n.lhs, c) && eval(n.rhs, c);
            case Op::or_:
                return eval(n.lhs, c) || eval(n.rhs, c);
        }
        return false;
    }

    friend class PatternParser;
};

namespace detail {

inline int flag_index(std::string_view name) {
    static constexpr std::string_view kFlags[] = {
        "zero", "unit", "zd", "harmless", "irr", "b_irr", "f_irr"};
    for (int i = 0; i < 7; ++i)
        if (name == kFlags[i]) return i;
    return -1;
}

}  // namespace detail

class PatternParser {
public:
    explicit PatternParser(std::string_view text) : text_(text) {}

    FlagPattern parse() {
        FlagPattern p;
        // build into a scratch tree, root last, then rotate root to index 0
        int root = parse_or(p);
        if (next_token()) fail("trailing input");
        if (root != 0) {
            std::swap(p.nodes_[0], p.nodes_[root]);
            for (auto& n : p.nodes_) {
                if (n.lhs == 0) n.lhs = root; else if (n.lhs == root) n.lhs = 0;
                if (n.rhs == 0) n.rhs = root; else if (n.rhs == root) n.rhs = 0;
            }
        }
        return p;
    }

private:
    std::string_view text_;
    size_t pos_ = 0;
    std::string tok_;
    bool have_tok_ = false;

    [[noreturn]] void fail(const std::string& what) {
        throw usage_error("pattern syntax error: " + what + " in \"" +
                          std::string(text_) + "\"");
    }

    bool next_token() {
        if (have_tok_) return true;
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
            ++pos_;
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        if (c == '(' || c == ')') {
            tok_ = std::string(1, c);
            ++pos_;
        } else {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_'))
                ++pos_;
            if (pos_ == start) fail("unexpected character");
            tok_ = std::string(text_.substr(start, pos_ - start));
        }
        have_tok_ = true;
        return true;
    }

    bool eat(const std::string& t) {
        if (next_token() && tok_ == t) {
            have_tok_ = false;
            return true;
        }
        return false;
    }

    int parse_or(FlagPattern& p) {
        int lhs = parse_and(p);
        while (eat("or")) {
            int rhs = parse_and(p);
            p.nodes_.push_back({FlagPattern::Op::or_, -1, lhs, rhs});
            lhs = static_cast<int>(p.nodes_.size()) - 1;
        }
        return lhs;
    }

    int parse_and(FlagPattern& p) {
        int lhs = parse_not(p);
        while (eat("and")) {
            int rhs = parse_not(p);
            p.nodes_.push_back({FlagPattern::Op::and_, -1, lhs, rhs});
            lhs = static_cast<int>(p.nodes_.size()) - 1;
        }
        return lhs;
    }

    int parse_not(FlagPattern& p) {
        if (eat("not")) {
            int child = parse_not(p);
            p.nodes_.push_back({FlagPattern::Op::not_, -1, child, -1});
            return static_cast<int>(p.nodes_.size()) - 1;
        }
        if (eat("(")) {
            int inner = parse_or(p);
            if (!eat(")")) fail("expected \")\"");
            return inner;
        }
        if (!next_token()) fail("expected a flag name");
        int f = detail::flag_index(tok_);
        if (f < 0) fail("unknown flag \"" + tok_ + "\"");
        have_tok_ = false;
        p.nodes_.push_back({FlagPattern::Op::flag, f, -1, -1});
        return static_cast<int>(p.nodes_.size()) - 1;
    }
};

inline FlagPattern FlagPattern::parse(std::string_view text) {
    return PatternParser(text).parse();
}

/// All elements of R matching the pattern, ascending by element id.
inline std::vector<Elem> find_counterexamples(
    const std::vector<ClassificationRecord>& records,
    const FlagPattern& pattern) {
    std::vector<Elem> out;
    for (const auto& c : records)
        if (pattern.matches(c)) out.push_back(c.element);
    return out;
}

inline std::vector<Elem> find_counterexamples(const FiniteRing& R,
                                              std::string_view pattern) {
    return find_counterexamples(classify_ring(R), FlagPattern::parse(pattern));
}

}  // namespace irrlab
