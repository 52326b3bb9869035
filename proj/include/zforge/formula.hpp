#pragma once

#include <cctype>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "zforge/errors.hpp"

namespace zforge {

// ============================ formulas ============================

enum class FormulaOp { var, and_, or_, not_, nand_, xor_ };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    FormulaOp op;
    std::string var;  // only for FormulaOp::var
    FormulaPtr left;  // operand of not_, left operand otherwise
    FormulaPtr right;

    static FormulaPtr variable(std::string name) {
        return std::make_shared<Formula>(Formula{FormulaOp::var, std::move(name),
                                                 nullptr, nullptr});
    }
    static FormulaPtr make(FormulaOp op, FormulaPtr l, FormulaPtr r = nullptr) {
        return std::make_shared<Formula>(Formula{op, {}, std::move(l), std::move(r)});
    }
};

inline bool eval_formula(const FormulaPtr& f,
                         const std::map<std::string, bool>& env) {
    switch (f->op) {
    case FormulaOp::var: {
        auto it = env.find(f->var);
        if (it == env.end())
            throw ShapeError("no value for variable " + f->var);
        return it->second;
    }
    case FormulaOp::and_: return eval_formula(f->left, env) & eval_formula(f->right, env);
    case FormulaOp::or_: return eval_formula(f->left, env) | eval_formula(f->right, env);
    case FormulaOp::not_: return !eval_formula(f->left, env);
    case FormulaOp::nand_: return !(eval_formula(f->left, env) & eval_formula(f->right, env));
    case FormulaOp::xor_: return eval_formula(f->left, env) ^ eval_formula(f->right, env);
    }
    throw std::logic_error("bad formula node");
}

// Variables in order of first appearance, left to right.
inline void collect_variables(const FormulaPtr& f, std::vector<std::string>& out) {
    if (f->op == FormulaOp::var) {
        for (const auto& v : out)
            if (v == f->var) return;
        out.push_back(f->var);
        return;
    }
    if (f->left) collect_variables(f->left, out);
    if (f->right) collect_variables(f->right, out);
}

inline std::string to_string(const FormulaPtr& f) {
    switch (f->op) {
    case FormulaOp::var: return f->var;
    case FormulaOp::not_: return "NOT " + to_string(f->left);
    case FormulaOp::and_:
        return "(" + to_string(f->left) + " AND " + to_string(f->right) + ")";
    case FormulaOp::or_:
        return "(" + to_string(f->left) + " OR " + to_string(f->right) + ")";
    case FormulaOp::nand_:
        return "(" + to_string(f->left) + " NAND " + to_string(f->right) + ")";
    case FormulaOp::xor_:
        return "(" + to_string(f->left) + " XOR " + to_string(f->right) + ")";
    }
    throw std::logic_error("bad formula node");
}

// ============================= parser =============================
//
// expr   := term (("OR" | "XOR") term)*
// term   := factor (("AND" | "NAND") factor)*
// factor := IDENT | "NOT" factor | "(" expr ")"
//
// Keywords are case-insensitive and always reserved, in every mode;
// monotone parsing rejects NOT/NAND/XOR with a mode violation rather
// than a syntax error so the two failures stay distinguishable.

enum class FormulaMode { monotone, dual_rail };

namespace detail {

struct Token {
    enum Kind { ident, kw_and, kw_or, kw_not, kw_nand, kw_xor, lparen, rparen, end };
    Kind kind;
    std::string text;
    int line;
    int column;
};

inline std::vector<Token> lex_formula(std::string_view src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto push = [&](Token::Kind k, std::string text, int l, int c) {
        out.push_back(Token{k, std::move(text), l, c});
    };
    while (i < src.size()) {
        char ch = src[i];
        if (ch == '\n') { ++line; col = 1; ++i; continue; }
        if (std::isspace(static_cast<unsigned char>(ch))) { ++col; ++i; continue; }
        if (ch == '(') { push(Token::lparen, "(", line, col); ++col; ++i; continue; }
        if (ch == ')') { push(Token::rparen, ")", line, col); ++col; ++i; continue; }
        if (ch == '#') { // comment to end of line
            while (i < src.size() && src[i] != '\n') ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            int start_col = col;
            std::string word;
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
                word.push_back(src[i]);
                ++i; ++col;
            }
            std::string upper = word;
            for (char& c : upper) c = char(std::toupper(static_cast<unsigned char>(c)));
            if (upper == "AND") push(Token::kw_and, word, line, start_col);
            else if (upper == "OR") push(Token::kw_or, word, line, start_col);
            else if (upper == "NOT") push(Token::kw_not, word, line, start_col);
            else if (upper == "NAND") push(Token::kw_nand, word, line, start_col);
            else if (upper == "XOR") push(Token::kw_xor, word, line, start_col);
            else push(Token::ident, word, line, start_col);
            continue;
        }
        throw SyntaxError(std::string("unexpected character '") + ch + "'", line, col);
    }
    out.push_back(Token{Token::end, "", line, col});
    return out;
}

class FormulaParser {
public:
    FormulaParser(std::vector<Token> tokens, FormulaMode mode)
        : tokens_(std::move(tokens)), mode_(mode) {}

    FormulaPtr parse() {
        FormulaPtr f = expr();
        if (peek().kind != Token::end)
            throw SyntaxError("unexpected token '" + peek().text + "'",
                              peek().line, peek().column);
        return f;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& take() { return tokens_[pos_++]; }

    void require_dual(const Token& t) {
        if (mode_ == FormulaMode::monotone)
            throw ModeViolation("operator '" + t.text + "' requires dual-rail mode",
                                t.line, t.column);
    }

    FormulaPtr expr() {
        FormulaPtr lhs = term();
        for (;;) {
            if (peek().kind == Token::kw_or) {
                take();
                lhs = Formula::make(FormulaOp::or_, lhs, term());
            } else if (peek().kind == Token::kw_xor) {
                require_dual(take());
                lhs = Formula::make(FormulaOp::xor_, lhs, term());
            } else {
                return lhs;
            }
        }
    }

    FormulaPtr term() {
        FormulaPtr lhs = factor();
        for (;;) {
            if (peek().kind == Token::kw_and) {
                take();
                lhs = Formula::make(FormulaOp::and_, lhs, factor());
            } else if (peek().kind == Token::kw_nand) {
                require_dual(take());
                lhs = Formula::make(FormulaOp::nand_, lhs, factor());
            } else {
                return lhs;
            }
        }
    }

    FormulaPtr factor() {
        const Token& t = take();
        switch (t.kind) {
        case Token::ident:
            return Formula::variable(t.text);
        case Token::kw_not:
            require_dual(t);
            return Formula::make(FormulaOp::not_, factor());
        case Token::lparen: {
            FormulaPtr inner = expr();
            const Token& close = take();
            if (close.kind != Token::rparen)
                throw SyntaxError("expected ')'", close.line, close.column);
            return inner;
        }
        case Token::end:
            throw SyntaxError("unexpected end of formula", t.line, t.column);
        default:
            throw SyntaxError("unexpected token '" + t.text + "'", t.line, t.column);
        }
    }

    std::vector<Token> tokens_;
    FormulaMode mode_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline FormulaPtr parse_formula(std::string_view text, FormulaMode mode) {
    return detail::FormulaParser(detail::lex_formula(text), mode).parse();
}

} // namespace zforge
