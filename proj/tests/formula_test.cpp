#include <map>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "zforge/errors.hpp"
#include "zforge/formula.hpp"

using namespace zforge;

namespace {

std::string rt(const std::string& text, FormulaMode mode = FormulaMode::dual_rail) {
    return to_string(parse_formula(text, mode));
}

} // namespace

TEST(Formula, PrecedenceAndAssociativity) {
    EXPECT_EQ(rt("a OR b AND c"), "(a OR (b AND c))");
    EXPECT_EQ(rt("a AND b OR c"), "((a AND b) OR c)");
    EXPECT_EQ(rt("a AND b AND c"), "((a AND b) AND c)");
    EXPECT_EQ(rt("a OR b OR c"), "((a OR b) OR c)");
    EXPECT_EQ(rt("(a OR b) AND c"), "((a OR b) AND c)");
    EXPECT_EQ(rt("a XOR b AND c"), "(a XOR (b AND c))");
    EXPECT_EQ(rt("NOT a AND b"), "(NOT a AND b)");
    EXPECT_EQ(rt("NOT (a AND b)"), "NOT (a AND b)");
}

TEST(Formula, KeywordsCaseInsensitive) {
    EXPECT_EQ(rt("a and b oR c"), "((a AND b) OR c)");
    EXPECT_EQ(rt("nOt a", FormulaMode::dual_rail), "NOT a");
}

TEST(Formula, CommentsAndWhitespace) {
    EXPECT_EQ(rt("# leading\n x1 \n AND # trailing words\n\tx2"), "(x1 AND x2)");
}

TEST(Formula, CollectVariablesFirstAppearance) {
    FormulaPtr f = parse_formula("(b AND a) OR b OR c", FormulaMode::monotone);
    std::vector<std::string> vars;
    collect_variables(f, vars);
    EXPECT_EQ(vars, (std::vector<std::string>{"b", "a", "c"}));
}

TEST(Formula, Eval) {
    FormulaPtr f = parse_formula("(x1 AND x2) OR x3", FormulaMode::monotone);
    auto env = [](bool a, bool b, bool c) {
        return std::map<std::string, bool>{{"x1", a}, {"x2", b}, {"x3", c}};
    };
    EXPECT_FALSE(eval_formula(f, env(false, false, false)));
    EXPECT_FALSE(eval_formula(f, env(true, false, false)));
    EXPECT_TRUE(eval_formula(f, env(true, true, false)));
    EXPECT_TRUE(eval_formula(f, env(false, false, true)));
    EXPECT_THROW(eval_formula(f, {{"x1", true}}), ShapeError);
}

TEST(Formula, EvalDualOperators) {
    auto ab = [](bool a, bool b) {
        return std::map<std::string, bool>{{"a", a}, {"b", b}};
    };
    FormulaPtr nand = parse_formula("a NAND b", FormulaMode::dual_rail);
    EXPECT_TRUE(eval_formula(nand, ab(false, false)));
    EXPECT_TRUE(eval_formula(nand, ab(true, false)));
    EXPECT_FALSE(eval_formula(nand, ab(true, true)));

    FormulaPtr x = parse_formula("a XOR b", FormulaMode::dual_rail);
    EXPECT_FALSE(eval_formula(x, ab(false, false)));
    EXPECT_TRUE(eval_formula(x, ab(true, false)));
    EXPECT_TRUE(eval_formula(x, ab(false, true)));
    EXPECT_FALSE(eval_formula(x, ab(true, true)));

    FormulaPtr n = parse_formula("NOT a", FormulaMode::dual_rail);
    EXPECT_TRUE(eval_formula(n, ab(false, false)));
    EXPECT_FALSE(eval_formula(n, ab(true, false)));
}

TEST(Formula, MonotoneModeRejectsNonMonotoneOperators) {
    EXPECT_THROW(parse_formula("NOT x", FormulaMode::monotone), ModeViolation);
    EXPECT_THROW(parse_formula("a NAND b", FormulaMode::monotone), ModeViolation);
    EXPECT_THROW(parse_formula("a XOR b", FormulaMode::monotone), ModeViolation);
    EXPECT_NO_THROW(parse_formula("a AND b OR c", FormulaMode::monotone));
}

TEST(Formula, SyntaxErrors) {
    for (const char* bad : {"", "x1 AND", "AND", "(x1", "x1)", "x1 x2", "()",
                            "x1 AND AND x2"}) {
        EXPECT_THROW(parse_formula(bad, FormulaMode::dual_rail), SyntaxError)
            << "input: " << bad;
    }
}

TEST(Formula, SyntaxErrorCarriesPosition) {
    try {
        parse_formula("x1 AND\n  $", FormulaMode::monotone);
        FAIL() << "expected SyntaxError";
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.line, 2);
        EXPECT_EQ(e.column, 3);
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
}

TEST(Formula, ModeViolationCarriesPosition) {
    try {
        parse_formula("x1 AND NOT x2", FormulaMode::monotone);
        FAIL() << "expected ModeViolation";
    } catch (const ModeViolation& e) {
        EXPECT_EQ(e.line, 1);
        EXPECT_EQ(e.column, 8);
    }
}

TEST(Formula, IdentifierLexing) {
    EXPECT_EQ(rt("_x AND x_1"), "(_x AND x_1)");
    EXPECT_THROW(parse_formula("1x", FormulaMode::dual_rail), SyntaxError);
    EXPECT_THROW(parse_formula("x1 & x2", FormulaMode::dual_rail), SyntaxError);
    // Keywords are reserved even where an identifier is expected.
    EXPECT_THROW(parse_formula("and AND x", FormulaMode::dual_rail), SyntaxError);
}

TEST(Formula, BuildersEvalDirectly) {
    FormulaPtr f = Formula::make(FormulaOp::and_, Formula::variable("p"),
                                 Formula::variable("q"));
    EXPECT_EQ(to_string(f), "(p AND q)");
    EXPECT_TRUE(eval_formula(f, {{"p", true}, {"q", true}}));
}
