#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kcrank/qseries.hpp"

namespace kcrank {

/// AST for the textual product DSL. Grammar (whitespace-insensitive):
///
///   expr    := term {("+"|"-") term}
///   term    := product
///   product := factor {("*"|"/") factor}
///   factor  := atom ["^" int]                  (int may be negative)
///   atom    := uint | "(" expr ")" | poch | jterm
///   poch    := "(" ["-"] "q" ["^" uint] ";" "q" ["^" uint] ")"
///   jterm   := "J(" uint ["," uint] ")"
///
/// Bare q is not a factor; monomial shifts are expressed structurally through
/// dissection in the verification suites.
struct ProductExpr;
using ExprPtr = std::shared_ptr<const ProductExpr>;

struct IntLiteral {
    Integer value;  // nonnegative by the grammar
};
struct PochTerm {
    int sign;  // +1 or -1
    int a;     // >= 1
    int b;     // >= 1
};
struct JTermNode {
    int s;
    std::optional<int> t;
};
struct PowerNode {
    ExprPtr base;
    int exponent;
};
struct MulNode {
    std::vector<ExprPtr> factors;
};
struct DivNode {
    ExprPtr num;
    ExprPtr den;
};
struct AddNode {
    std::vector<std::pair<int, ExprPtr>> terms;  // sign is +1 or -1
};

struct ProductExpr {
    std::variant<IntLiteral, PochTerm, JTermNode, PowerNode, MulNode, DivNode, AddNode> node;
};

/// Parse the DSL; throws SyntaxError with byte offset and expected-token text.
ExprPtr parse(const std::string& text);

/// Bottom-up evaluation via the series core. Division by an integer literal
/// uses exact integer division; division by a series inverts it. Propagates
/// NonUnitConstantError, NotDivisibleError, BadModuliError.
QSeries evaluate(const ProductExpr& expr, int order);
inline QSeries evaluate(const ExprPtr& expr, int order) { return evaluate(*expr, order); }

/// Canonical printed form; parse(print(parse(s))) is structurally identical
/// to parse(s).
std::string print(const ProductExpr& expr);
inline std::string print(const ExprPtr& expr) { return print(*expr); }

bool structurally_equal(const ProductExpr& a, const ProductExpr& b);

}  // namespace kcrank
