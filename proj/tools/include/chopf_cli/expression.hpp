#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chopf/element.hpp"
#include "chopf/series.hpp"

namespace chopf::cli {

/// Syntax error with the 0-based offset into the input where it was detected.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t column);
    [[nodiscard]] std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

/// Largest accepted expression text.
inline constexpr std::size_t kMaxExpressionBytes = std::size_t{1} << 20;

struct Node {
    enum class Kind { number, generator, variable, add, sub, mul, pow, neg };

    Kind kind = Kind::number;
    std::size_t column = 0;
    Scalar value;            // number
    char letter = 0;         // generator
    Word index;              // generator
    std::string name;        // variable: T, X or Y
    int exponent = 0;        // pow
    std::vector<std::shared_ptr<const Node>> kids;
};

using NodePtr = std::shared_ptr<const Node>;

/// expr   := ["-"] term (("+" | "-") term)*
/// term   := factor ("*" factor)*
/// factor := atom ("^" ["-"] UINT)?
/// atom   := INT | INT "/" UINT | GEN "[" UINT ("," UINT)* "]" | VAR | "(" expr ")"
/// GEN is one of e h p m M Z t b; VAR is T (univariate) or X, Y (bivariate).
/// Negative exponents are only allowed on T. When `algebra` is given, generators
/// of other algebras are rejected.
NodePtr parse_expression(std::string_view text, std::optional<Algebra> algebra = std::nullopt);

/// Lisp-style rendering of the tree, e.g. (+ (* Z[2] Z[1]) (* 3 Z[3])).
std::string ast_str(const Node& node);

using Value = std::variant<Element, Series>;

struct EvalOptions {
    int cap = 6;
    Ground ground = Ground::integers;
};

/// Evaluates a tree; products keep their left-to-right order.
Value evaluate(const Node& node, const EvalOptions& options);

/// parse + evaluate, requiring a plain element (no series variables).
Element evaluate_element(std::string_view text, const EvalOptions& options, std::optional<Algebra> algebra = std::nullopt);

/// parse + evaluate; elements are promoted to constant univariate series.
Series evaluate_series(std::string_view text, const EvalOptions& options, std::optional<Algebra> algebra = std::nullopt);

} // namespace chopf::cli
