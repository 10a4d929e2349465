#include "chopf_cli/expression.hpp"

#include <cctype>

#include "chopf/errors.hpp"

namespace chopf::cli {

ParseError::ParseError(const std::string& message, std::size_t column)
    : std::runtime_error(message), column_(column)
{
}

namespace {

class Parser {
public:
    Parser(std::string_view text, std::optional<Algebra> algebra) : text_(text), algebra_(algebra) {}

    NodePtr parse()
    {
        NodePtr root = expr();
        skip_space();
        if (pos_ != text_.size())
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return root;
    }

private:
    std::string_view text_;
    std::optional<Algebra> algebra_;
    std::size_t pos_ = 0;

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char c)
    {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c, const char* what)
    {
        if (!peek(c))
            throw ParseError(std::string("expected ") + what, pos_);
        ++pos_;
    }

    static NodePtr binary(Node::Kind kind, std::size_t column, NodePtr a, NodePtr b)
    {
        auto n = std::make_shared<Node>();
        n->kind = kind;
        n->column = column;
        n->kids = {std::move(a), std::move(b)};
        return n;
    }

    NodePtr expr()
    {
        skip_space();
        NodePtr left;
        if (peek('-')) {
            const std::size_t at = pos_++;
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::neg;
            n->column = at;
            n->kids = {term()};
            left = std::move(n);
        }
        else {
            left = term();
        }
        while (true) {
            if (peek('+')) {
                const std::size_t at = pos_++;
                left = binary(Node::Kind::add, at, left, term());
            }
            else if (peek('-')) {
                const std::size_t at = pos_++;
                left = binary(Node::Kind::sub, at, left, term());
            }
            else {
                return left;
            }
        }
    }

    NodePtr term()
    {
        NodePtr left = factor();
        while (peek('*')) {
            const std::size_t at = pos_++;
            left = binary(Node::Kind::mul, at, left, factor());
        }
        return left;
    }

    NodePtr factor()
    {
        NodePtr base = atom();
        if (!peek('^'))
            return base;
        const std::size_t at = pos_++;
        skip_space();
        bool negative = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            negative = true;
            ++pos_;
        }
        const std::size_t digits = pos_;
        const std::string e = uint_text();
        if (e.empty())
            throw ParseError("expected an exponent", digits);
        if (e.size() > 6)
            throw ParseError("exponent too large", digits);
        if (negative && !(base->kind == Node::Kind::variable && base->name == "T"))
            throw ParseError("negative exponents are only allowed on T", digits);
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::pow;
        n->column = at;
        n->exponent = std::stoi(e) * (negative ? -1 : 1);
        n->kids = {std::move(base)};
        return n;
    }

    std::string uint_text()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    NodePtr atom()
    {
        skip_space();
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of input", pos_);
        const std::size_t at = pos_;
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr inner = expr();
            expect(')', "')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = uint_text();
            if (peek('/')) {
                ++pos_;
                skip_space();
                const std::size_t den_at = pos_;
                const std::string den = uint_text();
                if (den.empty())
                    throw ParseError("expected a denominator", den_at);
                if (den.find_first_not_of('0') == std::string::npos)
                    throw ParseError("zero denominator", den_at);
                num += "/" + den;
            }
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::number;
            n->column = at;
            n->value = Scalar::parse(num);
            return n;
        }
        if (c == 'T' || c == 'X' || c == 'Y') {
            ++pos_;
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::variable;
            n->column = at;
            n->name = std::string(1, c);
            return n;
        }
        const auto alg = algebra_of_letter(c);
        if (!alg)
            throw ParseError(std::string("unknown symbol '") + c + "'", at);
        if (algebra_ && *algebra_ != *alg)
            throw ParseError(std::string("generator '") + c + "' does not belong to " + std::string(algebra_name(*algebra_)), at);
        ++pos_;
        expect('[', "'['");
        Word index;
        while (true) {
            skip_space();
            const std::size_t part_at = pos_;
            const std::string part = uint_text();
            if (part.empty())
                throw ParseError("expected an index part", part_at);
            if (part.size() > 6)
                throw ParseError("index part too large", part_at);
            const int v = std::stoi(part);
            if (v == 0 && c != 'b')
                throw ParseError("index parts must be positive", part_at);
            index.push_back(v);
            if (peek(',')) {
                ++pos_;
                continue;
            }
            expect(']', "',' or ']'");
            break;
        }
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::generator;
        n->column = at;
        n->letter = c;
        n->index = std::move(index);
        return n;
    }
};

// ---------------------------------------------------------------------------

Series as_series(const Value& v, int nvars, int cap)
{
    if (const auto* s = std::get_if<Series>(&v))
        return *s;
    return Series::constant(std::get<Element>(v), nvars, cap);
}

int series_vars(const Value& a, const Value& b)
{
    const auto* sa = std::get_if<Series>(&a);
    const auto* sb = std::get_if<Series>(&b);
    if (sa && sb && sa->nvars() != sb->nvars())
        throw TypeError("cannot mix T with X, Y");
    return sa ? sa->nvars() : sb->nvars();
}

Series monomial(int nvars, int cap, const Exponent& e)
{
    Series s(kScalarSpace, nvars, cap);
    if (nvars == 2)
        s.set_variable_names({"X", "Y"});
    s.add_term(e, Element::constant(Scalar(1)));
    return s;
}

} // namespace

NodePtr parse_expression(std::string_view text, std::optional<Algebra> algebra)
{
    if (text.size() > kMaxExpressionBytes)
        throw CapabilityError("expression exceeds 1 MiB");
    return Parser(text, algebra).parse();
}

std::string ast_str(const Node& node)
{
    switch (node.kind) {
    case Node::Kind::number: return node.value.str();
    case Node::Kind::generator: return std::string(1, node.letter) + word_str(node.index);
    case Node::Kind::variable: return node.name;
    case Node::Kind::add: return "(+ " + ast_str(*node.kids[0]) + " " + ast_str(*node.kids[1]) + ")";
    case Node::Kind::sub: return "(- " + ast_str(*node.kids[0]) + " " + ast_str(*node.kids[1]) + ")";
    case Node::Kind::mul: return "(* " + ast_str(*node.kids[0]) + " " + ast_str(*node.kids[1]) + ")";
    case Node::Kind::pow: return "(^ " + ast_str(*node.kids[0]) + " " + std::to_string(node.exponent) + ")";
    case Node::Kind::neg: return "(neg " + ast_str(*node.kids[0]) + ")";
    }
    return "?";
}

Value evaluate(const Node& node, const EvalOptions& options)
{
    const int cap = options.cap;
    switch (node.kind) {
    case Node::Kind::number: {
        Element x = Element::constant(node.value);
        if (options.ground == Ground::rationals)
            x.set_ground(Ground::rationals);
        return x;
    }
    case Node::Kind::generator: {
        const Space space{*algebra_of_letter(node.letter), *basis_from_letter(node.letter)};
        Element x = Element::basis(space, node.index);
        if (options.ground == Ground::rationals)
            x.set_ground(Ground::rationals);
        return x;
    }
    case Node::Kind::variable:
        if (node.name == "T")
            return monomial(1, cap, {1, 0});
        return monomial(2, cap, node.name == "X" ? Exponent{1, 0} : Exponent{0, 1});
    case Node::Kind::neg: {
        Value v = evaluate(*node.kids[0], options);
        if (auto* e = std::get_if<Element>(&v))
            return -*e;
        return std::get<Series>(v) * Scalar(-1);
    }
    case Node::Kind::add:
    case Node::Kind::sub: {
        const Value a = evaluate(*node.kids[0], options);
        const Value b = evaluate(*node.kids[1], options);
        const bool sub = node.kind == Node::Kind::sub;
        if (std::holds_alternative<Element>(a) && std::holds_alternative<Element>(b))
            return sub ? std::get<Element>(a) - std::get<Element>(b) : std::get<Element>(a) + std::get<Element>(b);
        const int nv = series_vars(a, b);
        const Series sa = as_series(a, nv, cap);
        const Series sb = as_series(b, nv, cap);
        return sub ? sa - sb : sa + sb;
    }
    case Node::Kind::mul: {
        const Value a = evaluate(*node.kids[0], options);
        const Value b = evaluate(*node.kids[1], options);
        if (std::holds_alternative<Element>(a) && std::holds_alternative<Element>(b))
            return std::get<Element>(a) * std::get<Element>(b);
        if (std::holds_alternative<Element>(a))
            return std::get<Element>(a) * std::get<Series>(b);
        const int nv = series_vars(a, b);
        return as_series(a, nv, cap) * as_series(b, nv, cap);
    }
    case Node::Kind::pow: {
        const Node& base = *node.kids[0];
        if (node.exponent < 0)
            return monomial(1, cap, {node.exponent, 0});
        const Value v = evaluate(base, options);
        if (const auto* e = std::get_if<Element>(&v))
            return pow(*e, node.exponent);
        return ps_pow(std::get<Series>(v), node.exponent);
    }
    }
    throw TypeError("unknown expression node");
}

Element evaluate_element(std::string_view text, const EvalOptions& options, std::optional<Algebra> algebra)
{
    const Value v = evaluate(*parse_expression(text, algebra), options);
    if (!std::holds_alternative<Element>(v))
        throw TypeError("expected an element, got a series");
    Element x = std::get<Element>(v);
    if (options.ground == Ground::rationals)
        x.set_ground(Ground::rationals);
    return x;
}

Series evaluate_series(std::string_view text, const EvalOptions& options, std::optional<Algebra> algebra)
{
    const Value v = evaluate(*parse_expression(text, algebra), options);
    Series s = as_series(v, 1, options.cap);
    if (options.ground == Ground::rationals)
        s.set_ground(Ground::rationals);
    return s;
}

} // namespace chopf::cli
