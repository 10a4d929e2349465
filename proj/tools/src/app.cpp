#include "chopf_cli/app.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "chopf/cobar.hpp"
#include "chopf/diffeo.hpp"
#include "chopf/errors.hpp"
#include "chopf/nsym.hpp"
#include "chopf/sym.hpp"
#include "chopf/topology.hpp"
#include "chopf_cli/expression.hpp"
#include "chopf_cli/json_io.hpp"
#include "chopf_cli/verify.hpp"

namespace chopf::cli {

namespace {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Output {
    Json json;
    std::string text;
    int code = kSuccess;
};

Output emit(const Element& x, const std::optional<std::string>& structure = std::nullopt)
{
    return {to_json(x, structure), x.str()};
}

Output emit(const Tensor& x, const std::optional<std::string>& structure = std::nullopt)
{
    return {to_json(x, structure), x.str()};
}

Output emit(const Series& s) { return {to_json(s), s.str() + "  (cap " + std::to_string(s.cap()) + ")"}; }

Output emit(const Scalar& c) { return {Json(), c.str()}; }

Output emit(const SuiteReport& r) { return {r.to_json(), r.text(), r.passed() ? kSuccess : kVerifyFailure}; }

Word parse_parts(const std::string& text)
{
    Word w;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        }
        catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || v < 1)
            throw DomainError("index lists are comma-separated positive integers, got '" + text + "'");
        w.push_back(v);
    }
    return w;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json parse_json_text(const std::string& text)
{
    try {
        return Json::parse(text);
    }
    catch (const Json::exception& e) {
        throw TypeError(std::string("malformed JSON: ") + e.what());
    }
}

ProjectiveProductSpace space_from_json(const Json& j)
{
    try {
        ProjectiveProductSpace x;
        x.factors = j.at("factors").get<std::vector<int>>();
        x.roots = j.at("roots").get<std::vector<std::vector<int>>>();
        x.validate();
        return x;
    }
    catch (const Json::exception& e) {
        throw TypeError(std::string("malformed space document: ") + e.what());
    }
}

std::string structure_for(const Element& x, const std::string& requested)
{
    if (!requested.empty())
        return requested;
    switch (x.algebra()) {
    case Algebra::fdb: return "fdb";
    case Algebra::qsym: return "deconcatenation";
    default: return "binomial";
    }
}

Tensor coproduct_with(const Element& x, const std::string& structure)
{
    if (structure == "bfk")
        return bfk_coproduct(x);
    if (structure == "fdb")
        return fdb_coproduct(x);
    switch (x.algebra()) {
    case Algebra::sym: return sym_coproduct(x);
    case Algebra::nsym: return nsym_binomial_coproduct(x);
    case Algebra::qsym: return qsym_coproduct(x);
    case Algebra::fdb: throw TypeError("the Faa di Bruno algebra carries only --structure fdb");
    case Algebra::scalar: throw TypeError("coproduct of a bare scalar is ambiguous; name the algebra with --algebra");
    }
    throw TypeError("no coproduct for this algebra");
}

Element antipode_with(const Element& x, const std::string& structure)
{
    if (structure == "bfk")
        return bfk_antipode(x);
    if (structure == "fdb")
        return fdb_antipode(x);
    switch (x.algebra()) {
    case Algebra::sym: return sym_antipode(x);
    case Algebra::nsym: return nsym_binomial_antipode(x);
    case Algebra::qsym: return qsym_antipode(x);
    case Algebra::fdb: throw TypeError("the Faa di Bruno algebra carries only --structure fdb");
    case Algebra::scalar: return x;
    }
    throw TypeError("no antipode for this algebra");
}

void check_structure(const Element& x, const std::string& s)
{
    if (s.empty())
        return;
    const bool ok = (s == "binomial" && (x.algebra() == Algebra::sym || x.algebra() == Algebra::nsym))
                    || (s == "deconcatenation" && x.algebra() == Algebra::qsym)
                    || (s == "fdb" && x.algebra() == Algebra::fdb) || (s == "bfk" && x.algebra() == Algebra::nsym);
    if (!ok)
        throw TypeError("structure '" + s + "' does not apply to " + std::string(algebra_name(x.algebra())));
}

Element with_algebra(Element x, const std::optional<Algebra>& algebra)
{
    if (x.algebra() != Algebra::scalar || !algebra)
        return x;
    switch (*algebra) {
    case Algebra::sym: return x.relabeled(kSymE);
    case Algebra::nsym: return x.relabeled(kNSym);
    case Algebra::qsym: return x.relabeled(kQSym);
    case Algebra::fdb: return x.relabeled(kFdB);
    case Algebra::scalar: return x;
    }
    return x;
}

Series set_zero(const Series& s, const std::string& var)
{
    if (var.empty())
        return s;
    if (var != "X" && var != "Y")
        throw DomainError("--set-zero takes X or Y");
    Series r = ps_set_zero(s, var == "X" ? 0 : 1);
    r.set_variable_names({var == "X" ? "Y" : "X"});
    return r;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact computations with the Hopf algebras of symmetric functions, formal diffeomorphisms and their relatives", "chopf"};
    app.require_subcommand(1);
    app.fallthrough();

    int cap = 6;
    std::string ground = "Z";
    bool text = false;
    std::string algebra_name_opt;
    app.add_option("--cap", cap, "Series truncation (total degree)")->check(CLI::NonNegativeNumber);
    app.add_option("--ground", ground, "Scalars: Z (integers) or Q (rationals)")->check(CLI::IsMember({"Z", "Q"}));
    app.add_flag("--text", text, "Human-readable output instead of JSON");
    app.add_option("--algebra", algebra_name_opt, "Restrict generators to one algebra")
        ->check(CLI::IsMember({"sym", "nsym", "qsym", "fdb"}));

    std::map<std::string, std::function<Output()>> handlers;
    std::string expr;
    std::string expr2;
    std::string structure;
    std::string to;
    std::string kind;
    std::string set_zero_var;
    std::string algebroid = "S.B";
    std::string index;
    std::string space_text;
    std::string space_file;
    std::string suite;
    std::optional<int> weight;
    int number = 0;
    int vars = 0;
    int times = 1;
    int degree = 0;
    bool normal = false;
    bool abelianized = false;

    auto options = [&] {
        EvalOptions o;
        if (cap > kMaxCap)
            throw CapabilityError("--cap is bounded by " + std::to_string(kMaxCap));
        o.cap = cap;
        o.ground = ground == "Q" ? Ground::rationals : Ground::integers;
        return o;
    };
    auto algebra_opt = [&]() -> std::optional<Algebra> {
        if (algebra_name_opt.empty())
            return std::nullopt;
        return algebra_from_name(algebra_name_opt);
    };
    auto element = [&](const std::string& s) { return with_algebra(evaluate_element(s, options(), algebra_opt()), algebra_opt()); };
    auto series = [&](const std::string& s) { return evaluate_series(s, options(), algebra_opt()); };
    auto series_cap = [&] {
        const int c = options().cap;
        if (c < 1)
            throw DomainError("--cap must be at least 1");
        return c;
    };

    auto sub = [&](const std::string& name, const std::string& help, std::function<Output()> handler) {
        handlers[name] = std::move(handler);
        return app.add_subcommand(name, help);
    };

    // ---- algebra ------------------------------------------------------------------
    sub("parse", "Print the syntax tree of an expression", [&] {
        const NodePtr ast = parse_expression(expr, algebra_opt());
        Output o{Json{{"ast", ast_str(*ast)}}, ast_str(*ast)};
        return o;
    })->add_option("expr", expr)->required();

    sub("eval", "Evaluate an expression (element or series)", [&]() -> Output {
        const Value v = evaluate(*parse_expression(expr, algebra_opt()), options());
        if (const auto* s = std::get_if<Series>(&v))
            return emit(*s);
        Element x = with_algebra(std::get<Element>(v), algebra_opt());
        if (ground == "Q")
            x.set_ground(Ground::rationals);
        return emit(x);
    })->add_option("expr", expr)->required();

    {
        auto* c = sub("coproduct", "Coproduct under a Hopf structure", [&] {
            const Element x = element(expr);
            check_structure(x, structure);
            const std::string s = structure_for(x, structure);
            return emit(coproduct_with(x, s), s);
        });
        c->add_option("expr", expr)->required();
        c->add_option("--structure", structure)->check(CLI::IsMember({"binomial", "deconcatenation", "fdb", "bfk"}));
    }
    {
        auto* c = sub("antipode", "Antipode under a Hopf structure", [&] {
            const Element x = element(expr);
            check_structure(x, structure);
            const std::string s = structure_for(x, structure);
            return emit(antipode_with(x, s), s);
        });
        c->add_option("expr", expr)->required();
        c->add_option("--structure", structure)->check(CLI::IsMember({"binomial", "deconcatenation", "fdb", "bfk"}));
    }
    sub("counit", "Counit (the weight-0 coefficient)", [&] { return emit(element(expr).constant_term()); })
        ->add_option("expr", expr)->required();
    {
        auto* c = sub("convert", "Change basis of a symmetric function", [&] {
            const Element x = element(expr);
            const Basis b = *basis_from_letter(to[0]);
            return emit(ground == "Q" ? sym_convert_rational(x, b) : sym_convert(x, b));
        });
        c->add_option("expr", expr)->required();
        c->add_option("--to", to)->required()->check(CLI::IsMember({"e", "h", "p", "m"}));
    }
    {
        auto* c = sub("pair", "Hall pairing on S*, or the N*/Q* duality", [&] {
            const Element a = element(expr);
            const Element b = element(expr2);
            if (a.algebra() == Algebra::sym || b.algebra() == Algebra::sym)
                return emit(hall_pair(a, b));
            return emit(ns_qs_pair(a, b));
        });
        c->add_option("left", expr)->required();
        c->add_option("right", expr2)->required();
    }
    {
        auto* c = sub("involution", "Apply an involution of S*", [&] {
            const SymInvolution w = kind == "dual" ? SymInvolution::dual
                                    : kind == "whitney" ? SymInvolution::whitney
                                                        : SymInvolution::omega;
            return emit(sym_involution(element(expr), w));
        });
        c->add_option("expr", expr)->required();
        c->add_option("--kind", kind)->required()->check(CLI::IsMember({"dual", "whitney", "omega"}));
    }
    {
        auto* c = sub("expand", "Expand a (quasi)symmetric function in N variables", [&]() -> Output {
            const Element x = element(expr);
            const MultiPoly p = x.algebra() == Algebra::qsym ? qsym_expand(x, vars) : sym_expand(x, vars);
            Json j;
            j["variables"] = vars;
            Json terms = Json::array();
            for (const auto& [e, coeff] : p.terms())
                terms.push_back(Json{{"exponents", e}, {"coeff", coeff.str()}});
            j["terms"] = std::move(terms);
            return {j, p.str()};
        });
        c->add_option("expr", expr)->required();
        c->add_option("--vars", vars)->required()->check(CLI::PositiveNumber);
    }
    sub("include", "Include S* in Q* (m_lambda to its rearrangements)", [&] { return emit(include_sym_in_qsym(element(expr))); })
        ->add_option("expr", expr)->required();
    {
        auto* c = sub("abelianize", "Map Z_I to e, t or b of the sorted index", [&] {
            const Element x = element(expr);
            if (to.empty() || to == "e")
                return emit(abelianize_nsym(x));
            return emit(bfk_abelianize(x, to == "t" ? Basis::t : Basis::b));
        });
        c->add_option("expr", expr)->required();
        c->add_option("--to", to)->check(CLI::IsMember({"e", "t", "b"}));
    }
    sub("coaction", "Coaction psi of S* (into S* (x) B) or N* (into N* (x) N)", [&] {
        const Element x = element(expr);
        if (x.algebra() == Algebra::nsym)
            return emit(coaction_nsym(x), std::string("bfk"));
        return emit(coaction_sym(x), std::string("fdb"));
    })->add_option("expr", expr)->required();
    sub("compositions", "List the compositions of n", [&]() -> Output {
        Json j = Json::array();
        std::string t;
        for (const auto& c : compositions_of(number)) {
            j.push_back(c.parts());
            t += word_str(c.parts()) + "\n";
        }
        return {j, t.empty() ? t : t.substr(0, t.size() - 1)};
    })->add_option("n", number)->required()->check(CLI::NonNegativeNumber);
    sub("partitions", "List the partitions of n", [&]() -> Output {
        Json j = Json::array();
        std::string t;
        for (const auto& p : partitions_of(number)) {
            j.push_back(p.parts());
            t += word_str(p.parts()) + "\n";
        }
        return {j, t.empty() ? t : t.substr(0, t.size() - 1)};
    })->add_option("n", number)->required()->check(CLI::NonNegativeNumber);

    // ---- series -------------------------------------------------------------------------
    {
        auto* c = sub("compose", "outer(inner), outer coefficients on the left", [&] { return emit(ps_compose(series(expr), series(expr2))); });
        c->add_option("outer", expr)->required();
        c->add_option("inner", expr2)->required();
    }
    sub("revert", "Compositional inverse of T + ...", [&] { return emit(ps_revert(series(expr))); })->add_option("expr", expr)->required();
    sub("invert", "Multiplicative inverse", [&] { return emit(ps_invert(series(expr))); })->add_option("expr", expr)->required();
    sub("residue", "Coefficient of T^-1", [&] { return emit(ps_residue(series(expr))); })->add_option("expr", expr)->required();
    sub("exp", "Exponential of a series without constant term (over Q)", [&] {
        Series s = series(expr);
        s.set_ground(Ground::rationals);
        return emit(ps_exp(s));
    })->add_option("expr", expr)->required();
    sub("ln", "Logarithm of a series with constant term 1 (over Q)", [&] {
        Series s = series(expr);
        s.set_ground(Ground::rationals);
        return emit(ps_log(s));
    })->add_option("expr", expr)->required();

    // ---- topology -----------------------------------------------------------------------
    sub("log", "Miscenko logarithm: the inverse of b(T)", [&] { return emit(miscenko_log(series_cap())); });
    sub("fgl", "Formal group law b(log X + log Y)", [&] { return emit(set_zero(fgl(series_cap()), set_zero_var)); })
        ->add_option("--set-zero", set_zero_var, "Set X or Y to zero");
    sub("beta", "exp(beta log T) with beta written b[0]", [&] { return emit(beta_series(series_cap())); });
    sub("hurewicz", "(n+1) chi(b_n), the Hurewicz image of CP^n", [&] { return emit(cp_hurewicz(number)); })
        ->add_option("n", number)->required()->check(CLI::NonNegativeNumber);
    {
        auto* charnum = sub("charnum", "Characteristic numbers", [] { return Output{}; });
        charnum->require_subcommand(1);
        auto* cp = charnum->add_subcommand("cp", "Normal characteristic number of CP^n for m_lambda");
        cp->add_option("n", number)->required()->check(CLI::NonNegativeNumber);
        cp->add_option("lambda", index, "Partition, e.g. 1,1")->required();
        handlers["charnum cp"] = [&] {
            const Word w = parse_parts(index);
            return emit(cp_char_number(number, Partition(w)));
        };
        auto* qt = charnum->add_subcommand("quasitoric", "nu_!(M_I(roots)) of a product of projective spaces");
        qt->add_option("--space", space_text, R"(JSON such as {"factors":[1],"roots":[[1],[1]]})");
        qt->add_option("--space-file", space_file, "File holding the space document");
        qt->add_option("--index", index, "Composition, e.g. 1,2")->required();
        qt->add_flag("--normal", normal, "Normal-bundle convention");
        handlers["charnum quasitoric"] = [&] {
            if (space_text.empty() == space_file.empty())
                throw DomainError("give exactly one of --space and --space-file");
            const std::string doc = space_file.empty() ? space_text : read_file(space_file);
            const ProjectiveProductSpace x = space_from_json(parse_json_text(doc));
            return emit(quasitoric_char_number(x, Composition(parse_parts(index)),
                                               normal ? CharConvention::normal : CharConvention::tangential));
        };
    }
    sub("crn", "sum over |I| = k of Z_I", [&] { return emit(crn_invariant(number)); })
        ->add_option("k", number)->required()->check(CLI::PositiveNumber);
    sub("cumulant", "(chi_N Z)(-T)", [&] { return emit(cumulant_series(series_cap())); });
    {
        auto* c = sub("cp-infinity", "sum Z_k ((chi Z)(X) + (chi Z)(Y))^(k+1)", [&] {
            Series s = cp_infinity_coproduct(series_cap());
            if (abelianized)
                s = ps_map(s, kFdBb, [](const Element& e) { return bfk_abelianize(e, Basis::b); });
            return emit(set_zero(s, set_zero_var));
        });
        c->add_option("--set-zero", set_zero_var, "Set X or Y to zero");
        c->add_flag("--abelianize", abelianized, "Send Z_k to b_k");
    }

    // ---- algebroids --------------------------------------------------------------------
    {
        auto* c = sub("cobar", "Apply the cobar differential to a level-0 cochain", [&] {
            const SplitAlgebroid alg(*algebroid_from_name(algebroid));
            Tensor x = cobar_level0(alg, element(expr));
            for (int i = 0; i < times; ++i)
                x = cobar_differential(alg, x);
            return emit(x);
        });
        c->add_option("expr", expr)->required();
        c->add_option("--algebroid", algebroid)->check(CLI::IsMember({"S.B", "N.N"}));
        c->add_option("--times", times, "How many times to apply d")->check(CLI::Range(1, 3));
    }
    {
        auto* c = sub("cobar-rank", "Rank of cobar cohomology over Q", [&]() -> Output {
            const SplitAlgebroid alg(*algebroid_from_name(algebroid));
            const int w = weight.value_or(0);
            const int r = cohomology_rank(alg, w, degree);
            Json j;
            j["algebroid"] = algebroid;
            j["weight"] = w;
            j["degree"] = degree;
            j["rank"] = r;
            return {j, std::to_string(r)};
        });
        c->add_option("--algebroid", algebroid)->check(CLI::IsMember({"S.B", "N.N"}));
        c->add_option("--weight", weight)->required()->check(CLI::NonNegativeNumber);
        c->add_option("--degree", degree)->check(CLI::NonNegativeNumber);
    }
    {
        auto* c = sub("right-unit", "eta_R(Z_k) paired against M_I in the right factor", [&] {
            return emit(right_unit_functional(number, Composition(parse_parts(index))));
        });
        c->add_option("k", number)->required()->check(CLI::NonNegativeNumber);
        c->add_option("--index", index, "Composition I, e.g. 1,2 (empty for the unit)");
    }

    // ---- verification --------------------------------------------------------------------
    {
        auto* c = sub("verify", "Run a verification suite (or all)", [&]() -> Output {
            if (suite != "all")
                return emit(run_suite(suite, weight));
            Output o{Json::array(), ""};
            for (const auto& [name, w] : suite_names()) {
                const SuiteReport r = run_suite(name, weight ? weight : std::optional<int>(w));
                o.json.push_back(r.to_json());
                o.text += r.text();
                if (!r.passed())
                    o.code = kVerifyFailure;
            }
            return o;
        });
        std::vector<std::string> names{"all"};
        for (const auto& [n, w] : suite_names())
            names.push_back(n);
        c->add_option("--suite", suite)->required()->check(CLI::IsMember(names));
        c->add_option("--weight", weight)->check(CLI::NonNegativeNumber);
    }
    {
        auto* c = sub("experiment", "Exploratory checks whose outcome is reported, not asserted", [&]() -> Output {
            Output o = emit(run_duality_experiment(weight.value_or(3)));
            o.code = kSuccess;
            return o;
        });
        c->add_option("name", kind)->required()->check(CLI::IsMember({"duality-compat"}));
        c->add_option("--weight", weight)->check(CLI::Range(0, 8));
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kSuccess;
    }
    catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    }
    catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseFailure;
    }

    std::string name;
    for (const auto* s : app.get_subcommands()) {
        name = s->get_name();
        for (const auto* inner : s->get_subcommands())
            name += " " + inner->get_name();
    }

    try {
        const Output o = handlers.at(name)();
        if (text || o.json.is_null()) {
            out << o.text;
            if (!o.text.ends_with('\n'))
                out << "\n";
        }
        else
            out << dump(o.json) << "\n";
        return o.code;
    }
    catch (const ParseError& e) {
        err << "parse error at column " << e.column() << ": " << e.what() << "\n";
        return kParseFailure;
    }
    catch (const CapabilityError& e) {
        err << "bound exceeded: " << e.what() << "\n";
        return kBoundExceeded;
    }
    catch (const IoError& e) {
        err << "i/o error: " << e.what() << "\n";
        return kIoFailure;
    }
    catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kParseFailure;
    }
    catch (const TypeError& e) {
        err << "type error: " << e.what() << "\n";
        return kParseFailure;
    }
}

} // namespace chopf::cli
