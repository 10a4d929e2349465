#include "chopf_cli/json_io.hpp"

#include "chopf/errors.hpp"

namespace chopf::cli {

namespace {

Json space_json(Space s)
{
    Json j;
    j["algebra"] = std::string(algebra_name(s.algebra));
    j["basis"] = std::string(1, basis_letter(s.basis));
    return j;
}

Space space_from_json(const Json& j)
{
    const auto alg = algebra_from_name(j.at("algebra").get<std::string>());
    if (!alg)
        throw TypeError("unknown algebra tag");
    const std::string b = j.at("basis").get<std::string>();
    if (b.size() != 1)
        throw TypeError("basis tag must be a single letter");
    if (*alg == Algebra::scalar)
        return kScalarSpace;
    const auto basis = basis_from_letter(b[0]);
    if (!basis)
        throw TypeError("unknown basis tag");
    return Space{*alg, *basis};
}

Json index_json(const Word& w)
{
    Json a = Json::array();
    for (int p : w)
        a.push_back(p);
    return a;
}

Word index_from_json(const Json& j)
{
    Word w;
    for (const auto& p : j)
        w.push_back(p.get<int>());
    return w;
}

Json element_terms(const Element& x)
{
    Json terms = Json::array();
    for (const auto& [w, c] : x.terms()) {
        Json t;
        t["index"] = index_json(w);
        t["coeff"] = c.str();
        terms.push_back(std::move(t));
    }
    return terms;
}

Element element_from_terms(Space space, const Json& terms)
{
    Element x(space);
    for (const auto& t : terms)
        x.add_term(index_from_json(t.at("index")), Scalar::parse(t.at("coeff").get<std::string>()));
    return x;
}

} // namespace

Json to_json(const Element& x, const std::optional<std::string>& structure)
{
    Json j = space_json(x.space());
    if (structure)
        j["structure"] = *structure;
    j["terms"] = element_terms(x);
    return j;
}

Json to_json(const Tensor& x, const std::optional<std::string>& structure)
{
    Json j;
    bool uniform = x.arity() > 0;
    for (const auto& s : x.factors())
        uniform = uniform && s == x.factors().front();
    if (uniform) {
        j = space_json(x.factors().front());
        j["arity"] = x.arity();
    }
    else {
        Json f = Json::array();
        for (const auto& s : x.factors())
            f.push_back(space_json(s));
        j["factors"] = std::move(f);
    }
    if (structure)
        j["structure"] = *structure;
    Json terms = Json::array();
    for (const auto& [k, c] : x.terms()) {
        Json t;
        if (x.arity() == 2) {
            t["left"] = index_json(k[0]);
            t["right"] = index_json(k[1]);
        }
        else {
            Json idx = Json::array();
            for (const auto& w : k)
                idx.push_back(index_json(w));
            t["indices"] = std::move(idx);
        }
        t["coeff"] = c.str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Json to_json(const Series& s)
{
    Json j = space_json(s.space());
    j["cap"] = s.cap();
    j["variables"] = s.variable_names();
    Json coeffs = Json::array();
    for (const auto& [e, c] : s.coefficients()) {
        Json t;
        t["exponent"] = s.nvars() == 1 ? Json::array({e[0]}) : Json::array({e[0], e[1]});
        t["terms"] = element_terms(c.relabeled(s.space()));
        coeffs.push_back(std::move(t));
    }
    j["coefficients"] = std::move(coeffs);
    return j;
}

Element element_from_json(const Json& j)
{
    try {
        return element_from_terms(space_from_json(j), j.at("terms"));
    }
    catch (const Json::exception& e) {
        throw TypeError(std::string("malformed element document: ") + e.what());
    }
}

Tensor tensor_from_json(const Json& j)
{
    try {
        std::vector<Space> factors;
        if (j.contains("factors")) {
            for (const auto& f : j.at("factors"))
                factors.push_back(space_from_json(f));
        }
        else {
            factors.assign(j.at("arity").get<std::size_t>(), space_from_json(j));
        }
        Tensor x(factors);
        for (const auto& t : j.at("terms")) {
            Tensor::Key k;
            if (t.contains("left")) {
                k = {index_from_json(t.at("left")), index_from_json(t.at("right"))};
            }
            else {
                for (const auto& w : t.at("indices"))
                    k.push_back(index_from_json(w));
            }
            if (k.size() != factors.size())
                throw TypeError("tensor term arity does not match its factors");
            for (std::size_t i = 0; i < k.size(); ++i)
                k[i] = canonical_word(factors[i], k[i]);
            x.add_term(std::move(k), Scalar::parse(t.at("coeff").get<std::string>()));
        }
        return x;
    }
    catch (const Json::exception& e) {
        throw TypeError(std::string("malformed tensor document: ") + e.what());
    }
}

Series series_from_json(const Json& j)
{
    try {
        const Space space = space_from_json(j);
        const auto vars = j.at("variables").get<std::vector<std::string>>();
        if (vars.empty() || vars.size() > 2)
            throw TypeError("series need one or two variables");
        Series s(space, static_cast<int>(vars.size()), j.at("cap").get<int>());
        s.set_variable_names(vars);
        for (const auto& c : j.at("coefficients")) {
            const auto e = c.at("exponent").get<std::vector<int>>();
            if (e.size() != vars.size())
                throw TypeError("exponent length does not match the variables");
            s.add_term(Exponent{e[0], e.size() > 1 ? e[1] : 0}, element_from_terms(space, c.at("terms")));
        }
        return s;
    }
    catch (const Json::exception& e) {
        throw TypeError(std::string("malformed series document: ") + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(); }

} // namespace chopf::cli
