#include "chopf/sym.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "chopf/errors.hpp"
#include "chopf/linalg.hpp"

namespace chopf {

namespace {

void require_sym(const Element& f, const char* what)
{
    if (f.algebra() != Algebra::sym && !(f.algebra() == Algebra::scalar))
        throw TypeError(std::string(what) + ": expected a symmetric function");
}

Space sym_space(Basis b) { return Space{Algebra::sym, b}; }

// ---- literal expansions --------------------------------------------------

MultiPoly expand_e(int k, int n)
{
    MultiPoly r(n);
    if (k > n)
        return r;
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    std::fill(exps.end() - k, exps.end(), 1);
    do {
        r.add_term(exps, Scalar(1));
    } while (std::next_permutation(exps.begin(), exps.end()));
    return r;
}

MultiPoly expand_h(int k, int n)
{
    MultiPoly r(n);
    if (n == 0)
        return k == 0 ? MultiPoly::constant(0, Scalar(1)) : r;
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int rest) {
        if (i == n - 1) {
            exps[static_cast<std::size_t>(i)] = rest;
            r.add_term(exps, Scalar(1));
            return;
        }
        for (int a = rest; a >= 0; --a) {
            exps[static_cast<std::size_t>(i)] = a;
            rec(i + 1, rest - a);
        }
    };
    rec(0, k);
    return r;
}

MultiPoly expand_p(int k, int n)
{
    MultiPoly r(n);
    for (int i = 0; i < n; ++i) {
        std::vector<int> exps(static_cast<std::size_t>(n), 0);
        exps[static_cast<std::size_t>(i)] = k;
        r.add_term(std::move(exps), Scalar(1));
    }
    return r;
}

MultiPoly expand_m(const Word& lambda, int n)
{
    MultiPoly r(n);
    if (static_cast<int>(lambda.size()) > n)
        return r;
    std::vector<int> exps(lambda.begin(), lambda.end());
    exps.resize(static_cast<std::size_t>(n), 0);
    std::sort(exps.begin(), exps.end());
    do {
        r.add_term(exps, Scalar(1));
    } while (std::next_permutation(exps.begin(), exps.end()));
    return r;
}

MultiPoly expand_word(Basis b, const Word& w, int n)
{
    if (b == Basis::m)
        return expand_m(w, n);
    MultiPoly r = MultiPoly::constant(n, Scalar(1));
    for (int k : w) {
        switch (b) {
        case Basis::e: r = r * expand_e(k, n); break;
        case Basis::h: r = r * expand_h(k, n); break;
        case Basis::p: r = r * expand_p(k, n); break;
        default: throw TypeError("expand: not a symmetric-function basis");
        }
    }
    return r;
}

// ---- transition matrices ---------------------------------------------------

struct WeightTables {
    std::vector<Partition> partitions;
    std::map<Word, std::size_t> index;
};

std::mutex g_cache_mutex;
std::map<int, WeightTables> g_tables;
std::map<std::pair<Basis, int>, Matrix> g_to_m;
std::map<std::pair<Basis, int>, Matrix> g_from_m;

const WeightTables& tables(int n)
{
    {
        std::lock_guard lock(g_cache_mutex);
        auto it = g_tables.find(n);
        if (it != g_tables.end())
            return it->second;
    }
    WeightTables t;
    t.partitions = partitions_of(n);
    for (std::size_t i = 0; i < t.partitions.size(); ++i)
        t.index.emplace(t.partitions[i].parts(), i);
    std::lock_guard lock(g_cache_mutex);
    return g_tables.try_emplace(n, std::move(t)).first->second;
}

// Row lambda: coefficients of X_lambda in the m basis, from the expansion in n = weight variables.
const Matrix& to_m(Basis x, int n)
{
    {
        std::lock_guard lock(g_cache_mutex);
        auto it = g_to_m.find({x, n});
        if (it != g_to_m.end())
            return it->second;
    }
    const WeightTables& t = tables(n);
    const std::size_t d = t.partitions.size();
    Matrix mat(d, std::vector<Scalar>(d));
    for (std::size_t i = 0; i < d; ++i) {
        MultiPoly poly = expand_word(x, t.partitions[i].parts(), n);
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<int> exps = t.partitions[j].parts();
            exps.resize(static_cast<std::size_t>(n), 0);
            mat[i][j] = poly.coefficient(exps);
        }
    }
    std::lock_guard lock(g_cache_mutex);
    return g_to_m.try_emplace({x, n}, std::move(mat)).first->second;
}

const Matrix& from_m(Basis y, int n)
{
    {
        std::lock_guard lock(g_cache_mutex);
        auto it = g_from_m.find({y, n});
        if (it != g_from_m.end())
            return it->second;
    }
    Matrix inv = inverse(to_m(y, n));
    std::lock_guard lock(g_cache_mutex);
    return g_from_m.try_emplace({y, n}, std::move(inv)).first->second;
}

Element convert_impl(const Element& f, Basis to)
{
    if (f.algebra() == Algebra::scalar)
        return f.relabeled(sym_space(to));
    require_sym(f, "sym_convert");
    if (f.basis_tag() == to)
        return f;
    std::map<int, std::vector<Scalar>> by_weight;
    for (const auto& [w, c] : f.terms()) {
        const int n = word_weight(w);
        const WeightTables& t = tables(n);
        auto& v = by_weight[n];
        v.resize(t.partitions.size());
        v[t.index.at(w)] += c;
    }
    Element r(sym_space(to), f.ground());
    for (auto& [n, v] : by_weight) {
        std::vector<Scalar> vm = f.basis_tag() == Basis::m ? v : row_times(v, to_m(f.basis_tag(), n));
        std::vector<Scalar> out = to == Basis::m ? vm : row_times(vm, from_m(to, n));
        const WeightTables& t = tables(n);
        for (std::size_t j = 0; j < out.size(); ++j)
            r.add_term(t.partitions[j].parts(), out[j]);
    }
    return r;
}

Tensor generator_coproduct(Basis b, int n)
{
    const Space s = sym_space(b);
    Tensor r({s, s});
    if (b == Basis::p) {
        r.add_term({Word{n}, Word{}}, Scalar(1));
        r.add_term({Word{}, Word{n}}, Scalar(1));
        return r;
    }
    for (int i = 0; i <= n; ++i) {
        Word left = i ? Word{i} : Word{};
        Word right = n - i ? Word{n - i} : Word{};
        r.add_term({left, right}, Scalar(1));
    }
    return r;
}

Element generator_antipode(Basis b, int n)
{
    const Space s = sym_space(b);
    if (b == Basis::p)
        return Element::basis(s, {n}, Scalar(-1));
    Element r(s);
    for (const auto& c : compositions_of(n))
        r.add_term(c.parts(), Scalar(c.length() % 2 ? -1 : 1));
    return r;
}

} // namespace

Element sym_convert_rational(const Element& f, Basis to) { return convert_impl(f, to); }

Element sym_convert(const Element& f, Basis to)
{
    Element r = convert_impl(f, to);
    if (to == Basis::p && f.ground() == Ground::integers && !r.integral())
        throw DomainError("conversion to the p basis is not integral; use rational scalars");
    if (f.ground() == Ground::integers && r.integral())
        r.set_ground(Ground::integers);
    return r;
}

Element sym_mul_monomial_words(const Word& a, const Word& b)
{
    Element ea = convert_impl(Element::basis(kSymM, a), Basis::e);
    Element eb = convert_impl(Element::basis(kSymM, b), Basis::e);
    Element r = convert_impl(ea * eb, Basis::m);
    r.set_ground(Ground::integers);
    return r;
}

Tensor sym_coproduct(const Element& f)
{
    require_sym(f, "sym_coproduct");
    const Basis b = f.algebra() == Algebra::scalar ? Basis::e : f.basis_tag();
    if (b == Basis::m) {
        Tensor viaE = sym_coproduct(convert_impl(f, Basis::e));
        Tensor left = map_factor(viaE, 0, [](const Word& w) { return convert_impl(Element::basis(kSymE, w), Basis::m); });
        return map_factor(left, 1, [](const Word& w) { return convert_impl(Element::basis(kSymE, w), Basis::m); });
    }
    const std::vector<Space> spaces{sym_space(b), sym_space(b)};
    return apply_linear(f, spaces, [&](const Word& w) {
        return extend_on_word(spaces, w, [&](int g) { return generator_coproduct(b, g); });
    });
}

Element sym_antipode(const Element& f)
{
    require_sym(f, "sym_antipode");
    const Basis b = f.algebra() == Algebra::scalar ? Basis::e : f.basis_tag();
    if (b == Basis::m)
        return convert_impl(sym_antipode(convert_impl(f, Basis::e)), Basis::m);
    return apply_linear(f, sym_space(b), [&](const Word& w) {
        return extend_on_word(sym_space(b), w, [&](int g) { return generator_antipode(b, g); });
    });
}

Scalar hall_pair(const Element& f, const Element& g)
{
    Element fh = convert_impl(f, Basis::h);
    Element gm = convert_impl(g, Basis::m);
    Scalar s;
    for (const auto& [w, c] : fh.terms())
        s += c * gm.coefficient(w);
    return s;
}

MultiPoly sym_expand(const Element& f, int nvars)
{
    if (nvars < 1)
        throw DomainError("sym_expand: need at least one variable");
    MultiPoly r(nvars);
    if (f.algebra() == Algebra::scalar) {
        r.add_term(std::vector<int>(static_cast<std::size_t>(nvars), 0), f.constant_term());
        return r;
    }
    require_sym(f, "sym_expand");
    for (const auto& [w, c] : f.terms())
        r += expand_word(f.basis_tag(), w, nvars) * c;
    return r;
}

Element sym_from_polynomial(const MultiPoly& poly)
{
    Element r(kSymM);
    for (const auto& [exps, c] : poly.terms()) {
        if (!std::is_sorted(exps.begin(), exps.end(), std::greater<>()))
            continue;
        Word w;
        for (int e : exps)
            if (e > 0)
                w.push_back(e);
        r.add_term(std::move(w), c);
    }
    return r;
}

Element sym_involution(const Element& f, SymInvolution which)
{
    Element fe = convert_impl(f, Basis::e);
    const Basis target = which == SymInvolution::dual ? Basis::e : Basis::h;
    Element r = apply_linear(fe, sym_space(target), [&](const Word& w) {
        return extend_on_word(sym_space(target), w, [&](int k) {
            const Scalar sign(k % 2 ? -1 : 1);
            return Element::basis(sym_space(target), {k}, which == SymInvolution::omega ? Scalar(1) : sign);
        });
    });
    r.set_ground(f.ground());
    return r;
}

bool sym_equal(const Element& a, const Element& b)
{
    return convert_impl(a, Basis::e) == convert_impl(b, Basis::e);
}

} // namespace chopf
