#include "chopf/nsym.hpp"

#include <algorithm>

#include <functional>
#include <map>
#include <mutex>

#include "chopf/errors.hpp"
#include "chopf/sym.hpp"

namespace chopf {

namespace {

void require(const Element& f, Algebra a, const char* what)
{
    if (f.algebra() != a && f.algebra() != Algebra::scalar)
        throw TypeError(std::string(what) + ": expected " + std::string(algebra_name(a)) + " element");
}

Element as(const Element& f, Space s) { return f.algebra() == Algebra::scalar ? f.relabeled(s) : f; }

Tensor nsym_generator_coproduct(int n)
{
    Tensor r({kNSym, kNSym});
    for (int i = 0; i <= n; ++i)
        r.add_term({i ? Word{i} : Word{}, n - i ? Word{n - i} : Word{}}, Scalar(1));
    return r;
}

Element nsym_generator_antipode(int n)
{
    Element r(kNSym);
    for (const auto& c : compositions_of(n))
        r.add_term(c.parts(), Scalar(c.length() % 2 ? -1 : 1));
    return r;
}

std::mutex g_qsh_mutex;
std::map<std::pair<Word, Word>, Element> g_qsh_memo;
std::map<Word, Element> g_qanti_memo;

Element qsh(const Word& a, const Word& b)
{
    if (a.empty())
        return Element::basis(kQSym, b);
    if (b.empty())
        return Element::basis(kQSym, a);
    {
        std::lock_guard lock(g_qsh_mutex);
        auto it = g_qsh_memo.find({a, b});
        if (it != g_qsh_memo.end())
            return it->second;
    }
    const Word a_tail(a.begin() + 1, a.end());
    const Word b_tail(b.begin() + 1, b.end());
    Element r(kQSym);
    auto prepend = [&r](int head, const Element& rest) {
        for (const auto& [w, c] : rest.terms()) {
            Word nw{head};
            nw.insert(nw.end(), w.begin(), w.end());
            r.add_term(std::move(nw), c);
        }
    };
    prepend(a.front(), qsh(a_tail, b));
    prepend(b.front(), qsh(a, b_tail));
    prepend(a.front() + b.front(), qsh(a_tail, b_tail));
    std::lock_guard lock(g_qsh_mutex);
    return g_qsh_memo.try_emplace({a, b}, std::move(r)).first->second;
}

Element qsym_antipode_word(const Word& w)
{
    if (w.empty())
        return Element::one(kQSym);
    {
        std::lock_guard lock(g_qsh_mutex);
        auto it = g_qanti_memo.find(w);
        if (it != g_qanti_memo.end())
            return it->second;
    }
    Element r = Element::basis(kQSym, w, Scalar(-1));
    for (std::size_t cut = 1; cut < w.size(); ++cut) {
        const Word left(w.begin(), w.begin() + static_cast<long>(cut));
        const Word right(w.begin() + static_cast<long>(cut), w.end());
        r -= qsym_antipode_word(left) * Element::basis(kQSym, right);
    }
    std::lock_guard lock(g_qsh_mutex);
    return g_qanti_memo.try_emplace(w, std::move(r)).first->second;
}

} // namespace

Tensor nsym_binomial_coproduct(const Element& f)
{
    require(f, Algebra::nsym, "nsym_binomial_coproduct");
    const std::vector<Space> spaces{kNSym, kNSym};
    return apply_linear(as(f, kNSym), spaces, [&](const Word& w) {
        return extend_on_word(spaces, w, nsym_generator_coproduct);
    });
}

Element nsym_binomial_antipode(const Element& f)
{
    require(f, Algebra::nsym, "nsym_binomial_antipode");
    return apply_linear(as(f, kNSym), kNSym, [](const Word& w) {
        return extend_on_word(kNSym, w, nsym_generator_antipode, true);
    });
}

Element abelianize_nsym(const Element& f)
{
    require(f, Algebra::nsym, "abelianize_nsym");
    Element r = as(f, kNSym).relabeled(kSymE);
    r.set_ground(f.ground());
    return r;
}

Element quasi_shuffle(const Composition& a, const Composition& b) { return qsh(a.parts(), b.parts()); }

Tensor qsym_coproduct(const Element& f)
{
    require(f, Algebra::qsym, "qsym_coproduct");
    Tensor r({kQSym, kQSym});
    for (const auto src = as(f, kQSym); const auto& [w, c] : src.terms())
        for (std::size_t cut = 0; cut <= w.size(); ++cut)
            r.add_term({Word(w.begin(), w.begin() + static_cast<long>(cut)), Word(w.begin() + static_cast<long>(cut), w.end())}, c);
    return r;
}

Element qsym_antipode(const Element& f)
{
    require(f, Algebra::qsym, "qsym_antipode");
    return apply_linear(as(f, kQSym), kQSym, qsym_antipode_word);
}

Element include_sym_in_qsym(const Element& f)
{
    Element fm = sym_convert_rational(f.algebra() == Algebra::scalar ? f.relabeled(kSymM) : f, Basis::m);
    Element r(kQSym, f.ground());
    for (const auto& [w, c] : fm.terms()) {
        Word perm(w.rbegin(), w.rend());
        do {
            r.add_term(perm, c);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return r;
}

MultiPoly qsym_expand(const Element& f, int nvars)
{
    require(f, Algebra::qsym, "qsym_expand");
    MultiPoly r(nvars);
    for (const auto src = as(f, kQSym); const auto& [w, c] : src.terms()) {
        const int len = static_cast<int>(w.size());
        if (len > nvars)
            continue;
        // choose increasing positions n_1 < ... < n_r
        std::vector<int> pos(static_cast<std::size_t>(len));
        std::function<void(int, int)> rec = [&](int j, int start) {
            if (j == len) {
                std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
                for (int k = 0; k < len; ++k)
                    exps[static_cast<std::size_t>(pos[static_cast<std::size_t>(k)])] = w[static_cast<std::size_t>(k)];
                r.add_term(std::move(exps), c);
                return;
            }
            for (int p = start; p <= nvars - (len - j); ++p) {
                pos[static_cast<std::size_t>(j)] = p;
                rec(j + 1, p + 1);
            }
        };
        rec(0, 0);
    }
    return r;
}

Element qsym_from_polynomial(const MultiPoly& poly)
{
    Element r(kQSym);
    for (const auto& [exps, c] : poly.terms()) {
        // packed monomial: nonzero exponents form a prefix
        std::size_t k = 0;
        while (k < exps.size() && exps[k] > 0)
            ++k;
        bool packed = true;
        for (std::size_t j = k; j < exps.size(); ++j)
            packed = packed && exps[j] == 0;
        if (packed)
            r.add_term(Word(exps.begin(), exps.begin() + static_cast<long>(k)), c);
    }
    return r;
}

Scalar ns_qs_pair(const Element& f, const Element& g)
{
    require(f, Algebra::nsym, "ns_qs_pair");
    require(g, Algebra::qsym, "ns_qs_pair");
    Scalar s;
    for (const auto& [w, c] : f.terms())
        s += c * g.coefficient(w);
    return s;
}

Scalar ns_qs_pair(const Tensor& f, const Tensor& g)
{
    if (f.arity() != g.arity())
        throw TypeError("ns_qs_pair: tensor arity mismatch");
    Scalar s;
    for (const auto& [k, c] : f.terms())
        s += c * g.coefficient(k);
    return s;
}

} // namespace chopf
