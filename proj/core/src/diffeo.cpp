#include "chopf/diffeo.hpp"

#include <map>
#include <mutex>

#include "chopf/errors.hpp"
#include "chopf/sym.hpp"

namespace chopf {

namespace {

std::mutex g_mutex;
std::map<std::pair<Basis, int>, Tensor> g_fdb_coproduct;
std::map<std::pair<Basis, int>, Element> g_fdb_antipode;
std::map<int, Tensor> g_bfk_coproduct;
std::map<int, Element> g_bfk_antipode;

template <class Map, class Key, class Fn>
auto cached(Map& map, const Key& key, Fn compute)
{
    {
        std::lock_guard lock(g_mutex);
        auto it = map.find(key);
        if (it != map.end())
            return it->second;
    }
    auto value = compute();
    std::lock_guard lock(g_mutex);
    return map.try_emplace(key, std::move(value)).first->second;
}

Space fdb_space_of(const Element& f)
{
    if (f.algebra() == Algebra::scalar)
        return kFdB;
    if (f.algebra() != Algebra::fdb)
        throw TypeError("expected a Faa di Bruno element");
    return f.space();
}

Element require_nsym(const Element& f, const char* what)
{
    if (f.algebra() == Algebra::scalar)
        return f.relabeled(kNSym);
    if (f.algebra() != Algebra::nsym)
        throw TypeError(std::string(what) + ": expected an N* element");
    return f;
}

void reject_beta(const Word& w)
{
    for (int g : w)
        if (g == 0)
            throw DomainError("the central generator beta has no Faa di Bruno coproduct or antipode");
}

Element generator_element(Space s, int k) { return k == 0 ? Element::one(s) : Element::basis(s, {k}); }

Tensor fdb_generator_coproduct(Space s, int n)
{
    return cached(g_fdb_coproduct, std::pair{s.basis, n}, [&] {
        const Series t = fdb_generic_series(s, n + 1);
        Tensor r({s, s});
        Series power = Series::constant(Element::one(s), 1, n + 1);
        for (int k = 1; k <= n + 1; ++k) {
            power = power * t;
            r += Tensor::of({generator_element(s, k - 1), power.coefficient(n + 1)});
        }
        return r;
    });
}

Element fdb_generator_antipode(Space s, int n)
{
    return cached(g_fdb_antipode, std::pair{s.basis, n}, [&] {
        return ps_revert(fdb_generic_series(s, n + 1)).coefficient(n + 1);
    });
}

Tensor bfk_generator_coproduct(int n)
{
    return cached(g_bfk_coproduct, n, [&] {
        const Series z = nsym_generic_series(n + 1);
        Tensor r({kNSym, kNSym});
        Series power = Series::constant(Element::one(kNSym), 1, n + 1);
        for (int k = 1; k <= n + 1; ++k) {
            power = power * z;
            // res_U U^(-k-1) Z(U) picks out Z_(k-1)
            const Element left = ps_residue(ps_shift(z, -k - 1));
            r += Tensor::of({left, power.coefficient(n + 1)});
        }
        return r;
    });
}

Element bfk_antipode_word(const Word& w);

Element bfk_generator_antipode(int n)
{
    return cached(g_bfk_antipode, n, [&] {
        Element r = Element::basis(kNSym, {n}, Scalar(-1));
        for (const auto src = bfk_generator_coproduct(n); const auto& [k, c] : src.terms()) {
            if (k[0].empty() || k[1].empty())
                continue;
            r -= bfk_antipode_word(k[0]) * Element::basis(kNSym, k[1], c);
        }
        return r;
    });
}

Element bfk_antipode_word(const Word& w) { return extend_on_word(kNSym, w, bfk_generator_antipode, true); }

} // namespace

Series fdb_generic_series(Space space, int cap)
{
    std::vector<Element> coeffs;
    for (int k = 0; k < cap; ++k)
        coeffs.push_back(generator_element(space, k));
    return Series::from_coefficients(coeffs, cap, 1);
}

Series nsym_generic_series(int cap) { return fdb_generic_series(kNSym, cap); }

Tensor fdb_coproduct(const Element& f)
{
    const Space s = fdb_space_of(f);
    const std::vector<Space> spaces{s, s};
    return apply_linear(f.relabeled(s), spaces, [&](const Word& w) {
        reject_beta(w);
        return extend_on_word(spaces, w, [&](int g) { return fdb_generator_coproduct(s, g); });
    });
}

Element fdb_antipode(const Element& f)
{
    const Space s = fdb_space_of(f);
    return apply_linear(f.relabeled(s), s, [&](const Word& w) {
        reject_beta(w);
        return extend_on_word(s, w, [&](int g) { return fdb_generator_antipode(s, g); });
    });
}

Tensor bfk_coproduct(const Element& f)
{
    const std::vector<Space> spaces{kNSym, kNSym};
    return apply_linear(require_nsym(f, "bfk_coproduct"), spaces, [&](const Word& w) {
        return extend_on_word(spaces, w, bfk_generator_coproduct);
    });
}

Element bfk_antipode(const Element& f)
{
    return apply_linear(require_nsym(f, "bfk_antipode"), kNSym, bfk_antipode_word);
}

Element bfk_abelianize(const Element& f, Basis letter)
{
    if (letter != Basis::t && letter != Basis::b)
        throw TypeError("bfk_abelianize: target letter must be t or b");
    Element r = require_nsym(f, "bfk_abelianize").relabeled(Space{Algebra::fdb, letter});
    r.set_ground(f.ground());
    return r;
}

Tensor coaction_sym(const Element& f)
{
    if (f.algebra() != Algebra::sym && f.algebra() != Algebra::scalar)
        throw TypeError("coaction_sym: expected a symmetric function");
    const Basis basis = f.algebra() == Algebra::scalar ? Basis::e : f.basis_tag();
    const Element fe = sym_convert_rational(f.algebra() == Algebra::scalar ? f.relabeled(kSymE) : f, Basis::e);
    const std::vector<Space> spaces{kSymE, kFdB};
    auto generator = [](int n) {
        const Series t = fdb_generic_series(kFdB, n);
        Tensor r({kSymE, kFdB});
        Series power = Series::constant(Element::one(kFdB), 1, n);
        for (int k = 1; k <= n; ++k) {
            power = power * t;
            r += Tensor::of({Element::basis(kSymE, {k}), power.coefficient(n)});
        }
        return r;
    };
    Tensor r = apply_linear(fe, spaces, [&](const Word& w) { return extend_on_word(spaces, w, generator); });
    if (basis == Basis::e)
        return r;
    return map_factor(r, 0, [&](const Word& w) { return sym_convert_rational(Element::basis(kSymE, w), basis); });
}

Tensor coaction_nsym(const Element& f) { return bfk_coproduct(f); }

} // namespace chopf
