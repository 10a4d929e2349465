#include "chopf/topology.hpp"

#include "chopf/diffeo.hpp"
#include "chopf/errors.hpp"
#include "chopf/multipoly.hpp"
#include "chopf/nsym.hpp"
#include "chopf/sym.hpp"

namespace chopf {

Series b_series(int cap)
{
    if (cap < 1)
        throw DomainError("series cap must be at least 1");
    return fdb_generic_series(kFdBb, cap);
}

Series miscenko_log(int cap) { return ps_revert(b_series(cap)); }

Series fgl(int cap)
{
    const Series log = miscenko_log(cap);
    return ps_compose(b_series(cap), ps_embed(log, 0) + ps_embed(log, 1));
}

Element beta_element() { return Element::basis(kFdBb, {0}); }

Series beta_series(int cap)
{
    Series log = beta_element() * miscenko_log(cap);
    log.set_ground(Ground::rationals);
    return ps_exp(log);
}

Element cp_hurewicz(int n)
{
    if (n < 0)
        throw DomainError("cp_hurewicz: negative dimension");
    if (n == 0)
        return Element::one(kFdBb);
    return Scalar(n + 1) * fdb_antipode(Element::basis(kFdBb, {n}));
}

Scalar cp_char_number(int n, const Partition& lambda)
{
    if (lambda.weight() != n)
        throw DomainError("cp_char_number: |lambda| must equal n");
    return cp_hurewicz(n).coefficient(lambda.parts());
}

Scalar cp_normal_char_number(int n, const Partition& lambda)
{
    if (lambda.weight() != n)
        throw DomainError("cp_normal_char_number: |lambda| must equal n");
    const Element p = sym_convert_rational(Element::basis(kSymM, lambda.parts()), Basis::p);
    Scalar total;
    for (const auto& [w, c] : p.terms()) {
        // every p_k contributes -(n+1) x^k and the degrees add up to n
        Scalar term = c;
        for (std::size_t i = 0; i < w.size(); ++i)
            term *= Scalar(-(n + 1));
        total += term;
    }
    return total;
}

void ProjectiveProductSpace::validate() const
{
    for (int n : factors)
        if (n < 0)
            throw DomainError("projective space dimensions must be nonnegative");
    for (const auto& r : roots)
        if (r.size() != factors.size())
            throw DomainError("every root needs one coefficient per factor");
}

int ProjectiveProductSpace::dimension() const
{
    int d = 0;
    for (int n : factors)
        d += n;
    return d;
}

namespace {

// M_I on the ordered roots: P[k] accumulates the first k parts.
MultiPoly evaluate_monomial(const ProjectiveProductSpace& x, const Word& index)
{
    const int m = static_cast<int>(x.factors.size());
    std::vector<MultiPoly> partial(index.size() + 1, MultiPoly(m));
    partial[0] = MultiPoly::constant(m, Scalar(1));
    for (const auto& root : x.roots) {
        const MultiPoly y = MultiPoly::linear(root);
        for (std::size_t k = index.size(); k >= 1; --k) {
            if (partial[k - 1].is_zero())
                continue;
            MultiPoly power = MultiPoly::constant(m, Scalar(1));
            for (int e = 0; e < index[k - 1]; ++e)
                power = power.mul_truncated(y, x.factors);
            partial[k] += partial[k - 1].mul_truncated(power, x.factors);
        }
    }
    return partial.back();
}

Scalar pushforward(const ProjectiveProductSpace& x, const MultiPoly& f) { return f.coefficient(x.factors); }

} // namespace

Scalar quasitoric_evaluate(const ProjectiveProductSpace& x, const Element& f)
{
    x.validate();
    if (f.algebra() != Algebra::qsym && f.algebra() != Algebra::scalar)
        throw TypeError("quasitoric evaluation expects a quasisymmetric function");
    Scalar total;
    for (const auto& [w, c] : f.terms())
        total += c * pushforward(x, evaluate_monomial(x, w));
    return total;
}

Scalar quasitoric_char_number(const ProjectiveProductSpace& x, const Composition& index, CharConvention convention)
{
    const Element m = Element::basis(kQSym, index.parts());
    if (convention == CharConvention::tangential)
        return quasitoric_evaluate(x, m);
    const Scalar v = quasitoric_evaluate(x, qsym_antipode(m));
    return index.weight() % 2 ? -v : v;
}

Element crn_invariant(int k)
{
    if (k < 1)
        throw DomainError("crn_invariant: k must be at least 1");
    Element r(kNSym);
    for (const auto& c : compositions_of(k))
        r.add_term(c.parts(), Scalar(1));
    return r;
}

Series cumulant_series(int cap)
{
    if (cap < 1)
        throw DomainError("series cap must be at least 1");
    const Series z = nsym_generic_series(cap);
    return ps_negate_variable(ps_map(z, kNSym, bfk_antipode));
}

Series cp_infinity_coproduct(int cap)
{
    if (cap < 1)
        throw DomainError("series cap must be at least 1");
    const Series z = nsym_generic_series(cap);
    const Series chi = ps_map(z, kNSym, bfk_antipode);
    return ps_compose(z, ps_embed(chi, 0) + ps_embed(chi, 1));
}

} // namespace chopf
