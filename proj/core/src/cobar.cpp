#include "chopf/cobar.hpp"

#include <map>
#include <stdexcept>

#include "chopf/diffeo.hpp"
#include "chopf/errors.hpp"
#include "chopf/linalg.hpp"

namespace chopf {

std::string_view algebroid_name(AlgebroidKind k) { return k == AlgebroidKind::sym_fdb ? "S.B" : "N.N"; }

std::optional<AlgebroidKind> algebroid_from_name(std::string_view s)
{
    if (s == "S.B")
        return AlgebroidKind::sym_fdb;
    if (s == "N.N")
        return AlgebroidKind::nsym_bfk;
    return std::nullopt;
}

SplitAlgebroid::SplitAlgebroid(AlgebroidKind kind)
    : kind_(kind), base_(kind == AlgebroidKind::sym_fdb ? kSymE : kNSym), hopf_(kind == AlgebroidKind::sym_fdb ? kFdB : kNSym)
{
}

Tensor SplitAlgebroid::left_unit(const Element& a) const { return Tensor::of({a, Element::one(hopf_)}); }

Tensor SplitAlgebroid::right_unit(const Element& a) const
{
    return kind_ == AlgebroidKind::sym_fdb ? coaction_sym(a) : coaction_nsym(a);
}

Tensor SplitAlgebroid::coaction_word(const Word& w) const { return right_unit(Element::basis(base_, w)); }

Tensor SplitAlgebroid::hopf_coproduct_word(const Word& w) const
{
    const Element h = Element::basis(hopf_, w);
    return kind_ == AlgebroidKind::sym_fdb ? fdb_coproduct(h) : bfk_coproduct(h);
}

Element SplitAlgebroid::counit(const Tensor& x) const
{
    if (x.arity() != 2)
        throw TypeError("algebroid counit expects A (x) H");
    Element r(base_);
    for (const auto& [k, c] : x.terms())
        if (k[1].empty())
            r.add_term(k[0], c);
    return r;
}

namespace {

std::vector<Word> words_of(Space s, int weight)
{
    std::vector<Word> out;
    if (s.algebra == Algebra::nsym) {
        for (const auto& c : compositions_of(weight))
            out.push_back(c.parts());
    }
    else {
        for (const auto& p : partitions_of(weight))
            out.push_back(p.parts());
    }
    return out;
}

std::vector<Space> level_spaces(const SplitAlgebroid& alg, int level)
{
    std::vector<Space> s{alg.base()};
    s.insert(s.end(), static_cast<std::size_t>(level), alg.hopf());
    return s;
}

Tensor unit_scalar_tensor() { return Tensor::one({}); }

} // namespace

std::vector<Word> SplitAlgebroid::base_words(int weight) const { return words_of(base_, weight); }
std::vector<Word> SplitAlgebroid::hopf_words(int weight) const { return words_of(hopf_, weight); }

Tensor cobar_level0(const SplitAlgebroid& alg, const Element& a)
{
    if (!(a.space() == alg.base()) && a.algebra() != Algebra::scalar)
        throw TypeError("cobar: element is not in the base algebra");
    return Tensor::of({a.algebra() == Algebra::scalar ? a.relabeled(alg.base()) : a});
}

Tensor coface(const SplitAlgebroid& alg, const Tensor& x, int i)
{
    const int n = static_cast<int>(x.arity()) - 1;
    if (i < 0 || i > n + 1)
        throw DomainError("coface index out of range");
    if (i == 0)
        return expand_factor(x, 0, [&](const Word& w) { return alg.coaction_word(w); });
    if (i <= n)
        return expand_factor(x, static_cast<std::size_t>(i), [&](const Word& w) { return alg.hopf_coproduct_word(w); });
    return tensor(x, Element::one(alg.hopf()));
}

Tensor codegeneracy(const SplitAlgebroid& alg, const Tensor& x, int j)
{
    const int n = static_cast<int>(x.arity()) - 1;
    if (j < 0 || j >= n)
        throw DomainError("codegeneracy index out of range");
    (void)alg;
    return expand_factor(x, static_cast<std::size_t>(j + 1), [](const Word& w) {
        return w.empty() ? unit_scalar_tensor() : Tensor(std::vector<Space>{});
    });
}

Tensor cobar_differential(const SplitAlgebroid& alg, const Tensor& x)
{
    const int n = static_cast<int>(x.arity()) - 1;
    if (n > kMaxCobarLevel)
        throw CapabilityError("cobar differential is bounded at level " + std::to_string(kMaxCobarLevel));
    Tensor r(level_spaces(alg, n + 1));
    for (int i = 0; i <= n + 1; ++i) {
        Tensor f = coface(alg, x, i);
        if (i % 2)
            r -= f;
        else
            r += f;
    }
    return r;
}

std::vector<Tensor::Key> normalized_cochain_basis(const SplitAlgebroid& alg, int level, int weight)
{
    std::vector<Tensor::Key> out;
    for (int a = 0; a <= weight; ++a) {
        const int rest = weight - a;
        std::vector<std::vector<int>> splits;
        if (level == 0) {
            if (rest != 0)
                continue;
            splits.push_back({});
        }
        else {
            for (const auto& c : compositions_of(rest))
                if (c.length() == level)
                    splits.push_back(c.parts());
        }
        for (const auto& aw : alg.base_words(a))
            for (const auto& split : splits) {
                std::vector<Tensor::Key> partial{{aw}};
                for (int hw : split) {
                    std::vector<Tensor::Key> next;
                    for (const auto& k : partial)
                        for (const auto& h : alg.hopf_words(hw)) {
                            Tensor::Key nk = k;
                            nk.push_back(h);
                            next.push_back(std::move(nk));
                        }
                    partial = std::move(next);
                }
                out.insert(out.end(), partial.begin(), partial.end());
            }
    }
    return out;
}

namespace {

std::size_t differential_rank(const SplitAlgebroid& alg, int level, int weight)
{
    const auto rows = normalized_cochain_basis(alg, level, weight);
    const auto cols = normalized_cochain_basis(alg, level + 1, weight);
    std::map<Tensor::Key, std::size_t> col_index;
    for (std::size_t j = 0; j < cols.size(); ++j)
        col_index.emplace(cols[j], j);
    Matrix m(rows.size(), std::vector<Scalar>(cols.size()));
    const auto spaces = level_spaces(alg, level);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Tensor x(spaces);
        x.add_term(rows[i], Scalar(1));
        for (const auto src = cobar_differential(alg, x); const auto& [k, c] : src.terms()) {
            auto it = col_index.find(k);
            if (it == col_index.end())
                throw std::logic_error("cobar differential left the normalized subcomplex");
            m[i][it->second] = c;
        }
    }
    return rank(std::move(m));
}

} // namespace

int cohomology_rank(const SplitAlgebroid& alg, int weight, int degree)
{
    if (weight < 0 || degree < 0)
        throw DomainError("cohomology_rank: negative weight or degree");
    if (weight > kMaxCohomologyWeight)
        throw CapabilityError("cohomology_rank: weight bound is " + std::to_string(kMaxCohomologyWeight));
    if (degree > kMaxCohomologyDegree)
        throw CapabilityError("cohomology_rank: degree bound is " + std::to_string(kMaxCohomologyDegree));
    const auto dim = static_cast<int>(normalized_cochain_basis(alg, degree, weight).size());
    const auto out_rank = static_cast<int>(differential_rank(alg, degree, weight));
    const int in_rank = degree == 0 ? 0 : static_cast<int>(differential_rank(alg, degree - 1, weight));
    return dim - out_rank - in_rank;
}

Element right_unit_functional(int k, const Composition& index)
{
    if (k < 0)
        throw DomainError("right_unit_functional: negative generator index");
    const Element z = k == 0 ? Element::one(kNSym) : Element::basis(kNSym, {k});
    Element r(kNSym);
    for (const auto src = bfk_coproduct(z); const auto& [key, c] : src.terms())
        if (key[1] == index.parts())
            r.add_term(key[0], c);
    return r;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Space> gamma_spaces(const SplitAlgebroid& alg, int n)
{
    std::vector<Space> s{alg.base()};
    for (int i = 0; i < n; ++i) {
        s.push_back(alg.base());
        s.push_back(alg.hopf());
    }
    return s;
}

// Moves the A-part of gamma_i (1-based) into the previous factor.
Tensor absorb(const SplitAlgebroid& alg, const Tensor& x, int i)
{
    const std::size_t pos = static_cast<std::size_t>(2 * i - 1);
    std::vector<Space> spaces = x.factors();
    spaces.erase(spaces.begin() + static_cast<long>(pos));
    Tensor r(spaces);
    for (const auto& [k, c] : x.terms()) {
        if (i == 1) {
            // a (x)_A (a_1 (x) h_1) = (a a_1) (x) h_1 through the left unit
            for (const auto src = multiply_words(alg.base(), k[0], k[1]); const auto& [w, cw] : src.terms()) {
                Tensor::Key nk = k;
                nk[0] = w;
                nk.erase(nk.begin() + 1);
                r.add_term(std::move(nk), c * cw);
            }
            continue;
        }
        // (a' (x) h') (x)_A (a_i (x) h_i) = (a' (x) h') eta_R(a_i) (x)_A (1 (x) h_i)
        for (const auto src = alg.coaction_word(k[pos]); const auto& [pk, pc] : src.terms()) {
            const Element left = multiply_words(alg.base(), k[pos - 2], pk[0]);
            const Element right = multiply_words(alg.hopf(), k[pos - 1], pk[1]);
            for (const auto& [lw, lc] : left.terms())
                for (const auto& [rw, rc] : right.terms()) {
                    Tensor::Key nk = k;
                    nk[pos - 2] = lw;
                    nk[pos - 1] = rw;
                    nk.erase(nk.begin() + static_cast<long>(pos));
                    r.add_term(std::move(nk), c * pc * lc * rc);
                }
        }
    }
    return r;
}

} // namespace

Tensor gamma_word(const SplitAlgebroid& alg, const Element& a, const std::vector<std::pair<Element, Element>>& gammas)
{
    std::vector<Element> parts{a};
    for (const auto& [ai, hi] : gammas) {
        parts.push_back(ai);
        parts.push_back(hi);
    }
    Tensor t = Tensor::of(parts);
    if (!(t.factors() == gamma_spaces(alg, static_cast<int>(gammas.size()))))
        throw TypeError("gamma_word: factors are not in (A, A, H, ...)");
    return t;
}

Tensor normalize_gamma_word(const SplitAlgebroid& alg, const Tensor& x)
{
    const int n = (static_cast<int>(x.arity()) - 1) / 2;
    Tensor r = x;
    for (int i = n; i >= 1; --i)
        r = absorb(alg, r, i);
    return r;
}

Tensor gamma_coface(const SplitAlgebroid& alg, const Tensor& x, int i)
{
    const int n = (static_cast<int>(x.arity()) - 1) / 2;
    if (i < 0 || i > n + 1)
        throw DomainError("coface index out of range");
    Tensor r(gamma_spaces(alg, n + 1));
    for (const auto& [k, c] : x.terms()) {
        if (i == 0) {
            // a (x)_A gammas  ->  1 (x)_A eta_R(a) (x)_A gammas
            for (const auto src = alg.coaction_word(k[0]); const auto& [pk, pc] : src.terms()) {
                Tensor::Key nk{Word{}, pk[0], pk[1]};
                nk.insert(nk.end(), k.begin() + 1, k.end());
                r.add_term(std::move(nk), c * pc);
            }
        }
        else if (i <= n) {
            const std::size_t pos = static_cast<std::size_t>(2 * i - 1);
            for (const auto src = alg.hopf_coproduct_word(k[pos + 1]); const auto& [hk, hc] : src.terms()) {
                Tensor::Key nk(k.begin(), k.begin() + static_cast<long>(pos));
                nk.push_back(k[pos]);
                nk.push_back(hk[0]);
                nk.push_back(Word{});
                nk.push_back(hk[1]);
                nk.insert(nk.end(), k.begin() + static_cast<long>(pos) + 2, k.end());
                r.add_term(std::move(nk), c * hc);
            }
        }
        else {
            Tensor::Key nk = k;
            nk.push_back(Word{});
            nk.push_back(Word{});
            r.add_term(std::move(nk), c);
        }
    }
    return r;
}

} // namespace chopf
