#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace oracle {

Poly poly_mul(const Poly& a, const Poly& b)
{
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

void poly_add(Poly& a, const Poly& b, const mpq_class& scale)
{
    for (const auto& [e, c] : b)
        a[e] += scale * c;
    std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
}

Poly from_multipoly(const chopf::MultiPoly& p)
{
    Poly out;
    for (const auto& [e, c] : p.terms())
        out[e] = c.raw();
    return out;
}

namespace {

Poly one(int n) { return Poly{{std::vector<int>(n, 0), 1}}; }

// all exponent vectors of length n with entries >= 0 summing to k
void each_exponent(int n, int k, const std::function<void(const std::vector<int>&)>& f)
{
    std::vector<int> e(n, 0);
    std::function<void(int, int)> rec = [&](int i, int rest) {
        if (i == n - 1) {
            e[i] = rest;
            f(e);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            e[i] = v;
            rec(i + 1, rest - v);
        }
    };
    if (n == 0) {
        if (k == 0)
            f(e);
        return;
    }
    rec(0, k);
}

} // namespace

Poly e_poly(int k, int n)
{
    Poly out;
    each_exponent(n, k, [&](const std::vector<int>& e) {
        if (std::all_of(e.begin(), e.end(), [](int v) { return v <= 1; }))
            out[e] = 1;
    });
    return out;
}

Poly h_poly(int k, int n)
{
    Poly out;
    each_exponent(n, k, [&](const std::vector<int>& e) { out[e] = 1; });
    return out;
}

Poly p_poly(int k, int n)
{
    Poly out;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = k;
        out[e] = 1;
    }
    return out;
}

Poly m_poly(const Word& lambda, int n)
{
    Poly out;
    if (static_cast<int>(lambda.size()) > n)
        return out;
    std::vector<int> e(lambda);
    e.resize(n, 0);
    std::sort(e.begin(), e.end());
    do
        out[e] = 1;
    while (std::next_permutation(e.begin(), e.end()));
    return out;
}

Poly sym_poly(const chopf::Element& f, int n)
{
    Poly out;
    for (const auto& [w, c] : f.terms()) {
        Poly term = one(n);
        switch (f.basis_tag()) {
        case chopf::Basis::m: term = m_poly(w, n); break;
        case chopf::Basis::e:
        case chopf::Basis::h:
        case chopf::Basis::p:
            for (int k : w) {
                const Poly g = f.basis_tag() == chopf::Basis::e ? e_poly(k, n)
                             : f.basis_tag() == chopf::Basis::h ? h_poly(k, n)
                                                                : p_poly(k, n);
                term = poly_mul(term, g);
            }
            break;
        default: throw std::invalid_argument("not a symmetric function basis");
        }
        poly_add(out, term, c.raw());
    }
    return out;
}

Poly monomial_qsym_poly(const Word& comp, int n)
{
    Poly out;
    const int k = static_cast<int>(comp.size());
    std::vector<int> pick(n, 0);
    std::fill(pick.end() - std::min(k, n), pick.end(), 1);
    if (k > n)
        return out;
    // each 0/1 pattern with k ones is a choice i_1 < ... < i_k
    do {
        std::vector<int> e(n, 0);
        int j = 0;
        for (int i = 0; i < n; ++i)
            if (pick[i])
                e[i] = comp[j++];
        out[e] = 1;
    } while (std::next_permutation(pick.begin(), pick.end()));
    return out;
}

Poly qsym_poly(const chopf::Element& f, int n)
{
    Poly out;
    for (const auto& [w, c] : f.terms())
        poly_add(out, monomial_qsym_poly(w, n), c.raw());
    return out;
}

std::vector<Word> all_compositions(int n)
{
    std::vector<Word> out;
    if (n == 0)
        return {Word{}};
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        Word w{1};
        for (int i = 0; i < n - 1; ++i) {
            if (mask & (1u << i))
                w.push_back(1);
            else
                ++w.back();
        }
        out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> all_partitions(int n)
{
    std::vector<Word> out;
    for (auto w : all_compositions(n))
        if (std::is_sorted(w.begin(), w.end(), std::greater<>()))
            out.push_back(w);
    return out;
}

std::vector<Word> adjacent_coarsenings(const Word& comp)
{
    std::vector<Word> out;
    if (comp.empty())
        return {Word{}};
    const int gaps = static_cast<int>(comp.size()) - 1;
    for (unsigned mask = 0; mask < (1u << gaps); ++mask) {
        Word w{comp[0]};
        for (int i = 0; i < gaps; ++i) {
            if (mask & (1u << i))
                w.back() += comp[i + 1];
            else
                w.push_back(comp[i + 1]);
        }
        out.push_back(w);
    }
    return out;
}

chopf::Element qsym_antipode_closed_form(const Word& comp)
{
    Word rev(comp.rbegin(), comp.rend());
    chopf::Element out(chopf::kQSym);
    const chopf::Scalar sign(comp.size() % 2 ? -1 : 1);
    for (const auto& j : adjacent_coarsenings(rev))
        out.add_term(j, sign);
    return out;
}

std::size_t rank(std::vector<std::vector<mpq_class>> m)
{
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            const mpq_class f = m[i][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k)
                m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

std::vector<mpq_class> solve(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b)
{
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0)
            ++p;
        if (p == n)
            throw std::runtime_error("singular system");
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0)
                continue;
            const mpq_class f = a[i][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k)
                a[i][k] -= f * a[c][k];
            b[i] -= f * b[c];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        b[i] /= a[i][i];
    return b;
}

std::map<Word, mpq_class> monomial_in_elementary(const Word& lambda)
{
    int n = 0;
    for (int v : lambda)
        n += v;
    const auto parts = all_partitions(n);
    // coordinates: coefficient of the sorted monomial x^mu (mu padded to n variables)
    auto coords = [&](const Poly& p) {
        std::vector<mpq_class> v;
        for (const auto& mu : parts) {
            std::vector<int> e(mu);
            e.resize(n, 0);
            auto it = p.find(e);
            v.push_back(it == p.end() ? mpq_class(0) : it->second);
        }
        return v;
    };
    std::vector<std::vector<mpq_class>> a(parts.size(), std::vector<mpq_class>(parts.size()));
    for (std::size_t j = 0; j < parts.size(); ++j) {
        Poly e = one(n);
        for (int k : parts[j])
            e = poly_mul(e, e_poly(k, n));
        const auto v = coords(e);
        for (std::size_t i = 0; i < parts.size(); ++i)
            a[i][j] = v[i];
    }
    const auto x = solve(a, coords(m_poly(lambda, n)));
    std::map<Word, mpq_class> out;
    for (std::size_t j = 0; j < parts.size(); ++j)
        if (x[j] != 0)
            out[parts[j]] = x[j];
    return out;
}

mpq_class negative_binomial(int a, int k)
{
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(a + k - 1), static_cast<unsigned long>(k));
    return mpq_class(k % 2 ? -b : b);
}

mpq_class normal_bundle_number(int n, const Word& lambda)
{
    mpq_class total = 0;
    for (const auto& [mu, c] : monomial_in_elementary(lambda)) {
        mpq_class term = c;
        for (int k : mu)
            term *= negative_binomial(n + 1, k);
        total += term;
    }
    return total;
}

namespace {

using Pair = std::pair<Word, Word>; // (e partition, t partition)
using TensorPoly = std::map<Pair, mpq_class>;

Word merged(Word a, const Word& b)
{
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end(), std::greater<>());
    return a;
}

TensorPoly tensor_mul(const TensorPoly& a, const TensorPoly& b)
{
    TensorPoly out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b)
            out[{merged(ka.first, kb.first), merged(ka.second, kb.second)}] += ca * cb;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

// [T^n] t(T)^k as a map t-partition -> coefficient, t(T) = sum_{j >= 0} t_j T^{j+1}, t_0 = 1
std::map<Word, mpq_class> power_coefficient(int n, int k)
{
    std::map<Word, mpq_class> out;
    Word parts(k, 1);
    std::function<void(int, int)> rec = [&](int i, int rest) {
        if (i == k) {
            if (rest == 0) {
                Word t;
                for (int v : parts)
                    if (v > 1)
                        t.push_back(v - 1);
                std::sort(t.begin(), t.end(), std::greater<>());
                out[t] += 1;
            }
            return;
        }
        for (int v = 1; v <= rest; ++v) {
            parts[i] = v;
            rec(i + 1, rest - v);
        }
    };
    rec(0, n);
    return out;
}

TensorPoly psi_generator(int n)
{
    TensorPoly out;
    for (int k = 1; k <= n; ++k)
        for (const auto& [t, c] : power_coefficient(n, k))
            out[{Word{k}, t}] += c;
    return out;
}

} // namespace

std::size_t invariant_kernel_dimension(int weight)
{
    const auto rows = all_partitions(weight);
    std::map<Pair, std::size_t> cols;
    std::vector<TensorPoly> images;
    for (const auto& lambda : rows) {
        TensorPoly img{{{Word{}, Word{}}, 1}};
        for (int k : lambda)
            img = tensor_mul(img, psi_generator(k));
        img[{lambda, Word{}}] -= 1;
        std::erase_if(img, [](const auto& kv) { return kv.second == 0; });
        for (const auto& [key, c] : img)
            cols.try_emplace(key, cols.size());
        images.push_back(img);
    }
    std::vector<std::vector<mpq_class>> m(rows.size(), std::vector<mpq_class>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [key, c] : images[i])
            m[i][cols.at(key)] = c;
    return rows.size() - rank(m);
}

chopf::Element random_element(std::mt19937& rng, chopf::Space space, int max_weight, int max_terms)
{
    std::uniform_int_distribution<int> weight_dist(0, max_weight);
    std::uniform_int_distribution<int> terms_dist(1, max_terms);
    std::uniform_int_distribution<int> coeff_dist(-9, 9);
    const bool commutative = space.algebra == chopf::Algebra::sym || space.algebra == chopf::Algebra::fdb;
    chopf::Element out(space);
    const int terms = terms_dist(rng);
    for (int i = 0; i < terms; ++i) {
        const int w = space.algebra == chopf::Algebra::scalar ? 0 : weight_dist(rng);
        const auto words = commutative ? all_partitions(w) : all_compositions(w);
        const Word& word = words[std::uniform_int_distribution<std::size_t>(0, words.size() - 1)(rng)];
        out.add_term(word, chopf::Scalar(coeff_dist(rng)));
    }
    return out;
}

} // namespace oracle
