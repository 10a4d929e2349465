#include "chopf_cli/verify.hpp"

#include <array>
#include <map>
#include <sstream>

#include "chopf/cobar.hpp"
#include "chopf/diffeo.hpp"
#include "chopf/errors.hpp"
#include "chopf/linalg.hpp"
#include "chopf/nsym.hpp"
#include "chopf/sym.hpp"
#include "chopf/topology.hpp"

namespace chopf::cli {

bool SuiteReport::passed() const
{
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

Json SuiteReport::to_json() const
{
    Json j;
    j["suite"] = suite;
    j["weight"] = weight;
    if (exploratory) {
        std::size_t holding = 0;
        for (const auto& c : checks)
            holding += c.pass;
        j["holding"] = holding;
    }
    else {
        j["passed"] = passed();
    }
    Json list = Json::array();
    for (const auto& c : checks) {
        Json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["cases"] = c.cases;
        if (!c.pass)
            e["detail"] = c.detail;
        list.push_back(std::move(e));
    }
    j["checks"] = std::move(list);
    return j;
}

std::string SuiteReport::text() const
{
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)";
        if (!c.pass)
            os << ": " << c.detail;
        os << "\n";
    }
    if (exploratory) {
        std::size_t holding = 0;
        for (const auto& c : checks)
            holding += c.pass;
        os << suite << ": " << holding << " of " << checks.size() << " candidates hold\n";
    }
    else {
        os << suite << ": " << (passed() ? "passed" : "FAILED") << "\n";
    }
    return os.str();
}

namespace {

class Recorder {
public:
    explicit Recorder(std::string name) { check_.name = std::move(name); }

    template <class Detail>
    void expect(bool ok, Detail detail)
    {
        ++check_.cases;
        if (!ok && check_.pass) {
            check_.pass = false;
            check_.detail = detail();
        }
    }

    Check done() { return std::move(check_); }

private:
    Check check_;
};

std::vector<Word> composition_words(int n)
{
    std::vector<Word> out;
    for (const auto& c : compositions_of(n))
        out.push_back(c.parts());
    return out;
}

std::vector<Word> partition_words(int n)
{
    std::vector<Word> out;
    for (const auto& p : partitions_of(n))
        out.push_back(p.parts());
    return out;
}

Tensor coproduct_word(const HopfStructure& h, const Word& w) { return h.coproduct(Element::basis(h.space, w)); }

std::string show(const Element& x) { return x.str(); }
std::string show(const Tensor& x) { return x.str(); }

} // namespace

std::vector<HopfStructure> hopf_structures()
{
    return {
        {"S* binomial", kSymE, partition_words, sym_coproduct, sym_antipode},
        {"N* binomial", kNSym, composition_words, nsym_binomial_coproduct, nsym_binomial_antipode},
        {"Q* deconcatenation", kQSym, composition_words, qsym_coproduct, qsym_antipode},
        {"Faa di Bruno", kFdB, partition_words, fdb_coproduct, fdb_antipode},
        {"BFK", kNSym, composition_words, bfk_coproduct, bfk_antipode},
    };
}

Check check_coassociativity(const HopfStructure& h, int max_weight)
{
    Recorder r(h.name + ": coassociativity");
    auto delta = [&](const Word& w) { return coproduct_word(h, w); };
    for (int n = 0; n <= max_weight; ++n)
        for (const auto& w : h.words(n)) {
            const Tensor d = delta(w);
            const Tensor left = expand_factor(d, 0, delta);
            const Tensor right = expand_factor(d, 1, delta);
            r.expect(left == right, [&] { return basis_str(h.space, w) + ": " + show(left) + " != " + show(right); });
        }
    return r.done();
}

Check check_counit(const HopfStructure& h, int max_weight)
{
    Recorder r(h.name + ": counit");
    for (int n = 0; n <= max_weight; ++n)
        for (const auto& w : h.words(n)) {
            const Element x = Element::basis(h.space, w);
            Element left(h.space);
            Element right(h.space);
            for (const auto src = coproduct_word(h, w); const auto& [k, c] : src.terms()) {
                if (k[0].empty())
                    left.add_term(k[1], c);
                if (k[1].empty())
                    right.add_term(k[0], c);
            }
            r.expect(left == x && right == x, [&] { return basis_str(h.space, w); });
        }
    return r.done();
}

Check check_antipode(const HopfStructure& h, int max_weight)
{
    Recorder r(h.name + ": antipode");
    for (int n = 0; n <= max_weight; ++n)
        for (const auto& w : h.words(n)) {
            Element left(h.space);
            Element right(h.space);
            for (const auto src = coproduct_word(h, w); const auto& [k, c] : src.terms()) {
                const Element a = Element::basis(h.space, k[0]);
                const Element b = Element::basis(h.space, k[1]);
                left += c * (h.antipode(a) * b);
                right += c * (a * h.antipode(b));
            }
            const Element expected = w.empty() ? Element::one(h.space) : Element(h.space);
            r.expect(left == expected && right == expected,
                     [&] { return basis_str(h.space, w) + ": " + show(left) + " / " + show(right); });
        }
    return r.done();
}

namespace {

// ---- hopf-axioms ------------------------------------------------------------

SuiteReport hopf_axioms(int weight)
{
    SuiteReport rep{"hopf-axioms", weight, {}};
    for (const auto& h : hopf_structures()) {
        rep.checks.push_back(check_coassociativity(h, weight));
        rep.checks.push_back(check_counit(h, weight));
        rep.checks.push_back(check_antipode(h, weight));
    }
    return rep;
}

// ---- antipode-crosscheck ------------------------------------------------------

// chi(x) = -x - sum chi(x') x'' over the reduced coproduct, on generators of B.
Element recursive_fdb_antipode(int n, std::map<int, Element>& memo)
{
    if (auto it = memo.find(n); it != memo.end())
        return it->second;
    Element r = Element::basis(kFdB, {n}, Scalar(-1));
    for (const auto src = fdb_coproduct(Element::basis(kFdB, {n})); const auto& [k, c] : src.terms()) {
        if (k[0].empty() || k[1].empty())
            continue;
        Element chi_left = Element::one(kFdB);
        for (int g : k[0])
            chi_left = chi_left * recursive_fdb_antipode(g, memo);
        r -= c * (chi_left * Element::basis(kFdB, k[1]));
    }
    memo.emplace(n, r);
    return r;
}

SuiteReport antipode_crosscheck(int weight)
{
    SuiteReport rep{"antipode-crosscheck", weight, {}};
    {
        Recorder r("chi_S(e_n) = (-1)^n h_n");
        for (int n = 1; n <= weight; ++n) {
            const Element lhs = sym_antipode(Element::basis(kSymE, {n}));
            const Element rhs = Element::basis(kSymH, {n}, Scalar(n % 2 ? -1 : 1));
            r.expect(sym_equal(lhs, rhs), [&] { return "n = " + std::to_string(n) + ": " + lhs.str(); });
        }
        rep.checks.push_back(r.done());
    }
    {
        Recorder r("chi_FdB(t_n) = [T^(n+1)] revert(t(T)) = coproduct recursion");
        const Series inverse = ps_revert(fdb_generic_series(kFdB, weight + 1));
        std::map<int, Element> memo;
        for (int n = 1; n <= weight; ++n) {
            const Element chi = fdb_antipode(Element::basis(kFdB, {n}));
            const Element rec = recursive_fdb_antipode(n, memo);
            r.expect(chi == inverse.coefficient(n + 1) && chi == rec,
                     [&] { return "n = " + std::to_string(n) + ": " + chi.str() + " vs " + rec.str(); });
        }
        rep.checks.push_back(r.done());
    }
    {
        Recorder r("abelianized chi_BFK(Z_n) = chi_FdB(t_n)");
        for (int n = 1; n <= std::min(weight, 6); ++n) {
            const Element a = bfk_abelianize(bfk_antipode(Element::basis(kNSym, {n})));
            const Element b = fdb_antipode(Element::basis(kFdB, {n}));
            r.expect(a == b, [&] { return "n = " + std::to_string(n) + ": " + a.str() + " vs " + b.str(); });
        }
        rep.checks.push_back(r.done());
    }
    return rep;
}

// ---- duality -------------------------------------------------------------------

SuiteReport duality(int weight)
{
    SuiteReport rep{"duality", weight, {}};
    {
        Recorder r("<Z_I, M_J> = delta");
        for (int n = 0; n <= weight; ++n)
            for (const auto& i : composition_words(n))
                for (int m = 0; m <= weight; ++m)
                    for (const auto& j : composition_words(m)) {
                        const Scalar v = ns_qs_pair(Element::basis(kNSym, i), Element::basis(kQSym, j));
                        r.expect(v == Scalar(i == j ? 1 : 0), [&] { return word_str(i) + " vs " + word_str(j); });
                    }
        rep.checks.push_back(r.done());
    }
    {
        Recorder r("<Z_I Z_J, M_K> = <Z_I (x) Z_J, Delta M_K>");
        for (int n = 0; n <= weight; ++n)
            for (const auto& k : composition_words(n)) {
                const Tensor dk = qsym_coproduct(Element::basis(kQSym, k));
                for (int a = 0; a <= n; ++a)
                    for (const auto& i : composition_words(a))
                        for (const auto& j : composition_words(n - a)) {
                            const Element prod = Element::basis(kNSym, i) * Element::basis(kNSym, j);
                            const Scalar lhs = ns_qs_pair(prod, Element::basis(kQSym, k));
                            const Scalar rhs = ns_qs_pair(Tensor::of({Element::basis(kNSym, i), Element::basis(kNSym, j)}), dk);
                            r.expect(lhs == rhs, [&] { return word_str(i) + word_str(j) + " / " + word_str(k); });
                        }
            }
        rep.checks.push_back(r.done());
    }
    {
        Recorder r("<Delta Z_K, M_I (x) M_J> = <Z_K, M_I M_J>");
        for (int n = 0; n <= weight; ++n)
            for (const auto& k : composition_words(n)) {
                const Tensor dk = nsym_binomial_coproduct(Element::basis(kNSym, k));
                for (int a = 0; a <= n; ++a)
                    for (const auto& i : composition_words(a))
                        for (const auto& j : composition_words(n - a)) {
                            const Scalar lhs = ns_qs_pair(dk, Tensor::of({Element::basis(kQSym, i), Element::basis(kQSym, j)}));
                            const Scalar rhs = ns_qs_pair(Element::basis(kNSym, k), Element::basis(kQSym, i) * Element::basis(kQSym, j));
                            r.expect(lhs == rhs, [&] { return word_str(k) + " / " + word_str(i) + word_str(j); });
                        }
            }
        rep.checks.push_back(r.done());
    }
    {
        Recorder r("<h_lambda, m_mu> = delta");
        for (int n = 0; n <= weight; ++n)
            for (const auto& a : partition_words(n))
                for (const auto& b : partition_words(n)) {
                    const Scalar v = hall_pair(Element::basis(kSymH, a), Element::basis(kSymM, b));
                    r.expect(v == Scalar(a == b ? 1 : 0), [&] { return word_str(a) + " vs " + word_str(b); });
                }
        rep.checks.push_back(r.done());
    }
    {
        Recorder r("quasi-shuffle = product of ordered-variable expansions");
        const int limit = std::min(weight, 5);
        for (int n = 0; n <= limit; ++n)
            for (int a = 0; a <= n; ++a)
                for (const auto& i : composition_words(a))
                    for (const auto& j : composition_words(n - a)) {
                        const Element prod = Element::basis(kQSym, i) * Element::basis(kQSym, j);
                        const MultiPoly lhs = qsym_expand(prod, n);
                        const MultiPoly rhs = qsym_expand(Element::basis(kQSym, i), n) * qsym_expand(Element::basis(kQSym, j), n);
                        r.expect(lhs == rhs, [&] { return word_str(i) + " * " + word_str(j); });
                    }
        rep.checks.push_back(r.done());
    }
    return rep;
}

// ---- bfk -----------------------------------------------------------------------

SuiteReport bfk(int weight)
{
    SuiteReport rep{"bfk", weight, {}};
    const Element z1 = Element::basis(kNSym, {1});
    const Element z2 = Element::basis(kNSym, {2});
    const Element z3 = Element::basis(kNSym, {3});
    const Element one = Element::one(kNSym);
    {
        Recorder r("Delta_N Z_2");
        const Tensor expected = Tensor::of({z2, one}) + Scalar(2) * Tensor::of({z1, z1}) + Tensor::of({one, z2});
        const Tensor got = bfk_coproduct(z2);
        r.expect(got == expected, [&] { return got.str(); });
        rep.checks.push_back(r.done());
    }
    {
        Recorder r("Delta_N Z_3");
        const Tensor expected = Tensor::of({z3, one}) + Tensor::of({one, z3}) + Tensor::of({z1, Element::basis(kNSym, {1, 1})})
                                + Scalar(2) * Tensor::of({z1, z2}) + Scalar(3) * Tensor::of({z2, z1});
        const Tensor got = bfk_coproduct(z3);
        r.expect(got == expected, [&] { return got.str(); });
        rep.checks.push_back(r.done());
    }
    {
        Recorder r("Delta_N is not cocommutative");
        const Tensor d = bfk_coproduct(z3);
        r.expect(!(d == swap_adjacent(d, 0)), [] { return std::string("Delta_N Z_3 is symmetric"); });
        rep.checks.push_back(r.done());
    }
    const HopfStructure h = hopf_structures().back();
    rep.checks.push_back(check_coassociativity(h, weight));
    return rep;
}

// ---- comodule-algebroid --------------------------------------------------------------

std::vector<Tensor::Key> full_cochain_basis(const SplitAlgebroid& alg, int level, int weight)
{
    std::vector<Tensor::Key> out;
    std::function<void(Tensor::Key&, int, int)> rec = [&](Tensor::Key& key, int slot, int rest) {
        if (slot == level + 1) {
            if (rest == 0)
                out.push_back(key);
            return;
        }
        for (int w = 0; w <= rest; ++w)
            for (const auto& word : slot == 0 ? alg.base_words(w) : alg.hopf_words(w)) {
                key.push_back(word);
                rec(key, slot + 1, rest - w);
                key.pop_back();
            }
    };
    Tensor::Key key;
    rec(key, 0, weight);
    return out;
}

// Same as cobar_differential but without its level bound.
Tensor alternating_cofaces(const SplitAlgebroid& alg, const Tensor& x)
{
    const int n = static_cast<int>(x.factors().size()) - 1;
    Tensor out;
    for (int i = 0; i <= n + 1; ++i) {
        Tensor d = coface(alg, x, i);
        if (i % 2)
            d *= Scalar(-1);
        out = i == 0 ? d : out + d;
    }
    return out;
}

Tensor basis_tensor(const SplitAlgebroid& alg, const Tensor::Key& key)
{
    std::vector<Space> spaces{alg.base()};
    spaces.insert(spaces.end(), key.size() - 1, alg.hopf());
    Tensor t(spaces);
    t.add_term(key, Scalar(1));
    return t;
}

Check comodule_axioms(const std::string& name, Space base, const std::vector<Word>& words, const std::function<Tensor(const Element&)>& coaction,
                      const std::function<Tensor(const Element&)>& delta)
{
    Recorder r(name + " comodule axioms");
    const Space hopf = coaction(Element::basis(base, words.front())).factors()[1];
    for (const auto& w : words) {
        const Tensor psi = coaction(Element::basis(base, w));
        const Tensor left = expand_factor(psi, 0, [&](const Word& v) { return coaction(Element::basis(base, v)); });
        const Tensor right = expand_factor(psi, 1, [&](const Word& v) { return delta(Element::basis(hopf, v)); });
        Element counit(base);
        for (const auto& [k, c] : psi.terms())
            if (k[1].empty())
                counit.add_term(k[0], c);
        r.expect(left == right && counit == Element::basis(base, w), [&] { return basis_str(base, w); });
    }
    return r.done();
}

SuiteReport comodule_algebroid(int weight)
{
    SuiteReport rep{"comodule-algebroid", weight, {}};
    const int comodule_weight = weight + 1;
    {
        std::vector<Word> sw;
        std::vector<Word> nw;
        for (int n = 0; n <= comodule_weight; ++n) {
            for (const auto& w : partition_words(n))
                sw.push_back(w);
            for (const auto& w : composition_words(n))
                nw.push_back(w);
        }
        rep.checks.push_back(comodule_axioms("psi_S", kSymE, sw, coaction_sym, fdb_coproduct));
        rep.checks.push_back(comodule_axioms("psi_N", kNSym, nw, coaction_nsym, bfk_coproduct));
    }
    for (AlgebroidKind kind : {AlgebroidKind::sym_fdb, AlgebroidKind::nsym_bfk}) {
        const SplitAlgebroid alg(kind);
        const std::string tag(algebroid_name(kind));
        Recorder ident(tag + " cosimplicial identities");
        Recorder square(tag + " d^2 = 0");
        for (int level = 0; level <= 2; ++level)
            for (int w = 0; w <= weight; ++w)
                for (const auto& key : full_cochain_basis(alg, level, w)) {
                    const Tensor x = basis_tensor(alg, key);
                    const int n = level;
                    for (int j = 0; j <= n + 2; ++j)
                        for (int i = 0; i < j; ++i) {
                            const Tensor a = coface(alg, coface(alg, x, i), j);
                            const Tensor b = coface(alg, coface(alg, x, j - 1), i);
                            ident.expect(a == b, [&] { return "d" + std::to_string(j) + "d" + std::to_string(i) + " on " + x.str(); });
                        }
                    for (int i = 0; i <= n + 1; ++i)
                        for (int j = 0; j <= n; ++j) {
                            const Tensor sd = codegeneracy(alg, coface(alg, x, i), j);
                            Tensor expected;
                            if (i < j)
                                expected = coface(alg, codegeneracy(alg, x, j - 1), i);
                            else if (i == j || i == j + 1)
                                expected = x;
                            else
                                expected = coface(alg, codegeneracy(alg, x, j), i - 1);
                            ident.expect(sd == expected, [&] { return "s" + std::to_string(j) + "d" + std::to_string(i) + " on " + x.str(); });
                        }
                    const Tensor dd = alternating_cofaces(alg, alternating_cofaces(alg, x));
                    square.expect(dd.is_zero(), [&] { return x.str(); });
                }
        rep.checks.push_back(ident.done());
        rep.checks.push_back(square.done());

        Recorder base_change(tag + " literal Amitsur cofaces match A (x) H^n");
        for (int n = 0; n <= 1; ++n)
            for (int w = 0; w <= std::min(weight, 4); ++w) {
                // literal words a (x)_A (a_1 (x) h_1) ... of total weight w
                std::vector<Tensor::Key> keys;
                std::function<void(Tensor::Key&, int, int)> rec = [&](Tensor::Key& key, int slot, int rest) {
                    if (slot == 1 + 2 * n) {
                        if (rest == 0)
                            keys.push_back(key);
                        return;
                    }
                    const bool is_hopf = slot % 2 == 0 && slot > 0;
                    for (int k = 0; k <= rest; ++k)
                        for (const auto& word : is_hopf ? alg.hopf_words(k) : alg.base_words(k)) {
                            key.push_back(word);
                            rec(key, slot + 1, rest - k);
                            key.pop_back();
                        }
                };
                Tensor::Key key;
                rec(key, 0, w);
                std::vector<Space> spaces{alg.base()};
                for (int i = 0; i < n; ++i) {
                    spaces.push_back(alg.base());
                    spaces.push_back(alg.hopf());
                }
                for (const auto& k : keys) {
                    Tensor x(spaces);
                    x.add_term(k, Scalar(1));
                    for (int i = 0; i <= n + 1; ++i) {
                        const Tensor lhs = normalize_gamma_word(alg, gamma_coface(alg, x, i));
                        const Tensor rhs = coface(alg, normalize_gamma_word(alg, x), i);
                        base_change.expect(lhs == rhs, [&] { return "d" + std::to_string(i) + " on " + x.str(); });
                    }
                }
            }
        rep.checks.push_back(base_change.done());
    }
    {
        // H^0 directly as the kernel of eta_R - eta_L on each weight of S*.
        Recorder r("S.B H^0 ranks against the invariant kernel");
        const SplitAlgebroid alg(AlgebroidKind::sym_fdb);
        for (int w = 0; w <= std::min(weight, 3); ++w) {
            const auto rows = alg.base_words(w);
            std::map<Tensor::Key, std::size_t> cols;
            std::vector<std::map<std::size_t, Scalar>> entries;
            for (const auto& a : rows) {
                const Element x = Element::basis(kSymE, a);
                const Tensor diff = coaction_sym(x) - Tensor::of({x, Element::one(kFdB)});
                std::map<std::size_t, Scalar> row;
                for (const auto& [k, c] : diff.terms())
                    row[cols.try_emplace(k, cols.size()).first->second] = c;
                entries.push_back(std::move(row));
            }
            Matrix m(rows.size(), std::vector<Scalar>(cols.size()));
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (const auto& [j, c] : entries[i])
                    m[i][j] = c;
            const int kernel = static_cast<int>(rows.size() - rank(m));
            const int h0 = cohomology_rank(alg, w, 0);
            r.expect(kernel == 1 && h0 == 1,
                     [&] { return "weight " + std::to_string(w) + ": kernel " + std::to_string(kernel) + ", H^0 " + std::to_string(h0); });
        }
        rep.checks.push_back(r.done());
    }
    return rep;
}

// ---- topology ----------------------------------------------------------------------

using Exp3 = std::array<int, 3>;
using Tri = std::map<Exp3, Element>;

Tri tri_mul(const Tri& a, const Tri& b, int cap)
{
    Tri r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            const Exp3 e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            if (e[0] + e[1] + e[2] > cap)
                continue;
            auto [it, fresh] = r.try_emplace(e, ca * cb);
            if (!fresh)
                it->second += ca * cb;
        }
    std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
    return r;
}

// F(A, B) for a bivariate F and trivariate A, B without constant terms.
Tri tri_compose(const Series& f, const Tri& a, const Tri& b, int cap)
{
    std::vector<Tri> pa{Tri{{Exp3{0, 0, 0}, Element::one(f.space())}}};
    std::vector<Tri> pb = pa;
    for (int k = 1; k <= cap; ++k) {
        pa.push_back(tri_mul(pa.back(), a, cap));
        pb.push_back(tri_mul(pb.back(), b, cap));
    }
    Tri r;
    for (const auto& [e, c] : f.coefficients()) {
        const Tri term = tri_mul(tri_mul(Tri{{Exp3{0, 0, 0}, c}}, pa[static_cast<std::size_t>(e[0])], cap),
                                 pb[static_cast<std::size_t>(e[1])], cap);
        for (const auto& [k, v] : term) {
            auto [it, fresh] = r.try_emplace(k, v);
            if (!fresh)
                it->second += v;
        }
    }
    std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
    return r;
}

Tri tri_embed(const Series& f, int first, int second)
{
    Tri r;
    for (const auto& [e, c] : f.coefficients()) {
        Exp3 k{0, 0, 0};
        k[static_cast<std::size_t>(first)] = e[0];
        k[static_cast<std::size_t>(second)] = e[1];
        r.emplace(k, c);
    }
    return r;
}

Tri tri_variable(int slot, Space space)
{
    Exp3 k{0, 0, 0};
    k[static_cast<std::size_t>(slot)] = 1;
    return Tri{{k, Element::one(space)}};
}

Series swap_variables(const Series& f)
{
    Series r(f.space(), 2, f.cap());
    r.set_variable_names(f.variable_names());
    for (const auto& [e, c] : f.coefficients())
        r.add_term({e[1], e[0]}, c);
    return r;
}

// Classical evaluation of a symmetric function on the unordered roots.
Scalar classical_evaluate(const ProjectiveProductSpace& x, const Element& f)
{
    const int n = static_cast<int>(x.roots.size());
    const int m = static_cast<int>(x.factors.size());
    if (n == 0)
        return f.constant_term();
    const MultiPoly poly = sym_expand(f, n);
    MultiPoly total(m);
    for (const auto& [e, c] : poly.terms()) {
        MultiPoly term = MultiPoly::constant(m, c);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k)
                term = term.mul_truncated(MultiPoly::linear(x.roots[static_cast<std::size_t>(i)]), x.factors);
        total += term;
    }
    return total.coefficient(x.factors);
}

SuiteReport topology(int weight)
{
    SuiteReport rep{"topology", weight, {}};
    {
        Recorder r("[T^(n+1)] log = chi_FdB(b_n)");
        const Series log = miscenko_log(weight + 1);
        for (int n = 0; n <= weight; ++n) {
            const Element expected = n == 0 ? Element::one(kFdBb) : fdb_antipode(Element::basis(kFdBb, {n}));
            r.expect(log.coefficient(n + 1) == expected, [&] { return "n = " + std::to_string(n); });
            const Element h = cp_hurewicz(n);
            r.expect(h == Scalar(n + 1) * expected, [&] { return "h{CP_" + std::to_string(n) + "} = " + h.str(); });
        }
        const Series round = ps_compose(b_series(8), miscenko_log(8));
        r.expect(round == Series::variable(kFdBb, 1, 8), [&] { return round.str(); });
        rep.checks.push_back(r.done());
    }
    {
        Recorder r("cp_char_number = normal bundle numbers");
        for (int n = 0; n <= std::min(weight, 5); ++n)
            for (const auto& l : partitions_of(n)) {
                const Scalar a = cp_char_number(n, l);
                const Scalar b = cp_normal_char_number(n, l);
                r.expect(a == b, [&] { return "n = " + std::to_string(n) + ", lambda = " + word_str(l.parts()); });
            }
        rep.checks.push_back(r.done());
    }
    const int cap = std::min(weight, 6);
    const Series f = fgl(cap);
    {
        Recorder r("fgl unit, commutativity, associativity");
        const Series x = Series::variable(kFdBb, 1, cap);
        r.expect(ps_set_zero(f, 1) == x && ps_set_zero(f, 0) == x, [] { return std::string("unit"); });
        r.expect(f == swap_variables(f), [] { return std::string("commutativity"); });
        const Tri fxy = tri_embed(f, 0, 1);
        const Tri fyz = tri_embed(f, 1, 2);
        const Tri left = tri_compose(f, fxy, tri_variable(2, kFdBb), cap);
        const Tri right = tri_compose(f, tri_variable(0, kFdBb), fyz, cap);
        r.expect(left == right, [] { return std::string("associativity"); });
        rep.checks.push_back(r.done());
    }
    {
        Recorder r("beta(F(X,Y)) = beta(X) beta(Y)");
        const Series beta = beta_series(cap);
        const Series lhs = ps_compose(beta, f);
        const Series rhs = ps_embed(beta, 0) * ps_embed(beta, 1);
        r.expect(lhs == rhs, [&] { return (lhs - rhs).str(); });
        rep.checks.push_back(r.done());
    }
    {
        Recorder r("abelianized cp-infinity coproduct = fgl");
        const int c5 = std::min(weight, 5);
        const Series ab = ps_map(cp_infinity_coproduct(c5), kFdBb, [](const Element& e) { return bfk_abelianize(e, Basis::b); });
        r.expect(ab == fgl(c5), [&] { return ab.str(); });
        rep.checks.push_back(r.done());
    }
    {
        Recorder r("quasitoric numbers of symmetric functions are classical");
        const std::vector<ProjectiveProductSpace> spaces{
            {{1}, {{1}, {1}}},
            {{2}, {{1}, {1}, {1}}},
            {{1, 1}, {{1, 0}, {1, 0}, {0, 1}, {0, 1}}},
            {{1, 2}, {{1, 0}, {1, 1}, {0, 1}, {2, -1}}},
            {{2, 2}, {{1, 0}, {1, 1}, {0, 1}, {1, 2}, {-1, 1}}},
        };
        for (const auto& x : spaces)
            for (int n = 0; n <= std::min(weight, 4); ++n)
                for (const auto& l : partitions_of(n)) {
                    const Element m = Element::basis(kSymM, l.parts());
                    const Scalar a = quasitoric_evaluate(x, include_sym_in_qsym(m));
                    const Scalar b = classical_evaluate(x, m);
                    r.expect(a == b, [&] { return "lambda = " + word_str(l.parts()); });
                }
        rep.checks.push_back(r.done());
    }
    return rep;
}

// ---- counts --------------------------------------------------------------------------

SuiteReport counts(int weight)
{
    SuiteReport rep{"counts", weight, {}};
    {
        Recorder r("|compositions_of(n)| = 2^(n-1)");
        for (int n = 1; n <= weight; ++n) {
            const auto cs = compositions_of(n);
            bool ok = cs.size() == (std::size_t{1} << (n - 1));
            for (const auto& c : cs)
                ok = ok && c.weight() == n;
            r.expect(ok, [&] { return "n = " + std::to_string(n); });
        }
        rep.checks.push_back(r.done());
    }
    {
        Recorder r("crn_invariant(k) has 2^(k-1) unit coefficients");
        for (int k = 1; k <= std::min(weight, 10); ++k) {
            const Element x = crn_invariant(k);
            bool ok = x.size() == (std::size_t{1} << (k - 1));
            for (const auto& [w, c] : x.terms())
                ok = ok && c.is_one() && word_weight(w) == k;
            r.expect(ok, [&] { return "k = " + std::to_string(k); });
        }
        rep.checks.push_back(r.done());
    }
    return rep;
}

} // namespace

std::vector<std::pair<std::string, int>> suite_names()
{
    return {{"hopf-axioms", 6}, {"antipode-crosscheck", 8}, {"duality", 6}, {"bfk", 7},
            {"comodule-algebroid", 5}, {"topology", 7}, {"counts", 12}};
}

SuiteReport run_suite(const std::string& name, std::optional<int> weight)
{
    int w = -1;
    for (const auto& [n, d] : suite_names())
        if (n == name)
            w = weight.value_or(d);
    if (w < 0)
        throw DomainError("unknown suite '" + name + "' or negative weight");
    if (name == "hopf-axioms")
        return hopf_axioms(w);
    if (name == "antipode-crosscheck")
        return antipode_crosscheck(w);
    if (name == "duality")
        return duality(w);
    if (name == "bfk")
        return bfk(w);
    if (name == "comodule-algebroid") {
        if (w > kMaxCohomologyWeight)
            throw CapabilityError("comodule-algebroid suite is bounded at weight " + std::to_string(kMaxCohomologyWeight));
        return comodule_algebroid(w);
    }
    if (name == "topology")
        return topology(w);
    return counts(w);
}

SuiteReport run_duality_experiment(int weight)
{
    SuiteReport rep{"duality-compat", weight, {}, true};
    struct Candidate {
        std::string name;
        std::function<Element(const Element&)> phi;
    };
    const std::vector<Candidate> candidates{
        {"identity", [](const Element& x) { return x; }},
        {"dual", [](const Element& x) { return sym_involution(x, SymInvolution::dual); }},
        {"whitney", [](const Element& x) { return sym_involution(x, SymInvolution::whitney); }},
        {"omega", [](const Element& x) { return sym_involution(x, SymInvolution::omega); }},
    };
    for (const auto& cand : candidates) {
        Recorder r("<" + cand.name + "(abelianize Z_I), m_lambda> = <Z_I, include m_lambda>");
        for (int n = 0; n <= weight; ++n)
            for (const auto& i : composition_words(n))
                for (const auto& l : partition_words(n)) {
                    const Element m = Element::basis(kSymM, l);
                    const Scalar lhs = hall_pair(cand.phi(abelianize_nsym(Element::basis(kNSym, i))), m);
                    const Scalar rhs = ns_qs_pair(Element::basis(kNSym, i), include_sym_in_qsym(m));
                    r.expect(lhs == rhs, [&] {
                        return "Z" + word_str(i) + ", m" + word_str(l) + ": " + lhs.str() + " vs " + rhs.str();
                    });
                }
        rep.checks.push_back(r.done());
    }
    return rep;
}

} // namespace chopf::cli
