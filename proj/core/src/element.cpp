#include "chopf/element.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include "chopf/errors.hpp"
#include "chopf/nsym.hpp"
#include "chopf/sym.hpp"

namespace chopf {

std::string_view algebra_name(Algebra a)
{
    switch (a) {
    case Algebra::scalar: return "scalar";
    case Algebra::sym: return "sym";
    case Algebra::nsym: return "nsym";
    case Algebra::qsym: return "qsym";
    case Algebra::fdb: return "fdb";
    }
    return "?";
}

std::optional<Algebra> algebra_from_name(std::string_view s)
{
    for (Algebra a : {Algebra::scalar, Algebra::sym, Algebra::nsym, Algebra::qsym, Algebra::fdb})
        if (algebra_name(a) == s)
            return a;
    return std::nullopt;
}

char basis_letter(Basis b)
{
    switch (b) {
    case Basis::unit: return '1';
    case Basis::e: return 'e';
    case Basis::h: return 'h';
    case Basis::p: return 'p';
    case Basis::m: return 'm';
    case Basis::Z: return 'Z';
    case Basis::M: return 'M';
    case Basis::t: return 't';
    case Basis::b: return 'b';
    }
    return '?';
}

std::optional<Basis> basis_from_letter(char c)
{
    for (Basis b : {Basis::e, Basis::h, Basis::p, Basis::m, Basis::Z, Basis::M, Basis::t, Basis::b})
        if (basis_letter(b) == c)
            return b;
    return std::nullopt;
}

std::optional<Algebra> algebra_of_letter(char c)
{
    switch (c) {
    case 'e': case 'h': case 'p': case 'm': return Algebra::sym;
    case 'Z': return Algebra::nsym;
    case 'M': return Algebra::qsym;
    case 't': case 'b': return Algebra::fdb;
    default: return std::nullopt;
    }
}

bool is_commutative(Algebra a) { return a != Algebra::nsym; }

namespace {

bool valid_space(Space s)
{
    switch (s.algebra) {
    case Algebra::scalar: return s.basis == Basis::unit;
    case Algebra::sym: return s.basis == Basis::e || s.basis == Basis::h || s.basis == Basis::p || s.basis == Basis::m;
    case Algebra::nsym: return s.basis == Basis::Z;
    case Algebra::qsym: return s.basis == Basis::M;
    case Algebra::fdb: return s.basis == Basis::t || s.basis == Basis::b;
    }
    return false;
}

void require_same_space(const Space& a, const Space& b, const char* what)
{
    if (!(a == b))
        throw TypeError(std::string(what) + ": space mismatch " + std::string(algebra_name(a.algebra)) + "/"
                        + basis_letter(a.basis) + " vs " + std::string(algebra_name(b.algebra)) + "/"
                        + basis_letter(b.basis));
}

Ground join(Ground a, Ground b) { return (a == Ground::rationals || b == Ground::rationals) ? Ground::rationals : Ground::integers; }

std::string coeff_prefix(const Scalar& c, bool first, bool unit_word)
{
    std::string out;
    Scalar mag = c;
    if (c.sign() < 0) {
        out = first ? "-" : " - ";
        mag = -c;
    }
    else if (!first) {
        out = " + ";
    }
    if (unit_word)
        return out + mag.str();
    if (!mag.is_one())
        out += mag.str() + "*";
    return out;
}

} // namespace

Word canonical_word(Space space, Word w)
{
    if (space.algebra == Algebra::scalar) {
        if (!w.empty())
            throw DomainError("scalar space admits only the empty index");
        return w;
    }
    const int min_part = space.basis == Basis::b ? 0 : 1;
    for (int p : w)
        if (p < min_part)
            throw DomainError("invalid index part " + std::to_string(p) + " in " + word_str(w));
    if (space.algebra == Algebra::sym || space.algebra == Algebra::fdb)
        std::sort(w.begin(), w.end(), std::greater<>());
    return w;
}

std::string basis_str(Space space, const Word& w)
{
    if (w.empty())
        return "1";
    return std::string(1, basis_letter(space.basis)) + word_str(w);
}

Element Element::one(Space space)
{
    Element x(space);
    x.terms_.emplace(Word{}, Scalar(1));
    return x;
}

Element Element::basis(Space space, Word word, Scalar coeff)
{
    Element x(space);
    x.add_term(std::move(word), coeff);
    return x;
}

Element Element::constant(Scalar c)
{
    Element x(kScalarSpace);
    x.add_term({}, c);
    return x;
}

Scalar Element::coefficient(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Element::add_term(Word w, const Scalar& c)
{
    if (c.is_zero())
        return;
    if (!valid_space(space_))
        throw TypeError("invalid algebra/basis combination");
    w = canonical_word(space_, std::move(w));
    if (!c.is_integer())
        ground_ = Ground::rationals;
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

bool Element::integral() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_integer(); });
}

int Element::max_weight() const
{
    int w = -1;
    for (const auto& [word, c] : terms_)
        w = std::max(w, word_weight(word));
    return w;
}

bool Element::is_homogeneous(int weight) const
{
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return word_weight(t.first) == weight; });
}

Element Element::component(int weight) const
{
    Element r(space_, ground_);
    for (const auto& [word, c] : terms_)
        if (word_weight(word) == weight)
            r.terms_.emplace(word, c);
    return r;
}

Element Element::relabeled(Space space) const
{
    Element r(space, ground_);
    for (const auto& [word, c] : terms_)
        r.add_term(word, c);
    return r;
}

Element& Element::operator+=(const Element& o)
{
    if (o.is_zero()) {
        ground_ = join(ground_, o.ground_);
        return *this;
    }
    if (is_zero() && terms_.empty() && !(space_ == o.space_) && space_.algebra == Algebra::scalar) {
        // the zero scalar adopts the other operand's space
        space_ = o.space_;
    }
    if (space_.algebra == Algebra::sym && o.space_.algebra == Algebra::sym && !(space_ == o.space_))
        return *this += sym_convert(o, space_.basis);
    if (o.space_.algebra == Algebra::scalar && space_.algebra != Algebra::scalar) {
        for (const auto& [w, c] : o.terms_)
            add_term(w, c);
        ground_ = join(ground_, o.ground_);
        return *this;
    }
    if (space_.algebra == Algebra::scalar && o.space_.algebra != Algebra::scalar) {
        Element r = o;
        for (const auto& [w, c] : terms_)
            r.add_term(w, c);
        r.ground_ = join(r.ground_, ground_);
        return *this = std::move(r);
    }
    require_same_space(space_, o.space_, "add");
    for (const auto& [w, c] : o.terms_)
        add_term(w, c);
    ground_ = join(ground_, o.ground_);
    return *this;
}

Element& Element::operator-=(const Element& o) { return *this += (o * Scalar(-1)); }

Element& Element::operator*=(const Scalar& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    if (!c.is_integer())
        ground_ = Ground::rationals;
    for (auto& [w, v] : terms_)
        v *= c;
    return *this;
}

Element multiply_words(Space space, const Word& a, const Word& b)
{
    if (a.empty())
        return Element::basis(space, b);
    if (b.empty())
        return Element::basis(space, a);
    switch (space.algebra) {
    case Algebra::scalar:
        return Element::one(space);
    case Algebra::sym:
        if (space.basis == Basis::m)
            return sym_mul_monomial_words(a, b);
        [[fallthrough]];
    case Algebra::fdb:
    case Algebra::nsym: {
        Word w = a;
        w.insert(w.end(), b.begin(), b.end());
        return Element::basis(space, std::move(w));
    }
    case Algebra::qsym:
        return quasi_shuffle(Composition(a), Composition(b));
    }
    throw TypeError("multiply_words: unknown algebra");
}

Element operator*(const Element& a, const Element& b)
{
    if (a.algebra() == Algebra::scalar && b.algebra() != Algebra::scalar)
        return b * a.constant_term();
    if (b.algebra() == Algebra::scalar && a.algebra() != Algebra::scalar)
        return a * b.constant_term();
    if (a.algebra() == Algebra::sym && b.algebra() == Algebra::sym && !(a.space() == b.space()))
        return a * sym_convert(b, a.basis_tag());
    require_same_space(a.space(), b.space(), "multiply");
    Element r(a.space(), join(a.ground(), b.ground()));
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            Scalar c = ca * cb;
            for (const auto src = multiply_words(a.space(), wa, wb); const auto& [w, cw] : src.terms())
                r.add_term(w, c * cw);
        }
    return r;
}

bool operator==(const Element& a, const Element& b)
{
    if (a.is_zero() && b.is_zero())
        return true;
    return a.space_ == b.space_ && a.terms_ == b.terms_;
}

Element pow(const Element& x, int n)
{
    if (n < 0)
        throw DomainError("negative power");
    Element r = Element::one(x.space());
    r.set_ground(x.ground());
    for (int i = 0; i < n; ++i)
        r = r * x;
    return r;
}

std::string Element::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        out += coeff_prefix(c, first, w.empty());
        if (!w.empty())
            out += basis_str(space_, w);
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------------------

Tensor Tensor::of(const std::vector<Element>& parts)
{
    std::vector<Space> spaces;
    for (const auto& p : parts)
        spaces.push_back(p.space());
    Tensor r(spaces);
    r.terms_.emplace(Key{}, Scalar(1));
    for (const auto& p : parts) {
        Terms next;
        for (const auto& [k, c] : r.terms_)
            for (const auto& [w, cw] : p.terms()) {
                Key nk = k;
                nk.push_back(w);
                next[std::move(nk)] += c * cw;
            }
        r.terms_ = std::move(next);
    }
    std::erase_if(r.terms_, [](const auto& t) { return t.second.is_zero(); });
    return r;
}

Tensor Tensor::one(std::vector<Space> factors)
{
    Tensor r(std::move(factors));
    r.terms_.emplace(Key(r.factors_.size()), Scalar(1));
    return r;
}

Scalar Tensor::coefficient(const Key& k) const
{
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Tensor::add_term(Key k, const Scalar& c)
{
    if (c.is_zero())
        return;
    if (k.size() != factors_.size())
        throw TypeError("tensor arity mismatch");
    for (std::size_t i = 0; i < k.size(); ++i)
        k[i] = canonical_word(factors_[i], std::move(k[i]));
    auto [it, inserted] = terms_.try_emplace(std::move(k), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Tensor& Tensor::operator+=(const Tensor& o)
{
    if (o.terms_.empty() && o.factors_.size() != factors_.size())
        return *this;
    if (terms_.empty() && factors_.empty()) {
        *this = o;
        return *this;
    }
    if (factors_ != o.factors_)
        throw TypeError("tensor add: factor spaces differ");
    for (const auto& [k, c] : o.terms_)
        add_term(k, c);
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) { return *this += o * Scalar(-1); }

Tensor& Tensor::operator*=(const Scalar& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_)
        v *= c;
    return *this;
}

Tensor operator*(const Tensor& a, const Tensor& b)
{
    if (a.factors_ != b.factors_)
        throw TypeError("tensor multiply: factor spaces differ");
    Tensor r(a.factors_);
    const std::size_t n = a.factors_.size();
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            // expand factor by factor
            std::map<Tensor::Key, Scalar> acc{{Tensor::Key{}, ca * cb}};
            for (std::size_t i = 0; i < n; ++i) {
                Element prod = multiply_words(a.factors_[i], ka[i], kb[i]);
                std::map<Tensor::Key, Scalar> next;
                for (const auto& [k, c] : acc)
                    for (const auto& [w, cw] : prod.terms()) {
                        Tensor::Key nk = k;
                        nk.push_back(w);
                        next[std::move(nk)] += c * cw;
                    }
                acc = std::move(next);
            }
            for (auto& [k, c] : acc)
                r.add_term(k, c);
        }
    return r;
}

bool operator==(const Tensor& a, const Tensor& b)
{
    if (a.terms_.empty() && b.terms_.empty())
        return true;
    return a.factors_ == b.factors_ && a.terms_ == b.terms_;
}

std::string Tensor::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        out += coeff_prefix(c, first, k.empty());
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (i)
                out += " ⊗ ";
            out += basis_str(factors_[i], k[i]);
        }
        first = false;
    }
    return out;
}

Tensor tensor(const Tensor& x, const Tensor& y)
{
    std::vector<Space> f = x.factors();
    f.insert(f.end(), y.factors().begin(), y.factors().end());
    Tensor r(f);
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) {
            Tensor::Key k = kx;
            k.insert(k.end(), ky.begin(), ky.end());
            r.add_term(std::move(k), cx * cy);
        }
    return r;
}

Tensor tensor(const Element& x, const Tensor& y) { return tensor(Tensor::of({x}), y); }
Tensor tensor(const Tensor& x, const Element& y) { return tensor(x, Tensor::of({y})); }

Tensor expand_factor(const Tensor& x, std::size_t slot, const std::function<Tensor(const Word&)>& f)
{
    if (slot >= x.arity())
        throw TypeError("expand_factor: slot out of range");
    std::optional<Tensor> result;
    std::map<Word, Tensor> memo;
    for (const auto& [k, c] : x.terms()) {
        auto it = memo.find(k[slot]);
        if (it == memo.end())
            it = memo.emplace(k[slot], f(k[slot])).first;
        const Tensor& img = it->second;
        if (!result) {
            std::vector<Space> spaces(x.factors().begin(), x.factors().begin() + static_cast<long>(slot));
            spaces.insert(spaces.end(), img.factors().begin(), img.factors().end());
            spaces.insert(spaces.end(), x.factors().begin() + static_cast<long>(slot) + 1, x.factors().end());
            result.emplace(spaces);
        }
        for (const auto& [ki, ci] : img.terms()) {
            Tensor::Key nk(k.begin(), k.begin() + static_cast<long>(slot));
            nk.insert(nk.end(), ki.begin(), ki.end());
            nk.insert(nk.end(), k.begin() + static_cast<long>(slot) + 1, k.end());
            result->add_term(std::move(nk), c * ci);
        }
    }
    if (!result) {
        // zero input: the output spaces are unknown without an image; probe with the unit word
        Tensor img = f(Word{});
        std::vector<Space> spaces(x.factors().begin(), x.factors().begin() + static_cast<long>(slot));
        spaces.insert(spaces.end(), img.factors().begin(), img.factors().end());
        spaces.insert(spaces.end(), x.factors().begin() + static_cast<long>(slot) + 1, x.factors().end());
        return Tensor(spaces);
    }
    return *result;
}

Tensor map_factor(const Tensor& x, std::size_t slot, const std::function<Element(const Word&)>& f)
{
    return expand_factor(x, slot, [&](const Word& w) { return Tensor::of({f(w)}); });
}

Tensor multiply_adjacent(const Tensor& x, std::size_t slot)
{
    if (slot + 1 >= x.arity())
        throw TypeError("multiply_adjacent: slot out of range");
    Space sp = x.factors()[slot];
    if (!(sp == x.factors()[slot + 1]))
        throw TypeError("multiply_adjacent: factor spaces differ");
    std::vector<Space> spaces = x.factors();
    spaces.erase(spaces.begin() + static_cast<long>(slot) + 1);
    Tensor r(spaces);
    for (const auto& [k, c] : x.terms()) {
        Element prod = multiply_words(sp, k[slot], k[slot + 1]);
        for (const auto& [w, cw] : prod.terms()) {
            Tensor::Key nk = k;
            nk[slot] = w;
            nk.erase(nk.begin() + static_cast<long>(slot) + 1);
            r.add_term(std::move(nk), c * cw);
        }
    }
    return r;
}

Element to_element(const Tensor& x)
{
    if (x.arity() != 1)
        throw TypeError("to_element: tensor is not 1-fold");
    Element r(x.factors()[0]);
    for (const auto& [k, c] : x.terms())
        r.add_term(k[0], c);
    return r;
}

Tensor swap_adjacent(const Tensor& x, std::size_t slot)
{
    std::vector<Space> spaces = x.factors();
    std::swap(spaces[slot], spaces[slot + 1]);
    Tensor r(spaces);
    for (const auto& [k, c] : x.terms()) {
        Tensor::Key nk = k;
        std::swap(nk[slot], nk[slot + 1]);
        r.add_term(std::move(nk), c);
    }
    return r;
}

Element extend_on_word(Space target, const Word& w, const std::function<Element(int)>& gen, bool reversed)
{
    Element r = Element::one(target);
    if (reversed) {
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            r = r * gen(*it);
    }
    else {
        for (int g : w)
            r = r * gen(g);
    }
    return r;
}

Tensor extend_on_word(const std::vector<Space>& target, const Word& w, const std::function<Tensor(int)>& gen)
{
    Tensor r = Tensor::one(target);
    for (int g : w)
        r = r * gen(g);
    return r;
}

Element apply_linear(const Element& x, Space target, const std::function<Element(const Word&)>& f)
{
    Element r(target, x.ground());
    for (const auto& [w, c] : x.terms())
        r += f(w) * c;
    return r;
}

Tensor apply_linear(const Element& x, const std::vector<Space>& target, const std::function<Tensor(const Word&)>& f)
{
    Tensor r(target);
    for (const auto& [w, c] : x.terms())
        r += f(w) * c;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Element& x) { return os << x.str(); }
std::ostream& operator<<(std::ostream& os, const Tensor& x) { return os << x.str(); }

} // namespace chopf
