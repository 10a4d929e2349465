#include "chopf/series.hpp"

#include <algorithm>

#include "chopf/errors.hpp"

namespace chopf {

namespace {

Ground join(Ground a, Ground b) { return (a == Ground::rationals || b == Ground::rationals) ? Ground::rationals : Ground::integers; }

Space common_space(Space a, Space b)
{
    if (a.algebra == Algebra::scalar)
        return b;
    if (b.algebra == Algebra::scalar)
        return a;
    if (a.algebra == Algebra::sym && b.algebra == Algebra::sym)
        return a;
    if (!(a == b))
        throw TypeError("series coefficient algebras differ: " + std::string(algebra_name(a.algebra)) + "/"
                        + basis_letter(a.basis) + " vs " + std::string(algebra_name(b.algebra)) + "/"
                        + basis_letter(b.basis));
    return a;
}

bool is_unit(const Element& c) { return c.size() == 1 && c.terms().begin()->first.empty() && c.terms().begin()->second.is_one(); }

std::string monomial_str(const Series& f, const Exponent& e)
{
    std::string out;
    for (int i = 0; i < f.nvars(); ++i) {
        const int k = e[static_cast<std::size_t>(i)];
        if (k == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += f.variable_names()[static_cast<std::size_t>(i)];
        if (k != 1)
            out += "^" + std::to_string(k);
    }
    return out;
}

} // namespace

Series::Series(Space space, int nvars, int cap) : space_(space), nvars_(nvars), cap_(cap)
{
    if (nvars != 1 && nvars != 2)
        throw DomainError("series support one or two variables");
    names_ = nvars == 1 ? std::vector<std::string>{"T"} : std::vector<std::string>{"X", "Y"};
}

Series Series::variable(Space space, int nvars, int cap, int slot)
{
    Series s(space, nvars, cap);
    Exponent e{0, 0};
    e.at(static_cast<std::size_t>(slot)) = 1;
    s.add_term(e, Element::one(space));
    return s;
}

Series Series::constant(const Element& c, int nvars, int cap)
{
    Series s(c.space(), nvars, cap);
    s.add_term({0, 0}, c);
    return s;
}

Series Series::from_coefficients(const std::vector<Element>& coeffs, int cap, int shift)
{
    Space sp = kScalarSpace;
    for (const auto& c : coeffs)
        sp = common_space(sp, c.space());
    Series s(sp, 1, cap);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        s.add_term({static_cast<int>(k) + shift, 0}, coeffs[k]);
    return s;
}

void Series::set_variable_names(std::vector<std::string> names)
{
    if (static_cast<int>(names.size()) != nvars_)
        throw TypeError("variable name count does not match");
    names_ = std::move(names);
}

Element Series::coefficient(const Exponent& e) const
{
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Element::zero(space_) : it->second;
}

void Series::adopt_space(Space s)
{
    Space target = common_space(space_, s);
    if (target == space_)
        return;
    Coefficients moved;
    for (auto& [e, c] : coeffs_)
        moved.emplace(e, c.algebra() == Algebra::scalar ? c.relabeled(target) : c);
    coeffs_ = std::move(moved);
    space_ = target;
}

void Series::add_term(const Exponent& e, const Element& c)
{
    if (nvars_ == 1 && e[1] != 0)
        throw TypeError("univariate series term with a second exponent");
    if (nvars_ == 2 && (e[0] < 0 || e[1] < 0))
        throw DomainError("bivariate series do not admit negative exponents");
    if (e[0] + e[1] > cap_ || c.is_zero())
        return;
    adopt_space(c.space());
    ground_ = join(ground_, c.ground());
    Element cc = c.algebra() == Algebra::scalar && space_.algebra != Algebra::scalar ? c.relabeled(space_) : c;
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
        coeffs_.emplace(e, std::move(cc));
        return;
    }
    it->second += cc;
    if (it->second.is_zero())
        coeffs_.erase(it);
}

int Series::valuation() const
{
    if (coeffs_.empty())
        return cap_ + 1;
    int v = cap_ + 1;
    for (const auto& [e, c] : coeffs_)
        v = std::min(v, e[0] + e[1]);
    return v;
}

Series Series::truncated(int cap) const
{
    Series r = *this;
    r.cap_ = std::min(cap, cap_);
    std::erase_if(r.coeffs_, [&](const auto& t) { return t.first[0] + t.first[1] > r.cap_; });
    return r;
}

Series& Series::operator+=(const Series& o)
{
    if (o.nvars_ != nvars_)
        throw TypeError("series variable counts differ");
    if (o.cap_ < cap_)
        *this = truncated(o.cap_);
    for (const auto& [e, c] : o.coeffs_)
        add_term(e, c);
    ground_ = join(ground_, o.ground_);
    return *this;
}

Series& Series::operator-=(const Series& o) { return *this += o * Scalar(-1); }

Series& Series::operator*=(const Scalar& c)
{
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    if (!c.is_integer())
        ground_ = Ground::rationals;
    for (auto& [e, v] : coeffs_)
        v *= c;
    return *this;
}

bool operator==(const Series& a, const Series& b)
{
    if (a.nvars_ != b.nvars_ || a.cap_ != b.cap_ || a.coeffs_.size() != b.coeffs_.size())
        return false;
    auto ib = b.coeffs_.begin();
    for (const auto& [e, c] : a.coeffs_) {
        if (e != ib->first || !(c == ib->second))
            return false;
        ++ib;
    }
    return true;
}

std::string Series::str() const
{
    if (coeffs_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        const std::string mono = monomial_str(*this, e);
        std::string term;
        if (mono.empty()) {
            term = c.str();
            if (c.size() > 1 && !first)
                term = "(" + term + ")";
        }
        else if (c.size() == 1) {
            const auto& [w, k] = *c.terms().begin();
            if (w.empty())
                term = k.is_one() ? mono : ((-k).is_one() ? "-" + mono : k.str() + "*" + mono);
            else
                term = c.str() + "*" + mono;
        }
        else {
            term = "(" + c.str() + ")*" + mono;
        }
        if (first)
            out = term;
        else if (term.front() == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------------------

Series ps_mul(const Series& f, const Series& g)
{
    if (f.nvars() != g.nvars())
        throw TypeError("ps_mul: variable counts differ");
    Series r(common_space(f.space(), g.space()), f.nvars(), std::min(f.cap(), g.cap()));
    r.set_variable_names(f.variable_names());
    for (const auto& [ea, ca] : f.coefficients())
        for (const auto& [eb, cb] : g.coefficients()) {
            const Exponent e{ea[0] + eb[0], ea[1] + eb[1]};
            if (e[0] + e[1] > r.cap())
                continue;
            r.add_term(e, ca * cb);
        }
    r.set_ground(join(r.ground(), join(f.ground(), g.ground())));
    return r;
}

Series operator*(const Series& f, const Series& g) { return ps_mul(f, g); }

Series operator*(const Element& a, const Series& f)
{
    Series r(common_space(a.space(), f.space()), f.nvars(), f.cap());
    r.set_variable_names(f.variable_names());
    for (const auto& [e, c] : f.coefficients())
        r.add_term(e, a * c);
    r.set_ground(join(r.ground(), join(a.ground(), f.ground())));
    return r;
}

Series ps_pow(const Series& f, int n)
{
    if (n < 0)
        throw DomainError("ps_pow: negative power");
    Series r = Series::constant(Element::one(f.space()), f.nvars(), f.cap());
    r.set_variable_names(f.variable_names());
    r.set_ground(f.ground());
    for (int i = 0; i < n; ++i)
        r = r * f;
    return r;
}

Series ps_invert(const Series& f)
{
    if (f.valuation() < 0)
        throw DomainError("ps_invert: Laurent inversion is not supported");
    const Element c0 = f.coefficient(Exponent{0, 0});
    if (!(c0.size() == 1 && c0.terms().begin()->first.empty()))
        throw DomainError("ps_invert: constant term is not an invertible scalar");
    const Scalar inv = c0.terms().begin()->second.inverse();
    if (f.ground() == Ground::integers && !inv.is_integer())
        throw DomainError("ps_invert: constant term is not a unit over the integers");
    // f = c0 (1 - u)  =>  f^-1 = c0^-1 sum_k u^k
    Series u = Series::constant(Element::one(f.space()), f.nvars(), f.cap()) - f * inv;
    u.set_variable_names(f.variable_names());
    Series r = Series::constant(Element::one(f.space()), f.nvars(), f.cap());
    r.set_variable_names(f.variable_names());
    Series power = r;
    for (int k = 1; k <= f.cap(); ++k) {
        power = power * u;
        if (power.is_zero())
            break;
        r += power;
    }
    r *= inv;
    r.set_ground(join(r.ground(), f.ground()));
    return r;
}

Series ps_compose(const Series& outer, const Series& inner)
{
    if (outer.nvars() != 1)
        throw TypeError("ps_compose: outer series must be univariate");
    if (outer.valuation() < 0)
        throw DomainError("ps_compose: outer series has negative exponents");
    if (inner.valuation() < 1)
        throw DomainError("ps_compose: inner series must have zero constant term");
    const int cap = std::min(outer.cap(), inner.cap());
    Series r(common_space(outer.space(), inner.space()), inner.nvars(), cap);
    r.set_variable_names(inner.variable_names());
    Series power = Series::constant(Element::one(inner.space()), inner.nvars(), cap);
    power.set_variable_names(inner.variable_names());
    int k = 0;
    for (const auto& [e, c] : outer.coefficients()) {
        if (e[0] > cap)
            break;
        while (k < e[0]) {
            power = power * inner.truncated(cap);
            ++k;
        }
        r += c * power;
    }
    r.set_ground(join(r.ground(), join(outer.ground(), inner.ground())));
    return r;
}

Series ps_revert(const Series& f)
{
    if (f.nvars() != 1)
        throw TypeError("ps_revert: univariate series required");
    if (!is_commutative(f.space().algebra))
        throw DomainError("ps_revert: coefficient algebra must be commutative");
    if (f.valuation() != 1 || !is_unit(f.coefficient(1)))
        throw DomainError("ps_revert: series must have the form T + higher order terms");
    Series g = Series::variable(f.space(), 1, f.cap());
    g.set_variable_names(f.variable_names());
    for (int n = 2; n <= f.cap(); ++n) {
        const Element err = ps_compose(f, g).coefficient(n);
        if (!err.is_zero())
            g.add_term({n, 0}, -err);
    }
    g.set_ground(join(g.ground(), f.ground()));
    return g;
}

Element ps_residue(const Series& f)
{
    if (f.nvars() != 1)
        throw TypeError("ps_residue: univariate series required");
    return f.coefficient(-1);
}

Series ps_exp(const Series& f)
{
    if (f.ground() != Ground::rationals)
        throw DomainError("ps_exp: rational scalars required");
    if (f.valuation() < 1)
        throw DomainError("ps_exp: constant term must vanish");
    Series r = Series::constant(Element::one(f.space()), f.nvars(), f.cap());
    r.set_variable_names(f.variable_names());
    Series power = r;
    for (int k = 1; k <= f.cap(); ++k) {
        power = power * f * Scalar(1, k);
        if (power.is_zero())
            break;
        r += power;
    }
    r.set_ground(Ground::rationals);
    return r;
}

Series ps_log(const Series& f)
{
    if (f.ground() != Ground::rationals)
        throw DomainError("ps_log: rational scalars required");
    if (f.valuation() < 0 || !is_unit(f.coefficient(Exponent{0, 0})))
        throw DomainError("ps_log: constant term must be 1");
    Series u = f - Series::constant(Element::one(f.space()), f.nvars(), f.cap());
    Series r(f.space(), f.nvars(), f.cap());
    r.set_variable_names(f.variable_names());
    Series power = Series::constant(Element::one(f.space()), f.nvars(), f.cap());
    for (int k = 1; k <= f.cap(); ++k) {
        power = power * u;
        if (power.is_zero())
            break;
        r += power * Scalar(k % 2 ? 1 : -1, k);
    }
    r.set_ground(Ground::rationals);
    return r;
}

Series ps_negate_variable(const Series& f)
{
    Series r(f.space(), f.nvars(), f.cap());
    r.set_variable_names(f.variable_names());
    for (const auto& [e, c] : f.coefficients())
        r.add_term(e, (e[0] + e[1]) % 2 ? -c : c);
    r.set_ground(f.ground());
    return r;
}

Series ps_shift(const Series& f, int k)
{
    if (f.nvars() != 1)
        throw TypeError("ps_shift: univariate series required");
    Series r(f.space(), 1, f.cap());
    r.set_variable_names(f.variable_names());
    for (const auto& [e, c] : f.coefficients())
        r.add_term({e[0] + k, 0}, c);
    r.set_ground(f.ground());
    return r;
}

Series ps_embed(const Series& f, int slot)
{
    if (f.nvars() != 1)
        throw TypeError("ps_embed: univariate series required");
    Series r(f.space(), 2, f.cap());
    for (const auto& [e, c] : f.coefficients())
        r.add_term(slot == 0 ? Exponent{e[0], 0} : Exponent{0, e[0]}, c);
    r.set_ground(f.ground());
    return r;
}

Series ps_set_zero(const Series& f, int slot)
{
    if (f.nvars() != 2)
        throw TypeError("ps_set_zero: bivariate series required");
    Series r(f.space(), 1, f.cap());
    r.set_variable_names({f.variable_names()[slot == 0 ? 1 : 0]});
    for (const auto& [e, c] : f.coefficients())
        if (e[static_cast<std::size_t>(slot)] == 0)
            r.add_term({e[slot == 0 ? 1 : 0], 0}, c);
    r.set_ground(f.ground());
    return r;
}

Series ps_map(const Series& f, Space target, const std::function<Element(const Element&)>& map)
{
    Series r(target, f.nvars(), f.cap());
    r.set_variable_names(f.variable_names());
    for (const auto& [e, c] : f.coefficients())
        r.add_term(e, map(c));
    r.set_ground(join(r.ground(), f.ground()));
    return r;
}

} // namespace chopf
