#include "chopf/multipoly.hpp"

#include "chopf/errors.hpp"

namespace chopf {

MultiPoly MultiPoly::constant(int nvars, const Scalar& c)
{
    MultiPoly p(nvars);
    p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int i)
{
    MultiPoly p(nvars);
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e.at(static_cast<std::size_t>(i)) = 1;
    p.add_term(std::move(e), Scalar(1));
    return p;
}

MultiPoly MultiPoly::linear(const std::vector<int>& coeffs)
{
    const int n = static_cast<int>(coeffs.size());
    MultiPoly p(n);
    for (int i = 0; i < n; ++i) {
        Exponents e(coeffs.size(), 0);
        e[static_cast<std::size_t>(i)] = 1;
        p.add_term(std::move(e), Scalar(coeffs[static_cast<std::size_t>(i)]));
    }
    return p;
}

Scalar MultiPoly::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void MultiPoly::add_term(Exponents e, const Scalar& c)
{
    if (c.is_zero())
        return;
    if (static_cast<int>(e.size()) != nvars_)
        throw TypeError("exponent vector length does not match variable count");
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    if (o.nvars_ != nvars_)
        throw TypeError("variable count mismatch");
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += o * Scalar(-1); }

MultiPoly& MultiPoly::operator*=(const Scalar& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    if (a.nvars_ != b.nvars_)
        throw TypeError("variable count mismatch");
    MultiPoly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            MultiPoly::Exponents e = ea;
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] += eb[i];
            r.add_term(std::move(e), ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::truncated(const std::vector<int>& bounds) const
{
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        bool keep = true;
        for (std::size_t i = 0; i < e.size() && keep; ++i)
            keep = e[i] <= bounds.at(i);
        if (keep)
            r.terms_.emplace(e, c);
    }
    return r;
}

MultiPoly MultiPoly::mul_truncated(const MultiPoly& o, const std::vector<int>& bounds) const
{
    if (o.nvars_ != nvars_)
        throw TypeError("variable count mismatch");
    MultiPoly r(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e = ea;
            bool keep = true;
            for (std::size_t i = 0; i < e.size() && keep; ++i) {
                e[i] += eb[i];
                keep = e[i] <= bounds.at(i);
            }
            if (keep)
                r.add_term(std::move(e), ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::pow(int n) const
{
    MultiPoly r = constant(nvars_, Scalar(1));
    for (int i = 0; i < n; ++i)
        r = r * *this;
    return r;
}

std::string MultiPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    // highest exponents first reads more naturally
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Scalar mag = c;
        if (c.sign() < 0) {
            out += first ? "-" : " - ";
            mag = -c;
        }
        else if (!first) {
            out += " + ";
        }
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e[i] > 1)
                mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out += mag.str();
        else if (mag.is_one())
            out += mono;
        else
            out += mag.str() + "*" + mono;
        first = false;
    }
    return out;
}

} // namespace chopf
