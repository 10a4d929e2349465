#include "chopf/scalar.hpp"

#include <cctype>
#include <ostream>

#include "chopf/errors.hpp"

namespace chopf {

namespace {

bool valid_integer(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Scalar::Scalar(long num, long den)
{
    if (den == 0)
        throw DomainError("zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Scalar::Scalar(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Scalar Scalar::parse(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!valid_integer(num) || (slash != std::string_view::npos && (!valid_integer(den) || den.front() == '-' || den.front() == '+')))
        throw DomainError("malformed rational '" + std::string(text) + "'");
    std::string n(num);
    if (n.front() == '+')
        n.erase(0, 1);
    mpz_class zn(n, 10);
    mpz_class zd = slash == std::string_view::npos ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (zd == 0)
        throw DomainError("zero denominator in '" + std::string(text) + "'");
    mpq_class q(zn, zd);
    q.canonicalize();
    return Scalar(std::move(q));
}

std::string Scalar::str() const
{
    if (is_integer())
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw DomainError("inverse of zero");
    return Scalar(mpq_class(1) / value_);
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    if (o.is_zero())
        throw DomainError("division by zero");
    value_ /= o.value_;
    return *this;
}

Scalar factorial(int n)
{
    mpz_class r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return Scalar(mpq_class(r));
}

Scalar binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return Scalar(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Scalar(mpq_class(r));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

} // namespace chopf
